#pragma once

#include <cstdint>

namespace parrondo {

enum class GameChoice : std::uint8_t { A, B };

inline char game_char(GameChoice g) { return g == GameChoice::A ? 'A' : 'B'; }

// Coin probabilities of the two games. Game A is a single biased coin with
// win probability p. Game B picks its coin from the current capital: p1 when
// the capital is divisible by `modulus`, p2 otherwise.
struct GameParams {
    int modulus = 3;
    double epsilon = 0.005;
    double p = 0.495;
    double p1 = 0.095;
    double p2 = 0.745;

    // p = 1/2 - eps, p1 = 1/10 - eps, p2 = 3/4 - eps.
    static GameParams canonical(double epsilon = 0.005, int modulus = 3);
};

// Euclidean remainder, always in [0, modulus). Capital goes negative from the
// very first lost round, so the sign convention matters.
int residue(long long capital, int modulus);

double win_probability(const GameParams& params, GameChoice game, long long capital);

// One round: +1 on u < win probability, -1 otherwise (ties lose).
long long play_round(const GameParams& params, GameChoice game, long long capital, double u);

}  // namespace parrondo
