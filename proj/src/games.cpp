#include "parrondo/games.hpp"

#include <stdexcept>

namespace parrondo {

GameParams GameParams::canonical(double epsilon, int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    GameParams params;
    params.modulus = modulus;
    params.epsilon = epsilon;
    params.p = 0.5 - epsilon;
    params.p1 = 0.1 - epsilon;
    params.p2 = 0.75 - epsilon;
    if (params.p < 0.0 || params.p > 1.0 || params.p1 < 0.0 || params.p1 > 1.0 ||
        params.p2 < 0.0 || params.p2 > 1.0) {
        throw std::invalid_argument("epsilon puts a coin probability outside [0, 1]");
    }
    return params;
}

int residue(long long capital, int modulus) {
    long long r = capital % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

double win_probability(const GameParams& params, GameChoice game, long long capital) {
    if (game == GameChoice::A) return params.p;
    return residue(capital, params.modulus) == 0 ? params.p1 : params.p2;
}

long long play_round(const GameParams& params, GameChoice game, long long capital, double u) {
    return capital + (u < win_probability(params, game, capital) ? 1 : -1);
}

}  // namespace parrondo
