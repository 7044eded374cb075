#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parrondo/games.hpp"
#include "parrondo/rng.hpp"
#include "parrondo/switching.hpp"

namespace parrondo {

struct SeedSpec {
    std::uint64_t base_seed = 1;
};

struct EnsembleStats {
    std::size_t n_games = 0;
    std::size_t trials = 0;
    std::vector<double> mean_capital;  // length n_games + 1, index 0 is the start
    std::vector<double> std_err;       // sample sd / sqrt(trials), per step
    double proportion_a = 0.0;         // fraction of rounds playing Game A, all trials
    double rate_estimate = 0.0;        // mean_capital[n_games] / n_games
};

// One capital trajectory from a prepared policy state. Draw order per round
// is fixed: for Random policies a switch draw first, then the coin draw;
// deterministic policies consume only the coin draw.
template <class Draws>
std::vector<long long> run_trial(const GameParams& params, const Policy& policy,
                                 PolicyState state, std::size_t n_games, Draws&& draw) {
    std::vector<long long> trajectory;
    trajectory.reserve(n_games + 1);
    long long capital = 0;
    trajectory.push_back(capital);
    for (std::size_t round = 0; round < n_games; ++round) {
        const double u_switch = policy.kind == PolicyKind::Random ? draw() : 0.0;
        const GameChoice game = decide_game(policy, state, u_switch);
        capital = play_round(params, game, capital, draw());
        trajectory.push_back(capital);
    }
    return trajectory;
}

std::vector<long long> run_trial(const GameParams& params, const Policy& policy,
                                 std::size_t n_games, Xoshiro256pp& rng);

// Averages run_trial over `trials` independent substreams of the base seed.
// Trial i always uses substream i, and aggregation is integer-exact, so the
// result is bit-identical for any thread count. threads = 0 picks the
// hardware concurrency.
EnsembleStats run_ensemble(const GameParams& params, const Policy& policy, std::size_t n_games,
                           std::size_t trials, SeedSpec seed, unsigned threads = 0);

}  // namespace parrondo
