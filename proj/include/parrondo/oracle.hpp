#pragma once

#include <span>
#include <vector>

#include "parrondo/games.hpp"

namespace parrondo {

// Win probability for every residue class of the capital. The capital mod M
// is a sufficient statistic for the per-round win probability, so the full
// (infinite) capital chain collapses to an M-state chain for exact analysis.
struct StepModel {
    std::vector<double> win_prob;  // indexed by residue, size M
};

struct ResidueDistribution {
    std::vector<double> probs;  // nonnegative, sums to 1
};

struct RateReport {
    double rate = 0.0;  // expected capital change per round, in [-1, 1]
    ResidueDistribution stationary;
};

StepModel step_model(const GameParams& params, GameChoice game);

// Random mixing: Game A with probability gamma, Game B otherwise.
StepModel step_model(const GameParams& params, double gamma);

// Row-stochastic M x M matrix: from residue j, go to (j+1) mod M with the
// model's win probability, to (j-1) mod M otherwise.
std::vector<std::vector<double>> transition_matrix(const StepModel& model);

// Solves pi P = pi, sum(pi) = 1 by direct elimination. Throws on a singular
// (reducible) chain.
ResidueDistribution stationary_distribution(const std::vector<std::vector<double>>& matrix);

// Long-run rate of winning: sum_j pi_j (2 w_j - 1).
RateReport exact_rate(const StepModel& model);

// Expected capital after each round of a fixed game sequence, starting from
// capital 0 (residue distribution concentrated at 0). Length |games|+1.
std::vector<double> exact_expected_trajectory(const GameParams& params,
                                              std::span<const GameChoice> games);

// Same evolution for random mixing with a fixed gamma every round.
std::vector<double> exact_mixed_trajectory(const GameParams& params, double gamma,
                                           std::size_t n_games);

// Exact expectation by enumerating all 2^n win/lose paths. Independent of the
// chain evolution above; capped at n = 20.
double brute_force_expected(const GameParams& params, std::span<const GameChoice> games);

}  // namespace parrondo
