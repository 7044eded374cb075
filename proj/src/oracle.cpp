#include "parrondo/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace parrondo {

namespace {

void check_model(const StepModel& model) {
    if (model.win_prob.size() < 2) throw std::invalid_argument("step model needs modulus >= 2");
    for (double w : model.win_prob) {
        if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("win probability outside [0, 1]");
    }
}

// pi <- pi P for the birth/death-on-a-ring chain, without materializing P.
void advance(std::vector<double>& pi, const std::vector<double>& w) {
    const std::size_t m = pi.size();
    std::vector<double> next(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        next[(j + 1) % m] += pi[j] * w[j];
        next[(j + m - 1) % m] += pi[j] * (1.0 - w[j]);
    }
    pi.swap(next);
}

double expected_gain(const std::vector<double>& pi, const std::vector<double>& w) {
    double gain = 0.0;
    for (std::size_t j = 0; j < pi.size(); ++j) gain += pi[j] * (2.0 * w[j] - 1.0);
    return gain;
}

}  // namespace

StepModel step_model(const GameParams& params, GameChoice game) {
    StepModel model;
    model.win_prob.assign(static_cast<std::size_t>(params.modulus),
                          game == GameChoice::A ? params.p : params.p2);
    if (game == GameChoice::B) model.win_prob[0] = params.p1;
    return model;
}

StepModel step_model(const GameParams& params, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0, 1]");
    StepModel a = step_model(params, GameChoice::A);
    StepModel b = step_model(params, GameChoice::B);
    StepModel model;
    model.win_prob.resize(a.win_prob.size());
    for (std::size_t j = 0; j < a.win_prob.size(); ++j) {
        model.win_prob[j] = gamma * a.win_prob[j] + (1.0 - gamma) * b.win_prob[j];
    }
    return model;
}

std::vector<std::vector<double>> transition_matrix(const StepModel& model) {
    check_model(model);
    const std::size_t m = model.win_prob.size();
    std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
        matrix[j][(j + 1) % m] += model.win_prob[j];
        matrix[j][(j + m - 1) % m] += 1.0 - model.win_prob[j];
    }
    return matrix;
}

ResidueDistribution stationary_distribution(const std::vector<std::vector<double>>& matrix) {
    const std::size_t m = matrix.size();
    if (m < 2) throw std::invalid_argument("transition matrix needs at least 2 states");
    for (const auto& row : matrix) {
        if (row.size() != m) throw std::invalid_argument("transition matrix must be square");
    }

    // (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
    // Gaussian elimination with partial pivoting; M is tiny so a dense solve
    // is exact to machine precision.
    std::vector<std::vector<double>> aug(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = matrix[j][i] - (i == j ? 1.0 : 0.0);
    }
    for (std::size_t j = 0; j < m; ++j) aug[m - 1][j] = 1.0;
    aug[m - 1][m] = 1.0;

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
        }
        if (std::abs(aug[pivot][col]) < 1e-14) {
            throw std::runtime_error("singular or reducible chain: no unique stationary distribution");
        }
        std::swap(aug[col], aug[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double factor = aug[r][col] / aug[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c <= m; ++c) aug[r][c] -= factor * aug[col][c];
        }
    }

    ResidueDistribution dist;
    dist.probs.resize(m);
    for (std::size_t j = 0; j < m; ++j) dist.probs[j] = aug[j][m] / aug[j][j];
    return dist;
}

RateReport exact_rate(const StepModel& model) {
    check_model(model);
    RateReport report;
    report.stationary = stationary_distribution(transition_matrix(model));
    report.rate = expected_gain(report.stationary.probs, model.win_prob);
    return report;
}

std::vector<double> exact_expected_trajectory(const GameParams& params,
                                              std::span<const GameChoice> games) {
    if (games.empty()) throw std::invalid_argument("game sequence must be nonempty");
    const StepModel model_a = step_model(params, GameChoice::A);
    const StepModel model_b = step_model(params, GameChoice::B);

    std::vector<double> pi(static_cast<std::size_t>(params.modulus), 0.0);
    pi[0] = 1.0;
    std::vector<double> trajectory;
    trajectory.reserve(games.size() + 1);
    trajectory.push_back(0.0);
    double capital = 0.0;
    for (GameChoice game : games) {
        const auto& w = (game == GameChoice::A ? model_a : model_b).win_prob;
        capital += expected_gain(pi, w);
        advance(pi, w);
        trajectory.push_back(capital);
    }
    return trajectory;
}

std::vector<double> exact_mixed_trajectory(const GameParams& params, double gamma,
                                           std::size_t n_games) {
    if (n_games < 1) throw std::invalid_argument("need at least one game");
    const StepModel model = step_model(params, gamma);

    std::vector<double> pi(static_cast<std::size_t>(params.modulus), 0.0);
    pi[0] = 1.0;
    std::vector<double> trajectory;
    trajectory.reserve(n_games + 1);
    trajectory.push_back(0.0);
    double capital = 0.0;
    for (std::size_t i = 0; i < n_games; ++i) {
        capital += expected_gain(pi, model.win_prob);
        advance(pi, model.win_prob);
        trajectory.push_back(capital);
    }
    return trajectory;
}

double brute_force_expected(const GameParams& params, std::span<const GameChoice> games) {
    if (games.empty()) throw std::invalid_argument("game sequence must be nonempty");
    if (games.size() > 20) throw std::invalid_argument("brute force is capped at 20 games");

    const std::size_t n = games.size();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        long long capital = 0;
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = win_probability(params, games[i], capital);
            if ((mask >> i) & 1u) {
                prob *= w;
                ++capital;
            } else {
                prob *= 1.0 - w;
                --capital;
            }
        }
        total += prob * static_cast<double>(capital);
    }
    return total;
}

}  // namespace parrondo
