#include "parrondo/sweeps.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace parrondo {

Axis Axis::from_range(std::string name, double lo, double hi, double step) {
    if (lo > hi) throw std::invalid_argument("axis range is empty");
    if (!(step > 0.0)) throw std::invalid_argument("axis step must be positive");
    Axis axis;
    axis.name = std::move(name);
    const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
    axis.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) axis.values.push_back(lo + static_cast<double>(i) * step);
    return axis;
}

namespace {

// Every cell gets its own seed derived from the base seed and the cell's flat
// index, so results do not depend on evaluation order.
double cell_gain(const GameParams& params, const Policy& policy, std::size_t n_games,
                 std::size_t trials, std::uint64_t base_seed, std::size_t cell_index,
                 unsigned threads) {
    try {
        const SeedSpec cell_seed{derive_seed(base_seed, cell_index)};
        return run_ensemble(params, policy, n_games, trials, cell_seed, threads)
            .mean_capital[n_games];
    } catch (const diverged_error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

GridResult sweep_gamma_x0(const MapSpec& map, const Axis& gamma_axis, const Axis& x0_axis,
                          std::size_t n_games, std::size_t trials, SeedSpec seed,
                          unsigned threads, bool normalize, double y0) {
    if (gamma_axis.values.empty() || x0_axis.values.empty()) {
        throw std::invalid_argument("sweep axes must be nonempty");
    }
    GridResult grid;
    grid.axis1 = gamma_axis;
    grid.axis2 = x0_axis;
    grid.params = GameParams::canonical();
    grid.n_games = n_games;
    grid.trials = trials;
    grid.seed = seed.base_seed;
    grid.cells.resize(gamma_axis.size() * x0_axis.size());
    for (std::size_t i = 0; i < gamma_axis.size(); ++i) {
        for (std::size_t j = 0; j < x0_axis.size(); ++j) {
            const std::size_t index = i * x0_axis.size() + j;
            const Policy policy =
                Policy::chaotic(map, x0_axis.values[j], y0, gamma_axis.values[i], normalize);
            grid.cells[index] =
                cell_gain(grid.params, policy, n_games, trials, seed.base_seed, index, threads);
        }
    }
    return grid;
}

GridResult sweep_ab(MapKind kind, const Axis& a_axis, const Axis& b_axis, double gamma,
                    double x0, double y0, std::size_t n_games, std::size_t trials, SeedSpec seed,
                    unsigned threads, bool normalize) {
    if (a_axis.values.empty() || b_axis.values.empty()) {
        throw std::invalid_argument("sweep axes must be nonempty");
    }
    GridResult grid;
    grid.axis1 = a_axis;
    grid.axis2 = b_axis;
    grid.params = GameParams::canonical();
    grid.n_games = n_games;
    grid.trials = trials;
    grid.seed = seed.base_seed;
    grid.cells.resize(a_axis.size() * b_axis.size());
    for (std::size_t i = 0; i < a_axis.size(); ++i) {
        for (std::size_t j = 0; j < b_axis.size(); ++j) {
            const std::size_t index = i * b_axis.size() + j;
            const MapSpec map{kind, a_axis.values[i], b_axis.values[j]};
            const Policy policy = Policy::chaotic(map, x0, y0, gamma, normalize);
            grid.cells[index] =
                cell_gain(grid.params, policy, n_games, trials, seed.base_seed, index, threads);
        }
    }
    return grid;
}

std::vector<ProportionRow> proportion_curve(const std::vector<std::pair<std::string, Policy>>& policies,
                                            const Axis& gamma_axis, std::size_t n_games,
                                            std::size_t trials, SeedSpec seed, unsigned threads) {
    for (double g : gamma_axis.values) {
        if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("gamma axis must lie in [0, 1]");
    }
    const GameParams params = GameParams::canonical();
    std::vector<ProportionRow> rows;
    rows.reserve(policies.size() * gamma_axis.size());
    std::size_t stream = 0;
    for (const auto& [label, base_policy] : policies) {
        for (double gamma : gamma_axis.values) {
            Policy policy = base_policy;
            policy.gamma = gamma;
            ProportionRow row;
            row.label = label;
            row.gamma = gamma;
            try {
                const SeedSpec cell_seed{derive_seed(seed.base_seed, stream)};
                row.proportion_a =
                    run_ensemble(params, policy, n_games, trials, cell_seed, threads).proportion_a;
            } catch (const diverged_error&) {
                row.proportion_a = std::numeric_limits<double>::quiet_NaN();
            }
            rows.push_back(std::move(row));
            ++stream;
        }
    }
    return rows;
}

std::vector<LabeledStats> compare_policies(const std::vector<std::pair<std::string, Policy>>& configs,
                                           std::size_t n_games, std::size_t trials, SeedSpec seed,
                                           unsigned threads) {
    std::vector<LabeledStats> results;
    results.reserve(configs.size());
    for (const auto& [label, policy] : configs) {
        results.push_back({label, run_ensemble(GameParams::canonical(), policy, n_games, trials,
                                               seed, threads)});
    }
    return results;
}

}  // namespace parrondo
