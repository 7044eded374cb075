#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parrondo/engine.hpp"

namespace parrondo {

// Grid axis: an explicit list of values, usually built from lo/hi/step.
struct Axis {
    std::string name;
    std::vector<double> values;

    static Axis from_range(std::string name, double lo, double hi, double step);
    std::size_t size() const { return values.size(); }
};

// Final mean capital per grid cell; diverged switching sources leave NaN.
struct GridResult {
    Axis axis1;  // slow index
    Axis axis2;  // fast index
    std::vector<double> cells;  // size axis1.size() * axis2.size()
    GameParams params;
    std::size_t n_games = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    double cell(std::size_t i, std::size_t j) const { return cells[i * axis2.size() + j]; }
};

// Gain after n_games against (gamma, x0) for one chaotic generator.
GridResult sweep_gamma_x0(const MapSpec& map, const Axis& gamma_axis, const Axis& x0_axis,
                          std::size_t n_games, std::size_t trials, SeedSpec seed,
                          unsigned threads = 0, bool normalize = true, double y0 = 0.0);

// Gain after n_games against the (a, b) coefficients of Henon or Lozi.
GridResult sweep_ab(MapKind kind, const Axis& a_axis, const Axis& b_axis, double gamma,
                    double x0, double y0, std::size_t n_games, std::size_t trials, SeedSpec seed,
                    unsigned threads = 0, bool normalize = true);

struct ProportionRow {
    std::string label;
    double gamma = 0.0;
    double proportion_a = 0.0;
};

// Measured proportion of Game A per policy per gamma value. The gamma of each
// policy is overridden by the axis point.
std::vector<ProportionRow> proportion_curve(const std::vector<std::pair<std::string, Policy>>& policies,
                                            const Axis& gamma_axis, std::size_t n_games,
                                            std::size_t trials, SeedSpec seed,
                                            unsigned threads = 0);

struct LabeledStats {
    std::string label;
    EnsembleStats stats;
};

// One ensemble per labeled policy, every policy on the same seed so the
// comparison uses common random numbers.
std::vector<LabeledStats> compare_policies(const std::vector<std::pair<std::string, Policy>>& configs,
                                           std::size_t n_games, std::size_t trials, SeedSpec seed,
                                           unsigned threads = 0);

}  // namespace parrondo
