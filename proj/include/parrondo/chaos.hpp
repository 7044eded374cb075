#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace parrondo {

// Thrown when an operation needs a bounded orbit but the map blew past the
// divergence bound.
class diverged_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MapKind { Logistic, Tent, Sinusoidal, Gaussian, Henon, Lozi };

bool is_two_dimensional(MapKind kind);
std::string to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& name);  // lowercase names

// Iterated map with its coefficients.
//   Logistic    x' = a x (1 - x)
//   Tent        x' = a x            if x <= 1/2, else a (1 - x)
//   Sinusoidal  x' = a x^2 sin(pi x)
//   Gaussian    x' = 1/x mod 1      (0 at x = 0); a, b unused
//   Henon       x' = y + 1 - a x^2,  y' = b x
//   Lozi        x' = y + 1 - a |x|,  y' = b x
// Henon and Lozi with b = 0 reduce to their one-dimensional forms
// x' = 1 - a x^2 and x' = 1 - a |x| (y is dropped entirely).
struct MapSpec {
    MapKind kind = MapKind::Logistic;
    double a = 0.0;
    double b = 0.0;  // Henon/Lozi only; 0 for the 1-D kinds
};

struct MapState {
    double x = 0.0;
    double y = 0.0;  // meaningful for Henon/Lozi only
};

struct Orbit {
    std::vector<double> values;  // x components
    bool diverged = false;
    double raw_min = 0.0;
    double raw_max = 0.0;
};

constexpr double kDefaultDivergenceBound = 1e6;

MapState map_step(const MapSpec& spec, const MapState& state);

// Iterates transient+n times from (x0, y0) and records the x component of the
// last n states, i.e. values[0] is the state after transient+1 steps and x0
// itself is not recorded. Stops early with diverged=true if |x| or |y| ever
// exceeds the bound; divergence is data, not an error.
Orbit generate_orbit(const MapSpec& spec, double x0, double y0, std::size_t n,
                     std::size_t transient = 0, double divergence_bound = kDefaultDivergenceBound);

// Min-max rescale onto [0, 1]. An orbit whose realized span is below 1e-12
// maps to the constant 0.5 so that the threshold alone picks the game.
// Throws diverged_error for diverged input.
Orbit normalize_orbit(const Orbit& orbit);

struct BifurcationPoint {
    double a;
    double x;
};

// Post-transient samples per coefficient value; diverged coefficients
// contribute only the samples collected before the bound tripped.
std::vector<BifurcationPoint> bifurcation_scan(MapKind kind, double a_lo, double a_hi,
                                               double a_step, double x0, std::size_t samples,
                                               std::size_t transient = 500,
                                               double divergence_bound = kDefaultDivergenceBound);

// Equal-width bins over [0, 1]; out-of-range values land in the edge bins.
std::vector<std::uint64_t> histogram(const Orbit& orbit, std::size_t bins);

struct PhasePair {
    double x;
    double x_next;
};

std::vector<PhasePair> phase_pairs(const Orbit& orbit);

}  // namespace parrondo
