#include "parrondo/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace parrondo {

bool is_two_dimensional(MapKind kind) {
    return kind == MapKind::Henon || kind == MapKind::Lozi;
}

std::string to_string(MapKind kind) {
    switch (kind) {
        case MapKind::Logistic: return "logistic";
        case MapKind::Tent: return "tent";
        case MapKind::Sinusoidal: return "sinusoidal";
        case MapKind::Gaussian: return "gaussian";
        case MapKind::Henon: return "henon";
        case MapKind::Lozi: return "lozi";
    }
    return "unknown";
}

MapKind map_kind_from_string(const std::string& name) {
    if (name == "logistic") return MapKind::Logistic;
    if (name == "tent") return MapKind::Tent;
    if (name == "sinusoidal") return MapKind::Sinusoidal;
    if (name == "gaussian") return MapKind::Gaussian;
    if (name == "henon") return MapKind::Henon;
    if (name == "lozi") return MapKind::Lozi;
    throw std::invalid_argument("unknown map kind: " + name);
}

MapState map_step(const MapSpec& spec, const MapState& state) {
    const double x = state.x;
    switch (spec.kind) {
        case MapKind::Logistic:
            return {spec.a * x * (1.0 - x), 0.0};
        case MapKind::Tent:
            return {x <= 0.5 ? spec.a * x : spec.a * (1.0 - x), 0.0};
        case MapKind::Sinusoidal:
            return {spec.a * x * x * std::sin(M_PI * x), 0.0};
        case MapKind::Gaussian: {
            if (x == 0.0) return {0.0, 0.0};
            const double inv = 1.0 / x;
            return {inv - std::floor(inv), 0.0};
        }
        case MapKind::Henon:
            if (spec.b == 0.0) return {1.0 - spec.a * x * x, 0.0};
            return {state.y + 1.0 - spec.a * x * x, spec.b * x};
        case MapKind::Lozi:
            if (spec.b == 0.0) return {1.0 - spec.a * std::abs(x), 0.0};
            return {state.y + 1.0 - spec.a * std::abs(x), spec.b * x};
    }
    throw std::invalid_argument("unknown map kind");
}

namespace {

bool out_of_bounds(const MapState& s, double bound) {
    return !(std::abs(s.x) <= bound) || !(std::abs(s.y) <= bound);  // catches NaN too
}

}  // namespace

Orbit generate_orbit(const MapSpec& spec, double x0, double y0, std::size_t n,
                     std::size_t transient, double divergence_bound) {
    if (n < 1) throw std::invalid_argument("orbit length must be at least 1");
    if (!(divergence_bound > 0.0)) throw std::invalid_argument("divergence bound must be positive");

    Orbit orbit;
    orbit.values.reserve(n);
    orbit.raw_min = std::numeric_limits<double>::infinity();
    orbit.raw_max = -std::numeric_limits<double>::infinity();

    MapState state{x0, y0};
    for (std::size_t i = 0; i < transient + n; ++i) {
        state = map_step(spec, state);
        if (out_of_bounds(state, divergence_bound)) {
            orbit.diverged = true;
            break;
        }
        if (i >= transient) {
            orbit.values.push_back(state.x);
            orbit.raw_min = std::min(orbit.raw_min, state.x);
            orbit.raw_max = std::max(orbit.raw_max, state.x);
        }
    }
    if (orbit.values.empty()) {
        orbit.raw_min = orbit.raw_max = std::numeric_limits<double>::quiet_NaN();
    }
    return orbit;
}

Orbit normalize_orbit(const Orbit& orbit) {
    if (orbit.diverged) throw diverged_error("cannot normalize a diverged orbit");
    Orbit out;
    out.values.reserve(orbit.values.size());
    const double span = orbit.raw_max - orbit.raw_min;
    if (!(span >= 1e-12)) {
        out.values.assign(orbit.values.size(), 0.5);
        out.raw_min = out.raw_max = 0.5;
        return out;
    }
    for (double v : orbit.values) out.values.push_back((v - orbit.raw_min) / span);
    out.raw_min = 0.0;
    out.raw_max = 1.0;
    return out;
}

std::vector<BifurcationPoint> bifurcation_scan(MapKind kind, double a_lo, double a_hi,
                                               double a_step, double x0, std::size_t samples,
                                               std::size_t transient, double divergence_bound) {
    if (a_lo > a_hi) throw std::invalid_argument("coefficient range is empty");
    if (!(a_step > 0.0)) throw std::invalid_argument("coefficient step must be positive");
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");

    const auto count = static_cast<std::size_t>(std::llround((a_hi - a_lo) / a_step)) + 1;
    std::vector<BifurcationPoint> rows;
    rows.reserve(count * samples);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = a_lo + static_cast<double>(i) * a_step;
        const Orbit orbit =
            generate_orbit({kind, a, 0.0}, x0, 0.0, samples, transient, divergence_bound);
        for (double x : orbit.values) rows.push_back({a, x});
    }
    return rows;
}

std::vector<std::uint64_t> histogram(const Orbit& orbit, std::size_t bins) {
    if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
    std::vector<std::uint64_t> counts(bins, 0);
    for (double v : orbit.values) {
        auto idx = static_cast<long long>(std::floor(v * static_cast<double>(bins)));
        idx = std::clamp<long long>(idx, 0, static_cast<long long>(bins) - 1);
        ++counts[static_cast<std::size_t>(idx)];
    }
    return counts;
}

std::vector<PhasePair> phase_pairs(const Orbit& orbit) {
    if (orbit.values.size() < 2) throw std::invalid_argument("phase plot needs at least 2 samples");
    std::vector<PhasePair> pairs;
    pairs.reserve(orbit.values.size() - 1);
    for (std::size_t i = 0; i + 1 < orbit.values.size(); ++i) {
        pairs.push_back({orbit.values[i], orbit.values[i + 1]});
    }
    return pairs;
}

}  // namespace parrondo
