#include "parrondo/switching.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace parrondo {

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::AllA: return "allA";
        case PolicyKind::AllB: return "allB";
        case PolicyKind::Random: return "random";
        case PolicyKind::Periodic: return "periodic";
        case PolicyKind::Chaotic: return "chaotic";
    }
    return "unknown";
}

Policy Policy::all_a() {
    Policy p;
    p.kind = PolicyKind::AllA;
    return p;
}

Policy Policy::all_b() {
    Policy p;
    p.kind = PolicyKind::AllB;
    return p;
}

Policy Policy::random(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0, 1]");
    Policy p;
    p.kind = PolicyKind::Random;
    p.gamma = gamma;
    return p;
}

Policy Policy::periodic(std::vector<GameChoice> pattern) {
    if (pattern.empty()) throw std::invalid_argument("periodic pattern must be nonempty");
    Policy p;
    p.kind = PolicyKind::Periodic;
    p.pattern = std::move(pattern);
    return p;
}

Policy Policy::chaotic(MapSpec map, double x0, double y0, double gamma, bool normalize) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0, 1]");
    Policy p;
    p.kind = PolicyKind::Chaotic;
    p.map = map;
    p.x0 = x0;
    p.y0 = y0;
    p.gamma = gamma;
    p.normalize = normalize;
    return p;
}

PolicyState PolicyState::prepare(const Policy& policy, std::size_t horizon,
                                 double divergence_bound) {
    PolicyState state;
    if (policy.kind != PolicyKind::Chaotic) return state;
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");

    // Driving sequence x0, x1, ..., x_{horizon-1}: the initial condition plus
    // horizon-1 iterates. The initial condition itself must pass the bound.
    if (!(std::abs(policy.x0) <= divergence_bound) || !(std::abs(policy.y0) <= divergence_bound)) {
        throw diverged_error("initial condition outside the divergence bound");
    }
    Orbit orbit;
    orbit.values.push_back(policy.x0);
    orbit.raw_min = orbit.raw_max = policy.x0;
    if (horizon > 1) {
        Orbit tail = generate_orbit(policy.map, policy.x0, policy.y0, horizon - 1, 0,
                                    divergence_bound);
        if (tail.diverged) throw diverged_error("chaotic switching source diverged");
        orbit.values.insert(orbit.values.end(), tail.values.begin(), tail.values.end());
        orbit.raw_min = std::min(orbit.raw_min, tail.raw_min);
        orbit.raw_max = std::max(orbit.raw_max, tail.raw_max);
    }
    if (policy.normalize) orbit = normalize_orbit(orbit);
    state.driving_ = std::make_shared<const std::vector<double>>(std::move(orbit.values));
    return state;
}

const std::vector<double>& PolicyState::driving_values() const {
    if (!driving_) throw std::logic_error("no driving sequence: state not prepared for a chaotic policy");
    return *driving_;
}

GameChoice decide_game(const Policy& policy, PolicyState& state, double u) {
    GameChoice choice = GameChoice::A;
    switch (policy.kind) {
        case PolicyKind::AllA:
            choice = GameChoice::A;
            break;
        case PolicyKind::AllB:
            choice = GameChoice::B;
            break;
        case PolicyKind::Random:
            choice = u <= policy.gamma ? GameChoice::A : GameChoice::B;
            break;
        case PolicyKind::Periodic:
            choice = policy.pattern[state.step_ % policy.pattern.size()];
            break;
        case PolicyKind::Chaotic: {
            const auto& values = state.driving_values();
            if (state.step_ >= values.size()) {
                throw std::out_of_range("policy state advanced past its prepared horizon");
            }
            choice = values[state.step_] <= policy.gamma ? GameChoice::A : GameChoice::B;
            break;
        }
    }
    ++state.step_;
    return choice;
}

std::vector<GameChoice> game_sequence(const Policy& policy, std::size_t n) {
    if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
    if (!policy.deterministic()) {
        throw std::invalid_argument("random policy has no deterministic game sequence");
    }
    PolicyState state = PolicyState::prepare(policy, n);
    std::vector<GameChoice> seq;
    seq.reserve(n);
    for (std::size_t i = 0; i < n; ++i) seq.push_back(decide_game(policy, state, 0.0));
    return seq;
}

std::optional<PeriodReport> detect_period(std::span<const GameChoice> seq, std::size_t max_period,
                                          std::size_t transient) {
    if (max_period < 1) throw std::invalid_argument("max period must be at least 1");
    if (seq.size() < transient + 3 * max_period) {
        throw std::invalid_argument("sequence too short for the requested period search");
    }
    for (std::size_t p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (std::size_t i = transient; i + p < seq.size(); ++i) {
            if (seq[i] != seq[i + p]) {
                periodic = false;
                break;
            }
        }
        if (periodic) {
            PeriodReport report;
            report.period = p;
            report.pattern.assign(seq.begin() + static_cast<std::ptrdiff_t>(transient),
                                  seq.begin() + static_cast<std::ptrdiff_t>(transient + p));
            return report;
        }
    }
    return std::nullopt;
}

double proportion_a(std::span<const GameChoice> seq) {
    if (seq.empty()) throw std::invalid_argument("empty game sequence");
    std::size_t count = 0;
    for (GameChoice g : seq) count += g == GameChoice::A ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(seq.size());
}

std::vector<GameChoice> parse_pattern(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("pattern must be nonempty");
    std::vector<GameChoice> pattern;
    if (text.front() == '[') {
        // "[j,k]": j A's then k B's.
        if (text.back() != ']') throw std::invalid_argument("malformed pattern: " + text);
        const std::string inner = text.substr(1, text.size() - 2);
        const auto comma = inner.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("malformed pattern: " + text);
        std::size_t pos_a = 0;
        std::size_t pos_b = 0;
        long a_count = 0;
        long b_count = 0;
        try {
            a_count = std::stol(inner.substr(0, comma), &pos_a);
            b_count = std::stol(inner.substr(comma + 1), &pos_b);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed pattern: " + text);
        }
        if (pos_a != comma || pos_b != inner.size() - comma - 1 || a_count < 0 || b_count < 0 ||
            a_count + b_count < 1) {
            throw std::invalid_argument("malformed pattern: " + text);
        }
        pattern.insert(pattern.end(), static_cast<std::size_t>(a_count), GameChoice::A);
        pattern.insert(pattern.end(), static_cast<std::size_t>(b_count), GameChoice::B);
        return pattern;
    }
    for (char c : text) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (up == 'A') {
            pattern.push_back(GameChoice::A);
        } else if (up == 'B') {
            pattern.push_back(GameChoice::B);
        } else {
            throw std::invalid_argument("malformed pattern: " + text);
        }
    }
    return pattern;
}

std::string pattern_to_string(std::span<const GameChoice> pattern) {
    std::string out;
    out.reserve(pattern.size());
    for (GameChoice g : pattern) out.push_back(game_char(g));
    return out;
}

}  // namespace parrondo
