#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parrondo/chaos.hpp"
#include "parrondo/games.hpp"

namespace parrondo {

enum class PolicyKind { AllA, AllB, Random, Periodic, Chaotic };

std::string to_string(PolicyKind kind);

// Which game gets played each round.
//   AllA / AllB   single game forever
//   Random        Game A iff u <= gamma, fresh uniform u per round
//   Periodic      pattern repeated round-robin
//   Chaotic       Game A iff the round's orbit value is <= gamma; the value
//                 compared at round k is the (k-1)th element of the driving
//                 sequence, whose first element is the initial condition
//                 itself. With normalize on, the whole driving sequence is
//                 min-max rescaled onto [0, 1] before thresholding.
struct Policy {
    PolicyKind kind = PolicyKind::AllA;
    double gamma = 0.5;
    std::vector<GameChoice> pattern;
    MapSpec map{};
    double x0 = 0.0;
    double y0 = 0.0;
    bool normalize = true;

    static Policy all_a();
    static Policy all_b();
    static Policy random(double gamma);
    static Policy periodic(std::vector<GameChoice> pattern);
    static Policy chaotic(MapSpec map, double x0, double y0, double gamma, bool normalize = true);

    bool deterministic() const { return kind != PolicyKind::Random; }
};

// Per-run cursor. For chaotic policies the driving sequence for the whole
// horizon is generated (and normalized, if configured) up front, so a
// diverged orbit fails here rather than mid-run; the sequence is shared, not
// copied, so ensemble trials can clone the prepared state cheaply.
class PolicyState {
public:
    // Throws diverged_error if a chaotic source leaves the divergence bound
    // before `horizon` values exist.
    static PolicyState prepare(const Policy& policy, std::size_t horizon,
                               double divergence_bound = kDefaultDivergenceBound);

    std::size_t step() const { return step_; }
    const std::vector<double>& driving_values() const;

private:
    friend GameChoice decide_game(const Policy& policy, PolicyState& state, double u);

    std::size_t step_ = 0;
    std::shared_ptr<const std::vector<double>> driving_;  // chaotic only
};

// One decision; advances the state by exactly one step. Deterministic
// policies ignore u.
GameChoice decide_game(const Policy& policy, PolicyState& state, double u);

// First n decisions of a deterministic policy. Throws for Random.
std::vector<GameChoice> game_sequence(const Policy& policy, std::size_t n);

struct PeriodReport {
    std::size_t period = 0;
    std::vector<GameChoice> pattern;
};

// Smallest p <= max_period with seq[i] == seq[i+p] for every i >= transient.
// Requires |seq| >= transient + 3 * max_period so the shortest candidate is
// still checked against two full repetitions.
std::optional<PeriodReport> detect_period(std::span<const GameChoice> seq,
                                          std::size_t max_period = 64,
                                          std::size_t transient = 50);

double proportion_a(std::span<const GameChoice> seq);

// "AABB" style strings, or "[j,k]" meaning j A's followed by k B's.
std::vector<GameChoice> parse_pattern(const std::string& text);
std::string pattern_to_string(std::span<const GameChoice> pattern);

}  // namespace parrondo
