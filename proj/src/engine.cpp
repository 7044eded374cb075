#include "parrondo/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace parrondo {

std::vector<long long> run_trial(const GameParams& params, const Policy& policy,
                                 std::size_t n_games, Xoshiro256pp& rng) {
    if (n_games < 1) throw std::invalid_argument("need at least one game");
    PolicyState state = PolicyState::prepare(policy, n_games);
    return run_trial(params, policy, std::move(state), n_games,
                     [&rng] { return rng.next_double(); });
}

namespace {

struct Accumulator {
    std::vector<std::int64_t> capital_sum;     // per step
    std::vector<std::int64_t> capital_sq_sum;  // per step
    std::int64_t a_count = 0;

    explicit Accumulator(std::size_t n_steps)
        : capital_sum(n_steps, 0), capital_sq_sum(n_steps, 0) {}

    void merge(const Accumulator& other) {
        for (std::size_t k = 0; k < capital_sum.size(); ++k) {
            capital_sum[k] += other.capital_sum[k];
            capital_sq_sum[k] += other.capital_sq_sum[k];
        }
        a_count += other.a_count;
    }
};

void run_block(const GameParams& params, const Policy& policy, const PolicyState& prototype,
               std::size_t n_games, std::uint64_t base_seed, std::size_t first_trial,
               std::size_t last_trial, Accumulator& acc) {
    const bool random_policy = policy.kind == PolicyKind::Random;
    for (std::size_t trial = first_trial; trial < last_trial; ++trial) {
        Xoshiro256pp rng = substream(base_seed, trial);
        PolicyState state = prototype;  // shares the prepared driving sequence
        long long capital = 0;
        for (std::size_t round = 0; round < n_games; ++round) {
            const double u_switch = random_policy ? rng.next_double() : 0.0;
            const GameChoice game = decide_game(policy, state, u_switch);
            if (game == GameChoice::A) ++acc.a_count;
            capital = play_round(params, game, capital, rng.next_double());
            acc.capital_sum[round + 1] += capital;
            acc.capital_sq_sum[round + 1] += capital * capital;
        }
    }
}

}  // namespace

EnsembleStats run_ensemble(const GameParams& params, const Policy& policy, std::size_t n_games,
                           std::size_t trials, SeedSpec seed, unsigned threads) {
    if (n_games < 1) throw std::invalid_argument("need at least one game");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    // Fails here, before any trial, if the switching source diverges.
    const PolicyState prototype = PolicyState::prepare(policy, n_games);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, trials));

    const std::size_t n_steps = n_games + 1;
    std::vector<Accumulator> partials(threads, Accumulator(n_steps));
    if (threads == 1) {
        run_block(params, policy, prototype, n_games, seed.base_seed, 0, trials, partials[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        const std::size_t chunk = (trials + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t first = static_cast<std::size_t>(t) * chunk;
            const std::size_t last = std::min(first + chunk, trials);
            workers.emplace_back([&, t, first, last] {
                run_block(params, policy, prototype, n_games, seed.base_seed, first, last,
                          partials[t]);
            });
        }
        for (auto& w : workers) w.join();
    }

    Accumulator total(n_steps);
    for (const auto& partial : partials) total.merge(partial);

    EnsembleStats stats;
    stats.n_games = n_games;
    stats.trials = trials;
    stats.mean_capital.resize(n_steps);
    stats.std_err.resize(n_steps);
    const auto t = static_cast<double>(trials);
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double sum = static_cast<double>(total.capital_sum[k]);
        const double sq_sum = static_cast<double>(total.capital_sq_sum[k]);
        stats.mean_capital[k] = sum / t;
        if (trials > 1) {
            const double variance = std::max(0.0, (sq_sum - sum * sum / t) / (t - 1.0));
            stats.std_err[k] = std::sqrt(variance / t);
        } else {
            stats.std_err[k] = 0.0;
        }
    }
    stats.proportion_a =
        static_cast<double>(total.a_count) / (t * static_cast<double>(n_games));
    stats.rate_estimate = stats.mean_capital[n_games] / static_cast<double>(n_games);
    return stats;
}

}  // namespace parrondo
