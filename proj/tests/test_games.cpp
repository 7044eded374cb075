#include <doctest.h>

#include <cmath>

#include "parrondo/games.hpp"
#include "parrondo/rng.hpp"

using namespace parrondo;

TEST_CASE("canonical parameters") {
    const GameParams p = GameParams::canonical();
    CHECK(p.modulus == 3);
    CHECK(p.p == doctest::Approx(0.495).epsilon(1e-15));
    CHECK(p.p1 == doctest::Approx(0.095).epsilon(1e-15));
    CHECK(p.p2 == doctest::Approx(0.745).epsilon(1e-15));

    CHECK_THROWS(GameParams::canonical(0.2));   // p1 would go negative
    CHECK_THROWS(GameParams::canonical(0.005, 1));
}

TEST_CASE("euclidean residue") {
    CHECK(residue(6, 3) == 0);
    CHECK(residue(-1, 3) == 2);
    CHECK(residue(-3, 3) == 0);
    CHECK(residue(-7, 3) == 2);
    CHECK(residue(17, 3) == 2);
}

TEST_CASE("win probabilities") {
    const GameParams p = GameParams::canonical();
    CHECK(win_probability(p, GameChoice::A, 17) == doctest::Approx(0.495).epsilon(1e-15));
    CHECK(win_probability(p, GameChoice::B, 6) == doctest::Approx(0.095).epsilon(1e-15));
    CHECK(win_probability(p, GameChoice::B, -1) == doctest::Approx(0.745).epsilon(1e-15));
    CHECK(win_probability(p, GameChoice::B, 7) == doctest::Approx(0.745).epsilon(1e-15));
}

TEST_CASE("play_round steps by one, ties lose") {
    const GameParams p = GameParams::canonical();
    CHECK(play_round(p, GameChoice::A, 0, 0.494) == 1);
    CHECK(play_round(p, GameChoice::A, 0, 0.495) == -1);
    CHECK(play_round(p, GameChoice::B, 0, 0.5) == -1);

    Xoshiro256pp rng(99);
    long long capital = 0;
    for (int i = 0; i < 2000; ++i) {
        const GameChoice game = (rng.next_u64() & 1) ? GameChoice::A : GameChoice::B;
        const long long next = play_round(p, game, capital, rng.next_double());
        CHECK(std::llabs(next - capital) == 1);
        capital = next;
    }
}

TEST_CASE("empirical win frequency matches the coin") {
    const GameParams p = GameParams::canonical();
    constexpr int kDraws = 1'000'000;
    Xoshiro256pp rng(2024);
    int wins = 0;
    for (int i = 0; i < kDraws; ++i) {
        if (play_round(p, GameChoice::A, 0, rng.next_double()) == 1) ++wins;
    }
    const double freq = static_cast<double>(wins) / kDraws;
    const double tol = 3.0 * std::sqrt(p.p * (1.0 - p.p) / kDraws);
    CHECK(std::abs(freq - p.p) <= tol);
}
