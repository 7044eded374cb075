#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "parrondo/chaos.hpp"

using namespace parrondo;

TEST_CASE("map_step single evaluations") {
    CHECK(map_step({MapKind::Logistic, 4.0, 0.0}, {0.1, 0.0}).x ==
          doctest::Approx(0.36).epsilon(1e-15));
    CHECK(map_step({MapKind::Logistic, 4.0, 0.0}, {0.75, 0.0}).x == 0.75);  // fixed point
    CHECK(map_step({MapKind::Gaussian, 0.0, 0.0}, {0.4, 0.0}).x ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(map_step({MapKind::Gaussian, 0.0, 0.0}, {0.0, 0.0}).x == 0.0);

    SUBCASE("tent branches") {
        CHECK(map_step({MapKind::Tent, 1.9, 0.0}, {0.5, 0.0}).x == doctest::Approx(0.95));
        CHECK(map_step({MapKind::Tent, 1.9, 0.0}, {0.8, 0.0}).x ==
              doctest::Approx(1.9 * 0.2).epsilon(1e-15));
    }

    SUBCASE("henon/lozi at b=0 collapse to one dimension") {
        for (double y : {0.0, 2.0, -5.0}) {
            const MapState h = map_step({MapKind::Henon, 1.7, 0.0}, {0.0, y});
            CHECK(h.x == 1.0);
            CHECK(h.y == 0.0);
            const MapState l = map_step({MapKind::Lozi, 1.7, 0.0}, {-0.5, y});
            CHECK(l.x == doctest::Approx(1.0 - 1.7 * 0.5).epsilon(1e-15));
            CHECK(l.y == 0.0);
        }
    }

    SUBCASE("henon/lozi full two-dimensional form") {
        const MapState h = map_step({MapKind::Henon, 1.4, 0.3}, {1.0, 0.5});
        CHECK(h.x == doctest::Approx(0.5 + 1.0 - 1.4).epsilon(1e-15));
        CHECK(h.y == doctest::Approx(0.3).epsilon(1e-15));
        const MapState l = map_step({MapKind::Lozi, 1.7, 0.5}, {-1.0, 0.25});
        CHECK(l.x == doctest::Approx(0.25 + 1.0 - 1.7).epsilon(1e-15));
        CHECK(l.y == doctest::Approx(-0.5).epsilon(1e-15));
    }
}

TEST_CASE("generate_orbit records post-initial values") {
    SUBCASE("zero is a fixed point") {
        const Orbit orbit = generate_orbit({MapKind::Logistic, 4.0, 0.0}, 0.0, 0.0, 5);
        REQUIRE(orbit.values.size() == 5);
        CHECK_FALSE(orbit.diverged);
        for (double v : orbit.values) CHECK(v == 0.0);
    }
    SUBCASE("x0=0.5 maps to 1 then sticks at 0") {
        const Orbit orbit = generate_orbit({MapKind::Logistic, 4.0, 0.0}, 0.5, 0.0, 3);
        REQUIRE(orbit.values.size() == 3);
        CHECK(orbit.values[0] == 1.0);
        CHECK(orbit.values[1] == 0.0);
        CHECK(orbit.values[2] == 0.0);
    }
    SUBCASE("divergence guard") {
        const Orbit orbit = generate_orbit({MapKind::Henon, 4.0, 4.0}, 0.0, 0.0, 100);
        CHECK(orbit.diverged);
        CHECK(orbit.values.size() < 100);
    }
    SUBCASE("transient discards the approach") {
        const Orbit full = generate_orbit({MapKind::Logistic, 3.2, 0.0}, 0.1, 0.0, 14);
        const Orbit tail = generate_orbit({MapKind::Logistic, 3.2, 0.0}, 0.1, 0.0, 4, 10);
        REQUIRE(tail.values.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) CHECK(tail.values[i] == full.values[10 + i]);
    }
}

TEST_CASE("attractor initial conditions collapse within three steps") {
    for (double x0 : {0.0, 0.25, 0.5, 0.75}) {
        const Orbit orbit = generate_orbit({MapKind::Logistic, 4.0, 0.0}, x0, 0.0, 10);
        const double settled = orbit.values[2];
        CHECK((settled == 0.0 || settled == 0.75));
        for (std::size_t i = 2; i < orbit.values.size(); ++i) CHECK(orbit.values[i] == settled);
    }
}

TEST_CASE("logistic range invariant") {
    // a in [0,4] and x0 in [0,1] keep the orbit inside [0,1].
    for (double a : {0.5, 1.0, 2.5, 3.74, 4.0}) {
        for (double x0 : {0.01, 0.3, 0.7, 0.99}) {
            const Orbit orbit = generate_orbit({MapKind::Logistic, a, 0.0}, x0, 0.0, 1000);
            CHECK_FALSE(orbit.diverged);
            CHECK(orbit.raw_min >= 0.0);
            CHECK(orbit.raw_max <= 1.0);
        }
    }
    for (double a : {0.5, 1.3, 1.9, 2.0}) {
        const Orbit orbit = generate_orbit({MapKind::Tent, a, 0.0}, 0.37, 0.0, 1000);
        CHECK(orbit.raw_min >= 0.0);
        CHECK(orbit.raw_max <= 1.0);
    }
    const Orbit gauss = generate_orbit({MapKind::Gaussian, 0.0, 0.0}, 0.701, 0.0, 1000);
    CHECK(gauss.raw_min >= 0.0);
    CHECK(gauss.raw_max < 1.0);
}

TEST_CASE("sensitive dependence on initial conditions") {
    MapState a{0.1, 0.0};
    MapState b{0.1 + 1e-9, 0.0};
    const MapSpec spec{MapKind::Logistic, 4.0, 0.0};
    bool separated = false;
    for (int i = 0; i < 60 && !separated; ++i) {
        a = map_step(spec, a);
        b = map_step(spec, b);
        separated = std::abs(a.x - b.x) > 0.1;
    }
    CHECK(separated);
}

TEST_CASE("determinism of orbit generation") {
    const MapSpec spec{MapKind::Henon, 1.4, 0.3};
    const Orbit first = generate_orbit(spec, 0.1, 0.1, 500, 25);
    const Orbit second = generate_orbit(spec, 0.1, 0.1, 500, 25);
    CHECK(first.values == second.values);
    CHECK(first.diverged == second.diverged);
}

TEST_CASE("normalize_orbit") {
    SUBCASE("identity when the orbit already spans [0,1]") {
        Orbit orbit;
        orbit.values = {0.0, 0.25, 1.0, 0.5};
        orbit.raw_min = 0.0;
        orbit.raw_max = 1.0;
        const Orbit norm = normalize_orbit(orbit);
        CHECK(norm.values == orbit.values);
    }
    SUBCASE("constant orbit maps to 0.5") {
        Orbit orbit;
        orbit.values = {0.75, 0.75, 0.75};
        orbit.raw_min = orbit.raw_max = 0.75;
        const Orbit norm = normalize_orbit(orbit);
        for (double v : norm.values) CHECK(v == 0.5);
    }
    SUBCASE("order preserved and endpoints hit on a long orbit") {
        const Orbit orbit = generate_orbit({MapKind::Henon, 1.7, 0.0}, 0.1, 0.0, 1000);
        REQUIRE_FALSE(orbit.diverged);
        const Orbit norm = normalize_orbit(orbit);
        CHECK(*std::min_element(norm.values.begin(), norm.values.end()) == 0.0);
        CHECK(*std::max_element(norm.values.begin(), norm.values.end()) == 1.0);
        for (std::size_t i = 0; i < orbit.values.size(); ++i) {
            for (std::size_t j : {i + 1, i + 7}) {
                if (j >= orbit.values.size()) continue;
                if (orbit.values[i] < orbit.values[j]) CHECK(norm.values[i] <= norm.values[j]);
                if (orbit.values[i] > orbit.values[j]) CHECK(norm.values[i] >= norm.values[j]);
            }
        }
        for (double v : norm.values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    SUBCASE("diverged orbit is unusable") {
        const Orbit orbit = generate_orbit({MapKind::Henon, 4.0, 4.0}, 0.0, 0.0, 50);
        REQUIRE(orbit.diverged);
        CHECK_THROWS_AS(normalize_orbit(orbit), diverged_error);
    }
}

TEST_CASE("bifurcation scan") {
    SUBCASE("period-2 window of the logistic map at a=3.2") {
        const auto rows = bifurcation_scan(MapKind::Logistic, 3.2, 3.2, 1.0, 0.1, 4);
        REQUIRE(rows.size() == 4);
        // Analytic period-2 points: (a+1 +- sqrt((a+1)(a-3))) / (2a).
        const double lo = (4.2 - std::sqrt(0.84)) / 6.4;
        const double hi = (4.2 + std::sqrt(0.84)) / 6.4;
        for (const auto& row : rows) {
            CHECK(row.a == 3.2);
            CHECK((std::abs(row.x - lo) < 1e-4 || std::abs(row.x - hi) < 1e-4));
        }
        CHECK(std::abs(rows[0].x - rows[1].x) > 0.2);  // alternating branch
    }
    SUBCASE("stable window at a=3.74 has few distinct values") {
        const auto rows = bifurcation_scan(MapKind::Logistic, 3.74, 3.74, 1.0, 0.1, 250);
        std::set<long long> distinct;
        for (const auto& row : rows) distinct.insert(std::llround(row.x * 1e6));
        CHECK(distinct.size() <= 5);
    }
    SUBCASE("tent map below a=1 contracts to zero") {
        const auto rows = bifurcation_scan(MapKind::Tent, 0.5, 0.5, 1.0, 0.3, 8);
        for (const auto& row : rows) CHECK(std::abs(row.x) < 1e-12);
    }
    SUBCASE("row count is coefficients times samples") {
        const auto rows = bifurcation_scan(MapKind::Logistic, 2.5, 3.0, 0.1, 0.1, 7, 50);
        CHECK(rows.size() == 6 * 7);
    }
}

TEST_CASE("histogram") {
    SUBCASE("constant orbit lands in one bin") {
        Orbit orbit;
        orbit.values.assign(100, 0.75);
        orbit.raw_min = orbit.raw_max = 0.75;
        const auto counts = histogram(orbit, 10);
        REQUIRE(counts.size() == 10);
        CHECK(counts[7] == 100);
        CHECK(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == 100);
    }
    SUBCASE("stable orbit concentrates, chaotic orbit spreads") {
        const Orbit stable = generate_orbit({MapKind::Logistic, 3.74, 0.0}, 0.1, 0.0, 50000);
        auto stable_counts = histogram(stable, 50);
        std::sort(stable_counts.begin(), stable_counts.end(), std::greater<>());
        const auto top5 = std::accumulate(stable_counts.begin(), stable_counts.begin() + 5,
                                          std::uint64_t{0});
        CHECK(top5 >= 49500);  // period-5 attractor: five spikes hold almost all mass

        const Orbit chaotic = generate_orbit({MapKind::Logistic, 4.0, 0.0}, 0.1, 0.0, 50000);
        const auto chaotic_counts = histogram(chaotic, 50);
        for (std::uint64_t c : chaotic_counts) CHECK(c > 0);
        // The a=4 density peaks at both ends of [0,1].
        const std::uint64_t interior_max =
            *std::max_element(chaotic_counts.begin() + 1, chaotic_counts.end() - 1);
        CHECK(chaotic_counts.front() > interior_max);
        CHECK(chaotic_counts.back() > interior_max);
    }
    SUBCASE("value 1.0 lands in the last bin") {
        Orbit orbit;
        orbit.values = {1.0, 0.0};
        orbit.raw_min = 0.0;
        orbit.raw_max = 1.0;
        const auto counts = histogram(orbit, 4);
        CHECK(counts[3] == 1);
        CHECK(counts[0] == 1);
    }
}

TEST_CASE("phase pairs") {
    Orbit orbit;
    orbit.values = {0.1, 0.36, 0.9216};
    orbit.raw_min = 0.1;
    orbit.raw_max = 0.9216;
    const auto pairs = phase_pairs(orbit);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].x == 0.1);
    CHECK(pairs[0].x_next == 0.36);
    CHECK(pairs[1].x == 0.36);
    CHECK(pairs[1].x_next == 0.9216);

    const Orbit logistic = generate_orbit({MapKind::Logistic, 4.0, 0.0}, 0.1, 0.0, 2000);
    for (const auto& pair : phase_pairs(logistic)) {
        CHECK(pair.x_next == doctest::Approx(4.0 * pair.x * (1.0 - pair.x)).epsilon(1e-12));
    }
}

TEST_CASE("map kind names round-trip") {
    for (MapKind kind : {MapKind::Logistic, MapKind::Tent, MapKind::Sinusoidal, MapKind::Gaussian,
                         MapKind::Henon, MapKind::Lozi}) {
        CHECK(map_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(map_kind_from_string("banana"), std::invalid_argument);
    CHECK(is_two_dimensional(MapKind::Henon));
    CHECK(is_two_dimensional(MapKind::Lozi));
    CHECK_FALSE(is_two_dimensional(MapKind::Logistic));
}
