#include <catch2/catch_amalgamated.hpp>

#include <debruijn/simulate.hpp>
#include <debruijn/stationary.hpp>

using namespace debruijn;

namespace {
RateSystem r0() {
    return RateSystem(2, 2, {{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
}
}  // namespace

TEST_CASE("counter rng is deterministic and stream-separated") {
    CounterRng a(12345, 0), b(12345, 0), c(12345, 1);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
        double u = c.next_uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
    CounterRng d(12345, 0), e(12345, 1);
    int equal = 0;
    for (int i = 0; i < 64; ++i) equal += d.next_u64() == e.next_u64();
    REQUIRE(equal == 0);
    CounterRng f(7, 0);
    for (int i = 0; i < 50; ++i) REQUIRE(f.next_exponential(2.0) > 0.0);
}

TEST_CASE("the word 11 has a single exit and always jumps to 12") {
    auto R = r0();
    CounterRng rng(99);
    for (int i = 0; i < 20; ++i) {
        auto step = gillespie_step(Word::parse(2, "11"), R, rng);
        REQUIRE(step.next == Word::parse(2, "12"));
        REQUIRE(step.dwell > 0.0);
    }
}

TEST_CASE("jump choices follow the exit rates from 12") {
    // From 12: appending 1 gives 21 (rate beta(21) = x_{1,1} = 1), appending 2
    // gives 22 (rate beta(22) = x_{2,2} = 5). P(22) = 5/6.
    auto R = r0();
    CounterRng rng(2024);
    int to22 = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        auto step = gillespie_step(Word::parse(2, "12"), R, rng);
        REQUIRE((step.next == Word::parse(2, "21") || step.next == Word::parse(2, "22")));
        to22 += step.next == Word::parse(2, "22");
    }
    double frac = static_cast<double>(to22) / trials;
    REQUIRE(frac > 5.0 / 6.0 - 0.02);
    REQUIRE(frac < 5.0 / 6.0 + 0.02);
}

TEST_CASE("trajectories are reproducible and structurally valid") {
    auto R = r0();
    auto t1 = simulate_trajectory(R, 31337, 500);
    auto t2 = simulate_trajectory(R, 31337, 500);
    REQUIRE(t1.steps == t2.steps);
    REQUIRE(t1.total_time == t2.total_time);
    auto t3 = simulate_trajectory(R, 31338, 500);
    REQUIRE(t1.steps != t3.steps);

    Word current = t1.initial;
    double sum = 0;
    for (const auto& [dwell, next] : t1.steps) {
        REQUIRE(dwell > 0.0);
        sum += dwell;
        bool reachable = false;
        for (int a = 1; a <= 2; ++a) reachable = reachable || shift_append(current, a) == next;
        REQUIRE(reachable);
        REQUIRE(next != current);
        current = next;
    }
    REQUIRE(sum == t1.total_time);
}

TEST_CASE("total variation distance basics") {
    REQUIRE(total_variation({0.5, 0.5}, {0.5, 0.5}) == 0.0);
    REQUIRE(total_variation({1.0, 0.0}, {0.0, 1.0}) == 1.0);
    REQUIRE(total_variation({0.5, 0.5}, {1.0, 0.0}) == 0.5);
    REQUIRE_THROWS_AS(total_variation({1.0}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("occupation measures are deterministic and conserve time") {
    auto R = r0();
    auto m1 = simulate_measure(R, 4242, 200.0, 10.0, 2);
    auto m2 = simulate_measure(R, 4242, 200.0, 10.0, 2);
    REQUIRE(m1.occupation == m2.occupation);
    double mass = 0;
    for (double t : m1.occupation) mass += t;
    REQUIRE(mass == Catch::Approx(m1.total_time));
    auto p = m1.probabilities();
    double tot = 0;
    for (double v : p) tot += v;
    REQUIRE(tot == Catch::Approx(1.0));
    REQUIRE_THROWS_AS(simulate_measure(R, 1, 5.0, 10.0), std::invalid_argument);
}

TEST_CASE("long-run occupation approaches the exact stationary law") {
    auto R = r0();
    auto sv = stationary_vector(R);
    std::vector<double> exact;
    for (const auto& q : sv.probs) exact.push_back(to_double(q));
    auto m = simulate_measure(R, 7, 20000.0, 100.0, 4);
    REQUIRE(total_variation(m.probabilities(), exact) < 0.02);
}
