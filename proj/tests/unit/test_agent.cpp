#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "vlasim/agent.hpp"

using namespace vlasim;

namespace {

// algebraically, 2*(1/(1+e^-x) - 0.5) == tanh(x/2); independent oracle route
double sigmoid_oracle(double d, double f) { return std::tanh(d * f / 2.0); }

SensitivityMatrix single_pair(double d, Step f) {
    SensitivityMatrix m(0, 2, 1, 0.01);
    m.set_entry(1, 0, d, f);
    return m;
}

}  // namespace

TEST_CASE("adjusted sigmoid matches the closed form") {
    CHECK(adjusted_sigmoid(0.01, 0.0) == 0.0);
    CHECK(adjusted_sigmoid(1.0, 0.0) == 0.0);
    CHECK(adjusted_sigmoid(0.0001, 0.0) == 0.0);

    CHECK(adjusted_sigmoid(0.01, 100.0) == doctest::Approx(0.462117157).epsilon(1e-8));
    CHECK(adjusted_sigmoid(0.01, 100.0) ==
          doctest::Approx(sigmoid_oracle(0.01, 100.0)).epsilon(1e-14));

    CHECK(adjusted_sigmoid(0.01, 1e6) == doctest::Approx(1.0).epsilon(1e-9));

    for (double d : {0.0001, 0.01, 0.3, 1.0}) {
        for (double f : {1.0, 17.0, 250.0, 9999.0}) {
            CHECK(adjusted_sigmoid(d, f) == doctest::Approx(sigmoid_oracle(d, f)).epsilon(1e-13));
        }
    }
}

TEST_CASE("adjusted sigmoid is strictly monotone and stays in [0, 1)") {
    double previous = -1.0;
    for (Step f = 0; f <= 2000; f += 10) {
        const double s = adjusted_sigmoid(0.01, static_cast<double>(f));
        CHECK(s > previous);
        CHECK(s >= 0.0);
        CHECK(s < 1.0);
        previous = s;
    }
    // monotone in d for fixed F > 0
    CHECK(adjusted_sigmoid(0.001, 50.0) < adjusted_sigmoid(0.01, 50.0));
    CHECK(adjusted_sigmoid(0.01, 50.0) < adjusted_sigmoid(0.1, 50.0));
}

TEST_CASE("w=0.5 crossover at d=0.01 happens at F=110") {
    // ln(3)/0.01 = 109.86..., so 110 is the first integer F with s > 0.5
    CHECK(adjusted_sigmoid(0.01, 109.0) < 0.5);
    CHECK(adjusted_sigmoid(0.01, 110.0) > 0.5);
    for (Step f = 0; f <= 109; ++f) CHECK(adjusted_sigmoid(0.01, static_cast<double>(f)) <= 0.5);
}

TEST_CASE("utility value guards its singularities") {
    CHECK(utility_value(0.0, 0.7, 0.0, 42.0) == 0.0);
    CHECK(utility_value(5.0, 0.5, 1.0, 100.0) == doctest::Approx(10.01).epsilon(1e-12));
    CHECK(utility_value(5.0, 0.0, 0.0, 1.0) == doctest::Approx(5e9));
    CHECK(utility_value(0.0, 1.0, 1.0, 0.0) == doctest::Approx(1e9));
}

TEST_CASE("update_sensitivity applies the asymmetric additive rule") {
    AgentParams p;
    CHECK(update_sensitivity(0.01, true, p) == doctest::Approx(0.015));
    CHECK(update_sensitivity(0.01, false, p) == doctest::Approx(0.0095));
    CHECK(update_sensitivity(p.d_max, true, p) == p.d_max);
    CHECK(update_sensitivity(p.d_min, false, p) == p.d_min);

    AgentParams fixed = p;
    fixed.adaptive = false;
    CHECK(update_sensitivity(0.01, true, fixed) == 0.01);
    CHECK(update_sensitivity(0.01, false, fixed) == 0.01);
}

TEST_CASE("sensitivity stays clamped under any check sequence") {
    AgentParams p;
    double d = p.d_init;
    for (int i = 0; i < 1000; ++i) {
        d = update_sensitivity(d, (i * 7) % 3 == 0, p);
        CHECK(d >= p.d_min);
        CHECK(d <= p.d_max);
    }
}

TEST_CASE("tick increments every counter") {
    SensitivityMatrix m(1, 4, 2, 0.01);
    m.tick();
    for (int t = 0; t < 4; ++t) {
        if (t == 1) continue;
        for (int e = 0; e < 2; ++e) CHECK(m.f(t, e) == 1);
    }
    m.set_entry(2, 1, 0.01, 99);
    m.tick();
    CHECK(m.f(2, 1) == 100);
    CHECK(m.f(0, 0) == 2);

    SensitivityMatrix fresh(0, 3, 1, 0.01);
    for (int k = 0; k < 7; ++k) fresh.tick();
    CHECK(fresh.f(1, 0) == 7);
    CHECK(fresh.f(2, 0) == 7);
}

TEST_CASE("record_check resets F, adapts d, and touches nothing else") {
    AgentParams p;
    SensitivityMatrix m(0, 6, 3, 0.01);
    m.set_entry(3, 1, 0.01, 500);
    m.set_entry(4, 2, 0.02, 123);

    m.record_check(3, 1, true, p);
    CHECK(m.f(3, 1) == 0);
    CHECK(m.d(3, 1) == doctest::Approx(0.015));
    CHECK(m.d(4, 2) == 0.02);
    CHECK(m.f(4, 2) == 123);
    CHECK(m.d(1, 0) == 0.01);

    m.set_entry(3, 1, 0.01, 500);
    m.record_check(3, 1, false, p);
    CHECK(m.f(3, 1) == 0);
    CHECK(m.d(3, 1) == doctest::Approx(0.0095));

    CHECK_THROWS_AS(m.record_check(0, 0, true, p), std::invalid_argument);
}

TEST_CASE("paper worked example: w=0.5 against best sigmoid 0.15 keeps the PA") {
    // d chosen so the single pair's adjusted sigmoid is exactly 0.15 at F=1
    const double d = std::log(1.15 / 0.85);
    SensitivityMatrix m = single_pair(d, 1);
    CHECK(adjusted_sigmoid(d, 1.0) == doctest::Approx(0.15).epsilon(1e-12));

    const ControlDecision decision = decide_control(0.5, m);
    CHECK(decision.kind == ControlDecision::Kind::Pa);
}

TEST_CASE("decide_control hands the step to the VLA when a sigmoid beats w") {
    SensitivityMatrix m = single_pair(0.01, 100);
    const ControlDecision decision = decide_control(0.1, m);
    CHECK(decision.kind == ControlDecision::Kind::VlaCheck);
    CHECK(decision.target == 1);
    CHECK(decision.error == 0);
    CHECK(decision.score == doctest::Approx(0.462117157).epsilon(1e-8));
}

TEST_CASE("decide_control edge cases") {
    SensitivityMatrix m(0, 6, 3, 0.01);

    // all F = 0: every sigmoid is 0, the w = s* tie goes to PA even at w = 0
    CHECK(decide_control(0.0, m).kind == ControlDecision::Kind::Pa);

    // w = 1 can never lose (sigmoids stay below 1)
    for (int t = 1; t < 6; ++t)
        for (int e = 0; e < 3; ++e) m.set_entry(t, e, 1.0, 100000);
    CHECK(decide_control(1.0, m).kind == ControlDecision::Kind::Pa);

    // exact tie at w = s* goes to PA
    SensitivityMatrix pair = single_pair(0.01, 100);
    const double s = adjusted_sigmoid(0.01, 100.0);
    CHECK(decide_control(s, pair).kind == ControlDecision::Kind::Pa);

    // a single-node farmlet has no neighbors to check
    SensitivityMatrix lonely(0, 1, 3, 0.01);
    CHECK_FALSE(best_check_target(lonely).has_value());
    CHECK(decide_control(0.0, lonely).kind == ControlDecision::Kind::Pa);
}

TEST_CASE("argmax ties break toward lowest target slot then lowest error id") {
    SensitivityMatrix m(2, 5, 3, 0.01);
    m.set_entry(1, 2, 0.01, 400);
    m.set_entry(3, 0, 0.01, 400);
    m.set_entry(3, 1, 0.01, 400);
    auto best = best_check_target(m);
    REQUIRE(best.has_value());
    CHECK(best->target == 1);
    CHECK(best->error == 2);

    // same target, two errors tied: lowest error wins
    SensitivityMatrix m2(0, 2, 3, 0.01);
    m2.set_entry(1, 1, 0.01, 400);
    m2.set_entry(1, 2, 0.01, 400);
    auto best2 = best_check_target(m2);
    REQUIRE(best2.has_value());
    CHECK(best2->error == 1);
}

TEST_CASE("matrix construction rejects nothing but self-targets") {
    SensitivityMatrix m(2, 4, 2, 0.03);
    CHECK(m.observer() == 2);
    CHECK(m.d(0, 0) == 0.03);
    CHECK(m.f(3, 1) == 0);
    CHECK_THROWS_AS(m.d(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(m.set_entry(2, 0, 0.1, 1), std::invalid_argument);
}
