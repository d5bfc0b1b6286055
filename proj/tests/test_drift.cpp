#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqlof/alternatives.hpp"
#include "seqlof/drift.hpp"
#include "seqlof/errors.hpp"

using namespace seqlof;

namespace {

std::vector<double> uniform_nodes(int segments) {
    std::vector<double> grid(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / static_cast<double>(segments);
    }
    return grid;
}

// Closed-form drift for g(u) = -slope * (u - q)+ , derived by expanding the
// double integral; independently cross-checked below against the
// alternative representation h(1) = integral of g(t)(1 + ln t).
double line_drift_oracle(double q, double slope, double z) {
    if (z <= q) {
        return 0.0;
    }
    double a = z - q;
    double log_term = q > 0.0 ? q * q * std::log(z / q) : 0.0; // q^2 ln(z/q) -> 0
    return 0.5 * slope *
           (-a * a + 0.5 * (z * z - q * q) - 2.0 * q * a + log_term);
}

} // namespace

TEST_CASE("constant mean functions produce zero drift") {
    GenericAlternative g{[](double) { return 3.7; }, {}, true};
    PathFunction h = trend_general(g, uniform_nodes(50));
    for (double v : h.values) {
        CHECK(std::abs(v) < 1e-9);
    }
}

TEST_CASE("pure decline gives the quarter-parabola drift") {
    auto line = make_line_alternative(0.0, 0.0, 1.0); // g(t) = -t
    PathFunction h = trend_general(line.as_generic(), uniform_nodes(64));
    for (std::size_t i = 0; i < h.grid.size(); ++i) {
        double z = h.grid[i];
        CHECK(std::abs(h.values[i] - (-z * z / 4.0)) < 1e-6);
    }
    CHECK(std::abs(h(1.0) - (-0.25)) < 1e-7);
}

TEST_CASE("step drift quadrature matches the closed form") {
    auto step = make_step_alternative(0.5, 1.0, 0.0);
    PathFunction h = trend_general(step.as_generic(), uniform_nodes(101));
    for (std::size_t i = 0; i < h.grid.size(); ++i) {
        double expected = trend_step_closed_form(0.5, 1.0, 0.0, h.grid[i]);
        CHECK(std::abs(h.values[i] - expected) < 1e-6);
    }
}

TEST_CASE("closed-form step drift values") {
    CHECK(trend_step_closed_form(0.5, 1.0, 0.0, 1.0) ==
          doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(trend_step_closed_form(0.5, 1.0, 0.0, 0.5) == 0.0);
    CHECK(trend_step_closed_form(0.3, 4.0, -1.0, 0.2) == 0.0);
    CHECK(trend_step_closed_form(0.7, 2.5, 2.5, 0.9) == 0.0);
    CHECK_THROWS_AS(trend_step_closed_form(0.0, 1.0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(trend_step_closed_form(0.5, 1.0, 0.0, 1.5), DomainError);
}

TEST_CASE("drift is linear in the mean function") {
    auto step = make_step_alternative(0.3, 1.0, -1.0).as_generic();
    GenericAlternative ramp{[](double t) { return t * t; }, {}, true};
    GenericAlternative mix{
        [&](double t) { return 2.0 * step.evaluate(t) - 0.5 * ramp.evaluate(t); },
        {0.3},
        true};
    auto grid = uniform_nodes(40);
    PathFunction h_step = trend_general(step, grid);
    PathFunction h_ramp = trend_general(ramp, grid);
    PathFunction h_mix = trend_general(mix, grid);
    for (std::size_t i = 0; i < h_mix.values.size(); ++i) {
        double expected = 2.0 * h_step.values[i] - 0.5 * h_ramp.values[i];
        CHECK(std::abs(h_mix.values[i] - expected) < 1e-6);
    }
}

TEST_CASE("step drift is nonpositive and decreasing after the change when c0 > c1") {
    auto grid = uniform_nodes(64);
    auto step = make_step_alternative(0.4, 2.0, 0.5);
    PathFunction h = trend_general(step.as_generic(), grid);
    double previous = 0.0;
    for (std::size_t i = 0; i < h.grid.size(); ++i) {
        CHECK(h.values[i] <= 1e-9);
        if (h.grid[i] > 0.4) {
            CHECK(h.values[i] <= previous + 1e-9);
        }
        previous = h.values[i];
    }
}

TEST_CASE("kinked-decline drift matches the independent closed form") {
    // The oracle's own consistency first: at z=1 the drift must equal
    // the weighted integral of g against 1 + ln t.
    for (double q : {0.0, 0.25, 0.5}) {
        double slope = 2.0;
        double direct = 0.0;
        const int steps = 200000;
        for (int i = 0; i < steps; ++i) {
            double t = (i + 0.5) / steps;
            double g = t > q ? -slope * (t - q) : 0.0;
            direct += g * (1.0 + std::log(t)) / steps;
        }
        CHECK(std::abs(line_drift_oracle(q, slope, 1.0) - direct) < 1e-4);
    }

    for (double q : {0.25, 0.5, 0.75}) {
        double slope = 1.0 / (1.0 - q);
        GenericAlternative g{
            [q, slope](double u) { return u <= q ? 0.0 : -slope * (u - q); },
            {q},
            true};
        PathFunction h = trend_general(g, uniform_nodes(64));
        for (std::size_t i = 0; i < h.grid.size(); ++i) {
            CHECK(std::abs(h.values[i] - line_drift_oracle(q, slope, h.grid[i])) < 1e-6);
        }
    }
}

TEST_CASE("quadrature failure surfaces instead of returning garbage") {
    GenericAlternative g{[](double t) { return std::exp(5.0 * t); }, {}, true};
    QuadratureConfig tight{1e-16, 1};
    CHECK_THROWS_AS(trend_general(g, uniform_nodes(1), tight), QuadratureFailure);
}

TEST_CASE("integrate_adaptive basics") {
    auto f = [](double t) { return t * t; };
    // The endpoint inset trades ~1e-9 * |f'| of accuracy for jump safety,
    // within the default per-unit-length tolerance.
    CHECK(std::abs(integrate_adaptive(f, 0.0, 1.0) - 1.0 / 3.0) < 1e-9);
    CHECK(integrate_adaptive(f, 0.5, 0.5) == 0.0);
    CHECK_THROWS_AS(integrate_adaptive(f, 1.0, 0.0), DomainError);
}

TEST_CASE("apply_local_alternative shapes and scaling") {
    Design design = Design::uniform(6);
    RngStream rng(4, 0);
    auto g = make_step_alternative(0.5, 1.0, 0.0).as_generic();

    // Noise off: responses are exactly the scaled mean, here 1/sqrt(4).
    ObservationStream clean =
        apply_local_alternative(g, design, 2, rng, true, NoiseLaw::gaussian, 0.0);
    REQUIRE(clean.responses.size() == 6);
    for (std::size_t i = 0; i < clean.responses.size(); ++i) {
        double expected = (design.points[i] <= 0.5 ? 1.0 : 0.0) / 2.0;
        CHECK(clean.responses[i] == doctest::Approx(expected).epsilon(1e-15));
    }

    // Zero mean function: pure noise with the requested law.
    GenericAlternative zero{[](double) { return 0.0; }, {}, true};
    ObservationStream noisy = apply_local_alternative(zero, design, 1, rng);
    RngStream replay(4, 0);
    // The first stream consumed no draws for the clean case.
    for (double y : noisy.responses) {
        CHECK(y == replay.next_normal());
    }
}
