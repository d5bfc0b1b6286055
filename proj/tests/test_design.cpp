#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqlof/design.hpp"
#include "seqlof/design_analysis.hpp"
#include "seqlof/errors.hpp"

using namespace seqlof;

TEST_CASE("uniform-split q-design construction") {
    QDesignSpec spec{0.4, 0.5, Placement::uniform_split};
    Design design = make_q_design(10, spec);
    REQUIRE(design.points.size() == 10);
    int below = 0;
    for (double t : design.points) {
        below += t <= 0.5 ? 1 : 0;
    }
    CHECK(below == 4);
    CHECK(effective_q(design, 0.5) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(std::is_sorted(design.points.begin(), design.points.end()));
}

TEST_CASE("clustered q-design construction") {
    QDesignSpec spec{1.0 / 3.0, 0.5, Placement::clustered};
    Design design = make_q_design(3, spec, 0.01);
    REQUIRE(design.points.size() == 3);
    CHECK(design.points[0] == 0.0);
    CHECK(design.points[1] == doctest::Approx(0.99).epsilon(1e-15));
    CHECK(design.points[2] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("q rounding") {
    QDesignSpec spec{std::exp(-1.0), 0.5, Placement::uniform_split};
    Design design = make_q_design(100, spec);
    CHECK(effective_q(design, 0.5) == doctest::Approx(0.37).epsilon(1e-15));
}

TEST_CASE("infeasible clustering is rejected") {
    QDesignSpec crossing{0.5, 1e-4, Placement::clustered};
    CHECK_THROWS_AS(make_q_design(100, crossing, 0.01), InfeasiblePlacement);

    QDesignSpec overlap{0.5, 0.5, Placement::clustered};
    CHECK_THROWS_AS(make_q_design(1000, overlap, 1e-2), InfeasiblePlacement);

    QDesignSpec degenerate{0.0, 0.5, Placement::clustered};
    CHECK_THROWS_AS(make_q_design(10, degenerate), InfeasiblePlacement);
}

TEST_CASE("effective_q counting") {
    Design design = Design::uniform(10);
    CHECK(effective_q(design, 0.35) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(effective_q(design, 1.0) == 1.0);
    CHECK(effective_q(design, -0.1) == 0.0);
    CHECK_THROWS_AS(effective_q(Design{}, 0.5), EmptyInput);
}

TEST_CASE("realized fraction equals the rounded target") {
    for (int n : {10, 37, 100, 501}) {
        for (double q : {0.1, 0.25, 0.4, 0.62, 0.9}) {
            QDesignSpec spec{q, 0.5, Placement::uniform_split};
            Design design = make_q_design(n, spec);
            double expected = std::round(q * n) / n;
            CHECK(effective_q(design, 0.5) == doctest::Approx(expected).epsilon(1e-15));
        }
    }
}

TEST_CASE("dominance on the worked pairs") {
    CHECK(dominance_compare(0.4, 0.7) == Dominance::dominates);
    CHECK(dominance_compare(0.7, 0.4) == Dominance::dominated);
    CHECK(dominance_compare(0.4, 0.4) == Dominance::incomparable);
    CHECK(dominance_compare(std::exp(-1.0), 0.99) == Dominance::dominates);
    CHECK_THROWS_AS(dominance_compare(0.0, 0.5), DomainError);

    // The endpoint values behind the 0.4 vs 0.7 verdict.
    CHECK(q_design_drift(0.4, 1.0) == doctest::Approx(0.4 * std::log(0.4)).epsilon(1e-12));
    CHECK(q_design_drift(0.7, 1.0) == doctest::Approx(0.7 * std::log(0.7)).epsilon(1e-12));
}

TEST_CASE("ordering fails below 1/e") {
    // Smaller q is worse at the endpoint once q drops under 1/e.
    CHECK(q_design_drift(0.1, 1.0) > q_design_drift(0.2, 1.0));
    CHECK(dominance_compare(0.1, 0.2) == Dominance::incomparable);
}

TEST_CASE("dominance is a strict partial order on a grid") {
    std::vector<double> grid{0.38, 0.45, 0.55, 0.7, 0.85, 0.95};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(dominance_compare(grid[i], grid[i]) == Dominance::incomparable);
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            Dominance forward = dominance_compare(grid[i], grid[j]);
            Dominance backward = dominance_compare(grid[j], grid[i]);
            CHECK(forward == Dominance::dominates);
            CHECK(backward == Dominance::dominated);
            for (std::size_t k = j + 1; k < grid.size(); ++k) {
                if (forward == Dominance::dominates &&
                    dominance_compare(grid[j], grid[k]) == Dominance::dominates) {
                    CHECK(dominance_compare(grid[i], grid[k]) == Dominance::dominates);
                }
            }
        }
    }
}

TEST_CASE("verify_e_inverse_law over the reference grid") {
    std::vector<double> grid{0.37, 0.5, 0.7, 0.9};
    ElawReport report = verify_e_inverse_law(grid);
    CHECK(report.pairs.size() == 6);
    CHECK(report.all_dominate);

    std::vector<double> single{0.5};
    CHECK(verify_e_inverse_law(single).all_dominate);
    CHECK(verify_e_inverse_law(single).pairs.empty());
}

TEST_CASE("drift curve is continuous at the change point with slope -q/z") {
    for (double q : {0.2, 0.5, 0.8}) {
        CHECK(q_design_drift(q, q) == 0.0);
        CHECK(std::abs(q_design_drift(q, q + 1e-10)) < 1e-9);
        for (double z : {q + 0.1, q + 0.15, 0.99}) {
            if (z >= 1.0) {
                continue;
            }
            double fd = (q_design_drift(q, z + 1e-6) - q_design_drift(q, z - 1e-6)) / 2e-6;
            CHECK(std::abs(fd - (-q / z)) < 1e-6);
        }
    }
}

TEST_CASE("endpoint monotonicity of q ln q on [1/e, 1)") {
    double previous = -std::exp(-1.0);
    for (int i = 1; i <= 200; ++i) {
        double q = std::exp(-1.0) + i * (0.999 - std::exp(-1.0)) / 200.0;
        double value = q * std::log(q);
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("minimize_q_log_q finds the 1/e optimum") {
    QMinimum minimum = minimize_q_log_q();
    CHECK(std::abs(minimum.q_star - std::exp(-1.0)) < 1e-6);
    CHECK(std::abs(minimum.value - (-std::exp(-1.0))) < 1e-9);
    CHECK(1.0 * std::log(1.0) == 0.0); // objective vanishes at the right edge
}

TEST_CASE("line_design_compare across q") {
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) {
        grid.push_back(i / 200.0);
    }

    LineCompareReport half = line_design_compare(0.0, 0.5, grid);
    CHECK(half.verdict == Dominance::dominates);
    CHECK(std::abs(half.tail_uniform_drift(1.0) - (-0.25)) < 1e-6);
    CHECK(std::abs(half.q_design_drift(0.25)) < 1e-8); // flat before the mass point

    LineCompareReport threequarters = line_design_compare(0.0, 0.75, grid);
    CHECK(threequarters.verdict == Dominance::dominates);

    // For small q the curves cross near the endpoint: the q-design digs
    // deeper at z=1, so neither side wins everywhere.
    LineCompareReport quarter = line_design_compare(0.0, 0.25, grid);
    CHECK(quarter.verdict == Dominance::incomparable);
    CHECK(quarter.q_design_drift(1.0) < quarter.tail_uniform_drift(1.0));
    CHECK(quarter.q_design_drift(0.2) > quarter.tail_uniform_drift(0.2));

    // Vanishing slope degenerates the comparison.
    LineCompareReport flat = line_design_compare(0.0, 0.5, grid, 0.0);
    CHECK(flat.verdict == Dominance::incomparable);

    // Plumbing path for arbitrary t0.
    LineCompareReport shifted = line_design_compare(0.3, 0.5, grid);
    CHECK(shifted.tail_uniform_drift.values.size() == grid.size());
    CHECK(shifted.verdict == Dominance::dominates);
}
