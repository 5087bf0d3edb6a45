#include <doctest.h>

#include <cmath>

#include "qes/analytic.hpp"
#include "qes/cross_solver.hpp"

using namespace qes;

// High-precision reference values for a = 1, l = 0, l' = 1.
namespace ref {
constexpr double b = -4.20110266871074831;
constexpr double c = 0.758777528118458052;
constexpr double kappa0 = -0.911437827766147648;
constexpr double kappa1 = 1.08856217223385235;
constexpr double e0 = -0.822875655532295295;
constexpr double e1 = 7.17712434446770470;
constexpr double beta = -1.47683362468102013;
constexpr double gamma = 1.74215674164922147;
} // namespace ref

TEST_SUITE("cross_l")
{
    TEST_CASE("l = 0, l' = 1 root")
    {
        auto sol = solve_cross_l(1.0, 0, 1);
        CHECK(sol.params.b == doctest::Approx(ref::b).epsilon(1e-11));
        CHECK(sol.params.c == doctest::Approx(ref::c).epsilon(1e-11));
        CHECK_FALSE(sol.roots.empty());

        const ProblemSpec spec{Dimension::ThreeD, 0, 1};
        auto g = make_ground_state(sol.params, spec);
        auto x = make_excited_state(sol.params, spec);
        CHECK(g.kappa == doctest::Approx(ref::kappa0).epsilon(1e-11));
        CHECK(x.kappa == doctest::Approx(ref::kappa1).epsilon(1e-11));
        CHECK(g.energy == doctest::Approx(ref::e0).epsilon(1e-11));
        CHECK(x.energy == doctest::Approx(ref::e1).epsilon(1e-11));
        CHECK(x.alpha == 1.0);
        CHECK(x.beta == doctest::Approx(ref::beta).epsilon(1e-10));
        CHECK(x.gamma == doctest::Approx(ref::gamma).epsilon(1e-10));
        CHECK(x.angular_number() == 1);

        for (double r : coefficient_match_residuals(x, sol.params, spec)) {
            CHECK(std::abs(r) < 1e-9);
        }
        for (double r : coefficient_match_residuals(g, sol.params, spec)) {
            CHECK(std::abs(r) < 1e-9);
        }
    }

    TEST_CASE("printed four and five digit values")
    {
        auto sol = solve_cross_l(1.0, 0, 1);
        CHECK(std::abs(sol.params.b - -4.2011) < 1e-4);
        CHECK(std::abs(sol.params.c - 0.75878) < 1e-4);
    }

    TEST_CASE("scaling with a")
    {
        // b and sqrt(c) scale as 1/sqrt(a) at fixed sqrt(ac).
        auto one = solve_cross_l(1.0, 0, 1);
        auto four = solve_cross_l(4.0, 0, 1);
        CHECK(four.params.b == doctest::Approx(one.params.b / 2.0).epsilon(1e-9));
        CHECK(four.params.sqrt_c() == doctest::Approx(one.params.sqrt_c() / 2.0).epsilon(1e-9));
    }

    TEST_CASE("every reported root satisfies both relations")
    {
        for (auto [l, lp] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{0, 2}, std::pair{1, 2}}) {
            CAPTURE(l);
            CAPTURE(lp);
            CrossSolution sol;
            try {
                sol = solve_cross_l(1.0, l, lp);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::NoConvergence);
                continue;
            }
            const ProblemSpec spec{Dimension::ThreeD, l, lp};
            for (const auto& p : sol.roots) {
                CHECK(std::abs(ground_constraint_residual(p, spec)) < 1e-8 * std::max(1.0, p.c));
                CHECK(std::abs(cross_constraint_residual(p, l, lp)) < 1e-8);
            }
        }
    }

    TEST_CASE("invalid requests")
    {
        CHECK_THROWS_AS(solve_cross_l(-1.0, 0, 1), Error);
        CHECK_THROWS_AS(solve_cross_l(1.0, 1, 1), Error);
        CHECK_THROWS_AS(cross_constraint_residual({1.0, -1.0, 1.0}, 1, 1), Error);
    }
}
