#include <doctest.h>

#include <cmath>

#include "qes/analytic.hpp"
#include "qes/cross_solver.hpp"
#include "qes/oracle.hpp"

using namespace qes;

namespace {

const ProblemSpec three_d_l0{Dimension::ThreeD, 0, std::nullopt};
const ProblemSpec two_d_m0{Dimension::TwoD, 0, std::nullopt};

AnsatzSolution published_candidate()
{
    PotentialParams p{1.0, 0.04082, 0.18};
    AnsatzSolution s;
    s.state = State::FirstExcited;
    s.alpha = 1.0;
    s.beta = -0.1787;
    s.gamma = 0.8485;
    s.kappa = (p.b + 7.0 * p.sqrt_c()) / (2.0 * p.sqrt_c());
    s.energy = 12.09621;
    s.params = p;
    s.spec = three_d_l0;
    return s;
}

void check_family(double a, const ProblemSpec& spec)
{
    auto p = solve_same_qn(a, spec);
    auto grid = default_grid(p, 4000);
    auto res = fd_eigensolve(p, spec, grid, 2);
    auto g = make_ground_state(p, spec);
    auto x = make_excited_state(p, spec);

    CHECK(std::abs(res.eigenvalues[0] - g.energy) < 1e-3);
    CHECK(std::abs(res.eigenvalues[1] - x.energy) < 1e-3);
    CHECK(std::abs(res.eigenvalues[0] - g.energy) < 1e-7);
    CHECK(std::abs(res.eigenvalues[1] - x.energy) < 1e-7);
    for (double ratio : res.convergence_ratios) {
        CHECK(ratio >= 3.6);
        CHECK(ratio <= 4.4);
    }
    CHECK(res.node_counts[0] == 0);
    CHECK(res.node_counts[1] == 1);
    REQUIRE(res.node_locations[1].size() == 1);
    CHECK(std::abs(res.node_locations[1][0] - std::pow(p.c / p.a, 0.125)) < grid.spacing());
}

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("default grid and window checks")
    {
        auto p = solve_same_qn(1.0, three_d_l0);
        auto g = default_grid(p);
        CHECK(g.n == 4000);
        CHECK(g.r_min > 0.0);
        CHECK(g.r_max > 5.0);
        CHECK_THROWS_AS(validate(RadialGrid{1.0, 0.5, 100}), Error);
        CHECK_THROWS_AS(validate(RadialGrid{0.1, 5.0, 4}), Error);

        try {
            fd_eigensolve(p, three_d_l0, RadialGrid{0.8, 9.0, 400}, 2);
            FAIL("expected InvalidWindow");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidWindow);
        }
        try {
            fd_eigensolve(p, three_d_l0, RadialGrid{0.1, 3.0, 400}, 2);
            FAIL("expected InvalidWindow");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidWindow);
        }
    }

    TEST_CASE("finite-difference levels of the three-dimensional l = 0 family") { check_family(1.0, three_d_l0); }

    TEST_CASE("finite-difference levels of the two-dimensional m = 0 family") { check_family(1.0, two_d_m0); }

    TEST_CASE("finite-difference levels of the a = 4, l = 1 family")
    {
        check_family(4.0, {Dimension::ThreeD, 1, std::nullopt});
    }

    TEST_CASE("finite-difference levels with a single refinement")
    {
        auto p = solve_same_qn(1.0, three_d_l0);
        EigenOptions opts;
        opts.refinements = 1;
        auto res = fd_eigensolve(p, three_d_l0, default_grid(p, 4000), 2, opts);
        CHECK(res.levels.size() == 2);
        CHECK(std::abs(res.eigenvalues[0] + 2.0) < 1e-6);
        CHECK(std::abs(res.eigenvalues[1] - 6.0) < 1e-6);
    }

    TEST_CASE("second-order convergence of the raw levels")
    {
        auto p = solve_same_qn(1.0, two_d_m0);
        auto res = fd_eigensolve(p, two_d_m0, default_grid(p, 1000), 1);
        double e0 = std::abs(res.levels[0][0] + 2.0);
        double e1 = std::abs(res.levels[1][0] + 2.0);
        CHECK(e0 / e1 == doctest::Approx(4.0).epsilon(0.1));
    }

    TEST_CASE("kernel variants give identical finite-difference spectra")
    {
        auto p = solve_same_qn(1.0, three_d_l0);
        auto grid = default_grid(p, 2000);
        EigenOptions scalar_opts;
        scalar_opts.isa = kernels::Isa::Scalar;
        EigenOptions fast_opts;
        fast_opts.isa = kernels::active_isa();
        auto a = fd_eigensolve(p, three_d_l0, grid, 3, scalar_opts);
        auto b = fd_eigensolve(p, three_d_l0, grid, 3, fast_opts);
        CHECK(a.levels == b.levels);
    }

    TEST_CASE("ODE residual")
    {
        for (const auto& spec : {three_d_l0, two_d_m0}) {
            auto p = solve_same_qn(2.5, spec);
            for (const auto& s : {make_ground_state(p, spec), make_excited_state(p, spec)}) {
                for (double r = 0.3; r <= 4.0; r += 0.1) {
                    CHECK(std::abs(ode_residual(s, r).relative) <= 1e-10);
                }
            }
        }
        auto bad = ode_residual(published_candidate(), 1.0);
        CHECK(std::abs(bad.relative) > 1e-2);
    }

    TEST_CASE("normalisation by two rules")
    {
        for (const auto& spec : {three_d_l0, two_d_m0}) {
            auto p = solve_same_qn(1.0, spec);
            for (const auto& s : {make_ground_state(p, spec), make_excited_state(p, spec)}) {
                auto k = normalization(s);
                auto l = normalization_cross_check(s);
                CHECK(std::abs(k.integral - l.integral) <= 1e-8 * k.integral);
                CHECK(k.norm == doctest::Approx(1.0 / std::sqrt(k.integral)).epsilon(1e-15));

                AnsatzSolution n = s;
                n.norm = normalize(s);
                auto w = integration_window(s);
                auto unit = integrate_gauss_kronrod(
                    [&](double r) {
                        double v = radial_eval(n, r);
                        return v * v;
                    },
                    w.lo, w.hi);
                CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
        auto g = make_ground_state(solve_same_qn(1.0, three_d_l0), three_d_l0);
        CHECK(normalization(g).integral == doctest::Approx(0.0402232949426291172).epsilon(1e-11));
        auto w = integration_window(g);
        CHECK(w.lo > 0.0);
        CHECK(w.hi > w.lo);
    }

    TEST_CASE("verify passes exact families")
    {
        for (const auto& spec : {three_d_l0, two_d_m0}) {
            auto p = solve_same_qn(1.0, spec);
            auto grid = default_grid(p);
            for (const auto& s : {make_ground_state(p, spec), make_excited_state(p, spec)}) {
                auto rep = verify(s, grid);
                CHECK(rep.pass);
                CHECK(rep.errors.empty());
                CHECK(rep.nodes_numeric == rep.nodes_analytic);
            }
        }
    }

    TEST_CASE("verify the cross-l root at both tiers")
    {
        const ProblemSpec spec{Dimension::ThreeD, 0, 1};
        auto exact = solve_cross_l(1.0, 0, 1).params;
        auto grid = default_grid(exact);
        CHECK(verify(make_ground_state(exact, spec), grid).pass);
        CHECK(verify(make_excited_state(exact, spec), grid).pass);

        PotentialParams printed{1.0, -4.2011, 0.75878};
        auto g = make_ground_state(printed, spec, rounded_tolerance);
        auto x = make_excited_state(printed, spec, rounded_tolerance);
        CHECK(verify(g, grid, ToleranceTier::Rounded).pass);
        CHECK(verify(x, grid, ToleranceTier::Rounded).pass);
        CHECK_FALSE(verify(g, grid, ToleranceTier::Exact).pass);
    }

    TEST_CASE("verify rejects the published excited candidate")
    {
        auto cand = published_candidate();
        auto rep = verify(cand, default_grid(cand.params), ToleranceTier::Rounded);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.residual_ok);
        CHECK_FALSE(rep.energy_ok);
    }

    TEST_CASE("verify accepts the published ground state at the rounded tier")
    {
        PotentialParams p{1.0, 0.04082, 0.18};
        auto g = make_ground_state(p, three_d_l0, rounded_tolerance);
        auto rep = verify(g, default_grid(p), ToleranceTier::Rounded);
        CHECK(rep.pass);
        CHECK(std::abs(rep.energy_numeric - 4.096214) < 1e-3);
    }
}
