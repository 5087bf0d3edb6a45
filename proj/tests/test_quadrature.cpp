#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qes/analytic.hpp"
#include "qes/oracle.hpp"
#include "qes/quadrature.hpp"

using namespace qes;

namespace {

/// int_0^inf r^(2 kappa) exp(-p r^2 - q r^-2) dr
double bessel_integral(double kappa, double p, double q)
{
    double nu = (2.0 * kappa + 1.0) / 2.0;
    // Orders within a few ulps of an integer are snapped to it.
    if (std::abs(nu - std::round(nu)) < 1e-9) {
        nu = std::round(nu);
    }
    return std::pow(q / p, nu / 2.0) * std::cyl_bessel_k(std::abs(nu), 2.0 * std::sqrt(p * q));
}

} // namespace

TEST_SUITE("quadrature")
{
    TEST_CASE("Gauss-Legendre rule")
    {
        for (int n : {1, 2, 7, 12, 20}) {
            auto rule = gauss_legendre_rule(n);
            REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
            double w = 0.0;
            double top = 0.0;
            for (int i = 0; i < n; ++i) {
                w += rule.weights[i];
                top += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
            }
            CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
            CHECK(top == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
        }
    }

    TEST_CASE("polynomials and smooth integrands")
    {
        auto poly = [](double x) { return 5.0 * std::pow(x, 9) - 3.0 * x * x + 1.0; };
        double exact = 0.5 * std::pow(2.0, 10) - 8.0 + 2.0;
        CHECK(integrate_gauss_kronrod(poly, 0.0, 2.0).value == doctest::Approx(exact).epsilon(1e-14));
        CHECK(integrate_gauss_legendre(poly, 0.0, 2.0).value == doctest::Approx(exact).epsilon(1e-14));

        auto gauss = [](double x) { return std::exp(-x * x); };
        auto k = integrate_gauss_kronrod(gauss, -8.0, 8.0);
        auto l = integrate_gauss_legendre(gauss, -8.0, 8.0);
        CHECK(k.converged);
        CHECK(l.converged);
        CHECK(k.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
        CHECK(l.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    }

    TEST_CASE("peaked integrand needs adaptivity")
    {
        auto f = [](double x) { return 1.0 / (1e-4 + (x - 0.3) * (x - 0.3)); };
        double exact = (std::atan(0.7 / 1e-2) + std::atan(0.3 / 1e-2)) / 1e-2;
        auto k = integrate_gauss_kronrod(f, 0.0, 1.0);
        auto l = integrate_gauss_legendre(f, 0.0, 1.0);
        CHECK(k.value == doctest::Approx(exact).epsilon(1e-11));
        CHECK(l.value == doctest::Approx(exact).epsilon(1e-11));
        CHECK(k.evaluations > 15 * 8);
    }

    TEST_CASE("Bessel closed form of the normalisation integral")
    {
        CHECK(bessel_integral(-1.5, 1.0, 1.875) == doctest::Approx(0.0402232949426291172).epsilon(1e-12));
        CHECK(bessel_integral(-1.5, 1.0, 2.0) == doctest::Approx(0.0349168685038232857).epsilon(1e-12));

        for (const auto& spec : {ProblemSpec{Dimension::ThreeD, 0, std::nullopt},
                                 ProblemSpec{Dimension::TwoD, 0, std::nullopt},
                                 ProblemSpec{Dimension::ThreeD, 1, std::nullopt}}) {
            for (double a : {0.3, 1.0, 5.0}) {
                auto p = solve_same_qn(a, spec);
                auto g = make_ground_state(p, spec);
                double exact = bessel_integral(g.kappa, p.sqrt_a(), p.sqrt_c());
                CHECK(normalization(g).integral == doctest::Approx(exact).epsilon(1e-11));
                CHECK(normalization_cross_check(g).integral == doctest::Approx(exact).epsilon(1e-11));
            }
        }
    }

    TEST_CASE("excited normalisation from three Bessel terms")
    {
        auto p = solve_same_qn(1.0, {Dimension::ThreeD, 0, std::nullopt});
        auto x = make_excited_state(p, {Dimension::ThreeD, 0, std::nullopt});
        // (r^2 + gamma r^-2)^2 r^(2 kappa) = r^(2 kappa + 4) + 2 gamma r^(2 kappa) + gamma^2 r^(2 kappa - 4)
        double sa = p.sqrt_a();
        double sc = p.sqrt_c();
        double exact = bessel_integral(x.kappa + 2.0, sa, sc) + 2.0 * x.gamma * bessel_integral(x.kappa, sa, sc) +
                       x.gamma * x.gamma * bessel_integral(x.kappa - 2.0, sa, sc);
        CHECK(normalization(x).integral == doctest::Approx(exact).epsilon(1e-11));
    }
}
