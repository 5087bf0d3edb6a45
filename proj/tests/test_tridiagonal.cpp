#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qes/tridiagonal.hpp"
#include "qes/types.hpp"

using namespace qes;

namespace {

SymTridiagonal laplacian(int n)
{
    return {std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
}

} // namespace

TEST_SUITE("tridiagonal")
{
    TEST_CASE("discrete Laplacian spectrum")
    {
        for (int n : {1, 2, 5, 100, 1000}) {
            auto t = laplacian(n);
            int k = std::min(n, 6);
            for (auto isa : {kernels::Isa::Scalar, kernels::active_isa()}) {
                auto ev = lowest_eigenvalues(t, k, 1e-14, isa);
                for (int j = 0; j < k; ++j) {
                    double exact = 2.0 - 2.0 * std::cos((j + 1) * std::numbers::pi / (n + 1));
                    CHECK(ev[j] == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
                }
            }
        }
    }

    TEST_CASE("Sturm count")
    {
        auto t = laplacian(10);
        CHECK(eigenvalue_count_below(t, -0.1) == 0);
        CHECK(eigenvalue_count_below(t, 4.1) == 10);
        CHECK(eigenvalue_count_below(t, 2.0 - 2.0 * std::cos(3.5 * std::numbers::pi / 11)) == 3);
    }

    TEST_CASE("eigenvector by inverse iteration")
    {
        const int n = 50;
        auto t = laplacian(n);
        auto ev = lowest_eigenvalues(t, 2);
        for (int j = 0; j < 2; ++j) {
            auto v = inverse_iteration(t, ev[j]);
            double norm = 0.0;
            double dot = 0.0;
            double exact_norm = 0.0;
            for (int i = 0; i < n; ++i) {
                double e = std::sin((i + 1) * (j + 1) * std::numbers::pi / (n + 1));
                norm += v[i] * v[i];
                dot += v[i] * e;
                exact_norm += e * e;
            }
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(dot) / std::sqrt(exact_norm) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    TEST_CASE("eigenvectors of small matrices")
    {
        SymTridiagonal one{{3.0}, {}};
        auto v1 = inverse_iteration(one, 3.0);
        CHECK(v1[0] == doctest::Approx(1.0));
        SymTridiagonal two{{1.0, 1.0}, {1.0}};
        auto ev = lowest_eigenvalues(two, 2);
        CHECK(ev[0] == doctest::Approx(0.0).scale(1.0));
        CHECK(ev[1] == doctest::Approx(2.0));
        auto v = inverse_iteration(two, ev[0]);
        CHECK(std::abs(v[0] + v[1]) < 1e-10);
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(lowest_eigenvalues(SymTridiagonal{{1.0, 2.0}, {}}, 1), Error);
        CHECK_THROWS_AS(lowest_eigenvalues(laplacian(4), 5), Error);
        CHECK_THROWS_AS(lowest_eigenvalues(laplacian(4), 0), Error);
    }
}
