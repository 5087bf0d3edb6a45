#pragma once

/** \file kernels.hpp
 *
 *  \brief Data-parallel inner loops of the finite-difference eigensolver.
 *
 *  Every kernel has a scalar reference in `scalar::` and, on x86-64, an AVX2
 *  variant in `avx2::` built in its own translation unit. The AVX2 variants use
 *  the same operation order and no fused multiply-add, so their results are
 *  bit-identical to the reference. The free functions dispatch on the ISA
 *  selected at runtime.
 */

#include <span>
#include <string_view>

namespace qes::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the variant was compiled in and the CPU supports it.
bool available(Isa isa);

/// Best available ISA, unless the environment variable QES_KERNELS=scalar forces the reference path.
Isa active_isa();

/// Coefficients of the discretised operator -R'' + [a r^2 + b r^-4 + c r^-6 + L r^-2] R.
struct DiagonalInputs
{
    double r0;
    double h;
    double a;
    double b;
    double c;
    double centrifugal;
};

namespace scalar {

/// counts[j] = number of eigenvalues of the symmetric tridiagonal matrix strictly below shifts[j].
/// `offdiag_sq` holds the squared off-diagonal (size n-1). Pivots smaller than pivmin are replaced by -pivmin.
void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);

/// out[i] = 2/h^2 + V(r_i) + L/r_i^2 with r_i = r0 + (i+1) h.
void assemble_diagonal(const DiagonalInputs& in, std::span<double> out);

} // namespace scalar

#if defined(QES_HAVE_AVX2)
namespace avx2 {

void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);

void assemble_diagonal(const DiagonalInputs& in, std::span<double> out);

} // namespace avx2
#endif

void sturm_counts(Isa isa, std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts);

void assemble_diagonal(Isa isa, const DiagonalInputs& in, std::span<double> out);

} // namespace qes::kernels
