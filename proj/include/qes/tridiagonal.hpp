#pragma once

#include <vector>

#include "qes/kernels/kernels.hpp"

namespace qes {

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct SymTridiagonal
{
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
};

/// Lowest k eigenvalues, ascending, by Sturm-sequence multisection inside the Gershgorin interval.
/// Each bracket is shrunk until its width is below max(abs_tol, a few ulps of the eigenvalue).
std::vector<double> lowest_eigenvalues(const SymTridiagonal& t, int k, double abs_tol = 1e-12,
                                       kernels::Isa isa = kernels::active_isa());

/// Number of eigenvalues strictly below x.
int eigenvalue_count_below(const SymTridiagonal& t, double x, kernels::Isa isa = kernels::active_isa());

/// Unit eigenvector for an (accurate) eigenvalue by inverse iteration with a pivoted tridiagonal LU.
/// The sign is fixed so that the largest-magnitude component is positive.
std::vector<double> inverse_iteration(const SymTridiagonal& t, double lambda, int iterations = 3);

} // namespace qes
