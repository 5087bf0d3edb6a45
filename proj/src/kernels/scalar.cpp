#include <cmath>

#include "qes/kernels/kernels.hpp"

namespace qes::kernels::scalar {

void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts)
{
    const std::size_t n = diag.size();
    for (std::size_t j = 0; j < shifts.size(); ++j) {
        const double sigma = shifts[j];
        int count = 0;
        double q = diag[0] - sigma;
        if (std::abs(q) < pivmin) {
            q = -pivmin;
        }
        count += q < 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            q = (diag[i] - sigma) - offdiag_sq[i - 1] / q;
            if (std::abs(q) < pivmin) {
                q = -pivmin;
            }
            count += q < 0.0;
        }
        counts[j] = count;
    }
}

void assemble_diagonal(const DiagonalInputs& in, std::span<double> out)
{
    const double kinetic = 2.0 / (in.h * in.h);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double r = in.r0 + static_cast<double>(i + 1) * in.h;
        double r2 = r * r;
        double inv2 = 1.0 / r2;
        double v = in.a * r2 + inv2 * (in.centrifugal + inv2 * (in.b + in.c * inv2));
        out[i] = kinetic + v;
    }
}

} // namespace qes::kernels::scalar
