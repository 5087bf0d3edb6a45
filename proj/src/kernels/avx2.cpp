#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "qes/kernels/kernels.hpp"

namespace qes::kernels::avx2 {

namespace {

constexpr std::size_t lanes = 4;

/// Four shifts run through the LDL^T recurrence side by side.
void sturm_block(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                 const double* shifts, int* counts)
{
    const __m256d sigma = _mm256_loadu_pd(shifts);
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d vneg_piv = _mm256_set1_pd(-pivmin);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);

    __m256i count = _mm256_setzero_si256();

    auto step = [&](__m256d q) {
        __m256d mag = _mm256_andnot_pd(sign_mask, q);
        __m256d tiny = _mm256_cmp_pd(mag, vpiv, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, vneg_piv, tiny);
        __m256d neg = _mm256_cmp_pd(q, zero, _CMP_LT_OQ);
        // A true compare lane is all ones, i.e. -1 as a 64-bit integer.
        count = _mm256_sub_epi64(count, _mm256_castpd_si256(neg));
        return q;
    };

    __m256d q = step(_mm256_sub_pd(_mm256_set1_pd(diag[0]), sigma));
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), sigma);
        __m256d ratio = _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q);
        q = step(_mm256_sub_pd(d, ratio));
    }

    alignas(32) long long out[lanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), count);
    for (std::size_t k = 0; k < lanes; ++k) {
        counts[k] = static_cast<int>(out[k]);
    }
}

} // namespace

void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts)
{
    std::size_t j = 0;
    for (; j + lanes <= shifts.size(); j += lanes) {
        sturm_block(diag, offdiag_sq, pivmin, shifts.data() + j, counts.data() + j);
    }
    if (j < shifts.size()) {
        double pad[lanes];
        int tail[lanes];
        for (std::size_t k = 0; k < lanes; ++k) {
            pad[k] = shifts[j + std::min(k, shifts.size() - j - 1)];
        }
        sturm_block(diag, offdiag_sq, pivmin, pad, tail);
        for (std::size_t k = 0; j + k < shifts.size(); ++k) {
            counts[j + k] = tail[k];
        }
    }
}

void assemble_diagonal(const DiagonalInputs& in, std::span<double> out)
{
    const double kinetic_s = 2.0 / (in.h * in.h);
    const __m256d kinetic = _mm256_set1_pd(kinetic_s);
    const __m256d r0 = _mm256_set1_pd(in.r0);
    const __m256d h = _mm256_set1_pd(in.h);
    const __m256d a = _mm256_set1_pd(in.a);
    const __m256d b = _mm256_set1_pd(in.b);
    const __m256d c = _mm256_set1_pd(in.c);
    const __m256d l = _mm256_set1_pd(in.centrifugal);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d step = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);

    const std::size_t n = out.size();
    std::size_t i = 0;
    for (; i + lanes <= n; i += lanes) {
        // Integers below 2^53 are exact, so i + k + 1 matches the scalar conversion.
        __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(i)), step);
        __m256d r = _mm256_add_pd(r0, _mm256_mul_pd(idx, h));
        __m256d r2 = _mm256_mul_pd(r, r);
        __m256d inv2 = _mm256_div_pd(one, r2);
        __m256d inner = _mm256_add_pd(b, _mm256_mul_pd(c, inv2));
        __m256d mid = _mm256_add_pd(l, _mm256_mul_pd(inv2, inner));
        __m256d v = _mm256_add_pd(_mm256_mul_pd(a, r2), _mm256_mul_pd(inv2, mid));
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(kinetic, v));
    }
    for (; i < n; ++i) {
        double r = in.r0 + static_cast<double>(i + 1) * in.h;
        double r2 = r * r;
        double inv2 = 1.0 / r2;
        double v = in.a * r2 + inv2 * (in.centrifugal + inv2 * (in.b + in.c * inv2));
        out[i] = kinetic_s + v;
    }
}

} // namespace qes::kernels::avx2
