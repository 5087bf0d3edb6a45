#include <cstdlib>
#include <cstring>

#include "qes/kernels/kernels.hpp"

namespace qes::kernels {

std::string_view to_string(Isa isa)
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool available(Isa isa)
{
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(QES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa()
{
    static const Isa selected = [] {
        const char* env = std::getenv("QES_KERNELS");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) {
            return Isa::Scalar;
        }
        return available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return selected;
}

void sturm_counts(Isa isa, std::span<const double> diag, std::span<const double> offdiag_sq, double pivmin,
                  std::span<const double> shifts, std::span<int> counts)
{
#if defined(QES_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::sturm_counts(diag, offdiag_sq, pivmin, shifts, counts);
        return;
    }
#endif
    (void)isa;
    scalar::sturm_counts(diag, offdiag_sq, pivmin, shifts, counts);
}

void assemble_diagonal(Isa isa, const DiagonalInputs& in, std::span<double> out)
{
#if defined(QES_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::assemble_diagonal(in, out);
        return;
    }
#endif
    (void)isa;
    scalar::assemble_diagonal(in, out);
}

} // namespace qes::kernels
