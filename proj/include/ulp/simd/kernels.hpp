#pragma once

// Dense double-precision kernels behind the LP pricing sweep and the grid
// evaluators. Each kernel has a scalar reference implementation and an AVX2
// variant; the active table is chosen once at startup from CPUID (override
// with ULP_SIMD=scalar) and the variants are equivalence-tested.

#include <cstddef>
#include <string_view>

namespace ulp::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
    Isa isa;
    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // out[j] = dot(cols + j * stride, v, rows) for j < ncols
    void (*dot_columns)(const double* cols, std::size_t stride, std::size_t rows, std::size_t ncols,
                        const double* v, double* out);
    // Index of the largest entry (first on ties); n must be positive.
    std::size_t (*argmax)(const double* v, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

bool isa_available(Isa isa);
/// Active table; defaults to the widest available ISA.
const KernelTable& kernels();
/// Switches the active table; throws std::invalid_argument if unavailable.
void set_isa(Isa isa);

} // namespace ulp::simd
