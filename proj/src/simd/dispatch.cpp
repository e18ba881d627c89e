#include "ulp/simd/kernels.hpp"

#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ulp::simd {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable& scalar_kernels() {
    static const KernelTable table{Isa::Scalar, &scalar::dot, &scalar::axpy, &scalar::dot_columns, &scalar::argmax};
    return table;
}

namespace {

bool cpu_has_avx2() {
#if defined(ULP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* initial_table() {
    if (const char* env = std::getenv("ULP_SIMD"); env && std::string(env) == "scalar") return &scalar_kernels();
    if (const auto* t = avx2_kernels()) return t;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

} // namespace

const KernelTable* avx2_kernels() {
#if defined(ULP_HAVE_AVX2)
    static const KernelTable table{Isa::Avx2, &avx2::dot, &avx2::axpy, &avx2::dot_columns, &avx2::argmax};
    static const bool usable = cpu_has_avx2();
    return usable ? &table : nullptr;
#else
    return nullptr;
#endif
}

bool isa_available(Isa isa) { return isa == Isa::Scalar || avx2_kernels() != nullptr; }

const KernelTable& kernels() { return *active().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    if (isa == Isa::Scalar) {
        active().store(&scalar_kernels());
        return;
    }
    const auto* t = avx2_kernels();
    if (!t) throw std::invalid_argument("AVX2 kernels are not available on this machine");
    active().store(t);
}

} // namespace ulp::simd
