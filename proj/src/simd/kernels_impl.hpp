#pragma once

#include <cstddef>

namespace ulp::simd {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void dot_columns(const double* cols, std::size_t stride, std::size_t rows, std::size_t ncols, const double* v,
                 double* out);
std::size_t argmax(const double* v, std::size_t n);
} // namespace scalar

#if defined(ULP_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void dot_columns(const double* cols, std::size_t stride, std::size_t rows, std::size_t ncols, const double* v,
                 double* out);
std::size_t argmax(const double* v, std::size_t n);
} // namespace avx2
#endif

} // namespace ulp::simd
