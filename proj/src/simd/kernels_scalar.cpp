#include "kernels_impl.hpp"

namespace ulp::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void dot_columns(const double* cols, std::size_t stride, std::size_t rows, std::size_t ncols, const double* v,
                 double* out) {
    for (std::size_t j = 0; j < ncols; ++j) out[j] = dot(cols + j * stride, v, rows);
}

std::size_t argmax(const double* v, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

} // namespace ulp::simd::scalar
