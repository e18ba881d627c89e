#include "ulp/lp/grid.hpp"

#include "ulp/simd/kernels.hpp"
#include "ulp/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace ulp::lp {

namespace {

std::size_t sorted_count(int n, int r) {
    // C(r + n - 1, n)
    long double c = 1.0L;
    for (int k = 1; k <= n; ++k) c = c * (r + k - 1) / k;
    return static_cast<std::size_t>(std::llround(c));
}

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

SortedGrid::SortedGrid(int n, int resolution) : n_(n), resolution_(resolution) {
    if (n < 1) throw std::invalid_argument("grid dimension must be positive");
    if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
    levels_.resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) levels_[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / (resolution - 1);
    levels_.back() = 1.0;
    size_ = sorted_count(n, resolution);
}

SymmetricTensorPoly::SymmetricTensorPoly(int n, int degree, AxisBasis basis,
                                         const std::map<Partition, double>& coeffs)
    : n_(n), degree_(degree), basis_(basis), stride_(static_cast<std::size_t>(degree) + 1) {
    if (n < 1 || degree < 0) throw std::invalid_argument("bad tensor polynomial shape");
    tensor_.assign(ipow(stride_, n), 0.0);
    for (const auto& [mu, c] : coeffs) {
        if (mu.length() > n) throw std::invalid_argument("partition " + mu.to_string() + " has too many parts");
        if (mu[0] > degree)
            throw std::invalid_argument("partition " + mu.to_string() + " exceeds the axis degree");
        for (const auto& perm : distinct_permutations(mu.padded(n))) {
            std::size_t off = 0;
            for (int e : perm) off = off * stride_ + static_cast<std::size_t>(e);
            tensor_[off] += c;
        }
    }
}

void SymmetricTensorPoly::axis_values(double y, double* out) const {
    out[0] = 1.0;
    if (degree_ == 0) return;
    out[1] = y;
    const double a = basis_ == AxisBasis::Chebyshev ? 2.0 * y : y;
    for (int k = 2; k <= degree_; ++k)
        out[k] = basis_ == AxisBasis::Chebyshev ? a * out[k - 1] - out[k - 2] : y * out[k - 1];
}

double SymmetricTensorPoly::operator()(std::span<const double> y) const {
    if (static_cast<int>(y.size()) != n_) throw std::invalid_argument("point has the wrong dimension");
    const auto& k = simd::kernels();
    std::vector<double> phi(stride_);
    std::vector<double> cur = tensor_;
    std::size_t size = cur.size();
    // Contract the leading axis one coordinate at a time.
    for (int axis = 0; axis < n_; ++axis) {
        axis_values(y[static_cast<std::size_t>(axis)], phi.data());
        const std::size_t rest = size / stride_;
        std::vector<double> next(rest, 0.0);
        for (std::size_t e = 0; e < stride_; ++e) k.axpy(phi[e], cur.data() + e * rest, next.data(), rest);
        cur.swap(next);
        size = rest;
    }
    return cur[0];
}

std::vector<double> SymmetricTensorPoly::evaluate(const SortedGrid& grid) const {
    if (grid.n() != n_) throw std::invalid_argument("grid has the wrong dimension");
    const auto& k = simd::kernels();
    const std::size_t r = static_cast<std::size_t>(grid.resolution());

    // table[e * r + i] = phi_e(level_i)
    std::vector<double> table(stride_ * r);
    std::vector<double> phi(stride_);
    for (std::size_t i = 0; i < r; ++i) {
        axis_values(grid.levels()[i], phi.data());
        for (std::size_t e = 0; e < stride_; ++e) table[e * r + i] = phi[e];
    }

    std::vector<double> out(grid.size(), 0.0);
    std::vector<std::vector<double>> scratch(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) scratch[static_cast<std::size_t>(a)].resize(ipow(stride_, n_ - a - 1));

    std::size_t counter = 0;
    auto recurse = [&](auto&& self, int axis, const double* slice, std::size_t max_index) -> void {
        const std::size_t rest = ipow(stride_, n_ - axis - 1);
        if (axis == n_ - 1) {
            // Innermost axis: a row of grid values is a combination of table rows.
            double* dst = out.data() + counter;
            for (std::size_t e = 0; e < stride_; ++e)
                if (slice[e] != 0.0) k.axpy(slice[e], table.data() + e * r, dst, max_index + 1);
            counter += max_index + 1;
            return;
        }
        auto& next = scratch[static_cast<std::size_t>(axis)];
        for (std::size_t i = 0; i <= max_index; ++i) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t e = 0; e < stride_; ++e) k.axpy(table[e * r + i], slice + e * rest, next.data(), rest);
            self(self, axis + 1, next.data(), i);
        }
    };
    recurse(recurse, 0, tensor_.data(), r - 1);
    return out;
}

Interval coordinate_range(const Region& region, std::span<const double> y, int j) {
    const int n = region.n;
    const double d2 = region.delta * region.delta;
    Interval iv{-1.0, 1.0};
    if (region.kind == DiversityKind::Sum) {
        double others = 0.0;
        for (int i = 0; i < n; ++i)
            if (i != j) others += y[static_cast<std::size_t>(i)];
        iv.hi = std::min(1.0, n * (1.0 - 2.0 * d2) - others);
    } else {
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if (i != j) prod *= 1.0 - y[static_cast<std::size_t>(i)];
        if (prod <= 0.0) return {1.0, -1.0};
        iv.hi = std::min(1.0, 1.0 - std::pow(2.0 * d2, n) / prod);
    }
    return iv;
}

std::vector<std::vector<double>> sample_region(int n, DiversityKind kind, double delta, int resolution) {
    const Region region{kind, delta, n};
    const SortedGrid grid(n, resolution);
    const double step = grid.step();
    std::set<std::vector<double>> points;
    grid.for_each([&](std::size_t, std::span<const double> y) {
        if (!region.contains_cosines(y, 1e-12)) return;
        std::vector<double> p(y.begin(), y.end());
        points.insert(p);
        // A neighbour one step up along j leaves the region: add the boundary
        // point, unless it coincides with a grid level up to rounding.
        const double eps = 1e-9 * step;
        for (int j = 0; j < n; ++j) {
            const double yj = y[static_cast<std::size_t>(j)];
            const Interval iv = coordinate_range(region, y, j);
            if (iv.hi > yj + eps && iv.hi < yj + step - eps) {
                std::vector<double> q = p;
                q[static_cast<std::size_t>(j)] = iv.hi;
                std::sort(q.begin(), q.end(), std::greater<>());
                points.insert(std::move(q));
            }
        }
    });
    return {points.begin(), points.end()};
}

} // namespace ulp::lp
