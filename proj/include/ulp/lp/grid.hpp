#pragma once

#include "ulp/partition.hpp"
#include "ulp/zonal.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ulp::lp {

/// Uniform grid over the sorted cube 1 >= y_1 >= ... >= y_n >= -1 with
/// `resolution` levels per axis. Points are enumerated with level indices
/// i_1 >= i_2 >= ... >= i_n, innermost index fastest.
class SortedGrid {
public:
    SortedGrid(int n, int resolution);

    int n() const { return n_; }
    int resolution() const { return resolution_; }
    std::size_t size() const { return size_; }
    double level(int i) const { return levels_[static_cast<std::size_t>(i)]; }
    std::span<const double> levels() const { return levels_; }
    double step() const { return resolution_ > 1 ? 2.0 / (resolution_ - 1) : 0.0; }

    /// Calls f(index, y) for every point in enumeration order.
    template <class F>
    void for_each(F&& f) const {
        std::vector<int> idx(static_cast<std::size_t>(n_));
        std::vector<double> y(static_cast<std::size_t>(n_));
        std::size_t counter = 0;
        visit(0, resolution_ - 1, idx, y, counter, f);
    }

private:
    template <class F>
    void visit(int axis, int max_index, std::vector<int>& idx, std::vector<double>& y, std::size_t& counter,
               F& f) const {
        if (axis == n_) {
            f(counter++, std::span<const double>(y));
            return;
        }
        for (int i = 0; i <= max_index; ++i) {
            idx[static_cast<std::size_t>(axis)] = i;
            y[static_cast<std::size_t>(axis)] = levels_[static_cast<std::size_t>(i)];
            visit(axis + 1, i, idx, y, counter, f);
        }
    }

    int n_;
    int resolution_;
    std::size_t size_;
    std::vector<double> levels_;
};

/// One-dimensional basis used along every axis of a symmetric tensor polynomial.
enum class AxisBasis {
    Power,     // y^k
    Chebyshev  // T_k(y) = cos(k arccos y)
};

/// P(y) = sum_{e} coeff[e] prod_j phi_{e_j}(y_j) with a fully symmetric
/// coefficient tensor over (degree + 1)^n indices. Built from coefficients of
/// symmetrized products (monomial symmetric functions for Power, their
/// Chebyshev analogues for Chebyshev).
class SymmetricTensorPoly {
public:
    SymmetricTensorPoly(int n, int degree, AxisBasis basis, const std::map<Partition, double>& coeffs);

    int n() const { return n_; }
    int degree() const { return degree_; }

    double operator()(std::span<const double> y) const;

    /// Values at every grid point, in grid enumeration order.
    std::vector<double> evaluate(const SortedGrid& grid) const;

private:
    void axis_values(double y, double* out) const;

    int n_;
    int degree_;
    AxisBasis basis_;
    std::size_t stride_;           // degree + 1
    std::vector<double> tensor_;   // (degree + 1)^n, first axis slowest
};

/// Grid points (as y tuples) of the region S(delta), plus projections of
/// boundary-adjacent grid points onto the region boundary.
std::vector<std::vector<double>> sample_region(int n, DiversityKind kind, double delta, int resolution);

/// Feasible interval for coordinate j of y inside the region with the other
/// coordinates fixed, intersected with [-1, 1]. Empty when lo > hi.
struct Interval {
    double lo;
    double hi;
};
Interval coordinate_range(const Region& region, std::span<const double> y, int j);

} // namespace ulp::lp
