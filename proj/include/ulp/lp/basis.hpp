#pragma once

#include "ulp/partition.hpp"
#include "ulp/rational.hpp"
#include "ulp/sympoly.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ulp::lp {

/// Everything the LP needs for a fixed (n, D): the monomial basis, the exact
/// zonal expansion of each m_mu, and a better conditioned Chebyshev basis
/// t_mu(y) = sum over distinct permutations sigma of mu of prod_j T_{sigma_j}(y_j).
struct BasisData {
    int n = 0;
    int degree = 0;
    std::vector<Partition> partitions;      // degree <= D, length <= n
    std::vector<Signature> zonal_indices;   // every kappa in some expansion, sorted
    std::vector<std::int64_t> dims;         // dim(kappa), aligned with zonal_indices
    std::size_t trivial_index = 0;

    // M[i][j]: coefficient of P_{kappa_i} in the zonal expansion of m_{mu_j}.
    std::vector<std::vector<Rational>> M;
    // C[i][j]: coefficient of m_{mu_i} in t_{mu_j}.
    std::vector<std::vector<Rational>> chebyshev;
    // (M C) in doubles: zonal expansion of each t_mu.
    Eigen::MatrixXd chebyshev_zonal;
    // t_mu(1, ..., 1): the number of distinct permutations of mu padded to n.
    std::vector<double> chebyshev_at_identity;

    /// Rows of chebyshev_zonal that carry independent constraints: the
    /// nontrivial kappa with kappa <= conj(kappa) (the expansion of a real
    /// polynomial is symmetric under conjugation).
    std::vector<std::size_t> constraint_rows;

    std::size_t index_of(const Signature& kappa) const;
};

BasisData build_basis(int n, int degree);

/// Process-wide cache; building the n = 3, D = 13 basis takes a while.
std::shared_ptr<const BasisData> shared_basis(int n, int degree);

/// Exact monomial coefficients of sum_j b_j t_{mu_j} for double inputs b.
std::vector<Rational> chebyshev_to_monomial(const BasisData& basis, std::span<const double> b);

/// Coefficients of T_k(y) in powers of y, k <= degree.
std::vector<std::vector<BigInt>> chebyshev_coefficients(int degree);

} // namespace ulp::lp
