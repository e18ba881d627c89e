#include "ulp/lp/basis.hpp"

#include "ulp/zonal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ulp::lp {

std::vector<std::vector<BigInt>> chebyshev_coefficients(int degree) {
    std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(degree) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(degree) + 1, 0));
    t[0][0] = 1;
    if (degree >= 1) t[1][1] = 1;
    for (int k = 2; k <= degree; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        for (std::size_t j = 0; j <= uk; ++j) {
            BigInt v = -t[uk - 2][j];
            if (j > 0) v += 2 * t[uk - 1][j - 1];
            t[uk][j] = v;
        }
    }
    return t;
}

std::size_t BasisData::index_of(const Signature& kappa) const {
    auto it = std::lower_bound(zonal_indices.begin(), zonal_indices.end(), kappa);
    if (it == zonal_indices.end() || *it != kappa)
        throw std::out_of_range("signature " + kappa.to_string() + " is not in the basis");
    return static_cast<std::size_t>(it - zonal_indices.begin());
}

BasisData build_basis(int n, int degree) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");

    BasisData b;
    b.n = n;
    b.degree = degree;
    b.partitions = generate_partitions(degree, n);
    const std::size_t cols = b.partitions.size();

    std::vector<std::map<Signature, Rational>> expansions;
    expansions.reserve(cols);
    std::map<Signature, int> seen;
    for (const auto& mu : b.partitions) {
        expansions.push_back(zonal_expansion(m_poly(mu, n)).coeffs);
        for (const auto& [kappa, c] : expansions.back()) seen.emplace(kappa, 0);
    }
    for (const auto& [kappa, unused] : seen) b.zonal_indices.push_back(kappa);
    const std::size_t rows = b.zonal_indices.size();

    b.M.assign(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [kappa, c] : expansions[j]) b.M[b.index_of(kappa)][j] = c;

    b.dims.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) b.dims[i] = weyl_dimension(b.zonal_indices[i]);
    b.trivial_index = b.index_of(Signature(std::vector<int>(static_cast<std::size_t>(n), 0)));

    // t_mu = sum_sigma prod_j T_{sigma_j}(y_j); the m_nu coefficient is read off
    // the monomial y^nu.
    const auto cheb = chebyshev_coefficients(degree);
    b.chebyshev.assign(cols, std::vector<Rational>(cols, Rational(0)));
    b.chebyshev_at_identity.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto perms = distinct_permutations(b.partitions[j].padded(n));
        b.chebyshev_at_identity[j] = static_cast<double>(perms.size());
        for (std::size_t i = 0; i < cols; ++i) {
            const auto nu = b.partitions[i].padded(n);
            BigInt total = 0;
            for (const auto& sigma : perms) {
                BigInt term = 1;
                for (std::size_t k = 0; k < nu.size() && term != 0; ++k)
                    term *= cheb[static_cast<std::size_t>(sigma[k])][static_cast<std::size_t>(nu[k])];
                total += term;
            }
            b.chebyshev[i][j] = total;
        }
    }

    b.chebyshev_zonal.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < cols; ++k)
                if (b.M[i][k] != 0 && b.chebyshev[k][j] != 0) s += b.M[i][k] * b.chebyshev[k][j];
            b.chebyshev_zonal(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(s);
        }
    }

    for (std::size_t i = 0; i < rows; ++i) {
        const auto& kappa = b.zonal_indices[i];
        if (i != b.trivial_index && !(kappa.conjugate() < kappa)) b.constraint_rows.push_back(i);
    }
    return b;
}

std::shared_ptr<const BasisData> shared_basis(int n, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const BasisData>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({n, degree}); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const BasisData>(build_basis(n, degree));
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(n, degree), std::move(built)).first->second;
}

std::vector<Rational> chebyshev_to_monomial(const BasisData& basis, std::span<const double> b) {
    const std::size_t cols = basis.partitions.size();
    if (b.size() != cols) throw std::invalid_argument("coefficient vector has the wrong length");
    std::vector<Rational> exact(cols);
    for (std::size_t j = 0; j < cols; ++j) exact[j] = exact_rational(b[j]);
    std::vector<Rational> a(cols, Rational(0));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (basis.chebyshev[i][j] != 0 && b[j] != 0.0) a[i] += basis.chebyshev[i][j] * exact[j];
    return a;
}

} // namespace ulp::lp
