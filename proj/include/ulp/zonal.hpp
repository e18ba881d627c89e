#pragma once

#include "ulp/sympoly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ulp {

enum class DiversityKind { Sum, Product };

std::string_view to_string(DiversityKind kind);
DiversityKind parse_diversity_kind(std::string_view s);

/// Coefficients of a class function over the zonal functions P_kappa(x, y) = chi_kappa(x y^-1).
struct ZonalExpansion {
    int n = 0;
    std::map<Signature, Rational> coeffs;

    /// Coefficient of the trivial character.
    Rational trivial_coefficient() const;
    /// sum coeffs[kappa] * dim(kappa), the value at the identity orbit.
    Rational value_at_identity() const;
    bool all_nonnegative() const;
};

/// Eigenvalue angles of x y^-1: canonicalized into (-pi, pi], sorted descending.
class OrbitPoint {
public:
    OrbitPoint() = default;
    explicit OrbitPoint(std::vector<double> angles);
    static OrbitPoint identity(int n) { return OrbitPoint(std::vector<double>(static_cast<std::size_t>(n), 0.0)); }

    std::span<const double> angles() const { return angles_; }
    int n() const { return static_cast<int>(angles_.size()); }
    /// y_j = cos(theta_j).
    std::vector<double> cosines() const;

private:
    std::vector<double> angles_;
};

double diversity_sum(const OrbitPoint& t);
double diversity_product(const OrbitPoint& t);

/// S_Sigma(delta) or S_Pi(delta): orbits whose diversity is at least delta.
struct Region {
    DiversityKind kind = DiversityKind::Sum;
    double delta = 0.0;
    int n = 1;

    bool contains(const OrbitPoint& t) const;
    /// Membership written in y = cos(theta) coordinates, with an absolute
    /// tolerance on the defining inequality.
    bool contains_cosines(std::span<const double> y, double tol = 0.0) const;
};

enum class QName { Q0, Q11, Q1, Q2, Q111, Q21, Q3 };

inline constexpr QName kAllQNames[] = {QName::Q0,   QName::Q11, QName::Q1, QName::Q2,
                                       QName::Q111, QName::Q21, QName::Q3};

std::string_view to_string(QName q);
/// The partition that names the polynomial ([0] is the empty partition).
Partition q_partition(QName q);

/// The low-degree positive combinations in y = cos(theta). Throws
/// std::invalid_argument when the naming partition has more than n parts.
CosSymPoly q_polynomial(QName q, int n);
/// Same polynomial with m_mu terms of length > n dropped (they vanish identically);
/// defined for every n >= 1.
CosSymPoly q_polynomial_truncated(QName q, int n);

ZonalExpansion zonal_expansion(const CosSymPoly& p);

struct PositivityCheck {
    bool positive = false;
    ZonalExpansion expansion;
};

PositivityCheck is_positive_combination(const CosSymPoly& p);

using ComplexMatrix = Eigen::MatrixXcd;

/// Throws std::invalid_argument when ||U U* - I|| exceeds 1e-9.
OrbitPoint eigen_angles(const ComplexMatrix& u);
OrbitPoint pair_orbit(const ComplexMatrix& x, const ComplexMatrix& y);

/// Orthonormalized complex Gaussian matrix with the phase correction of the
/// QR factors (Haar distributed).
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

/// Real-valued class function on orbits.
using ClassFunction = std::function<double(const OrbitPoint&)>;

ClassFunction cos_poly_function(const CosSymPoly& p);
/// Re chi_kappa.
ClassFunction character_real_part(const Signature& kappa);

struct PositivityReport {
    double min_value = 0.0;       // smallest quadratic form value seen
    double scale_at_min = 0.0;    // sum |alpha|^2 * |p(tau_0)| for that trial
    double worst_relative = 0.0;  // min over trials of value / scale
    int trials = 0;

    /// Every trial satisfied value >= -tol * scale.
    bool passes(double tol = 1e-8) const { return worst_relative >= -tol; }
};

/// Minimum of sum_{x,y} alpha(x) conj(alpha(y)) f(orbit(x, y)) over random
/// codes of code_size Haar unitaries and Gaussian weights. Deterministic in
/// (seed, trials); trials run in parallel.
PositivityReport empirical_positivity(const ClassFunction& f, int n, int trials, int code_size,
                                      std::uint64_t seed);
PositivityReport empirical_positivity(const CosSymPoly& p, int trials, int code_size, std::uint64_t seed);

} // namespace ulp
