#include "ulp/zonal.hpp"

#include "ulp/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ulp {

std::string_view to_string(DiversityKind kind) {
    return kind == DiversityKind::Sum ? "sum" : "product";
}

DiversityKind parse_diversity_kind(std::string_view s) {
    if (s == "sum") return DiversityKind::Sum;
    if (s == "product") return DiversityKind::Product;
    throw std::invalid_argument("diversity kind must be 'sum' or 'product'");
}

// ---------------------------------------------------------------- ZonalExpansion

Rational ZonalExpansion::trivial_coefficient() const {
    auto it = coeffs.find(Signature(std::vector<int>(static_cast<std::size_t>(n), 0)));
    return it == coeffs.end() ? Rational(0) : it->second;
}

Rational ZonalExpansion::value_at_identity() const {
    Rational total = 0;
    for (const auto& [k, c] : coeffs) total += c * Rational(static_cast<long>(weyl_dimension(k)));
    return total;
}

bool ZonalExpansion::all_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

// ---------------------------------------------------------------- orbits

OrbitPoint::OrbitPoint(std::vector<double> angles) : angles_(std::move(angles)) {
    constexpr double pi = std::numbers::pi;
    for (double& a : angles_) {
        a = std::remainder(a, 2.0 * pi);  // [-pi, pi]
        if (a <= -pi) a = pi;
    }
    std::sort(angles_.begin(), angles_.end(), std::greater<>());
}

std::vector<double> OrbitPoint::cosines() const {
    std::vector<double> y(angles_.size());
    std::transform(angles_.begin(), angles_.end(), y.begin(), [](double a) { return std::cos(a); });
    return y;
}

namespace {
// 1 - cos(theta) without cancellation near zero.
double one_minus_cos(double theta) {
    const double s = std::sin(0.5 * theta);
    return 2.0 * s * s;
}
} // namespace

double diversity_sum(const OrbitPoint& t) {
    if (t.n() == 0) return 0.0;
    double sum = 0.0;
    for (double a : t.angles()) sum += one_minus_cos(a);
    return std::sqrt(sum / (2.0 * t.n()));
}

double diversity_product(const OrbitPoint& t) {
    if (t.n() == 0) return 0.0;
    double log_sum = 0.0;
    for (double a : t.angles()) {
        const double v = one_minus_cos(a);
        if (v < 1e-300) return 0.0;
        log_sum += std::log(v);
    }
    return std::sqrt(0.5 * std::exp(log_sum / t.n()));
}

bool Region::contains(const OrbitPoint& t) const {
    const double d = kind == DiversityKind::Sum ? diversity_sum(t) : diversity_product(t);
    return d >= delta;
}

bool Region::contains_cosines(std::span<const double> y, double tol) const {
    const double d2 = delta * delta;
    if (kind == DiversityKind::Sum) {
        double s = 0.0;
        for (double v : y) s += v;
        return s <= n * (1.0 - 2.0 * d2) + tol;
    }
    double prod = 1.0;
    for (double v : y) prod *= 1.0 - v;
    return prod >= std::pow(2.0 * d2, n) - tol;
}

// ---------------------------------------------------------------- Q polynomials

std::string_view to_string(QName q) {
    switch (q) {
    case QName::Q0: return "Q_[0]";
    case QName::Q11: return "Q_[11]";
    case QName::Q1: return "Q_[1]";
    case QName::Q2: return "Q_[2]";
    case QName::Q111: return "Q_[111]";
    case QName::Q21: return "Q_[21]";
    case QName::Q3: return "Q_[3]";
    }
    return "?";
}

Partition q_partition(QName q) {
    switch (q) {
    case QName::Q0: return {};
    case QName::Q11: return {1, 1};
    case QName::Q1: return {1};
    case QName::Q2: return {2};
    case QName::Q111: return {1, 1, 1};
    case QName::Q21: return {2, 1};
    case QName::Q3: return {3};
    }
    return {};
}

CosSymPoly q_polynomial_truncated(QName q, int n) {
    if (n < 1) throw std::invalid_argument("q_polynomial needs n >= 1");
    CosSymPoly p(n);
    const Rational nn(n);
    switch (q) {
    case QName::Q0:
        p.add_term({}, 1);
        break;
    case QName::Q11:
        p.add_term_truncated({1, 1}, 1);
        p.add_term({}, (nn - 1) / 4);
        break;
    case QName::Q1:
        p.add_term({1}, 1);
        break;
    case QName::Q2:
        p.add_term({2}, 1);
        p.add_term_truncated({1, 1}, 1);
        p.add_term({}, -(nn + 1) / 4);
        break;
    case QName::Q111:
        p.add_term_truncated({1, 1, 1}, 1);
        p.add_term({1}, (nn - 2) / 4);
        break;
    case QName::Q21:
        p.add_term_truncated({2, 1}, 1);
        p.add_term_truncated({1, 1, 1}, 2);
        p.add_term({1}, Rational(-1, 4));
        break;
    case QName::Q3:
        p.add_term({3}, 1);
        p.add_term_truncated({2, 1}, 1);
        p.add_term_truncated({1, 1, 1}, 1);
        p.add_term({1}, -(nn + 2) / 4);
        break;
    }
    return p;
}

CosSymPoly q_polynomial(QName q, int n) {
    if (q_partition(q).length() > n)
        throw std::invalid_argument(std::string(to_string(q)) + " needs n >= " +
                                    std::to_string(q_partition(q).length()));
    return q_polynomial_truncated(q, n);
}

ZonalExpansion zonal_expansion(const CosSymPoly& p) {
    return ZonalExpansion{p.n(), schur_expand(cos_to_laurent(p))};
}

PositivityCheck is_positive_combination(const CosSymPoly& p) {
    PositivityCheck out;
    out.expansion = zonal_expansion(p);
    out.positive = out.expansion.all_nonnegative();
    return out;
}

// ---------------------------------------------------------------- matrices

OrbitPoint eigen_angles(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("eigen_angles needs a square matrix");
    const auto n = u.rows();
    const double defect = (u * u.adjoint() - ComplexMatrix::Identity(n, n)).norm();
    if (!(defect <= 1e-9))
        throw std::invalid_argument("matrix is not unitary (||UU* - I|| = " + std::to_string(defect) + ")");
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto ev = solver.eigenvalues()(i);
        if (std::abs(std::abs(ev) - 1.0) > 1e-8)
            throw std::runtime_error("eigenvalue off the unit circle");
        angles.push_back(std::arg(ev));
    }
    return OrbitPoint(std::move(angles));
}

OrbitPoint pair_orbit(const ComplexMatrix& x, const ComplexMatrix& y) {
    // y is unitary, so y^-1 = y*.
    return eigen_angles(x * y.adjoint());
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = {normal(rng), normal(rng)};
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const auto d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : std::complex<double>(1.0);
    }
    return q;
}

ClassFunction cos_poly_function(const CosSymPoly& p) {
    return [p](const OrbitPoint& t) {
        const auto y = t.cosines();
        return eval_cos_poly(p, y);
    };
}

ClassFunction character_real_part(const Signature& kappa) {
    const LaurentSymPoly& chi = schur_laurent(kappa);
    return [&chi](const OrbitPoint& t) { return chi.evaluate(t.angles()).real(); };
}

PositivityReport empirical_positivity(const ClassFunction& f, int n, int trials, int code_size,
                                      std::uint64_t seed) {
    if (trials < 1 || code_size < 1 || n < 1)
        throw std::invalid_argument("empirical_positivity needs positive n, trials and code size");
    struct Trial {
        double value = 0.0;
        double scale = 0.0;
    };
    std::vector<Trial> results(static_cast<std::size_t>(trials));
    const double at_identity = f(OrbitPoint::identity(n));
    parallel_for(
        results.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t) {
                std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                  static_cast<std::uint32_t>(t)};
                std::mt19937_64 rng(seq);
                std::vector<ComplexMatrix> code;
                code.reserve(static_cast<std::size_t>(code_size));
                for (int c = 0; c < code_size; ++c) code.push_back(random_unitary(n, rng));
                std::normal_distribution<double> normal(0.0, 1.0);
                std::vector<std::complex<double>> alpha(static_cast<std::size_t>(code_size));
                double norm2 = 0.0;
                for (auto& a : alpha) {
                    a = {normal(rng), normal(rng)};
                    norm2 += std::norm(a);
                }
                std::complex<double> form = 0.0;
                for (int i = 0; i < code_size; ++i)
                    for (int j = 0; j < code_size; ++j) {
                        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                        const double v = i == j ? at_identity : f(pair_orbit(code[ui], code[uj]));
                        form += alpha[ui] * std::conj(alpha[uj]) * v;
                    }
                results[t] = {form.real(), norm2 * std::abs(at_identity)};
            }
        },
        1);
    PositivityReport report;
    report.trials = trials;
    report.min_value = std::numeric_limits<double>::infinity();
    report.worst_relative = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
        const double rel = r.value / std::max(r.scale, std::numeric_limits<double>::min());
        if (r.value < report.min_value) {
            report.min_value = r.value;
            report.scale_at_min = r.scale;
        }
        report.worst_relative = std::min(report.worst_relative, rel);
    }
    return report;
}

PositivityReport empirical_positivity(const CosSymPoly& p, int trials, int code_size, std::uint64_t seed) {
    return empirical_positivity(cos_poly_function(p), p.n(), trials, code_size, seed);
}

} // namespace ulp
