#include "ulp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ulp {

namespace {

void check_inputs(int n, double delta) {
    if (n < 2) throw std::invalid_argument("analytic bounds need n >= 2");
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0, 1]");
}

// Thresholds and closed forms, both in delta^2 = q. Templated so the double
// and the exact rational evaluations share one transcription.
template <class T>
T threshold(DiversityKind kind, int variant, int n) {
    const T nn(n);
    if (kind == DiversityKind::Sum) {
        switch (variant) {
        case 1: return T(1) / T(2);
        case 2: return (2 * nn * nn - 1) / (4 * nn * nn);
        default: return (2 * nn * nn - nn - 2) / (2 * nn * (2 * nn - 1));
        }
    }
    switch (variant) {
    case 1: return T(1) / T(2);
    case 2: return (2 * nn - 1) / (4 * nn);
    default: return T(1) / T(2);
    }
}

template <class T>
struct Fraction {
    T num;
    T den;
};

template <class T>
Fraction<T> closed_form(DiversityKind kind, int variant, int n, const T& q) {
    const T nn(n);
    if (kind == DiversityKind::Sum) {
        switch (variant) {
        case 1: return {2 * q, 2 * q - 1};
        case 2: return {8 * nn * nn * q, 4 * nn * nn * q - (2 * nn * nn - 1)};
        default: return {16 * nn * nn * q, 2 * nn * (2 * nn - 1) * q - (2 * nn * nn - nn - 2)};
        }
    }
    switch (variant) {
    case 1: return {2 * q, 2 * q - 1};
    case 2: return {8 * nn * q, 4 * nn * q - (2 * nn - 1)};
    default: return {8 * q * q * q + 4 * q * q + 8 * q, 8 * q * q * q - T(1) / T(4)};
    }
}

} // namespace

std::optional<AnalyticBound> analytic_bound(DiversityKind kind, int variant, int n) {
    if (n < 2 || variant < 1 || variant > 3) return std::nullopt;
    if (kind == DiversityKind::Product && variant == 2 && n < 3) return std::nullopt;
    if (kind == DiversityKind::Product && variant == 3 && n != 2) return std::nullopt;
    AnalyticBound b;
    b.kind = kind;
    b.variant = variant;
    b.n = n;
    b.applicable_from = threshold<double>(kind, variant, n);
    b.inclusive = variant == 3;
    if (kind == DiversityKind::Sum)
        b.certificate_degree = variant;
    else
        b.certificate_degree = variant == 1 ? 1 : 2;
    return b;
}

bool AnalyticBound::applies(double delta2) const {
    return inclusive ? delta2 >= applicable_from : delta2 > applicable_from;
}

bool AnalyticBound::applies(const Rational& delta2) const {
    const Rational t = threshold<Rational>(kind, variant, n);
    return inclusive ? delta2 >= t : delta2 > t;
}

double AnalyticBound::value(double delta2) const {
    const auto f = closed_form<double>(kind, variant, n, delta2);
    return f.num / f.den;
}

std::optional<Rational> AnalyticBound::exact_value(const Rational& delta2) const {
    if (!applies(delta2)) return std::nullopt;
    const auto f = closed_form<Rational>(kind, variant, n, delta2);
    if (f.den == 0) return std::nullopt;
    return Rational(f.num / f.den);
}

namespace {

std::optional<double> bound_for(DiversityKind kind, int n, double delta, int variant) {
    check_inputs(n, delta);
    if (variant < 1 || variant > 3) throw std::invalid_argument("variant must be 1, 2 or 3");
    const auto b = analytic_bound(kind, variant, n);
    const double q = delta * delta;
    if (!b || !b->applies(q)) return std::nullopt;
    return b->value(q);
}

} // namespace

std::optional<double> bound_sum(int n, double delta, int variant) {
    return bound_for(DiversityKind::Sum, n, delta, variant);
}

std::optional<double> bound_product(int n, double delta, int variant) {
    return bound_for(DiversityKind::Product, n, delta, variant);
}

std::optional<double> best_analytic(int n, double delta, DiversityKind kind) {
    std::optional<double> best;
    for (int v = 1; v <= 3; ++v) {
        const auto b = bound_for(kind, n, delta, v);
        if (b && (!best || *b < *best)) best = b;
    }
    return best;
}

CosSymPoly certificate_poly(DiversityKind kind, int variant, int n, const Rational& delta2) {
    const auto b = analytic_bound(kind, variant, n);
    if (!b || !b->applies(delta2))
        throw std::invalid_argument("analytic variant " + std::to_string(variant) + " does not apply at delta^2 = " +
                                    delta2.get_str());
    const Rational nn(n);
    const CosSymPoly q1 = q_polynomial(QName::Q1, n);
    const CosSymPoly one = CosSymPoly::constant(n, 1);
    if (kind == DiversityKind::Sum) {
        // s = mean of cos(theta_j) on the boundary of the region.
        const Rational s = 1 - 2 * delta2;
        const CosSymPoly linear = q1 - one * (nn * s);
        switch (variant) {
        case 1: return linear;
        case 2: return linear * (q1 + one * nn);
        default: {
            // sum_{i<j} (y_i + 1)(y_j + 1)
            CosSymPoly r(n);
            r.add_term({1, 1}, 1);
            r.add_term({1}, nn - 1);
            r.add_term({}, nn * (nn - 1) / 2);
            return linear * r;
        }
        }
    }
    const Rational p = 2 * delta2;
    const CosSymPoly q2 = q_polynomial(QName::Q2, n);
    switch (variant) {
    case 1: return q1 - one * (nn * (1 - p));
    case 2: return q2 + q1 * ((nn + 1) * p / 2) + one * ((nn + 1) * (2 * nn * (p - 1) + 1) / 4);
    default: return q2 + q1 * (p * p / 2 + 2 * p - 1) + one * (p * p * p - Rational(1, 4));
    }
}

CosSymPoly certificate_poly(DiversityKind kind, int variant, int n, double delta) {
    check_inputs(n, delta);
    const Rational d = exact_rational(delta);
    return certificate_poly(kind, variant, n, Rational(d * d));
}

Rational certificate_ratio(const CosSymPoly& p) {
    const auto z = zonal_expansion(p);
    const Rational c0 = z.trivial_coefficient();
    if (c0 == 0) throw std::domain_error("certificate has zero trivial coefficient");
    return z.value_at_identity() / c0;
}

} // namespace ulp
