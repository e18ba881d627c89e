#pragma once

#include "ulp/rational.hpp"
#include "ulp/sympoly.hpp"
#include "ulp/zonal.hpp"

#include <optional>

namespace ulp {

/// One closed-form cardinality bound in delta^2.
struct AnalyticBound {
    DiversityKind kind = DiversityKind::Sum;
    int variant = 1;
    int n = 2;
    double applicable_from = 0.0;  // threshold on delta^2
    bool inclusive = false;        // ">=" instead of ">"
    int certificate_degree = 1;

    bool applies(double delta2) const;
    /// Closed form at delta^2 (no applicability check).
    double value(double delta2) const;

    /// Exact closed form; nullopt outside the validity range or where the
    /// denominator vanishes.
    std::optional<Rational> exact_value(const Rational& delta2) const;
    bool applies(const Rational& delta2) const;
};

/// Descriptor for (kind, variant, n); nullopt when the variant is not stated for this n.
std::optional<AnalyticBound> analytic_bound(DiversityKind kind, int variant, int n);

/// Closed forms for the diversity sum (variant 1..3). nullopt = not applicable.
std::optional<double> bound_sum(int n, double delta, int variant);
/// Closed forms for the diversity product (variant 1..3). nullopt = not applicable.
std::optional<double> bound_product(int n, double delta, int variant);
/// Minimum over the applicable variants.
std::optional<double> best_analytic(int n, double delta, DiversityKind kind);

/// The polynomial from the proof of the closed form, exact in delta^2.
/// Throws std::invalid_argument when the variant does not apply.
CosSymPoly certificate_poly(DiversityKind kind, int variant, int n, const Rational& delta2);
CosSymPoly certificate_poly(DiversityKind kind, int variant, int n, double delta);

/// P(tau_0) / c_0 of a certificate, computed from its exact zonal expansion.
Rational certificate_ratio(const CosSymPoly& p);

} // namespace ulp
