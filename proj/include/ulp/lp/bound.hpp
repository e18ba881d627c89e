#pragma once

#include "ulp/lp/basis.hpp"
#include "ulp/lp/grid.hpp"
#include "ulp/zonal.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace ulp::lp {

/// Grid resolution used when a query leaves it at 0.
int default_grid_resolution(int n);

struct BoundQuery {
    int n = 2;
    DiversityKind kind = DiversityKind::Sum;
    double delta = 0.5;
    int degree = 19;
    int grid_resolution = 0;       // 0: default_grid_resolution(n)
    double slack = 1e-7;           // P <= -slack at sample points
    int verify_resolution_factor = 4;  // verification grid refines by this factor
    int max_rounds = 20;
    int max_cuts_per_round = 200;
};

enum class BoundStatus { Certified, NoBoundAtDegree, Unverified };

std::string_view to_string(BoundStatus s);

struct Verification {
    double max_violation = 0.0;    // max of P over the verification points and refinements
    std::size_t points_checked = 0;
    int rounds = 0;
    int lp_iterations = 0;
};

struct BoundResult {
    BoundStatus status = BoundStatus::NoBoundAtDegree;
    double bound = 0.0;                              // P(tau_0) / c_0; +inf without a bound
    std::map<Partition, double> coefficients;        // in m_mu
    std::map<Signature, double> zonal_coefficients;  // exact expansion of the reported P, rounded
    Verification verification;
};

/// Delsarte LP bound on codes in U(n) with minimum diversity delta.
BoundResult lp_bound(const BoundQuery& q);
BoundResult lp_bound(const BoundQuery& q, const BasisData& basis);

/// Maximum of P over the region, from a grid pass at `resolution` plus local
/// refinement of the largest values. Returns the maximizing y as well.
struct RegionMaximum {
    double value = -1e300;
    std::vector<double> point;
    std::size_t points_checked = 0;
    std::vector<std::vector<double>> violators;  // refined points with P > threshold
};

RegionMaximum maximize_on_region(const SymmetricTensorPoly& p, const Region& region, int resolution,
                                 double threshold, int max_violators);

/// Maximum of a monomial-basis polynomial over the region (grid at
/// `resolution` plus refinement). A certificate passes when this is <= slack.
double verify_certificate(const std::map<Partition, double>& coefficients, int n, DiversityKind kind, double delta,
                          int resolution);

struct DiversityQuery {
    int n = 2;
    DiversityKind kind = DiversityKind::Sum;
    double cardinality = 24;
    int degree = 19;
    int grid_resolution = 0;
    double slack = 1e-7;
    double tolerance = 5e-4;
    // A delta already known to certify a bound <= cardinality (for example the
    // answer for a smaller N). Midpoints at or above it are accepted without a
    // solve; the bisection path is otherwise unchanged.
    std::optional<double> known_feasible;
};

struct Evaluation {
    double delta = 0.0;
    double bound = 0.0;
    BoundStatus status = BoundStatus::NoBoundAtDegree;
};

struct DiversityResult {
    double delta = 1.0;            // smallest delta (within tolerance) whose bound is <= N
    double bound_at_delta = 0.0;
    BoundStatus status = BoundStatus::NoBoundAtDegree;
    std::vector<Evaluation> evaluations;  // one per solve, in bisection order
};

/// Upper bound on the minimum diversity of any code of size N, by bisection on delta.
DiversityResult diversity_for_cardinality(const DiversityQuery& q);

} // namespace ulp::lp
