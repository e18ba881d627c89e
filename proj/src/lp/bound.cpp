#include "ulp/lp/bound.hpp"

#include "ulp/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ulp::lp {

std::string_view to_string(BoundStatus s) {
    switch (s) {
    case BoundStatus::Certified: return "CERTIFIED";
    case BoundStatus::NoBoundAtDegree: return "NO_BOUND_AT_DEGREE";
    case BoundStatus::Unverified: return "UNVERIFIED";
    }
    return "?";
}

int default_grid_resolution(int n) {
    switch (n) {
    case 1: return 1024;
    case 2: return 256;
    case 3: return 64;
    default: return 32;
    }
}

namespace {

constexpr double kGolden = 0.6180339887498949;
// Largest residual violation the final constant shift may absorb.
constexpr double kRepairCap = 1e-6;

// Row of t_mu(y) values for every basis element.
class ChebyshevRows {
public:
    explicit ChebyshevRows(const BasisData& b) : n_(b.n), degree_(b.degree) {
        perms_.reserve(b.partitions.size());
        for (const auto& mu : b.partitions) perms_.push_back(distinct_permutations(mu.padded(b.n)));
    }

    std::vector<double> operator()(std::span<const double> y) const {
        const std::size_t stride = static_cast<std::size_t>(degree_) + 1;
        std::vector<double> t(static_cast<std::size_t>(n_) * stride);
        for (int j = 0; j < n_; ++j) {
            double* row = t.data() + static_cast<std::size_t>(j) * stride;
            const double yj = y[static_cast<std::size_t>(j)];
            row[0] = 1.0;
            if (degree_ >= 1) row[1] = yj;
            for (int k = 2; k <= degree_; ++k) row[k] = 2.0 * yj * row[k - 1] - row[k - 2];
        }
        std::vector<double> out(perms_.size());
        for (std::size_t m = 0; m < perms_.size(); ++m) {
            double s = 0.0;
            for (const auto& sigma : perms_[m]) {
                double term = 1.0;
                for (int j = 0; j < n_; ++j)
                    term *= t[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
                s += term;
            }
            out[m] = s;
        }
        return out;
    }

private:
    int n_;
    int degree_;
    std::vector<std::vector<std::vector<int>>> perms_;
};

// Coordinate-wise golden-section ascent inside the region, starting at y.
double refine(const SymmetricTensorPoly& p, const Region& region, std::vector<double>& y, double h) {
    double best = p(y);
    for (int sweep = 0; sweep < 4; ++sweep) {
        for (int j = 0; j < region.n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            const Interval iv = coordinate_range(region, y, j);
            double a = std::max(iv.lo, y[uj] - 2 * h);
            double b = std::min(iv.hi, y[uj] + 2 * h);
            if (a > b) continue;
            auto f = [&](double t) {
                const double keep = y[uj];
                y[uj] = t;
                const double v = p(y);
                y[uj] = keep;
                return v;
            };
            double best_t = y[uj];
            double best_v = best;
            auto consider = [&](double t, double v) {
                if (v > best_v) {
                    best_v = v;
                    best_t = t;
                }
            };
            consider(a, f(a));
            consider(b, f(b));
            double c = b - kGolden * (b - a);
            double d = a + kGolden * (b - a);
            double fc = f(c), fd = f(d);
            for (int it = 0; it < 40 && b - a > 1e-13; ++it) {
                if (fc > fd) {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - kGolden * (b - a);
                    fc = f(c);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + kGolden * (b - a);
                    fd = f(d);
                }
            }
            consider(c, fc);
            consider(d, fd);
            y[uj] = best_t;
            best = best_v;
        }
    }
    return best;
}

void validate(const BoundQuery& q) {
    if (q.n < 1) throw std::invalid_argument("n must be positive");
    if (!(q.delta > 0.0 && q.delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
    if (q.degree < 1) throw std::invalid_argument("degree must be at least 1");
    if (q.grid_resolution != 0 && q.grid_resolution < 8) throw std::invalid_argument("grid resolution must be >= 8");
    if (q.max_rounds < 1) throw std::invalid_argument("max_rounds must be positive");
    if (q.slack < 0.0) throw std::invalid_argument("slack must be nonnegative");
    if (q.verify_resolution_factor < 1) throw std::invalid_argument("verification factor must be >= 1");
}

} // namespace

RegionMaximum maximize_on_region(const SymmetricTensorPoly& p, const Region& region, int resolution,
                                 double threshold, int max_violators) {
    const SortedGrid grid(region.n, resolution);
    const std::vector<double> values = p.evaluate(grid);

    std::vector<std::pair<double, std::size_t>> inside;
    RegionMaximum out;
    grid.for_each([&](std::size_t idx, std::span<const double> y) {
        if (!region.contains_cosines(y)) return;
        inside.emplace_back(values[idx], idx);
        if (values[idx] > out.value) {
            out.value = values[idx];
            out.point.assign(y.begin(), y.end());
        }
    });
    out.points_checked = inside.size();
    if (inside.empty()) return out;

    // Refine the largest well-separated grid values.
    const std::size_t pool = std::min(inside.size(), static_cast<std::size_t>(std::max(8, max_violators) * 8));
    std::partial_sort(inside.begin(), inside.begin() + static_cast<std::ptrdiff_t>(pool), inside.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    std::unordered_set<std::size_t> wanted;
    for (std::size_t i = 0; i < pool; ++i) wanted.insert(inside[i].second);
    std::unordered_map<std::size_t, std::vector<double>> coords;
    grid.for_each([&](std::size_t idx, std::span<const double> y) {
        if (wanted.count(idx)) coords.emplace(idx, std::vector<double>(y.begin(), y.end()));
    });

    const double h = grid.step();
    std::vector<std::vector<double>> seeds;
    for (std::size_t i = 0; i < pool && static_cast<int>(seeds.size()) < std::max(8, max_violators); ++i) {
        const auto& y = coords.at(inside[i].second);
        bool close = false;
        for (const auto& s : seeds) {
            double d = 0.0;
            for (std::size_t j = 0; j < y.size(); ++j) d = std::max(d, std::abs(y[j] - s[j]));
            if (d <= 2 * h + 1e-15) {
                close = true;
                break;
            }
        }
        if (!close) seeds.push_back(y);
    }

    for (auto& y : seeds) {
        const double v = refine(p, region, y, h);
        if (v > out.value) {
            out.value = v;
            out.point = y;
        }
        if (v > threshold && static_cast<int>(out.violators.size()) < max_violators) out.violators.push_back(y);
    }
    out.points_checked += seeds.size();
    return out;
}

double verify_certificate(const std::map<Partition, double>& coefficients, int n, DiversityKind kind, double delta,
                          int resolution) {
    int degree = 0;
    for (const auto& [mu, c] : coefficients) degree = std::max(degree, mu[0]);
    const SymmetricTensorPoly p(n, degree, AxisBasis::Power, coefficients);
    return maximize_on_region(p, Region{kind, delta, n}, resolution, 0.0, 16).value;
}

BoundResult lp_bound(const BoundQuery& q) {
    validate(q);
    return lp_bound(q, *shared_basis(q.n, q.degree));
}

BoundResult lp_bound(const BoundQuery& q, const BasisData& basis) {
    validate(q);
    if (basis.n != q.n || basis.degree != q.degree) throw std::invalid_argument("basis does not match the query");
    const int resolution = q.grid_resolution ? q.grid_resolution : default_grid_resolution(q.n);
    const Region region{q.kind, q.delta, q.n};
    const std::size_t cols = basis.partitions.size();
    const auto& z = basis.chebyshev_zonal;

    DualSimplex lp(basis.chebyshev_at_identity);
    std::vector<double> row(cols);
    auto zonal_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) row[j] = z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
        return std::span<const double>(row);
    };
    // The polished simplex leaves rows violated by at most polish_tol times
    // their max norm; a margin of twice that keeps every coefficient nonnegative.
    const double margin = 2.0 * SimplexOptions{}.polish_tol;
    for (std::size_t r : basis.constraint_rows) {
        const auto a = zonal_row(r);
        double maxabs = 0.0;
        for (double v : a) maxabs = std::max(maxabs, std::abs(v));
        lp.add_constraint(a, Relation::GreaterEqual, margin * maxabs);
    }
    lp.add_constraint(zonal_row(basis.trivial_index), Relation::Equal, 1.0);

    const ChebyshevRows rows(basis);
    for (const auto& y : sample_region(q.n, q.kind, q.delta, resolution))
        lp.add_constraint(rows(y), Relation::LessEqual, -q.slack);

    BoundResult res;
    std::vector<double> b;
    std::vector<Rational> a;        // exact monomial coefficients of the current solution
    std::vector<Rational> zonal;    // exact zonal coefficients, aligned with zonal_indices
    auto exact_expansion = [&] {
        a = chebyshev_to_monomial(basis, b);
        zonal.assign(basis.zonal_indices.size(), Rational(0));
        for (std::size_t i = 0; i < basis.zonal_indices.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (basis.M[i][j] != 0 && a[j] != 0) zonal[i] += basis.M[i][j] * a[j];
    };
    // Canonical constraint row of each zonal index (conjugates share one row).
    std::vector<std::size_t> row_of(basis.zonal_indices.size(), basis.trivial_index);
    for (std::size_t r : basis.constraint_rows) {
        row_of[r] = r;
        row_of[basis.index_of(basis.zonal_indices[r].conjugate())] = r;
    }
    const double strong_margin = 2.0 * SimplexOptions{}.optimality_tol;

    bool verified = false;
    bool nonnegative = false;
    const int fine = (resolution - 1) * q.verify_resolution_factor + 1;
    for (int round = 1; round <= q.max_rounds; ++round) {
        const LpSolution sol = lp.solve();
        res.verification.rounds = round;
        res.verification.lp_iterations += sol.iterations;
        if (sol.status == LpStatus::Infeasible) {
            res.status = BoundStatus::NoBoundAtDegree;
            res.bound = std::numeric_limits<double>::infinity();
            return res;
        }
        if (sol.status == LpStatus::Unbounded) throw SimplexError("LP reported an unbounded objective");
        b = sol.x;

        std::map<Partition, double> cheb;
        for (std::size_t j = 0; j < cols; ++j)
            if (b[j] != 0.0) cheb.emplace(basis.partitions[j], b[j]);
        const SymmetricTensorPoly p(q.n, q.degree, AxisBasis::Chebyshev, cheb);
        const RegionMaximum m = maximize_on_region(p, region, fine, q.slack, q.max_cuts_per_round);
        res.verification.max_violation = m.value;
        res.verification.points_checked = m.points_checked;
        verified = m.value <= q.slack;
        if (!verified) {
            if (m.violators.empty()) break;
            // Cuts from the previous round moved nothing: the solution is stuck.
            if (round > 1 && sol.iterations == 0) break;
            for (const auto& y : m.violators) lp.add_constraint(rows(y), Relation::LessEqual, -q.slack);
            continue;
        }

        // Region check passed; now the exact zonal signs. Rows that came out
        // negative within solver tolerance are re-imposed with a wider margin.
        exact_expansion();
        std::set<std::size_t> weak;
        for (std::size_t i = 0; i < zonal.size(); ++i)
            if (i != basis.trivial_index && zonal[i] < 0) weak.insert(row_of[i]);
        nonnegative = weak.empty();
        if (nonnegative) break;
        for (std::size_t r : weak) {
            const auto row_r = zonal_row(r);
            double maxabs = 0.0;
            for (double v : row_r) maxabs = std::max(maxabs, std::abs(v));
            lp.add_constraint(row_r, Relation::GreaterEqual, strong_margin * maxabs);
        }
    }
    if (a.empty() || !verified) exact_expansion();

    // A residual violation at the solver's feasibility level survives further
    // cuts. Lowering the constant term by (violation + slack) and rescaling to
    // c_0 = 1 repairs it exactly; only the trivial coefficient changes.
    const double residual = res.verification.max_violation;
    if (!verified && residual > q.slack && residual <= kRepairCap) {
        const Rational shift = exact_rational(residual + q.slack);
        a[0] -= shift;  // partitions[0] is the empty partition, m = 1
        zonal[basis.trivial_index] -= shift;
        const Rational c0 = zonal[basis.trivial_index];
        if (c0 > 0) {
            for (auto& v : a) v /= c0;
            for (auto& v : zonal) v /= c0;
            res.verification.max_violation = to_double((exact_rational(residual) - shift) / c0);
            verified = true;
        }
    }

    // Report the polynomial exactly as represented by the double coefficients.
    for (std::size_t j = 0; j < cols; ++j)
        if (a[j] != 0) res.coefficients.emplace(basis.partitions[j], to_double(a[j]));
    Rational value = 0;
    Rational min_coeff = 0;
    for (std::size_t i = 0; i < zonal.size(); ++i) {
        if (zonal[i] == 0) continue;
        res.zonal_coefficients.emplace(basis.zonal_indices[i], to_double(zonal[i]));
        value += zonal[i] * Rational(static_cast<long>(basis.dims[i]));
        if (i != basis.trivial_index && zonal[i] < min_coeff) min_coeff = zonal[i];
    }
    const Rational& c0 = zonal[basis.trivial_index];
    res.bound = c0 > 0 ? to_double(value / c0) : std::numeric_limits<double>::infinity();
    nonnegative = to_double(min_coeff) >= -1e-12;
    res.status = verified && nonnegative && c0 > 0 ? BoundStatus::Certified : BoundStatus::Unverified;
    return res;
}

DiversityResult diversity_for_cardinality(const DiversityQuery& q) {
    if (!(q.cardinality >= 2.0)) throw std::invalid_argument("cardinality must be at least 2");
    if (!(q.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto basis = shared_basis(q.n, q.degree);

    DiversityResult out;
    auto evaluate = [&](double delta) {
        BoundQuery bq;
        bq.n = q.n;
        bq.kind = q.kind;
        bq.delta = delta;
        bq.degree = q.degree;
        bq.grid_resolution = q.grid_resolution;
        bq.slack = q.slack;
        BoundResult r = lp_bound(bq, *basis);
        out.evaluations.push_back({delta, r.bound, r.status});
        return r;
    };
    auto holds = [&](const BoundResult& r) { return r.status == BoundStatus::Certified && r.bound <= q.cardinality; };

    std::optional<BoundResult> at_hi;
    if (!q.known_feasible) {
        BoundResult r = evaluate(1.0);
        if (!holds(r)) {
            out.delta = 1.0;
            out.bound_at_delta = r.bound;
            out.status = r.status;
            return out;
        }
        at_hi = std::move(r);
    }
    // Dyadic bisection of (0, 1]: the midpoints depend only on the outcomes.
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > q.tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (q.known_feasible && mid >= *q.known_feasible) {
            hi = mid;
            at_hi.reset();
            continue;
        }
        BoundResult r = evaluate(mid);
        if (holds(r)) {
            hi = mid;
            at_hi = std::move(r);
        } else {
            lo = mid;
        }
    }
    if (!at_hi) at_hi = evaluate(hi);
    out.delta = hi;
    out.bound_at_delta = at_hi->bound;
    out.status = at_hi->status;
    return out;
}

} // namespace ulp::lp
