// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass criterion numbers as arguments to run a subset.

#include "oracles.hpp"

#include "ulp/analytic.hpp"
#include "ulp/lp/bound.hpp"
#include "ulp/partition.hpp"
#include "ulp/sympoly.hpp"
#include "ulp/zonal.hpp"

#include "reference_tables.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

using namespace ulp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

// ---------------------------------------------------------------------------

void kostka_oracle(Verdict& v) {
    const auto t0 = Clock::now();
    std::size_t pairs = 0;
    for (int d = 0; d <= 6; ++d) {
        const auto parts = partitions_of(d, d);
        for (const auto& lam : parts)
            for (const auto& mu : parts) {
                ++pairs;
                const auto got = kostka(lam, mu), expect = oracle::kostka_brute(lam, mu);
                if (got != expect) v.fail("K(" + lam.to_string() + ", " + mu.to_string() + ")");
            }
    }
    const double secs = seconds_since(t0);
    if (secs >= 10.0) v.fail("runtime");
    v.detail << pairs << " pairs in " << secs << " s";
}

// det(x_j^(k_i + n - i)) / det(x_j^(n - i)) with x_j = e^{i theta_j}.
std::complex<double> bialternant(const Signature& k, const std::vector<double>& th) {
    const int n = k.n();
    Eigen::MatrixXcd num(n, n), den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double t = th[static_cast<std::size_t>(j)];
            num(i, j) = std::polar(1.0, (k[static_cast<std::size_t>(i)] + n - 1 - i) * t);
            den(i, j) = std::polar(1.0, (n - 1 - i) * t);
        }
    return num.determinant() / den.determinant();
}

void schur_oracle(Verdict& v) {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 2 ? 3 : 2;
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = entry(rng);
        std::sort(e.rbegin(), e.rend());
        const Signature k(e);
        std::vector<double> th(static_cast<std::size_t>(n));
        bool separated = false;
        while (!separated) {
            for (auto& t : th) t = angle(rng);
            separated = true;
            for (std::size_t i = 0; i < th.size(); ++i)
                for (std::size_t j = i + 1; j < th.size(); ++j)
                    if (std::abs(std::remainder(th[i] - th[j], 2 * std::numbers::pi)) < 0.05) separated = false;
        }
        const auto lhs = schur_laurent(k).evaluate(th);
        const auto rhs = bialternant(k, th);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    if (worst > 1e-10) v.fail("relative error");
    v.detail << "100 signatures, worst relative error " << worst;
}

void lemma(Verdict& v) {
    const auto t0 = Clock::now();
    for (int n = 2; n <= 5; ++n)
        for (QName q : kAllQNames)
            if (!zonal_expansion(q_polynomial_truncated(q, n)).all_nonnegative())
                v.fail(std::string(to_string(q)) + " at n=" + std::to_string(n));
    const double secs = seconds_since(t0);
    if (secs >= 30.0) v.fail("runtime");
    v.detail << "7 polynomials x n=2..5 in " << secs << " s";
}

void positivity(Verdict& v) {
    int checked = 0;
    double worst = INFINITY;
    for (int d = 0; d <= 3; ++d)
        for (const auto& lam : partitions_of(d, 2))
            for (int s = -1; s <= 1; ++s) {
                const auto kappa = Signature::from_partition(lam, s, 2);
                const auto rep = empirical_positivity(character_real_part(kappa), 2, 50, 8, 1000 + checked);
                ++checked;
                worst = std::min(worst, rep.worst_relative);
                if (!rep.passes()) v.fail(kappa.to_string());
            }
    v.detail << checked << " zonal indices, worst value/scale " << worst;
}

void analytic_forms(Verdict& v) {
    int cases = 0;
    double worst = 0;
    for (auto kind : {DiversityKind::Sum, DiversityKind::Product})
        for (int variant = 1; variant <= 3; ++variant)
            for (int n = 2; n <= 4; ++n) {
                const auto b = analytic_bound(kind, variant, n);
                if (!b) continue;
                ++cases;
                for (int k = 1; k <= 50; ++k) {
                    const double q = b->applicable_from + (1.0 - b->applicable_from) * k / 50.0;
                    const double delta = std::sqrt(q);
                    const auto closed = kind == DiversityKind::Sum ? bound_sum(n, delta, variant)
                                                                   : bound_product(n, delta, variant);
                    if (!closed) {
                        v.fail("not applicable inside its range");
                        continue;
                    }
                    const double ratio = to_double(certificate_ratio(certificate_poly(kind, variant, n, delta)));
                    const double rel = std::abs(ratio - *closed) / std::abs(*closed);
                    worst = std::max(worst, rel);
                    if (rel > 1e-9) v.fail(std::string(to_string(kind)) + " variant " + std::to_string(variant));
                }
            }
    auto spot = [&](std::optional<double> got, double expect, const char* what) {
        if (!got || std::abs(*got - expect) > 1e-9) v.fail(what);
    };
    for (int n = 2; n <= 4; ++n) {
        spot(bound_sum(n, std::sqrt(0.6), 1), 6, "sum variant 1 spot");
        spot(bound_product(n, std::sqrt(0.6), 1), 6, "product variant 1 spot");
    }
    spot(bound_sum(2, std::sqrt(0.5), 3), 16, "sum variant 3 spot");
    spot(bound_product(2, std::sqrt(0.5), 3), 8, "product variant 3 spot");
    v.detail << cases << " (kind, variant, n) cases x 50 points, worst relative gap " << worst;
}

void lp_vs_analytic(Verdict& v) {
    constexpr int kDegree = 4;
    int compared = 0;
    double worst = -INFINITY;
    for (int n = 2; n <= 3; ++n)
        for (auto kind : {DiversityKind::Sum, DiversityKind::Product})
            for (int k = 0; k < 20; ++k) {
                const double delta = 0.72 + 0.014 * k;
                lp::BoundQuery q;
                q.n = n;
                q.kind = kind;
                q.delta = delta;
                q.degree = kDegree;
                q.slack = 1e-9;
                std::optional<lp::BoundResult> r;
                for (int variant = 1; variant <= 3; ++variant) {
                    const auto b = analytic_bound(kind, variant, n);
                    if (!b || b->certificate_degree > kDegree || !b->applies(delta * delta)) continue;
                    if (!r) r = lp::lp_bound(q);
                    const double a = b->value(delta * delta);
                    std::ostringstream tag;
                    tag << "n=" << n << ' ' << to_string(kind) << " v" << variant << " delta=" << delta;
                    if (r->status != lp::BoundStatus::Certified) {
                        v.fail(tag.str() + " not certified");
                        continue;
                    }
                    ++compared;
                    worst = std::max(worst, r->bound - a);
                    if (r->bound > a + 1e-6) v.fail(tag.str());
                }
            }
    v.detail << compared << " comparisons at D=" << kDegree << ", max(LP - analytic) " << worst;
}

// Table runs shared by criteria 7, 8, 9 and 11.
struct TableRun {
    const cli::ReferenceTable* ref = nullptr;
    std::vector<double> sigma, pi;
    std::vector<lp::DiversityResult> sigma_runs, pi_runs;
    double seconds = 0;
};

TableRun run_table(const char* id) {
    TableRun t;
    t.ref = cli::find_reference_table(id);
    const auto t0 = Clock::now();
    std::optional<double> hint_s, hint_p;
    for (const auto& row : t.ref->rows) {
        for (auto kind : {DiversityKind::Sum, DiversityKind::Product}) {
            lp::DiversityQuery q;
            q.n = t.ref->n;
            q.kind = kind;
            q.cardinality = row.cardinality;
            q.degree = t.ref->degree;
            auto& hint = kind == DiversityKind::Sum ? hint_s : hint_p;
            q.known_feasible = hint;
            const auto r = lp::diversity_for_cardinality(q);
            if (r.status == lp::BoundStatus::Certified && r.delta < 1.0) hint = r.delta;
            (kind == DiversityKind::Sum ? t.sigma : t.pi).push_back(r.delta);
            (kind == DiversityKind::Sum ? t.sigma_runs : t.pi_runs).push_back(r);
            std::printf("  table %s N=%d %s: %.4f (printed %.4f)\n", id, row.cardinality,
                        std::string(to_string(kind)).c_str(), r.delta,
                        kind == DiversityKind::Sum ? row.lp_d_sigma : row.lp_d_pi);
            std::fflush(stdout);
        }
    }
    t.seconds = seconds_since(t0);
    return t;
}

void table_match(Verdict& v, const TableRun& t, double tol, double budget) {
    double worst = 0;
    for (std::size_t i = 0; i < t.ref->rows.size(); ++i) {
        const auto& row = t.ref->rows[i];
        const double ds = std::abs(t.sigma[i] - row.lp_d_sigma), dp = std::abs(t.pi[i] - row.lp_d_pi);
        worst = std::max({worst, ds, dp});
        if (ds > tol) v.fail("sigma N=" + std::to_string(row.cardinality));
        if (dp > tol) v.fail("pi N=" + std::to_string(row.cardinality));
        if (t.sigma_runs[i].status != lp::BoundStatus::Certified ||
            t.pi_runs[i].status != lp::BoundStatus::Certified)
            v.fail("uncertified N=" + std::to_string(row.cardinality));
    }
    if (t.seconds > budget) v.fail("runtime");
    v.detail << "max |computed - printed| " << worst << " in " << t.seconds << " s";
}

void monotonicity(Verdict& v, const std::vector<const TableRun*>& runs) {
    int bound_pairs = 0, degree_pairs = 0;
    double worst_degree = -INFINITY;
    for (const TableRun* t : runs) {
        const int n = t->ref->n, D = t->ref->degree;
        for (auto kind : {DiversityKind::Sum, DiversityKind::Product}) {
            const auto& deltas = kind == DiversityKind::Sum ? t->sigma : t->pi;
            const auto& results = kind == DiversityKind::Sum ? t->sigma_runs : t->pi_runs;
            const std::string tag = "n=" + std::to_string(n) + " " + std::string(to_string(kind));
            for (std::size_t i = 1; i < deltas.size(); ++i)
                if (deltas[i] > deltas[i - 1]) v.fail(tag + " delta*(N) increases");

            // Every certified bound evaluated during the bisections, ordered by delta.
            std::map<double, double> by_delta;
            for (const auto& r : results)
                for (const auto& e : r.evaluations)
                    if (e.status == lp::BoundStatus::Certified) by_delta[e.delta] = e.bound;
            double prev = INFINITY;
            for (const auto& [d, b] : by_delta) {
                ++bound_pairs;
                if (b > prev * (1 + 1e-9) + 1e-6) v.fail(tag + " bound increases at delta=" + std::to_string(d));
                prev = b;
            }

            // One degree lower at every delta* the table reports.
            for (std::size_t i = 0; i < results.size(); ++i) {
                if (results[i].status != lp::BoundStatus::Certified || results[i].delta >= 1.0) continue;
                lp::BoundQuery q;
                q.n = n;
                q.kind = kind;
                q.delta = results[i].delta;
                q.degree = D - 1;
                const auto lower = lp::lp_bound(q);
                if (lower.status != lp::BoundStatus::Certified) continue;  // no bound at D-1: nothing to compare
                ++degree_pairs;
                const double gap = results[i].bound_at_delta - lower.bound;
                worst_degree = std::max(worst_degree, gap);
                if (gap > 1e-6) v.fail(tag + " degree D beats D-1 at delta=" + std::to_string(q.delta));
            }
        }
    }
    v.detail << bound_pairs << " bounds ordered by delta, " << degree_pairs
             << " degree pairs, max(bound_D - bound_{D-1}) " << worst_degree;
}

void achievability(Verdict& v) {
    double worst = INFINITY;
    for (int N = 2; N <= 12; ++N) {
        lp::DiversityQuery q;
        q.n = 1;
        q.kind = DiversityKind::Sum;
        q.cardinality = N;
        q.degree = 12;
        const auto r = lp::diversity_for_cardinality(q);
        const double margin = r.delta - std::sin(std::numbers::pi / N);
        worst = std::min(worst, margin);
        if (margin < -5e-4) v.fail("N=" + std::to_string(N));
    }
    v.detail << "N=2..12, min(delta* - sin(pi/N)) " << worst;
}

void gap(Verdict& v, const TableRun& t) {
    double smallest = INFINITY;
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
        smallest = std::min(smallest, t.sigma[i] - t.pi[i]);
        if (!(t.pi[i] < t.sigma[i])) v.fail("N=" + std::to_string(t.ref->rows[i].cardinality));
    }
    v.detail << "min(delta*_sigma - delta*_pi) " << smallest;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
    auto want = [&](int c) { return wanted.empty() || wanted.count(c) > 0; };

    bool all = true;
    auto report = [&](int id, const char* name, const std::function<void(Verdict&)>& body) {
        if (!want(id)) return;
        Verdict v;
        try {
            body(v);
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        all = all && v.pass;
        std::printf("criterion %2d %-28s %s  (%s)\n", id, name, v.pass ? "PASS" : "FAIL", v.detail.str().c_str());
        std::fflush(stdout);
    };

    report(1, "kostka-oracle", kostka_oracle);
    report(2, "schur-oracle", schur_oracle);
    report(3, "q-polynomial-expansions", lemma);
    report(4, "zonal-positivity", positivity);
    report(5, "analytic-closed-forms", analytic_forms);
    report(6, "lp-vs-analytic", lp_vs_analytic);

    std::optional<TableRun> t1, t2;
    std::string table_error;
    auto guarded = [&](std::optional<TableRun>& t, const char* id) {
        try {
            t = run_table(id);
        } catch (const std::exception& e) {
            table_error += std::string("table ") + id + ": " + e.what() + "; ";
        }
    };
    if (want(7) || want(9) || want(11)) guarded(t1, "I");
    if (want(8) || want(9)) guarded(t2, "II");
    auto need = [&](std::initializer_list<const std::optional<TableRun>*> ts) {
        for (const auto* t : ts)
            if (!t->has_value()) throw std::runtime_error("table run failed: " + table_error);
    };
    report(7, "table-I", [&](Verdict& v) {
        need({&t1});
        table_match(v, *t1, 0.01, 30 * 60);
    });
    report(8, "table-II", [&](Verdict& v) {
        need({&t2});
        table_match(v, *t2, 0.015, 60 * 60);
    });
    report(9, "monotonicity", [&](Verdict& v) {
        need({&t1, &t2});
        monotonicity(v, {&*t1, &*t2});
    });
    report(10, "n1-achievability", achievability);
    report(11, "sum-product-gap", [&](Verdict& v) {
        need({&t1});
        gap(v, *t1);
    });

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
