#include "cli.hpp"

#include "reference_tables.hpp"

#include "ulp/lp/bound.hpp"
#include "ulp/lp/simplex.hpp"
#include "ulp/parallel.hpp"
#include "ulp/zonal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ulp::cli {

using nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_value(const std::string& key, const std::string& text) {
    std::istringstream is(text);
    T v{};
    is >> v;
    if (is.fail() || !is.eof()) throw std::invalid_argument("bad value for " + key + ": '" + text + "'");
    return v;
}

std::string fixed6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["grid_resolution"] = c.grid_resolution;
    j["slack"] = c.slack;
    j["verify_resolution_factor"] = c.verify_resolution_factor;
    j["max_rounds"] = c.max_rounds;
    j["seed"] = c.seed;
    return j;
}

int exit_for(lp::BoundStatus s) {
    switch (s) {
    case lp::BoundStatus::Certified: return kOk;
    case lp::BoundStatus::NoBoundAtDegree: return kNoBound;
    case lp::BoundStatus::Unverified: return kUnverified;
    }
    return kUsage;
}

lp::BoundQuery make_query(const RunConfig& c, int n, DiversityKind kind, double delta, int degree) {
    lp::BoundQuery q;
    q.n = n;
    q.kind = kind;
    q.delta = delta;
    q.degree = degree;
    q.grid_resolution = c.grid_resolution;
    q.slack = c.slack;
    q.verify_resolution_factor = c.verify_resolution_factor;
    q.max_rounds = c.max_rounds;
    return q;
}

lp::DiversityQuery make_diversity(const RunConfig& c, int n, DiversityKind kind, double cardinality, int degree) {
    lp::DiversityQuery q;
    q.n = n;
    q.kind = kind;
    q.cardinality = cardinality;
    q.degree = degree;
    q.grid_resolution = c.grid_resolution;
    q.slack = c.slack;
    return q;
}

// {2, 3} * 2^k inside [nmin, nmax], plus both endpoints.
std::vector<int> cardinality_ladder(int nmin, int nmax) {
    std::set<int> out{nmin, nmax};
    for (long p = 1; 2 * p <= nmax; p *= 2)
        for (long m : {2L, 3L})
            if (m * p >= nmin && m * p <= nmax) out.insert(static_cast<int>(m * p));
    return {out.begin(), out.end()};
}

struct Globals {
    std::string config_path;
    bool json = false;
    int threads = 0;
    ConfigOverrides overrides;
};

RunConfig effective_config(const Globals& g) {
    RunConfig c;
    if (!g.config_path.empty()) c = load_config_file(g.config_path, c);
    return apply_overrides(c, g.overrides);
}

// Subcommand handlers -------------------------------------------------------

struct BoundArgs {
    int n = 2;
    std::string kind = "sum";
    double delta = 0.5;
    int degree = 19;
};

int cmd_bound(const BoundArgs& a, const RunConfig& cfg, bool json, std::ostream& out) {
    const auto r = lp::lp_bound(make_query(cfg, a.n, parse_diversity_kind(a.kind), a.delta, a.degree));
    if (json) {
        ordered_json j;
        j["bound"] = finite_or_null(r.bound);
        j["status"] = std::string(lp::to_string(r.status));
        ordered_json coeffs = ordered_json::object();
        for (const auto& [mu, c] : r.coefficients) coeffs[mu.to_string()] = c;
        j["coefficients"] = coeffs;
        ordered_json zonal = ordered_json::object();
        for (const auto& [k, c] : r.zonal_coefficients) zonal[k.to_string()] = c;
        j["zonal_coefficients"] = zonal;
        j["verification"] = {{"max_violation", r.verification.max_violation},
                             {"points_checked", r.verification.points_checked},
                             {"rounds", r.verification.rounds}};
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    } else {
        out << "status: " << lp::to_string(r.status) << '\n';
        out << "bound: " << fixed6(r.bound) << '\n';
        out << "max_violation: " << sci(r.verification.max_violation) << '\n';
        out << "points_checked: " << r.verification.points_checked << '\n';
        out << "rounds: " << r.verification.rounds << '\n';
        out << "coefficients:\n";
        for (const auto& [mu, c] : r.coefficients) out << "  " << mu.to_string() << ' ' << fixed6(c) << '\n';
        out << "zonal_coefficients:\n";
        for (const auto& [k, c] : r.zonal_coefficients) out << "  " << k.to_string() << ' ' << fixed6(c) << '\n';
    }
    return exit_for(r.status);
}

struct DiversityArgs {
    int n = 2;
    std::string kind = "sum";
    int cardinality = 24;
    int degree = 19;
};

int cmd_diversity(const DiversityArgs& a, const RunConfig& cfg, bool json, std::ostream& out) {
    const auto r = lp::diversity_for_cardinality(
        make_diversity(cfg, a.n, parse_diversity_kind(a.kind), a.cardinality, a.degree));
    if (json) {
        ordered_json j;
        j["delta"] = r.delta;
        j["bound_at_delta"] = finite_or_null(r.bound_at_delta);
        j["status"] = std::string(lp::to_string(r.status));
        ordered_json evals = ordered_json::array();
        for (const auto& e : r.evaluations)
            evals.push_back({{"delta", e.delta},
                             {"bound", finite_or_null(e.bound)},
                             {"status", std::string(lp::to_string(e.status))}});
        j["evaluations"] = evals;
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    } else {
        out << "delta: " << fixed4(r.delta) << '\n';
        out << "bound_at_delta: " << fixed6(r.bound_at_delta) << '\n';
        out << "status: " << lp::to_string(r.status) << '\n';
    }
    return exit_for(r.status);
}

struct TableArgs {
    std::string which;
    std::optional<int> degree;
};

int cmd_table(const TableArgs& a, const RunConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
    const ReferenceTable* t = find_reference_table(a.which);
    if (!t) {
        err << "unknown table '" << a.which << "' (expected I or II)\n";
        return kUsage;
    }
    const int degree = a.degree.value_or(t->degree);

    struct Row {
        int n;
        double sigma;
        double pi;
    };
    std::vector<Row> rows;
    std::optional<double> prev_sigma, prev_pi;
    for (const auto& ref : t->rows) {
        auto qs = make_diversity(cfg, t->n, DiversityKind::Sum, ref.cardinality, degree);
        qs.known_feasible = prev_sigma;
        auto qp = make_diversity(cfg, t->n, DiversityKind::Product, ref.cardinality, degree);
        qp.known_feasible = prev_pi;
        const auto s = lp::diversity_for_cardinality(qs);
        const auto p = lp::diversity_for_cardinality(qp);
        // A certified delta for N also certifies every larger N.
        if (s.status == lp::BoundStatus::Certified && s.delta < 1.0) prev_sigma = s.delta;
        if (p.status == lp::BoundStatus::Certified && p.delta < 1.0) prev_pi = p.delta;
        rows.push_back({ref.cardinality, s.delta, p.delta});
    }

    if (json) {
        ordered_json j;
        j["table"] = t->id;
        j["n"] = t->n;
        j["degree"] = degree;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& ref = t->rows[i];
            ordered_json r;
            r["N"] = rows[i].n;
            r["lp_d_sigma"] = rows[i].sigma;
            r["lp_d_pi"] = rows[i].pi;
            r["paper_d_sigma"] = ref.lp_d_sigma;
            r["paper_d_pi"] = ref.lp_d_pi;
            ordered_json prior = ordered_json::object();
            if (ref.recite) prior["recite"] = *ref.recite;
            if (ref.b1) prior["b1"] = *ref.b1;
            if (ref.b2) prior["b2"] = *ref.b2;
            r["prior_work"] = prior;
            arr.push_back(r);
        }
        j["rows"] = arr;
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    } else {
        out << "N,lp_d_sigma,lp_d_pi,paper_d_sigma,paper_d_pi\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            out << rows[i].n << ',' << fixed6(rows[i].sigma) << ',' << fixed6(rows[i].pi) << ','
                << fixed6(t->rows[i].lp_d_sigma) << ',' << fixed6(t->rows[i].lp_d_pi) << '\n';
    }
    return kOk;
}

struct CurveArgs {
    int n = 2;
    std::string kind = "sum";
    int degree = 19;
    int nmin = 8;
    int nmax = 1024;
    std::string out;
};

int cmd_curve(const CurveArgs& a, const RunConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
    if (a.nmin < 2 || a.nmin > a.nmax) {
        err << "need 2 <= nmin <= nmax\n";
        return kUsage;
    }
    const DiversityKind kind = parse_diversity_kind(a.kind);
    std::ofstream file(a.out, std::ios::binary);
    if (!file) {
        err << "cannot write " << a.out << '\n';
        return kUsage;
    }
    file << "N,delta_bound\n";
    ordered_json points = ordered_json::array();
    std::optional<double> prev;
    for (int N : cardinality_ladder(a.nmin, a.nmax)) {
        auto q = make_diversity(cfg, a.n, kind, N, a.degree);
        q.known_feasible = prev;
        const auto r = lp::diversity_for_cardinality(q);
        if (r.status == lp::BoundStatus::Certified && r.delta < 1.0) prev = r.delta;
        file << N << ',' << fixed6(r.delta) << '\n';
        points.push_back({{"N", N}, {"delta_bound", r.delta}});
    }
    file.close();
    if (!file) {
        err << "failed writing " << a.out << '\n';
        return kUsage;
    }
    if (json) {
        ordered_json j;
        j["out"] = a.out;
        j["points"] = points;
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    } else {
        out << "wrote " << points.size() << " rows to " << a.out << '\n';
    }
    return kOk;
}

int cmd_verify_lemma(int n, const RunConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
    if (n < 2) {
        err << "verify-lemma: n >= 2 required\n";
        return kUsage;
    }
    bool all = true;
    ordered_json polys = ordered_json::array();
    for (QName q : kAllQNames) {
        const auto e = zonal_expansion(q_polynomial_truncated(q, n));
        const bool pass = e.all_nonnegative();
        all = all && pass;
        if (json) {
            ordered_json coeffs = ordered_json::object();
            for (const auto& [k, c] : e.coeffs) coeffs[k.to_string()] = to_string(c);
            polys.push_back({{"name", std::string(to_string(q))}, {"pass", pass}, {"expansion", coeffs}});
        } else {
            out << to_string(q) << ": " << (pass ? "PASS" : "FAIL") << '\n';
            for (const auto& [k, c] : e.coeffs) out << "  " << k.to_string() << ' ' << to_string(c) << '\n';
        }
    }
    if (json) {
        ordered_json j;
        j["n"] = n;
        j["polynomials"] = polys;
        j["pass"] = all;
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    }
    return all ? kOk : kCheckFailed;
}

struct PositivityArgs {
    int n = 2;
    std::string lambda;
    int s = 0;
    int trials = 50;
    int size = 8;
    std::optional<std::uint64_t> seed;
    bool negate = false;
};

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        cur = trim(cur);
        if (cur.empty()) continue;
        const int v = parse_value<int>("lambda", cur);
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (!parts.empty() && v > parts.back()) throw std::invalid_argument("partition parts must be nonincreasing");
        parts.push_back(v);
    }
    return Partition(parts);
}

int cmd_positivity(const PositivityArgs& a, RunConfig cfg, bool json, std::ostream& out) {
    if (a.seed) cfg.seed = *a.seed;
    if (a.n < 1) throw std::invalid_argument("n must be positive");
    if (a.trials < 1 || a.size < 1) throw std::invalid_argument("trials and size must be positive");
    const Partition lambda = parse_partition(a.lambda);
    const Signature kappa = Signature::from_partition(lambda, a.s, a.n);
    ClassFunction f = character_real_part(kappa);
    if (a.negate) f = [g = std::move(f)](const OrbitPoint& t) { return -g(t); };
    const auto rep = empirical_positivity(f, a.n, a.trials, a.size, cfg.seed);
    const bool pass = rep.passes();
    if (json) {
        ordered_json j;
        j["n"] = a.n;
        j["signature"] = kappa.to_string();
        j["negated"] = a.negate;
        j["trials"] = rep.trials;
        j["size"] = a.size;
        j["min_value"] = rep.min_value;
        j["scale_at_min"] = rep.scale_at_min;
        j["worst_relative"] = rep.worst_relative;
        j["pass"] = pass;
        j["config"] = config_json(cfg);
        out << j.dump(2) << '\n';
    } else {
        out << "signature: " << kappa.to_string() << (a.negate ? " (negated)" : "") << '\n';
        out << "trials: " << rep.trials << '\n';
        out << "min_value: " << sci(rep.min_value) << '\n';
        out << "scale_at_min: " << sci(rep.scale_at_min) << '\n';
        out << "worst_relative: " << sci(rep.worst_relative) << '\n';
        out << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kOk : kCheckFailed;
}

} // namespace

RunConfig parse_config(std::istream& in, RunConfig c) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "grid_resolution") c.grid_resolution = parse_value<int>(key, value);
        else if (key == "slack") c.slack = parse_value<double>(key, value);
        else if (key == "verify_resolution_factor") c.verify_resolution_factor = parse_value<int>(key, value);
        else if (key == "max_rounds") c.max_rounds = parse_value<int>(key, value);
        else if (key == "seed") c.seed = parse_value<std::uint64_t>(key, value);
        else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    return parse_config(in, base);
}

RunConfig apply_overrides(RunConfig c, const ConfigOverrides& o) {
    if (o.grid_resolution) c.grid_resolution = *o.grid_resolution;
    if (o.slack) c.slack = *o.slack;
    if (o.verify_resolution_factor) c.verify_resolution_factor = *o.verify_resolution_factor;
    if (o.max_rounds) c.max_rounds = *o.max_rounds;
    if (o.seed) c.seed = *o.seed;
    return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear programming bounds for unitary space-time codes"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--config", g.config_path, "key = value file with run defaults");
    app.add_flag("--json", g.json, "emit one JSON object");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--grid", g.overrides.grid_resolution, "sample grid levels per axis");
    app.add_option("--slack", g.overrides.slack, "region constraint slack");
    app.add_option("--verify-factor", g.overrides.verify_resolution_factor, "verification grid refinement");
    app.add_option("--max-rounds", g.overrides.max_rounds, "cutting-plane rounds");
    app.add_option("--seed", g.overrides.seed, "random seed");

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "LP bound on the size of a code with given diversity");
    bound->add_option("--n", ba.n)->required();
    bound->add_option("--kind", ba.kind)->required()->check(CLI::IsMember({"sum", "product"}));
    bound->add_option("--delta", ba.delta)->required();
    bound->add_option("--degree", ba.degree)->required();

    DiversityArgs da;
    auto* diversity = app.add_subcommand("diversity", "upper bound on the diversity of an N-point code");
    diversity->add_option("--n", da.n)->required();
    diversity->add_option("--kind", da.kind)->required()->check(CLI::IsMember({"sum", "product"}));
    diversity->add_option("--cardinality", da.cardinality)->required();
    diversity->add_option("--degree", da.degree)->required();

    TableArgs ta;
    auto* table = app.add_subcommand("table", "recompute a reference table");
    table->add_option("--which", ta.which)->required();
    table->add_option("--degree", ta.degree);

    CurveArgs ca;
    auto* curve = app.add_subcommand("curve", "diversity bound over a ladder of cardinalities");
    curve->add_option("--n", ca.n)->required();
    curve->add_option("--kind", ca.kind)->required()->check(CLI::IsMember({"sum", "product"}));
    curve->add_option("--degree", ca.degree)->required();
    curve->add_option("--nmin", ca.nmin)->required();
    curve->add_option("--nmax", ca.nmax)->required();
    curve->add_option("--out", ca.out)->required();

    int lemma_n = 2;
    auto* lemma = app.add_subcommand("verify-lemma", "exact zonal expansions of the low-degree positive combinations");
    lemma->add_option("--n", lemma_n)->required();

    PositivityArgs pa;
    auto* positivity = app.add_subcommand("positivity", "random-code check of a zonal function's positivity");
    positivity->add_option("--n", pa.n)->required();
    positivity->add_option("--lambda", pa.lambda, "comma-separated partition")->required();
    positivity->add_option("--s", pa.s, "determinant power");
    positivity->add_option("--trials", pa.trials);
    positivity->add_option("--size", pa.size);
    positivity->add_option("--seed", pa.seed);
    positivity->add_flag("--negate", pa.negate, "negate the function (sanity inversion)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        const RunConfig cfg = effective_config(g);
        set_thread_count(g.threads);
        if (*bound) return cmd_bound(ba, cfg, g.json, out);
        if (*diversity) return cmd_diversity(da, cfg, g.json, out);
        if (*table) return cmd_table(ta, cfg, g.json, out, err);
        if (*curve) return cmd_curve(ca, cfg, g.json, out, err);
        if (*lemma) return cmd_verify_lemma(lemma_n, cfg, g.json, out, err);
        if (*positivity) return cmd_positivity(pa, cfg, g.json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const lp::SimplexError& e) {
        err << "solver error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace ulp::cli
