#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulp::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<double> coeffs;
    Relation relation = Relation::GreaterEqual;
    double rhs = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
};

struct SimplexOptions {
    double optimality_tol = 1e-9;   // on scaled reduced costs
    // After convergence, pivoting continues with this tighter tolerance
    // (capped at polish_iterations) so rows are violated by at most
    // polish_tol times their max norm.
    double polish_tol = 1e-12;
    long polish_iterations = 2000;
    double feasibility_tol = 1e-9;  // on basic values
    double pivot_tol = 1e-11;
    int refactor_every = 64;
    int degenerate_before_bland = 50;
    long max_iterations = 0;        // 0 = automatic
    // Relative random shift of the objective used while pivoting; it breaks
    // the heavy degeneracy of cutting-plane LPs. The returned x is feasible
    // for the original rows and optimal up to a gap of this order.
    double perturbation = 1e-7;
    unsigned long long seed = 0x5eedULL;
};

/// Numerical breakdown inside the simplex (singular basis, iteration limit).
class SimplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimizes c^T x over free variables x subject to rows a^T x (<=, =, >=) b.
///
/// Internally runs a revised primal simplex on the dual program
///   max b^T y  s.t.  A^T y = c,  y >= 0 on inequality rows,
/// whose rows are the primal variables and whose columns are the primal
/// constraints. Constraints can be appended between solves and the current
/// basis stays feasible, which is what the cutting-plane loop relies on.
class DualSimplex {
public:
    explicit DualSimplex(std::vector<double> objective, SimplexOptions options = {});

    std::size_t variables() const { return m_; }
    std::size_t constraints() const { return rows_added_; }

    /// Appends a^T x >= b (or <= / =). Returns the constraint index.
    std::size_t add_constraint(std::span<const double> coeffs, Relation rel, double rhs);

    LpSolution solve();

private:
    struct Column {
        std::size_t constraint;
        double sign;   // +1 or -1 applied to the original row
        double scale;  // column scaling factor
    };

    enum class Phase { One, Two };

    void add_column(std::span<const double> a, double rhs, std::size_t constraint, double sign);
    bool run(Phase phase, long& iterations);
    void refactor();
    void compute_duals(Phase phase, std::vector<double>& pi) const;
    double column_cost(std::size_t j, Phase phase) const;
    static bool is_artificial(std::size_t j) { return j >= (std::size_t{1} << 62); }
    void drive_out_artificials();
    std::vector<double> primal_from_basis() const;
    bool primal_feasible_without_objective();

    std::size_t m_;
    std::vector<double> c_;
    std::vector<double> c_work_;  // perturbed objective driving the basic values
    SimplexOptions opt_;

    // Column-major constraint data (length m_ per column) and scaled costs.
    std::vector<double> data_;
    std::vector<double> cost_;
    std::vector<Column> columns_;
    std::size_t rows_added_ = 0;

    // Basis entries are structural column indices or artificial markers
    // (artificial k has column sign(c_k) e_k).
    std::vector<std::size_t> basis_;
    std::vector<double> art_sign_;
    std::vector<double> binv_;  // row-major m x m
    std::vector<double> xb_;
    double entering_tol_ = 0.0;  // current reduced-cost threshold
    long pass_limit_ = 0;        // > 0: stop quietly after this many pivots
    bool initialized_ = false;
    bool phase_one_done_ = false;
};

/// One-shot convenience wrapper around DualSimplex.
LpSolution solve_lp(std::span<const double> objective, std::span<const Constraint> constraints,
                    const SimplexOptions& options = {});

} // namespace ulp::lp
