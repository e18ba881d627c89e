#include "ulp/lp/simplex.hpp"

#include "ulp/simd/kernels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace ulp::lp {

namespace {
constexpr std::size_t kArtificial = std::size_t{1} << 62;
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

std::string to_string(LpStatus s) {
    switch (s) {
    case LpStatus::Optimal: return "OPTIMAL";
    case LpStatus::Infeasible: return "INFEASIBLE";
    case LpStatus::Unbounded: return "UNBOUNDED";
    }
    return "?";
}

DualSimplex::DualSimplex(std::vector<double> objective, SimplexOptions options)
    : m_(objective.size()), c_(std::move(objective)), opt_(options) {
    if (m_ == 0) throw std::invalid_argument("LP needs at least one variable");
    entering_tol_ = opt_.optimality_tol;
    for (double v : c_)
        if (!std::isfinite(v)) throw std::invalid_argument("LP objective must be finite");
    c_work_ = c_;
    if (opt_.perturbation > 0.0) {
        std::mt19937_64 rng(opt_.seed);
        std::uniform_real_distribution<double> u(1.0, 2.0);
        for (double& v : c_work_) v += (v < 0.0 ? -1.0 : 1.0) * opt_.perturbation * (1.0 + std::abs(v)) * u(rng);
    }
}

std::size_t DualSimplex::add_constraint(std::span<const double> coeffs, Relation rel, double rhs) {
    if (coeffs.size() != m_) throw std::invalid_argument("constraint length does not match variable count");
    if (!std::isfinite(rhs)) throw std::invalid_argument("constraint right-hand side must be finite");
    const std::size_t idx = rows_added_++;
    switch (rel) {
    case Relation::GreaterEqual: add_column(coeffs, rhs, idx, 1.0); break;
    case Relation::LessEqual: add_column(coeffs, rhs, idx, -1.0); break;
    case Relation::Equal:
        add_column(coeffs, rhs, idx, 1.0);
        add_column(coeffs, rhs, idx, -1.0);
        break;
    }
    return idx;
}

void DualSimplex::add_column(std::span<const double> a, double rhs, std::size_t constraint, double sign) {
    double maxabs = 0.0;
    for (double v : a) {
        if (!std::isfinite(v)) throw std::invalid_argument("constraint coefficients must be finite");
        maxabs = std::max(maxabs, std::abs(v));
    }
    const double scale = maxabs > 0.0 ? 1.0 / maxabs : 1.0;
    for (double v : a) data_.push_back(sign * v * scale);
    // Column of the dual program is sign * a with cost -(sign * rhs) (minimization form).
    cost_.push_back(-sign * rhs * scale);
    columns_.push_back({constraint, sign, scale});
}

double DualSimplex::column_cost(std::size_t j, Phase phase) const {
    if (is_artificial(j)) return phase == Phase::One ? 1.0 : 0.0;
    return phase == Phase::One ? 0.0 : cost_[j];
}

void DualSimplex::refactor() {
    const auto m = static_cast<Eigen::Index>(m_);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t k = 0; k < m_; ++k) {
        const std::size_t j = basis_[k];
        if (j >= kArtificial) {
            const std::size_t row = j - kArtificial;
            b(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(k)) = art_sign_[row];
        } else {
            for (std::size_t i = 0; i < m_; ++i)
                b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = data_[j * m_ + i];
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) {
        std::ostringstream os;
        os << "simplex basis became singular (rank " << lu.rank() << " of " << m_ << ")";
        throw SimplexError(os.str());
    }
    const Eigen::MatrixXd inv = lu.inverse();
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) binv_[static_cast<std::size_t>(r) * m_ + static_cast<std::size_t>(c)] = inv(r, c);
    Eigen::Map<const Eigen::VectorXd> rhs(c_work_.data(), m);
    const Eigen::VectorXd x = inv * rhs;
    for (std::size_t i = 0; i < m_; ++i) {
        const double v = x(static_cast<Eigen::Index>(i));
        xb_[i] = v < 0.0 && v > -opt_.feasibility_tol ? 0.0 : v;
    }
}

void DualSimplex::compute_duals(Phase phase, std::vector<double>& pi) const {
    const auto& k = simd::kernels();
    std::fill(pi.begin(), pi.end(), 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
        const double cb = column_cost(basis_[r], phase);
        if (cb != 0.0) k.axpy(cb, &binv_[r * m_], pi.data(), m_);
    }
}

bool DualSimplex::run(Phase phase, long& iterations) {
    const auto& k = simd::kernels();
    const std::size_t ncols = columns_.size();
    const long limit = pass_limit_ > 0            ? pass_limit_
                       : opt_.max_iterations > 0 ? opt_.max_iterations
                                                 : 200L * static_cast<long>(m_ + ncols) + 10000L;
    long pass_iterations = 0;
    std::vector<double> pi(m_), reduced(ncols), w(m_), col(m_);
    std::vector<char> basic(ncols, 0);
    for (std::size_t j : basis_)
        if (j < kArtificial) basic[j] = 1;

    int since_refactor = 0;
    int degenerate = 0;
    for (;;) {
        if (since_refactor >= opt_.refactor_every) {
            refactor();
            since_refactor = 0;
        }
        compute_duals(phase, pi);
        k.dot_columns(data_.data(), m_, m_, ncols, pi.data(), reduced.data());
        const bool bland = degenerate > opt_.degenerate_before_bland;
        std::size_t q = ncols;
        double best = -entering_tol_;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (basic[j]) continue;
            const double d = column_cost(j, phase) - reduced[j];
            if (d < best) {
                q = j;
                best = d;
                if (bland) break;
            }
        }
        if (q == ncols) return true;

        const double* gq = &data_[q * m_];
        k.dot_columns(binv_.data(), m_, m_, m_, gq, w.data());

        // Harris two-pass ratio test. Artificial basics are fixed at zero in
        // phase two and block any step that would move them.
        double theta_max = kInf;
        bool any = false;
        for (std::size_t i = 0; i < m_; ++i) {
            if (phase == Phase::Two && basis_[i] >= kArtificial) {
                if (std::abs(w[i]) > opt_.pivot_tol) {
                    theta_max = 0.0;
                    any = true;
                }
                continue;
            }
            if (w[i] > opt_.pivot_tol) {
                theta_max = std::min(theta_max, (std::max(xb_[i], 0.0) + opt_.feasibility_tol) / w[i]);
                any = true;
            }
        }
        if (!any) return false;

        std::size_t r = m_;
        double pivot_mag = 0.0;
        double best_ratio = kInf;
        for (std::size_t i = 0; i < m_; ++i) {
            double ratio;
            double mag;
            if (phase == Phase::Two && basis_[i] >= kArtificial) {
                if (std::abs(w[i]) <= opt_.pivot_tol) continue;
                ratio = 0.0;
                mag = std::abs(w[i]);
            } else {
                if (w[i] <= opt_.pivot_tol) continue;
                ratio = std::max(xb_[i], 0.0) / w[i];
                mag = w[i];
            }
            if (ratio > theta_max) continue;
            if (bland) {
                if (r == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[r])) {
                    r = i;
                    best_ratio = ratio;
                }
            } else if (mag > pivot_mag) {
                r = i;
                pivot_mag = mag;
            }
        }
        if (r == m_) throw SimplexError("ratio test found no pivot row");

        const double theta = (phase == Phase::Two && basis_[r] >= kArtificial) ? 0.0 : std::max(xb_[r], 0.0) / w[r];
        for (std::size_t i = 0; i < m_; ++i) xb_[i] -= theta * w[i];
        xb_[r] = theta;
        for (auto& v : xb_)
            if (v < 0.0 && v > -opt_.feasibility_tol) v = 0.0;

        double* prow = &binv_[r * m_];
        const double inv_pivot = 1.0 / w[r];
        for (std::size_t c = 0; c < m_; ++c) prow[c] *= inv_pivot;
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r && w[i] != 0.0) k.axpy(-w[i], prow, &binv_[i * m_], m_);

        if (basis_[r] < kArtificial) basic[basis_[r]] = 0;
        basis_[r] = q;
        basic[q] = 1;
        ++since_refactor;

        degenerate = theta * std::abs(best) <= 1e-14 ? degenerate + 1 : 0;
        ++iterations;
        if (++pass_iterations > limit) {
            if (pass_limit_ > 0) return true;
            std::ostringstream os;
            os << "simplex exceeded " << limit << " iterations (" << m_ << " rows, " << ncols << " columns)";
            throw SimplexError(os.str());
        }
    }
}

void DualSimplex::drive_out_artificials() {
    const auto& k = simd::kernels();
    const std::size_t ncols = columns_.size();
    std::vector<double> row_vals(ncols);
    std::vector<char> basic(ncols, 0);
    for (std::size_t j : basis_)
        if (j < kArtificial) basic[j] = 1;
    for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < kArtificial) continue;
        k.dot_columns(data_.data(), m_, m_, ncols, &binv_[r * m_], row_vals.data());
        std::size_t q = ncols;
        double mag = 1e-7;
        for (std::size_t j = 0; j < ncols; ++j)
            if (!basic[j] && std::abs(row_vals[j]) > mag) {
                mag = std::abs(row_vals[j]);
                q = j;
            }
        if (q == ncols) continue;  // redundant row; the artificial stays at zero
        basis_[r] = q;
        basic[q] = 1;
        refactor();
    }
}

std::vector<double> DualSimplex::primal_from_basis() const {
    std::vector<double> pi(m_);
    compute_duals(Phase::Two, pi);
    for (double& v : pi) v = -v;
    return pi;
}

bool DualSimplex::primal_feasible_without_objective() {
    DualSimplex aux(std::vector<double>(m_, 0.0), opt_);
    aux.data_ = data_;
    aux.cost_ = cost_;
    aux.columns_ = columns_;
    aux.rows_added_ = rows_added_;
    aux.basis_.resize(m_);
    aux.art_sign_.assign(m_, 1.0);
    aux.binv_.assign(m_ * m_, 0.0);
    aux.xb_.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
        aux.basis_[i] = kArtificial + i;
        aux.binv_[i * m_ + i] = 1.0;
    }
    long it = 0;
    return aux.run(Phase::Two, it);
}

LpSolution DualSimplex::solve() {
    LpSolution sol;
    long iterations = 0;
    if (!initialized_) {
        basis_.resize(m_);
        art_sign_.resize(m_);
        binv_.assign(m_ * m_, 0.0);
        xb_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            art_sign_[i] = c_work_[i] >= 0.0 ? 1.0 : -1.0;
            basis_[i] = kArtificial + i;
            binv_[i * m_ + i] = art_sign_[i];
            xb_[i] = std::abs(c_work_[i]);
        }
        initialized_ = true;
    }
    if (!phase_one_done_) {
        if (!run(Phase::One, iterations)) throw SimplexError("phase one reported an unbounded ray");
        refactor();
        double infeasibility = 0.0, scale = 1.0;
        for (double v : c_) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= kArtificial) infeasibility += std::abs(xb_[i]);
        if (infeasibility > 1e-9 * scale) {
            sol.iterations = static_cast<int>(iterations);
            sol.status = primal_feasible_without_objective() ? LpStatus::Unbounded : LpStatus::Infeasible;
            return sol;
        }
        drive_out_artificials();
        phase_one_done_ = true;
    }
    entering_tol_ = opt_.optimality_tol;
    bool bounded = run(Phase::Two, iterations);
    if (bounded && opt_.polish_tol < opt_.optimality_tol) {
        // Optional: on breakdown fall back to the basis that was already optimal.
        const auto saved_basis = basis_;
        const auto saved_binv = binv_;
        const auto saved_xb = xb_;
        refactor();
        entering_tol_ = opt_.polish_tol;
        pass_limit_ = opt_.polish_iterations;
        try {
            if (!run(Phase::Two, iterations)) throw SimplexError("unbounded during polish");
        } catch (const SimplexError&) {
            basis_ = saved_basis;
            binv_ = saved_binv;
            xb_ = saved_xb;
        }
        pass_limit_ = 0;
    }
    entering_tol_ = opt_.optimality_tol;
    sol.iterations = static_cast<int>(iterations);
    if (!bounded) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }
    refactor();
    sol.x = primal_from_basis();
    double obj = 0.0;
    for (std::size_t i = 0; i < m_; ++i) obj += c_[i] * sol.x[i];
    sol.objective = obj;
    sol.status = LpStatus::Optimal;
    return sol;
}

LpSolution solve_lp(std::span<const double> objective, std::span<const Constraint> constraints,
                    const SimplexOptions& options) {
    DualSimplex lp(std::vector<double>(objective.begin(), objective.end()), options);
    for (const auto& c : constraints) lp.add_constraint(c.coeffs, c.relation, c.rhs);
    return lp.solve();
}

} // namespace ulp::lp
