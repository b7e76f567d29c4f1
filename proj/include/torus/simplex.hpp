#pragma once

#include <vector>

#include "torus/matrix.hpp"

namespace torus {

enum class Rel { kLe, kEq, kGe };

/// Dense LP: maximize objective . x subject to rows[i] . x (rel_i) rhs[i].
/// Variables are nonnegative unless free_vars is set, in which case each is
/// split internally into a difference of two nonnegative parts.
template <typename S>
struct LpProblem {
    int num_vars = 0;
    std::vector<std::vector<S>> rows;
    std::vector<S> rhs;
    std::vector<Rel> rel;
    std::vector<S> objective;
    bool free_vars = false;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <typename S>
struct LpSolution {
    LpStatus status = LpStatus::kInfeasible;
    std::vector<S> x;
    S objective = S(0);
};

namespace simplex_detail {

template <typename S>
inline S tol() { return S(0); }
template <>
inline double tol<double>() { return 1e-9; }

template <typename S>
inline void check_pivot(const S&) {}
template <>
inline void check_pivot<double>(const double& p) {
    if (p < 1e-13 && p > -1e-13)
        throw NumericalInstabilityError("simplex pivot below 1e-13");
}

/// Full-tableau two-phase simplex with Bland's anti-cycling rule.
template <typename S>
class Tableau {
public:
    explicit Tableau(const LpProblem<S>& p0) {
        LpProblem<S> p = p0;
        if (p.free_vars) p = split_free(p0);
        n_ = p.num_vars;
        m_ = static_cast<int>(p.rows.size());
        // slack/surplus columns
        int extra = 0;
        for (Rel r : p.rel)
            if (r != Rel::kEq) ++extra;
        ncols_ = n_ + extra + m_;  // worst case: one artificial per row
    nart0_ = n_ + extra;
        t_.assign(m_, std::vector<S>(ncols_ + 1, S(0)));
        basis_.assign(m_, -1);
        art_.assign(ncols_, false);
        int sl = n_, art = nart0_;
        for (int i = 0; i < m_; ++i) {
            S sign = p.rhs[i] < S(0) ? S(-1) : S(1);
            for (int j = 0; j < n_; ++j) t_[i][j] = sign * p.rows[i][j];
            t_[i][ncols_] = sign * p.rhs[i];
            Rel r = p.rel[i];
            if (sign < S(0)) r = r == Rel::kLe ? Rel::kGe : (r == Rel::kGe ? Rel::kLe : Rel::kEq);
            if (r == Rel::kLe) {
                t_[i][sl] = S(1);
                basis_[i] = sl++;
            } else {
                if (r == Rel::kGe) t_[i][sl++] = S(-1);
                t_[i][art] = S(1);
                art_[art] = true;
                basis_[i] = art++;
            }
        }
        nart_ = art - nart0_;
        obj_full_ = p.objective;
        obj_full_.resize(n_, S(0));
        split_ = p0.free_vars;
        orig_vars_ = p0.num_vars;
    }

    LpSolution<S> solve() {
        LpSolution<S> out;
        if (nart_ > 0) {
            // phase 1: maximize -(sum of artificials)
            std::vector<S> c(ncols_, S(0));
            for (int j = nart0_; j < nart0_ + nart_; ++j) c[j] = S(-1);
            set_objective(c);
            run(/*allow_art=*/true);
            if (z_ < -tol<S>()) return out;  // infeasible
            purge_artificials();
        }
        std::vector<S> c(ncols_, S(0));
        for (int j = 0; j < n_; ++j) c[j] = obj_full_[j];
        set_objective(c);
        if (!run(/*allow_art=*/false)) {
            out.status = LpStatus::kUnbounded;
            return out;
        }
        out.status = LpStatus::kOptimal;
        std::vector<S> full(ncols_, S(0));
        for (int i = 0; i < m_; ++i) full[basis_[i]] = t_[i][ncols_];
        if (split_) {
            out.x.assign(orig_vars_, S(0));
            for (int j = 0; j < orig_vars_; ++j) out.x[j] = full[2 * j] - full[2 * j + 1];
        } else {
            out.x.assign(full.begin(), full.begin() + n_);
        }
        out.objective = z_;
        return out;
    }

private:
    static LpProblem<S> split_free(const LpProblem<S>& p) {
        LpProblem<S> q;
        q.num_vars = 2 * p.num_vars;
        q.rhs = p.rhs;
        q.rel = p.rel;
        q.objective.assign(q.num_vars, S(0));
        for (int j = 0; j < p.num_vars; ++j) {
            q.objective[2 * j] = p.objective[j];
            q.objective[2 * j + 1] = -p.objective[j];
        }
        q.rows.reserve(p.rows.size());
        for (const auto& r : p.rows) {
            std::vector<S> rr(q.num_vars);
            for (int j = 0; j < p.num_vars; ++j) {
                rr[2 * j] = r[j];
                rr[2 * j + 1] = -r[j];
            }
            q.rows.push_back(std::move(rr));
        }
        return q;
    }

    void set_objective(const std::vector<S>& c) {
        // reduced-cost row: r_j = c_j - c_B . (column j); z_ = c_B . rhs
        red_.assign(ncols_, S(0));
        z_ = S(0);
        for (int j = 0; j < ncols_; ++j) red_[j] = c[j];
        for (int i = 0; i < m_; ++i) {
            const S& cb = c[basis_[i]];
            if (cb == S(0)) continue;
            for (int j = 0; j < ncols_; ++j) red_[j] -= cb * t_[i][j];
            z_ += cb * t_[i][ncols_];
        }
    }

    // Returns false on unboundedness.
    bool run(bool allow_art) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (!allow_art && art_[j]) continue;
                if (red_[j] > tol<S>()) { enter = j; break; }  // Bland: lowest index
            }
            if (enter < 0) return true;
            int leave = -1;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][enter] <= tol<S>()) continue;
                if (leave < 0) { leave = i; continue; }
                S lhs = t_[i][ncols_] * t_[leave][enter];
                S rhs = t_[leave][ncols_] * t_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        S p = t_[row][col];
        check_pivot<S>(p);
        for (int j = 0; j <= ncols_; ++j) t_[row][j] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            S f = t_[i][col];
            if (f == S(0)) continue;
            for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[row][j];
        }
        S f = red_[col];
        if (f != S(0)) {
            for (int j = 0; j < ncols_; ++j) red_[j] -= f * t_[row][j];
            z_ += f * t_[row][ncols_];
        }
        basis_[row] = col;
    }

    void purge_artificials() {
        // pivot zero-valued basic artificials onto real columns; drop rows
        // that turn out redundant
        for (int i = 0; i < m_; ++i) {
            if (!art_[basis_[i]]) continue;
            int col = -1;
            for (int j = 0; j < nart0_; ++j)
                if (!(t_[i][j] <= tol<S>() && t_[i][j] >= -tol<S>())) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
                --i;
            }
        }
    }

    int n_ = 0, m_ = 0, ncols_ = 0, nart0_ = 0, nart_ = 0, orig_vars_ = 0;
    bool split_ = false;
    std::vector<std::vector<S>> t_;
    std::vector<int> basis_;
    std::vector<bool> art_;
    std::vector<S> red_, obj_full_;
    S z_ = S(0);
};

}  // namespace simplex_detail

template <typename S>
LpSolution<S> simplex_solve(const LpProblem<S>& p) {
    return simplex_detail::Tableau<S>(p).solve();
}

}  // namespace torus
