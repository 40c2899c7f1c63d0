#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "weylcone/rational.hpp"

namespace weylcone {

/// Exact rational linear programming.
///
/// Dense two-phase primal simplex with Bland's anti-cycling rule. The
/// instances solved here are tiny (at most ~60 rows and ~130 columns), so a
/// plain tableau over Rat is both the simplest and a perfectly adequate
/// choice; no tolerances appear anywhere.
///
///   maximize    objective . x
///   subject to  eq_lhs x  = eq_rhs
///               ub_lhs x <= ub_rhs
///               x >= 0

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
    RatVec objective;
    RatMat eq_lhs;
    RatVec eq_rhs;
    RatMat ub_lhs;
    RatVec ub_rhs;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat objective = 0;
    RatVec x;
};

namespace detail {

struct Tableau {
    RatMat rows;          // coefficient rows
    RatVec rhs;           // right-hand sides, kept nonnegative
    std::vector<int> basis;
    RatVec red;           // reduced costs r_j = c_j - c_B B^-1 A_j
    Rat value = 0;        // objective value of the current basis

    std::size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }

    void pivot(std::size_t pr, std::size_t pc)
    {
        Rat d = rows[pr][pc];
        for (auto& e : rows[pr]) e /= d;
        rhs[pr] /= d;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][pc] == 0) continue;
            Rat f = rows[i][pc];
            for (std::size_t j = 0; j < ncols(); ++j) rows[i][j] -= f * rows[pr][j];
            rhs[i] -= f * rhs[pr];
        }
        if (red[pc] != 0) {
            Rat f = red[pc];
            for (std::size_t j = 0; j < ncols(); ++j) red[j] -= f * rows[pr][j];
            value += f * rhs[pr];
        }
        basis[pr] = static_cast<int>(pc);
    }

    void price_out(const RatVec& cost)
    {
        red = cost;
        red.resize(ncols(), 0);
        value = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rat cb = cost.size() > std::size_t(basis[i]) ? cost[basis[i]] : Rat(0);
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols(); ++j) red[j] -= cb * rows[i][j];
            value += cb * rhs[i];
        }
    }

    // Bland: entering = lowest-index improving column, leaving = lowest
    // basic variable index among the minimum-ratio rows.
    LpStatus run(const std::vector<bool>& banned)
    {
        for (;;) {
            std::size_t enter = ncols();
            for (std::size_t j = 0; j < ncols(); ++j)
                if (!banned[j] && red[j] > 0) { enter = j; break; }
            if (enter == ncols()) return LpStatus::Optimal;

            std::size_t leave = rows.size();
            Rat best = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace detail

inline LpSolution solve_lp(const LpProblem& p)
{
    const std::size_t n = p.objective.size();
    const std::size_t m_eq = p.eq_lhs.size(), m_ub = p.ub_lhs.size();
    const std::size_t m = m_eq + m_ub;

    detail::Tableau t;
    t.rows.assign(m, RatVec());
    t.rhs.assign(m, 0);
    t.basis.assign(m, -1);

    // Layout: structural | slacks | artificials.
    const std::size_t slack0 = n;
    std::size_t ncols = n + m_ub;
    std::vector<std::size_t> artificial_rows;

    for (std::size_t i = 0; i < m_ub; ++i) {
        RatVec row(ncols, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = p.ub_lhs[i][j];
        Rat b = p.ub_rhs[i];
        Rat s = 1;
        if (b < 0) {
            for (auto& e : row) e = -e;
            b = -b;
            s = -1;
        }
        row[slack0 + i] = s;
        t.rows[i] = std::move(row);
        t.rhs[i] = b;
        if (s > 0)
            t.basis[i] = static_cast<int>(slack0 + i);
        else
            artificial_rows.push_back(i);
    }
    for (std::size_t i = 0; i < m_eq; ++i) {
        RatVec row(ncols, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = p.eq_lhs[i][j];
        Rat b = p.eq_rhs[i];
        if (b < 0) {
            for (auto& e : row) e = -e;
            b = -b;
        }
        t.rows[m_ub + i] = std::move(row);
        t.rhs[m_ub + i] = b;
        artificial_rows.push_back(m_ub + i);
    }

    const std::size_t art0 = ncols;
    ncols += artificial_rows.size();
    for (auto& row : t.rows) row.resize(ncols, 0);
    RatVec phase1_cost(ncols, 0);
    for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
        std::size_t i = artificial_rows[k];
        t.rows[i][art0 + k] = 1;
        t.basis[i] = static_cast<int>(art0 + k);
        phase1_cost[art0 + k] = -1;
    }

    std::vector<bool> banned(ncols, false);

    if (!artificial_rows.empty()) {
        t.price_out(phase1_cost);
        if (t.run(banned) != LpStatus::Optimal)
            throw std::runtime_error("solve_lp: phase 1 cannot be unbounded");
        if (t.value != 0) return {LpStatus::Infeasible, 0, {}};

        // Drive any degenerate basic artificial out of the basis; a row with
        // no eligible pivot is redundant and can be ignored by banning its
        // artificial only.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < static_cast<int>(art0)) continue;
            std::size_t j = 0;
            while (j < art0 && t.rows[i][j] == 0) ++j;
            if (j < art0) t.pivot(i, j);
        }
        for (std::size_t j = art0; j < ncols; ++j) banned[j] = true;
    }

    RatVec cost(ncols, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = p.objective[j];
    t.price_out(cost);
    // A leftover basic artificial sits at value zero in a redundant row and
    // never leaves; it does not affect the optimum.
    LpStatus st = t.run(banned);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, 0, {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.objective = t.value;
    sol.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= 0 && std::size_t(t.basis[i]) < n) sol.x[t.basis[i]] = t.rhs[i];
    return sol;
}

} // namespace weylcone
