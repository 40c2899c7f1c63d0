#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "weylcone/rootlat.hpp"
#include "weylcone/simplex.hpp"

namespace weylcone {

/// Hilbert-Mumford stability over the weight polytope Conv(W omega), with
/// every decision made by exact rational linear programming. A point whose
/// nonzero coordinates have weight set S is stable iff 0 lies in the
/// interior of Conv(S); the interior test maximizes the minimum barycentric
/// coefficient, so no epsilon appears anywhere.

struct WeightPolytope {
    int rank = 0;
    std::vector<IntVec> verts;   // fundamental-weight coordinates
    RatMat gram;                 // pairwise invariant inner products
    Rat base_norm = 0;           // (omega, omega)
};

inline WeightPolytope make_weight_polytope(const RootSystemData& rs, const WeylOrbitData& orbit)
{
    WeightPolytope p;
    p.rank = rs.rank;
    p.verts = orbit.elements;
    const int n = orbit.size();
    p.gram.assign(n, RatVec(n, 0));
    for (int a = 0; a < n; ++a) {
        LatticeVector va{to_rat(orbit.elements[a]), Basis::FundamentalWeight};
        for (int b = a; b < n; ++b) {
            LatticeVector vb{to_rat(orbit.elements[b]), Basis::FundamentalWeight};
            p.gram[a][b] = p.gram[b][a] = inner_product(rs, va, vb);
        }
    }
    p.base_norm = p.gram[0][0];
    return p;
}

inline std::vector<int> all_indices(const WeightPolytope& p)
{
    std::vector<int> s(p.verts.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i);
    return s;
}

inline bool spans_full_space(const WeightPolytope& p, const std::vector<int>& subset)
{
    IntMat rows;
    for (int s : subset) rows.push_back(p.verts[s]);
    return int_rank(rows) == p.rank;
}

/// True iff 0 lies in the interior of Conv of the chosen vertices: the
/// points span the whole space and admit strictly positive barycentric
/// coordinates for 0. The LP maximizes a slack bounded by every
/// coefficient; interior means a strictly positive optimum.
inline bool zero_in_interior(const WeightPolytope& p, const std::vector<int>& subset)
{
    if (subset.empty()) throw std::invalid_argument("zero_in_interior: empty subset");
    if (!spans_full_space(p, subset)) return false;

    const int n = static_cast<int>(subset.size());
    // Variables: lambda_0..lambda_{n-1}, t.
    LpProblem lp;
    lp.objective.assign(n + 1, 0);
    lp.objective[n] = 1;
    for (int d = 0; d < p.rank; ++d) {
        RatVec row(n + 1, 0);
        for (int i = 0; i < n; ++i) row[i] = p.verts[subset[i]][d];
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(0);
    }
    {
        RatVec row(n + 1, 0);
        for (int i = 0; i < n; ++i) row[i] = 1;
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(1);
    }
    for (int i = 0; i < n; ++i) {
        RatVec row(n + 1, 0);
        row[n] = 1;
        row[i] = -1;
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(0);
    }
    auto sol = solve_lp(lp);
    return sol.status == LpStatus::Optimal && sol.objective > 0;
}

/// Geometric edge test: vertices mu and nu are adjacent iff some linear
/// functional attains its maximum over the polytope exactly on {mu, nu}.
inline bool polytope_adjacent(const WeightPolytope& p, int mu, int nu)
{
    if (mu == nu) throw std::invalid_argument("polytope_adjacent: vertices must be distinct");
    const int r = p.rank;
    const int n = static_cast<int>(p.verts.size());
    // Variables: c+ (r), c- (r), t; functional c = c+ - c-.
    const int tvar = 2 * r;
    LpProblem lp;
    lp.objective.assign(2 * r + 1, 0);
    lp.objective[tvar] = 1;
    {
        RatVec row(2 * r + 1, 0);
        for (int d = 0; d < r; ++d) {
            Rat diff = p.verts[mu][d] - p.verts[nu][d];
            row[d] = diff;
            row[r + d] = -diff;
        }
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(0);
    }
    for (int s = 0; s < n; ++s) {
        if (s == mu || s == nu) continue;
        RatVec row(2 * r + 1, 0);
        row[tvar] = 1;
        for (int d = 0; d < r; ++d) {
            Rat diff = p.verts[mu][d] - p.verts[s][d];
            row[d] = -diff;
            row[r + d] = diff;
        }
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(0);
    }
    {
        RatVec row(2 * r + 1, 0);
        row[tvar] = 1;
        lp.ub_lhs.push_back(std::move(row));
        lp.ub_rhs.push_back(1);
    }
    auto sol = solve_lp(lp);
    return sol.status == LpStatus::Optimal && sol.objective > 0;
}

/// Algebraic edge criterion for a single Weyl orbit: mu and nu are adjacent
/// vertices iff (mu, nu) = (omega, omega) - 1.
inline bool adjacent_by_pairing(const WeightPolytope& p, int mu, int nu)
{
    if (mu == nu) throw std::invalid_argument("adjacent_by_pairing: vertices must be distinct");
    return p.gram[mu][nu] == p.base_norm - 1;
}

inline bool stable_after_removals(const WeightPolytope& p, const std::vector<int>& removed)
{
    if (removed.size() >= p.verts.size())
        throw std::invalid_argument("stable_after_removals: nothing left");
    std::vector<bool> out(p.verts.size(), false);
    for (int s : removed) out.at(s) = true;
    std::vector<int> keep;
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        if (!out[i]) keep.push_back(static_cast<int>(i));
    return zero_in_interior(p, keep);
}

/// Is vertex v a convex combination of the other chosen vertices? Used to
/// confirm that every orbit point is a genuine vertex of the hull.
inline bool in_convex_hull_of_others(const WeightPolytope& p, int v)
{
    const int n = static_cast<int>(p.verts.size());
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != v) others.push_back(i);

    LpProblem lp;
    lp.objective.assign(others.size(), 0);
    for (int d = 0; d < p.rank; ++d) {
        RatVec row(others.size(), 0);
        for (std::size_t i = 0; i < others.size(); ++i) row[i] = p.verts[others[i]][d];
        lp.eq_lhs.push_back(std::move(row));
        lp.eq_rhs.push_back(p.verts[v][d]);
    }
    RatVec ones(others.size(), 1);
    lp.eq_lhs.push_back(std::move(ones));
    lp.eq_rhs.push_back(1);
    return solve_lp(lp).status == LpStatus::Optimal;
}

/// All polytope edges by the LP test; pairs are returned with mu < nu.
inline std::vector<std::pair<int, int>> polytope_edges_lp(const WeightPolytope& p)
{
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(p.verts.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (polytope_adjacent(p, a, b)) edges.emplace_back(a, b);
    return edges;
}

struct FundamentalInequality {
    Rat omega_sq;
    Rat half_alpha_sq;
    bool holds = false;
};

/// The strict inequality (omega^2) > (alpha^2)/2 for a fundamental weight,
/// i.e. whether the diagonal inverse-Cartan entry exceeds 1.
inline FundamentalInequality fundamental_inequality(const RootSystemData& rs, int node)
{
    FundamentalInequality f;
    f.omega_sq = rs.cartan_inverse.at(node).at(node);
    f.half_alpha_sq = 1;
    f.holds = f.omega_sq > f.half_alpha_sq;
    return f;
}

} // namespace weylcone
