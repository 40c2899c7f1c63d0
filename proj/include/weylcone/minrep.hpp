#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylcone/rootlat.hpp"

namespace weylcone {

/// Minuscule highest-weight module with an explicit signed Chevalley
/// action.
///
/// The basis is indexed by the Weyl orbit of the highest weight; every
/// weight space is one-dimensional. A root vector X_gamma sends the basis
/// vector of weight mu to +-1 times the basis vector of weight mu + gamma
/// (or to zero when mu + gamma is not a weight). The signs come from a
/// bimultiplicative cocycle eps on the root lattice; raising operators
/// carry one extra global minus sign, which is what makes
/// [e_i, f_i] = h_i come out right for this cocycle orientation. The
/// construction is never trusted: verify_module_relations checks the full
/// Serre presentation on every basis vector.

struct SignCocycle {
    IntMat table;  // r x r over {+1,-1}

    static SignCocycle standard(const IntMat& cartan)
    {
        const int r = static_cast<int>(cartan.size());
        SignCocycle c;
        c.table.assign(r, IntVec(r, 1));
        for (int i = 0; i < r; ++i) {
            c.table[i][i] = -1;
            for (int j = i + 1; j < r; ++j)
                c.table[i][j] = (cartan[i][j] % 2 != 0) ? -1 : 1;
        }
        return c;
    }

    /// Bimultiplicative extension to the root lattice, both arguments in
    /// simple-root coordinates.
    int eval(const IntVec& a, const IntVec& b) const
    {
        int odd = 0;
        const int r = static_cast<int>(table.size());
        for (int i = 0; i < r; ++i) {
            if (a[i] % 2 == 0) continue;
            for (int j = 0; j < r; ++j)
                if (table[i][j] < 0 && b[j] % 2 != 0) odd ^= 1;
        }
        return odd ? -1 : 1;
    }
};

/// Sparse exact vector in the module, element index -> coefficient.
struct ModuleVector {
    std::map<int, Rat> coords;

    bool is_zero() const { return coords.empty(); }

    Rat coeff(int k) const
    {
        auto it = coords.find(k);
        return it == coords.end() ? Rat(0) : it->second;
    }

    void add_term(int k, const Rat& c)
    {
        if (c == 0) return;
        auto [it, fresh] = coords.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coords.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& o)
    {
        for (const auto& [k, c] : o.coords) add_term(k, c);
        return *this;
    }

    ModuleVector& operator-=(const ModuleVector& o)
    {
        for (const auto& [k, c] : o.coords) add_term(k, -c);
        return *this;
    }

    ModuleVector& operator*=(const Rat& s)
    {
        if (s == 0) {
            coords.clear();
            return *this;
        }
        for (auto& [k, c] : coords) c *= s;
        return *this;
    }

    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rat& s, ModuleVector a) { return a *= s; }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b)
    {
        return a.coords == b.coords;
    }
};

struct OpEntry {
    int to = -1;   // target element, -1 when the action kills the vector
    int sign = 0;
};

struct MinusculeModule {
    RootSystemData rs;
    int cut = 0;                       // grading node
    IntVec highest_weight;             // fundamental-weight coordinates
    WeylOrbitData weights;
    SignCocycle cocycle;

    std::vector<IntVec> mu_bar;        // mu - omega in simple-root coordinates
    std::vector<int> grade_of;         // coefficient of alpha_cut in omega - mu
    std::vector<std::vector<int>> elems_by_grade;

    std::vector<IntVec> roots;         // all roots; positives first
    std::map<IntVec, int> root_index;
    std::vector<std::vector<OpEntry>> root_action;  // [root][element]
    std::vector<int> raise_index, lower_index;      // root index of +-alpha_i
    std::vector<int> grade1_root;      // grade-1 element -> root index of mu-omega

    int dim() const { return weights.size(); }

    const OpEntry& entry(int root_idx, int elem) const { return root_action[root_idx][elem]; }

    long cartan_eigenvalue(int node, int elem) const { return weights.elements[elem][node]; }
};

namespace detail {

inline void check_minuscule(const RootSystemData& rs, const WeylOrbitData& orbit)
{
    for (const IntVec& gamma : rs.positive_roots)
        for (const IntVec& mu : orbit.elements) {
            long p = pair_weight_root(mu, gamma);
            if (p < -1 || p > 1) {
                std::ostringstream os;
                os << "not minuscule: a weight pairs to " << p << " with a coroot";
                throw std::invalid_argument(os.str());
            }
        }
}

} // namespace detail

inline MinusculeModule build_minuscule(const RootSystemData& rs, const IntVec& fw_weight,
                                       int cut_node)
{
    MinusculeModule m;
    m.rs = rs;
    m.cut = cut_node;
    m.highest_weight = fw_weight;
    m.weights = weyl_orbit(rs, fw_weight);
    detail::check_minuscule(rs, m.weights);
    m.cocycle = SignCocycle::standard(rs.cartan);

    const int n = m.dim();
    const int r = rs.rank;

    m.mu_bar.resize(n);
    m.grade_of.resize(n);
    int max_grade = 0;
    for (int k = 0; k < n; ++k) {
        RatVec diff(r);
        for (int i = 0; i < r; ++i) diff[i] = m.weights.elements[k][i] - fw_weight[i];
        RatVec root_coords = mat_vec(rs.cartan_inverse, diff);
        IntVec rc(r);
        for (int i = 0; i < r; ++i) {
            if (denominator(root_coords[i]) != 1)
                throw std::runtime_error("weight difference is not in the root lattice");
            rc[i] = static_cast<int>(numerator(root_coords[i]));
        }
        m.mu_bar[k] = rc;
        m.grade_of[k] = -rc[cut_node];
        if (m.grade_of[k] < 0)
            throw std::runtime_error("negative grade: cut node is not compatible with the weight");
        max_grade = std::max(max_grade, m.grade_of[k]);
    }
    m.elems_by_grade.assign(max_grade + 1, {});
    for (int k = 0; k < n; ++k) m.elems_by_grade[m.grade_of[k]].push_back(k);

    for (const IntVec& g : rs.positive_roots) m.roots.push_back(g);
    for (const IntVec& g : rs.positive_roots) {
        IntVec neg(r);
        for (int i = 0; i < r; ++i) neg[i] = -g[i];
        m.roots.push_back(neg);
    }
    for (int t = 0; t < static_cast<int>(m.roots.size()); ++t) m.root_index[m.roots[t]] = t;

    const int npos = static_cast<int>(rs.positive_roots.size());
    m.root_action.assign(m.roots.size(), std::vector<OpEntry>(n));
    for (int t = 0; t < static_cast<int>(m.roots.size()); ++t) {
        const IntVec& gamma = m.roots[t];
        const bool positive = t < npos;
        IntVec gamma_fw = int_mat_vec(rs.cartan, gamma);
        for (int k = 0; k < n; ++k) {
            IntVec target = add(m.weights.elements[k], gamma_fw);
            auto it = m.weights.index.find(target);
            if (it == m.weights.index.end()) continue;
            int sign = m.cocycle.eval(gamma, m.mu_bar[k]);
            if (positive) sign = -sign;
            m.root_action[t][k] = {it->second, sign};
        }
    }

    m.raise_index.resize(r);
    m.lower_index.resize(r);
    for (int i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        m.raise_index[i] = m.root_index.at(e);
        e[i] = -1;
        m.lower_index[i] = m.root_index.at(e);
    }

    m.grade1_root.assign(n, -1);
    for (int k : m.elems_by_grade.size() > 1 ? m.elems_by_grade[1] : std::vector<int>{})
        m.grade1_root[k] = m.root_index.at(m.mu_bar[k]);

    return m;
}

inline MinusculeModule build_minuscule(const RootSystemData& rs, int node)
{
    return build_minuscule(rs, fundamental_weight(rs, node), node);
}

/// Action of the root vector X_gamma (by root index) on a module vector.
inline ModuleVector act_root(const MinusculeModule& m, int root_idx, const ModuleVector& x)
{
    ModuleVector out;
    for (const auto& [k, c] : x.coords) {
        const OpEntry& e = m.root_action[root_idx][k];
        if (e.to >= 0) out.add_term(e.to, Rat(e.sign) * c);
    }
    return out;
}

inline ModuleVector act_root(const MinusculeModule& m, const IntVec& gamma_root_coords,
                             const ModuleVector& x)
{
    auto it = m.root_index.find(gamma_root_coords);
    if (it == m.root_index.end()) throw std::invalid_argument("act_root: not a root");
    return act_root(m, it->second, x);
}

/// Cartan element h_i acting diagonally by <mu, alpha_i^vee>.
inline ModuleVector act_cartan(const MinusculeModule& m, int node, const ModuleVector& x)
{
    ModuleVector out;
    for (const auto& [k, c] : x.coords)
        out.add_term(k, Rat(m.cartan_eigenvalue(node, k)) * c);
    return out;
}

inline ModuleVector basis_vector(int k) {
    ModuleVector v;
    v.add_term(k, 1);
    return v;
}

/// rho(u) for u supported in grade 1: sum of u_k X_{mu_k - omega} applied
/// to x. This realizes the abelian nilpotent algebra n acting on V.
inline ModuleVector rho_apply(const MinusculeModule& m, const ModuleVector& u,
                              const ModuleVector& x)
{
    ModuleVector out;
    for (const auto& [k, c] : u.coords) {
        if (m.grade1_root[k] < 0)
            throw std::invalid_argument("rho_apply: vector is not supported in grade 1");
        ModuleVector piece = act_root(m, m.grade1_root[k], x);
        piece *= c;
        out += piece;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Relation verification
// ---------------------------------------------------------------------------

namespace detail {

/// Dense little operator on the module, exact integer entries.
struct DenseOp {
    int n = 0;
    std::vector<std::vector<long>> a;  // a[row][col]

    static DenseOp zero(int n) { return {n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0))}; }

    static DenseOp from_table(const MinusculeModule& m, int root_idx)
    {
        DenseOp op = zero(m.dim());
        for (int k = 0; k < m.dim(); ++k) {
            const OpEntry& e = m.entry(root_idx, k);
            if (e.to >= 0) op.a[e.to][k] += e.sign;
        }
        return op;
    }

    static DenseOp cartan(const MinusculeModule& m, int node)
    {
        DenseOp op = zero(m.dim());
        for (int k = 0; k < m.dim(); ++k) op.a[k][k] = m.cartan_eigenvalue(node, k);
        return op;
    }

    DenseOp mul(const DenseOp& o) const
    {
        DenseOp out = zero(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) out.a[i][j] += a[i][k] * o.a[k][j];
            }
        return out;
    }

    DenseOp sub(const DenseOp& o) const
    {
        DenseOp out = *this;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.a[i][j] -= o.a[i][j];
        return out;
    }

    DenseOp scale(long s) const
    {
        DenseOp out = *this;
        for (auto& row : out.a)
            for (auto& x : row) x *= s;
        return out;
    }

    DenseOp commutator(const DenseOp& o) const { return mul(o).sub(o.mul(*this)); }

    bool is_zero() const
    {
        for (const auto& row : a)
            for (long x : row)
                if (x != 0) return false;
        return true;
    }
};

} // namespace detail

struct RelationCheck {
    std::string family;
    bool pass = true;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> families;

    bool all_pass() const
    {
        for (const auto& f : families)
            if (!f.pass) return false;
        return true;
    }
};

/// Checks the Serre presentation as exact operator identities on the whole
/// basis: [h_i, e_j] = C_ji e_j, [e_i, f_j] = delta_ij h_i, and
/// (ad e_i)^{1 - C_ji} e_j = 0 with its f-analogue.
inline RelationReport verify_module_relations(const MinusculeModule& m)
{
    using detail::DenseOp;
    const int r = m.rs.rank;

    std::vector<DenseOp> E, F, H;
    for (int i = 0; i < r; ++i) {
        E.push_back(DenseOp::from_table(m, m.raise_index[i]));
        F.push_back(DenseOp::from_table(m, m.lower_index[i]));
        H.push_back(DenseOp::cartan(m, i));
    }

    RelationReport report;
    auto run_family = [&](const std::string& name, auto&& body) {
        RelationCheck check{name, true, ""};
        body(check);
        report.families.push_back(std::move(check));
    };

    auto fail = [](RelationCheck& c, int i, int j, const char* what) {
        if (!c.pass) return;
        std::ostringstream os;
        os << what << " violated at (i,j)=(" << i << "," << j << ")";
        c.pass = false;
        c.detail = os.str();
    };

    run_family("cartan-raise", [&](RelationCheck& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (!H[i].commutator(E[j]).sub(E[j].scale(m.rs.cartan[j][i])).is_zero())
                    fail(c, i, j, "[h_i, e_j] = C_ji e_j");
    });
    run_family("cartan-lower", [&](RelationCheck& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (!H[i].commutator(F[j]).sub(F[j].scale(-m.rs.cartan[j][i])).is_zero())
                    fail(c, i, j, "[h_i, f_j] = -C_ji f_j");
    });
    run_family("raise-lower", [&](RelationCheck& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                DenseOp want = (i == j) ? H[i] : DenseOp::zero(m.dim());
                if (!E[i].commutator(F[j]).sub(want).is_zero())
                    fail(c, i, j, "[e_i, f_j] = delta_ij h_i");
            }
    });
    run_family("serre-raise", [&](RelationCheck& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                DenseOp acc = E[j];
                for (int k = 0; k < 1 - m.rs.cartan[j][i]; ++k) acc = E[i].commutator(acc);
                if (!acc.is_zero()) fail(c, i, j, "(ad e_i)^{1-C_ji} e_j = 0");
            }
    });
    run_family("serre-lower", [&](RelationCheck& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                DenseOp acc = F[j];
                for (int k = 0; k < 1 - m.rs.cartan[j][i]; ++k) acc = F[i].commutator(acc);
                if (!acc.is_zero()) fail(c, i, j, "(ad f_i)^{1-C_ji} f_j = 0");
            }
    });

    return report;
}

// ---------------------------------------------------------------------------
// Levi restriction
// ---------------------------------------------------------------------------

struct LeviSummary {
    std::vector<int> grade_dims;
    int v1_highest_elem = -1;        // element of weight omega - alpha_cut
    IntVec v1_levi_weight;           // pairings <omega - alpha_cut, alpha_i^vee>, i != cut
    std::vector<int> adjacent_nodes; // nodes adjacent to the cut in the diagram
    bool v1_highest_killed_by_levi_raising = false;
    bool v1_connected_under_levi_lowering = false;
};

/// Restriction to the Levi subalgebra obtained by deleting the cut node:
/// per-grade dimensions plus the identification of the grade-1 highest
/// weight vector and its Levi weight.
inline LeviSummary levi_decomposition(const MinusculeModule& m)
{
    const int r = m.rs.rank;
    LeviSummary s;
    for (const auto& g : m.elems_by_grade) s.grade_dims.push_back(static_cast<int>(g.size()));

    IntVec target = sub(m.highest_weight, simple_root_fw(m.rs, m.cut));
    s.v1_highest_elem = m.weights.index.at(target);

    s.v1_levi_weight.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        if (i == m.cut) continue;
        s.v1_levi_weight[i] = target[i];
        if (m.rs.cartan[m.cut][i] == -1) s.adjacent_nodes.push_back(i);
    }

    s.v1_highest_killed_by_levi_raising = true;
    for (int i = 0; i < r; ++i) {
        if (i == m.cut) continue;
        if (m.entry(m.raise_index[i], s.v1_highest_elem).to >= 0)
            s.v1_highest_killed_by_levi_raising = false;
    }

    // Grade 1 must be reachable from its highest vector by Levi lowering.
    if (static_cast<int>(m.elems_by_grade.size()) > 1) {
        std::set<int> seen{s.v1_highest_elem};
        std::vector<int> queue{s.v1_highest_elem};
        while (!queue.empty()) {
            int k = queue.back();
            queue.pop_back();
            for (int i = 0; i < r; ++i) {
                if (i == m.cut) continue;
                int to = m.entry(m.lower_index[i], k).to;
                if (to >= 0 && seen.insert(to).second) queue.push_back(to);
            }
        }
        s.v1_connected_under_levi_lowering =
            seen.size() == m.elems_by_grade[1].size();
    }
    return s;
}

} // namespace weylcone
