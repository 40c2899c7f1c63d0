#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylcone/linalg.hpp"
#include "weylcone/rational.hpp"
#include "weylcone/schreier.hpp"

namespace weylcone {

/// Exact root-system and weight-lattice data for simply-laced types.
///
/// Conventions: simple roots/nodes are indexed 0..rank-1 following the
/// Bourbaki numbering of the corresponding diagram; the invariant bilinear
/// form is normalized so that (alpha, alpha) = 2 for every root. Vectors
/// carry a basis tag distinguishing simple-root coordinates from
/// fundamental-weight coordinates.

enum class Basis { SimpleRoot, FundamentalWeight };

struct LatticeVector {
    RatVec coords;
    Basis basis = Basis::SimpleRoot;
};

struct RootSystemData {
    std::string label;                    // "A4", "D5", "E6", "E7" or "custom"
    int rank = 0;
    IntMat cartan;
    RatMat cartan_inverse;
    std::vector<IntVec> positive_roots;   // simple-root coordinates
    IntVec highest_root;
};

struct WeylOrbitData {
    IntVec base_weight;                       // fundamental-weight coordinates
    std::vector<IntVec> elements;             // element 0 is the base weight
    std::vector<std::vector<int>> reflection_tables;  // [node][elem] -> elem
    std::map<IntVec, int> index;

    int size() const { return static_cast<int>(elements.size()); }
};

namespace detail {

inline IntMat cartan_from_edges(int rank, const std::vector<std::pair<int, int>>& edges)
{
    IntMat c(rank, IntVec(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    return c;
}

inline IntMat known_cartan(const std::string& label)
{
    if (label == "A4") return cartan_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    if (label == "D5") return cartan_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    if (label == "E6") return cartan_from_edges(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    if (label == "E7")
        return cartan_from_edges(7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}});
    throw std::invalid_argument("unknown root system label: " + label);
}

} // namespace detail

/// Builds the root-system data from a simply-laced Cartan matrix. The
/// positive roots are enumerated by closure: starting from the simple
/// roots, gamma + alpha_i is added whenever <gamma, alpha_i^vee> < 0, and
/// simple reflections of known roots are kept when they stay positive.
inline RootSystemData build_root_system(const IntMat& cartan, const std::string& label = "custom")
{
    const int r = static_cast<int>(cartan.size());
    if (r == 0) throw std::invalid_argument("empty Cartan matrix");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(cartan[i].size()) != r)
            throw std::invalid_argument("Cartan matrix is not square");
        if (cartan[i][i] != 2)
            throw std::invalid_argument("Cartan matrix diagonal entry is not 2");
        for (int j = 0; j < r; ++j) {
            if (cartan[i][j] != cartan[j][i])
                throw std::invalid_argument("Cartan matrix is not symmetric");
            if (i != j && cartan[i][j] != 0 && cartan[i][j] != -1)
                throw std::invalid_argument(
                    "Cartan matrix is not simply laced: off-diagonal entry must be 0 or -1");
        }
    }
    // Positive definiteness rules out affine diagrams, for which the closure
    // below would not terminate.
    for (int k = 1; k <= r; ++k) {
        RatMat minor(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = cartan[i][j];
        if (rat_rank(minor) < k)
            throw std::invalid_argument("Cartan matrix is not of finite type");
    }

    RootSystemData rs;
    rs.label = label;
    rs.rank = r;
    rs.cartan = cartan;
    {
        RatMat c(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) c[i][j] = cartan[i][j];
        rs.cartan_inverse = rat_inverse(std::move(c));
    }

    std::set<IntVec> roots;
    std::vector<IntVec> queue;
    for (int i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    auto pairing_with_simple = [&](const IntVec& g, int i) {
        long s = 0;
        for (int j = 0; j < r; ++j) s += long(cartan[i][j]) * g[j];
        return s;
    };
    while (!queue.empty()) {
        IntVec g = queue.back();
        queue.pop_back();
        for (int i = 0; i < r; ++i) {
            long pair = pairing_with_simple(g, i);
            if (pair < 0) {
                IntVec h = g;
                h[i] += 1;
                if (roots.insert(h).second) queue.push_back(h);
            }
            IntVec refl = g;
            refl[i] -= static_cast<int>(pair);
            bool positive = true;
            for (int x : refl)
                if (x < 0) { positive = false; break; }
            if (positive && roots.insert(refl).second) queue.push_back(refl);
        }
    }
    rs.positive_roots.assign(roots.begin(), roots.end());

    IntVec high(r, 0);
    for (const IntVec& g : rs.positive_roots)
        for (int i = 0; i < r; ++i) high[i] = std::max(high[i], g[i]);
    if (!roots.count(high))
        throw std::runtime_error("no coordinatewise-dominant highest root (reducible input?)");
    rs.highest_root = high;
    return rs;
}

inline RootSystemData build_root_system(const std::string& label)
{
    return build_root_system(detail::known_cartan(label), label);
}

/// Path diagram A_r.
inline IntMat cartan_type_a(int r)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
    return detail::cartan_from_edges(r, edges);
}

/// D_r: path 0..r-3 with both r-2 and r-1 attached to r-3.
inline IntMat cartan_type_d(int r)
{
    if (r < 3) throw std::invalid_argument("cartan_type_d: rank must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < r - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(r - 3, r - 2);
    edges.emplace_back(r - 3, r - 1);
    return detail::cartan_from_edges(r, edges);
}

/// Positive-definiteness guarantees a unique dominant root per component;
/// for reducible systems highest_root is only meaningful per component, so
/// the builder above insists on a genuine coordinatewise maximum.

inline LatticeVector to_weight_basis(const RootSystemData& rs, const LatticeVector& v)
{
    if (v.basis == Basis::FundamentalWeight) return v;
    RatVec out(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) out[i] += Rat(rs.cartan[i][j]) * v.coords[j];
    return {std::move(out), Basis::FundamentalWeight};
}

inline LatticeVector to_root_basis(const RootSystemData& rs, const LatticeVector& v)
{
    if (v.basis == Basis::SimpleRoot) return v;
    return {mat_vec(rs.cartan_inverse, v.coords), Basis::SimpleRoot};
}

/// W-invariant inner product, exact. In mixed bases the pairing reduces to
/// a plain dot product; in a pure basis the Gram matrix is C or C^{-1}.
inline Rat inner_product(const RootSystemData& rs, const LatticeVector& a, const LatticeVector& b)
{
    if (static_cast<int>(a.coords.size()) != rs.rank ||
        static_cast<int>(b.coords.size()) != rs.rank)
        throw std::invalid_argument("inner_product: rank mismatch");
    if (a.basis != b.basis) return dot(a.coords, b.coords);
    Rat s = 0;
    if (a.basis == Basis::SimpleRoot) {
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) s += a.coords[i] * Rat(rs.cartan[i][j]) * b.coords[j];
    } else {
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) s += a.coords[i] * rs.cartan_inverse[i][j] * b.coords[j];
    }
    return s;
}

/// Pairing <mu, gamma^vee> for mu in weight coordinates and a root gamma in
/// root coordinates; integer-valued.
inline long pair_weight_root(const IntVec& mu_fw, const IntVec& gamma_root)
{
    return dot(mu_fw, gamma_root);
}

inline IntVec fundamental_weight(const RootSystemData& rs, int node)
{
    IntVec w(rs.rank, 0);
    w.at(node) = 1;
    return w;
}

inline IntVec simple_root_fw(const RootSystemData& rs, int node)
{
    // alpha_i in fundamental-weight coordinates is the i-th column of C.
    IntVec a(rs.rank);
    for (int j = 0; j < rs.rank; ++j) a[j] = rs.cartan[j][node];
    return a;
}

inline IntVec reflect_fw(const RootSystemData& rs, int node, const IntVec& mu)
{
    IntVec out = mu;
    int c = mu[node];
    if (c == 0) return out;
    for (int j = 0; j < rs.rank; ++j) out[j] -= c * rs.cartan[j][node];
    return out;
}

/// Weyl orbit of a dominant integral weight by breadth-first closure under
/// the simple reflections. Element 0 is the base weight; the remaining
/// elements are ordered lexicographically descending on their
/// fundamental-weight coordinates, so indexing is deterministic.
inline WeylOrbitData weyl_orbit(const RootSystemData& rs, const IntVec& fw_weight)
{
    if (static_cast<int>(fw_weight.size()) != rs.rank)
        throw std::invalid_argument("weyl_orbit: rank mismatch");
    for (int c : fw_weight)
        if (c < 0) throw std::invalid_argument("weyl_orbit: weight is not dominant");

    std::set<IntVec> seen{fw_weight};
    std::vector<IntVec> queue{fw_weight};
    while (!queue.empty()) {
        IntVec mu = queue.back();
        queue.pop_back();
        for (int i = 0; i < rs.rank; ++i) {
            IntVec nu = reflect_fw(rs, i, mu);
            if (seen.insert(nu).second) queue.push_back(nu);
        }
    }

    WeylOrbitData orbit;
    orbit.base_weight = fw_weight;
    orbit.elements.assign(seen.begin(), seen.end());
    std::sort(orbit.elements.begin(), orbit.elements.end(),
              [](const IntVec& a, const IntVec& b) { return b < a; });
    auto at = std::find(orbit.elements.begin(), orbit.elements.end(), fw_weight);
    std::rotate(orbit.elements.begin(), at, at + 1);
    for (int k = 0; k < orbit.size(); ++k) orbit.index[orbit.elements[k]] = k;

    orbit.reflection_tables.assign(rs.rank, std::vector<int>(orbit.size()));
    for (int i = 0; i < rs.rank; ++i)
        for (int k = 0; k < orbit.size(); ++k)
            orbit.reflection_tables[i][k] = orbit.index.at(reflect_fw(rs, i, orbit.elements[k]));
    return orbit;
}

/// Label l(alpha): coefficient of the simple root alpha_node in the highest
/// root.
inline int root_label(const RootSystemData& rs, int node)
{
    return rs.highest_root.at(node);
}

namespace detail {

inline int canonical_minuscule_node(const RootSystemData& rs)
{
    if (rs.label == "A4") return 2;
    if (rs.label == "D5") return 4;
    if (rs.label == "E6") return 5;
    if (rs.label == "E7") return 6;
    return 0;
}

} // namespace detail

inline unsigned long long weyl_group_order(const RootSystemData& rs, const WeylOrbitData& orbit)
{
    if (static_cast<int>(orbit.reflection_tables.size()) != rs.rank)
        throw std::invalid_argument("weyl_group_order: orbit does not match root system");
    std::vector<Perm> gens;
    for (const auto& table : orbit.reflection_tables) gens.push_back(table);
    return perm_group_order(gens);
}

inline unsigned long long weyl_group_order(const RootSystemData& rs)
{
    IntVec w = fundamental_weight(rs, detail::canonical_minuscule_node(rs));
    return weyl_group_order(rs, weyl_orbit(rs, w));
}

} // namespace weylcone
