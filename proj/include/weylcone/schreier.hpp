#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylcone/rational.hpp"

namespace weylcone {

/// Order of a finite permutation group via a stabilizer chain
/// (Schreier-Sims). Degrees in this project are at most 56 and orders at
/// most a few million, so the plain quadratic bookkeeping below is plenty.

using Perm = std::vector<int>;

inline Perm perm_identity(int n)
{
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline bool perm_is_identity(const Perm& p)
{
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

// (a * b)(x) = a(b(x))
inline Perm perm_compose(const Perm& a, const Perm& b)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inverse(const Perm& a)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

namespace detail {

struct StabChain {
    int n = 0;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;   // gens[k] stabilize base[0..k-1]
    std::vector<std::set<Perm>> gen_sets;
    std::vector<std::vector<int>> in_orbit;      // point -> orbit position or -1
    std::vector<std::vector<Perm>> transversal;  // per point: u with u(base[k]) = point
    std::vector<std::vector<int>> orbit;

    void push_level(int point)
    {
        base.push_back(point);
        gens.emplace_back();
        gen_sets.emplace_back();
        in_orbit.emplace_back();
        transversal.emplace_back();
        orbit.emplace_back();
    }

    void recompute_orbit(std::size_t k)
    {
        in_orbit[k].assign(n, -1);
        transversal[k].assign(n, Perm());
        orbit[k].clear();
        orbit[k].push_back(base[k]);
        in_orbit[k][base[k]] = 0;
        transversal[k][base[k]] = perm_identity(n);
        for (std::size_t head = 0; head < orbit[k].size(); ++head) {
            int p = orbit[k][head];
            for (const Perm& s : gens[k]) {
                int q = s[p];
                if (in_orbit[k][q] < 0) {
                    in_orbit[k][q] = static_cast<int>(orbit[k].size());
                    orbit[k].push_back(q);
                    transversal[k][q] = perm_compose(s, transversal[k][p]);
                }
            }
        }
    }

    // Returns the residue and the level at which sifting stopped
    // (== base.size() when the residue fixes every base point).
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const
    {
        for (std::size_t k = from; k < base.size(); ++k) {
            int x = g[base[k]];
            if (in_orbit[k][x] < 0) return {std::move(g), k};
            g = perm_compose(perm_inverse(transversal[k][x]), g);
        }
        return {std::move(g), base.size()};
    }

    bool add_generator(const Perm& g, std::size_t level)
    {
        bool added = false;
        for (std::size_t j = level; j < base.size(); ++j) {
            // g must stabilize base[0..j-1] to be a strong generator here.
            bool ok = true;
            for (std::size_t b = 0; b < j; ++b)
                if (g[base[b]] != base[b]) { ok = false; break; }
            if (!ok) break;
            if (gen_sets[j].insert(g).second) {
                gens[j].push_back(g);
                added = true;
            }
        }
        return added;
    }
};

} // namespace detail

/// Computes |<generators>| for permutations of {0..n-1}. Throws if a
/// generator acts as the identity, which in this project signals a
/// non-faithful action upstream.
inline unsigned long long perm_group_order(const std::vector<Perm>& generators)
{
    if (generators.empty()) return 1;
    const int n = static_cast<int>(generators[0].size());
    for (const Perm& g : generators) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("perm_group_order: degree mismatch");
        if (perm_is_identity(g))
            throw std::invalid_argument("perm_group_order: generator acts trivially");
    }

    detail::StabChain chain;
    chain.n = n;

    auto moved_point = [n](const Perm& g) {
        for (int i = 0; i < n; ++i)
            if (g[i] != i) return i;
        return -1;
    };

    chain.push_level(moved_point(generators[0]));
    for (const Perm& g : generators) {
        bool fixes_all_base = true;
        for (int b : chain.base)
            if (g[b] != b) { fixes_all_base = false; break; }
        if (fixes_all_base) chain.push_level(moved_point(g));
        chain.add_generator(g, 0);
    }

    // Fixpoint: every Schreier generator must sift to the identity. Orbits
    // are refreshed at every pass so that a failed sift always grows some
    // strong generator set, which bounds the number of passes.
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (std::size_t k = 0; k < chain.base.size(); ++k) chain.recompute_orbit(k);
        for (std::size_t k = 0; k < chain.base.size() && !dirty; ++k) {
            for (int p : chain.orbit[k]) {
                for (const Perm& s : chain.gens[k]) {
                    Perm schreier = perm_compose(
                        perm_inverse(chain.transversal[k][s[p]]),
                        perm_compose(s, chain.transversal[k][p]));
                    if (perm_is_identity(schreier)) continue;
                    auto [res, lvl] = chain.sift(schreier, k + 1);
                    if (perm_is_identity(res)) continue;
                    if (lvl == chain.base.size()) chain.push_level(moved_point(res));
                    chain.add_generator(res, k + 1);
                    dirty = true;
                    break;
                }
                if (dirty) break;
            }
        }
    }

    unsigned long long order = 1;
    for (std::size_t k = 0; k < chain.base.size(); ++k) {
        chain.recompute_orbit(k);
        order *= static_cast<unsigned long long>(chain.orbit[k].size());
    }
    return order;
}

} // namespace weylcone
