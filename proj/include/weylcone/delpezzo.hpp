#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylcone/rootlat.hpp"

namespace weylcone {

/// Picard-lattice combinatorics of a plane blown up in r points: the
/// lattice N_r with intersection form diag(1,-1,...,-1), the canonical
/// class K_r = -3 l0 + sum l_i, exceptional / conic-bundle / root classes,
/// and the dictionary sending classes to weights of the matching root
/// system.
///
/// Storage convention: a class is the integer vector (a, b_1, ..., b_r)
/// standing for a*l0 - sum_i b_i*l_i, so the classical lists (l_i, lines
/// l0 - l_i - l_j, conics 2 l0 - ...) have nonnegative entries.

enum class ClassKind { Exceptional, Conic, Root };

struct DivisorClass {
    IntVec coords;  // (a, b_1..b_r)

    int a() const { return coords[0]; }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y)
    {
        return x.coords == y.coords;
    }
    friend bool operator<(const DivisorClass& x, const DivisorClass& y)
    {
        return x.coords < y.coords;
    }
};

struct PicardLattice {
    int r = 0;
    int degree = 0;          // 9 - r
    DivisorClass canonical;  // K_r
};

inline PicardLattice make_picard(int r)
{
    if (r < 4 || r > 7) throw std::invalid_argument("make_picard: r must be in 4..7");
    PicardLattice pl;
    pl.r = r;
    pl.degree = 9 - r;
    pl.canonical.coords.assign(r + 1, -1);
    pl.canonical.coords[0] = -3;
    return pl;
}

/// Intersection pairing: (x . y) = a a' - sum b_i b'_i.
inline long intersect(const DivisorClass& x, const DivisorClass& y)
{
    long v = long(x.coords[0]) * y.coords[0];
    for (std::size_t i = 1; i < x.coords.size(); ++i) v -= long(x.coords[i]) * y.coords[i];
    return v;
}

inline long self_intersection(const DivisorClass& x) { return intersect(x, x); }

inline DivisorClass class_add_multiple(const DivisorClass& x, long c, const DivisorClass& y)
{
    DivisorClass out = x;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] += static_cast<int>(c * y.coords[i]);
    return out;
}

/// Reflection in a (-2)-class: x -> x + (x.beta) beta.
inline DivisorClass reflect_class(const DivisorClass& x, const DivisorClass& beta)
{
    return class_add_multiple(x, intersect(x, beta), beta);
}

namespace detail {

struct KindSpec {
    long self = 0;
    long with_k = 0;
    int a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
};

inline KindSpec kind_spec(ClassKind kind)
{
    // Boxes deliberately carry a one-step margin beyond every known
    // solution family; enumerate_classes asserts post hoc that nothing
    // touches the boundary, which turns the bound into a tested fact.
    switch (kind) {
        case ClassKind::Exceptional: return {-1, -1, -1, 6, -3, 4};
        case ClassKind::Conic: return {0, -2, -1, 6, -3, 4};
        case ClassKind::Root: return {-2, 0, -6, 6, -4, 4};
    }
    throw std::invalid_argument("kind_spec: bad kind");
}

} // namespace detail

/// Exhaustive bounded search for the classes of one kind, deterministic
/// (lexicographic) order. Throws if any solution touches the search box,
/// since that would make the bound untrustworthy.
inline std::vector<DivisorClass> enumerate_classes(const PicardLattice& pl, ClassKind kind)
{
    const auto spec = detail::kind_spec(kind);
    std::vector<DivisorClass> found;
    IntVec b(pl.r, spec.b_lo);

    for (int a = spec.a_lo; a <= spec.a_hi; ++a) {
        // (x.K) = -3a + sum b  and  (x.x) = a^2 - sum b^2.
        const long want_sum = 3L * a + spec.with_k;
        const long want_sq = long(a) * a - spec.self;
        std::function<void(int, long, long)> rec = [&](int i, long sum, long sq) {
            if (sq > want_sq) return;
            const int left = pl.r - i;
            if (sum + long(spec.b_lo) * left > want_sum) return;
            if (sum + long(spec.b_hi) * left < want_sum) return;
            if (i == pl.r) {
                if (sum == want_sum && sq == want_sq) {
                    DivisorClass cls;
                    cls.coords.reserve(pl.r + 1);
                    cls.coords.push_back(a);
                    for (int x : b) cls.coords.push_back(x);
                    found.push_back(std::move(cls));
                }
                return;
            }
            for (int v = spec.b_lo; v <= spec.b_hi; ++v) {
                b[i] = v;
                rec(i + 1, sum + v, sq + long(v) * v);
            }
        };
        rec(0, 0, 0);
    }

    for (const auto& cls : found) {
        if (cls.coords[0] == spec.a_lo || cls.coords[0] == spec.a_hi)
            throw std::runtime_error("enumerate_classes: solution touches the a bound");
        for (int i = 1; i <= pl.r; ++i)
            if (cls.coords[i] == spec.b_lo || cls.coords[i] == spec.b_hi)
                throw std::runtime_error("enumerate_classes: solution touches the b bound");
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// The simple roots beta_1 = -l1 + l2, ..., beta_{r-1} = -l_{r-1} + l_r,
/// beta_r = -l0 + l1 + l2 + l3 of the root system in K^perp.
inline std::vector<DivisorClass> picard_simple_roots(const PicardLattice& pl)
{
    std::vector<DivisorClass> betas;
    for (int i = 1; i < pl.r; ++i) {
        DivisorClass cls;
        cls.coords.assign(pl.r + 1, 0);
        cls.coords[i] = 1;
        cls.coords[i + 1] = -1;
        betas.push_back(std::move(cls));
    }
    DivisorClass last;
    last.coords.assign(pl.r + 1, 0);
    last.coords[0] = -1;
    last.coords[1] = last.coords[2] = last.coords[3] = -1;
    betas.push_back(std::move(last));
    return betas;
}

/// Node dictionary: position i holds the 0-based Bourbaki node of the root
/// system R_r played by beta_{i+1}. Fixed by alpha_r = beta_{r-1} and
/// alpha_1 = beta_1 together with the diagram shapes.
inline std::vector<int> beta_to_node(int r)
{
    switch (r) {
        case 4: return {0, 1, 2, 3};
        case 5: return {0, 1, 2, 4, 3};
        case 6: return {0, 2, 3, 4, 5, 1};
        case 7: return {0, 2, 3, 4, 5, 6, 1};
    }
    throw std::invalid_argument("beta_to_node: r must be in 4..7");
}

inline std::string root_system_label(int r)
{
    switch (r) {
        case 4: return "A4";
        case 5: return "D5";
        case 6: return "E6";
        case 7: return "E7";
    }
    throw std::invalid_argument("root_system_label: r must be in 4..7");
}

/// The node carrying the minuscule weight of the dictionary (the pair
/// root): beta_{r-1} in Picard terms.
inline int pair_node(int r) { return beta_to_node(r)[r - 2]; }

/// Image of an exceptional (shift 1/d) or conic (shift 2/d) class in the
/// weight lattice: project along K_r and read off fundamental-weight
/// coordinates by pairing with the beta basis. The Picard form restricted
/// to K^perp is the negative of the root-space form, hence the sign flip.
inline IntVec class_to_weight(const PicardLattice& pl, const DivisorClass& cls, ClassKind kind)
{
    int shift;
    if (kind == ClassKind::Exceptional) {
        if (self_intersection(cls) != -1 || intersect(cls, pl.canonical) != -1)
            throw std::invalid_argument("class_to_weight: class is not exceptional");
        shift = 1;
    } else if (kind == ClassKind::Conic) {
        if (self_intersection(cls) != 0 || intersect(cls, pl.canonical) != -2)
            throw std::invalid_argument("class_to_weight: class is not a conic bundle");
        shift = 2;
    } else {
        throw std::invalid_argument("class_to_weight: kind must be exceptional or conic");
    }

    // x = cls + (shift/d) K, computed as d*cls + shift*K to stay integral.
    DivisorClass scaled = cls;
    for (auto& c : scaled.coords) c *= pl.degree;
    scaled = class_add_multiple(scaled, shift, pl.canonical);
    if (intersect(scaled, pl.canonical) != 0)
        throw std::runtime_error("class_to_weight: projection is not orthogonal to K");

    auto betas = picard_simple_roots(pl);
    auto nodes = beta_to_node(pl.r);
    IntVec fw(pl.r, 0);
    for (int i = 0; i < pl.r; ++i) {
        long v = -intersect(scaled, betas[i]);
        if (v % pl.degree != 0)
            throw std::runtime_error("class_to_weight: non-integral weight coordinate");
        fw[nodes[i]] = static_cast<int>(v / pl.degree);
    }
    return fw;
}

/// Closure of a class under the simple reflections.
inline std::vector<DivisorClass> reflection_orbit(const PicardLattice& pl,
                                                  const DivisorClass& start)
{
    auto betas = picard_simple_roots(pl);
    std::set<DivisorClass> seen{start};
    std::vector<DivisorClass> queue{start};
    while (!queue.empty()) {
        DivisorClass x = queue.back();
        queue.pop_back();
        for (const auto& beta : betas) {
            DivisorClass y = reflect_class(x, beta);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

inline DivisorClass line_class(const PicardLattice& pl, int i)
{
    DivisorClass cls;
    cls.coords.assign(pl.r + 1, 0);
    cls.coords[i] = -1;
    return cls;
}

/// l0 - l1, the conic bundle given by the pencil of lines through the
/// first point.
inline DivisorClass first_conic_class(const PicardLattice& pl)
{
    DivisorClass cls;
    cls.coords.assign(pl.r + 1, 0);
    cls.coords[0] = 1;
    cls.coords[1] = 1;
    return cls;
}

// ---------------------------------------------------------------------------
// Blow-up census
// ---------------------------------------------------------------------------

struct CensusReport {
    int pulled_back = 0;
    int new_point = 0;
    int conic_transforms = 0;
    int cubic_transforms = 0;
    bool matches_enumeration = false;
};

/// Builds the exceptional classes of N_r from those of N_{r-1}: pullbacks,
/// the class of the new exceptional divisor, proper transforms of conics
/// through the new point, and for r = 7 the transform of the tangent-plane
/// cubic. Verifies the union reproduces the enumerated set exactly.
inline CensusReport blowup_census(int r)
{
    if (r < 5 || r > 7) throw std::invalid_argument("blowup_census: r must be in 5..7");
    PicardLattice small = make_picard(r - 1), big = make_picard(r);

    std::set<DivisorClass> built;
    CensusReport report;

    auto extend = [&](const DivisorClass& cls, int last) {
        DivisorClass out = cls;
        out.coords.push_back(last);
        return out;
    };

    for (const auto& e : enumerate_classes(small, ClassKind::Exceptional)) {
        built.insert(extend(e, 0));
        ++report.pulled_back;
    }
    built.insert(line_class(big, r));
    report.new_point = 1;
    for (const auto& c : enumerate_classes(small, ClassKind::Conic)) {
        built.insert(extend(c, 1));  // c - l_r
        ++report.conic_transforms;
    }
    if (r == 7) {
        DivisorClass cubic;
        cubic.coords = {3, 1, 1, 1, 1, 1, 1, 2};  // -K' pullback - 2 l_7
        built.insert(cubic);
        report.cubic_transforms = 1;
    }

    auto enumerated = enumerate_classes(big, ClassKind::Exceptional);
    std::set<DivisorClass> expected(enumerated.begin(), enumerated.end());
    for (const auto& cls : built)
        if (self_intersection(cls) != -1 || intersect(cls, big.canonical) != -1)
            return report;  // matches_enumeration stays false
    report.matches_enumeration = built == expected;
    return report;
}

} // namespace weylcone
