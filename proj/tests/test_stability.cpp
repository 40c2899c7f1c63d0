#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weylcone/minrep.hpp"
#include "weylcone/stability.hpp"

using namespace weylcone;

namespace {

struct PolyCase {
    RootSystemData rs;
    WeylOrbitData orbit;
    WeightPolytope poly;
};

PolyCase make_poly(const std::string& label, int node)
{
    PolyCase c{build_root_system(label), {}, {}};
    c.orbit = weyl_orbit(c.rs, fundamental_weight(c.rs, node));
    c.poly = make_weight_polytope(c.rs, c.orbit);
    return c;
}

const PolyCase& poly_case(int which)
{
    static const std::vector<PolyCase> cases = {
        make_poly("A4", 2), make_poly("D5", 4), make_poly("E6", 5), make_poly("E7", 6)};
    return cases[which];
}

} // namespace

TEST_CASE("zero lies in the interior of the full weight polytope")
{
    for (int i = 0; i < 4; ++i) {
        const auto& c = poly_case(i);
        CHECK(zero_in_interior(c.poly, all_indices(c.poly)));
    }
}

TEST_CASE("removing the top vertex keeps zero interior for E6")
{
    const auto& c = poly_case(2);
    std::vector<int> keep;
    for (int s = 1; s < static_cast<int>(c.poly.verts.size()); ++s) keep.push_back(s);
    CHECK(zero_in_interior(c.poly, keep));
}

TEST_CASE("a half-space subset fails the interior test")
{
    const auto& c = poly_case(1);
    std::vector<int> half;
    for (std::size_t s = 0; s < c.poly.verts.size(); ++s)
        if (c.poly.gram[0][s] > 0) half.push_back(static_cast<int>(s));
    REQUIRE(!half.empty());
    CHECK_FALSE(zero_in_interior(c.poly, half));

    CHECK_FALSE(zero_in_interior(c.poly, {0}));
    CHECK_THROWS_AS(zero_in_interior(c.poly, {}), std::invalid_argument);
}

TEST_CASE("adjacency: basic instances")
{
    const auto& e7 = poly_case(3);
    // omega and omega - alpha_7 are adjacent.
    IntVec next = sub(e7.poly.verts[0], simple_root_fw(e7.rs, 6));
    int next_idx = -1;
    for (std::size_t s = 0; s < e7.poly.verts.size(); ++s)
        if (e7.poly.verts[s] == next) next_idx = static_cast<int>(s);
    REQUIRE(next_idx >= 0);
    CHECK(polytope_adjacent(e7.poly, 0, next_idx));
    CHECK(adjacent_by_pairing(e7.poly, 0, next_idx));

    // omega and -omega are not (pairing -3/2 != 1/2).
    IntVec neg(e7.rs.rank, 0);
    neg[6] = -1;
    int neg_idx = -1;
    for (std::size_t s = 0; s < e7.poly.verts.size(); ++s)
        if (e7.poly.verts[s] == neg) neg_idx = static_cast<int>(s);
    REQUIRE(neg_idx >= 0);
    CHECK(e7.poly.gram[0][neg_idx] == Rat(-3, 2));
    CHECK_FALSE(polytope_adjacent(e7.poly, 0, neg_idx));
    CHECK_FALSE(adjacent_by_pairing(e7.poly, 0, neg_idx));

    CHECK_THROWS_AS(polytope_adjacent(e7.poly, 3, 3), std::invalid_argument);
}

TEST_CASE("LP edge test agrees with the pairing criterion exhaustively")
{
    for (int i : {0, 1}) {  // A4 and D5 here; the acceptance suite covers all four
        const auto& c = poly_case(i);
        const int n = static_cast<int>(c.poly.verts.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                CHECK(polytope_adjacent(c.poly, a, b) == adjacent_by_pairing(c.poly, a, b));
    }
}

TEST_CASE("adjacency is Weyl equivariant")
{
    const auto& c = poly_case(1);
    const int n = static_cast<int>(c.poly.verts.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool adj = adjacent_by_pairing(c.poly, a, b);
            for (int i = 0; i < c.rs.rank; ++i) {
                int sa = c.orbit.reflection_tables[i][a];
                int sb = c.orbit.reflection_tables[i][b];
                CHECK(adjacent_by_pairing(c.poly, sa, sb) == adj);
            }
        }
}

TEST_CASE("stability under singleton and non-adjacent pair removals")
{
    const auto& c = poly_case(0);  // A4 exhaustively here
    const int n = static_cast<int>(c.poly.verts.size());
    CHECK(stable_after_removals(c.poly, {}));
    for (int s = 0; s < n; ++s) CHECK(stable_after_removals(c.poly, {s}));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!adjacent_by_pairing(c.poly, a, b))
                CHECK(stable_after_removals(c.poly, {a, b}));
    CHECK_THROWS_AS(stable_after_removals(c.poly, all_indices(c.poly)), std::invalid_argument);
}

TEST_CASE("interior test is monotone under adding vertices")
{
    const auto& c = poly_case(2);  // E6
    const int n = static_cast<int>(c.poly.verts.size());
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> small, big;
        for (int s = 0; s < n; ++s) {
            int c4 = coin(rng);
            if (c4 == 0) continue;      // in neither
            big.push_back(s);
            if (c4 != 1) small.push_back(s);  // in both
        }
        if (small.empty() || big.size() == small.size()) continue;
        if (zero_in_interior(c.poly, small)) CHECK(zero_in_interior(c.poly, big));
    }
}

TEST_CASE("every orbit point is a vertex of the hull")
{
    for (int i : {0, 1}) {
        const auto& c = poly_case(i);
        for (int v = 0; v < static_cast<int>(c.poly.verts.size()); ++v)
            CHECK_FALSE(in_convex_hull_of_others(c.poly, v));
    }
}

TEST_CASE("the fundamental inequality separates the series from the excluded list")
{
    // In-scope pairs: strict inequality holds.
    CHECK(fundamental_inequality(build_root_system("A4"), 2).holds);
    CHECK(fundamental_inequality(build_root_system("D5"), 4).holds);
    CHECK(fundamental_inequality(build_root_system("E6"), 5).holds);
    CHECK(fundamental_inequality(build_root_system("E7"), 6).holds);

    auto e7 = build_root_system("E7");
    auto f = fundamental_inequality(e7, 6);
    CHECK(f.omega_sq == Rat(3, 2));
    CHECK(f.half_alpha_sq == 1);

    // Excluded pairs among the simply-laced families.
    for (int r = 2; r <= 8; ++r) {
        auto ar = build_root_system(cartan_type_a(r), "A" + std::to_string(r));
        CHECK_FALSE(fundamental_inequality(ar, 0).holds);       // (A_r, omega_1)
        CHECK_FALSE(fundamental_inequality(ar, r - 1).holds);   // (A_r, omega_r)
    }
    for (int r = 4; r <= 8; ++r) {
        auto dr = build_root_system(cartan_type_d(r), "D" + std::to_string(r));
        CHECK_FALSE(fundamental_inequality(dr, 0).holds);       // (D_r, omega_1)
    }
    auto a3 = build_root_system(cartan_type_a(3), "A3");
    auto f3 = fundamental_inequality(a3, 1);                    // (A_3, omega_2)
    CHECK_FALSE(f3.holds);
    CHECK(f3.omega_sq == 1);
    auto a4 = build_root_system("A4");
    CHECK(fundamental_inequality(a4, 0).omega_sq == Rat(4, 5)); // (A_4, omega_1)
    auto d4 = build_root_system(cartan_type_d(4), "D4");
    CHECK_FALSE(fundamental_inequality(d4, 2).holds);           // (D_4, omega_3)
    CHECK_FALSE(fundamental_inequality(d4, 3).holds);           // (D_4, omega_4)
}
