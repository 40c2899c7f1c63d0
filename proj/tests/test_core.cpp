#include <catch2/catch_amalgamated.hpp>

#include "weylcone/linalg.hpp"
#include "weylcone/schreier.hpp"
#include "weylcone/simplex.hpp"

using namespace weylcone;

TEST_CASE("rational matrix rank and inverse")
{
    RatMat m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rat_rank(m) == 2);

    RatMat c = {{2, -1}, {-1, 2}};
    RatMat inv = rat_inverse(c);
    CHECK(inv[0][0] == Rat(2, 3));
    CHECK(inv[0][1] == Rat(1, 3));
    CHECK(inv[1][1] == Rat(2, 3));

    RatMat sing = {{1, 2}, {2, 4}};
    CHECK_THROWS_AS(rat_inverse(sing), std::invalid_argument);
}

TEST_CASE("simplex solves a plain 2d instance exactly")
{
    // max x+y s.t. x+2y <= 4, 3x+y <= 6: optimum 14/5 at (8/5, 6/5).
    LpProblem p;
    p.objective = {1, 1};
    p.ub_lhs = {{1, 2}, {3, 1}};
    p.ub_rhs = {4, 6};
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rat(14, 5));
    CHECK(sol.x[0] == Rat(8, 5));
    CHECK(sol.x[1] == Rat(6, 5));
}

TEST_CASE("simplex detects infeasibility and unboundedness")
{
    LpProblem inf;
    inf.objective = {1};
    inf.ub_lhs = {{1}, {-1}};
    inf.ub_rhs = {-2, 1};  // x <= -2 and x >= -1
    CHECK(solve_lp(inf).status == LpStatus::Infeasible);

    LpProblem unb;
    unb.objective = {1};
    unb.ub_lhs = {{-1}};
    unb.ub_rhs = {0};
    CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("simplex handles equality constraints")
{
    // max y s.t. x + y = 1, y - x <= 0: optimum 1/2.
    LpProblem p;
    p.objective = {0, 1};
    p.eq_lhs = {{1, 1}};
    p.eq_rhs = {1};
    p.ub_lhs = {{-1, 1}};
    p.ub_rhs = {0};
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rat(1, 2));
}

TEST_CASE("Bland's rule survives Beale's cycling instance")
{
    LpProblem p;
    p.objective = {Rat(3, 4), -150, Rat(1, 50), -6};
    p.ub_lhs = {{Rat(1, 4), -60, Rat(-1, 25), 9},
                {Rat(1, 2), -90, Rat(-1, 50), 3},
                {0, 0, 1, 0}};
    p.ub_rhs = {0, 0, 1};
    auto sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rat(1, 20));
}

TEST_CASE("stabilizer chain computes small group orders")
{
    // S5 from a transposition and a 5-cycle.
    Perm t = {1, 0, 2, 3, 4};
    Perm c = {1, 2, 3, 4, 0};
    CHECK(perm_group_order({t, c}) == 120ULL);

    // Cyclic group of order 6.
    Perm six = {1, 2, 3, 4, 5, 0};
    CHECK(perm_group_order({six}) == 6ULL);

    // Klein four-group from two disjoint transpositions.
    Perm a = {1, 0, 2, 3};
    Perm b = {0, 1, 3, 2};
    CHECK(perm_group_order({a, b}) == 4ULL);

    CHECK_THROWS_AS(perm_group_order({perm_identity(4)}), std::invalid_argument);
}

TEST_CASE("stabilizer chain on a larger wreath-like group")
{
    // <(0..7 cycle), (0 1)> = S8, order 40320.
    Perm cyc(8), tr = perm_identity(8);
    for (int i = 0; i < 8; ++i) cyc[i] = (i + 1) % 8;
    std::swap(tr[0], tr[1]);
    CHECK(perm_group_order({cyc, tr}) == 40320ULL);
}
