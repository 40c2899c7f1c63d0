#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weylcone/homspace.hpp"
#include "wedge_model.hpp"

using namespace weylcone;

namespace {

struct CaseData {
    RootSystemData rs;
    MinusculeModule mod;
    FormBundle forms;
};

CaseData make_case(const std::string& label, int node)
{
    CaseData c{build_root_system(label), {}, {}};
    c.mod = build_minuscule(c.rs, node);
    c.forms = extract_forms(c.mod);
    return c;
}

const CaseData& chain_case(int which)
{
    static const std::vector<CaseData> cases = {
        make_case("A4", 2), make_case("D5", 4), make_case("E6", 5), make_case("E7", 6)};
    return cases[which];
}

int p_rank(const FormBundle& fb, int l)
{
    IntMat a = fb.p[l];
    return int_rank(a);
}

} // namespace

TEST_CASE("form counts follow the graded dimensions")
{
    const std::vector<int> expected_forms = {3, 5, 10, 27};
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        CHECK(c.forms.n2() == expected_forms[i]);
        CHECK(c.forms.has_cubic == (c.rs.label == "E7"));
    }
}

TEST_CASE("ranks of the quadratic forms")
{
    const std::vector<int> expected_rank = {4, 6, 8, 10};
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        for (int l = 0; l < c.forms.n2(); ++l) CHECK(p_rank(c.forms, l) == expected_rank[i]);
    }
}

TEST_CASE("p kills single basis vectors and grades are enforced")
{
    const auto& c = chain_case(2);  // E6
    for (int k : c.forms.v1_elems) CHECK(p_of(c.mod, c.forms, basis_vector(k)).is_zero());

    ModuleVector bad = basis_vector(0);  // grade 0
    CHECK_THROWS_AS(p_of(c.mod, c.forms, bad), std::invalid_argument);
    CHECK_THROWS_AS(q_of(c.mod, c.forms, bad), std::invalid_argument);

    // No cubic outside the three-step grading.
    ModuleVector x = basis_vector(c.forms.v1_elems[0]);
    CHECK_THROWS_AS(q_of(c.mod, c.forms, x), std::invalid_argument);
}

TEST_CASE("exp is a homomorphism and lands on the cone")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        for (int s = 0; s < 25; ++s) {
            ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
            ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);

            GradedPoint ex = exp_point(c.mod, c.forms, x);
            CHECK(ex.y1 == x);  // pi . exp = id
            CHECK(satisfies_cone_equations(c.mod, c.forms, ex));

            CHECK(act_unipotent(c.mod, c.forms, y, ex) == exp_point(c.mod, c.forms, x + y));
            CHECK(act_unipotent(c.mod, c.forms, x, exp_point(c.mod, c.forms, y)) ==
                  exp_point(c.mod, c.forms, x + y));

            GradedPoint moved = act_gt(Rat(-5, 3), ex);
            CHECK(satisfies_cone_equations(c.mod, c.forms, moved));
            CHECK(act_gt(1, ex) == ex);
        }
    }
    CHECK_THROWS_AS(act_gt(0, GradedPoint{}), std::invalid_argument);
    GradedPoint origin = exp_point(chain_case(0).mod, chain_case(0).forms, ModuleVector{});
    CHECK(origin.y0 == 1);
    CHECK(origin.y1.is_zero());
    CHECK(origin.y2.is_zero());
}

TEST_CASE("polarization identity and commutativity of the nilpotent algebra")
{
    std::mt19937_64 rng(202);
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        for (int s = 0; s < 25; ++s) {
            ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
            ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);

            ModuleVector two_pxy = p_bilinear(c.mod, c.forms, x, y);
            two_pxy *= 2;
            CHECK(p_of(c.mod, c.forms, x + y) ==
                  p_of(c.mod, c.forms, x) + two_pxy + p_of(c.mod, c.forms, y));

            // 2p(x,y) is the algebra product x.y realized by rho(x) on y.
            CHECK(rho_apply(c.mod, x, y) == two_pxy);
            CHECK(rho_apply(c.mod, x, rho_apply(c.mod, y, basis_vector(0))) ==
                  rho_apply(c.mod, y, rho_apply(c.mod, x, basis_vector(0))));
        }
    }
}

TEST_CASE("cubic identities for the three-step grading")
{
    const auto& c = chain_case(3);  // E7
    REQUIRE(c.forms.has_cubic);
    std::mt19937_64 rng(303);

    for (int s = 0; s < 25; ++s) {
        ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
        ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);
        ModuleVector z = random_v1_vector(c.mod, c.forms, rng, false);

        // 3q(x,x,y) = p(x).y in the algebra.
        Rat lhs = 3 * q_trilinear(c.mod, c.forms, x, x, y);
        ModuleVector prod = rho_apply(c.mod, y, p_of(c.mod, c.forms, x));
        CHECK(lhs == prod.coeff(c.forms.v3_elem));

        // Trilinear expansion through the paired quadratic forms.
        Rat rhs = 0;
        for (int a = 0; a < c.forms.n1(); ++a) {
            int mu = c.forms.v1_elems[a];
            IntVec lam = add(sub(c.mod.weights.elements[c.forms.v3_elem],
                                 c.mod.weights.elements[mu]),
                             c.mod.highest_weight);
            int lam_elem = c.mod.weights.index.at(lam);
            const auto& e = c.mod.entry(c.mod.grade1_root[mu], lam_elem);
            REQUIRE(e.to == c.forms.v3_elem);
            Rat plam_xy = p_bilinear(c.mod, c.forms, x, y).coeff(lam_elem);
            rhs += z.coeff(mu) * Rat(e.sign) * plam_xy;
        }
        CHECK(3 * q_trilinear(c.mod, c.forms, x, y, z) == rhs);
    }
}

TEST_CASE("every admissible cubic coefficient is nonzero and matches a p form")
{
    const auto& c = chain_case(3);  // E7
    const auto& fb = c.forms;

    // Admissible triples from weight bookkeeping alone.
    IntVec target = add(c.mod.weights.elements[fb.v3_elem],
                        add(c.mod.highest_weight, c.mod.highest_weight));
    int admissible = 0;
    for (int a = 0; a < fb.n1(); ++a)
        for (int b = a + 1; b < fb.n1(); ++b)
            for (int d = b + 1; d < fb.n1(); ++d) {
                IntVec sum = add(c.mod.weights.elements[fb.v1_elems[a]],
                                 add(c.mod.weights.elements[fb.v1_elems[b]],
                                     c.mod.weights.elements[fb.v1_elems[d]]));
                if (sum != target) continue;
                ++admissible;
                auto it = fb.q.find({a, b, d});
                REQUIRE(it != fb.q.end());
                CHECK(it->second != 0);
            }
    CHECK(admissible == static_cast<int>(fb.q.size()));
    CHECK(admissible == 45);

    // dq/dx_mu equals the paired quadratic form on the nose, including the
    // table sign.
    for (int a = 0; a < fb.n1(); ++a) {
        int mu = fb.v1_elems[a];
        IntVec lam = add(sub(c.mod.weights.elements[fb.v3_elem], c.mod.weights.elements[mu]),
                         c.mod.highest_weight);
        int lam_elem = c.mod.weights.index.at(lam);
        int lam_pos = fb.v2_pos.at(lam_elem);
        const auto& e = c.mod.entry(c.mod.grade1_root[mu], lam_elem);
        REQUIRE(e.to == fb.v3_elem);
        for (int b = 0; b < fb.n1(); ++b)
            for (int d = b + 1; d < fb.n1(); ++d) {
                int partial = 0;
                if (b != a && d != a) {
                    std::array<int, 3> key = {a, b, d};
                    std::sort(key.begin(), key.end());
                    auto it = fb.q.find(key);
                    if (it != fb.q.end()) partial = it->second;
                }
                CHECK(partial == e.sign * fb.p[lam_pos][b][d]);
            }
    }
}

TEST_CASE("subcone samples satisfy p = 0, generic vectors do not")
{
    std::mt19937_64 rng(404);
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        for (int s = 0; s < 20; ++s) {
            ModuleVector x = subcone_sample(c.mod, rng);
            CHECK(p_of(c.mod, c.forms, x).is_zero());
        }
        for (int s = 0; s < 20; ++s) {
            ModuleVector x = random_v1_vector(c.mod, c.forms, rng, true);
            CHECK_FALSE(p_of(c.mod, c.forms, x).is_zero());
        }
    }
}

TEST_CASE("zero coefficients give the grade-1 highest weight vector back")
{
    const auto& c = chain_case(2);
    // A seeded rng whose first draws are irrelevant: drive the sample with a
    // combo of zeros by exhausting a dedicated generator.
    struct ZeroRng : std::mt19937_64 {
    } rng;
    // uniform_int_distribution(-3,3) maps the generator output; instead of
    // fighting it, check the defining property directly: the sample with an
    // all-zero combination is exp(0) applied to the highest vector.
    IntVec target = sub(c.mod.highest_weight, simple_root_fw(c.rs, c.mod.cut));
    ModuleVector hw1 = basis_vector(c.mod.weights.index.at(target));
    CHECK(p_of(c.mod, c.forms, hw1).is_zero());
    // And exp(0) is the identity on it.
    CHECK(detail::exp_of_root_combo(c.mod, {}, hw1) == hw1);
}

TEST_CASE("fibre structure over V1")
{
    for (int i = 0; i < 4; ++i) {
        const auto& c = chain_case(i);
        auto report = verify_blowup_fibres(c.mod, c.forms, 0x5EEDULL + i, 10);
        INFO(c.rs.label << ": " << report.detail);
        CHECK(report.pass);
        CHECK(report.samples_off_subcone == 10);
        CHECK(report.samples_on_subcone >= 1);
    }
    const auto& c = chain_case(1);
    CHECK_THROWS_AS(fibre_contains(c.mod, c.forms, ModuleVector{}, GradedPoint{}),
                    std::invalid_argument);
}

TEST_CASE("A4 p agrees with the wedge-model minors")
{
    CHECK(wedge::check_a4_p_against_wedge(505) == "");
}

TEST_CASE("D5 p forms are the wedge-square quadrics")
{
    CHECK(wedge::check_d5_plucker(606) == "");
}
