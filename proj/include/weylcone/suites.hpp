#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weylcone/cases.hpp"
#include "weylcone/serialize.hpp"

namespace weylcone {

/// The verification driver: every computable claim, one named check at a
/// time, with exact arithmetic throughout. Checks are independent; each
/// failure carries a minimal witness in its details, and every randomized
/// check records the seed it derived its samples from.

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string status_name(CheckStatus s)
{
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

struct CheckReport {
    std::string check_name;
    std::string claim;
    CheckStatus status = CheckStatus::Skipped;
    Json details = Json::object();
    double elapsed_ms = 0.0;
};

struct SuiteRun {
    std::uint64_t seed = 0;
    std::vector<CheckReport> checks;
    double total_elapsed_ms = 0.0;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"rep", "forms", "fibres", "stability",
                                                   "delpezzo"};
    return names;
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Runner {
    SuiteRun& run;

    void add(const std::string& name, const std::string& claim,
             const std::function<bool(Json&, std::mt19937_64&)>& body)
    {
        CheckReport rep;
        rep.check_name = name;
        rep.claim = claim;
        const std::uint64_t derived = run.seed ^ fnv1a(name);
        rep.details["derived_seed"] = derived;
        std::mt19937_64 rng(derived);
        auto t0 = std::chrono::steady_clock::now();
        try {
            rep.status = body(rep.details, rng) ? CheckStatus::Pass : CheckStatus::Fail;
        } catch (const std::exception& e) {
            rep.status = CheckStatus::Fail;
            rep.details["exception"] = e.what();
        }
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        run.checks.push_back(std::move(rep));
    }

    void skip(const std::string& name, const std::string& claim, const std::string& why)
    {
        CheckReport rep;
        rep.check_name = name;
        rep.claim = claim;
        rep.status = CheckStatus::Skipped;
        rep.details["reason"] = why;
        run.checks.push_back(std::move(rep));
    }
};

inline Json fail_witness(const std::string& what, const Json& value)
{
    return Json{{"witness", what}, {"value", value}};
}

// ---------------------------------------------------------------------------
// rep suite
// ---------------------------------------------------------------------------

inline void add_rep_checks(Runner& r, const CaseContext& c)
{
    const std::string pre = c.info.cli_name + ".rep.";
    const std::vector<int> expected_dim = {10, 16, 27, 56};
    const std::vector<std::vector<int>> expected_grades = {
        {1, 6, 3}, {1, 10, 5}, {1, 16, 10}, {1, 27, 27, 1}};
    const std::vector<unsigned long long> expected_order = {120, 1920, 51840, 2903040};
    const int ci = c.info.r - 4;

    r.add(pre + "orbit_dimension",
          "minuscule orbit size and module dimension equal " +
              std::to_string(expected_dim[ci]),
          [&](Json& d, std::mt19937_64&) {
              d["orbit"] = c.mod.weights.size();
              d["dim"] = c.mod.dim();
              return c.mod.weights.size() == expected_dim[ci] && c.mod.dim() == expected_dim[ci];
          });

    r.add(pre + "graded_dimensions", "graded pieces have the expected dimensions",
          [&](Json& d, std::mt19937_64&) {
              std::vector<int> dims;
              for (const auto& g : c.mod.elems_by_grade) dims.push_back((int)g.size());
              d["grades"] = dims;
              return dims == expected_grades[ci];
          });

    r.add(pre + "module_relations",
          "all Chevalley and Serre operator relations hold on every basis vector",
          [&](Json& d, std::mt19937_64&) {
              auto report = verify_module_relations(c.mod);
              Json fams = Json::array();
              for (const auto& f : report.families)
                  fams.push_back(Json{{"family", f.family},
                                      {"pass", f.pass},
                                      {"detail", f.detail}});
              d["families"] = fams;
              return report.all_pass();
          });

    r.add(pre + "levi_highest_weight",
          "the grade-1 highest weight is the sum of the fundamental weights at the "
          "nodes adjacent to the cut",
          [&](Json& d, std::mt19937_64&) {
              auto s = levi_decomposition(c.mod);
              d["adjacent_nodes"] = s.adjacent_nodes;
              d["levi_weight"] = s.v1_levi_weight;
              IntVec expect(c.rs.rank, 0);
              for (int i : s.adjacent_nodes) expect[i] = 1;
              IntVec got = s.v1_levi_weight;
              got[c.info.node] = 0;
              return s.v1_highest_killed_by_levi_raising &&
                     s.v1_connected_under_levi_lowering && got == expect;
          });

    r.add(pre + "multiplicity_one", "every weight space is one-dimensional",
          [&](Json& d, std::mt19937_64&) {
              std::set<IntVec> distinct(c.mod.weights.elements.begin(),
                                        c.mod.weights.elements.end());
              d["distinct"] = distinct.size();
              return (int)distinct.size() == c.mod.dim();
          });

    r.add(pre + "weyl_order",
          "the stabilizer-chain order of the reflection action equals " +
              std::to_string(expected_order[ci]),
          [&](Json& d, std::mt19937_64&) {
              unsigned long long order = weyl_group_order(c.rs, c.mod.weights);
              d["order"] = order;
              return order == expected_order[ci];
          });
}

// ---------------------------------------------------------------------------
// forms suite
// ---------------------------------------------------------------------------

inline void add_forms_checks(Runner& r, const CaseContext& c)
{
    const std::string pre = c.info.cli_name + ".forms.";
    const std::vector<int> expected_rank = {4, 6, 8, 10};
    const std::vector<int> expected_count = {3, 5, 10, 27};
    const int ci = c.info.r - 4;

    r.add(pre + "count", "one quadratic form per grade-2 weight",
          [&](Json& d, std::mt19937_64&) {
              d["forms"] = c.forms.n2();
              return c.forms.n2() == expected_count[ci];
          });

    r.add(pre + "ranks",
          "every quadratic form has rank " + std::to_string(expected_rank[ci]),
          [&](Json& d, std::mt19937_64&) {
              std::vector<int> ranks;
              for (const auto& mat : c.forms.p) ranks.push_back(int_rank(mat));
              d["ranks"] = ranks;
              for (int rk : ranks)
                  if (rk != expected_rank[ci]) return false;
              return !ranks.empty();
          });

    r.add(pre + "exp_identities",
          "exp lands on the cone, is a homomorphism, and g_t preserves the cone",
          [&](Json& d, std::mt19937_64& rng) {
              d["samples"] = 100;
              for (int s = 0; s < 100; ++s) {
                  ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
                  ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);
                  GradedPoint ex = exp_point(c.mod, c.forms, x);
                  if (!(ex.y1 == x)) {
                      d["failure"] = "projection";
                      return false;
                  }
                  if (!satisfies_cone_equations(c.mod, c.forms, ex)) {
                      d["failure"] = "cone equations at exp";
                      return false;
                  }
                  if (!(act_unipotent(c.mod, c.forms, y, ex) ==
                        exp_point(c.mod, c.forms, x + y))) {
                      d["failure"] = "homomorphism";
                      return false;
                  }
                  GradedPoint moved = act_gt(Rat(small_coeff(rng, true)), ex);
                  if (!satisfies_cone_equations(c.mod, c.forms, moved)) {
                      d["failure"] = "cone equations after g_t";
                      return false;
                  }
              }
              return true;
          });

    r.add(pre + "polarization",
          "p polarizes exactly and realizes the commutative product on grade 1",
          [&](Json& d, std::mt19937_64& rng) {
              d["samples"] = 100;
              for (int s = 0; s < 100; ++s) {
                  ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
                  ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);
                  ModuleVector two_pxy = p_bilinear(c.mod, c.forms, x, y);
                  two_pxy *= 2;
                  if (!(p_of(c.mod, c.forms, x + y) ==
                        p_of(c.mod, c.forms, x) + two_pxy + p_of(c.mod, c.forms, y)))
                      return false;
                  if (!(rho_apply(c.mod, x, y) == two_pxy)) return false;
                  if (!(rho_apply(c.mod, x, rho_apply(c.mod, y, basis_vector(0))) ==
                        rho_apply(c.mod, y, rho_apply(c.mod, x, basis_vector(0)))))
                      return false;
              }
              return true;
          });

    if (!c.forms.has_cubic) return;

    r.add(pre + "cubic_coefficients",
          "every weight-admissible cubic coefficient is present and nonzero",
          [&](Json& d, std::mt19937_64&) {
              IntVec target = add(c.mod.weights.elements[c.forms.v3_elem],
                                  add(c.mod.highest_weight, c.mod.highest_weight));
              int admissible = 0;
              for (int a = 0; a < c.forms.n1(); ++a)
                  for (int b = a + 1; b < c.forms.n1(); ++b)
                      for (int e = b + 1; e < c.forms.n1(); ++e) {
                          IntVec sum =
                              add(c.mod.weights.elements[c.forms.v1_elems[a]],
                                  add(c.mod.weights.elements[c.forms.v1_elems[b]],
                                      c.mod.weights.elements[c.forms.v1_elems[e]]));
                          if (sum != target) continue;
                          ++admissible;
                          auto it = c.forms.q.find({a, b, e});
                          if (it == c.forms.q.end() || it->second == 0) return false;
                      }
              d["admissible_triples"] = admissible;
              d["stored"] = c.forms.q.size();
              return admissible == (int)c.forms.q.size();
          });

    r.add(pre + "cubic_derivatives",
          "each partial derivative of the cubic is the paired quadratic form",
          [&](Json& d, std::mt19937_64&) {
              for (int a = 0; a < c.forms.n1(); ++a) {
                  int mu = c.forms.v1_elems[a];
                  IntVec lam = add(sub(c.mod.weights.elements[c.forms.v3_elem],
                                       c.mod.weights.elements[mu]),
                                   c.mod.highest_weight);
                  auto it = c.mod.weights.index.find(lam);
                  if (it == c.mod.weights.index.end()) return false;
                  int lam_elem = it->second;
                  int lam_pos = c.forms.v2_pos.at(lam_elem);
                  const auto& e = c.mod.entry(c.mod.grade1_root[mu], lam_elem);
                  if (e.to != c.forms.v3_elem) return false;
                  for (int b = 0; b < c.forms.n1(); ++b)
                      for (int f = b + 1; f < c.forms.n1(); ++f) {
                          int partial = 0;
                          if (b != a && f != a) {
                              std::array<int, 3> key{a, b, f};
                              std::sort(key.begin(), key.end());
                              auto qit = c.forms.q.find(key);
                              if (qit != c.forms.q.end()) partial = qit->second;
                          }
                          if (partial != e.sign * c.forms.p[lam_pos][b][f]) {
                              d["witness"] = Json{{"mu", a}, {"nu", b}, {"xi", f}};
                              return false;
                          }
                      }
              }
              return true;
          });

    r.add(pre + "cubic_identities",
          "the cubic pairs with p through the algebra product and the trilinear expansion",
          [&](Json& d, std::mt19937_64& rng) {
              d["samples"] = 100;
              for (int s = 0; s < 100; ++s) {
                  ModuleVector x = random_v1_vector(c.mod, c.forms, rng, false);
                  ModuleVector y = random_v1_vector(c.mod, c.forms, rng, false);
                  ModuleVector z = random_v1_vector(c.mod, c.forms, rng, false);
                  Rat lhs = 3 * q_trilinear(c.mod, c.forms, x, x, y);
                  ModuleVector prod = rho_apply(c.mod, y, p_of(c.mod, c.forms, x));
                  if (lhs != prod.coeff(c.forms.v3_elem)) {
                      d["failure"] = "3q(x,x,y) != p(x).y";
                      return false;
                  }
                  Rat rhs = 0;
                  ModuleVector pxy = p_bilinear(c.mod, c.forms, x, y);
                  for (int a = 0; a < c.forms.n1(); ++a) {
                      int mu = c.forms.v1_elems[a];
                      IntVec lam = add(sub(c.mod.weights.elements[c.forms.v3_elem],
                                           c.mod.weights.elements[mu]),
                                       c.mod.highest_weight);
                      int lam_elem = c.mod.weights.index.at(lam);
                      const auto& e = c.mod.entry(c.mod.grade1_root[mu], lam_elem);
                      rhs += z.coeff(mu) * Rat(e.sign) * pxy.coeff(lam_elem);
                  }
                  if (3 * q_trilinear(c.mod, c.forms, x, y, z) != rhs) {
                      d["failure"] = "trilinear expansion";
                      return false;
                  }
              }
              return true;
          });
}

// ---------------------------------------------------------------------------
// fibres suite
// ---------------------------------------------------------------------------

/// Independent subcone membership test for the smallest case: a grade-1
/// vector lies on the subcone iff its 2 x 3 coefficient matrix (rows by the
/// A1 weight, columns by the A2 weight) has rank at most one.
inline bool a4_rank_one(const CaseContext& c, const ModuleVector& x)
{
    std::map<int, int> row_of;     // node-3 eigenvalue -> row
    std::map<IntVec, int> col_of;  // (node-0, node-1) eigenvalues -> column
    RatMat mat(2, RatVec(3, 0));
    for (int k : c.mod.elems_by_grade[1]) {
        int rw = (int)c.mod.cartan_eigenvalue(3, k);
        IntVec cw = {(int)c.mod.cartan_eigenvalue(0, k), (int)c.mod.cartan_eigenvalue(1, k)};
        if (!row_of.count(rw)) row_of[rw] = (int)row_of.size();
        if (!col_of.count(cw)) col_of[cw] = (int)col_of.size();
        mat.at(row_of[rw]).at(col_of[cw]) = x.coeff(k);
    }
    return rat_rank(mat) <= 1;
}

inline void add_fibres_checks(Runner& r, const CaseContext& c)
{
    const std::string pre = c.info.cli_name + ".fibres.";

    r.add(pre + "blowup",
          "both fibre descriptions hold exactly: g_t translates off the subcone and "
          "unipotent flows over it",
          [&](Json& d, std::mt19937_64& rng) {
              std::uint64_t fibre_seed = rng();
              d["seed"] = fibre_seed;
              auto report = verify_blowup_fibres(c.mod, c.forms, fibre_seed, 20);
              d["samples_off_subcone"] = report.samples_off_subcone;
              d["samples_on_subcone"] = report.samples_on_subcone;
              if (!report.pass) d["failure"] = report.detail;
              return report.pass && report.samples_off_subcone == 20 &&
                     report.samples_on_subcone >= 1;
          });

    r.add(pre + "subcone",
          "seeded subcone points satisfy p = 0; full-support points avoid the subcone",
          [&](Json& d, std::mt19937_64& rng) {
              for (int s = 0; s < 20; ++s) {
                  ModuleVector x = subcone_sample(c.mod, rng);
                  if (!p_of(c.mod, c.forms, x).is_zero()) {
                      d["failure"] = "subcone sample with p != 0";
                      return false;
                  }
              }
              int vanished = 0;
              for (int s = 0; s < 20; ++s) {
                  ModuleVector x = random_v1_vector(c.mod, c.forms, rng, true);
                  bool zero = p_of(c.mod, c.forms, x).is_zero();
                  if (zero) ++vanished;
                  if (c.info.r == 4) {
                      // Exact equivalence with the independent rank test.
                      if (zero != a4_rank_one(c, x)) {
                          d["failure"] = "p = 0 disagrees with the rank criterion";
                          return false;
                      }
                      if (zero) continue;
                  } else if (zero) {
                      d["failure"] = "full-support sample with p = 0";
                      return false;
                  }
              }
              d["full_support_on_subcone"] = vanished;
              return true;
          });

    r.add(pre + "origin_rejected", "the origin is excluded from fibre membership",
          [&](Json&, std::mt19937_64&) {
              try {
                  fibre_contains(c.mod, c.forms, ModuleVector{}, GradedPoint{});
              } catch (const std::invalid_argument&) {
                  return true;
              }
              return false;
          });
}

// ---------------------------------------------------------------------------
// stability suite
// ---------------------------------------------------------------------------

inline void add_stability_checks(Runner& r, const CaseContext& c)
{
    const std::string pre = c.info.cli_name + ".stability.";
    const int n = (int)c.poly.verts.size();

    r.add(pre + "vertex_property", "every orbit point is a vertex of the hull",
          [&](Json& d, std::mt19937_64&) {
              for (int v = 0; v < n; ++v)
                  if (in_convex_hull_of_others(c.poly, v)) {
                      d["witness"] = v;
                      return false;
                  }
              d["vertices"] = n;
              return true;
          });

    r.add(pre + "orbit_sum_zero", "the orbit sums to zero",
          [&](Json&, std::mt19937_64&) {
              IntVec sum(c.rs.rank, 0);
              for (const auto& el : c.poly.verts) sum = add(sum, el);
              return is_zero(sum);
          });

    r.add(pre + "full_interior", "zero is interior to the full weight polytope",
          [&](Json&, std::mt19937_64&) {
              return zero_in_interior(c.poly, all_indices(c.poly));
          });

    r.add(pre + "singleton_removals", "removing any single vertex keeps zero interior",
          [&](Json& d, std::mt19937_64&) {
              for (int s = 0; s < n; ++s)
                  if (!stable_after_removals(c.poly, {s})) {
                      d["witness"] = s;
                      return false;
                  }
              d["removals"] = n;
              return true;
          });

    r.add(pre + "edge_agreement",
          "the LP edge test agrees with the pairing criterion on every vertex pair",
          [&](Json& d, std::mt19937_64&) {
              const auto& edges = c.lp_edges();
              std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
              long checked = 0;
              for (int a = 0; a < n; ++a)
                  for (int b = a + 1; b < n; ++b) {
                      ++checked;
                      if (edge_set.count({a, b}) != (adjacent_by_pairing(c.poly, a, b) ? 1u : 0u)) {
                          d["witness"] = Json{{"a", a}, {"b", b}};
                          return false;
                      }
                  }
              d["pairs"] = checked;
              d["edges"] = edges.size();
              return true;
          });

    r.add(pre + "nonadjacent_pair_removals",
          "removing any two non-adjacent vertices keeps zero interior, exhaustively",
          [&](Json& d, std::mt19937_64&) {
              long pairs = 0;
              for (int a = 0; a < n; ++a)
                  for (int b = a + 1; b < n; ++b) {
                      if (adjacent_by_pairing(c.poly, a, b)) continue;
                      ++pairs;
                      if (!stable_after_removals(c.poly, {a, b})) {
                          d["witness"] = Json{{"a", a}, {"b", b}};
                          return false;
                      }
                  }
              d["pairs"] = pairs;
              return true;
          });

    r.add(pre + "equivariance", "adjacency is invariant under every simple reflection",
          [&](Json& d, std::mt19937_64&) {
              for (int a = 0; a < n; ++a)
                  for (int b = a + 1; b < n; ++b) {
                      bool adj = adjacent_by_pairing(c.poly, a, b);
                      for (int i = 0; i < c.rs.rank; ++i) {
                          int sa = c.mod.weights.reflection_tables[i][a];
                          int sb = c.mod.weights.reflection_tables[i][b];
                          if (adjacent_by_pairing(c.poly, sa, sb) != adj) {
                              d["witness"] = Json{{"a", a}, {"b", b}, {"node", i}};
                              return false;
                          }
                      }
                  }
              return true;
          });

    r.add(pre + "monotonicity", "the interior test is monotone under enlarging the subset",
          [&](Json& d, std::mt19937_64& rng) {
              d["trials"] = 50;
              std::uniform_int_distribution<int> coin(0, 3);
              int informative = 0;
              for (int trial = 0; trial < 50; ++trial) {
                  std::vector<int> small, big;
                  for (int s = 0; s < n; ++s) {
                      int v = coin(rng);
                      if (v == 0) continue;
                      big.push_back(s);
                      if (v != 1) small.push_back(s);
                  }
                  if (small.empty() || big.size() == small.size()) continue;
                  if (zero_in_interior(c.poly, small)) {
                      ++informative;
                      if (!zero_in_interior(c.poly, big)) {
                          d["witness_trial"] = trial;
                          return false;
                      }
                  }
              }
              d["informative_trials"] = informative;
              return true;
          });

    r.add(pre + "inequality", "the squared weight norm strictly exceeds one",
          [&](Json& d, std::mt19937_64&) {
              auto f = fundamental_inequality(c.rs, c.info.node);
              d["omega_sq"] = rat_json(f.omega_sq);
              return f.holds;
          });
}

inline void add_excluded_list_check(Runner& r)
{
    r.add("global.stability.excluded_list",
          "the strict norm inequality fails for every excluded simply-laced pair",
          [&](Json& d, std::mt19937_64&) {
              Json tested = Json::array();
              auto expect_fail = [&](const RootSystemData& rs, int node,
                                     const std::string& name) {
                  auto f = fundamental_inequality(rs, node);
                  tested.push_back(Json{{"pair", name}, {"holds", f.holds}});
                  return !f.holds;
              };
              bool ok = true;
              for (int rk = 2; rk <= 8; ++rk) {
                  auto ar = build_root_system(cartan_type_a(rk), "A" + std::to_string(rk));
                  ok = expect_fail(ar, 0, "A" + std::to_string(rk) + ",w1") && ok;
                  ok = expect_fail(ar, rk - 1, "A" + std::to_string(rk) + ",wr") && ok;
              }
              for (int rk = 4; rk <= 8; ++rk) {
                  auto dr = build_root_system(cartan_type_d(rk), "D" + std::to_string(rk));
                  ok = expect_fail(dr, 0, "D" + std::to_string(rk) + ",w1") && ok;
              }
              auto a3 = build_root_system(cartan_type_a(3), "A3");
              ok = expect_fail(a3, 1, "A3,w2") && ok;
              auto d4 = build_root_system(cartan_type_d(4), "D4");
              ok = expect_fail(d4, 2, "D4,w3") && ok;
              ok = expect_fail(d4, 3, "D4,w4") && ok;
              d["tested"] = tested;
              return ok;
          });
}

// ---------------------------------------------------------------------------
// delpezzo suite
// ---------------------------------------------------------------------------

inline void add_delpezzo_checks(Runner& r, const CaseContext& c)
{
    const std::string pre = c.info.cli_name + ".delpezzo.";
    const int rr = c.info.r;
    const std::vector<int> expected_exc = {10, 16, 27, 56};
    const std::vector<int> expected_conic = {5, 10, 27, 126};
    const int ci = rr - 4;

    r.add(pre + "counts",
          "exceptional, conic and root class counts match the census",
          [&](Json& d, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto exc = enumerate_classes(pl, ClassKind::Exceptional);
              auto con = enumerate_classes(pl, ClassKind::Conic);
              auto roots = enumerate_classes(pl, ClassKind::Root);
              d["exceptional"] = exc.size();
              d["conic"] = con.size();
              d["roots"] = roots.size();
              return (int)exc.size() == expected_exc[ci] &&
                     (int)con.size() == expected_conic[ci] &&
                     roots.size() == 2 * c.rs.positive_roots.size();
          });

    r.add(pre + "beta_gram", "the beta basis has Gram matrix minus the Cartan matrix",
          [&](Json&, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto betas = picard_simple_roots(pl);
              auto nodes = beta_to_node(rr);
              for (int i = 0; i < rr; ++i) {
                  if (intersect(betas[i], pl.canonical) != 0) return false;
                  for (int j = 0; j < rr; ++j)
                      if (intersect(betas[i], betas[j]) != -c.rs.cartan[nodes[i]][nodes[j]])
                          return false;
              }
              return true;
          });

    r.add(pre + "dictionary",
          "classes biject onto the two weight orbits with the distinguished images",
          [&](Json& d, std::mt19937_64&) {
              auto pl = make_picard(rr);
              if (class_to_weight(pl, line_class(pl, rr), ClassKind::Exceptional) !=
                  fundamental_weight(c.rs, pair_node(rr)))
                  return false;
              if (class_to_weight(pl, first_conic_class(pl), ClassKind::Conic) !=
                  fundamental_weight(c.rs, 0))
                  return false;

              std::set<IntVec> images;
              auto exc = enumerate_classes(pl, ClassKind::Exceptional);
              for (const auto& cls : exc) {
                  IntVec w = class_to_weight(pl, cls, ClassKind::Exceptional);
                  if (!c.mod.weights.index.count(w)) return false;
                  images.insert(w);
              }
              d["exceptional_images"] = images.size();
              if (images.size() != exc.size()) return false;

              auto orbit1 = weyl_orbit(c.rs, fundamental_weight(c.rs, 0));
              auto con = enumerate_classes(pl, ClassKind::Conic);
              std::set<IntVec> conic_images;
              for (const auto& cls : con) {
                  IntVec w = class_to_weight(pl, cls, ClassKind::Conic);
                  if (!orbit1.index.count(w)) return false;
                  conic_images.insert(w);
              }
              d["conic_images"] = conic_images.size();
              return conic_images.size() == con.size() &&
                     con.size() == (std::size_t)orbit1.size();
          });

    r.add(pre + "intersection_formula",
          "intersection numbers equal 1/d minus the weight pairing, exhaustively",
          [&](Json& d, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto exc = enumerate_classes(pl, ClassKind::Exceptional);
              std::vector<LatticeVector> ws;
              for (const auto& cls : exc)
                  ws.push_back({to_rat(class_to_weight(pl, cls, ClassKind::Exceptional)),
                                Basis::FundamentalWeight});
              const long max_int = rr == 7 ? 2 : 1;
              long pairs = 0;
              for (std::size_t a = 0; a < exc.size(); ++a)
                  for (std::size_t b = a + 1; b < exc.size(); ++b) {
                      ++pairs;
                      long inter = intersect(exc[a], exc[b]);
                      if (inter < 0 || inter > max_int) return false;
                      if (Rat(inter) !=
                          Rat(1, pl.degree) - inner_product(c.rs, ws[a], ws[b]))
                          return false;
                  }
              d["pairs"] = pairs;
              return true;
          });

    r.add(pre + "adjacency_equivalence",
          "two exceptional curves are disjoint iff their weights are adjacent vertices",
          [&](Json& d, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto exc = enumerate_classes(pl, ClassKind::Exceptional);
              const auto& edges = c.lp_edges();
              std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
              std::vector<int> orbit_idx;
              for (const auto& cls : exc)
                  orbit_idx.push_back(c.mod.weights.index.at(
                      class_to_weight(pl, cls, ClassKind::Exceptional)));
              long pairs = 0;
              for (std::size_t a = 0; a < exc.size(); ++a)
                  for (std::size_t b = a + 1; b < exc.size(); ++b) {
                      ++pairs;
                      int ia = orbit_idx[a], ib = orbit_idx[b];
                      bool adjacent = edge_set.count({std::min(ia, ib), std::max(ia, ib)}) > 0;
                      if ((intersect(exc[a], exc[b]) == 0) != adjacent) {
                          d["witness"] = Json{{"a", exc[a].coords}, {"b", exc[b].coords}};
                          return false;
                      }
                  }
              d["pairs"] = pairs;
              return true;
          });

    r.add(pre + "transitivity",
          "the reflection group acts transitively on exceptional and conic classes",
          [&](Json& d, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto exc = enumerate_classes(pl, ClassKind::Exceptional);
              auto orbit = reflection_orbit(pl, line_class(pl, rr));
              d["exceptional_orbit"] = orbit.size();
              if (std::set<DivisorClass>(orbit.begin(), orbit.end()) !=
                  std::set<DivisorClass>(exc.begin(), exc.end()))
                  return false;
              auto con = enumerate_classes(pl, ClassKind::Conic);
              auto corbit = reflection_orbit(pl, first_conic_class(pl));
              d["conic_orbit"] = corbit.size();
              return std::set<DivisorClass>(corbit.begin(), corbit.end()) ==
                     std::set<DivisorClass>(con.begin(), con.end());
          });

    r.add(pre + "intertwining",
          "the class-to-weight map intertwines the two reflection actions",
          [&](Json&, std::mt19937_64&) {
              auto pl = make_picard(rr);
              auto betas = picard_simple_roots(pl);
              auto nodes = beta_to_node(rr);
              for (const auto& cls : enumerate_classes(pl, ClassKind::Exceptional))
                  for (int i = 0; i < rr; ++i) {
                      IntVec lhs = class_to_weight(pl, reflect_class(cls, betas[i]),
                                                   ClassKind::Exceptional);
                      IntVec rhs = reflect_fw(
                          c.rs, nodes[i], class_to_weight(pl, cls, ClassKind::Exceptional));
                      if (lhs != rhs) return false;
                  }
              return true;
          });

    if (rr >= 5) {
        r.add(pre + "census",
              "pullbacks, the new divisor, conic transforms (and the cubic transform) "
              "rebuild the exceptional set",
              [&](Json& d, std::mt19937_64&) {
                  auto report = blowup_census(rr);
                  d["pulled_back"] = report.pulled_back;
                  d["new_point"] = report.new_point;
                  d["conic_transforms"] = report.conic_transforms;
                  d["cubic_transforms"] = report.cubic_transforms;
                  return report.matches_enumeration;
              });
    } else {
        r.skip(pre + "census", "blow-up census", "the census starts one step up the chain");
    }
}

} // namespace detail

/// Runs the selected suites over the selected cases. Check order in the
/// report is fixed by name.
inline SuiteRun run_suite(const std::vector<int>& case_indices,
                          const std::vector<std::string>& suites, std::uint64_t seed)
{
    SuiteRun run;
    run.seed = seed;
    detail::Runner runner{run};
    auto t0 = std::chrono::steady_clock::now();

    auto want = [&](const std::string& s) {
        return std::find(suites.begin(), suites.end(), s) != suites.end();
    };

    for (int idx : case_indices) {
        const CaseContext& c = case_context(idx);
        if (want("rep")) detail::add_rep_checks(runner, c);
        if (want("forms")) detail::add_forms_checks(runner, c);
        if (want("fibres")) detail::add_fibres_checks(runner, c);
        if (want("stability")) detail::add_stability_checks(runner, c);
        if (want("delpezzo")) detail::add_delpezzo_checks(runner, c);
    }
    if (want("stability")) detail::add_excluded_list_check(runner);

    std::sort(run.checks.begin(), run.checks.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.check_name < b.check_name;
              });
    run.total_elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return run;
}

/// Report document: all timing data is isolated in the header so that the
/// body is byte-identical across runs with one seed.
inline Json suite_report_json(const SuiteRun& run)
{
    Json doc;
    Json header;
    header["seed"] = run.seed;
    header["total_elapsed_ms"] = run.total_elapsed_ms;
    Json elapsed = Json::object();
    for (const auto& c : run.checks) elapsed[c.check_name] = c.elapsed_ms;
    header["elapsed_ms"] = elapsed;
    doc["header"] = header;

    Json checks = Json::array();
    for (const auto& c : run.checks)
        checks.push_back(Json{{"check_name", c.check_name},
                              {"claim", c.claim},
                              {"status", status_name(c.status)},
                              {"details", c.details}});
    doc["checks"] = checks;
    return doc;
}

inline std::string suite_report_text(const SuiteRun& run)
{
    std::ostringstream os;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : run.checks) {
        const char* tag = c.status == CheckStatus::Pass ? "PASS"
                          : c.status == CheckStatus::Fail ? "FAIL"
                                                          : "SKIP";
        os << "[" << tag << "] " << c.check_name << "\n";
        if (c.status == CheckStatus::Fail) os << "       " << c.details.dump() << "\n";
        (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skip)++;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped (seed " << run.seed
       << ", " << static_cast<long>(run.total_elapsed_ms) << " ms)\n";
    return os.str();
}

} // namespace weylcone
