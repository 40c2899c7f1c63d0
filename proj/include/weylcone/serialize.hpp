#pragma once

#include <string>

#include <json.hpp>

#include "weylcone/delpezzo.hpp"
#include "weylcone/homspace.hpp"
#include "weylcone/minrep.hpp"
#include "weylcone/rootlat.hpp"

namespace weylcone {

using Json = nlohmann::ordered_json;

/// Rationals travel as decimal strings so arbitrary precision survives any
/// JSON reader.
inline Json rat_json(const Rat& q) { return Json{{"num", num_str(q)}, {"den", den_str(q)}}; }

inline Json rat_vec_json(const RatVec& v)
{
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rat_json(q));
    return out;
}

inline Json rat_mat_json(const RatMat& m)
{
    Json out = Json::array();
    for (const auto& row : m) out.push_back(rat_vec_json(row));
    return out;
}

inline Json root_system_json(const RootSystemData& rs)
{
    Json j;
    j["label"] = rs.label;
    j["rank"] = rs.rank;
    j["cartan"] = rs.cartan;
    j["cartan_inverse"] = rat_mat_json(rs.cartan_inverse);
    j["positive_roots"] = rs.positive_roots;
    j["highest_root"] = rs.highest_root;
    return j;
}

inline Json orbit_json(const WeylOrbitData& orbit)
{
    Json j;
    j["base_weight"] = orbit.base_weight;
    j["elements"] = orbit.elements;
    j["reflection_tables"] = orbit.reflection_tables;
    return j;
}

namespace detail {

inline Json op_table_json(const MinusculeModule& m, int root_idx)
{
    Json table = Json::array();
    for (int k = 0; k < m.dim(); ++k) {
        const auto& e = m.entry(root_idx, k);
        if (e.to < 0)
            table.push_back(nullptr);
        else
            table.push_back(Json{{"to", e.to}, {"sign", e.sign}});
    }
    return table;
}

} // namespace detail

/// Weight list in both bases, the grade map, and the signed operator
/// tables.
inline Json module_json(const MinusculeModule& m)
{
    Json j;
    j["label"] = m.rs.label;
    j["highest_weight"] = m.highest_weight;
    j["cut_node"] = m.cut;
    j["weights_fundamental"] = m.weights.elements;
    Json weights_root = Json::array();
    for (int k = 0; k < m.dim(); ++k) {
        LatticeVector fw{to_rat(m.weights.elements[k]), Basis::FundamentalWeight};
        weights_root.push_back(rat_vec_json(to_root_basis(m.rs, fw).coords));
    }
    j["weights_root"] = weights_root;
    j["grade"] = m.grade_of;

    Json raise = Json::array(), lower = Json::array();
    for (int i = 0; i < m.rs.rank; ++i) {
        raise.push_back(detail::op_table_json(m, m.raise_index[i]));
        lower.push_back(detail::op_table_json(m, m.lower_index[i]));
    }
    j["raise_tables"] = raise;
    j["lower_tables"] = lower;

    Json root_tables = Json::array();
    for (std::size_t t = 0; t < m.roots.size(); ++t)
        root_tables.push_back(Json{{"root", m.roots[t]},
                                   {"table", detail::op_table_json(m, static_cast<int>(t))}});
    j["root_tables"] = root_tables;
    return j;
}

/// The quadratic forms (and cubic, when present) with exact rational
/// coefficients and fundamental-weight labels.
inline Json equations_json(const MinusculeModule& m, const FormBundle& fb)
{
    Json j;
    j["label"] = m.rs.label;
    Json forms = Json::array();
    for (int l = 0; l < fb.n2(); ++l) {
        Json f;
        f["weight"] = m.weights.elements[fb.v2_elems[l]];
        Json monos = Json::array();
        for (int a = 0; a < fb.n1(); ++a)
            for (int b = a + 1; b < fb.n1(); ++b) {
                if (fb.p[l][a][b] == 0) continue;
                monos.push_back(Json{{"mu", m.weights.elements[fb.v1_elems[a]]},
                                     {"nu", m.weights.elements[fb.v1_elems[b]]},
                                     {"coeff", rat_json(Rat(fb.p[l][a][b]))}});
            }
        f["monomials"] = monos;
        forms.push_back(std::move(f));
    }
    j["quadratic_forms"] = forms;
    if (fb.has_cubic) {
        Json cubic;
        cubic["weight"] = m.weights.elements[fb.v3_elem];
        Json monos = Json::array();
        for (const auto& [triple, coeff] : fb.q) {
            auto [a, b, c] = triple;
            monos.push_back(Json{{"mu", m.weights.elements[fb.v1_elems[a]]},
                                 {"nu", m.weights.elements[fb.v1_elems[b]]},
                                 {"xi", m.weights.elements[fb.v1_elems[c]]},
                                 {"coeff", rat_json(Rat(coeff))}});
        }
        cubic["monomials"] = monos;
        j["cubic_form"] = cubic;
    }
    return j;
}

namespace detail {

inline std::string fw_label(const IntVec& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

} // namespace detail

/// One line per form: p[lambda]: sum of c * x[mu]*x[nu].
inline std::string equations_text(const MinusculeModule& m, const FormBundle& fb)
{
    std::string out;
    for (int l = 0; l < fb.n2(); ++l) {
        out += "p[" + detail::fw_label(m.weights.elements[fb.v2_elems[l]]) + "]:";
        bool first = true;
        for (int a = 0; a < fb.n1(); ++a)
            for (int b = a + 1; b < fb.n1(); ++b) {
                int c = fb.p[l][a][b];
                if (c == 0) continue;
                out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
                if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
                out += "x[" + detail::fw_label(m.weights.elements[fb.v1_elems[a]]) + "]*x[" +
                       detail::fw_label(m.weights.elements[fb.v1_elems[b]]) + "]";
                first = false;
            }
        out += "\n";
    }
    if (fb.has_cubic) {
        out += "q:";
        bool first = true;
        for (const auto& [triple, c] : fb.q) {
            auto [a, b, d] = triple;
            out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
            if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
            out += "x[" + detail::fw_label(m.weights.elements[fb.v1_elems[a]]) + "]*x[" +
                   detail::fw_label(m.weights.elements[fb.v1_elems[b]]) + "]*x[" +
                   detail::fw_label(m.weights.elements[fb.v1_elems[d]]) + "]";
            first = false;
        }
        out += "\n";
    }
    return out;
}

inline Json classes_json(const std::vector<DivisorClass>& classes)
{
    Json out = Json::array();
    for (const auto& cls : classes) out.push_back(cls.coords);
    return out;
}

/// Incidence graph of the exceptional classes as an adjacency list with
/// intersection labels.
inline Json incidence_graph_json(const PicardLattice& pl)
{
    auto classes = enumerate_classes(pl, ClassKind::Exceptional);
    Json j;
    j["r"] = pl.r;
    j["vertices"] = classes_json(classes);
    Json adj = Json::array();
    for (std::size_t a = 0; a < classes.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < classes.size(); ++b) {
            if (a == b) continue;
            long i = intersect(classes[a], classes[b]);
            if (i >= 1) row.push_back(Json{{"to", b}, {"intersection", i}});
        }
        adj.push_back(std::move(row));
    }
    j["adjacency"] = adj;
    return j;
}

} // namespace weylcone
