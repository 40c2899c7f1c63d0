#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylcone/delpezzo.hpp"
#include "weylcone/homspace.hpp"
#include "weylcone/minrep.hpp"
#include "weylcone/stability.hpp"

namespace weylcone {

/// The series of cases under study, in blow-up order. The cut node is the
/// one whose removal produces the previous member.
struct CaseInfo {
    std::string cli_name;  // "a4", "d5", "e6", "e7"
    std::string label;     // root system label
    int node = 0;          // 0-based cut node / minuscule weight
    int r = 0;             // number of blown-up points
};

inline const std::vector<CaseInfo>& chain_cases()
{
    static const std::vector<CaseInfo> cases = {
        {"a4", "A4", 2, 4}, {"d5", "D5", 4, 5}, {"e6", "E6", 5, 6}, {"e7", "E7", 6, 7}};
    return cases;
}

inline int case_index(const std::string& cli_name)
{
    const auto& cases = chain_cases();
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (cases[i].cli_name == cli_name) return static_cast<int>(i);
    throw std::invalid_argument("unknown case: " + cli_name +
                                " (expected a4, d5, e6, e7 or all)");
}

/// Everything the verification driver needs for one case, built once and
/// shared. The LP edge set is expensive for the largest case and therefore
/// filled on first use.
struct CaseContext {
    CaseInfo info;
    RootSystemData rs;
    MinusculeModule mod;
    FormBundle forms;
    WeightPolytope poly;

    mutable std::vector<std::pair<int, int>> lp_edges_cache;
    mutable bool lp_edges_ready = false;

    const std::vector<std::pair<int, int>>& lp_edges() const
    {
        if (!lp_edges_ready) {
            lp_edges_cache = polytope_edges_lp(poly);
            lp_edges_ready = true;
        }
        return lp_edges_cache;
    }
};

inline const CaseContext& case_context(int index)
{
    static std::vector<std::unique_ptr<CaseContext>> cache(chain_cases().size());
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache.at(index);
    if (!slot) {
        auto ctx = std::make_unique<CaseContext>();
        ctx->info = chain_cases()[index];
        ctx->rs = build_root_system(ctx->info.label);
        ctx->mod = build_minuscule(ctx->rs, ctx->info.node);
        ctx->forms = extract_forms(ctx->mod);
        ctx->poly = make_weight_polytope(ctx->rs, ctx->mod.weights);
        slot = std::move(ctx);
    }
    return *slot;
}

} // namespace weylcone
