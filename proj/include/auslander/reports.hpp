#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "auslander/axioms.hpp"
#include "auslander/enumerate.hpp"
#include "auslander/tilting.hpp"
#include "auslander/verify.hpp"

namespace ausl {

// Canonical JSON serialization of the report objects. Key order is fixed by
// construction (ordered_json + deterministic emission), values are integers,
// booleans and strings only, so identical inputs and seeds give

// byte-identical documents.

inline ojson rep_to_json(const Rep& r) {
    ojson j;
    j["dims"] = r.dims;
    ojson maps = ojson::array();
    for (const auto& m : r.maps) maps.push_back(detail::emit_matrix(m));
    j["maps"] = std::move(maps);
    return j;
}

inline Rep rep_from_json(std::shared_ptr<const RepCategory> cat, const ojson& j) {
    std::vector<std::uint32_t> dims = j.at("dims").get<std::vector<std::uint32_t>>();
    const auto& gens = cat->generators();
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g)
        maps.push_back(detail::parse_matrix(j.at("maps")[g], cat->field(), dims[gens[g].to],
                                            dims[gens[g].from], "cached module"));
    return make_rep(std::move(cat), std::move(dims), std::move(maps));
}

inline ojson enumerate_to_json(const EnumerateResult& e) {
    ojson j;
    j["count"] = e.indecomposables.size();
    j["complete_up_to_bound"] = e.complete_up_to_bound;
    j["covers_all_indecomposables"] = e.covers_all_indecomposables;
    j["decompositions_decided"] = e.decompositions_decided;
    j["policy"] = e.policy;
    ojson mods = ojson::array();
    for (const auto& m : e.indecomposables) mods.push_back(rep_to_json(m));
    j["indecomposables"] = std::move(mods);
    return j;
}

inline EnumerateResult enumerate_from_json(std::shared_ptr<const RepCategory> cat,
                                           const ojson& j) {
    EnumerateResult e;
    e.complete_up_to_bound = j.at("complete_up_to_bound").get<bool>();
    e.covers_all_indecomposables = j.at("covers_all_indecomposables").get<bool>();
    e.decompositions_decided = j.at("decompositions_decided").get<bool>();
    e.policy = j.at("policy").get<std::string>();
    for (const auto& mj : j.at("indecomposables")) e.indecomposables.push_back(rep_from_json(cat, mj));
    return e;
}

inline ojson axiom_report_to_json(const AxiomReport& r) {
    ojson j;
    j["n"] = r.n;
    j["a0"] = r.a0;
    j["a1"] = r.a1;
    j["a2"] = r.a2;
    j["a3"] = r.a3;
    j["pass"] = r.pass();
    j["a0_note"] = r.a0_note;
    j["morphisms_checked"] = r.morphisms_checked;
    j["monos_checked"] = r.monos_checked;
    j["epis_checked"] = r.epis_checked;
    j["samples_per_pair"] = r.samples_per_pair;
    j["failures"] = r.failures;
    return j;
}

inline ojson rigidity_to_json(const RigidityReport& r) {
    ojson j;
    j["n"] = r.n;
    j["all_zero"] = r.all_zero;
    ojson entries = ojson::array();
    for (const auto& e : r.entries)
        entries.push_back(ojson{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"dim", e.dim}});
    j["entries"] = std::move(entries);
    return j;
}

inline ojson ct_certificate_to_json(const CTCertificate& c) {
    ojson j;
    j["n"] = c.n;
    j["members"] = c.member_names;
    j["rigidity"] = rigidity_to_json(c.rigidity);
    j["generating"] = c.generating;
    j["cogenerating"] = c.cogenerating;
    j["functorially_finite"] = c.functorially_finite;
    j["right_orthogonal_matches"] = c.right_orthogonal_matches;
    j["left_orthogonal_matches"] = c.left_orthogonal_matches;
    ojson ws = ojson::array();
    for (const auto& w : c.witnesses) {
        ojson wj;
        wj["ambient_index"] = w.ambient_index;
        wj["in_right_orthogonal"] = w.in_right_orthogonal;
        wj["in_left_orthogonal"] = w.in_left_orthogonal;
        if (w.member)
            wj["member"] = *w.member;
        else
            wj["member"] = nullptr;
        wj["right_approx_epi"] = w.right_approx_epi;
        wj["left_approx_mono"] = w.left_approx_mono;
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    j["enumeration_complete"] = c.enumeration_complete;
    j["conditional"] = c.conditional;
    j["passes"] = c.passes;
    j["failures"] = c.failures;
    return j;
}

inline ojson verdict_group_to_json(const VerdictGroup& g) {
    ojson j;
    j["pass"] = g.pass;
    j["checks"] = g.checks;
    j["failures"] = g.failures;
    return j;
}

inline ojson theorem_report_to_json(const TheoremReport& r) {
    ojson j;
    j["instance"] = r.instance_id;
    j["n"] = r.n;
    ojson a;
    a["condition_i_n_exactness_transfer"] = verdict_group_to_json(r.cond_i);
    a["condition_ii_rigidity"] = verdict_group_to_json(r.cond_ii);
    a["condition_iii_cokernel_presentations"] = verdict_group_to_json(r.cond_iii);
    a["cluster_tilting_certificate"] = ct_certificate_to_json(r.ct);
    a["pass"] = r.theorem_a();
    j["theorem_a"] = std::move(a);
    ojson b;
    b["v_exactness"] = verdict_group_to_json(r.v_exact);
    b["kernel_identification"] = verdict_group_to_json(r.kernel_id);
    b["u_fully_faithful"] = verdict_group_to_json(r.u_ff);
    b["adjunction"] = verdict_group_to_json(r.adjunction);
    b["effaceable_simples"] = r.simples.effaceable;
    b["non_effaceable_simples"] = r.simples.non_effaceable;
    b["pass"] = r.theorem_b();
    j["theorem_b"] = std::move(b);
    j["test_functors"] = r.test_functors;
    j["test_objects"] = r.test_objects;
    j["family_policy"] = r.family_policy;
    j["pass"] = r.overall();
    return j;
}

inline std::string render_verdict_line(const std::string& label, bool pass,
                                       const std::string& extra = "") {
    std::string s = (pass ? "[PASS] " : "[FAIL] ") + label;
    if (!extra.empty()) s += " (" + extra + ")";
    return s + "\n";
}

} // namespace ausl
