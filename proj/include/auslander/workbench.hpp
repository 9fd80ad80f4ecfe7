#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/cache.hpp"
#include "auslander/instance.hpp"
#include "auslander/reports.hpp"

namespace ausl {

struct RunOptions {
    std::optional<std::uint32_t> n; // default: instance's default_n
    std::uint64_t seed = 0;
    std::string subcategory = "auto"; // name | "all" | "auto"
    bool use_cache = false;
    std::string cache_dir;
    std::string format = "json"; // json | text
    std::uint32_t samples_per_pair = 50;
};

struct RunOutcome {
    int exit_code = 0; // 0 pass, 1 verdict failure (2 = error, thrown)
    ojson report;      // canonical document, no timings
    std::string text;  // human rendering, includes timings
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

/// Stage RNGs are derived independently from the seed so that skipping a
/// cached stage does not shift the random streams of later stages.
inline Rng stage_rng(std::uint64_t seed, std::uint64_t salt) {
    return Rng(seed * 0x9e3779b97f4a7c15ull + salt);
}

inline EnumerateResult ambient_indecomposables(const Instance& inst, const RunOptions& opts,
                                               DiskCache& cache) {
    std::uint32_t bound = inst.indec_dim_bound.value_or(4);
    EnumerateOptions eopts;
    if (inst.rep_finite_declared) eopts.declared_all_indec_bound = inst.indec_dim_bound;
    std::string key = "enum/" + inst.algebra->content_key() + "/bound=" + std::to_string(bound) +
                      "/seed=" + std::to_string(opts.seed);
    ojson j = cache.get_or_compute(key, [&] {
        Rng rng = stage_rng(opts.seed, 1);
        return enumerate_to_json(enumerate_indecomposables(inst.algebra, bound, rng, eopts));
    });
    return enumerate_from_json(inst.algebra, j);
}

struct ResolvedSubcategory {
    std::string label;
    SubcategorySpec spec;
};

inline std::vector<ResolvedSubcategory> resolve_subcategories(const Instance& inst,
                                                              const RunOptions& opts,
                                                              std::uint32_t n,
                                                              const EnumerateResult& ambient) {
    Rng rng = stage_rng(opts.seed, 2);
    std::vector<ResolvedSubcategory> out;
    auto all = [&]() {
        std::vector<std::string> names;
        for (const auto& m : ambient.indecomposables)
            names.push_back(standard_name(inst.algebra, m, rng));
        return ResolvedSubcategory{
            "all", make_subcategory(inst.algebra, ambient.indecomposables, names, rng)};
    };
    if (opts.subcategory == "all") {
        out.push_back(all());
    } else if (opts.subcategory == "auto") {
        if (n == 1) {
            out.push_back(all());
        } else {
            for (auto& hit : search_cluster_tilting(inst.algebra, n, ambient, rng)) {
                std::string label = "ct";
                for (const auto& nm : hit.spec.names) label += "-" + nm;
                out.push_back(ResolvedSubcategory{label, std::move(hit.spec)});
            }
        }
    } else {
        for (const auto& [sname, members] : inst.subcategories)
            if (sname == opts.subcategory) {
                std::vector<std::string> names;
                for (const auto& m : members)
                    names.push_back(standard_name(inst.algebra, m, rng));
                out.push_back(
                    ResolvedSubcategory{sname, make_subcategory(inst.algebra, members, names, rng)});
                return out;
            }
        throw input_error("unknown subcategory '" + opts.subcategory + "' (instance declares " +
                          std::to_string(inst.subcategories.size()) + " named subcategories)");
    }
    return out;
}

inline ojson report_header(const Instance& inst, const std::string& command,
                           const RunOptions& opts, std::uint32_t n,
                           const EnumerateResult& ambient) {
    ojson j;
    j["schema"] = "auslander-report/1";
    j["command"] = command;
    j["instance"] = inst.name;
    j["field_p"] = inst.p;
    j["n"] = n;
    j["seed"] = opts.seed;
    j["subcategory_option"] = opts.subcategory;
    ojson amb;
    amb["count"] = ambient.indecomposables.size();
    amb["complete_up_to_bound"] = ambient.complete_up_to_bound;
    amb["covers_all_indecomposables"] = ambient.covers_all_indecomposables;
    amb["policy"] = ambient.policy;
    Rng rng = stage_rng(opts.seed, 3);
    ojson names = ojson::array();
    for (const auto& m : ambient.indecomposables)
        names.push_back(standard_name(inst.algebra, m, rng));
    amb["indecomposables"] = std::move(names);
    j["ambient"] = std::move(amb);
    return j;
}

} // namespace detail

inline RunOutcome run_check_axioms(const Instance& inst, const RunOptions& opts) {
    detail::Stopwatch sw;
    DiskCache cache(opts.cache_dir, opts.use_cache, 25, opts.seed);
    std::uint32_t n = opts.n.value_or(inst.default_n);
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    auto subs = detail::resolve_subcategories(inst, opts, n, ambient);
    RunOutcome out;
    out.report = detail::report_header(inst, "check-axioms", opts, n, ambient);
    std::ostringstream text;
    text << "check-axioms " << inst.name << " (n = " << n << ", seed = " << opts.seed << ")\n";
    bool all_pass = !subs.empty();
    ojson results = ojson::array();
    for (const auto& sub : subs) {
        Rng rng = detail::stage_rng(opts.seed, 10 + fnv1a64(sub.label) % 1000);
        AddContext ctx = make_add_context(sub.spec, rng);
        AxiomCheckOptions aopts;
        aopts.samples_per_pair = opts.samples_per_pair;
        AxiomReport rep = check_axioms(ctx, n, rng, aopts);
        ojson rj;
        rj["subcategory"] = sub.label;
        rj["members"] = sub.spec.names;
        rj["axioms"] = axiom_report_to_json(rep);
        results.push_back(std::move(rj));
        all_pass = all_pass && rep.pass();
        text << render_verdict_line("axioms (A0)-(A3) on " + sub.label, rep.pass(),
                                    std::to_string(rep.morphisms_checked) + " morphisms");
        for (const auto& f : rep.failures) text << "       - " << f << "\n";
    }
    if (subs.empty()) text << "[FAIL] no subcategory resolved for n = " << std::to_string(n) << "\n";
    out.report["results"] = std::move(results);
    out.report["pass"] = all_pass;
    out.exit_code = all_pass ? 0 : 1;
    text << "elapsed: " << sw.ms() << " ms\n";
    out.text = text.str();
    return out;
}

inline RunOutcome run_find_ct(const Instance& inst, const RunOptions& opts) {
    detail::Stopwatch sw;
    DiskCache cache(opts.cache_dir, opts.use_cache, 25, opts.seed);
    std::uint32_t n = opts.n.value_or(inst.default_n);
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    Rng rng = detail::stage_rng(opts.seed, 4);
    auto hits = search_cluster_tilting(inst.algebra, n, ambient, rng);
    RunOutcome out;
    out.report = detail::report_header(inst, "find-ct", opts, n, ambient);
    ojson results = ojson::array();
    std::ostringstream text;
    text << "find-ct " << inst.name << " (n = " << n << ", seed = " << opts.seed << ")\n";
    for (const auto& hit : hits) {
        ojson h;
        h["members"] = hit.spec.names;
        h["certificate"] = ct_certificate_to_json(hit.certificate);
        results.push_back(std::move(h));
        std::string label;
        for (const auto& nm : hit.spec.names) label += (label.empty() ? "" : " + ") + nm;
        text << render_verdict_line("n-cluster tilting: " + label, true);
    }
    text << "found " << hits.size() << " subcategories\n";
    out.report["results"] = std::move(results);
    out.report["count"] = hits.size();
    out.report["pass"] = true; // the search itself is the answer
    out.exit_code = 0;
    text << "elapsed: " << sw.ms() << " ms\n";
    out.text = text.str();
    return out;
}

inline RunOutcome run_verify(const Instance& inst, const RunOptions& opts) {
    detail::Stopwatch sw;
    DiskCache cache(opts.cache_dir, opts.use_cache, 25, opts.seed);
    std::uint32_t n = opts.n.value_or(inst.default_n);
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    auto subs = detail::resolve_subcategories(inst, opts, n, ambient);
    RunOutcome out;
    out.report = detail::report_header(inst, "verify-auslander", opts, n, ambient);
    std::ostringstream text;
    text << "verify-auslander " << inst.name << " (n = " << n << ", seed = " << opts.seed
         << ")\n";
    bool all_pass = !subs.empty();
    if (subs.empty()) text << "[FAIL] no subcategory resolved for n = " << n << "\n";
    ojson results = ojson::array();
    for (const auto& sub : subs) {
        Rng rng = detail::stage_rng(opts.seed, 20 + fnv1a64(sub.label) % 1000);
        AddContext ctx = make_add_context(sub.spec, rng);
        VerifyOptions vopts;
        vopts.functor_dim_bound = inst.functor_dim_bound;
        vopts.resolution_length = inst.resolution_length;
        TheoremReport rep = verify_higher_auslander(ctx, n, ambient, rng, vopts, inst.name);
        ojson rj;
        rj["subcategory"] = sub.label;
        rj["members"] = sub.spec.names;
        rj["theorems"] = theorem_report_to_json(rep);
        results.push_back(std::move(rj));
        all_pass = all_pass && rep.overall();
        text << render_verdict_line("theorem A on " + sub.label, rep.theorem_a());
        text << render_verdict_line("theorem B on " + sub.label, rep.theorem_b(),
                                    std::to_string(rep.test_functors) + " test functors, " +
                                        std::to_string(rep.test_objects) + " test objects");
        for (const auto& [stage, ms] : rep.timings_ms)
            text << "       " << stage << ": " << ms << " ms\n";
        for (const auto* g :
             {&rep.cond_i, &rep.cond_ii, &rep.cond_iii, &rep.v_exact, &rep.kernel_id, &rep.u_ff,
              &rep.adjunction})
            for (const auto& f : g->failures) text << "       - " << f << "\n";
    }
    out.report["results"] = std::move(results);
    out.report["pass"] = all_pass;
    out.exit_code = all_pass ? 0 : 1;
    text << "elapsed: " << sw.ms() << " ms\n";
    out.text = text.str();
    return out;
}

inline RunOutcome run_full_report(const Instance& inst, const RunOptions& opts) {
    detail::Stopwatch sw;
    RunOutcome ax = run_check_axioms(inst, opts);
    RunOutcome ct = run_find_ct(inst, opts);
    RunOutcome ver = run_verify(inst, opts);
    RunOutcome out;
    std::uint32_t n = opts.n.value_or(inst.default_n);
    DiskCache cache(opts.cache_dir, opts.use_cache, 25, opts.seed);
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    out.report = detail::report_header(inst, "report", opts, n, ambient);
    out.report["check_axioms"] = ax.report;
    out.report["find_ct"] = ct.report;
    out.report["verify_auslander"] = ver.report;
    bool pass = ax.exit_code == 0 && ct.exit_code == 0 && ver.exit_code == 0;
    out.report["pass"] = pass;
    out.exit_code = pass ? 0 : 1;
    std::ostringstream text;
    text << ax.text << ct.text << ver.text;
    text << "total elapsed: " << sw.ms() << " ms\n";
    out.text = text.str();
    return out;
}

} // namespace ausl
