// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//   1. classical formula on the A2 path algebra (n = 1), integer counts exact
//   2. higher instance on the Auslander algebra of A2 (n = 2), incl. the CLI
//   3. degenerate semisimple instance, n in {1, 2, 3}
//   4. seeded property suites (exact assertions)
//   5. oracle equivalence: n-(co)kernels vs plain (co)kernels; both
//      effaceability characterizations across the whole test family

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "auslander/workbench.hpp"

using namespace ausl;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
    long long budget_ms = 0;
    long long elapsed_ms = 0;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string instance_path(const std::string& name) {
    return std::string(AUSL_INSTANCE_DIR) + "/" + name;
}

template <class F>
Criterion run_criterion(const std::string& name, long long budget_ms, F&& body) {
    Criterion c;
    c.name = name;
    c.budget_ms = budget_ms;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (c.elapsed_ms >= budget_ms) {
        c.ok = false;
        c.notes.push_back("runtime budget exceeded: " + std::to_string(c.elapsed_ms) + " ms >= " +
                          std::to_string(budget_ms) + " ms");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 1

void criterion1(Criterion& c) {
    Instance inst = parse_instance(instance_path("a2.json"));
    RunOptions opts;
    DiskCache cache;
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    c.require(ambient.indecomposables.size() == 3, "expected 3 ambient indecomposables");
    c.require(ambient.covers_all_indecomposables, "enumeration must be provably complete");

    Rng rng(0);
    auto subs = detail::resolve_subcategories(inst, opts, 1, ambient);
    c.require(subs.size() == 1, "auto subcategory for n = 1 is mod A");
    AddContext ctx = make_add_context(subs[0].spec, rng);
    c.require(ctx.gamma->algebra_dim() == 5, "dim of the Auslander algebra must be 5");

    SimpleEffaceability se = effaceable_simples(ctx.gamma);
    c.require(se.effaceable == 1, "exactly one effaceable simple functor");
    c.require(se.non_effaceable == 2, "non-effaceable simples = simples of mod A = 2");
    // the effaceable one sits at the unique non-projective indecomposable
    for (std::uint32_t s = 0; s < ctx.spec.size(); ++s) {
        bool projective = false;
        for (std::uint32_t v = 0; v < inst.algebra->quiver().vertices.size(); ++v)
            if (is_isomorphic(ctx.spec.members[s], inst.algebra->projective_at(v), rng))
                projective = true;
        c.require(se.by_slot[s] == !projective,
                  "effaceability of the simple at " + ctx.spec.names[s] +
                      " must match non-projectivity");
    }

    TheoremReport rep = verify_higher_auslander(ctx, 1, ambient, rng, {}, inst.name);
    c.require(rep.theorem_b(), "all theorem-B verdicts must pass");
    c.require(rep.overall(), "full verification must pass");
}

// ---------------------------------------------------------------- criterion 2

int run_cli(const std::string& args) {
    std::string cmd = std::string(AUSL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

void criterion2(Criterion& c) {
    Instance inst = parse_instance(instance_path("auslander_a2.json"));
    RunOptions opts;
    opts.n = 2;

    RunOutcome ct = run_find_ct(inst, opts);
    c.require(ct.report["count"].get<std::size_t>() == 1,
              "find-ct must return exactly one subcategory");
    c.require(ct.report["results"][0]["members"].size() == 4,
              "the subcategory has 4 of the 5 indecomposables");
    // it contains every projective and every injective
    Rng rng(0);
    DiskCache cache;
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    auto subs = detail::resolve_subcategories(inst, opts, 2, ambient);
    c.require(subs.size() == 1, "auto resolution finds the unique subcategory");
    const auto& spec = subs[0].spec;
    for (std::uint32_t v = 0; v < inst.algebra->quiver().vertices.size(); ++v) {
        c.require(find_member(spec, inst.algebra->projective_at(v), rng).has_value(),
                  "projective at vertex " + std::to_string(v + 1) + " is a member");
        c.require(find_member(spec, inst.algebra->injective_at(v), rng).has_value(),
                  "injective at vertex " + std::to_string(v + 1) + " is a member");
    }

    RunOutcome ax = run_check_axioms(inst, opts);
    c.require(ax.exit_code == 0, "check-axioms must pass on the found subcategory");

    RunOutcome ver = run_verify(inst, opts);
    c.require(ver.exit_code == 0, "verify-auslander must pass");
    const ojson& th = ver.report["results"][0]["theorems"];
    for (const char* key : {"condition_i_n_exactness_transfer", "condition_ii_rigidity",
                            "condition_iii_cokernel_presentations"})
        c.require(th["theorem_a"][key]["pass"].get<bool>(), std::string("theorem A group ") + key);
    c.require(th["theorem_a"]["cluster_tilting_certificate"]["passes"].get<bool>(),
              "cluster tilting certificate");
    for (const char* key : {"v_exactness", "kernel_identification", "u_fully_faithful",
                            "adjunction"})
        c.require(th["theorem_b"][key]["pass"].get<bool>(), std::string("theorem B group ") + key);

    // exercise the installed command-line surface and its exit-code contract
    c.require(run_cli("find-ct " + instance_path("auslander_a2.json") + " --n 2") == 0,
              "CLI find-ct exit code");
    c.require(run_cli("verify-auslander " + instance_path("auslander_a2.json") + " --n 2") == 0,
              "CLI verify-auslander exit code");
    c.require(run_cli("check-axioms " + instance_path("a2.json") + " --n 2 --subcategory all") ==
                  1,
              "CLI check-axioms exit code 1 on a failing instance");
    c.require(run_cli("verify-auslander " + instance_path("missing.json")) == 2,
              "CLI exit code 2 on unreadable input");
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Criterion& c) {
    Instance inst = parse_instance(instance_path("semisimple2.json"));
    for (std::uint32_t n = 1; n <= 3; ++n) {
        RunOptions opts;
        opts.n = n;
        opts.subcategory = "all";
        DiskCache cache;
        EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
        Rng rng(0);
        auto subs = detail::resolve_subcategories(inst, opts, n, ambient);
        AddContext ctx = make_add_context(subs[0].spec, rng);
        TheoremReport rep = verify_higher_auslander(ctx, n, ambient, rng, {}, inst.name);
        c.require(rep.overall(), "all verdicts pass for n = " + std::to_string(n));
        c.require(rep.simples.effaceable == 0, "mod_0 is zero for n = " + std::to_string(n));
        // U∘V is dimensionally the identity on the test family
        EnumerateResult funs = enumerate_indecomposables(ctx.gamma, 3, rng);
        for (const auto& f : funs.indecomposables) {
            VData v = functor_v(ctx.gamma, f);
            Rep uvf = restricted_yoneda(ctx.gamma, v.value);
            c.require(uvf.total_dim() == f.total_dim(),
                      "U(V(F)) has the dimension of F for n = " + std::to_string(n));
        }
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion4(Criterion& c) {
    // rref idempotence and rank-transpose on 500 random matrices
    {
        PrimeField f(101);
        Rng rng(4001);
        for (int t = 0; t < 500; ++t) {
            std::uint32_t r = 1 + rng.below(6), cols = 1 + rng.below(6);
            Mat m(f, r, cols);
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_element(f);
            RrefResult rr = rref(m);
            RrefResult rr2 = rref(rr.reduced);
            c.require(rr2.reduced == rr.reduced && rr2.rank == rr.rank, "rref idempotence");
            c.require(rank(m.transposed()) == rr.rank, "rank of transpose");
        }
    }

    // d∘d = 0 and cone-of-identity n-exactness on 100 random corpus complexes
    {
        Instance inst = parse_instance(instance_path("auslander_a2.json"));
        Rng rng(4002);
        RunOptions opts;
        DiskCache cache;
        EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
        auto subs = detail::resolve_subcategories(inst, opts, 2, ambient);
        AddContext ctx = make_add_context(subs[0].spec, rng);
        auto random_sum = [&]() {
            std::vector<Rep> parts;
            std::uint32_t k = 1 + rng.below(2);
            for (std::uint32_t q = 0; q < k; ++q)
                parts.push_back(ctx.spec.members[rng.below(ctx.spec.size())]);
            return direct_sum(parts, ctx.spec.ambient).object;
        };
        for (int t = 0; t < 100; ++t) {
            std::uint32_t len = 1 + rng.below(2);
            std::vector<Rep> objs;
            for (std::uint32_t i = 0; i <= len; ++i) objs.push_back(random_sum());
            std::vector<RepHom> diffs;
            for (std::uint32_t i = 0; i < len; ++i) {
                auto basis = hom_basis(objs[i], objs[i + 1]);
                if (i > 0) {
                    std::vector<RepHom> good;
                    for (const auto& h : basis)
                        if (hom_is_zero(compose(h, diffs[i - 1]))) good.push_back(h);
                    basis = good;
                }
                diffs.push_back(basis.empty() ? zero_hom(objs[i], objs[i + 1])
                                              : random_hom(basis, objs[i], objs[i + 1], rng));
            }
            Complex x = make_complex(objs, diffs); // validates d∘d = 0
            for (std::uint32_t k2 = 0; k2 + 1 < x.diffs.size(); ++k2)
                c.require(hom_is_zero(compose(x.diffs[k2 + 1], x.diffs[k2])), "d∘d = 0");
            NExactnessVerdict v = is_n_exact(ctx, mapping_cone(identity_chain_map(x)), len);
            c.require(v.right && v.left, "cone of the identity is n-exact");
        }
    }

    // Yoneda dimension equalities on all corpus pairs
    {
        Rng rng(4003);
        for (const char* name : {"a2.json", "auslander_a2.json", "semisimple2.json"}) {
            Instance inst = parse_instance(instance_path(name));
            RunOptions opts;
            DiskCache cache;
            EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
            auto subs =
                detail::resolve_subcategories(inst, opts, inst.default_n, ambient);
            AddContext ctx = make_add_context(subs[0].spec, rng);
            for (std::uint32_t i = 0; i < ctx.spec.size(); ++i)
                for (std::uint32_t j = 0; j < ctx.spec.size(); ++j)
                    c.require(hom_dim(ctx.gamma->projective_at(i), ctx.gamma->projective_at(j)) ==
                                  hom_dim(ctx.spec.members[i], ctx.spec.members[j]),
                              "Yoneda dimension equality");
        }
    }

    // adjunction dimension equality on all (test F, test b) pairs; rigidity
    // tables all-zero for certified subcategories; removal monotonicity
    {
        Rng rng(4004);
        struct Case {
            const char* file;
            std::uint32_t n;
        };
        for (Case cs : {Case{"a2.json", 1}, Case{"auslander_a2.json", 2},
                        Case{"semisimple2.json", 2}}) {
            Instance inst = parse_instance(instance_path(cs.file));
            RunOptions opts;
            opts.n = cs.n;
            DiskCache cache;
            EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
            auto subs = detail::resolve_subcategories(inst, opts, cs.n, ambient);
            AddContext ctx = make_add_context(subs[0].spec, rng);
            CTCertificate cert = is_n_cluster_tilting(ctx, cs.n, ambient, rng);
            c.require(cert.passes, std::string("certificate for ") + cs.file);
            c.require(cert.rigidity.all_zero, "rigidity table all-zero");
            // adjunction dimensions
            EnumerateResult funs = enumerate_indecomposables(ctx.gamma, inst.functor_dim_bound, rng);
            for (const auto& f : funs.indecomposables) {
                VData v = functor_v(ctx.gamma, f);
                for (const auto& b : ambient.indecomposables)
                    c.require(hom_dim(f, restricted_yoneda(ctx.gamma, b)) == hom_dim(v.value, b),
                              "adjunction dimension equality");
            }
            // removal monotonicity
            for (std::uint32_t drop = 0; drop < ctx.spec.size(); ++drop) {
                std::vector<Rep> members;
                std::vector<std::string> names;
                for (std::uint32_t i = 0; i < ctx.spec.size(); ++i)
                    if (i != drop) {
                        members.push_back(ctx.spec.members[i]);
                        names.push_back(ctx.spec.names[i]);
                    }
                auto sub = make_subcategory(inst.algebra, members, names, rng);
                AddContext dctx = make_add_context(sub, rng);
                c.require(!is_n_cluster_tilting(dctx, cs.n, ambient, rng).passes,
                          "removal must break the certificate");
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion5(Criterion& c) {
    Instance inst = parse_instance(instance_path("a2.json"));
    Rng rng(5001);
    RunOptions opts;
    DiskCache cache;
    EnumerateResult ambient = detail::ambient_indecomposables(inst, opts, cache);
    auto subs = detail::resolve_subcategories(inst, opts, 1, ambient);
    AddContext ctx = make_add_context(subs[0].spec, rng);
    auto random_sum = [&]() {
        std::vector<Rep> parts;
        std::uint32_t k = 1 + rng.below(3);
        for (std::uint32_t q = 0; q < k; ++q)
            parts.push_back(ctx.spec.members[rng.below(ctx.spec.size())]);
        return direct_sum(parts, ctx.spec.ambient).object;
    };
    for (int t = 0; t < 100; ++t) {
        Rep a = random_sum(), b = random_sum();
        auto basis = hom_basis(a, b);
        RepHom f = basis.empty() ? zero_hom(a, b) : random_hom(basis, a, b, rng);
        Complex ck = n_cokernel(ctx, f, 1, rng);
        c.require(is_isomorphic(ck.objects[2], cokernel(f).object, rng),
                  "1-cokernel agrees with the cokernel");
        Complex kk = n_kernel(ctx, f, 1, rng);
        c.require(is_isomorphic(kk.objects[0], kernel(f).object, rng),
                  "1-kernel agrees with the kernel");
    }
    // both effaceability characterizations across the entire test family of
    // every corpus instance (a disagreement throws and fails the criterion)
    for (const char* name : {"a2.json", "auslander_a2.json", "semisimple2.json"}) {
        Instance other = parse_instance(instance_path(name));
        RunOptions oopts;
        DiskCache ocache;
        EnumerateResult amb = detail::ambient_indecomposables(other, oopts, ocache);
        auto osubs = detail::resolve_subcategories(other, oopts, other.default_n, amb);
        AddContext octx = make_add_context(osubs[0].spec, rng);
        EnumerateResult funs =
            enumerate_indecomposables(octx.gamma, other.functor_dim_bound, rng);
        std::uint32_t checked = 0;
        for (const auto& f : funs.indecomposables) {
            (void)is_effaceable(octx.gamma, f); // throws on any disagreement
            checked++;
        }
        c.require(checked == funs.indecomposables.size(),
                  std::string("effaceability double-check on ") + name);
    }
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(run_criterion("criterion-1 classical formula on kA2 (n = 1)", 10000,
                                    criterion1));
    results.push_back(run_criterion("criterion-2 higher instance on the Auslander algebra (n = 2)",
                                    60000, criterion2));
    results.push_back(
        run_criterion("criterion-3 degenerate semisimple instance (n = 1, 2, 3)", 5000,
                      criterion3));
    results.push_back(run_criterion("criterion-4 seeded property suites", 60000, criterion4));
    results.push_back(run_criterion("criterion-5 oracle equivalence suites", 60000, criterion5));

    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.elapsed_ms << " ms"
                  << ", budget " << r.budget_ms << " ms)\n";
        for (const auto& n : r.notes) std::cout << "       - " << n << "\n";
        all = all && r.ok;
    }
    std::cout << (all ? "acceptance: all criteria passed\n"
                      : "acceptance: at least one criterion failed\n");
    return all ? 0 : 1;
}
