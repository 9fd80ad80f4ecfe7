#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "auslander/workbench.hpp"

using namespace ausl;

namespace {

std::string instance_path(const std::string& name) {
    return std::string(AUSL_INSTANCE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("parsing the bundled instances") {
    SECTION("a2") {
        Instance inst = parse_instance(instance_path("a2.json"));
        REQUIRE(inst.name == "a2");
        REQUIRE(inst.p == 101);
        REQUIRE(inst.algebra->algebra_dim() == 3);
        REQUIRE(inst.default_n == 1);
        REQUIRE(inst.rep_finite_declared);
    }
    SECTION("auslander_a2: the algebra has dimension 5, recomputed on load") {
        Instance inst = parse_instance(instance_path("auslander_a2.json"));
        REQUIRE(inst.algebra->algebra_dim() == 5);
        REQUIRE(inst.subcategories.size() == 1);
        REQUIRE(inst.subcategories[0].first == "canonical");
        REQUIRE(inst.subcategories[0].second.size() == 4);
    }
    SECTION("semisimple2") {
        Instance inst = parse_instance(instance_path("semisimple2.json"));
        REQUIRE(inst.algebra->algebra_dim() == 2);
    }
}

TEST_CASE("instance diagnostics") {
    SECTION("non-prime modulus") {
        auto p = write_temp("bad_p.json", R"({
          "schema": "auslander-instance/1", "name": "bad",
          "field": {"p": 4},
          "quiver": {"vertices": ["1"], "arrows": []}})");
        REQUIRE_THROWS_WITH(parse_instance(p),
                            Catch::Matchers::ContainsSubstring("modulus not prime"));
    }
    SECTION("malformed JSON") {
        auto p = write_temp("bad_json.json", "{ not json");
        REQUIRE_THROWS_WITH(parse_instance(p),
                            Catch::Matchers::ContainsSubstring("malformed JSON"));
    }
    SECTION("inadmissible relation") {
        auto p = write_temp("bad_rel.json", R"({
          "schema": "auslander-instance/1", "name": "bad",
          "field": {"p": 101},
          "quiver": {"vertices": ["1","2"], "arrows": [{"name":"a","from":"1","to":"2"}]},
          "relations": [[{"coeff": 1, "path": ["a"]}]]})");
        REQUIRE_THROWS_WITH(parse_instance(p),
                            Catch::Matchers::ContainsSubstring("admissible"));
    }
    SECTION("subcategory module violating a relation, with location") {
        auto p = write_temp("bad_mod.json", R"({
          "schema": "auslander-instance/1", "name": "bad",
          "field": {"p": 101},
          "quiver": {"vertices": ["1","2","3"],
                     "arrows": [{"name":"a","from":"1","to":"2"},
                                 {"name":"b","from":"2","to":"3"}]},
          "relations": [[{"coeff": 1, "path": ["a","b"]}]],
          "subcategories": {"broken": [
            {"dims": {"1":1,"2":1,"3":1}, "arrows": {"a": [[1]], "b": [[1]]}}
          ]}})");
        REQUIRE_THROWS_WITH(parse_instance(p),
                            Catch::Matchers::ContainsSubstring("broken") &&
                                Catch::Matchers::ContainsSubstring("relation violated"));
    }
    SECTION("shape mismatch") {
        auto p = write_temp("bad_shape.json", R"({
          "schema": "auslander-instance/1", "name": "bad",
          "field": {"p": 101},
          "quiver": {"vertices": ["1","2"], "arrows": [{"name":"a","from":"1","to":"2"}]},
          "subcategories": {"broken": [
            {"dims": {"1":1,"2":1}, "arrows": {"a": [[1],[2]]}}
          ]}})");
        REQUIRE_THROWS_WITH(parse_instance(p), Catch::Matchers::ContainsSubstring("rows"));
    }
}

TEST_CASE("canonical emission round-trips") {
    for (const char* name : {"a2.json", "auslander_a2.json", "semisimple2.json"}) {
        Instance inst = parse_instance(instance_path(name));
        ojson once = emit_instance(inst);
        Instance reparsed = parse_instance_json(once, "roundtrip");
        ojson twice = emit_instance(reparsed);
        REQUIRE(once.dump() == twice.dump());
    }
}

TEST_CASE("pipelines and exit codes") {
    Instance a2 = parse_instance(instance_path("a2.json"));
    Instance g5 = parse_instance(instance_path("auslander_a2.json"));
    RunOptions opts;
    opts.samples_per_pair = 8; // keep the unit suite fast

    SECTION("check-axioms passes on a2 with the default n") {
        RunOutcome r = run_check_axioms(a2, opts);
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.report["pass"].get<bool>());
    }
    SECTION("check-axioms fails on a2 with n = 2 and subcategory all") {
        RunOptions o = opts;
        o.n = 2;
        o.subcategory = "all";
        RunOutcome r = run_check_axioms(a2, o);
        REQUIRE(r.exit_code == 1);
        REQUIRE(!r.report["results"][0]["axioms"]["failures"].empty());
    }
    SECTION("find-ct on the Auslander algebra finds the canonical subcategory") {
        RunOutcome r = run_find_ct(g5, opts);
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.report["count"].get<std::size_t>() == 1);
        REQUIRE(r.report["results"][0]["members"].size() == 4);
    }
    SECTION("verify-auslander with the named subcategory") {
        RunOptions o = opts;
        o.subcategory = "canonical";
        RunOutcome r = run_verify(g5, o);
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.report["results"][0]["theorems"]["pass"].get<bool>());
    }
}

TEST_CASE("the report command bundles all pipelines") {
    Instance ss = parse_instance(instance_path("semisimple2.json"));
    RunOptions opts;
    opts.samples_per_pair = 6;
    opts.n = 2;
    RunOutcome r = run_full_report(ss, opts);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.report["pass"].get<bool>());
    REQUIRE(r.report.contains("check_axioms"));
    REQUIRE(r.report.contains("find_ct"));
    REQUIRE(r.report.contains("verify_auslander"));
    REQUIRE(r.report["find_ct"]["count"].get<std::size_t>() == 1);

    SECTION("unknown subcategory names are a distinct diagnostic") {
        RunOptions bad = opts;
        bad.subcategory = "nonexistent";
        REQUIRE_THROWS_WITH(run_check_axioms(ss, bad),
                            Catch::Matchers::ContainsSubstring("unknown subcategory"));
    }
}

TEST_CASE("the iterated instance: kA4 modulo squared radical at n = 3") {
    Instance inst = parse_instance(instance_path("a4rad2.json"));
    REQUIRE(inst.algebra->algebra_dim() == 7);
    RunOptions opts;
    opts.samples_per_pair = 6;

    // exactly one n-cluster tilting subcategory, and only at n = 3 (and the
    // trivial n = 1): all projectives plus the remaining injective
    std::vector<std::size_t> counts;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        RunOptions o = opts;
        o.n = n;
        counts.push_back(run_find_ct(inst, o).report["count"].get<std::size_t>());
    }
    REQUIRE(counts == std::vector<std::size_t>{1, 0, 1, 0});
    RunOptions o3 = opts;
    o3.n = 3;
    RunOutcome ct = run_find_ct(inst, o3);
    REQUIRE(ct.report["results"][0]["members"].size() == 5);

    RunOutcome ax = run_check_axioms(inst, o3);
    REQUIRE(ax.exit_code == 0);
    RunOutcome ver = run_verify(inst, o3);
    REQUIRE(ver.exit_code == 0);
}

TEST_CASE("determinism and cache transparency") {
    Instance g5 = parse_instance(instance_path("auslander_a2.json"));
    RunOptions opts;
    opts.samples_per_pair = 6;
    opts.seed = 7;

    RunOutcome first = run_verify(g5, opts);
    RunOutcome second = run_verify(g5, opts);
    REQUIRE(first.report.dump() == second.report.dump());
    REQUIRE(run_check_axioms(g5, opts).report.dump() ==
            run_check_axioms(g5, opts).report.dump());
    REQUIRE(run_find_ct(g5, opts).report.dump() == run_find_ct(g5, opts).report.dump());

    // cache on: same canonical report, both cold and warm
    auto dir = std::filesystem::temp_directory_path() / "ausl-cache-test";
    std::filesystem::remove_all(dir);
    RunOptions cached = opts;
    cached.use_cache = true;
    cached.cache_dir = dir.string();
    RunOutcome cold = run_verify(g5, cached);
    RunOutcome warm = run_verify(g5, cached);
    REQUIRE(cold.report.dump() == first.report.dump());
    REQUIRE(warm.report.dump() == first.report.dump());
    std::filesystem::remove_all(dir);

    // different seed changes the random sampling notes but still passes
    RunOptions other = opts;
    other.seed = 8;
    RunOutcome third = run_verify(g5, other);
    REQUIRE(third.exit_code == 0);
}
