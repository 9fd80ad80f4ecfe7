#include <catch2/catch_amalgamated.hpp>

#include "auslander/axioms.hpp"
#include "auslander/tilting.hpp"
#include "fixtures.hpp"

using namespace ausl;

namespace {

EnumerateResult ambient_of(std::shared_ptr<const QuiverAlgebra> alg, std::uint32_t bound,
                           std::uint32_t declared, Rng& rng) {
    EnumerateOptions opts;
    opts.declared_all_indec_bound = declared;
    return enumerate_indecomposables(alg, bound, rng, opts);
}

SubcategorySpec canonical_ct(std::shared_ptr<const QuiverAlgebra> g5, Rng& rng) {
    // all projectives plus the remaining injective S1
    return make_subcategory(g5,
                            {g5->simple_at(0), g5->projective_at(0), g5->projective_at(1),
                             g5->projective_at(2)},
                            {"S1", "P1", "P2", "P3"}, rng);
}

} // namespace

TEST_CASE("approximations") {
    Rng rng(31);
    auto g5 = fixtures::gamma5();
    auto spec = canonical_ct(g5, rng);
    AddContext ctx = make_add_context(spec, rng);

    SECTION("a member approximates itself by an isomorphism") {
        Approximation a = right_approximation(ctx, spec.members[1]);
        REQUIRE(a.slots == std::vector<std::uint32_t>{1});
        REQUIRE(is_iso(a.mor));
        REQUIRE(a.surjective_onto_homs);
    }
    SECTION("the zero module is approximated by the empty sum") {
        Approximation a = right_approximation(ctx, zero_rep(g5));
        REQUIRE(a.slots.empty());
        REQUIRE(a.sum.is_zero());
        Approximation l = left_approximation(ctx, zero_rep(g5));
        REQUIRE(l.slots.empty());
    }
    SECTION("right approximation of the omitted simple S2 comes from P2 and is epi") {
        Rep s2 = g5->simple_at(1);
        Approximation a = right_approximation(ctx, s2);
        REQUIRE(a.slots == std::vector<std::uint32_t>{2}); // P2 = [2,3]
        REQUIRE(a.is_epi_or_mono);
        REQUIRE(a.surjective_onto_homs);
        // factorization: every basis morphism member -> S2 factors through it
        for (const auto& m : spec.members)
            for (const auto& phi : hom_basis(m, s2)) {
                auto fac = factor_right(phi, a.mor);
                REQUIRE(fac);
                REQUIRE(hom_equal(compose(a.mor, *fac), phi));
            }
    }
    SECTION("left approximation of S2 is mono into P1") {
        Rep s2 = g5->simple_at(1);
        Approximation l = left_approximation(ctx, s2);
        REQUIRE(l.slots == std::vector<std::uint32_t>{1}); // P1 = [1,2]
        REQUIRE(l.is_epi_or_mono);
    }
    SECTION("the Yoneda module of the omitted simple has total dimension 1") {
        // dim U(S2) = sum of dim Hom(M_i, S2) = 0 + 0 + 1 + 0
        Rep u = restricted_yoneda(ctx.gamma, g5->simple_at(1));
        REQUIRE(u.dims == std::vector<std::uint32_t>{0, 0, 1, 0});
        std::uint32_t total = 0;
        for (const auto& m : spec.members) total += hom_dim(m, g5->simple_at(1));
        REQUIRE(u.total_dim() == total);
    }
    SECTION("canonical (non-minimal) approximation is the full evaluation map") {
        Rep s2 = g5->simple_at(1);
        Approximation a = right_approximation(ctx, s2, false);
        REQUIRE(a.surjective_onto_homs);
        // one summand per basis element of each Hom(M_i, S2)
        std::uint32_t expect = 0;
        for (const auto& m : spec.members)
            expect += hom_dim(m, s2);
        REQUIRE(a.slots.size() == expect);
    }
}

TEST_CASE("rigidity reports") {
    Rng rng(37);
    auto g5 = fixtures::gamma5();
    SECTION("n = 1 is vacuously rigid") {
        auto spec = canonical_ct(g5, rng);
        RigidityReport r = n_rigidity_report(spec, 1);
        REQUIRE(r.entries.empty());
        REQUIRE(r.all_zero);
    }
    SECTION("projectives are rigid for every n") {
        auto spec = make_subcategory(
            g5, {g5->projective_at(0), g5->projective_at(1), g5->projective_at(2)},
            {"P1", "P2", "P3"}, rng);
        for (std::uint32_t n = 2; n <= 4; ++n) REQUIRE(n_rigidity_report(spec, n).all_zero);
    }
    SECTION("the canonical subcategory has an all-zero 4x4 table at k = 1") {
        auto spec = canonical_ct(g5, rng);
        RigidityReport r = n_rigidity_report(spec, 2);
        REQUIRE(r.entries.size() == 16);
        REQUIRE(r.all_zero);
    }
    SECTION("the full module category is not 2-rigid") {
        auto all = ambient_of(g5, 2, 2, rng);
        std::vector<std::string> names;
        for (const auto& m : all.indecomposables) names.push_back(standard_name(g5, m, rng));
        auto spec = make_subcategory(g5, all.indecomposables, names, rng);
        REQUIRE(!n_rigidity_report(spec, 2).all_zero);
    }
}

TEST_CASE("cluster tilting certificates") {
    Rng rng(41);
    SECTION("mod A is the unique 1-cluster tilting subcategory of itself") {
        auto a2 = fixtures::kA2();
        auto ambient = ambient_of(a2, 2, 2, rng);
        std::vector<std::string> names;
        for (const auto& m : ambient.indecomposables) names.push_back(standard_name(a2, m, rng));
        auto spec = make_subcategory(a2, ambient.indecomposables, names, rng);
        AddContext ctx = make_add_context(spec, rng);
        CTCertificate cert = is_n_cluster_tilting(ctx, 1, ambient, rng);
        REQUIRE(cert.passes);
        REQUIRE(!cert.conditional);
    }
    SECTION("the canonical 4-member subcategory is 2-cluster tilting") {
        auto g5 = fixtures::gamma5();
        auto ambient = ambient_of(g5, 2, 2, rng);
        REQUIRE(ambient.indecomposables.size() == 5);
        auto spec = canonical_ct(g5, rng);
        AddContext ctx = make_add_context(spec, rng);
        CTCertificate cert = is_n_cluster_tilting(ctx, 2, ambient, rng);
        REQUIRE(cert.passes);
        REQUIRE(cert.enumeration_complete);
        // orthogonality symmetry: left and right orthogonals coincide as sets
        for (const auto& w : cert.witnesses)
            REQUIRE(w.in_left_orthogonal == w.in_right_orthogonal);
        // cross-validation: a certified subcategory passes the axiom checker
        AxiomCheckOptions fast;
        fast.samples_per_pair = 6;
        REQUIRE(check_axioms(ctx, 2, rng, fast).pass());
    }
    SECTION("removing any member breaks the certificate") {
        auto g5 = fixtures::gamma5();
        auto ambient = ambient_of(g5, 2, 2, rng);
        auto spec = canonical_ct(g5, rng);
        for (std::uint32_t drop = 0; drop < spec.size(); ++drop) {
            std::vector<Rep> members;
            std::vector<std::string> names;
            for (std::uint32_t i = 0; i < spec.size(); ++i)
                if (i != drop) {
                    members.push_back(spec.members[i]);
                    names.push_back(spec.names[i]);
                }
            auto sub = make_subcategory(g5, members, names, rng);
            AddContext ctx = make_add_context(sub, rng);
            CTCertificate cert = is_n_cluster_tilting(ctx, 2, ambient, rng);
            REQUIRE(!cert.passes);
            REQUIRE(!cert.failures.empty());
        }
    }
}

TEST_CASE("cluster tilting search") {
    Rng rng(43);
    SECTION("n = 1: exactly one hit, everything") {
        auto a2 = fixtures::kA2();
        auto ambient = ambient_of(a2, 2, 2, rng);
        auto hits = search_cluster_tilting(a2, 1, ambient, rng);
        REQUIRE(hits.size() == 1);
        REQUIRE(hits[0].spec.size() == 3);
    }
    SECTION("the Auslander algebra has exactly one 2-cluster tilting subcategory, of size 4") {
        auto g5 = fixtures::gamma5();
        auto ambient = ambient_of(g5, 2, 2, rng);
        auto hits = search_cluster_tilting(g5, 2, ambient, rng);
        REQUIRE(hits.size() == 1);
        REQUIRE(hits[0].spec.size() == 4);
        // it is all projectives plus the remaining injective S1
        // (S3 is the projective at vertex 3, P2 = [2,3] is also the injective at 3)
        std::vector<std::string> names = hits[0].spec.names;
        std::sort(names.begin(), names.end());
        REQUIRE(names == std::vector<std::string>{"P1", "P2", "S1", "S3"});
    }
    SECTION("kA2 has no 2-cluster tilting subcategory") {
        auto a2 = fixtures::kA2();
        auto ambient = ambient_of(a2, 2, 2, rng);
        REQUIRE(search_cluster_tilting(a2, 2, ambient, rng).empty());
    }
    SECTION("search refuses incomplete enumerations") {
        auto a2 = fixtures::kA2();
        auto incomplete = enumerate_indecomposables(a2, 2, rng); // no declared bound
        REQUIRE(!incomplete.covers_all_indecomposables);
        REQUIRE_THROWS_AS(search_cluster_tilting(a2, 1, incomplete, rng), input_error);
    }
}
