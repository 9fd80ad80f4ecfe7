#include <catch2/catch_amalgamated.hpp>

#include "auslander/endalgebra.hpp"
#include "auslander/enumerate.hpp"
#include "auslander/resolve.hpp"
#include "fixtures.hpp"

using namespace ausl;

namespace {

SubcategorySpec a2_all(std::shared_ptr<const QuiverAlgebra> a2, Rng& rng) {
    return make_subcategory(
        a2, {a2->simple_at(0), a2->simple_at(1), a2->projective_at(0)}, {"S1", "S2", "P1"}, rng);
}

} // namespace

TEST_CASE("endomorphism algebra dimensions") {
    Rng rng(3);
    SECTION("a single simple has a one-dimensional algebra") {
        auto a2 = fixtures::kA2();
        auto spec = make_subcategory(a2, {a2->simple_at(0)}, {"S1"}, rng);
        auto gamma = EndCategory::create(spec, rng);
        REQUIRE(gamma->algebra_dim() == 1);
    }
    SECTION("the Auslander algebra of kA2 has dimension 5") {
        // 3 identities + Hom(S2,P1) + Hom(P1,S1)
        auto a2 = fixtures::kA2();
        auto gamma = EndCategory::create(a2_all(a2, rng), rng);
        REQUIRE(gamma->algebra_dim() == 5);
        // sanity: the off-diagonal hom dimensions
        REQUIRE(gamma->elem_range(1, 2).second == 1); // Hom(S2, P1)
        REQUIRE(gamma->elem_range(2, 0).second == 1); // Hom(P1, S1)
        REQUIRE(gamma->elem_range(0, 1).second == 0);
    }
    SECTION("semisimple ambient with everything: product of two fields") {
        auto ss = fixtures::semisimple2();
        auto spec = make_subcategory(ss, {ss->simple_at(0), ss->simple_at(1)}, {"S1", "S2"}, rng);
        auto gamma = EndCategory::create(spec, rng);
        REQUIRE(gamma->algebra_dim() == 2);
    }
}

TEST_CASE("restricted Yoneda") {
    Rng rng(5);
    auto a2 = fixtures::kA2();
    auto spec = a2_all(a2, rng);
    auto gamma = EndCategory::create(spec, rng);

    SECTION("projectives agree with the Yoneda modules of members") {
        for (std::uint32_t i = 0; i < spec.size(); ++i) {
            Rep h = gamma->projective_at(i);
            Rep u = restricted_yoneda(gamma, spec.members[i]);
            REQUIRE(h.dims == u.dims);
            REQUIRE(is_isomorphic(h, u, rng));
        }
    }
    SECTION("yoneda of the zero module is zero") {
        REQUIRE(restricted_yoneda(gamma, zero_rep(a2)).is_zero());
    }
    SECTION("slot dimensions are hom dimensions") {
        Rep u = restricted_yoneda(gamma, a2->simple_at(0));
        REQUIRE(u.dims == std::vector<std::uint32_t>{1, 0, 1}); // Hom(S1,S1), Hom(S2,S1), Hom(P1,S1)
    }
    SECTION("covariant side") {
        auto gop = gamma->create_opposite();
        Rep t = co_yoneda(gop, a2->simple_at(1));
        REQUIRE(t.dims == std::vector<std::uint32_t>{0, 1, 1}); // Hom(S2,S1), Hom(S2,S2), Hom(S2,P1)
        Rep hop = gop->projective_at(1);
        REQUIRE(hop.dims == t.dims);
        REQUIRE(is_isomorphic(hop, t, rng));
    }
}

TEST_CASE("Yoneda full faithfulness on the generators") {
    Rng rng(9);
    auto a2 = fixtures::kA2();
    auto spec = a2_all(a2, rng);
    auto gamma = EndCategory::create(spec, rng);
    for (std::uint32_t i = 0; i < spec.size(); ++i)
        for (std::uint32_t j = 0; j < spec.size(); ++j) {
            Rep hi = gamma->projective_at(i);
            Rep hj = gamma->projective_at(j);
            REQUIRE(hom_dim(hi, hj) == hom_dim(spec.members[i], spec.members[j]));
        }
}

TEST_CASE("presentation_to_morphism and its inverse") {
    Rng rng(17);
    auto a2 = fixtures::kA2();
    auto spec = a2_all(a2, rng);
    auto gamma = EndCategory::create(spec, rng);

    SECTION("identity on H_X maps to the identity on X") {
        for (std::uint32_t i = 0; i < spec.size(); ++i) {
            ProjSum ps = projective_sum(gamma, {i});
            auto pres = presentation_to_morphism(gamma, identity_hom(ps.object), ps, ps);
            REQUIRE(is_iso(pres.mor));
            REQUIRE(pres.mor.comps == identity_hom(pres.src).comps);
        }
    }
    SECTION("zero maps to zero") {
        ProjSum p1 = projective_sum(gamma, {0, 2});
        ProjSum p0 = projective_sum(gamma, {1});
        auto pres = presentation_to_morphism(gamma, zero_hom(p1.object, p0.object), p1, p0);
        REQUIRE(hom_is_zero(pres.mor));
    }
    SECTION("round-trip on 100 seeded random morphisms between projective sums") {
        for (int t = 0; t < 100; ++t) {
            std::vector<std::uint32_t> s1, s0;
            std::uint32_t n1 = 1 + rng.below(2), n0 = 1 + rng.below(2);
            for (std::uint32_t k = 0; k < n1; ++k) s1.push_back(rng.below(spec.size()));
            for (std::uint32_t k = 0; k < n0; ++k) s0.push_back(rng.below(spec.size()));
            ProjSum p1 = projective_sum(gamma, s1);
            ProjSum p0 = projective_sum(gamma, s0);
            auto basis = hom_basis(p1.object, p0.object);
            RepHom phi = basis.empty() ? zero_hom(p1.object, p0.object)
                                       : random_hom(basis, p1.object, p0.object, rng);
            auto pres = presentation_to_morphism(gamma, phi, p1, p0);
            RepHom back = morphism_to_presentation(gamma, pres.mor, pres, p1, p0);
            REQUIRE(hom_equal(back, phi));
        }
    }
}

TEST_CASE("Gamma-module theory through the generic machinery") {
    Rng rng(21);
    auto a2 = fixtures::kA2();
    auto spec = a2_all(a2, rng);
    auto gamma = EndCategory::create(spec, rng);

    SECTION("tops of projectives are the simple functors") {
        for (std::uint32_t i = 0; i < spec.size(); ++i) {
            Rep top = top_quotient(gamma->projective_at(i)).object;
            REQUIRE(top.total_dim() == 1);
            REQUIRE(top.dims[i] == 1);
        }
    }
    SECTION("minimal presentation of the simple functor at P1") {
        // rad H_{P1} = the simple at slot S2, which is projective, so the
        // presentation is H_{S2} -> H_{P1} -> S -> 0
        Rep s = top_quotient(gamma->projective_at(2)).object;
        Presentation pres = minimal_presentation(s);
        REQUIRE(pres.slots0 == std::vector<std::uint32_t>{2});
        REQUIRE(pres.slots1 == std::vector<std::uint32_t>{1});
    }
    SECTION("the five indecomposable Gamma-modules") {
        EnumerateOptions opts;
        opts.declared_all_indec_bound = 2;
        auto r = enumerate_indecomposables(gamma, 2, rng, opts);
        REQUIRE(r.indecomposables.size() == 5);
        REQUIRE(r.covers_all_indecomposables);
    }
}
