#pragma once

#include <cstdint>
#include <vector>

#include "auslander/approx.hpp"
#include "auslander/nexact.hpp"

namespace ausl {

/// V(F) for a Gamma-module F: the cokernel in the ambient module category of
/// the add(M)-morphism underlying a minimal projective presentation of F.
/// Everything needed downstream (unit, adjunction, V on morphisms) hangs on
/// to the presentation data.
struct VData {
    Rep functor;            // F itself
    Presentation pres;      // minimal presentation P1 -> P0 -> F -> 0 over Gamma
    ProjSum p1, p0;         // the same projectives with sum bookkeeping
    ModulePresentation amb; // ambient morphism X1 -> X0
    Rep value;              // V(F) = coker(X1 -> X0)
    RepHom proj;            // X0 -> V(F)
};

inline VData functor_v(std::shared_ptr<const EndCategory> gamma, const Rep& f) {
    if (f.cat.get() != gamma.get()) throw contract_error("functor_v: not a Gamma-module");
    VData out;
    out.functor = f;
    out.pres = minimal_presentation(f);
    out.p1 = projective_sum(gamma, out.pres.slots1);
    out.p0 = projective_sum(gamma, out.pres.slots0);
    if (!rep_equal(out.p1.object, out.pres.p1) || !rep_equal(out.p0.object, out.pres.p0))
        throw invariant_error("functor_v: projective sum layout mismatch");
    out.amb = presentation_to_morphism(gamma, out.pres.d, out.p1, out.p0);
    QuotObject c = cokernel(out.amb.mor);
    out.value = c.object;
    out.proj = c.proj;
    return out;
}

/// Effaceability of F, decided along both characterizations at once: the
/// minimal-presentation morphism X1 -> X0 is epi iff V(F) = 0. The two
/// computations are independent (slotwise rank of the presentation vs. the
/// cokernel object); a disagreement means a bug, not an input problem.
inline bool is_effaceable(std::shared_ptr<const EndCategory> gamma, const Rep& f) {
    if (f.is_zero()) return true;
    VData v = functor_v(gamma, f);
    bool epi_route = is_epi(v.amb.mor);
    bool vanishing_route = v.value.is_zero();
    if (epi_route != vanishing_route)
        throw invariant_error("is_effaceable: presentation-epi and V(F)=0 disagree");
    return epi_route;
}

/// V on a morphism alpha: F -> G, via lifts through the presentations.
inline RepHom v_on_hom(std::shared_ptr<const EndCategory> gamma, const RepHom& alpha,
                       const VData& vf, const VData& vg) {
    auto phi0 = factor_right(compose(alpha, vf.pres.aug), vg.pres.aug);
    if (!phi0) throw invariant_error("v_on_hom: lift through the cover failed");
    // the ambient morphism X0^F -> X0^G underlying the lift descends to the
    // cokernels because phi0 maps im(d_F) into im(d_G)
    ModulePresentation amb0 = presentation_to_morphism(gamma, *phi0, vf.p0, vg.p0);
    auto w = factor_left(compose(vg.proj, amb0.mor), vf.proj);
    if (!w) throw invariant_error("v_on_hom: induced map on cokernels does not exist");
    return *w;
}

/// Unit F -> U(V F) of the adjunction, built on the presentation: the cover
/// P0 -> F maps to U(V F) by sending each canonical generator to the class of
/// its summand inclusion composed with the cokernel projection.
inline RepHom adjunction_unit(std::shared_ptr<const EndCategory> gamma, const VData& v,
                              const Rep& uvf) {
    const auto& spec = gamma->spec();
    RepHom psi = zero_hom(v.p0.object, uvf);
    for (std::uint32_t t = 0; t < v.p0.slots.size(); ++t) {
        std::uint32_t s = v.p0.slots[t];
        RepHom gen_image = compose(v.proj, v.amb.tgt_sum.injections[t]); // M_s -> V(F)
        auto basis = hom_basis(spec.members[s], v.value);
        auto coords = hom_coords(basis, gen_image);
        Mat x(gamma->field(), static_cast<std::uint32_t>(coords.size()), 1);
        for (std::uint32_t k = 0; k < coords.size(); ++k) x.at(k, 0) = coords[k];
        psi = hom_add(psi, compose(gamma->yoneda_hom(s, uvf, x), v.p0.sum.projections[t]));
    }
    auto eta = factor_left(psi, v.pres.aug);
    if (!eta) throw invariant_error("adjunction_unit: does not descend along the cover");
    return *eta;
}

/// The adjunction map theta: Hom_A(V F, b) -> Hom_Gamma(F, U b),
/// w -> U(w) ∘ unit_F.
inline RepHom adjunction_theta(std::shared_ptr<const EndCategory> gamma, const RepHom& unit,
                               const Rep& uvf, const RepHom& w, const Rep& ub) {
    RepHom uw = yoneda_map(gamma, w, uvf, ub);
    return compose(uw, unit);
}

/// Counit V(U(b)) -> b of the adjunction, for v = functor_v(U(b)): the
/// evaluation of the cover generators descends along the cokernel
/// projection. It is an isomorphism exactly on the image of the quotient
/// functor, in particular on add(M).
inline RepHom adjunction_counit(std::shared_ptr<const EndCategory> gamma, const VData& v,
                                const Rep& b) {
    const auto& spec = gamma->spec();
    RepHom eval = zero_hom(v.amb.tgt, b);
    for (std::uint32_t t = 0; t < v.p0.slots.size(); ++t) {
        std::uint32_t s = v.p0.slots[t];
        auto [sbase, scount] = gamma->elem_range(s, s);
        std::uint32_t idpos = gamma->identity_elem(s) - sbase;
        RepHom comp = compose(v.pres.aug, v.p0.sum.injections[t]); // H_s -> U(b)
        Mat e(gamma->field(), scount, 1);
        e.at(idpos, 0) = 1;
        Mat coords = comp.comps[s] * e; // over hom_basis(M_s, b)
        auto basis = hom_basis(spec.members[s], b);
        RepHom g = zero_hom(spec.members[s], b);
        for (std::uint32_t k = 0; k < basis.size(); ++k)
            if (coords.at(k, 0)) g = hom_add(g, hom_scale(basis[k], coords.at(k, 0)));
        eval = hom_add(eval, compose(g, v.amb.tgt_sum.projections[t]));
    }
    auto eps = factor_left(eval, v.proj);
    if (!eps) throw invariant_error("adjunction_counit: evaluation does not descend");
    return *eps;
}

/// Count of effaceable simple Gamma-modules (tops of the indecomposable
/// projectives); the non-effaceable ones biject with the simples of the
/// quotient category.
struct SimpleEffaceability {
    std::uint32_t effaceable = 0;
    std::uint32_t non_effaceable = 0;
    std::vector<bool> by_slot;
};

inline SimpleEffaceability effaceable_simples(std::shared_ptr<const EndCategory> gamma) {
    SimpleEffaceability out;
    for (std::uint32_t s = 0; s < gamma->slot_count(); ++s) {
        Rep simple = top_quotient(gamma->projective_at(s)).object;
        bool eff = is_effaceable(gamma, simple);
        out.by_slot.push_back(eff);
        if (eff)
            out.effaceable++;
        else
            out.non_effaceable++;
    }
    return out;
}

} // namespace ausl
