#pragma once

#include <cstdint>
#include <vector>

#include "auslander/endalgebra.hpp"
#include "auslander/resolve.hpp"

namespace ausl {

/// A subcategory together with both endomorphism-category instances; the
/// approximation and n-exactness machinery passes this around so the algebra
/// and its tables are built once.
struct AddContext {
    SubcategorySpec spec;
    std::shared_ptr<const EndCategory> gamma;    // right modules / contravariant functors
    std::shared_ptr<const EndCategory> gamma_op; // left modules / covariant functors
};

inline AddContext make_add_context(SubcategorySpec spec, Rng& rng) {
    auto gamma = EndCategory::create(spec, rng);
    auto gamma_op = gamma->create_opposite();
    return AddContext{std::move(spec), std::move(gamma), std::move(gamma_op)};
}

struct Approximation {
    RepHom mor;                        // right: sum -> B; left: B -> sum
    std::vector<std::uint32_t> slots;  // member indices of the sum
    Rep sum;
    bool surjective_onto_homs;         // the defining approximation property
    bool is_epi_or_mono;               // epi for right, mono for left
};

namespace detail {

/// Matrix of Hom(t, -) applied to w: x -> y, i.e. Hom(t, x) -> Hom(t, y).
inline Mat cov_hom_matrix(const RepHom& w, const Rep& t) {
    auto basis_x = hom_basis(t, w.src);
    auto basis_y = hom_basis(t, w.tgt);
    Mat m(t.cat->field(), static_cast<std::uint32_t>(basis_y.size()),
          static_cast<std::uint32_t>(basis_x.size()));
    for (std::uint32_t c = 0; c < basis_x.size(); ++c) {
        auto coords = hom_coords(basis_y, compose(w, basis_x[c]));
        for (std::uint32_t i = 0; i < basis_y.size(); ++i) m.at(i, c) = coords[i];
    }
    return m;
}

/// Matrix of Hom(-, t) applied to w: x -> y, i.e. Hom(y, t) -> Hom(x, t).
inline Mat contra_hom_matrix(const RepHom& w, const Rep& t) {
    auto basis_y = hom_basis(w.tgt, t);
    auto basis_x = hom_basis(w.src, t);
    Mat m(t.cat->field(), static_cast<std::uint32_t>(basis_x.size()),
          static_cast<std::uint32_t>(basis_y.size()));
    for (std::uint32_t c = 0; c < basis_y.size(); ++c) {
        auto coords = hom_coords(basis_x, compose(basis_y[c], w));
        for (std::uint32_t i = 0; i < basis_x.size(); ++i) m.at(i, c) = coords[i];
    }
    return m;
}

} // namespace detail

/// Right add(M)-approximation of B: a morphism g from a sum of members such
/// that every morphism M' -> B from a member factors through g. Generators of
/// the Yoneda module U(B) are exactly such morphism families; minimal
/// generators give the minimal approximation, all basis vectors give the
/// canonical evaluation map. The property is re-verified exactly.
inline Approximation right_approximation(const AddContext& ctx, const Rep& b,
                                         bool minimal = true) {
    const auto& spec = ctx.spec;
    Rep u = restricted_yoneda(ctx.gamma, b);
    std::vector<std::uint32_t> slots;
    std::vector<RepHom> comps;
    auto push_generator = [&](std::uint32_t slot, const Mat& coords) {
        auto basis = hom_basis(spec.members[slot], b);
        RepHom g = zero_hom(spec.members[slot], b);
        for (std::uint32_t k = 0; k < basis.size(); ++k)
            if (coords.at(k, 0)) g = hom_add(g, hom_scale(basis[k], coords.at(k, 0)));
        slots.push_back(slot);
        comps.push_back(std::move(g));
    };
    if (minimal) {
        for (const auto& gen : minimal_generators(u)) push_generator(gen.slot, gen.element);
    } else {
        for (std::uint32_t s = 0; s < spec.size(); ++s)
            for (std::uint32_t k = 0; k < u.dims[s]; ++k) {
                Mat e(ctx.gamma->field(), u.dims[s], 1);
                e.at(k, 0) = 1;
                push_generator(s, e);
            }
    }
    std::vector<Rep> parts;
    for (auto s : slots) parts.push_back(spec.members[s]);
    DirectSum ds = direct_sum(parts, spec.ambient);
    RepHom mor = zero_hom(ds.object, b);
    for (std::size_t i = 0; i < comps.size(); ++i)
        mor = hom_add(mor, compose(comps[i], ds.projections[i]));
    bool surj = true;
    for (const auto& m : spec.members) {
        Mat induced = detail::cov_hom_matrix(mor, m);
        if (rank(induced) != induced.rows()) surj = false;
    }
    return Approximation{std::move(mor), std::move(slots), ds.object, surj, is_epi(mor)};
}

/// Left add(M)-approximation, dual to the above via the covariant Yoneda
/// module over the opposite algebra.
inline Approximation left_approximation(const AddContext& ctx, const Rep& b,
                                        bool minimal = true) {
    const auto& spec = ctx.spec;
    Rep t = co_yoneda(ctx.gamma_op, b);
    std::vector<std::uint32_t> slots;
    std::vector<RepHom> comps;
    auto push_generator = [&](std::uint32_t slot, const Mat& coords) {
        auto basis = hom_basis(b, spec.members[slot]);
        RepHom g = zero_hom(b, spec.members[slot]);
        for (std::uint32_t k = 0; k < basis.size(); ++k)
            if (coords.at(k, 0)) g = hom_add(g, hom_scale(basis[k], coords.at(k, 0)));
        slots.push_back(slot);
        comps.push_back(std::move(g));
    };
    if (minimal) {
        for (const auto& gen : minimal_generators(t)) push_generator(gen.slot, gen.element);
    } else {
        for (std::uint32_t s = 0; s < spec.size(); ++s)
            for (std::uint32_t k = 0; k < t.dims[s]; ++k) {
                Mat e(ctx.gamma->field(), t.dims[s], 1);
                e.at(k, 0) = 1;
                push_generator(s, e);
            }
    }
    std::vector<Rep> parts;
    for (auto s : slots) parts.push_back(spec.members[s]);
    DirectSum ds = direct_sum(parts, spec.ambient);
    RepHom mor = zero_hom(b, ds.object);
    for (std::size_t i = 0; i < comps.size(); ++i)
        mor = hom_add(mor, compose(ds.injections[i], comps[i]));
    bool surj = true;
    for (const auto& m : spec.members) {
        Mat induced = detail::contra_hom_matrix(mor, m);
        if (rank(induced) != induced.rows()) surj = false;
    }
    return Approximation{std::move(mor), std::move(slots), ds.object, surj, is_mono(mor)};
}

} // namespace ausl
