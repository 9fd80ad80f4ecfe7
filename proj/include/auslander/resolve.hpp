#pragma once

#include <cstdint>
#include <vector>

#include "auslander/rep.hpp"

namespace ausl {

/// rad(M) = M·J as a subobject: slotwise span of the images of all radical
/// generators, closed under the action.
inline SubObject radical(const Rep& m) {
    const auto cat = m.cat;
    const PrimeField& f = cat->field();
    std::vector<Mat> spans;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) spans.emplace_back(f, m.dims[s], 0);
    const auto& gens = cat->generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g].radical) spans[gens[g].to] = spans[gens[g].to].hstack(m.maps[g]);
    return span_subobject(m, std::move(spans));
}

inline QuotObject top_quotient(const Rep& m) { return cokernel(radical(m).incl); }

struct Generator {
    std::uint32_t slot;
    Mat element; // column vector in M at `slot`
};

/// A minimal generating set, greedy against the radical: each new generator
/// is taken outside S + rad(M) for the submodule S generated so far, which
/// makes the images in top(M) independent over the slot division algebras and
/// the resulting evaluation map a projective cover.
inline std::vector<Generator> minimal_generators(const Rep& m) {
    const auto cat = m.cat;
    const PrimeField& f = cat->field();
    SubObject rad = radical(m);
    std::vector<Generator> gens;
    // spans[s] holds a basis of (S + rad M)_s
    std::vector<Mat> spans;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s)
        spans.push_back(column_space_basis(rad.incl.comps[s]));
    // generated submodule S, slotwise
    std::vector<Mat> sub;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) sub.emplace_back(f, m.dims[s], 0);
    for (;;) {
        bool found = false;
        for (std::uint32_t s = 0; s < cat->slot_count() && !found; ++s) {
            if (spans[s].cols() == m.dims[s]) continue;
            for (std::uint32_t i = 0; i < m.dims[s]; ++i) {
                Mat e(f, m.dims[s], 1);
                e.at(i, 0) = 1;
                if (solve(spans[s], e)) continue; // already inside S + rad
                gens.push_back(Generator{s, e});
                sub[s] = sub[s].hstack(e);
                // close S under the action and refresh spans = S + rad
                SubObject closed = span_subobject(m, sub);
                for (std::uint32_t t = 0; t < cat->slot_count(); ++t) {
                    sub[t] = closed.incl.comps[t];
                    spans[t] = column_space_basis(
                        sub[t].hstack(rad.incl.comps[t]));
                }
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    // S + rad M = M forces S = M (Nakayama); make sure of it
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s)
        if (sub[s].cols() != m.dims[s])
            throw invariant_error("minimal_generators: generated submodule is proper");
    return gens;
}

struct Cover {
    Rep proj;                        // ⊕ projective_at(slots[i])
    RepHom epi;                      // proj -> M, a projective cover
    std::vector<std::uint32_t> slots; // summand slots, in order
};

inline Cover projective_cover(const Rep& m) {
    const auto cat = m.cat;
    std::vector<Generator> gens = minimal_generators(m);
    std::vector<Rep> parts;
    std::vector<std::uint32_t> slots;
    std::vector<RepHom> comps;
    for (const auto& g : gens) {
        parts.push_back(cat->projective_at(g.slot));
        slots.push_back(g.slot);
        comps.push_back(cat->yoneda_hom(g.slot, m, g.element));
    }
    DirectSum ds = direct_sum(parts, m.cat);
    RepHom epi = zero_hom(ds.object, m);
    for (std::size_t i = 0; i < comps.size(); ++i)
        epi = hom_add(epi, compose(comps[i], ds.projections[i]));
    if (!is_epi(epi)) throw invariant_error("projective_cover: evaluation map not epi");
    return Cover{ds.object, std::move(epi), std::move(slots)};
}

struct Presentation {
    Rep p1, p0;
    RepHom d;   // p1 -> p0
    RepHom aug; // p0 -> M, cover
    std::vector<std::uint32_t> slots1, slots0;
};

/// Minimal projective presentation P1 -> P0 -> M -> 0.
inline Presentation minimal_presentation(const Rep& m) {
    Cover c0 = projective_cover(m);
    SubObject k = kernel(c0.epi);
    Cover c1 = projective_cover(k.object);
    RepHom d = compose(k.incl, c1.epi);
    return Presentation{c1.proj, c0.proj, std::move(d), c0.epi,
                        std::move(c1.slots), std::move(c0.slots)};
}

struct Resolution {
    std::vector<Rep> terms;              // P_0, P_1, ..., P_len
    std::vector<RepHom> diffs;           // d_j : P_j -> P_{j-1}, j = 1..len
    RepHom aug;                          // P_0 -> M
    std::vector<std::vector<std::uint32_t>> slots; // summand slots per term
};

/// Minimal projective resolution out to P_len (padded with zero terms after
/// the resolution stops).
inline Resolution minimal_resolution(const Rep& m, std::uint32_t len) {
    Resolution res;
    Cover c = projective_cover(m);
    res.terms.push_back(c.proj);
    res.slots.push_back(c.slots);
    res.aug = c.epi;
    RepHom onto = c.epi;
    for (std::uint32_t j = 1; j <= len; ++j) {
        SubObject k = kernel(onto);
        if (k.object.is_zero()) {
            Rep z = zero_rep(m.cat);
            res.terms.push_back(z);
            res.slots.push_back({});
            res.diffs.push_back(zero_hom(z, res.terms[j - 1]));
            onto = zero_hom(z, z);
            continue;
        }
        Cover cj = projective_cover(k.object);
        res.terms.push_back(cj.proj);
        res.slots.push_back(cj.slots);
        res.diffs.push_back(compose(k.incl, cj.epi));
        onto = cj.epi;
    }
    return res;
}

/// Matrix of Hom(-, n) applied to d: p -> q, i.e. Hom(q, n) -> Hom(p, n),
/// phi -> phi ∘ d, in the deterministic hom bases.
inline Mat induced_hom_matrix(const RepHom& d, const Rep& n, const std::vector<RepHom>& basis_q_n,
                              const std::vector<RepHom>& basis_p_n) {
    const PrimeField& f = n.cat->field();
    Mat m(f, static_cast<std::uint32_t>(basis_p_n.size()),
          static_cast<std::uint32_t>(basis_q_n.size()));
    for (std::uint32_t j = 0; j < basis_q_n.size(); ++j) {
        auto coords = hom_coords(basis_p_n, compose(basis_q_n[j], d));
        for (std::uint32_t i = 0; i < basis_p_n.size(); ++i) m.at(i, j) = coords[i];
    }
    return m;
}

/// dim Ext^k(m, n) from a minimal projective resolution of m.
inline std::uint32_t ext_dim(const Rep& m, const Rep& n, std::uint32_t k) {
    require_same_cat(m, n, "ext_dim");
    if (m.is_zero() || n.is_zero()) return 0;
    if (k == 0) return hom_dim(m, n);
    Resolution res = minimal_resolution(m, k + 1);
    auto basis_k = hom_basis(res.terms[k], n);
    if (basis_k.empty()) return 0;
    auto basis_km1 = hom_basis(res.terms[k - 1], n);
    auto basis_kp1 = hom_basis(res.terms[k + 1], n);
    Mat beta_k = induced_hom_matrix(res.diffs[k - 1], n, basis_km1, basis_k);
    Mat beta_k1 = induced_hom_matrix(res.diffs[k], n, basis_k, basis_kp1);
    return static_cast<std::uint32_t>(basis_k.size()) - rank(beta_k1) - rank(beta_k);
}

} // namespace ausl
