#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/subcategory.hpp"

namespace ausl {

/// One basis element of the endomorphism algebra of M_1 + ... + M_r, viewed
/// as a morphism M_src -> M_tgt of the category presented by the subcategory.
struct BasisElem {
    std::uint32_t src, tgt; // formal direction in this category instance
    RepHom mor;             // underlying ambient morphism
    bool is_identity;
    bool radical;
};

/// The endomorphism algebra Gamma = End(M_1 + ... + M_r) with a structure
/// constant table over a basis of morphisms. Representations of this
/// category are finite-dimensional right Gamma-modules, i.e. finitely
/// presented contravariant functors on add(M): a representation assigns
/// F(M_i) to slot i and precomposition maps to the basis morphisms.
///
/// Diagonal Hom bases are organized identity-first with the remainder inside
/// rad End(M_i), so the non-identity elements generate the radical and drive
/// radicals/tops/covers of Gamma-modules through the generic machinery.
///
/// The opposite instance (create_opposite) has the formal directions and the
/// multiplication table flipped; its representations are left Gamma-modules,
/// i.e. covariant functors on add(M).
class EndCategory final : public RepCategory {
public:
    static std::shared_ptr<const EndCategory> create(const SubcategorySpec& spec, Rng& rng) {
        auto raw = build_elems(spec, rng);
        auto cat = std::shared_ptr<EndCategory>(new EndCategory(spec, std::move(raw), true));
        cat->build_table();
        cat->check_associativity();
        return cat;
    }

    /// The opposite algebra, sharing this instance's basis and (flipped)
    /// structure constants.
    std::shared_ptr<const EndCategory> create_opposite() const {
        std::vector<BasisElem> flipped;
        flipped.reserve(elems_.size());
        for (const auto& e : elems_)
            flipped.push_back(BasisElem{e.tgt, e.src, e.mor, e.is_identity, e.radical});
        auto cat = std::shared_ptr<EndCategory>(
            new EndCategory(spec_, std::move(flipped), !contravariant_));
        // op-table: coefficients of b∘c read through the flipped ranges
        cat->mult_.assign(elems_.size(), {});
        for (std::size_t b = 0; b < elems_.size(); ++b) {
            cat->mult_[b].assign(elems_.size(), {});
            for (std::size_t c = 0; c < elems_.size(); ++c)
                if (!mult_[c].empty() && !mult_[c][b].empty()) cat->mult_[b][c] = mult_[c][b];
        }
        return cat;
    }

    const SubcategorySpec& spec() const { return spec_; }
    bool contravariant() const { return contravariant_; }
    const std::vector<BasisElem>& elems() const { return elems_; }

    std::uint32_t algebra_dim() const { return static_cast<std::uint32_t>(elems_.size()); }

    /// Basis elements with formal direction i -> j, as [begin, begin+count).
    std::pair<std::uint32_t, std::uint32_t> elem_range(std::uint32_t i, std::uint32_t j) const {
        return {range_begin_[i * slot_count() + j], range_count_[i * slot_count() + j]};
    }

    std::uint32_t identity_elem(std::uint32_t slot) const { return identity_pos_[slot]; }

    std::uint32_t gen_of_elem(std::uint32_t e) const { return gen_of_elem_[e]; }
    std::uint32_t elem_of_gen(std::uint32_t g) const { return elem_of_gen_[g]; }

    /// Coefficients of the composite (second ∘ first) over the basis range of
    /// the composite's direction. Requires first.tgt == second.src (formally).
    const std::vector<std::uint32_t>& mult(std::uint32_t first, std::uint32_t second) const {
        return mult_[first][second];
    }

    /// Action of a basis element on a representation: rho(e) : F(tgt) -> F(src).
    Mat action(const Rep& r, std::uint32_t e) const {
        if (elems_[e].is_identity)
            return Mat::identity(field_, r.dims[elems_[e].src]);
        return r.maps[gen_of_elem_[e]];
    }

    std::optional<std::string> validate(const Rep& r) const override {
        for (std::uint32_t b = 0; b < elems_.size(); ++b)
            for (std::uint32_t c = 0; c < elems_.size(); ++c) {
                if (elems_[b].tgt != elems_[c].src) continue;
                // rho(c∘b) = rho(b)·rho(c) for right modules
                Mat lhs = action(r, b) * action(r, c);
                auto [base, count] = elem_range(elems_[b].src, elems_[c].tgt);
                Mat rhs(field_, r.dims[elems_[b].src], r.dims[elems_[c].tgt]);
                const auto& coeffs = mult_[b][c];
                for (std::uint32_t k = 0; k < count; ++k)
                    if (coeffs[k]) rhs = rhs + action(r, base + k).scaled(coeffs[k]);
                if (lhs != rhs)
                    return "module structure violates composition of basis elements " +
                           std::to_string(b) + " and " + std::to_string(c);
            }
        return std::nullopt;
    }

    Rep projective_at(std::uint32_t slot) const override {
        std::vector<std::uint32_t> dims(slot_count());
        for (std::uint32_t u = 0; u < slot_count(); ++u) dims[u] = elem_range(u, slot).second;
        std::vector<Mat> maps;
        for (std::uint32_t g = 0; g < gens_.size(); ++g) {
            std::uint32_t b = elem_of_gen_[g];
            auto [ibase, icount] = elem_range(elems_[b].src, slot);
            auto [jbase, jcount] = elem_range(elems_[b].tgt, slot);
            Mat m(field_, icount, jcount);
            for (std::uint32_t c = 0; c < jcount; ++c) {
                const auto& coeffs = mult_[b][jbase + c];
                for (std::uint32_t k = 0; k < icount; ++k) m.at(k, c) = coeffs[k];
            }
            (void)ibase;
            maps.push_back(std::move(m));
        }
        return Rep{shared_from_this(), std::move(dims), std::move(maps)};
    }

    RepHom yoneda_hom(std::uint32_t slot, const Rep& target, const Mat& element) const override {
        if (element.rows() != target.dims[slot] || element.cols() != 1)
            throw contract_error("yoneda_hom: element has wrong shape");
        Rep p = projective_at(slot);
        std::vector<Mat> comps;
        for (std::uint32_t u = 0; u < slot_count(); ++u) {
            auto [base, count] = elem_range(u, slot);
            Mat c(field_, target.dims[u], count);
            for (std::uint32_t k = 0; k < count; ++k) {
                Mat col = action(target, base + k) * element;
                for (std::uint32_t i = 0; i < target.dims[u]; ++i) c.at(i, k) = col.at(i, 0);
            }
            comps.push_back(std::move(c));
        }
        return make_hom(p, target, std::move(comps));
    }

    std::string content_key() const override {
        std::ostringstream os;
        os << "end:" << (contravariant_ ? "r" : "l") << ";p=" << field_.modulus() << ";members=";
        for (const auto& m : spec_.members) {
            for (auto d : m.dims) os << d << ".";
            os << "/";
        }
        os << ";dim=" << elems_.size();
        return os.str();
    }

private:
    EndCategory(const SubcategorySpec& spec, std::vector<BasisElem> elems, bool contravariant)
        : RepCategory(spec.ambient->field(), spec.names, make_gens(elems, contravariant)),
          spec_(spec), elems_(std::move(elems)), contravariant_(contravariant) {
        index_ranges();
    }

    static std::vector<BasisElem> build_elems(const SubcategorySpec& spec, Rng& rng) {
        std::vector<BasisElem> elems;
        const auto n = spec.size();
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                if (i == j) {
                    // identity first, then a basis of rad End(M_i), then (for
                    // residue fields beyond F_p) a completion to a full basis
                    EndAnalysis an = analyze_end(spec.members[i], rng);
                    if (an.status != EndAnalysis::Status::local)
                        throw input_error("subcategory member " + spec.names[i] +
                                          " lost its locality certificate");
                    RepHom id = identity_hom(spec.members[i]);
                    std::vector<RepHom> chosen{id};
                    std::vector<bool> radical_flag{false};
                    for (const auto& r : an.rad_basis) {
                        chosen.push_back(r);
                        radical_flag.push_back(true);
                    }
                    auto full = hom_basis(spec.members[i], spec.members[i]);
                    if (chosen.size() < full.size()) {
                        // complete with independent non-radical elements
                        for (const auto& h : full) {
                            if (chosen.size() == full.size()) break;
                            std::vector<RepHom> trial = chosen;
                            trial.push_back(h);
                            if (independent(trial)) {
                                chosen.push_back(h);
                                radical_flag.push_back(false);
                            }
                        }
                        if (chosen.size() != full.size())
                            throw invariant_error("endomorphism basis completion failed");
                    }
                    for (std::size_t k = 0; k < chosen.size(); ++k)
                        elems.push_back(BasisElem{i, i, chosen[k], k == 0, radical_flag[k]});
                } else {
                    for (auto& h : hom_basis(spec.members[i], spec.members[j]))
                        elems.push_back(BasisElem{i, j, std::move(h), false, true});
                }
            }
        return elems;
    }

    static bool independent(const std::vector<RepHom>& homs) {
        const PrimeField& f = homs[0].src.cat->field();
        Mat first = detail::vectorize(homs[0]);
        Mat stack(f, first.rows(), static_cast<std::uint32_t>(homs.size()));
        for (std::uint32_t c = 0; c < homs.size(); ++c) {
            Mat v = detail::vectorize(homs[c]);
            for (std::uint32_t i = 0; i < v.rows(); ++i) stack.at(i, c) = v.at(i, 0);
        }
        return rank(stack) == homs.size();
    }

    static std::vector<Gen> make_gens(const std::vector<BasisElem>& elems, bool contravariant) {
        std::vector<Gen> gens;
        for (const auto& e : elems) {
            if (e.is_identity) continue;
            (void)contravariant;
            // right modules: precomposition acts F(tgt) -> F(src)
            gens.push_back(Gen{e.tgt, e.src, e.radical});
        }
        return gens;
    }

    void index_ranges() {
        const auto n = slot_count();
        range_begin_.assign(std::size_t(n) * n, 0);
        range_count_.assign(std::size_t(n) * n, 0);
        identity_pos_.assign(n, 0);
        gen_of_elem_.assign(elems_.size(), UINT32_MAX);
        std::uint32_t g = 0;
        for (std::uint32_t e = 0; e < elems_.size(); ++e) {
            auto key = std::size_t(elems_[e].src) * n + elems_[e].tgt;
            if (range_count_[key] == 0) range_begin_[key] = e;
            range_count_[key]++;
            if (elems_[e].is_identity)
                identity_pos_[elems_[e].src] = e;
            else {
                gen_of_elem_[e] = g++;
                elem_of_gen_.push_back(e);
            }
        }
    }

    void build_table() {
        mult_.assign(elems_.size(), {});
        // cache hom bases per directed pair for coordinates
        const auto n = slot_count();
        std::vector<std::vector<RepHom>> pair_basis(std::size_t(n) * n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                auto [base, count] = elem_range(i, j);
                for (std::uint32_t k = 0; k < count; ++k)
                    pair_basis[std::size_t(i) * n + j].push_back(elems_[base + k].mor);
            }
        for (std::uint32_t b = 0; b < elems_.size(); ++b) {
            mult_[b].assign(elems_.size(), {});
            for (std::uint32_t c = 0; c < elems_.size(); ++c) {
                if (elems_[b].tgt != elems_[c].src) continue;
                RepHom comp = compose(elems_[c].mor, elems_[b].mor);
                mult_[b][c] =
                    hom_coords(pair_basis[std::size_t(elems_[b].src) * n + elems_[c].tgt], comp);
            }
        }
    }

    void check_associativity() const {
        const PrimeField& f = field_;
        const auto n = slot_count();
        for (std::uint32_t b = 0; b < elems_.size(); ++b)
            for (std::uint32_t c = 0; c < elems_.size(); ++c) {
                if (elems_[b].tgt != elems_[c].src) continue;
                for (std::uint32_t d = 0; d < elems_.size(); ++d) {
                    if (elems_[c].tgt != elems_[d].src) continue;
                    auto [base_il, count_il] = elem_range(elems_[b].src, elems_[d].tgt);
                    (void)base_il;
                    // (d∘c)∘b via the (j,l)-expansion of d∘c
                    std::vector<std::uint32_t> lhs(count_il, 0);
                    {
                        auto [jl_base, jl_count] = elem_range(elems_[c].src, elems_[d].tgt);
                        const auto& dc = mult_[c][d];
                        for (std::uint32_t k = 0; k < jl_count; ++k) {
                            if (!dc[k]) continue;
                            const auto& eb = mult_[b][jl_base + k];
                            for (std::uint32_t t = 0; t < count_il; ++t)
                                lhs[t] = f.add(lhs[t], f.mul(dc[k], eb[t]));
                        }
                    }
                    // d∘(c∘b) via the (i,k)-expansion of c∘b
                    std::vector<std::uint32_t> rhs(count_il, 0);
                    {
                        auto [ik_base, ik_count] = elem_range(elems_[b].src, elems_[c].tgt);
                        const auto& cb = mult_[b][c];
                        for (std::uint32_t k = 0; k < ik_count; ++k) {
                            if (!cb[k]) continue;
                            const auto& gd = mult_[ik_base + k][d];
                            for (std::uint32_t t = 0; t < count_il; ++t)
                                rhs[t] = f.add(rhs[t], f.mul(cb[k], gd[t]));
                        }
                    }
                    if (lhs != rhs)
                        throw invariant_error("structure constants are not associative");
                }
            }
        (void)n;
    }

    SubcategorySpec spec_;
    std::vector<BasisElem> elems_;
    bool contravariant_;
    std::vector<std::uint32_t> range_begin_, range_count_, identity_pos_;
    std::vector<std::uint32_t> gen_of_elem_, elem_of_gen_;
    std::vector<std::vector<std::vector<std::uint32_t>>> mult_;
};

/// Restricted Yoneda: the right Gamma-module U(X) with U(X)(i) = Hom(M_i, X)
/// in the deterministic hom bases, acted on by precomposition. For X = M_i
/// this is isomorphic to the indecomposable projective at slot i; for general
/// X it computes the functor (-, X)|_M.
inline Rep restricted_yoneda(std::shared_ptr<const EndCategory> gamma, const Rep& x) {
    if (!gamma->contravariant())
        throw contract_error("restricted_yoneda needs the contravariant instance");
    const auto& spec = gamma->spec();
    if (x.cat.get() != spec.ambient.get())
        throw contract_error("restricted_yoneda: module not over the ambient category");
    std::vector<std::vector<RepHom>> bases(spec.size());
    std::vector<std::uint32_t> dims(spec.size());
    for (std::uint32_t u = 0; u < spec.size(); ++u) {
        bases[u] = hom_basis(spec.members[u], x);
        dims[u] = static_cast<std::uint32_t>(bases[u].size());
    }
    std::vector<Mat> maps;
    const auto& gens = gamma->generators();
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
        const BasisElem& e = gamma->elems()[gamma->elem_of_gen(g)];
        // Hom(M_tgt, x) -> Hom(M_src, x), phi -> phi ∘ e.mor
        Mat m(gamma->field(), dims[e.src], dims[e.tgt]);
        for (std::uint32_t c = 0; c < dims[e.tgt]; ++c) {
            auto coords = hom_coords(bases[e.src], compose(bases[e.tgt][c], e.mor));
            for (std::uint32_t i = 0; i < dims[e.src]; ++i) m.at(i, c) = coords[i];
        }
        maps.push_back(std::move(m));
    }
    Rep r{gamma, std::move(dims), std::move(maps)};
    if (auto err = gamma->validate(r))
        throw invariant_error("restricted_yoneda produced an invalid module: " + *err);
    return r;
}

/// Covariant restricted Yoneda over the opposite instance: the left
/// Gamma-module with slot i = Hom(X, M_i), acted on by postcomposition.
inline Rep co_yoneda(std::shared_ptr<const EndCategory> gamma_op, const Rep& x) {
    if (gamma_op->contravariant())
        throw contract_error("co_yoneda needs the opposite (covariant) instance");
    const auto& spec = gamma_op->spec();
    if (x.cat.get() != spec.ambient.get())
        throw contract_error("co_yoneda: module not over the ambient category");
    std::vector<std::vector<RepHom>> bases(spec.size());
    std::vector<std::uint32_t> dims(spec.size());
    for (std::uint32_t u = 0; u < spec.size(); ++u) {
        bases[u] = hom_basis(x, spec.members[u]);
        dims[u] = static_cast<std::uint32_t>(bases[u].size());
    }
    std::vector<Mat> maps;
    const auto& gens = gamma_op->generators();
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
        const BasisElem& e = gamma_op->elems()[gamma_op->elem_of_gen(g)];
        // formal src->tgt with underlying ambient morphism M_tgt -> M_src;
        // action Hom(X, M_tgt) -> Hom(X, M_src), phi -> e.mor ∘ phi
        Mat m(gamma_op->field(), dims[e.src], dims[e.tgt]);
        for (std::uint32_t c = 0; c < dims[e.tgt]; ++c) {
            auto coords = hom_coords(bases[e.src], compose(e.mor, bases[e.tgt][c]));
            for (std::uint32_t i = 0; i < dims[e.src]; ++i) m.at(i, c) = coords[i];
        }
        maps.push_back(std::move(m));
    }
    Rep r{gamma_op, std::move(dims), std::move(maps)};
    if (auto err = gamma_op->validate(r))
        throw invariant_error("co_yoneda produced an invalid module: " + *err);
    return r;
}

/// U on morphisms: the induced map U(X) -> U(Y) for an ambient w: X -> Y.
inline RepHom yoneda_map(std::shared_ptr<const EndCategory> gamma, const RepHom& w, const Rep& ux,
                         const Rep& uy) {
    const auto& spec = gamma->spec();
    std::vector<Mat> comps;
    for (std::uint32_t u = 0; u < spec.size(); ++u) {
        auto basis_x = hom_basis(spec.members[u], w.src);
        auto basis_y = hom_basis(spec.members[u], w.tgt);
        Mat m(gamma->field(), uy.dims[u], ux.dims[u]);
        for (std::uint32_t c = 0; c < basis_x.size(); ++c) {
            auto coords = hom_coords(basis_y, compose(w, basis_x[c]));
            for (std::uint32_t i = 0; i < basis_y.size(); ++i) m.at(i, c) = coords[i];
        }
        comps.push_back(std::move(m));
    }
    return make_hom(ux, uy, std::move(comps));
}

struct ProjSum {
    Rep object;                        // ⊕ H_slots[i] (as built by direct_sum)
    std::vector<std::uint32_t> slots;  // member indices
    DirectSum sum;                     // injections/projections
};

inline ProjSum projective_sum(std::shared_ptr<const EndCategory> gamma,
                              const std::vector<std::uint32_t>& slots) {
    std::vector<Rep> parts;
    for (auto s : slots) parts.push_back(gamma->projective_at(s));
    DirectSum ds = direct_sum(parts, gamma);
    return ProjSum{ds.object, slots, std::move(ds)};
}

struct ModulePresentation {
    Rep src, tgt;      // ambient direct sums of members
    RepHom mor;        // ambient morphism src -> tgt
    DirectSum src_sum, tgt_sum;
};

/// Convert a morphism between projective Gamma-modules into the unique
/// morphism of add(M) inducing it (inverse direction of Yoneda fullness).
inline ModulePresentation presentation_to_morphism(std::shared_ptr<const EndCategory> gamma,
                                                   const RepHom& phi, const ProjSum& src,
                                                   const ProjSum& tgt) {
    if (!gamma->contravariant())
        throw contract_error("presentation_to_morphism needs the contravariant instance");
    if (!rep_equal(phi.src, src.object) || !rep_equal(phi.tgt, tgt.object))
        throw contract_error("presentation_to_morphism: morphism does not match the given sums");
    const auto& spec = gamma->spec();
    const PrimeField& f = gamma->field();
    std::vector<Rep> src_parts, tgt_parts;
    for (auto s : src.slots) src_parts.push_back(spec.members[s]);
    for (auto s : tgt.slots) tgt_parts.push_back(spec.members[s]);
    DirectSum amb_src = direct_sum(src_parts, spec.ambient);
    DirectSum amb_tgt = direct_sum(tgt_parts, spec.ambient);
    RepHom mor = zero_hom(amb_src.object, amb_tgt.object);
    for (std::uint32_t t = 0; t < src.slots.size(); ++t) {
        std::uint32_t s = src.slots[t];
        // the canonical generator of H_s sits at the identity position of
        // the (s, s) block
        auto [sbase, scount] = gamma->elem_range(s, s);
        std::uint32_t idpos = gamma->identity_elem(s) - sbase;
        for (std::uint32_t u = 0; u < tgt.slots.size(); ++u) {
            RepHom block = compose(tgt.sum.projections[u], compose(phi, src.sum.injections[t]));
            // image of the canonical generator: coordinates over the
            // (s, tgt.slots[u]) basis range
            Mat e(f, scount, 1);
            e.at(idpos, 0) = 1;
            Mat v = block.comps[s] * e;
            auto [base, count] = gamma->elem_range(s, tgt.slots[u]);
            RepHom g = zero_hom(spec.members[s], spec.members[tgt.slots[u]]);
            for (std::uint32_t k = 0; k < count; ++k)
                if (v.at(k, 0)) g = hom_add(g, hom_scale(gamma->elems()[base + k].mor, v.at(k, 0)));
            mor = hom_add(mor, compose(amb_tgt.injections[u], compose(g, amb_src.projections[t])));
        }
    }
    return ModulePresentation{amb_src.object, amb_tgt.object, std::move(mor), std::move(amb_src),
                              std::move(amb_tgt)};
}

/// The functor H on a morphism of add(M) presented blockwise: the induced
/// map between projective sums. Inverse of presentation_to_morphism.
inline RepHom morphism_to_presentation(std::shared_ptr<const EndCategory> gamma,
                                       const RepHom& mor, const ModulePresentation& pres,
                                       const ProjSum& src, const ProjSum& tgt) {
    RepHom out = zero_hom(src.object, tgt.object);
    for (std::uint32_t t = 0; t < src.slots.size(); ++t) {
        std::uint32_t s = src.slots[t];
        for (std::uint32_t u = 0; u < tgt.slots.size(); ++u) {
            RepHom g = compose(pres.tgt_sum.projections[u], compose(mor, pres.src_sum.injections[t]));
            // coordinates of g over the basis range (s, tgt.slots[u])
            auto [base, count] = gamma->elem_range(s, tgt.slots[u]);
            std::vector<RepHom> basis;
            for (std::uint32_t k = 0; k < count; ++k) basis.push_back(gamma->elems()[base + k].mor);
            auto coords = hom_coords(basis, g);
            Mat e(gamma->field(), count, 1);
            for (std::uint32_t k = 0; k < count; ++k) e.at(k, 0) = coords[k];
            // H(g): H_s -> H_{tgt.slots[u]} sends the canonical generator to g
            RepHom hg = gamma->yoneda_hom(s, gamma->projective_at(tgt.slots[u]), e);
            out = hom_add(out, compose(tgt.sum.injections[u], compose(hg, src.sum.projections[t])));
        }
    }
    return out;
}

} // namespace ausl
