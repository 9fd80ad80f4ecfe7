#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/approx.hpp"

namespace ausl {

/// Construction failure inside the n-abelian machinery: signals that the
/// subcategory does not support the requested structure (an axiom failure),
/// not a bug.
class nabelian_error : public std::runtime_error {
public:
    explicit nabelian_error(const std::string& what) : std::runtime_error(what) {}
};

struct Complex {
    std::vector<Rep> objects;
    std::vector<RepHom> diffs; // diffs[k] : objects[k] -> objects[k+1]

    std::uint32_t length() const { return static_cast<std::uint32_t>(diffs.size()); }
};

inline Complex make_complex(std::vector<Rep> objects, std::vector<RepHom> diffs) {
    if (objects.empty() || diffs.size() + 1 != objects.size())
        throw contract_error("make_complex: need one more object than differential");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (!rep_equal(diffs[k].src, objects[k]) || !rep_equal(diffs[k].tgt, objects[k + 1]))
            throw contract_error("make_complex: differential " + std::to_string(k) +
                                 " does not match its objects");
        if (k > 0 && !hom_is_zero(compose(diffs[k], diffs[k - 1])))
            throw contract_error("make_complex: d∘d nonzero at position " + std::to_string(k));
    }
    return Complex{std::move(objects), std::move(diffs)};
}

inline Complex zero_complex(std::shared_ptr<const RepCategory> cat, std::uint32_t n_objects) {
    std::vector<Rep> objects;
    std::vector<RepHom> diffs;
    for (std::uint32_t i = 0; i < n_objects; ++i) objects.push_back(zero_rep(cat));
    for (std::uint32_t i = 0; i + 1 < n_objects; ++i)
        diffs.push_back(zero_hom(objects[i], objects[i + 1]));
    return Complex{std::move(objects), std::move(diffs)};
}

struct ChainMap {
    Complex src, tgt;
    std::vector<RepHom> comps;
};

inline ChainMap make_chain_map(Complex src, Complex tgt, std::vector<RepHom> comps) {
    if (src.objects.size() != tgt.objects.size())
        throw contract_error("make_chain_map: complexes of different length");
    if (comps.size() != src.objects.size())
        throw contract_error("make_chain_map: wrong number of components");
    for (std::size_t k = 0; k + 1 < src.objects.size(); ++k) {
        RepHom lhs = compose(tgt.diffs[k], comps[k]);
        RepHom rhs = compose(comps[k + 1], src.diffs[k]);
        if (!hom_equal(lhs, rhs))
            throw contract_error("make_chain_map: square " + std::to_string(k) +
                                 " does not commute");
    }
    return ChainMap{std::move(src), std::move(tgt), std::move(comps)};
}

inline ChainMap identity_chain_map(const Complex& c) {
    std::vector<RepHom> comps;
    for (const auto& o : c.objects) comps.push_back(identity_hom(o));
    return ChainMap{c, c, std::move(comps)};
}

/// Mapping cone with the block differentials
///   d_C^k = [[-d_X^k, 0], [f^k, d_Y^{k-1}]],
/// boundary cases d_C^0 = (-d_X^0; f^0) and d_C^m = (f^m  d_Y^{m-1}).
inline Complex mapping_cone(const ChainMap& f) {
    const auto cat = f.src.objects[0].cat;
    const PrimeField& fld = cat->field();
    std::size_t m = f.src.diffs.size();
    if (m == 0) throw contract_error("mapping_cone: complexes must have length >= 1");
    std::vector<Rep> objects;
    std::vector<DirectSum> sums; // sums[k-1] = X^k + Y^{k-1}
    objects.push_back(f.src.objects[0]);
    for (std::size_t k = 1; k <= m; ++k) {
        sums.push_back(direct_sum({f.src.objects[k], f.tgt.objects[k - 1]}, cat));
        objects.push_back(sums.back().object);
    }
    objects.push_back(f.tgt.objects[m]);
    std::vector<RepHom> diffs;
    { // d_C^0
        const DirectSum& s = sums[0];
        RepHom d = hom_add(compose(s.injections[0], hom_scale(f.src.diffs[0], fld.neg(1))),
                           compose(s.injections[1], f.comps[0]));
        diffs.push_back(d);
    }
    for (std::size_t k = 1; k < m; ++k) {
        const DirectSum& prev = sums[k - 1];
        const DirectSum& next = sums[k];
        RepHom d = hom_add(
            compose(next.injections[0],
                    compose(hom_scale(f.src.diffs[k], fld.neg(1)), prev.projections[0])),
            hom_add(compose(next.injections[1], compose(f.comps[k], prev.projections[0])),
                    compose(next.injections[1],
                            compose(f.tgt.diffs[k - 1], prev.projections[1]))));
        diffs.push_back(d);
    }
    { // d_C^m
        const DirectSum& prev = sums[m - 1];
        RepHom d = hom_add(compose(f.comps[m], prev.projections[0]),
                           compose(f.tgt.diffs[m - 1], prev.projections[1]));
        diffs.push_back(d);
    }
    return make_complex(std::move(objects), std::move(diffs));
}

/// A complex is contractible iff the identity is null-homotopic; this solves
/// the homotopy equations d h + h d = 1 exactly.
inline bool is_contractible(const Complex& c) {
    const auto cat = c.objects[0].cat;
    const PrimeField& f = cat->field();
    std::size_t m = c.diffs.size();
    // unknowns: h_k in Hom(C_k, C_{k-1}), k = 1..m
    std::vector<std::vector<RepHom>> bases(m + 1);
    std::vector<std::size_t> offset(m + 1, 0);
    std::size_t cols = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        bases[k] = hom_basis(c.objects[k], c.objects[k - 1]);
        offset[k] = cols;
        cols += bases[k].size();
    }
    // equations: for j = 0..m, d^{j-1} h_j + h_{j+1} d^j = id_j, vectorized
    std::vector<std::size_t> eq_offset(m + 1, 0);
    std::size_t rows = 0;
    for (std::size_t j = 0; j <= m; ++j) {
        eq_offset[j] = rows;
        detail::VecLayout lay(c.objects[j], c.objects[j]);
        rows += lay.total;
    }
    Mat sys(f, static_cast<std::uint32_t>(rows), static_cast<std::uint32_t>(cols));
    Mat rhs(f, static_cast<std::uint32_t>(rows), 1);
    for (std::size_t j = 0; j <= m; ++j) {
        Mat idv = detail::vectorize(identity_hom(c.objects[j]));
        for (std::uint32_t i = 0; i < idv.rows(); ++i)
            rhs.at(static_cast<std::uint32_t>(eq_offset[j]) + i, 0) = idv.at(i, 0);
    }
    for (std::size_t k = 1; k <= m; ++k) {
        for (std::size_t b = 0; b < bases[k].size(); ++b) {
            auto col = static_cast<std::uint32_t>(offset[k] + b);
            // contributes d^{k-1}∘beta to equation k
            Mat v1 = detail::vectorize(compose(c.diffs[k - 1], bases[k][b]));
            for (std::uint32_t i = 0; i < v1.rows(); ++i)
                sys.at(static_cast<std::uint32_t>(eq_offset[k]) + i, col) = v1.at(i, 0);
            // contributes beta∘d^{k-1} to equation k-1
            Mat v2 = detail::vectorize(compose(bases[k][b], c.diffs[k - 1]));
            for (std::uint32_t i = 0; i < v2.rows(); ++i)
                sys.at(static_cast<std::uint32_t>(eq_offset[k - 1]) + i, col) =
                    f.add(sys.at(static_cast<std::uint32_t>(eq_offset[k - 1]) + i, col),
                          v2.at(i, 0));
        }
    }
    return solve(sys, rhs).has_value();
}

struct WeakCokernel {
    RepHom mor;                       // B -> sum of members
    std::vector<std::uint32_t> slots; // member indices of the target
};

/// Weak cokernel of f in add(M): the ambient cokernel followed by a minimal
/// left M-approximation of it.
inline WeakCokernel weak_cokernel(const AddContext& ctx, const RepHom& f) {
    QuotObject c = cokernel(f);
    Approximation l = left_approximation(ctx, c.object, true);
    if (!l.surjective_onto_homs)
        throw invariant_error("weak_cokernel: approximation lost surjectivity");
    return WeakCokernel{compose(l.mor, c.proj), l.slots};
}

struct WeakKernel {
    RepHom mor;                       // sum of members -> B
    std::vector<std::uint32_t> slots;
};

inline WeakKernel weak_kernel(const AddContext& ctx, const RepHom& f) {
    SubObject k = kernel(f);
    Approximation r = right_approximation(ctx, k.object, true);
    if (!r.surjective_onto_homs)
        throw invariant_error("weak_kernel: approximation lost surjectivity");
    return WeakKernel{compose(k.incl, r.mor), r.slots};
}

/// Verify the weak cokernel contract of g against f: g∘f = 0 and, for every
/// member Y, exactness of Hom(C,Y) -> Hom(B,Y) -> Hom(A,Y).
inline bool verify_weak_cokernel(const AddContext& ctx, const RepHom& f, const RepHom& g) {
    if (!hom_is_zero(compose(g, f))) return false;
    for (const auto& y : ctx.spec.members) {
        Mat mg = detail::contra_hom_matrix(g, y);
        Mat mf = detail::contra_hom_matrix(f, y);
        // im(via g) = ker(via f) inside Hom(B, Y)
        if (rank(mg) + rank(mf) != mg.rows()) return false;
    }
    return true;
}

/// The canonical add(M) object of a given decomposition, with an isomorphism
/// from r. Fails (nullopt) when r does not lie in add(M).
struct AddMember {
    Rep object;
    RepHom iso; // r -> object
};

inline std::optional<AddMember> to_add_object(const AddContext& ctx, const Rep& r, Rng& rng) {
    auto mult = in_add(ctx.spec, r, rng);
    if (!mult) return std::nullopt;
    std::vector<Rep> parts;
    for (std::uint32_t i = 0; i < mult->size(); ++i)
        for (std::uint32_t k = 0; k < (*mult)[i]; ++k) parts.push_back(ctx.spec.members[i]);
    DirectSum ds = direct_sum(parts, ctx.spec.ambient);
    auto iso = find_isomorphism(r, ds.object, rng);
    if (!iso) return std::nullopt;
    return AddMember{ds.object, *iso};
}

/// Right n-exact extension of f: the full complex
///   X^0 --f--> X^1 -> ... -> X^{n+1}
/// where the middle maps are weak cokernels (ambient cokernel + minimal left
/// approximation) and the last map is an honest cokernel landing in add(M).
/// Throws nabelian_error when the construction stalls, which signals that the
/// subcategory is not n-abelian for this n.
inline Complex n_cokernel(const AddContext& ctx, const RepHom& f, std::uint32_t n, Rng& rng) {
    if (n < 1) throw contract_error("n_cokernel: n must be >= 1");
    std::vector<Rep> objects{f.src, f.tgt};
    std::vector<RepHom> diffs{f};
    RepHom cur = f;
    for (std::uint32_t k = 1; k < n; ++k) {
        WeakCokernel w = weak_cokernel(ctx, cur);
        objects.push_back(w.mor.tgt);
        diffs.push_back(w.mor);
        cur = w.mor;
    }
    QuotObject c = cokernel(cur);
    auto canon = to_add_object(ctx, c.object, rng);
    if (!canon)
        throw nabelian_error("n_cokernel: cokernel at the last step is not in add(M)");
    objects.push_back(canon->object);
    diffs.push_back(compose(canon->iso, c.proj));
    return make_complex(std::move(objects), std::move(diffs));
}

/// Left n-exact extension, dual to n_cokernel: X^0 -> ... -> X^n --f--> X^{n+1}
/// with f the given morphism in the last position.
inline Complex n_kernel(const AddContext& ctx, const RepHom& f, std::uint32_t n, Rng& rng) {
    if (n < 1) throw contract_error("n_kernel: n must be >= 1");
    std::vector<Rep> objects{f.src, f.tgt};
    std::vector<RepHom> diffs{f};
    RepHom cur = f;
    for (std::uint32_t k = 1; k < n; ++k) {
        WeakKernel w = weak_kernel(ctx, cur);
        objects.insert(objects.begin(), w.mor.src);
        diffs.insert(diffs.begin(), w.mor);
        cur = w.mor;
    }
    SubObject s = kernel(cur);
    auto canon = to_add_object(ctx, s.object, rng);
    if (!canon) throw nabelian_error("n_kernel: kernel at the first step is not in add(M)");
    objects.insert(objects.begin(), canon->object);
    diffs.insert(diffs.begin(), compose(s.incl, hom_inverse(canon->iso)));
    return make_complex(std::move(objects), std::move(diffs));
}

struct ExactnessWitness {
    std::uint32_t member;   // test object index
    std::uint32_t position; // position in the Hom sequence
    std::uint32_t defect;   // dim ker - dim im at that position
};

struct NExactnessVerdict {
    bool right = false;
    bool left = false;
    std::vector<ExactnessWitness> right_failures;
    std::vector<ExactnessWitness> left_failures;

    bool both() const { return right && left; }
};

/// Exactness of the induced Hom sequences against every member of M; by
/// additivity this decides the verdict against all of add(M).
inline NExactnessVerdict is_n_exact(const AddContext& ctx, const Complex& c, std::uint32_t n) {
    if (c.objects.size() != n + 2)
        throw contract_error("is_n_exact: complex must have n + 2 objects");
    NExactnessVerdict v;
    v.right = true;
    v.left = true;
    for (std::uint32_t yi = 0; yi < ctx.spec.size(); ++yi) {
        const Rep& y = ctx.spec.members[yi];
        // phi_k: Hom(X^k, Y) -> Hom(X^{k-1}, Y), k = 1..n+1
        std::vector<Mat> phi;
        std::vector<std::uint32_t> homdim(n + 2);
        for (std::uint32_t k = 0; k <= n + 1; ++k) homdim[k] = hom_dim(c.objects[k], y);
        for (std::uint32_t k = 1; k <= n + 1; ++k)
            phi.push_back(detail::contra_hom_matrix(c.diffs[k - 1], y));
        // exact at Hom(X^{n+1}, Y): injectivity
        if (rank(phi[n]) != homdim[n + 1]) {
            v.right = false;
            v.right_failures.push_back(
                ExactnessWitness{yi, n + 1, homdim[n + 1] - rank(phi[n])});
        }
        // exact at Hom(X^k, Y) for k = n..1: rank phi_{k+1} = dim - rank phi_k
        for (std::uint32_t k = n; k >= 1; --k) {
            std::uint32_t want = homdim[k] - rank(phi[k - 1]);
            if (rank(phi[k]) != want) {
                v.right = false;
                v.right_failures.push_back(ExactnessWitness{yi, k, want - rank(phi[k])});
            }
        }
        // psi_k: Hom(Y, X^k) -> Hom(Y, X^{k+1}), k = 0..n
        std::vector<Mat> psi;
        std::vector<std::uint32_t> covdim(n + 2);
        for (std::uint32_t k = 0; k <= n + 1; ++k) covdim[k] = hom_dim(y, c.objects[k]);
        for (std::uint32_t k = 0; k <= n; ++k)
            psi.push_back(detail::cov_hom_matrix(c.diffs[k], y));
        if (rank(psi[0]) != covdim[0]) {
            v.left = false;
            v.left_failures.push_back(ExactnessWitness{yi, 0, covdim[0] - rank(psi[0])});
        }
        for (std::uint32_t k = 1; k <= n; ++k) {
            std::uint32_t want = covdim[k] - rank(psi[k]);
            if (rank(psi[k - 1]) != want) {
                v.left = false;
                v.left_failures.push_back(ExactnessWitness{yi, k, want - rank(psi[k - 1])});
            }
        }
    }
    return v;
}

struct NPushout {
    Complex bottom; // Y^0 -> ... -> Y^m
    ChainMap map;   // X -> bottom
    Complex cone;   // right n-exact by construction
};

/// n-pushout of a complex X (of length m) along f0: X^0 -> Y^0: a chain map
/// extending f0 whose mapping cone is right m-exact. Built by iterated weak
/// cokernels of the partial cone differentials, with an honest cokernel at
/// the last step.
inline NPushout n_pushout(const AddContext& ctx, const Complex& x, const RepHom& f0, Rng& rng) {
    std::size_t m = x.diffs.size();
    if (m < 1) throw contract_error("n_pushout: complex must have length >= 1");
    if (!rep_equal(f0.src, x.objects[0]))
        throw contract_error("n_pushout: f0 does not start at X^0");
    const auto cat = x.objects[0].cat;
    const PrimeField& fld = cat->field();
    std::vector<Rep> yobjs{f0.tgt};
    std::vector<RepHom> fcomps{f0};
    std::vector<RepHom> ydiffs;
    // current cone differential X^k + Y^{k-1} -> X^{k+1} + Y^k, starting with
    // d_C^0 = (-d^0; f^0)
    DirectSum cur_sum = direct_sum({x.objects[1], yobjs[0]}, cat);
    RepHom cur = hom_add(compose(cur_sum.injections[0], hom_scale(x.diffs[0], fld.neg(1))),
                         compose(cur_sum.injections[1], f0));
    for (std::size_t k = 1; k < m; ++k) {
        WeakCokernel w = weak_cokernel(ctx, cur);
        RepHom fk = compose(w.mor, cur_sum.injections[0]);
        RepHom dy = compose(w.mor, cur_sum.injections[1]);
        yobjs.push_back(w.mor.tgt);
        fcomps.push_back(fk);
        ydiffs.push_back(dy);
        DirectSum next_sum = direct_sum({x.objects[k + 1], yobjs[k]}, cat);
        RepHom next = hom_add(
            compose(next_sum.injections[0],
                    compose(hom_scale(x.diffs[k], fld.neg(1)), cur_sum.projections[0])),
            hom_add(compose(next_sum.injections[1], compose(fk, cur_sum.projections[0])),
                    compose(next_sum.injections[1], compose(dy, cur_sum.projections[1]))));
        cur_sum = std::move(next_sum);
        cur = std::move(next);
    }
    QuotObject c = cokernel(cur);
    auto canon = to_add_object(ctx, c.object, rng);
    if (!canon) throw nabelian_error("n_pushout: final cokernel is not in add(M)");
    RepHom w = compose(canon->iso, c.proj);
    yobjs.push_back(canon->object);
    fcomps.push_back(compose(w, cur_sum.injections[0]));
    ydiffs.push_back(compose(w, cur_sum.injections[1]));
    Complex bottom = make_complex(yobjs, ydiffs);
    ChainMap map = make_chain_map(x, bottom, fcomps);
    Complex cone = mapping_cone(map);
    if (is_mono(x.diffs[0]) && !is_mono(bottom.diffs[0]))
        throw nabelian_error("n_pushout: monomorphism was not preserved");
    return NPushout{std::move(bottom), std::move(map), std::move(cone)};
}

} // namespace ausl
