#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "auslander/polyfp.hpp"
#include "auslander/rep.hpp"
#include "auslander/resolve.hpp"
#include "auslander/rng.hpp"

namespace ausl {

/// Block-diagonal action of an endomorphism on the total space.
inline Mat total_matrix(const RepHom& f) {
    const PrimeField& fld = f.src.cat->field();
    std::uint32_t n = f.src.total_dim();
    Mat t(fld, n, n);
    std::uint32_t off = 0;
    for (const auto& c : f.comps) {
        t.set_block(off, off, c);
        off += c.rows();
    }
    return t;
}

inline RepHom hom_power(const RepHom& f, std::uint32_t min_exponent) {
    RepHom h = f;
    std::uint32_t e = 1;
    while (e < min_exponent) {
        h = compose(h, h);
        e *= 2;
    }
    return h;
}

inline RepHom random_hom(const std::vector<RepHom>& basis, const Rep& src, const Rep& tgt,
                         Rng& rng) {
    RepHom h = zero_hom(src, tgt);
    for (const auto& b : basis) {
        std::uint32_t c = rng.field_element(src.cat->field());
        if (c) h = hom_add(h, hom_scale(b, c));
    }
    return h;
}

struct Splitting {
    Rep part1, part2; // part1 = ker(f^N), part2 = im(f^N)
    RepHom incl1, proj1, incl2, proj2;
};

/// Fitting decomposition along an endomorphism that is neither invertible
/// nor nilpotent.
inline Splitting fitting_split(const Rep& m, const RepHom& f) {
    std::uint32_t n = m.total_dim();
    RepHom h = hom_power(f, n == 0 ? 1 : n);
    SubObject k = kernel(h);
    ImageObject im = image(h);
    if (k.object.is_zero() || im.object.is_zero())
        throw contract_error("fitting_split: endomorphism does not split");
    RepHom w = compose(im.corestrict, im.incl);
    if (!is_iso(w)) throw invariant_error("fitting_split: corestriction not invertible on image");
    RepHom proj2 = compose(hom_inverse(w), im.corestrict);
    // complement projector id - incl2∘proj2 has image part1
    RepHom q = hom_add(identity_hom(m),
                       hom_scale(compose(im.incl, proj2), m.cat->field().neg(1)));
    auto proj1 = factor_right(q, k.incl);
    if (!proj1) throw invariant_error("fitting_split: complement projector misses kernel");
    return Splitting{k.object, im.object, k.incl, *proj1, im.incl, proj2};
}

struct EndAnalysis {
    enum class Status { local, split, undecided };
    Status status = Status::undecided;
    std::optional<RepHom> splitter;   // when split
    std::vector<RepHom> rad_basis;    // when local
    std::uint32_t end_dim = 0;
};

namespace detail {

/// True when the endomorphism is neither invertible nor nilpotent.
inline bool is_proper_splitter(const RepHom& f) {
    std::uint32_t n = f.src.total_dim();
    if (n == 0) return false;
    Mat h = total_matrix(hom_power(f, n));
    std::uint32_t r = rank(h);
    return r > 0 && r < n;
}

struct QuotientAlgebra {
    // E/R in coordinates: which E-basis coordinates survive, and the
    // multiplication table of the images.
    std::vector<std::uint32_t> surviving;         // indices into the E basis
    Mat reduction;                                 // d -> m coordinate projection
    std::vector<std::vector<std::uint32_t>> mult;  // mult[i*m+j] = coords of ei*ej
};

} // namespace detail

/// Decide whether End(M) is local; when it is not, produce a splitting
/// endomorphism. The radical candidate comes from the trace form of the
/// faithful action, which identifies the radical exactly unless p divides
/// the total dimension; in that case a small exhaustive search takes over,
/// and past its budget the result is an honest "undecided".
inline EndAnalysis analyze_end(const Rep& m, Rng& rng, std::uint32_t sample_budget = 40) {
    EndAnalysis out;
    const PrimeField& fld = m.cat->field();
    std::uint32_t n = m.total_dim();
    std::vector<RepHom> e = hom_basis(m, m);
    auto d = static_cast<std::uint32_t>(e.size());
    out.end_dim = d;
    if (n == 0) throw contract_error("analyze_end: zero module");

    // cheap splitter scan: basis elements, then random combinations
    for (const auto& b : e)
        if (detail::is_proper_splitter(b)) {
            out.status = EndAnalysis::Status::split;
            out.splitter = b;
            return out;
        }
    for (std::uint32_t t = 0; t < sample_budget; ++t) {
        RepHom f = random_hom(e, m, m, rng);
        if (detail::is_proper_splitter(f)) {
            out.status = EndAnalysis::Status::split;
            out.splitter = f;
            return out;
        }
    }

    if (d == 1) { // End = k, certainly local
        out.status = EndAnalysis::Status::local;
        return out;
    }

    if (n % fld.modulus() != 0) {
        // Trace-form radical: R = {x : tr(xy) = 0 for all y}. R is a two-sided
        // ideal containing the radical; it cannot contain a unit (a unit would
        // put 1 in R, but tr(1) = n != 0 mod p), so in a ring where every
        // element is unit-or-nilpotent R equals the radical. Non-nilpotent
        // members of R are therefore splitters.
        std::vector<Mat> totals;
        totals.reserve(d);
        for (const auto& b : e) totals.push_back(total_matrix(b));
        Mat gram(fld, d, d);
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j) {
                Mat prod = totals[i] * totals[j];
                std::uint32_t tr = 0;
                for (std::uint32_t k = 0; k < n; ++k) tr = fld.add(tr, prod.at(k, k));
                gram.at(i, j) = tr;
            }
        Mat radv = kernel_basis(gram);
        std::vector<RepHom> rad;
        for (std::uint32_t c = 0; c < radv.cols(); ++c) {
            RepHom x = zero_hom(m, m);
            for (std::uint32_t i = 0; i < d; ++i)
                if (radv.at(i, c)) x = hom_add(x, hom_scale(e[i], radv.at(i, c)));
            if (detail::is_proper_splitter(x)) {
                out.status = EndAnalysis::Status::split;
                out.splitter = x;
                return out;
            }
            Mat tx = total_matrix(hom_power(x, n));
            if (!tx.is_zero()) throw invariant_error("analyze_end: radical candidate is a unit");
            rad.push_back(std::move(x));
        }
        std::uint32_t rdim = static_cast<std::uint32_t>(rad.size());
        // Verify R is a nilpotent ideal. Together with rad ⊆ R this pins
        // R = rad; without it R could exceed the radical when the trace form
        // degenerates on a matrix factor, and the locality conclusions below
        // would be unsound. When the chain does not die out, some element of
        // R is non-nilpotent and splits M.
        {
            std::vector<RepHom> layer = rad;
            std::uint32_t guard = 0;
            while (!layer.empty() && guard++ <= n + 1) {
                std::vector<RepHom> next_products;
                for (const auto& a : layer)
                    for (const auto& b : rad) next_products.push_back(compose(a, b));
                // span of the products
                detail::VecLayout lay(m, m);
                Mat stack(fld, static_cast<std::uint32_t>(lay.total),
                          static_cast<std::uint32_t>(next_products.size()));
                for (std::uint32_t c2 = 0; c2 < next_products.size(); ++c2) {
                    Mat v = detail::vectorize(next_products[c2]);
                    for (std::uint32_t i = 0; i < v.rows(); ++i) stack.at(i, c2) = v.at(i, 0);
                }
                Mat basis = column_space_basis(stack);
                layer.clear();
                for (std::uint32_t c2 = 0; c2 < basis.cols(); ++c2)
                    layer.push_back(detail::unvectorize(m, m, basis, c2));
            }
            if (!layer.empty()) {
                for (std::uint32_t t = 0; t < sample_budget; ++t) {
                    RepHom x = random_hom(rad, m, m, rng);
                    if (detail::is_proper_splitter(x)) {
                        out.status = EndAnalysis::Status::split;
                        out.splitter = x;
                        return out;
                    }
                }
                out.status = EndAnalysis::Status::undecided;
                return out;
            }
        }
        if (d == rdim + 1) { // E = k·1 ⊕ R with R nilpotent: local
            out.status = EndAnalysis::Status::local;
            out.rad_basis = std::move(rad);
            return out;
        }
        // E/rad has dimension >= 2: it is a division ring iff some element has
        // an irreducible minimal polynomial of full degree; a reducible minimal
        // polynomial yields a zero divisor and with it a splitter.
        Mat radcols(fld, d, rdim);
        for (std::uint32_t c = 0; c < rdim; ++c)
            for (std::uint32_t i = 0; i < d; ++i) radcols.at(i, c) = radv.at(i, c);
        RrefResult rr = rref(radcols.transposed());
        std::vector<bool> pivot(d, false);
        for (auto c : rr.pivots) pivot[c] = true;
        std::vector<std::uint32_t> surv;
        for (std::uint32_t i = 0; i < d; ++i)
            if (!pivot[i]) surv.push_back(i);
        auto mdim = static_cast<std::uint32_t>(surv.size());
        // reduce coords mod rad: x -> x - sum(pivot rows)
        auto project = [&](const RepHom& x) {
            auto coords = hom_coords(e, x);
            // subtract radical components: solve radcols * y = coords restricted? Use rref rows.
            // Simpler: coordinates on surviving indices after eliminating pivots via rr rows.
            std::vector<std::uint32_t> c2(coords.begin(), coords.end());
            for (std::uint32_t r = 0; r < rr.rank; ++r) {
                std::uint32_t pc = rr.pivots[r];
                std::uint32_t factor = c2[pc];
                if (!factor) continue;
                for (std::uint32_t j = 0; j < d; ++j)
                    c2[j] = fld.sub(c2[j], fld.mul(factor, rr.reduced.at(r, j)));
            }
            std::vector<std::uint32_t> q(mdim);
            for (std::uint32_t i = 0; i < mdim; ++i) q[i] = c2[surv[i]];
            return q;
        };
        for (std::uint32_t t = 0; t < sample_budget; ++t) {
            RepHom x = random_hom(e, m, m, rng);
            // minimal polynomial of the image of x in E/rad
            std::vector<std::vector<std::uint32_t>> pow_coords;
            RepHom xp = identity_hom(m);
            Poly mu;
            for (std::uint32_t k = 0;; ++k) {
                pow_coords.push_back(project(xp));
                Mat stack(fld, mdim, k + 1);
                for (std::uint32_t j = 0; j <= k; ++j)
                    for (std::uint32_t i = 0; i < mdim; ++i) stack.at(i, j) = pow_coords[j][i];
                Mat ker = kernel_basis(stack);
                if (ker.cols() > 0) {
                    mu.c.resize(k + 1);
                    std::uint32_t inv = fld.inv(ker.at(k, 0));
                    for (std::uint32_t j = 0; j <= k; ++j) mu.c[j] = fld.mul(ker.at(j, 0), inv);
                    mu.trim();
                    break;
                }
                xp = compose(xp, x);
            }
            if (mu.degree() == 0) continue; // x in rad
            auto factors = poly_distinct_irreducible_factors(fld, mu, rng);
            bool squarefree_irreducible = factors.size() == 1 && factors[0].degree() == mu.degree();
            if (squarefree_irreducible) {
                if (mu.degree() == mdim) { // E/rad = F_p[x], a field: local
                    out.status = EndAnalysis::Status::local;
                    out.rad_basis = std::move(rad);
                    return out;
                }
                continue; // generated a proper subfield; resample
            }
            if (factors.size() >= 2) {
                // y = q1(x) is a zero divisor mod rad: neither unit nor nilpotent
                RepHom y = zero_hom(m, m);
                RepHom xp2 = identity_hom(m);
                for (std::size_t j = 0; j < factors[0].c.size(); ++j) {
                    if (factors[0].c[j]) y = hom_add(y, hom_scale(xp2, factors[0].c[j]));
                    if (j + 1 < factors[0].c.size()) xp2 = compose(xp2, x);
                }
                if (detail::is_proper_splitter(y)) {
                    out.status = EndAnalysis::Status::split;
                    out.splitter = y;
                    return out;
                }
            }
            // mu a power of one irreducible: nilpotent residue, resample
        }
        out.status = EndAnalysis::Status::undecided;
        return out;
    }

    // p divides the total dimension: exhaustive fallback for tiny End rings
    double logsize = d * std::log2(double(fld.modulus()));
    if (logsize <= 20.0) {
        std::vector<RepHom> nilpotents;
        std::vector<std::uint32_t> coords(d, 0);
        for (;;) {
            std::uint32_t i = 0;
            while (i < d && coords[i] + 1 == fld.modulus()) coords[i++] = 0;
            if (i == d) break;
            coords[i]++;
            RepHom x = zero_hom(m, m);
            for (std::uint32_t j = 0; j < d; ++j)
                if (coords[j]) x = hom_add(x, hom_scale(e[j], coords[j]));
            Mat h = total_matrix(hom_power(x, n));
            std::uint32_t r = rank(h);
            if (r > 0 && r < n) {
                out.status = EndAnalysis::Status::split;
                out.splitter = x;
                return out;
            }
            if (r == 0) nilpotents.push_back(std::move(x));
        }
        out.status = EndAnalysis::Status::local;
        // span of the nilpotents (they form the radical)
        detail::VecLayout lay(m, m);
        Mat stack(fld, static_cast<std::uint32_t>(lay.total),
                  static_cast<std::uint32_t>(nilpotents.size()));
        for (std::uint32_t c = 0; c < nilpotents.size(); ++c) {
            Mat v = detail::vectorize(nilpotents[c]);
            for (std::uint32_t i = 0; i < v.rows(); ++i) stack.at(i, c) = v.at(i, 0);
        }
        Mat basis = column_space_basis(stack);
        for (std::uint32_t c = 0; c < basis.cols(); ++c)
            out.rad_basis.push_back(detail::unvectorize(m, m, basis, c));
        return out;
    }

    out.status = EndAnalysis::Status::undecided;
    return out;
}

struct Summand {
    Rep rep;
    RepHom incl; // rep -> M
    RepHom proj; // M -> rep, proj∘incl = id
    bool certified_indecomposable;
    std::uint32_t end_dim;
};

struct DecomposeResult {
    std::vector<Summand> summands;
    bool decided; // true when every summand is certified indecomposable
};

/// Split M into direct summands by repeated Fitting splits, certifying
/// locality of each final endomorphism ring. Never returns a wrong answer:
/// when certification runs out of budget the result is flagged undecided.
inline DecomposeResult decompose(const Rep& m, Rng& rng, std::uint32_t sample_budget = 40) {
    DecomposeResult out;
    out.decided = true;
    if (m.is_zero()) return out;
    std::vector<Summand> work;
    work.push_back(Summand{m, identity_hom(m), identity_hom(m), false, 0});
    while (!work.empty()) {
        Summand cur = std::move(work.back());
        work.pop_back();
        if (cur.rep.is_zero()) continue;
        EndAnalysis an = analyze_end(cur.rep, rng, sample_budget);
        if (an.status == EndAnalysis::Status::local) {
            cur.certified_indecomposable = true;
            cur.end_dim = an.end_dim;
            out.summands.push_back(std::move(cur));
        } else if (an.status == EndAnalysis::Status::split) {
            Splitting sp = fitting_split(cur.rep, *an.splitter);
            work.push_back(Summand{sp.part1, compose(cur.incl, sp.incl1),
                                   compose(sp.proj1, cur.proj), false, 0});
            work.push_back(Summand{sp.part2, compose(cur.incl, sp.incl2),
                                   compose(sp.proj2, cur.proj), false, 0});
        } else {
            cur.certified_indecomposable = false;
            cur.end_dim = an.end_dim;
            out.summands.push_back(std::move(cur));
            out.decided = false;
        }
    }
    // certificate check: the summands assemble to the identity of M
    RepHom total = zero_hom(m, m);
    for (const auto& s : out.summands) {
        RepHom pi = compose(s.incl, s.proj);
        total = hom_add(total, pi);
        RepHom round = compose(s.proj, s.incl);
        if (!hom_equal(round, identity_hom(s.rep)))
            throw invariant_error("decompose: summand retraction is not the identity");
    }
    if (!hom_equal(total, identity_hom(m)))
        throw invariant_error("decompose: summands do not reassemble the identity");
    return out;
}

/// Random search for an isomorphism. A found iso is exact; a miss after the
/// budget is strong statistical evidence of non-isomorphism (an isomorphism
/// exists in Hom(a,b) iff random elements are isos with probability at least
/// 1 - O(1/p)).
inline std::optional<RepHom> find_isomorphism(const Rep& a, const Rep& b, Rng& rng,
                                              std::uint32_t budget = 64) {
    if (a.cat.get() != b.cat.get() || a.dims != b.dims) return std::nullopt;
    if (a.is_zero()) return zero_hom(a, b);
    auto basis = hom_basis(a, b);
    if (basis.empty()) return std::nullopt;
    for (const auto& h : basis)
        if (is_iso(h)) return h;
    for (std::uint32_t t = 0; t < budget; ++t) {
        RepHom h = random_hom(basis, a, b, rng);
        if (is_iso(h)) return h;
    }
    return std::nullopt;
}

inline bool is_isomorphic(const Rep& a, const Rep& b, Rng& rng, std::uint32_t budget = 64) {
    return find_isomorphism(a, b, rng, budget).has_value();
}

struct GroupedPiece {
    Rep rep;
    std::uint32_t multiplicity;
    bool certified_indecomposable;
};

inline std::vector<GroupedPiece> group_by_iso(const std::vector<Summand>& summands, Rng& rng) {
    std::vector<GroupedPiece> out;
    for (const auto& s : summands) {
        bool matched = false;
        for (auto& g : out)
            if (g.rep.dims == s.rep.dims && is_isomorphic(g.rep, s.rep, rng)) {
                g.multiplicity++;
                matched = true;
                break;
            }
        if (!matched) out.push_back(GroupedPiece{s.rep, 1, s.certified_indecomposable});
    }
    return out;
}

} // namespace ausl
