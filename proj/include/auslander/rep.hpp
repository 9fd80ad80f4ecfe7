#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auslander/matrix.hpp"

namespace ausl {

/// A finite k-linear category presented by slots and generating maps.
/// Representations assign a vector space to every slot and a matrix to every
/// generator. Two instantiations exist: quiver algebras (slots = vertices,
/// generators = arrows) and endomorphism algebras of a module list (slots =
/// indecomposables, generators = radical basis morphisms acting by
/// precomposition). All module-theoretic algorithms below are written once
/// against this interface.
class RepCategory;

struct Gen {
    std::uint32_t from, to;
    bool radical; // true when the generator lies in the Jacobson radical
};

struct Rep {
    std::shared_ptr<const RepCategory> cat;
    std::vector<std::uint32_t> dims; // one per slot
    std::vector<Mat> maps;           // one per generator, dims[to] x dims[from]

    std::uint32_t total_dim() const {
        std::uint32_t t = 0;
        for (auto d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }
};

struct RepHom {
    Rep src, tgt;
    std::vector<Mat> comps; // one per slot, tgt.dims[s] x src.dims[s]
};

class RepCategory : public std::enable_shared_from_this<RepCategory> {
public:
    virtual ~RepCategory() = default;

    const PrimeField& field() const { return field_; }
    std::uint32_t slot_count() const { return static_cast<std::uint32_t>(slot_names_.size()); }
    const std::string& slot_name(std::uint32_t s) const { return slot_names_[s]; }
    const std::vector<Gen>& generators() const { return gens_; }

    /// Category-specific structural validation (relations, module axioms).
    /// Returns an error message, or nullopt when the representation is valid.
    virtual std::optional<std::string> validate(const Rep& r) const = 0;

    /// The indecomposable projective representation attached to a slot.
    virtual Rep projective_at(std::uint32_t slot) const = 0;

    /// The unique hom projective_at(slot) -> target sending the canonical
    /// generator of the projective to the given element of target at `slot`.
    virtual RepHom yoneda_hom(std::uint32_t slot, const Rep& target, const Mat& element) const = 0;

    /// Stable content identifier used by caches and cross-checks.
    virtual std::string content_key() const = 0;

protected:
    RepCategory(PrimeField f, std::vector<std::string> slot_names, std::vector<Gen> gens)
        : field_(f), slot_names_(std::move(slot_names)), gens_(std::move(gens)) {}

    PrimeField field_;
    std::vector<std::string> slot_names_;
    std::vector<Gen> gens_;
};

inline void require_same_cat(const Rep& a, const Rep& b, const char* op) {
    if (a.cat.get() != b.cat.get())
        throw contract_error(std::string(op) + ": representations over different categories");
}

/// Build a representation, checking shapes and the category's relations.
inline Rep make_rep(std::shared_ptr<const RepCategory> cat, std::vector<std::uint32_t> dims,
                    std::vector<Mat> maps) {
    if (dims.size() != cat->slot_count()) throw contract_error("make_rep: dims/slot mismatch");
    const auto& gens = cat->generators();
    if (maps.size() != gens.size()) throw contract_error("make_rep: maps/generator mismatch");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (maps[g].rows() != dims[gens[g].to] || maps[g].cols() != dims[gens[g].from])
            throw contract_error("make_rep: map " + std::to_string(g) + " has wrong shape");
        if (maps[g].field() != cat->field()) throw contract_error("make_rep: field mismatch");
    }
    Rep r{std::move(cat), std::move(dims), std::move(maps)};
    if (auto err = r.cat->validate(r)) throw input_error(*err);
    return r;
}

inline Rep zero_rep(std::shared_ptr<const RepCategory> cat) {
    std::vector<std::uint32_t> dims(cat->slot_count(), 0);
    std::vector<Mat> maps;
    maps.reserve(cat->generators().size());
    for (const auto& g : cat->generators()) {
        (void)g;
        maps.emplace_back(cat->field(), 0, 0);
    }
    return Rep{std::move(cat), std::move(dims), std::move(maps)};
}

inline bool rep_equal(const Rep& a, const Rep& b) {
    return a.cat.get() == b.cat.get() && a.dims == b.dims && a.maps == b.maps;
}

/// Build a hom, checking shapes and the intertwining equations exactly.
inline RepHom make_hom(const Rep& src, const Rep& tgt, std::vector<Mat> comps) {
    require_same_cat(src, tgt, "make_hom");
    const auto& gens = src.cat->generators();
    if (comps.size() != src.cat->slot_count()) throw contract_error("make_hom: comps/slot mismatch");
    for (std::uint32_t s = 0; s < comps.size(); ++s)
        if (comps[s].rows() != tgt.dims[s] || comps[s].cols() != src.dims[s])
            throw contract_error("make_hom: component " + std::to_string(s) + " has wrong shape");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat lhs = comps[gens[g].to] * src.maps[g];
        Mat rhs = tgt.maps[g] * comps[gens[g].from];
        if (lhs != rhs)
            throw contract_error("make_hom: intertwining fails at generator " + std::to_string(g));
    }
    return RepHom{src, tgt, std::move(comps)};
}

inline RepHom identity_hom(const Rep& r) {
    std::vector<Mat> comps;
    comps.reserve(r.dims.size());
    for (auto d : r.dims) comps.push_back(Mat::identity(r.cat->field(), d));
    return RepHom{r, r, std::move(comps)};
}

inline RepHom zero_hom(const Rep& src, const Rep& tgt) {
    require_same_cat(src, tgt, "zero_hom");
    std::vector<Mat> comps;
    for (std::uint32_t s = 0; s < src.cat->slot_count(); ++s)
        comps.emplace_back(src.cat->field(), tgt.dims[s], src.dims[s]);
    return RepHom{src, tgt, std::move(comps)};
}

inline bool hom_is_zero(const RepHom& f) {
    for (const auto& c : f.comps)
        if (!c.is_zero()) return false;
    return true;
}

inline RepHom compose(const RepHom& g, const RepHom& f) {
    // g after f
    if (!rep_equal(f.tgt, g.src)) throw contract_error("compose: middle objects differ");
    std::vector<Mat> comps;
    comps.reserve(f.comps.size());
    for (std::uint32_t s = 0; s < f.comps.size(); ++s) comps.push_back(g.comps[s] * f.comps[s]);
    return RepHom{f.src, g.tgt, std::move(comps)};
}

inline RepHom hom_add(const RepHom& a, const RepHom& b) {
    std::vector<Mat> comps;
    for (std::uint32_t s = 0; s < a.comps.size(); ++s) comps.push_back(a.comps[s] + b.comps[s]);
    return RepHom{a.src, a.tgt, std::move(comps)};
}

inline RepHom hom_scale(const RepHom& a, std::uint32_t c) {
    std::vector<Mat> comps;
    for (const auto& m : a.comps) comps.push_back(m.scaled(c));
    return RepHom{a.src, a.tgt, std::move(comps)};
}

inline bool hom_equal(const RepHom& a, const RepHom& b) {
    if (!rep_equal(a.src, b.src) || !rep_equal(a.tgt, b.tgt)) return false;
    return a.comps == b.comps;
}

inline bool is_mono(const RepHom& f) {
    for (const auto& c : f.comps)
        if (rank(c) != c.cols()) return false;
    return true;
}

inline bool is_epi(const RepHom& f) {
    for (const auto& c : f.comps)
        if (rank(c) != c.rows()) return false;
    return true;
}

inline bool is_iso(const RepHom& f) {
    for (const auto& c : f.comps)
        if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
    return true;
}

inline RepHom hom_inverse(const RepHom& f) {
    std::vector<Mat> comps;
    for (const auto& c : f.comps) comps.push_back(inverse(c));
    return RepHom{f.tgt, f.src, std::move(comps)};
}

namespace detail {

/// Offsets for vectorizing a slotwise family of matrices tgt.dims[s] x src.dims[s].
struct VecLayout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;

    VecLayout(const Rep& src, const Rep& tgt) {
        offset.resize(src.dims.size());
        for (std::uint32_t s = 0; s < src.dims.size(); ++s) {
            offset[s] = total;
            total += std::size_t(tgt.dims[s]) * src.dims[s];
        }
    }
    std::size_t index(std::uint32_t s, std::uint32_t i, std::uint32_t j,
                      std::uint32_t src_dim) const {
        return offset[s] + std::size_t(i) * src_dim + j;
    }
};

inline Mat vectorize(const RepHom& f) {
    VecLayout lay(f.src, f.tgt);
    Mat v(f.src.cat->field(), static_cast<std::uint32_t>(lay.total), 1);
    std::size_t k = 0;
    for (const auto& c : f.comps)
        for (auto e : c.entries()) v.at(static_cast<std::uint32_t>(k++), 0) = e;
    return v;
}

inline RepHom unvectorize(const Rep& src, const Rep& tgt, const Mat& v, std::uint32_t col) {
    std::vector<Mat> comps;
    std::size_t k = 0;
    for (std::uint32_t s = 0; s < src.dims.size(); ++s) {
        Mat c(src.cat->field(), tgt.dims[s], src.dims[s]);
        for (std::uint32_t i = 0; i < tgt.dims[s]; ++i)
            for (std::uint32_t j = 0; j < src.dims[s]; ++j)
                c.at(i, j) = v.at(static_cast<std::uint32_t>(k++), col);
        comps.push_back(std::move(c));
    }
    return RepHom{src, tgt, std::move(comps)};
}

/// Coefficient matrix of the intertwining equations f_to * M_g = N_g * f_from.
inline Mat intertwiner_system(const Rep& m, const Rep& n) {
    const PrimeField& f = m.cat->field();
    VecLayout lay(m, n);
    const auto& gens = m.cat->generators();
    std::size_t rows = 0;
    for (const auto& g : gens) rows += std::size_t(n.dims[g.to]) * m.dims[g.from];
    Mat sys(f, static_cast<std::uint32_t>(rows), static_cast<std::uint32_t>(lay.total));
    std::size_t row = 0;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Gen& g = gens[gi];
        const Mat& mg = m.maps[gi];
        const Mat& ng = n.maps[gi];
        for (std::uint32_t i = 0; i < n.dims[g.to]; ++i)
            for (std::uint32_t j = 0; j < m.dims[g.from]; ++j) {
                auto r = static_cast<std::uint32_t>(row++);
                // (f_to * M_g)[i,j]: unknown f_to[i,k] with coefficient M_g[k,j]
                for (std::uint32_t k = 0; k < m.dims[g.to]; ++k) {
                    auto idx = lay.index(g.to, i, k, m.dims[g.to]);
                    sys.at(r, static_cast<std::uint32_t>(idx)) =
                        f.add(sys.at(r, static_cast<std::uint32_t>(idx)), mg.at(k, j));
                }
                // -(N_g * f_from)[i,j]: unknown f_from[k,j] with coefficient N_g[i,k]
                for (std::uint32_t k = 0; k < n.dims[g.from]; ++k) {
                    auto idx = lay.index(g.from, k, j, m.dims[g.from]);
                    sys.at(r, static_cast<std::uint32_t>(idx)) =
                        f.sub(sys.at(r, static_cast<std::uint32_t>(idx)), ng.at(i, k));
                }
            }
    }
    return sys;
}

} // namespace detail

/// Basis of Hom(m, n), deterministic (rref-ordered).
inline std::vector<RepHom> hom_basis(const Rep& m, const Rep& n) {
    require_same_cat(m, n, "hom_basis");
    Mat sys = detail::intertwiner_system(m, n);
    Mat ker = kernel_basis(sys);
    std::vector<RepHom> basis;
    basis.reserve(ker.cols());
    for (std::uint32_t c = 0; c < ker.cols(); ++c)
        basis.push_back(detail::unvectorize(m, n, ker, c));
    return basis;
}

inline std::uint32_t hom_dim(const Rep& m, const Rep& n) {
    require_same_cat(m, n, "hom_dim");
    Mat sys = detail::intertwiner_system(m, n);
    std::size_t vars = 0;
    for (std::uint32_t s = 0; s < m.dims.size(); ++s)
        vars += std::size_t(n.dims[s]) * m.dims[s];
    return static_cast<std::uint32_t>(vars) - rank(sys);
}

/// Coordinates of h in the given hom basis. Throws invariant_error when h is
/// not in the span (callers use it only where membership is guaranteed).
inline std::vector<std::uint32_t> hom_coords(const std::vector<RepHom>& basis, const RepHom& h) {
    const PrimeField& f = h.src.cat->field();
    Mat v = detail::vectorize(h);
    Mat sys(f, v.rows(), static_cast<std::uint32_t>(basis.size()));
    for (std::uint32_t j = 0; j < basis.size(); ++j) {
        Mat bj = detail::vectorize(basis[j]);
        for (std::uint32_t i = 0; i < v.rows(); ++i) sys.at(i, j) = bj.at(i, 0);
    }
    auto sol = solve(sys, v);
    if (!sol) throw invariant_error("hom_coords: morphism not in span of basis");
    std::vector<std::uint32_t> out(basis.size());
    for (std::uint32_t j = 0; j < basis.size(); ++j) out[j] = sol->particular.at(j, 0);
    return out;
}

inline RepHom hom_from_coords(const Rep& src, const Rep& tgt, const std::vector<RepHom>& basis,
                              const std::vector<std::uint32_t>& coords) {
    RepHom h = zero_hom(src, tgt);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i]) h = hom_add(h, hom_scale(basis[i], coords[i]));
    return h;
}

/// Solve x∘f = g for x: f.tgt -> g.tgt. Returns nullopt when no solution.
inline std::optional<RepHom> factor_left(const RepHom& g, const RepHom& f) {
    auto basis = hom_basis(f.tgt, g.tgt);
    const PrimeField& fld = g.src.cat->field();
    Mat vg = detail::vectorize(g);
    Mat sys(fld, vg.rows(), static_cast<std::uint32_t>(basis.size()));
    for (std::uint32_t j = 0; j < basis.size(); ++j) {
        Mat col = detail::vectorize(compose(basis[j], f));
        for (std::uint32_t i = 0; i < vg.rows(); ++i) sys.at(i, j) = col.at(i, 0);
    }
    auto sol = solve(sys, vg);
    if (!sol) return std::nullopt;
    std::vector<std::uint32_t> coords(basis.size());
    for (std::uint32_t j = 0; j < basis.size(); ++j) coords[j] = sol->particular.at(j, 0);
    return hom_from_coords(f.tgt, g.tgt, basis, coords);
}

/// Solve f∘x = g for x: g.src -> f.src. Returns nullopt when no solution.
inline std::optional<RepHom> factor_right(const RepHom& g, const RepHom& f) {
    auto basis = hom_basis(g.src, f.src);
    const PrimeField& fld = g.src.cat->field();
    Mat vg = detail::vectorize(g);
    Mat sys(fld, vg.rows(), static_cast<std::uint32_t>(basis.size()));
    for (std::uint32_t j = 0; j < basis.size(); ++j) {
        Mat col = detail::vectorize(compose(f, basis[j]));
        for (std::uint32_t i = 0; i < vg.rows(); ++i) sys.at(i, j) = col.at(i, 0);
    }
    auto sol = solve(sys, vg);
    if (!sol) return std::nullopt;
    std::vector<std::uint32_t> coords(basis.size());
    for (std::uint32_t j = 0; j < basis.size(); ++j) coords[j] = sol->particular.at(j, 0);
    return hom_from_coords(g.src, f.src, basis, coords);
}

struct SubObject {
    Rep object;
    RepHom incl; // object -> ambient, mono
};

struct QuotObject {
    Rep object;
    RepHom proj; // ambient -> object, epi
};

/// Kernel with its inclusion; universal among maps killed by f.
inline SubObject kernel(const RepHom& f) {
    const auto cat = f.src.cat;
    const PrimeField& fld = cat->field();
    std::vector<Mat> incl_comps;
    std::vector<std::uint32_t> dims;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        Mat k = kernel_basis(f.comps[s]);
        dims.push_back(k.cols());
        incl_comps.push_back(std::move(k));
    }
    const auto& gens = cat->generators();
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        // incl_to * K_g = M_g * incl_from has a unique solution
        Mat rhs = f.src.maps[g] * incl_comps[gens[g].from];
        auto sol = solve(incl_comps[gens[g].to], rhs);
        if (!sol) throw invariant_error("kernel: induced map does not exist");
        maps.push_back(sol->particular);
    }
    Rep k{cat, std::move(dims), std::move(maps)};
    if (auto err = cat->validate(k)) throw invariant_error("kernel: invalid subobject: " + *err);
    (void)fld;
    RepHom incl = make_hom(k, f.src, std::move(incl_comps));
    return SubObject{std::move(k), std::move(incl)};
}

/// Cokernel with its projection; universal among maps killing f.
inline QuotObject cokernel(const RepHom& f) {
    const auto cat = f.src.cat;
    std::vector<Mat> proj_comps;
    std::vector<std::uint32_t> dims;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        // rows of proj span the left kernel of f_s, so ker(proj) = im(f_s)
        Mat pr = kernel_basis(f.comps[s].transposed()).transposed();
        dims.push_back(pr.rows());
        proj_comps.push_back(std::move(pr));
    }
    const auto& gens = cat->generators();
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        // C_g * proj_from = proj_to * N_g, solved via transposes
        Mat rhs = (proj_comps[gens[g].to] * f.tgt.maps[g]).transposed();
        auto sol = solve(proj_comps[gens[g].from].transposed(), rhs);
        if (!sol) throw invariant_error("cokernel: induced map does not exist");
        maps.push_back(sol->particular.transposed());
    }
    Rep c{cat, std::move(dims), std::move(maps)};
    if (auto err = cat->validate(c)) throw invariant_error("cokernel: invalid quotient: " + *err);
    RepHom proj = make_hom(f.tgt, c, std::move(proj_comps));
    return QuotObject{std::move(c), std::move(proj)};
}

struct ImageObject {
    Rep object;
    RepHom incl;       // object -> f.tgt, mono
    RepHom corestrict; // f.src -> object, epi; incl ∘ corestrict = f
};

inline ImageObject image(const RepHom& f) {
    const auto cat = f.src.cat;
    std::vector<Mat> incl_comps;
    std::vector<std::uint32_t> dims;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        Mat b = column_space_basis(f.comps[s]);
        dims.push_back(b.cols());
        incl_comps.push_back(std::move(b));
    }
    const auto& gens = cat->generators();
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat rhs = f.tgt.maps[g] * incl_comps[gens[g].from];
        auto sol = solve(incl_comps[gens[g].to], rhs);
        if (!sol) throw invariant_error("image: induced map does not exist");
        maps.push_back(sol->particular);
    }
    Rep im{cat, std::move(dims), std::move(maps)};
    if (auto err = cat->validate(im)) throw invariant_error("image: invalid subobject: " + *err);
    std::vector<Mat> co_comps;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        auto sol = solve(incl_comps[s], f.comps[s]);
        if (!sol) throw invariant_error("image: corestriction does not exist");
        co_comps.push_back(sol->particular);
    }
    RepHom incl = make_hom(im, f.tgt, std::move(incl_comps));
    RepHom co = make_hom(f.src, im, std::move(co_comps));
    return ImageObject{std::move(im), std::move(incl), std::move(co)};
}

struct DirectSum {
    Rep object;
    std::vector<RepHom> injections;
    std::vector<RepHom> projections;
};

inline DirectSum direct_sum(const std::vector<Rep>& parts,
                            std::shared_ptr<const RepCategory> cat) {
    for (const auto& p : parts)
        if (p.cat.get() != cat.get()) throw contract_error("direct_sum: category mismatch");
    const PrimeField& f = cat->field();
    std::vector<std::uint32_t> dims(cat->slot_count(), 0);
    for (const auto& p : parts)
        for (std::uint32_t s = 0; s < dims.size(); ++s) dims[s] += p.dims[s];
    const auto& gens = cat->generators();
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat m(f, dims[gens[g].to], dims[gens[g].from]);
        std::uint32_t ro = 0, co = 0;
        for (const auto& p : parts) {
            m.set_block(ro, co, p.maps[g]);
            ro += p.dims[gens[g].to];
            co += p.dims[gens[g].from];
        }
        maps.push_back(std::move(m));
    }
    Rep sum{cat, dims, std::move(maps)};
    std::vector<RepHom> inj, proj;
    std::vector<std::uint32_t> off(cat->slot_count(), 0);
    for (const auto& p : parts) {
        std::vector<Mat> ic, pc;
        for (std::uint32_t s = 0; s < dims.size(); ++s) {
            Mat i(f, dims[s], p.dims[s]);
            Mat q(f, p.dims[s], dims[s]);
            for (std::uint32_t r = 0; r < p.dims[s]; ++r) {
                i.at(off[s] + r, r) = 1;
                q.at(r, off[s] + r) = 1;
            }
            ic.push_back(std::move(i));
            pc.push_back(std::move(q));
        }
        inj.push_back(RepHom{p, sum, std::move(ic)});
        proj.push_back(RepHom{sum, p, std::move(pc)});
        for (std::uint32_t s = 0; s < dims.size(); ++s) off[s] += p.dims[s];
    }
    return DirectSum{std::move(sum), std::move(inj), std::move(proj)};
}

/// Sub-representation spanned slotwise by the given column spans (closed off
/// under the generator action before building the object).
inline SubObject span_subobject(const Rep& m, std::vector<Mat> spans) {
    const auto cat = m.cat;
    const auto& gens = cat->generators();
    // close under generator action
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Mat img = m.maps[g] * spans[gens[g].from];
            if (img.cols() == 0) continue;
            Mat joint = spans[gens[g].to].hstack(img);
            Mat basis = column_space_basis(joint);
            if (basis.cols() != spans[gens[g].to].cols()) {
                spans[gens[g].to] = std::move(basis);
                changed = true;
            }
        }
    }
    std::vector<Mat> incl_comps;
    std::vector<std::uint32_t> dims;
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        Mat b = column_space_basis(spans[s]);
        dims.push_back(b.cols());
        incl_comps.push_back(std::move(b));
    }
    std::vector<Mat> maps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat rhs = m.maps[g] * incl_comps[gens[g].from];
        auto sol = solve(incl_comps[gens[g].to], rhs);
        if (!sol) throw invariant_error("span_subobject: not closed under action");
        maps.push_back(sol->particular);
    }
    Rep sub{cat, std::move(dims), std::move(maps)};
    if (auto err = cat->validate(sub))
        throw invariant_error("span_subobject: invalid subobject: " + *err);
    RepHom incl = make_hom(sub, m, std::move(incl_comps));
    return SubObject{std::move(sub), std::move(incl)};
}

} // namespace ausl
