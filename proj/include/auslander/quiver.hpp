#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/rep.hpp"

namespace ausl {

struct Arrow {
    std::string name;
    std::uint32_t src, tgt;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::uint32_t vertex_index(const std::string& name) const {
        for (std::uint32_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return i;
        throw input_error("unknown vertex: " + name);
    }
    std::uint32_t arrow_index(const std::string& name) const {
        for (std::uint32_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return i;
        throw input_error("unknown arrow: " + name);
    }
};

/// One summand of a relation: coeff * (word of arrow indices, applied left to
/// right, so the word [a, b] is the path "a then b").
struct RelationTerm {
    std::uint32_t coeff;
    std::vector<std::uint32_t> word;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

namespace detail {

struct PathInfo {
    std::uint32_t src, tgt;
    std::vector<std::uint32_t> word;
};

} // namespace detail

/// The path algebra of a quiver modulo an admissible ideal of
/// length-homogeneous relations, as a representation category: slots are
/// vertices, generators are arrows, representations are modules.
///
/// A basis of each e_v·A·e_u is computed once from paths modulo the graded
/// relation ideal; this drives projectives and projective covers. Relations
/// mixing path lengths are rejected up front (the graded computation would
/// not be exact for them), as are algebras that fail to become
/// finite-dimensional within the search budget.
class QuiverAlgebra final : public RepCategory {
public:
    static std::shared_ptr<const QuiverAlgebra> create(PrimeField f, Quiver q,
                                                       std::vector<Relation> rels) {
        auto alg = std::shared_ptr<QuiverAlgebra>(
            new QuiverAlgebra(f, std::move(q), std::move(rels)));
        alg->build_paths();
        return alg;
    }

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::optional<std::string> validate(const Rep& r) const override {
        for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
            const Relation& rel = relations_[ri];
            std::uint32_t u = quiver_.arrows[rel.terms[0].word.front()].src;
            std::uint32_t v = quiver_.arrows[rel.terms[0].word.back()].tgt;
            Mat acc(field_, r.dims[v], r.dims[u]);
            for (const auto& t : rel.terms) {
                Mat prod = Mat::identity(field_, r.dims[u]);
                for (auto a : t.word) prod = r.maps[a] * prod;
                acc = acc + prod.scaled(t.coeff);
            }
            if (!acc.is_zero())
                return "relation violated: " + render_relation(ri);
        }
        return std::nullopt;
    }

    Rep projective_at(std::uint32_t slot) const override {
        std::vector<std::uint32_t> dims(slot_count(), 0);
        // basis paths starting at `slot`, grouped by target, in (grade, id) order
        std::vector<std::vector<std::uint32_t>> slot_paths(slot_count());
        for (auto pid : basis_order_)
            if (paths_[pid].src == slot) {
                dims[paths_[pid].tgt]++;
                slot_paths[paths_[pid].tgt].push_back(pid);
            }
        std::vector<Mat> maps;
        for (std::uint32_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
            const Arrow& a = quiver_.arrows[ai];
            Mat m(field_, dims[a.tgt], dims[a.src]);
            for (std::uint32_t j = 0; j < slot_paths[a.src].size(); ++j) {
                std::uint32_t pid = slot_paths[a.src][j];
                std::vector<std::uint32_t> w = paths_[pid].word;
                w.push_back(ai);
                for (auto [qid, c] : normal_form_of_word(slot, w)) {
                    std::uint32_t row = position_in(slot_paths[a.tgt], qid);
                    m.at(row, j) = c;
                }
            }
            maps.push_back(std::move(m));
        }
        return Rep{shared_from_this(), std::move(dims), std::move(maps)};
    }

    RepHom yoneda_hom(std::uint32_t slot, const Rep& target, const Mat& element) const override {
        if (element.rows() != target.dims[slot] || element.cols() != 1)
            throw contract_error("yoneda_hom: element has wrong shape");
        Rep p = projective_at(slot);
        std::vector<std::vector<std::uint32_t>> slot_paths(slot_count());
        for (auto pid : basis_order_)
            if (paths_[pid].src == slot) slot_paths[paths_[pid].tgt].push_back(pid);
        std::vector<Mat> comps;
        for (std::uint32_t v = 0; v < slot_count(); ++v) {
            Mat c(field_, target.dims[v], p.dims[v]);
            for (std::uint32_t j = 0; j < slot_paths[v].size(); ++j) {
                Mat vec = element;
                for (auto a : paths_[slot_paths[v][j]].word) vec = target.maps[a] * vec;
                for (std::uint32_t i = 0; i < target.dims[v]; ++i) c.at(i, j) = vec.at(i, 0);
            }
            comps.push_back(std::move(c));
        }
        return make_hom(p, target, std::move(comps));
    }

    Rep simple_at(std::uint32_t v) const {
        std::vector<std::uint32_t> dims(slot_count(), 0);
        dims[v] = 1;
        std::vector<Mat> maps;
        for (const auto& a : quiver_.arrows) maps.emplace_back(field_, dims[a.tgt], dims[a.src]);
        return Rep{shared_from_this(), std::move(dims), std::move(maps)};
    }

    /// The opposite algebra (reversed arrows, reversed relation words).
    std::shared_ptr<const QuiverAlgebra> opposite() const {
        Quiver q;
        q.vertices = quiver_.vertices;
        for (const auto& a : quiver_.arrows) q.arrows.push_back(Arrow{a.name + "^op", a.tgt, a.src});
        std::vector<Relation> rels;
        for (const auto& r : relations_) {
            Relation ro;
            for (const auto& t : r.terms) {
                RelationTerm to{t.coeff, t.word};
                std::reverse(to.word.begin(), to.word.end());
                ro.terms.push_back(std::move(to));
            }
            rels.push_back(std::move(ro));
        }
        return create(field_, std::move(q), std::move(rels));
    }

    /// k-dual of a module over the opposite algebra, as a module over this one.
    Rep dual_of_opposite(const Rep& r) const {
        std::vector<Mat> maps;
        for (std::uint32_t ai = 0; ai < quiver_.arrows.size(); ++ai)
            maps.push_back(r.maps[ai].transposed());
        return Rep{shared_from_this(), r.dims, std::move(maps)};
    }

    Rep injective_at(std::uint32_t v) const {
        return dual_of_opposite(opposite()->projective_at(v));
    }

    std::uint32_t algebra_dim() const { return static_cast<std::uint32_t>(basis_order_.size()); }

    std::string render_relation(std::size_t idx) const {
        std::ostringstream os;
        const Relation& rel = relations_[idx];
        bool first = true;
        for (const auto& t : rel.terms) {
            if (!first) os << " + ";
            first = false;
            os << t.coeff << "*";
            for (std::size_t i = 0; i < t.word.size(); ++i) {
                if (i) os << ".";
                os << quiver_.arrows[t.word[i]].name;
            }
        }
        return os.str();
    }

    std::string content_key() const override {
        std::ostringstream os;
        os << "quiver:p=" << field_.modulus() << ";v=";
        for (const auto& v : quiver_.vertices) os << v << ",";
        os << ";a=";
        for (const auto& a : quiver_.arrows) os << a.name << ":" << a.src << ">" << a.tgt << ",";
        os << ";r=";
        for (std::size_t i = 0; i < relations_.size(); ++i) os << render_relation(i) << "|";
        return os.str();
    }

private:
    QuiverAlgebra(PrimeField f, Quiver q, std::vector<Relation> rels)
        : RepCategory(f, q.vertices, arrows_to_gens(q)), quiver_(std::move(q)),
          relations_(std::move(rels)) {
        check_relations();
    }

    static std::vector<Gen> arrows_to_gens(const Quiver& q) {
        std::vector<Gen> gens;
        for (const auto& a : q.arrows) gens.push_back(Gen{a.src, a.tgt, true});
        return gens;
    }

    void check_relations() const {
        for (const auto& r : relations_) {
            if (r.terms.empty()) throw input_error("empty relation");
            std::size_t len = r.terms[0].word.size();
            if (len < 2) throw input_error("relation path shorter than 2 (not admissible)");
            std::uint32_t src = 0, tgt = 0;
            bool first = true;
            for (const auto& t : r.terms) {
                if (t.word.size() != len)
                    throw input_error("relation mixes path lengths (must be length-homogeneous)");
                if (t.word.empty()) throw input_error("empty relation path");
                for (std::size_t i = 0; i < t.word.size(); ++i) {
                    if (t.word[i] >= quiver_.arrows.size())
                        throw input_error("relation references unknown arrow");
                    if (i + 1 < t.word.size() &&
                        quiver_.arrows[t.word[i]].tgt != quiver_.arrows[t.word[i + 1]].src)
                        throw input_error("relation path is not composable");
                }
                std::uint32_t s = quiver_.arrows[t.word.front()].src;
                std::uint32_t e = quiver_.arrows[t.word.back()].tgt;
                if (first) {
                    src = s;
                    tgt = e;
                    first = false;
                } else if (s != src || e != tgt) {
                    throw input_error("relation terms do not share source and target");
                }
            }
        }
    }

    void build_paths() {
        constexpr std::uint32_t kMaxGrade = 64;
        constexpr std::size_t kMaxPaths = 200000;
        // grade 0: trivial paths
        std::vector<std::uint32_t> level;
        for (std::uint32_t v = 0; v < slot_count(); ++v) {
            paths_.push_back(detail::PathInfo{v, v, {}});
            auto id = static_cast<std::uint32_t>(paths_.size() - 1);
            level.push_back(id);
            normal_form_.push_back({{id, 1}});
            basis_order_.push_back(id);
        }
        for (std::uint32_t grade = 1; grade <= kMaxGrade; ++grade) {
            std::vector<std::uint32_t> next;
            for (auto pid : level) {
                for (std::uint32_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
                    if (quiver_.arrows[ai].src != paths_[pid].tgt) continue;
                    detail::PathInfo np{paths_[pid].src, quiver_.arrows[ai].tgt, paths_[pid].word};
                    np.word.push_back(ai);
                    paths_.push_back(std::move(np));
                    auto id = static_cast<std::uint32_t>(paths_.size() - 1);
                    word_index_[paths_[id].word] = id;
                    next.push_back(id);
                    normal_form_.push_back({});
                }
            }
            if (paths_.size() > kMaxPaths)
                throw input_error("path algebra too large (is the algebra finite-dimensional?)");
            if (next.empty()) return; // no paths of this grade at all
            bool all_eliminated = reduce_grade(grade, next);
            if (all_eliminated) return;
            level = std::move(next);
        }
        throw input_error("algebra not finite-dimensional within path-length budget");
    }

    /// Quotient the grade's path span by all relation shifts of that grade.
    /// Returns true when every path of the grade reduces to zero.
    bool reduce_grade(std::uint32_t grade, const std::vector<std::uint32_t>& grade_paths) {
        // group by (src, tgt)
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> groups;
        for (auto pid : grade_paths) groups[{paths_[pid].src, paths_[pid].tgt}].push_back(pid);
        bool all_eliminated = true;
        for (auto& [key, ids] : groups) {
            std::map<std::uint32_t, std::uint32_t> col_of;
            for (std::uint32_t c = 0; c < ids.size(); ++c) col_of[ids[c]] = c;
            // rows: shifts prefix . relation . suffix landing in this group
            std::vector<std::vector<std::uint32_t>> rows;
            for (const auto& rel : relations_) {
                std::size_t rlen = rel.terms[0].word.size();
                if (rlen > grade) continue;
                std::uint32_t rsrc = quiver_.arrows[rel.terms[0].word.front()].src;
                std::uint32_t rtgt = quiver_.arrows[rel.terms[0].word.back()].tgt;
                for (std::uint32_t plen = 0; plen + rlen <= grade; ++plen) {
                    std::uint32_t qlen = grade - static_cast<std::uint32_t>(rlen) - plen;
                    for (const auto& pre : paths_of(plen, key.first, rsrc))
                        for (const auto& suf : paths_of(qlen, rtgt, key.second)) {
                            std::vector<std::uint32_t> row(ids.size(), 0);
                            for (const auto& t : rel.terms) {
                                std::vector<std::uint32_t> w = paths_[pre].word;
                                w.insert(w.end(), t.word.begin(), t.word.end());
                                w.insert(w.end(), paths_[suf].word.begin(), paths_[suf].word.end());
                                auto it = word_index_.find(w);
                                if (it == word_index_.end())
                                    throw invariant_error("relation shift path missing");
                                row[col_of.at(it->second)] =
                                    field_.add(row[col_of.at(it->second)], t.coeff);
                            }
                            rows.push_back(std::move(row));
                        }
                }
            }
            Mat sys(field_, static_cast<std::uint32_t>(rows.size()),
                    static_cast<std::uint32_t>(ids.size()));
            for (std::uint32_t r = 0; r < rows.size(); ++r)
                for (std::uint32_t c = 0; c < ids.size(); ++c) sys.at(r, c) = rows[r][c];
            RrefResult rr = rref(sys);
            std::vector<bool> is_pivot(ids.size(), false);
            for (auto c : rr.pivots) is_pivot[c] = true;
            for (std::uint32_t r = 0; r < rr.rank; ++r) {
                std::uint32_t pc = rr.pivots[r];
                std::vector<std::pair<std::uint32_t, std::uint32_t>> nf;
                for (std::uint32_t c = 0; c < ids.size(); ++c)
                    if (!is_pivot[c] && rr.reduced.at(r, c))
                        nf.push_back({ids[c], field_.neg(rr.reduced.at(r, c))});
                normal_form_[ids[pc]] = std::move(nf);
            }
            for (std::uint32_t c = 0; c < ids.size(); ++c)
                if (!is_pivot[c]) {
                    normal_form_[ids[c]] = {{ids[c], 1}};
                    basis_order_.push_back(ids[c]);
                    all_eliminated = false;
                }
        }
        return all_eliminated;
    }

    std::vector<std::uint32_t> paths_of(std::uint32_t len, std::uint32_t src,
                                        std::uint32_t tgt) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t pid = 0; pid < paths_.size(); ++pid)
            if (paths_[pid].word.size() == len && paths_[pid].src == src && paths_[pid].tgt == tgt)
                out.push_back(pid);
        return out;
    }

    /// Normal form of a path word from `src` as a combination of basis paths.
    std::vector<std::pair<std::uint32_t, std::uint32_t>>
    normal_form_of_word(std::uint32_t src, const std::vector<std::uint32_t>& word) const {
        if (word.empty()) return {{src, 1}}; // trivial path ids coincide with vertex ids
        auto it = word_index_.find(word);
        if (it == word_index_.end()) return {}; // beyond the enumerated grades: zero
        return normal_form_[it->second];
    }

    static std::uint32_t position_in(const std::vector<std::uint32_t>& v, std::uint32_t x) {
        for (std::uint32_t i = 0; i < v.size(); ++i)
            if (v[i] == x) return i;
        throw invariant_error("basis path not found in slot list");
    }

    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<detail::PathInfo> paths_;
    std::map<std::vector<std::uint32_t>, std::uint32_t> word_index_;
    // expansion of every enumerated path in the surviving basis (empty = zero)
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> normal_form_;
    std::vector<std::uint32_t> basis_order_;
};

/// Validated module construction from raw matrices (the e_v A e_u data).
inline Rep make_module(std::shared_ptr<const QuiverAlgebra> alg, std::vector<std::uint32_t> dims,
                       std::vector<Mat> arrow_maps) {
    return make_rep(std::move(alg), std::move(dims), std::move(arrow_maps));
}

} // namespace ausl
