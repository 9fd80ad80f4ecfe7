#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "auslander/endos.hpp"
#include "auslander/rep.hpp"

namespace ausl {

struct EnumerateOptions {
    /// Instance-level assertion: every indecomposable (of any dimension) has
    /// total dimension <= this bound. Enables the covers-all flag.
    std::optional<std::uint32_t> declared_all_indec_bound;
    std::uint32_t samples_per_dim_vector = 25;
    double brute_log2_budget = 14.5; // brute-force a dim vector when p^entries <= 2^budget
    std::uint32_t candidate_budget = 8; // splitter search budget per candidate
    std::uint32_t iso_budget = 64;
};

struct EnumerateResult {
    std::vector<Rep> indecomposables;
    /// Every dimension vector with total <= bound was provably exhausted.
    bool complete_up_to_bound = true;
    /// The list provably contains every indecomposable of the category, by
    /// combining exhaustion with the instance's declared bound.
    bool covers_all_indecomposables = false;
    bool decompositions_decided = true;
    std::string policy;
};

namespace detail {

inline void dim_vectors(std::uint32_t slots, std::uint32_t bound,
                        std::vector<std::uint32_t>& cur,
                        std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() == slots) {
        for (auto d : cur)
            if (d) {
                out.push_back(cur);
                return;
            }
        return; // skip the zero vector
    }
    for (std::uint32_t d = 0; d <= bound; ++d) {
        cur.push_back(d);
        std::uint32_t total = 0;
        for (auto x : cur) total += x;
        if (total <= bound) dim_vectors(slots, bound, cur, out);
        cur.pop_back();
    }
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) {
        for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

/// All indecomposable representations with total dimension <= bound, up to
/// isomorphism, with honesty flags describing how much of the search space
/// was provably exhausted.
///
/// Dimension vectors with every entry <= 1 are exhausted exactly: base change
/// is then a torus, so each orbit has a representative whose scalars are 1 on
/// a spanning forest of its support and arbitrary nonzero on the remaining
/// generators. Other dimension vectors are brute-forced when the entry space
/// is small enough and otherwise only sampled.
inline EnumerateResult enumerate_indecomposables(std::shared_ptr<const RepCategory> cat,
                                                 std::uint32_t bound, Rng& rng,
                                                 const EnumerateOptions& opts = {}) {
    if (bound < 1) throw contract_error("enumerate_indecomposables: bound must be >= 1");
    const PrimeField& f = cat->field();
    const auto& gens = cat->generators();
    EnumerateResult out;

    std::vector<Rep> pool;
    // A decomposable candidate can be skipped outright: its summands have
    // strictly smaller dimension vectors, which are enumerated on their own.
    auto add_candidate = [&](const Rep& r) {
        if (r.is_zero() || r.total_dim() > bound) return;
        bool known = false;
        for (const auto& q : pool)
            if (q.dims == r.dims && is_isomorphic(q, r, rng, opts.iso_budget)) {
                known = true;
                break;
            }
        if (known) return;
        EndAnalysis an = analyze_end(r, rng, opts.candidate_budget);
        if (an.status == EndAnalysis::Status::split) return;
        if (an.status == EndAnalysis::Status::undecided) {
            out.decompositions_decided = false;
            return;
        }
        pool.push_back(r);
    };

    // seeds: projectives and their tops (cheap and always indecomposable)
    for (std::uint32_t s = 0; s < cat->slot_count(); ++s) {
        Rep p = cat->projective_at(s);
        if (p.total_dim() <= bound) add_candidate(p);
        Rep t = top_quotient(p).object;
        if (t.total_dim() <= bound) add_candidate(t);
    }

    std::vector<std::vector<std::uint32_t>> dvs;
    std::vector<std::uint32_t> cur;
    detail::dim_vectors(cat->slot_count(), bound, cur, dvs);
    std::sort(dvs.begin(), dvs.end(), [](const auto& a, const auto& b) {
        std::uint32_t ta = 0, tb = 0;
        for (auto x : a) ta += x;
        for (auto x : b) tb += x;
        if (ta != tb) return ta < tb;
        return a < b;
    });

    std::uint32_t exhausted_below = bound + 1; // min total dim NOT exhausted
    bool all_exhausted = true;

    for (const auto& d : dvs) {
        std::uint32_t total = 0;
        for (auto x : d) total += x;
        std::vector<std::uint32_t> cand; // generator indices alive on this dim vector
        std::size_t entries = 0;
        bool multiplicity_free = true;
        for (auto x : d)
            if (x > 1) multiplicity_free = false;
        for (std::uint32_t g = 0; g < gens.size(); ++g)
            if (d[gens[g].from] > 0 && d[gens[g].to] > 0) {
                cand.push_back(g);
                entries += std::size_t(d[gens[g].from]) * d[gens[g].to];
            }

        auto build = [&](const std::vector<std::uint32_t>& scalars_or_entries,
                         bool as_entries) -> std::optional<Rep> {
            std::vector<Mat> maps;
            for (std::uint32_t g = 0; g < gens.size(); ++g)
                maps.emplace_back(f, d[gens[g].to], d[gens[g].from]);
            std::size_t k = 0;
            for (std::uint32_t ci = 0; ci < cand.size(); ++ci) {
                Mat& m = maps[cand[ci]];
                if (as_entries) {
                    for (std::uint32_t i = 0; i < m.rows(); ++i)
                        for (std::uint32_t j = 0; j < m.cols(); ++j)
                            m.at(i, j) = scalars_or_entries[k++];
                } else {
                    m.at(0, 0) = scalars_or_entries[ci];
                }
            }
            Rep r{cat, d, std::move(maps)};
            if (cat->validate(r)) return std::nullopt;
            return r;
        };

        bool exhausted = false;
        if (multiplicity_free && cand.size() <= 16) {
            // orbit-exhaustive: subsets of live generators with forest scalars 1
            exhausted = true;
            for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
                std::vector<std::uint32_t> chosen;
                for (std::uint32_t ci = 0; ci < cand.size(); ++ci)
                    if (mask & (1u << ci)) chosen.push_back(ci);
                // spanning forest over the undirected support graph
                detail::UnionFind uf(cat->slot_count());
                std::vector<std::uint32_t> extra; // positions in `chosen` off the forest
                for (std::uint32_t ciPos = 0; ciPos < chosen.size(); ++ciPos) {
                    const Gen& g = gens[cand[chosen[ciPos]]];
                    if (!uf.unite(g.from, g.to)) extra.push_back(ciPos);
                }
                double log2space = double(extra.size()) * std::log2(double(f.modulus() - 1));
                if (log2space > opts.brute_log2_budget) {
                    exhausted = false;
                    continue;
                }
                std::vector<std::uint32_t> extra_vals(extra.size(), 1);
                for (;;) {
                    std::vector<std::uint32_t> scalars(cand.size(), 0);
                    for (std::uint32_t ciPos = 0; ciPos < chosen.size(); ++ciPos)
                        scalars[chosen[ciPos]] = 1;
                    for (std::size_t e = 0; e < extra.size(); ++e)
                        scalars[chosen[extra[e]]] = extra_vals[e];
                    if (auto r = build(scalars, false)) add_candidate(*r);
                    // next assignment over (F_p^*)^extra
                    std::size_t e = 0;
                    while (e < extra.size() && extra_vals[e] == f.modulus() - 1)
                        extra_vals[e++] = 1;
                    if (e == extra.size()) break;
                    extra_vals[e]++;
                }
            }
        } else if (double(entries) * std::log2(double(f.modulus())) <= opts.brute_log2_budget) {
            // brute force every entry tuple
            exhausted = true;
            std::vector<std::uint32_t> vals(entries, 0);
            for (;;) {
                if (auto r = build(vals, true)) add_candidate(*r);
                std::size_t e = 0;
                while (e < entries && vals[e] == f.modulus() - 1) vals[e++] = 0;
                if (e == entries) break;
                vals[e]++;
            }
        }

        if (!exhausted) {
            all_exhausted = false;
            exhausted_below = std::min(exhausted_below, total);
            for (std::uint32_t t = 0; t < opts.samples_per_dim_vector; ++t) {
                std::vector<std::uint32_t> vals(entries);
                for (auto& v : vals) v = rng.field_element(f);
                if (auto r = build(vals, true)) add_candidate(*r);
            }
        }
    }

    out.complete_up_to_bound = all_exhausted;
    if (opts.declared_all_indec_bound) {
        std::uint32_t decl = *opts.declared_all_indec_bound;
        out.covers_all_indecomposables =
            bound >= decl && exhausted_below > std::min(bound, decl);
    } else {
        out.covers_all_indecomposables = false;
    }
    if (!out.decompositions_decided) {
        out.complete_up_to_bound = false;
        out.covers_all_indecomposables = false;
    }

    std::sort(pool.begin(), pool.end(), [](const Rep& a, const Rep& b) {
        if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
        return a.dims < b.dims;
    });
    out.indecomposables = std::move(pool);

    std::ostringstream pol;
    pol << "dim vectors <= " << bound
        << "; torus-exhaustive on multiplicity-free vectors; brute force when p^entries <= 2^"
        << opts.brute_log2_budget << "; " << opts.samples_per_dim_vector
        << " samples otherwise";
    if (opts.declared_all_indec_bound)
        pol << "; declared indecomposable bound " << *opts.declared_all_indec_bound;
    out.policy = pol.str();
    return out;
}

} // namespace ausl
