#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "auslander/quiver.hpp"

namespace ausl {

using ojson = nlohmann::ordered_json;

/// A parsed problem instance: the algebra, corpus metadata and any named
/// subcategories. The canonical JSON form is a stable function of the
/// content (fixed key order, all vertices and arrows materialized), so
/// parse ∘ emit is the identity on canonical forms.
struct Instance {
    std::string name;
    std::uint32_t p = 0;
    std::shared_ptr<const QuiverAlgebra> algebra;
    bool rep_finite_declared = false;
    std::optional<std::uint32_t> indec_dim_bound;
    std::uint32_t default_n = 1;
    std::uint32_t functor_dim_bound = 4;
    std::uint32_t resolution_length = 4;
    std::vector<std::pair<std::string, std::vector<Rep>>> subcategories;
};

namespace detail {

inline Mat parse_matrix(const ojson& j, const PrimeField& f, std::uint32_t rows,
                        std::uint32_t cols, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": matrix must be an array of rows");
    if (j.size() != rows) throw input_error(where + ": expected " + std::to_string(rows) + " rows");
    Mat m(f, rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r) {
        const ojson& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw input_error(where + ": row " + std::to_string(r) + " must have " +
                              std::to_string(cols) + " entries");
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer())
                throw input_error(where + ": entries must be integers");
            m.at(r, c) = f.from_int(row[c].get<std::int64_t>());
        }
    }
    return m;
}

inline ojson emit_matrix(const Mat& m) {
    ojson rows = ojson::array();
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::uint32_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

inline Instance parse_instance_json(const ojson& j, const std::string& where) {
    Instance inst;
    if (!j.is_object()) throw input_error(where + ": instance must be a JSON object");
    if (!j.contains("schema") || j["schema"] != "auslander-instance/1")
        throw input_error(where + ": missing or unsupported schema (want auslander-instance/1)");
    inst.name = j.value("name", std::string("unnamed"));
    if (!j.contains("field") || !j["field"].is_object() || !j["field"].contains("p") ||
        !j["field"]["p"].is_number_integer())
        throw input_error(where + ": field.p missing");
    std::int64_t p = j["field"]["p"].get<std::int64_t>();
    if (p < 2 || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
        throw input_error(where + ": modulus not prime: " + std::to_string(p));
    inst.p = static_cast<std::uint32_t>(p);
    PrimeField f(inst.p);

    if (!j.contains("quiver") || !j["quiver"].is_object())
        throw input_error(where + ": quiver missing");
    Quiver q;
    for (const auto& v : j["quiver"].value("vertices", ojson::array())) {
        if (!v.is_string()) throw input_error(where + ": vertex names must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    if (q.vertices.empty()) throw input_error(where + ": quiver needs at least one vertex");
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (q.vertices[i] == q.vertices[k])
                throw input_error(where + ": duplicate vertex name " + q.vertices[i]);
    for (const auto& a : j["quiver"].value("arrows", ojson::array())) {
        if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
            throw input_error(where + ": arrow needs name/from/to");
        Arrow arrow;
        arrow.name = a["name"].get<std::string>();
        arrow.src = q.vertex_index(a["from"].get<std::string>());
        arrow.tgt = q.vertex_index(a["to"].get<std::string>());
        for (const auto& other : q.arrows)
            if (other.name == arrow.name)
                throw input_error(where + ": duplicate arrow name " + arrow.name);
        q.arrows.push_back(std::move(arrow));
    }

    std::vector<Relation> rels;
    for (const auto& r : j.value("relations", ojson::array())) {
        if (!r.is_array() || r.empty())
            throw input_error(where + ": each relation is a nonempty array of terms");
        Relation rel;
        for (const auto& t : r) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("path"))
                throw input_error(where + ": relation term needs coeff and path");
            RelationTerm term;
            term.coeff = f.from_int(t["coeff"].get<std::int64_t>());
            for (const auto& an : t["path"]) term.word.push_back(q.arrow_index(an.get<std::string>()));
            rel.terms.push_back(std::move(term));
        }
        rels.push_back(std::move(rel));
    }
    inst.algebra = QuiverAlgebra::create(f, q, rels); // validates admissibility etc.

    if (j.contains("rep_finite")) {
        const auto& rf = j["rep_finite"];
        inst.rep_finite_declared = rf.value("declared", false);
        if (rf.contains("indec_dim_bound"))
            inst.indec_dim_bound = rf["indec_dim_bound"].get<std::uint32_t>();
        if (inst.rep_finite_declared && !inst.indec_dim_bound)
            throw input_error(where + ": rep_finite.declared requires indec_dim_bound");
    }
    inst.default_n = j.value("default_n", 1u);
    if (inst.default_n < 1) throw input_error(where + ": default_n must be >= 1");
    if (j.contains("test_family")) {
        inst.functor_dim_bound = j["test_family"].value("functor_dim_bound", 4u);
        inst.resolution_length = j["test_family"].value("resolution_length", 4u);
    }

    const auto& quiver = inst.algebra->quiver();
    ojson subs_json = j.value("subcategories", ojson::object());
    for (const auto& [sname, mods] : subs_json.items()) {
        std::vector<Rep> members;
        std::uint32_t mi = 0;
        for (const auto& mj : mods) {
            std::string mwhere = where + ": subcategory '" + sname + "' module #" +
                                 std::to_string(mi++);
            if (!mj.is_object() || !mj.contains("dims"))
                throw input_error(mwhere + ": needs dims");
            std::vector<std::uint32_t> dims(quiver.vertices.size(), 0);
            for (const auto& [vn, dv] : mj["dims"].items())
                dims[quiver.vertex_index(vn)] = dv.get<std::uint32_t>();
            std::vector<Mat> maps;
            for (const auto& a : quiver.arrows) {
                std::uint32_t rows = dims[a.tgt], cols = dims[a.src];
                if (mj.contains("arrows") && mj["arrows"].contains(a.name))
                    maps.push_back(detail::parse_matrix(mj["arrows"][a.name], f, rows, cols,
                                                        mwhere + " arrow " + a.name));
                else
                    maps.emplace_back(f, rows, cols);
            }
            try {
                members.push_back(make_module(inst.algebra, dims, maps));
            } catch (const std::exception& e) {
                throw input_error(mwhere + ": " + e.what());
            }
        }
        inst.subcategories.emplace_back(sname, std::move(members));
    }
    return inst;
}

inline Instance parse_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open instance file");
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error(path + ": malformed JSON: " + e.what());
    }
    return parse_instance_json(j, path);
}

/// Canonical emission: fixed key order, every vertex and arrow materialized.
inline ojson emit_instance(const Instance& inst) {
    const auto& q = inst.algebra->quiver();
    ojson j;
    j["schema"] = "auslander-instance/1";
    j["name"] = inst.name;
    j["field"] = ojson{{"p", inst.p}};
    ojson quiver;
    quiver["vertices"] = q.vertices;
    ojson arrows = ojson::array();
    for (const auto& a : q.arrows)
        arrows.push_back(ojson{{"name", a.name}, {"from", q.vertices[a.src]},
                               {"to", q.vertices[a.tgt]}});
    quiver["arrows"] = std::move(arrows);
    j["quiver"] = std::move(quiver);
    ojson rels = ojson::array();
    for (const auto& r : inst.algebra->relations()) {
        ojson rel = ojson::array();
        for (const auto& t : r.terms) {
            ojson paths = ojson::array();
            for (auto ai : t.word) paths.push_back(q.arrows[ai].name);
            rel.push_back(ojson{{"coeff", t.coeff}, {"path", std::move(paths)}});
        }
        rels.push_back(std::move(rel));
    }
    j["relations"] = std::move(rels);
    ojson rf;
    rf["declared"] = inst.rep_finite_declared;
    if (inst.indec_dim_bound) rf["indec_dim_bound"] = *inst.indec_dim_bound;
    j["rep_finite"] = std::move(rf);
    j["default_n"] = inst.default_n;
    j["test_family"] = ojson{{"functor_dim_bound", inst.functor_dim_bound},
                             {"resolution_length", inst.resolution_length}};
    ojson subs = ojson::object();
    for (const auto& [sname, members] : inst.subcategories) {
        ojson mods = ojson::array();
        for (const auto& m : members) {
            ojson mj;
            ojson dims;
            for (std::uint32_t v = 0; v < q.vertices.size(); ++v)
                dims[q.vertices[v]] = m.dims[v];
            mj["dims"] = std::move(dims);
            ojson amaps;
            for (std::uint32_t ai = 0; ai < q.arrows.size(); ++ai)
                amaps[q.arrows[ai].name] = detail::emit_matrix(m.maps[ai]);
            mj["arrows"] = std::move(amaps);
            mods.push_back(std::move(mj));
        }
        subs[sname] = std::move(mods);
    }
    j["subcategories"] = std::move(subs);
    return j;
}

} // namespace ausl
