#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auslander/endos.hpp"
#include "auslander/rep.hpp"

namespace ausl {

/// A finite additive subcategory add(M_1 + ... + M_r) of the ambient module
/// category, presented by pairwise non-isomorphic indecomposables. Closure
/// under sums and summands holds by construction; the constructor re-checks
/// indecomposability (local endomorphism rings) and pairwise non-isomorphy.
struct SubcategorySpec {
    std::shared_ptr<const RepCategory> ambient;
    std::vector<Rep> members;
    std::vector<std::string> names;

    std::uint32_t size() const { return static_cast<std::uint32_t>(members.size()); }
};

inline SubcategorySpec make_subcategory(std::shared_ptr<const RepCategory> ambient,
                                        std::vector<Rep> members, std::vector<std::string> names,
                                        Rng& rng) {
    if (members.empty()) throw input_error("subcategory needs at least one member");
    if (names.size() != members.size()) throw contract_error("subcategory: names/members mismatch");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].cat.get() != ambient.get())
            throw contract_error("subcategory member over a different ambient category");
        if (members[i].is_zero()) throw input_error("subcategory member is the zero module");
        EndAnalysis an = analyze_end(members[i], rng);
        if (an.status == EndAnalysis::Status::split)
            throw input_error("subcategory member '" + names[i] + "' is decomposable");
        if (an.status == EndAnalysis::Status::undecided)
            throw input_error("could not certify indecomposability of member '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (members[i].dims == members[j].dims && is_isomorphic(members[i], members[j], rng))
                throw input_error("subcategory members '" + names[j] + "' and '" + names[i] +
                                  "' are isomorphic");
    }
    return SubcategorySpec{std::move(ambient), std::move(members), std::move(names)};
}

/// Index of the member isomorphic to r, if any.
inline std::optional<std::uint32_t> find_member(const SubcategorySpec& spec, const Rep& r,
                                                Rng& rng) {
    for (std::uint32_t i = 0; i < spec.members.size(); ++i)
        if (spec.members[i].dims == r.dims && is_isomorphic(spec.members[i], r, rng))
            return i;
    return std::nullopt;
}

/// Multiplicities of members in r, when r lies in add(M). nullopt when some
/// summand does not match a member (or could not be certified).
inline std::optional<std::vector<std::uint32_t>> in_add(const SubcategorySpec& spec, const Rep& r,
                                                        Rng& rng) {
    std::vector<std::uint32_t> mult(spec.members.size(), 0);
    if (r.is_zero()) return mult;
    DecomposeResult dec = decompose(r, rng);
    if (!dec.decided) return std::nullopt;
    for (const auto& s : dec.summands) {
        auto idx = find_member(spec, s.rep, rng);
        if (!idx) return std::nullopt;
        mult[*idx]++;
    }
    return mult;
}

} // namespace ausl
