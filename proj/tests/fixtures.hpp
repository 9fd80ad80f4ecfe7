#pragma once

// Shared corpus algebras for the test suites.

#include "auslander/quiver.hpp"

namespace fixtures {

using namespace ausl;

/// Path algebra of 1 -> 2 over F_p.
inline std::shared_ptr<const QuiverAlgebra> kA2(std::uint32_t p = 101) {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {Arrow{"a", 0, 1}};
    return QuiverAlgebra::create(PrimeField(p), q, {});
}

/// Path algebra of 1 -> 2 -> 3 modulo the length-two path (the Auslander
/// algebra of kA2).
inline std::shared_ptr<const QuiverAlgebra> gamma5(std::uint32_t p = 101) {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 2}};
    Relation r{{RelationTerm{1, {0, 1}}}}; // a then b
    return QuiverAlgebra::create(PrimeField(p), q, {r});
}

/// F_p x F_p: two vertices, no arrows.
inline std::shared_ptr<const QuiverAlgebra> semisimple2(std::uint32_t p = 101) {
    Quiver q;
    q.vertices = {"1", "2"};
    return QuiverAlgebra::create(PrimeField(p), q, {});
}

/// Hereditary A3: 1 -> 2 -> 3, no relations.
inline std::shared_ptr<const QuiverAlgebra> kA3(std::uint32_t p = 101) {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 2}};
    return QuiverAlgebra::create(PrimeField(p), q, {});
}

} // namespace fixtures
