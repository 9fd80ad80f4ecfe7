#pragma once

#include <cstdint>
#include <random>

#include "auslander/field.hpp"

namespace ausl {

/// Seeded deterministic RNG. Uses plain modulo reduction instead of
/// std::uniform_int_distribution so that streams are identical across
/// standard library implementations (reports must be byte-stable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint32_t below(std::uint32_t n) {
        if (n == 0) throw contract_error("Rng::below(0)");
        return static_cast<std::uint32_t>(eng_() % n);
    }

    std::uint32_t field_element(const PrimeField& f) { return below(f.modulus()); }

    std::uint32_t nonzero_field_element(const PrimeField& f) {
        return 1 + below(f.modulus() - 1);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ausl
