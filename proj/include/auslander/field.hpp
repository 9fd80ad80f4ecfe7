#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ausl {

/// Raised when a caller violates a documented precondition.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised when an internal self-check fails; indicates a bug, not bad input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised on malformed user input (instance files, CLI arguments).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic in the prime field F_p. Elements are canonical representatives
/// in [0, p). The modulus is a runtime value so instances over different
/// primes can coexist.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw input_error("modulus not prime: " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw contract_error("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    /// Reduce an arbitrary signed integer into [0, p).
    std::uint32_t from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += p_;
        return static_cast<std::uint32_t>(m);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

} // namespace ausl
