#pragma once

#include <cstdint>
#include <vector>

#include "auslander/field.hpp"
#include "auslander/rng.hpp"

namespace ausl {

/// Dense univariate polynomials over F_p, coefficient i = coefficient of t^i.
/// Just enough machinery for minimal polynomials and their factorization
/// (squarefree + distinct-degree + Cantor-Zassenhaus splitting).
struct Poly {
    std::vector<std::uint32_t> c;

    static Poly zero() { return Poly{{}}; }
    static Poly one() { return Poly{{1}}; }

    bool is_zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline Poly poly_add(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.add(r.c[i], b.c[i]);
    r.trim();
    return r;
}

inline Poly poly_scale(const PrimeField& f, const Poly& a, std::uint32_t s) {
    Poly r = a;
    for (auto& x : r.c) x = f.mul(x, s);
    r.trim();
    return r;
}

inline Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    return r;
}

inline Poly poly_mod(const PrimeField& f, Poly a, const Poly& m) {
    if (m.is_zero()) throw contract_error("poly_mod by zero");
    a.trim();
    while (!a.is_zero() && a.degree() >= m.degree()) {
        std::uint32_t q = f.div(a.c.back(), m.c.back());
        std::size_t shift = a.degree() - m.degree();
        for (std::size_t i = 0; i < m.c.size(); ++i)
            a.c[i + shift] = f.sub(a.c[i + shift], f.mul(q, m.c[i]));
        a.trim();
    }
    return a;
}

inline Poly poly_divexact(const PrimeField& f, Poly a, const Poly& d) {
    Poly q = Poly::zero();
    a.trim();
    if (a.is_zero()) return q;
    q.c.assign(a.degree() - d.degree() + 1, 0);
    while (!a.is_zero() && a.degree() >= d.degree()) {
        std::uint32_t qc = f.div(a.c.back(), d.c.back());
        std::size_t shift = a.degree() - d.degree();
        q.c[shift] = qc;
        for (std::size_t i = 0; i < d.c.size(); ++i)
            a.c[i + shift] = f.sub(a.c[i + shift], f.mul(qc, d.c[i]));
        a.trim();
    }
    if (!a.is_zero()) throw invariant_error("poly_divexact: nonzero remainder");
    q.trim();
    return q;
}

inline Poly poly_monic(const PrimeField& f, Poly a) {
    a.trim();
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.c.back()));
}

inline Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        Poly r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

inline Poly poly_derivative(const PrimeField& f, const Poly& a) {
    Poly r;
    if (a.c.size() <= 1) return Poly::zero();
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = f.mul(a.c[i], f.from_int(static_cast<std::int64_t>(i)));
    r.trim();
    return r;
}

inline Poly poly_powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::one();
    base = poly_mod(f, base, m);
    while (e) {
        if (e & 1) r = poly_mod(f, poly_mul(f, r, base), m);
        base = poly_mod(f, poly_mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

namespace detail {

inline void squarefree_parts(const PrimeField& f, Poly a, std::vector<Poly>& out) {
    // collect the distinct monic irreducible-free squarefree factors of a
    a = poly_monic(f, a);
    if (a.degree() == 0) return;
    Poly d = poly_derivative(f, a);
    if (d.is_zero()) {
        // a = g(t^p); over F_p coefficients are their own p-th roots
        Poly g;
        g.c.resize(a.degree() / f.modulus() + 1, 0);
        for (std::size_t i = 0; i < g.c.size(); ++i) g.c[i] = a.c[i * f.modulus()];
        squarefree_parts(f, g, out);
        return;
    }
    Poly g = poly_gcd(f, a, d);
    Poly sqf = poly_divexact(f, a, g); // squarefree part (deg >= 1)
    out.push_back(poly_monic(f, sqf));
    if (g.degree() > 0) squarefree_parts(f, g, out);
}

inline void factor_squarefree(const PrimeField& f, const Poly& a, Rng& rng,
                              std::vector<Poly>& out) {
    // a monic squarefree; Cantor-Zassenhaus
    if (a.degree() == 0) return;
    if (a.degree() == 1) {
        out.push_back(a);
        return;
    }
    // distinct-degree: strip factors of each degree d
    Poly rest = a;
    Poly x{{0, 1}};
    Poly h = x;
    for (std::size_t d = 1; rest.degree() >= 1 && d <= rest.degree(); ++d) {
        h = poly_powmod(f, h, f.modulus(), rest); // h = x^(p^d) mod rest
        Poly g = poly_gcd(f, poly_add(f, h, poly_scale(f, x, f.neg(1))), rest);
        if (g.degree() > 0) {
            // g = product of all irreducible factors of degree d
            std::vector<Poly> stack{g};
            while (!stack.empty()) {
                Poly cur = stack.back();
                stack.pop_back();
                if (cur.degree() == d) {
                    out.push_back(poly_monic(f, cur));
                    continue;
                }
                // equal-degree splitting
                for (;;) {
                    Poly r;
                    r.c.resize(cur.degree(), 0);
                    for (auto& cc : r.c) cc = rng.field_element(f);
                    r.trim();
                    if (r.is_zero()) continue;
                    Poly t;
                    if (f.modulus() == 2) {
                        // trace map sum_{i<d} r^(2^i)
                        t = Poly::zero();
                        Poly cur_r = poly_mod(f, r, cur);
                        for (std::size_t i = 0; i < d; ++i) {
                            t = poly_add(f, t, cur_r);
                            cur_r = poly_mod(f, poly_mul(f, cur_r, cur_r), cur);
                        }
                    } else {
                        std::uint64_t e = 1;
                        for (std::size_t i = 0; i < d; ++i) e *= f.modulus();
                        t = poly_powmod(f, r, (e - 1) / 2, cur);
                        t = poly_add(f, t, poly_scale(f, Poly::one(), f.neg(1)));
                    }
                    Poly g2 = poly_gcd(f, t, cur);
                    if (g2.degree() > 0 && g2.degree() < cur.degree()) {
                        stack.push_back(g2);
                        stack.push_back(poly_divexact(f, cur, g2));
                        break;
                    }
                }
            }
            rest = poly_divexact(f, rest, g);
        }
    }
    if (rest.degree() > 0) out.push_back(poly_monic(f, rest));
}

} // namespace detail

/// Distinct monic irreducible factors of a (multiplicities dropped).
inline std::vector<Poly> poly_distinct_irreducible_factors(const PrimeField& f, const Poly& a,
                                                           Rng& rng) {
    std::vector<Poly> sqf;
    detail::squarefree_parts(f, a, sqf);
    std::vector<Poly> out;
    for (const auto& s : sqf) detail::factor_squarefree(f, s, rng, out);
    // dedupe (repeated squarefree layers share factors)
    std::vector<Poly> uniq;
    for (const auto& p : out) {
        bool seen = false;
        for (const auto& q : uniq)
            if (p.c == q.c) seen = true;
        if (!seen) uniq.push_back(p);
    }
    return uniq;
}

} // namespace ausl
