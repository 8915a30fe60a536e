/*
   Copyright 2026 the ffec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file field.hpp
 * @brief Coefficient fields for the whole library.
 *
 * A field type F exposes an element type `F::Elem`, a context type `F::Ctx`
 * (empty for the rationals, the modulus for a prime field) and static
 * arithmetic taking the context first. Polynomials, rational functions,
 * curves and isogenies are all templates over such an F, so the same code
 * runs over Q and over F_p; a third model (`FuncField`, in ratfunc.hpp)
 * makes the rational function field itself usable as a coefficient field.
 */

#ifndef FFEC_FIELD_HPP
#define FFEC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ffec/arith.hpp"
#include "ffec/bigint.hpp"

namespace ffec {

/// The rationals Q with exact arithmetic.
struct RatField {
    using Elem = Rat;
    struct Ctx {
        bool operator==(const Ctx&) const = default;
    };

    static constexpr std::uint64_t characteristic(Ctx) { return 0; }
    static Elem zero(Ctx) { return Rat(0); }
    static Elem one(Ctx) { return Rat(1); }
    static Elem from_int(Ctx, const Int& n) { return Rat(n); }
    static Elem from_long(Ctx, long n) { return Rat(n); }
    static bool is_zero(Ctx, const Elem& a) { return a == 0; }
    static bool eq(Ctx, const Elem& a, const Elem& b) { return a == b; }
    static Elem add(Ctx, const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(Ctx, const Elem& a, const Elem& b) { return a - b; }
    static Elem neg(Ctx, const Elem& a) { return -a; }
    static Elem mul(Ctx, const Elem& a, const Elem& b) { return a * b; }
    static Elem inv(Ctx, const Elem& a) {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    static Elem div(Ctx, const Elem& a, const Elem& b) { return a * inv({}, b); }
    static Elem pow_u(Ctx c, Elem a, std::uint64_t e) {
        Elem r = one(c);
        while (e) {
            if (e & 1) r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }
    /// Exact square root when one exists.
    static bool sqrt(Ctx, const Elem& a, Elem& out) { return rat_sqrt(a, out); }
    static std::string to_string(Ctx, const Elem& a) { return ffec::to_string(a); }
};

/// The prime field F_p for a word-sized prime p. Elements are residues in
/// [0, p); products go through a 128-bit intermediate, so no modulus
/// restriction beyond the word size applies.
struct PrimeField {
    using Elem = std::uint64_t;
    struct Ctx {
        std::uint64_t p = 0;
        bool operator==(const Ctx&) const = default;
    };

    static Ctx make(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::domain_error("PrimeField: modulus is not prime");
        if (p >= (1ull << 62)) throw std::domain_error("PrimeField: modulus too large");
        return Ctx{p};
    }

    static std::uint64_t characteristic(Ctx c) { return c.p; }
    static Elem zero(Ctx) { return 0; }
    static Elem one(Ctx c) { return 1 % c.p; }
    static Elem from_int(Ctx c, const Int& n) {
        Int r = n % Int(c.p);
        if (r < 0) r += Int(c.p);
        return r.get_ui();
    }
    static Elem from_long(Ctx c, long n) { return from_int(c, Int(n)); }
    static bool is_zero(Ctx, const Elem& a) { return a == 0; }
    static bool eq(Ctx, const Elem& a, const Elem& b) { return a == b; }
    static Elem add(Ctx c, const Elem& a, const Elem& b) {
        Elem r = a + b;
        if (r >= c.p) r -= c.p;
        return r;
    }
    static Elem sub(Ctx c, const Elem& a, const Elem& b) { return b <= a ? a - b : a + (c.p - b); }
    static Elem neg(Ctx c, const Elem& a) { return a == 0 ? 0 : c.p - a; }
    static Elem mul(Ctx c, const Elem& a, const Elem& b) { return mulmod_u64(a, b, c.p); }
    static Elem inv(Ctx c, const Elem& a) {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return powmod_u64(a, c.p - 2, c.p);
    }
    static Elem div(Ctx c, const Elem& a, const Elem& b) { return mul(c, a, inv(c, b)); }
    static Elem pow_u(Ctx c, Elem a, std::uint64_t e) { return powmod_u64(a, e, c.p); }

    /// Square root mod p (Tonelli-Shanks); returns false for non-residues.
    static bool sqrt(Ctx c, const Elem& a, Elem& out) {
        const std::uint64_t p = c.p;
        if (a == 0) { out = 0; return true; }
        if (p == 2) { out = a; return true; }
        if (powmod_u64(a, (p - 1) / 2, p) != 1) return false;
        if (p % 4 == 3) { out = powmod_u64(a, (p + 1) / 4, p); return true; }
        std::uint64_t q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        std::uint64_t z = 2;
        while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
        std::uint64_t m = s;
        std::uint64_t cc = powmod_u64(z, q, p);
        std::uint64_t t = powmod_u64(a, q, p);
        std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t t2 = t;
            unsigned i = 0;
            while (t2 != 1) { t2 = mulmod_u64(t2, t2, p); ++i; }
            std::uint64_t b = cc;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
            m = i;
            cc = mulmod_u64(b, b, p);
            t = mulmod_u64(t, cc, p);
            r = mulmod_u64(r, b, p);
        }
        out = r;
        return true;
    }
    static std::string to_string(Ctx, const Elem& a) { return std::to_string(a); }
};

/// Runtime descriptor of the constant field: Q, or F_p for a prime p.
struct BaseField {
    std::uint64_t p = 0;  // 0 means Q

    bool is_rational() const { return p == 0; }
    bool operator==(const BaseField&) const = default;

    static BaseField rationals() { return BaseField{0}; }
    static BaseField prime(std::uint64_t p) {
        (void)PrimeField::make(p);
        return BaseField{p};
    }
};

}  // namespace ffec

#endif
