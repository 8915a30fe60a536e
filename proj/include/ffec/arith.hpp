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
 * @file arith.hpp
 * @brief Elementary multiplicative number theory on machine-word integers:
 *        trial-division factorization, Legendre symbol, Euler phi, sigma.
 *
 * Everything here is sized for desk-scale inputs (N in the thousands, the
 * occasional word-sized prime); no attempt is made at sub-exponential
 * factoring.
 */

#ifndef FFEC_ARITH_HPP
#define FFEC_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffec/bigint.hpp"

namespace ffec {

/// Prime factorization as (prime, exponent) pairs with strictly ascending
/// primes. The empty list is the factorization of 1.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs (the standard witness set).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Prime factorization by trial division. Domain error on n = 0.
inline Factorization factor_integer(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor_integer: n must be positive");
    Factorization out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

/// Legendre symbol (a/ell) for an odd prime ell, via Euler's criterion.
inline int legendre_symbol(const Int& a, std::uint64_t ell) {
    if (ell == 2 || !is_prime_u64(ell))
        throw std::domain_error("legendre_symbol: modulus must be an odd prime");
    Int r = a % Int(ell);
    if (r < 0) r += Int(ell);
    std::uint64_t au = r.get_ui();
    if (au == 0) return 0;
    std::uint64_t e = powmod_u64(au, (ell - 1) / 2, ell);
    return e == 1 ? 1 : -1;
}

inline int legendre_symbol(long a, std::uint64_t ell) { return legendre_symbol(Int(a), ell); }

inline Int euler_phi(std::uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be positive");
    Int r = 1;
    for (auto [p, e] : factor_integer(n)) {
        Int pk = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pk *= Int(p);
        r *= pk * (Int(p) - 1);
    }
    return r;
}

inline Int sum_of_divisors(std::uint64_t n) {
    if (n == 0) throw std::domain_error("sum_of_divisors: n must be positive");
    Int r = 1;
    for (auto [p, e] : factor_integer(n)) {
        Int geom = 1, pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= Int(p);
            geom += pk;
        }
        r *= geom;
    }
    return r;
}

/// All divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factor_integer(n)) {
        std::size_t sz = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// v_p(n): exponent of the prime p in n; n must be a pure power of p times a
/// unit for callers that assert so.
inline unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace ffec

#endif
