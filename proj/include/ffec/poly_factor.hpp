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
 * @file poly_factor.hpp
 * @brief Univariate factorization machinery.
 *
 * Over F_p: squarefree decomposition (with the p-th power descent), then
 * distinct-degree and equal-degree (Cantor-Zassenhaus) splitting into monic
 * irreducibles. Over Q only squarefree (Yun) decomposition is provided; the
 * library never factors into irreducibles over Q, by design.
 */

#ifndef FFEC_POLY_FACTOR_HPP
#define FFEC_POLY_FACTOR_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffec/poly.hpp"

namespace ffec {

template <class F>
using FactorList = std::vector<std::pair<Poly<F>, unsigned>>;  // (monic factor, multiplicity)

namespace detail {

inline Poly<PrimeField> powmod(const Poly<PrimeField>& base, Int e, const Poly<PrimeField>& m) {
    auto ctx = base.ctx();
    Poly<PrimeField> r = Poly<PrimeField>::one(ctx);
    Poly<PrimeField> b = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % m;
        e >>= 1;
        if (e > 0) b = (b * b) % m;
    }
    return r;
}

/// f with f' = 0 over F_p is g(t^p); coefficient p-th roots are the identity
/// on the prime field.
inline Poly<PrimeField> pth_root_poly(const Poly<PrimeField>& f) {
    Poly<PrimeField> g(f.ctx());
    std::size_t p = static_cast<std::size_t>(f.ctx().p);
    if (!f.try_deflate(p, g)) throw std::logic_error("pth_root_poly: not a polynomial in t^p");
    return g;
}

inline std::uint64_t rand_elem(PrimeField::Ctx ctx, std::mt19937_64& rng) {
    return rng() % ctx.p;
}

inline Poly<PrimeField> random_poly(PrimeField::Ctx ctx, long max_deg, std::mt19937_64& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : c) x = rand_elem(ctx, rng);
    return Poly<PrimeField>(ctx, std::move(c));
}

/// Equal-degree splitting: f monic squarefree, all irreducible factors of
/// degree d. Appends the factors to out.
inline void edf(const Poly<PrimeField>& f, long d, std::vector<Poly<PrimeField>>& out,
                std::mt19937_64& rng) {
    auto ctx = f.ctx();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t p = ctx.p;
    Poly<PrimeField> one = Poly<PrimeField>::one(ctx);
    while (true) {
        Poly<PrimeField> r = random_poly(ctx, f.degree() - 1, rng);
        if (r.is_zero()) continue;
        Poly<PrimeField> g = gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out, rng);
            edf(f.div_exact(g), d, out, rng);
            return;
        }
        Poly<PrimeField> s;
        if (p == 2) {
            // trace map over F_{2^d}
            s = Poly<PrimeField>(ctx);
            Poly<PrimeField> term = r % f;
            for (long i = 0; i < d; ++i) {
                s = (s + term) % f;
                term = (term * term) % f;
            }
        } else {
            Int e = 1;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            s = powmod(r, e, f);
            s = s - one;
        }
        g = gcd(s, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out, rng);
            edf(f.div_exact(g), d, out, rng);
            return;
        }
    }
}

/// Distinct-degree factorization of a monic squarefree f over F_p.
inline std::vector<Poly<PrimeField>> factor_squarefree_fp(const Poly<PrimeField>& f0,
                                                          std::mt19937_64& rng) {
    std::vector<Poly<PrimeField>> out;
    auto ctx = f0.ctx();
    Poly<PrimeField> f = f0.monic();
    Poly<PrimeField> x = Poly<PrimeField>::var(ctx);
    Poly<PrimeField> h = x;  // t^{p^d} mod f, incrementally
    long d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        h = powmod(h, Int(ctx.p), f);
        Poly<PrimeField> g = gcd(h - x, f);
        if (g.degree() > 0) {
            edf(g, d, out, rng);
            f = f.div_exact(g);
            h = h % f;
        }
    }
    return out;
}

}  // namespace detail

/// Squarefree decomposition over F_p (multiplicities may carry factors of p).
inline FactorList<PrimeField> squarefree_decomposition(const Poly<PrimeField>& f0) {
    FactorList<PrimeField> out;
    auto ctx = f0.ctx();
    if (f0.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    Poly<PrimeField> f = f0.monic();
    if (f.degree() == 0) return out;
    Poly<PrimeField> df = f.derivative();
    if (df.is_zero()) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_root_poly(f)))
            out.emplace_back(g, e * static_cast<unsigned>(ctx.p));
        return out;
    }
    Poly<PrimeField> c = gcd(f, df);
    Poly<PrimeField> w = f.div_exact(c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly<PrimeField> y = gcd(w, c);
        Poly<PrimeField> z = w.div_exact(y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        c = c.div_exact(w);
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_root_poly(c)))
            out.emplace_back(g, e * static_cast<unsigned>(ctx.p));
    }
    return out;
}

/// Yun's squarefree decomposition over Q.
inline FactorList<RatField> squarefree_decomposition(const Poly<RatField>& f0) {
    FactorList<RatField> out;
    if (f0.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    Poly<RatField> f = f0.monic();
    if (f.degree() == 0) return out;
    Poly<RatField> df = f.derivative();
    Poly<RatField> a = gcd(f, df);
    Poly<RatField> b = f.div_exact(a);
    Poly<RatField> c = df.div_exact(a);
    Poly<RatField> d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly<RatField> g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = b.div_exact(g);
        c = d.div_exact(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// Full monic irreducible factorization over F_p (deterministic via a fixed
/// RNG seed, so test output is reproducible).
inline FactorList<PrimeField> factor_poly(const Poly<PrimeField>& f) {
    if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
    std::mt19937_64 rng(0x5eedf00dULL);
    FactorList<PrimeField> out;
    for (auto& [g, e] : squarefree_decomposition(f)) {
        for (auto& irr : detail::factor_squarefree_fp(g, rng)) out.emplace_back(irr, e);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (long i = a.first.degree(); i >= 0; --i) {
            auto ca = a.first.coeff(static_cast<std::size_t>(i));
            auto cb = b.first.coeff(static_cast<std::size_t>(i));
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    return out;
}

inline bool is_irreducible(const Poly<PrimeField>& f) {
    if (f.degree() < 1) return false;
    auto fl = factor_poly(f);
    return fl.size() == 1 && fl[0].second == 1 && fl[0].first.degree() == f.degree();
}

}  // namespace ffec

#endif
