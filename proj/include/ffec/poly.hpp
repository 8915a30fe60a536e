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
 * @file poly.hpp
 * @brief Dense univariate polynomials over any of the library's fields.
 *
 * A polynomial carries its field context alongside the coefficient vector
 * (coefficients indexed by degree, leading coefficient nonzero, the zero
 * polynomial is the empty vector). The same template serves k[t] and, with
 * the rational function field as coefficients, polynomials in x over K.
 */

#ifndef FFEC_POLY_HPP
#define FFEC_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffec/field.hpp"

namespace ffec {

template <class F>
class Poly {
public:
    using Ctx = typename F::Ctx;
    using Elem = typename F::Elem;

    explicit Poly(Ctx ctx = Ctx{}) : ctx_(ctx) {}
    Poly(Ctx ctx, std::vector<Elem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { strip(); }

    static Poly zero(Ctx ctx) { return Poly(ctx); }
    static Poly constant(Ctx ctx, Elem v) {
        Poly p(ctx);
        if (!F::is_zero(ctx, v)) p.c_.push_back(std::move(v));
        return p;
    }
    static Poly one(Ctx ctx) { return constant(ctx, F::one(ctx)); }
    /// The variable itself (t, or x at the upper level).
    static Poly var(Ctx ctx) {
        Poly p(ctx);
        p.c_ = {F::zero(ctx), F::one(ctx)};
        return p;
    }
    /// c * X^k
    static Poly monomial(Ctx ctx, Elem c, std::size_t k) {
        Poly p(ctx);
        if (!F::is_zero(ctx, c)) {
            p.c_.assign(k, F::zero(ctx));
            p.c_.push_back(std::move(c));
        }
        return p;
    }

    Ctx ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const Elem& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(ctx_); }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const {
        if (!(ctx_ == o.ctx_) || c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!F::eq(ctx_, c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(ctx_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(F::neg(ctx_, a));
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.ctx_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F::zero(a.ctx_));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = F::add(a.ctx_, a.coeff(i), b.coeff(i));
        r.strip();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.ctx_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F::zero(a.ctx_));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = F::sub(a.ctx_, a.coeff(i), b.coeff(i));
        r.strip();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
        Poly r(a.ctx_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F::zero(a.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (F::is_zero(a.ctx_, a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (F::is_zero(a.ctx_, b.c_[j])) continue;
                r.c_[i + j] = F::add(a.ctx_, r.c_[i + j], F::mul(a.ctx_, a.c_[i], b.c_[j]));
            }
        }
        r.strip();
        return r;
    }

    Poly scaled(const Elem& s) const {
        Poly r(ctx_);
        if (F::is_zero(ctx_, s)) return r;
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(F::mul(ctx_, a, s));
        r.strip();
        return r;
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check(d);
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q(ctx_), r(*this);
        if (r.degree() < d.degree()) return {q, r};
        q.c_.assign(r.c_.size() - d.c_.size() + 1, F::zero(ctx_));
        Elem dlead_inv = F::inv(ctx_, d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            Elem f = F::mul(ctx_, r.leading(), dlead_inv);
            q.c_[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] = F::sub(ctx_, r.c_[i + shift], F::mul(ctx_, d.c_[i], f));
            r.strip();
        }
        q.strip();
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

    /// Exact division; throws if the remainder is nonzero.
    Poly div_exact(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("div_exact: division is not exact");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F::inv(ctx_, leading()));
    }

    Poly derivative() const {
        Poly r(ctx_);
        if (c_.size() <= 1) return r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(F::mul(ctx_, c_[i], F::from_long(ctx_, static_cast<long>(i))));
        r.strip();
        return r;
    }

    Elem eval(const Elem& x) const {
        Elem r = F::zero(ctx_);
        for (std::size_t i = c_.size(); i-- > 0;) r = F::add(ctx_, F::mul(ctx_, r, x), c_[i]);
        return r;
    }

    Poly pow(std::uint64_t e) const {
        Poly r = one(ctx_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// X -> X^k substitution.
    Poly inflate(std::size_t k) const {
        if (k == 0) throw std::domain_error("inflate by zero");
        if (k == 1 || is_zero()) return *this;
        Poly r(ctx_);
        r.c_.assign((c_.size() - 1) * k + 1, F::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
        r.strip();
        return r;
    }
    /// Inverse of inflate; requires every exponent divisible by k.
    bool try_deflate(std::size_t k, Poly& out) const {
        if (k == 0) return false;
        Poly r(ctx_);
        if (is_zero()) { out = r; return true; }
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % k != 0 && !F::is_zero(ctx_, c_[i])) return false;
        }
        r.c_.assign((c_.size() - 1) / k + 1, F::zero(ctx_));
        for (std::size_t i = 0; i < c_.size(); i += k) r.c_[i / k] = c_[i];
        r.strip();
        out = r;
        return true;
    }

    /// X^deg * p(1/X).
    Poly reversed() const {
        Poly r(*this);
        std::reverse(r.c_.begin(), r.c_.end());
        r.strip();
        return r;
    }

    Poly shifted(std::size_t k) const {  // * X^k
        if (is_zero()) return *this;
        Poly r(ctx_);
        r.c_.assign(k, F::zero(ctx_));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    friend Poly gcd(const Poly& a, const Poly& b) {
        a.check(b);
        Poly x = a, y = b;
        while (!y.is_zero()) {
            Poly r = x % y;
            x = std::move(y);
            y = std::move(r);
        }
        if (x.is_zero()) return x;
        return x.monic();
    }

    /// Extended gcd: g = a*u + b*v with g monic (or zero).
    friend Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
        a.check(b);
        Poly r0 = a, r1 = b;
        Poly u0 = one(a.ctx_), u1 = zero(a.ctx_);
        Poly v0 = zero(a.ctx_), v1 = one(a.ctx_);
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            r0 = std::move(r1); r1 = std::move(r);
            Poly u2 = u0 - q * u1; u0 = std::move(u1); u1 = std::move(u2);
            Poly v2 = v0 - q * v1; v0 = std::move(v1); v1 = std::move(v2);
        }
        if (!r0.is_zero()) {
            Elem s = F::inv(a.ctx_, r0.leading());
            r0 = r0.scaled(s); u0 = u0.scaled(s); v0 = v0.scaled(s);
        }
        u = std::move(u0);
        v = std::move(v0);
        return r0;
    }

    /// Largest k with d^k | *this (d non-constant).
    long multiplicity_of(const Poly& d) const {
        if (is_zero()) throw std::domain_error("multiplicity in zero polynomial");
        if (d.degree() < 1) throw std::domain_error("multiplicity of constant divisor");
        long k = 0;
        Poly r = *this;
        while (true) {
            auto [q, rem] = r.divmod(d);
            if (!rem.is_zero()) return k;
            r = std::move(q);
            ++k;
        }
    }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (F::is_zero(ctx_, c_[i])) continue;
            std::string cs = F::to_string(ctx_, c_[i]);
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (neg) { s += "-"; cs = cs.substr(1); }
            } else {
                s += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            bool unit = (cs == "1");
            if (i == 0) {
                s += cs;
            } else {
                if (!unit) { s += cs; s += "*"; }
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void strip() {
        while (!c_.empty() && F::is_zero(ctx_, c_.back())) c_.pop_back();
    }
    void check(const Poly& o) const {
        if (!(ctx_ == o.ctx_)) throw std::logic_error("polynomial field contexts differ");
    }

    Ctx ctx_;
    std::vector<Elem> c_;
};

}  // namespace ffec

#endif
