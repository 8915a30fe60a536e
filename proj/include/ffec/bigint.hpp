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

#ifndef FFEC_BIGINT_HPP
#define FFEC_BIGINT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ffec {

/// Arbitrary-precision integers and rationals. GMP supplies the storage and
/// base arithmetic; everything on top of it in this library is exact.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den as a canonical rational (lowest terms, positive denominator).
inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

/// "a/b" for non-integers, plain digits otherwise. Matches the CLI's exact
/// output convention.
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int floor_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("floor_sqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Exact square root of a rational, if it exists.
inline bool rat_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    const Int& n = q.get_num();
    const Int& d = q.get_den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return false;
    out = rat(floor_sqrt(n), floor_sqrt(d));
    return true;
}

}  // namespace ffec

#endif
