#ifndef EULERINT_RATIONAL_HPP
#define EULERINT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eulerint/errors.hpp"

namespace eulerint {

// All coordinates and function values are exact rationals; no floating point
// enters any identity-bearing computation.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" (base 10). Throws ParseError on malformed input or q=0.
Rat rat_parse(const std::string& s);

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

Rat rat_floor(const Rat& q);
Rat rat_ceil(const Rat& q);

// floor(q) as long long; throws if out of range.
long long rat_floor_ll(const Rat& q);
long long rat_ceil_ll(const Rat& q);

inline double rat_double(const Rat& q) { return q.get_d(); }

// gmpxx lacks long long constructors; goes through mpz.
inline Rat rat_ll(long long v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return Rat(z);
}

// mpq_class(p, q) does not canonicalize; this does. Required whenever the
// numerator/denominator are not known to be coprime.
inline Rat rat_frac(long long num, long long den) {
    Rat q = rat_ll(num) / rat_ll(den);
    return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace eulerint

#endif
