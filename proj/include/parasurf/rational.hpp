#pragma once

#include <gmpxx.h>

#include <string>

#include "parasurf/errors.hpp"

namespace parasurf {

// Exact arithmetic lives on GMP.  Rat is always kept canonical (lowest terms,
// positive denominator) — mpq_class guarantees this as long as values are
// built through its own operators or rat_parse below.
using Int = mpz_class;
using Rat = mpq_class;

// Parse "p", "-p", or "p/q" (arbitrary precision).  Throws DomainError on
// anything else, including q == 0.
Rat rat_parse(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }
inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline bool is_integer(const Rat& r) {
    // GMP does not canonicalize two-argument constructions like Rat(4, 2).
    Rat c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

// floor(r) as an Int (exact, works for negative values).
Int rat_floor(const Rat& r);

// Binomial coefficient C(n, k) as an exact integer.
Int binomial(unsigned long n, unsigned long k);

// 2^e as an Int (e >= 0).
Int pow2(unsigned long e);

} // namespace parasurf
