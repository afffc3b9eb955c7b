#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "parasurf/rational.hpp"

namespace parasurf {

// High-precision reals.  All asymptotic/diagnostic floating work runs on MPFR
// through boost::multiprecision at a process-wide mantissa size (default 256
// bits).  The precision is configuration, set once at startup by the CLI or a
// test harness; the algebraic layers below never touch it.
using Real = boost::multiprecision::mpfr_float;

// Set the working mantissa size in bits (minimum 64).  Affects Reals created
// afterwards.  Throws DomainError below the minimum.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

Real to_real(const Rat& r);
Real real_pi();

// Deterministic decimal rendering with the given significant digit count.
std::string real_str(const Real& x, int digits = 25);

} // namespace parasurf
