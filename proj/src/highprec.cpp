#include "parasurf/highprec.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <sstream>

namespace parasurf {

namespace {
unsigned g_bits = 256;

unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) + small guard; boost tracks precision in decimal
    // digits for this backend.
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

struct PrecisionInit {
    PrecisionInit() { Real::default_precision(digits10_for_bits(g_bits)); }
};
PrecisionInit g_precision_init;
} // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw DomainError("precision must be at least 64 bits");
    g_bits = bits;
    Real::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() { return g_bits; }

Real to_real(const Rat& r) {
    Real num(r.get_num().get_mpz_t());
    Real den(r.get_den().get_mpz_t());
    return num / den;
}

Real real_pi() {
    // mpfr's own constant via the 4*atan(1) identity keeps this exact to the
    // working precision without dragging in Boost.Math.
    return 4 * atan(Real(1));
}

std::string real_str(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace parasurf
