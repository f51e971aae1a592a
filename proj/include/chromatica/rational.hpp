#ifndef CHROMATICA_RATIONAL_HPP
#define CHROMATICA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace chromatica {

// All symmetric-function coefficients are exact rationals. Chromatic
// computations stay integral in every basis we surface, but the m -> p
// change of basis divides by part multiplicities, so the internal
// representation has to be a genuine field.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

// Decimal string; integral values print without a denominator.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace chromatica

#endif
