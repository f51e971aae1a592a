#ifndef CHROMATICA_TPOLY_HPP
#define CHROMATICA_TPOLY_HPP

#include "chromatica/rational.hpp"

#include <string>
#include <vector>

namespace chromatica {

// A polynomial in the formal variable t with exact rational coefficients,
// stored lowest power first with no trailing zero. The plain chromatic
// symmetric function only ever sees degree-0 instances.
class TPoly {
public:
    TPoly() = default; // zero polynomial

    explicit TPoly(Rational constant);
    explicit TPoly(std::vector<Rational> coeffs); // lowest power first, normalized on entry

    static TPoly t_power(int k, Rational c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                           : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);

    TPoly scaled(const Rational& s) const;
    TPoly divided(const Rational& s) const;

    Rational evaluate(const Rational& t) const;

    bool all_integral() const;
    bool all_nonnegative() const;
    // Index of the lowest/highest nonzero coefficient; -1 when zero.
    int low_degree() const;
    // No zero coefficient strictly between the lowest and highest nonzero ones,
    // and every coefficient in that window positive.
    bool strictly_positive_on_support() const;
    // coeff(j) == coeff(d - j) for all j; d must be >= degree().
    bool palindromic_about(int d) const;
    // coeff(i+1) >= coeff(i) for 0 <= i <= limit.
    bool nondecreasing_up_to(int limit) const;

    // Coefficients as decimal strings, lowest power first; "0" list is empty.
    std::vector<std::string> coeff_strings() const;
    // Human form such as "1+t+t^2", "t", "-6", "2t^3". Zero prints "0".
    std::string to_string() const;

    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TPoly& o) const { return c_ != o.c_; }

private:
    void normalize();
    std::vector<Rational> c_;
};

} // namespace chromatica

#endif
