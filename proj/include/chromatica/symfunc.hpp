#ifndef CHROMATICA_SYMFUNC_HPP
#define CHROMATICA_SYMFUNC_HPP

#include "chromatica/partition.hpp"
#include "chromatica/tpoly.hpp"

#include <map>
#include <string>

namespace chromatica {

enum class Basis { M, E, P, S };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// A homogeneous symmetric function of fixed degree, tagged with the basis
// its index partitions refer to. Terms with zero coefficient are never
// stored, and term maps iterate in the canonical partition order.
class SymFunc {
public:
    using TermMap = std::map<Partition, TPoly, DescLex>;

    SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}
    SymFunc(Basis basis, int degree, TermMap terms);

    static SymFunc zero(Basis basis, int degree) { return SymFunc(basis, degree); }
    // c * b_lambda
    static SymFunc monomial(Basis basis, const Partition& lambda, TPoly coeff);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TPoly coefficient(const Partition& lambda) const;

    void add_term(const Partition& lambda, const TPoly& coeff);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    // Product. E and P multiply by index concatenation; M multiplies by the
    // exact monomial overlay rule. S-basis products are unsupported.
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scaled(const TPoly& c) const;

    SymFunc convert(Basis target) const;
    SymFunc evaluate_t(const Rational& t) const;

    bool all_integral() const;

    std::string to_string() const; // e.g. "(1+t+t^2) e_{3} + (t) e_{2,1}"

    bool operator==(const SymFunc& o) const {
        return basis_ == o.basis_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

private:
    Basis basis_;
    int degree_;
    TermMap terms_;
};

// Scalar expansion of one basis element in the monomial basis.
using MExpansion = std::map<Partition, Rational, DescLex>;

// Per-degree transition data, computed once and shared. Safe for concurrent
// readers; initialization is serialized internally.
namespace transitions {
const MExpansion& e_in_m(const Partition& lambda);
const MExpansion& p_in_m(const Partition& lambda);
// Dual Jacobi-Trudi: the E-basis expansion of the Schur function s_lambda.
const MExpansion& s_in_e(const Partition& lambda);
// Coefficient of e_mu in s_lambda (0 when absent).
Rational schur_e_coefficient(const Partition& lambda, const Partition& mu);
} // namespace transitions

// Coefficient of m_nu in m_lambda * m_mu (the overlay rule), exact.
Integer m_product_coefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu);

} // namespace chromatica

#endif
