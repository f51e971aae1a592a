#include "chromatica/tpoly.hpp"

#include <stdexcept>

namespace chromatica {

TPoly::TPoly(Rational constant) {
    if (constant != 0)
        c_.push_back(std::move(constant));
}

TPoly::TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

TPoly TPoly::t_power(int k, Rational c) {
    if (k < 0)
        throw std::invalid_argument("t_power: negative exponent");
    TPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

void TPoly::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

TPoly TPoly::operator+(const TPoly& o) const {
    TPoly r(*this);
    r += o;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

TPoly TPoly::operator-(const TPoly& o) const {
    TPoly r(*this);
    r -= o;
    return r;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero())
        return TPoly();
    TPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.normalize();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

TPoly TPoly::scaled(const Rational& s) const {
    if (s == 0)
        return TPoly();
    TPoly r(*this);
    for (auto& c : r.c_)
        c *= s;
    return r;
}

TPoly TPoly::divided(const Rational& s) const {
    if (s == 0)
        throw std::invalid_argument("TPoly::divided: division by zero");
    TPoly r(*this);
    for (auto& c : r.c_)
        c /= s;
    return r;
}

Rational TPoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i];
    return acc;
}

bool TPoly::all_integral() const {
    for (const auto& c : c_)
        if (!is_integral(c))
            return false;
    return true;
}

bool TPoly::all_nonnegative() const {
    for (const auto& c : c_)
        if (c < 0)
            return false;
    return true;
}

int TPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

bool TPoly::strictly_positive_on_support() const {
    int lo = low_degree();
    if (lo < 0)
        return true; // zero polynomial: vacuous
    for (int k = lo; k <= degree(); ++k)
        if (coeff(k) <= 0)
            return false;
    return true;
}

bool TPoly::palindromic_about(int d) const {
    if (is_zero())
        return true;
    if (d < degree())
        return false;
    for (int j = 0; j <= d; ++j)
        if (coeff(j) != coeff(d - j))
            return false;
    return true;
}

bool TPoly::nondecreasing_up_to(int limit) const {
    for (int i = 0; i <= limit; ++i)
        if (coeff(i + 1) < coeff(i))
            return false;
    return true;
}

std::vector<std::string> TPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_)
        out.push_back(chromatica::to_string(c));
    return out;
}

std::string TPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0)
            continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (s.empty()) {
            if (c < 0)
                s += '-';
        } else {
            s += c < 0 ? "-" : "+";
        }
        bool unit = (a == 1);
        if (k == 0) {
            s += chromatica::to_string(a);
        } else {
            if (!unit)
                s += chromatica::to_string(a);
            s += 't';
            if (k > 1)
                s += '^' + std::to_string(k);
        }
    }
    return s;
}

} // namespace chromatica
