#include "chromatica/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace chromatica {

char basis_letter(Basis b) {
    switch (b) {
    case Basis::M: return 'm';
    case Basis::E: return 'e';
    case Basis::P: return 'p';
    case Basis::S: return 's';
    }
    return '?';
}

Basis basis_from_letter(char c) {
    switch (c) {
    case 'm': case 'M': return Basis::M;
    case 'e': case 'E': return Basis::E;
    case 'p': case 'P': return Basis::P;
    case 's': case 'S': return Basis::S;
    }
    throw std::invalid_argument(std::string("unknown basis letter '") + c + "'");
}

SymFunc::SymFunc(Basis basis, int degree, TermMap terms)
    : basis_(basis), degree_(degree), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.sum() != degree_)
            throw std::invalid_argument("SymFunc: term partition does not sum to the degree");
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

SymFunc SymFunc::monomial(Basis basis, const Partition& lambda, TPoly coeff) {
    SymFunc f(basis, lambda.sum());
    f.add_term(lambda, coeff);
    return f;
}

TPoly SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? TPoly() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const TPoly& coeff) {
    if (lambda.sum() != degree_)
        throw std::invalid_argument("SymFunc::add_term: partition of wrong degree");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis_ != o.basis_ || degree_ != o.degree_)
        throw std::invalid_argument("SymFunc::operator+: basis/degree mismatch");
    SymFunc r(*this);
    for (const auto& [lam, c] : o.terms_)
        r.add_term(lam, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    if (basis_ != o.basis_ || degree_ != o.degree_)
        throw std::invalid_argument("SymFunc::operator-: basis/degree mismatch");
    SymFunc r(*this);
    for (const auto& [lam, c] : o.terms_)
        r.add_term(lam, -c);
    return r;
}

SymFunc SymFunc::scaled(const TPoly& c) const {
    SymFunc r(basis_, degree_);
    if (c.is_zero())
        return r;
    for (const auto& [lam, t] : terms_)
        r.add_term(lam, t * c);
    return r;
}

SymFunc SymFunc::evaluate_t(const Rational& t) const {
    SymFunc r(basis_, degree_);
    for (const auto& [lam, c] : terms_)
        r.add_term(lam, TPoly(c.evaluate(t)));
    return r;
}

bool SymFunc::all_integral() const {
    for (const auto& [lam, c] : terms_)
        if (!c.all_integral())
            return false;
    return true;
}

namespace {

Partition concat_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

} // namespace

Integer m_product_coefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
    if (lambda.sum() + mu.sum() != nu.sum())
        return Integer(0);
    if (lambda.length() > nu.length() || mu.length() > nu.length())
        return Integer(0);
    // Count vectors alpha with sorted nonzero entries = lambda, supported on
    // the coordinates of nu, such that nu - alpha has sorted nonzero entries
    // = mu. Distinct placements on equal nu-coordinates are genuinely
    // distinct monomial pairs, so plain slot enumeration is exact.
    Integer count(0);
    std::vector<int> residual = nu.parts();
    const std::vector<int>& mu_parts = mu.parts();
    // track used slots separately
    std::vector<char> used(residual.size(), 0);
    std::function<void(size_t, int, int)> rec = [&](size_t idx, int min_slot, int prev) {
        if (idx == lambda.parts().size()) {
            std::vector<int> rest;
            rest.reserve(residual.size());
            for (int v : residual)
                if (v > 0)
                    rest.push_back(v);
            std::sort(rest.begin(), rest.end(), std::greater<int>());
            if (rest == mu_parts)
                count += 1;
            return;
        }
        int part = lambda.parts()[idx];
        int start = (idx > 0 && part == prev) ? min_slot : 0;
        for (int s = start; s < static_cast<int>(residual.size()); ++s) {
            size_t si = static_cast<size_t>(s);
            if (used[si] || residual[si] < part)
                continue;
            used[si] = 1;
            residual[si] -= part;
            rec(idx + 1, s + 1, part);
            residual[si] += part;
            used[si] = 0;
        }
    };
    rec(0, 0, 0);
    return count;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    if (basis_ != o.basis_)
        throw std::invalid_argument("SymFunc::operator*: basis mismatch");
    if (basis_ == Basis::S)
        throw std::invalid_argument("SymFunc::operator*: S-basis products are unsupported");
    SymFunc r(basis_, degree_ + o.degree_);
    if (basis_ == Basis::E || basis_ == Basis::P) {
        for (const auto& [la, ca] : terms_)
            for (const auto& [lb, cb] : o.terms_)
                r.add_term(concat_parts(la, lb), ca * cb);
        return r;
    }
    // M basis: overlay rule.
    auto candidates = partitions_of(degree_ + o.degree_);
    for (const auto& [la, ca] : terms_) {
        for (const auto& [lb, cb] : o.terms_) {
            TPoly prod = ca * cb;
            for (const auto& nu : candidates) {
                if (nu.length() > la.length() + lb.length())
                    continue;
                Integer c = m_product_coefficient(la, lb, nu);
                if (c != 0)
                    r.add_term(nu, prod.scaled(Rational(c)));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Transition tables

namespace transitions {
namespace {

// m_mu * e_k expansion: coefficient of m_nu equals the number of k-subsets S
// of nu's coordinates with sort+(nu - 1_S) == mu.
MExpansion multiply_by_ek(const MExpansion& f, int k, int target_degree) {
    MExpansion out;
    auto candidates = partitions_of(target_degree);
    for (const auto& nu : candidates) {
        Rational total(0);
        int len = nu.length();
        if (k > len)
            continue;
        // enumerate k-subsets of [len]
        std::vector<int> idx(static_cast<size_t>(k));
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == k) {
                std::vector<int> rest;
                rest.reserve(static_cast<size_t>(len));
                size_t q = 0;
                for (int i = 0; i < len; ++i) {
                    bool picked = q < idx.size() && idx[q] == i;
                    int v = nu.part(i) - (picked ? 1 : 0);
                    if (picked)
                        ++q;
                    if (v > 0)
                        rest.push_back(v);
                }
                // rest is still sorted descending (subtracting 1 can break ties
                // but not order by more than needed); sort to be safe
                std::sort(rest.begin(), rest.end(), std::greater<int>());
                auto it = f.find(Partition(std::move(rest)));
                if (it != f.end())
                    total += it->second;
                return;
            }
            for (int i = start; i <= len - (k - pos); ++i) {
                idx[static_cast<size_t>(pos)] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
        if (total != 0)
            out[nu] = total;
    }
    return out;
}

// m_mu * p_k expansion: coefficient of m_nu counts coordinates i of nu with
// sort+(nu - k*1_i) == mu.
MExpansion multiply_by_pk(const MExpansion& f, int k, int target_degree) {
    MExpansion out;
    auto candidates = partitions_of(target_degree);
    for (const auto& nu : candidates) {
        Rational total(0);
        int len = nu.length();
        for (int i = 0; i < len; ++i) {
            if (nu.part(i) < k)
                continue;
            // equal coordinates are distinct monomials; no dedup here
            std::vector<int> rest;
            rest.reserve(static_cast<size_t>(len));
            for (int j = 0; j < len; ++j) {
                int v = nu.part(j) - (j == i ? k : 0);
                if (v > 0)
                    rest.push_back(v);
            }
            std::sort(rest.begin(), rest.end(), std::greater<int>());
            auto it = f.find(Partition(std::move(rest)));
            if (it != f.end())
                total += it->second;
        }
        if (total != 0)
            out[nu] = total;
    }
    return out;
}

struct DegreeTables {
    std::map<Partition, MExpansion, DescLex> e_in_m;
    std::map<Partition, MExpansion, DescLex> p_in_m;
    std::map<Partition, MExpansion, DescLex> s_in_e;
};

std::mutex cache_mutex;
std::map<int, DegreeTables> cache;

MExpansion expand_generators(const Partition& lambda, bool elementary) {
    MExpansion acc;
    acc[Partition()] = Rational(1);
    int deg = 0;
    for (int part : lambda.parts()) {
        deg += part;
        acc = elementary ? multiply_by_ek(acc, part, deg) : multiply_by_pk(acc, part, deg);
    }
    return acc;
}

// Dual Jacobi-Trudi determinant expanded as a signed permutation sum with
// zero pruning (any factor with negative index kills the branch).
MExpansion schur_in_e(const Partition& lambda) {
    MExpansion out;
    if (lambda.empty()) {
        out[Partition()] = Rational(1);
        return out;
    }
    Partition conj = lambda.conjugate();
    int size = conj.length();
    std::vector<int> factors;
    std::vector<char> used(static_cast<size_t>(size), 0);
    std::function<void(int, int)> rec = [&](int row, int inversions) {
        if (row == size) {
            std::vector<int> parts;
            for (int f : factors)
                if (f > 0)
                    parts.push_back(f);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            Rational sign = (inversions % 2 == 0) ? Rational(1) : Rational(-1);
            out[Partition(std::move(parts))] += sign;
            return;
        }
        for (int col = 0; col < size; ++col) {
            size_t ci = static_cast<size_t>(col);
            if (used[ci])
                continue;
            int index = conj.part(row) - (row + 1) + (col + 1);
            if (index < 0)
                continue; // e_k = 0 for k < 0
            int inv = 0;
            for (int c2 = col + 1; c2 < size; ++c2)
                if (used[static_cast<size_t>(c2)])
                    ++inv;
            used[ci] = 1;
            factors.push_back(index);
            rec(row + 1, inversions + inv);
            factors.pop_back();
            used[ci] = 0;
        }
    };
    rec(0, 0);
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

DegreeTables& tables_for(int degree) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end())
        return it->second;
    DegreeTables t;
    for (const auto& lam : partitions_of(degree)) {
        t.e_in_m[lam] = expand_generators(lam, true);
        t.p_in_m[lam] = expand_generators(lam, false);
        t.s_in_e[lam] = schur_in_e(lam);
    }
    return cache.emplace(degree, std::move(t)).first->second;
}

} // namespace

const MExpansion& e_in_m(const Partition& lambda) {
    return tables_for(lambda.sum()).e_in_m.at(lambda);
}

const MExpansion& p_in_m(const Partition& lambda) {
    return tables_for(lambda.sum()).p_in_m.at(lambda);
}

const MExpansion& s_in_e(const Partition& lambda) {
    return tables_for(lambda.sum()).s_in_e.at(lambda);
}

Rational schur_e_coefficient(const Partition& lambda, const Partition& mu) {
    const MExpansion& exp = s_in_e(lambda);
    auto it = exp.find(mu);
    return it == exp.end() ? Rational(0) : it->second;
}

} // namespace transitions

// ---------------------------------------------------------------------------
// Basis conversion

namespace {

SymFunc expand_to_m(const SymFunc& f, bool elementary) {
    SymFunc out(Basis::M, f.degree());
    for (const auto& [lam, c] : f.terms()) {
        const MExpansion& exp =
            elementary ? transitions::e_in_m(lam) : transitions::p_in_m(lam);
        for (const auto& [mu, scalar] : exp)
            out.add_term(mu, c.scaled(scalar));
    }
    return out;
}

// e_{nu'} = m_nu + (terms strictly later in canonical order), so a front-to-
// back sweep peels coefficients one partition at a time.
SymFunc m_to_e(const SymFunc& f) {
    SymFunc out(Basis::E, f.degree());
    SymFunc::TermMap remaining = f.terms();
    for (const auto& nu : partitions_of(f.degree())) {
        auto it = remaining.find(nu);
        if (it == remaining.end() || it->second.is_zero())
            continue;
        TPoly d = it->second;
        Partition index = nu.conjugate();
        out.add_term(index, d);
        for (const auto& [mu, scalar] : transitions::e_in_m(index)) {
            auto jt = remaining.emplace(mu, TPoly()).first;
            jt->second -= d.scaled(scalar);
            if (jt->second.is_zero())
                remaining.erase(jt);
        }
    }
    if (!remaining.empty())
        throw std::logic_error("m_to_e: elimination left a nonzero remainder");
    return out;
}

// p_lambda = (prod of multiplicity factorials) * m_lambda + (terms strictly
// earlier in canonical order); sweep back to front and divide.
SymFunc m_to_p(const SymFunc& f) {
    SymFunc out(Basis::P, f.degree());
    SymFunc::TermMap remaining = f.terms();
    auto order = partitions_of(f.degree());
    for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        const Partition& lam = *rit;
        auto it = remaining.find(lam);
        if (it == remaining.end() || it->second.is_zero())
            continue;
        Rational lead(1);
        for (const auto& [value, count] : lam.multiplicities())
            lead *= Rational(factorial(static_cast<unsigned>(count)));
        TPoly d = it->second.divided(lead);
        out.add_term(lam, d);
        for (const auto& [mu, scalar] : transitions::p_in_m(lam)) {
            auto jt = remaining.emplace(mu, TPoly()).first;
            jt->second -= d.scaled(scalar);
            if (jt->second.is_zero())
                remaining.erase(jt);
        }
    }
    if (!remaining.empty())
        throw std::logic_error("m_to_p: elimination left a nonzero remainder");
    return out;
}

SymFunc s_to_e(const SymFunc& f) {
    SymFunc out(Basis::E, f.degree());
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, scalar] : transitions::s_in_e(lam))
            out.add_term(mu, c.scaled(scalar));
    return out;
}

// s_{mu'} = e_mu + (terms strictly earlier in canonical order); sweep the
// E-coefficients back to front.
SymFunc e_to_s(const SymFunc& f) {
    SymFunc out(Basis::S, f.degree());
    SymFunc::TermMap remaining = f.terms();
    auto order = partitions_of(f.degree());
    for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        const Partition& mu = *rit;
        auto it = remaining.find(mu);
        if (it == remaining.end() || it->second.is_zero())
            continue;
        TPoly d = it->second;
        Partition index = mu.conjugate();
        out.add_term(index, d);
        for (const auto& [nu, scalar] : transitions::s_in_e(index)) {
            auto jt = remaining.emplace(nu, TPoly()).first;
            jt->second -= d.scaled(scalar);
            if (jt->second.is_zero())
                remaining.erase(jt);
        }
    }
    if (!remaining.empty())
        throw std::logic_error("e_to_s: elimination left a nonzero remainder");
    return out;
}

} // namespace

SymFunc SymFunc::convert(Basis target) const {
    if (target == basis_)
        return *this;
    switch (basis_) {
    case Basis::E:
        if (target == Basis::M)
            return expand_to_m(*this, true);
        if (target == Basis::P)
            return m_to_p(expand_to_m(*this, true));
        return e_to_s(*this); // target S
    case Basis::P:
        if (target == Basis::M)
            return expand_to_m(*this, false);
        if (target == Basis::E)
            return m_to_e(expand_to_m(*this, false));
        return e_to_s(m_to_e(expand_to_m(*this, false))); // target S
    case Basis::M:
        if (target == Basis::E)
            return m_to_e(*this);
        if (target == Basis::P)
            return m_to_p(*this);
        return e_to_s(m_to_e(*this)); // target S
    case Basis::S:
        if (target == Basis::E)
            return s_to_e(*this);
        if (target == Basis::M)
            return expand_to_m(s_to_e(*this), true);
        return m_to_p(expand_to_m(s_to_e(*this), true)); // target P
    }
    throw std::logic_error("SymFunc::convert: unreachable");
}

std::string SymFunc::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    char letter = basis_letter(basis_);
    for (const auto& [lam, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += '(' + c.to_string() + ") " + letter + "_{" + lam.to_string() + '}';
    }
    return s;
}

} // namespace chromatica
