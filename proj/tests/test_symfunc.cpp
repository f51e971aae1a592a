#include "chromatica/symfunc.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace chromatica;

namespace {

SymFunc basis_element(Basis b, const Partition& lam) {
    return SymFunc::monomial(b, lam, TPoly(Rational(1)));
}

SymFunc random_symfunc(std::mt19937_64& rng, Basis b, int degree) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    SymFunc f(b, degree);
    for (const auto& lam : partitions_of(degree))
        f.add_term(lam, TPoly(Rational(coeff(rng))));
    return f;
}

} // namespace

TEST_CASE("tpoly basics") {
    TPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.to_string() == "0");

    TPoly p({Rational(1), Rational(1), Rational(1)});
    CHECK(p.to_string() == "1+t+t^2");
    CHECK(p.evaluate(Rational(1)) == 3);
    CHECK(p.evaluate(Rational(2)) == 7);

    TPoly t = TPoly::t_power(1);
    CHECK(t.to_string() == "t");
    CHECK((p * t).to_string() == "t+t^2+t^3");
    CHECK((p - p).is_zero());
    CHECK((-t).to_string() == "-t");
    CHECK(TPoly(Rational(-6)).to_string() == "-6");
    CHECK(TPoly({Rational(0), Rational(2), Rational(0), Rational(3)}).to_string() ==
          "2t+3t^3");

    CHECK(p.palindromic_about(2));
    CHECK(!p.palindromic_about(3));
    CHECK(TPoly({Rational(1), Rational(2), Rational(2), Rational(1)}).palindromic_about(3));
    CHECK(p.nondecreasing_up_to(0));
    CHECK(TPoly({Rational(2), Rational(1)}).nondecreasing_up_to(-1));
    CHECK(!TPoly({Rational(2), Rational(1)}).nondecreasing_up_to(0));
}

TEST_CASE("add with matching basis and degree") {
    Partition e3({3});
    SymFunc a = basis_element(Basis::E, e3);
    SymFunc b = a.scaled(TPoly(Rational(2)));
    SymFunc sum = a + b;
    CHECK(sum.coefficient(e3) == TPoly(Rational(3)));

    Partition p21({2, 1});
    SymFunc m = basis_element(Basis::M, p21);
    SymFunc cancel = m + m.scaled(TPoly(Rational(-1)));
    CHECK(cancel.is_zero());

    SymFunc te = basis_element(Basis::E, p21).scaled(TPoly::t_power(1));
    SymFunc one_plus_t = te + basis_element(Basis::E, p21);
    CHECK(one_plus_t.coefficient(p21).to_string() == "1+t");

    CHECK_THROWS_AS(basis_element(Basis::E, e3) + basis_element(Basis::M, e3),
                    std::invalid_argument);
    CHECK_THROWS_AS(basis_element(Basis::E, e3) + basis_element(Basis::E, Partition({2})),
                    std::invalid_argument);
}

TEST_CASE("multiply in P and E is index concatenation") {
    SymFunc p1 = basis_element(Basis::P, Partition({1}));
    SymFunc p11 = p1 * p1;
    CHECK(p11.coefficient(Partition({1, 1})) == TPoly(Rational(1)));
    CHECK(p11.terms().size() == 1);

    SymFunc e2 = basis_element(Basis::E, Partition({2}));
    SymFunc e1 = basis_element(Basis::E, Partition({1}));
    SymFunc e21 = e2 * e1;
    CHECK(e21.coefficient(Partition({2, 1})) == TPoly(Rational(1)));

    CHECK_THROWS_AS(basis_element(Basis::S, Partition({1})) *
                        basis_element(Basis::S, Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("multiply in M uses the overlay rule") {
    SymFunc m1 = basis_element(Basis::M, Partition({1}));
    SymFunc sq = m1 * m1;
    CHECK(sq.coefficient(Partition({1, 1})) == TPoly(Rational(2)));
    CHECK(sq.coefficient(Partition({2})) == TPoly(Rational(1)));

    // cross-check the overlay against the P-basis route on random inputs
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_symfunc(rng, Basis::M, 3);
        SymFunc g = random_symfunc(rng, Basis::M, 3);
        SymFunc direct = f * g;
        SymFunc via_p = (f.convert(Basis::P) * g.convert(Basis::P)).convert(Basis::M);
        CHECK(direct == via_p);
    }
}

TEST_CASE("m_product_coefficient characteristic values") {
    CHECK(m_product_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 2);
    CHECK(m_product_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(m_product_coefficient(Partition({2}), Partition({2}), Partition({2, 2})) == 2);
    CHECK(m_product_coefficient(Partition({2}), Partition({2}), Partition({4})) == 1);
    CHECK(m_product_coefficient(Partition({2}), Partition({2}), Partition({3, 1})) == 0);
}

TEST_CASE("e to m expansions") {
    // e_{2,1} = m_{2,1} + 3 m_{1,1,1}
    SymFunc e21 = basis_element(Basis::E, Partition({2, 1})).convert(Basis::M);
    CHECK(e21.coefficient(Partition({2, 1})) == TPoly(Rational(1)));
    CHECK(e21.coefficient(Partition({1, 1, 1})) == TPoly(Rational(3)));
    CHECK(e21.terms().size() == 2);

    // e_k = m_{(1^k)}
    SymFunc e3 = basis_element(Basis::E, Partition({3})).convert(Basis::M);
    CHECK(e3.coefficient(Partition({1, 1, 1})) == TPoly(Rational(1)));
    CHECK(e3.terms().size() == 1);
}

TEST_CASE("conversion table row m_{2,1^{n+1}} = e_{n+2,1} - (n+3) e_{n+3}") {
    for (int n : {3, 4, 5}) {
        std::vector<int> parts = {2};
        for (int i = 0; i < n + 1; ++i)
            parts.push_back(1);
        SymFunc m = basis_element(Basis::M, Partition(parts)).convert(Basis::E);
        CHECK(m.coefficient(Partition({n + 2, 1})) == TPoly(Rational(1)));
        CHECK(m.coefficient(Partition({n + 3})) == TPoly(Rational(-(n + 3))));
        CHECK(m.terms().size() == 2);
    }
}

TEST_CASE("p_{1,1} - p_2 = 2 e_2") {
    SymFunc f = basis_element(Basis::P, Partition({1, 1})) -
                basis_element(Basis::P, Partition({2}));
    SymFunc e = f.convert(Basis::E);
    CHECK(e.coefficient(Partition({2})) == TPoly(Rational(2)));
    CHECK(e.terms().size() == 1);
}

TEST_CASE("dual Jacobi-Trudi: s_{2,1} = e_{2,1} - e_3") {
    SymFunc s = basis_element(Basis::S, Partition({2, 1})).convert(Basis::E);
    CHECK(s.coefficient(Partition({2, 1})) == TPoly(Rational(1)));
    CHECK(s.coefficient(Partition({3})) == TPoly(Rational(-1)));
    CHECK(s.terms().size() == 2);

    // s_{(1^n)} = e_n
    SymFunc col = basis_element(Basis::S, Partition({1, 1, 1, 1})).convert(Basis::E);
    CHECK(col.coefficient(Partition({4})) == TPoly(Rational(1)));
    CHECK(col.terms().size() == 1);

    // s_{(n)} = h_n: its m-expansion is all-ones
    SymFunc row = basis_element(Basis::S, Partition({3})).convert(Basis::M);
    for (const auto& lam : partitions_of(3))
        CHECK(row.coefficient(lam) == TPoly(Rational(1)));
}

TEST_CASE("schur functions are monomial-positive with Kostka coefficients") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lam : partitions_of(n)) {
            SymFunc s = basis_element(Basis::S, lam).convert(Basis::M);
            for (const auto& mu : partitions_of(n)) {
                TPoly c = s.coefficient(mu);
                Rational value = c.coeff(0);
                CHECK(value >= 0);
                CHECK(value == Rational(static_cast<long>(oracles::kostka_number(lam, mu))));
            }
        }
    }
}

TEST_CASE("e expansions in m have nonnegative integer coefficients") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            SymFunc e = basis_element(Basis::E, lam).convert(Basis::M);
            for (const auto& [mu, c] : e.terms()) {
                CHECK(c.all_integral());
                CHECK(c.all_nonnegative());
            }
        }
}

TEST_CASE("round trips through every basis pair are exact") {
    std::mt19937_64 rng(99);
    std::vector<Basis> bases = {Basis::M, Basis::E, Basis::P, Basis::S};
    for (int degree = 1; degree <= 8; ++degree) {
        for (Basis from : bases) {
            SymFunc f = random_symfunc(rng, from, degree);
            for (Basis via : bases) {
                SymFunc back = f.convert(via).convert(from);
                CHECK(back == f);
            }
        }
    }
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937_64 rng(7);
    for (Basis b : {Basis::M, Basis::E, Basis::P}) {
        for (int trial = 0; trial < 5; ++trial) {
            SymFunc f = random_symfunc(rng, b, 2);
            SymFunc g = random_symfunc(rng, b, 2);
            SymFunc h = random_symfunc(rng, b, 2);
            CHECK(f * g == g * f);
            CHECK((f * g) * h == f * (g * h));
        }
    }
}

TEST_CASE("evaluate_t") {
    Partition e2({2});
    SymFunc f = basis_element(Basis::E, e2).scaled(TPoly({Rational(1), Rational(1)}));
    SymFunc at1 = f.evaluate_t(Rational(1));
    CHECK(at1.coefficient(e2) == TPoly(Rational(2)));

    SymFunc g = basis_element(Basis::E, Partition({2, 1})).scaled(TPoly::t_power(1));
    CHECK(g.evaluate_t(Rational(0)).is_zero());
}

TEST_CASE("display form") {
    SymFunc f(Basis::E, 3);
    f.add_term(Partition({3}), TPoly({Rational(1), Rational(1), Rational(1)}));
    f.add_term(Partition({2, 1}), TPoly::t_power(1));
    CHECK(f.to_string() == "(1+t+t^2) e_{3} + (t) e_{2,1}");
}
