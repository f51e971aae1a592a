#include "chromatica/chromatic.hpp"

#include "chromatica/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromatica;

namespace {

TPoly constant(long v) { return TPoly(Rational(v)); }

} // namespace

TEST_CASE("coloring engine on tiny graphs") {
    SymFunc k3 = csf_colorings(complete(3));
    CHECK(k3.coefficient(Partition({1, 1, 1})) == constant(6));
    CHECK(k3.terms().size() == 1);

    SymFunc p3 = csf_colorings(path(3));
    CHECK(p3.coefficient(Partition({1, 1, 1})) == constant(6));
    CHECK(p3.coefficient(Partition({2, 1})) == constant(1));
    CHECK(p3.terms().size() == 2);

    SymFunc k1 = csf_colorings(complete(1));
    CHECK(k1.coefficient(Partition({1})) == constant(1));
}

TEST_CASE("generalized net monomial coefficients match the closed counts") {
    for (int n = 3; n <= 5; ++n) {
        SymFunc x = csf_colorings(generalized_net(n));
        Integer nn(n);
        auto coeff = [&](const std::string& text) {
            return x.coefficient(Partition::parse(text)).coeff(0);
        };
        Integer f = factorial(static_cast<unsigned>(n + 3));
        CHECK(coeff("1^" + std::to_string(n + 3)) == Rational(f));
        CHECK(coeff("2,1^" + std::to_string(n + 1)) ==
              Rational(3 * nn * factorial(static_cast<unsigned>(n + 1))));
        CHECK(coeff("3,1^" + std::to_string(n)) ==
              Rational((3 * nn - 5) * factorial(static_cast<unsigned>(n))));
        CHECK(coeff("4,1^" + std::to_string(n - 1)) ==
              Rational((nn - 3) * factorial(static_cast<unsigned>(n - 1))));
        CHECK(coeff("2,2,1^" + std::to_string(n - 1)) ==
              Rational(6 * (nn * nn - 2 * nn + 2) * factorial(static_cast<unsigned>(n - 1))));
        CHECK(coeff("3,2,1^" + std::to_string(n - 2)) ==
              Rational(3 * (nn * nn - 4 * nn + 5) * factorial(static_cast<unsigned>(n - 2))));
        CHECK(coeff("2,2,2,1^" + std::to_string(n - 3)) ==
              Rational(6 * (nn * nn * nn - 6 * nn * nn + 14 * nn - 13) *
                       factorial(static_cast<unsigned>(n - 3))));
        // exactly the seven coloring types occur
        CHECK(x.terms().size() == (n == 3 ? 6u : 7u)); // the (4,1^2) count vanishes at n = 3
    }
    // spot values from the n = 3 net
    SymFunc net = csf_colorings(generalized_net(3));
    CHECK(net.coefficient(Partition::parse("2,1^4")) == constant(216));
    CHECK(net.coefficient(Partition::parse("2,2,2")) == constant(12));
}

TEST_CASE("subset engine on tiny graphs") {
    SymFunc k1 = csf_subsets(complete(1));
    CHECK(k1.coefficient(Partition({1})) == constant(1));

    SymFunc k2 = csf_subsets(complete(2));
    CHECK(k2.coefficient(Partition({1, 1})) == constant(1));
    CHECK(k2.coefficient(Partition({2})) == constant(-1));

    SymFunc p3 = csf_subsets(path(3));
    CHECK(p3.coefficient(Partition({1, 1, 1})) == constant(1));
    CHECK(p3.coefficient(Partition({2, 1})) == constant(-2));
    CHECK(p3.coefficient(Partition({3})) == constant(1));
}

TEST_CASE("engines agree after basis conversion") {
    std::mt19937_64 rng(2024);
    std::vector<Graph> corpus;
    for (int i = 0; i < 40; ++i) {
        int n = 2 + static_cast<int>(rng() % 6);
        corpus.push_back(oracles::random_graph(rng, n, 0.4, false));
    }
    corpus.push_back(generalized_net(3));
    corpus.push_back(generalized_net(4));
    corpus.push_back(horseshoe_crab(3, 4, 6));
    corpus.push_back(spider({2, 1, 1}));
    corpus.push_back(line_graph(spider({2, 2, 1})));
    for (const auto& g : corpus)
        CHECK(csf_colorings(g).convert(Basis::P) == csf_subsets(g));
}

TEST_CASE("coefficient of m_(1^n) is n!") {
    for (const Graph& g : {path(4), complete(5), generalized_net(3), horseshoe_crab(3, 4, 5)}) {
        SymFunc x = csf_colorings(g);
        std::vector<int> ones(static_cast<size_t>(g.vertex_count()), 1);
        CHECK(x.coefficient(Partition(ones)) ==
              TPoly(Rational(factorial(static_cast<unsigned>(g.vertex_count())))));
    }
}

TEST_CASE("weighted coefficient sum equals the chromatic polynomial") {
    std::mt19937_64 rng(555);
    std::vector<Graph> corpus = {path(4), complete(4), generalized_net(3)};
    for (int i = 0; i < 10; ++i)
        corpus.push_back(oracles::random_graph(rng, 3 + static_cast<int>(rng() % 4), 0.5, false));
    for (const auto& g : corpus) {
        int n = g.vertex_count();
        SymFunc x = csf_colorings(g);
        Rational total(0);
        for (const auto& [lam, c] : x.terms()) {
            // number of distinct monomials of m_lambda in n variables
            Integer ways = factorial(static_cast<unsigned>(n));
            ways /= factorial(static_cast<unsigned>(n - lam.length()));
            for (const auto& [value, count] : lam.multiplicities())
                ways /= factorial(static_cast<unsigned>(count));
            total += c.coeff(0) * Rational(ways);
        }
        CHECK(total == Rational(oracles::chromatic_polynomial(g, n)));
    }
}

TEST_CASE("quasisymmetric refinement of K_2 and P_3") {
    SymFunc k2 = qcsf_colorings(nuig(IntervalSeq::from_values({2})));
    CHECK(k2.coefficient(Partition({1, 1})).to_string() == "1+t");
    CHECK(k2.terms().size() == 1);
    SymFunc k2e = k2.convert(Basis::E);
    CHECK(k2e.coefficient(Partition({2})).to_string() == "1+t");

    SymFunc p3 = qcsf_colorings(nuig(IntervalSeq::from_values({2, 3})));
    SymFunc p3e = p3.convert(Basis::E);
    CHECK(p3e.coefficient(Partition({3})).to_string() == "1+t+t^2");
    CHECK(p3e.coefficient(Partition({2, 1})).to_string() == "t");
    CHECK(p3e.terms().size() == 2);
}

TEST_CASE("qcsf at t = 1 is the plain chromatic symmetric function") {
    for (const char* text : {"2", "2,3", "3,3", "2,4,6,6,6", "2,3,4,5,6,7"}) {
        IntervalSeq seq = IntervalSeq::parse(text);
        Graph g = nuig(seq);
        CHECK(qcsf_colorings(g).evaluate_t(Rational(1)) == csf_colorings(g));
    }
}

TEST_CASE("qcsf rejects labelings that break symmetry") {
    // the claw is not a unit interval graph under any labeling; this one
    // breaks the class-pattern symmetry test
    Graph claw = spider({1, 1, 1});
    CHECK_THROWS_AS(qcsf_colorings(claw), not_symmetric_error);
    CHECK_NOTHROW(qcsf_colorings(claw, {}, true));
}

TEST_CASE("caps are enforced") {
    ChromaticCaps caps;
    caps.max_vertices = 4;
    CHECK_THROWS_AS(csf_colorings(complete(5), caps), unsupported_size_error);
    caps.max_edges = 3;
    CHECK_THROWS_AS(csf_subsets(complete(4), caps), unsupported_size_error);
}

TEST_CASE("product rule") {
    CHECK(product_check(complete(1), complete(1)));
    CHECK(product_check(complete(2), complete(3)));
    CHECK(product_check(path(3), spider({1, 1, 1})));
    CHECK(product_check(IntervalSeq::from_values({2, 3}), IntervalSeq::from_values({2})));
    CHECK(product_check(IntervalSeq::from_values({3, 3}), IntervalSeq::from_values({2, 2})));

    std::mt19937_64 rng(31337);
    for (int i = 0; i < 20; ++i) {
        Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5, false);
        Graph h = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.5, false);
        CHECK(product_check(g, h));
    }
}

TEST_CASE("interval sequence concatenation models disjoint union") {
    IntervalSeq a = IntervalSeq::from_values({2, 3});
    IntervalSeq b = IntervalSeq::from_values({2});
    IntervalSeq u = concat_interval_seqs(a, b);
    CHECK(u.n() == 5);
    CHECK(nuig(u) == disjoint_union(nuig(a), nuig(b)));
}
