#include "chromatica/analysis.hpp"

#include "chromatica/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromatica;

TEST_CASE("e-positivity verdicts") {
    auto kn = e_positivity(csf_colorings(complete(4)));
    CHECK(kn.e_positive());
    CHECK(kn.e_form.coefficient(Partition({4})) == TPoly(Rational(24)));

    auto net = e_positivity(csf_colorings(generalized_net(4)));
    CHECK(!net.e_positive());
    REQUIRE(net.negative_terms.size() == 1);
    CHECK(net.negative_terms[0].first == Partition({4, 3}));
    CHECK(net.negative_terms[0].second == TPoly(Rational(-6)));

    auto claw = e_positivity(csf_colorings(spider({1, 1, 1})));
    CHECK(!claw.e_positive());
}

TEST_CASE("net closed form evaluates as displayed") {
    SymFunc f3 = net_closed_form(3);
    CHECK(f3.coefficient(Partition({6})) == TPoly(Rational(12)));
    CHECK(f3.coefficient(Partition({5, 1})) == TPoly(Rational(18)));
    CHECK(f3.coefficient(Partition({4, 2})) == TPoly(Rational(12)));
    CHECK(f3.coefficient(Partition({4, 1, 1})) == TPoly(Rational(6)));
    CHECK(f3.coefficient(Partition({3, 2, 1})) == TPoly(Rational(6)));
    CHECK(f3.coefficient(Partition({3, 3})) == TPoly(Rational(-6)));
    CHECK(f3.coefficient(Partition({3, 1, 1, 1})).is_zero());
    CHECK(f3.terms().size() == 6);

    CHECK(net_closed_form(4).coefficient(Partition({4, 3})) == TPoly(Rational(-6)));
    for (int n : {3, 4, 5, 6, 7})
        CHECK(net_closed_form(n).coefficient(Partition::from_unsorted({n, 2, 1})) ==
              TPoly(Rational(6 * factorial(static_cast<unsigned>(n - 2)))));
    CHECK_THROWS_AS(net_closed_form(2), invalid_family_error);
}

TEST_CASE("net closed form equals the coloring engine") {
    for (int n : {3, 4, 5})
        CHECK(csf_colorings(generalized_net(n)).convert(Basis::E) == net_closed_form(n));
}

TEST_CASE("matching polynomials") {
    CHECK(matching_polynomial(complete(2)).coeffs == std::vector<long long>{1, 1});
    CHECK(matching_polynomial(spider({2, 2, 2})).coeffs ==
          std::vector<long long>{1, 6, 9, 4});
    CHECK(matching_polynomial(path(4)).coeffs == std::vector<long long>{1, 3, 1});
}

TEST_CASE("independence polynomials") {
    for (int n : {2, 3, 5}) {
        IntPoly p = independence_polynomial(complete(n));
        CHECK(p.coeffs == std::vector<long long>{1, n});
    }
    CHECK(independence_polynomial(generalized_net(3)).coeffs ==
          std::vector<long long>{1, 6, 9, 4});
    IntPoly edgeless = independence_polynomial(Graph(4));
    CHECK(edgeless.coeffs == std::vector<long long>{1, 4, 6, 4, 1});
    CHECK(independence_polynomial(complete(3)).coeffs !=
          independence_polynomial(path(3)).coeffs);
}

TEST_CASE("independence polynomial recovered from the csf") {
    std::mt19937_64 rng(808);
    std::vector<Graph> corpus = {complete(3), path(3), generalized_net(3),
                                 spider({1, 1, 1}), horseshoe_crab(3, 4, 6)};
    for (int i = 0; i < 12; ++i)
        corpus.push_back(oracles::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.4, false));
    for (const auto& g : corpus)
        CHECK(independence_poly_from_csf(csf_colorings(g)) == independence_polynomial(g));

    SymFunc net = csf_colorings(generalized_net(3));
    CHECK(net.coefficient(Partition::parse("2,1^4")) == TPoly(Rational(216)));
    CHECK(independence_poly_from_csf(net).coeff(2) == 9); // 216 / 4!

    // inconsistent input: double one coefficient so the division breaks
    SymFunc bad = net;
    bad.add_term(Partition::parse("2,1^4"), TPoly(Rational(1)));
    CHECK_THROWS_AS(independence_poly_from_csf(bad), inconsistent_input_error);
}

TEST_CASE("line graphs of trees: independence equals matching") {
    auto trees = oracles::all_trees_up_to(9);
    // unlabeled tree counts 1,1,1,2,3,6,11,23,47
    CHECK(trees.size() == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    for (const auto& t : trees)
        CHECK(independence_polynomial(line_graph(t)) == matching_polynomial(t));
}

TEST_CASE("spiders have pairwise distinct matching polynomials") {
    std::vector<IntPoly> polys;
    for (int v = 4; v <= 9; ++v)
        for (const auto& legs : partitions_of(v - 1))
            if (legs.length() >= 3)
                polys.push_back(matching_polynomial(spider(legs.parts())));
    for (size_t a = 0; a < polys.size(); ++a)
        for (size_t b = a + 1; b < polys.size(); ++b)
            CHECK(!(polys[a] == polys[b]));
}

TEST_CASE("generalized spider catalogue") {
    auto spiders = all_generalized_spiders(9);
    CHECK(!spiders.empty());
    // every pair is non-isomorphic by construction (bodies or leg multisets differ)
    for (size_t a = 0; a < spiders.size(); ++a)
        for (size_t b = a + 1; b < spiders.size(); ++b)
            CHECK(!are_isomorphic(spiders[a].graph, spiders[b].graph));
}

TEST_CASE("uniqueness scan") {
    auto spiders = all_generalized_spiders(9);
    auto report = uniqueness_scan(spiders);
    CHECK(report.graph_count == static_cast<int>(spiders.size()));
    CHECK(report.distinct());
    // the fingerprints alone separate everything
    CHECK(report.fingerprint_groups == report.graph_count);
    CHECK(report.collisions.empty());

    // same graph twice: reported as an isomorphic duplicate, not a collision
    std::vector<UniquenessEntry> twice = {spiders[0], spiders[0]};
    twice[1].label += "-copy";
    auto dup = uniqueness_scan(twice);
    REQUIRE(dup.collisions.size() == 1);
    CHECK(dup.collisions[0].isomorphic_duplicate);
    CHECK(dup.collisions[0].equal_csf);
    CHECK(dup.distinct());
}
