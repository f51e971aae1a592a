#ifndef CHROMATICA_ANALYSIS_HPP
#define CHROMATICA_ANALYSIS_HPP

#include "chromatica/chromatic.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/symfunc.hpp"

#include <string>
#include <vector>

namespace chromatica {

// Outcome of an e-positivity check: the E-basis form plus every term with a
// negative coefficient.
struct PositivityReport {
    SymFunc e_form;
    std::vector<std::pair<Partition, TPoly>> negative_terms;

    bool e_positive() const { return negative_terms.empty(); }
    std::string verdict() const { return e_positive() ? "e-positive" : "not-e-positive"; }
};

PositivityReport e_positivity(const SymFunc& f);

// Integer polynomial in one variable x, lowest power first.
struct IntPoly {
    std::vector<long long> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size()))
                   ? coeffs[static_cast<size_t>(k)]
                   : 0;
    }
    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0)
            coeffs.pop_back();
    }
    std::string to_string() const; // "1 + 6x + 9x^2 + 4x^3"
    bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }
    bool operator<(const IntPoly& o) const { return coeffs < o.coeffs; }
};

// The closed-form elementary expansion of the generalized net with body K_n.
SymFunc net_closed_form(int n);

// mu(x): generating polynomial of k-matchings.
IntPoly matching_polynomial(const Graph& g, const ChromaticCaps& caps = {});

// I(x): generating polynomial of independent sets.
IntPoly independence_polynomial(const Graph& g, const ChromaticCaps& caps = {});

// Recovers I(x) from an M-basis chromatic symmetric function: the number of
// independent k-sets is the coefficient of m_{(k,1^{n-k})} divided by
// (n-k)!. Raises inconsistent_input_error when the division is not exact.
IntPoly independence_poly_from_csf(const SymFunc& f);

struct UniquenessEntry {
    std::string label;
    Graph graph;
    IntPoly fingerprint;
};

struct UniquenessCollision {
    std::string first;
    std::string second;
    bool isomorphic_duplicate = false;
    bool equal_csf = false;
};

struct UniquenessReport {
    int graph_count = 0;
    int fingerprint_groups = 0;
    std::vector<UniquenessCollision> collisions;

    // true when no two non-isomorphic inputs share a chromatic symmetric
    // function
    bool distinct() const {
        for (const auto& c : collisions)
            if (!c.isomorphic_duplicate && c.equal_csf)
                return false;
        return true;
    }
};

// Groups graphs by independence polynomial, then compares full chromatic
// symmetric functions inside each group. Isomorphic duplicates are reported
// as such.
UniquenessReport uniqueness_scan(const std::vector<UniquenessEntry>& graphs,
                                 const ChromaticCaps& caps = {});

// All generalized spiders with at most max_vertices vertices, one per
// isomorphism class (leg multisets are deduplicated).
std::vector<UniquenessEntry> all_generalized_spiders(int max_vertices);

} // namespace chromatica

#endif
