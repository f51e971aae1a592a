#include "chromatica/analysis.hpp"

#include "chromatica/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace chromatica {

PositivityReport e_positivity(const SymFunc& f) {
    PositivityReport report{f.convert(Basis::E), {}};
    for (const auto& [lam, c] : report.e_form.terms())
        if (!c.all_nonnegative())
            report.negative_terms.emplace_back(lam, c);
    return report;
}

std::string IntPoly::to_string() const {
    if (coeffs.empty())
        return "0";
    std::string s;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        long long c = coeffs[k];
        if (c == 0)
            continue;
        if (!s.empty())
            s += c > 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        long long a = c < 0 ? -c : c;
        if (k == 0) {
            s += std::to_string(a);
        } else {
            if (a != 1)
                s += std::to_string(a);
            s += "x";
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

SymFunc net_closed_form(int n) {
    if (n < 3)
        throw invalid_family_error("net_closed_form: body size must be at least 3");
    unsigned u = static_cast<unsigned>(n);
    SymFunc out(Basis::E, n + 3);
    auto term = [&](std::vector<int> parts, Integer coeff) {
        if (coeff != 0)
            out.add_term(Partition::from_unsorted(std::move(parts)), TPoly(Rational(coeff)));
    };
    Integer nn(n);
    term({n + 3}, (nn + 3) * factorial(u - 1));
    term({n + 2, 1}, 3 * (nn * nn - 3) * factorial(u - 2));
    term({n + 1, 2}, 6 * (nn - 1) * factorial(u - 3));
    term({n + 1, 1, 1}, 3 * (nn * nn - 2 * nn - 1) * factorial(u - 2));
    term({n, 2, 1}, 6 * factorial(u - 2));
    term({n, 3}, -6 * factorial(u - 3));
    term({n, 1, 1, 1}, (nn - 3) * factorial(u - 1));
    return out;
}

IntPoly matching_polynomial(const Graph& g, const ChromaticCaps& caps) {
    if (g.edge_count() > caps.max_edges)
        throw unsupported_size_error("matching_polynomial: edge count exceeds cap");
    const auto& edges = g.edges();
    IntPoly out;
    out.coeffs.assign(static_cast<size_t>(g.edge_count()) + 1, 0);
    // DFS over edges: each edge is skipped or added when disjoint from the
    // current matching.
    std::function<void(size_t, std::uint64_t, int)> rec = [&](size_t i, std::uint64_t cover,
                                                              int k) {
        if (i == edges.size()) {
            ++out.coeffs[static_cast<size_t>(k)];
            return;
        }
        rec(i + 1, cover, k);
        std::uint64_t mask = (1ull << edges[i].first) | (1ull << edges[i].second);
        if (!(cover & mask))
            rec(i + 1, cover | mask, k + 1);
    };
    rec(0, 0, 0);
    out.normalize();
    return out;
}

IntPoly independence_polynomial(const Graph& g, const ChromaticCaps& caps) {
    if (g.vertex_count() > caps.max_vertices)
        throw unsupported_size_error("independence_polynomial: vertex count exceeds cap");
    IntPoly out;
    out.coeffs.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    std::function<void(int, std::uint64_t, int)> rec = [&](int v, std::uint64_t blocked,
                                                           int k) {
        if (v > g.vertex_count()) {
            ++out.coeffs[static_cast<size_t>(k)];
            return;
        }
        rec(v + 1, blocked, k);
        if (!((blocked >> v) & 1u))
            rec(v + 1, blocked | g.adjacency_mask(v), k + 1);
    };
    rec(1, 0, 0);
    out.normalize();
    return out;
}

IntPoly independence_poly_from_csf(const SymFunc& f) {
    if (f.basis() != Basis::M)
        throw std::invalid_argument("independence_poly_from_csf: input must be in the M basis");
    int n = f.degree();
    IntPoly out;
    out.coeffs.assign(static_cast<size_t>(n) + 1, 0);
    out.coeffs[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> parts = {k};
        for (int i = 0; i < n - k; ++i)
            parts.push_back(1);
        TPoly c = f.coefficient(Partition::from_unsorted(std::move(parts)));
        Rational value = c.coeff(0);
        if (c.degree() > 0)
            throw std::invalid_argument(
                "independence_poly_from_csf: coefficients must be t-free");
        Rational phi = value / Rational(factorial(static_cast<unsigned>(n - k)));
        if (!is_integral(phi))
            throw inconsistent_input_error(
                "independence_poly_from_csf: coefficient of m_(" + std::to_string(k) +
                ",1^" + std::to_string(n - k) + ") is not divisible by (n-k)!");
        out.coeffs[static_cast<size_t>(k)] = static_cast<long long>(phi.get_num().get_si());
    }
    out.normalize();
    return out;
}

UniquenessReport uniqueness_scan(const std::vector<UniquenessEntry>& graphs,
                                 const ChromaticCaps& caps) {
    UniquenessReport report;
    report.graph_count = static_cast<int>(graphs.size());
    std::map<IntPoly, std::vector<size_t>> groups;
    for (size_t i = 0; i < graphs.size(); ++i)
        groups[graphs[i].fingerprint].push_back(i);
    report.fingerprint_groups = static_cast<int>(groups.size());
    for (const auto& [poly, members] : groups) {
        if (members.size() < 2)
            continue;
        // fingerprints collide: compare full chromatic symmetric functions
        std::vector<SymFunc> csfs;
        csfs.reserve(members.size());
        for (size_t idx : members)
            csfs.push_back(csf_colorings(graphs[idx].graph, caps));
        for (size_t a = 0; a < members.size(); ++a) {
            for (size_t b = a + 1; b < members.size(); ++b) {
                UniquenessCollision c;
                c.first = graphs[members[a]].label;
                c.second = graphs[members[b]].label;
                c.equal_csf = csfs[a] == csfs[b];
                c.isomorphic_duplicate =
                    are_isomorphic(graphs[members[a]].graph, graphs[members[b]].graph);
                report.collisions.push_back(std::move(c));
            }
        }
    }
    return report;
}

std::vector<UniquenessEntry> all_generalized_spiders(int max_vertices) {
    std::vector<UniquenessEntry> out;
    for (int body = 3; body <= max_vertices; ++body) {
        int budget = max_vertices - body;
        // leg-length multisets: partitions of s <= budget into at most `body`
        // parts; zero-length legs change nothing and are skipped
        for (int s = 0; s <= budget; ++s) {
            for (const auto& legs : partitions_of(s)) {
                if (legs.length() > body)
                    continue;
                Graph g = generalized_spider(body, legs.parts());
                std::string label = "gspider(" + std::to_string(body) + ";" +
                                    legs.to_string() + ")";
                out.push_back({label, g, IntPoly{}});
            }
        }
    }
    for (auto& entry : out)
        entry.fingerprint = independence_polynomial(entry.graph);
    return out;
}

} // namespace chromatica
