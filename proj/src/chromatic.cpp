#include "chromatica/chromatic.hpp"

#include "chromatica/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace chromatica {

namespace {

// Counts proper colorings of g whose class-size sequence equals the budget
// composition exactly, accumulating t^asc into a polynomial. Vertices are
// assigned in label order; every leaf exhausts all budgets because the
// budgets sum to n.
class BudgetCounter {
public:
    BudgetCounter(const Graph& g, const std::vector<int>& budgets, bool track_asc)
        : g_(g), budgets_(budgets), track_asc_(track_asc),
          class_mask_(budgets.size(), 0),
          counts_(1 + (track_asc ? g.edge_count() : 0), Integer(0)) {}

    // counts[k] = number of colorings with asc == k (all in counts[0] when
    // ascents are not tracked).
    std::vector<Integer> run() {
        descend(1, 0);
        return counts_;
    }

private:
    void descend(int v, int asc) {
        if (v > g_.vertex_count()) {
            counts_[static_cast<size_t>(asc)] += 1;
            return;
        }
        std::uint64_t nbr = g_.adjacency_mask(v);
        for (size_t c = 0; c < budgets_.size(); ++c) {
            if (budgets_[c] == 0 || (nbr & class_mask_[c]))
                continue;
            int added = 0;
            if (track_asc_) {
                // ascents from earlier-labeled neighbors in lower classes
                for (size_t c2 = 0; c2 < c; ++c2)
                    added += __builtin_popcountll(nbr & class_mask_[c2]);
            }
            --budgets_[c];
            class_mask_[c] |= 1ull << v;
            descend(v + 1, asc + added);
            class_mask_[c] &= ~(1ull << v);
            ++budgets_[c];
        }
    }

    const Graph& g_;
    std::vector<int> budgets_;
    bool track_asc_;
    std::vector<std::uint64_t> class_mask_;
    std::vector<Integer> counts_;
};

TPoly poly_from_counts(const std::vector<Integer>& counts) {
    std::vector<Rational> c;
    c.reserve(counts.size());
    for (const auto& k : counts)
        c.emplace_back(k);
    return TPoly(std::move(c));
}

void check_vertex_cap(const Graph& g, const ChromaticCaps& caps, const char* who) {
    if (g.vertex_count() > caps.max_vertices)
        throw unsupported_size_error(std::string(who) + ": graph has " +
                                     std::to_string(g.vertex_count()) +
                                     " vertices, cap is " +
                                     std::to_string(caps.max_vertices));
}

} // namespace

SymFunc csf_colorings(const Graph& g, const ChromaticCaps& caps) {
    check_vertex_cap(g, caps, "csf_colorings");
    int n = g.vertex_count();
    SymFunc out(Basis::M, n);
    for (const auto& lambda : partitions_of(n)) {
        auto counts = BudgetCounter(g, lambda.parts(), false).run();
        if (counts[0] != 0)
            out.add_term(lambda, TPoly(Rational(counts[0])));
    }
    return out;
}

SymFunc qcsf_colorings(const Graph& g, const ChromaticCaps& caps, bool skip_symmetry_check) {
    check_vertex_cap(g, caps, "qcsf_colorings");
    int n = g.vertex_count();
    SymFunc out(Basis::M, n);
    for (const auto& lambda : partitions_of(n)) {
        TPoly poly = poly_from_counts(BudgetCounter(g, lambda.parts(), true).run());
        if (poly.is_zero())
            continue;
        if (!skip_symmetry_check && lambda.length() > 1 &&
            lambda.part(0) != lambda.part(lambda.length() - 1)) {
            std::vector<int> reversed(lambda.parts().rbegin(), lambda.parts().rend());
            TPoly check = poly_from_counts(BudgetCounter(g, reversed, true).run());
            if (check != poly)
                throw not_symmetric_error(
                    "qcsf_colorings: class pattern " + lambda.to_string() +
                    " gives " + poly.to_string() + " but its reversal gives " +
                    check.to_string() + "; the labeling is not a natural unit "
                    "interval order");
        }
        out.add_term(lambda, poly);
    }
    return out;
}

SymFunc csf_subsets(const Graph& g, const ChromaticCaps& caps) {
    if (g.edge_count() > caps.max_edges)
        throw unsupported_size_error("csf_subsets: graph has " +
                                     std::to_string(g.edge_count()) +
                                     " edges, cap is " + std::to_string(caps.max_edges));
    int n = g.vertex_count();
    int m = g.edge_count();
    const auto& edges = g.edges();
    SymFunc out(Basis::P, n);
    std::map<Partition, Integer, DescLex> acc;
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    std::vector<int> size(static_cast<size_t>(n) + 1);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (std::uint64_t s = 0; s < (1ull << m); ++s) {
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(size.begin(), size.end(), 1);
        std::uint64_t bits = s;
        while (bits) {
            int e = __builtin_ctzll(bits);
            bits &= bits - 1;
            int a = find(edges[static_cast<size_t>(e)].first);
            int b = find(edges[static_cast<size_t>(e)].second);
            if (a != b) {
                if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)])
                    std::swap(a, b);
                parent[static_cast<size_t>(b)] = a;
                size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
            }
        }
        std::vector<int> comp_sizes;
        for (int v = 1; v <= n; ++v)
            if (find(v) == v)
                comp_sizes.push_back(size[static_cast<size_t>(v)]);
        std::sort(comp_sizes.begin(), comp_sizes.end(), std::greater<int>());
        Integer sign = (__builtin_popcountll(s) % 2 == 0) ? 1 : -1;
        acc[Partition(std::move(comp_sizes))] += sign;
    }
    for (const auto& [lam, c] : acc)
        if (c != 0)
            out.add_term(lam, TPoly(Rational(c)));
    return out;
}

IntervalSeq concat_interval_seqs(const IntervalSeq& a, const IntervalSeq& b) {
    std::vector<int> m;
    m.reserve(static_cast<size_t>(a.n() + b.n() - 1));
    for (int v : a.values())
        m.push_back(v);
    m.push_back(a.n()); // the last vertex of a is isolated from b's block
    for (int v : b.values())
        m.push_back(v + a.n());
    return IntervalSeq(std::move(m), a.n() + b.n());
}

bool product_check(const Graph& g, const Graph& h, const ChromaticCaps& caps) {
    SymFunc lhs = csf_subsets(disjoint_union(g, h), caps);
    SymFunc rhs = csf_subsets(g, caps) * csf_subsets(h, caps);
    return lhs == rhs;
}

bool product_check(const IntervalSeq& a, const IntervalSeq& b, const ChromaticCaps& caps) {
    Graph ga = nuig(a);
    Graph gb = nuig(b);
    if (!product_check(ga, gb, caps))
        return false;
    SymFunc lhs = qcsf_colorings(nuig(concat_interval_seqs(a, b)), caps);
    SymFunc rhs = qcsf_colorings(ga, caps) * qcsf_colorings(gb, caps);
    return lhs == rhs;
}

} // namespace chromatica
