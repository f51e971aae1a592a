// Independent reference implementations used only by tests. These stay
// deliberately naive so they cannot share bugs with the library code.
#ifndef CHROMATICA_TEST_ORACLES_HPP
#define CHROMATICA_TEST_ORACLES_HPP

#include "chromatica/graph.hpp"
#include "chromatica/partition.hpp"
#include "chromatica/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

// Partition numbers by the classic two-variable recurrence
// p(n, k) = p(n-k, k) + p(n, k+1).
inline long long partition_count(int n) {
    std::vector<std::vector<long long>> memo(static_cast<size_t>(n) + 1,
                                             std::vector<long long>(static_cast<size_t>(n) + 2, -1));
    std::function<long long(int, int)> p = [&](int rem, int min_part) -> long long {
        if (rem == 0)
            return 1;
        if (min_part > rem)
            return 0;
        long long& slot = memo[static_cast<size_t>(rem)][static_cast<size_t>(min_part)];
        if (slot >= 0)
            return slot;
        return slot = p(rem - min_part, min_part) + p(rem, min_part + 1);
    };
    return p(n, 1);
}

// Chromatic polynomial at k by deletion-contraction.
inline chromatica::Integer chromatic_polynomial(const chromatica::Graph& g, int k) {
    using chromatica::Graph;
    using chromatica::Integer;
    if (g.edge_count() == 0) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned>(k),
                      static_cast<unsigned>(g.vertex_count()));
        return r;
    }
    auto [u, v] = g.edges().front();
    // deletion
    std::vector<std::pair<int, int>> del(g.edges().begin() + 1, g.edges().end());
    Graph gd(g.vertex_count(), del);
    // contraction: relabel v as u, drop loops, dedup
    std::vector<std::pair<int, int>> con;
    for (auto [a, b] : del) {
        if (a == v)
            a = u;
        if (b == v)
            b = u;
        if (a == b)
            continue;
        if (a > v)
            --a;
        if (b > v)
            --b;
        con.emplace_back(a, b);
    }
    Graph gc(g.vertex_count() - 1, con);
    return chromatic_polynomial(gd, k) - chromatic_polynomial(gc, k);
}

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu (row-weakly-increasing, column-strictly-increasing fillings).
inline long long kostka_number(const chromatica::Partition& lambda,
                               const chromatica::Partition& mu) {
    using chromatica::Partition;
    if (lambda.sum() != mu.sum())
        return 0;
    int rows = lambda.length();
    int colors = mu.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);
    std::vector<int> remaining;
    for (int i = 0; i < colors; ++i)
        remaining.push_back(mu.part(i));
    long long count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.part(r)) {
            ++nr;
            nc = 0;
        }
        for (int x = 1; x <= colors; ++x) {
            if (remaining[static_cast<size_t>(x - 1)] == 0)
                continue;
            if (c > 0 && fill[static_cast<size_t>(r)][static_cast<size_t>(c) - 1] > x)
                continue;
            if (r > 0 && fill[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] >= x)
                continue;
            --remaining[static_cast<size_t>(x - 1)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = x;
            rec(nr, nc);
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            ++remaining[static_cast<size_t>(x - 1)];
        }
    };
    rec(0, 0);
    return count;
}

// Uniform-ish random graph on n vertices with edge probability num/den,
// optionally resampled until connected.
inline chromatica::Graph random_graph(std::mt19937_64& rng, int n, double p,
                                      bool require_connected) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (coin(rng) < p)
                    edges.emplace_back(i, j);
        chromatica::Graph g(n, std::move(edges));
        if (!require_connected || g.is_connected())
            return g;
    }
}

// Random valid natural unit interval sequence on [n].
inline chromatica::IntervalSeq random_interval_seq(std::mt19937_64& rng, int n) {
    std::vector<int> m(static_cast<size_t>(n) - 1);
    int prev = 1;
    for (int i = 1; i < n; ++i) {
        int lo = std::max(i, prev);
        std::uniform_int_distribution<int> pick(lo, n);
        int v = pick(rng);
        m[static_cast<size_t>(i - 1)] = v;
        prev = v;
    }
    return chromatica::IntervalSeq(std::move(m), n);
}

// AHU canonical string of a tree rooted at its centroid(s); equal strings
// iff isomorphic. Adjacency given 1-based.
inline std::string tree_canonical_form(const chromatica::Graph& g) {
    int n = g.vertex_count();
    std::function<std::string(int, int)> encode = [&](int v, int parent) -> std::string {
        std::vector<std::string> children;
        for (int u = 1; u <= n; ++u)
            if (u != parent && g.has_edge(v, u))
                children.push_back(encode(u, v));
        std::sort(children.begin(), children.end());
        std::string s = "(";
        for (const auto& c : children)
            s += c;
        return s + ")";
    };
    // centroid: vertex minimizing the largest component of its removal
    std::vector<int> size(static_cast<size_t>(n) + 1, 0);
    std::function<int(int, int)> compute_size = [&](int v, int parent) {
        int s = 1;
        for (int u = 1; u <= n; ++u)
            if (u != parent && g.has_edge(v, u))
                s += compute_size(u, v);
        size[static_cast<size_t>(v)] = s;
        return s;
    };
    compute_size(1, 0);
    int best = n + 1;
    std::vector<int> centroids;
    std::function<void(int, int)> find = [&](int v, int parent) {
        int worst = n - size[static_cast<size_t>(v)];
        for (int u = 1; u <= n; ++u)
            if (u != parent && g.has_edge(v, u)) {
                worst = std::max(worst, size[static_cast<size_t>(u)]);
                find(u, v);
            }
        if (worst < best) {
            best = worst;
            centroids = {v};
        } else if (worst == best) {
            centroids.push_back(v);
        }
    };
    find(1, 0);
    std::vector<std::string> encodings;
    for (int c : centroids)
        encodings.push_back(encode(c, 0));
    std::sort(encodings.begin(), encodings.end());
    return encodings.front();
}

// All unlabeled trees on 1..max_n vertices, one representative each, grown
// by leaf attachment with canonical-form dedup.
inline std::vector<chromatica::Graph> all_trees_up_to(int max_n) {
    using chromatica::Graph;
    std::vector<Graph> result;
    std::vector<Graph> level = {Graph(1, {})};
    result.push_back(level.front());
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& t : level) {
            for (int attach = 1; attach < n; ++attach) {
                auto edges = t.edges();
                edges.emplace_back(attach, n);
                Graph bigger(n, edges);
                std::string key = tree_canonical_form(bigger);
                if (seen.insert(key).second)
                    next.push_back(bigger);
            }
        }
        for (const auto& t : next)
            result.push_back(t);
        level = std::move(next);
    }
    return result;
}

} // namespace oracles

#endif
