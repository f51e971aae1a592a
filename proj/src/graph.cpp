#include "chromatica/graph.hpp"

#include "chromatica/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chromatica {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1, 0) {
    if (n < 0 || n > 63)
        throw std::invalid_argument("Graph: vertex count out of range");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("Graph: loop edge");
        if (u > v)
            std::swap(u, v);
        if (u < 1 || v > n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)] |= 1ull << v;
        adj_[static_cast<size_t>(v)] |= 1ull << u;
    }
}

int Graph::degree(int v) const {
    return __builtin_popcountll(adj_[static_cast<size_t>(v)]);
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(static_cast<size_t>(n_));
    for (int v = 1; v <= n_; ++v)
        d.push_back(degree(v));
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    std::uint64_t seen = 1ull << 1;
    std::vector<int> stack = {1};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t fresh = adj_[static_cast<size_t>(v)] & ~seen;
        while (fresh) {
            int u = __builtin_ctzll(fresh);
            fresh &= fresh - 1;
            seen |= 1ull << u;
            stack.push_back(u);
        }
    }
    return __builtin_popcountll(seen) == n_;
}

// ---------------------------------------------------------------------------

IntervalSeq::IntervalSeq(std::vector<int> m, int n) : m_(std::move(m)), n_(n) {
    if (n_ < 1)
        throw invalid_family_error("interval sequence: n must be at least 1");
    if (static_cast<int>(m_.size()) != n_ - 1)
        throw invalid_family_error("interval sequence: length must be n-1");
    for (int i = 1; i < n_; ++i) {
        int v = m_[static_cast<size_t>(i - 1)];
        if (v < i || v > n_)
            throw invalid_family_error("interval sequence: need i <= m_i <= n");
        if (i >= 2 && v < m_[static_cast<size_t>(i - 2)])
            throw invalid_family_error("interval sequence: must be non-decreasing");
    }
}

IntervalSeq IntervalSeq::from_values(const std::vector<int>& m) {
    return IntervalSeq(m, static_cast<int>(m.size()) + 1);
}

IntervalSeq IntervalSeq::parse(const std::string& text) {
    std::vector<int> m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            m.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw invalid_family_error("cannot parse interval sequence item '" + item + "'");
        }
    }
    return from_values(m);
}

int IntervalSeq::edge_pair_count() const {
    int total = 0;
    for (int i = 1; i < n_; ++i)
        total += m(i) - i;
    return total;
}

std::string IntervalSeq::to_string() const {
    std::string s;
    for (size_t i = 0; i < m_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(m_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

Graph complete(int n) {
    if (n < 1)
        throw invalid_family_error("complete: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph path(int n) {
    if (n < 1)
        throw invalid_family_error("path: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph spider(const std::vector<int>& legs) {
    if (legs.size() < 3)
        throw invalid_family_error("spider: needs at least 3 legs");
    for (int l : legs)
        if (l < 1)
            throw invalid_family_error("spider: legs must have positive length");
    int total = 1 + std::accumulate(legs.begin(), legs.end(), 0);
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int l : legs) {
        int prev = 1;
        for (int k = 0; k < l; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(total, std::move(edges));
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges(); // already lexicographic
    int m = static_cast<int>(edges.size());
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = edges[static_cast<size_t>(a)];
            const auto& [u2, v2] = edges[static_cast<size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                out.emplace_back(a + 1, b + 1);
        }
    return Graph(m, std::move(out));
}

Graph generalized_spider(int n, const std::vector<int>& legs) {
    if (n < 3)
        throw invalid_family_error("generalized spider: body size must be at least 3");
    int nonzero = 0;
    for (int l : legs) {
        if (l < 0)
            throw invalid_family_error("generalized spider: legs must be nonnegative");
        if (l > 0)
            ++nonzero;
    }
    if (static_cast<int>(legs.size()) > n || nonzero > n)
        throw invalid_family_error("generalized spider: more legs than body vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    int next = n + 1;
    int body = 1;
    for (int l : legs) {
        int prev = body++;
        for (int k = 0; k < l; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next - 1, std::move(edges));
}

Graph generalized_net(int n) {
    if (n < 3)
        throw invalid_family_error("generalized net: body size must be at least 3");
    return generalized_spider(n, {1, 1, 1});
}

Graph nuig(const IntervalSeq& seq) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < seq.n(); ++i)
        for (int j = i + 1; j <= seq.m(i); ++j)
            edges.emplace_back(i, j);
    return Graph(seq.n(), std::move(edges));
}

IntervalSeq horseshoe_crab_seq(int m2, int m3, int n) {
    if (n < 4)
        throw invalid_family_error("horseshoe crab: needs n >= 4");
    std::vector<int> m;
    m.push_back(2);
    m.push_back(m2);
    m.push_back(m3);
    for (int i = 4; i < n; ++i)
        m.push_back(n);
    return IntervalSeq(std::move(m), n);
}

Graph horseshoe_crab(int m2, int m3, int n) {
    return nuig(horseshoe_crab_seq(m2, m3, n));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edges();
    int shift = g.vertex_count();
    for (const auto& [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 1 || v > g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (g.has_edge(vs[a], vs[b]))
                edges.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return Graph(static_cast<int>(vs.size()), std::move(edges));
}

// ---------------------------------------------------------------------------

namespace {

// Visits all k-subsets of {1..n}.
void for_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            fn(pick);
            return;
        }
        for (int v = start; v <= n - (k - pos - 1); ++v) {
            pick[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
}

int induced_edge_count(const Graph& g, const std::vector<int>& vs) {
    int count = 0;
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (g.has_edge(vs[a], vs[b]))
                ++count;
    return count;
}

bool induces_claw(const Graph& g, const std::vector<int>& vs) {
    if (induced_edge_count(g, vs) != 3)
        return false;
    // K_{1,3}: one vertex adjacent to the other three, which are pairwise
    // nonadjacent; with 3 edges it suffices that some vertex has degree 3.
    for (int center : vs) {
        int deg = 0;
        for (int other : vs)
            if (other != center && g.has_edge(center, other))
                ++deg;
        if (deg == 3)
            return true;
    }
    return false;
}

bool induces_p4(const Graph& g, const std::vector<int>& vs) {
    if (induced_edge_count(g, vs) != 3)
        return false;
    int deg1 = 0, deg2 = 0;
    for (int v : vs) {
        int deg = 0;
        for (int other : vs)
            if (other != v && g.has_edge(v, other))
                ++deg;
        if (deg == 1)
            ++deg1;
        else if (deg == 2)
            ++deg2;
        else
            return false; // a degree-3 vertex makes it a claw or worse
    }
    return deg1 == 2 && deg2 == 2; // 3 edges, degrees (2,2,1,1): a path
}

} // namespace

bool is_claw_free(const Graph& g) {
    bool found = false;
    if (g.vertex_count() < 4)
        return true;
    for_subsets(g.vertex_count(), 4, [&](const std::vector<int>& vs) {
        if (!found && induces_claw(g, vs))
            found = true;
    });
    return !found;
}

bool is_p4_free(const Graph& g) {
    bool found = false;
    if (g.vertex_count() < 4)
        return true;
    for_subsets(g.vertex_count(), 4, [&](const std::vector<int>& vs) {
        if (!found && induces_p4(g, vs))
            found = true;
    });
    return !found;
}

bool is_p4_sparse(const Graph& g) {
    if (g.vertex_count() < 5)
        return true;
    bool sparse = true;
    for_subsets(g.vertex_count(), 5, [&](const std::vector<int>& five) {
        if (!sparse)
            return;
        int p4s = 0;
        for (size_t skip = 0; skip < five.size(); ++skip) {
            std::vector<int> four;
            for (size_t i = 0; i < five.size(); ++i)
                if (i != skip)
                    four.push_back(five[i]);
            if (induces_p4(g, four))
                ++p4s;
        }
        if (p4s > 1)
            sparse = false;
    });
    return sparse;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    constexpr int kMaxVertices = 12;
    if (g.vertex_count() > kMaxVertices || h.vertex_count() > kMaxVertices)
        throw unsupported_size_error("are_isomorphic: graphs must have at most 12 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    if (g.degree_sequence() != h.degree_sequence())
        return false;
    int n = g.vertex_count();
    // Map vertices of g in order of decreasing degree.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> image(static_cast<size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::function<bool(size_t)> rec = [&](size_t pos) {
        if (pos == order.size())
            return true;
        int v = order[pos];
        for (int w = 1; w <= n; ++w) {
            if (used[static_cast<size_t>(w)] || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int prev = order[q];
                if (g.has_edge(v, prev) != h.has_edge(w, image[static_cast<size_t>(prev)]))
                    ok = false;
            }
            if (!ok)
                continue;
            used[static_cast<size_t>(w)] = 1;
            image[static_cast<size_t>(v)] = w;
            if (rec(pos + 1))
                return true;
            used[static_cast<size_t>(w)] = 0;
            image[static_cast<size_t>(v)] = 0;
        }
        return false;
    };
    return rec(0);
}

} // namespace chromatica
