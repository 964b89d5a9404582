#include <ramsey/errors.hh>
#include <ramsey/graph.hh>

#include <algorithm>

namespace ramsey
{
    auto to_string(Count c) -> std::string
    {
        if (c == 0)
            return "0";
        std::string s;
        while (c > 0) {
            s.push_back(char('0' + int(c % 10)));
            c /= 10;
        }
        std::reverse(s.begin(), s.end());
        return s;
    }

    auto vertices_of(Mask m) -> std::vector<int>
    {
        std::vector<int> result;
        for_each_vertex(m, [&](int v) { result.push_back(v); });
        return result;
    }

    auto mask_of(std::span<const int> vs) -> Mask
    {
        Mask m = 0;
        for (int v : vs) {
            if (v < 0 || v >= max_vertices)
                throw PreconditionError("vertex " + std::to_string(v) + " out of range");
            m |= bit(v);
        }
        return m;
    }

    auto binomial(int n, int k) -> Count
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        Count r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * Count(n - k + i) / Count(i);
        return r;
    }

    SimpleGraph::SimpleGraph(int n) :
        _n(n),
        _adj(std::size_t(std::max(n, 0)), 0)
    {
        if (n < 0 || n > max_vertices)
            throw PreconditionError("graph size " + std::to_string(n) + " outside [0, " + std::to_string(max_vertices) + "]");
    }

    auto SimpleGraph::complete(int n) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (int v = 0; v < n; ++v)
            g._adj[v] = g.all() & ~bit(v);
        return g;
    }

    auto SimpleGraph::complete_bipartite(int a, int b) -> SimpleGraph
    {
        SimpleGraph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto SimpleGraph::cycle(int n) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (int v = 0; v < n; ++v)
            if (n >= 3 || v + 1 < n)
                g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto SimpleGraph::path(int n) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto SimpleGraph::from_edges(int n, std::span<const Edge> edges) -> SimpleGraph
    {
        SimpleGraph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto SimpleGraph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n || u == v)
            throw PreconditionError("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        _adj[u] |= bit(v);
        _adj[v] |= bit(u);
    }

    auto SimpleGraph::remove_edge(int u, int v) -> void
    {
        _adj[u] &= ~bit(v);
        _adj[v] &= ~bit(u);
    }

    auto SimpleGraph::edge_count() const -> long
    {
        long total = 0;
        for (auto row : _adj)
            total += popcount(row);
        return total / 2;
    }

    auto SimpleGraph::edges_within(Mask m) const -> long
    {
        long total = 0;
        for_each_vertex(m, [&](int v) { total += popcount(_adj[v] & m); });
        return total / 2;
    }

    auto SimpleGraph::edges_between(Mask x, Mask y) const -> long
    {
        long total = 0;
        for_each_vertex(x, [&](int v) { total += popcount(_adj[v] & y); });
        return total;
    }

    auto SimpleGraph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < _n; ++u)
            for_each_vertex(_adj[u] & ~low_bits(u + 1), [&](int v) { result.emplace_back(u, v); });
        return result;
    }

    auto SimpleGraph::complement() const -> SimpleGraph
    {
        SimpleGraph g(_n);
        for (int v = 0; v < _n; ++v)
            g._adj[v] = all() & ~_adj[v] & ~bit(v);
        return g;
    }

    auto SimpleGraph::relabelled(std::span<const int> perm) const -> SimpleGraph
    {
        if (int(perm.size()) != _n)
            throw PreconditionError("permutation size mismatch");
        SimpleGraph g(_n);
        for (int u = 0; u < _n; ++u)
            for (int v = u + 1; v < _n; ++v)
                if (adjacent(perm[u], perm[v]))
                    g.add_edge(u, v);
        return g;
    }

    auto SimpleGraph::restricted(Mask m) const -> SimpleGraph
    {
        SimpleGraph g(_n);
        for (int v = 0; v < _n; ++v)
            g._adj[v] = contains(m, v) ? _adj[v] & m : 0;
        return g;
    }
}
