#ifndef RAMSEY_GRAPH_HH
#define RAMSEY_GRAPH_HH

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey
{
    /// Hard vertex cap: one 64-bit word per adjacency row.
    inline constexpr int max_vertices = 64;

    /// A vertex subset of a graph with at most max_vertices vertices.
    using Mask = std::uint64_t;

    /// Copy counts. 128 bits: C(17,9) * 8!/2 already overflows 32 bits and
    /// desk-scale cycle counts can overflow 64.
    using Count = unsigned __int128;

    auto to_string(Count c) -> std::string;

    inline auto bit(int v) -> Mask { return Mask{1} << v; }

    inline auto low_bits(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    inline auto popcount(Mask m) -> int { return std::popcount(m); }

    inline auto contains(Mask m, int v) -> bool { return (m >> v) & 1; }

    /// Calls f(v) for every vertex v in m, in increasing order.
    template <typename F_>
    auto for_each_vertex(Mask m, F_ && f) -> void
    {
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            f(v);
        }
    }

    auto vertices_of(Mask m) -> std::vector<int>;

    auto mask_of(std::span<const int> vs) -> Mask;

    /// Binomial coefficient, exact in 128 bits for every argument used here.
    auto binomial(int n, int k) -> Count;

    using Edge = std::pair<int, int>;

    /// Undirected simple graph on at most max_vertices vertices, bitset rows.
    class SimpleGraph
    {
        public:
            SimpleGraph() = default;
            explicit SimpleGraph(int n);

            static auto complete(int n) -> SimpleGraph;
            static auto complete_bipartite(int a, int b) -> SimpleGraph;
            static auto cycle(int n) -> SimpleGraph;
            static auto path(int n) -> SimpleGraph;
            static auto from_edges(int n, std::span<const Edge> edges) -> SimpleGraph;

            auto size() const -> int { return _n; }
            auto all() const -> Mask { return low_bits(_n); }
            auto neighbours(int v) const -> Mask { return _adj[v]; }
            auto adjacent(int u, int v) const -> bool { return contains(_adj[u], v); }
            auto degree(int v) const -> int { return popcount(_adj[v]); }
            auto degree_into(int v, Mask m) const -> int { return popcount(_adj[v] & m); }

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;

            auto edge_count() const -> long;
            /// Edges with both ends in m.
            auto edges_within(Mask m) const -> long;
            /// Edges with one end in x and the other in y; x and y disjoint.
            auto edges_between(Mask x, Mask y) const -> long;
            auto edges() const -> std::vector<Edge>;

            auto complement() const -> SimpleGraph;
            /// Vertex v of the result is vertex perm[v] of this graph.
            auto relabelled(std::span<const int> perm) const -> SimpleGraph;
            /// Keeps only edges inside m; vertex numbering unchanged.
            auto restricted(Mask m) const -> SimpleGraph;

            auto operator== (const SimpleGraph &) const -> bool = default;

        private:
            int _n = 0;
            std::vector<Mask> _adj;
    };
}

#endif
