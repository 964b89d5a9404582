#ifndef RAMSEY_COUNTING_HH
#define RAMSEY_COUNTING_HH

#include <ramsey/coloring.hh>
#include <ramsey/graph.hh>
#include <ramsey/pattern.hh>

#include <map>
#include <optional>
#include <vector>

namespace ramsey
{
    /// Number of subgraphs of g isomorphic to h, each counted once. A pattern
    /// with more vertices than g gives zero.
    auto count_copies(const SimpleGraph & g, const Pattern & h) -> Count;

    /// Number of copies of h in g that use the edge uv, which must be present in g.
    auto count_copies_through_edge(const SimpleGraph & g, const Pattern & h, int u, int v) -> Count;

    struct MonoCounts
    {
        Count red = 0;
        Count blue = 0;

        auto total() const -> Count { return red + blue; }
        auto operator== (const MonoCounts &) const -> bool = default;
    };

    auto mono_counts(const TwoColoring & c, const Pattern & h) -> MonoCounts;

    /// Cycles of length exactly k, k >= 3.
    auto count_cycles(const SimpleGraph & g, int k) -> Count;

    /// Paths on exactly k vertices, k >= 2.
    auto count_paths(const SimpleGraph & g, int k) -> Count;

    /// Cliques on exactly k vertices.
    auto count_cliques(const SimpleGraph & g, int k) -> Count;

    /// Injective edge-preserving maps from h into g.
    auto count_embeddings(const SimpleGraph & g, const SimpleGraph & h) -> Count;

    /// A cycle of length exactly k as a vertex sequence, if one exists.
    auto find_cycle(const SimpleGraph & g, int k) -> std::optional<std::vector<int>>;

    /// A clique of order k, if one exists.
    auto find_clique(const SimpleGraph & g, int k, Mask within) -> std::optional<Mask>;

    /// Every cycle length t in [3, max_len] present in g, with one witness cycle each.
    auto cycle_spectrum(const SimpleGraph & g, int max_len) -> std::map<int, std::vector<int>>;

    /// True if the sequence is a cycle of g (distinct vertices, consecutive and closing edges present).
    auto is_cycle_in(const SimpleGraph & g, const std::vector<int> & cycle) -> bool;
}

#endif
