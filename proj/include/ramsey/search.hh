#ifndef RAMSEY_SEARCH_HH
#define RAMSEY_SEARCH_HH

#include <ramsey/coloring.hh>
#include <ramsey/pattern.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// Largest board the exhaustive search accepts. Eight is routine; nine
    /// needs a long run (use a checkpoint); beyond that is out of reach anyway.
    inline constexpr int max_search_vertices = 16;

    inline constexpr std::uint64_t default_budget_nodes = 4'000'000'000ULL;

    struct SearchBudget
    {
        std::uint64_t max_nodes = default_budget_nodes;
        /// Zero means no wall-clock cap.
        std::chrono::milliseconds max_time{0};
        int threads = 1;
        /// 0: no vertex-permutation pruning; 1: all transpositions;
        /// 2: transpositions and 3-cycles.
        int symmetry_level = 1;
        /// When non-empty, completed subtrees are recorded here and skipped on rerun.
        std::string checkpoint_path;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t leaves = 0;
        std::uint64_t bound_prunes = 0;
        std::uint64_t symmetry_prunes = 0;
        std::uint64_t tasks = 0;
        std::uint64_t tasks_completed = 0;
        std::uint64_t tasks_from_checkpoint = 0;
        std::size_t permutations = 0;
        double elapsed_seconds = 0.0;

        auto operator+= (const SearchStats & o) -> SearchStats &;
    };

    /// Minimum number of monochromatic copies over colourings of K_n.
    struct MultiplicityReport
    {
        Pattern pattern;
        int n;
        /// Exact minimum when exact, else the best value found (an upper bound).
        Count value;
        bool exact;
        TwoColoring witness;
        SearchStats stats;
    };

    auto multiplicity(const Pattern & h, int n, const SearchBudget & budget = {}) -> MultiplicityReport;

    struct RamseyNumberReport
    {
        Pattern pattern;
        int n_max;
        /// Smallest n <= n_max with no monochromatic-free colouring; empty when
        /// every n up to n_max admits one, or the search was cut short.
        std::optional<int> value;
        /// True when value (or "exceeds n_max") is proven.
        bool exact;
        /// Colouring of K_{value-1} (or K_{n_max}) with no monochromatic copy.
        TwoColoring witness_below;
        SearchStats stats;
    };

    auto ramsey_number(const Pattern & h, int n_max, const SearchBudget & budget = {}) -> RamseyNumberReport;

    struct ThresholdReport
    {
        RamseyNumberReport ramsey;
        std::optional<MultiplicityReport> multiplicity;

        auto exact() const -> bool { return ramsey.exact && ramsey.value && multiplicity && multiplicity->exact; }
    };

    /// m(H) = M(H, r(H)).
    auto threshold_multiplicity(const Pattern & h, int n_max, const SearchBudget & budget = {}) -> ThresholdReport;

    /// The colourings tried before searching: every two-clique split and every
    /// circulant colouring. Used to seed the incumbent.
    auto heuristic_colorings(int n) -> std::vector<TwoColoring>;
}

#endif
