#ifndef RAMSEY_STABILITY_HH
#define RAMSEY_STABILITY_HH

#include <ramsey/coloring.hh>
#include <ramsey/extremal.hh>
#include <ramsey/regular_pairs.hh>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramsey
{
    struct ReducedPair
    {
        int i;
        int j;
        double red_density;
        Regularity regularity;
        /// Treated as regular only because sampling found no witness.
        bool unproven;
    };

    struct ReducedGraph
    {
        int M;
        std::vector<Mask> parts;
        std::vector<int> part_map;
        /// Graphs on the M parts.
        SimpleGraph red;
        SimpleGraph blue;
        SimpleGraph irregular;
        std::vector<ReducedPair> pairs;
        double eps;
        double d;
        bool equitable;
        int unproven_pairs;

        auto colored(Color c) const -> const SimpleGraph & { return c == Color::Red ? red : blue; }
    };

    /// Parts must partition the vertices. Exact regularity needs every part
    /// to have 2..14 vertices.
    auto build_reduced(const TwoColoring & c, const std::vector<Mask> & parts, const RegimeParams & p, std::optional<Sampling> sampling = std::nullopt) -> ReducedGraph;

    /// Equitable partition from a seeded shuffle.
    auto random_equitable_parts(int n, int M, std::uint64_t seed) -> std::vector<Mask>;

    enum class PartitionStructure
    {
        Bipartite,
        BipartiteComplement
    };

    auto to_string(PartitionStructure s) -> std::string;

    struct CyclesFound
    {
        /// Length -> witness cycle, for every length in [3, top].
        std::map<int, std::vector<int>> cycles;
        int top;
    };

    struct PartitionFound
    {
        Mask U0;
        Mask U1;
        Mask U2;
        PartitionStructure structure;
    };

    struct Inconclusive
    {
        std::vector<std::string> diagnostics;
    };

    struct DichotomyOutcome
    {
        std::variant<CyclesFound, PartitionFound, Inconclusive> variant;
        /// Range hypotheses on alpha, beta, n that fail; the edge-count
        /// hypothesis is enforced instead.
        std::vector<std::string> unmet;
    };

    struct NsBudget
    {
        /// Vertices tried for U0, lowest degree first; -1 up to the size cap.
        int max_removed = -1;
    };

    /// Requires e(g) > (1/4 - beta) n^2.
    auto ns_check(const SimpleGraph & g, double alpha, double beta, NsBudget budget = {}) -> DichotomyOutcome;

    /// Re-verifies |U0| < 2000 alpha n, the U1/U2 size window and the structure.
    auto check_partition(const SimpleGraph & g, const PartitionFound & p, double alpha, double beta) -> std::vector<std::string>;

    /// The odd t with (1/2 + alpha) M >= t > (1/2 + alpha) M - 2.
    auto ring_length(int M, double alpha) -> int;

    struct Case1Witness
    {
        /// Indices into the partition, in ring order.
        std::vector<int> ring;
        Color color;
        int t;
        /// Per consecutive pair: density in `color` and its regularity verdict at eps.
        std::vector<double> densities;
        std::vector<Regularity> regularity;
    };

    struct Case2Witness
    {
        ExtremalAssessment assessment;
        double threshold;
    };

    struct ClassifyBudget
    {
        ExtremalMode extremal_mode = ExtremalMode::Exact;
        std::uint64_t seed = 1;
    };

    struct Classification
    {
        std::variant<Case1Witness, Case2Witness, Inconclusive> outcome;
        ReducedGraph reduced;
        int t;
        double lambda_star;
        std::vector<std::string> flags;
    };

    auto main2_classify(const TwoColoring & c, const std::vector<Mask> & parts, const RegimeParams & p, std::optional<Sampling> sampling = std::nullopt,
        ClassifyBudget budget = {}) -> Classification;
}

#endif
