#ifndef RAMSEY_EXTREMAL_HH
#define RAMSEY_EXTREMAL_HH

#include <ramsey/coloring.hh>
#include <ramsey/errors.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey
{
    /// Blue cliques on 0..a-1 and a..a+b-1, every cross edge red.
    auto chi(int a, int b) -> TwoColoring;

    inline constexpr int max_exact_extremal_vertices = 24;

    enum class ExtremalMode
    {
        Exact,
        LocalSearch
    };

    struct ExtremalAssessment
    {
        Mask A;
        Mask B;
        double lambda_star;
        /// The colour that is dense inside both parts.
        Color within;
    };

    /// Smallest lambda for which (A, B) witnesses an extremal colouring with
    /// `within` dense inside the parts. Part density is e(A)/C(|A|,2); a
    /// single vertex counts as density 1.
    auto extremal_lambda(const TwoColoring & c, Mask A, Mask B, Color within) -> double;

    /// Exact mode minimises over every bipartition and both colour roles
    /// (n <= 24). Local-search mode returns an upper bound from seeded
    /// single-vertex moves.
    auto extremal_parameter(const TwoColoring & c, ExtremalMode mode = ExtremalMode::Exact, std::uint64_t seed = 1) -> ExtremalAssessment;

    struct CleanupResult
    {
        Mask A_prime;
        Mask B_prime;
        Mask X;
        Mask Y;
        double lambda;
        /// True when colours were exchanged so that red is dense inside the parts.
        bool colors_swapped;
    };

    /// Removes from A (into X) the vertices whose within-part red degree is at
    /// most (1-sqrt(lambda))(|A|-1) or whose blue degree into B is at most
    /// (1-sqrt(lambda))|B|; Y likewise. Colours are normalised first.
    /// Throws PreconditionError naming the failed density inequality.
    auto cleanup(const TwoColoring & c, Mask A, Mask B, double lambda) -> CleanupResult;

    /// Integer lower bound on l-cycles through an edge inside S when every
    /// pair of S has s common neighbours in T. Exact: for odd l the base
    /// s - l/2 + 3/2 is an integer.
    auto claim_common_neighbor_bound(int s, int S_size, int l) -> Count;

    /// ((l-1)/2 - 3)/e)^(l-6), as a real.
    auto claim_bridged_cliques_bound(int l) -> double;

    /// ((l-5)/(2e))^(l-5), as a real.
    auto claim_alternating_bound(int l) -> double;

    /// floor of a real bound; anything below 1 is threshold 0.
    auto bound_threshold(double bound) -> Count;

    struct ClaimCheck
    {
        double bound;
        Count threshold;
        Count exact_count;
        bool pass;
        /// Common-neighbour count used (first claim only).
        std::optional<int> s;
    };

    /// s is the least number of common neighbours in T over pairs of S.
    auto verify_claim_common_neighbor(const SimpleGraph & f, Mask S, Mask T, int l) -> ClaimCheck;

    /// Paths run from their S end to their T end (either orientation accepted).
    auto verify_claim_bridged_cliques(const SimpleGraph & f, Mask S, Mask T, const std::vector<int> & P1, const std::vector<int> & P2, int l) -> ClaimCheck;

    auto verify_claim_alternating(const SimpleGraph & f, Mask S, Mask T, int w, const std::vector<int> & P_prime, int l) -> ClaimCheck;

    /// Raised by two_matching_reduction when two vertex-disjoint S-T edges exist.
    class TwoMatchingFound : public Error
    {
        public:
            TwoMatchingFound(Edge first, Edge second);

            auto edges() const -> std::pair<Edge, Edge> { return {_first, _second}; }

        private:
            Edge _first, _second;
    };

    /// Two vertex-disjoint edges between S and T, each written (S end, T end).
    auto find_two_matching(const SimpleGraph & f, Mask S, Mask T) -> std::optional<std::pair<Edge, Edge>>;

    /// A vertex whose removal leaves no S-T edge, or nothing when there is no
    /// S-T edge to begin with. Throws TwoMatchingFound otherwise.
    auto two_matching_reduction(const SimpleGraph & f, Mask S, Mask T) -> std::optional<int>;

    struct CaseTwoCertificate
    {
        Count bound;
        /// blue-edge-in-clique, two-red-bridges, blue-two-path or red-clique-K_k.
        std::string claim_used;
        /// Colour of the counted cycles in the input's own colours.
        Color cycle_color;
        bool colors_swapped;
        CleanupResult cleanup;
        /// Named vertex lists instantiating the claim (sets, paths, edges).
        std::map<std::string, std::vector<int>> witness;
        std::optional<int> s;
        /// Decision-tree branches visited, in order.
        std::vector<std::string> trail;
    };

    /// Lower bound on monochromatic C_k copies for a colouring of K_{2k-1}
    /// that is extremal at lambda with partition (A, B).
    auto case2_lower_bound(const TwoColoring & c, int k, Mask A, Mask B, double lambda) -> CaseTwoCertificate;
}

#endif
