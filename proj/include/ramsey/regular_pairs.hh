#ifndef RAMSEY_REGULAR_PAIRS_HH
#define RAMSEY_REGULAR_PAIRS_HH

#include <ramsey/graph.hh>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ramsey
{
    /// e(X,Y)/|X||Y| for disjoint X, Y; 2e(X)/|X|^2 when X == Y.
    auto density(Mask X, Mask Y, const SimpleGraph & g) -> double;

    inline constexpr int max_exact_regularity_side = 14;

    enum class Regularity
    {
        Regular,
        Irregular,
        Unknown
    };

    auto to_string(Regularity r) -> std::string;

    struct RegularityResult
    {
        Regularity verdict;
        /// Violating (U, V) when Irregular.
        std::optional<std::pair<Mask, Mask>> witness;
        /// |d(U,V) - d(X,Y)| of the witness, or the largest deviation seen.
        double deviation;
    };

    struct Sampling
    {
        int samples;
        std::uint64_t seed;
    };

    /// Without sampling: exact decision over every U, V above the size floor
    /// (|X|, |Y| <= 14). With sampling: subset pairs of exactly the floor sizes;
    /// never answers Regular.
    auto check_regularity(Mask X, Mask Y, const SimpleGraph & g, double eps, std::optional<Sampling> sampling = std::nullopt) -> RegularityResult;

    /// Smallest eps (to within one ulp) at which (X, Y) is eps-regular.
    auto regularity_defect(Mask X, Mask Y, const SimpleGraph & g) -> double;

    struct ExceptionCounts
    {
        int high;
        int low;
    };

    /// Vertices of X with degree into Y' above (d+eps)|Y'| and below (d-eps)|Y'|.
    auto degree_exception_counts(Mask X, Mask Y_prime, const SimpleGraph & g, double d, double eps) -> ExceptionCounts;

    /// Regularity parameter inherited by large slices: max(eps/alpha, 2 eps).
    auto slice_params(double eps, double alpha) -> double;

    /// Disjoint classes V_0..V_{t-1}, indices mod t, with edges kept only
    /// between consecutive classes.
    class PairSystem
    {
        public:
            PairSystem(std::vector<Mask> classes, const SimpleGraph & host);

            static auto complete(int t, const std::vector<int> & sizes) -> PairSystem;
            static auto complete_minus_matching(int t, const std::vector<int> & sizes) -> PairSystem;
            static auto quasirandom(int t, const std::vector<int> & sizes, double d, std::mt19937_64 & rng) -> PairSystem;

            auto t() const -> int { return int(_classes.size()); }
            auto cls(long i) const -> Mask;
            auto graph() const -> const SimpleGraph & { return _graph; }
            auto min_class_size() const -> int;

        private:
            std::vector<Mask> _classes;
            SimpleGraph _graph;
    };

    inline constexpr std::uint64_t default_transversal_budget = 1'000'000'000ULL;

    /// Transversal paths w_0 .. w_l from w0 with distinct vertices.
    auto count_transversal_paths(const PairSystem & sys, int w0, int l, std::uint64_t budget = default_transversal_budget) -> Count;

    /// Transversal paths of length l from w0 to w0' (t must divide l). When
    /// w0 == w0' these are closed: every other vertex is distinct.
    auto count_transversal_paths_between(const PairSystem & sys, int w0, int w0_prime, int l, std::uint64_t budget = default_transversal_budget) -> Count;

    /// Counts from w0 by final vertex; entry w0 holds the closed paths when
    /// `closed` is set and l >= 3.
    auto transversal_path_endpoints(const PairSystem & sys, int w0, int l, bool closed, std::uint64_t budget = default_transversal_budget) -> std::vector<Count>;

    struct RegimeParams
    {
        double eps;
        double d;
        double alpha;
        double lambda;
        int t;
        int M;
        /// False when the values were supplied freely rather than derived.
        bool paper_mode;

        /// alpha = 20 sqrt(eps), lambda = 300 sqrt(alpha), d = 12 sqrt(eps).
        static auto paper(double eps, int t, int M) -> RegimeParams;
        static auto explorer(double eps, double d, double alpha, double lambda, int t, int M) -> RegimeParams;
    };

    struct BoundEvaluation
    {
        /// Rounded down; negative bases and factors are clamped to 0.
        double value;
        /// Hypotheses that fail at the given parameters.
        std::vector<std::string> unmet;

        auto hypotheses_met() const -> bool { return unmet.empty(); }
    };

    auto countpath2_part1_bound(const RegimeParams & p, long n, int l) -> BoundEvaluation;
    auto countpath2_part2_bound(const RegimeParams & p, long n, int l) -> BoundEvaluation;
    auto countcycle1_bound(const RegimeParams & p, long n, int cycle_len) -> BoundEvaluation;

    enum class CountingLemma
    {
        PathsFromVertex,
        PathsBetweenVertices,
        Cycles
    };

    auto to_string(CountingLemma l) -> std::string;

    enum class Family
    {
        Complete,
        CompleteMinusMatching,
        Quasirandom
    };

    auto to_string(Family f) -> std::string;

    struct GeneratorSpec
    {
        std::vector<int> ts{2, 3};
        int min_size = 4;
        int max_size = 10;
        std::vector<Family> families{Family::Complete, Family::CompleteMinusMatching, Family::Quasirandom};
        int instances = 100;
        double quasirandom_density = 0.5;
        /// Path length for the paths-from-vertex lemma.
        int part1_length = 4;
        /// Cycle length for the cycle lemma (odd t only).
        int cycle_length = 5;
        int threads = 0;
    };

    enum class Verdict
    {
        Pass,
        Vacuous,
        Fail
    };

    auto to_string(Verdict v) -> std::string;

    struct PairCertificate
    {
        Mask X;
        Mask Y;
        double eps_hat;
        double d;
    };

    struct LemmaRow
    {
        Family family;
        int t;
        int size;
        int instance;
        int length;
        double eps_hat;
        double d;
        long n;
        double bound;
        /// Minimum over qualifying start vertices (pairs for the second
        /// lemma); the total for the cycle lemma. Empty if none qualify.
        std::optional<Count> exact;
        Verdict verdict;
        std::vector<std::string> unmet;
        std::vector<PairCertificate> pairs;
    };

    struct CountingLemmaReport
    {
        CountingLemma lemma;
        std::uint64_t seed;
        std::vector<LemmaRow> rows;
        int passes = 0;
        int vacuous = 0;
        int failures = 0;
    };

    auto verify_counting_lemma(const GeneratorSpec & spec, CountingLemma lemma, std::uint64_t seed) -> CountingLemmaReport;

    /// Generates instance `index` of a cell deterministically from the seed.
    auto generate_instance(Family f, int t, int size, int index, double density, std::uint64_t seed) -> PairSystem;
}

#endif
