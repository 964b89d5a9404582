#ifndef RAMSEY_PATTERN_HH
#define RAMSEY_PATTERN_HH

#include <ramsey/graph.hh>

#include <string>
#include <string_view>

namespace ramsey
{
    /// Largest explicit pattern the generic embedding counter accepts.
    inline constexpr int max_explicit_pattern_vertices = 12;

    /// The graph H whose monochromatic copies are counted.
    class Pattern
    {
        public:
            enum class Kind
            {
                Path,     ///< P_k, k vertices
                Cycle,    ///< C_k, k vertices
                Star,     ///< K_{1,k}, k+1 vertices
                Complete, ///< K_k
                Explicit
            };

            static auto path(int k) -> Pattern;
            static auto cycle(int k) -> Pattern;
            static auto star(int k) -> Pattern;
            static auto complete(int k) -> Pattern;
            static auto explicit_graph(const SimpleGraph & g) -> Pattern;

            /// Accepts P4, C5, K3, S3 (= K_{1,3}), K1,3, and G:<n>:<u>-<v>,<u>-<v>,...
            static auto parse(std::string_view text) -> Pattern;

            auto kind() const -> Kind { return _kind; }
            /// The size parameter k of the family (for stars, the number of leaves).
            auto k() const -> int { return _k; }
            auto vertices() const -> int { return _graph.size(); }
            auto graph() const -> const SimpleGraph & { return _graph; }
            auto name() const -> std::string;

            /// |Aut(H)|, computed by counting self-embeddings.
            auto automorphisms() const -> Count { return _automorphisms; }

        private:
            Pattern(Kind kind, int k, SimpleGraph g);

            Kind _kind;
            int _k;
            SimpleGraph _graph;
            Count _automorphisms;
    };
}

#endif
