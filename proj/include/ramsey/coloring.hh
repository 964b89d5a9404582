#ifndef RAMSEY_COLORING_HH
#define RAMSEY_COLORING_HH

#include <ramsey/graph.hh>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey
{
    enum class Color : std::uint8_t
    {
        Red = 0,
        Blue = 1
    };

    inline auto other(Color c) -> Color { return c == Color::Red ? Color::Blue : Color::Red; }

    auto to_string(Color c) -> std::string;

    /// Red/blue colouring of the edges of K_n. The red edge set is stored as a
    /// bitmask over the C(n,2) pairs (i,j), i<j, in row-major order; every
    /// pair not red is blue.
    class TwoColoring
    {
        public:
            TwoColoring() = default;
            /// All blue.
            explicit TwoColoring(int n);

            static auto all_red(int n) -> TwoColoring;
            /// Red exactly on the edges of g.
            static auto from_red_graph(const SimpleGraph & g) -> TwoColoring;

            static auto pair_count(int n) -> std::size_t { return std::size_t(n) * std::size_t(n > 0 ? n - 1 : 0) / 2; }
            /// Row-major index of the pair {i,j}.
            static auto pair_index(int n, int i, int j) -> std::size_t;

            auto size() const -> int { return _n; }
            auto pairs() const -> std::size_t { return pair_count(_n); }

            auto is_red(int i, int j) const -> bool;
            auto color(int i, int j) const -> Color { return is_red(i, j) ? Color::Red : Color::Blue; }
            auto set(int i, int j, Color c) -> void;
            auto flip(int i, int j) -> void;

            auto red_bit(std::size_t pair) const -> bool { return (_red[pair / 64] >> (pair % 64)) & 1; }
            auto set_red_bit(std::size_t pair, bool red) -> void;

            auto red_graph() const -> SimpleGraph;
            auto blue_graph() const -> SimpleGraph;
            auto graph(Color c) const -> SimpleGraph { return c == Color::Red ? red_graph() : blue_graph(); }

            /// Red and blue exchanged.
            auto swapped() const -> TwoColoring;
            /// Vertex v of the result is vertex perm[v] of this colouring.
            auto relabelled(std::span<const int> perm) const -> TwoColoring;

            auto red_words() const -> const std::vector<std::uint64_t> & { return _red; }

            auto operator== (const TwoColoring &) const -> bool = default;

        private:
            int _n = 0;
            std::vector<std::uint64_t> _red;
    };

    /// "kcol" text: line 1 decimal n, line 2 the red mask as ceil(C(n,2)/4)
    /// big-endian hex digits, pair 0 in the least significant bit.
    auto encode_kcol(const TwoColoring & c) -> std::string;

    /// Inverse of encode_kcol. Throws ParseError naming the offending byte.
    /// Accepts an optional trailing newline and CRLF line ends.
    auto decode_kcol(std::string_view text) -> TwoColoring;
}

#endif
