#include <ramsey/coloring.hh>
#include <ramsey/errors.hh>

#include <algorithm>

namespace ramsey
{
    auto to_string(Color c) -> std::string
    {
        return c == Color::Red ? "red" : "blue";
    }

    TwoColoring::TwoColoring(int n) :
        _n(n)
    {
        if (n < 0 || n > max_vertices)
            throw PreconditionError("colouring size " + std::to_string(n) + " outside [0, " + std::to_string(max_vertices) + "]");
        _red.assign((pair_count(n) + 63) / 64, 0);
    }

    auto TwoColoring::all_red(int n) -> TwoColoring
    {
        TwoColoring c(n);
        for (std::size_t p = 0; p < c.pairs(); ++p)
            c.set_red_bit(p, true);
        return c;
    }

    auto TwoColoring::from_red_graph(const SimpleGraph & g) -> TwoColoring
    {
        TwoColoring c(g.size());
        for (auto [u, v] : g.edges())
            c.set(u, v, Color::Red);
        return c;
    }

    auto TwoColoring::pair_index(int n, int i, int j) -> std::size_t
    {
        if (i > j)
            std::swap(i, j);
        auto si = std::size_t(i);
        return si * std::size_t(n) - si * (si + 1) / 2 + std::size_t(j - i - 1);
    }

    auto TwoColoring::is_red(int i, int j) const -> bool
    {
        return red_bit(pair_index(_n, i, j));
    }

    auto TwoColoring::set_red_bit(std::size_t pair, bool red) -> void
    {
        if (red)
            _red[pair / 64] |= std::uint64_t{1} << (pair % 64);
        else
            _red[pair / 64] &= ~(std::uint64_t{1} << (pair % 64));
    }

    auto TwoColoring::set(int i, int j, Color c) -> void
    {
        if (i == j || i < 0 || j < 0 || i >= _n || j >= _n)
            throw PreconditionError("invalid pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        set_red_bit(pair_index(_n, i, j), c == Color::Red);
    }

    auto TwoColoring::flip(int i, int j) -> void
    {
        set(i, j, other(color(i, j)));
    }

    auto TwoColoring::red_graph() const -> SimpleGraph
    {
        SimpleGraph g(_n);
        std::size_t p = 0;
        for (int i = 0; i < _n; ++i)
            for (int j = i + 1; j < _n; ++j, ++p)
                if (red_bit(p))
                    g.add_edge(i, j);
        return g;
    }

    auto TwoColoring::blue_graph() const -> SimpleGraph
    {
        return red_graph().complement();
    }

    auto TwoColoring::swapped() const -> TwoColoring
    {
        TwoColoring c(_n);
        for (std::size_t p = 0; p < pairs(); ++p)
            c.set_red_bit(p, ! red_bit(p));
        return c;
    }

    auto TwoColoring::relabelled(std::span<const int> perm) const -> TwoColoring
    {
        return from_red_graph(red_graph().relabelled(perm));
    }

    namespace
    {
        auto hex_digit_count(int n) -> std::size_t
        {
            return (TwoColoring::pair_count(n) + 3) / 4;
        }
    }

    auto encode_kcol(const TwoColoring & c) -> std::string
    {
        std::string out = std::to_string(c.size()) + "\n";
        auto digits = hex_digit_count(c.size());
        for (std::size_t d = digits; d-- > 0;) {
            int nibble = 0;
            for (int b = 0; b < 4; ++b) {
                auto p = d * 4 + std::size_t(b);
                if (p < c.pairs() && c.red_bit(p))
                    nibble |= 1 << b;
            }
            out.push_back("0123456789abcdef"[nibble]);
        }
        out.push_back('\n');
        return out;
    }

    auto decode_kcol(std::string_view text) -> TwoColoring
    {
        std::size_t pos = 0;
        if (text.empty())
            throw ParseError("kcol: empty input, expected vertex count", 0);

        long n = 0;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            n = n * 10 + (text[pos] - '0');
            if (n > max_vertices)
                throw ParseError("kcol: vertex count exceeds " + std::to_string(max_vertices), start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("kcol: expected decimal vertex count", pos);
        if (pos < text.size() && text[pos] == '\r')
            ++pos;
        if (pos >= text.size() || text[pos] != '\n')
            throw ParseError("kcol: expected newline after vertex count", pos);
        ++pos;

        TwoColoring c{int(n)};
        auto digits = hex_digit_count(int(n));
        for (std::size_t i = 0; i < digits; ++i, ++pos) {
            if (pos >= text.size() || text[pos] == '\n' || text[pos] == '\r')
                throw ParseError("kcol: mask truncated, expected " + std::to_string(digits) + " hex digits", pos);
            char ch = text[pos];
            int nibble;
            if (ch >= '0' && ch <= '9')
                nibble = ch - '0';
            else if (ch >= 'a' && ch <= 'f')
                nibble = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F')
                nibble = ch - 'A' + 10;
            else
                throw ParseError(std::string("kcol: non-hex character '") + ch + "'", pos);
            std::size_t d = digits - 1 - i;
            for (int b = 0; b < 4; ++b) {
                if (! ((nibble >> b) & 1))
                    continue;
                auto p = d * 4 + std::size_t(b);
                if (p >= c.pairs())
                    throw ParseError("kcol: padding bit set beyond C(n,2) pairs", pos);
                c.set_red_bit(p, true);
            }
        }
        if (pos < text.size() && text[pos] == '\r')
            ++pos;
        if (pos < text.size() && text[pos] != '\n')
            throw ParseError("kcol: mask longer than " + std::to_string(digits) + " hex digits", pos);
        if (pos < text.size())
            ++pos;
        if (pos != text.size())
            throw ParseError("kcol: trailing data after mask", pos);
        return c;
    }
}
