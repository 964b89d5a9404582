#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/pattern.hh>

#include <charconv>
#include <vector>

namespace ramsey
{
    Pattern::Pattern(Kind kind, int k, SimpleGraph g) :
        _kind(kind),
        _k(k),
        _graph(std::move(g)),
        _automorphisms(0)
    {
        auto factorial = [](int m) {
            Count r = 1;
            for (int i = 2; i <= m; ++i)
                r *= Count(i);
            return r;
        };
        switch (_kind) {
            case Kind::Path: _automorphisms = 2; break;
            case Kind::Cycle: _automorphisms = Count(2 * _k); break;
            case Kind::Star: _automorphisms = _k == 1 ? 2 : factorial(_k); break;
            // 34! overflows; only the generic counter reads this and cliques never reach it
            case Kind::Complete: _automorphisms = _k <= 33 ? factorial(_k) : 0; break;
            case Kind::Explicit: _automorphisms = count_embeddings(_graph, _graph); break;
        }
    }

    auto Pattern::path(int k) -> Pattern
    {
        if (k < 2 || k > max_vertices)
            throw PreconditionError("path pattern needs 2 <= k <= 64, got " + std::to_string(k));
        return Pattern(Kind::Path, k, SimpleGraph::path(k));
    }

    auto Pattern::cycle(int k) -> Pattern
    {
        if (k < 3 || k > max_vertices)
            throw PreconditionError("cycle pattern needs 3 <= k <= 64, got " + std::to_string(k));
        return Pattern(Kind::Cycle, k, SimpleGraph::cycle(k));
    }

    auto Pattern::star(int k) -> Pattern
    {
        if (k < 1 || k + 1 > max_vertices)
            throw PreconditionError("star pattern needs 1 <= k <= 63, got " + std::to_string(k));
        return Pattern(Kind::Star, k, SimpleGraph::complete_bipartite(1, k));
    }

    auto Pattern::complete(int k) -> Pattern
    {
        if (k < 2 || k > max_vertices)
            throw PreconditionError("complete pattern needs 2 <= k <= 64, got " + std::to_string(k));
        return Pattern(Kind::Complete, k, SimpleGraph::complete(k));
    }

    auto Pattern::explicit_graph(const SimpleGraph & g) -> Pattern
    {
        if (g.size() > max_explicit_pattern_vertices)
            throw PreconditionError("explicit pattern has " + std::to_string(g.size()) + " vertices, cap is "
                + std::to_string(max_explicit_pattern_vertices));
        if (g.edge_count() == 0)
            throw PreconditionError("explicit pattern needs at least one edge");
        return Pattern(Kind::Explicit, g.size(), g);
    }

    namespace
    {
        auto parse_int(std::string_view text, std::string_view whole) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw ParseError("pattern '" + std::string(whole) + "': expected integer, got '" + std::string(text) + "'",
                    std::size_t(text.data() - whole.data()));
            return value;
        }
    }

    auto Pattern::parse(std::string_view text) -> Pattern
    {
        if (text.size() < 2)
            throw ParseError("pattern '" + std::string(text) + "' too short", 0);

        if (text.starts_with("G:")) {
            auto rest = text.substr(2);
            auto colon = rest.find(':');
            if (colon == std::string_view::npos)
                throw ParseError("pattern '" + std::string(text) + "': expected G:<n>:<edges>", text.size());
            int n = parse_int(rest.substr(0, colon), text);
            if (n < 0 || n > max_explicit_pattern_vertices)
                throw PreconditionError("explicit pattern size " + std::to_string(n) + " outside [0, "
                    + std::to_string(max_explicit_pattern_vertices) + "]");
            SimpleGraph g(n);
            auto edges = rest.substr(colon + 1);
            while (! edges.empty()) {
                auto comma = edges.find(',');
                auto item = edges.substr(0, comma);
                auto dash = item.find('-');
                if (dash == std::string_view::npos)
                    throw ParseError("pattern '" + std::string(text) + "': edge needs u-v", std::size_t(item.data() - text.data()));
                g.add_edge(parse_int(item.substr(0, dash), text), parse_int(item.substr(dash + 1), text));
                edges = comma == std::string_view::npos ? std::string_view{} : edges.substr(comma + 1);
            }
            return explicit_graph(g);
        }

        char family = text[0];
        auto arg = text.substr(1);
        switch (family) {
            case 'P': case 'p': return path(parse_int(arg, text));
            case 'C': case 'c': return cycle(parse_int(arg, text));
            case 'S': case 's': return star(parse_int(arg, text));
            case 'K': case 'k':
                if (arg.starts_with("1,"))
                    return star(parse_int(arg.substr(2), text));
                return complete(parse_int(arg, text));
            default:
                throw ParseError("pattern '" + std::string(text) + "': unknown family '" + family + "'", 0);
        }
    }

    auto Pattern::name() const -> std::string
    {
        switch (_kind) {
            case Kind::Path: return "P" + std::to_string(_k);
            case Kind::Cycle: return "C" + std::to_string(_k);
            case Kind::Star: return "K1," + std::to_string(_k);
            case Kind::Complete: return "K" + std::to_string(_k);
            case Kind::Explicit: {
                std::string s = "G:" + std::to_string(_graph.size()) + ":";
                bool first = true;
                for (auto [u, v] : _graph.edges()) {
                    if (! first)
                        s += ",";
                    first = false;
                    s += std::to_string(u) + "-" + std::to_string(v);
                }
                return s;
            }
        }
        return "?";
    }
}
