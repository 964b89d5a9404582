#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <ramsey/coloring.hh>
#include <ramsey/counting.hh>
#include <ramsey/errors.hh>

#include <numeric>
#include <random>

using namespace ramsey;

namespace
{
    auto as_u64(Count c) -> std::uint64_t { return std::uint64_t(c); }

    auto random_coloring(int n, std::mt19937_64 & rng) -> TwoColoring
    {
        TwoColoring c(n);
        for (std::size_t p = 0; p < c.pairs(); ++p)
            c.set_red_bit(p, rng() & 1);
        return c;
    }

    auto two_blue_cliques(int a, int b) -> TwoColoring
    {
        TwoColoring c(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j)
                c.set(i, j, Color::Red);
        return c;
    }

    auto all_patterns_up_to(int max_vertices_) -> std::vector<Pattern>
    {
        std::vector<Pattern> ps;
        for (int k = 2; k <= max_vertices_; ++k)
            ps.push_back(Pattern::path(k));
        for (int k = 3; k <= max_vertices_; ++k)
            ps.push_back(Pattern::cycle(k));
        for (int k = 1; k + 1 <= max_vertices_; ++k)
            ps.push_back(Pattern::star(k));
        for (int k = 2; k <= max_vertices_; ++k)
            ps.push_back(Pattern::complete(k));
        // paw and diamond as explicit patterns
        ps.push_back(Pattern::parse("G:4:0-1,1-2,0-2,2-3"));
        ps.push_back(Pattern::parse("G:4:0-1,1-2,2-3,3-0,0-2"));
        ps.push_back(Pattern::parse("G:5:0-1,0-2,0-3,3-4"));
        return ps;
    }
}

TEST_CASE("count_copies worked examples")
{
    CHECK(as_u64(count_copies(SimpleGraph::complete(5), Pattern::cycle(5))) == 12);
    CHECK(as_u64(count_copies(SimpleGraph::complete(9), Pattern::cycle(5))) == 1512);
    CHECK(as_u64(count_copies(SimpleGraph::complete_bipartite(5, 4), Pattern::cycle(5))) == 0);
    CHECK(as_u64(count_copies(SimpleGraph::complete(4), Pattern::path(3))) == 12);
    CHECK(as_u64(count_copies(SimpleGraph::complete(3), Pattern::cycle(5))) == 0);
}

TEST_CASE("explicit patterns above the cap are rejected")
{
    CHECK_THROWS_AS(Pattern::explicit_graph(SimpleGraph::path(13)), PreconditionError);
    CHECK_NOTHROW(Pattern::explicit_graph(SimpleGraph::path(12)));
}

TEST_CASE("pattern parsing")
{
    CHECK(Pattern::parse("C5").name() == "C5");
    CHECK(Pattern::parse("K1,3").kind() == Pattern::Kind::Star);
    CHECK(Pattern::parse("S3").vertices() == 4);
    CHECK(Pattern::parse("K3").vertices() == 3);
    CHECK(Pattern::parse("G:3:0-1,1-2").automorphisms() == 2);
    CHECK_THROWS_AS(Pattern::parse("C2"), PreconditionError);
    CHECK_THROWS_AS(Pattern::parse("X4"), ParseError);
    CHECK_THROWS_AS(Pattern::parse("Cfoo"), ParseError);
}

TEST_CASE("mono_counts worked examples")
{
    auto chi54 = two_blue_cliques(5, 4);
    auto m = mono_counts(chi54, Pattern::cycle(5));
    CHECK(as_u64(m.red) == 0);
    CHECK(as_u64(m.blue) == 12);

    auto all_red = TwoColoring::all_red(6);
    auto t = mono_counts(all_red, Pattern::complete(3));
    CHECK(as_u64(t.red) == 20);
    CHECK(as_u64(t.blue) == 0);

    auto chi44 = two_blue_cliques(4, 4);
    CHECK(mono_counts(chi44, Pattern::cycle(5)).total() == 0);
}

TEST_CASE("cycle_spectrum worked examples")
{
    auto k5 = cycle_spectrum(SimpleGraph::complete(5), 5);
    CHECK(k5.size() == 3);
    CHECK(k5.contains(3));
    CHECK(k5.contains(4));
    CHECK(k5.contains(5));

    auto k33 = SimpleGraph::complete_bipartite(3, 3);
    auto s = cycle_spectrum(k33, 6);
    CHECK(s.size() == 2);
    CHECK(s.contains(4));
    CHECK(s.contains(6));
    for (auto & [t, w] : s) {
        CHECK(int(w.size()) == t);
        CHECK(is_cycle_in(k33, w));
    }

    auto c7 = cycle_spectrum(SimpleGraph::cycle(7), 7);
    CHECK(c7.size() == 1);
    CHECK(c7.contains(7));

    CHECK_THROWS_AS(cycle_spectrum(SimpleGraph::cycle(4), 5), PreconditionError);
}

TEST_CASE("cycle_spectrum agrees with brute-force cycle counting")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + int(rng() % 4);
        auto g = oracle::random_graph(n, 0.45, rng);
        auto spec = cycle_spectrum(g, n);
        for (int t = 3; t <= n; ++t) {
            bool present = oracle::count_cycles(g, t) > 0;
            CHECK(spec.contains(t) == present);
            if (spec.contains(t))
                CHECK(is_cycle_in(g, spec.at(t)));
        }
    }
}

TEST_CASE("kcol format")
{
    CHECK(encode_kcol(TwoColoring::all_red(3)) == "3\n7\n");
    CHECK(encode_kcol(TwoColoring(3)) == "3\n0\n");
    CHECK(decode_kcol("3\n7\n") == TwoColoring::all_red(3));
    CHECK(decode_kcol("3\n7") == TwoColoring::all_red(3));
    CHECK(decode_kcol("3\r\n7\r\n") == TwoColoring::all_red(3));
    CHECK(encode_kcol(TwoColoring(1)) == "1\n\n");
    CHECK(decode_kcol("0\n\n").size() == 0);

    // pair (0,1) is bit 0; K_4 has 6 pairs -> 2 hex digits
    TwoColoring c(4);
    c.set(0, 1, Color::Red);
    c.set(2, 3, Color::Red);
    CHECK(encode_kcol(c) == "4\n21\n");

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = int(rng() % 20);
        auto r = random_coloring(n, rng);
        CHECK(decode_kcol(encode_kcol(r)) == r);
    }
    auto k10 = random_coloring(10, rng);
    CHECK(decode_kcol(encode_kcol(k10)).red_words() == k10.red_words());
}

TEST_CASE("kcol parse errors name the byte offset")
{
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            decode_kcol(text);
        }
        catch (const ParseError & e) {
            return e.offset();
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("x\n") == 0);
    CHECK(offset_of("4\n2") == 3);      // truncated: two digits needed
    CHECK(offset_of("4\n2g\n") == 3);   // non-hex
    CHECK(offset_of("4\n211\n") == 4);  // too long
    CHECK(offset_of("3\n8\n") == 2);    // padding bit set
    CHECK(offset_of("3\n7\nextra") == 4);
    CHECK(offset_of("99\n") == 0);
}

TEST_CASE("oracle equivalence for n <= 7")
{
    std::mt19937_64 rng(2024);
    auto patterns = all_patterns_up_to(6);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + int(rng() % 4);
        auto g = oracle::random_graph(n, trial % 2 ? 0.7 : 0.4, rng);
        for (const auto & h : patterns) {
            INFO("pattern " << h.name() << " n=" << n);
            CHECK(as_u64(count_copies(g, h)) == oracle::count_copies(g, h.graph()));
        }
    }
}

TEST_CASE("copies through an edge equal the count difference")
{
    std::mt19937_64 rng(99);
    auto patterns = all_patterns_up_to(6);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_graph(8, 0.55, rng);
        auto edges = g.edges();
        if (edges.empty())
            continue;
        auto [u, v] = edges[rng() % edges.size()];
        auto without = g;
        without.remove_edge(u, v);
        for (const auto & h : patterns) {
            INFO("pattern " << h.name());
            CHECK(count_copies(g, h) - count_copies(without, h) == count_copies_through_edge(g, h, u, v));
        }
    }
}

TEST_CASE("colour swap exchanges red and blue counts")
{
    std::mt19937_64 rng(5);
    auto patterns = all_patterns_up_to(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = random_coloring(7, rng);
        for (const auto & h : patterns) {
            auto a = mono_counts(c, h), b = mono_counts(c.swapped(), h);
            CHECK(a.red == b.blue);
            CHECK(a.blue == b.red);
        }
    }
}

TEST_CASE("relabelling leaves counts unchanged")
{
    std::mt19937_64 rng(6);
    auto patterns = all_patterns_up_to(6);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6 + trial % 4;
        auto c = random_coloring(n, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto d = c.relabelled(perm);
        for (const auto & h : patterns)
            CHECK(mono_counts(c, h) == mono_counts(d, h));
    }
}

TEST_CASE("complete-graph closed forms up to m = 12")
{
    for (int m = 3; m <= 12; ++m) {
        auto km = SimpleGraph::complete(m);
        for (int k = 3; k <= m; ++k) {
            Count fact = 1;
            for (int i = 2; i <= k; ++i)
                fact *= Count(i);
            INFO("m=" << m << " k=" << k);
            CHECK(count_copies(km, Pattern::cycle(k)) == binomial(m, k) * (fact / Count(k)) / 2);
            CHECK(count_copies(km, Pattern::path(k)) == binomial(m, k) * fact / 2);
        }
    }
}

TEST_CASE("128-bit counts")
{
    // C(17,9) * 8!/2 exceeds 32 bits
    auto c = count_copies(SimpleGraph::complete(17), Pattern::cycle(9));
    CHECK(c == binomial(17, 9) * Count(20160));
    CHECK(to_string(c) == "490089600");
    CHECK(to_string(Count(0)) == "0");
}
