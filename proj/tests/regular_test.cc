#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/regular_pairs.hh>

#include <cmath>

using namespace ramsey;

namespace
{
    auto u64(Count c) -> std::uint64_t { return std::uint64_t(c); }

    auto random_bipartite(int a, int b, double p, std::mt19937_64 & rng) -> SimpleGraph
    {
        SimpleGraph g(a + b);
        std::bernoulli_distribution coin(p);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (coin(rng))
                    g.add_edge(i, a + j);
        return g;
    }

    /// Transversal sequences by exhaustive extension, distinct vertices;
    /// `target` < 0 counts open paths, otherwise paths ending there (closing
    /// allowed when target == w0).
    auto oracle_paths(const PairSystem & sys, int w0, int l, int target) -> std::uint64_t
    {
        std::uint64_t total = 0;
        std::vector<int> seq{w0};
        auto rec = [&](auto & self) -> void {
            int i = int(seq.size());
            if (i == l + 1) {
                if (target < 0 || seq.back() == target)
                    ++total;
                return;
            }
            for (int v = 0; v < sys.graph().size(); ++v) {
                if (! contains(sys.cls(i), v) || ! sys.graph().adjacent(seq.back(), v))
                    continue;
                bool repeat = std::find(seq.begin(), seq.end(), v) != seq.end();
                bool closing = i == l && v == w0 && target == w0 && l >= 3;
                if (repeat && ! closing)
                    continue;
                seq.push_back(v);
                self(self);
                seq.pop_back();
            }
        };
        rec(rec);
        return total;
    }
}

TEST_CASE("density")
{
    auto g = SimpleGraph::complete_bipartite(3, 3);
    CHECK(density(0b000111, 0b111000, g) == 1.0);
    CHECK(density(0b000011, 0b000011, SimpleGraph::complete(2)) == 0.5);
    g.remove_edge(0, 3);
    CHECK(density(0b000111, 0b111000, g) == doctest::Approx(8.0 / 9));
    CHECK_THROWS_AS(density(0b011, 0b110, g), PreconditionError);
}

TEST_CASE("exact regularity agrees with the definition on every 4x4 bipartite graph")
{
    Mask X = 0x0f, Y = 0xf0;
    int disagreements = 0;
    for (std::uint32_t edges = 0; edges < (1u << 16); ++edges) {
        SimpleGraph g(8);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if ((edges >> (4 * i + j)) & 1)
                    g.add_edge(i, 4 + j);
        for (double eps : {0.2, 0.5}) {
            auto r = check_regularity(X, Y, g, eps);
            bool expect = oracle::regular(X, Y, g, eps);
            if ((r.verdict == Regularity::Regular) != expect)
                ++disagreements;
            if (r.verdict == Regularity::Irregular) {
                auto [U, V] = *r.witness;
                REQUIRE(popcount(U) >= eps * 4);
                REQUIRE(popcount(V) >= eps * 4);
                REQUIRE(std::fabs(density(U, V, g) - density(X, Y, g)) > eps);
            }
        }
        if (edges % 257 == 0) {
            double e = regularity_defect(X, Y, g);
            REQUIRE(check_regularity(X, Y, g, e).verdict == Regularity::Regular);
            CHECK(oracle::regular(X, Y, g, e + 1e-12));
            if (e > 0) {
                REQUIRE(check_regularity(X, Y, g, std::nextafter(e, 0.0)).verdict == Regularity::Irregular);
                CHECK(! oracle::regular(X, Y, g, e - 1e-12));
            }
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("regularity examples")
{
    auto k = SimpleGraph::complete_bipartite(5, 5);
    CHECK(check_regularity(0x1f, 0x3e0, k, 0.1).verdict == Regularity::Regular);
    CHECK(regularity_defect(0x1f, 0x3e0, k) == 0.0);

    // Half complete, half empty: U = the complete half deviates by 1/2.
    SimpleGraph g(8);
    for (int i = 0; i < 2; ++i)
        for (int j = 4; j < 8; ++j)
            g.add_edge(i, j);
    auto r = check_regularity(0x0f, 0xf0, g, 0.25);
    REQUIRE(r.verdict == Regularity::Irregular);
    CHECK(r.deviation == 0.5);
    CHECK(regularity_defect(0x0f, 0xf0, g) == 0.5);

    CHECK_THROWS_AS(check_regularity(0x0f, 0x0f, g, 0.1), PreconditionError);
    CHECK_THROWS_AS(check_regularity(low_bits(15), low_bits(15) << 15, SimpleGraph(30), 0.1), PreconditionError);
}

TEST_CASE("regularity is monotone in eps and sampling never certifies")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_bipartite(6, 6, 0.5, rng);
        Mask X = 0x3f, Y = 0xfc0;
        bool seen_regular = false;
        for (double eps = 0.05; eps <= 1.0; eps += 0.05) {
            bool regular = check_regularity(X, Y, g, eps).verdict == Regularity::Regular;
            CHECK(! (seen_regular && ! regular));
            seen_regular = seen_regular || regular;
            auto s = check_regularity(X, Y, g, eps, Sampling{50, std::uint64_t(trial)});
            CHECK(s.verdict != Regularity::Regular);
            if (s.verdict == Regularity::Irregular) {
                CHECK(! regular);
                auto [U, V] = *s.witness;
                CHECK(std::fabs(density(U, V, g) - density(X, Y, g)) > eps);
            }
        }
    }
}

TEST_CASE("degree exceptions stay below eps|X| on certified pairs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int a = 3 + trial % 4, b = 3 + (trial / 4) % 4;
        auto g = random_bipartite(a, b, 0.3 + 0.1 * (trial % 5), rng);
        Mask X = low_bits(a), Y = low_bits(b) << a;
        double e = std::max(regularity_defect(X, Y, g), 1e-9), d = density(X, Y, g);
        for (Mask sub = 1; sub < (Mask{1} << b); ++sub) {
            Mask Yp = sub << a;
            if (popcount(Yp) < e * b)
                continue;
            auto c = degree_exception_counts(X, Yp, g, d, e);
            CHECK(c.high < e * a);
            CHECK(c.low < e * a);
        }
    }
}

TEST_CASE("slice parameters")
{
    CHECK(slice_params(0.1, 0.5) == doctest::Approx(0.2));
    CHECK(slice_params(0.1, 0.25) == doctest::Approx(0.4));
    CHECK(slice_params(0.01, 1.0) == doctest::Approx(0.02));
    CHECK_THROWS_AS(slice_params(0.1, 0.0), PreconditionError);

    // Large slices of a certified pair inherit the slice parameter.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_bipartite(6, 6, 0.5, rng);
        Mask X = 0x3f, Y = 0xfc0;
        double e = regularity_defect(X, Y, g), alpha = 0.5, inherited = slice_params(e, alpha);
        for (Mask u = 1; u < 64; u += 7)
            for (Mask v = 1; v < 64; v += 5)
                if (popcount(u) >= alpha * 6 && popcount(v) >= alpha * 6)
                    CHECK(check_regularity(u, v << 6, g, inherited).verdict == Regularity::Regular);
    }
}

TEST_CASE("transversal path examples")
{
    auto k33 = PairSystem::complete(2, {3, 3});
    CHECK(u64(count_transversal_paths(k33, 0, 3)) == 12);
    CHECK(u64(count_transversal_paths_between(k33, 0, 1, 2)) == 3);
    // Closed: w1 (3 choices), w2 in V_0 minus w0 (2), w3 in V_1 minus w1 (2).
    CHECK(u64(count_transversal_paths_between(k33, 0, 0, 4)) == 12);

    auto ring = PairSystem::complete(3, {2, 2, 2});
    CHECK(u64(count_transversal_paths(ring, 0, 2)) == 4);

    CHECK_THROWS_AS(count_transversal_paths_between(ring, 0, 1, 4), PreconditionError);
    CHECK_THROWS_AS(count_transversal_paths(ring, 3, 2), PreconditionError);
    CHECK_THROWS_AS(count_transversal_paths(PairSystem::complete(2, {8, 8}), 0, 14, 1000), BudgetExhausted);
}

TEST_CASE("transversal path counts agree with exhaustive extension")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int t = 2 + trial % 3;
        std::vector<int> sizes;
        for (int i = 0; i < t; ++i)
            sizes.push_back(2 + int(rng() % 3));
        auto sys = PairSystem::quasirandom(t, sizes, 0.6, rng);
        int l = 2 + int(rng() % 5);
        for_each_vertex(sys.cls(0), [&](int w0) {
            CHECK(u64(count_transversal_paths(sys, w0, l)) == oracle_paths(sys, w0, l, -1));
            int lt = t * (1 + int(rng() % 2));
            for_each_vertex(sys.cls(0), [&](int w1) {
                CHECK(u64(count_transversal_paths_between(sys, w0, w1, lt)) == oracle_paths(sys, w0, lt, w1));
            });
        });
    }
}

TEST_CASE("closed transversal paths match cycle enumeration")
{
    // Closed transversal paths are cyclic sequences read from a start in V_0.
    // In K_{3,3} every 4-cycle is read p times, not 2p.
    auto k33 = PairSystem::complete(2, {3, 3});
    std::uint64_t k33_closed = 0;
    for_each_vertex(k33.cls(0), [&](int w) { k33_closed += u64(count_transversal_paths_between(k33, w, w, 4)); });
    CHECK(k33_closed == 4 * oracle::count_cycles(k33.graph(), 4));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int t = 2 + trial % 2;
        auto sys = PairSystem::quasirandom(t, std::vector<int>(std::size_t(t), 3), 0.7, rng);
        int p = 2 * t;
        std::uint64_t closed = 0;
        for_each_vertex(sys.cls(0), [&](int w) { closed += u64(count_transversal_paths_between(sys, w, w, p)); });

        std::uint64_t readings = 0;
        std::vector<int> seq;
        auto rec = [&](auto & self) -> void {
            int i = int(seq.size());
            if (i == p) {
                readings += sys.graph().adjacent(seq.back(), seq.front());
                return;
            }
            for_each_vertex(sys.cls(i), [&](int v) {
                if (std::find(seq.begin(), seq.end(), v) != seq.end() || (i > 0 && ! sys.graph().adjacent(seq.back(), v)))
                    return;
                seq.push_back(v);
                self(self);
                seq.pop_back();
            });
        };
        rec(rec);
        CHECK(closed == readings);
    }
}

TEST_CASE("counting bounds")
{
    auto exact = RegimeParams::explorer(0.0, 1.0, 0.0, 0.0, 2, 2);
    auto b1 = countpath2_part1_bound(exact, 3, 3);
    CHECK(b1.value <= 12.0);
    CHECK(b1.value >= 12.0 * (1 - 1e-12));
    CHECK(! b1.hypotheses_met());

    auto b2 = countpath2_part2_bound(exact, 3, 4);
    CHECK(b2.value == 0.0);

    auto sparse = RegimeParams::explorer(0.05, 0.2, 0.0, 0.0, 2, 2);
    CHECK(countpath2_part1_bound(sparse, 5, 4).value == 0.0);

    auto paper = RegimeParams::paper(1e-6, 2, 10);
    CHECK(paper.paper_mode);
    CHECK(paper.alpha == doctest::Approx(0.02));
    CHECK(paper.lambda == doctest::Approx(300 * std::sqrt(0.02)));
    auto met = RegimeParams::explorer(1e-6, 1.0, 0.0, 0.0, 2, 2);
    CHECK(countpath2_part1_bound(met, 1'000'000'000'000L, 4).hypotheses_met());
    CHECK(countpath2_part2_bound(met, 1'000'000'000'000L, 4).hypotheses_met());
    auto ring = RegimeParams::explorer(1e-6, 1.0, 0.0, 0.0, 3, 3);
    CHECK(countcycle1_bound(ring, 3'000'000'000'000L, 13).hypotheses_met());
    auto unmet = countcycle1_bound(ring, 3'000'000'000'000L, 12).unmet;
    CHECK(std::find(unmet.begin(), unmet.end(), "p odd") != unmet.end());

    // Nondecreasing in d, nonincreasing in eps.
    double last = -1;
    for (double d = 0.0; d <= 1.0; d += 0.05) {
        double v = countpath2_part1_bound(RegimeParams::explorer(0.001, d, 0, 0, 2, 2), 20, 6).value;
        CHECK(v >= last);
        last = v;
    }
    last = 1e300;
    for (double e = 0.0; e <= 0.1; e += 0.01) {
        double v = countpath2_part1_bound(RegimeParams::explorer(e, 0.9, 0, 0, 2, 2), 20, 6).value;
        CHECK(v <= last);
        last = v;
    }
}

TEST_CASE("counting lemma harness")
{
    GeneratorSpec spec;
    spec.min_size = 4;
    spec.max_size = 6;
    spec.instances = 4;
    for (auto lemma : {CountingLemma::PathsFromVertex, CountingLemma::PathsBetweenVertices, CountingLemma::Cycles}) {
        auto report = verify_counting_lemma(spec, lemma, 7);
        CHECK(report.failures == 0);
        CHECK(report.passes + report.vacuous == int(report.rows.size()));
        for (const auto & row : report.rows) {
            if (lemma == CountingLemma::Cycles)
                CHECK(row.t % 2 == 1);
            if (row.family == Family::Complete && lemma == CountingLemma::PathsFromVertex) {
                CHECK(row.eps_hat == 0.0);
                CHECK(row.verdict == Verdict::Pass);
                std::uint64_t product = 1;
                for (int i = 1; i <= 4; ++i)
                    product *= std::uint64_t(row.n - i / row.t);
                CHECK(u64(*row.exact) == product);
            }
            if (row.family == Family::Complete && lemma == CountingLemma::PathsBetweenVertices)
                CHECK(row.verdict == Verdict::Vacuous);
        }
    }

    spec.families = {Family::Quasirandom};
    spec.quasirandom_density = 0.2;
    auto sparse = verify_counting_lemma(spec, CountingLemma::PathsFromVertex, 1);
    for (const auto & row : sparse.rows)
        if (row.d < 5 * std::sqrt(row.eps_hat))
            CHECK(row.verdict == Verdict::Vacuous);

    auto again = verify_counting_lemma(spec, CountingLemma::PathsFromVertex, 1);
    REQUIRE(again.rows.size() == sparse.rows.size());
    for (std::size_t i = 0; i < again.rows.size(); ++i)
        CHECK(again.rows[i].eps_hat == sparse.rows[i].eps_hat);
}
