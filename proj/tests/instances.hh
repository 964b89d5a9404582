#ifndef RAMSEY_TESTS_INSTANCES_HH
#define RAMSEY_TESTS_INSTANCES_HH

// Seeded generators of structured instances satisfying each claim's
// hypotheses. Shared by the unit tests and the acceptance binary.

#include <ramsey/extremal.hh>

#include <algorithm>
#include <random>
#include <vector>

namespace ramsey::instances
{
    inline auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    inline auto coin(std::mt19937_64 & rng, double p) -> bool
    {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }

    inline auto range_mask(int from, int count) -> Mask { return low_bits(count) << from; }

    inline auto sprinkle(SimpleGraph & g, double p, std::mt19937_64 & rng) -> void
    {
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j)
                if (coin(rng, p))
                    g.add_edge(i, j);
    }

    struct CommonNeighbor
    {
        SimpleGraph f;
        Mask S, T;
        int l;
    };

    /// S dense to T, one edge inside S; l odd within the claim's range, l <= 9.
    inline auto common_neighbor(std::mt19937_64 & rng) -> CommonNeighbor
    {
        for (;;) {
            int s_size = uniform(rng, 2, 6), t_size = uniform(rng, 1, 6), extra = uniform(rng, 0, 12 - s_size - t_size);
            int n = s_size + t_size + extra;
            SimpleGraph f(n);
            Mask S = range_mask(0, s_size), T = range_mask(s_size, t_size);
            double p = std::uniform_real_distribution<double>(0.6, 1.0)(rng);
            for (int a : vertices_of(S))
                for (int b : vertices_of(T))
                    if (coin(rng, p))
                        f.add_edge(a, b);
            sprinkle(f, 0.3, rng);
            f.add_edge(0, 1);
            int s = 64;
            for (int a : vertices_of(S))
                for (int b : vertices_of(S))
                    if (a < b)
                        s = std::min(s, popcount(f.neighbours(a) & f.neighbours(b) & T));
            int top = std::min({2 * s + 1, 2 * s_size - 1, 9});
            if (top < 3)
                continue;
            int l = 3 + 2 * uniform(rng, 0, (top - 3) / 2);
            return {f, S, T, l};
        }
    }

    struct Bridged
    {
        SimpleGraph f;
        Mask S, T;
        std::vector<int> P1, P2;
        int l;
    };

    /// Two cliques joined by two disjoint paths of length at most two.
    inline auto bridged(std::mt19937_64 & rng) -> Bridged
    {
        int s_size = uniform(rng, 4, 5), t_size = uniform(rng, 4, 5), extra = uniform(rng, 0, 12 - s_size - t_size);
        int n = s_size + t_size + extra;
        SimpleGraph f(n);
        Mask S = range_mask(0, s_size), T = range_mask(s_size, t_size);
        sprinkle(f, 0.25, rng);
        for (Mask part : {S, T})
            for (int a : vertices_of(part))
                for (int b : vertices_of(part))
                    if (a < b)
                        f.add_edge(a, b);
        std::vector<int> outside;
        for (int v = s_size + t_size; v < n; ++v)
            outside.push_back(v);
        std::shuffle(outside.begin(), outside.end(), rng);
        auto make = [&](int a, int b) {
            if (! outside.empty() && coin(rng, 0.5)) {
                int z = outside.back();
                outside.pop_back();
                f.add_edge(a, z);
                f.add_edge(z, b);
                return std::vector<int>{a, z, b};
            }
            f.add_edge(a, b);
            return std::vector<int>{a, b};
        };
        int a1 = uniform(rng, 0, s_size - 1), a2 = (a1 + uniform(rng, 1, s_size - 1)) % s_size;
        int b1 = s_size + uniform(rng, 0, t_size - 1), b2 = s_size + (b1 - s_size + uniform(rng, 1, t_size - 1)) % t_size;
        auto P1 = make(a1, b1), P2 = make(a2, b2);
        int top = std::min({2 * s_size - 1, 2 * t_size - 1, 9});
        int l = uniform(rng, 7, top);
        return {f, S, T, P1, P2, l};
    }

    struct Alternating
    {
        SimpleGraph f;
        Mask S, T;
        int w;
        std::vector<int> P;
        int l;
    };

    /// S minus w complete to T, w with some T neighbour, and a two-edge path
    /// through an outside vertex.
    inline auto alternating(std::mt19937_64 & rng) -> Alternating
    {
        int s_size = uniform(rng, 3, 5), t_size = uniform(rng, 3, 5), extra = uniform(rng, 1, 12 - s_size - t_size);
        int n = s_size + t_size + extra;
        SimpleGraph f(n);
        Mask S = range_mask(0, s_size), T = range_mask(s_size, t_size);
        sprinkle(f, 0.2, rng);
        int w = uniform(rng, 0, s_size - 1);
        for (int a : vertices_of(S))
            for (int b : vertices_of(T))
                if (a != w)
                    f.add_edge(a, b);
                else if (f.adjacent(a, b) && coin(rng, 0.5))
                    f.remove_edge(a, b);
        f.add_edge(w, s_size + uniform(rng, 0, t_size - 1));
        int z = uniform(rng, s_size + t_size, n - 1), a = uniform(rng, 0, s_size - 1), b = s_size + uniform(rng, 0, t_size - 1);
        f.add_edge(a, z);
        f.add_edge(z, b);
        int top = std::min({2 * s_size + 1, 2 * t_size + 1, 9});
        int l = 7 + 2 * uniform(rng, 0, (top - 7) / 2);
        return {f, S, T, w, {a, z, b}, l};
    }

    /// chi(k, k-1) with a few random edges recoloured.
    inline auto perturbed_chi(int k, std::mt19937_64 & rng) -> TwoColoring
    {
        auto c = chi(k, k - 1);
        int n = 2 * k - 1, flips = uniform(rng, 1, k - 1);
        for (int f = 0; f < flips; ++f) {
            int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 2);
            if (v >= u)
                ++v;
            c.flip(std::min(u, v), std::max(u, v));
        }
        return c;
    }
}

#endif
