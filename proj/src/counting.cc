#include <ramsey/counting.hh>
#include <ramsey/errors.hh>

#include <algorithm>

namespace ramsey
{
    namespace
    {
        // Extends a simple path ending at `last` with `remaining` more vertices
        // drawn from `allowed`; the final vertex must lie in `closing`.
        auto count_path_extensions(const SimpleGraph & g, int last, Mask allowed, Mask closing, int remaining) -> Count
        {
            Mask cand = g.neighbours(last) & allowed;
            if (remaining == 1)
                return Count(popcount(cand & closing));
            Count total = 0;
            for_each_vertex(cand, [&](int v) {
                total += count_path_extensions(g, v, allowed & ~bit(v), closing, remaining - 1);
            });
            return total;
        }

        auto count_cliques_in(const SimpleGraph & g, Mask cand, int k) -> Count
        {
            if (k == 0)
                return 1;
            if (k == 1)
                return Count(popcount(cand));
            if (popcount(cand) < k)
                return 0;
            Count total = 0;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                total += count_cliques_in(g, cand & g.neighbours(v), k - 1);
            }
            return total;
        }

        auto find_clique_in(const SimpleGraph & g, Mask cand, int k, Mask chosen) -> std::optional<Mask>
        {
            if (k == 0)
                return chosen;
            if (popcount(cand) < k)
                return std::nullopt;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (auto r = find_clique_in(g, cand & g.neighbours(v), k - 1, chosen | bit(v)))
                    return r;
            }
            return std::nullopt;
        }

        // Orders pattern vertices so each one (after the first) has as many
        // already-placed neighbours as possible; `prefix` is placed first.
        auto embedding_order(const SimpleGraph & h, std::vector<int> prefix) -> std::vector<int>
        {
            std::vector<int> order = std::move(prefix);
            Mask placed = 0;
            for (int v : order)
                placed |= bit(v);
            while (int(order.size()) < h.size()) {
                int best = -1, best_score = -1;
                for (int v = 0; v < h.size(); ++v) {
                    if (contains(placed, v))
                        continue;
                    int score = h.degree_into(v, placed);
                    if (score > best_score) {
                        best = v;
                        best_score = score;
                    }
                }
                order.push_back(best);
                placed |= bit(best);
            }
            return order;
        }

        struct EmbeddingCounter
        {
            const SimpleGraph & g;
            const SimpleGraph & h;
            std::vector<int> order;
            std::vector<int> image;

            auto extend(std::size_t pos, Mask used) -> Count
            {
                int hv = order[pos];
                Mask cand = g.all() & ~used;
                for (std::size_t i = 0; i < pos; ++i)
                    if (h.adjacent(hv, order[i]))
                        cand &= g.neighbours(image[order[i]]);
                if (pos + 1 == order.size())
                    return Count(popcount(cand));
                Count total = 0;
                for_each_vertex(cand, [&](int gv) {
                    image[hv] = gv;
                    total += extend(pos + 1, used | bit(gv));
                });
                return total;
            }
        };

        auto count_star_copies(const SimpleGraph & g, int k) -> Count
        {
            if (k == 1)
                return Count(g.edge_count());
            Count total = 0;
            for (int v = 0; v < g.size(); ++v)
                total += binomial(g.degree(v), k);
            return total;
        }
    }

    auto count_cycles(const SimpleGraph & g, int k) -> Count
    {
        if (k < 3)
            throw PreconditionError("cycle length must be at least 3");
        if (k > g.size())
            return 0;
        Count total = 0;
        for (int anchor = 0; anchor < g.size(); ++anchor) {
            Mask above = g.all() & ~low_bits(anchor + 1);
            Mask nbrs = g.neighbours(anchor) & above;
            // anchor is the smallest vertex; every cycle is seen once per direction
            for_each_vertex(nbrs, [&](int v) {
                total += count_path_extensions(g, v, above & ~bit(v), nbrs, k - 2);
            });
        }
        return total / 2;
    }

    auto count_paths(const SimpleGraph & g, int k) -> Count
    {
        if (k < 2)
            throw PreconditionError("path must have at least 2 vertices");
        if (k > g.size())
            return 0;
        Count total = 0;
        for (int s = 0; s < g.size(); ++s)
            total += count_path_extensions(g, s, g.all() & ~bit(s), g.all(), k - 1);
        return total / 2;
    }

    auto count_cliques(const SimpleGraph & g, int k) -> Count
    {
        if (k < 0)
            throw PreconditionError("clique order must be non-negative");
        return count_cliques_in(g, g.all(), k);
    }

    auto count_embeddings(const SimpleGraph & g, const SimpleGraph & h) -> Count
    {
        if (h.size() > g.size())
            return 0;
        if (h.size() == 0)
            return 1;
        EmbeddingCounter counter{g, h, embedding_order(h, {}), std::vector<int>(std::size_t(h.size()), -1)};
        return counter.extend(0, 0);
    }

    auto count_copies(const SimpleGraph & g, const Pattern & h) -> Count
    {
        if (h.vertices() > g.size())
            return 0;
        switch (h.kind()) {
            case Pattern::Kind::Cycle: return count_cycles(g, h.k());
            case Pattern::Kind::Path: return count_paths(g, h.k());
            case Pattern::Kind::Complete: return count_cliques(g, h.k());
            case Pattern::Kind::Star: return count_star_copies(g, h.k());
            case Pattern::Kind::Explicit: return count_embeddings(g, h.graph()) / h.automorphisms();
        }
        return 0;
    }

    auto count_copies_through_edge(const SimpleGraph & g, const Pattern & h, int u, int v) -> Count
    {
        if (! g.adjacent(u, v))
            throw PreconditionError("count_copies_through_edge: edge absent");
        if (h.vertices() > g.size())
            return 0;
        switch (h.kind()) {
            case Pattern::Kind::Cycle: {
                Mask allowed = g.all() & ~bit(u) & ~bit(v);
                if (h.k() == 3)
                    return Count(popcount(g.neighbours(u) & g.neighbours(v)));
                return count_path_extensions(g, u, allowed, g.neighbours(v), h.k() - 2);
            }
            case Pattern::Kind::Complete:
                return count_cliques_in(g, g.neighbours(u) & g.neighbours(v), h.k() - 2);
            case Pattern::Kind::Star:
                if (h.k() == 1)
                    return 1;
                return binomial(g.degree(u) - 1, h.k() - 1) + binomial(g.degree(v) - 1, h.k() - 1);
            case Pattern::Kind::Path:
            case Pattern::Kind::Explicit: {
                const auto & hg = h.graph();
                Count total = 0;
                for (auto [a, b] : hg.edges()) {
                    for (int flip = 0; flip < 2; ++flip) {
                        int ha = flip ? b : a, hb = flip ? a : b;
                        EmbeddingCounter counter{g, hg, embedding_order(hg, {ha, hb}), std::vector<int>(std::size_t(hg.size()), -1)};
                        counter.image[ha] = u;
                        counter.image[hb] = v;
                        if (hg.size() == 2)
                            total += 1;
                        else
                            total += counter.extend(2, bit(u) | bit(v));
                    }
                }
                return total / h.automorphisms();
            }
        }
        return 0;
    }

    auto mono_counts(const TwoColoring & c, const Pattern & h) -> MonoCounts
    {
        return MonoCounts{count_copies(c.red_graph(), h), count_copies(c.blue_graph(), h)};
    }

    namespace
    {
        auto find_path_closing(const SimpleGraph & g, std::vector<int> & path, Mask allowed, Mask closing, int remaining) -> bool
        {
            Mask cand = g.neighbours(path.back()) & allowed;
            if (remaining == 1) {
                cand &= closing;
                if (! cand)
                    return false;
                path.push_back(std::countr_zero(cand));
                return true;
            }
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                path.push_back(v);
                if (find_path_closing(g, path, allowed & ~bit(v), closing, remaining - 1))
                    return true;
                path.pop_back();
            }
            return false;
        }
    }

    auto find_cycle(const SimpleGraph & g, int k) -> std::optional<std::vector<int>>
    {
        if (k < 3 || k > g.size())
            return std::nullopt;
        for (int anchor = 0; anchor < g.size(); ++anchor) {
            Mask above = g.all() & ~low_bits(anchor + 1);
            if (popcount(above) < k - 1 || g.degree_into(anchor, above) < 2)
                continue;
            std::vector<int> path{anchor};
            if (find_path_closing(g, path, above, g.neighbours(anchor), k - 1))
                return path;
        }
        return std::nullopt;
    }

    auto find_clique(const SimpleGraph & g, int k, Mask within) -> std::optional<Mask>
    {
        if (k < 0)
            return std::nullopt;
        return find_clique_in(g, within & g.all(), k, 0);
    }

    auto cycle_spectrum(const SimpleGraph & g, int max_len) -> std::map<int, std::vector<int>>
    {
        if (max_len > g.size())
            throw PreconditionError("cycle_spectrum: max_len exceeds vertex count");
        std::map<int, std::vector<int>> result;
        for (int t = 3; t <= max_len; ++t)
            if (auto c = find_cycle(g, t))
                result.emplace(t, std::move(*c));
        return result;
    }

    auto is_cycle_in(const SimpleGraph & g, const std::vector<int> & cycle) -> bool
    {
        if (cycle.size() < 3)
            return false;
        Mask seen = 0;
        for (int v : cycle) {
            if (v < 0 || v >= g.size() || contains(seen, v))
                return false;
            seen |= bit(v);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (! g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
                return false;
        return true;
    }
}
