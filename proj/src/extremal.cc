#include <ramsey/counting.hh>
#include <ramsey/extremal.hh>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ramsey
{
    namespace
    {
        constexpr double lambda_slack = 1e-12;

        auto pairs_in(int a) -> double { return double(a) * double(a - 1) / 2.0; }

        auto check_partition(int n, Mask A, Mask B) -> void
        {
            if (n < 2)
                throw PreconditionError("a bipartition needs at least two vertices");
            if ((A & B) || (A | B) != low_bits(n) || ! A || ! B)
                throw PreconditionError("A and B must partition the vertex set into two nonempty parts");
        }

        // Lambda from edge counts: within-colour edges inside each part and
        // other-colour edges across.
        auto lambda_from(int n, int a, int b, double within_a, double within_b, double cross) -> double
        {
            double l = std::max({0.0, 0.5 - double(a) / n, 0.5 - double(b) / n});
            if (a > 1)
                l = std::max(l, 1.0 - within_a / pairs_in(a));
            if (b > 1)
                l = std::max(l, 1.0 - within_b / pairs_in(b));
            return std::max(l, 1.0 - cross / (double(a) * double(b)));
        }

        // First failing density inequality with `within` dense inside, if any.
        auto density_failure(const TwoColoring & c, Mask A, Mask B, Color within, double lambda) -> std::optional<std::string>
        {
            auto g = c.graph(within), o = c.graph(other(within));
            int a = popcount(A), b = popcount(B);
            auto fmt = [&](const std::string & what, double d) {
                std::ostringstream s;
                s << what << " density below 1−λ (" << d << " < " << 1.0 - lambda << ")";
                return s.str();
            };
            double need = 1.0 - lambda - lambda_slack;
            if (a > 1 && double(g.edges_within(A)) / pairs_in(a) < need)
                return fmt("within-A " + to_string(within), double(g.edges_within(A)) / pairs_in(a));
            if (b > 1 && double(g.edges_within(B)) / pairs_in(b) < need)
                return fmt("within-B " + to_string(within), double(g.edges_within(B)) / pairs_in(b));
            double cross = double(o.edges_between(A, B)) / (double(a) * double(b));
            if (cross < need)
                return fmt("cross " + to_string(other(within)), cross);
            return std::nullopt;
        }

        auto factorial_half(int k) -> Count
        {
            Count f = 1;
            for (int i = 2; i < k; ++i)
                f *= Count(i);
            return f / 2;
        }

        auto min_common(const SimpleGraph & g, Mask S, Mask T, Edge * argmin = nullptr) -> int
        {
            int best = std::numeric_limits<int>::max();
            auto vs = vertices_of(S);
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    int c = popcount(g.neighbours(vs[i]) & g.neighbours(vs[j]) & T);
                    if (c < best) {
                        best = c;
                        if (argmin)
                            *argmin = {vs[i], vs[j]};
                    }
                }
            return best;
        }

        auto is_clique(const SimpleGraph & g, Mask S) -> bool
        {
            int s = popcount(S);
            return g.edges_within(S) == long(s) * (s - 1) / 2;
        }

        auto first_edge_within(const SimpleGraph & g, Mask S) -> std::optional<Edge>
        {
            for (int u : vertices_of(S))
                if (Mask m = g.neighbours(u) & S & ~low_bits(u + 1))
                    return Edge{u, std::countr_zero(m)};
            return std::nullopt;
        }

        // Paths of length one or two from S to T with the middle vertex outside S and T.
        auto short_paths(const SimpleGraph & g, Mask S, Mask T) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> out;
            Mask outside = g.all() & ~(S | T);
            for (int a : vertices_of(S)) {
                for (int b : vertices_of(g.neighbours(a) & T))
                    out.push_back({a, b});
                for (int z : vertices_of(g.neighbours(a) & outside))
                    for (int b : vertices_of(g.neighbours(z) & T))
                        out.push_back({a, z, b});
            }
            return out;
        }

        auto disjoint_short_paths(const SimpleGraph & g, Mask S, Mask T) -> std::optional<std::pair<std::vector<int>, std::vector<int>>>
        {
            auto paths = short_paths(g, S, T);
            std::vector<Mask> masks;
            for (const auto & p : paths)
                masks.push_back(mask_of(p));
            for (std::size_t i = 0; i < paths.size(); ++i)
                for (std::size_t j = i + 1; j < paths.size(); ++j)
                    if (! (masks[i] & masks[j]))
                        return std::pair{paths[i], paths[j]};
            return std::nullopt;
        }

        // A vertex w of S such that S minus w is complete to T and w has a
        // neighbour in T.
        auto alternating_pivot(const SimpleGraph & g, Mask S, Mask T) -> std::optional<int>
        {
            std::vector<int> short_of;
            for (int v : vertices_of(S))
                if ((g.neighbours(v) & T) != T)
                    short_of.push_back(v);
            if (short_of.size() > 1)
                return std::nullopt;
            if (short_of.size() == 1)
                return g.neighbours(short_of[0]) & T ? std::optional(short_of[0]) : std::nullopt;
            for (int v : vertices_of(S))
                if (g.neighbours(v) & T)
                    return v;
            return std::nullopt;
        }

        auto two_path_between(const SimpleGraph & g, Mask S, Mask T, Mask middles) -> std::optional<std::vector<int>>
        {
            for (int z : vertices_of(middles & ~(S | T))) {
                Mask ns = g.neighbours(z) & S, nt = g.neighbours(z) & T;
                if (ns && nt)
                    return std::vector<int>{std::countr_zero(ns), z, std::countr_zero(nt)};
            }
            return std::nullopt;
        }

        auto join(const std::vector<std::string> & problems) -> std::string
        {
            std::string out;
            for (const auto & p : problems)
                out += (out.empty() ? "" : "; ") + p;
            return out;
        }

        auto valid_vertex(const SimpleGraph & f, int v) -> bool { return v >= 0 && v < f.size(); }

        auto check_path(const SimpleGraph & f, std::vector<int> p, Mask S, Mask T, std::size_t max_vertices, const std::string & name, std::vector<std::string> & problems) -> std::vector<int>
        {
            if (p.size() < 2 || p.size() > max_vertices) {
                problems.push_back(name + " has the wrong length");
                return p;
            }
            for (int v : p)
                if (! valid_vertex(f, v)) {
                    problems.push_back(name + " names a vertex outside the graph");
                    return p;
                }
            if (contains(T, p.front()) && contains(S, p.back()))
                std::reverse(p.begin(), p.end());
            if (! contains(S, p.front()) || ! contains(T, p.back()))
                problems.push_back(name + " must have one end in S and the other in T");
            for (std::size_t i = 1; i + 1 < p.size(); ++i)
                if (contains(S | T, p[i]))
                    problems.push_back(name + " has an interior vertex inside S or T");
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (! f.adjacent(p[i], p[i + 1]))
                    problems.push_back(name + " uses a missing edge " + std::to_string(p[i]) + "-" + std::to_string(p[i + 1]));
            return p;
        }

        auto finish_check(const SimpleGraph & f, double bound, Count threshold, int l) -> ClaimCheck
        {
            Count exact = count_copies(f, Pattern::cycle(l));
            return {bound, threshold, exact, exact >= threshold, std::nullopt};
        }
    }

    auto chi(int a, int b) -> TwoColoring
    {
        if (a < 1 || b < 1 || a + b > max_vertices)
            throw PreconditionError("chi(a,b) needs a, b >= 1 and a + b <= " + std::to_string(max_vertices));
        TwoColoring c(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = a; j < a + b; ++j)
                c.set(i, j, Color::Red);
        return c;
    }

    auto extremal_lambda(const TwoColoring & c, Mask A, Mask B, Color within) -> double
    {
        int n = c.size();
        check_partition(n, A, B);
        auto g = c.graph(within), o = c.graph(other(within));
        return lambda_from(n, popcount(A), popcount(B), double(g.edges_within(A)), double(g.edges_within(B)),
            double(o.edges_between(A, B)));
    }

    auto extremal_parameter(const TwoColoring & c, ExtremalMode mode, std::uint64_t seed) -> ExtremalAssessment
    {
        int n = c.size();
        if (n < 2)
            throw PreconditionError("a bipartition needs at least two vertices");
        Mask all = low_bits(n);

        if (mode == ExtremalMode::Exact) {
            if (n > max_exact_extremal_vertices)
                throw PreconditionError("exact mode supports at most " + std::to_string(max_exact_extremal_vertices) + " vertices");
            auto red = c.red_graph();
            // Vertex n-1 stays in B; Gray code walks every nonempty A.
            Mask A = 0, B = all;
            long in_a = 0, in_b = red.edge_count(), cross = 0;
            ExtremalAssessment best{0, 0, 2.0, Color::Red};
            std::uint64_t count = std::uint64_t{1} << (n - 1);
            for (std::uint64_t i = 1; i < count; ++i) {
                int v = std::countr_zero(i);
                if (contains(A, v)) {
                    A &= ~bit(v);
                    long da = popcount(red.neighbours(v) & A), db = popcount(red.neighbours(v) & B);
                    in_a -= da;
                    in_b += db;
                    cross += da - db;
                    B |= bit(v);
                }
                else {
                    B &= ~bit(v);
                    long da = popcount(red.neighbours(v) & A), db = popcount(red.neighbours(v) & B);
                    in_a += da;
                    in_b -= db;
                    cross += db - da;
                    A |= bit(v);
                }
                int a = popcount(A), b = n - a;
                double pa = pairs_in(a), pb = pairs_in(b), ab = double(a) * double(b);
                double red_role = lambda_from(n, a, b, double(in_a), double(in_b), ab - double(cross));
                double blue_role = lambda_from(n, a, b, pa - double(in_a), pb - double(in_b), double(cross));
                if (red_role < best.lambda_star)
                    best = {A, B, red_role, Color::Red};
                if (blue_role < best.lambda_star)
                    best = {A, B, blue_role, Color::Blue};
            }
            return best;
        }

        std::mt19937_64 rng(seed);
        ExtremalAssessment best{0, 0, 2.0, Color::Red};
        auto evaluate = [&](Mask A) {
            double r = extremal_lambda(c, A, all & ~A, Color::Red), b = extremal_lambda(c, A, all & ~A, Color::Blue);
            return r <= b ? std::pair{r, Color::Red} : std::pair{b, Color::Blue};
        };
        constexpr int restarts = 16;
        for (int r = 0; r < restarts; ++r) {
            Mask A = rng() & all;
            if (A == 0 || A == all)
                A = bit(0);
            auto cur = evaluate(A);
            for (bool improved = true; improved;) {
                improved = false;
                for (int v = 0; v < n; ++v) {
                    Mask next = A ^ bit(v);
                    if (next == 0 || next == all)
                        continue;
                    auto cand = evaluate(next);
                    if (cand.first < cur.first) {
                        A = next;
                        cur = cand;
                        improved = true;
                    }
                }
            }
            if (cur.first < best.lambda_star)
                best = {A, all & ~A, cur.first, cur.second};
        }
        return best;
    }

    auto cleanup(const TwoColoring & c, Mask A, Mask B, double lambda) -> CleanupResult
    {
        int n = c.size();
        check_partition(n, A, B);
        if (! (lambda >= 0.0 && lambda <= 1.0))
            throw PreconditionError("lambda must lie in [0, 1]");

        auto red_fail = density_failure(c, A, B, Color::Red, lambda);
        bool swap = false;
        if (red_fail) {
            if (density_failure(c, A, B, Color::Blue, lambda))
                throw PreconditionError(*red_fail);
            swap = true;
        }
        auto cc = swap ? c.swapped() : c;
        auto red = cc.red_graph(), blue = cc.blue_graph();

        double root = std::sqrt(lambda);
        int a = popcount(A), b = popcount(B);
        auto bad = [&](Mask own, int own_size, Mask across, int across_size) {
            Mask out = 0;
            for (int v : vertices_of(own))
                if (double(red.degree_into(v, own)) < (1.0 - root) * (own_size - 1) - lambda_slack
                    || double(blue.degree_into(v, across)) < (1.0 - root) * across_size - lambda_slack)
                    out |= bit(v);
            return out;
        };
        CleanupResult r{};
        r.X = bad(A, a, B, b);
        r.Y = bad(B, b, A, a);
        r.A_prime = A & ~r.X;
        r.B_prime = B & ~r.Y;
        r.lambda = lambda;
        r.colors_swapped = swap;

        if (popcount(r.X) > 2.0 * root * a + lambda_slack || popcount(r.Y) > 2.0 * root * b + lambda_slack)
            throw Error("cleanup removed more vertices than the density bound allows");
        for (auto [own, own_size, across, across_size] : {std::tuple{r.A_prime, a, r.B_prime, b}, std::tuple{r.B_prime, b, r.A_prime, a}})
            for (int v : vertices_of(own))
                if (double(red.degree_into(v, own)) < (1.0 - 3.0 * root) * own_size - 1.0 - lambda_slack
                    || double(blue.degree_into(v, across)) < (1.0 - 3.0 * root) * across_size - lambda_slack)
                    throw Error("cleanup degree guarantee failed at vertex " + std::to_string(v));
        return r;
    }

    auto claim_common_neighbor_bound(int s, int S_size, int l) -> Count
    {
        if (l % 2 == 0 || l < 3 || l > 2 * s + 1 || l > 2 * S_size - 1)
            throw PreconditionError("l must be odd with 3 <= l <= min(2s+1, 2|S|-1)");
        Count bound = 1;
        for (int i = 0; i < (l - 1) / 2; ++i)
            bound *= Count(s - (l - 3) / 2);
        for (int i = 0; i < (l - 3) / 2; ++i)
            bound *= Count(S_size - (l - 1) / 2);
        return bound;
    }

    auto claim_bridged_cliques_bound(int l) -> double
    {
        if (l < 7)
            throw PreconditionError("the bridged-cliques bound needs l >= 7");
        return std::pow(((l - 1) / 2.0 - 3.0) / std::numbers::e, l - 6);
    }

    auto claim_alternating_bound(int l) -> double
    {
        if (l < 7 || l % 2 == 0)
            throw PreconditionError("the alternating bound needs odd l >= 7");
        return std::pow((l - 5) / (2.0 * std::numbers::e), l - 5);
    }

    auto bound_threshold(double bound) -> Count
    {
        if (! (bound >= 1.0))
            return 0;
        return Count(std::floor(std::nextafter(bound, 0.0)));
    }

    auto verify_claim_common_neighbor(const SimpleGraph & f, Mask S, Mask T, int l) -> ClaimCheck
    {
        if (S & T)
            throw PreconditionError("S and T overlap");
        if ((S | T) & ~f.all())
            throw PreconditionError("S or T names a vertex outside the graph");
        if (popcount(S) < 2 || f.edges_within(S) == 0)
            throw PreconditionError("no edge inside S");
        if (l % 2 == 0 || l < 3 || l > 2 * popcount(S) - 1)
            throw PreconditionError("l must be odd with 3 <= l <= 2|S|-1");
        Edge worst{};
        int s = min_common(f, S, T, &worst);
        if (l > 2 * s + 1)
            throw PreconditionError("pair (" + std::to_string(worst.first) + "," + std::to_string(worst.second) + ") has only "
                + std::to_string(s) + " common neighbours in T; l = " + std::to_string(l) + " needs " + std::to_string((l - 1) / 2));
        Count bound = claim_common_neighbor_bound(s, popcount(S), l);
        auto check = finish_check(f, double(bound), bound, l);
        check.s = s;
        return check;
    }

    auto verify_claim_bridged_cliques(const SimpleGraph & f, Mask S, Mask T, const std::vector<int> & P1, const std::vector<int> & P2, int l) -> ClaimCheck
    {
        std::vector<std::string> problems;
        if (S & T)
            problems.push_back("S and T overlap");
        if ((S | T) & ~f.all())
            problems.push_back("S or T names a vertex outside the graph");
        if (! is_clique(f, S))
            problems.push_back("S is not a clique");
        if (! is_clique(f, T))
            problems.push_back("T is not a clique");
        auto p1 = check_path(f, P1, S, T, 3, "P1", problems);
        auto p2 = check_path(f, P2, S, T, 3, "P2", problems);
        if (problems.empty() && (mask_of(p1) & mask_of(p2)))
            problems.push_back("P1 and P2 share a vertex");
        if (l < 7 || l > 2 * popcount(S) - 1 || l > 2 * popcount(T) - 1)
            problems.push_back("l must satisfy 7 <= l <= min(2|S|-1, 2|T|-1)");
        if (! problems.empty())
            throw PreconditionError(join(problems));
        double bound = claim_bridged_cliques_bound(l);
        return finish_check(f, bound, bound_threshold(bound), l);
    }

    auto verify_claim_alternating(const SimpleGraph & f, Mask S, Mask T, int w, const std::vector<int> & P_prime, int l) -> ClaimCheck
    {
        std::vector<std::string> problems;
        if (S & T)
            problems.push_back("S and T overlap");
        if ((S | T) & ~f.all())
            problems.push_back("S or T names a vertex outside the graph");
        if (! valid_vertex(f, w) || ! contains(S, w))
            problems.push_back("w is not in S");
        else {
            for (int v : vertices_of(S & ~bit(w)))
                if ((f.neighbours(v) & T) != T) {
                    problems.push_back("S without w is not complete to T (vertex " + std::to_string(v) + ")");
                    break;
                }
            if (! (f.neighbours(w) & T))
                problems.push_back("w has no neighbour in T");
        }
        if (P_prime.size() != 3)
            problems.push_back("P' must have exactly two edges");
        else
            check_path(f, P_prime, S, T, 3, "P'", problems);
        if (l % 2 == 0 || l < 7 || l > 2 * popcount(S) + 1 || l > 2 * popcount(T) + 1)
            problems.push_back("l must be odd with 7 <= l <= min(2|S|+1, 2|T|+1)");
        if (! problems.empty())
            throw PreconditionError(join(problems));
        double bound = claim_alternating_bound(l);
        return finish_check(f, bound, bound_threshold(bound), l);
    }

    TwoMatchingFound::TwoMatchingFound(Edge first, Edge second) :
        Error("two vertex-disjoint S-T edges: " + std::to_string(first.first) + "-" + std::to_string(first.second) + " and "
            + std::to_string(second.first) + "-" + std::to_string(second.second)),
        _first(first),
        _second(second)
    {
    }

    auto find_two_matching(const SimpleGraph & f, Mask S, Mask T) -> std::optional<std::pair<Edge, Edge>>
    {
        std::vector<Edge> edges;
        for (int a : vertices_of(S))
            for (int b : vertices_of(f.neighbours(a) & T))
                edges.emplace_back(a, b);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (edges[i].first != edges[j].first && edges[i].second != edges[j].second)
                    return std::pair{edges[i], edges[j]};
        return std::nullopt;
    }

    auto two_matching_reduction(const SimpleGraph & f, Mask S, Mask T) -> std::optional<int>
    {
        if (S & T)
            throw PreconditionError("S and T overlap");
        Mask touching = 0, reached = 0;
        for (int a : vertices_of(S))
            if (Mask nb = f.neighbours(a) & T) {
                touching |= bit(a);
                reached |= nb;
            }
        if (! touching)
            return std::nullopt;
        if (popcount(touching) == 1)
            return std::countr_zero(touching);
        if (popcount(reached) == 1)
            return std::countr_zero(reached);
        auto m = find_two_matching(f, S, T);
        if (! m)
            throw Error("internal: S-T edges have no single cover yet no two-matching");
        throw TwoMatchingFound(m->first, m->second);
    }

    auto case2_lower_bound(const TwoColoring & c, int k, Mask A, Mask B, double lambda) -> CaseTwoCertificate
    {
        int n = c.size();
        if (k < 3 || k % 2 == 0)
            throw PreconditionError("k must be odd and at least 3");
        if (n != 2 * k - 1)
            throw PreconditionError("case 2 needs n = 2k-1");
        check_partition(n, A, B);
        double need = std::min(extremal_lambda(c, A, B, Color::Red), extremal_lambda(c, A, B, Color::Blue));
        if (need > lambda + lambda_slack) {
            std::ostringstream s;
            s << "colouring is not extremal with parameter " << lambda << " for this partition (needs " << need << ")";
            throw PreconditionError(s.str());
        }

        CaseTwoCertificate cert{};
        cert.cleanup = cleanup(c, A, B, lambda);
        cert.colors_swapped = cert.cleanup.colors_swapped;
        cert.trail.push_back("cleanup");
        auto cc = cert.colors_swapped ? c.swapped() : c;
        auto red = cc.red_graph(), blue = cc.blue_graph();
        Mask all = low_bits(n);

        auto fire = [&](const std::string & claim, Count bound, Color normalized) -> CaseTwoCertificate & {
            cert.claim_used = claim;
            cert.bound = bound;
            cert.cycle_color = cert.colors_swapped ? other(normalized) : normalized;
            cert.trail.push_back(claim);
            return cert;
        };

        // Blue edge inside a near-red part: alternate through the other part.
        auto blue_edge = [&](Mask P, Mask Q) -> bool {
            for (auto [S, T] : {std::pair{P, Q}, std::pair{Q, P}}) {
                auto e = first_edge_within(blue, S);
                if (! e)
                    continue;
                int s = min_common(blue, S, T);
                if (k > 2 * s + 1 || k > 2 * popcount(S) - 1) {
                    cert.trail.push_back("blue-edge-in-clique out of range");
                    continue;
                }
                fire("blue-edge-in-clique", claim_common_neighbor_bound(s, popcount(S), k), Color::Blue);
                cert.s = s;
                cert.witness = {{"S", vertices_of(S)}, {"T", vertices_of(T)}, {"edge", {e->first, e->second}}};
                return true;
            }
            return false;
        };

        auto red_bridges = [&](Mask S, Mask T) -> bool {
            if (! is_clique(red, S) || ! is_clique(red, T))
                return false;
            auto paths = disjoint_short_paths(red, S, T);
            if (! paths)
                return false;
            if (k < 7 || k > 2 * popcount(S) - 1 || k > 2 * popcount(T) - 1) {
                cert.trail.push_back("two-red-bridges out of range");
                return false;
            }
            fire("two-red-bridges", bound_threshold(claim_bridged_cliques_bound(k)), Color::Red);
            cert.witness = {{"S", vertices_of(S)}, {"T", vertices_of(T)}, {"P1", paths->first}, {"P2", paths->second}};
            return true;
        };

        auto blue_two_path = [&](Mask S, Mask T, Mask middles) -> bool {
            auto w = alternating_pivot(blue, S, T);
            if (! w)
                return false;
            auto p = two_path_between(blue, S, T, middles);
            if (! p)
                return false;
            if (k < 7 || k > 2 * popcount(S) + 1 || k > 2 * popcount(T) + 1) {
                cert.trail.push_back("blue-two-path out of range");
                return false;
            }
            fire("blue-two-path", bound_threshold(claim_alternating_bound(k)), Color::Blue);
            cert.witness = {{"S", vertices_of(S)}, {"T", vertices_of(T)}, {"w", {*w}}, {"P'", *p}};
            return true;
        };

        auto reduce = [&](Mask S, Mask T) -> std::optional<std::optional<int>> {
            try {
                return two_matching_reduction(red, S, T);
            }
            catch (const TwoMatchingFound &) {
                cert.trail.push_back("two red S-T edges remain");
                return std::nullopt;
            }
        };

        Mask SA = cert.cleanup.A_prime, SB = cert.cleanup.B_prime;
        if (blue_edge(SA, SB))
            return cert;
        if (red_bridges(SA, SB))
            return cert;

        if (auto v = reduce(SA, SB)) {
            cert.trail.push_back("two-matching reduction");
            if (*v && contains(SB, **v))
                std::swap(SA, SB);
            Mask A2 = *v ? SA & ~bit(**v) : SA;
            if (A2 && blue_two_path(A2, SB, all))
                return cert;

            Mask rest = all & ~(A2 | SB), Z1 = 0, Z2 = 0;
            for (int z : vertices_of(rest)) {
                if ((red.neighbours(z) & A2) == A2)
                    Z1 |= bit(z);
                else if ((red.neighbours(z) & SB) == SB)
                    Z2 |= bit(z);
            }
            Mask At = A2 | Z1, Bt = SB | Z2;
            cert.trail.push_back("tilde sets");
            if (At && Bt) {
                if (blue_edge(At, Bt))
                    return cert;
                if (red_bridges(At, Bt))
                    return cert;
                if (auto w = reduce(At, Bt)) {
                    Mask S = At, T = Bt;
                    if (*w && contains(T, **w))
                        std::swap(S, T);
                    if (blue_two_path(S, T, all & ~(At | Bt)))
                        return cert;
                }
            }
        }

        if (auto K = find_clique(red, k, all)) {
            fire("red-clique-K_k", factorial_half(k), Color::Red);
            cert.witness = {{"clique", vertices_of(*K)}};
            return cert;
        }
        throw PreconditionError("decision tree exhausted: no claim applies at k = " + std::to_string(k));
    }
}
