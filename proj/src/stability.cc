#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/stability.hh>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ramsey
{
    namespace
    {
        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok)
                throw PreconditionError(what);
        }

        auto check_partition_of(int n, const std::vector<Mask> & parts) -> void
        {
            require(! parts.empty(), "partition needs at least one part");
            Mask seen = 0;
            for (Mask p : parts) {
                require(p != 0, "partition parts must be non-empty");
                require((p & seen) == 0, "partition parts must be disjoint");
                seen |= p;
            }
            require(seen == low_bits(n), "partition parts must cover every vertex");
        }

        auto list(const std::vector<int> & xs) -> std::string
        {
            std::ostringstream out;
            for (std::size_t i = 0; i < xs.size(); ++i)
                out << (i ? "," : "") << xs[i];
            return out.str();
        }
    }

    auto random_equitable_parts(int n, int M, std::uint64_t seed) -> std::vector<Mask>
    {
        require(M >= 1 && M <= n, "need 1 <= M <= n parts");
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<Mask> parts(static_cast<std::size_t>(M), 0);
        for (int i = 0; i < n; ++i)
            parts[static_cast<std::size_t>(i % M)] |= bit(order[static_cast<std::size_t>(i)]);
        return parts;
    }

    auto build_reduced(const TwoColoring & c, const std::vector<Mask> & parts, const RegimeParams & p, std::optional<Sampling> sampling) -> ReducedGraph
    {
        int n = c.size(), M = int(parts.size());
        check_partition_of(n, parts);
        int smallest = n, largest = 0;
        for (Mask part : parts) {
            smallest = std::min(smallest, popcount(part));
            largest = std::max(largest, popcount(part));
        }
        if (! sampling) {
            require(smallest >= 2, "exact regularity needs parts of at least 2 vertices");
            require(largest <= max_exact_regularity_side, "exact regularity needs parts of at most " + std::to_string(max_exact_regularity_side) + " vertices");
        }

        ReducedGraph r{M, parts, std::vector<int>(static_cast<std::size_t>(n), -1), SimpleGraph(M), SimpleGraph(M), SimpleGraph(M), {}, p.eps, p.d, largest - smallest <= 1, 0};
        for (int i = 0; i < M; ++i)
            for_each_vertex(parts[static_cast<std::size_t>(i)], [&](int v) { r.part_map[static_cast<std::size_t>(v)] = i; });

        auto red = c.red_graph(), blue = c.blue_graph();
        for (int i = 0; i < M; ++i)
            for (int j = i + 1; j < M; ++j) {
                Mask X = parts[static_cast<std::size_t>(i)], Y = parts[static_cast<std::size_t>(j)];
                auto reg = check_regularity(X, Y, red, p.eps, sampling);
                double rd = density(X, Y, red), bd = density(X, Y, blue);
                bool unproven = reg.verdict == Regularity::Unknown;
                r.pairs.push_back({i, j, rd, reg.verdict, unproven});
                if (reg.verdict == Regularity::Irregular) {
                    r.irregular.add_edge(i, j);
                    continue;
                }
                r.unproven_pairs += unproven;
                if (rd >= p.d)
                    r.red.add_edge(i, j);
                if (bd >= p.d)
                    r.blue.add_edge(i, j);
            }
        return r;
    }

    auto to_string(PartitionStructure s) -> std::string
    {
        return s == PartitionStructure::Bipartite ? "bipartite" : "bipartite-complement";
    }

    auto check_partition(const SimpleGraph & g, const PartitionFound & p, double alpha, double beta) -> std::vector<std::string>
    {
        std::vector<std::string> problems;
        double n = g.size();
        if ((p.U0 & p.U1) || (p.U0 & p.U2) || (p.U1 & p.U2) || (p.U0 | p.U1 | p.U2) != g.all())
            problems.push_back("U0, U1, U2 do not partition the vertices");
        if (! (popcount(p.U0) < 2000 * alpha * n))
            problems.push_back("|U0| >= 2000 alpha n");
        double slack = 10 * std::sqrt(alpha + beta);
        int u1 = popcount(p.U1), u2 = popcount(p.U2);
        if (! ((0.5 - slack) * n < u1))
            problems.push_back("|U1| <= (1/2 - 10 sqrt(alpha + beta)) n");
        if (! (u1 <= u2))
            problems.push_back("|U1| > |U2|");
        if (! (u2 < (0.5 + slack) * n))
            problems.push_back("|U2| >= (1/2 + 10 sqrt(alpha + beta)) n");
        bool ok = true;
        if (p.structure == PartitionStructure::Bipartite) {
            for_each_vertex(p.U1, [&](int v) { ok = ok && (g.neighbours(v) & p.U1) == 0; });
            for_each_vertex(p.U2, [&](int v) { ok = ok && (g.neighbours(v) & p.U2) == 0; });
        }
        else
            for_each_vertex(p.U1, [&](int v) { ok = ok && (g.neighbours(v) & p.U2) == 0; });
        if (! ok)
            problems.push_back("G - U0 is not a subgraph of the " + to_string(p.structure) + " graph on U1, U2");
        return problems;
    }

    namespace
    {
        /// Pieces that move as a unit: `a` goes to one side, `b` to the other.
        struct Piece
        {
            Mask a, b;
        };

        /// Components of g[R]. With `two_sided` each is split by a proper
        /// 2-colouring (nullopt if some component is not bipartite).
        auto pieces_of(const SimpleGraph & g, Mask R, bool two_sided) -> std::optional<std::vector<Piece>>
        {
            std::vector<Piece> out;
            Mask left = R;
            while (left) {
                int root = std::countr_zero(left);
                Mask side[2] = {bit(root), 0}, frontier = bit(root), seen = bit(root);
                int parity = 0;
                while (frontier) {
                    Mask next = 0;
                    for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v) & R; });
                    if (two_sided && (next & side[parity]))
                        return std::nullopt;
                    next &= ~seen;
                    parity ^= 1;
                    side[parity] |= next;
                    seen |= next;
                    frontier = next;
                }
                left &= ~seen;
                out.push_back(two_sided ? Piece{side[0], side[1]} : Piece{seen, 0});
            }
            return out;
        }

        /// Splits the pieces so that the smaller side has size s, lo < s and
        /// the larger side is below hi; picks the most balanced feasible s.
        auto split(const std::vector<Piece> & pieces, int r, double lo, double hi) -> std::optional<std::pair<Mask, Mask>>
        {
            std::size_t k = pieces.size();
            // reach[i][s]: side one can have size s using the first i pieces; choice records orientation.
            std::vector<std::vector<signed char>> choice(k + 1, std::vector<signed char>(static_cast<std::size_t>(r + 1), -1));
            choice[0][0] = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (int s = 0; s <= r; ++s) {
                    if (choice[i][static_cast<std::size_t>(s)] < 0)
                        continue;
                    for (int o = 0; o < 2; ++o) {
                        int add = popcount(o ? pieces[i].b : pieces[i].a);
                        if (s + add <= r && choice[i + 1][static_cast<std::size_t>(s + add)] < 0)
                            choice[i + 1][static_cast<std::size_t>(s + add)] = static_cast<signed char>(o);
                    }
                }
            for (int s = r / 2; s >= 0; --s) {
                if (choice[k][static_cast<std::size_t>(s)] < 0 || ! (lo < s) || ! (r - s < hi))
                    continue;
                Mask one = 0, two = 0;
                int at = s;
                for (std::size_t i = k; i-- > 0;) {
                    int o = choice[i + 1][static_cast<std::size_t>(at)];
                    Mask mine = o ? pieces[i].b : pieces[i].a, theirs = o ? pieces[i].a : pieces[i].b;
                    one |= mine;
                    two |= theirs;
                    at -= popcount(mine);
                }
                return std::pair{one, two};
            }
            return std::nullopt;
        }
    }

    auto ns_check(const SimpleGraph & g, double alpha, double beta, NsBudget budget) -> DichotomyOutcome
    {
        int n = g.size();
        require(n >= 1, "graph must be non-empty");
        require(alpha > 0 && beta >= 0, "need alpha > 0 and beta >= 0");
        require(double(g.edge_count()) > (0.25 - beta) * n * n, "e(G) must exceed (1/4 - beta) n^2");

        DichotomyOutcome out{Inconclusive{}, {}};
        if (! (alpha < 5e-6))
            out.unmet.push_back("0 < alpha < 5e-6");
        if (! (beta <= alpha / 25))
            out.unmet.push_back("0 <= beta <= alpha/25");
        if (! (n >= 1 / alpha))
            out.unmet.push_back("n >= 1/alpha");

        int top = int(std::ceil((0.5 + alpha) * n));
        CyclesFound found{{}, top};
        std::vector<int> missing;
        for (int t = 3; t <= top; ++t) {
            auto cyc = t <= n ? find_cycle(g, t) : std::nullopt;
            if (cyc)
                found.cycles[t] = *cyc;
            else
                missing.push_back(t);
        }
        if (missing.empty()) {
            out.variant = found;
            return out;
        }

        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
        int cap = std::clamp(int(std::ceil(2000 * alpha * n)) - 1, 0, n);
        if (budget.max_removed >= 0)
            cap = std::min(cap, budget.max_removed);

        double slack = 10 * std::sqrt(alpha + beta), lo = (0.5 - slack) * n, hi = (0.5 + slack) * n;
        Mask U0 = 0;
        for (int k = 0; k <= cap; ++k) {
            if (k > 0)
                U0 |= bit(order[static_cast<std::size_t>(k - 1)]);
            Mask R = g.all() & ~U0;
            int r = n - k;
            for (auto structure : {PartitionStructure::Bipartite, PartitionStructure::BipartiteComplement}) {
                auto pieces = pieces_of(g, R, structure == PartitionStructure::Bipartite);
                if (! pieces)
                    continue;
                auto sides = split(*pieces, r, lo, hi);
                if (! sides)
                    continue;
                PartitionFound part{U0, sides->first, sides->second, structure};
                if (check_partition(g, part, alpha, beta).empty()) {
                    out.variant = part;
                    return out;
                }
            }
        }

        out.variant = Inconclusive{{"missing cycle lengths: " + list(missing),
            "no bipartite or bipartite-complement partition with |U0| <= " + std::to_string(cap) + " (lowest degree first)"}};
        return out;
    }

    auto ring_length(int M, double alpha) -> int
    {
        double x = (0.5 + alpha) * M;
        int t = int(std::floor(x));
        if (t % 2 == 0)
            --t;
        require(t >= 1 && t > x - 2, "no odd t in the window (1/2 + alpha) M >= t > (1/2 + alpha) M - 2");
        return t;
    }

    auto main2_classify(const TwoColoring & c, const std::vector<Mask> & parts, const RegimeParams & p, std::optional<Sampling> sampling, ClassifyBudget budget)
        -> Classification
    {
        auto reduced = build_reduced(c, parts, p, sampling);
        int t = ring_length(reduced.M, p.alpha);
        Classification out{Inconclusive{}, reduced, t, -1.0, {}};
        if (! reduced.equitable)
            out.flags.push_back("partition is not equitable; |V_i| >= floor(n/M) not guaranteed");
        if (reduced.unproven_pairs)
            out.flags.push_back(std::to_string(reduced.unproven_pairs) + " pairs treated as regular without proof");
        if (! p.paper_mode)
            out.flags.push_back("explorer parameters");
        if (p.d > 1)
            out.flags.push_back("degenerate: density floor d > 1 leaves the reduced graph uncoloured");
        if (t > reduced.M)
            out.flags.push_back("degenerate: ring length t exceeds the number of parts M");
        if (p.lambda >= 1)
            out.flags.push_back("degenerate: lambda >= 1 admits every colouring into Case 2");

        std::vector<std::string> diagnostics;
        if (t >= 3) {
            for (Color color : {Color::Red, Color::Blue}) {
                auto cyc = find_cycle(reduced.colored(color), t);
                if (! cyc)
                    continue;
                auto g = c.graph(color);
                Case1Witness w{*cyc, color, t, {}, {}};
                for (int i = 0; i < t; ++i) {
                    Mask X = parts[static_cast<std::size_t>((*cyc)[static_cast<std::size_t>(i)])];
                    Mask Y = parts[static_cast<std::size_t>((*cyc)[static_cast<std::size_t>((i + 1) % t)])];
                    w.densities.push_back(density(X, Y, g));
                    w.regularity.push_back(check_regularity(X, Y, g, p.eps, sampling).verdict);
                }
                out.outcome = w;
                return out;
            }
            diagnostics.push_back("no red or blue cycle of length " + std::to_string(t) + " in the reduced graph");
        }
        else
            diagnostics.push_back("ring length " + std::to_string(t) + " is below 3");

        auto mode = budget.extremal_mode;
        if (mode == ExtremalMode::Exact && c.size() > max_exact_extremal_vertices) {
            mode = ExtremalMode::LocalSearch;
            out.flags.push_back("extremal parameter from local search (upper bound)");
        }
        auto assessment = extremal_parameter(c, mode, budget.seed);
        out.lambda_star = assessment.lambda_star;
        if (assessment.lambda_star <= p.lambda) {
            out.outcome = Case2Witness{assessment, p.lambda};
            return out;
        }
        std::ostringstream why;
        why << "extremal parameter " << assessment.lambda_star << " exceeds 300 sqrt(alpha) = " << p.lambda;
        diagnostics.push_back(why.str());
        out.outcome = Inconclusive{diagnostics};
        return out;
    }
}
