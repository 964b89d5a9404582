#include <ramsey/errors.hh>
#include <ramsey/regular_pairs.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ramsey
{
    namespace
    {
        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok)
                throw PreconditionError(what);
        }

        /// Smallest subset size u >= eps * N (double product), and at least 1.
        auto size_floor(double eps, int N) -> int
        {
            long u = static_cast<long>(std::ceil(eps * N));
            return int(std::clamp<long>(u, 1, long(N) + 1));
        }

        /// |e/(ab) - E/(XY)| from exact integers with a single rounding.
        auto deviation(long e, long a, long b, long E, long nx, long ny) -> double
        {
            long num = std::labs(e * nx * ny - E * a * b);
            return double(num) / double(a * b * nx * ny);
        }

        struct Cell
        {
            double dev = -1;
            Mask U = 0, V = 0;
        };

        /// Largest deviation for every (|U|, |V|) with its realising pair.
        struct DeviationTable
        {
            int nx, ny;
            std::vector<std::vector<Cell>> cell;

            auto at(int a, int b) const -> const Cell & { return cell[a][b]; }
        };

        auto deviation_table(Mask X, Mask Y, const SimpleGraph & g) -> DeviationTable
        {
            auto xs = vertices_of(X), ys = vertices_of(Y);
            int nx = int(xs.size()), ny = int(ys.size());
            require(nx <= max_exact_regularity_side && ny <= max_exact_regularity_side,
                    "exact regularity check needs |X|, |Y| <= " + std::to_string(max_exact_regularity_side));
            long E = g.edges_between(X, Y);
            DeviationTable table{nx, ny, std::vector<std::vector<Cell>>(static_cast<std::size_t>(nx + 1), std::vector<Cell>(static_cast<std::size_t>(ny + 1)))};

            std::vector<int> order(static_cast<std::size_t>(ny)), deg(static_cast<std::size_t>(ny));
            for (std::uint32_t local = 1; local < (std::uint32_t{1} << nx); ++local) {
                Mask U = 0;
                for (int i = 0; i < nx; ++i)
                    if ((local >> i) & 1)
                        U |= bit(xs[i]);
                int a = popcount(U);
                for (int j = 0; j < ny; ++j)
                    deg[j] = g.degree_into(ys[j], U);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int p, int q) { return deg[p] > deg[q]; });

                long top = 0, bottom = 0;
                Mask top_set = 0, bottom_set = 0;
                for (int b = 1; b <= ny; ++b) {
                    int hi = order[b - 1], lo = order[ny - b];
                    top += deg[hi];
                    bottom += deg[lo];
                    top_set |= bit(ys[hi]);
                    bottom_set |= bit(ys[lo]);
                    auto & c = table.cell[a][b];
                    double up = deviation(top, a, b, E, nx, ny), down = deviation(bottom, a, b, E, nx, ny);
                    if (up > c.dev)
                        c = {up, U, top_set};
                    if (down > c.dev)
                        c = {down, U, bottom_set};
                }
            }
            return table;
        }

        auto check_disjoint_pair(Mask X, Mask Y) -> void
        {
            require(X != 0 && Y != 0, "regularity needs non-empty X and Y");
            require((X & Y) == 0, "regularity needs disjoint X and Y");
        }

        auto ulp(double x) -> double
        {
            x = std::fabs(x);
            return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
        }

        auto mul_down(double a, double b) -> double
        {
            double r = a * b;
            return r > 0 ? std::nextafter(r, 0.0) : 0.0;
        }

        auto sub_down(double a, double b) -> double
        {
            return a - b - ulp(a) - ulp(b);
        }

        auto pow_down(double base, long k) -> double
        {
            if (k <= 0)
                return 1.0;
            if (base <= 0)
                return 0.0;
            double r = 1.0;
            for (long i = 0; i < k; ++i)
                r = mul_down(r, base);
            return r;
        }

        auto sqrt_up(double x) -> double
        {
            return std::nextafter(std::sqrt(std::max(0.0, x)), std::numeric_limits<double>::infinity());
        }

        /// prod_{i=1..m} (n - floor(i/t)), factors clamped at 0.
        auto falling_product(long n, long m, int t) -> double
        {
            double r = 1.0;
            for (long i = 1; i <= m; ++i) {
                long f = n - i / t;
                if (f <= 0)
                    return 0.0;
                r = mul_down(r, double(f));
            }
            return r;
        }

        auto common_hypotheses(const RegimeParams & p, std::vector<std::string> & unmet) -> void
        {
            if (! (p.eps > 0))
                unmet.push_back("eps > 0");
            if (! (p.eps < 1e-5))
                unmet.push_back("eps < 1e-5");
        }
    }

    auto density(Mask X, Mask Y, const SimpleGraph & g) -> double
    {
        if (X == Y) {
            require(X != 0, "density of an empty set");
            double k = popcount(X);
            return 2.0 * double(g.edges_within(X)) / (k * k);
        }
        check_disjoint_pair(X, Y);
        return double(g.edges_between(X, Y)) / (double(popcount(X)) * double(popcount(Y)));
    }

    auto to_string(Regularity r) -> std::string
    {
        switch (r) {
            case Regularity::Regular: return "regular";
            case Regularity::Irregular: return "irregular";
            case Regularity::Unknown: return "unknown";
        }
        return "?";
    }

    auto check_regularity(Mask X, Mask Y, const SimpleGraph & g, double eps, std::optional<Sampling> sampling) -> RegularityResult
    {
        check_disjoint_pair(X, Y);
        require(eps >= 0 && std::isfinite(eps), "eps must be a non-negative real");
        int nx = popcount(X), ny = popcount(Y);
        int amin = size_floor(eps, nx), bmin = size_floor(eps, ny);
        if (amin > nx || bmin > ny)
            return {Regularity::Regular, std::nullopt, 0.0};

        if (sampling) {
            require(sampling->samples > 0, "sampling needs a positive sample count");
            std::mt19937_64 rng(sampling->seed);
            auto xs = vertices_of(X), ys = vertices_of(Y);
            long E = g.edges_between(X, Y);
            double worst = 0;
            for (int s = 0; s < sampling->samples; ++s) {
                std::shuffle(xs.begin(), xs.end(), rng);
                std::shuffle(ys.begin(), ys.end(), rng);
                Mask U = mask_of(std::span(xs).first(static_cast<std::size_t>(amin)));
                Mask V = mask_of(std::span(ys).first(static_cast<std::size_t>(bmin)));
                double dev = deviation(g.edges_between(U, V), amin, bmin, E, nx, ny);
                if (dev > eps)
                    return {Regularity::Irregular, std::pair{U, V}, dev};
                worst = std::max(worst, dev);
            }
            return {Regularity::Unknown, std::nullopt, worst};
        }

        auto table = deviation_table(X, Y, g);
        double worst = 0;
        for (int a = amin; a <= nx; ++a)
            for (int b = bmin; b <= ny; ++b) {
                const auto & c = table.at(a, b);
                if (c.dev > eps)
                    return {Regularity::Irregular, std::pair{c.U, c.V}, c.dev};
                worst = std::max(worst, c.dev);
            }
        return {Regularity::Regular, std::nullopt, worst};
    }

    auto regularity_defect(Mask X, Mask Y, const SimpleGraph & g) -> double
    {
        check_disjoint_pair(X, Y);
        auto table = deviation_table(X, Y, g);
        int nx = table.nx, ny = table.ny;

        // suffix[a][b] = max deviation over |U| >= a, |V| >= b.
        std::vector<std::vector<double>> suffix(static_cast<std::size_t>(nx + 2), std::vector<double>(static_cast<std::size_t>(ny + 2), 0.0));
        for (int a = nx; a >= 1; --a)
            for (int b = ny; b >= 1; --b)
                suffix[a][b] = std::max({table.at(a, b).dev, suffix[a + 1][b], suffix[a][b + 1]});

        std::vector<double> candidates{0.0, 1.0};
        for (int a = 1; a <= nx; ++a)
            for (int b = 1; b <= ny; ++b)
                candidates.push_back(table.at(a, b).dev);
        for (auto [count, N] : {std::pair{nx, nx}, std::pair{ny, ny}})
            for (int a = 1; a <= count; ++a) {
                double q = double(a) / N;
                candidates.push_back(q);
                candidates.push_back(std::nextafter(q, 2.0));
            }
        std::sort(candidates.begin(), candidates.end());

        for (double eps : candidates) {
            int amin = size_floor(eps, nx), bmin = size_floor(eps, ny);
            if (amin > nx || bmin > ny || suffix[amin][bmin] <= eps)
                return eps;
        }
        return 1.0;
    }

    auto degree_exception_counts(Mask X, Mask Y_prime, const SimpleGraph & g, double d, double eps) -> ExceptionCounts
    {
        require((X & Y_prime) == 0, "X and Y' must be disjoint");
        // Integer degrees against small rational thresholds: the slack only
        // absorbs rounding of d and eps.
        constexpr double slack = 1e-9;
        double size = popcount(Y_prime);
        ExceptionCounts out{0, 0};
        for_each_vertex(X, [&](int x) {
            double deg = g.degree_into(x, Y_prime);
            if (deg > (d + eps) * size + slack)
                ++out.high;
            if (deg < (d - eps) * size - slack)
                ++out.low;
        });
        return out;
    }

    auto slice_params(double eps, double alpha) -> double
    {
        require(eps >= 0, "eps must be non-negative");
        require(alpha > 0 && alpha <= 1, "alpha must lie in (0, 1]");
        return std::max(eps / alpha, 2 * eps);
    }

    PairSystem::PairSystem(std::vector<Mask> classes, const SimpleGraph & host) :
        _classes(std::move(classes)),
        _graph(host.size())
    {
        require(_classes.size() >= 2, "a pair system needs t >= 2 classes");
        Mask seen = 0;
        for (Mask c : _classes) {
            require(c != 0, "pair system classes must be non-empty");
            require((c & seen) == 0, "pair system classes must be disjoint");
            require((c & ~host.all()) == 0, "pair system class outside the host graph");
            seen |= c;
        }
        for (int i = 0; i < t(); ++i) {
            Mask a = cls(i), b = cls(i + 1);
            for_each_vertex(a, [&](int u) { for_each_vertex(host.neighbours(u) & b, [&](int v) { _graph.add_edge(u, v); }); });
        }
    }

    auto PairSystem::cls(long i) const -> Mask
    {
        long t_ = t();
        return _classes[static_cast<std::size_t>(((i % t_) + t_) % t_)];
    }

    auto PairSystem::min_class_size() const -> int
    {
        int m = max_vertices;
        for (Mask c : _classes)
            m = std::min(m, popcount(c));
        return m;
    }

    namespace
    {
        auto layout(int t, const std::vector<int> & sizes) -> std::pair<std::vector<Mask>, int>
        {
            require(t >= 2, "a pair system needs t >= 2");
            require(int(sizes.size()) == t, "one class size per class");
            std::vector<Mask> classes;
            int next = 0;
            for (int s : sizes) {
                require(s >= 1, "class sizes must be positive");
                require(next + s <= max_vertices, "pair system exceeds the vertex cap");
                classes.push_back(low_bits(s) << next);
                next += s;
            }
            return {classes, next};
        }

        template <typename Keep_>
        auto build(int t, const std::vector<int> & sizes, Keep_ && keep) -> PairSystem
        {
            auto [classes, n] = layout(t, sizes);
            SimpleGraph host(n);
            int pairs = t == 2 ? 1 : t;
            for (int i = 0; i < pairs; ++i) {
                auto a = vertices_of(classes[static_cast<std::size_t>(i)]), b = vertices_of(classes[static_cast<std::size_t>((i + 1) % t)]);
                for (std::size_t p = 0; p < a.size(); ++p)
                    for (std::size_t q = 0; q < b.size(); ++q)
                        if (keep(p, q))
                            host.add_edge(a[p], b[q]);
            }
            return PairSystem(classes, host);
        }
    }

    auto PairSystem::complete(int t, const std::vector<int> & sizes) -> PairSystem
    {
        return build(t, sizes, [](std::size_t, std::size_t) { return true; });
    }

    auto PairSystem::complete_minus_matching(int t, const std::vector<int> & sizes) -> PairSystem
    {
        return build(t, sizes, [](std::size_t p, std::size_t q) { return p != q; });
    }

    auto PairSystem::quasirandom(int t, const std::vector<int> & sizes, double d, std::mt19937_64 & rng) -> PairSystem
    {
        require(d >= 0 && d <= 1, "density must lie in [0, 1]");
        std::bernoulli_distribution coin(d);
        return build(t, sizes, [&](std::size_t, std::size_t) { return coin(rng); });
    }

    namespace
    {
        /// Calls last(v, candidates) for each transversal path w_0..w_{l-1}
        /// ending at v, where candidates are the admissible w_l.
        template <typename Last_>
        auto walk_transversal(const PairSystem & sys, int w0, int l, std::uint64_t budget, Last_ && last) -> void
        {
            require(w0 >= 0 && w0 < sys.graph().size() && contains(sys.cls(0), w0), "w0 must lie in V_0");
            require(l >= 1, "path length must be at least 1");
            std::uint64_t nodes = 0;
            const auto & g = sys.graph();
            auto dfs = [&](auto & self, int v, int depth, Mask used) -> void {
                if (++nodes > budget)
                    throw BudgetExhausted("transversal path count exceeded " + std::to_string(budget) + " nodes");
                Mask cand = g.neighbours(v) & sys.cls(depth + 1) & ~used;
                if (depth + 1 == l) {
                    last(v, cand);
                    return;
                }
                for_each_vertex(cand, [&](int u) { self(self, u, depth + 1, used | bit(u)); });
            };
            dfs(dfs, w0, 0, bit(w0));
        }
    }

    auto count_transversal_paths(const PairSystem & sys, int w0, int l, std::uint64_t budget) -> Count
    {
        Count total = 0;
        walk_transversal(sys, w0, l, budget, [&](int, Mask cand) { total += Count(popcount(cand)); });
        return total;
    }

    auto transversal_path_endpoints(const PairSystem & sys, int w0, int l, bool closed, std::uint64_t budget) -> std::vector<Count>
    {
        std::vector<Count> ends(static_cast<std::size_t>(sys.graph().size()), 0);
        bool close = closed && l >= 3 && contains(sys.cls(l), w0);
        walk_transversal(sys, w0, l, budget, [&](int v, Mask cand) {
            for_each_vertex(cand, [&](int u) { ++ends[static_cast<std::size_t>(u)]; });
            if (close && sys.graph().adjacent(v, w0))
                ++ends[static_cast<std::size_t>(w0)];
        });
        return ends;
    }

    auto count_transversal_paths_between(const PairSystem & sys, int w0, int w0_prime, int l, std::uint64_t budget) -> Count
    {
        require(l % sys.t() == 0, "t must divide the path length");
        require(w0_prime >= 0 && w0_prime < sys.graph().size() && contains(sys.cls(0), w0_prime), "w0' must lie in V_0");
        return transversal_path_endpoints(sys, w0, l, true, budget)[static_cast<std::size_t>(w0_prime)];
    }

    auto RegimeParams::paper(double eps, int t, int M) -> RegimeParams
    {
        require(eps > 0 && eps < 1, "eps must lie in (0, 1)");
        double alpha = 20 * std::sqrt(eps);
        return {eps, 12 * std::sqrt(eps), alpha, 300 * std::sqrt(alpha), t, M, true};
    }

    auto RegimeParams::explorer(double eps, double d, double alpha, double lambda, int t, int M) -> RegimeParams
    {
        require(eps >= 0 && eps < 1, "eps must lie in [0, 1)");
        return {eps, d, alpha, lambda, t, M, false};
    }

    auto countpath2_part1_bound(const RegimeParams & p, long n, int l) -> BoundEvaluation
    {
        BoundEvaluation out{0.0, {}};
        common_hypotheses(p, out.unmet);
        double se = sqrt_up(p.eps);
        if (p.t < 2)
            out.unmet.push_back("t >= 2");
        if (! (p.eps > 0 && double(n) >= 1.0 / (p.eps * p.eps)))
            out.unmet.push_back("n >= eps^-2");
        if (! (p.d >= 5 * std::sqrt(p.eps)))
            out.unmet.push_back("d >= 5 sqrt(eps)");
        if (! (l >= 2 && double(l) <= p.t * (1 - std::sqrt(p.eps)) * double(n)))
            out.unmet.push_back("2 <= l <= t(1 - sqrt(eps))n");

        double base = sub_down(sub_down(p.d, p.eps), se);
        out.value = mul_down(pow_down(base, l), falling_product(n, l, p.t));
        return out;
    }

    auto countpath2_part2_bound(const RegimeParams & p, long n, int l) -> BoundEvaluation
    {
        BoundEvaluation out{0.0, {}};
        common_hypotheses(p, out.unmet);
        double se = sqrt_up(p.eps);
        if (p.t < 2)
            out.unmet.push_back("t >= 2");
        if (! (p.eps > 0 && double(n) >= 1.0 / (p.eps * p.eps)))
            out.unmet.push_back("n >= eps^-2");
        if (! (p.d >= 5 * std::sqrt(p.eps)))
            out.unmet.push_back("d >= 5 sqrt(eps)");
        if (! (l >= 4 && double(l) <= p.t * (1 - 3 * std::sqrt(p.eps)) * double(n)))
            out.unmet.push_back("4 <= l <= t(1 - 3 sqrt(eps))n");
        if (p.t < 1 || l % p.t != 0)
            out.unmet.push_back("t divides l");
        if (l < 2)
            return out;

        double v = pow_down(sub_down(p.d, 5 * se), l - 1);
        v = mul_down(v, pow_down(sub_down(1.0, 2 * se), l - 2));
        v = mul_down(v, mul_down(p.eps, double(n)));
        out.value = mul_down(v, falling_product(n, l - 2, p.t));
        return out;
    }

    auto countcycle1_bound(const RegimeParams & p, long n, int cycle_len) -> BoundEvaluation
    {
        BoundEvaluation out{0.0, {}};
        common_hypotheses(p, out.unmet);
        double se = sqrt_up(p.eps);
        if (! (p.t >= 3 && p.t % 2 == 1))
            out.unmet.push_back("t odd >= 3");
        if (! (p.eps > 0 && double(n) >= p.t / (p.eps * p.eps)))
            out.unmet.push_back("n >= t eps^-2");
        if (! (p.d >= 10 * std::sqrt(p.eps)))
            out.unmet.push_back("d >= 10 sqrt(eps)");
        if (cycle_len % 2 == 0)
            out.unmet.push_back("p odd");
        if (! (cycle_len >= 2 * p.t + 6 && double(cycle_len) <= p.t * (1 - 5 * std::sqrt(p.eps)) * double(n)))
            out.unmet.push_back("2t + 6 <= p <= t(1 - 5 sqrt(eps))n");
        if (cycle_len < 3)
            return out;

        double v = mul_down(mul_down(p.eps, p.eps), 0.25);
        v = mul_down(v, pow_down(double(n), 4));
        v = mul_down(v, pow_down(sub_down(p.d, 10 * se), cycle_len - 2));
        v = mul_down(v, pow_down(sub_down(1.0, 3 * se), 2L * cycle_len));
        out.value = mul_down(v, falling_product(n, cycle_len - 4, std::max(p.t, 1)));
        return out;
    }
}
