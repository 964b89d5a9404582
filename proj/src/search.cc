#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/search.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace ramsey
{
    auto SearchStats::operator+= (const SearchStats & o) -> SearchStats &
    {
        nodes += o.nodes;
        leaves += o.leaves;
        bound_prunes += o.bound_prunes;
        symmetry_prunes += o.symmetry_prunes;
        tasks += o.tasks;
        tasks_completed += o.tasks_completed;
        tasks_from_checkpoint += o.tasks_from_checkpoint;
        permutations = std::max(permutations, o.permutations);
        elapsed_seconds += o.elapsed_seconds;
        return *this;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Value = std::uint64_t;

        constexpr Value infinite = std::numeric_limits<Value>::max();
        constexpr std::size_t min_tasks = 256;
        constexpr std::uint64_t node_flush = 4096;

        struct Limits
        {
            std::uint64_t max_nodes;
            std::optional<Clock::time_point> deadline;
        };

        auto to_value(Count c) -> Value
        {
            if (c > Count(infinite - 1))
                throw Error("monochromatic count exceeds 64 bits");
            return Value(c);
        }

        // Each permutation is stored as its action on pair indices.
        auto symmetry_maps(int n, int level) -> std::vector<std::vector<std::uint16_t>>
        {
            std::vector<std::vector<int>> perms;
            std::vector<int> id(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                id[std::size_t(v)] = v;
            if (level >= 1)
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        auto p = id;
                        std::swap(p[std::size_t(i)], p[std::size_t(j)]);
                        perms.push_back(p);
                    }
            if (level >= 2)
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        for (int k = j + 1; k < n; ++k) {
                            auto p = id, q = id;
                            p[std::size_t(i)] = j, p[std::size_t(j)] = k, p[std::size_t(k)] = i;
                            q[std::size_t(i)] = k, q[std::size_t(k)] = j, q[std::size_t(j)] = i;
                            perms.push_back(p);
                            perms.push_back(q);
                        }

            std::vector<std::vector<std::uint16_t>> maps;
            for (const auto & p : perms) {
                std::vector<std::uint16_t> m;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        int a = p[std::size_t(i)], b = p[std::size_t(j)];
                        m.push_back(std::uint16_t(TwoColoring::pair_index(n, std::min(a, b), std::max(a, b))));
                    }
                maps.push_back(std::move(m));
            }
            return maps;
        }

        struct Task
        {
            std::vector<std::uint8_t> prefix;
            Value total;
        };

        struct Shared
        {
            Shared(const Pattern & h_, int n_, std::vector<Edge> edges_, std::vector<std::vector<std::uint16_t>> maps_, Limits limits_) :
                h(h_), n(n_), edges(std::move(edges_)), maps(std::move(maps_)), limits(limits_)
            {
            }

            const Pattern & h;
            int n;
            std::vector<Edge> edges;
            std::vector<std::vector<std::uint16_t>> maps;
            Limits limits;
            std::uint64_t flush_every = std::clamp<std::uint64_t>(limits.max_nodes / 64, 1, node_flush);

            std::atomic<Value> incumbent{infinite};
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<bool> aborted{false};
            std::atomic<bool> stop{false};
            bool first_leaf_only = false;

            std::mutex mutex;
            Value best_value = infinite;
            std::vector<std::uint8_t> best;
        };

        class Worker
        {
            public:
                explicit Worker(Shared & s) :
                    _s(s),
                    _red(s.n),
                    _blue(s.n),
                    _assign(s.edges.size(), 0)
                {
                }

                auto stats() -> SearchStats &
                {
                    return _stats;
                }

                // Plays the prefix and searches below it. False if cut short.
                auto run(const Task & t) -> bool
                {
                    _red = SimpleGraph(_s.n);
                    _blue = SimpleGraph(_s.n);
                    for (std::size_t p = 0; p < t.prefix.size(); ++p) {
                        _assign[p] = t.prefix[p];
                        graph(t.prefix[p]).add_edge(_s.edges[p].first, _s.edges[p].second);
                    }
                    dfs(t.prefix.size(), t.total);
                    flush();
                    return ! _s.aborted.load() && ! _s.stop.load();
                }

                // Children of a task one level deeper, in search order.
                auto expand(const Task & t) -> std::vector<Task>
                {
                    _red = SimpleGraph(_s.n);
                    _blue = SimpleGraph(_s.n);
                    for (std::size_t p = 0; p < t.prefix.size(); ++p) {
                        _assign[p] = t.prefix[p];
                        graph(t.prefix[p]).add_edge(_s.edges[p].first, _s.edges[p].second);
                    }
                    ++_stats.nodes;
                    std::vector<Task> out;
                    std::size_t idx = t.prefix.size();
                    children(idx, t.total, [&](Value total) {
                        auto prefix = t.prefix;
                        prefix.push_back(_assign[idx]);
                        out.push_back({std::move(prefix), total});
                    });
                    return out;
                }

                auto flush() -> void
                {
                    _s.nodes.fetch_add(_pending);
                    _pending = 0;
                }

            private:
                Shared & _s;
                SimpleGraph _red, _blue;
                std::vector<std::uint8_t> _assign;
                SearchStats _stats;
                std::uint64_t _pending = 0;

                auto graph(std::uint8_t c) -> SimpleGraph &
                {
                    return c ? _blue : _red;
                }

                // False when some stored permutation, possibly followed by a
                // colour swap, maps the decided prefix to something smaller.
                auto canonical(std::size_t idx) const -> bool
                {
                    for (const auto & m : _s.maps)
                        for (std::uint8_t x = 0; x < 2; ++x)
                            for (std::size_t p = 0; p <= idx; ++p) {
                                std::size_t q = m[p];
                                if (q > idx)
                                    break;
                                std::uint8_t mapped = _assign[q] ^ x, mine = _assign[p];
                                if (mapped < mine)
                                    return false;
                                if (mapped > mine)
                                    break;
                            }
                    return true;
                }

                template <typename F_>
                auto children(std::size_t idx, Value total, F_ && visit) -> void
                {
                    auto [u, v] = _s.edges[idx];
                    std::uint8_t last = idx == 0 ? 0 : 1;
                    for (std::uint8_t c = 0; c <= last; ++c) {
                        auto & g = graph(c);
                        g.add_edge(u, v);
                        Value next = total + to_value(count_copies_through_edge(g, _s.h, u, v));
                        _assign[idx] = c;
                        if (next >= _s.incumbent.load(std::memory_order_relaxed))
                            ++_stats.bound_prunes;
                        else if (! canonical(idx))
                            ++_stats.symmetry_prunes;
                        else
                            visit(next);
                        g.remove_edge(u, v);
                    }
                }

                auto leaf(Value total) -> void
                {
                    ++_stats.leaves;
                    Value cur = _s.incumbent.load();
                    if (_s.first_leaf_only) {
                        std::lock_guard lock(_s.mutex);
                        _s.best_value = total;
                        _s.best = _assign;
                        _s.stop = true;
                        return;
                    }
                    while (total < cur)
                        if (_s.incumbent.compare_exchange_weak(cur, total)) {
                            std::lock_guard lock(_s.mutex);
                            if (total < _s.best_value) {
                                _s.best_value = total;
                                _s.best = _assign;
                            }
                            break;
                        }
                }

                auto over_budget() -> bool
                {
                    if (++_pending < _s.flush_every)
                        return _s.aborted.load(std::memory_order_relaxed);
                    auto seen = _s.nodes.fetch_add(_pending) + _pending;
                    _pending = 0;
                    if (seen >= _s.limits.max_nodes || (_s.limits.deadline && Clock::now() >= *_s.limits.deadline))
                        _s.aborted = true;
                    return _s.aborted.load();
                }

                auto dfs(std::size_t idx, Value total) -> void
                {
                    ++_stats.nodes;
                    if (over_budget() || _s.stop.load(std::memory_order_relaxed))
                        return;
                    if (idx == _s.edges.size()) {
                        leaf(total);
                        return;
                    }
                    children(idx, total, [&](Value next) { dfs(idx + 1, next); });
                }
        };

        auto two_clique_split(int n, int a) -> TwoColoring
        {
            TwoColoring c(n);
            for (int i = 0; i < a; ++i)
                for (int j = a; j < n; ++j)
                    c.set(i, j, Color::Red);
            return c;
        }

        auto to_coloring(int n, const std::vector<Edge> & edges, const std::vector<std::uint8_t> & assign) -> TwoColoring
        {
            TwoColoring c(n);
            for (std::size_t p = 0; p < edges.size(); ++p)
                if (assign[p] == 0)
                    c.set(edges[p].first, edges[p].second, Color::Red);
            return c;
        }

        struct Checkpoint
        {
            std::string key;
            std::vector<std::uint64_t> completed;
            std::optional<TwoColoring> witness;
        };

        auto load_checkpoint(const std::string & path, const std::string & key) -> std::optional<Checkpoint>
        {
            std::ifstream in(path);
            if (! in)
                return std::nullopt;
            try {
                auto j = nlohmann::json::parse(in);
                if (j.at("key").get<std::string>() != key)
                    return std::nullopt;
                Checkpoint c{key, j.at("completed").get<std::vector<std::uint64_t>>(), std::nullopt};
                if (j.contains("witness"))
                    c.witness = decode_kcol(j.at("witness").get<std::string>());
                return c;
            }
            catch (const std::exception &) {
                return std::nullopt;
            }
        }

        auto save_checkpoint(const std::string & path, const Checkpoint & c) -> void
        {
            nlohmann::json j;
            j["key"] = c.key;
            j["completed"] = c.completed;
            if (c.witness)
                j["witness"] = encode_kcol(*c.witness);
            auto tmp = path + ".tmp";
            {
                std::ofstream out(tmp, std::ios::trunc);
                if (! out)
                    throw Error("cannot write checkpoint " + tmp);
                out << j.dump() << '\n';
            }
            std::filesystem::rename(tmp, path);
        }

        struct Outcome
        {
            /// Smallest leaf value found below the cap; empty if none.
            std::optional<Value> value;
            std::optional<TwoColoring> witness;
            bool exact;
            SearchStats stats;
        };

        // Every colouring of K_n whose count is below cap, up to symmetry:
        // returns the minimum and a witness, or nothing when none exists.
        auto branch_and_bound(const Pattern & h, int n, Value cap, const SearchBudget & budget, const Limits & limits) -> Outcome
        {
            auto start = Clock::now();
            Shared s(h, n, {}, symmetry_maps(n, budget.symmetry_level), limits);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    s.edges.emplace_back(i, j);
            s.incumbent = cap;

            SearchStats stats;
            stats.permutations = s.maps.size();

            // Deterministic frontier: pruned only against the starting cap.
            std::vector<Task> tasks{{{}, 0}};
            {
                Worker w(s);
                std::size_t depth = 0;
                while (tasks.size() < min_tasks && depth < s.edges.size() && ! tasks.empty()) {
                    std::vector<Task> next;
                    for (const auto & t : tasks)
                        for (auto & c : w.expand(t))
                            next.push_back(std::move(c));
                    tasks = std::move(next);
                    ++depth;
                }
                stats += w.stats();
            }
            stats.tasks = tasks.size();

            std::vector<char> done(tasks.size(), 0);
            Checkpoint cp;
            bool resumed = false;
            if (! budget.checkpoint_path.empty()) {
                std::ostringstream key;
                key << h.name() << "/n=" << n << "/cap=" << cap << "/sym=" << budget.symmetry_level << "/tasks=" << tasks.size();
                cp.key = key.str();
                if (auto old = load_checkpoint(budget.checkpoint_path, cp.key)) {
                    cp = std::move(*old);
                    for (auto i : cp.completed)
                        if (i < done.size() && ! done[i]) {
                            done[i] = 1;
                            ++stats.tasks_from_checkpoint;
                        }
                    if (cp.witness && cp.witness->size() == n) {
                        Value v = to_value(mono_counts(*cp.witness, h).total());
                        if (v < cap) {
                            s.incumbent = v;
                            s.best_value = v;
                            std::vector<std::uint8_t> a;
                            for (auto [i, j] : s.edges)
                                a.push_back(cp.witness->is_red(i, j) ? 0 : 1);
                            s.best = std::move(a);
                        }
                    }
                    resumed = true;
                }
            }

            int threads = budget.threads > 0 ? budget.threads : int(std::max(1u, std::thread::hardware_concurrency()));
            std::atomic<std::size_t> next_task{0};
            std::mutex cp_mutex;
            auto last_save = Clock::now();
            auto record = [&](std::size_t i, bool force) {
                if (budget.checkpoint_path.empty())
                    return;
                std::lock_guard lock(cp_mutex);
                if (i < tasks.size())
                    cp.completed.push_back(i);
                if (! force && Clock::now() - last_save < std::chrono::seconds(1))
                    return;
                {
                    std::lock_guard l2(s.mutex);
                    if (! s.best.empty())
                        cp.witness = to_coloring(n, s.edges, s.best);
                }
                save_checkpoint(budget.checkpoint_path, cp);
                last_save = Clock::now();
            };

            std::vector<SearchStats> per_thread(static_cast<std::size_t>(threads));
            auto body = [&](int id) {
                Worker w(s);
                for (;;) {
                    std::size_t i = next_task.fetch_add(1);
                    if (i >= tasks.size() || s.aborted.load())
                        break;
                    if (done[i])
                        continue;
                    if (w.run(tasks[i])) {
                        ++w.stats().tasks_completed;
                        record(i, false);
                    }
                }
                w.flush();
                per_thread[std::size_t(id)] = w.stats();
            };
            if (threads == 1)
                body(0);
            else {
                std::vector<std::jthread> pool;
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back(body, t);
            }
            for (const auto & t : per_thread)
                stats += t;
            stats.tasks = tasks.size();
            stats.tasks_completed += stats.tasks_from_checkpoint;
            record(tasks.size(), true);

            Outcome out{std::nullopt, std::nullopt, ! s.aborted.load(), {}};
            if (! s.best.empty()) {
                out.value = s.best_value;
                // Replay in task order so the witness is the first optimal leaf
                // in search order, independent of scheduling.
                if (out.exact && (threads > 1 || resumed)) {
                    Shared again(h, n, s.edges, s.maps, {std::numeric_limits<std::uint64_t>::max(), std::nullopt});
                    again.incumbent = s.best_value + 1;
                    again.first_leaf_only = true;
                    Worker w(again);
                    for (const auto & t : tasks) {
                        w.run(t);
                        if (again.stop)
                            break;
                    }
                    w.flush();
                    if (! again.best.empty())
                        s.best = again.best;
                }
                out.witness = to_coloring(n, s.edges, s.best);
            }
            stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
            out.stats = stats;
            return out;
        }

        auto make_limits(const SearchBudget & budget, Clock::time_point start) -> Limits
        {
            Limits l{budget.max_nodes, std::nullopt};
            if (budget.max_time.count() > 0)
                l.deadline = start + budget.max_time;
            return l;
        }

        auto check_board(int n) -> void
        {
            if (n < 1 || n > max_search_vertices)
                throw PreconditionError("board size " + std::to_string(n) + " outside [1, " + std::to_string(max_search_vertices) + "]");
        }

        auto with_suffix(SearchBudget b, int n) -> SearchBudget
        {
            if (! b.checkpoint_path.empty())
                b.checkpoint_path += ".n" + std::to_string(n);
            return b;
        }

        auto multiplicity_within(const Pattern & h, int n, const SearchBudget & budget, const Limits & limits) -> MultiplicityReport
        {
            check_board(n);
            if (h.vertices() > n)
                return {h, n, 0, true, TwoColoring::all_red(n), {}};

            auto start = Clock::now();
            std::optional<TwoColoring> best;
            Value best_value = infinite;
            for (auto & c : heuristic_colorings(n)) {
                Value v = to_value(mono_counts(c, h).total());
                if (v < best_value) {
                    best_value = v;
                    best = std::move(c);
                }
            }

            MultiplicityReport r{h, n, best_value, true, *best, {}};
            if (best_value > 0) {
                auto o = branch_and_bound(h, n, best_value, budget, limits);
                if (o.value) {
                    r.value = *o.value;
                    r.witness = *o.witness;
                }
                r.exact = o.exact;
                r.stats = o.stats;
            }
            r.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
            return r;
        }
    }

    auto heuristic_colorings(int n) -> std::vector<TwoColoring>
    {
        std::vector<TwoColoring> out;
        out.push_back(TwoColoring::all_red(n));
        for (int a = 1; a <= n / 2; ++a) {
            auto c = two_clique_split(n, a);
            out.push_back(c.swapped());
            out.push_back(std::move(c));
        }
        int half = n / 2;
        for (unsigned dist = 1; dist < (1u << half); ++dist) {
            TwoColoring c(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int d = std::min(j - i, n - (j - i));
                    if ((dist >> (d - 1)) & 1)
                        c.set(i, j, Color::Red);
                }
            out.push_back(std::move(c));
        }
        return out;
    }

    auto multiplicity(const Pattern & h, int n, const SearchBudget & budget) -> MultiplicityReport
    {
        return multiplicity_within(h, n, budget, make_limits(budget, Clock::now()));
    }

    auto ramsey_number(const Pattern & h, int n_max, const SearchBudget & budget) -> RamseyNumberReport
    {
        check_board(n_max);
        auto start = Clock::now();
        auto limits = make_limits(budget, start);
        int first = std::max(1, h.vertices() - 1);
        RamseyNumberReport r{h, n_max, std::nullopt, true, TwoColoring::all_red(std::min(first, n_max)), {}};

        for (int n = h.vertices(); n <= n_max; ++n) {
            std::optional<TwoColoring> zero;
            for (auto & c : heuristic_colorings(n))
                if (mono_counts(c, h).total() == 0) {
                    zero = std::move(c);
                    break;
                }
            if (! zero) {
                Limits left = limits;
                left.max_nodes = limits.max_nodes > r.stats.nodes ? limits.max_nodes - r.stats.nodes : 0;
                auto o = branch_and_bound(h, n, 1, with_suffix(budget, n), left);
                r.stats += o.stats;
                if (o.value)
                    zero = std::move(o.witness);
                else if (! o.exact) {
                    r.exact = false;
                    break;
                }
            }
            if (! zero) {
                r.value = n;
                break;
            }
            r.witness_below = std::move(*zero);
        }
        r.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return r;
    }

    auto threshold_multiplicity(const Pattern & h, int n_max, const SearchBudget & budget) -> ThresholdReport
    {
        auto start = Clock::now();
        ThresholdReport t{ramsey_number(h, n_max, budget), std::nullopt};
        if (t.ramsey.value) {
            auto limits = make_limits(budget, start);
            limits.max_nodes = limits.max_nodes > t.ramsey.stats.nodes ? limits.max_nodes - t.ramsey.stats.nodes : 0;
            t.multiplicity = multiplicity_within(h, *t.ramsey.value, with_suffix(budget, *t.ramsey.value), limits);
        }
        return t;
    }
}
