#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/regular_pairs.hh>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace ramsey
{
    auto to_string(CountingLemma l) -> std::string
    {
        switch (l) {
            case CountingLemma::PathsFromVertex: return "paths-from-vertex";
            case CountingLemma::PathsBetweenVertices: return "paths-between-vertices";
            case CountingLemma::Cycles: return "cycles";
        }
        return "?";
    }

    auto to_string(Family f) -> std::string
    {
        switch (f) {
            case Family::Complete: return "complete";
            case Family::CompleteMinusMatching: return "complete-minus-matching";
            case Family::Quasirandom: return "quasirandom";
        }
        return "?";
    }

    auto to_string(Verdict v) -> std::string
    {
        switch (v) {
            case Verdict::Pass: return "pass";
            case Verdict::Vacuous: return "vacuous";
            case Verdict::Fail: return "FAIL";
        }
        return "?";
    }

    auto generate_instance(Family f, int t, int size, int index, double density, std::uint64_t seed) -> PairSystem
    {
        std::vector<int> sizes(static_cast<std::size_t>(t), size);
        switch (f) {
            case Family::Complete: return PairSystem::complete(t, sizes);
            case Family::CompleteMinusMatching: return PairSystem::complete_minus_matching(t, sizes);
            case Family::Quasirandom: {
                std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(t), std::uint32_t(size), std::uint32_t(index)};
                std::mt19937_64 rng(seq);
                return PairSystem::quasirandom(t, sizes, density, rng);
            }
        }
        throw PreconditionError("unknown family");
    }

    namespace
    {
        // Degree conditions on the start vertices are integer-vs-rational
        // comparisons; the slack only absorbs rounding.
        constexpr double degree_slack = 1e-9;

        auto qualifying(const PairSystem & sys, Mask into, double d, double eps) -> std::vector<int>
        {
            std::vector<int> out;
            double need = (d - eps) * popcount(into) - degree_slack;
            for_each_vertex(sys.cls(0), [&](int w) {
                if (sys.graph().degree_into(w, into) >= need)
                    out.push_back(w);
            });
            return out;
        }

        auto evaluate(const PairSystem & sys, CountingLemma lemma, int length, LemmaRow & row) -> void
        {
            int t = sys.t();
            int pairs = t == 2 ? 1 : t;
            row.eps_hat = 0;
            row.d = 1;
            for (int i = 0; i < pairs; ++i) {
                Mask X = sys.cls(i), Y = sys.cls(i + 1);
                double e = regularity_defect(X, Y, sys.graph()), d = density(X, Y, sys.graph());
                row.pairs.push_back({X, Y, e, d});
                row.eps_hat = std::max(row.eps_hat, e);
                row.d = std::min(row.d, d);
            }
            row.n = sys.min_class_size();
            row.length = length;
            double alpha = 20 * std::sqrt(row.eps_hat);
            auto p = RegimeParams::explorer(row.eps_hat, row.d, alpha, 300 * std::sqrt(alpha), t, t);

            BoundEvaluation bound{0, {}};
            switch (lemma) {
                case CountingLemma::PathsFromVertex: {
                    bound = countpath2_part1_bound(p, row.n, length);
                    for (int w : qualifying(sys, sys.cls(1), row.d, row.eps_hat)) {
                        Count c = count_transversal_paths(sys, w, length);
                        row.exact = row.exact ? std::min(*row.exact, c) : c;
                    }
                    break;
                }
                case CountingLemma::PathsBetweenVertices: {
                    bound = countpath2_part2_bound(p, row.n, length);
                    auto starts = qualifying(sys, sys.cls(1), row.d, row.eps_hat);
                    auto ends = qualifying(sys, sys.cls(t - 1), row.d, row.eps_hat);
                    for (int w : starts) {
                        auto counts = transversal_path_endpoints(sys, w, length, true);
                        for (int w_prime : ends) {
                            Count c = counts[static_cast<std::size_t>(w_prime)];
                            row.exact = row.exact ? std::min(*row.exact, c) : c;
                        }
                    }
                    break;
                }
                case CountingLemma::Cycles: {
                    bound = countcycle1_bound(p, row.n, length);
                    row.exact = count_cycles(sys.graph(), length);
                    break;
                }
            }
            row.bound = bound.value;
            row.unmet = bound.unmet;

            if (! row.exact)
                row.verdict = Verdict::Vacuous;
            else {
                bool holds = static_cast<long double>(*row.exact) >= static_cast<long double>(row.bound);
                if (bound.hypotheses_met())
                    row.verdict = holds ? Verdict::Pass : Verdict::Fail;
                else if (row.bound <= 0 || ! holds)
                    row.verdict = Verdict::Vacuous;
                else
                    row.verdict = Verdict::Pass;
            }
        }
    }

    auto verify_counting_lemma(const GeneratorSpec & spec, CountingLemma lemma, std::uint64_t seed) -> CountingLemmaReport
    {
        if (spec.min_size < 1 || spec.max_size < spec.min_size || spec.instances < 1)
            throw PreconditionError("generator spec needs 1 <= min_size <= max_size and instances >= 1");

        CountingLemmaReport report{lemma, seed, {}};
        struct Job
        {
            Family family;
            int t, size, index, length;
        };
        std::vector<Job> jobs;
        for (int t : spec.ts) {
            if (t < 2)
                throw PreconditionError("ring length t must be at least 2");
            if (lemma == CountingLemma::Cycles && t % 2 == 0)
                continue;
            int length = lemma == CountingLemma::PathsFromVertex ? spec.part1_length : lemma == CountingLemma::PathsBetweenVertices ? 2 * t : spec.cycle_length;
            for (Family f : spec.families)
                for (int size = spec.min_size; size <= spec.max_size; ++size)
                    for (int i = 0; i < spec.instances; ++i)
                        jobs.push_back({f, t, size, i, length});
        }

        report.rows.resize(jobs.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        auto work = [&] {
            for (std::size_t j; ! failed && (j = next++) < jobs.size();) {
                try {
                    const auto & job = jobs[j];
                    auto & row = report.rows[j];
                    row.family = job.family;
                    row.t = job.t;
                    row.size = job.size;
                    row.instance = job.index;
                    evaluate(generate_instance(job.family, job.t, job.size, job.index, spec.quasirandom_density, seed), lemma, job.length, row);
                }
                catch (...) {
                    if (! failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        };
        unsigned threads = spec.threads > 0 ? unsigned(spec.threads) : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < threads; ++i)
            pool.emplace_back(work);
        work();
        for (auto & th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);

        for (const auto & row : report.rows)
            switch (row.verdict) {
                case Verdict::Pass: ++report.passes; break;
                case Verdict::Vacuous: ++report.vacuous; break;
                case Verdict::Fail: ++report.failures; break;
            }
        return report;
    }
}
