#include <ramsey/counting.hh>
#include <ramsey/errors.hh>
#include <ramsey/extremal.hh>
#include <ramsey/ramsey.h>
#include <ramsey/regular_pairs.hh>
#include <ramsey/search.hh>
#include <ramsey/stability.hh>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

struct ramsey_coloring
{
    ramsey::TwoColoring c;
};

namespace
{
    using json = nlohmann::ordered_json;
    using namespace ramsey;

    thread_local std::string last_error;

    class InvalidArgument : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto fail(ramsey_status s, const std::string & what) -> ramsey_status
    {
        last_error = what;
        return s;
    }

    template <typename F_>
    auto guard(F_ && f) -> ramsey_status
    {
        try {
            last_error.clear();
            return f();
        }
        catch (const ParseError & e) {
            return fail(RAMSEY_PARSE, e.what());
        }
        catch (const BudgetExhausted & e) {
            return fail(RAMSEY_BUDGET, e.what());
        }
        catch (const PreconditionError & e) {
            return fail(RAMSEY_PRECONDITION, e.what());
        }
        catch (const TwoMatchingFound & e) {
            return fail(RAMSEY_PRECONDITION, e.what());
        }
        catch (const InvalidArgument & e) {
            return fail(RAMSEY_INVALID_ARGUMENT, e.what());
        }
        catch (const json::exception & e) {
            return fail(RAMSEY_INVALID_ARGUMENT, std::string("request: ") + e.what());
        }
        catch (const std::exception & e) {
            return fail(RAMSEY_INTERNAL, e.what());
        }
        catch (...) {
            return fail(RAMSEY_INTERNAL, "unknown failure");
        }
    }

    auto require_arg(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw InvalidArgument(what);
    }

    auto give(const std::string & s, char ** out) -> void
    {
        char * p = static_cast<char *>(std::malloc(s.size() + 1));
        if (! p)
            throw std::bad_alloc();
        std::memcpy(p, s.c_str(), s.size() + 1);
        *out = p;
    }

    auto give(const json & j, char ** out) -> void { give(j.dump(), out); }

    auto request_of(const char * text) -> json
    {
        require_arg(text != nullptr, "request is null");
        auto j = json::parse(text);
        require_arg(j.is_object(), "request must be a JSON object");
        return j;
    }

    auto count_json(Count c) -> json
    {
        if (c <= Count(std::numeric_limits<std::uint64_t>::max()))
            return std::uint64_t(c);
        return to_string(c);
    }

    auto list_of(Mask m) -> json { return vertices_of(m); }

    auto mask_from(const json & j, int n, const char * name) -> Mask
    {
        require_arg(j.is_array(), std::string(name) + " must be a vertex list");
        Mask m = 0;
        for (const auto & v : j) {
            int x = v.get<int>();
            require_arg(x >= 0 && x < n, std::string(name) + " names vertex " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
            m |= bit(x);
        }
        return m;
    }

    auto color_from(const std::string & s) -> Color
    {
        if (s == "red")
            return Color::Red;
        if (s == "blue")
            return Color::Blue;
        throw InvalidArgument("color must be red or blue, not " + s);
    }

    auto budget_from(const json & req) -> SearchBudget
    {
        SearchBudget b;
        if (! req.contains("budget"))
            return b;
        const auto & j = req.at("budget");
        b.max_nodes = j.value("max_nodes", b.max_nodes);
        b.max_time = std::chrono::milliseconds(j.value("max_time_ms", std::int64_t{0}));
        b.threads = j.value("threads", b.threads);
        b.symmetry_level = j.value("symmetry_level", b.symmetry_level);
        b.checkpoint_path = j.value("checkpoint", std::string{});
        require_arg(b.threads >= 0, "threads must be non-negative");
        require_arg(b.symmetry_level >= 0 && b.symmetry_level <= 2, "symmetry_level must be 0, 1 or 2");
        return b;
    }

    auto stats_json(const SearchStats & s) -> json
    {
        return {{"nodes", s.nodes}, {"leaves", s.leaves}, {"bound_prunes", s.bound_prunes}, {"symmetry_prunes", s.symmetry_prunes},
            {"tasks", s.tasks}, {"tasks_completed", s.tasks_completed}, {"tasks_from_checkpoint", s.tasks_from_checkpoint},
            {"permutations", s.permutations}, {"elapsed_seconds", s.elapsed_seconds}};
    }

    auto multiplicity_json(const MultiplicityReport & r) -> json
    {
        return {{"pattern", r.pattern.name()}, {"n", r.n}, {"value", count_json(r.value)}, {"exact", r.exact}, {"witness", encode_kcol(r.witness)},
            {"stats", stats_json(r.stats)}};
    }

    auto ramsey_json(const RamseyNumberReport & r) -> json
    {
        return {{"pattern", r.pattern.name()}, {"n_max", r.n_max}, {"value", r.value ? json(*r.value) : json(nullptr)}, {"exact", r.exact},
            {"witness_below", encode_kcol(r.witness_below)}, {"stats", stats_json(r.stats)}};
    }

    auto handle(const ramsey_coloring * c) -> const TwoColoring &
    {
        require_arg(c != nullptr, "colouring handle is null");
        return c->c;
    }

    auto make_handle(TwoColoring c, ramsey_coloring ** out) -> ramsey_status
    {
        require_arg(out != nullptr, "output pointer is null");
        *out = new ramsey_coloring{std::move(c)};
        return RAMSEY_OK;
    }

    auto path_of(const json & j, const char * name) -> std::vector<int>
    {
        require_arg(j.contains(name), std::string("missing ") + name);
        return j.at(name).get<std::vector<int>>();
    }

    auto lemma_from(const std::string & s) -> CountingLemma
    {
        if (s == "countpath2-p1")
            return CountingLemma::PathsFromVertex;
        if (s == "countpath2-p2")
            return CountingLemma::PathsBetweenVertices;
        if (s == "countcycle1")
            return CountingLemma::Cycles;
        throw InvalidArgument("lemma must be countpath2-p1, countpath2-p2 or countcycle1, not " + s);
    }

    auto parts_from(const json & j, int n, std::uint64_t seed, bool have_seed) -> std::vector<Mask>
    {
        if (j.is_string()) {
            auto s = j.get<std::string>();
            const std::string prefix = "auto-random:M=";
            require_arg(s.rfind(prefix, 0) == 0, "parts must be auto-random:M=<m> or a list of vertex lists");
            require_arg(have_seed, "auto-random parts need a seed");
            int M = 0;
            try {
                std::size_t used = 0;
                M = std::stoi(s.substr(prefix.size()), &used);
                require_arg(used == s.size() - prefix.size(), "bad part count in " + s);
            }
            catch (const std::logic_error &) {
                throw InvalidArgument("bad part count in " + s);
            }
            return random_equitable_parts(n, M, seed);
        }
        require_arg(j.is_array(), "parts must be auto-random:M=<m> or a list of vertex lists");
        std::vector<Mask> parts;
        for (const auto & p : j)
            parts.push_back(mask_from(p, n, "part"));
        return parts;
    }

    auto regularity_name(Regularity r) -> std::string { return to_string(r); }
}

extern "C" {

const char * ramsey_version(void)
{
    return "1.0.0";
}

const char * ramsey_last_error(void)
{
    return last_error.c_str();
}

const char * ramsey_status_name(ramsey_status status)
{
    switch (status) {
        case RAMSEY_OK: return "ok";
        case RAMSEY_INVALID_ARGUMENT: return "invalid-argument";
        case RAMSEY_PARSE: return "parse";
        case RAMSEY_PRECONDITION: return "precondition";
        case RAMSEY_BUDGET: return "budget";
        case RAMSEY_INTERNAL: return "internal";
    }
    return "unknown";
}

void ramsey_string_free(char * s)
{
    std::free(s);
}

ramsey_status ramsey_coloring_new(int n, ramsey_coloring ** out)
{
    return guard([&] {
        require_arg(n >= 0 && n <= max_vertices, "n must lie in 0.." + std::to_string(max_vertices));
        return make_handle(TwoColoring(n), out);
    });
}

ramsey_status ramsey_coloring_chi(int a, int b, ramsey_coloring ** out)
{
    return guard([&] { return make_handle(chi(a, b), out); });
}

ramsey_status ramsey_coloring_decode(const char * text, long * error_offset, ramsey_coloring ** out)
{
    return guard([&] {
        require_arg(text != nullptr, "kcol text is null");
        try {
            return make_handle(decode_kcol(text), out);
        }
        catch (const ParseError & e) {
            if (error_offset)
                *error_offset = long(e.offset());
            throw;
        }
    });
}

ramsey_status ramsey_coloring_encode(const ramsey_coloring * c, char ** kcol)
{
    return guard([&] {
        give(encode_kcol(handle(c)), kcol);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_coloring_clone(const ramsey_coloring * c, ramsey_coloring ** out)
{
    return guard([&] { return make_handle(handle(c), out); });
}

void ramsey_coloring_free(ramsey_coloring * c)
{
    delete c;
}

int ramsey_coloring_size(const ramsey_coloring * c)
{
    return c ? c->c.size() : -1;
}

ramsey_status ramsey_coloring_is_red(const ramsey_coloring * c, int i, int j, int * red)
{
    return guard([&] {
        const auto & col = handle(c);
        require_arg(red != nullptr, "output pointer is null");
        require_arg(i >= 0 && j >= 0 && i < col.size() && j < col.size() && i != j, "vertex pair out of range");
        *red = col.is_red(std::min(i, j), std::max(i, j)) ? 1 : 0;
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_coloring_set(ramsey_coloring * c, int i, int j, int red)
{
    return guard([&] {
        require_arg(c != nullptr, "colouring handle is null");
        require_arg(i >= 0 && j >= 0 && i < c->c.size() && j < c->c.size() && i != j, "vertex pair out of range");
        c->c.set(std::min(i, j), std::max(i, j), red ? Color::Red : Color::Blue);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_coloring_to_json(const ramsey_coloring * c, char ** out)
{
    return guard([&] {
        const auto & col = handle(c);
        json edges = json::array();
        for (auto [u, v] : col.red_graph().edges())
            edges.push_back({u, v});
        give(json{{"n", col.size()}, {"red_edges", edges}}, out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_coloring_from_json(const char * text, ramsey_coloring ** out)
{
    return guard([&] {
        auto j = request_of(text);
        int n = j.at("n").get<int>();
        require_arg(n >= 0 && n <= max_vertices, "n must lie in 0.." + std::to_string(max_vertices));
        TwoColoring c(n);
        for (const auto & e : j.value("red_edges", json::array())) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            require_arg(u >= 0 && v >= 0 && u < n && v < n && u != v, "red edge " + e.dump() + " out of range");
            c.set(std::min(u, v), std::max(u, v), Color::Red);
        }
        return make_handle(std::move(c), out);
    });
}

ramsey_status ramsey_count(const ramsey_coloring * c, const char * pattern, char ** out)
{
    return guard([&] {
        require_arg(pattern != nullptr, "pattern is null");
        auto h = Pattern::parse(pattern);
        auto m = mono_counts(handle(c), h);
        give(json{{"pattern", h.name()}, {"n", handle(c).size()}, {"red", count_json(m.red)}, {"blue", count_json(m.blue)}, {"total", count_json(m.total())}}, out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_multiplicity(const char * request, char ** out)
{
    return guard([&] {
        auto req = request_of(request);
        auto r = multiplicity(Pattern::parse(req.at("pattern").get<std::string>()), req.at("n").get<int>(), budget_from(req));
        give(multiplicity_json(r), out);
        return r.exact ? RAMSEY_OK : fail(RAMSEY_BUDGET, "search budget exhausted; value is an upper bound");
    });
}

ramsey_status ramsey_number(const char * request, char ** out)
{
    return guard([&] {
        auto req = request_of(request);
        auto r = ramsey::ramsey_number(Pattern::parse(req.at("pattern").get<std::string>()), req.at("n_max").get<int>(), budget_from(req));
        give(ramsey_json(r), out);
        return r.exact ? RAMSEY_OK : fail(RAMSEY_BUDGET, "search budget exhausted before the Ramsey number was settled");
    });
}

ramsey_status ramsey_threshold(const char * request, char ** out)
{
    return guard([&] {
        auto req = request_of(request);
        auto r = threshold_multiplicity(Pattern::parse(req.at("pattern").get<std::string>()), req.at("n_max").get<int>(), budget_from(req));
        json j{{"pattern", r.ramsey.pattern.name()}, {"r", r.ramsey.value ? json(*r.ramsey.value) : json(nullptr)},
            {"m", r.multiplicity ? count_json(r.multiplicity->value) : json(nullptr)}, {"exact", r.exact()}, {"ramsey", ramsey_json(r.ramsey)},
            {"multiplicity", r.multiplicity ? multiplicity_json(*r.multiplicity) : json(nullptr)}};
        give(j, out);
        if (r.exact())
            return RAMSEY_OK;
        if (r.ramsey.exact && ! r.ramsey.value)
            return fail(RAMSEY_PRECONDITION, "r(H) exceeds n_max; raise --n-max");
        return fail(RAMSEY_BUDGET, "search budget exhausted before the threshold multiplicity was settled");
    });
}

ramsey_status ramsey_extremal(const ramsey_coloring * c, const char * request, char ** out)
{
    return guard([&] {
        const auto & col = handle(c);
        auto req = request_of(request);
        auto mode_name = req.value("mode", std::string("exact"));
        require_arg(mode_name == "exact" || mode_name == "local", "mode must be exact or local");
        json j;
        if (req.contains("A")) {
            Mask A = mask_from(req.at("A"), col.size(), "A"), B = low_bits(col.size()) & ~A;
            std::optional<Color> within;
            if (req.contains("within"))
                within = color_from(req.at("within").get<std::string>());
            double lr = within && *within == Color::Blue ? 2.0 : extremal_lambda(col, A, B, Color::Red);
            double lb = within && *within == Color::Red ? 2.0 : extremal_lambda(col, A, B, Color::Blue);
            Color w = lr <= lb ? Color::Red : Color::Blue;
            j = {{"mode", "given"}, {"A", list_of(A)}, {"B", list_of(B)}, {"lambda_star", std::min(lr, lb)}, {"within", to_string(w)}};
        }
        else {
            auto mode = mode_name == "exact" ? ExtremalMode::Exact : ExtremalMode::LocalSearch;
            require_arg(mode == ExtremalMode::Exact || req.contains("seed"), "local search needs a seed");
            auto a = extremal_parameter(col, mode, req.value("seed", std::uint64_t{1}));
            j = {{"mode", mode_name}, {"A", list_of(a.A)}, {"B", list_of(a.B)}, {"lambda_star", a.lambda_star}, {"within", to_string(a.within)},
                {"exact", mode == ExtremalMode::Exact}};
        }
        give(j, out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_case2(const ramsey_coloring * c, const char * request, char ** out)
{
    return guard([&] {
        const auto & col = handle(c);
        auto req = request_of(request);
        Mask A = mask_from(req.at("A"), col.size(), "A"), B = low_bits(col.size()) & ~A;
        auto cert = case2_lower_bound(col, req.at("k").get<int>(), A, B, req.at("lambda").get<double>());
        json witness = json::object();
        for (const auto & [name, vs] : cert.witness)
            witness[name] = vs;
        json j{{"k", req.at("k")}, {"lambda", req.at("lambda")}, {"bound", count_json(cert.bound)}, {"claim_used", cert.claim_used},
            {"cycle_color", to_string(cert.cycle_color)}, {"colors_swapped", cert.colors_swapped},
            {"cleanup",
                {{"A_prime", list_of(cert.cleanup.A_prime)}, {"B_prime", list_of(cert.cleanup.B_prime)}, {"X", list_of(cert.cleanup.X)},
                    {"Y", list_of(cert.cleanup.Y)}, {"lambda", cert.cleanup.lambda}}},
            {"witness", witness}, {"s", cert.s ? json(*cert.s) : json(nullptr)}, {"trail", cert.trail}};
        give(j, out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_verify_claim(const ramsey_coloring * c, const char * request, char ** out)
{
    return guard([&] {
        const auto & col = handle(c);
        auto req = request_of(request);
        int n = col.size();
        auto claim = req.at("claim").get<std::string>();
        auto f = col.graph(color_from(req.value("color", std::string("red"))));
        Mask S = mask_from(req.at("S"), n, "S"), T = mask_from(req.at("T"), n, "T");
        int l = req.at("l").get<int>();
        ClaimCheck check;
        if (claim == "common-neighbor")
            check = verify_claim_common_neighbor(f, S, T, l);
        else if (claim == "bridged-cliques")
            check = verify_claim_bridged_cliques(f, S, T, path_of(req, "P1"), path_of(req, "P2"), l);
        else if (claim == "alternating")
            check = verify_claim_alternating(f, S, T, req.at("w").get<int>(), path_of(req, "P"), l);
        else
            throw InvalidArgument("claim must be common-neighbor, bridged-cliques or alternating, not " + claim);
        give(json{{"claim", claim}, {"l", l}, {"bound", check.bound}, {"threshold", count_json(check.threshold)}, {"exact", count_json(check.exact_count)},
                 {"pass", check.pass}, {"s", check.s ? json(*check.s) : json(nullptr)}},
            out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_verify_lemma(const char * request, char ** out)
{
    return guard([&] {
        auto req = request_of(request);
        auto lemma = lemma_from(req.at("lemma").get<std::string>());
        require_arg(req.contains("seed"), "verify-lemma needs a seed");
        auto seed = req.at("seed").get<std::uint64_t>();
        GeneratorSpec spec;
        auto grid = req.value("grid", std::string("default"));
        if (grid == "small") {
            spec.max_size = 6;
            spec.instances = 10;
        }
        else
            require_arg(grid == "default", "grid must be default or small");
        spec.instances = req.value("instances", spec.instances);
        spec.threads = req.value("threads", spec.threads);
        require_arg(spec.instances >= 1, "instances must be positive");

        auto report = verify_counting_lemma(spec, lemma, seed);
        json rows = json::array();
        for (const auto & r : report.rows)
            rows.push_back({{"family", to_string(r.family)}, {"t", r.t}, {"size", r.size}, {"instance", r.instance}, {"length", r.length},
                {"eps_hat", r.eps_hat}, {"d", r.d}, {"n", r.n}, {"bound", r.bound}, {"exact", r.exact ? count_json(*r.exact) : json(nullptr)},
                {"verdict", to_string(r.verdict)}, {"unmet", r.unmet}});
        give(json{{"lemma", req.at("lemma")}, {"grid", grid}, {"seed", seed},
                 {"summary", {{"rows", report.rows.size()}, {"pass", report.passes}, {"vacuous", report.vacuous}, {"fail", report.failures}}},
                 {"rows", rows}},
            out);
        return RAMSEY_OK;
    });
}

ramsey_status ramsey_classify(const ramsey_coloring * c, const char * request, char ** out)
{
    return guard([&] {
        const auto & col = handle(c);
        auto req = request_of(request);
        bool have_seed = req.contains("seed");
        auto seed = req.value("seed", std::uint64_t{0});
        auto parts = parts_from(req.at("parts"), col.size(), seed, have_seed);
        double eps = req.at("eps").get<double>();
        auto mode = req.value("mode", std::string("paper"));
        RegimeParams p;
        if (mode == "paper") {
            require_arg(! req.contains("d"), "d is fixed at 12 sqrt(eps) in paper mode; use mode explorer");
            p = RegimeParams::paper(eps, 0, int(parts.size()));
        }
        else {
            require_arg(mode == "explorer", "mode must be paper or explorer");
            double alpha = req.value("alpha", 20 * std::sqrt(eps));
            p = RegimeParams::explorer(eps, req.value("d", 12 * std::sqrt(eps)), alpha, req.value("lambda", 300 * std::sqrt(alpha)), 0, int(parts.size()));
        }
        p.t = ring_length(int(parts.size()), p.alpha);

        std::optional<Sampling> sampling;
        if (req.contains("samples")) {
            require_arg(have_seed, "sampled regularity needs a seed");
            sampling = Sampling{req.at("samples").get<int>(), seed};
        }
        ClassifyBudget budget;
        auto em = req.value("extremal_mode", std::string("exact"));
        require_arg(em == "exact" || em == "local", "extremal_mode must be exact or local");
        budget.extremal_mode = em == "exact" ? ExtremalMode::Exact : ExtremalMode::LocalSearch;
        budget.seed = seed;

        auto r = main2_classify(col, parts, p, sampling, budget);
        json pairs_red = json::array(), pairs_blue = json::array(), pairs_irr = json::array();
        for (auto [u, v] : r.reduced.red.edges())
            pairs_red.push_back({u, v});
        for (auto [u, v] : r.reduced.blue.edges())
            pairs_blue.push_back({u, v});
        for (auto [u, v] : r.reduced.irregular.edges())
            pairs_irr.push_back({u, v});
        json parts_json = json::array();
        for (Mask m : parts)
            parts_json.push_back(list_of(m));

        json j{{"params", {{"eps", p.eps}, {"d", p.d}, {"alpha", p.alpha}, {"lambda", p.lambda}, {"M", p.M}, {"paper_mode", p.paper_mode}}}, {"t", r.t},
            {"parts", parts_json},
            {"reduced", {{"red_edges", pairs_red}, {"blue_edges", pairs_blue}, {"irregular_pairs", pairs_irr}, {"unproven_pairs", r.reduced.unproven_pairs},
                            {"equitable", r.reduced.equitable}}},
            {"lambda_star", r.lambda_star < 0 ? json(nullptr) : json(r.lambda_star)}, {"flags", r.flags}};
        if (auto * w = std::get_if<Case1Witness>(&r.outcome)) {
            json reg = json::array();
            for (auto v : w->regularity)
                reg.push_back(regularity_name(v));
            j["outcome"] = "case1";
            j["case1"] = {{"ring", w->ring}, {"color", to_string(w->color)}, {"t", w->t}, {"densities", w->densities}, {"regularity", reg}};
        }
        else if (auto * w2 = std::get_if<Case2Witness>(&r.outcome)) {
            j["outcome"] = "case2";
            j["case2"] = {{"A", list_of(w2->assessment.A)}, {"B", list_of(w2->assessment.B)}, {"lambda_star", w2->assessment.lambda_star},
                {"within", to_string(w2->assessment.within)}, {"threshold", w2->threshold}};
        }
        else {
            j["outcome"] = "inconclusive";
            j["diagnostics"] = std::get<Inconclusive>(r.outcome).diagnostics;
        }
        give(j, out);
        return RAMSEY_OK;
    });
}
}
