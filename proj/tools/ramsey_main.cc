#include <ramsey/ramsey.h>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace
{
    using json = nlohmann::ordered_json;

    constexpr int schema_version = 1;

    constexpr int exit_ok = 0;
    constexpr int exit_usage = 2;
    constexpr int exit_budget = 3;
    constexpr int exit_internal = 1;

    /// Usage problems: reported with exit code 2.
    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto now_utc() -> std::string
    {
        auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        std::ostringstream out;
        out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
        return out.str();
    }

    auto sha256_hex(const std::string & bytes) -> std::string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("SHA-256 digest failed");
        std::ostringstream out;
        for (unsigned int i = 0; i < len; ++i)
            out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
        return out.str();
    }

    struct Owned
    {
        char * p = nullptr;
        Owned() = default;
        Owned(const Owned &) = delete;
        ~Owned() { ramsey_string_free(p); }
    };

    struct Handle
    {
        ramsey_coloring * h = nullptr;
        Handle() = default;
        Handle(const Handle &) = delete;
        Handle(Handle && o) noexcept : h(std::exchange(o.h, nullptr)) {}
        ~Handle() { ramsey_coloring_free(h); }
    };

    /// Shared state of one invocation.
    struct Run
    {
        std::vector<std::string> argv;
        std::string started = now_utc();
        json inputs = json::array();
        json seed = nullptr;
        json budget = nullptr;
        std::string out_path;
        bool csv = false;
    };

    auto read_input(Run & run, const std::string & path) -> std::string
    {
        std::string bytes;
        if (path == "-")
            bytes.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        else {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw UsageError("--in: cannot open " + path);
            bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        run.inputs.push_back({{"path", path}, {"bytes", bytes.size()}, {"sha256", sha256_hex(bytes)}});
        return bytes;
    }

    auto write_output(const Run & run, const std::string & text) -> void
    {
        if (run.out_path.empty() || run.out_path == "-") {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream out(run.out_path, std::ios::binary);
        if (! out)
            throw UsageError("--out: cannot write " + run.out_path);
        out << text;
    }

    auto load_coloring(Run & run, const std::string & path) -> Handle
    {
        auto text = read_input(run, path);
        Handle h;
        long offset = -1;
        auto status = ramsey_coloring_decode(text.c_str(), &offset, &h.h);
        if (status != RAMSEY_OK)
            throw UsageError("--in: malformed kcol: " + std::string(ramsey_last_error()));
        return h;
    }

    /// "0-4,7,9-10" -> [0,1,2,3,4,7,9,10].
    auto vertex_list(const std::string & flag, const std::string & text) -> json
    {
        json out = json::array();
        std::stringstream in(text);
        std::string item;
        auto number = [&](const std::string & s) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(s, &used);
            }
            catch (const std::logic_error &) {
                used = 0;
            }
            if (used != s.size() || v < 0)
                throw UsageError(flag + ": bad vertex '" + s + "' in '" + text + "'");
            return v;
        };
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            auto dash = item.find('-');
            if (dash == std::string::npos)
                out.push_back(number(item));
            else {
                int lo = number(item.substr(0, dash)), hi = number(item.substr(dash + 1));
                if (hi < lo)
                    throw UsageError(flag + ": empty range '" + item + "'");
                for (int v = lo; v <= hi; ++v)
                    out.push_back(v);
            }
        }
        return out;
    }

    /// Moves every "stats" object out of the result: search statistics carry
    /// timings and are not part of the reproducible payload.
    auto split_diagnostics(json & result, json & diagnostics, const std::string & path) -> void
    {
        if (! result.is_object())
            return;
        for (auto it = result.begin(); it != result.end();) {
            if (it.key() == "stats") {
                diagnostics[path.empty() ? "stats" : path + ".stats"] = it.value();
                it = result.erase(it);
                continue;
            }
            split_diagnostics(it.value(), diagnostics, path.empty() ? it.key() : path + "." + it.key());
            ++it;
        }
    }

    auto csv_cell(const json & v) -> std::string
    {
        std::string s;
        if (v.is_string())
            s = v.get<std::string>();
        else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? ";" : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
        }
        else
            s = v.dump();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char ch : s)
                q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
        return s;
    }

    /// Table rows when the result has them, else one row of scalar fields.
    auto to_csv(const json & result) -> std::string
    {
        std::vector<json> rows;
        if (result.is_object() && result.contains("rows") && result["rows"].is_array())
            rows.assign(result["rows"].begin(), result["rows"].end());
        else {
            json row = json::object();
            if (result.is_object())
                for (auto it = result.begin(); it != result.end(); ++it)
                    if (! it.value().is_object())
                        row[it.key()] = it.value();
            rows.push_back(row);
        }
        std::ostringstream out;
        if (rows.empty())
            return "";
        std::vector<std::string> header;
        for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
            header.push_back(it.key());
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto & row : rows) {
            for (std::size_t i = 0; i < header.size(); ++i)
                out << (i ? "," : "") << (row.contains(header[i]) ? csv_cell(row[header[i]]) : "");
            out << "\n";
        }
        return out.str();
    }

    /// Wraps a C-interface JSON result in the report envelope and writes it.
    auto emit(Run & run, const std::string & command, ramsey_status status, const char * payload) -> int
    {
        if (status != RAMSEY_OK && status != RAMSEY_BUDGET) {
            std::cerr << "ramsey " << command << ": " << ramsey_status_name(status) << " error: " << ramsey_last_error() << "\n";
            return status == RAMSEY_INTERNAL ? exit_internal : exit_usage;
        }
        json result = payload ? json::parse(payload) : json(nullptr);
        json diagnostics = json::object();
        split_diagnostics(result, diagnostics, "");

        json report{{"schema_version", schema_version}, {"command", command}, {"status", status == RAMSEY_OK ? "ok" : "partial"}};
        if (status == RAMSEY_BUDGET)
            report["error"] = ramsey_last_error();
        report["result"] = result;
        report["diagnostics"] = diagnostics;
        report["manifest"] = {{"command_line", run.argv}, {"seed", run.seed}, {"budget", run.budget}, {"tool_version", ramsey_version()},
            {"started", run.started}, {"finished", now_utc()}, {"inputs", run.inputs}};

        write_output(run, run.csv ? to_csv(result) : report.dump(2) + "\n");
        if (status == RAMSEY_BUDGET) {
            std::cerr << "ramsey " << command << ": budget exhausted: " << ramsey_last_error() << "\n";
            return exit_budget;
        }
        return exit_ok;
    }

    auto budget_default() -> std::uint64_t
    {
        const char * env = std::getenv("RAMSEY_BUDGET_NODES");
        if (! env || ! *env)
            return 4'000'000'000ULL;
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0)
                return v;
        }
        catch (const std::logic_error &) {
        }
        throw UsageError("RAMSEY_BUDGET_NODES must be a positive integer, not '" + std::string(env) + "'");
    }

    struct SearchFlags
    {
        std::string pattern;
        int n = 0;
        int threads = 1;
        std::uint64_t budget_nodes = 0;
        double budget_seconds = 0;
        int symmetry = 1;
        std::string checkpoint;
    };

    auto add_search_flags(CLI::App * sub, SearchFlags & f, const char * size_flag, const char * size_help) -> void
    {
        sub->add_option("--pattern", f.pattern, "Pattern: P<k>, C<k>, S<k>, K<k>, K1,<k> or G:<n>:<u>-<v>,...")->required();
        sub->add_option(size_flag, f.n, size_help)->required()->check(CLI::Range(1, 64));
        sub->add_option("--threads", f.threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
        sub->add_option("--budget-nodes", f.budget_nodes, "Search node cap (default: RAMSEY_BUDGET_NODES or 4e9)")->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", f.budget_seconds, "Wall-clock cap in seconds (0 = none)")->check(CLI::NonNegativeNumber);
        sub->add_option("--symmetry", f.symmetry, "Symmetry pruning level")->check(CLI::Range(0, 2));
        sub->add_option("--checkpoint", f.checkpoint, "Checkpoint file for resumable runs");
    }

    auto search_request(Run & run, const SearchFlags & f, const char * size_key) -> json
    {
        std::uint64_t nodes = f.budget_nodes ? f.budget_nodes : budget_default();
        json budget{{"max_nodes", nodes}, {"max_time_ms", std::int64_t(f.budget_seconds * 1000)}, {"threads", f.threads}, {"symmetry_level", f.symmetry}};
        run.budget = budget;
        if (! f.checkpoint.empty())
            budget["checkpoint"] = f.checkpoint;
        return {{"pattern", f.pattern}, {size_key, f.n}, {"budget", budget}};
    }
}

int main(int argc, char ** argv)
{
    Run run;
    run.argv.assign(argv, argv + argc);

    CLI::App app{"Ramsey multiplicity toolkit: exhaustive search, extremal colourings, regular pairs and stability checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ramsey_version());

    std::string in_path = "-";
    auto add_in = [&](CLI::App * sub) { sub->add_option("--in", in_path, "Input kcol file ('-' = stdin)"); };
    auto add_out = [&](CLI::App * sub, bool csv) {
        sub->add_option("--out", run.out_path, "Output file ('-' = stdout)");
        if (csv)
            sub->add_flag("--csv", run.csv, "Write the tabular CSV projection instead of JSON");
    };

    SearchFlags mult_flags, rn_flags, th_flags;
    auto * mult = app.add_subcommand("mult", "Minimum monochromatic copies of a pattern over colourings of K_n");
    add_search_flags(mult, mult_flags, "--n", "Board size n");
    add_out(mult, true);
    auto * rn = app.add_subcommand("ramsey-number", "Two-colour Ramsey number of a pattern, searching n up to --n-max");
    add_search_flags(rn, rn_flags, "--n-max", "Largest n to search");
    add_out(rn, true);
    auto * th = app.add_subcommand("threshold", "Multiplicity at the Ramsey number");
    add_search_flags(th, th_flags, "--n-max", "Largest n to search for the Ramsey number");
    add_out(th, true);

    int chi_a = 0, chi_b = 0;
    auto * chi = app.add_subcommand("chi", "Extremal colouring: red between parts of sizes a and b, blue inside (kcol output)");
    chi->add_option("--a", chi_a, "First part size")->required()->check(CLI::PositiveNumber);
    chi->add_option("--b", chi_b, "Second part size")->required()->check(CLI::PositiveNumber);
    add_out(chi, false);

    std::string ext_mode = "exact", ext_A, ext_within;
    std::optional<std::uint64_t> seed;
    auto * ext = app.add_subcommand("extremal-lambda", "Extremal parameter of a colouring");
    add_in(ext);
    ext->add_option("--mode", ext_mode, "exact or local")->check(CLI::IsMember({"exact", "local"}));
    ext->add_option("--seed", seed, "Seed (required for --mode local)");
    auto * ext_A_opt = ext->add_option("--A", ext_A, "Evaluate this part A (vertex ranges) instead of minimising");
    ext->add_option("--within", ext_within, "Colour dense inside the parts (with --A)")->check(CLI::IsMember({"red", "blue"}))->needs(ext_A_opt);
    add_out(ext, true);

    int c2_k = 0;
    double c2_lambda = 0;
    std::string c2_A;
    auto * c2 = app.add_subcommand("case2", "Certified lower bound on monochromatic C_k for an extremal colouring of K_{2k-1}");
    add_in(c2);
    c2->add_option("--k", c2_k, "Cycle length (odd)")->required();
    c2->add_option("--A", c2_A, "Part A as vertex ranges, e.g. 0-4")->required();
    c2->add_option("--lambda", c2_lambda, "Extremal parameter")->required()->check(CLI::Range(0.0, 1.0));
    add_out(c2, true);

    std::string cl_claim, cl_color = "red", cl_S, cl_T, cl_P1, cl_P2, cl_P;
    int cl_l = 0;
    std::optional<int> cl_w;
    auto * vc = app.add_subcommand("verify-claim", "Check a cycle-counting claim on the graph of one colour");
    add_in(vc);
    vc->add_option("--claim", cl_claim, "common-neighbor, bridged-cliques or alternating")
        ->required()
        ->check(CLI::IsMember({"common-neighbor", "bridged-cliques", "alternating"}));
    vc->add_option("--color", cl_color, "Colour whose graph is examined")->check(CLI::IsMember({"red", "blue"}));
    vc->add_option("--S", cl_S, "Set S as vertex ranges")->required();
    vc->add_option("--T", cl_T, "Set T as vertex ranges")->required();
    vc->add_option("--l", cl_l, "Cycle length")->required();
    vc->add_option("--P1", cl_P1, "First bridging path (bridged-cliques)");
    vc->add_option("--P2", cl_P2, "Second bridging path (bridged-cliques)");
    vc->add_option("--w", cl_w, "Special vertex w (alternating)");
    vc->add_option("--P", cl_P, "Path through an outside vertex (alternating)");
    add_out(vc, true);

    std::string lemma, grid = "default";
    std::optional<int> instances;
    int lemma_threads = 0;
    auto * vl = app.add_subcommand("verify-lemma", "Compare a counting lemma's bound against exact counts over a seeded instance grid");
    vl->add_option("--lemma", lemma, "countpath2-p1, countpath2-p2 or countcycle1")
        ->required()
        ->check(CLI::IsMember({"countpath2-p1", "countpath2-p2", "countcycle1"}));
    vl->add_option("--grid", grid, "default or small")->check(CLI::IsMember({"default", "small"}));
    vl->add_option("--seed", seed, "Seed")->required();
    vl->add_option("--instances", instances, "Instances per cell")->check(CLI::PositiveNumber);
    vl->add_option("--threads", lemma_threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
    add_out(vl, true);

    std::string parts, cls_mode = "paper", cls_extremal = "exact";
    double eps = 0;
    std::optional<double> cls_d;
    std::optional<int> samples;
    auto * cls = app.add_subcommand("classify", "Reduced graph and Case 1 / Case 2 classification for a given partition");
    add_in(cls);
    cls->add_option("--parts", parts, "auto-random:M=<m>, or parts as vertex ranges separated by ';'")->required();
    cls->add_option("--eps", eps, "Regularity parameter")->required()->check(CLI::Range(0.0, 1.0));
    cls->add_option("--seed", seed, "Seed (required for auto-random parts, sampling and local search)");
    cls->add_option("--mode", cls_mode, "paper or explorer")->check(CLI::IsMember({"paper", "explorer"}));
    cls->add_option("--d", cls_d, "Density floor (explorer mode)");
    cls->add_option("--samples", samples, "Sampled regularity checks per pair instead of exact")->check(CLI::PositiveNumber);
    cls->add_option("--extremal-mode", cls_extremal, "exact or local")->check(CLI::IsMember({"exact", "local"}));
    add_out(cls, true);

    std::string count_pattern;
    auto * cnt = app.add_subcommand("count", "Red and blue copies of a pattern in a colouring");
    add_in(cnt);
    cnt->add_option("--pattern", count_pattern, "Pattern")->required();
    add_out(cnt, true);

    std::optional<int> enc_n;
    std::string enc_red;
    std::optional<std::string> enc_in;
    auto * enc = app.add_subcommand("encode", "Build a kcol file from --n/--red, or from a decode report (--in, default stdin)");
    auto * enc_n_opt = enc->add_option("--n", enc_n, "Number of vertices")->check(CLI::Range(0, 64));
    auto * enc_red_opt = enc->add_option("--red", enc_red, "Red edges as u-v pairs, comma separated")->needs(enc_n_opt);
    auto * enc_in_opt = enc->add_option("--in", enc_in, "JSON from decode ('-' = stdin)");
    enc_in_opt->excludes(enc_n_opt)->excludes(enc_red_opt);
    add_out(enc, false);

    auto * dec = app.add_subcommand("decode", "Read a kcol file and report its red edges");
    add_in(dec);
    add_out(dec, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "ramsey: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (seed)
            run.seed = *seed;
        Owned out;

        auto run_search = [&](const char * name, SearchFlags & f, const char * key, auto fn) {
            auto req = search_request(run, f, key).dump();
            auto status = fn(req.c_str(), &out.p);
            return emit(run, name, status, out.p);
        };

        if (*mult)
            return run_search("mult", mult_flags, "n", ramsey_multiplicity);
        if (*rn)
            return run_search("ramsey-number", rn_flags, "n_max", ramsey_number);
        if (*th)
            return run_search("threshold", th_flags, "n_max", ramsey_threshold);

        if (*chi) {
            Handle h;
            if (ramsey_coloring_chi(chi_a, chi_b, &h.h) != RAMSEY_OK)
                throw UsageError("--a/--b: " + std::string(ramsey_last_error()));
            if (ramsey_coloring_encode(h.h, &out.p) != RAMSEY_OK)
                throw std::runtime_error(ramsey_last_error());
            write_output(run, out.p);
            return exit_ok;
        }

        if (*ext) {
            if (ext_mode == "local" && ! seed)
                throw UsageError("--seed is required with --mode local");
            auto h = load_coloring(run, in_path);
            json req{{"mode", ext_mode}};
            if (seed)
                req["seed"] = *seed;
            if (! ext_A.empty())
                req["A"] = vertex_list("--A", ext_A);
            if (! ext_within.empty())
                req["within"] = ext_within;
            {
                auto status = ramsey_extremal(h.h, req.dump().c_str(), &out.p);
                return emit(run, "extremal-lambda", status, out.p);
            }
        }

        if (*c2) {
            auto h = load_coloring(run, in_path);
            json req{{"k", c2_k}, {"A", vertex_list("--A", c2_A)}, {"lambda", c2_lambda}};
            {
                auto status = ramsey_case2(h.h, req.dump().c_str(), &out.p);
                return emit(run, "case2", status, out.p);
            }
        }

        if (*vc) {
            json req{{"claim", cl_claim}, {"color", cl_color}, {"S", vertex_list("--S", cl_S)}, {"T", vertex_list("--T", cl_T)}, {"l", cl_l}};
            if (cl_claim == "bridged-cliques") {
                if (cl_P1.empty() || cl_P2.empty())
                    throw UsageError("--P1 and --P2 are required with --claim bridged-cliques");
                req["P1"] = vertex_list("--P1", cl_P1);
                req["P2"] = vertex_list("--P2", cl_P2);
            }
            if (cl_claim == "alternating") {
                if (! cl_w || cl_P.empty())
                    throw UsageError("--w and --P are required with --claim alternating");
                req["w"] = *cl_w;
                req["P"] = vertex_list("--P", cl_P);
            }
            if (cl_claim != "bridged-cliques" && (! cl_P1.empty() || ! cl_P2.empty()))
                throw UsageError("--P1/--P2 apply only to --claim bridged-cliques");
            if (cl_claim != "alternating" && (cl_w || ! cl_P.empty()))
                throw UsageError("--w/--P apply only to --claim alternating");
            auto h = load_coloring(run, in_path);
            {
                auto status = ramsey_verify_claim(h.h, req.dump().c_str(), &out.p);
                return emit(run, "verify-claim", status, out.p);
            }
        }

        if (*vl) {
            json req{{"lemma", lemma}, {"grid", grid}, {"seed", *seed}, {"threads", lemma_threads}};
            if (instances)
                req["instances"] = *instances;
            run.budget = {{"threads", lemma_threads}};
            {
                auto status = ramsey_verify_lemma(req.dump().c_str(), &out.p);
                return emit(run, "verify-lemma", status, out.p);
            }
        }

        if (*cls) {
            bool random_parts = parts.rfind("auto-random:", 0) == 0;
            if ((random_parts || samples || cls_extremal == "local") && ! seed)
                throw UsageError("--seed is required with auto-random --parts, --samples or --extremal-mode local");
            if (cls_d && cls_mode != "explorer")
                throw UsageError("--d requires --mode explorer (paper mode fixes d = 12 sqrt(eps))");
            json req{{"eps", eps}, {"mode", cls_mode}, {"extremal_mode", cls_extremal}};
            if (random_parts)
                req["parts"] = parts;
            else {
                json list = json::array();
                std::stringstream in(parts);
                std::string part;
                while (std::getline(in, part, ';'))
                    list.push_back(vertex_list("--parts", part));
                req["parts"] = list;
            }
            if (seed)
                req["seed"] = *seed;
            if (cls_d)
                req["d"] = *cls_d;
            if (samples)
                req["samples"] = *samples;
            auto h = load_coloring(run, in_path);
            {
                auto status = ramsey_classify(h.h, req.dump().c_str(), &out.p);
                return emit(run, "classify", status, out.p);
            }
        }

        if (*cnt) {
            auto h = load_coloring(run, in_path);
            {
                auto status = ramsey_count(h.h, count_pattern.c_str(), &out.p);
                return emit(run, "count", status, out.p);
            }
        }

        if (*enc) {
            Handle h;
            if (! enc_n) {
                auto j = json::parse(read_input(run, enc_in.value_or("-")), nullptr, false);
                if (j.is_discarded())
                    throw UsageError("--in: not JSON");
                if (j.contains("result"))
                    j = j["result"];
                if (ramsey_coloring_from_json(j.dump().c_str(), &h.h) != RAMSEY_OK)
                    throw UsageError("--in: " + std::string(ramsey_last_error()));
            }
            else {
                json edges = json::array();
                std::stringstream in(enc_red);
                std::string item;
                while (std::getline(in, item, ',')) {
                    if (item.empty())
                        continue;
                    auto dash = item.find('-');
                    auto pair = dash == std::string::npos ? json() : vertex_list("--red", item.substr(0, dash));
                    auto second = dash == std::string::npos ? json() : vertex_list("--red", item.substr(dash + 1));
                    if (dash == std::string::npos || pair.size() != 1 || second.size() != 1)
                        throw UsageError("--red: expected u-v, got '" + item + "'");
                    edges.push_back({pair[0], second[0]});
                }
                json j{{"n", *enc_n}, {"red_edges", edges}};
                if (ramsey_coloring_from_json(j.dump().c_str(), &h.h) != RAMSEY_OK)
                    throw UsageError("--red: " + std::string(ramsey_last_error()));
            }
            if (ramsey_coloring_encode(h.h, &out.p) != RAMSEY_OK)
                throw std::runtime_error(ramsey_last_error());
            write_output(run, out.p);
            return exit_ok;
        }

        if (*dec) {
            auto h = load_coloring(run, in_path);
            {
                auto status = ramsey_coloring_to_json(h.h, &out.p);
                return emit(run, "decode", status, out.p);
            }
        }
    }
    catch (const UsageError & e) {
        std::cerr << "ramsey: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "ramsey: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
