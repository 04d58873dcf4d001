// Command-line surface: batch construction, verification, sweeps, and the
// exhaustive oracles, with machine-readable JSON on stdout and a short human
// summary on stderr.
//
// Exit codes: 0 ok / verdicts pass, 1 verification failure, 2 usage error,
// 3 range rejection, 4 bad input (parse or edge-set mismatch).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "orient/formats.hpp"
#include "orient/reporting.hpp"

using namespace orient;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;
constexpr int kExitInput = 4;

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool g_json_only = false;

void emit(const Json& report, const std::string& summary) {
    std::cout << report.dump(2) << '\n';
    if (!g_json_only)
        std::cerr << summary << '\n';
}

Json envelope(const std::string& command, Json params) {
    return Json{{"schema", 1}, {"command", command}, {"params", std::move(params)}};
}

// ORIENT_THREADS, when set, wins over --threads.
int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("ORIENT_THREADS"))
        return std::max(1, std::atoi(env));
    return std::max(1, flag_value);
}

Constructed dispatch_kind(const std::string& kind, int p, int q,
                          std::optional<std::pair<int, int>> split, int lambda) {
    if (kind == "auto")
        return construct_diameter2(p, q);
    if (kind == "odd")
        return odd_orientation(p, q, split);
    if (kind == "even")
        return even_orientation(p, q, split);
    if (kind == "singleton55")
        return singleton_orientation_55(p, q, false, false);
    if (kind == "singleton55-plus")
        return singleton_orientation_55(p, q, true, false);
    if (kind == "singleton55-minus")
        return singleton_orientation_55(p, q, false, true);
    if (kind == "singleton55-both")
        return singleton_orientation_55(p, q, true, true);
    if (kind == "near57")
        return near_bipartite_orientation_57(p, q);
    if (kind == "bipartite")
        return bipartite_lambda_orientation(p, q, lambda);
    throw RangeError("unknown construction kind " + kind);
}

int cmd_construct(int p, int q, const std::string& kind, const std::vector<int>& split_arg,
                  int lambda, const std::string& edges_path, const std::string& dot_path) {
    Clock clock;
    std::optional<std::pair<int, int>> split;
    if (!split_arg.empty()) {
        if (split_arg.size() != 2)
            throw RangeError("--q-split expects Q1,Q2");
        split = {{split_arg[0], split_arg[1]}};
    }

    Constructed c = dispatch_kind(kind, p, q, split, lambda);
    DiameterReport rep = diameter_report(c.digraph);

    Json report = envelope("construct", Json{{"p", p}, {"q", q}, {"kind", kind}});
    report["plan"] = to_json(c.plan);
    report["verify"] = to_json(rep);
    Json artifacts = Json::object();
    if (!edges_path.empty()) {
        write_edge_list_file(edges_path, c.digraph);
        artifacts["edges"] = edges_path;
    }
    if (!dot_path.empty()) {
        write_dot_file(dot_path, c.digraph);
        artifacts["dot"] = dot_path;
    }
    report["artifacts"] = std::move(artifacts);
    report["timing_ms"] = clock.ms();
    emit(report, "construct " + std::to_string(p) + " " + std::to_string(q) + ": kind=" +
                     kind_name(c.plan.kind) + " diameter=" + std::to_string(rep.diameter) +
                     " OK (" + std::to_string(clock.ms()) + " ms)");
    return 0;
}

// Shared by verify and analyze: load, match against the layout, report.
int cmd_verify_analyze(const std::string& command, const std::string& input,
                       const std::vector<int>& parts, std::optional<int> expect_diameter,
                       bool full_structure) {
    Clock clock;
    Digraph d = read_edge_list_file(input);
    PartLayout L = layout(parts);
    Json report = envelope(command, Json{{"input", input}, {"parts", parts}});

    if (d.size() != L.total())
        throw ValidationError("file has " + std::to_string(d.size()) +
                              " vertices, layout needs " + std::to_string(L.total()));
    EdgeSetDiff diff = multipartite_orientation_diff(d, L);
    if (!diff.clean()) {
        Json missing = Json::array(), extra = Json::array();
        for (auto [u, v] : diff.missing)
            missing.push_back(Json::array({u, v}));
        for (auto [u, v] : diff.extra)
            extra.push_back(Json::array({u, v}));
        report["error"] = Json{{"type", "edge-set-mismatch"},
                               {"missing_pairs", std::move(missing)},
                               {"extra_arcs", std::move(extra)}};
        emit(report, command + ": edge set does not match the layout");
        return kExitInput;
    }

    DiameterReport rep = diameter_report(d);
    report["verify"] = to_json(rep);

    const bool tripartite3 = L.parts() == 3 && L.part_sizes[0] == 3;
    if (tripartite3) {
        StructureReport sr = analyze_structure(d, L);
        if (full_structure)
            report["structure"] = to_json(sr, L);
        else {
            Json vio = Json::array();
            for (const Violation& v : sr.violations)
                vio.push_back(to_json(v));
            report["structure"] = Json{{"h", to_json(sr.h)}, {"violations", std::move(vio)}};
        }
        const int p = L.part_sizes[1], q = L.part_sizes[2];
        try {
            CaseBound cb = case_bound(p, sr.h.nonempty);
            report["case_bound"] = to_json(cb);
            if (cb.kind == CaseBound::Kind::Bound)
                report["q_within_bound"] = BigInt(q) <= cb.bound;
            else if (cb.kind == CaseBound::Kind::Impossible)
                report["q_within_bound"] = false;
            else
                report["q_within_bound"] = nullptr;
        } catch (const RangeError&) {
            report["case_bound"] = nullptr; // p below the case-analysis range
        }
    }
    report["timing_ms"] = clock.ms();

    bool pass = true;
    if (expect_diameter) {
        pass = rep.strong && rep.diameter == *expect_diameter;
        report["expected_diameter"] = *expect_diameter;
        report["pass"] = pass;
    }
    const std::string diam = rep.strong ? std::to_string(rep.diameter) : "INFINITE";
    emit(report, command + " " + input + ": diameter=" + diam +
                     (tripartite3 ? "" : " (no tripartite structure analysis)"));
    return pass ? 0 : kExitVerify;
}

int cmd_sweep(int p_min, int p_max, int threads) {
    Clock clock;
    if (p_min < 5 || p_min > p_max || p_max > 12)
        throw RangeError("sweep: need 5 <= p_min <= p_max <= 12");

    struct Cell {
        int p, q;
        bool ok = false;
        std::string error;
    };
    std::vector<Cell> cells;
    for (int p = p_min; p <= p_max; ++p) {
        const long long q_hi = threshold_3pq(p).convert_to<long long>() - 1;
        for (long long q = p; q <= q_hi; ++q)
            cells.push_back({p, int(q)});
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            Cell& c = cells[i];
            try {
                Constructed built = construct_diameter2(c.p, c.q);
                c.ok = diameter_report(built.digraph).diameter == 2;
                if (!c.ok)
                    c.error = "diameter != 2";
            } catch (const std::exception& e) {
                c.error = e.what();
            }
        }
    };
    const int n_threads = std::max(1, threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    Json per_p = Json::array();
    Json failures = Json::array();
    int pass = 0;
    for (int p = p_min; p <= p_max; ++p) {
        int cnt = 0, ok = 0;
        for (const Cell& c : cells)
            if (c.p == p) {
                ++cnt;
                ok += c.ok;
            }
        per_p.push_back(Json{{"p", p}, {"cells", cnt}, {"pass", ok}, {"fail", cnt - ok}});
        pass += ok;
    }
    for (const Cell& c : cells)
        if (!c.ok)
            failures.push_back(Json{{"p", c.p}, {"q", c.q}, {"error", c.error}});

    Json report = envelope("sweep", Json{{"p_min", p_min}, {"p_max", p_max}});
    report["cells"] = cells.size();
    report["pass"] = pass;
    report["fail"] = int(cells.size()) - pass;
    report["per_p"] = std::move(per_p);
    report["failures"] = failures;
    report["wall_ms"] = clock.ms();
    emit(report, "sweep " + std::to_string(p_min) + ".." + std::to_string(p_max) + ": " +
                     std::to_string(pass) + "/" + std::to_string(cells.size()) +
                     " cells at diameter 2 (" + std::to_string(clock.ms()) + " ms)");
    return failures.empty() ? 0 : kExitVerify;
}

int cmd_threshold(const std::vector<long long>& sizes) {
    if (sizes.size() == 1) {
        const int p = int(sizes[0]);
        Json report = envelope("threshold", Json{{"p", p}});
        const BigInt t = threshold_3pq(p);
        report["threshold"] = big_to_json(t);
        emit(report, "threshold p=" + std::to_string(p) + ": " + t.str());
        return 0;
    }
    FormulaVerdict v = f_formula(sizes);
    Json report = envelope("threshold", Json{{"parts", sizes}});
    report["verdict"] = to_json(v);
    emit(report, "f_formula: " + to_json(v).dump());
    return 0;
}

int cmd_oracle_f(const std::vector<int>& sizes, int budget, int threads) {
    Clock clock;
    SearchResult r = f_bruteforce(sizes, budget, threads);
    FormulaVerdict v = f_formula(std::vector<long long>(sizes.begin(), sizes.end()));

    Json report = envelope("oracle.f", Json{{"parts", sizes}, {"budget", budget}});
    report["search"] = to_json(r);
    report["formula"] = to_json(v);
    bool pass = true;
    if (v.kind == FormulaVerdict::Kind::Exact)
        pass = r.f && *r.f == v.f;
    else if (v.kind == FormulaVerdict::Kind::UnknownWithin23)
        pass = r.f && *r.f >= 2 && *r.f <= 3;
    else
        pass = !r.f.has_value();
    report["agrees"] = pass;
    report["timing_ms"] = clock.ms();
    emit(report, "oracle f: search=" + (r.f ? std::to_string(*r.f) : std::string("none")) +
                     " formula=" + to_json(v)["f"].dump() + (pass ? " (agree)" : " (DISAGREE)"));
    return pass ? 0 : kExitVerify;
}

int cmd_oracle_diam2(const std::vector<int>& sizes, int max_vertices) {
    Clock clock;
    Diam2Result r = exists_diam2_backtracking(sizes, max_vertices);
    Json report = envelope("oracle.diam2", Json{{"parts", sizes}});
    report["exists"] = r.exists;
    report["nodes"] = r.nodes;
    report["witness_edges"] = witness_edges_json(r.witness);
    report["timing_ms"] = clock.ms();
    emit(report, std::string("oracle diam2: ") +
                     (r.exists ? "orientation found" : "none exists") + " (" +
                     std::to_string(r.nodes) + " nodes, " + std::to_string(clock.ms()) + " ms)");
    return 0;
}

int cmd_oracle_sperner(int n) {
    SpernerResult r = sperner_check(n);
    Json families = Json::array();
    for (const auto& fam : r.maximum_antichains) {
        Json f = Json::array();
        for (uint32_t mask : fam) {
            Json set = Json::array();
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    set.push_back(i + 1);
            f.push_back(std::move(set));
        }
        families.push_back(std::move(f));
    }
    Json report = envelope("oracle.sperner", Json{{"n", n}});
    report["max_antichain"] = r.max_size;
    report["maximum_antichain_count"] = r.maximum_antichains.size();
    report["maximum_antichains"] = std::move(families);
    report["antichains_enumerated"] = r.antichain_count;
    emit(report, "oracle sperner n=" + std::to_string(n) + ": max=" +
                     std::to_string(r.max_size) + ", " +
                     std::to_string(r.maximum_antichains.size()) + " extremal families");
    return 0;
}

int cmd_oracle_lemma22(int p, int q) {
    Clock clock;
    const bool holds = lemma22_check(p, q);
    Json report = envelope("oracle.lemma22", Json{{"p", p}, {"q", q}});
    report["every_orientation_has_far_pair"] = holds;
    report["orientations"] = uint64_t(1) << (p * q);
    report["timing_ms"] = clock.ms();
    emit(report, std::string("oracle lemma22: ") + (holds ? "holds" : "REFUTED"));
    return holds ? 0 : kExitVerify;
}

int cmd_oracle_chains(int p_min, int p_max) {
    std::optional<ChainFailure> fail = verify_inequality_chains(p_min, p_max);
    Json report = envelope("oracle.chains", Json{{"p_min", p_min}, {"p_max", p_max}});
    report["all_hold"] = !fail.has_value();
    report["failure"] = fail ? Json{{"inequality", fail->inequality},
                                    {"p", fail->p},
                                    {"m", fail->m},
                                    {"n", fail->n}}
                             : Json(nullptr);
    emit(report, std::string("oracle chains: ") +
                     (fail ? "FAILED at " + fail->inequality : "all inequalities hold"));
    return fail ? kExitVerify : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diameter-2 orientations of complete tripartite graphs: constructions, "
                 "exact BFS verification, structure analysis, and exhaustive oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json_only, "suppress the human summary on stderr");
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (env ORIENT_THREADS overrides)");

    auto* construct = app.add_subcommand("construct", "build an orientation of K(3,p,q)");
    int cp = 0, cq = 0, lambda = 2;
    std::string kind = "auto", edges_path, dot_path;
    std::vector<int> split_arg;
    construct->add_option("p", cp, "middle part size")->required();
    construct->add_option("q", cq, "last part size")->required();
    construct->add_option("--kind", kind,
                          "auto|odd|even|singleton55|singleton55-plus|singleton55-minus|"
                          "singleton55-both|near57|bipartite");
    construct->add_option("--lambda", lambda, "out-set width (kind=bipartite only)");
    construct->add_option("--q-split", split_arg, "Q1,Q2 split for odd/even")->delimiter(',');
    construct->add_option("--edges", edges_path, "write edge list here");
    construct->add_option("--dot", dot_path, "write DOT here");

    std::string v_input, a_input;
    std::vector<int> v_parts, a_parts;
    int expect_diameter = -1;
    auto* verify = app.add_subcommand("verify", "check an edge-list file against a layout");
    verify->add_option("input", v_input, "edge-list file")->required();
    verify->add_option("--parts", v_parts, "part sizes, e.g. 3,5,19")
        ->delimiter(',')
        ->required();
    verify->add_option("--expect-diameter", expect_diameter, "fail unless this diameter");
    auto* analyze = app.add_subcommand("analyze", "full class/structure report for a file");
    analyze->add_option("input", a_input, "edge-list file")->required();
    analyze->add_option("--parts", a_parts, "part sizes, e.g. 3,5,19")
        ->delimiter(',')
        ->required();

    auto* sweep = app.add_subcommand("sweep", "construct+verify the whole diameter-2 range");
    int p_min = 5, p_max = 5;
    sweep->add_option("p_min", p_min)->required();
    sweep->add_option("p_max", p_max)->required();

    auto* threshold = app.add_subcommand(
        "threshold", "diameter-3 threshold for one p, or the f verdict for a part list");
    std::vector<long long> t_sizes;
    threshold->add_option("sizes", t_sizes, "p, or part sizes")->required()->expected(-1);

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth checks");
    oracle->require_subcommand(1);
    auto* of = oracle->add_subcommand("f", "minimum diameter by full enumeration");
    std::vector<int> of_sizes;
    int budget = 24;
    of->add_option("sizes", of_sizes, "part sizes")->required()->expected(-1);
    of->add_option("--budget", budget, "edge budget");
    auto* od = oracle->add_subcommand("diam2", "diameter-2 decision by backtracking");
    std::vector<int> od_sizes;
    int max_vertices = 16;
    od->add_option("sizes", od_sizes, "part sizes")->required()->expected(-1);
    od->add_option("--max-vertices", max_vertices, "vertex limit");
    auto* os = oracle->add_subcommand("sperner", "antichain enumeration over [n]");
    int sperner_n = 0;
    os->add_option("n", sperner_n, "ground-set size, 1..5")->required();
    auto* ol = oracle->add_subcommand("lemma22", "far-pair check over all K(p,q) orientations");
    int lp = 0, lq = 0;
    ol->add_option("p", lp)->required();
    ol->add_option("q", lq)->required();
    auto* oc = oracle->add_subcommand("chains", "exact inequality-chain verification");
    int c_lo = 5, c_hi = 64;
    oc->add_option("p_min", c_lo)->required();
    oc->add_option("p_max", c_hi)->required();

    for (CLI::App* s : {construct, verify, analyze, sweep, threshold, oracle, of, od, os, ol, oc})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    threads = resolve_threads(threads);

    try {
        if (construct->parsed())
            return cmd_construct(cp, cq, kind, split_arg, lambda, edges_path, dot_path);
        if (verify->parsed())
            return cmd_verify_analyze("verify", v_input, v_parts,
                                      expect_diameter >= 0 ? std::optional<int>(expect_diameter)
                                                           : std::nullopt,
                                      false);
        if (analyze->parsed())
            return cmd_verify_analyze("analyze", a_input, a_parts, std::nullopt, true);
        if (sweep->parsed())
            return cmd_sweep(p_min, p_max, threads);
        if (threshold->parsed())
            return cmd_threshold(t_sizes);
        if (of->parsed())
            return cmd_oracle_f(of_sizes, budget, threads);
        if (od->parsed())
            return cmd_oracle_diam2(od_sizes, max_vertices);
        if (os->parsed())
            return cmd_oracle_sperner(sperner_n);
        if (ol->parsed())
            return cmd_oracle_lemma22(lp, lq);
        if (oc->parsed())
            return cmd_oracle_chains(c_lo, c_hi);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cout
            << Json{{"schema", 1}, {"error", {{"type", "range"}, {"message", e.what()}}}}.dump(2)
            << '\n';
        std::cerr << "range rejection: " << e.what() << '\n';
        return kExitRange;
    } catch (const ParseError& e) {
        std::cout
            << Json{{"schema", 1}, {"error", {{"type", "parse"}, {"message", e.what()}}}}.dump(2)
            << '\n';
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cout << Json{{"schema", 1},
                          {"error", {{"type", "validation"}, {"message", e.what()}}}}
                         .dump(2)
                  << '\n';
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cout
            << Json{{"schema", 1}, {"error", {{"type", "internal"}, {"message", e.what()}}}}.dump(
                   2)
            << '\n';
        std::cerr << "internal error (bug): " << e.what() << '\n';
        return 70;
    }
}
