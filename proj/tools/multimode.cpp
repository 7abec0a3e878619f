// multimode: command-line front end. One JSON record per line on stdout.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multimode/directed.hpp"
#include "multimode/exact.hpp"
#include "multimode/graph.hpp"
#include "multimode/instances.hpp"
#include "multimode/io.hpp"
#include "multimode/radius.hpp"
#include "multimode/undirected_diameter.hpp"

using json = nlohmann::ordered_json;
using namespace mm;

namespace {

// Exit status 2: a result failed its own re-check.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json jd(Dist d) { return d == kInf ? json("inf") : json(d); }

json vertex_list(const VertexSet& s) {
    json a = json::array();
    for (Vertex v : s) a.push_back(v);
    return a;
}

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

std::pair<Dist, Dist> parse_range(const std::string& r) {
    if (r.empty()) return {0, -1};
    auto colon = r.find(':');
    if (colon == std::string::npos) throw ParseError(0, "range must look like lo:hi");
    try {
        Dist lo = colon == 0 ? 0 : std::stoll(r.substr(0, colon));
        Dist hi = colon + 1 == r.size() ? -1 : std::stoll(r.substr(colon + 1));
        if (lo < 0) throw ParseError(0, "range must be non-negative");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError(0, "range must look like lo:hi");
    }
}

// Both endpoints of a claimed distance are searched again before the record goes out.
Dist recertify(const MultimodeGraph& g, Vertex a, Vertex b, Dist claimed) {
    Dist d = kmode_distance(g, a, b);
    if (d != claimed)
        throw InternalError("witness (" + std::to_string(a) + ", " + std::to_string(b) + ") claimed " +
                            dist_str(claimed) + " but measures " + dist_str(d));
    return d;
}

void emit(const json& rec, bool human) {
    if (!human) {
        std::cout << rec.dump() << '\n';
        return;
    }
    std::size_t width = 0;
    for (auto it = rec.begin(); it != rec.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << it.key() << v << '\n';
    }
}

struct Common {
    std::vector<std::string> argv;
    bool human = false;
    std::uint64_t seed = 1;
};

json base_record(const Common& c, const std::string& cmd) {
    json r;
    r["command"] = cmd;
    r["args"] = join(c.argv);
    r["seed"] = c.seed;
    return r;
}

json graph_info(const MultimodeGraph& g) {
    return json{{"n", g.n()}, {"m", g.edge_count()}, {"k", g.k()}, {"directed", g.directed()}};
}

void cmd_exact(const Common& c, const std::string& path, bool apsp) {
    auto gf = read_graph_file(path);
    const auto& g = gf.graph;
    reset_search_count();
    Timer t;
    auto p = exact_parameters(g);
    json r = base_record(c, "exact");
    r["graph"] = graph_info(g);
    r["diameter"] = jd(p.diameter);
    r["radius"] = jd(p.radius);
    if (g.n() > 0) {
        r["witness"] = {p.diam_a, p.diam_b};
        r["certified"] = jd(recertify(g, p.diam_a, p.diam_b, p.diameter));
        r["center"] = p.center;
    }
    if (apsp) {
        auto m = exact_apsp(g);
        json rows = json::array();
        for (int i = 0; i < m.rows; ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols; ++j) row.push_back(jd(m.at(i, j)));
            rows.push_back(row);
        }
        r["apsp"] = rows;
    }
    r["counters"] = {{"searches", search_count()}};
    r["ms"] = t.ms();
    emit(r, c.human);
}

DiameterDecision make_decider(const MultimodeGraph& g, const std::string& algo, double delta, Rng& rng) {
    if (algo == "2approx") return [&g, delta, &rng](Dist D) { return two_approx_decision(g, D, delta, rng); };
    if (algo == "2.5approx") return [&g, delta, &rng](Dist D) { return two_half_approx_decision(g, D, delta, rng); };
    if (algo == "3mode") return [&g](Dist D) { return three_mode_three_approx_decision(g, D); };
    throw ParseError(0, "unknown algorithm '" + algo + "'");
}

void cmd_approx_diam(const Common& c, const std::string& path, const std::string& algo, double delta,
                     const std::string& range) {
    auto g = read_graph_file(path).graph;
    auto [lo, hi] = parse_range(range);
    Rng rng(c.seed);
    reset_search_count();
    Timer t;
    json r = base_record(c, "approx-diam");
    r["graph"] = graph_info(g);
    r["algo"] = algo;
    if (algo == "3approx") {
        if (g.k() != 2 || g.directed()) throw ParseError(0, "3approx needs an undirected 2-mode graph");
        auto e = three_approx_2mode(g);
        r["estimate"] = jd(e.estimate);
        r["witness"] = {e.a, e.b};
        r["certified"] = jd(recertify(g, e.a, e.b, e.estimate));
        r["counters"] = {{"searches", search_count()}};
    } else {
        auto decide = make_decider(g, algo, delta, rng);
        auto e = binary_search_diameter(g, decide, lo, hi);
        r["estimate"] = jd(e.estimate);
        r["witness"] = {e.a, e.b};
        r["certified"] = jd(recertify(g, e.a, e.b, e.estimate));
        r["largest_threshold"] = e.largest_threshold;
        r["fallback"] = e.fallback;
        r["counters"] = {{"searches", search_count()}, {"decision_calls", e.decision_calls}};
    }
    r["ms"] = t.ms();
    emit(r, c.human);
}

void cmd_approx_radius(const Common& c, const std::string& path, const std::string& range) {
    auto g = read_graph_file(path).graph;
    auto [lo, hi] = parse_range(range);
    reset_search_count();
    Timer t;
    auto e = binary_search_radius(g, lo, hi);
    json r = base_record(c, "approx-radius");
    r["graph"] = graph_info(g);
    r["infinite"] = e.infinite;
    r["estimate"] = jd(e.estimate);
    r["center"] = e.center;
    if (e.center >= 0) {
        auto row = kmode_row(g, e.center);
        Dist ecc = *std::max_element(row.begin(), row.end());
        if (!e.infinite && ecc != e.estimate) throw InternalError("centre eccentricity does not re-measure");
        r["certified"] = jd(ecc);
    }
    r["threshold"] = e.threshold;
    r["counters"] = {{"searches", search_count()},
                     {"decision_calls", e.decision_calls},
                     {"recursion_nodes", e.nodes},
                     {"node_bound_per_call", radius_node_bound(g.k())}};
    r["ms"] = t.ms();
    emit(r, c.human);
}

void cmd_directed(const Common& c, const std::string& path, const std::string& task, int mode) {
    auto g = read_graph_file(path).graph;
    reset_search_count();
    Timer t;
    json r = base_record(c, "directed");
    r["graph"] = graph_info(g);
    r["task"] = task;
    try {
        if (task == "finite-diam") {
            auto v = finite_2mode_diameter(g);
            r["verdict"] = v.finite ? "finite" : "infinite";
            if (v.witness) {
                r["witness"] = {v.witness->first, v.witness->second};
                r["certified"] = jd(recertify(g, v.witness->first, v.witness->second, kInf));
            }
            r["counters"] = {{"searches", search_count()}, {"recursion_nodes", v.nodes}, {"depth", v.depth},
                             {"fallbacks", v.fallbacks}};
        } else if (task == "dag-diam") {
            Dist e = two_mode_dag_diameter_2approx(g);
            r["estimate"] = jd(e);
            r["counters"] = {{"searches", search_count()}};
        } else if (task == "dag-finite-ecc") {
            r["vertices"] = vertex_list(dag_2mode_finite_ecc(g));
            r["counters"] = {{"searches", search_count()}};
        } else if (task == "min-ecc") {
            if (mode < 0 || mode >= g.k()) throw ParseError(0, "mode out of range");
            r["mode"] = mode;
            r["vertices"] = vertex_list(finite_min_ecc(g, mode));
            r["counters"] = {{"searches", search_count()}};
        } else {
            throw ParseError(0, "unknown task '" + task + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    r["ms"] = t.ms();
    emit(r, c.human);
}

void cmd_gen(const Common& c, const std::string& family, const std::string& ov_file, const std::vector<double>& random,
             const std::string& out, bool verbatim) {
    OvInstance ov;
    if (!ov_file.empty()) {
        ov = read_ov_file(ov_file);
    } else if (!random.empty()) {
        int n = static_cast<int>(random[0]);
        if (n < 1 || random[0] != n) throw ParseError(0, "--random n must be a positive integer");
        int d = random.size() > 1 ? static_cast<int>(random[1])
                                  : std::max(1, static_cast<int>(std::ceil(2 * std::log2(std::max(2, n)))));
        double p = random.size() > 2 ? random[2] : 0.3;
        if (d < 1 || p < 0 || p > 1) throw ParseError(0, "--random needs d >= 1 and 0 <= p <= 1");
        Rng rng(c.seed);
        ov = random_ov(n, n, d, p, rng);
    } else {
        throw ParseError(0, "gen needs --ov-file or --random");
    }
    GenOptions opt;
    opt.verbatim_3mode_dag = verbatim;
    LabeledInstance inst;
    try {
        inst = gen_lower_bound_instance(family, ov, opt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    std::vector<std::string> comments{"family " + family, "answer " + std::to_string(inst.answer ? 1 : 0),
                                      "vectors A=" + std::to_string(ov.na()) + " B=" + std::to_string(ov.nb()) +
                                          " d=" + std::to_string(ov.d)};
    if (!inst.S.empty())
        comments.push_back("st S=" + std::to_string(inst.S.front()) + ".." + std::to_string(inst.S.back()) +
                           " T=" + std::to_string(inst.T.front()) + ".." + std::to_string(inst.T.back()));
    write_graph_file(out, inst.graph, comments);
    write_label_file(sidecar_path(out), inst.label, {"family " + family});
    json r = base_record(c, "gen");
    r["family"] = family;
    r["graph"] = graph_info(inst.graph);
    r["answer"] = inst.answer;
    r["label"] = inst.label.sidecar();
    r["out"] = out;
    r["sidecar"] = sidecar_path(out);
    emit(r, c.human);
}

void cmd_reduce(const Common& c, const std::string& path, const std::string& target, const std::string& out) {
    auto g = read_graph_file(path).graph;
    ReducedGraph red;
    if (target == "diameter") red = reduce_to_standard_diameter(g);
    else if (target == "radius") red = reduce_to_standard_radius(g);
    else throw ParseError(0, "target must be diameter or radius");
    write_graph_file(out, red.graph, {"offset 2W=" + std::to_string(red.offset), "reduced from " + path});
    json r = base_record(c, "reduce");
    r["target"] = target;
    r["graph"] = graph_info(red.graph);
    r["W"] = red.W;
    r["offset"] = red.offset;
    r["out"] = out;
    emit(r, c.human);
}

Dist run_algo(const MultimodeGraph& g, const std::string& algo, Rng& rng) {
    if (algo == "exact") return exact_parameters(g).diameter;
    if (algo == "exact-serial") return exact_parameters_serial(g).diameter;
    if (algo == "3approx") return three_approx_2mode(g).estimate;
    if (algo == "2approx" || algo == "2.5approx" || algo == "3mode")
        return binary_search_diameter(g, make_decider(g, algo, 0.5, rng)).estimate;
    if (algo == "radius") return binary_search_radius(g).estimate;
    if (algo == "finite-diam") return finite_2mode_diameter(g).finite ? 1 : 0;
    throw ParseError(0, "unknown algorithm '" + algo + "'");
}

void cmd_bench(const Common& c, const std::vector<std::string>& paths, const std::string& algo, int repeat) {
    if (repeat < 1) throw ParseError(0, "--repeat must be at least 1");
    std::cout << "file,algo,n,m,k,repeat,median_ms,value\n";
    for (const auto& path : paths) {
        auto g = read_graph_file(path).graph;
        Rng rng(c.seed);
        std::vector<double> times;
        Dist value = 0;
        for (int i = 0; i < repeat; ++i) {
            Timer t;
            value = run_algo(g, algo, rng);
            times.push_back(t.ms());
        }
        std::sort(times.begin(), times.end());
        double median = repeat % 2 ? times[repeat / 2] : (times[repeat / 2 - 1] + times[repeat / 2]) / 2;
        std::cout << path << ',' << algo << ',' << g.n() << ',' << g.edge_count() << ',' << g.k() << ',' << repeat
                  << ',' << std::fixed << std::setprecision(3) << median << ',' << dist_str(value) << '\n';
        std::cout.unsetf(std::ios::floatfield);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multimode graph diameter and radius tools"};
    app.require_subcommand(1);
    Common c;
    c.argv.assign(argv + 1, argv + argc);

    std::string path, algo = "2approx", range, task, family, ov_file, out, target;
    double delta = 0.5;
    int mode = 0, repeat = 5;
    bool apsp = false, verbatim = false;
    std::vector<double> random;
    std::vector<std::string> paths;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--human", c.human, "Print a table instead of JSON");
        sub->add_option("--seed", c.seed, "Random seed");
    };

    auto* exact = app.add_subcommand("exact", "Exact diameter and radius");
    exact->add_option("path", path, "Graph file")->required()->check(CLI::ExistingFile);
    exact->add_flag("--apsp", apsp, "Dump the full k-mode distance matrix");
    add_common(exact);

    auto* ad = app.add_subcommand("approx-diam", "Approximate diameter by binary search over thresholds");
    ad->add_option("path", path, "Graph file")->required()->check(CLI::ExistingFile);
    ad->add_option("--algo", algo)->check(CLI::IsMember({"3approx", "2approx", "2.5approx", "3mode"}));
    ad->add_option("--delta", delta)->check(CLI::Range(0.0, 1.0));
    ad->add_option("--range", range, "Threshold range lo:hi");
    add_common(ad);

    auto* ar = app.add_subcommand("approx-radius", "3-approximate radius");
    ar->add_option("path", path, "Graph file")->required()->check(CLI::ExistingFile);
    ar->add_option("--range", range, "Threshold range lo:hi");
    add_common(ar);

    auto* dir = app.add_subcommand("directed", "Directed 2-mode tasks");
    dir->add_option("path", path, "Graph file")->required()->check(CLI::ExistingFile);
    dir->add_option("--task", task)
        ->required()
        ->check(CLI::IsMember({"finite-diam", "dag-diam", "dag-finite-ecc", "min-ecc"}));
    dir->add_option("--mode", mode, "Mode for min-ecc");
    add_common(dir);

    auto* gen = app.add_subcommand("gen", "Generate a labeled lower-bound instance");
    gen->add_option("--family", family)->required()->check(CLI::IsMember(family_names()));
    auto* ovopt = gen->add_option("--ov-file", ov_file, "Vector file")->check(CLI::ExistingFile);
    auto* rndopt = gen->add_option("--random", random, "n [d [p]]")->expected(1, 3);
    ovopt->excludes(rndopt);
    gen->add_option("--out", out)->required();
    gen->add_flag("--verbatim", verbatim, "diam-3mode-dag with the green A->B arcs as first written");
    add_common(gen);

    auto* red = app.add_subcommand("reduce", "Reduce to a standard single-mode graph");
    red->add_option("path", path, "Graph file")->required()->check(CLI::ExistingFile);
    red->add_option("--target", target)->required()->check(CLI::IsMember({"diameter", "radius"}));
    red->add_option("--out", out)->required();
    add_common(red);

    auto* bench = app.add_subcommand("bench", "Median wall-clock times as CSV");
    bench->add_option("paths", paths, "Graph files")->required()->check(CLI::ExistingFile);
    bench->add_option("--algo", algo)
        ->check(CLI::IsMember({"exact", "exact-serial", "3approx", "2approx", "2.5approx", "3mode", "radius",
                               "finite-diam"}));
    bench->add_option("--repeat", repeat);
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*exact) cmd_exact(c, path, apsp);
        else if (*ad) cmd_approx_diam(c, path, algo, delta, range);
        else if (*ar) cmd_approx_radius(c, path, range);
        else if (*dir) cmd_directed(c, path, task, mode);
        else if (*gen) cmd_gen(c, family, ov_file, random, out, verbatim);
        else if (*red) cmd_reduce(c, path, target, out);
        else if (*bench) cmd_bench(c, paths, algo, repeat);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
