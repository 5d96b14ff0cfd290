#include "cli.hpp"

#include "splitcut/bench.hpp"
#include "splitcut/errors.hpp"
#include "splitcut/generator.hpp"
#include "splitcut/instance_io.hpp"
#include "splitcut/oracle.hpp"
#include "splitcut/reduction.hpp"
#include "splitcut/solver.hpp"
#include "splitcut/split.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>

namespace splitcut::cli {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_labels(std::ostream &out, const VertexSet &s) {
    s.for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
}

void emit(std::ostream &out, const SolveReport &report, bool json) {
    if (json)
        out << to_json(report) << '\n';
    else
        out << to_text(report);
}

struct Settings {
    std::string file;
    std::string output;
    std::string map_output;
    bool json = false;
    bool force_reduction = false;
    unsigned threads = 1;
    std::uint64_t k = 0;
    std::size_t cap = oracle::kDefaultCap;
    std::size_t clique = 0;
    std::size_t independent = 0;
    double prob = 0.5;
    std::uint64_t seed = 1;
    std::size_t min_t = 8;
    std::size_t max_t = 20;
};

int do_solve(const Settings &s, std::ostream &out) {
    const Graph g = read_instance(s.file);
    SolveOptions options;
    options.threads = s.threads;
    const auto start = Clock::now();
    std::optional<CutReport> report;
    if (!s.force_reduction) {
        try {
            report = maxcut_split(g, options);
        } catch (const NotSplitGraph &) {
        }
    }
    if (!report) report = maxcut_via_reduction(g, options);
    const double elapsed = millis_since(start);
    emit(out, make_solve_report(std::filesystem::path(s.file).filename().string(), g, *report, elapsed), s.json);
    return kExitYes;
}

int do_decide(const Settings &s, std::ostream &out) {
    const Graph g = read_instance(s.file);
    SolveOptions options;
    options.threads = s.threads;
    const DecisionReport r = decide_maxcut_report(g, s.k, options);
    out << (r.yes ? "yes" : "no") << '\n';
    return r.yes ? kExitYes : kExitNo;
}

int do_recognize(const Settings &s, std::ostream &out) {
    const Graph g = read_instance(s.file);
    const auto p = recognize_split(g);
    if (!p) {
        out << "not split\n";
        return kExitYes;
    }
    out << "split\nclique:";
    print_labels(out, p->clique());
    out << "independent:";
    print_labels(out, p->independent());
    return kExitYes;
}

int do_reduce(const Settings &s, std::ostream &out) {
    const Graph g = read_instance(s.file);
    const ReductionMap map(g);
    const std::string map_path = s.map_output.empty() ? s.output + ".map" : s.map_output;
    write_instance(s.output, map.image(),
                   "split image of " + std::filesystem::path(s.file).filename().string() + ", " +
                       std::to_string(map.nonedge_count()) + " auxiliary vertices");
    std::ofstream sidecar(map_path, std::ios::binary);
    if (!sidecar) throw Error("cannot write " + map_path);
    sidecar << serialize_reduction_map(map);
    out << "wrote " << s.output << " (n=" << map.image().num_vertices() << ", m=" << map.image().num_edges()
        << ") and " << map_path << '\n';
    return kExitYes;
}

int do_oracle(const Settings &s, std::ostream &out) {
    const Graph g = read_instance(s.file);
    const auto start = Clock::now();
    const CutReport report = oracle::brute_force_maxcut(g, s.cap);
    const double elapsed = millis_since(start);
    emit(out, make_solve_report(std::filesystem::path(s.file).filename().string(), g, report, elapsed), s.json);
    return kExitYes;
}

int do_generate(const Settings &s, std::ostream &out) {
    const Graph g = generate_split(s.clique, s.independent, s.prob, s.seed);
    write_instance(s.output, g,
                   "split graph clique=" + std::to_string(s.clique) + " is=" + std::to_string(s.independent) +
                       " prob=" + std::to_string(s.prob) + " seed=" + std::to_string(s.seed));
    out << "wrote " << s.output << " (n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";
    return kExitYes;
}

int do_bench(const Settings &s, std::ostream &out) {
    SolveOptions options;
    options.threads = s.threads;
    write_bench_csv(out, run_bench(s.min_t, s.max_t, s.prob, s.seed, options));
    return kExitYes;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Settings s;
    CLI::App app{"Exact maximum cut for split graphs", "splitcut"};
    app.require_subcommand(1);

    auto add_threads = [&](CLI::App *cmd) {
        cmd->add_option("--threads", s.threads, "Worker threads for subset enumeration")->check(CLI::Range(1U, 256U));
    };

    auto *solve = app.add_subcommand("solve", "Maximum cut (split solver, or via the split reduction)");
    solve->add_option("file", s.file, "Instance in DIMACS 'p edge' format")->required();
    solve->add_flag("--force-reduction", s.force_reduction, "Always solve through the split reduction");
    solve->add_flag("--json", s.json, "Machine-readable report");
    add_threads(solve);

    auto *decide = app.add_subcommand("decide", "Is there a cut of size >= k? Exit 0 for yes, 1 for no");
    decide->add_option("file", s.file)->required();
    decide->add_option("k", s.k)->required();
    add_threads(decide);

    auto *recognize = app.add_subcommand("recognize", "Print a clique / independent-set partition");
    recognize->add_option("file", s.file)->required();

    auto *reduce = app.add_subcommand("reduce", "Write the split image and its auxiliary-vertex map");
    reduce->add_option("file", s.file)->required();
    reduce->add_option("-o,--output", s.output, "Image instance path")->required();
    reduce->add_option("--map", s.map_output, "Mapping file path (default: <output>.map)");

    auto *orc = app.add_subcommand("oracle", "Brute-force maximum cut");
    orc->add_option("file", s.file)->required();
    orc->add_option("--cap", s.cap, "Largest vertex count accepted")->check(CLI::Range(std::size_t{1}, std::size_t{30}));
    orc->add_flag("--json", s.json);

    auto *generate = app.add_subcommand("generate", "Write a random split instance");
    generate->add_option("--clique", s.clique, "Clique size")->required();
    generate->add_option("--is", s.independent, "Independent-set size")->required();
    generate->add_option("--prob", s.prob, "Clique/independent edge probability")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", s.seed);
    generate->add_option("-o,--output", s.output)->required();

    auto *bench = app.add_subcommand("bench", "CSV t,n,subsets,size,millis over balanced instances");
    bench->add_option("--min-t", s.min_t)->check(CLI::Range(std::size_t{2}, kMaxEnumeratedSide));
    bench->add_option("--max-t", s.max_t)->check(CLI::Range(std::size_t{2}, kMaxEnumeratedSide));
    bench->add_option("--prob", s.prob)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--seed", s.seed);
    add_threads(bench);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("splitcut");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitYes : kExitError;
    }

    try {
        if (solve->parsed()) return do_solve(s, out);
        if (decide->parsed()) return do_decide(s, out);
        if (recognize->parsed()) return do_recognize(s, out);
        if (reduce->parsed()) return do_reduce(s, out);
        if (orc->parsed()) return do_oracle(s, out);
        if (generate->parsed()) return do_generate(s, out);
        if (bench->parsed()) return do_bench(s, out);
    } catch (const std::exception &e) {
        err << "splitcut: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

} // namespace splitcut::cli
