#include "splitcut/instance_io.hpp"

#include "splitcut/errors.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace splitcut {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char *what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    return value;
}

} // namespace

Graph parse_instance(std::string_view text) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t declared = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;

        if (tokens[0] == "p") {
            if (have_header) throw ParseError(line_no, "second problem line");
            if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
            n = parse_count(tokens[2], line_no, "vertex count");
            declared = parse_count(tokens[3], line_no, "edge count");
            if (n > 0xffffffffULL) throw ParseError(line_no, "vertex count too large");
            have_header = true;
        } else if (tokens[0] == "e") {
            if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const std::uint64_t u = parse_count(tokens[1], line_no, "vertex label");
            const std::uint64_t v = parse_count(tokens[2], line_no, "vertex label");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            const std::uint64_t key = std::min(u, v) << 32 | std::max(u, v);
            if (!seen.insert(key).second)
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else if (tokens[0] == "w") {
            throw ParseError(line_no, "weighted instances are not supported");
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    const std::size_t last = std::max<std::size_t>(line_no, 1);
    if (!have_header) throw ParseError(last, "missing 'p edge' header");
    if (edges.size() != declared)
        throw ParseError(last, "header declares " + std::to_string(declared) + " edges, found " +
                                   std::to_string(edges.size()));
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_instance(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string serialize_instance(const Graph &g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::size_t pos = 0;
        while (pos <= comment.size()) {
            const std::size_t eol = comment.find('\n', pos);
            const auto line = comment.substr(pos, eol == std::string_view::npos ? comment.size() - pos : eol - pos);
            out << "c " << line << '\n';
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
    }
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto &[u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

void write_instance(const std::filesystem::path &path, const Graph &g, std::string_view comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize_instance(g, comment);
    if (!out) throw Error("write failed for " + path.string());
}

std::string serialize_reduction_map(const ReductionMap &map) {
    std::ostringstream out;
    const std::size_t n = map.original().num_vertices();
    const auto &nonedges = map.nonedges();
    for (std::size_t i = 0; i < nonedges.size(); ++i)
        out << "a " << n + i + 1 << ' ' << nonedges[i].first + 1 << ' ' << nonedges[i].second + 1 << '\n';
    return out.str();
}

SolveReport make_solve_report(std::string instance, const Graph &g, const CutReport &report, double millis) {
    SolveReport out;
    out.instance = std::move(instance);
    out.n = g.num_vertices();
    out.m = g.num_edges();
    out.algorithm = report.algorithm;
    out.size = report.size;
    report.cut.side1().for_each([&](Vertex v) { out.side1.push_back(std::size_t{v} + 1); });
    out.subsets_enumerated = report.subsets_enumerated;
    out.millis = millis;
    return out;
}

std::string to_json(const SolveReport &report) {
    nlohmann::ordered_json j;
    j["instance"] = report.instance;
    j["n"] = report.n;
    j["m"] = report.m;
    j["algorithm"] = std::string(to_string(report.algorithm));
    j["size"] = report.size;
    j["side1"] = report.side1;
    j["subsets"] = report.subsets_enumerated;
    j["millis"] = report.millis;
    return j.dump();
}

std::string to_text(const SolveReport &report) {
    std::ostringstream out;
    out << "instance:  " << report.instance << '\n'
        << "n:         " << report.n << '\n'
        << "m:         " << report.m << '\n'
        << "algorithm: " << to_string(report.algorithm) << '\n'
        << "size:      " << report.size << '\n'
        << "side1:    ";
    for (std::size_t v : report.side1) out << ' ' << v;
    out << '\n'
        << "subsets:   " << report.subsets_enumerated << '\n'
        << "millis:    " << std::fixed << std::setprecision(3) << report.millis << '\n';
    return out.str();
}

} // namespace splitcut
