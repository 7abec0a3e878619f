#include "multimode/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mm {

namespace {

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::string comment_text(const std::string& line) {
    std::size_t p = line.find_first_not_of(" \t", 1);
    std::string t = p == std::string::npos ? std::string() : line.substr(p);
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
    return t;
}

std::int64_t read_int(std::istringstream& in, int line, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw ParseError(line, std::string("missing ") + what);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

void expect_end(std::istringstream& in, int line) {
    std::string extra;
    if (in >> extra) throw ParseError(line, "unexpected token '" + extra + "'");
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open '" + path + "'");
    return f;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
    GraphFile out;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::int64_t k = 0, n = 0, m = 0;
    bool directed = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream s(line);
        std::string tag;
        s >> tag;
        if (tag == "c") {
            out.comments.push_back(comment_text(line));
        } else if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string fmt;
            if (!(s >> fmt) || fmt != "multimode") throw ParseError(lineno, "header must start 'p multimode'");
            k = read_int(s, lineno, "mode count");
            n = read_int(s, lineno, "vertex count");
            m = read_int(s, lineno, "edge count");
            std::int64_t dir = read_int(s, lineno, "directed flag");
            expect_end(s, lineno);
            if (k < 1) throw ParseError(lineno, "mode count must be at least 1");
            if (n < 0 || n > (1 << 30)) throw ParseError(lineno, "vertex count out of range");
            if (m < 0) throw ParseError(lineno, "negative edge count");
            if (dir != 0 && dir != 1) throw ParseError(lineno, "directed flag must be 0 or 1");
            directed = dir == 1;
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            Edge e{};
            std::int64_t mode = read_int(s, lineno, "mode");
            std::int64_t u = read_int(s, lineno, "source vertex");
            std::int64_t v = read_int(s, lineno, "target vertex");
            std::int64_t w = 1;
            std::string tok;
            if (s >> tok) {
                std::istringstream ws(tok);
                w = read_int(ws, lineno, "weight");
                expect_end(s, lineno);
            }
            if (mode < 0 || mode >= k) throw ParseError(lineno, "mode " + std::to_string(mode) + " out of range");
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex id out of range");
            if (w < 0) throw ParseError(lineno, "negative weight");
            e.mode = static_cast<int>(mode);
            e.u = static_cast<Vertex>(u);
            e.v = static_cast<Vertex>(v);
            e.w = w;
            edges.push_back(e);
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p multimode' header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(lineno, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    out.graph = build_graph(static_cast<int>(n), static_cast<int>(k), directed, edges);
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    auto f = open_in(path);
    return parse_graph(f);
}

void write_graph(std::ostream& out, const MultimodeGraph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p multimode " << g.k() << ' ' << g.n() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0) << '\n';
    for (const auto& e : g.edges()) {
        out << "e " << e.mode << ' ' << e.u << ' ' << e.v;
        if (e.w != 1) out << ' ' << e.w;
        out << '\n';
    }
}

void write_graph_file(const std::string& path, const MultimodeGraph& g, const std::vector<std::string>& comments) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    write_graph(f, g, comments);
}

std::string sidecar_path(const std::string& graph_path) { return graph_path + ".label"; }

void write_label_file(const std::string& path, const Label& label, const std::vector<std::string>& comments) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    for (const auto& c : comments) f << "c " << c << '\n';
    f << label.sidecar() << '\n';
}

Label read_label_file(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    int lineno = 0;
    std::optional<Label> label;
    while (std::getline(f, line)) {
        ++lineno;
        if (blank(line) || line[0] == 'c') continue;
        if (label) throw ParseError(lineno, "more than one label line");
        try {
            label = parse_label(line);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!label) throw ParseError(0, "no label line in '" + path + "'");
    return *label;
}

OvInstance parse_ov(std::istream& in) {
    OvInstance ov;
    ov.d = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[0] == 'c' || line[0] == '#') continue;
        std::istringstream s(line);
        std::string tag;
        s >> tag;
        if (tag == "d") {
            ov.d = static_cast<int>(read_int(s, lineno, "dimension"));
            expect_end(s, lineno);
            if (ov.d < 1) throw ParseError(lineno, "dimension must be at least 1");
            continue;
        }
        if (tag != "a" && tag != "b") throw ParseError(lineno, "expected 'd', 'a' or 'b'");
        if (ov.d < 1) throw ParseError(lineno, "vector before 'd' line");
        std::string bits;
        if (!(s >> bits)) throw ParseError(lineno, "missing bits");
        expect_end(s, lineno);
        if (static_cast<int>(bits.size()) != ov.d) throw ParseError(lineno, "vector length differs from d");
        BitVector v(ov.d);
        for (int i = 0; i < ov.d; ++i) {
            if (bits[i] != '0' && bits[i] != '1') throw ParseError(lineno, "bits must be 0 or 1");
            v[i] = bits[i] == '1';
        }
        (tag == "a" ? ov.A : ov.B).push_back(v);
    }
    if (ov.d < 1) throw ParseError(0, "missing 'd' line");
    if (ov.A.empty() || ov.B.empty()) throw ParseError(0, "both vector lists need at least one entry");
    return ov;
}

OvInstance read_ov_file(const std::string& path) {
    auto f = open_in(path);
    return parse_ov(f);
}

}  // namespace mm
