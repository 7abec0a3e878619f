#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multimode/graph.hpp"
#include "multimode/instances.hpp"

namespace mm {

// Thrown for malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct GraphFile {
    MultimodeGraph graph;
    std::vector<std::string> comments;  // text after the leading "c "
};

// Header "p multimode <k> <n> <m> <directed:0|1>", then m lines "e <mode> <u> <v> [w]".
// Lines starting with 'c' are comments; blank lines are skipped.
GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const MultimodeGraph& g, const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const MultimodeGraph& g, const std::vector<std::string>& comments = {});

// Sidecar: comment lines plus exactly one "l <kind> <relation> <value>" line.
std::string sidecar_path(const std::string& graph_path);
void write_label_file(const std::string& path, const Label& label, const std::vector<std::string>& comments = {});
Label read_label_file(const std::string& path);

// OV text: "d <dim>", then lines "a <bits>" and "b <bits>" with bits like 0110.
OvInstance parse_ov(std::istream& in);
OvInstance read_ov_file(const std::string& path);

}  // namespace mm
