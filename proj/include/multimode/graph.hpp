#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mm {

using Vertex = int;
using Dist = std::int64_t;
using VertexSet = std::vector<Vertex>;

// Infinite is the largest representable value so that plain comparisons order it last.
inline constexpr Dist kInf = std::numeric_limits<Dist>::max();

inline Dist sat_add(Dist a, Dist b) { return (a == kInf || b == kInf) ? kInf : a + b; }
inline bool is_finite(Dist d) { return d != kInf; }
std::string dist_str(Dist d);

struct Edge {
    int mode;
    Vertex u;
    Vertex v;
    std::int64_t w = 1;

    bool operator==(const Edge&) const = default;
};

// Compressed adjacency of one mode in one direction.
struct Csr {
    std::vector<std::int64_t> off;
    std::vector<Vertex> nbr;
    std::vector<std::int64_t> wt;

    std::int64_t begin(Vertex v) const { return off[v]; }
    std::int64_t end(Vertex v) const { return off[v + 1]; }
    std::int64_t degree(Vertex v) const { return off[v + 1] - off[v]; }
};

class MultimodeGraph {
public:
    MultimodeGraph() = default;

    int n() const { return n_; }
    int k() const { return k_; }
    bool directed() const { return directed_; }
    std::int64_t max_weight() const { return max_weight_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    // Edges as given to build_graph (undirected edges appear once).
    const std::vector<Edge>& edges() const { return edges_; }

    const Csr& out(int mode) const { return fwd_[mode]; }
    const Csr& in(int mode) const { return directed_ ? rev_[mode] : fwd_[mode]; }
    bool unit_weights(int mode) const { return unit_[mode] != 0; }

    friend MultimodeGraph build_graph(int n, int k, bool directed, const std::vector<Edge>& edges);

private:
    int n_ = 0;
    int k_ = 1;
    bool directed_ = false;
    std::int64_t max_weight_ = 1;
    std::vector<Edge> edges_;
    std::vector<Csr> fwd_;
    std::vector<Csr> rev_;
    std::vector<char> unit_;
};

MultimodeGraph build_graph(int n, int k, bool directed, const std::vector<Edge>& edges);

struct DistanceMap {
    int mode = 0;
    VertexSet sources;
    std::vector<Dist> dist;

    Dist operator[](Vertex v) const { return dist[v]; }
    std::size_t size() const { return dist.size(); }
};

// Fractional radius num/den, used for strict balls with non-integral radii.
struct Radius {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Radius of(std::int64_t r) { return {r, 1}; }
    // d < num/den
    bool admits(Dist d) const { return d != kInf && d * den < num; }
    // d <= num/den
    bool admits_closed(Dist d) const { return d != kInf && d * den <= num; }
};

// Number of single-source searches run so far in this process.
std::uint64_t search_count();
void reset_search_count();

DistanceMap sssp(const MultimodeGraph& g, int mode, Vertex source, bool reverse = false);
DistanceMap multi_source_sssp(const MultimodeGraph& g, int mode, const VertexSet& sources,
                              bool reverse = false);

VertexSet ball(const MultimodeGraph& g, int mode, Vertex v, std::int64_t r);
VertexSet ball(const MultimodeGraph& g, int mode, Vertex v, Radius r);
VertexSet ball_of(const DistanceMap& dm, Radius r);

Dist kmode_distance(const MultimodeGraph& g, Vertex u, Vertex v);

// Entry-wise minimum over modes of the searches from (or, with reverse, to) source.
std::vector<Dist> kmode_row(const MultimodeGraph& g, Vertex source, bool reverse = false);

struct ExactParameters {
    std::vector<Dist> ecc;
    Dist diameter = 0;
    Dist radius = 0;
    Vertex diam_a = 0;
    Vertex diam_b = 0;
    Vertex center = 0;
};

ExactParameters exact_parameters(const MultimodeGraph& g);
ExactParameters exact_parameters_serial(const MultimodeGraph& g);

struct DistanceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Dist> a;

    DistanceMatrix() = default;
    DistanceMatrix(int r, int c, Dist fill = kInf) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
    Dist& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Dist at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    Dist* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const Dist* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
    bool operator==(const DistanceMatrix&) const = default;
};

DistanceMatrix exact_apsp(const MultimodeGraph& g);
DistanceMatrix exact_apsp_serial(const MultimodeGraph& g);

struct Induced {
    MultimodeGraph graph;
    std::vector<Vertex> to_old;
    std::vector<Vertex> to_new;  // -1 outside the subset
};

Induced induced_subgraph(const MultimodeGraph& g, const VertexSet& subset);

// Membership bitmap of a vertex set.
std::vector<char> mask_of(int n, const VertexSet& s);

}  // namespace mm
