#pragma once

#include "multimode/graph.hpp"
#include "multimode/random.hpp"

namespace mm {

// Standard single-mode graph whose diameter (or radius) equals offset plus the k-mode value.
// Vertex layout: V at [0, n), copy i of V at [n + i*n, n + (i+1)*n), hub x, then hub y.
struct ReducedGraph {
    MultimodeGraph graph;
    std::int64_t W = 0;
    std::int64_t offset = 0;  // 2W
    Vertex hub_x = -1;
    Vertex hub_y = -1;  // radius reduction only

    Vertex copy_of(Vertex v, int mode, int n) const { return n + mode * n + v; }
};

// Smallest even integer strictly above n * M.
std::int64_t reduction_weight(int n, std::int64_t M);

ReducedGraph reduce_to_standard_diameter(const MultimodeGraph& g);
ReducedGraph reduce_to_standard_radius(const MultimodeGraph& g);

// Directed multimode graph whose weights may be negative; no negative cycles expected.
struct SignedGraph {
    int n = 0;
    int k = 1;
    std::vector<Edge> edges;

    std::int64_t max_abs_weight() const;
};

SignedGraph to_signed(const MultimodeGraph& g);

// Per-mode all-pairs search followed by the entrywise minimum.
DistanceMatrix kmode_apsp_trivial(const MultimodeGraph& g);
DistanceMatrix kmode_apsp_trivial(const SignedGraph& g);

struct ApspTrace {
    std::vector<int> level_sizes;  // |S_i|
    std::vector<Dist> level_caps;  // entry cap of the level-i product
    std::vector<char> brute_force;  // level handled by the direct loop
};

// Sampled hop-limited levels combined by capped min-plus products.
// Throws std::runtime_error when a negative cycle shows up.
DistanceMatrix kmode_apsp_bounded(const SignedGraph& g, Rng& rng, ApspTrace* trace = nullptr);
DistanceMatrix kmode_apsp_bounded(const MultimodeGraph& g, Rng& rng, ApspTrace* trace = nullptr);

inline constexpr double kLevelConstant = 9.0;

// Tripartite instance on parts I, J, L of n vertices; kInf marks a missing edge.
struct NegTriInstance {
    int n = 0;
    std::int64_t M = 1;
    DistanceMatrix ij, jl, li;
};

NegTriInstance random_negtri(int n, std::int64_t M, double density, Rng& rng);
bool has_negative_triangle(const NegTriInstance& t);

struct NegTriReduction {
    MultimodeGraph graph;
    bool answer = false;
    int groups = 0;  // g = floor(k^(1/3))
    int width = 0;   // layer size w = ceil(n / g)
    Vertex hub = -1;

    Vertex a(int i) const { return i; }
    Vertex d(int i) const { return 3 * width + i; }
};

// Layered reduction over g^3 of the k modes. The radius flavour adds the (a_i, u) and
// (x, a_i) edges of weight 30M - 1 to mode 0.
NegTriReduction negtri_to_kmode(const NegTriInstance& t, int k, bool radius_flavour);

}  // namespace mm
