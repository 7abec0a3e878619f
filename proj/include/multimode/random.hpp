#pragma once

#include <cstdint>
#include <random>

#include "multimode/graph.hpp"

namespace mm {

using Rng = std::mt19937_64;

// Uniform sample of `count` distinct vertices of [0, n), returned sorted.
VertexSet sample_vertices(int n, int count, Rng& rng);

// ceil(c * n^(1-delta) * ln n), clamped to [1, n].
int hitting_set_size(int n, double c, double delta);

struct RandomGraphSpec {
    int n = 10;
    int k = 2;
    double p = 0.2;  // per ordered (directed) or unordered pair and mode
    bool directed = false;
    std::int64_t max_w = 1;  // weights uniform in [1, max_w]
    bool connected = false;  // plant a random spanning tree in mode 0 (both directions if directed)
    bool acyclic = false;    // each mode follows its own random vertex order
    bool aligned = false;    // 2 modes: mode 0 along one order, mode 1 against it
};

MultimodeGraph random_graph(const RandomGraphSpec& spec, Rng& rng);

}  // namespace mm
