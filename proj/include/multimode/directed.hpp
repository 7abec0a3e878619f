#pragma once

#include <optional>

#include "multimode/graph.hpp"

namespace mm {

// Strongly connected components of one mode. Component ids follow a topological order
// of the condensation (sources first).
struct Condensation {
    std::vector<int> comp;
    std::vector<VertexSet> members;
    std::vector<std::vector<int>> out;

    int size() const { return static_cast<int>(members.size()); }
};

Condensation condense(const MultimodeGraph& g, int mode);

// Kahn's algorithm with the lowest ready id first; nullopt on a cycle.
std::optional<VertexSet> topological_order(const MultimodeGraph& g, int mode);

// An order that is topological in mode 0 and reversed topological in mode 1, if one exists.
std::optional<VertexSet> is_aligned(const MultimodeGraph& g);

// Vertices whose min-eccentricity in `mode` is finite.
VertexSet finite_min_ecc(const MultimodeGraph& g, int mode);

// min-diam / 2 <= estimate <= min-diam for one acyclic mode; kInf when some pair is incomparable.
Dist dag_min_diameter_2approx(const MultimodeGraph& g, int mode);

// D / 2 <= estimate <= D on a 2-mode DAG; kInf when the modes are not aligned.
Dist two_mode_dag_diameter_2approx(const MultimodeGraph& g);

struct FinitenessVerdict {
    bool finite = true;
    // A pair with d_G(a, b) infinite, filled in when the verdict is Infinite.
    std::optional<std::pair<Vertex, Vertex>> witness;
    int depth = 0;
    std::int64_t nodes = 0;
    // Times no finite SCC met the 7n/8 size bound.
    int fallbacks = 0;
};

FinitenessVerdict finite_2mode_diameter(const MultimodeGraph& g, bool want_witness = true);

// Step 1 of the finite-eccentricity procedure: the good vertices v_1..v_k, increasing in
// mode 0 and decreasing in mode 1.
VertexSet dag_2mode_good_order(const MultimodeGraph& g);

// Vertices with finite 2-mode eccentricity in a 2-mode DAG.
VertexSet dag_2mode_finite_ecc(const MultimodeGraph& g);

}  // namespace mm
