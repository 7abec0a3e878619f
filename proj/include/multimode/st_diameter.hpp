#pragma once

#include "multimode/graph.hpp"
#include "multimode/random.hpp"

namespace mm {

// Witness pair a in S, b in T with estimate = d(a, b) in the given mode.
struct StDiameterResult {
    Vertex a = -1;
    Vertex b = -1;
    Dist estimate = 0;
};

StDiameterResult st_diameter_exact(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T);

// d(a, b) >= D_ST / 3 with two searches.
StDiameterResult st_diameter_3approx(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T);

// d(a, b) >= D_ST / 2 with high probability, O(sqrt(n) log n) searches.
StDiameterResult st_diameter_2approx(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T,
                                     Rng& rng);

}  // namespace mm
