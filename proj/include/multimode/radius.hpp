#pragma once

#include <optional>

#include "multimode/graph.hpp"

namespace mm {

struct CenterFound {
    Vertex center = -1;
    Dist ecc = kInf;
};

struct RadiusDecision {
    std::optional<CenterFound> found;
    // Recursion calls made, at most sum_j k!/(k-j)! <= e * k!.
    std::int64_t nodes = 0;
};

// Some vertex with ecc <= 3R, or nothing when R(G) > R.
RadiusDecision radius_3approx_decision(const MultimodeGraph& g, Dist R);

// Bound on the node counter for k modes: sum over j of k!/(k-j)!.
std::int64_t radius_node_bound(int k);

struct RadiusEstimate {
    Vertex center = -1;
    Dist estimate = kInf;
    Dist threshold = 0;
    std::int64_t nodes = 0;
    int decision_calls = 0;
    // No threshold up to hi succeeded: every vertex has infinite eccentricity.
    bool infinite = false;
};

// hi < 0 means n * M.
RadiusEstimate binary_search_radius(const MultimodeGraph& g, Dist lo = 0, Dist hi = -1);

}  // namespace mm
