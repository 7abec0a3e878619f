#pragma once

#include <functional>

#include "multimode/graph.hpp"
#include "multimode/kernels.hpp"
#include "multimode/random.hpp"

namespace mm {

// Either a certified pair with d = d_G(a, b), or Below: the diameter is under the threshold.
struct DecisionOutcome {
    bool witness = false;
    Vertex a = -1;
    Vertex b = -1;
    Dist d = 0;

    static DecisionOutcome below() { return {}; }
};

// Recomputes d_G(a, b) from scratch.
DecisionOutcome certify(const MultimodeGraph& g, Vertex a, Vertex b);

struct PairEstimate {
    Vertex a = -1;
    Vertex b = -1;
    Dist estimate = 0;
};

// Linear-time 3-approximation of the 2-mode diameter, starting from `start`.
PairEstimate three_approx_2mode(const MultimodeGraph& g, Vertex start = 0);

// alpha = num/den in (1/3, 1/2], threshold D, weight bound M. Radii share the denominator 2*den.
struct AlphaParams {
    std::int64_t num = 1;
    std::int64_t den = 2;
    Dist D = 0;
    std::int64_t M = 1;

    // (1 - alpha) D / 2 + M / 2
    Radius r_near() const { return {(den - num) * D + den * M, 2 * den}; }
    // (1 + alpha) D / 2 - M / 2
    Radius r_far() const { return {(den + num) * D - den * M, 2 * den}; }
    // (3 alpha - 1) D / 2 + M / 2
    Radius r_seed() const { return {(3 * num - den) * D + den * M, 2 * den}; }
    // d >= alpha D - M
    bool reaches(Dist d) const { return d == kInf || den * d >= num * D - den * M; }
};

// Everything sp_alpha_approx builds before picking a pair. Rows of mx1 / my1 are indexed by
// position in xs / ys; mx2 is V x X and my2 is V x Y.
struct AlphaTrace {
    VertexSet xs;
    VertexSet ys;
    BoolMatrix mx1, mx2, my1, my2;
    BoolMatrix z;
    DecisionOutcome incidental;
};

AlphaTrace sp_alpha_trace(const MultimodeGraph& g, Vertex z, const AlphaParams& p);
DecisionOutcome sp_alpha_approx(const MultimodeGraph& g, Vertex z, const AlphaParams& p);

// Sample size constant in ceil(c * n^(1-delta) * ln n).
inline constexpr double kSampleConstant = 2.0;

DecisionOutcome two_approx_decision(const MultimodeGraph& g, Dist D, double delta, Rng& rng);

enum class YBand { Half, TwoFifths };

DecisionOutcome two_half_approx_decision(const MultimodeGraph& g, Dist D, double delta, Rng& rng,
                                         YBand band = YBand::Half);

DecisionOutcome three_mode_three_approx_decision(const MultimodeGraph& g, Dist D);

struct DiameterEstimate {
    Dist estimate = 0;
    Vertex a = -1;
    Vertex b = -1;
    Dist largest_threshold = 0;
    int decision_calls = 0;
    // The decision said Below at lo; the estimate comes from one eccentricity search.
    bool fallback = false;
};

using DiameterDecision = std::function<DecisionOutcome(Dist)>;

// hi < 0 means n * M.
DiameterEstimate binary_search_diameter(const MultimodeGraph& g, const DiameterDecision& decide, Dist lo = 0,
                                        Dist hi = -1);

}  // namespace mm
