#include "multimode/radius.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

namespace {

struct Search {
    const MultimodeGraph& g;
    Dist R;
    std::int64_t nodes = 0;

    // d > 3R
    bool beyond(Dist d) const { return d == kInf || d > 3 * R; }

    std::optional<CenterFound> run(std::vector<char>& colours, const VertexSet& W) {
        ++nodes;
        Vertex x = W.front();
        auto row = kmode_row(g, x);
        Vertex y = -1;
        Dist ecc = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            ecc = std::max(ecc, row[v]);
            if (y < 0 && beyond(row[v])) y = v;
        }
        if (y < 0) return CenterFound{x, ecc};
        for (int i = 0; i < g.k(); ++i) {
            if (colours[i]) continue;
            auto dy = sssp(g, i, y).dist;
            VertexSet next;
            for (Vertex w : W)
                if (dy[w] != kInf && dy[w] <= R) next.push_back(w);
            if (next.empty()) continue;
            colours[i] = 1;
            auto r = run(colours, next);
            colours[i] = 0;
            if (r) return r;
        }
        return std::nullopt;
    }
};

}  // namespace

std::int64_t radius_node_bound(int k) {
    std::int64_t total = 0, term = 1;
    for (int j = 0; j <= k; ++j) {
        total += term;
        term *= (k - j);
    }
    return total;
}

RadiusDecision radius_3approx_decision(const MultimodeGraph& g, Dist R) {
    if (g.directed()) throw std::invalid_argument("radius approximation needs an undirected graph");
    if (R < 0) throw std::invalid_argument("radius threshold must be non-negative");
    RadiusDecision out;
    if (g.n() == 0) return out;
    Search s{g, R};
    std::vector<char> colours(g.k(), 0);
    VertexSet all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    out.found = s.run(colours, all);
    out.nodes = s.nodes;
    return out;
}

RadiusEstimate binary_search_radius(const MultimodeGraph& g, Dist lo, Dist hi) {
    if (hi < 0) hi = static_cast<Dist>(std::max(1, g.n())) * g.max_weight();
    if (lo > hi) throw std::invalid_argument("empty threshold range");
    RadiusEstimate r;
    auto attempt = [&](Dist R) {
        auto d = radius_3approx_decision(g, R);
        ++r.decision_calls;
        r.nodes += d.nodes;
        if (d.found && (r.center < 0 || d.found->ecc < r.estimate)) {
            r.center = d.found->center;
            r.estimate = d.found->ecc;
        }
        return d.found.has_value();
    };
    if (!attempt(hi)) {
        r.infinite = true;
        r.threshold = hi;
        if (g.n() > 0) r.center = 0;
        return r;
    }
    Dist l = lo, h = hi;
    while (l < h) {
        Dist mid = l + (h - l) / 2;
        if (attempt(mid)) h = mid; else l = mid + 1;
    }
    r.threshold = h;
    // The reported value is the exact eccentricity of the centre, recomputed.
    auto row = kmode_row(g, r.center);
    r.estimate = *std::max_element(row.begin(), row.end());
    return r;
}

}  // namespace mm
