#include "multimode/st_diameter.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

namespace {

void check_args(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T, bool undirected) {
    if (S.empty() || T.empty()) throw std::invalid_argument("ST-diameter needs non-empty S and T");
    if (mode < 0 || mode >= g.k()) throw std::out_of_range("mode out of range");
    if (undirected && g.directed()) throw std::invalid_argument("ST-diameter approximation needs an undirected mode");
}

// Farthest member of `set` under `d`, lowest id on ties.
Vertex argmax(const std::vector<Dist>& d, const VertexSet& set) {
    Vertex best = -1;
    for (Vertex v : set)
        if (best < 0 || d[v] > d[best] || (d[v] == d[best] && v < best)) best = v;
    return best;
}

struct Best {
    StDiameterResult r;
    bool any = false;
    void offer(Vertex a, Vertex b, Dist d) {
        if (!any || d > r.estimate) {
            r = {a, b, d};
            any = true;
        }
    }
};

Vertex lowest(const VertexSet& s) { return *std::min_element(s.begin(), s.end()); }

}  // namespace

StDiameterResult st_diameter_exact(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T) {
    check_args(g, mode, S, T, false);
    VertexSet ss = S;
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    Best best;
    for (Vertex s : ss) {
        auto dm = sssp(g, mode, s);
        Vertex t = argmax(dm.dist, T);
        best.offer(s, t, dm.dist[t]);
    }
    return best.r;
}

StDiameterResult st_diameter_3approx(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T) {
    check_args(g, mode, S, T, true);
    Vertex s = lowest(S);
    auto ds = sssp(g, mode, s);
    Vertex t1 = argmax(ds.dist, T);
    auto dt = sssp(g, mode, t1);
    Vertex s1 = argmax(dt.dist, S);
    Best best;
    best.offer(s, t1, ds.dist[t1]);
    best.offer(s1, t1, dt.dist[s1]);
    return best.r;
}

namespace {

// One orientation of the sampled search: P plays the side whose far-from-sample member
// anchors the ball, Q the opposite side. Candidates are reported as (p, q) pairs.
void sampled_pass(const MultimodeGraph& g, int mode, const VertexSet& P, const VertexSet& Q,
                  const VertexSet& sample, const std::vector<Dist>& to_sample, bool p_is_s, Best& best) {
    auto offer = [&](Vertex p, Vertex q, Dist d) {
        if (p_is_s) best.offer(p, q, d); else best.offer(q, p, d);
    };
    auto qmask = mask_of(g.n(), Q);
    auto pmask = mask_of(g.n(), P);
    // From each sampled vertex go to its farthest Q-vertex, then back to the farthest P-vertex.
    for (Vertex w : sample) {
        auto dw = sssp(g, mode, w);
        Vertex q = argmax(dw.dist, Q);
        auto dq = sssp(g, mode, q);
        Vertex p = argmax(dq.dist, P);
        offer(p, q, dq.dist[p]);
    }
    // The P-vertex farthest from the sample, and the ball around it that holds no sampled vertex.
    Vertex pf = argmax(to_sample, P);
    Dist h = to_sample[pf];
    auto dp = sssp(g, mode, pf);
    Vertex qf = argmax(dp.dist, Q);
    offer(pf, qf, dp.dist[qf]);
    for (Vertex u = 0; u < g.n(); ++u) {
        if (!(dp.dist[u] < h)) continue;
        auto du = sssp(g, mode, u);
        Vertex p = argmax(du.dist, P);
        if (qmask[u]) offer(p, u, du.dist[p]);
        if (pmask[u]) {
            Vertex q = argmax(du.dist, Q);
            offer(u, q, du.dist[q]);
        }
        auto dpp = sssp(g, mode, p);
        Vertex q = argmax(dpp.dist, Q);
        offer(p, q, dpp.dist[q]);
    }
}

}  // namespace

StDiameterResult st_diameter_2approx(const MultimodeGraph& g, int mode, const VertexSet& S, const VertexSet& T,
                                     Rng& rng) {
    check_args(g, mode, S, T, true);
    Best best;
    auto three = st_diameter_3approx(g, mode, S, T);
    best.offer(three.a, three.b, three.estimate);
    int n = g.n();
    VertexSet sample = sample_vertices(n, hitting_set_size(n, 1.0, 0.5), rng);
    auto to_sample = multi_source_sssp(g, mode, sample).dist;
    sampled_pass(g, mode, S, T, sample, to_sample, true, best);
    sampled_pass(g, mode, T, S, sample, to_sample, false, best);
    return best.r;
}

}  // namespace mm
