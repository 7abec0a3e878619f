#include "multimode/undirected_diameter.hpp"

#include <algorithm>
#include <stdexcept>

#include "multimode/st_diameter.hpp"

namespace mm {

namespace {

void require_modes(const MultimodeGraph& g, int k) {
    if (g.directed()) throw std::invalid_argument("algorithm needs an undirected graph");
    if (g.k() != k) throw std::invalid_argument("algorithm needs exactly " + std::to_string(k) + " modes");
}

std::vector<Dist> entrywise_min(const std::vector<Dist>& a, const std::vector<Dist>& b) {
    std::vector<Dist> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Vertex argmax_all(const std::vector<Dist>& d) {
    Vertex best = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(d.size()); ++v)
        if (d[v] > d[best]) best = v;
    return best;
}

// d < D/3
bool under_third(Dist d, Dist D) { return d != kInf && 3 * d < D; }

}  // namespace

DecisionOutcome certify(const MultimodeGraph& g, Vertex a, Vertex b) {
    return {true, a, b, kmode_distance(g, a, b)};
}

PairEstimate three_approx_2mode(const MultimodeGraph& g, Vertex start) {
    require_modes(g, 2);
    if (start < 0 || start >= g.n()) throw std::out_of_range("start vertex out of range");
    auto d1 = sssp(g, 0, start).dist;
    auto d2 = sssp(g, 1, start).dist;
    VertexSet xs, ys;
    for (Vertex v = 0; v < g.n(); ++v) (d1[v] < d2[v] ? xs : ys).push_back(v);

    PairEstimate best{start, start, 0};
    auto offer = [&](Vertex a, Vertex b, Dist d) {
        if (d > best.estimate) best = {a, b, d};
    };
    // d_G(z, v) = d1 on X and d2 on Y.
    for (Vertex v : xs) offer(start, v, d1[v]);
    for (Vertex v : ys) offer(start, v, d2[v]);
    if (xs.empty()) return best;

    auto from_x = multi_source_sssp(g, 0, xs).dist;
    auto from_y = multi_source_sssp(g, 1, ys).dist;
    Vertex y = ys.front();
    for (Vertex v : ys)
        if (from_x[v] > from_x[y]) y = v;
    Vertex x = xs.front();
    for (Vertex v : xs)
        if (from_y[v] > from_y[x]) x = v;
    offer(x, y, kmode_distance(g, x, y));
    return best;
}

AlphaTrace sp_alpha_trace(const MultimodeGraph& g, Vertex z, const AlphaParams& p) {
    require_modes(g, 2);
    if (z < 0 || z >= g.n()) throw std::out_of_range("seed vertex out of range");
    const int n = g.n();
    AlphaTrace t;
    auto d1 = sssp(g, 0, z).dist;
    auto d2 = sssp(g, 1, z).dist;
    auto dz = entrywise_min(d1, d2);
    Vertex far = argmax_all(dz);
    if (p.reaches(dz[far])) t.incidental = {true, z, far, dz[far]};

    Radius seed = p.r_seed(), near = p.r_near(), farr = p.r_far();
    for (Vertex v = 0; v < n; ++v) {
        if (seed.admits(d1[v])) t.xs.push_back(v);
        if (seed.admits(d2[v])) t.ys.push_back(v);
    }
    const int nx = static_cast<int>(t.xs.size());
    const int ny = static_cast<int>(t.ys.size());

    // Row i of `inner` marks the near ball of centre i; row i of `outer_t` marks the
    // complement of its far ball (transposed into a V-row matrix afterwards).
    auto build = [&](const VertexSet& centres, int mode, BoolMatrix& inner, BoolMatrix& outer) {
        const int c = static_cast<int>(centres.size());
        inner = BoolMatrix(c, n);
        BoolMatrix outer_t(c, n);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < c; ++i) {
            auto d = sssp(g, mode, centres[i]).dist;
            for (Vertex u = 0; u < n; ++u) {
                if (near.admits(d[u])) inner.set(i, u);
                if (!farr.admits(d[u])) outer_t.set(i, u);
            }
        }
        outer = outer_t.transpose();
    };
    build(t.xs, 0, t.mx1, t.mx2);
    build(t.ys, 1, t.my1, t.my2);

    if (nx > 0 && ny > 0) {
        auto xy = bool_matmul(t.mx1, t.my2);
        auto yx = bool_matmul(t.my1, t.mx2);
        t.z = xy & yx.transpose();
    } else {
        t.z = BoolMatrix(nx, ny);
    }
    return t;
}

DecisionOutcome sp_alpha_approx(const MultimodeGraph& g, Vertex z, const AlphaParams& p) {
    auto t = sp_alpha_trace(g, z, p);
    if (t.incidental.witness) return t.incidental;
    auto [i, j] = t.z.first_set();
    if (i < 0) return DecisionOutcome::below();
    auto dx = sssp(g, 0, t.xs[i]).dist;
    auto dy = sssp(g, 1, t.ys[j]).dist;
    Radius near = p.r_near(), far = p.r_far();
    Vertex a = -1, b = -1;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (a < 0 && near.admits(dx[u]) && !far.admits(dy[u])) a = u;
        if (b < 0 && near.admits(dy[u]) && !far.admits(dx[u])) b = u;
    }
    if (a < 0 || b < 0) throw std::logic_error("Z entry without a matching set pair");
    auto w = certify(g, a, b);
    if (!p.reaches(w.d)) throw std::logic_error("alpha pair below its proven bound");
    return w;
}

DecisionOutcome two_approx_decision(const MultimodeGraph& g, Dist D, double delta, Rng& rng) {
    require_modes(g, 2);
    const int n = g.n();
    AlphaParams p{1, 2, D, g.max_weight()};
    Radius near = p.r_near(), far = p.r_far();
    VertexSet sample = sample_vertices(n, hitting_set_size(n, kSampleConstant, delta), rng);
    std::vector<char> covered(n, 0);
    for (Vertex x : sample) {
        std::vector<Dist> d[2] = {sssp(g, 0, x).dist, sssp(g, 1, x).dist};
        auto dx = entrywise_min(d[0], d[1]);
        Vertex f = argmax_all(dx);
        if (p.reaches(dx[f])) return {true, x, f, dx[f]};
        for (Vertex v = 0; v < n; ++v)
            if (near.admits(d[0][v]) || near.admits(d[1][v])) covered[v] = 1;
        for (int i = 0; i < 2; ++i) {
            VertexSet A, B;
            for (Vertex v = 0; v < n; ++v) {
                if (near.admits(d[i][v])) A.push_back(v);
                if (!far.admits(d[i][v])) B.push_back(v);
            }
            if (A.empty() || B.empty()) continue;
            auto st = st_diameter_2approx(g, 1 - i, A, B, rng);
            auto w = certify(g, st.a, st.b);
            if (p.reaches(w.d)) return w;
        }
    }
    for (Vertex z = 0; z < n; ++z)
        if (!covered[z]) return sp_alpha_approx(g, z, p);
    return DecisionOutcome::below();
}

DecisionOutcome two_half_approx_decision(const MultimodeGraph& g, Dist D, double delta, Rng& rng, YBand band) {
    require_modes(g, 2);
    const int n = g.n();
    const std::int64_t M = g.max_weight();
    AlphaParams p{2, 5, D, M};
    Radius cover = p.r_seed();
    // Band [c - M/2, c + M/2] scaled by 10: c = D/2 -> 5D, c = 2D/5 -> 4D.
    const std::int64_t centre10 = band == YBand::Half ? 5 * D : 4 * D;
    auto in_band = [&](Dist d) { return d != kInf && 10 * d >= centre10 - 5 * M && 10 * d <= centre10 + 5 * M; };

    VertexSet sample = sample_vertices(n, hitting_set_size(n, kSampleConstant, delta), rng);
    std::vector<char> covered(n, 0);
    for (Vertex x : sample) {
        std::vector<Dist> d[2] = {sssp(g, 0, x).dist, sssp(g, 1, x).dist};
        auto dx = entrywise_min(d[0], d[1]);
        Vertex f = argmax_all(dx);
        if (p.reaches(dx[f])) return {true, x, f, dx[f]};
        for (Vertex v = 0; v < n; ++v)
            if (cover.admits(d[0][v]) || cover.admits(d[1][v])) covered[v] = 1;
        for (int i = 0; i < 2; ++i) {
            Vertex y = -1;
            for (Vertex v = 0; v < n && y < 0; ++v)
                if (in_band(d[i][v])) y = v;
            if (y < 0) continue;
            auto row = kmode_row(g, y);
            Vertex q = argmax_all(row);
            if (p.reaches(row[q])) return {true, y, q, row[q]};
        }
    }
    for (Vertex z = 0; z < n; ++z)
        if (!covered[z]) return sp_alpha_approx(g, z, p);
    return DecisionOutcome::below();
}

DecisionOutcome three_mode_three_approx_decision(const MultimodeGraph& g, Dist D) {
    require_modes(g, 3);
    const int n = g.n();
    if (n == 0) return DecisionOutcome::below();
    const Vertex p = 0;
    std::vector<Dist> dp[3] = {sssp(g, 0, p).dist, sssp(g, 1, p).dist, sssp(g, 2, p).dist};
    VertexSet part[3];
    for (Vertex v = 0; v < n; ++v) {
        if (under_third(dp[0][v], D)) part[0].push_back(v);
        else if (under_third(dp[1][v], D)) part[1].push_back(v);
        else part[2].push_back(v);
    }
    for (Vertex v : part[2])
        if (!under_third(dp[2][v], D)) return certify(g, p, v);

    // Set pairs (P, Q) with the balls' colours equal to their indices; r is the third colour.
    const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& pr : pairs) {
        const VertexSet& P = part[pr[0]];
        const VertexSet& Q = part[pr[1]];
        const int r = pr[2];
        if (P.empty() || Q.empty()) continue;
        auto from_p = multi_source_sssp(g, pr[0], P).dist;
        auto from_q = multi_source_sssp(g, pr[1], Q).dist;
        VertexSet P1, Q1;
        for (Vertex u : P)
            if (!under_third(from_q[u], D)) P1.push_back(u);
        for (Vertex v : Q)
            if (!under_third(from_p[v], D)) Q1.push_back(v);
        if (P1.empty() || Q1.empty()) continue;
        Vertex xh = P1.front(), yh = Q1.front();
        auto dx = sssp(g, r, xh).dist;
        for (Vertex v : Q1)
            if (!under_third(dx[v], D)) return certify(g, xh, v);
        auto dy = sssp(g, r, yh).dist;
        for (Vertex u : P1)
            if (!under_third(dy[u], D)) return certify(g, u, yh);
    }
    return DecisionOutcome::below();
}

DiameterEstimate binary_search_diameter(const MultimodeGraph& g, const DiameterDecision& decide, Dist lo,
                                        Dist hi) {
    if (hi < 0) hi = static_cast<Dist>(std::max(1, g.n())) * g.max_weight();
    if (lo > hi) throw std::invalid_argument("empty threshold range");
    DiameterEstimate r;
    auto take = [&](const DecisionOutcome& o) {
        if (o.witness && (r.a < 0 || o.d > r.estimate)) {
            r.estimate = o.d;
            r.a = o.a;
            r.b = o.b;
        }
    };
    auto first = decide(lo);
    ++r.decision_calls;
    if (!first.witness) {
        r.fallback = true;
        if (g.n() > 0) {
            auto row = kmode_row(g, 0);
            Vertex f = argmax_all(row);
            r.a = 0;
            r.b = f;
            r.estimate = row[f];
        }
        return r;
    }
    take(first);
    Dist l = lo, h = hi;
    while (l < h && r.estimate != kInf) {
        Dist mid = l + (h - l + 1) / 2;
        auto o = decide(mid);
        ++r.decision_calls;
        if (o.witness) {
            take(o);
            l = mid;
        } else {
            h = mid - 1;
        }
    }
    r.largest_threshold = l;
    return r;
}

}  // namespace mm
