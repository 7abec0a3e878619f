#include "multimode/graph.hpp"

#include <algorithm>
#include <atomic>
#include <queue>

namespace mm {

namespace {

std::atomic<std::uint64_t> g_searches{0};

Csr make_csr(int n, const std::vector<std::pair<Vertex, std::pair<Vertex, std::int64_t>>>& arcs) {
    Csr c;
    c.off.assign(n + 1, 0);
    for (const auto& a : arcs) c.off[a.first + 1]++;
    for (int v = 0; v < n; ++v) c.off[v + 1] += c.off[v];
    c.nbr.resize(arcs.size());
    c.wt.resize(arcs.size());
    std::vector<std::int64_t> pos(c.off.begin(), c.off.end() - 1);
    for (const auto& a : arcs) {
        auto p = pos[a.first]++;
        c.nbr[p] = a.second.first;
        c.wt[p] = a.second.second;
    }
    return c;
}

void bfs(const Csr& adj, std::vector<Dist>& d, std::vector<Vertex>& queue) {
    std::size_t head = 0;
    while (head < queue.size()) {
        Vertex u = queue[head++];
        Dist du = d[u] + 1;
        for (auto e = adj.begin(u); e < adj.end(u); ++e) {
            Vertex v = adj.nbr[e];
            if (d[v] == kInf) {
                d[v] = du;
                queue.push_back(v);
            }
        }
    }
}

void dijkstra(const Csr& adj, std::vector<Dist>& d, const VertexSet& seeds) {
    using Item = std::pair<Dist, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex s : seeds) pq.push({0, s});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != d[u]) continue;
        for (auto e = adj.begin(u); e < adj.end(u); ++e) {
            Vertex v = adj.nbr[e];
            Dist nd = du + adj.wt[e];
            if (nd < d[v]) {
                d[v] = nd;
                pq.push({nd, v});
            }
        }
    }
}

void check_vertex(const MultimodeGraph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void check_mode(const MultimodeGraph& g, int mode) {
    if (mode < 0 || mode >= g.k()) throw std::out_of_range("mode " + std::to_string(mode) + " out of range");
}

}  // namespace

std::string dist_str(Dist d) { return d == kInf ? std::string("inf") : std::to_string(d); }

MultimodeGraph build_graph(int n, int k, bool directed, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (k < 1) throw std::invalid_argument("mode count must be at least 1");
    MultimodeGraph g;
    g.n_ = n;
    g.k_ = k;
    g.directed_ = directed;
    g.edges_ = edges;
    std::vector<std::vector<std::pair<Vertex, std::pair<Vertex, std::int64_t>>>> fw(k), bw(k);
    std::int64_t maxw = 0;
    g.unit_.assign(k, 1);
    for (const auto& e : edges) {
        if (e.mode < 0 || e.mode >= k) throw std::invalid_argument("edge mode out of range");
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.w < 0) throw std::invalid_argument("negative edge weight");
        maxw = std::max(maxw, e.w);
        if (e.w != 1) g.unit_[e.mode] = 0;
        fw[e.mode].push_back({e.u, {e.v, e.w}});
        if (directed) {
            bw[e.mode].push_back({e.v, {e.u, e.w}});
        } else if (e.u != e.v) {
            fw[e.mode].push_back({e.v, {e.u, e.w}});
        }
    }
    g.max_weight_ = std::max<std::int64_t>(1, maxw);
    for (int m = 0; m < k; ++m) {
        g.fwd_.push_back(make_csr(n, fw[m]));
        if (directed) g.rev_.push_back(make_csr(n, bw[m]));
    }
    return g;
}

std::uint64_t search_count() { return g_searches.load(std::memory_order_relaxed); }
void reset_search_count() { g_searches.store(0, std::memory_order_relaxed); }

DistanceMap multi_source_sssp(const MultimodeGraph& g, int mode, const VertexSet& sources, bool reverse) {
    check_mode(g, mode);
    if (sources.empty()) throw std::invalid_argument("multi-source search needs at least one source");
    g_searches.fetch_add(1, std::memory_order_relaxed);
    DistanceMap dm;
    dm.mode = mode;
    dm.sources = sources;
    dm.dist.assign(g.n(), kInf);
    const Csr& adj = reverse ? g.in(mode) : g.out(mode);
    VertexSet seeds;
    seeds.reserve(sources.size());
    for (Vertex s : sources) {
        check_vertex(g, s);
        if (dm.dist[s] != 0) {
            dm.dist[s] = 0;
            seeds.push_back(s);
        }
    }
    if (g.unit_weights(mode)) {
        bfs(adj, dm.dist, seeds);
    } else {
        dijkstra(adj, dm.dist, seeds);
    }
    return dm;
}

DistanceMap sssp(const MultimodeGraph& g, int mode, Vertex source, bool reverse) {
    check_vertex(g, source);
    return multi_source_sssp(g, mode, VertexSet{source}, reverse);
}

VertexSet ball_of(const DistanceMap& dm, Radius r) {
    VertexSet out;
    for (std::size_t v = 0; v < dm.dist.size(); ++v)
        if (r.admits(dm.dist[v])) out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet ball(const MultimodeGraph& g, int mode, Vertex v, Radius r) { return ball_of(sssp(g, mode, v), r); }

VertexSet ball(const MultimodeGraph& g, int mode, Vertex v, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("negative ball radius");
    return ball(g, mode, v, Radius::of(r));
}

std::vector<Dist> kmode_row(const MultimodeGraph& g, Vertex source, bool reverse) {
    std::vector<Dist> row(g.n(), kInf);
    for (int m = 0; m < g.k(); ++m) {
        auto dm = sssp(g, m, source, reverse);
        for (int v = 0; v < g.n(); ++v) row[v] = std::min(row[v], dm.dist[v]);
    }
    return row;
}

Dist kmode_distance(const MultimodeGraph& g, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) return 0;
    Dist best = kInf;
    for (int m = 0; m < g.k(); ++m) best = std::min(best, sssp(g, m, u).dist[v]);
    return best;
}

namespace {

ExactParameters summarize(const MultimodeGraph& g, std::vector<Dist> ecc, std::vector<Vertex> far) {
    ExactParameters p;
    p.ecc = std::move(ecc);
    if (g.n() == 0) return p;
    p.diameter = p.ecc[0];
    p.radius = p.ecc[0];
    p.diam_a = 0;
    p.diam_b = far[0];
    p.center = 0;
    for (int u = 1; u < g.n(); ++u) {
        if (p.ecc[u] > p.diameter) {
            p.diameter = p.ecc[u];
            p.diam_a = u;
            p.diam_b = far[u];
        }
        if (p.ecc[u] < p.radius) {
            p.radius = p.ecc[u];
            p.center = u;
        }
    }
    return p;
}

void ecc_of(const MultimodeGraph& g, Vertex u, Dist& ecc, Vertex& far) {
    auto row = kmode_row(g, u);
    ecc = 0;
    far = u;
    for (int v = 0; v < g.n(); ++v) {
        if (row[v] > ecc) {
            ecc = row[v];
            far = v;
        }
    }
}

}  // namespace

ExactParameters exact_parameters_serial(const MultimodeGraph& g) {
    std::vector<Dist> ecc(g.n());
    std::vector<Vertex> far(g.n());
    for (int u = 0; u < g.n(); ++u) ecc_of(g, u, ecc[u], far[u]);
    return summarize(g, std::move(ecc), std::move(far));
}

ExactParameters exact_parameters(const MultimodeGraph& g) {
    std::vector<Dist> ecc(g.n());
    std::vector<Vertex> far(g.n());
#pragma omp parallel for schedule(dynamic, 4)
    for (int u = 0; u < g.n(); ++u) ecc_of(g, u, ecc[u], far[u]);
    return summarize(g, std::move(ecc), std::move(far));
}

DistanceMatrix exact_apsp_serial(const MultimodeGraph& g) {
    DistanceMatrix m(g.n(), g.n());
    for (int u = 0; u < g.n(); ++u) {
        auto row = kmode_row(g, u);
        std::copy(row.begin(), row.end(), m.row(u));
    }
    return m;
}

DistanceMatrix exact_apsp(const MultimodeGraph& g) {
    DistanceMatrix m(g.n(), g.n());
#pragma omp parallel for schedule(dynamic, 4)
    for (int u = 0; u < g.n(); ++u) {
        auto row = kmode_row(g, u);
        std::copy(row.begin(), row.end(), m.row(u));
    }
    return m;
}

Induced induced_subgraph(const MultimodeGraph& g, const VertexSet& subset) {
    Induced r;
    r.to_new.assign(g.n(), -1);
    for (Vertex v : subset) {
        check_vertex(g, v);
        if (r.to_new[v] == -1) {
            r.to_new[v] = static_cast<Vertex>(r.to_old.size());
            r.to_old.push_back(v);
        }
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (r.to_new[e.u] >= 0 && r.to_new[e.v] >= 0) es.push_back({e.mode, r.to_new[e.u], r.to_new[e.v], e.w});
    }
    r.graph = build_graph(static_cast<int>(r.to_old.size()), g.k(), g.directed(), es);
    return r;
}

std::vector<char> mask_of(int n, const VertexSet& s) {
    std::vector<char> m(n, 0);
    for (Vertex v : s) m[v] = 1;
    return m;
}

}  // namespace mm
