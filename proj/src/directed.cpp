#include "multimode/directed.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace mm {

Condensation condense(const MultimodeGraph& g, int mode) {
    const int n = g.n();
    const Csr& adj = g.out(mode);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::int64_t>> calls;
    std::vector<int> emitted(n, -1);
    int counter = 0, emits = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        auto enter = [&](Vertex v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = 1;
            calls.push_back({v, adj.begin(v)});
        };
        enter(root);
        while (!calls.empty()) {
            Vertex v = calls.back().first;
            std::int64_t e = calls.back().second;
            if (e < adj.end(v)) {
                calls.back().second = e + 1;
                Vertex w = adj.nbr[e];
                if (index[w] < 0) enter(w);
                else if (on_stack[w]) low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    emitted[w] = emits;
                } while (w != v);
                ++emits;
            }
            calls.pop_back();
            if (!calls.empty()) {
                Vertex parent = calls.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    // Components complete sinks first, so reversing the emission order is topological.
    Condensation c;
    c.comp.resize(n);
    c.members.assign(emits, {});
    c.out.assign(emits, {});
    for (Vertex v = 0; v < n; ++v) {
        c.comp[v] = emits - 1 - emitted[v];
        c.members[c.comp[v]].push_back(v);
    }
    for (Vertex u = 0; u < n; ++u)
        for (auto e = adj.begin(u); e < adj.end(u); ++e) {
            int a = c.comp[u], b = c.comp[adj.nbr[e]];
            if (a != b) c.out[a].push_back(b);
        }
    for (auto& o : c.out) {
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
    }
    return c;
}

namespace {

std::optional<VertexSet> kahn(int n, const std::vector<std::vector<Vertex>>& out) {
    std::vector<int> indeg(n, 0);
    for (const auto& o : out)
        for (Vertex v : o) ++indeg[v];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    VertexSet order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Vertex v : out[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

std::vector<std::vector<Vertex>> arcs_of(const MultimodeGraph& g, int mode, bool reversed) {
    std::vector<std::vector<Vertex>> out(g.n());
    const Csr& adj = g.out(mode);
    for (Vertex u = 0; u < g.n(); ++u)
        for (auto e = adj.begin(u); e < adj.end(u); ++e) {
            if (reversed) out[adj.nbr[e]].push_back(u); else out[u].push_back(adj.nbr[e]);
        }
    return out;
}

VertexSet require_dag(const MultimodeGraph& g, int mode) {
    if (!g.directed()) throw std::invalid_argument("DAG routine needs a directed graph");
    auto order = topological_order(g, mode);
    if (!order) throw std::invalid_argument("mode " + std::to_string(mode) + " has a cycle");
    return *order;
}

// Component j is comparable with every other component iff every later component has an
// in-neighbour at or after j and every earlier one has an out-neighbour at or before j.
std::vector<char> finite_components(const Condensation& c) {
    const int N = c.size();
    std::vector<int> max_in(N, -1), min_out(N, N);
    for (int a = 0; a < N; ++a)
        for (int b : c.out[a]) {
            max_in[b] = std::max(max_in[b], a);
            min_out[a] = std::min(min_out[a], b);
        }
    std::vector<char> fin(N, 1);
    int suffix = N;  // min over later components of max_in
    for (int j = N - 1; j >= 0; --j) {
        if (suffix < j) fin[j] = 0;
        suffix = std::min(suffix, max_in[j]);
    }
    int prefix = -1;  // max over earlier components of min_out
    for (int j = 0; j < N; ++j) {
        if (prefix > j) fin[j] = 0;
        prefix = std::max(prefix, min_out[j]);
    }
    return fin;
}

}  // namespace

std::optional<VertexSet> topological_order(const MultimodeGraph& g, int mode) {
    return kahn(g.n(), arcs_of(g, mode, false));
}

std::optional<VertexSet> is_aligned(const MultimodeGraph& g) {
    if (g.k() != 2) throw std::invalid_argument("alignment needs exactly 2 modes");
    require_dag(g, 0);
    require_dag(g, 1);
    auto out = arcs_of(g, 0, false);
    auto back = arcs_of(g, 1, true);
    for (Vertex u = 0; u < g.n(); ++u) out[u].insert(out[u].end(), back[u].begin(), back[u].end());
    return kahn(g.n(), out);
}

VertexSet finite_min_ecc(const MultimodeGraph& g, int mode) {
    auto c = condense(g, mode);
    auto fin = finite_components(c);
    VertexSet r;
    for (Vertex v = 0; v < g.n(); ++v)
        if (fin[c.comp[v]]) r.push_back(v);
    return r;
}

namespace {

// Shortest distances from s, following arcs forward or backward, visiting only vertices
// whose rank lies in [lo, hi]. `dist` must be all kInf on entry and is restored on exit.
Dist restricted_max(const MultimodeGraph& g, int mode, Vertex s, bool backward, const std::vector<int>& rank,
                    int lo, int hi, std::vector<Dist>& dist) {
    const Csr& adj = backward ? g.in(mode) : g.out(mode);
    using Item = std::pair<Dist, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    VertexSet touched{s};
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != dist[u]) continue;
        for (auto e = adj.begin(u); e < adj.end(u); ++e) {
            Vertex v = adj.nbr[e];
            if (rank[v] < lo || rank[v] > hi) continue;
            Dist nd = du + adj.wt[e];
            if (nd < dist[v]) {
                if (dist[v] == kInf) touched.push_back(v);
                dist[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    Dist best = 0;
    int reached = static_cast<int>(touched.size());
    for (Vertex v : touched) {
        best = std::max(best, dist[v]);
        dist[v] = kInf;
    }
    // Every vertex of the range must be reached when all pairs are comparable.
    int want = backward ? rank[s] - lo + 1 : hi - rank[s] + 1;
    return reached == want ? best : kInf;
}

}  // namespace

Dist dag_min_diameter_2approx(const MultimodeGraph& g, int mode) {
    auto order = require_dag(g, mode);
    const int n = g.n();
    if (n <= 1) return 0;
    if (static_cast<int>(finite_min_ecc(g, mode).size()) != n) return kInf;
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<Dist> dist(n, kInf);
    Dist best = 0;
    std::vector<std::pair<int, int>> todo{{0, n - 1}};
    while (!todo.empty()) {
        auto [l, r] = todo.back();
        todo.pop_back();
        if (l >= r) continue;
        int m = l + (r - l) / 2;
        Vertex mid = order[m];
        best = std::max(best, restricted_max(g, mode, mid, false, rank, m, r, dist));
        best = std::max(best, restricted_max(g, mode, mid, true, rank, l, m, dist));
        todo.push_back({l, m - 1});
        todo.push_back({m + 1, r});
    }
    return best;
}

Dist two_mode_dag_diameter_2approx(const MultimodeGraph& g) {
    if (g.k() != 2) throw std::invalid_argument("needs exactly 2 modes");
    if (!is_aligned(g)) return kInf;
    if (g.n() <= 1) return 0;
    return std::max(dag_min_diameter_2approx(g, 0), dag_min_diameter_2approx(g, 1));
}

namespace {

struct FinitenessSearch {
    std::int64_t nodes = 0;
    int depth = 0;
    int fallbacks = 0;

    bool solve(const MultimodeGraph& g, int level) {
        ++nodes;
        depth = std::max(depth, level);
        const int n = g.n();
        if (n <= 1) return true;
        Condensation c[2] = {condense(g, 0), condense(g, 1)};
        std::vector<char> fin[2] = {finite_components(c[0]), finite_components(c[1])};
        for (Vertex v = 0; v < n; ++v)
            if (!fin[0][c[0].comp[v]] && !fin[1][c[1].comp[v]]) return false;

        // Vertices in components strictly before each component, per mode.
        std::vector<int> before[2];
        for (int p = 0; p < 2; ++p) {
            before[p].assign(c[p].size() + 1, 0);
            for (int i = 0; i < c[p].size(); ++i)
                before[p][i + 1] = before[p][i] + static_cast<int>(c[p].members[i].size());
        }
        int p = -1, s = -1;
        int fb_p = -1, fb_s = -1, fb_size = n + 1;
        for (Vertex v = 0; v < n && p < 0; ++v)
            for (int m = 0; m < 2 && p < 0; ++m) {
                int id = c[m].comp[v];
                if (!fin[m][id]) continue;
                int a = before[m][id];
                int b = n - before[m][id + 1];
                if (8 * a <= 7 * n && 8 * b <= 7 * n) {
                    p = m;
                    s = id;
                } else if (std::max(a, b) < fb_size) {
                    fb_size = std::max(a, b);
                    fb_p = m;
                    fb_s = id;
                }
            }
        if (p < 0) {
            ++fallbacks;
            p = fb_p;
            s = fb_s;
        }
        const int q = 1 - p;
        const Condensation& cp = c[p];
        const Condensation& cq = c[q];

        std::vector<char> in_s(n, 0), in_a(n, 0), in_b(n, 0);
        int tf = cq.size(), tl = -1;
        for (Vertex v = 0; v < n; ++v) {
            int id = cp.comp[v];
            if (id == s) {
                in_s[v] = 1;
                tf = std::min(tf, cq.comp[v]);
                tl = std::max(tl, cq.comp[v]);
            } else if (id < s) {
                in_a[v] = 1;
            } else {
                in_b[v] = 1;
            }
        }
        // q-components strictly between T_1 and T_l lie inside S.
        for (int t = tf + 1; t < tl; ++t)
            for (Vertex v : cq.members[t])
                if (!in_s[v]) return false;
        for (Vertex v = 0; v < n; ++v) {
            if (in_b[v] && cq.comp[v] > tf) return false;
            if (in_a[v] && cq.comp[v] < tl) return false;
        }

        std::vector<std::vector<int>> q_in(cq.size());
        for (int a = 0; a < cq.size(); ++a)
            for (int b : cq.out[a]) q_in[b].push_back(a);
        auto range_in = [&](int x, int lo, int hi) { return x >= lo && x <= hi; };
        // Every component of `from` has a direct q-edge to every component of `to`.
        auto complete = [&](const std::vector<int>& from, const std::vector<int>& to) {
            for (int u : from)
                for (int t : to)
                    if (!std::binary_search(cq.out[u].begin(), cq.out[u].end(), t)) return false;
            return true;
        };

        MultimodeGraph gb, ga;
        if (fin[q][tf]) {
            gb = reduced(g, in_b, cq.members[tf], q, true);
        } else {
            for (Vertex v : cq.members[tf])
                if (!in_s[v]) return false;
            std::vector<int> sinks, sources;
            for (int u = 0; u < tf; ++u)
                if (std::none_of(cq.out[u].begin(), cq.out[u].end(), [&](int w) { return w < tf; }))
                    sinks.push_back(u);
            for (int t = tf; t <= tl; ++t)
                if (std::none_of(q_in[t].begin(), q_in[t].end(), [&](int w) { return range_in(w, tf, tl); }))
                    sources.push_back(t);
            if (!complete(sinks, sources)) return false;
            gb = reduced(g, in_b, {}, q, true);
        }
        if (fin[q][tl]) {
            ga = reduced(g, in_a, cq.members[tl], q, false);
        } else {
            for (Vertex v : cq.members[tl])
                if (!in_s[v]) return false;
            std::vector<int> sinks, sources;
            for (int t = tf; t <= tl; ++t)
                if (std::none_of(cq.out[t].begin(), cq.out[t].end(), [&](int w) { return range_in(w, tf, tl); }))
                    sinks.push_back(t);
            for (int u = tl + 1; u < cq.size(); ++u)
                if (std::none_of(q_in[u].begin(), q_in[u].end(), [&](int w) { return w > tl; }))
                    sources.push_back(u);
            if (!complete(sinks, sources)) return false;
            ga = reduced(g, in_a, {}, q, false);
        }
        return solve(ga, level + 1) && solve(gb, level + 1);
    }

    // G[keep] plus q-edges standing in for the part of the end component T outside `keep`:
    // a representative r of T inside `keep` is joined both ways to the rest of T inside
    // `keep`; on the B side every q-edge into T from `keep` is redirected to r, on the A
    // side every q-edge out of T into `keep` leaves from r.
    static MultimodeGraph reduced(const MultimodeGraph& g, const std::vector<char>& keep, const VertexSet& T,
                                  int q, bool into) {
        const int n = g.n();
        std::vector<Vertex> to_new(n, -1);
        int m = 0;
        for (Vertex v = 0; v < n; ++v)
            if (keep[v]) to_new[v] = m++;
        std::vector<Edge> edges;
        for (const auto& e : g.edges())
            if (keep[e.u] && keep[e.v]) edges.push_back({e.mode, to_new[e.u], to_new[e.v], 1});
        Vertex r = -1;
        std::vector<char> in_t(n, 0);
        for (Vertex v : T) {
            in_t[v] = 1;
            if (keep[v] && (r < 0 || v < r)) r = v;
        }
        if (r >= 0) {
            for (Vertex x : T)
                if (keep[x] && x != r) {
                    edges.push_back({q, to_new[r], to_new[x], 1});
                    edges.push_back({q, to_new[x], to_new[r], 1});
                }
            std::vector<char> linked(n, 0);
            for (const auto& e : g.edges()) {
                if (e.mode != q) continue;
                if (into && keep[e.u] && in_t[e.v] && !keep[e.v] && !linked[e.u]) {
                    linked[e.u] = 1;
                    edges.push_back({q, to_new[e.u], to_new[r], 1});
                }
                if (!into && in_t[e.u] && !keep[e.u] && keep[e.v] && !linked[e.v]) {
                    linked[e.v] = 1;
                    edges.push_back({q, to_new[r], to_new[e.v], 1});
                }
            }
        }
        return build_graph(m, 2, true, edges);
    }
};

}  // namespace

FinitenessVerdict finite_2mode_diameter(const MultimodeGraph& g, bool want_witness) {
    if (!g.directed() || g.k() != 2) throw std::invalid_argument("needs a directed 2-mode graph");
    FinitenessSearch alg;
    FinitenessVerdict r;
    r.finite = alg.solve(g, 0);
    r.depth = alg.depth;
    r.nodes = alg.nodes;
    r.fallbacks = alg.fallbacks;
    if (!r.finite && want_witness) {
        for (Vertex u = 0; u < g.n() && !r.witness; ++u) {
            auto row = kmode_row(g, u);
            for (Vertex v = 0; v < g.n(); ++v)
                if (row[v] == kInf) {
                    r.witness = std::make_pair(u, v);
                    break;
                }
        }
    }
    return r;
}

namespace {

// For every vertex, the largest good index reaching it in mode 0 (-1 if none) and the
// smallest good index reaching it in mode 1 (k if none), excluding the vertex itself.
void reach_labels(const MultimodeGraph& g, const VertexSet& ord0, const VertexSet& ord1,
                  const std::vector<int>& gi, int k, std::vector<int>& last0, std::vector<int>& first1) {
    const int n = g.n();
    last0.assign(n, -1);
    first1.assign(n, k);
    for (Vertex v : ord0) {
        const Csr& in = g.in(0);
        for (auto e = in.begin(v); e < in.end(v); ++e) {
            Vertex u = in.nbr[e];
            last0[v] = std::max({last0[v], last0[u], gi[u]});
        }
    }
    for (Vertex v : ord1) {
        const Csr& in = g.in(1);
        for (auto e = in.begin(v); e < in.end(v); ++e) {
            Vertex u = in.nbr[e];
            first1[v] = std::min({first1[v], first1[u], gi[u] < 0 ? k : gi[u]});
        }
    }
}

}  // namespace

VertexSet dag_2mode_good_order(const MultimodeGraph& g) {
    if (g.k() != 2) throw std::invalid_argument("needs exactly 2 modes");
    auto ord0 = require_dag(g, 0);
    auto ord1 = require_dag(g, 1);
    const int n = g.n();
    std::vector<char> visited(n, 0);
    VertexSet good;
    int p2 = 0;
    for (int p1 = n - 1; p1 >= 0; --p1) {
        Vertex v = ord0[p1];
        while (p2 < n && visited[ord1[p2]]) ++p2;
        if (ord1[p2] == v) good.push_back(v);
        visited[v] = 1;
    }
    std::reverse(good.begin(), good.end());
    return good;
}

VertexSet dag_2mode_finite_ecc(const MultimodeGraph& g) {
    auto good = dag_2mode_good_order(g);
    auto ord0 = *topological_order(g, 0);
    auto ord1 = *topological_order(g, 1);
    const int n = g.n();
    std::vector<int> gi(n, -1);
    auto index_good = [&]() {
        std::fill(gi.begin(), gi.end(), -1);
        for (int i = 0; i < static_cast<int>(good.size()); ++i) gi[good[i]] = i;
    };
    index_good();
    std::vector<int> last0, first1;

    // Step 2: keep good vertices that reach every later good vertex in mode 0 and every
    // earlier one in mode 1.
    int k = static_cast<int>(good.size());
    reach_labels(g, ord0, ord1, gi, k, last0, first1);
    std::vector<char> keep(k, 1);
    int suffix = k;
    for (int i = k - 1; i >= 0; --i) {
        if (suffix < i) keep[i] = 0;
        suffix = std::min(suffix, last0[good[i]]);
    }
    int prefix = -1;
    for (int i = 0; i < k; ++i) {
        if (prefix > i) keep[i] = 0;
        prefix = std::max(prefix, first1[good[i]]);
    }
    VertexSet kept;
    for (int i = 0; i < k; ++i)
        if (keep[i]) kept.push_back(good[i]);
    good = kept;
    k = static_cast<int>(good.size());
    index_good();

    // Step 3: each bad vertex rules out the good vertices strictly between the last one
    // reaching it in mode 0 and the first one reaching it in mode 1.
    reach_labels(g, ord0, ord1, gi, k, last0, first1);
    std::vector<int> diff(k + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (gi[v] >= 0) continue;
        int a = last0[v] + 1, b = first1[v] - 1;
        if (a <= b) {
            ++diff[a];
            --diff[b + 1];
        }
    }
    VertexSet r;
    int run = 0;
    for (int i = 0; i < k; ++i) {
        run += diff[i];
        if (run == 0) r.push_back(good[i]);
    }
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace mm
