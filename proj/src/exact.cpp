#include "multimode/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "multimode/kernels.hpp"

namespace mm {

std::int64_t reduction_weight(int n, std::int64_t M) {
    std::int64_t w = static_cast<std::int64_t>(n) * M + 1;
    return w % 2 == 0 ? w : w + 1;
}

namespace {

ReducedGraph reduce(const MultimodeGraph& g, bool with_y) {
    const int n = g.n(), k = g.k();
    ReducedGraph r;
    r.W = reduction_weight(n, g.max_weight());
    r.offset = 2 * r.W;
    r.hub_x = n + k * n;
    int total = r.hub_x + 1;
    if (with_y) r.hub_y = total++;
    const bool dir = g.directed();
    std::vector<Edge> edges;
    auto link = [&](Vertex u, Vertex v, std::int64_t w) {
        edges.push_back({0, u, v, w});
        if (dir) edges.push_back({0, v, u, w});
    };
    for (const auto& e : g.edges()) edges.push_back({0, r.copy_of(e.u, e.mode, n), r.copy_of(e.v, e.mode, n), e.w});
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i) {
            link(v, r.copy_of(v, i, n), r.W);
            link(r.hub_x, r.copy_of(v, i, n), r.W / 2);
        }
    if (with_y)
        for (Vertex v = 0; v < n; ++v) link(r.hub_y, v, 2 * r.W);
    r.graph = build_graph(total, 1, dir, edges);
    return r;
}

}  // namespace

ReducedGraph reduce_to_standard_diameter(const MultimodeGraph& g) { return reduce(g, false); }
ReducedGraph reduce_to_standard_radius(const MultimodeGraph& g) { return reduce(g, true); }

std::int64_t SignedGraph::max_abs_weight() const {
    std::int64_t m = 1;
    for (const auto& e : edges) m = std::max(m, e.w < 0 ? -e.w : e.w);
    return m;
}

SignedGraph to_signed(const MultimodeGraph& g) {
    SignedGraph s{g.n(), g.k(), {}};
    for (const auto& e : g.edges()) {
        s.edges.push_back(e);
        if (!g.directed() && e.u != e.v) s.edges.push_back({e.mode, e.v, e.u, e.w});
    }
    return s;
}

DistanceMatrix kmode_apsp_trivial(const MultimodeGraph& g) { return exact_apsp(g); }

namespace {

// One-hop table of a mode: 0 on the diagonal, lightest parallel arc elsewhere.
DistanceMatrix one_hop(const SignedGraph& g, int mode) {
    DistanceMatrix m(g.n, g.n);
    for (int v = 0; v < g.n; ++v) m.at(v, v) = 0;
    for (const auto& e : g.edges)
        if (e.mode == mode) m.at(e.u, e.v) = std::min(m.at(e.u, e.v), e.w);
    return m;
}

void check_signed(const SignedGraph& g) {
    for (const auto& e : g.edges) {
        if (e.mode < 0 || e.mode >= g.k) throw std::invalid_argument("edge mode out of range");
        if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) throw std::invalid_argument("edge endpoint out of range");
    }
}

DistanceMatrix columns(const DistanceMatrix& m, const VertexSet& cols) {
    DistanceMatrix r(m.rows, static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < r.cols; ++j) r.at(i, j) = m.at(i, cols[j]);
    return r;
}

DistanceMatrix rows_of(const DistanceMatrix& m, const VertexSet& rows) {
    DistanceMatrix r(static_cast<int>(rows.size()), m.cols);
    for (int i = 0; i < r.rows; ++i) std::copy(m.row(rows[i]), m.row(rows[i]) + m.cols, r.row(i));
    return r;
}

void min_into(DistanceMatrix& acc, const DistanceMatrix& x) {
    for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] = std::min(acc.a[i], x.a[i]);
}

void check_diagonal(const DistanceMatrix& m) {
    for (int i = 0; i < std::min(m.rows, m.cols); ++i)
        if (m.at(i, i) != kInf && m.at(i, i) < 0) throw std::runtime_error("negative cycle detected");
}

}  // namespace

DistanceMatrix kmode_apsp_trivial(const SignedGraph& g) {
    check_signed(g);
    DistanceMatrix best(g.n, g.n);
    for (int mode = 0; mode < g.k; ++mode) {
        auto d = one_hop(g, mode);
        for (int via = 0; via < g.n; ++via)
            for (int i = 0; i < g.n; ++i) {
                Dist a = d.at(i, via);
                if (a == kInf) continue;
                for (int j = 0; j < g.n; ++j) {
                    Dist b = d.at(via, j);
                    if (b != kInf && a + b < d.at(i, j)) d.at(i, j) = a + b;
                }
            }
        check_diagonal(d);
        min_into(best, d);
    }
    return best;
}

DistanceMatrix kmode_apsp_bounded(const SignedGraph& g, Rng& rng, ApspTrace* trace) {
    check_signed(g);
    const int n = g.n, k = g.k;
    DistanceMatrix result(n, n);
    if (n == 0) return result;
    const std::int64_t M = g.max_abs_weight();
    const Dist table_cap = M * n;

    // Nested samples S_0 = V ⊇ S_1 ⊇ ... until the hop bound (3/2)^i reaches n.
    std::vector<VertexSet> S{VertexSet(n)};
    for (int v = 0; v < n; ++v) S[0][v] = v;
    std::vector<double> hops{1.0};
    while (hops.back() < n) {
        double h = hops.back() * 1.5;
        double want = std::ceil(kLevelConstant * n * std::log(std::max(2, n)) / h);
        int size = static_cast<int>(std::min<double>(static_cast<double>(S.back().size()), std::max(1.0, want)));
        const VertexSet& prev = S.back();
        VertexSet next;
        if (size == static_cast<int>(prev.size())) {
            next = prev;
        } else {
            for (int idx : sample_vertices(static_cast<int>(prev.size()), size, rng)) next.push_back(prev[idx]);
        }
        S.push_back(next);
        hops.push_back(h);
    }
    const int levels = static_cast<int>(S.size());
    const int tail = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

    for (int mode = 0; mode < k; ++mode) min_into(result, one_hop(g, mode));

    // F[u][s] = d^i(u, s) and T[s][v] = d^i(s, v) for s in S_i, per mode.
    std::vector<DistanceMatrix> F(k), T(k);
    for (int mode = 0; mode < k; ++mode) F[mode] = T[mode] = one_hop(g, mode);

    for (int i = 0; i < levels; ++i) {
        if (i > 0) {
            for (int mode = 0; mode < k; ++mode) {
                // Compose two (i-1)-level hops through S_{i-1}.
                auto f = min_plus_product(F[mode], columns(T[mode], S[i]), table_cap);
                auto t = min_plus_product(rows_of(F[mode], S[i]), T[mode], table_cap);
                F[mode] = std::move(f);
                T[mode] = std::move(t);
            }
        }
        const int s = static_cast<int>(S[i].size());
        const Dist cap = static_cast<Dist>(std::ceil(M * hops[i]));
        DistanceMatrix A(n, k * s), B(k * s, n);
        for (int mode = 0; mode < k; ++mode)
            for (int c = 0; c < s; ++c) {
                for (int u = 0; u < n; ++u) A.at(u, mode * s + c) = F[mode].at(u, c);
                std::copy(T[mode].row(c), T[mode].row(c) + n, B.row(mode * s + c));
            }
        bool brute = s <= tail;
        DistanceMatrix C;
        if (brute) {
            C = DistanceMatrix(n, n);
            for (int u = 0; u < n; ++u)
                for (int j = 0; j < k * s; ++j) {
                    Dist x = A.at(u, j);
                    if (x == kInf || x > cap || x < -cap) continue;
                    for (int v = 0; v < n; ++v) {
                        Dist y = B.at(j, v);
                        if (y == kInf || y > cap || y < -cap) continue;
                        C.at(u, v) = std::min(C.at(u, v), x + y);
                    }
                }
        } else {
            C = min_plus_product(A, B, cap);
        }
        min_into(result, C);
        if (trace) {
            trace->level_sizes.push_back(s);
            trace->level_caps.push_back(cap);
            trace->brute_force.push_back(brute ? 1 : 0);
        }
        for (int mode = 0; mode < k; ++mode) {
            for (int c = 0; c < s; ++c) {
                Dist self = F[mode].at(S[i][c], c);
                if (self != kInf && self < 0) throw std::runtime_error("negative cycle detected");
            }
        }
    }
    check_diagonal(result);
    return result;
}

DistanceMatrix kmode_apsp_bounded(const MultimodeGraph& g, Rng& rng, ApspTrace* trace) {
    return kmode_apsp_bounded(to_signed(g), rng, trace);
}

NegTriInstance random_negtri(int n, std::int64_t M, double density, Rng& rng) {
    NegTriInstance t{n, M, DistanceMatrix(n, n), DistanceMatrix(n, n), DistanceMatrix(n, n)};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> weight(-M, M);
    for (DistanceMatrix* m : {&t.ij, &t.jl, &t.li})
        for (auto& x : m->a)
            if (coin(rng) < density) x = weight(rng);
    return t;
}

bool has_negative_triangle(const NegTriInstance& t) {
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            Dist a = t.ij.at(i, j);
            if (a == kInf) continue;
            for (int l = 0; l < t.n; ++l) {
                Dist b = t.jl.at(j, l), c = t.li.at(l, i);
                if (b != kInf && c != kInf && a + b + c < 0) return true;
            }
        }
    return false;
}

NegTriReduction negtri_to_kmode(const NegTriInstance& t, int k, bool radius_flavour) {
    if (k < 1) throw std::invalid_argument("need at least one mode");
    if (t.n < 1) throw std::invalid_argument("empty instance");
    for (const DistanceMatrix* m : {&t.ij, &t.jl, &t.li}) {
        if (m->rows != t.n || m->cols != t.n) throw std::invalid_argument("weight table has the wrong shape");
        for (Dist x : m->a)
            if (x != kInf && (x < -t.M || x > t.M)) throw std::invalid_argument("weight outside [-M, M]");
    }
    NegTriReduction r;
    int g = 1;
    while (static_cast<std::int64_t>(g + 1) * (g + 1) * (g + 1) <= k) ++g;
    r.groups = g;
    r.width = (t.n + g - 1) / g;
    const int w = r.width;
    const std::int64_t M = t.M, shift = 10 * M;
    auto member = [&](int group, int i) { return group * w + i < t.n ? group * w + i : -1; };

    std::vector<Edge> edges;
    for (int p = 0; p < g; ++p)
        for (int q = 0; q < g; ++q)
            for (int s = 0; s < g; ++s) {
                const int mode = p * g * g + q * g + s;
                for (int i = 0; i < w; ++i)
                    for (int j = 0; j < w; ++j) {
                        int ip = member(p, i), jr = member(q, j), jr_i = member(q, i), ls_j = member(s, j),
                            ls_i = member(s, i), ip_j = member(p, j);
                        if (ip >= 0 && jr >= 0 && t.ij.at(ip, jr) != kInf)
                            edges.push_back({mode, i, w + j, t.ij.at(ip, jr) + shift});
                        if (jr_i >= 0 && ls_j >= 0 && t.jl.at(jr_i, ls_j) != kInf)
                            edges.push_back({mode, w + i, 2 * w + j, t.jl.at(jr_i, ls_j) + shift});
                        if (ls_i >= 0 && ip_j >= 0 && t.li.at(ls_i, ip_j) != kInf)
                            edges.push_back({mode, 2 * w + i, 3 * w + j, t.li.at(ls_i, ip_j) + shift});
                    }
            }
    int total = 4 * w;
    if (radius_flavour) {
        r.hub = total++;
        const std::int64_t heavy = 30 * M - 1;
        for (int i = 0; i < w; ++i) {
            for (Vertex u = 0; u < 4 * w; ++u)
                if (u != r.d(i) && u != r.a(i)) edges.push_back({0, r.a(i), u, heavy});
            edges.push_back({0, r.hub, r.a(i), heavy});
        }
    }
    r.graph = build_graph(total, k, false, edges);
    r.answer = has_negative_triangle(t);
    return r;
}

}  // namespace mm
