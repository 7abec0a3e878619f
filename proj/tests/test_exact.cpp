#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "multimode/exact.hpp"
#include "oracle.hpp"

using namespace mm;

namespace {

MultimodeGraph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({0, i, i + 1, 1});
    return build_graph(n, 1, false, e);
}

// Each mode follows its own random order; weights in [-2, 2].
SignedGraph random_signed_dag(Rng& rng, int n, int k) {
    SignedGraph s{n, k, {}};
    for (int mode = 0; mode < k; ++mode) {
        VertexSet order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 5 == 0)
                    s.edges.push_back({mode, order[i], order[j], static_cast<std::int64_t>(rng() % 5) - 2});
    }
    return s;
}

// Floyd-Warshall on a signed edge list, per mode, then the entrywise minimum.
oracle::Matrix signed_reference(const SignedGraph& s) {
    oracle::Matrix best(s.n, std::vector<Dist>(s.n, kInf));
    for (int mode = 0; mode < s.k; ++mode) {
        oracle::Matrix d(s.n, std::vector<Dist>(s.n, kInf));
        for (int v = 0; v < s.n; ++v) d[v][v] = 0;
        for (const auto& e : s.edges)
            if (e.mode == mode) d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
        for (int via = 0; via < s.n; ++via)
            for (int i = 0; i < s.n; ++i)
                for (int j = 0; j < s.n; ++j)
                    if (d[i][via] != kInf && d[via][j] != kInf) d[i][j] = std::min(d[i][j], d[i][via] + d[via][j]);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j) best[i][j] = std::min(best[i][j], d[i][j]);
    }
    return best;
}

bool same(const DistanceMatrix& m, const oracle::Matrix& ref) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != ref[i][j]) return false;
    return true;
}

Dist min_ad(const NegTriReduction& r) {
    auto d = oracle::kmode(r.graph);
    Dist best = kInf;
    for (int i = 0; i < r.width; ++i) best = std::min(best, d[r.a(i)][r.d(i)]);
    return best;
}

}  // namespace

TEST_CASE("reduction weight") {
    CHECK(reduction_weight(3, 1) == 4);
    CHECK(reduction_weight(4, 1) == 6);
    CHECK(reduction_weight(1, 1) == 2);
    CHECK(reduction_weight(5, 3) == 16);
}

TEST_CASE("diameter reduction examples") {
    auto r = reduce_to_standard_diameter(path(3));
    CHECK(r.W == 4);
    CHECK(oracle::diameter(r.graph) == 10);

    auto split = reduce_to_standard_diameter(build_graph(2, 2, false, {}));
    CHECK(oracle::diameter(split.graph) == 3 * split.W);

    // A lone vertex: copy to copy through the hub costs W, vertex to copy costs 3W/2.
    auto one = reduce_to_standard_diameter(build_graph(1, 1, false, {}));
    CHECK(oracle::diameter(one.graph) == 3 * one.W / 2);
}

TEST_CASE("radius reduction examples") {
    auto star = build_graph(4, 1, false, {{0, 0, 1, 1}, {0, 0, 2, 1}, {0, 0, 3, 1}});
    auto r = reduce_to_standard_radius(star);
    CHECK(oracle::radius(r.graph) == 2 * r.W + 1);

    std::vector<Edge> e{{0, 0, 1, 1}};
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) e.push_back({1, u, v, 1});
    auto c = reduce_to_standard_radius(build_graph(4, 2, false, e));
    CHECK(oracle::radius(c.graph) == 2 * c.W + 1);

    auto one = reduce_to_standard_radius(build_graph(1, 1, false, {}));
    CHECK(oracle::radius(one.graph) == 2 * one.W);
}

TEST_CASE("reductions match the k-mode values") {
    Rng rng(81);
    for (int trial = 0; trial < 120; ++trial) {
        RandomGraphSpec s;
        s.n = 2 + static_cast<int>(rng() % 18);
        s.k = 1 + static_cast<int>(rng() % 3);
        s.p = (0.5 + rng() % 30 / 10.0) / s.n;
        s.max_w = rng() % 2 ? 3 : 1;
        s.connected = trial % 3 != 0;
        auto g = random_graph(s, rng);
        auto ref = oracle::kmode(g);
        Dist D = oracle::diameter(ref), R = oracle::radius(ref);
        auto rd = reduce_to_standard_diameter(g);
        CHECK(rd.W % 2 == 0);
        CHECK(rd.W > g.n() * g.max_weight());
        CHECK(oracle::diameter(rd.graph) == (D == kInf ? 3 * rd.W : 2 * rd.W + D));
        if (R != kInf) {
            auto rr = reduce_to_standard_radius(g);
            CHECK(oracle::radius(rr.graph) == 2 * rr.W + R);
        }
    }
}

TEST_CASE("trivial k-mode APSP") {
    Rng rng(82);
    for (int trial = 0; trial < 40; ++trial) {
        RandomGraphSpec s;
        s.n = 1 + static_cast<int>(rng() % 20);
        s.k = 1 + static_cast<int>(rng() % 3);
        s.directed = trial % 2;
        s.max_w = 5;
        auto g = random_graph(s, rng);
        auto m = kmode_apsp_trivial(g);
        CHECK(same(m, oracle::kmode(g)));
        for (int i = 0; i < g.n(); ++i) CHECK(m.at(i, i) == 0);
        if (!g.directed())
            for (int i = 0; i < g.n(); ++i)
                for (int j = 0; j < g.n(); ++j) CHECK(m.at(i, j) == m.at(j, i));
        CHECK(kmode_apsp_trivial(to_signed(g)) == m);
    }
}

TEST_CASE("bounded APSP examples") {
    Rng rng(83);
    auto p = path(12);
    CHECK(kmode_apsp_bounded(p, rng) == kmode_apsp_trivial(p));

    SignedGraph neg{2, 1, {{0, 0, 1, -1}}};
    auto m = kmode_apsp_bounded(neg, rng);
    CHECK(m.at(0, 1) == -1);
    CHECK(kmode_apsp_trivial(neg).at(0, 1) == -1);
    CHECK(m.at(1, 0) == kInf);

    SignedGraph cyc{2, 1, {{0, 0, 1, -1}, {0, 1, 0, 0}}};
    CHECK_THROWS_AS(kmode_apsp_bounded(cyc, rng), std::runtime_error);
    CHECK_THROWS_AS(kmode_apsp_trivial(cyc), std::runtime_error);
}

TEST_CASE("bounded APSP on signed DAG modes") {
    int matches = 0;
    const int runs = 50;
    for (int seed = 0; seed < runs; ++seed) {
        Rng rng(1000 + seed);
        auto s = random_signed_dag(rng, 2 + static_cast<int>(rng() % 24), 1 + static_cast<int>(rng() % 3));
        ApspTrace trace;
        auto m = kmode_apsp_bounded(s, rng, &trace);
        auto ref = signed_reference(s);
        CHECK(same(kmode_apsp_trivial(s), ref));
        if (same(m, ref)) ++matches;
        // No entry drops below the true distance.
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j) CHECK(m.at(i, j) >= ref[i][j]);
        for (std::size_t l = 1; l < trace.level_sizes.size(); ++l) CHECK(trace.level_sizes[l] <= trace.level_sizes[l - 1]);
    }
    CHECK(matches * 100 >= 99 * runs);
}

TEST_CASE("negative triangle reduction") {
    NegTriInstance pos{4, 3, DistanceMatrix(4, 4), DistanceMatrix(4, 4), DistanceMatrix(4, 4)};
    for (DistanceMatrix* m : {&pos.ij, &pos.jl, &pos.li}) std::fill(m->a.begin(), m->a.end(), 3);
    auto r = negtri_to_kmode(pos, 1, false);
    CHECK_FALSE(r.answer);
    CHECK(min_ad(r) >= 30 * pos.M);
    auto rr = negtri_to_kmode(pos, 1, true);
    CHECK(oracle::radius(rr.graph) >= 30 * pos.M);

    NegTriInstance planted = pos;
    planted.ij.at(1, 2) = -3;
    planted.jl.at(2, 0) = 1;
    planted.li.at(0, 1) = 1;
    auto q = negtri_to_kmode(planted, 8, false);
    CHECK(q.answer);
    CHECK(q.groups == 2);
    CHECK(min_ad(q) < 30 * planted.M);
    CHECK(oracle::radius(negtri_to_kmode(planted, 8, true).graph) < 30 * planted.M);

    NegTriInstance bad = pos;
    bad.ij.at(0, 0) = 4;
    CHECK_THROWS_AS(negtri_to_kmode(bad, 1, false), std::invalid_argument);
}

TEST_CASE("negative triangle predicate equivalence") {
    Rng rng(84);
    int yes = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int k = 1 + static_cast<int>(rng() % 27);
        int n = 1 + static_cast<int>(rng() % 6);
        auto t = random_negtri(n, 1 + static_cast<std::int64_t>(rng() % 4), 0.6, rng);
        auto r = negtri_to_kmode(t, k, false);
        yes += r.answer;
        CHECK(r.answer == has_negative_triangle(t));
        CHECK(r.answer == (min_ad(r) < 30 * t.M));
        for (const auto& e : r.graph.edges()) {
            CHECK(e.w >= 9 * t.M);
            CHECK(e.w <= 11 * t.M);
        }
        auto rad = negtri_to_kmode(t, k, true);
        CHECK(r.answer == (oracle::radius(rad.graph) < 30 * t.M));
    }
    CHECK(yes > 0);
    CHECK(yes < 120);
}
