#include "multimode/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mm {

VertexSet sample_vertices(int n, int count, Rng& rng) {
    count = std::clamp(count, 0, n);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    // Partial Fisher-Yates with explicit index draws keeps the sample reproducible per seed.
    for (int i = 0; i < count; ++i) {
        std::uint64_t span = static_cast<std::uint64_t>(n - i);
        int j = i + static_cast<int>(rng() % span);
        std::swap(all[i], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

int hitting_set_size(int n, double c, double delta) {
    if (n <= 1) return n;
    double s = std::ceil(c * std::pow(static_cast<double>(n), 1.0 - delta) * std::log(static_cast<double>(n)));
    return static_cast<int>(std::clamp(s, 1.0, static_cast<double>(n)));
}

MultimodeGraph random_graph(const RandomGraphSpec& s, Rng& rng) {
    if (s.aligned && s.k != 2) throw std::invalid_argument("aligned graphs have two modes");
    std::bernoulli_distribution coin(s.p);
    std::uniform_int_distribution<std::int64_t> weight(1, std::max<std::int64_t>(1, s.max_w));
    const bool dir = s.directed || s.acyclic || s.aligned;
    std::vector<Edge> edges;
    auto order = [&] {
        VertexSet o(s.n);
        std::iota(o.begin(), o.end(), 0);
        std::shuffle(o.begin(), o.end(), rng);
        return o;
    };
    VertexSet shared = order();
    for (int mode = 0; mode < s.k; ++mode) {
        if (s.acyclic || s.aligned) {
            VertexSet o = s.aligned ? shared : order();
            if (s.aligned && mode == 1) std::reverse(o.begin(), o.end());
            for (int i = 0; i < s.n; ++i)
                for (int j = i + 1; j < s.n; ++j)
                    if (coin(rng)) edges.push_back({mode, o[i], o[j], weight(rng)});
            continue;
        }
        for (Vertex u = 0; u < s.n; ++u)
            for (Vertex v = dir ? 0 : u + 1; v < s.n; ++v)
                if (u != v && coin(rng)) edges.push_back({mode, u, v, weight(rng)});
    }
    if (s.connected && !s.acyclic && !s.aligned) {
        VertexSet o = order();
        for (int i = 1; i < s.n; ++i) {
            Vertex parent = o[rng() % static_cast<std::uint64_t>(i)];
            std::int64_t w = weight(rng);
            edges.push_back({0, parent, o[i], w});
            if (dir) edges.push_back({0, o[i], parent, w});
        }
    }
    return build_graph(s.n, s.k, dir, edges);
}

}  // namespace mm
