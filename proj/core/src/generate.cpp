#include "fsc/generate.hpp"

#include <stdexcept>

#include "fsc/rng.hpp"

namespace fsc {

Instance gen_random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_gnp requires n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp requires 0 <= p <= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_real() < p) edges.emplace_back(u, v);
    Instance inst;
    inst.times.assign(static_cast<std::size_t>(n), {1, 1});
    inst.conflicts = Graph(n, std::move(edges));
    return inst;
}

Graph chained_triangle_agreement(int k) {
    if (k < 1) throw std::invalid_argument("chained_triangles requires k >= 1");
    const int n = 3 * k;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const int base = 3 * i;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
        if (i + 1 < k) edges.emplace_back(base + 2, base + 3);
    }
    return Graph(n, std::move(edges));
}

Instance gen_chained_triangles(int k) {
    Graph agreement = chained_triangle_agreement(k);
    Instance inst;
    inst.times.assign(static_cast<std::size_t>(agreement.num_vertices()), {1, 1});
    inst.conflicts = complement(agreement);
    return inst;
}

Instance gen_two_cliques(int l, int n, std::int64_t p_max, std::uint64_t seed) {
    if (n < 1 || l < 0 || l > n) throw std::invalid_argument("two_cliques requires 0 <= l <= n, n >= 1");
    if (p_max < 1) throw std::invalid_argument("two_cliques requires p_max >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v) edges.emplace_back(u, v);
    for (int u = l; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    Instance inst;
    inst.times.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        inst.times.emplace_back(rng.next_in(1, p_max), rng.next_in(1, p_max));
    inst.conflicts = Graph(n, std::move(edges));
    return inst;
}

Instance gen_unit_from_graph(const Instance& inst) {
    Instance unit;
    unit.times.assign(static_cast<std::size_t>(inst.num_jobs()), {1, 1});
    unit.conflicts = inst.conflicts;
    return unit;
}

}  // namespace fsc
