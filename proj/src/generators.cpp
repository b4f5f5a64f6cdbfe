#include "ulc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace ulc {

namespace {

Permutation random_permutation(int s, std::mt19937_64& rng) {
    std::vector<int> img(s);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SimpleGraph cycle_graph(int n) {
    SimpleGraph g{n, {}};
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    if (n >= 3) g.edges.emplace_back(1, n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g{n, {}};
    for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g{n, {}};
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g{10, {}};
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(std::min(i + 1, (i + 1) % 5 + 1),
                             std::max(i + 1, (i + 1) % 5 + 1));  // outer C_5
        g.edges.emplace_back(i + 1, i + 6);                      // spokes
        g.edges.emplace_back(std::min(i + 6, (i + 2) % 5 + 6),
                             std::max(i + 6, (i + 2) % 5 + 6));  // pentagram
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    SimpleGraph g{n, {}};
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.edges.emplace_back(u, v);
    return g;
}

Instance gen_oct(const SimpleGraph& g, int k) {
    std::vector<GraphEdge> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.push_back({u, v, Permutation::swap12(2)});
    return make_instance(g.n, 2, k, std::move(edges));
}

Instance gen_group_fvs(const SimpleGraph& g, const std::vector<int>& labels,
                       int r, int k) {
    if (labels.size() != g.edges.size())
        throw std::invalid_argument("one group label per edge required");
    std::vector<GraphEdge> edges;
    edges.reserve(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        edges.push_back({u, v, Permutation::shift(r, labels[i])});
    }
    return make_instance(g.n, r, k, std::move(edges));
}

Instance gen_multiway_cut(const SimpleGraph& g,
                          const std::vector<int>& terminals, int k) {
    int r = static_cast<int>(terminals.size());
    std::vector<char> is_term(g.n + 1, 0);
    for (int t : terminals) {
        if (t < 1 || t > g.n || is_term[t])
            throw std::invalid_argument("terminals must be distinct vertices");
        is_term[t] = 1;
    }
    std::vector<GraphEdge> edges;
    for (auto [u, v] : g.edges) {
        if (is_term[u] && is_term[v])
            throw std::invalid_argument(
                "adjacent terminals cannot be separated by vertex deletions");
        edges.push_back({u, v, Permutation::identity(r)});
    }
    Instance inst = make_instance(g.n, r, k, std::move(edges));
    for (int i = 0; i < r; ++i) {
        inst.tau[terminals[i]] = tau_single(i + 1);
        inst.undeletable[terminals[i]] = 1;
    }
    return inst;
}

Instance gen_random(const RandomSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::bernoulli_distribution coin(spec.p);
    std::bernoulli_distribution full(spec.p_full);

    std::vector<char> planted_out(spec.n + 1, 0);  // in X*
    std::vector<int> psi(spec.n + 1, 0);
    if (spec.planted) {
        std::vector<int> verts(spec.n);
        std::iota(verts.begin(), verts.end(), 1);
        std::shuffle(verts.begin(), verts.end(), rng);
        for (int i = 0; i < std::min(spec.k, spec.n); ++i)
            planted_out[verts[i]] = 1;
        for (int v = 1; v <= spec.n; ++v)
            if (!planted_out[v]) psi[v] = uniform_int(rng, 1, spec.s);
    }

    std::vector<GraphEdge> edges;
    for (int u = 1; u <= spec.n; ++u) {
        for (int v = u + 1; v <= spec.n; ++v) {
            if (!coin(rng)) continue;
            Permutation perm = random_permutation(spec.s, rng);
            if (spec.planted && !planted_out[u] && !planted_out[v]) {
                // rewire so the planted labeling satisfies this edge
                std::swap(perm.image[psi[u] - 1],
                          perm.image[perm.preimage(psi[v]) - 1]);
            }
            edges.push_back({u, v, std::move(perm)});
        }
    }
    Instance inst = make_instance(spec.n, spec.s, spec.k, std::move(edges));
    for (int v = 1; v <= spec.n; ++v) {
        if (full(rng)) continue;
        TauSet t = 0;
        for (int l = 1; l <= spec.s; ++l)
            if (coin(rng)) t |= tau_single(l);
        if (spec.planted && !planted_out[v]) t |= tau_single(psi[v]);
        if (t == 0) t = tau_single(uniform_int(rng, 1, spec.s));
        inst.tau[v] = t;
    }
    return inst;
}

Instance gen_planted_oct(int n, int m, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<char> planted_out(n + 1, 0);
    for (int i = 0; i < std::min(k, n); ++i) planted_out[verts[i]] = 1;
    std::vector<char> side(n + 1, 0);
    for (int v = 1; v <= n; ++v) side[v] = static_cast<char>(rng() & 1);

    // pairs that stay forbidden: both unplanted on the same side
    long long free0 = 0, free1 = 0;
    for (int v = 1; v <= n; ++v)
        if (!planted_out[v]) ++(side[v] ? free1 : free0);
    long long admissible = static_cast<long long>(n) * (n - 1) / 2 -
                           free0 * (free0 - 1) / 2 - free1 * (free1 - 1) / 2;
    if (m > admissible)
        throw std::invalid_argument("planted-oct: m exceeds admissible pairs");

    std::unordered_set<long long> used;
    std::vector<GraphEdge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = uniform_int(rng, 1, n), v = uniform_int(rng, 1, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        // everything outside the planted set stays bipartite
        if (!planted_out[u] && !planted_out[v] && side[u] == side[v]) continue;
        long long key = static_cast<long long>(u) * (n + 1) + v;
        if (!used.insert(key).second) continue;
        edges.push_back({u, v, Permutation::swap12(2)});
    }
    return make_instance(n, 2, k, std::move(edges));
}

std::vector<std::string> describe_gen(const std::string& family,
                                      const std::vector<std::string>& params) {
    std::string line = "generated: " + family;
    for (const std::string& p : params) line += ' ' + p;
    return {line};
}

}  // namespace ulc
