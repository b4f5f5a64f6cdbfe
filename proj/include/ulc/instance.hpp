#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulc/permutation.hpp"

namespace ulc {

// Allowed-label sets are bit masks over {1..s}; s <= 64.
using TauSet = std::uint64_t;

inline TauSet tau_full(int s) { return s == 64 ? ~TauSet{0} : (TauSet{1} << s) - 1; }
inline bool tau_contains(TauSet t, int label) { return (t >> (label - 1)) & 1; }
inline TauSet tau_single(int label) { return TauSet{1} << (label - 1); }
inline int tau_size(TauSet t) { return std::popcount(t); }
inline int tau_first(TauSet t) { return std::countr_zero(t) + 1; }

// One undirected edge; perm is phi_{e,u} for the smaller endpoint u < v.
// The permutation for the other endpoint is the inverse.
struct GraphEdge {
    int u, v;  // u < v, 1-based
    Permutation perm;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Immutable graph structure shared between all instance copies in a search.
struct Topology {
    int n = 0;  // vertex count
    int s = 0;  // alphabet size
    std::vector<GraphEdge> edges;
    // adj[v] (1-based) lists (neighbor, edge id) in input order.
    std::vector<std::vector<std::pair<int, int>>> adj;

    int m() const { return static_cast<int>(edges.size()); }

    // phi_{e,from}(label): image of `label` when crossing edge `eid` from `from`.
    int image(int eid, int from, int label) const {
        const GraphEdge& e = edges[eid];
        return from == e.u ? e.perm(label) : e.perm.preimage(label);
    }

    void build_adjacency() {
        adj.assign(n + 1, {});
        for (int i = 0; i < m(); ++i) {
            adj[edges[i].u].emplace_back(edges[i].v, i);
            adj[edges[i].v].emplace_back(edges[i].u, i);
        }
    }
};

// A Node Unique Label Cover instance. The topology is shared and immutable;
// tau, alive flags, undeletable flags, budget and anchor are per-copy state
// mutated only on freshly made copies during branching.
struct Instance {
    std::shared_ptr<const Topology> topo;
    int k = 0;
    std::vector<TauSet> tau;         // 1-based
    std::vector<char> alive;         // 1-based
    std::vector<char> undeletable;   // 1-based
    int anchor = 0;                  // w*, 0 = undefined

    int n() const { return topo->n; }
    int s() const { return topo->s; }
    int m() const { return topo->m(); }

    int anchor_label() const { return tau_first(tau[anchor]); }

    // Number of alive edges (both endpoints alive).
    int alive_edge_count() const {
        int c = 0;
        for (const GraphEdge& e : topo->edges)
            if (alive[e.u] && alive[e.v]) ++c;
        return c;
    }

    bool operator==(const Instance& o) const {
        return topo->n == o.topo->n && topo->s == o.topo->s && k == o.k &&
               topo->edges == o.topo->edges && tau == o.tau &&
               alive == o.alive && undeletable == o.undeletable;
    }
};

Instance make_instance(int n, int s, int k, std::vector<GraphEdge> edges);

// Connected components of the alive subgraph, ordered by smallest vertex id;
// vertices inside a component appear in BFS discovery order.
std::vector<std::vector<int>> alive_components(const Instance& inst);

struct Solution {
    bool yes = false;
    std::vector<int> deletions;  // ascending
    std::vector<int> labels;     // 1-based by vertex; 0 = deleted / absent
};

enum class VerifyStatus {
    Accept,
    BudgetExceeded,
    UndeletableDeleted,
    TauViolation,
    EdgeViolation,
};

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Accept;
    int detail = 0;  // offending vertex or edge id

    bool ok() const { return status == VerifyStatus::Accept; }
    std::string describe() const;
};

// Checks a YES solution against the instance: budget, undeletable set,
// tau membership and every surviving edge constraint.
VerifyResult verify_solution(const Instance& inst, const Solution& sol);

// Deletes every deletable vertex with empty tau, spending budget.
// Returns false (NO) if an undeletable vertex has empty tau or the budget
// runs out. Deleted vertices are appended to `deleted`.
bool force_deletions(Instance& inst, std::vector<int>& deleted);

}  // namespace ulc
