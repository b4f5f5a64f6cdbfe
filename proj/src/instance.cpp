#include "ulc/instance.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ulc {

Instance make_instance(int n, int s, int k, std::vector<GraphEdge> edges) {
    if (n < 0 || s < 1 || s > 64 || k < 0)
        throw std::invalid_argument("bad instance parameters");
    auto topo = std::make_shared<Topology>();
    topo->n = n;
    topo->s = s;
    topo->edges = std::move(edges);
    for (const GraphEdge& e : topo->edges) {
        if (e.u < 1 || e.v > n || e.u >= e.v)
            throw std::invalid_argument("bad edge endpoints");
        if (e.perm.size() != s || !e.perm.is_valid())
            throw std::invalid_argument("bad edge permutation");
    }
    topo->build_adjacency();

    Instance inst;
    inst.topo = std::move(topo);
    inst.k = k;
    inst.tau.assign(n + 1, tau_full(s));
    inst.alive.assign(n + 1, 1);
    inst.undeletable.assign(n + 1, 0);
    inst.alive[0] = 0;
    return inst;
}

std::vector<std::vector<int>> alive_components(const Instance& inst) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(inst.n() + 1, 0);
    std::vector<int> queue;
    for (int v = 1; v <= inst.n(); ++v) {
        if (!inst.alive[v] || seen[v]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[v] = 1;
        queue.assign(1, v);
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            comp.push_back(u);
            for (auto [w, eid] : inst.topo->adj[u]) {
                (void)eid;
                if (inst.alive[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return comps;
}

std::string VerifyResult::describe() const {
    switch (status) {
        case VerifyStatus::Accept: return "ACCEPT";
        case VerifyStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
        case VerifyStatus::UndeletableDeleted:
            return "UNDELETABLE_DELETED(" + std::to_string(detail) + ")";
        case VerifyStatus::TauViolation:
            return "TAU_VIOLATION(" + std::to_string(detail) + ")";
        case VerifyStatus::EdgeViolation:
            return "EDGE_VIOLATION(" + std::to_string(detail) + ")";
    }
    return "?";
}

VerifyResult verify_solution(const Instance& inst, const Solution& sol) {
    if (static_cast<int>(sol.deletions.size()) > inst.k)
        return {VerifyStatus::BudgetExceeded, static_cast<int>(sol.deletions.size())};
    std::vector<char> deleted(inst.n() + 1, 0);
    for (int v : sol.deletions) {
        if (v < 1 || v > inst.n())
            return {VerifyStatus::TauViolation, v};
        if (inst.undeletable[v])
            return {VerifyStatus::UndeletableDeleted, v};
        deleted[v] = 1;
    }
    for (int v = 1; v <= inst.n(); ++v) {
        if (!inst.alive[v] || deleted[v]) continue;
        int lab = v < static_cast<int>(sol.labels.size()) ? sol.labels[v] : 0;
        if (lab < 1 || lab > inst.s() || !tau_contains(inst.tau[v], lab))
            return {VerifyStatus::TauViolation, v};
    }
    for (int eid = 0; eid < inst.m(); ++eid) {
        const GraphEdge& e = inst.topo->edges[eid];
        if (!inst.alive[e.u] || !inst.alive[e.v] || deleted[e.u] || deleted[e.v])
            continue;
        if (e.perm(sol.labels[e.u]) != sol.labels[e.v])
            return {VerifyStatus::EdgeViolation, eid};
    }
    return {};
}

bool force_deletions(Instance& inst, std::vector<int>& deleted) {
    for (int v = 1; v <= inst.n(); ++v) {
        if (!inst.alive[v] || inst.tau[v] != 0) continue;
        if (inst.undeletable[v]) return false;
        if (inst.k == 0) return false;
        inst.alive[v] = 0;
        --inst.k;
        deleted.push_back(v);
    }
    return true;
}

}  // namespace ulc
