#include "ulc/oracle.hpp"

#include <algorithm>
#include <string>

#include "ulc/feasibility.hpp"

namespace ulc {

namespace {

// All labelings of the alive subgraph by direct enumeration: tau membership
// plus every alive edge constraint, no auxiliary-graph machinery involved.
bool labeling_exists(const Instance& inst, std::vector<int>& labels) {
    std::vector<int> verts;
    for (int v = 1; v <= inst.n(); ++v)
        if (inst.alive[v]) verts.push_back(v);
    labels.assign(inst.n() + 1, 0);

    std::vector<int> pick(verts.size(), 1);
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            ok = tau_contains(inst.tau[verts[i]], pick[i]);
        if (ok) {
            for (size_t i = 0; i < verts.size(); ++i) labels[verts[i]] = pick[i];
            for (const GraphEdge& e : inst.topo->edges) {
                if (!inst.alive[e.u] || !inst.alive[e.v]) continue;
                if (e.perm(labels[e.u]) != labels[e.v]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
        size_t i = 0;
        while (i < pick.size() && pick[i] == inst.s()) pick[i++] = 1;
        if (i == pick.size()) return false;
        ++pick[i];
    }
}

bool all_components_feasible(const Instance& inst, std::vector<int>& labels) {
    labels.assign(inst.n() + 1, 0);
    for (const auto& comp : alive_components(inst)) {
        ComponentLabeling lab = component_feasible(inst, comp);
        if (!lab.feasible) return false;
        for (auto [v, l] : lab.labels) labels[v] = l;
    }
    return true;
}

template <class Feasible>
Solution search_deletions(const Instance& inst, Feasible&& feasible) {
    if (inst.n() > kOracleMaxN || inst.s() > kOracleMaxSigma)
        throw SizeLimitError("SIZE_LIMIT: oracle handles n <= " +
                             std::to_string(kOracleMaxN) + ", sigma <= " +
                             std::to_string(kOracleMaxSigma));

    std::vector<int> cand;
    for (int v = 1; v <= inst.n(); ++v)
        if (inst.alive[v] && !inst.undeletable[v]) cand.push_back(v);

    int maxc = std::min<int>(inst.k, cand.size());
    Instance work = inst;
    std::vector<int> labels;
    for (int c = 0; c <= maxc; ++c) {
        // combinations of `cand` of size c in lexicographic order
        std::vector<int> idx(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            for (int i : idx) work.alive[cand[i]] = 0;
            bool ok = feasible(work, labels);
            for (int i : idx) work.alive[cand[i]] = 1;
            if (ok) {
                Solution sol;
                sol.yes = true;
                for (int i : idx) sol.deletions.push_back(cand[i]);
                sol.labels = labels;
                return sol;
            }
            int i = c - 1;
            while (i >= 0 && idx[i] == static_cast<int>(cand.size()) - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {};
}

}  // namespace

Solution brute_force(const Instance& inst) {
    return search_deletions(inst, all_components_feasible);
}

Solution brute_force_labelings(const Instance& inst) {
    return search_deletions(inst, labeling_exists);
}

}  // namespace ulc
