#include "ulc/feasibility.hpp"

#include <algorithm>
#include <cassert>

namespace ulc {

PropagateResult propagate_from(const AuxView& view, int seed,
                               const std::vector<char>& forbidden) {
    PropagateResult res;
    res.labels.assign(view.instance().n() + 1, 0);
    auto banned = [&](int a) {
        return !forbidden.empty() && forbidden[a];
    };
    assert(!banned(seed) && view.alive(seed));

    std::vector<int>& queue = res.reached;
    res.labels[view.base(seed)] = view.label(seed);
    queue.push_back(seed);
    for (size_t h = 0; h < queue.size() && !res.conflict; ++h) {
        view.for_neighbors(queue[h], [&](int b) {
            if (res.conflict || banned(b)) return;
            int w = view.base(b), l = view.label(b);
            if (res.labels[w] == l) return;  // already reached this copy
            if (res.labels[w] != 0 || !tau_contains(view.instance().tau[w], l)) {
                res.conflict = true;
                res.conflict_vertex = w;
                return;
            }
            res.labels[w] = l;
            queue.push_back(b);
        });
    }
    return res;
}

ComponentLabeling component_feasible(const Instance& inst,
                                     const std::vector<int>& component) {
    AuxView view(inst);
    int w = *std::min_element(component.begin(), component.end());
    for (int i = 1; i <= inst.s(); ++i) {
        if (!tau_contains(inst.tau[w], i)) continue;
        PropagateResult p = propagate_from(view, view.index(w, i));
        if (p.conflict) continue;
        ComponentLabeling out;
        out.feasible = true;
        out.labels.reserve(component.size());
        for (int v : component) {
            assert(p.labels[v] != 0);
            out.labels.emplace_back(v, p.labels[v]);
        }
        return out;
    }
    return {};
}

}  // namespace ulc
