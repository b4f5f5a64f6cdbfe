#include "ulc/aux_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulc {

std::vector<int> lift_vertices(const AuxView& view, const std::vector<int>& bases) {
    std::vector<int> out;
    out.reserve(bases.size() * view.sigma());
    for (int v : bases)
        for (int l = 1; l <= view.sigma(); ++l) out.push_back(view.index(v, l));
    return out;
}

std::vector<int> project(const AuxView& view, const std::vector<int>& aux) {
    std::vector<int> out;
    out.reserve(aux.size());
    for (int a : aux) out.push_back(view.base(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_regular(const AuxView& view, const std::vector<int>& aux) {
    std::vector<int> bases;
    bases.reserve(aux.size());
    for (int a : aux) bases.push_back(view.base(a));
    std::sort(bases.begin(), bases.end());
    return std::adjacent_find(bases.begin(), bases.end()) == bases.end();
}

std::vector<std::vector<int>> replicate_regular_path(const AuxView& view,
                                                     const std::vector<int>& path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    if (!is_regular(view, path)) throw std::invalid_argument("path is not regular");

    int s = view.sigma();
    const Instance& inst = view.instance();
    std::vector<std::vector<int>> copies(s);

    // Inductive construction: start with the s copies of the first base
    // vertex and extend each copy edge by edge, gluing at the shared base.
    int prev_base = view.base(path[0]);
    for (int r = 1; r <= s; ++r) copies[r - 1].push_back(view.index(prev_base, r));
    // which_copy[c-1] = index of the copy currently ending at label c of prev_base
    std::vector<int> which_copy(s);
    for (int r = 0; r < s; ++r) which_copy[r] = r;

    for (size_t i = 1; i < path.size(); ++i) {
        int cur = path[i];
        int cur_base = view.base(cur);
        int eid = -1;
        for (auto [w, e] : inst.topo->adj[prev_base])
            if (w == cur_base) eid = e;
        if (eid == -1) throw std::invalid_argument("not a path in H_I");
        if (inst.topo->image(eid, prev_base, view.label(path[i - 1])) != view.label(cur))
            throw std::invalid_argument("not a path in H_I");
        std::vector<int> next_which(s);
        for (int c = 1; c <= s; ++c) {
            int img = inst.topo->image(eid, prev_base, c);
            int owner = which_copy[c - 1];
            copies[owner].push_back(view.index(cur_base, img));
            next_which[img - 1] = owner;
        }
        which_copy = std::move(next_which);
        prev_base = cur_base;
    }
    return copies;
}

}  // namespace ulc
