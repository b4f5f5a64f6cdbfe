#pragma once

#include <vector>

#include "ulc/instance.hpp"

namespace ulc {

// Read-only view of the auxiliary graph H_I over a (shared, immutable)
// instance. Aux vertices are dense indices a = (base-1)*s + (label-1);
// adjacency is computed on the fly from G's adjacency plus permutations,
// skipping deleted base vertices.
class AuxView {
  public:
    explicit AuxView(const Instance& inst) : inst_(&inst), s_(inst.s()) {}

    const Instance& instance() const { return *inst_; }
    int count() const { return inst_->n() * s_; }
    int sigma() const { return s_; }

    int index(int base, int label) const { return (base - 1) * s_ + (label - 1); }
    int base(int a) const { return a / s_ + 1; }
    int label(int a) const { return a % s_ + 1; }
    bool alive(int a) const { return inst_->alive[base(a)]; }

    // u_gamma with gamma outside tau(u); the implicit sink set T.
    bool is_sink(int a) const { return !tau_contains(inst_->tau[base(a)], label(a)); }
    // Lift of the undeletable set; never allowed inside a separator.
    bool is_blocked(int a) const { return inst_->undeletable[base(a)]; }

    template <class F>
    void for_neighbors(int a, F&& f) const {
        int b = base(a), l = label(a);
        if (!inst_->alive[b]) return;
        for (auto [w, eid] : inst_->topo->adj[b]) {
            if (!inst_->alive[w]) continue;
            f(index(w, inst_->topo->image(eid, b, l)));
        }
    }

    // Like for_neighbors but also hands over the G edge id, so callers with
    // per-edge state can index it directly instead of re-finding the edge.
    template <class F>
    void for_incident(int a, F&& f) const {
        int b = base(a), l = label(a);
        if (!inst_->alive[b]) return;
        for (auto [w, eid] : inst_->topo->adj[b]) {
            if (!inst_->alive[w]) continue;
            f(index(w, inst_->topo->image(eid, b, l)), eid);
        }
    }

    std::vector<int> neighbors(int a) const {
        std::vector<int> out;
        for_neighbors(a, [&](int b) { out.push_back(b); });
        return out;
    }

  private:
    const Instance* inst_;
    int s_;
};

// [S]: all label-copies of every vertex in S.
std::vector<int> lift_vertices(const AuxView& view, const std::vector<int>& bases);

// S^{-1}: base vertices of an aux set, ascending, deduplicated.
std::vector<int> project(const AuxView& view, const std::vector<int>& aux);

// At most one copy of any base vertex.
bool is_regular(const AuxView& view, const std::vector<int>& aux);

// Given a regular path P in H_I (as a list of aux indices), returns s
// pairwise vertex-disjoint paths partitioning [V(P)], one of which is P
// itself. Throws std::invalid_argument if P is not a regular path in H_I.
std::vector<std::vector<int>> replicate_regular_path(const AuxView& view,
                                                     const std::vector<int>& path);

}  // namespace ulc
