#pragma once

#include <vector>

#include "ulc/aux_graph.hpp"

namespace ulc {

// One vertex-capacitated min-cut query over H_I. The sink set T is implicit:
// every u_gamma with gamma outside tau(u). Undeletable bases (and the source)
// have effectively infinite capacity and never appear in a separator. Sinks
// themselves have capacity one: a separator may cut a path at its very
// endpoint, matching deletion of the base vertex.
struct CutQuery {
    int source = -1;  // aux index v_alpha
    int cap = 0;      // give-up threshold l' (usually s*k)
};

class FlowState;

enum class CutSide { Source, Sink };

// N(J_1) (Source) or N(J_q) (Sink): the unique minimum separator closest to
// the respective side. Requires a completed flow with value >= 1.
std::vector<int> closest_min_separator(const FlowState& flow, CutSide side);

// Unit-vertex-capacity max flow by BFS augmentation on the in/out split of
// H_I, stopping after cap+1 augmentations. Owns all per-query scratch state.
class FlowState {
  public:
    FlowState(const AuxView& view, const CutQuery& q);

    bool exceeds_cap() const { return exceeds_; }
    int value() const { return value_; }  // l, valid unless exceeds_cap()

    const AuxView& view() const { return *view_; }
    const CutQuery& query() const { return query_; }

    // Residual-reachability set from the source (aux vertices whose out-node
    // is reachable, plus the source); equals R(v_alpha, S) for the closest
    // min separator S.
    std::vector<int> source_region() const;
    // Aux vertices on the T side of the farthest min separator, separator
    // vertices included: those whose out-node co-reaches the absorbing side.
    std::vector<int> sink_region() const;

  private:
    friend class ChainBuilder;
    friend std::vector<int> closest_min_separator(const FlowState&, CutSide);
    bool augment_once();
    std::vector<char> backward_marks() const;
    int find_aux_edge(int from_base, int to_base) const;
    int edge_flow_between(int a, int b) const;
    int edge_flow_on(int eid, int a, int b) const;
    // Flattened aux adjacency, built once per query. Each arc stores the
    // neighbor plus a signed slot into edge_flow_, so a residual check during
    // the repeated traversals costs a single read. f(neighbor b, net flow
    // from b into a).
    template <class F>
    void for_arcs(int a, F&& f) const {
        for (int i = adj_start_[a]; i < adj_start_[a + 1]; ++i) {
            int code = adj_[i].second;
            f(adj_[i].first,
              code > 0 ? edge_flow_[code - 1] : -edge_flow_[-code - 1]);
        }
    }
    void push_edge_flow(int a, int b, int amount);

    const AuxView* view_;
    CutQuery query_;
    int value_ = 0;
    bool exceeds_ = false;
    std::vector<int> vertex_flow_;  // units through each aux vertex
    std::vector<int> edge_flow_;    // net flow per aux edge, + = from smaller G endpoint
    std::vector<int> parent_;       // BFS scratch over split nodes (2 per aux vertex)
    std::vector<int> adj_start_;
    std::vector<std::pair<int, int>> adj_;
};

// The nested collection J_1 c J_2 c ... c J_q of layered regions,
// stored as deltas; every minimum blocked-avoiding separator lies inside the
// union of the boundaries.
struct SeparatorChain {
    int ell = 0;
    std::vector<std::vector<int>> deltas;      // D_1 = J_1, D_i = J_i \ J_{i-1}
    std::vector<std::vector<int>> boundaries;  // N(J_1), ..., N(J_q)

    int q() const { return static_cast<int>(deltas.size()); }
    // Union of deltas 1..t, i.e. R(v_alpha, N(J_t)).
    std::vector<int> region(int t) const;
};

// Requires flow.value() >= 1. Advances the source side layer by layer,
// continuing residual BFS from the previous frontier; flow is never re-run.
SeparatorChain separator_chain(const FlowState& flow);

struct CruxOutcome {
    enum class Kind {
        NoSmallSeparator,  // no blocked-avoiding separator of size <= cap
        GoodClosestToT,    // S = N(J_q), no min separator covers it
        GoodBadPair,       // S_1 = N(J_{i-1}) good, S_2 = N(J_i) bad
        NoGoodMinimum,     // N[J_1] already irregular
    };
    Kind kind = Kind::NoSmallSeparator;
    SeparatorChain chain;
    int bad_index = 0;  // least i with N[J_i] irregular, 0 if none
    // Irregular witness: two copies of witness_base inside N[J_{bad_index}],
    // in the deterministic order they were counted.
    int witness_base = 0, witness_label1 = 0, witness_label2 = 0;

    const std::vector<int>& s1() const { return chain.boundaries[bad_index - 2]; }
    const std::vector<int>& s2() const { return chain.boundaries[bad_index - 1]; }
    const std::vector<int>& closest_to_t() const { return chain.boundaries.back(); }
};

// Runs the flow, builds the chain and scans the closures N[J_i] for the
// first irregularity; the 4-way dispatch of the branching engine.
CruxOutcome classify_crux(const AuxView& view, const CutQuery& q);

// For a GoodBadPair outcome and a target copy of the irregular witness in
// R[v_alpha, S_2]: a source-target path inside R[v_alpha, S_2] that avoids
// S_2 internally and meets S_1 at most once. `region1` is R(v_alpha, S_1)
// as chain.region(i-1) and `region2` is R(v_alpha, S_2) as chain.region(i).
std::vector<int> crossing_path(const AuxView& view, int source, int target,
                               const std::vector<int>& region1,
                               const std::vector<int>& s1,
                               const std::vector<int>& region2);

// Both witness paths P_1, P_2 of the branching rule. Targets must lie in
// the closure R[v_alpha, S_2] = region2 u s2 (they may sit on S_2 itself,
// where only the endpoint touches the separator).
std::pair<std::vector<int>, std::vector<int>> two_paths(
    const AuxView& view, int source, int target1, int target2,
    const std::vector<int>& region1, const std::vector<int>& s1,
    const std::vector<int>& region2, const std::vector<int>& s2);

}  // namespace ulc
