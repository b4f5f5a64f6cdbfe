#include "ulc/separators.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ulc {

namespace {

// Split-node encoding: 2*a = in-node, 2*a+1 = out-node of aux vertex a.
inline int in_node(int a) { return 2 * a; }
inline int out_node(int a) { return 2 * a + 1; }

}  // namespace

FlowState::FlowState(const AuxView& view, const CutQuery& q)
    : view_(&view), query_(q) {
    assert(q.source >= 0 && view.alive(q.source) && !view.is_sink(q.source));
    vertex_flow_.assign(view.count(), 0);
    edge_flow_.assign(view.instance().m() * view.sigma(), 0);
    parent_.assign(2 * view.count(), -1);
    // Counting-sort the aux arcs straight off the edge list; this walks the
    // edges sequentially instead of chasing per-vertex adjacency vectors.
    const Instance& inst = view.instance();
    const int s = view.sigma();
    adj_start_.assign(view.count() + 2, 0);
    for (const GraphEdge& e : inst.topo->edges) {
        if (!inst.alive[e.u] || !inst.alive[e.v]) continue;
        for (int lu = 1; lu <= s; ++lu) {
            ++adj_start_[view.index(e.u, lu) + 2];
            ++adj_start_[view.index(e.v, e.perm(lu)) + 2];
        }
    }
    for (int a = 0; a + 2 < static_cast<int>(adj_start_.size()); ++a)
        adj_start_[a + 2] += adj_start_[a + 1];
    adj_.resize(adj_start_.back());
    for (int eid = 0; eid < inst.m(); ++eid) {
        const GraphEdge& e = inst.topo->edges[eid];
        if (!inst.alive[e.u] || !inst.alive[e.v]) continue;
        for (int lu = 1; lu <= s; ++lu) {
            int a = view.index(e.u, lu), b = view.index(e.v, e.perm(lu));
            int idx = eid * s + lu - 1;
            adj_[adj_start_[a + 1]++] = {b, -(idx + 1)};
            adj_[adj_start_[b + 1]++] = {a, idx + 1};
        }
    }
    adj_start_.pop_back();
    while (augment_once()) {
        ++value_;
        if (value_ > query_.cap) {
            exceeds_ = true;
            break;
        }
    }
}

int FlowState::find_aux_edge(int from_base, int to_base) const {
    for (auto [w, eid] : view_->instance().topo->adj[from_base])
        if (w == to_base) return eid;
    throw std::logic_error("no such edge");
}

// Net flow on the aux edge between adjacent aux vertices a and b, measured
// in the direction a -> b.
int FlowState::edge_flow_between(int a, int b) const {
    return edge_flow_on(find_aux_edge(view_->base(a), view_->base(b)), a, b);
}

// Same, with the connecting edge already known; O(1).
int FlowState::edge_flow_on(int eid, int a, int b) const {
    int u = view_->instance().topo->edges[eid].u;
    bool a_is_small = view_->base(a) == u;
    int lu = a_is_small ? view_->label(a) : view_->label(b);
    int f = edge_flow_[eid * view_->sigma() + lu - 1];
    return a_is_small ? f : -f;
}

void FlowState::push_edge_flow(int a, int b, int amount) {
    int eid = find_aux_edge(view_->base(a), view_->base(b));
    int u = view_->instance().topo->edges[eid].u;
    bool a_is_small = view_->base(a) == u;
    int lu = a_is_small ? view_->label(a) : view_->label(b);
    edge_flow_[eid * view_->sigma() + lu - 1] += a_is_small ? amount : -amount;
}

bool FlowState::augment_once() {
    const AuxView& view = *view_;
    std::fill(parent_.begin(), parent_.end(), -1);
    std::vector<int> queue;
    int start = out_node(query_.source);
    parent_[start] = start;
    queue.push_back(start);
    int goal = -1;

    for (size_t h = 0; h < queue.size() && goal < 0; ++h) {
        int node = queue[h];
        int a = node / 2;
        auto visit = [&](int to) {
            if (goal >= 0 || parent_[to] != -1) return;
            parent_[to] = node;
            // A unit is absorbed once it passes through a sink: sinks have
            // capacity one like everyone else and may be cut.
            if (to % 2 == 1 && view.is_sink(to / 2)) {
                goal = to;
                return;
            }
            queue.push_back(to);
        };
        if (node % 2 == 1) {  // out-node
            // Pushing against existing net flow is not a forward move; that
            // situation is handled by the cancel arc in(b) -> out(a) instead,
            // which keeps the per-vertex flow counters truthful.
            for_arcs(a, [&](int b, int into) {
                if (goal < 0 && into <= 0) visit(in_node(b));
            });
            if (vertex_flow_[a] > 0) visit(in_node(a));
        } else {  // in-node
            if (view.is_blocked(a) || vertex_flow_[a] == 0) visit(out_node(a));
            for_arcs(a, [&](int b, int into) {
                if (goal < 0 && into > 0) visit(out_node(b));
            });
        }
    }
    if (goal < 0) return false;

    for (int node = goal; parent_[node] != node; node = parent_[node]) {
        int p = parent_[node];
        int a = p / 2, b = node / 2;
        if (a == b) {
            vertex_flow_[a] += (p % 2 == 0) ? 1 : -1;  // in->out, or cancel
        } else if (p % 2 == 1) {
            push_edge_flow(a, b, 1);  // out(a) -> in(b)
        } else {
            push_edge_flow(b, a, -1);  // reverse of out(b) -> in(a)
        }
    }
    return true;
}

std::vector<int> FlowState::source_region() const {
    const AuxView& view = *view_;
    std::vector<char> seen(2 * view.count(), 0);
    std::vector<int> queue, region;
    seen[out_node(query_.source)] = 1;
    queue.push_back(out_node(query_.source));
    region.push_back(query_.source);
    for (size_t h = 0; h < queue.size(); ++h) {
        int node = queue[h];
        int a = node / 2;
        auto visit = [&](int to) {
            if (seen[to]) return;
            seen[to] = 1;
            // At max flow no sink can be passed through (that would be an
            // augmenting path), so no sink ever joins the region.
            assert(!(to % 2 == 1 && view.is_sink(to / 2)));
            if (to % 2 == 1 && to / 2 != query_.source) region.push_back(to / 2);
            queue.push_back(to);
        };
        if (node % 2 == 1) {
            for_arcs(a, [&](int b, int into) {
                if (into <= 0) visit(in_node(b));
            });
            if (vertex_flow_[a] > 0) visit(in_node(a));
        } else {
            if (view.is_blocked(a) || vertex_flow_[a] == 0) visit(out_node(a));
            for_arcs(a, [&](int b, int into) {
                if (into > 0) visit(out_node(b));
            });
        }
    }
    return region;
}

// Backward residual traversal from the virtual super-sink, which sits behind
// the out-nodes of all sinks. Returns co-reachability flags over split nodes.
std::vector<char> FlowState::backward_marks() const {
    const AuxView& view = *view_;
    std::vector<char> seen(2 * view.count(), 0);
    std::vector<int> queue;
    for (int a = 0; a < view.count(); ++a) {
        if (view.alive(a) && view.is_sink(a)) {
            seen[out_node(a)] = 1;
            queue.push_back(out_node(a));
        }
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        int node = queue[h];
        int a = node / 2;
        auto visit = [&](int to) {
            if (seen[to]) return;
            seen[to] = 1;
            queue.push_back(to);
        };
        if (node % 2 == 0) {  // arcs into in(a): forward edge arcs + cancel
            for_arcs(a, [&](int b, int into) {
                if (into >= 0) visit(out_node(b));
            });
            if (vertex_flow_[a] > 0) visit(out_node(a));
        } else {  // arcs into out(a): open vertex arc + reverse edge arcs
            if (view.is_blocked(a) || vertex_flow_[a] == 0) visit(in_node(a));
            for_arcs(a, [&](int b, int into) {
                if (into < 0) visit(in_node(b));
            });
        }
    }
    return seen;
}

std::vector<int> FlowState::sink_region() const {
    std::vector<char> seen = backward_marks();
    std::vector<int> region;
    for (int a = 0; a < view_->count(); ++a)
        if (seen[out_node(a)]) region.push_back(a);
    return region;
}

std::vector<int> closest_min_separator(const FlowState& flow, CutSide side) {
    assert(!flow.exceeds_cap() && flow.value() >= 1);
    const AuxView& view = flow.view();
    std::vector<int> cut;
    if (side == CutSide::Source) {
        // Saturated frontier of the forward residual traversal.
        std::vector<char> seen(2 * view.count(), 0);
        seen[2 * flow.query().source + 1] = 1;
        for (int a : flow.source_region())
            seen[in_node(a)] = seen[out_node(a)] = 1;
        std::vector<char> frontier(view.count(), 0);
        for (int a : flow.source_region()) {
            view.for_neighbors(a, [&](int b) {
                if (!seen[out_node(b)]) frontier[b] = 1;
            });
        }
        for (int a = 0; a < view.count(); ++a)
            if (frontier[a]) cut.push_back(a);
    } else {
        std::vector<char> seen = flow.backward_marks();
        for (int a = 0; a < view.count(); ++a)
            if (seen[out_node(a)] && !seen[in_node(a)]) cut.push_back(a);
    }
    return cut;
}

std::vector<int> SeparatorChain::region(int t) const {
    std::vector<int> out;
    for (int i = 0; i < t; ++i)
        out.insert(out.end(), deltas[i].begin(), deltas[i].end());
    return out;
}

// Builds the nested layer collection from the residual graph at max flow.
//
// Minimum separators correspond to the residual-closed vertex sets between
// the source side and the absorbing side; a vertex belongs to some minimum
// separator exactly when its in-node cannot reach the absorbing side, its
// out-node is not source-reachable, and its two halves lie in different
// strongly connected components (the cancel arc makes "in reaches out" the
// same as "same component"). Ranking those vertices by longest chains of
// "in-node reaches the other's out-node" and flooding rank by rank yields
// nested regions whose boundaries are all minimum separators and together
// contain every minimum separator.
class ChainBuilder {
  public:
    explicit ChainBuilder(const FlowState& flow)
        : flow_(flow), view_(flow.view()), co_(flow.backward_marks()) {
        seen_.assign(2 * view_.count(), 0);
        build_residual();
    }

    SeparatorChain build() {
        SeparatorChain chain;
        chain.ell = flow_.value();
        std::vector<int> rank = compute_ranks();
        int max_rank = 0;
        for (int r : rank) max_rank = std::max(max_rank, r);

        flood(out_node(flow_.query().source));
        record(chain);
        // After the last rank every cut vertex of the farthest separator is
        // seeded, so the chain necessarily ends on that separator.
        for (int r = 1; r <= max_rank; ++r) {
            for (int a = 0; a < view_.count(); ++a)
                if (rank[a] == r && !seen_[in_node(a)]) flood(in_node(a));
            if (!delta_.empty()) record(chain);
        }
        return chain;
    }

  private:
    // Materializes the residual arcs once; every later phase (forward marks,
    // Tarjan, rank pass, floods) is a plain scan over this CSR.
    void build_residual() {
        int n2 = 2 * view_.count();
        rstart_.assign(n2 + 1, 0);
        for (int pass = 0; pass < 2; ++pass) {
            auto emit = [&](int node, int y) {
                if (pass == 0)
                    ++rstart_[node + 1];
                else
                    rarc_[rstart_[node]++] = y;
            };
            for (int a = 0; a < view_.count(); ++a) {
                if (!view_.alive(a)) continue;
                flow_.for_arcs(a, [&](int b, int into) {
                    if (into <= 0) emit(out_node(a), in_node(b));
                    if (into > 0) emit(in_node(a), out_node(b));
                });
                if (flow_.vertex_flow_[a] > 0) emit(out_node(a), in_node(a));
                if (view_.is_blocked(a) || flow_.vertex_flow_[a] == 0)
                    emit(in_node(a), out_node(a));
            }
            if (pass == 0) {
                for (int x = 0; x < n2; ++x) rstart_[x + 1] += rstart_[x];
                rarc_.resize(rstart_[n2]);
            } else {
                // restore the starts shifted by the fill
                for (int x = n2; x > 0; --x) rstart_[x] = rstart_[x - 1];
                rstart_[0] = 0;
            }
        }
    }

    template <class F>
    void successors(int node, F&& f) const {
        for (int i = rstart_[node]; i < rstart_[node + 1]; ++i) f(rarc_[i]);
    }

    // Iterative Tarjan over the residual graph; components_ are emitted in
    // completion order, i.e. successors of a component always come earlier.
    void condense() {
        int n2 = 2 * view_.count();
        comp_.assign(n2, -1);
        comp_start_.assign(1, 0);
        comp_items_.reserve(n2);
        std::vector<int> low(n2, -1), num(n2, -1), stack;
        std::vector<char> on_stack(n2, 0);
        std::vector<std::pair<int, int>> frames;  // (node, next arc index)
        int counter = 0;
        for (int root = 0; root < n2; ++root) {
            if (num[root] != -1 || !view_.alive(root / 2)) continue;
            frames.push_back({root, rstart_[root]});
            while (!frames.empty()) {
                auto& [x, i] = frames.back();
                if (num[x] == -1) {
                    num[x] = low[x] = counter++;
                    stack.push_back(x);
                    on_stack[x] = 1;
                }
                bool descended = false;
                while (i < rstart_[x + 1]) {
                    int y = rarc_[i++];
                    if (num[y] == -1) {
                        frames.push_back({y, rstart_[y]});
                        descended = true;
                        break;
                    }
                    if (on_stack[y]) low[x] = std::min(low[x], num[y]);
                }
                if (descended) continue;
                if (low[x] == num[x]) {
                    int c = static_cast<int>(comp_start_.size()) - 1;
                    for (;;) {
                        int y = stack.back();
                        stack.pop_back();
                        on_stack[y] = 0;
                        comp_[y] = c;
                        comp_items_.push_back(y);
                        if (y == x) break;
                    }
                    comp_start_.push_back(static_cast<int>(comp_items_.size()));
                }
                int done = frames.back().first;
                frames.pop_back();
                if (!frames.empty()) {
                    int px = frames.back().first;
                    low[px] = std::min(low[px], low[done]);
                }
            }
        }
    }

    // rank[a] > 0 marks vertices lying on some minimum separator; higher
    // rank = captured by a later layer. Computed by one pass over the
    // components in completion order (all successors already done).
    std::vector<int> compute_ranks() {
        std::vector<char> fwd(2 * view_.count(), 0);
        mark_forward(fwd);
        condense();

        int n = view_.count();
        std::vector<int> rank(n, 0);
        std::vector<char> active(n, 0);
        for (int a = 0; a < n; ++a)
            active[a] = view_.alive(a) && !view_.is_blocked(a) &&
                        a != flow_.query().source &&
                        flow_.vertex_flow_[a] > 0 && !co_[in_node(a)] &&
                        !fwd[out_node(a)] &&
                        comp_[in_node(a)] != comp_[out_node(a)];

        int comps = static_cast<int>(comp_start_.size()) - 1;
        std::vector<int> rho(comps, 0);
        for (int c = 0; c < comps; ++c) {
            int best = 0;
            for (int i = comp_start_[c]; i < comp_start_[c + 1]; ++i) {
                int x = comp_items_[i];
                successors(x, [&](int y) {
                    if (comp_[y] != c) best = std::max(best, rho[comp_[y]]);
                });
                if (x % 2 == 1 && active[x / 2])
                    best = std::max(best, rank[x / 2]);
            }
            rho[c] = best;
            for (int i = comp_start_[c]; i < comp_start_[c + 1]; ++i) {
                int x = comp_items_[i];
                if (x % 2 == 0 && active[x / 2]) rank[x / 2] = 1 + best;
            }
        }
        return rank;
    }

    void mark_forward(std::vector<char>& seen) const {
        std::vector<int> queue{out_node(flow_.query().source)};
        seen[queue[0]] = 1;
        for (size_t h = 0; h < queue.size(); ++h)
            successors(queue[h], [&](int y) {
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            });
    }

    void flood(int node) {
        if (seen_[node]) return;
        // Layers stay on the source side: nothing co-reaching the absorbing
        // side is ever flooded.
        assert(!co_[node]);
        seen_[node] = 1;
        if (node % 2 == 1)
            delta_.push_back(node / 2);
        else
            pending_in_.push_back(node / 2);
        std::vector<int> queue{node};
        for (size_t h = 0; h < queue.size(); ++h)
            successors(queue[h], [&](int y) {
                if (seen_[y]) return;
                assert(!co_[y]);
                seen_[y] = 1;
                if (y % 2 == 1)
                    delta_.push_back(y / 2);
                else
                    pending_in_.push_back(y / 2);
                queue.push_back(y);
            });
    }

    void record(SeparatorChain& chain) {
        chain.deltas.push_back(delta_);
        delta_.clear();
        // compact the persistent frontier: in-visited, out still unseen
        std::vector<int> boundary;
        for (int a : pending_in_)
            if (!seen_[out_node(a)]) boundary.push_back(a);
        pending_in_ = boundary;
        std::sort(boundary.begin(), boundary.end());
        assert(static_cast<int>(boundary.size()) == chain.ell);
        chain.boundaries.push_back(std::move(boundary));
    }

    const FlowState& flow_;
    const AuxView& view_;
    std::vector<char> co_;    // co-reachability of the absorbing side
    std::vector<char> seen_;
    std::vector<int> comp_;
    // components flat, in completion order: comp_items_[comp_start_[c]..)
    std::vector<int> comp_start_, comp_items_;
    std::vector<int> delta_;
    std::vector<int> pending_in_;
    std::vector<int> rstart_;  // residual arc CSR over split nodes
    std::vector<int> rarc_;
};

SeparatorChain separator_chain(const FlowState& flow) {
    assert(!flow.exceeds_cap() && flow.value() >= 1);
    return ChainBuilder(flow).build();
}

CruxOutcome classify_crux(const AuxView& view, const CutQuery& q) {
    FlowState flow(view, q);
    CruxOutcome out;
    if (flow.exceeds_cap()) {
        out.kind = CruxOutcome::Kind::NoSmallSeparator;
        return out;
    }
    assert(flow.value() >= 1);
    out.chain = separator_chain(flow);

    // Scan the closures N[J_i] in chain order for the first base vertex
    // acquiring a second copy; counters carry over since the closures nest.
    std::vector<char> counted(view.count(), 0);
    std::vector<int> first_label(view.instance().n() + 1, 0);
    auto add = [&](int a) -> bool {
        if (counted[a]) return false;
        counted[a] = 1;
        int b = view.base(a), l = view.label(a);
        if (first_label[b] == 0) {
            first_label[b] = l;
            return false;
        }
        out.witness_base = b;
        out.witness_label1 = first_label[b];
        out.witness_label2 = l;
        return true;
    };
    for (int i = 1; i <= out.chain.q() && out.bad_index == 0; ++i) {
        std::vector<int> members = out.chain.deltas[i - 1];
        members.insert(members.end(), out.chain.boundaries[i - 1].begin(),
                       out.chain.boundaries[i - 1].end());
        std::sort(members.begin(), members.end());
        for (int a : members) {
            if (add(a)) {
                out.bad_index = i;
                break;
            }
        }
    }

    if (out.bad_index == 0)
        out.kind = CruxOutcome::Kind::GoodClosestToT;
    else if (out.bad_index == 1)
        out.kind = CruxOutcome::Kind::NoGoodMinimum;
    else
        out.kind = CruxOutcome::Kind::GoodBadPair;
    return out;
}

namespace {

std::vector<int> unwind(const std::vector<int>& pred, int from, int to) {
    std::vector<int> path;
    for (int a = to; a != from; a = pred[a]) path.push_back(a);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<int> crossing_path(const AuxView& view, int source, int target,
                               const std::vector<int>& region1,
                               const std::vector<int>& s1,
                               const std::vector<int>& region2) {
    std::vector<char> in_r1(view.count(), 0), in_s1(view.count(), 0),
        in_r2(view.count(), 0);
    for (int a : region1) in_r1[a] = 1;
    for (int a : s1) in_s1[a] = 1;
    for (int a : region2) in_r2[a] = 1;

    std::vector<int> pred(view.count(), -1);
    // BFS where only `may_expand` vertices are traversed internally; the
    // start vertex is exempt and goal vertices terminate the search.
    auto bfs = [&](int start, auto&& may_expand, auto&& is_goal) -> int {
        std::fill(pred.begin(), pred.end(), -1);
        std::vector<int> queue{start};
        pred[start] = start;
        for (size_t h = 0; h < queue.size(); ++h) {
            int a = queue[h];
            if (a != start && !may_expand(a)) continue;
            int found = -1;
            view.for_neighbors(a, [&](int b) {
                if (found >= 0 || pred[b] != -1) return;
                pred[b] = a;
                if (is_goal(b))
                    found = b;
                else
                    queue.push_back(b);
            });
            if (found >= 0) return found;
        }
        return -1;
    };

    if (in_r1[target] || in_s1[target]) {
        // Target already inside R[v_alpha, S_1]: one search through the
        // region; S_1 can only be met at the endpoint.
        if (target == source) return {source};
        int got = bfs(
            source, [&](int a) { return static_cast<bool>(in_r1[a]); },
            [&](int a) { return a == target; });
        if (got < 0) throw std::logic_error("target unreachable inside region");
        return unwind(pred, source, target);
    }

    // Leg 1: target -> some x in S_1, staying inside R(v_alpha, S_2) and
    // meeting neither separator internally.
    int x = bfs(
        target, [&](int a) { return in_r2[a] && !in_s1[a]; },
        [&](int a) { return static_cast<bool>(in_s1[a]); });
    if (x < 0) throw std::logic_error("target does not reach S_1");
    std::vector<int> leg1 = unwind(pred, target, x);  // target ... x

    // Leg 2: source -> x through R(v_alpha, S_1).
    int got = bfs(
        source, [&](int a) { return static_cast<bool>(in_r1[a]); },
        [&](int a) { return a == x; });
    if (got < 0) throw std::logic_error("separator vertex unreachable from source");
    std::vector<int> path = unwind(pred, source, x);
    for (auto it = leg1.rbegin() + 1; it != leg1.rend(); ++it) path.push_back(*it);
    return path;
}

std::pair<std::vector<int>, std::vector<int>> two_paths(
    const AuxView& view, int source, int target1, int target2,
    const std::vector<int>& region1, const std::vector<int>& s1,
    const std::vector<int>& region2, const std::vector<int>& s2) {
    for (int t : {target1, target2}) {
        bool inside =
            std::find(region2.begin(), region2.end(), t) != region2.end() ||
            std::find(s2.begin(), s2.end(), t) != s2.end();
        if (!inside)
            throw std::invalid_argument("two_paths target outside R[v_alpha,S_2]");
    }
    return {crossing_path(view, source, target1, region1, s1, region2),
            crossing_path(view, source, target2, region1, s1, region2)};
}

}  // namespace ulc
