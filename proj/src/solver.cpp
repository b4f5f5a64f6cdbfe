#include "ulc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "ulc/aux_graph.hpp"
#include "ulc/feasibility.hpp"
#include "ulc/separators.hpp"

namespace ulc {

namespace {

int anchor_source(const Instance& inst) {
    return AuxView(inst).index(inst.anchor, inst.anchor_label());
}

// Persistence step: every copy u_gamma in the (regular) region gets its label
// pinned and its base vertex becomes undeletable.
void fix_region(Instance& inst, const std::vector<int>& region) {
    AuxView view(inst);
    for (int a : region) {
        int b = view.base(a);
        inst.tau[b] = tau_single(view.label(a));
        inst.undeletable[b] = 1;
    }
}

BranchNode make_child(const BranchNode& node) {
    BranchNode c = node;
    ++c.depth;
    return c;
}

BranchNode delete_child(const BranchNode& node, int v) {
    BranchNode c = make_child(node);
    assert(!c.inst.undeletable[v] && c.inst.alive[v] && c.inst.k > 0);
    c.inst.alive[v] = 0;
    --c.inst.k;
    c.deleted.push_back(v);
    return c;
}

// Re-derives lambda per child and enforces the measure bookkeeping: mu
// strictly decreases everywhere, lambda strictly increases where the rule
// analysis promises it, and deletions lose at most s units of lambda.
void check_measures(const StepResult& res, const std::vector<char>& must_raise,
                    int s, int kp, int lambda_p) {
    int cap = s * kp;
    int mu_p = (s + 1) * kp - lambda_p;
    for (size_t i = 0; i < res.children.size(); ++i) {
        const BranchNode& c = res.children[i];
        int lc = c.inst.anchor ? measure_lambda(c.inst, cap) : 0;
        int mu_c = (s + 1) * c.inst.k - lc;
        auto detail = [&](const char* what) {
            return std::string(what) + " (rule=" + std::to_string(res.rule) +
                   " child=" + std::to_string(i) + " k=" + std::to_string(kp) +
                   "->" + std::to_string(c.inst.k) + " lambda=" +
                   std::to_string(lambda_p) + "->" + std::to_string(lc) + ")";
        };
        if (mu_c >= mu_p)
            throw std::logic_error(detail("measure did not decrease in a child"));
        if (!must_raise.empty() && must_raise[i] && lc <= lambda_p)
            throw std::logic_error(detail("cut value did not increase in a child"));
        if (c.inst.k < kp && lambda_p <= cap && lc < lambda_p - s)
            throw std::logic_error(
                detail("deletion dropped the cut value by more than s"));
    }
}

}  // namespace

int measure_lambda(const Instance& inst, int cap) {
    assert(inst.anchor != 0);
    AuxView view(inst);
    FlowState flow(view, {anchor_source(inst), cap});
    return flow.exceeds_cap() ? cap + 1 : flow.value();
}

StepResult step(BranchNode node, const SolveOptions& opts) {
    StepResult res;
    auto trace = [&](const char* what) {
        if (opts.trace)
            *opts.trace << "d=" << node.depth << " k=" << node.inst.k
                        << " anchor=" << node.inst.anchor << ' ' << what << '\n';
    };

    // (1) vertices whose label set emptied must go.
    if (!force_deletions(node.inst, node.deleted)) {
        trace("leaf=NO forced-deletion");
        return res;
    }

    // (2) satisfied components leave the graph, keeping their labeling.
    std::vector<std::vector<int>> infeasible;
    for (auto& comp : alive_components(node.inst)) {
        ComponentLabeling lab = component_feasible(node.inst, comp);
        if (!lab.feasible) {
            infeasible.push_back(std::move(comp));
            continue;
        }
        for (auto [v, l] : lab.labels) {
            node.labels[v] = l;
            node.inst.alive[v] = 0;
        }
        if (node.inst.anchor != 0 && !node.inst.alive[node.inst.anchor])
            node.inst.anchor = 0;
    }
    if (infeasible.empty()) {
        trace("leaf=YES");
        res.kind = StepResult::Kind::Yes;
        res.labels = std::move(node.labels);
        res.deletions = std::move(node.deleted);
        return res;
    }

    // (3) something is still unsatisfied and nothing may be deleted.
    if (node.inst.k == 0) {
        trace("leaf=NO budget");
        return res;
    }

    const int s = node.inst.s();
    const int kp = node.inst.k;

    // (4) no anchor yet: guess the fate of one vertex (rule B0).
    if (node.inst.anchor == 0) {
        int v = 0;
        for (int u : infeasible.front())
            if (!node.inst.undeletable[u] && (v == 0 || u < v)) v = u;
        if (v == 0) {
            trace("leaf=NO stuck-component");
            return res;
        }
        res.kind = StepResult::Kind::Children;
        res.rule = 0;
        res.children.push_back(delete_child(node, v));
        for (int q = 1; q <= s; ++q) {
            if (!tau_contains(node.inst.tau[v], q)) continue;
            BranchNode c = make_child(node);
            c.inst.tau[v] = tau_single(q);
            c.inst.undeletable[v] = 1;
            c.inst.anchor = v;
            res.children.push_back(std::move(c));
        }
        trace("rule=B0");
        if (opts.assert_measure) check_measures(res, {}, s, kp, 0);
        return res;
    }

    assert(tau_size(node.inst.tau[node.inst.anchor]) == 1 &&
           node.inst.undeletable[node.inst.anchor]);

    // (5)/(6) cut structure around the anchor copy.
    AuxView view(node.inst);
    CruxOutcome crux = classify_crux(view, {anchor_source(node.inst), s * kp});
    if (crux.kind == CruxOutcome::Kind::NoSmallSeparator) {
        trace("leaf=NO no-small-separator");
        return res;
    }
    const int lambda_p = crux.chain.ell;
    assert(lambda_p >= 1);  // the anchor's component is infeasible
    res.kind = StepResult::Kind::Children;
    std::vector<char> must_raise;

    if (crux.kind == CruxOutcome::Kind::GoodClosestToT) {
        // Rule B1: the whole region up to the last separator is persistent;
        // one separator vertex either goes or gets pinned.
        res.rule = 1;
        fix_region(node.inst, crux.chain.region(crux.chain.q()));
        const std::vector<int>& sep = crux.closest_to_t();
        int x_aux = *std::min_element(sep.begin(), sep.end());
        int x = view.base(x_aux);
        res.children.push_back(delete_child(node, x));
        must_raise = {0};
        if (tau_contains(node.inst.tau[x], view.label(x_aux))) {
            BranchNode c = make_child(node);
            c.inst.undeletable[x] = 1;
            c.inst.tau[x] = tau_single(view.label(x_aux));
            res.children.push_back(std::move(c));
            must_raise.push_back(1);
        }
        // else the separator cuts at a forbidden copy: keeping x would force
        // it to that label through the pinned region, so deletion is the
        // only option.
        trace("rule=B1");
    } else if (crux.kind == CruxOutcome::Kind::NoGoodMinimum) {
        // Rule B2: two copies of u next to the closest separator; delete u
        // or drop one of the two labels.
        res.rule = 2;
        int u = crux.witness_base;
        bool witness_forbidden =
            !tau_contains(node.inst.tau[u], crux.witness_label1) ||
            !tau_contains(node.inst.tau[u], crux.witness_label2);
        if (witness_forbidden) {
            // One witness copy is a path endpoint that can only be cut by
            // deleting u; keeping u settles that copy by itself, so the kept
            // branch needs no label pruning.
            assert(!node.inst.undeletable[u]);
            res.children.push_back(delete_child(node, u));
            BranchNode c = make_child(node);
            c.inst.undeletable[u] = 1;
            res.children.push_back(std::move(c));
            must_raise = {0, 1};
        } else {
            if (!node.inst.undeletable[u]) {
                res.children.push_back(delete_child(node, u));
                must_raise.push_back(0);
            }
            for (int g : {crux.witness_label1, crux.witness_label2}) {
                BranchNode c = make_child(node);
                c.inst.undeletable[u] = 1;
                c.inst.tau[u] &= ~tau_single(g);
                res.children.push_back(std::move(c));
                must_raise.push_back(1);
            }
        }
        trace("rule=B2");
    } else {
        // Rule B3: good separator S_1 under a bad one S_2. Two witness paths
        // pick out at most one S_1 vertex each.
        res.rule = 3;
        int u = crux.witness_base;
        std::vector<int> region1 = crux.chain.region(crux.bad_index - 1);
        std::vector<int> region2 = crux.chain.region(crux.bad_index);
        auto [p1, p2] = two_paths(view, anchor_source(node.inst),
                                  view.index(u, crux.witness_label1),
                                  view.index(u, crux.witness_label2), region1,
                                  crux.s1(), region2, crux.s2());
        auto s1_vertex = [&](const std::vector<int>& path) {
            for (int a : path)
                if (std::find(crux.s1().begin(), crux.s1().end(), a) !=
                    crux.s1().end())
                    return a;
            return -1;
        };
        int x1 = s1_vertex(p1), x2 = s1_vertex(p2);
        std::vector<int> doomed;
        for (int a : {x1, x2})
            if (a >= 0) doomed.push_back(view.base(a));
        if (!node.inst.undeletable[u]) doomed.push_back(u);
        // keep the listed order but emit each vertex once
        auto last = doomed.end();
        for (auto it = doomed.begin(); it != last;) {
            if (std::find(doomed.begin(), it, *it) != it)
                it = doomed.erase(it), last = doomed.end();
            else
                ++it;
        }
        for (int v : doomed) {
            res.children.push_back(delete_child(node, v));
            must_raise.push_back(0);
        }
        size_t first_kept = res.children.size();
        for (auto [x_aux, g] : {std::pair{x1, crux.witness_label1},
                                std::pair{x2, crux.witness_label2}}) {
            BranchNode c = make_child(node);
            fix_region(c.inst, region1);
            if (x_aux >= 0) c.inst.undeletable[view.base(x_aux)] = 1;
            // u is kept in this branch; recording that sharpens the cut
            // structure and, for a forbidden witness label, already settles
            // the corresponding copy without touching tau.
            c.inst.undeletable[u] = 1;
            if (tau_contains(node.inst.tau[u], g)) c.inst.tau[u] &= ~tau_single(g);
            if (res.children.size() > first_kept) {
                const Instance& prev = res.children[first_kept].inst;
                if (c.inst.tau == prev.tau &&
                    c.inst.undeletable == prev.undeletable)
                    continue;  // both labels forbidden and same path pin
            }
            res.children.push_back(std::move(c));
            must_raise.push_back(1);
        }
        trace("rule=B3");
    }

    if (opts.assert_measure) check_measures(res, must_raise, s, kp, lambda_p);
    return res;
}

Solution solve(const Instance& inst, const SolveOptions& opts,
               SearchStats* stats) {
    auto t0 = std::chrono::steady_clock::now();
    SearchStats st;
    const int depth_cap = (inst.s() + 1) * inst.k + 2;

    Solution sol;
    std::vector<BranchNode> stack;
    stack.push_back({inst, {}, std::vector<int>(inst.n() + 1, 0), 0});
    while (!stack.empty()) {
        BranchNode node = std::move(stack.back());
        stack.pop_back();
        ++st.nodes_expanded;
        st.max_depth = std::max(st.max_depth, node.depth);
        if (node.depth > depth_cap)
            throw std::logic_error("search depth exceeded its bound");
        StepResult r = step(std::move(node), opts);
        if (r.kind == StepResult::Kind::Yes) {
            sol.yes = true;
            sol.labels = std::move(r.labels);
            sol.deletions = std::move(r.deletions);
            std::sort(sol.deletions.begin(), sol.deletions.end());
            break;
        }
        if (r.kind == StepResult::Kind::Children) {
            ++st.rule_counts[r.rule];
            for (auto it = r.children.rbegin(); it != r.children.rend(); ++it)
                stack.push_back(std::move(*it));
        }
    }

    st.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (stats) *stats = st;
    assert(!sol.yes || verify_solution(inst, sol).ok());
    return sol;
}

}  // namespace ulc
