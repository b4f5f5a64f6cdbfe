#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ulc/generators.hpp"
#include "ulc/separators.hpp"

using namespace ulc;

namespace {

// Independent ground truth: S separates the source from T iff every
// source-sink walk meets S, where sinks count even as bare endpoints.
bool separates(const AuxView& view, int source, const std::set<int>& cut) {
    std::vector<char> seen(view.count(), 0);
    std::vector<int> queue{source};
    seen[source] = 1;
    bool leak = false;
    for (size_t h = 0; h < queue.size() && !leak; ++h) {
        view.for_neighbors(queue[h], [&](int b) {
            if (seen[b] || cut.count(b)) return;
            seen[b] = 1;
            if (view.is_sink(b))
                leak = true;
            else
                queue.push_back(b);
        });
    }
    return !leak;
}

// All minimum separators avoiding blocked vertices, by brute subset
// enumeration over the cuttable aux vertices. Empty result = none exists.
std::vector<std::set<int>> enumerate_min_seps(const AuxView& view, int source) {
    std::vector<int> cand;
    for (int a = 0; a < view.count(); ++a)
        if (view.alive(a) && !view.is_blocked(a) && a != source)
            cand.push_back(a);
    for (size_t size = 0; size <= cand.size(); ++size) {
        std::vector<std::set<int>> found;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::set<int> cut;
            for (size_t i : idx) cut.insert(cand[i]);
            if (separates(view, source, cut)) found.push_back(std::move(cut));
            if (size == 0) break;
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && idx[i] == cand.size() - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found.empty()) return found;
    }
    return {};
}

Instance anchored(Instance inst, int v, int label) {
    inst.tau[v] = tau_single(label);
    inst.undeletable[v] = 1;
    inst.anchor = v;
    return inst;
}

Instance identity_gadget(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<GraphEdge> ge;
    for (auto [u, v] : edges) ge.push_back({u, v, Permutation::identity(2)});
    return make_instance(n, 2, 1, std::move(ge));
}

}  // namespace

TEST_CASE("path gadget: unit flow, both cuts, three-step chain") {
    // aux picture around the anchor: v_alpha -> a -> b -> t
    Instance inst =
        anchored(identity_gadget(4, {{1, 2}, {2, 3}, {3, 4}}), 1, 1);
    inst.tau[4] = tau_single(2);  // 4_1 is the sink
    AuxView view(inst);
    int src = view.index(1, 1);
    FlowState flow(view, {src, 5});
    CHECK(!flow.exceeds_cap());
    CHECK(flow.value() == 1);
    CHECK(closest_min_separator(flow, CutSide::Source) ==
          std::vector<int>{view.index(2, 1)});
    // the separator closest to T cuts the walk at its endpoint
    CHECK(closest_min_separator(flow, CutSide::Sink) ==
          std::vector<int>{view.index(4, 1)});
    SeparatorChain chain = separator_chain(flow);
    CHECK(chain.q() == 3);
    CHECK(chain.boundaries[0] == std::vector<int>{view.index(2, 1)});
    CHECK(chain.boundaries[1] == std::vector<int>{view.index(3, 1)});
    CHECK(chain.boundaries[2] == std::vector<int>{view.index(4, 1)});
    CHECK(chain.region(1) == std::vector<int>{src});
}

TEST_CASE("two disjoint paths to an uncuttable sink: flow two") {
    Instance inst =
        anchored(identity_gadget(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), 1, 1);
    inst.tau[4] = tau_single(2);
    inst.undeletable[4] = 1;  // the endpoint itself cannot be cut
    AuxView view(inst);
    FlowState flow(view, {view.index(1, 1), 5});
    CHECK(flow.value() == 2);

    // with both midpoints blocked nothing can be cut at all
    inst.undeletable[2] = inst.undeletable[3] = 1;
    AuxView view2(inst);
    FlowState blocked(view2, {view2.index(1, 1), 50});
    CHECK(blocked.exceeds_cap());
}

TEST_CASE("a cuttable endpoint caps the flow at one") {
    // same diamond, but deleting vertex 4 is allowed, so {4_1} is a cut
    Instance inst =
        anchored(identity_gadget(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), 1, 1);
    inst.tau[4] = tau_single(2);
    AuxView view(inst);
    FlowState flow(view, {view.index(1, 1), 5});
    CHECK(flow.value() == 1);
    CHECK(closest_min_separator(flow, CutSide::Sink) ==
          std::vector<int>{view.index(4, 1)});
}

TEST_CASE("diamond gadget: bottleneck then endpoint") {
    // v_alpha -> {a,b} -> c -> t
    Instance inst = anchored(
        identity_gadget(5, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}}), 1, 1);
    inst.tau[5] = tau_single(2);
    AuxView view(inst);
    FlowState flow(view, {view.index(1, 1), 5});
    CHECK(flow.value() == 1);
    CHECK(closest_min_separator(flow, CutSide::Source) ==
          std::vector<int>{view.index(4, 1)});
    SeparatorChain chain = separator_chain(flow);
    CHECK(chain.q() == 2);
    CHECK(chain.boundaries[0] == std::vector<int>{view.index(4, 1)});
    CHECK(chain.boundaries[1] == std::vector<int>{view.index(5, 1)});
}

TEST_CASE("zero-budget query with only an undeletable route is hopeless") {
    Instance inst = anchored(identity_gadget(3, {{1, 2}, {2, 3}}), 1, 1);
    inst.tau[3] = tau_single(2);
    inst.undeletable[2] = 1;
    inst.undeletable[3] = 1;
    AuxView view(inst);
    FlowState flow(view, {view.index(1, 1), 0});
    CHECK(flow.exceeds_cap());
}

namespace {

// Every enumerated minimum separator must lie on the union of the chain
// boundaries, and every boundary must itself be a minimum separator.
void check_chain_covers(const Instance& inst, int v, int label) {
    AuxView view(inst);
    int src = view.index(v, label);
    FlowState flow(view, {src, view.count()});
    REQUIRE(!flow.exceeds_cap());
    auto seps = enumerate_min_seps(view, src);
    REQUIRE(!seps.empty());
    REQUIRE(flow.value() == static_cast<int>(seps.front().size()));
    SeparatorChain chain = separator_chain(flow);
    std::set<int> all_boundary;
    for (const auto& bnd : chain.boundaries) {
        CHECK(static_cast<int>(bnd.size()) == chain.ell);
        CHECK(separates(view, src, {bnd.begin(), bnd.end()}));
        all_boundary.insert(bnd.begin(), bnd.end());
    }
    for (const auto& s : seps)
        for (int a : s) CHECK(all_boundary.count(a) == 1);
}

}  // namespace

TEST_CASE("chain covers separators strictly between consecutive boundaries") {
    // Nine-vertex swap wiring where a minimum separator sits strictly
    // between two adjacent layer boundaries in the cut lattice; a chain
    // advancing in coarse steps used to skip it.
    std::vector<GraphEdge> edges;
    for (auto [u, v] : {std::pair{3, 5}, {5, 6}, {1, 9}, {1, 3}, {5, 8},
                        {7, 9}, {8, 9}, {7, 8}, {2, 5}, {5, 9}})
        edges.push_back({u, v, Permutation::swap12(2)});
    Instance inst = make_instance(9, 2, 1, edges);
    inst.undeletable[2] = 1;
    inst = anchored(std::move(inst), 1, 1);
    check_chain_covers(inst, 1, 1);
}

TEST_CASE("augmentation never pushes against existing net edge flow") {
    // A second augmenting path once rerouted the first through a spurious
    // forward arc, leaving stale per-vertex flow and an oversized boundary.
    std::vector<GraphEdge> edges;
    for (auto [u, v] :
         {std::pair{2, 6}, {2, 10}, {3, 9}, {3, 11}, {4, 7}, {4, 10}, {5, 6},
          {5, 11}, {6, 7}, {6, 11}, {8, 9}, {8, 11}})
        edges.push_back({u, v, Permutation::swap12(2)});
    Instance inst = make_instance(11, 2, 1, edges);
    inst.undeletable[10] = 1;
    inst = anchored(std::move(inst), 2, 1);
    check_chain_covers(inst, 2, 1);
}

TEST_CASE("randomized flow and chain invariants against brute enumeration") {
    std::mt19937_64 rng(11);
    int with_cut = 0, without = 0, bad_pairs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        RandomSpec spec;
        spec.n = 4 + static_cast<int>(rng() % 2);
        spec.s = 2 + static_cast<int>(rng() % 2);
        spec.p = 0.45;
        spec.p_full = 0.55;
        spec.seed = rng();
        Instance inst = gen_random(spec);
        int v = 1 + static_cast<int>(rng() % inst.n());
        int lab = tau_first(inst.tau[v]);
        inst = anchored(std::move(inst), v, lab);
        if (rng() % 3 == 0) {
            int u = 1 + static_cast<int>(rng() % inst.n());
            inst.undeletable[u] = 1;
        }
        AuxView view(inst);
        int src = view.index(v, lab);
        auto seps = enumerate_min_seps(view, src);
        FlowState flow(view, {src, view.count()});

        if (seps.empty()) {
            CHECK(flow.exceeds_cap());
            ++without;
            continue;
        }
        int ell = static_cast<int>(seps.front().size());
        REQUIRE(!flow.exceeds_cap());
        CHECK(flow.value() == ell);  // Menger consistency
        if (ell == 0) continue;      // no path at all: nothing to chain

        // give-up threshold honored
        if (ell > 0) CHECK(FlowState(view, {src, ell - 1}).exceeds_cap());

        for (CutSide side : {CutSide::Source, CutSide::Sink}) {
            auto cut = closest_min_separator(flow, side);
            CHECK(static_cast<int>(cut.size()) == ell);
            CHECK(separates(view, src, {cut.begin(), cut.end()}));
            for (int a : cut) CHECK(!view.is_blocked(a));
        }

        SeparatorChain chain = separator_chain(flow);
        CHECK(chain.ell == ell);
        CHECK(chain.boundaries.front() ==
              closest_min_separator(flow, CutSide::Source));
        CHECK(chain.boundaries.back() ==
              closest_min_separator(flow, CutSide::Sink));
        std::set<int> region, all_boundary;
        for (int i = 0; i < chain.q(); ++i) {
            CHECK(!chain.deltas[i].empty());
            for (int a : chain.deltas[i])
                CHECK(region.insert(a).second);  // deltas are disjoint
            const auto& bnd = chain.boundaries[i];
            CHECK(static_cast<int>(bnd.size()) == ell);
            CHECK(separates(view, src, {bnd.begin(), bnd.end()}));
            for (int a : bnd) {
                CHECK(!region.count(a));  // boundary is outside its region
                all_boundary.insert(a);
            }
        }
        CHECK(region.count(src) == 1);
        // every minimum separator lives on the union of the boundaries
        for (const auto& s : seps)
            for (int a : s) CHECK(all_boundary.count(a) == 1);
        ++with_cut;

        // classifier agrees with a direct regularity scan of the closures
        CruxOutcome crux = classify_crux(view, {src, view.count()});
        int first_bad = 0;
        std::set<int> bases;
        std::set<int> closure;
        for (int i = 1; i <= chain.q() && first_bad == 0; ++i) {
            for (int a : chain.deltas[i - 1]) closure.insert(a);
            for (int a : chain.boundaries[i - 1]) closure.insert(a);
            bases.clear();
            for (int a : closure)
                if (!bases.insert(view.base(a)).second) first_bad = i;
        }
        CHECK(crux.bad_index == first_bad);
        if (first_bad == 0) {
            CHECK(crux.kind == CruxOutcome::Kind::GoodClosestToT);
        } else if (first_bad == 1) {
            CHECK(crux.kind == CruxOutcome::Kind::NoGoodMinimum);
        } else {
            CHECK(crux.kind == CruxOutcome::Kind::GoodBadPair);
            ++bad_pairs;
            CHECK(crux.witness_label1 != crux.witness_label2);

            // the two witness paths and their containment contract
            std::vector<int> region1 = chain.region(crux.bad_index - 1);
            std::vector<int> region2 = chain.region(crux.bad_index);
            int t1 = view.index(crux.witness_base, crux.witness_label1);
            int t2 = view.index(crux.witness_base, crux.witness_label2);
            auto [p1, p2] = two_paths(view, src, t1, t2, region1, crux.s1(),
                                      region2, crux.s2());
            std::set<int> s1(crux.s1().begin(), crux.s1().end());
            std::set<int> s2(crux.s2().begin(), crux.s2().end());
            for (auto* pp : {&p1, &p2}) {
                const auto& p = *pp;
                REQUIRE(!p.empty());
                CHECK(p.front() == src);
                CHECK((p.back() == t1 || p.back() == t2));
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                    auto nb = view.neighbors(p[i]);
                    CHECK(std::find(nb.begin(), nb.end(), p[i + 1]) != nb.end());
                }
                // internally the path touches the two separators at most
                // once, and only at an S_1 vertex (which may be shared with
                // S_2 when a cut vertex is common to both boundaries)
                int internal_hits = 0;
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                    if (s1.count(p[i]) || s2.count(p[i])) {
                        ++internal_hits;
                        CHECK(s1.count(p[i]) == 1);
                    }
                }
                CHECK(internal_hits <= 1);
            }
            CHECK(p1.back() == t1);
            CHECK(p2.back() == t2);
        }
    }
    // the sweep must actually exercise all three worlds
    CHECK(with_cut > 100);
    CHECK(without > 5);
    CHECK(bad_pairs > 3);
}
