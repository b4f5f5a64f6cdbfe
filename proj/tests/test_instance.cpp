#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ulc/instance.hpp"

using namespace ulc;

namespace {

Instance triangle(int s, int k) {
    std::vector<GraphEdge> edges{{1, 2, Permutation::identity(s)},
                                 {1, 3, Permutation::identity(s)},
                                 {2, 3, Permutation::identity(s)}};
    return make_instance(3, s, k, std::move(edges));
}

}  // namespace

TEST_CASE("tau helpers") {
    CHECK(tau_full(3) == 0b111);
    CHECK(tau_size(tau_full(5)) == 5);
    CHECK(tau_contains(tau_full(3), 3));
    CHECK(!tau_contains(tau_single(2), 1));
    CHECK(tau_first(tau_single(4)) == 4);
    CHECK(tau_first(0b110) == 2);
}

TEST_CASE("make_instance defaults: full tau, everyone alive and deletable") {
    Instance inst = triangle(3, 1);
    CHECK(inst.n() == 3);
    CHECK(inst.m() == 3);
    CHECK(inst.s() == 3);
    CHECK(inst.k == 1);
    for (int v = 1; v <= 3; ++v) {
        CHECK(inst.tau[v] == tau_full(3));
        CHECK(inst.alive[v]);
        CHECK(!inst.undeletable[v]);
    }
    CHECK(inst.topo->adj[1].size() == 2);
    CHECK(inst.alive_edge_count() == 3);
    inst.alive[2] = 0;
    CHECK(inst.alive_edge_count() == 1);
}

TEST_CASE("edge image works from both endpoints") {
    std::vector<GraphEdge> edges{{1, 2, Permutation({2, 3, 1})}};
    Instance inst = make_instance(2, 3, 0, std::move(edges));
    // from the smaller endpoint: the permutation itself
    CHECK(inst.topo->image(0, 1, 1) == 2);
    CHECK(inst.topo->image(0, 1, 3) == 1);
    // from the larger endpoint: its inverse
    CHECK(inst.topo->image(0, 2, 2) == 1);
    CHECK(inst.topo->image(0, 2, 1) == 3);
}

TEST_CASE("alive_components ordered by smallest member") {
    std::vector<GraphEdge> edges{{2, 5, Permutation::identity(2)},
                                 {3, 4, Permutation::identity(2)}};
    Instance inst = make_instance(5, 2, 0, std::move(edges));
    auto comps = alive_components(inst);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1});
    CHECK(comps[1] == std::vector<int>{2, 5});
    CHECK(comps[2] == std::vector<int>{3, 4});

    inst.alive[2] = 0;
    comps = alive_components(inst);
    REQUIRE(comps.size() == 3);
    CHECK(comps[1] == std::vector<int>{3, 4});
    CHECK(comps[2] == std::vector<int>{5});
}

TEST_CASE("verify_solution accepts a valid witness") {
    Instance inst = triangle(2, 1);
    Solution sol;
    sol.yes = true;
    sol.labels = {0, 1, 1, 1};
    CHECK(verify_solution(inst, sol).ok());
}

TEST_CASE("verify_solution rejects each failure mode") {
    Instance inst = triangle(2, 1);

    Solution sol;
    sol.yes = true;
    sol.deletions = {1, 2};
    sol.labels = {0, 0, 0, 1};
    CHECK(verify_solution(inst, sol).status == VerifyStatus::BudgetExceeded);

    inst.undeletable[2] = 1;
    sol.deletions = {2};
    sol.labels = {0, 1, 0, 1};
    auto vr = verify_solution(inst, sol);
    CHECK(vr.status == VerifyStatus::UndeletableDeleted);
    CHECK(vr.detail == 2);
    inst.undeletable[2] = 0;

    inst.tau[3] = tau_single(2);
    sol.deletions.clear();
    sol.labels = {0, 1, 1, 1};
    vr = verify_solution(inst, sol);
    CHECK(vr.status == VerifyStatus::TauViolation);
    CHECK(vr.detail == 3);
    inst.tau[3] = tau_full(2);

    sol.labels = {0, 1, 1, 2};
    vr = verify_solution(inst, sol);
    CHECK(vr.status == VerifyStatus::EdgeViolation);
}

TEST_CASE("edge constraint uses the permutation, not equality") {
    std::vector<GraphEdge> edges{{1, 2, Permutation::swap12(2)}};
    Instance inst = make_instance(2, 2, 0, std::move(edges));
    Solution sol;
    sol.yes = true;
    sol.labels = {0, 1, 2};
    CHECK(verify_solution(inst, sol).ok());
    sol.labels = {0, 1, 1};
    CHECK(verify_solution(inst, sol).status == VerifyStatus::EdgeViolation);
}

TEST_CASE("force_deletions removes empty-tau vertices and spends budget") {
    Instance inst = triangle(2, 2);
    inst.tau[1] = 0;
    inst.tau[3] = 0;
    std::vector<int> deleted;
    CHECK(force_deletions(inst, deleted));
    CHECK(deleted == std::vector<int>{1, 3});
    CHECK(inst.k == 0);
    CHECK(!inst.alive[1]);
    CHECK(inst.alive[2]);
}

TEST_CASE("force_deletions fails on undeletable empty tau or empty budget") {
    Instance inst = triangle(2, 1);
    inst.tau[2] = 0;
    inst.undeletable[2] = 1;
    std::vector<int> deleted;
    CHECK(!force_deletions(inst, deleted));

    Instance inst2 = triangle(2, 1);
    inst2.tau[1] = 0;
    inst2.tau[2] = 0;
    deleted.clear();
    CHECK(!force_deletions(inst2, deleted));  // two to delete, budget one
}
