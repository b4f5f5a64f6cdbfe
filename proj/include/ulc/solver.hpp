#pragma once

#include <iosfwd>
#include <vector>

#include "ulc/instance.hpp"

namespace ulc {

// One node of the branching search: a restricted instance plus everything
// accumulated from the root (deletions in original ids, labels of components
// already satisfied and dropped).
struct BranchNode {
    Instance inst;
    std::vector<int> deleted;
    std::vector<int> labels;  // 1-based by vertex, 0 = not yet assigned
    int depth = 0;
};

struct SearchStats {
    long long nodes_expanded = 0;
    int max_depth = 0;
    long long rule_counts[4] = {0, 0, 0, 0};  // B0..B3
    double wall_seconds = 0.0;
};

struct SolveOptions {
    // Re-derive the cut value for every emitted child and fail loudly if the
    // measure (s+1)k - lambda does not strictly decrease, or a rule-specific
    // lambda bound is violated. Costs one extra cut query per child.
    bool assert_measure = false;
    std::ostream* trace = nullptr;  // per-node dispatch log
};

struct StepResult {
    enum class Kind { Children, Yes, No } kind = Kind::No;
    std::vector<BranchNode> children;  // exploration order
    std::vector<int> labels;           // final labeling for Kind::Yes
    std::vector<int> deletions;        // accumulated deletions for Kind::Yes
    int rule = -1;                     // 0..3 when a branching rule fired
};

// One dispatch round: forced deletions, dropping satisfied components, the
// budget check, then the applicable branching rule. Consumes the node.
StepResult step(BranchNode node, const SolveOptions& opts = {});

// lambda(I): size of the minimum anchor-to-T separator avoiding undeletable
// copies, capped at cap+1 when every separator is larger (or none exists).
// Requires a defined anchor.
int measure_lambda(const Instance& inst, int cap);

// Depth-first search over step(); first YES wins. The witness always passes
// verify_solution against the input instance.
Solution solve(const Instance& inst, const SolveOptions& opts = {},
               SearchStats* stats = nullptr);

}  // namespace ulc
