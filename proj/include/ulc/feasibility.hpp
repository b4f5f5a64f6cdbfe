#pragma once

#include <vector>

#include "ulc/aux_graph.hpp"
#include "ulc/instance.hpp"

namespace ulc {

struct PropagateResult {
    bool conflict = false;
    // On conflict, the base vertex whose second copy (or forbidden copy)
    // aborted the search.
    int conflict_vertex = 0;
    // Labels assigned to reached base vertices; 0 = unreached. Valid only
    // when no conflict occurred.
    std::vector<int> labels;
    std::vector<int> reached;  // aux indices in BFS order
};

// BFS over H_I - forbidden from seed. Aborts eagerly when reaching a second
// copy of some base vertex or a copy outside that vertex's tau set.
PropagateResult propagate_from(const AuxView& view, int seed,
                               const std::vector<char>& forbidden = {});

struct ComponentLabeling {
    bool feasible = false;
    std::vector<std::pair<int, int>> labels;  // (vertex, label) per member
};

// Decides whether the connected component admits a tau-consistent feasible
// labeling, trying each allowed seed label of the lowest-id vertex in
// ascending order, and returns the first labeling found.
ComponentLabeling component_feasible(const Instance& inst,
                                     const std::vector<int>& component);

}  // namespace ulc
