#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulc/instance.hpp"

namespace ulc {

// Plain undirected simple graph used as generator input; edges as (u, v)
// with 1 <= u < v <= n.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph petersen_graph();
SimpleGraph random_graph(int n, double p, std::uint64_t seed);

// Odd cycle transversal as label cover: s = 2, every edge swaps the two
// labels, tau full. YES at budget k iff the graph has an OCT of size <= k.
Instance gen_oct(const SimpleGraph& g, int k);

// Group feedback vertex set over Z_r: edge i gets the cyclic shift by
// labels[i]; tau full; s = r.
Instance gen_group_fvs(const SimpleGraph& g, const std::vector<int>& labels,
                       int r, int k);

// Multiway cut with r terminals: s = r, identity permutations,
// tau(t_i) = {i}, terminals undeletable, tau full elsewhere. Throws
// std::invalid_argument when two terminals are adjacent.
Instance gen_multiway_cut(const SimpleGraph& g,
                          const std::vector<int>& terminals, int k);

struct RandomSpec {
    int n = 0;
    double p = 0.0;     // edge probability
    int s = 2;
    int k = 0;
    double p_full = 1.0;  // probability of a full tau set per vertex
    bool planted = false; // force YES by construction
    std::uint64_t seed = 0;
};

// Erdos-Renyi graph with a uniform random permutation per edge. In planted
// mode a deletion set X* of size k and a labeling of the rest are drawn
// first and every edge outside X* is wired consistently with it.
Instance gen_random(const RandomSpec& spec);

// Benchmark family: planted-YES OCT instance with exactly m edges. The k
// planted vertices may close odd cycles; everything else is bipartite.
Instance gen_planted_oct(int n, int m, int k, std::uint64_t seed);

// One-line '# ...' comments describing the generator call, for embedding in
// the serialized instance.
std::vector<std::string> describe_gen(const std::string& family,
                                      const std::vector<std::string>& params);

}  // namespace ulc
