#pragma once

#include <stdexcept>

#include "ulc/instance.hpp"

namespace ulc {

// Guard against exponential blowup; the oracle is a desk-scale ground truth,
// not a solver.
inline constexpr int kOracleMaxN = 12;
inline constexpr int kOracleMaxSigma = 4;

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tries every deletion set X of deletable vertices with |X| <= k, smallest
// first and lexicographic within a size, and accepts the first X for which
// every remaining component has a consistent labeling. Throws SizeLimitError
// above the guards.
Solution brute_force(const Instance& inst);

// Bottom tier of the validation chain: decides component feasibility by
// enumerating all s^n labelings of the alive subgraph outright. Same guards.
Solution brute_force_labelings(const Instance& inst);

}  // namespace ulc
