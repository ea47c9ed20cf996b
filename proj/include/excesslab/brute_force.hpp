#pragma once

#include <vector>

#include "excesslab/rational.hpp"

namespace excesslab {

/// Number of connected labelled graphs on {1..k} with exactly m edges,
/// by exhaustive edge-subset enumeration (k <= 7, at most 2^21 subsets).
/// Independent of the recurrence path: this is the oracle.
Integer brute_force_count(int k, int m);

/// Full row: counts[m] for m = 0 .. C(k,2).
std::vector<Integer> brute_force_row(int k);

/// (graph, cut-edge) pairs over connected (k, k+l+1)-graphs whose
/// removal leaves two components of excess >= 0 each. Slow direct
/// oracle for bridge_count_exact; k <= 7.
Integer brute_force_bridge_count(int k, int l);

}  // namespace excesslab
