#pragma once

#include <vector>

#include "excesslab/rational.hpp"

namespace excesslab {

/// Triangular table of c(k, k+l): the number of connected labelled
/// graphs with k vertices and k+l edges, for 1 <= k <= k_max and
/// -1 <= l <= l_max. Filled by the coefficient recurrence
///
///   (k+l+1) c(k,k+l+1) = (C(k,2)-k-l) c(k,k+l)
///     + 1/2 sum_{t=1}^{k-1} sum_{p=-1}^{l+1} C(k,t) t(k-t) c(t,t+p) c(k-t,k-t+l-p)
///
/// with the tree row c(k,k-1) = k^{k-2} as the single base. Fill order
/// is l ascending then k ascending: the p = l+1 term pairs a current-row
/// entry with a tree factor at strictly smaller t, so it is already
/// available. Both the halving and the division by (k+l+1) are asserted
/// exact. lookup is a total function: out-of-range or impossible (k,l)
/// return zero.
class ExcessTable {
public:
    ExcessTable(int k_max, int l_max);

    int k_max() const { return k_max_; }
    int l_max() const { return l_max_; }

    const Integer& count(int k, int l) const;

private:
    int k_max_;
    int l_max_;
    std::vector<std::vector<Integer>> rows_;  // rows_[l+1][k-1]
    Integer zero_;
};

/// c'(k, k+l+1): connected (k, k+l+1)-graphs with a distinguished cut
/// edge joining a p-component to an (l-p)-component, both of excess >= 0.
Integer bridge_count_exact(const ExcessTable& table, int k, int l);

/// Restricted variant with excess >= r imposed symmetrically on both
/// endpoints (r <= p <= l-r). Set one_sided to constrain only the
/// p side (r <= p <= l).
Integer bridge_count_general(const ExcessTable& table, int k, int l, int r,
                             bool one_sided = false);

}  // namespace excesslab
