#pragma once

#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/partition.hpp"

namespace hypermatch {

// All k-sets meeting the spine {0, ..., s-1}.  Requires 0 <= s < n/k, which
// caps the maximum matching at s.
Hypergraph space_barrier(int n, int k, int s);

struct DivisibilityBarrier {
    Hypergraph graph;
    VertexPartition partition; // empty trash part; empty sides are dropped
    int ell = 0;
    int j = 0;
    int n1 = 0;
};

// Two-part construction: V_1 = {0..n1-1} and edges are exactly the k-sets e
// with |e ∩ V_1| ≡ j (mod ell+2).  Admissibility demands n ≡ ell (mod k),
// j in {0..ell+1} and n1 ≡ floor(n/k)*j + ell + 1 (mod ell+2); violating the
// congruence raises InadmissibleSpec naming the relation.  ell = 0 gives the
// classic two-part parity barrier.
DivisibilityBarrier divisibility_barrier(int n, int k, int ell, int j, int n1);

// All n1 in [0, n] satisfying the first-part congruence, ascending.
std::vector<int> admissible_first_part_sizes(int n, int k, int ell, int j);

// Validation shared by the two ops above; raises on violation.
void check_divisibility_spec(int n, int k, int ell, int j);

} // namespace hypermatch
