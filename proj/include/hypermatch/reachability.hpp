#pragma once

#include <cstdint>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/partition.hpp"

namespace hypermatch {

// Finite renderings of the reachability thresholds.  These are absolute
// counts; no canonical choice exists, so they are always explicit inputs.
struct ReachParams {
    std::uint64_t tau1 = 1;          // 1-reachable pair count threshold
    std::uint64_t eps_weak = 1;      // weak (k-1)-set degree cutoff
    std::uint64_t eps_incidence = 1; // weak-edge incidences that send a vertex to trash
    int i_max = 2;                   // largest reachability order attempted
    std::uint64_t samples = 10000;   // Monte Carlo budget for i >= 2
    std::uint64_t seed = 0;
    std::uint64_t exact_cap = 10'000'000; // enumerate exactly below this C(n-2, ik-1)
    std::uint64_t solver_budget = 100'000'000;

    void validate() const;

    // eps_weak = ceil(eps^2 n), eps_incidence = ceil(eps*C(n,k-1)),
    // tau1 = ceil(beta*n^{k-1}).
    static ReachParams defaults_for(int n, int k, double eps = 0.1,
                                    double beta = 0.01, std::uint64_t seed = 0);
};

struct ReachCount {
    double value = 0.0;     // exact count, or Monte Carlo estimate
    bool exact = true;
    double std_error = 0.0; // 0 when exact
};

// Number (or estimate) of (ik-1)-sets S avoiding {u, v} such that both
// induced graphs on S+u and S+v have perfect matchings.  i = 1 is always the
// exact common-neighborhood count.
ReachCount reach_count(const Hypergraph& h, int u, int v, int i,
                       const ReachParams& params);

// Vertices lying in at least eps_incidence weak edges, where an edge is weak
// when one of its (k-1)-subsets has degree <= eps_weak.  Sorted ascending.
std::vector<int> trash_set(const Hypergraph& h, const ReachParams& params);

// Trash plus low-reach-degree vertices form V_0; the rest splits into the
// connected components of the thresholded 1-reachability graph, with
// components below the size floor folded into V_0.  Parts are indexed by
// decreasing size (ties by smallest vertex).
VertexPartition reach_partition(const Hypergraph& h, const ReachParams& params);

// Greedy transferral-driven merge: recompute robust vectors and their
// lattice, union the first part pair whose transferral lies in the lattice,
// and repeat until none does.
VertexPartition merge_by_transferrals(const Hypergraph& h,
                                      const VertexPartition& p,
                                      std::uint64_t tau);

} // namespace hypermatch
