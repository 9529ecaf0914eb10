#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct SolveOptions {
    // When set, the search stops as soon as a matching of this size is found
    // or its nonexistence is proved.
    std::optional<int> target;
    // Explored-node cap.  Exceeding it yields an undecided result, never a
    // wrong one.
    std::uint64_t node_budget = 100'000'000;
};

struct SolveResult {
    int size = 0;                                  // best matching size found
    std::vector<std::vector<Vertex>> witness;      // its edges, sorted rows
    bool decided = false;                          // exact max / final decision
    bool achieved_target = false;                  // only meaningful with target
    std::uint64_t nodes = 0;

    Matching to_matching(const Hypergraph& h) const;
};

// Exact maximum matching (set packing) by depth-first branch and bound.
//
// Branching is on the lowest-index vertex that is neither covered nor
// skipped; the branches are its incident available edges in ascending id
// order, then "skip this vertex".  A branch is cut when
//   current size + floor(remaining unskipped uncovered / k) < needed size,
// which doubles as the skip budget n - k*needed.  A greedy packing seeds the
// incumbent in maximizing mode.  The search is sequential and therefore
// yields one fixed witness for any thread count.
SolveResult matching_number(const Hypergraph& h, SolveOptions opts = {});

// Convenience: does h (with n = k*size vertices or more) contain a matching
// covering `size` edges?  Throws none; undecided maps to nullopt.
std::optional<bool> has_matching_of_size(const Hypergraph& h, int size,
                                         std::uint64_t node_budget = 100'000'000);

} // namespace hypermatch
