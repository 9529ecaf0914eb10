#pragma once

#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

// Ordered partition of the vertex universe into a possibly-empty trash part
// V_0 and non-empty parts V_1..V_r.  Index vectors are computed against the
// non-trash parts only.
class VertexPartition {
public:
    VertexPartition() = default;
    VertexPartition(int n, std::vector<int> trash, std::vector<std::vector<int>> parts);

    int n() const { return n_; }
    int r() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& trash() const { return trash_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    const std::vector<int>& part(int i) const { return parts_[static_cast<size_t>(i)]; }

    // -1 for trash, otherwise 0-based part index.
    int part_of(int v) const { return part_of_[static_cast<size_t>(v)]; }

    // Merge part j into part i (both 0-based, i < j), keeping the order of
    // the remaining parts.
    VertexPartition merged(int i, int j) const;

private:
    void index_vertices();

    int n_ = 0;
    std::vector<int> trash_;
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

} // namespace hypermatch
