#include "hypermatch/partition.hpp"

#include <algorithm>

#include "hypermatch/error.hpp"

namespace hypermatch {

VertexPartition::VertexPartition(int n, std::vector<int> trash,
                                 std::vector<std::vector<int>> parts)
    : n_(n), trash_(std::move(trash)), parts_(std::move(parts)) {
    std::sort(trash_.begin(), trash_.end());
    for (auto& p : parts_) {
        if (p.empty())
            raise(ErrorKind::BadParameter, "partition parts V_1..V_r must be non-empty");
        std::sort(p.begin(), p.end());
    }
    index_vertices();
}

void VertexPartition::index_vertices() {
    part_of_.assign(static_cast<size_t>(n_), -2);
    auto place = [&](int v, int where) {
        if (v < 0 || v >= n_)
            raise(ErrorKind::VertexOutOfRange, "partition vertex outside [0, n)");
        if (part_of_[static_cast<size_t>(v)] != -2)
            raise(ErrorKind::BadParameter, "partition parts overlap");
        part_of_[static_cast<size_t>(v)] = where;
    };
    for (int v : trash_) place(v, -1);
    for (int i = 0; i < r(); ++i)
        for (int v : parts_[static_cast<size_t>(i)]) place(v, i);
    for (int v = 0; v < n_; ++v)
        if (part_of_[static_cast<size_t>(v)] == -2)
            raise(ErrorKind::BadParameter, "partition does not cover the universe");
}

VertexPartition VertexPartition::merged(int i, int j) const {
    if (i < 0 || j <= i || j >= r())
        raise(ErrorKind::BadParameter, "merge needs part indices 0 <= i < j < r");
    std::vector<std::vector<int>> parts = parts_;
    auto& into = parts[static_cast<size_t>(i)];
    auto& from = parts[static_cast<size_t>(j)];
    into.insert(into.end(), from.begin(), from.end());
    parts.erase(parts.begin() + j);
    return VertexPartition(n_, trash_, std::move(parts));
}

} // namespace hypermatch
