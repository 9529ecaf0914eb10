#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermatch/bitset.hpp"

namespace hypermatch {

using Vertex = std::uint16_t;
using EdgeId = std::uint32_t;

// Immutable k-uniform hypergraph on vertex labels 0..n-1.  Edges are held in
// canonical order (vertices sorted within an edge, edges sorted
// lexicographically) in flat arrays: one row of sorted vertices and one row
// of bitset words per edge.  Instances are safe to share across threads.
class Hypergraph {
public:
    // Canonicalizes and validates the given edge list.  Distinct error kinds:
    // NonUniformEdge, VertexOutOfRange, DuplicateEdge.
    static Hypergraph build(int n, int k, std::vector<std::vector<int>> edges);

    // Complete k-graph on n vertices.
    static Hypergraph complete(int n, int k);

    // Includes every k-set independently with probability p; reproducible
    // for a fixed seed independently of platform.
    static Hypergraph random(int n, int k, double p, std::uint64_t seed);

    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return static_cast<int>(edge_count_); }
    int words_per_edge() const { return words_; }

    std::span<const Vertex> edge(EdgeId e) const {
        return {edge_verts_.data() + static_cast<size_t>(e) * k_,
                static_cast<size_t>(k_)};
    }

    std::span<const Word> edge_bits(EdgeId e) const {
        return {edge_bits_.data() + static_cast<size_t>(e) * words_,
                static_cast<size_t>(words_)};
    }

    // Edges containing the given vertex, ascending edge ids.
    std::span<const EdgeId> incident(int v) const {
        return {inc_edges_.data() + inc_offsets_[static_cast<size_t>(v)],
                inc_offsets_[static_cast<size_t>(v) + 1] -
                    inc_offsets_[static_cast<size_t>(v)]};
    }

    // Membership by sorted vertex list (binary search on canonical order).
    bool has_edge(std::span<const Vertex> sorted_vs) const;
    std::optional<EdgeId> find_edge(std::span<const Vertex> sorted_vs) const;

    // Number of edges containing S; requires 1 <= |S| <= k-1.
    std::uint64_t degree(std::span<const int> s) const;

    Bitset vertices_to_bits(std::span<const int> vs) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph() = default;
    void finalize();

    int n_ = 0;
    int k_ = 0;
    int words_ = 0;
    size_t edge_count_ = 0;
    std::vector<Vertex> edge_verts_;   // edge_count x k, rows sorted, rows in lex order
    std::vector<Word> edge_bits_;      // edge_count x words
    std::vector<size_t> inc_offsets_;  // n+1
    std::vector<EdgeId> inc_edges_;
};

// DegreeProfile: the minimum d-degree together with a witness d-set.
struct DegreeProfile {
    int d = 0;
    std::uint64_t value = 0;
    std::vector<int> witness;
};

// Exhaustive minimum d-degree over all C(n,d) vertex sets; 1 <= d <= k-1.
// The witness is the lexicographically first minimizing d-set.
DegreeProfile min_degree(const Hypergraph& h, int d);

// A set of pairwise disjoint edges with covered-vertex bookkeeping.  Edges
// are stored as sorted vertex lists so matchings survive edge swaps that the
// absorbing pipelines perform.
class Matching {
public:
    explicit Matching(int n_vertices) : covered_(n_vertices) {}

    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
    const Bitset& covered() const { return covered_; }
    int covered_count() const { return covered_.count(); }

    bool can_add(std::span<const Vertex> edge) const;
    void add(std::span<const Vertex> edge);           // throws on conflict
    void remove_at(size_t index);
    std::optional<size_t> find(std::span<const Vertex> edge) const;

    // All pairwise disjoint, every edge present in h, |covered| = k*size.
    bool valid_for(const Hypergraph& h) const;

    std::vector<int> uncovered_vertices() const;

    // Canonical form: edges sorted lexicographically.
    std::vector<std::vector<Vertex>> sorted_edges() const;

private:
    std::vector<std::vector<Vertex>> edges_;
    Bitset covered_;
};

} // namespace hypermatch
