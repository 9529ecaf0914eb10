#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/partition.hpp"

namespace hypermatch {

// Coordinates are the intersection sizes with parts V_1..V_r (trash part
// excluded).  Lattice elements may be negative.
using IndexVector = std::vector<long long>;

// Integer row span of the generating vectors, held as the unique row-style
// Hermite normal form: pivot columns strictly increasing, pivots positive,
// entries above a pivot reduced into [0, pivot).
struct IntegerLattice {
    int r = 0;
    std::vector<std::vector<BigInt>> basis;
    std::vector<IndexVector> generators; // deduplicated, sorted

    bool is_zero() const { return basis.empty(); }
};

IndexVector index_vector(const VertexPartition& p, std::span<const int> s);

// All k-vectors realized by at least tau edges lying inside V \ V_0,
// lexicographically sorted.  tau >= 1.
std::vector<IndexVector> robust_vectors(const Hypergraph& h,
                                        const VertexPartition& p,
                                        std::uint64_t tau);

// As above but with the witnessing edge count per vector.
std::vector<std::pair<IndexVector, std::uint64_t>> robust_vector_counts(
    const Hypergraph& h, const VertexPartition& p, std::uint64_t tau);

IntegerLattice lattice_basis(std::vector<IndexVector> generators, int r);

// Exact membership by back-substitution on the canonical basis.
bool lattice_contains(const IntegerLattice& l, const IndexVector& v);

// First pair (i, j), i < j, with u_i - u_j in the lattice; 0-based part
// indices, scanned lexicographically.
std::optional<std::pair<int, int>> find_transferral(const IntegerLattice& l);

// Minimal t >= 1 with (t, -t) in the lattice; requires r = 2.
std::optional<long long> minimal_symmetric_t(const IntegerLattice& l);

// Minimum over representations (maximized over the targets) of max |a_v|
// where target = sum a_v * generator_v.  Search radius grows one at a time
// up to `radius_cap`; exceeding the cap or hitting a non-member target
// raises NotRepresentable.
long long coefficient_bound(const std::vector<IndexVector>& generators,
                            const std::vector<IndexVector>& targets, int r,
                            long long radius_cap = 64);

// Integer coefficients with max |a| <= bound reproducing v over the
// generators, found at the smallest possible radius (lexicographically
// smallest within it); nullopt when no representation fits the bound.
std::optional<std::vector<long long>> decompose_vector(
    const IndexVector& v, const std::vector<IndexVector>& generators,
    long long bound);

// Smallest part index i (0-based) with index_vector(U) - u_i in the lattice.
// U must avoid the trash part.
std::optional<int> find_absorbable_index(std::span<const int> u,
                                         const VertexPartition& p,
                                         const IntegerLattice& l);

} // namespace hypermatch
