#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <random>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

// Uniform double in [0,1) from the top 53 bits of the generator output.
// uniform_real_distribution is implementation-defined, so roll our own to
// keep a fixed seed reproducible across standard libraries.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Hypergraph Hypergraph::build(int n, int k, std::vector<std::vector<int>> edges) {
    if (k < 2) raise(ErrorKind::BadParameter, "uniformity k must be at least 2");
    if (n < k) raise(ErrorKind::BadParameter, "need n >= k");

    Hypergraph h;
    h.n_ = n;
    h.k_ = k;
    h.words_ = words_for(n);

    std::vector<std::vector<Vertex>> canon;
    canon.reserve(edges.size());
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            raise(ErrorKind::NonUniformEdge,
                  "edge does not have exactly k distinct vertices");
        if (e.front() < 0 || e.back() >= n)
            raise(ErrorKind::VertexOutOfRange, "edge vertex outside [0, n)");
        canon.emplace_back(e.begin(), e.end());
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        raise(ErrorKind::DuplicateEdge, "duplicate edge after canonicalization");

    h.edge_count_ = canon.size();
    h.edge_verts_.reserve(canon.size() * static_cast<size_t>(k));
    for (const auto& e : canon)
        h.edge_verts_.insert(h.edge_verts_.end(), e.begin(), e.end());
    h.finalize();
    return h;
}

Hypergraph Hypergraph::complete(int n, int k) {
    if (k < 2 || n < k) raise(ErrorKind::BadParameter, "need k >= 2 and n >= k");
    Hypergraph h;
    h.n_ = n;
    h.k_ = k;
    h.words_ = words_for(n);
    for_each_combination(n, k, [&](std::span<const int> combo) {
        for (int v : combo) h.edge_verts_.push_back(static_cast<Vertex>(v));
        return true;
    });
    h.edge_count_ = h.edge_verts_.size() / static_cast<size_t>(k);
    h.finalize();
    return h;
}

Hypergraph Hypergraph::random(int n, int k, double p, std::uint64_t seed) {
    if (k < 2 || n < k) raise(ErrorKind::BadParameter, "need k >= 2 and n >= k");
    if (p < 0.0 || p > 1.0) raise(ErrorKind::BadParameter, "need 0 <= p <= 1");
    Hypergraph h;
    h.n_ = n;
    h.k_ = k;
    h.words_ = words_for(n);
    std::mt19937_64 rng(seed);
    for_each_combination(n, k, [&](std::span<const int> combo) {
        if (unit_double(rng) < p)
            for (int v : combo) h.edge_verts_.push_back(static_cast<Vertex>(v));
        return true;
    });
    h.edge_count_ = h.edge_verts_.size() / static_cast<size_t>(k);
    h.finalize();
    return h;
}

void Hypergraph::finalize() {
    edge_bits_.assign(edge_count_ * static_cast<size_t>(words_), 0);
    inc_offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (size_t e = 0; e < edge_count_; ++e) {
        for (int i = 0; i < k_; ++i) {
            Vertex v = edge_verts_[e * static_cast<size_t>(k_) + i];
            edge_bits_[e * static_cast<size_t>(words_) + v / kWordBits] |=
                Word(1) << (v % kWordBits);
            ++inc_offsets_[static_cast<size_t>(v) + 1];
        }
    }
    for (int v = 0; v < n_; ++v)
        inc_offsets_[static_cast<size_t>(v) + 1] += inc_offsets_[static_cast<size_t>(v)];
    inc_edges_.resize(edge_count_ * static_cast<size_t>(k_));
    std::vector<size_t> cursor(inc_offsets_.begin(), inc_offsets_.end() - 1);
    for (size_t e = 0; e < edge_count_; ++e)
        for (int i = 0; i < k_; ++i) {
            Vertex v = edge_verts_[e * static_cast<size_t>(k_) + i];
            inc_edges_[cursor[v]++] = static_cast<EdgeId>(e);
        }
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted_vs) const {
    return find_edge(sorted_vs).has_value();
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> sorted_vs) const {
    if (static_cast<int>(sorted_vs.size()) != k_) return std::nullopt;
    size_t lo = 0, hi = edge_count_;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        auto row = edge(static_cast<EdgeId>(mid));
        int cmp = 0;
        for (int i = 0; i < k_; ++i) {
            if (row[static_cast<size_t>(i)] != sorted_vs[static_cast<size_t>(i)]) {
                cmp = row[static_cast<size_t>(i)] < sorted_vs[static_cast<size_t>(i)] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) return static_cast<EdgeId>(mid);
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::uint64_t Hypergraph::degree(std::span<const int> s) const {
    if (s.empty() || static_cast<int>(s.size()) > k_ - 1)
        raise(ErrorKind::BadParameter, "degree set size must be in [1, k-1]");
    Bitset sbits(n_);
    for (int v : s) {
        if (v < 0 || v >= n_) raise(ErrorKind::VertexOutOfRange, "degree set vertex outside [0, n)");
        if (sbits.test(v)) raise(ErrorKind::BadParameter, "degree set has repeated vertices");
        sbits.set(v);
    }
    // Scan the incidence list of one member; every superset edge shows there.
    std::uint64_t count = 0;
    auto sw = sbits.words();
    for (EdgeId e : incident(s[0])) {
        auto ew = edge_bits(e);
        bool superset = true;
        for (size_t w = 0; w < sw.size(); ++w)
            if ((ew[w] & sw[w]) != sw[w]) {
                superset = false;
                break;
            }
        if (superset) ++count;
    }
    return count;
}

Bitset Hypergraph::vertices_to_bits(std::span<const int> vs) const {
    Bitset b(n_);
    for (int v : vs) b.set(v);
    return b;
}

DegreeProfile min_degree(const Hypergraph& h, int d) {
    if (d < 1 || d > h.k() - 1)
        raise(ErrorKind::BadParameter, "degree order d must be in [1, k-1]");
    const int n = h.n();
    const int k = h.k();
    DegreeProfile out;
    out.d = d;

    std::uint64_t total_sets = binom_u64(n, d);
    if (total_sets <= (std::uint64_t(1) << 24)) {
        // Count by one pass over the edges: each edge bumps its C(k,d)
        // sub-d-sets; untouched d-sets keep degree zero.
        std::vector<std::uint64_t> counts(total_sets, 0);
        std::vector<int> sub(static_cast<size_t>(d));
        for (EdgeId e = 0; e < static_cast<EdgeId>(h.m()); ++e) {
            auto row = h.edge(e);
            std::vector<int> verts(row.begin(), row.end());
            for_each_combination(k, d, [&](std::span<const int> idx) {
                for (int i = 0; i < d; ++i) sub[static_cast<size_t>(i)] = verts[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                ++counts[combination_rank(n, sub)];
                return true;
            });
        }
        std::uint64_t best = counts.empty() ? 0 : counts[0];
        std::uint64_t best_rank = 0;
        for (std::uint64_t r = 1; r < total_sets; ++r)
            if (counts[r] < best) {
                best = counts[r];
                best_rank = r;
            }
        out.value = best;
        out.witness = combination_unrank(n, d, best_rank);
        return out;
    }

    // Fallback for large C(n,d): enumerate d-sets lazily.
    bool first = true;
    for_each_combination(n, d, [&](std::span<const int> combo) {
        std::uint64_t deg = h.degree(combo);
        if (first || deg < out.value) {
            out.value = deg;
            out.witness.assign(combo.begin(), combo.end());
            first = false;
        }
        return true;
    });
    return out;
}

bool Matching::can_add(std::span<const Vertex> edge) const {
    for (Vertex v : edge)
        if (covered_.test(v)) return false;
    return true;
}

void Matching::add(std::span<const Vertex> edge) {
    if (!can_add(edge)) raise(ErrorKind::InvalidWitness, "matching edges must be disjoint");
    edges_.emplace_back(edge.begin(), edge.end());
    for (Vertex v : edge) covered_.set(v);
}

void Matching::remove_at(size_t index) {
    for (Vertex v : edges_[index]) covered_.reset(v);
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

std::optional<size_t> Matching::find(std::span<const Vertex> edge) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if (std::equal(edges_[i].begin(), edges_[i].end(), edge.begin(), edge.end()))
            return i;
    return std::nullopt;
}

bool Matching::valid_for(const Hypergraph& h) const {
    Bitset seen(h.n());
    for (const auto& e : edges_) {
        if (!h.has_edge(e)) return false;
        for (Vertex v : e) {
            if (seen.test(v)) return false;
            seen.set(v);
        }
    }
    if (!(seen == covered_)) return false;
    if (covered_.count() != h.k() * size()) return false;
    return size() <= h.n() / h.k();
}

std::vector<int> Matching::uncovered_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < covered_.size_bits(); ++v)
        if (!covered_.test(v)) out.push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> Matching::sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hypermatch
