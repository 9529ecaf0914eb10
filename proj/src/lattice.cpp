#include "hypermatch/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

std::string vec_to_string(const IndexVector& v) {
    std::ostringstream ss;
    ss << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) ss << ",";
        ss << v[i];
    }
    ss << ")";
    return ss.str();
}

} // namespace

IndexVector index_vector(const VertexPartition& p, std::span<const int> s) {
    IndexVector iv(static_cast<size_t>(p.r()), 0);
    for (int v : s) {
        int part = p.part_of(v);
        if (part >= 0) ++iv[static_cast<size_t>(part)];
    }
    return iv;
}

std::vector<std::pair<IndexVector, std::uint64_t>> robust_vector_counts(
    const Hypergraph& h, const VertexPartition& p, std::uint64_t tau) {
    if (tau < 1) raise(ErrorKind::BadParameter, "robustness threshold tau must be >= 1");
    std::map<IndexVector, std::uint64_t> counts;
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.m()); ++e) {
        auto row = h.edge(e);
        IndexVector iv(static_cast<size_t>(p.r()), 0);
        bool touches_trash = false;
        for (Vertex v : row) {
            int part = p.part_of(v);
            if (part < 0) {
                touches_trash = true;
                break;
            }
            ++iv[static_cast<size_t>(part)];
        }
        if (!touches_trash) ++counts[iv];
    }
    std::vector<std::pair<IndexVector, std::uint64_t>> out;
    for (auto& [vec, c] : counts)
        if (c >= tau) out.emplace_back(vec, c);
    return out;
}

std::vector<IndexVector> robust_vectors(const Hypergraph& h,
                                        const VertexPartition& p,
                                        std::uint64_t tau) {
    std::vector<IndexVector> out;
    for (auto& [vec, c] : robust_vector_counts(h, p, tau)) out.push_back(vec);
    return out;
}

IntegerLattice lattice_basis(std::vector<IndexVector> generators, int r) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != r)
            raise(ErrorKind::DimensionMismatch, "generator dimension != r");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    IntegerLattice lat;
    lat.r = r;
    lat.generators = generators;

    std::vector<std::vector<BigInt>> rows;
    for (const auto& g : generators) {
        std::vector<BigInt> row(g.begin(), g.end());
        if (std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; }))
            rows.push_back(std::move(row));
    }

    size_t pivot_row = 0;
    for (int col = 0; col < r && pivot_row < rows.size(); ++col) {
        // Gcd elimination within the column.
        while (true) {
            size_t best = rows.size();
            for (size_t i = pivot_row; i < rows.size(); ++i) {
                if (rows[i][static_cast<size_t>(col)] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[i][static_cast<size_t>(col)]) <
                        abs(rows[best][static_cast<size_t>(col)]))
                    best = i;
            }
            if (best == rows.size()) break; // column exhausted, no pivot
            std::swap(rows[pivot_row], rows[best]);
            const BigInt piv = rows[pivot_row][static_cast<size_t>(col)];
            bool others = false;
            for (size_t i = pivot_row + 1; i < rows.size(); ++i) {
                BigInt& x = rows[i][static_cast<size_t>(col)];
                if (x == 0) continue;
                BigInt q = x / piv; // trunc division keeps |remainder| < |piv|
                if (q != 0)
                    for (int c = 0; c < r; ++c)
                        rows[i][static_cast<size_t>(c)] -=
                            q * rows[pivot_row][static_cast<size_t>(c)];
                if (rows[i][static_cast<size_t>(col)] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[pivot_row][static_cast<size_t>(col)] == 0) continue;
        if (rows[pivot_row][static_cast<size_t>(col)] < 0)
            for (int c = 0; c < r; ++c)
                rows[pivot_row][static_cast<size_t>(c)] = -rows[pivot_row][static_cast<size_t>(c)];
        const BigInt piv = rows[pivot_row][static_cast<size_t>(col)];
        // Reduce entries above the pivot into [0, piv).
        for (size_t i = 0; i < pivot_row; ++i) {
            BigInt x = rows[i][static_cast<size_t>(col)];
            BigInt q = x / piv;
            if (x - q * piv < 0) q -= 1; // floor division
            if (q != 0)
                for (int c = 0; c < r; ++c)
                    rows[i][static_cast<size_t>(c)] -= q * rows[pivot_row][static_cast<size_t>(c)];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    lat.basis = std::move(rows);
    return lat;
}

bool lattice_contains(const IntegerLattice& l, const IndexVector& v) {
    if (static_cast<int>(v.size()) != l.r)
        raise(ErrorKind::DimensionMismatch, "vector dimension != lattice dimension");
    std::vector<BigInt> rest(v.begin(), v.end());
    size_t row = 0;
    for (int col = 0; col < l.r; ++col) {
        const bool has_pivot =
            row < l.basis.size() && l.basis[row][static_cast<size_t>(col)] != 0;
        if (!has_pivot) {
            if (rest[static_cast<size_t>(col)] != 0) return false;
            continue;
        }
        const BigInt& piv = l.basis[row][static_cast<size_t>(col)];
        if (rest[static_cast<size_t>(col)] % piv != 0) return false;
        BigInt q = rest[static_cast<size_t>(col)] / piv;
        if (q != 0)
            for (int c = 0; c < l.r; ++c)
                rest[static_cast<size_t>(c)] -= q * l.basis[row][static_cast<size_t>(c)];
        ++row;
    }
    return std::all_of(rest.begin(), rest.end(),
                       [](const BigInt& x) { return x == 0; });
}

std::optional<std::pair<int, int>> find_transferral(const IntegerLattice& l) {
    for (int i = 0; i < l.r; ++i)
        for (int j = i + 1; j < l.r; ++j) {
            IndexVector v(static_cast<size_t>(l.r), 0);
            v[static_cast<size_t>(i)] = 1;
            v[static_cast<size_t>(j)] = -1;
            if (lattice_contains(l, v)) return std::make_pair(i, j);
        }
    return std::nullopt;
}

std::optional<long long> minimal_symmetric_t(const IntegerLattice& l) {
    if (l.r != 2) raise(ErrorKind::DimensionMismatch, "minimal_symmetric_t needs r = 2");
    if (l.basis.empty()) return std::nullopt;
    if (l.basis.size() == 1) {
        const BigInt& a = l.basis[0][0];
        const BigInt& b = l.basis[0][1];
        if (a != 0 && a + b == 0) return abs(a).convert_to<long long>();
        return std::nullopt;
    }
    // basis = [[a, b], [0, c]] with a, c > 0.
    const BigInt& a = l.basis[0][0];
    const BigInt& b = l.basis[0][1];
    const BigInt& c = l.basis[1][1];
    BigInt s = ((a + b) % c + c) % c;
    BigInt x0 = c / gcd(s == 0 ? c : s, c);
    return (x0 * a).convert_to<long long>();
}

namespace {

// Depth-first search over coefficient boxes [-radius, radius]^g with
// per-coordinate reachability pruning.  Visits coefficient tuples in
// lexicographic order of (a_1, ..., a_g).
class BoxSearch {
public:
    BoxSearch(const IndexVector& target, const std::vector<IndexVector>& gens,
              long long radius, std::uint64_t node_budget)
        : target_(target), gens_(gens), radius_(radius), budget_(node_budget) {
        const size_t r = target.size();
        // suffix_cap_[i][c] = radius * sum over generators >= i of |g[c]|.
        suffix_cap_.assign(gens.size() + 1, std::vector<long long>(r, 0));
        for (size_t i = gens.size(); i-- > 0;)
            for (size_t c = 0; c < r; ++c)
                suffix_cap_[i][c] = suffix_cap_[i + 1][c] +
                                    radius * std::llabs(gens[i][c]);
    }

    std::optional<std::vector<long long>> run() {
        partial_.assign(target_.size(), 0);
        coeffs_.assign(gens_.size(), 0);
        if (dfs(0)) return coeffs_;
        if (exhausted_budget_)
            raise(ErrorKind::BudgetExceeded, "coefficient search budget exhausted");
        return std::nullopt;
    }

private:
    bool feasible(size_t next) const {
        for (size_t c = 0; c < target_.size(); ++c)
            if (std::llabs(target_[c] - partial_[c]) > suffix_cap_[next][c])
                return false;
        return true;
    }

    bool dfs(size_t i) {
        if (++nodes_ > budget_) {
            exhausted_budget_ = true;
            return false;
        }
        if (!feasible(i)) return false;
        if (i == gens_.size()) {
            for (size_t c = 0; c < target_.size(); ++c)
                if (partial_[c] != target_[c]) return false;
            return true;
        }
        for (long long a = -radius_; a <= radius_; ++a) {
            coeffs_[i] = a;
            for (size_t c = 0; c < target_.size(); ++c)
                partial_[c] += a * gens_[i][c];
            if (dfs(i + 1)) return true;
            for (size_t c = 0; c < target_.size(); ++c)
                partial_[c] -= a * gens_[i][c];
            if (exhausted_budget_) return false;
        }
        coeffs_[i] = 0;
        return false;
    }

    const IndexVector& target_;
    const std::vector<IndexVector>& gens_;
    long long radius_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_budget_ = false;
    std::vector<long long> partial_;
    std::vector<long long> coeffs_;
};

std::optional<std::vector<long long>> search_at_radius(
    const IndexVector& v, const std::vector<IndexVector>& gens, long long radius,
    std::uint64_t budget = 50'000'000) {
    BoxSearch search(v, gens, radius, budget);
    return search.run();
}

} // namespace

long long coefficient_bound(const std::vector<IndexVector>& generators,
                            const std::vector<IndexVector>& targets, int r,
                            long long radius_cap) {
    IntegerLattice lat = lattice_basis(generators, r);
    long long worst = 0;
    for (const auto& t : targets) {
        if (!lattice_contains(lat, t))
            raise(ErrorKind::NotRepresentable,
                  "target " + vec_to_string(t) + " is not in the generated lattice");
        bool found = false;
        for (long long radius = 0; radius <= radius_cap; ++radius) {
            if (search_at_radius(t, generators, radius)) {
                worst = std::max(worst, radius);
                found = true;
                break;
            }
        }
        if (!found)
            raise(ErrorKind::NotRepresentable,
                  "no representation of " + vec_to_string(t) + " within radius " +
                      std::to_string(radius_cap));
    }
    return worst;
}

std::optional<std::vector<long long>> decompose_vector(
    const IndexVector& v, const std::vector<IndexVector>& generators,
    long long bound) {
    for (const auto& g : generators)
        if (g.size() != v.size())
            raise(ErrorKind::DimensionMismatch, "generator dimension != vector dimension");
    for (long long radius = 0; radius <= bound; ++radius)
        if (auto coeffs = search_at_radius(v, generators, radius)) return coeffs;
    return std::nullopt;
}

std::optional<int> find_absorbable_index(std::span<const int> u,
                                         const VertexPartition& p,
                                         const IntegerLattice& l) {
    for (int v : u)
        if (p.part_of(v) < 0)
            raise(ErrorKind::BadParameter, "absorbable-index probe set meets the trash part");
    IndexVector iv = index_vector(p, u);
    for (int i = 0; i < p.r(); ++i) {
        IndexVector w = iv;
        --w[static_cast<size_t>(i)];
        if (lattice_contains(l, w)) return i;
    }
    return std::nullopt;
}

} // namespace hypermatch
