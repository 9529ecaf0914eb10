#include "hypermatch/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"
#include "hypermatch/lattice.hpp"
#include "hypermatch/rng.hpp"
#include "hypermatch/solver.hpp"

namespace hypermatch {

void ReachParams::validate() const {
    if (tau1 < 1 || eps_weak < 1 || eps_incidence < 1)
        raise(ErrorKind::BadParameter, "reach thresholds must be >= 1");
    if (samples < 1) raise(ErrorKind::BadParameter, "sampling budget must be >= 1");
    if (i_max < 1) raise(ErrorKind::BadParameter, "i_max must be >= 1");
}

ReachParams ReachParams::defaults_for(int n, int k, double eps, double beta,
                                      std::uint64_t seed) {
    ReachParams p;
    p.eps_weak = static_cast<std::uint64_t>(std::max(1.0, std::ceil(eps * eps * n)));
    p.eps_incidence = static_cast<std::uint64_t>(
        std::max(1.0, std::ceil(eps * binom_big(n, k - 1).convert_to<double>())));
    p.tau1 = static_cast<std::uint64_t>(
        std::max(1.0, std::ceil(beta * std::pow(static_cast<double>(n), k - 1))));
    p.seed = seed;
    return p;
}

namespace {

// Induced subhypergraph on a small sorted vertex set, relabeled to 0..w-1.
Hypergraph induced_on(const Hypergraph& h, std::span<const int> w) {
    std::vector<Vertex> probe(static_cast<size_t>(h.k()));
    std::vector<std::vector<int>> edges;
    std::vector<int> verts(w.begin(), w.end());
    for_each_combination(static_cast<int>(verts.size()), h.k(),
                         [&](std::span<const int> idx) {
                             for (size_t i = 0; i < probe.size(); ++i)
                                 probe[i] = static_cast<Vertex>(verts[static_cast<size_t>(idx[i])]);
                             if (h.has_edge(probe))
                                 edges.emplace_back(idx.begin(), idx.end());
                             return true;
                         });
    return Hypergraph::build(static_cast<int>(verts.size()), h.k(), std::move(edges));
}

bool both_sides_match(const Hypergraph& h, std::span<const int> s, int u, int v,
                      int i, std::uint64_t budget) {
    std::vector<int> with_u(s.begin(), s.end());
    with_u.push_back(u);
    std::sort(with_u.begin(), with_u.end());
    auto pm_u = has_matching_of_size(induced_on(h, with_u), i, budget);
    if (!pm_u || !*pm_u) return false;
    std::vector<int> with_v(s.begin(), s.end());
    with_v.push_back(v);
    std::sort(with_v.begin(), with_v.end());
    auto pm_v = has_matching_of_size(induced_on(h, with_v), i, budget);
    return pm_v && *pm_v;
}

} // namespace

ReachCount reach_count(const Hypergraph& h, int u, int v, int i,
                       const ReachParams& params) {
    params.validate();
    if (u == v) raise(ErrorKind::BadParameter, "reach_count needs distinct vertices");
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n())
        raise(ErrorKind::VertexOutOfRange, "reach_count vertex outside [0, n)");
    if (i < 1) raise(ErrorKind::BadParameter, "reachability order must be >= 1");

    ReachCount out;
    if (i == 1) {
        // S qualifies iff S+u and S+v are both edges, so scan edges at u.
        std::uint64_t count = 0;
        std::vector<Vertex> other(static_cast<size_t>(h.k()));
        for (EdgeId e : h.incident(u)) {
            auto row = h.edge(e);
            bool has_v = false;
            size_t idx = 0;
            for (Vertex w : row) {
                if (static_cast<int>(w) == v) {
                    has_v = true;
                    break;
                }
                if (static_cast<int>(w) != u) other[idx++] = w;
            }
            if (has_v) continue;
            other[idx++] = static_cast<Vertex>(v);
            std::sort(other.begin(), other.end());
            if (h.has_edge(other)) ++count;
        }
        out.value = static_cast<double>(count);
        return out;
    }

    const int set_size = i * h.k() - 1;
    std::vector<int> pool;
    for (int w = 0; w < h.n(); ++w)
        if (w != u && w != v) pool.push_back(w);
    if (set_size > static_cast<int>(pool.size())) return out;

    BigInt total = binom_big(static_cast<int>(pool.size()), set_size);
    if (total <= params.exact_cap) {
        std::uint64_t count = 0;
        std::vector<int> s(static_cast<size_t>(set_size));
        for_each_combination(static_cast<int>(pool.size()), set_size,
                             [&](std::span<const int> idx) {
                                 for (size_t t = 0; t < s.size(); ++t)
                                     s[t] = pool[static_cast<size_t>(idx[t])];
                                 if (both_sides_match(h, s, u, v, i, params.solver_budget))
                                     ++count;
                                 return true;
                             });
        out.value = static_cast<double>(count);
        return out;
    }

    auto rng = make_rng(params.seed, 0x7265616368ULL, // stage tag
                        (static_cast<std::uint64_t>(u) << 32) ^
                            static_cast<std::uint64_t>(v) ^ static_cast<std::uint64_t>(i));
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < params.samples; ++t) {
        auto s = sample_subset(rng, pool, static_cast<size_t>(set_size));
        if (both_sides_match(h, s, u, v, i, params.solver_budget)) ++hits;
    }
    double phat = static_cast<double>(hits) / static_cast<double>(params.samples);
    double scale = total.convert_to<double>();
    out.exact = false;
    out.value = phat * scale;
    out.std_error =
        scale * std::sqrt(phat * (1.0 - phat) / static_cast<double>(params.samples));
    return out;
}

std::vector<int> trash_set(const Hypergraph& h, const ReachParams& params) {
    params.validate();
    const int k = h.k();
    // Degrees of all (k-1)-subsets that occur inside edges.
    std::map<std::vector<Vertex>, std::uint64_t> sub_degree;
    std::vector<Vertex> sub(static_cast<size_t>(k) - 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.m()); ++e) {
        auto row = h.edge(e);
        for (int skip = 0; skip < k; ++skip) {
            size_t idx = 0;
            for (int i = 0; i < k; ++i)
                if (i != skip) sub[idx++] = row[static_cast<size_t>(i)];
            ++sub_degree[sub];
        }
    }
    std::vector<std::uint64_t> weak_incidence(static_cast<size_t>(h.n()), 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.m()); ++e) {
        auto row = h.edge(e);
        bool weak = false;
        for (int skip = 0; skip < k && !weak; ++skip) {
            size_t idx = 0;
            for (int i = 0; i < k; ++i)
                if (i != skip) sub[idx++] = row[static_cast<size_t>(i)];
            if (sub_degree[sub] <= params.eps_weak) weak = true;
        }
        if (weak)
            for (Vertex v : row) ++weak_incidence[v];
    }
    std::vector<int> out;
    for (int v = 0; v < h.n(); ++v)
        if (weak_incidence[static_cast<size_t>(v)] >= params.eps_incidence)
            out.push_back(v);
    return out;
}

VertexPartition reach_partition(const Hypergraph& h, const ReachParams& params) {
    params.validate();
    const int n = h.n();
    std::vector<int> trash = trash_set(h, params);
    std::vector<bool> in_v0(static_cast<size_t>(n), false);
    for (int v : trash) in_v0[static_cast<size_t>(v)] = true;

    // Thresholded 1-reachability adjacency over the whole universe.
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            ReachCount rc = reach_count(h, u, v, 1, params);
            if (rc.value >= static_cast<double>(params.tau1)) {
                adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
                adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
            }
        }

    // The same count renders both the eps^2*n degree cutoff and the size
    // floor of the parts.
    const std::uint64_t floor = params.eps_weak;
    for (int v = 0; v < n; ++v) {
        if (in_v0[static_cast<size_t>(v)]) continue;
        std::uint64_t reach_deg = 0;
        for (int w = 0; w < n; ++w)
            if (w != v && adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) ++reach_deg;
        if (reach_deg < floor) in_v0[static_cast<size_t>(v)] = true;
    }

    // Connected components among the remaining vertices.
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (in_v0[static_cast<size_t>(v)] || comp[static_cast<size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<size_t>(v)] = static_cast<int>(comps.size());
        std::vector<int> members;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int w = 0; w < n; ++w)
                if (!in_v0[static_cast<size_t>(w)] && comp[static_cast<size_t>(w)] < 0 &&
                    adj[static_cast<size_t>(x)][static_cast<size_t>(w)]) {
                    comp[static_cast<size_t>(w)] = comp[static_cast<size_t>(v)];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }

    std::vector<std::vector<int>> parts;
    std::vector<int> v0;
    for (auto& c : comps) {
        if (c.size() < floor)
            v0.insert(v0.end(), c.begin(), c.end());
        else
            parts.push_back(std::move(c));
    }
    for (int v = 0; v < n; ++v)
        if (in_v0[static_cast<size_t>(v)]) v0.push_back(v);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return VertexPartition(n, std::move(v0), std::move(parts));
}

VertexPartition merge_by_transferrals(const Hypergraph& h,
                                      const VertexPartition& p,
                                      std::uint64_t tau) {
    VertexPartition cur = p;
    while (cur.r() > 1) {
        auto vectors = robust_vectors(h, cur, tau);
        IntegerLattice lat = lattice_basis(vectors, cur.r());
        auto pair = find_transferral(lat);
        if (!pair) break;
        cur = cur.merged(pair->first, pair->second);
    }
    return cur;
}

} // namespace hypermatch
