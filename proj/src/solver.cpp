#include "hypermatch/solver.hpp"

#include <algorithm>

#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

class PackingSearch {
public:
    PackingSearch(const Hypergraph& h, const SolveOptions& opts)
        : h_(h), n_(h.n()), k_(h.k()), opts_(opts), covered_(h.n()) {}

    SolveResult run() {
        if (opts_.target && *opts_.target <= 0) {
            // The empty matching settles any non-positive target.
            result_.size = 0;
            result_.decided = true;
            result_.achieved_target = true;
            return result_;
        }
        if (opts_.target && *opts_.target > n_ / k_) {
            result_.decided = true;
            result_.achieved_target = false;
            return result_;
        }
        if (!opts_.target) seed_greedy();
        dfs(0, 0);
        if (!aborted_) {
            result_.decided = true;
            result_.achieved_target = found_target_;
        }
        result_.size = static_cast<int>(best_.size());
        result_.witness.clear();
        for (EdgeId e : best_) {
            auto row = h_.edge(e);
            result_.witness.emplace_back(row.begin(), row.end());
        }
        std::sort(result_.witness.begin(), result_.witness.end());
        return result_;
    }

private:
    // Smallest matching size that is still worth finding.
    int needed() const {
        return opts_.target ? *opts_.target : static_cast<int>(best_.size()) + 1;
    }

    void seed_greedy() {
        Bitset used(n_);
        for (EdgeId e = 0; e < static_cast<EdgeId>(h_.m()); ++e)
            if (words_disjoint(used.words(), h_.edge_bits(e))) {
                used.add(h_.edge_bits(e));
                best_.push_back(e);
            }
    }

    void record() {
        if (opts_.target) {
            if (static_cast<int>(cur_.size()) >= *opts_.target) {
                best_ = cur_;
                found_target_ = true;
                done_ = true;
            }
            return;
        }
        if (cur_.size() > best_.size()) best_ = cur_;
    }

    void dfs(int v, int skips) {
        if (done_ || aborted_) return;
        if (++result_.nodes > opts_.node_budget) {
            aborted_ = true;
            return;
        }
        while (v < n_ && covered_.test(v)) ++v;
        if (opts_.target && static_cast<int>(cur_.size()) >= *opts_.target) {
            record();
            return;
        }
        if (v == n_) {
            record();
            return;
        }
        int remaining = n_ - static_cast<int>(cur_.size()) * k_ - skips;
        if (static_cast<int>(cur_.size()) + remaining / k_ < needed()) return;

        for (EdgeId e : h_.incident(v)) {
            if (!words_disjoint(covered_.words(), h_.edge_bits(e))) continue;
            covered_.add(h_.edge_bits(e));
            cur_.push_back(e);
            dfs(v + 1, skips);
            cur_.pop_back();
            covered_.remove(h_.edge_bits(e));
            if (done_ || aborted_) return;
        }
        // Skip branch; the prune above already enforces the skip budget
        // n - k*needed at the child.
        dfs(v + 1, skips + 1);
    }

    const Hypergraph& h_;
    int n_, k_;
    SolveOptions opts_;
    Bitset covered_;
    std::vector<EdgeId> cur_;
    std::vector<EdgeId> best_;
    bool done_ = false;
    bool aborted_ = false;
    bool found_target_ = false;
    SolveResult result_;
};

} // namespace

Matching SolveResult::to_matching(const Hypergraph& h) const {
    Matching m(h.n());
    for (const auto& e : witness) m.add(e);
    return m;
}

SolveResult matching_number(const Hypergraph& h, SolveOptions opts) {
    PackingSearch search(h, opts);
    return search.run();
}

std::optional<bool> has_matching_of_size(const Hypergraph& h, int size,
                                         std::uint64_t node_budget) {
    SolveOptions opts;
    opts.target = size;
    opts.node_budget = node_budget;
    SolveResult r = matching_number(h, opts);
    if (!r.decided) return std::nullopt;
    return r.achieved_target;
}

} // namespace hypermatch
