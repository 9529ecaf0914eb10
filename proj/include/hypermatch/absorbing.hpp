#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/reachability.hpp"

namespace hypermatch {

// Replacing e by {e1, e2} swallows the (k+2)-set S and leaves two vertices
// of e uncovered:
//   |e1∩S| = k-2, |e1∩e| = 2, |e2∩S| = 4, |e2∩e| = k-4, e1∩e2 = ∅,
//   e disjoint from S.
struct SAbsorptionWitness {
    std::vector<Vertex> e;
    std::vector<Vertex> e1;
    std::vector<Vertex> e2;
    std::vector<Vertex> s;
    std::array<Vertex, 2> uncovered_leftover{};
};

// Independent recheck of all witness intersection equalities.
bool validate_s_witness(const Hypergraph& h, const SAbsorptionWitness& w);

// Lexicographically first witness certifying that e is S-absorbing, if any.
// Requires k >= 6 and |S| = k+2; e must be disjoint from S.
std::optional<SAbsorptionWitness> find_s_absorbing_witness(
    const Hypergraph& h, std::span<const int> s, std::span<const Vertex> e);

// Number of S-absorbing edges in h (or restricted to the matching if given).
std::uint64_t count_s_absorbing(const Hypergraph& h, std::span<const int> s,
                                const Matching* m = nullptr);

struct AbsorbingMatchingParams {
    double beta = 0.1;
    std::uint64_t seed = 0;
    int retries = 64;
    std::uint64_t verify_samples = 500;     // sampled S-check budget
    std::uint64_t exhaustive_cap = 1'000'000; // exhaustive S-check when C(n,k+2) fits
};

struct AbsorbingMatchingResult {
    bool success = false;
    Matching m_prime;
    int attempts = 0;
    std::uint64_t required_per_s = 0;
    std::vector<int> violating_s; // first violating S on failure
    std::vector<std::uint64_t> absorb_histogram; // per-checked-S absorbing counts
    AbsorbingMatchingResult() : m_prime(0) {}
};

// Randomized search for a small matching M' such that every checked
// (k+2)-set S disjoint from V(M') has at least ceil(beta^2 n) S-absorbing
// edges in M'.  Retries with fresh substreams; identical output for a fixed
// seed.
AbsorbingMatchingResult build_absorbing_matching(const Hypergraph& h,
                                                 const AbsorbingMatchingParams& params);

// (M \ {e}) U {e1, e2}: covered count rises by exactly k, size by one.
// Throws InvalidWitness unless e is in M, S is uncovered and the witness
// checks out against h.
Matching absorb_step(const Hypergraph& h, const Matching& m,
                     std::span<const int> s, const SAbsorptionWitness& w);

struct StageInfo {
    std::string name;
    std::map<std::string, double> metrics;
};

struct PipelineResult {
    bool success = false;
    std::optional<Matching> matching;
    int target_size = 0;
    std::string failed_stage; // empty on success
    std::string message;
    std::vector<StageInfo> stages;
};

struct NpmParams {
    double beta = 0.1;
    std::uint64_t seed = 0;
    int build_retries = 64;
    std::uint64_t verify_samples = 500;
    std::uint64_t exhaustive_cap = 1'000'000;
    int residual_exact_max_n = 24;
    int greedy_rounds = 32;
    std::uint64_t solver_budget = 100'000'000;
};

// Absorbing pipeline for k >= 6, k not dividing n: absorbing matching,
// residual matching on the rest, then (k+2)-set absorption until exactly
// n mod k vertices stay uncovered.  The final matching is re-certified from
// scratch; failures name their stage.
PipelineResult npm_via_absorption(const Hypergraph& h, const NpmParams& params);

struct LatticePipelineParams {
    ReachParams reach;             // zeroed fields are derived from (n, k)
    bool reach_defaults = true;    // fill reach via ReachParams::defaults_for
    double mu = 0.01;              // robust fraction of C(n,k); tau = ceil(mu*C(n,k))
    std::uint64_t tau = 0;         // explicit robust threshold (overrides mu)
    int family_target = 0;         // 0 = max(2, floor(0.1 n))
    int family_floor = 1;          // absorbers required per target k-set
    int reserve_per_vector = 2;
    long long decompose_bound = 16;
    std::uint64_t seed = 0;
    int retries = 16;
    int residual_exact_max_n = 24;
    int greedy_rounds = 32;
    std::uint64_t verify_samples = 500;
    std::uint64_t exhaustive_cap = 1'000'000;
    std::uint64_t solver_budget = 100'000'000;
};

// Lattice-based pipeline for k not dividing n: reachability partition,
// transferral merge, absorbing family and per-vector reserve matchings,
// greedy trash cover, residual matching, then index-vector-driven
// absorption.  Every intermediate object passes its module's invariants;
// the final matching is re-certified from scratch.
PipelineResult lattice_absorbing_pipeline(const Hypergraph& h,
                                          const LatticePipelineParams& params);

} // namespace hypermatch
