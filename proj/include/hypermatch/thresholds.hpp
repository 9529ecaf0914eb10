#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypermatch/combinatorics.hpp"

namespace hypermatch {

// Residue-class binomial sums:
//   values[i] = sum over j' ≡ i (mod m), 0 <= j' <= k-d of
//               C(k-d, j') x^{j'} (1-x)^{k-d-j'}.
// The entries are non-negative and sum to 1.
struct ResidueProfile {
    int k = 0, d = 0, m = 0;
    double x = 0.0;
    std::vector<double> values;
};

ResidueProfile residue_profile(int k, int d, int m, double x);

// The degree objective for a split ratio x and target residue j: the minimum
// over t = 0..d of the profile value at residue (j - t) mod m.
double degree_objective(int k, int d, int m, int j, double x);

struct ThresholdResult {
    int k = 0, d = 0, ell = 0;
    double g = 0.0;
    double x_star = 0.0;
    int j_star = 0;
    ResidueProfile profile;       // at (x_star)
    std::vector<int> certificate; // min-attaining t indices at the optimum
};

// Global maximum over j in {0..ell+1} and x in [0,1] of the min-profile
// objective; |g - true| <= 1e-6.  Ties in j go to the smaller j, ties in x
// to the smaller x.
ThresholdResult g_optimize(int k, int d, int ell);

// Exact integers C_i = sum over j' ≡ i (mod 3) of C(k-d, j').  Their sum is
// 2^{k-d} and their minimum is floor(2^{k-d}/3).
std::array<BigInt, 3> half_point_exact(int k, int d);

// True iff d >= max{k-ell, floor(k/2)+1}; then the degree objective
// vanishes identically.
bool g_zero_predicate(int k, int d, int ell);

struct BoundCheck {
    std::string name;
    double bound = 0.0;
    bool is_lower = false;
    bool strict = false;
    bool pass = false;
    double slack = 0.0; // bound - g for upper bounds, g - bound for lower
};

// Applicable inequalities for a computed g value, each with its slack.
// Non-strict comparisons get a 1e-6 tolerance.
std::vector<BoundCheck> g_bounds_check(int k, int d, int ell, double g);

struct ConjecturedThreshold {
    double value = 0.0;       // max of the two barrier densities
    double g = 0.0;           // divisibility term
    double space_term = 0.0;  // 1 - (1 - 1/k)^{k-d}
    std::string governing;    // "divisibility", "space" or "tie"
};

ConjecturedThreshold conjectured_threshold(int k, int d, int ell);

// Exact minimum d-degree of the finite two-part construction, by the
// residue-class sum
//   deg(S_t) = sum over j' ≡ j-t (mod ell+2) of
//              C(n1-t, j') * C(n-n1-(d-t), k-d-j'),
// minimized over the realizable t (those with t <= n1 and d-t <= n-n1).
struct FiniteMinDegree {
    BigInt value;
    int t_min = 0;                 // smallest minimizing realizable t
    std::vector<BigInt> per_t;     // indexed by t = 0..d
    std::vector<bool> realizable;  // same indexing
};

FiniteMinDegree finite_min_degree(int n, int k, int d, int ell, int j, int n1);

} // namespace hypermatch
