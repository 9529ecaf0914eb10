#include "hypermatch/constructions.hpp"

#include <numeric>
#include <string>

#include "hypermatch/combinatorics.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

Hypergraph space_barrier(int n, int k, int s) {
    if (k < 2 || n < k) raise(ErrorKind::BadParameter, "need k >= 2 and n >= k");
    if (s < 0 || static_cast<long long>(s) * k >= n)
        raise(ErrorKind::BadParameter, "spine size must satisfy 0 <= s < n/k");
    std::vector<std::vector<int>> edges;
    for_each_combination(n, k, [&](std::span<const int> combo) {
        if (combo.front() < s) // sorted, so the smallest vertex decides
            edges.emplace_back(combo.begin(), combo.end());
        return true;
    });
    return Hypergraph::build(n, k, std::move(edges));
}

void check_divisibility_spec(int n, int k, int ell, int j) {
    if (k < 2 || n < k) raise(ErrorKind::BadParameter, "need k >= 2 and n >= k");
    if (ell < 0 || ell > k - 1)
        raise(ErrorKind::InadmissibleSpec, "need 0 <= ell <= k-1");
    if (n % k != ell)
        raise(ErrorKind::InadmissibleSpec,
              "violated n ≡ ell (mod k): n=" + std::to_string(n) + ", ell=" +
                  std::to_string(ell) + ", k=" + std::to_string(k));
    if (j < 0 || j > ell + 1)
        raise(ErrorKind::InadmissibleSpec, "need j in {0, ..., ell+1}");
}

namespace {

int required_n1_residue(int n, int k, int ell, int j) {
    int m = ell + 2;
    return static_cast<int>(((static_cast<long long>(n / k) * j + ell + 1) % m + m) % m);
}

} // namespace

std::vector<int> admissible_first_part_sizes(int n, int k, int ell, int j) {
    check_divisibility_spec(n, k, ell, j);
    int m = ell + 2;
    int want = required_n1_residue(n, k, ell, j);
    std::vector<int> out;
    for (int n1 = 0; n1 <= n; ++n1)
        if (n1 % m == want) out.push_back(n1);
    return out;
}

DivisibilityBarrier divisibility_barrier(int n, int k, int ell, int j, int n1) {
    check_divisibility_spec(n, k, ell, j);
    int m = ell + 2;
    if (n1 < 0 || n1 > n) raise(ErrorKind::InadmissibleSpec, "need 0 <= n1 <= n");
    int want = required_n1_residue(n, k, ell, j);
    if (n1 % m != want)
        raise(ErrorKind::InadmissibleSpec,
              "violated n1 ≡ floor(n/k)·j + ell + 1 (mod ell+2): " +
                  std::to_string(n1) + " ≢ " + std::to_string(want) + " (mod " +
                  std::to_string(m) + ")");

    std::vector<std::vector<int>> edges;
    for_each_combination(n, k, [&](std::span<const int> combo) {
        int in_first = 0;
        for (int v : combo)
            if (v < n1) ++in_first;
        if (in_first % m == j % m) edges.emplace_back(combo.begin(), combo.end());
        return true;
    });

    DivisibilityBarrier out{Hypergraph::build(n, k, std::move(edges)),
                            VertexPartition{}, ell, j, n1};
    // Degenerate splits would violate the non-empty-part invariant, so empty
    // sides are dropped from the returned partition.
    std::vector<std::vector<int>> parts;
    if (n1 > 0) {
        std::vector<int> v1(static_cast<size_t>(n1));
        std::iota(v1.begin(), v1.end(), 0);
        parts.push_back(std::move(v1));
    }
    if (n1 < n) {
        std::vector<int> v2(static_cast<size_t>(n - n1));
        std::iota(v2.begin(), v2.end(), n1);
        parts.push_back(std::move(v2));
    }
    out.partition = VertexPartition(n, {}, std::move(parts));
    return out;
}

} // namespace hypermatch
