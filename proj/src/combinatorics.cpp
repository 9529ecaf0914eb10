#include "hypermatch/combinatorics.hpp"

#include <limits>

namespace hypermatch {

BigInt binom_big(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    if (r > n - r) r = n - r;
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= (n - r + i);
        result /= i;
    }
    return result;
}

std::uint64_t binom_u64(long long n, long long r) {
    BigInt b = binom_big(n, r);
    if (b > std::numeric_limits<std::uint64_t>::max())
        raise(ErrorKind::BudgetExceeded, "binomial coefficient exceeds 64 bits");
    return b.convert_to<std::uint64_t>();
}

double binom_ratio_as_double(const BigInt& num, const BigInt& den) {
    if (den == 0) raise(ErrorKind::BadParameter, "zero denominator in ratio");
    // Scale through a rational to keep precision for huge operands.
    boost::multiprecision::cpp_rational q(num, den);
    return q.convert_to<double>();
}

void for_each_combination(int n, int r,
                          const std::function<bool(std::span<const int>)>& fn) {
    if (r < 0 || r > n) return;
    std::vector<int> combo(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) combo[static_cast<size_t>(i)] = i;
    while (true) {
        if (!fn(std::span<const int>(combo))) return;
        int i = r - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) return;
        ++combo[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
}

std::uint64_t combination_rank(int n, std::span<const int> combo) {
    // Number of r-subsets lexicographically before `combo`.
    std::uint64_t rank = 0;
    int r = static_cast<int>(combo.size());
    int prev = -1;
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < combo[static_cast<size_t>(i)]; ++v)
            rank += binom_u64(n - v - 1, r - i - 1);
        prev = combo[static_cast<size_t>(i)];
    }
    return rank;
}

std::vector<int> combination_unrank(int n, int r, std::uint64_t rank) {
    std::vector<int> combo;
    combo.reserve(static_cast<size_t>(r));
    int v = 0;
    for (int i = 0; i < r; ++i) {
        while (true) {
            std::uint64_t block = binom_u64(n - v - 1, r - i - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        combo.push_back(v);
        ++v;
    }
    return combo;
}

} // namespace hypermatch
