#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypermatch/error.hpp"

namespace hypermatch {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; returns 0 for r < 0 or r > n.
BigInt binom_big(long long n, long long r);

// Binomial coefficient as uint64; throws BudgetExceeded on overflow.
std::uint64_t binom_u64(long long n, long long r);

double binom_ratio_as_double(const BigInt& num, const BigInt& den);

// Visits all r-subsets of [0, n) in lexicographic order.  The callback gets
// the current combination; returning false stops the enumeration early.
void for_each_combination(int n, int r,
                          const std::function<bool(std::span<const int>)>& fn);

// Lexicographic (combinadic) rank of a sorted r-subset of [0, n).
std::uint64_t combination_rank(int n, std::span<const int> combo);
std::vector<int> combination_unrank(int n, int r, std::uint64_t rank);

} // namespace hypermatch
