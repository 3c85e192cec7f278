#pragma once

#include <map>
#include <vector>

#include "torsor/integers.hpp"

namespace torsor {

// Primes up to limit inclusive.
std::vector<i64> sieve_primes(i64 limit);

// Smallest-prime-factor sieve for fast factorization of many small n.
class FactorSieve {
  public:
    explicit FactorSieve(i64 limit);

    i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }

    // (p, exponent) pairs, p increasing. n must be in [1, limit].
    std::vector<std::pair<i64, int>> factor(i64 n) const;

  private:
    std::vector<int32_t> spf_;
};

// Trial-division factorization, n >= 1 (handles n up to ~1e14 comfortably).
std::vector<std::pair<i64, int>> factorize(i64 n);

// Distinct prime divisors of |n| (n != 0).
std::vector<i64> prime_divisors(i64 n);

int mobius(i64 n);
int omega(i64 n);  // number of distinct primes
i64 radical(i64 n);

// All divisors of n (unsorted).
std::vector<i64> divisors(i64 n);

// Squarefree divisors of n, each paired with its Moebius value.
std::vector<std::pair<i64, int>> squarefree_divisors(i64 n);

}  // namespace torsor
