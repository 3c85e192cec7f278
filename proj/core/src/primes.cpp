#include "torsor/primes.hpp"

#include <cassert>
#include <stdexcept>

namespace torsor {

std::vector<i64> sieve_primes(i64 limit) {
    std::vector<i64> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (i64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (i64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return primes;
}

FactorSieve::FactorSieve(i64 limit) {
    assert(limit >= 1);
    spf_.assign(limit + 1, 0);
    for (i64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (i64 j = i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<int32_t>(i);
            }
        }
    }
}

std::vector<std::pair<i64, int>> FactorSieve::factor(i64 n) const {
    if (n < 1 || n > limit()) throw std::out_of_range("FactorSieve::factor: n out of range");
    std::vector<std::pair<i64, int>> f;
    while (n > 1) {
        i64 p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    return f;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; (i128)p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<i64> prime_divisors(i64 n) {
    n = abs64(n);
    std::vector<i64> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

int mobius(i64 n) {
    assert(n >= 1);
    auto f = factorize(n);
    for (auto& [p, e] : f)
        if (e > 1) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

int omega(i64 n) {
    n = abs64(n);
    assert(n >= 1);
    return static_cast<int>(factorize(n).size());
}

i64 radical(i64 n) {
    n = abs64(n);
    assert(n >= 1);
    i64 r = 1;
    for (auto& [p, e] : factorize(n)) r *= p;
    return r;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds{1};
    for (auto& [p, e] : factorize(n)) {
        size_t m = ds.size();
        i64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pe);
        }
    }
    return ds;
}

std::vector<std::pair<i64, int>> squarefree_divisors(i64 n) {
    std::vector<std::pair<i64, int>> ds{{1, 1}};
    for (auto& [p, e] : factorize(n)) {
        size_t m = ds.size();
        for (size_t j = 0; j < m; ++j) ds.emplace_back(ds[j].first * p, -ds[j].second);
    }
    return ds;
}

}  // namespace torsor
