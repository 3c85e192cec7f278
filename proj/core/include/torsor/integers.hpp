#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace torsor {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128;

// Largest r >= 0 with r^2 <= n.
inline i64 isqrt(i64 n) {
    assert(n >= 0);
    if (n < 2) return n;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (i128)r * r > n) --r;
    while ((i128)(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Largest r >= 0 with r^k <= n (k >= 1).
inline i64 iroot(i64 n, int k) {
    assert(n >= 0 && k >= 1);
    if (k == 1 || n < 2) return n;
    i64 r = static_cast<i64>(std::pow(static_cast<double>(n), 1.0 / k));
    auto pw = [](i64 b, int e) {
        i128 p = 1;
        for (int i = 0; i < e; ++i) {
            p *= b;
            if (p > (i128)4 * 1000000000000000000LL) return (i128)4 * 1000000000000000000LL;
        }
        return p;
    };
    while (r > 0 && pw(r, k) > n) --r;
    while (pw(r + 1, k) <= n) ++r;
    return r;
}

inline i64 abs64(i64 x) { return x < 0 ? -x : x; }

inline i64 gcd64(i64 a, i64 b) { return std::gcd(abs64(a), abs64(b)); }

// x mod m normalized to [0, m).
inline i64 mod_norm(i64 x, i64 m) {
    assert(m >= 1);
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 mod_norm128(i128 x, i64 m) {
    assert(m >= 1);
    i64 r = static_cast<i64>(x % m);
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>((i128)a * b % m); }

inline i64 powmod(i64 base, i64 exp, i64 m) {
    assert(exp >= 0 && m >= 1);
    if (m == 1) return 0;
    i64 r = 1;
    base = mod_norm(base, m);
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline i64 extgcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return abs64(a);
    }
    i64 x1, y1;
    i64 g = extgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo m; throws if gcd(a,m) != 1.
inline i64 modinv(i64 a, i64 m) {
    assert(m >= 1);
    if (m == 1) return 0;
    i64 x, y;
    i64 g = extgcd(mod_norm(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("modinv: arguments not coprime");
    return mod_norm(x, m);
}

}  // namespace torsor
