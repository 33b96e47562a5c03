#pragma once

// Slow, independent reference computations used only by the tests. None of
// these call the library routine they are checked against.

#include "arithgrass/chowring.hpp"
#include "arithgrass/exactmath.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using arithgrass::Integer;
using arithgrass::Rational;

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// Pascal's triangle row by row.
inline Integer pascal(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Integer> row{1};
    for (long i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 1);
        for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

inline Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer rising(long a, long r) {
    Integer p = 1;
    for (long i = 0; i < r; ++i) p *= a + i;
    return p;
}

inline Rational harmonic_sum(long k) {
    Rational h = 0;
    for (long i = 1; i <= k; ++i) h += q(1, i);
    return h;
}

/// Standard tableaux of the two-row skew shape lambda/mu, by removing
/// outer corners one at a time.
inline Integer syt_count(int l1, int l2, int m1, int m2) {
    std::map<std::pair<int, int>, Integer> memo;
    auto rec = [&](auto&& self, int a, int b) -> Integer {
        if (a == m1 && b == m2) return 1;
        const auto key = std::pair{a, b};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        // corner of row 1: keep a-1 >= b and a-1 >= m1
        if (a > m1 && a - 1 >= b) total += self(self, a - 1, b);
        if (b > m2) total += self(self, a, b - 1);
        memo[key] = total;
        return total;
    };
    return rec(rec, l1, l2);
}

/// Each term of the 4F3 sum built from scratch.
inline Rational racah_naive(int n, int s, int T) {
    Rational sum = 0;
    for (int r = 0; r <= std::min(n, s); ++r) {
        const Integer num = rising(-n, r) * rising(n + 1, r) * rising(-s, r) * rising(s + 1, r);
        const Integer den = rising(1, r) * rising(1 + T, r) * rising(1 - T, r) * factorial(r);
        Rational term(num, den);
        term.canonicalize();
        sum += term;
    }
    return sum;
}

/// P_n(t) = 2^{-n} sum_k C(n,k)^2 (t-1)^{n-k} (t+1)^k.
inline Rational legendre_explicit(int n, const Rational& t) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        Rational term = pascal(n, k) * pascal(n, k);
        for (int i = 0; i < n - k; ++i) term *= t - 1;
        for (int i = 0; i < k; ++i) term *= t + 1;
        sum += term;
    }
    Integer two_n = 1;
    for (int i = 0; i < n; ++i) two_n *= 2;
    return sum / two_n;
}

/// One application of L computed from the box picture, on raw coefficient maps.
inline std::map<std::pair<int, int>, Rational> pieri_raw(const std::map<std::pair<int, int>, Rational>& x, int N) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [ab, c] : x) {
        const auto [a, b] = ab;
        if (a + 1 <= N) out[{a + 1, b}] += c;
        if (b + 1 <= a) out[{a, b + 1}] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// U with H replaced by the indicator of index `hot` (H_j = [j == hot], H_0 = 0).
inline arithgrass::ChowElement u_indicator(const arithgrass::ChowElement& x, int hot) {
    const int N = x.ambient();
    auto H = [&](int j) -> Rational { return j == hot && j != 0 ? 1 : 0; };
    arithgrass::ChowElement out(N);
    for (const auto& [lambda, c] : x.terms()) {
        if (lambda.a != N) continue;
        const int b = lambda.b;
        Rational total = 0;
        for (int i = 0; i <= N + 1; ++i) total += H(i);
        out.add({N, b}, c * total);
        for (int i = 0; i <= (N - b) / 2; ++i) out.add({N - i, b + i}, -c * (H(N - b + 1 - i) - H(i)));
    }
    return out;
}

/// Coefficient of H_i (1 <= i <= N+1) in Sigma(N,k), i.e. A + B^i, read off
/// by running the Chow-ring computation with an indicator sequence.
inline Rational sigma_coefficient(int N, int k, int i) {
    const int n = N - 2 * k;
    const auto a = arithgrass::alpha(N, k);
    Rational total = 0;
    for (int b = 0; b <= n; ++b) {
        auto left = a;
        for (int r = 0; r < n - b; ++r) left = arithgrass::pieri_step(left);
        auto right = a;
        for (int r = 0; r < n + b; ++r) right = arithgrass::pieri_step(right);
        total += arithgrass::pairing(left, u_indicator(right, i));
    }
    return total;
}

/// Seeded random sparse Chow element of degree-mixed support.
inline arithgrass::ChowElement random_element(int N, std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> pick(0, N);
    std::uniform_int_distribution<long> coef(-20, 20);
    std::uniform_int_distribution<int> count(1, max_terms);
    arithgrass::ChowElement x(N);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        int a = pick(rng);
        int b = pick(rng);
        if (b > a) std::swap(a, b);
        x.add({a, b}, q(coef(rng), 1 + static_cast<long>(rng() % 7)));
    }
    return x;
}

}  // namespace oracle
