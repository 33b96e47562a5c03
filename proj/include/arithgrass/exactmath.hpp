#pragma once

// Exact scalars for everything else in the library: GMP integers and
// rationals, binomials, Pochhammer symbols, harmonic numbers and concave
// increasing sequences.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arithgrass {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::invalid_argument when den = 0.
Rational ratio(const Integer& num, const Integer& den);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
/// Throws std::invalid_argument for negative n.
Integer binomial(long n, long k);

/// Rising factorial (a)_r = a (a+1) ... (a+r-1), with (a)_0 = 1.
Integer pochhammer(long a, unsigned long r);

/// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0.
///
/// Values are memoized in a process-wide cache that grows on demand; the
/// returned reference stays valid for the life of the process. Safe to call
/// concurrently.
const Rational& harmonic(std::size_t k);

/// True iff seq (read as H_1..H_m, with H_0 = 0 prepended) has strictly
/// positive, nonincreasing increments. Empty input is rejected (false).
bool validate_concave(std::span<const Rational> seq);

/// Positive sequence H_1..H_m with positive nonincreasing increments.
/// Index 0 is the implicit H_0 = 0.
class ConcaveSequence {
public:
    /// Throws std::invalid_argument unless validate_concave(values).
    explicit ConcaveSequence(std::vector<Rational> values);

    /// H_1..H_m of the harmonic numbers.
    static ConcaveSequence harmonic(std::size_t m);

    /// H_k for 0 <= k <= size(); H_0 = 0.
    const Rational& operator[](std::size_t k) const;

    std::size_t size() const { return values_.size(); }
    std::span<const Rational> values() const { return values_; }

private:
    std::vector<Rational> values_;
    Rational zero_{0};
};

/// Random concave increasing sequence of length m: m positive increments
/// p/q with 1 <= p, q <= 1000 drawn from a mt19937_64 seeded with `seed`,
/// sorted nonincreasing and prefix-summed.
ConcaveSequence random_concave(std::size_t m, std::uint64_t seed);

/// Canonical "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& x);

/// Accepts "p/q", "p", and finite decimals such as "-1.25" or "3." (the
/// decimal is converted exactly). Surrounding whitespace is ignored.
/// Throws std::invalid_argument on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Decimal approximation rounded half away from zero to `digits` places.
/// Used only for human-facing output columns.
std::string to_decimal(const Rational& x, int digits = 12);

/// Absolute value.
Rational abs(const Rational& x);

/// Certified comparison e^m > y for m >= 0 and rational y, using the
/// exponential series with an explicit remainder bound. e^m is irrational
/// for m > 0, so equality never has to be decided.
bool exp_exceeds(unsigned m, const Rational& y);

}  // namespace arithgrass
