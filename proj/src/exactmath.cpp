#include "arithgrass/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>

namespace arithgrass {

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: negative upper index " + std::to_string(n));
    }
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer pochhammer(long a, unsigned long r) {
    Integer out = 1;
    for (unsigned long i = 0; i < r; ++i) {
        const long f = a + static_cast<long>(i);
        if (f == 0) return 0;
        out *= f;
    }
    return out;
}

namespace {

struct HarmonicCache {
    std::shared_mutex mutex;
    std::deque<Rational> values{Rational(0)};  // deque keeps references stable
};

HarmonicCache& harmonic_cache() {
    static HarmonicCache cache;
    return cache;
}

}  // namespace

const Rational& harmonic(std::size_t k) {
    auto& cache = harmonic_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (k < cache.values.size()) return cache.values[k];
    }
    std::unique_lock lock(cache.mutex);
    while (cache.values.size() <= k) {
        const auto i = cache.values.size();
        cache.values.push_back(cache.values.back() + ratio(1, static_cast<unsigned long>(i)));
    }
    return cache.values[k];
}

bool validate_concave(std::span<const Rational> seq) {
    if (seq.empty()) return false;
    Rational prev_value = 0;
    Rational prev_step;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Rational step = seq[i] - prev_value;
        if (sgn(step) <= 0) return false;
        if (i > 0 && step > prev_step) return false;
        prev_value = seq[i];
        prev_step = std::move(step);
    }
    return true;
}

ConcaveSequence::ConcaveSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (!validate_concave(values_)) {
        throw std::invalid_argument("sequence is not concave increasing");
    }
}

ConcaveSequence ConcaveSequence::harmonic(std::size_t m) {
    std::vector<Rational> v;
    v.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) v.push_back(arithgrass::harmonic(k));
    return ConcaveSequence(std::move(v));
}

const Rational& ConcaveSequence::operator[](std::size_t k) const {
    if (k == 0) return zero_;
    if (k > values_.size()) {
        throw std::out_of_range("concave sequence index " + std::to_string(k) + " beyond length " +
                                std::to_string(values_.size()));
    }
    return values_[k - 1];
}

ConcaveSequence random_concave(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(1, 1000);
    std::vector<Rational> steps;
    steps.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int p = draw(rng);
        const int q = draw(rng);
        steps.push_back(ratio(p, q));
    }
    std::sort(steps.begin(), steps.end(), std::greater<>());
    std::vector<Rational> values;
    values.reserve(m);
    Rational total = 0;
    for (const auto& h : steps) {
        total += h;
        values.push_back(total);
    }
    return ConcaveSequence(std::move(values));
}

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        auto den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
        }
        Integer den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return ratio(num, den);
    }

    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(text));

    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    bool neg = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
        neg = int_part.front() == '-';
        int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits(int_part);
    digits += frac_part;
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    return ratio(neg ? Integer(-num) : num, den);
}

std::string to_decimal(const Rational& x, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Rational mag = abs(x) * scale;
    // round half away from zero: floor(2|x|s + 1) / 2
    Integer twice = 2 * mag.get_num();
    twice += mag.get_den();
    Integer rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), Integer(2 * mag.get_den()).get_mpz_t());

    std::string s = rounded.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (sgn(x) < 0 && rounded != 0) s.insert(0, 1, '-');
    return s;
}

Rational abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

bool exp_exceeds(unsigned m, const Rational& y) {
    if (m == 0) return Rational(1) > y;
    if (sgn(y) <= 0) return true;
    // e^m = S_J + R_J with 0 < R_J <= m^{J+1}/(J+1)! * 1/(1 - m/(J+2)) once J+2 > m
    Rational partial = 1;
    Rational term = 1;
    for (unsigned j = 1;; ++j) {
        term *= ratio(m, j);
        partial += term;
        if (partial > y) return true;
        if (j + 2 > m) {
            const Rational next = term * ratio(m, j + 1);
            const Rational tail = next / (1 - ratio(m, j + 2));
            if (partial + tail < y) return false;
        }
    }
}

}  // namespace arithgrass
