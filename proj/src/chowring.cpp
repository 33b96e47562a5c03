#include "arithgrass/chowring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arithgrass {

namespace {

Integer factorial(long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

std::string show(Partition2 p) { return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"; }

}  // namespace

ChowElement::ChowElement(int N) : N_(N) {
    if (N < 1) throw std::invalid_argument("ambient N must be positive, got " + std::to_string(N));
}

ChowElement ChowElement::schubert(int N, int a, int b, const Rational& c) {
    ChowElement x(N);
    x.add({a, b}, c);
    return x;
}

Rational ChowElement::coeff(Partition2 lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChowElement::add(Partition2 lambda, const Rational& c) {
    if (!lambda.fits(N_) || sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

int ChowElement::degree() const {
    if (terms_.empty()) return -1;
    const int d = terms_.begin()->first.size();
    for (const auto& [lambda, c] : terms_) {
        if (lambda.size() != d) return -2;
    }
    return d;
}

void ChowElement::require_same_ambient(const ChowElement& other) const {
    if (other.N_ != N_) {
        throw std::invalid_argument("ambient mismatch: N=" + std::to_string(N_) + " vs N=" +
                                    std::to_string(other.N_));
    }
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
    require_same_ambient(other);
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
    require_same_ambient(other);
    for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
    return *this;
}

ChowElement& ChowElement::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_) v *= c;
    return *this;
}

ChowElement pieri_step(const ChowElement& x) {
    ChowElement out(x.ambient());
    for (const auto& [lambda, c] : x.terms()) {
        out.add({lambda.a + 1, lambda.b}, c);
        out.add({lambda.a, lambda.b + 1}, c);
    }
    return out;
}

Integer skew_f(Partition2 lambda, Partition2 mu) {
    const bool partitions = lambda.a >= lambda.b && lambda.b >= 0 && mu.a >= mu.b && mu.b >= 0;
    if (!partitions || mu.a > lambda.a || mu.b > lambda.b) {
        throw std::invalid_argument("skew_f: " + show(mu) + " is not contained in " + show(lambda));
    }
    const long r = lambda.size() - mu.size();
    return binomial(r, lambda.a - mu.a) - binomial(r, lambda.a - mu.b + 1);
}

ChowElement lefschetz_power(const ChowElement& x, int r) {
    if (r < 0) throw std::invalid_argument("negative Lefschetz exponent");
    const int N = x.ambient();
    ChowElement out(N);
    for (const auto& [mu, c] : x.terms()) {
        const int total = mu.size() + r;
        const int lo = std::max(mu.a, (total + 1) / 2);
        const int hi = std::min(N, total);
        for (int a = lo; a <= hi; ++a) {
            const Partition2 lambda{a, total - a};
            if (lambda.b < mu.b) continue;
            const Integer f = skew_f(lambda, mu);
            if (f != 0) out.add(lambda, c * f);
        }
    }
    return out;
}

ChowElement hodge_star(const ChowElement& x) {
    const int N = x.ambient();
    ChowElement out(N);
    for (const auto& [lambda, c] : x.terms()) {
        const auto [a, b] = lambda;
        const Rational scale = ratio(factorial(a + 1) * factorial(b), factorial(N - a) * factorial(N - b + 1));
        out.add({N - b, N - a}, c * scale);
    }
    return out;
}

Rational pairing(const ChowElement& x, const ChowElement& y) {
    if (x.ambient() != y.ambient()) {
        throw std::invalid_argument("pairing: ambient mismatch N=" + std::to_string(x.ambient()) +
                                    " vs N=" + std::to_string(y.ambient()));
    }
    const int N = x.ambient();
    Rational out = 0;
    for (const auto& [lambda, c] : x.terms()) {
        const auto it = y.terms().find({N - lambda.b, N - lambda.a});
        if (it != y.terms().end()) out += c * it->second;
    }
    return out;
}

ChowElement alpha(int N, int k) {
    if (k < 0 || 2 * k > N) {
        throw std::invalid_argument("alpha: need 0 <= 2k <= N, got N=" + std::to_string(N) +
                                    " k=" + std::to_string(k));
    }
    ChowElement out(N);
    for (int j = 0; j <= k; ++j) {
        Integer c = binomial(N + 1 - j, N - 2 * k) * binomial(N - 2 * k + j, N - 2 * k);
        if (j % 2 == 1) c = -c;
        out.add({2 * k - j, j}, Rational(c));
    }
    return out;
}

std::vector<Partition2> degree_basis(int N, int p) {
    std::vector<Partition2> basis;
    for (int a = std::min(N, p); a >= (p + 1) / 2; --a) basis.push_back({a, p - a});
    return basis;
}

long betti(int N, int p) {
    if (p < 0 || p > 2 * N) return 0;
    return static_cast<long>(degree_basis(N, p).size());
}

std::vector<std::vector<Rational>> exact_nullspace(RationalMatrix m, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t exact_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    return cols - exact_nullspace(std::move(m), cols).size();
}

std::vector<ChowElement> kernel_of_L(int N, int p) {
    if (p < 0 || p > 2 * N) {
        throw std::invalid_argument("kernel_of_L: degree " + std::to_string(p) + " outside [0, 2N]");
    }
    const auto source = degree_basis(N, p);
    const auto target = degree_basis(N, p + 1);

    RationalMatrix pieri(target.size(), std::vector<Rational>(source.size(), Rational(0)));
    for (std::size_t c = 0; c < source.size(); ++c) {
        const auto image = pieri_step(ChowElement::schubert(N, source[c].a, source[c].b));
        for (std::size_t r = 0; r < target.size(); ++r) pieri[r][c] = image.coeff(target[r]);
    }

    std::vector<ChowElement> kernel;
    for (auto& v : exact_nullspace(std::move(pieri), source.size())) {
        ChowElement x(N);
        for (std::size_t c = 0; c < source.size(); ++c) x.add(source[c], v[c]);
        x *= 1 / x.terms().begin()->second;
        kernel.push_back(std::move(x));
    }
    return kernel;
}

PrimitiveProfile primitive_profile(int N) {
    if (N < 1) throw std::invalid_argument("primitive_profile: N must be positive");
    PrimitiveProfile profile;
    profile.N = N;
    for (int p = 0; p <= N; ++p) {
        const long from_betti = std::max(0L, betti(N, p) - betti(N, p - 1));

        std::vector<ChowElement> gens;
        for (const auto& v : kernel_of_L(N, 2 * N - p)) gens.push_back(hodge_star(v));
        const auto basis = degree_basis(N, p);
        RationalMatrix coords;
        for (const auto& g : gens) {
            std::vector<Rational> row;
            for (const auto& lambda : basis) row.push_back(g.coeff(lambda));
            coords.push_back(std::move(row));
        }
        const auto from_kernel = static_cast<long>(exact_rank(std::move(coords)));

        if (from_betti != from_kernel) {
            throw std::logic_error("primitive dimension mismatch at N=" + std::to_string(N) + " p=" +
                                   std::to_string(p) + ": betti gives " + std::to_string(from_betti) +
                                   ", starred kernel gives " + std::to_string(from_kernel));
        }
        profile.dims.push_back(static_cast<int>(from_betti));
        profile.generators.push_back(std::move(gens));
    }
    profile.primcond = true;
    for (int p = 1; p <= N; ++p) {
        if (profile.dims[p] > 0 && profile.dims[p - 1] != 0) profile.primcond = false;
    }
    return profile;
}

nlohmann::ordered_json to_json(const ChowElement& x) {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : x.terms()) {
        terms.push_back({{"a", lambda.a}, {"b", lambda.b}, {"coeff", to_string(c)}});
    }
    return {{"N", x.ambient()}, {"terms", std::move(terms)}};
}

ChowElement chow_from_json(const nlohmann::json& j) {
    ChowElement x(j.at("N").get<int>());
    for (const auto& t : j.at("terms")) {
        const Partition2 lambda{t.at("a").get<int>(), t.at("b").get<int>()};
        if (!lambda.fits(x.ambient())) {
            throw std::invalid_argument("Schubert index " + show(lambda) + " outside the 2xN box");
        }
        x.add(lambda, parse_rational(t.at("coeff").get<std::string>()));
    }
    return x;
}

}  // namespace arithgrass
