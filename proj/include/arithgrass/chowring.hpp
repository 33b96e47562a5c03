#pragma once

// Classical Chow ring of the Grassmannian G(N,2) in the Schubert basis
// s_{a,b}, N >= a >= b >= 0: the Lefschetz operator (multiplication by s_1),
// skew f-numbers, the Hodge star, the trace pairing, Betti numbers and
// primitive classes.

#include "arithgrass/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <functional>
#include <map>
#include <vector>

namespace arithgrass {

/// Two-row partition (a, b) indexing the Schubert class s_{a,b}.
struct Partition2 {
    int a = 0;
    int b = 0;

    int size() const { return a + b; }
    bool fits(int N) const { return N >= a && a >= b && b >= 0; }

    auto operator<=>(const Partition2&) const = default;
};

/// Sparse rational combination of Schubert classes in CH*(G(N,2)).
///
/// Terms outside the 2 x N box are dropped on insertion and zero
/// coefficients are never stored, so two elements compare equal iff they
/// are the same class. Iteration order is (a, b) descending.
class ChowElement {
public:
    using Terms = std::map<Partition2, Rational, std::greater<>>;

    /// Zero element of CH*(G(N,2)). Throws std::invalid_argument for N < 1.
    explicit ChowElement(int N);

    /// c * s_{a,b}; zero when (a, b) is outside the box.
    static ChowElement schubert(int N, int a, int b, const Rational& c = 1);

    int ambient() const { return N_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of s_lambda (zero if absent).
    Rational coeff(Partition2 lambda) const;

    /// Adds c * s_lambda, discarding out-of-box symbols.
    void add(Partition2 lambda, const Rational& c);

    /// Common degree a + b of all terms; -1 for the zero element,
    /// -2 for an inhomogeneous element.
    int degree() const;

    ChowElement& operator+=(const ChowElement& other);
    ChowElement& operator-=(const ChowElement& other);
    ChowElement& operator*=(const Rational& c);

    friend ChowElement operator+(ChowElement x, const ChowElement& y) { return x += y; }
    friend ChowElement operator-(ChowElement x, const ChowElement& y) { return x -= y; }
    friend ChowElement operator*(const Rational& c, ChowElement x) { return x *= c; }
    friend bool operator==(const ChowElement&, const ChowElement&) = default;

private:
    void require_same_ambient(const ChowElement& other) const;

    int N_;
    Terms terms_;
};

/// Pieri rule: L s_{a,b} = s_{a+1,b} + s_{a,b+1}, extended linearly.
ChowElement pieri_step(const ChowElement& x);

/// Skew f-number f^{lambda/mu} for two-row shapes (number of standard
/// tableaux of the skew shape). Throws std::invalid_argument unless both are
/// partitions and mu is contained in lambda.
Integer skew_f(Partition2 lambda, Partition2 mu);

/// L^r x via the skew f-number expansion. Agrees with r Pieri steps.
ChowElement lefschetz_power(const ChowElement& x, int r);

/// Hodge star: *s_{a,b} = (a+1)! b! / ((N-a)! (N-b+1)!) s_{N-b,N-a}.
ChowElement hodge_star(const ChowElement& x);

/// Trace pairing <s_{a,b}, s_{a',b'}> = delta_{(a,b),(N-b',N-a')}.
/// Throws std::invalid_argument on ambient mismatch.
Rational pairing(const ChowElement& x, const ChowElement& y);

/// The primitive class alpha_k spanning CH^{2k}_prim. Requires 0 <= 2k <= N.
ChowElement alpha(int N, int k);

/// Schubert basis of CH^p, ordered by (a, b) descending.
std::vector<Partition2> degree_basis(int N, int p);

/// Basis of Ker(L : CH^p -> CH^{p+1}) by exact elimination on the Pieri
/// matrix. Each vector is scaled so its leading coefficient is 1.
/// Requires 0 <= p <= 2N.
std::vector<ChowElement> kernel_of_L(int N, int p);

/// dim CH^p(G(N,2)); zero outside [0, 2N].
long betti(int N, int p);

struct PrimitiveProfile {
    int N = 0;
    /// dims[p] = dim CH^p_prim for 0 <= p <= N
    std::vector<int> dims;
    /// *Ker(L) on CH^{2N-p}, which spans CH^p_prim
    std::vector<std::vector<ChowElement>> generators;
    /// nonzero primitive space in degree p forces a zero one in degree p - 1
    bool primcond = false;
};

/// Primitive dimensions computed from Betti numbers and independently as
/// the rank of the starred kernel of L. Throws std::logic_error if the two
/// disagree.
PrimitiveProfile primitive_profile(int N);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {v : M v = 0} for an m x cols matrix, from the reduced row
/// echelon form (one vector per free column, free entry 1).
std::vector<std::vector<Rational>> exact_nullspace(RationalMatrix m, std::size_t cols);

std::size_t exact_rank(RationalMatrix m);

/// {"N": N, "terms": [{"a":..,"b":..,"coeff":"p/q"}, ...]} sorted by (a,b)
/// descending.
nlohmann::ordered_json to_json(const ChowElement& x);
ChowElement chow_from_json(const nlohmann::json& j);

}  // namespace arithgrass
