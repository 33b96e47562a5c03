#pragma once

// Arithmetic side of the Lefschetz theory for G(N,2): the correction
// operator U, the Hodge-index quantity Sigma(N,k) computed directly from the
// Chow ring and in closed form through the coefficients A, B^i, C_b, and the
// explicit model of arithmetic projective space with its adjoint Lambda-hat.

#include "arithgrass/chowring.hpp"
#include "arithgrass/exactmath.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace arithgrass {

/// A primitive degree p = 2k on G(N,2), together with the shifted
/// coordinates n = N - 2k and T = N + 2 used by the Racah side.
struct SigmaInstance {
    int N = 1;
    int k = 0;

    /// Throws std::invalid_argument unless N >= 1 and 0 <= 2k <= N.
    static SigmaInstance make(int N, int k);

    int n() const { return N - 2 * k; }
    int T() const { return N + 2; }
};

/// The correction operator: U(s_{a,b}) = 0 for a < N and
///   U(s_{N,b}) = (sum_{i=0}^{N+1} H_i) s_{N,b}
///                - sum_{i=0}^{floor((N-b)/2)} (H_{N-b+1-i} - H_i) s_{N-i,b+i}.
ChowElement arithmetic_correction(const ChowElement& x);

/// Sigma(N,k) = sum_{b=0}^{n} <L^{n-b} alpha_k, U L^{n+b} alpha_k>.
Rational sigma_direct(SigmaInstance inst);

/// The unshifted sum sum_{i=0}^{2n} <L^{2n-i} alpha_k, U L^i alpha_k>. Every
/// term with i < n vanishes because U kills classes without an s_{N,*}
/// component, so this equals sigma_direct.
Rational sigma_full_sum(SigmaInstance inst);

/// C_b = C(N+1-b, 2k+1) C(N-2k+b, N-2k), the coefficient of s_{N,b} in
/// L^{n+b} alpha_k. Requires 0 <= b <= n.
Integer coeff_C(SigmaInstance inst, int b);

/// A_{N,k} = C(N+1, N-2k) C(2N-2k+2, N+2).
Integer coeff_A(SigmaInstance inst);

/// A in (n,T) coordinates: C(T-1, n) C(T+n, n).
Integer coeff_A(int n, int T);

/// B^i in (n,T) coordinates as a single alternating sum over j.
/// Requires 0 <= n <= T-2 and 1 <= i <= T-1.
Integer coeff_B(int n, int T, int i);

/// B^i_{N,k} from the original double sum over (j, b). Same value as
/// coeff_B(n, T, i); kept as an independent route.
Integer coeff_B_double_sum(SigmaInstance inst, int i);

/// A sum_{i=1}^{T-1} H_i + sum_{i=1}^{T-1} B^i H_i.
Rational sigma_closed(SigmaInstance inst);

enum class SigmaMethod { direct, closed, both };

std::string to_string(SigmaMethod m);
SigmaMethod parse_sigma_method(const std::string& s);

struct SigmaVerdict {
    SigmaInstance inst;
    Rational sigma;
    bool positive = false;
    SigmaMethod method = SigmaMethod::closed;
    /// direct == closed for method both; trivially true otherwise
    bool agree = true;

    bool passed() const { return positive && agree; }
};

SigmaVerdict evaluate_sigma(SigmaInstance inst, SigmaMethod method);

/// {"N":..,"k":..,"n":..,"T":..,"sigma":"p/q","positive":..,"method":..,"agree":..}
nlohmann::ordered_json to_json(const SigmaVerdict& v);

// ---------------------------------------------------------------------------
// Arithmetic projective space P^n, split as the span of the arithmetic
// powers hat-omega^i and the form classes omega^i (degree i + 1).

struct PNElement {
    int n = 1;
    std::vector<Rational> hat;   // coefficients of hat-omega^0..hat-omega^n
    std::vector<Rational> form;  // coefficients of omega^0..omega^n

    static PNElement zero(int n);
    static PNElement hat_basis(int n, int i);
    static PNElement form_basis(int n, int i);

    friend bool operator==(const PNElement&, const PNElement&) = default;
};

/// tau_n = H_1 + ... + H_n.
Rational pn_tau(int n);

/// Arithmetic Lefschetz operator: hat-omega^i -> hat-omega^{i+1} (i < n),
/// hat-omega^n -> tau omega^n, omega^i -> omega^{i+1} (i < n), omega^n -> 0.
PNElement pn_lhat(const PNElement& x, const Rational& tau);

/// Lambda-hat(hat-omega^i) = i (n+2-i) hat-omega^{i-1},
/// Lambda-hat(omega^i)     = ((n+1)/tau) hat-omega^i + i (n-i) omega^{i-1}.
/// Throws std::invalid_argument when tau = 0.
PNElement pn_lambdahat(const PNElement& x, const Rational& tau);

/// [Lambda-hat, L-hat] x = (n + 1 - 2p) x on every basis element of degree p.
bool pn_commutator_check(int n);

/// sum_{i=0}^n integral omega^{n-i} U(omega^i) with U(omega^i) = delta_{in} tau omega^n.
Rational pn_sigma(int n);

}  // namespace arithgrass
