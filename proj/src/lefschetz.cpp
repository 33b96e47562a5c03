#include "arithgrass/lefschetz.hpp"

#include <stdexcept>

namespace arithgrass {

SigmaInstance SigmaInstance::make(int N, int k) {
    if (N < 1 || k < 0 || 2 * k > N) {
        throw std::invalid_argument("invalid instance: need N >= 1 and 0 <= 2k <= N, got N=" +
                                    std::to_string(N) + " k=" + std::to_string(k));
    }
    return SigmaInstance{N, k};
}

ChowElement arithmetic_correction(const ChowElement& x) {
    const int N = x.ambient();
    Rational harmonic_total = 0;
    for (int i = 0; i <= N + 1; ++i) harmonic_total += harmonic(static_cast<std::size_t>(i));

    ChowElement out(N);
    for (const auto& [lambda, c] : x.terms()) {
        if (lambda.a < N) continue;
        const int b = lambda.b;
        out.add({N, b}, c * harmonic_total);
        for (int i = 0; i <= (N - b) / 2; ++i) {
            const Rational w = harmonic(static_cast<std::size_t>(N - b + 1 - i)) - harmonic(static_cast<std::size_t>(i));
            out.add({N - i, b + i}, -c * w);
        }
    }
    return out;
}

Rational sigma_direct(SigmaInstance inst) {
    const int n = inst.n();
    const ChowElement a = alpha(inst.N, inst.k);
    Rational total = 0;
    for (int b = 0; b <= n; ++b) {
        total += pairing(lefschetz_power(a, n - b), arithmetic_correction(lefschetz_power(a, n + b)));
    }
    return total;
}

Rational sigma_full_sum(SigmaInstance inst) {
    const int top = 2 * inst.n();
    const ChowElement a = alpha(inst.N, inst.k);
    std::vector<ChowElement> iterates{a};
    for (int i = 1; i <= top; ++i) iterates.push_back(pieri_step(iterates.back()));

    Rational total = 0;
    for (int i = 0; i <= top; ++i) total += pairing(iterates[top - i], arithmetic_correction(iterates[i]));
    return total;
}

Integer coeff_C(SigmaInstance inst, int b) {
    if (b < 0 || b > inst.n()) {
        throw std::invalid_argument("coeff_C: b=" + std::to_string(b) + " outside [0, " +
                                    std::to_string(inst.n()) + "]");
    }
    return binomial(inst.N + 1 - b, 2 * inst.k + 1) * binomial(inst.n() + b, inst.n());
}

Integer coeff_A(SigmaInstance inst) {
    const int N = inst.N;
    const int k = inst.k;
    return binomial(N + 1, N - 2 * k) * binomial(2 * N - 2 * k + 2, N + 2);
}

Integer coeff_A(int n, int T) {
    if (n < 0 || n > T - 2) throw std::invalid_argument("coeff_A: need 0 <= n <= T-2");
    return binomial(T - 1, n) * binomial(T + n, n);
}

Integer coeff_B(int n, int T, int i) {
    if (n < 0 || n > T - 2) throw std::invalid_argument("coeff_B: need 0 <= n <= T-2");
    if (i < 1 || i > T - 1) {
        throw std::invalid_argument("coeff_B: i=" + std::to_string(i) + " outside [1, T-1]");
    }
    Integer total = 0;
    for (int j = 0; j <= i; ++j) {
        Integer term = binomial(n + j, n) * binomial(T - 1 - j, n);
        if (term == 0) continue;
        if (n - i + j < 0) continue;
        term *= binomial(T - 1 - n + i - j, i - j) * binomial(T + n, n - i + j);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Integer coeff_B_double_sum(SigmaInstance inst, int i) {
    const int N = inst.N;
    const int k = inst.k;
    const int n = inst.n();
    if (i < 1 || i > N + 1) {
        throw std::invalid_argument("coeff_B_double_sum: i=" + std::to_string(i) + " outside [1, N+1]");
    }
    Integer total = 0;
    for (int b = 0; b <= n; ++b) {
        const Integer cb = coeff_C(inst, b);
        for (int j = 0; j <= N + 1; ++j) {
            if (i - j < 0) break;
            Integer term = binomial(N + 1 - j, N - 2 * k) * binomial(N - 2 * k + j, N - 2 * k) *
                           binomial(N - 2 * k - b, i - j) * cb;
            if (j % 2 == 0) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    return total;
}

Rational sigma_closed(SigmaInstance inst) {
    const int n = inst.n();
    const int T = inst.T();
    const Integer a = coeff_A(n, T);
    Rational total = 0;
    for (int i = 1; i <= T - 1; ++i) {
        total += (a + coeff_B(n, T, i)) * harmonic(static_cast<std::size_t>(i));
    }
    return total;
}

std::string to_string(SigmaMethod m) {
    switch (m) {
        case SigmaMethod::direct: return "direct";
        case SigmaMethod::closed: return "closed";
        case SigmaMethod::both: return "both";
    }
    return "closed";
}

SigmaMethod parse_sigma_method(const std::string& s) {
    if (s == "direct") return SigmaMethod::direct;
    if (s == "closed") return SigmaMethod::closed;
    if (s == "both") return SigmaMethod::both;
    throw std::invalid_argument("unknown sigma method '" + s + "'");
}

SigmaVerdict evaluate_sigma(SigmaInstance inst, SigmaMethod method) {
    SigmaVerdict v{inst, 0, false, method, true};
    switch (method) {
        case SigmaMethod::direct:
            v.sigma = sigma_direct(inst);
            break;
        case SigmaMethod::closed:
            v.sigma = sigma_closed(inst);
            break;
        case SigmaMethod::both: {
            v.sigma = sigma_closed(inst);
            v.agree = sigma_direct(inst) == v.sigma;
            break;
        }
    }
    v.positive = sgn(v.sigma) > 0;
    return v;
}

nlohmann::ordered_json to_json(const SigmaVerdict& v) {
    return {{"N", v.inst.N},           {"k", v.inst.k},
            {"n", v.inst.n()},         {"T", v.inst.T()},
            {"sigma", to_string(v.sigma)}, {"positive", v.positive},
            {"method", to_string(v.method)}, {"agree", v.agree}};
}

// ---------------------------------------------------------------------------

namespace {

void require_dimension(int n) {
    if (n < 1) throw std::invalid_argument("projective dimension must be positive");
}

void require_shape(const PNElement& x) {
    require_dimension(x.n);
    const auto len = static_cast<std::size_t>(x.n + 1);
    if (x.hat.size() != len || x.form.size() != len) {
        throw std::invalid_argument("PNElement coefficient lists must have length n+1");
    }
}

}  // namespace

PNElement PNElement::zero(int n) {
    require_dimension(n);
    const auto len = static_cast<std::size_t>(n + 1);
    return PNElement{n, std::vector<Rational>(len, Rational(0)), std::vector<Rational>(len, Rational(0))};
}

PNElement PNElement::hat_basis(int n, int i) {
    auto x = zero(n);
    x.hat.at(static_cast<std::size_t>(i)) = 1;
    return x;
}

PNElement PNElement::form_basis(int n, int i) {
    auto x = zero(n);
    x.form.at(static_cast<std::size_t>(i)) = 1;
    return x;
}

Rational pn_tau(int n) {
    Rational tau = 0;
    for (int k = 1; k <= n; ++k) tau += harmonic(static_cast<std::size_t>(k));
    return tau;
}

PNElement pn_lhat(const PNElement& x, const Rational& tau) {
    require_shape(x);
    const int n = x.n;
    auto out = PNElement::zero(n);
    for (int i = 0; i < n; ++i) {
        out.hat[i + 1] += x.hat[i];
        out.form[i + 1] += x.form[i];
    }
    out.form[n] += tau * x.hat[n];
    return out;
}

PNElement pn_lambdahat(const PNElement& x, const Rational& tau) {
    require_shape(x);
    if (sgn(tau) == 0) throw std::invalid_argument("pn_lambdahat: tau must be nonzero");
    const int n = x.n;
    const Rational lift = (n + 1) / tau;
    auto out = PNElement::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            out.hat[i - 1] += i * (n + 2 - i) * x.hat[i];
            out.form[i - 1] += i * (n - i) * x.form[i];
        }
        out.hat[i] += lift * x.form[i];
    }
    return out;
}

bool pn_commutator_check(int n) {
    require_dimension(n);
    const Rational tau = pn_tau(n);
    auto check = [&](const PNElement& x, int degree) {
        const auto lhs_left = pn_lambdahat(pn_lhat(x, tau), tau);
        const auto lhs_right = pn_lhat(pn_lambdahat(x, tau), tau);
        const Rational weight = n + 1 - 2 * degree;
        for (int i = 0; i <= n; ++i) {
            if (lhs_left.hat[i] - lhs_right.hat[i] != weight * x.hat[i]) return false;
            if (lhs_left.form[i] - lhs_right.form[i] != weight * x.form[i]) return false;
        }
        return true;
    };
    for (int i = 0; i <= n; ++i) {
        if (!check(PNElement::hat_basis(n, i), i)) return false;
        if (!check(PNElement::form_basis(n, i), i + 1)) return false;
    }
    return true;
}

Rational pn_sigma(int n) {
    require_dimension(n);
    const Rational tau = pn_tau(n);
    // classical ring of P^n: omega^i is the basis vector i, integral picks omega^n
    Rational total = 0;
    for (int i = 0; i <= n; ++i) {
        const Rational u = i == n ? tau : Rational(0);  // U(omega^i) = delta_{in} tau omega^n
        const int degree = (n - i) + n;
        if (degree == n) total += u;
    }
    return total;
}

}  // namespace arithgrass
