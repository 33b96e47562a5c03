"""Exact Schubert calculus on G(N,2) and Racah polynomial bounds.

Rational results are returned as fractions.Fraction; the compiled core
passes them as "p/q" strings.
"""

import json
from fractions import Fraction

from . import _core

InvalidArgument = _core.InvalidArgument


def _q(text):
    return Fraction(text)


def binomial(n, k):
    return int(_core.binomial(n, k))


def harmonic(k):
    return _q(_core.harmonic(k))


def skew_f(lam, mu):
    return int(_core.skew_f(lam[0], lam[1], mu[0], mu[1]))


betti = _core.betti
primitive_dims = _core.primitive_dims
primcond = _core.primcond
pn_commutator_check = _core.pn_commutator_check
goodrange = _core.goodrange
below_log = _core.below_log


def alpha(N, k):
    """{(a, b): coefficient} of the primitive class alpha_k."""
    data = json.loads(_core.alpha(N, k))
    return {(t["a"], t["b"]): _q(t["coeff"]) for t in data["terms"]}


def sigma(N, k, method="closed"):
    if method == "closed":
        return _q(_core.sigma_closed(N, k))
    if method == "direct":
        return _q(_core.sigma_direct(N, k))
    raise ValueError(f"unknown method {method!r}")


def coeff_A(n, T):
    return int(_core.coeff_A(n, T))


def coeff_B(n, T, i):
    return int(_core.coeff_B(n, T, i))


def pn_tau(n):
    return _q(_core.pn_tau(n))


def racah_eval(n, s, T):
    return _q(_core.racah_eval(n, s, T))


def legendre_eval(n, t):
    return _q(_core.legendre_eval(n, str(Fraction(t))))


def p_eval(n, T, t):
    return _q(_core.p_eval(n, T, str(Fraction(t))))


def needed_inequality(seq, n, T):
    """(lhs, rhs, holds) for seq read as H_1..H_m."""
    lhs, rhs, holds = _core.needed_inequality([str(Fraction(x)) for x in seq], n, T)
    return _q(lhs), _q(rhs), holds


def bound_scan(T_min, T_max, workers=1):
    return json.loads(_core.bound_scan(T_min, T_max, workers))


__all__ = [
    "InvalidArgument", "binomial", "harmonic", "skew_f", "betti", "alpha", "primitive_dims", "primcond",
    "sigma", "coeff_A", "coeff_B", "pn_tau", "pn_commutator_check", "racah_eval", "legendre_eval",
    "p_eval", "goodrange", "below_log", "needed_inequality", "bound_scan",
]
