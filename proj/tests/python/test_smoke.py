from fractions import Fraction
from math import comb

import pytest

import arithgrass as ag


def harmonic(k):
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


def test_scalars():
    assert ag.binomial(5, 2) == 10
    assert ag.binomial(7, 9) == 0
    assert ag.harmonic(3) == Fraction(11, 6)
    with pytest.raises(ValueError):
        ag.binomial(-1, 0)


def test_chow_ring():
    assert ag.skew_f((2, 1), (0, 0)) == 2
    assert ag.betti(3, 3) == 2
    assert ag.alpha(4, 1) == {(2, 0): 10, (1, 1): -18}
    assert ag.primitive_dims(4) == [1, 0, 1, 0, 1]
    assert ag.primcond(5)


def test_sigma_methods_agree():
    for N in range(1, 8):
        for k in range(N // 2 + 1):
            assert ag.sigma(N, k, "direct") == ag.sigma(N, k, "closed") > 0
    assert ag.sigma(2, 1) == 3
    with pytest.raises(ValueError):
        ag.sigma(3, 2)


def test_projective_space():
    assert ag.pn_tau(5) == Fraction(87, 10) == sum(harmonic(i) for i in range(1, 6))
    assert ag.pn_commutator_check(7)


def racah_naive(n, s, T):
    def rising(a, r):
        p = 1
        for i in range(r):
            p *= a + i
        return p

    return sum(
        Fraction(rising(-n, r) * rising(n + 1, r) * rising(-s, r) * rising(s + 1, r),
                 rising(1, r) * rising(1 + T, r) * rising(1 - T, r) * rising(1, r))
        for r in range(min(n, s) + 1))


def test_racah_and_whipple():
    assert ag.racah_eval(1, 9, 10) == Fraction(-9, 11)
    for T in range(3, 10):
        for n in range(T - 1):
            A = ag.coeff_A(n, T)
            assert A == comb(T - 1, n) * comb(T + n, n)
            for i in range(1, T):
                assert (-1) ** i * Fraction(ag.coeff_B(n, T, i), A) == racah_naive(n, i, T) == ag.racah_eval(n, i, T)


def test_legendre_and_recurrence():
    assert ag.legendre_eval(2, Fraction(9, 10)) == Fraction(143, 200)
    assert ag.p_eval(1, 7, 0) == Fraction(1, 98)


def test_needed_and_scan():
    T = 12
    seq = [harmonic(s) for s in range(1, T)]
    for n in range(T):
        lhs, rhs, holds = ag.needed_inequality(seq, n, T)
        assert holds and rhs == sum(seq)
    report = ag.bound_scan(3, 15, workers=2)
    assert report["violations"] == []
    assert report["T_range"] == [3, 15]
    assert all(p["n"] == 0 or p["s"] == 0 for p in report["equality_cases"])
    assert ag.goodrange(3, 20) and not ag.goodrange(0, 3)
