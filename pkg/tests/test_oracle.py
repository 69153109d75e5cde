from itertools import permutations

import pytest

from hlgt import oracle
from hlgt.oracle import (
    hall_littlewood,
    max_oracle_vars,
    monomial_symmetric,
    schur,
    weyl_denominator,
)
from hlgt.polyring import Polynomial, generators, monomial, permutation_sign
from hlgt.patterns import enumerate_patterns, staircase, weakly_decreasing_tuples

from helpers import coeff_sum


def test_weyl_denominator_two_vars():
    xs, q, t = generators(2)
    assert weyl_denominator(2, "q") == xs[0] - q * xs[1]
    assert weyl_denominator(2, "t") == xs[0] - t * xs[1]
    assert weyl_denominator(2) == xs[0] - xs[1]


def test_weyl_denominator_empty_product():
    assert weyl_denominator(1) == Polynomial.one(1)
    assert weyl_denominator(1, "q") == Polynomial.one(1)


def test_weyl_denominator_at_t_zero_is_staircase_monomial():
    for n in (2, 3, 4):
        assert weyl_denominator(n, "t").substitute("t", 0) == monomial(1, staircase(n))


def test_weyl_denominator_rejects_unknown_deform():
    with pytest.raises(ValueError):
        weyl_denominator(2, "u")


def test_schur_examples():
    xs, _, _ = generators(3)
    assert schur((1, 0, 0)) == xs[0] + xs[1] + xs[2]
    assert schur((0, 0, 0)) == Polynomial.one(3)
    xs2, _, _ = generators(2)
    assert schur((1, 1)) == xs2[0] * xs2[1]


def test_schur_rejects_non_monotone():
    with pytest.raises(ValueError):
        schur((1, 2))


def test_hall_littlewood_examples():
    xs, _, t = generators(2)
    assert hall_littlewood((1, 0)) == xs[0] + xs[1]
    assert hall_littlewood((1, 1)) == (1 + t) * xs[0] * xs[1]


def test_hall_littlewood_of_zero_partition():
    p = hall_littlewood((0, 0, 0))
    assert p.substitute("t", 0) == Polynomial.one(3)


def test_hall_littlewood_accepts_ascending_tuples():
    # unit-step raises multiply by t when the raised part exceeds its
    # neighbour by exactly one
    _, _, t2 = generators(2)
    assert hall_littlewood((1, 2)) == t2 * hall_littlewood((2, 1))
    _, _, t3 = generators(3)
    assert hall_littlewood((1, 2, 0)) == t3 * hall_littlewood((2, 1, 0))
    assert hall_littlewood((2, 0, 1)) == t3 * hall_littlewood((2, 1, 0))


def test_hall_littlewood_rejects_negative_parts():
    with pytest.raises(ValueError):
        hall_littlewood((1, -1))


def test_monomial_symmetric_examples():
    xs, _, _ = generators(2)
    assert monomial_symmetric((1, 0)) == xs[0] + xs[1]
    assert monomial_symmetric((1, 1)) == 2 * xs[0] * xs[1]
    assert monomial_symmetric((1, 1)) == hall_littlewood((1, 1)).substitute("t", 1)
    assert len(monomial_symmetric((2, 1, 0))) == 6


def test_hall_littlewood_is_symmetric():
    for lam in [(2, 0), (2, 1, 0), (1, 1, 0), (2, 2, 1)]:
        p = hall_littlewood(lam)
        for sigma in permutations(range(len(lam))):
            assert p.permuted(sigma) == p


def test_specializations_on_a_grid():
    for n in (1, 2, 3):
        for lam in weakly_decreasing_tuples(n, 2):
            hl = hall_littlewood(lam)
            assert hl.substitute("t", 0) == schur(lam)
            assert hl.substitute("t", 1) == monomial_symmetric(lam)


def test_schur_at_ones_counts_patterns():
    for n in (1, 2, 3):
        for lam in weakly_decreasing_tuples(n, 3):
            assert coeff_sum(schur(lam)) == len(enumerate_patterns(lam))


def test_antisymmetrized_numerator_flips_sign_under_transpositions():
    # rebuilt here from the definition, independently of the oracle internals
    kappa = (2, 1, 0)
    n = len(kappa)
    base = monomial(1, kappa) * weyl_denominator(n, "t")
    num = Polynomial.zero(n)
    for sigma in permutations(range(n)):
        image = base.permuted(sigma)
        num = num + (image if permutation_sign(sigma) == 1 else -image)
    for i in range(n - 1):
        swap = list(range(n))
        swap[i], swap[i + 1] = swap[i + 1], swap[i]
        assert num.permuted(swap) == -num


def test_oracle_cap(monkeypatch):
    monkeypatch.setenv("GT_ORACLE_NMAX", "2")
    assert max_oracle_vars() == 2
    with pytest.raises(ValueError, match="safety cap"):
        hall_littlewood((1, 0, 0))
    with pytest.raises(ValueError, match="safety cap"):
        schur((1, 0, 0))
    with pytest.raises(ValueError, match="safety cap"):
        monomial_symmetric((1, 0, 0))
    monkeypatch.setenv("GT_ORACLE_NMAX", "3")
    assert hall_littlewood((1, 0, 0)).substitute("t", 0) == schur((1, 0, 0))


def test_oracle_cap_rejects_garbage(monkeypatch):
    monkeypatch.setenv("GT_ORACLE_NMAX", "lots")
    with pytest.raises(ValueError):
        max_oracle_vars()


def test_default_cap():
    assert oracle.DEFAULT_MAX_VARS == 6
