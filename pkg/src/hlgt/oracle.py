"""Brute-force reference implementations of the symmetric polynomials.

Everything here works straight from the defining formulas: enumerate all
n! permutations, antisymmetrize, and divide exactly by the Vandermonde
product.  The module exists to be obviously correct, not fast; the
formula evaluators in :mod:`hlgt.formulas` are checked against it.

``hall_littlewood`` computes the unnormalized polynomial

    sum over sigma in S_n of sigma(x^kappa * prod_{i<j}(x_i - t x_j) / prod_{i<j}(x_i - x_j))

via the common-denominator route: build the antisymmetrized numerator,
then strip the Vandermonde factors one by one with exact synthetic
division.  A nonzero remainder at any step is a fatal internal error.
No stabilizing prefactor is applied, so hall_littlewood((0, 0)) is 1 + t,
and specializing t to 0 / 1 / -1 yields the Schur polynomial, the
monomial orbit sum, and the Schur q-polynomial respectively.

The n! enumeration is capped (default 6 variables); set the environment
variable GT_ORACLE_NMAX to raise or lower the cap.
"""

from __future__ import annotations

import os
from itertools import permutations
from typing import Sequence

from .polyring import Monomial, Polynomial, permutation_sign
from .patterns import add_staircase, check_partition

DEFAULT_MAX_VARS = 6
_ENV_CAP = "GT_ORACLE_NMAX"


def max_oracle_vars() -> int:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return DEFAULT_MAX_VARS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_CAP} must be an integer, got {raw!r}") from None


def _check_cap(n: int) -> None:
    cap = max_oracle_vars()
    if n > cap:
        raise ValueError(
            f"{n} variables exceeds the n! safety cap ({cap}); "
            f"set {_ENV_CAP} to override"
        )


def weyl_denominator(n: int, deform: str | None = None) -> Polynomial:
    """prod_{i<j} (x_i - p*x_j) with p = 1 (deform=None), q, or t."""
    if deform not in (None, "q", "t"):
        raise ValueError(f"deform must be None, 'q' or 't', got {deform!r}")
    acc = Polynomial.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            lead = [0] * (n + 2)
            lead[i] = 1
            trail = [0] * (n + 2)
            trail[j] = 1
            if deform == "q":
                trail[n] = 1
            elif deform == "t":
                trail[n + 1] = 1
            acc = acc * Polynomial(n, {tuple(lead): 1, tuple(trail): -1})
    return acc


def _monomial_poly(exps: Sequence[int]) -> Polynomial:
    exps = tuple(exps)
    return Polynomial(len(exps), {exps + (0, 0): 1})


def _divide_vandermonde(p: Polynomial) -> Polynomial:
    # Factor order fixed (i, j) lexicographic; the quotient is order
    # independent but a fixed order keeps failures reproducible.
    n = p.n_vars
    for i in range(n):
        for j in range(i + 1, n):
            p = p.divide_by_diff(i, j)
    return p


def schur(lam: Sequence[int]) -> Polynomial:
    """Schur polynomial via the bialternant: antisymmetrize x^(lam + staircase), divide by the Vandermonde."""
    lam = check_partition(lam)
    n = len(lam)
    _check_cap(n)
    alpha = add_staircase(lam)
    num: dict[Monomial, int] = {}
    for sigma in permutations(range(n)):
        exps = [0] * n
        for i in range(n):
            exps[sigma[i]] = alpha[i]
        key = tuple(exps) + (0, 0)
        num[key] = num.get(key, 0) + permutation_sign(sigma)
    return _divide_vandermonde(Polynomial(n, num))


def hall_littlewood(kappa: Sequence[int]) -> Polynomial:
    """Unnormalized Hall-Littlewood polynomial of any nonnegative exponent tuple.

    Monotonicity is not required: tuples with ascents are meaningful
    inputs (the row recursion produces them) and simply antisymmetrize to
    whatever the defining sum gives.
    """
    kappa = tuple(kappa)
    if any(not isinstance(p, int) or p < 0 for p in kappa):
        raise ValueError(f"parts must be nonnegative integers: {kappa!r}")
    n = len(kappa)
    _check_cap(n)
    base = _monomial_poly(kappa) * weyl_denominator(n, "t")
    num = Polynomial.zero(n)
    for sigma in permutations(range(n)):
        image = base.permuted(sigma)
        num = num + (image if permutation_sign(sigma) == 1 else -image)
    return _divide_vandermonde(num)


def monomial_symmetric(lam: Sequence[int]) -> Polynomial:
    """Orbit sum with multiplicity: sum of sigma(x^lam) over all n! permutations."""
    lam = check_partition(lam)
    n = len(lam)
    _check_cap(n)
    acc: dict[Monomial, int] = {}
    for sigma in permutations(range(n)):
        exps = [0] * n
        for i in range(n):
            exps[sigma[i]] = lam[i]
        key = tuple(exps) + (0, 0)
        acc[key] = acc.get(key, 0) + 1
    return Polynomial(n, acc)
