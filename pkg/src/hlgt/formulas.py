"""Gelfand-Tsetlin pattern expansions of Hall-Littlewood polynomials.

The central object is the tridiagonal transition determinant attached to a
strictly decreasing row alpha and a candidate next row mu: diagonal
entries are the per-entry ``diagonal_weight`` values of mu under alpha,
the superdiagonal is all ones, and the subdiagonal holds the
``subdiagonal_weight`` values.  It is evaluated by the two-term top-row
expansion

    M(alpha; mu) = w(mu_1) * M(alpha', mu') - d(alpha_2) * M(alpha'', mu''),

where a prime drops the first part, rather than by generic determinant
code; the recursion bottoms out at 1 for a single-part alpha, and the
determinant is 0 whenever mu fails to interleave with alpha.

Raising operators move one unit from a part to the next ([i i+1] style);
``raising_closure(alpha)`` collects every tuple reachable from alpha by
repeatedly raising a consecutive pair whose gap is exactly 2, together
with the number of elementary raises needed.  That length is recovered
from the weighted displacement sum(j * (image_j - alpha_j)): each
elementary raise adds exactly one to it, so word order never matters.

With those two ingredients the module evaluates four sums over GT
patterns or single interleaving steps, all of which multiply out to the
q-deformed Weyl denominator times a Hall-Littlewood or Schur polynomial:

* ``hl_pattern_expansion``: sum over strict patterns of the per-row
  raising-closure-summed determinants times x^weight.
* ``hl_row_recursion``: one interleaving step, delegating the smaller
  Hall-Littlewood factor to the brute-force oracle.
* ``tokuyama_sum`` / ``tokuyama_row_recursion``: the classical Schur
  deformation (Tokuyama's formula) in both shapes.
* ``stanley_sum`` / ``stanley_filtered_sum``: Stanley's strict-pattern
  formula for the Schur q-polynomials and its filtered variant at the
  specialization q = 0, t = -1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import oracle
from .polyring import Monomial, Polynomial, constant, parameter
from .patterns import (
    ALMOST_LEFT,
    LEFT,
    RIGHT,
    GtPattern,
    add_staircase,
    check_partition,
    clear_caches as _clear_pattern_caches,
    diagonal_weight,
    entry_labels,
    enumerate_patterns,
    interleaves,
    is_strictly_decreasing,
    next_rows,
    staircase,
    subdiagonal_weight,
)

_Q = parameter("q", 0)
_T = parameter("t", 0)
_ONE = constant(1, 0)


# ----------------------------------------------------------------------
# raising operators

@dataclass(frozen=True)
class RaisingOperator:
    """A reachable image tuple together with its elementary-raise count."""

    result: tuple[int, ...]
    length: int


def elementary_raise(parts: Sequence[int], i: int) -> tuple[int, ...]:
    """Move one unit from part i to part i+1 (0-based)."""
    parts = tuple(parts)
    if not 0 <= i < len(parts) - 1:
        raise ValueError(f"raise index {i} out of range for {parts!r}")
    return parts[:i] + (parts[i] - 1, parts[i + 1] + 1) + parts[i + 2:]


def _displacement(source: tuple[int, ...], image: tuple[int, ...]) -> int:
    # Each elementary raise adds exactly 1; 0- and 1-based weightings agree
    # because raises preserve the total.
    return sum(i * (b - a) for i, (a, b) in enumerate(zip(source, image)))


@lru_cache(maxsize=None)
def raising_closure(alpha: tuple[int, ...]) -> tuple[RaisingOperator, ...]:
    """Closure of alpha under raising consecutive pairs with gap exactly 2.

    Breadth-first from the identity; images are deduplicated, and each
    carries the number of elementary raises reaching it.  The identity
    (length 0) always comes first.
    """
    alpha = check_partition(alpha, strict=True)
    depth = {alpha: 0}
    order = [alpha]
    queue = deque([alpha])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            if cur[i] == cur[i + 1] + 2:
                image = elementary_raise(cur, i)
                if image not in depth:
                    depth[image] = depth[cur] + 1
                    order.append(image)
                    queue.append(image)
    ops = []
    for image in order:
        length = _displacement(alpha, image)
        if length != depth[image]:
            raise ArithmeticError(
                f"raise count mismatch for {image!r}: bfs {depth[image]}, "
                f"displacement {length}"
            )
        ops.append(RaisingOperator(image, length))
    return tuple(ops)


# ----------------------------------------------------------------------
# transition determinant

@lru_cache(maxsize=None)
def _det_recurrence(alpha: tuple[int, ...], mu: tuple[int, ...]) -> Polynomial:
    n = len(alpha)
    if n == 1:
        return _ONE
    if n == 2:
        return diagonal_weight(alpha, mu, 0)
    return diagonal_weight(alpha, mu, 0) * _det_recurrence(alpha[1:], mu[1:]) \
        - subdiagonal_weight(alpha, mu, 1) * _det_recurrence(alpha[2:], mu[2:])


def transition_det(alpha: Sequence[int], mu: Sequence[int]) -> Polynomial:
    """Tridiagonal determinant weighting candidate next row mu under alpha.

    Returns a polynomial in q and t (zero x-variables): 1 for a
    single-part alpha, 0 when mu does not interleave with alpha, and the
    top-row two-term recurrence otherwise.  Entries of invalid rows are
    never labeled.
    """
    alpha = check_partition(alpha, strict=True)
    mu = tuple(mu)
    if len(alpha) == 0:
        raise ValueError("alpha must have at least one part")
    if not interleaves(alpha, mu):
        return Polynomial.zero(0)
    return _det_recurrence(alpha, mu)


def row_weight_sum(upper: tuple[int, ...], lower: tuple[int, ...]) -> Polynomial:
    """Sum of t^length * transition_det(upper, image) over the closure of lower."""
    acc = Polynomial.zero(0)
    for op in raising_closure(lower):
        det = transition_det(upper, op.result)
        if det:
            acc = acc + _T ** op.length * det
    return acc


def pattern_row_weights(pattern: GtPattern) -> list[Polynomial]:
    """The per-row-pair weight sums of a strict pattern (q,t polynomials)."""
    if not pattern.is_strict:
        raise ValueError("row weights are defined for strict patterns only")
    rows = pattern.rows
    return [row_weight_sum(rows[i], rows[i + 1]) for i in range(len(rows) - 1)]


# ----------------------------------------------------------------------
# pattern sums

def _accumulate(acc: dict[Monomial, int], coeff: Polynomial, x_exps: tuple[int, ...]) -> None:
    # Merge coeff (a q,t polynomial) times the x-monomial into acc.
    for mono, c in coeff._terms.items():
        key = x_exps + mono
        total = acc.get(key, 0) + c
        if total:
            acc[key] = total
        elif key in acc:
            del acc[key]


def hl_pattern_expansion(lam: Sequence[int]) -> Polynomial:
    """Strict-pattern expansion of v_n(x;q) * HL_lam(x;t).

    Sums, over all strict GT patterns with top row lam + staircase, the
    product over consecutive row pairs of the raising-closure-summed
    transition determinants, times x^weight.
    """
    lam = check_partition(lam)
    n = len(lam)
    acc: dict[Monomial, int] = {}
    for pattern in enumerate_patterns(add_staircase(lam), strict=True):
        coeff = _ONE
        for i in range(n - 1):
            coeff = coeff * row_weight_sum(pattern.rows[i], pattern.rows[i + 1])
            if not coeff:
                break
        if coeff:
            _accumulate(acc, coeff, pattern.weight())
    return Polynomial(n, acc)


def hl_row_recursion(lam: Sequence[int]) -> Polynomial:
    """One-step recursion for v_n(x;q) * HL_lam(x;t).

    Sums over every next row mu under alpha = lam + staircase (strict or
    not) the transition determinant times x_1^(|alpha| - |mu|) times the
    variable-shifted product v_{n-1}(x;q) * HL_{mu - staircase}(x;t),
    with the Hall-Littlewood factor taken from the brute-force oracle.
    Non-strict mu feed exponent tuples with ascents straight into it.
    """
    lam = check_partition(lam)
    n = len(lam)
    alpha = add_staircase(lam)
    if n == 1:
        return Polynomial(1, {(alpha[0], 0, 0): 1})
    rho = staircase(n - 1)
    x1 = Polynomial(n, {(1,) + (0,) * (n + 1): 1})
    total = Polynomial.zero(n)
    for mu in next_rows(alpha):
        det = transition_det(alpha, mu)
        if not det:
            continue
        shifted_parts = tuple(m - r for m, r in zip(mu, rho))
        inner = oracle.weyl_denominator(n - 1, "q") * oracle.hall_littlewood(shifted_parts)
        term = det.with_vars(n) * x1 ** (sum(alpha) - sum(mu)) * inner.shift_vars(0, n)
        total = total + term
    return total


def tokuyama_sum(lam: Sequence[int]) -> Polynomial:
    """Tokuyama's strict-pattern expansion of v_n(x;q) * s_lam(x).

    Each pattern contributes (1-q)^special * (-q)^left * x^weight.
    """
    lam = check_partition(lam)
    n = len(lam)
    acc: dict[Monomial, int] = {}
    for pattern in enumerate_patterns(add_staircase(lam), strict=True):
        left, _, special = pattern.leaning_counts()
        coeff = (_ONE - _Q) ** special * (-_Q) ** left
        _accumulate(acc, coeff, pattern.weight())
    return Polynomial(n, acc)


def tokuyama_row_recursion(lam: Sequence[int]) -> Polynomial:
    """One-step recursion for v_n(x;q) * s_lam(x), over strict next rows only.

    A part of mu equal to the part of alpha above-left counts as
    left-leaning, one equal to neither neighbour of alpha as special;
    non-strict mu drop out because their Schur factor vanishes.
    """
    lam = check_partition(lam)
    n = len(lam)
    alpha = add_staircase(lam)
    if n == 1:
        return Polynomial(1, {(alpha[0], 0, 0): 1})
    rho = staircase(n - 1)
    x1 = Polynomial(n, {(1,) + (0,) * (n + 1): 1})
    total = Polynomial.zero(n)
    for mu in next_rows(alpha):
        if not is_strictly_decreasing(mu):
            continue
        left = sum(m == a for m, a in zip(mu, alpha))
        special = sum(
            mu[i] != alpha[i] and mu[i] != alpha[i + 1] for i in range(len(mu))
        )
        coeff = (-_Q) ** left * (_ONE - _Q) ** special
        shifted_parts = tuple(m - r for m, r in zip(mu, rho))
        inner = oracle.weyl_denominator(n - 1, "q") * oracle.schur(shifted_parts)
        term = coeff.with_vars(n) * x1 ** (sum(alpha) - sum(mu)) * inner.shift_vars(0, n)
        total = total + term
    return total


def stanley_sum(lam: Sequence[int]) -> Polynomial:
    """Stanley's expansion of HL_lam(x;-1) for strictly decreasing lam.

    Sums 2^special * x^weight over strict patterns with top row lam
    itself (no staircase shift).
    """
    lam = check_partition(lam, strict=True)
    n = len(lam)
    acc: dict[Monomial, int] = {}
    for pattern in enumerate_patterns(lam, strict=True):
        _, _, special = pattern.leaning_counts()
        key = pattern.weight() + (0, 0)
        acc[key] = acc.get(key, 0) + 2 ** special
    return Polynomial(n, acc)


def _admits_filtered(pattern: GtPattern) -> bool:
    # Reject any left-equal entry, and any adjacent pair where the first
    # entry sits on its upper-right parent and the second is one below its
    # upper-left parent.
    for upper, lower in zip(pattern.rows, pattern.rows[1:]):
        labels = [entry_labels(upper, lower, k) for k in range(len(lower))]
        if any(lbl.left == LEFT for lbl in labels):
            return False
        for k in range(len(labels) - 1):
            if labels[k].right == RIGHT and labels[k + 1].left == ALMOST_LEFT:
                return False
    return True


def stanley_filtered_sum(lam: Sequence[int]) -> Polynomial:
    """Filtered-pattern expansion of x^staircase * HL_lam(x;-1).

    Sums the product of all diagonal entry weights, evaluated at q = 0 and
    t = -1, times x^weight, over strict patterns with top row
    lam + staircase that survive the filter of :func:`_admits_filtered`.
    """
    lam = check_partition(lam)
    n = len(lam)
    acc: dict[Monomial, int] = {}
    for pattern in enumerate_patterns(add_staircase(lam), strict=True):
        if not _admits_filtered(pattern):
            continue
        coeff = _ONE
        for upper, lower in zip(pattern.rows, pattern.rows[1:]):
            for k in range(len(lower)):
                coeff = coeff * diagonal_weight(upper, lower, k)
        coeff = coeff.substitute("q", 0).substitute("t", -1)
        _accumulate(acc, coeff, pattern.weight())
    return Polynomial(n, acc)


def clear_caches() -> None:
    """Drop all memoized determinants and closures (benchmark hygiene)."""
    raising_closure.cache_clear()
    _det_recurrence.cache_clear()
    _clear_pattern_caches()
