"""Shared test utilities: independent determinant oracle and tuple grids."""

from itertools import combinations

from hlgt import Polynomial, constant, diagonal_weight, subdiagonal_weight


def laplace_det(matrix):
    """Cofactor expansion along the first row; independent of the recurrence."""
    n = len(matrix)
    if n == 0:
        return constant(1, 0)
    if n == 1:
        return matrix[0][0]
    total = Polynomial.zero(0)
    for col, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * laplace_det(minor)
        total = total + (term if col % 2 == 0 else -term)
    return total


def tridiagonal_matrix(alpha, mu):
    """Explicit tridiagonal matrix whose determinant weights (alpha, mu)."""
    m = len(mu)
    rows = [[Polynomial.zero(0)] * m for _ in range(m)]
    for a in range(m):
        rows[a][a] = diagonal_weight(alpha, mu, a)
        if a + 1 < m:
            rows[a][a + 1] = constant(1, 0)
            rows[a + 1][a] = subdiagonal_weight(alpha, mu, a + 1)
    return rows


def strict_tuples(length, max_part):
    """All strictly decreasing tuples of the given length with parts <= max_part."""
    return [
        tuple(sorted(combo, reverse=True))
        for combo in combinations(range(max_part + 1), length)
    ]


def coeff_sum(poly):
    """Value of an x-only polynomial at x_1 = ... = x_n = 1."""
    return sum(c for _, c in poly.terms())
