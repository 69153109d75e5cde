import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlgt.polyring import (
    Polynomial,
    constant,
    generators,
    monomial,
    permutation_sign,
    variable,
)


def ring(n):
    xs, q, t = generators(n)
    return xs, q, t


def polynomials(n_vars, max_exp=3, max_terms=5):
    mono = st.tuples(*([st.integers(0, max_exp)] * (n_vars + 2)))
    return st.dictionaries(mono, st.integers(-9, 9), max_size=max_terms).map(
        lambda d: Polynomial(n_vars, d)
    )


# ----------------------------------------------------------------------
# addition and multiplication

def test_add_inverse():
    xs, _, _ = ring(1)
    assert xs[0] + (-xs[0]) == Polynomial.zero(1)


def test_add_collects_cross_terms():
    xs, q, _ = ring(2)
    lhs = (xs[0] - q * xs[1]) + (xs[1] - q * xs[0])
    assert lhs == (1 - q) * (xs[0] + xs[1])


@given(polynomials(2))
def test_add_zero_is_identity(p):
    assert p + Polynomial.zero(2) == p


def test_mul_expands_binomials():
    xs, _, t = ring(2)
    lhs = (xs[0] - t * xs[1]) * (xs[0] - xs[1])
    assert lhs == xs[0] ** 2 - (1 + t) * xs[0] * xs[1] + t * xs[1] ** 2


@given(polynomials(2))
def test_mul_one_and_zero(p):
    assert p * Polynomial.one(2) == p
    assert p * Polynomial.zero(2) == Polynomial.zero(2)


def test_var_count_mismatch_rejected():
    with pytest.raises(ValueError, match="variable-count mismatch"):
        variable(0, 2) + variable(0, 3)
    with pytest.raises(ValueError, match="variable-count mismatch"):
        variable(0, 2) * variable(0, 3)


@settings(max_examples=40)
@given(polynomials(3), polynomials(3), polynomials(3))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_canonical_form_is_construction_independent():
    xs, q, t = ring(2)
    left = ((xs[0] + xs[1]) * (xs[0] - q * t * xs[1])) + 3
    right = 3 + (xs[0] ** 2 - q * t * xs[0] * xs[1] + xs[0] * xs[1] - q * t * xs[1] ** 2)
    assert left == right
    assert left.terms() == right.terms()


def test_pow():
    xs, q, _ = ring(1)
    assert (xs[0] - q) ** 0 == Polynomial.one(1)
    assert (xs[0] - q) ** 3 == (xs[0] - q) * (xs[0] - q) * (xs[0] - q)
    with pytest.raises(ValueError):
        xs[0] ** -1


def test_invalid_construction():
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0): 1})  # wrong width
    with pytest.raises(ValueError):
        Polynomial(1, {(-1, 0, 0): 1})
    with pytest.raises(TypeError):
        Polynomial(1, {(1, 0, 0): 1.5})


# ----------------------------------------------------------------------
# permutations

def test_permuted_transposition():
    xs, _, _ = ring(2)
    assert (xs[0] ** 2 * xs[1]).permuted((1, 0)) == xs[1] ** 2 * xs[0]


def test_permuted_identity():
    xs, q, t = ring(3)
    p = xs[0] * xs[2] - q * t * xs[1]
    assert p.permuted((0, 1, 2)) == p


def test_permuted_cycle():
    xs, q, _ = ring(3)
    # the cycle sending x1 -> x2 -> x3 -> x1
    assert (xs[0] - q * xs[2]).permuted((1, 2, 0)) == xs[1] - q * xs[0]


def test_permuted_rejects_non_bijection():
    with pytest.raises(ValueError, match="bijection"):
        variable(0, 2).permuted((0, 0))


@settings(max_examples=40)
@given(polynomials(3), polynomials(3), st.permutations(list(range(3))))
def test_permuted_is_ring_homomorphism(a, b, sigma):
    assert (a * b).permuted(sigma) == a.permuted(sigma) * b.permuted(sigma)
    assert (a + b).permuted(sigma) == a.permuted(sigma) + b.permuted(sigma)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


# ----------------------------------------------------------------------
# variable shifts

def test_shift_at_front():
    xs, _, _ = ring(2)
    shifted = (xs[0] * xs[1] ** 2).shift_vars(0, 3)
    xs3, _, _ = ring(3)
    assert shifted == xs3[1] * xs3[2] ** 2


def test_shift_beyond_support():
    xs, q, _ = ring(2)
    p = xs[0] * xs[1] - q
    xs3, q3, _ = ring(3)
    assert p.shift_vars(2, 3) == xs3[0] * xs3[1] - q3


def test_shift_bounds():
    p = variable(0, 2)
    with pytest.raises(ValueError):
        p.shift_vars(3, 4)
    with pytest.raises(ValueError):
        p.shift_vars(0, 2)


@settings(max_examples=40)
@given(polynomials(2))
def test_composed_shifts_match_double_shift(p):
    # shifting at 0 then at 1 sends f(x1, x2) to f(x3, x4)
    composed = p.shift_vars(0, 3).shift_vars(1, 4)
    direct = {}
    for mono, c in p.terms():
        direct[(0, 0, mono[0], mono[1], mono[2], mono[3])] = c
    assert composed == Polynomial(4, direct)


def test_with_vars_embeds():
    _, q, t = ring(0)
    embedded = ((1 - q) * t).with_vars(2)
    xs2, q2, t2 = ring(2)
    assert embedded == (1 - q2) * t2
    with pytest.raises(ValueError):
        variable(0, 2).with_vars(1)


# ----------------------------------------------------------------------
# exact division by a variable difference

def test_divide_difference_of_squares():
    xs, _, _ = ring(2)
    assert (xs[0] ** 2 - xs[1] ** 2).divide_by_diff(0, 1) == xs[0] + xs[1]


def test_divide_common_factor():
    xs, _, _ = ring(2)
    p = xs[0] ** 2 * xs[1] - xs[0] * xs[1] ** 2
    assert p.divide_by_diff(0, 1) == xs[0] * xs[1]


def test_divide_nonexact_is_fatal():
    xs, _, _ = ring(2)
    with pytest.raises(ArithmeticError, match="antisymmetry"):
        (xs[0] + 1).divide_by_diff(0, 1)


def test_divide_invalid_pair():
    with pytest.raises(ValueError):
        variable(0, 2).divide_by_diff(0, 0)


@settings(max_examples=40)
@given(polynomials(3))
def test_multiply_then_divide_round_trip(p):
    xs, _, _ = ring(3)
    assert (p * (xs[0] - xs[2])).divide_by_diff(0, 2) == p


# ----------------------------------------------------------------------
# parameter substitution

def test_substitute_examples():
    _, q, t = ring(0)
    one = constant(1, 0)
    assert ((one - q) * (one + t)).substitute("t", 0) == one - q
    assert ((one - q) * (one - t)).substitute("t", -1) == 2 * (one - q)
    assert (-q - q * t).substitute("q", -1) == one + t


def test_substitute_rejects_unknown_parameter():
    with pytest.raises(ValueError):
        constant(1, 0).substitute("x", 0)


@settings(max_examples=40)
@given(polynomials(2), polynomials(2), st.sampled_from(["q", "t"]), st.integers(-2, 2))
def test_substitute_commutes_with_ring_ops(a, b, param, value):
    assert (a + b).substitute(param, value) == a.substitute(param, value) + b.substitute(param, value)
    assert (a * b).substitute(param, value) == a.substitute(param, value) * b.substitute(param, value)


# ----------------------------------------------------------------------
# coefficient extraction

def test_coefficient_of():
    xs, q, _ = ring(2)
    p = xs[0] - q * xs[1]
    assert p.coefficient_of((1, 0)) == Polynomial.one(2)
    assert p.coefficient_of((0, 1)) == -q
    assert p.coefficient_of((2, 0)) == Polynomial.zero(2)
    with pytest.raises(ValueError):
        p.coefficient_of((1, 0, 0))


# ----------------------------------------------------------------------
# rendering and JSON

def test_str_rendering():
    xs, q, t = ring(2)
    assert str(xs[0] + xs[1]) == "x1 + x2"
    assert str(xs[0] - q * xs[1]) == "x1 - q*x2"
    assert str((1 + t) * xs[0] * xs[1]) == "x1*x2 + t*x1*x2"
    assert str(Polynomial.zero(2)) == "0"
    assert str(constant(-3, 0)) == "-3"
    assert str(xs[0] ** 2 * t ** 2) == "t^2*x1^2"


def test_terms_canonical_order_is_graded_lex_descending():
    xs, q, t = ring(2)
    p = xs[0] + t * xs[0] * xs[1] + q ** 3
    monos = [m for m, _ in p.terms()]
    keyed = [(sum(m), m) for m in monos]
    assert keyed == sorted(keyed, reverse=True)


@settings(max_examples=40)
@given(polynomials(3))
def test_json_round_trip(p):
    assert Polynomial.from_json(p.to_json()) == p


def test_json_preserves_big_coefficients():
    p = monomial(10 ** 40, (1, 2), 3, 4) - monomial(10 ** 38, (0, 0), 0, 0)
    back = Polynomial.from_json(p.to_json())
    assert back == p
    assert '"c": "' in p.to_json()


def test_json_output_is_stable():
    xs, q, _ = ring(2)
    p = xs[0] - q * xs[1]
    text = p.to_json()
    assert Polynomial.from_json(text).to_json() == text
