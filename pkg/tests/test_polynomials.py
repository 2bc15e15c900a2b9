from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaff.polynomials import Poly, exact_div_linear, matrix_rank, solve_exact


def P(nvars, terms):
    return Poly(nvars, {tuple(e): Fraction(c) for e, c in terms.items()})


class TestArithmetic:
    def test_zero_and_one(self):
        z = Poly.zero(2)
        o = Poly.one(2)
        assert z.is_zero() and not o.is_zero()
        assert o + z == o
        assert o * z == z

    def test_ring_identities(self):
        x = Poly.variable(3, 0)
        y = Poly.variable(3, 1)
        assert (x + y) * (x - y) == x * x - y * y
        assert (x + y) ** 2 == x * x + 2 * x * y + y * y

    def test_scalar_mixing(self):
        x = Poly.variable(1, 0)
        assert 3 * x == x * 3 == x * Fraction(3)
        assert (x + Fraction(1, 2)) * 2 == 2 * x + 1

    def test_power(self):
        x = Poly.variable(1, 0)
        assert x ** 0 == Poly.one(1)
        assert (1 + x) ** 4 == P(1, {(0,): 1, (1,): 4, (2,): 6, (3,): 4, (4,): 1})

    def test_laurent_exponents(self):
        zinv = Poly.monomial(1, (-1,), 1)
        z = Poly.variable(1, 0)
        assert z * zinv == Poly.one(1)


class TestQueries:
    def test_coefficient_of_collects(self):
        # (x^2 + x)y + 3x  -> coefficient of y^1 is x^2 + x
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        f = (x * x + x) * y + 3 * x
        assert f.coefficient_of(1, 1) == x * x + x
        assert f.coefficient_of(1, 0) == 3 * x

    def test_set_var_zero(self):
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        f = x * y + x + 1
        assert f.set_var_zero(1) == x + 1
        with pytest.raises(ValueError):
            Poly.monomial(2, (0, -1), 1).set_var_zero(1)

    def test_homogeneous_split(self):
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        f = x * x + y  # weights (1, 2): both degree 2
        assert f.is_homogeneous((1, 2))
        assert not f.is_homogeneous((1, 1))

    def test_substitute_is_ring_hom(self):
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        u, v = Poly.variable(2, 0), Poly.variable(2, 1)
        images = [u + v, u - v]
        f = x * y + y
        g = x + 2
        lhs = (f * g).substitute(images)
        rhs = f.substitute(images) * g.substitute(images)
        assert lhs == rhs

    def test_format(self):
        x, y = Poly.variable(2, 0), Poly.variable(2, 1)
        s = (2 * x * x - y + Fraction(1, 3)).format(["a", "b"])
        assert "a^2" in s and "b" in s and "1/3" in s


coeffs = st.integers(min_value=-6, max_value=6)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw, nvars=2, max_terms=5):
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return Poly(nvars, {e: Fraction(c) for e, c in terms.items() if c})


@st.composite
def linear_forms(draw, nvars=2):
    cs = draw(st.lists(coeffs, min_size=nvars, max_size=nvars).filter(lambda v: any(v)))
    total = Poly.zero(nvars)
    for i, c in enumerate(cs):
        if c:
            total = total + c * Poly.variable(nvars, i)
    return total


@given(polys(), polys())
@settings(max_examples=60)
def test_mul_commutes(f, g):
    assert f * g == g * f


@given(polys(), polys(), polys())
@settings(max_examples=40)
def test_mul_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(polys(), linear_forms())
@settings(max_examples=60)
def test_exact_division_roundtrip(f, lin):
    assert exact_div_linear(f * lin, lin) == f


@given(polys(), linear_forms())
@settings(max_examples=40)
def test_division_rejects_remainders(f, lin):
    g = f * lin + 1
    with pytest.raises(ValueError):
        exact_div_linear(g, lin)


class TestLinearAlgebra:
    def test_solve_simple(self):
        rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
        sol = solve_exact(rows, [Fraction(3), Fraction(1)])
        assert sol == [Fraction(2), Fraction(1)]

    def test_solve_inconsistent(self):
        rows = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
        assert solve_exact(rows, [Fraction(1), Fraction(3)]) is None

    def test_underdetermined_picks_a_solution(self):
        rows = [[Fraction(1), Fraction(1)]]
        sol = solve_exact(rows, [Fraction(5)])
        assert sol is not None
        assert sol[0] + sol[1] == 5

    def test_rank(self):
        rows = [
            [Fraction(1), Fraction(2)],
            [Fraction(2), Fraction(4)],
            [Fraction(0), Fraction(1)],
        ]
        assert matrix_rank(rows) == 2
