import pytest
from hypothesis import given

from conftest import polys
from skhkit.laurent import (
    ONE,
    ZERO,
    LaurentPolynomial,
    PolyMatrix,
    conjugate,
    matrix_mul,
    matrix_trace,
    parse,
    poly_add,
    poly_mul,
    q,
    render,
    substitute,
    t,
)


def test_add_examples():
    assert poly_add(1 - t, t) == ONE
    assert poly_add(ZERO, q - q**3) == q - q**3
    assert poly_add(-(t**-1), -(t**-1)) == LaurentPolynomial({(0, -1): -2})


def test_mul_examples():
    assert poly_mul(q - q**3, q**-1) == 1 - q**2
    assert poly_mul(1 + t, 1 - t) == 1 - t**2
    assert poly_mul(q * t, q * t) == LaurentPolynomial({(2, 2): 1})


def test_canonical_form_drops_zeros():
    p = LaurentPolynomial({(1, 0): 0, (0, 0): 3})
    assert p.terms == {(0, 0): 3}
    assert (q - q).is_zero()
    assert (q - q).terms == {}


def test_substitute_examples():
    assert substitute(1 - t, "t", q**2) == 1 - q**2
    assert substitute(6 - 5 * t + 3 * t**2, "t", -1) == 14
    assert substitute(q**3, "t", q**2) == q**3
    assert substitute(t**-2, "t", q**2) == q**-4
    assert substitute(t**-1, "t", -1) == -1


def test_substitute_rejects_non_monomial():
    with pytest.raises(ValueError):
        substitute(t, "t", 1 + q)
    with pytest.raises(ValueError):
        substitute(t, "t", 0)


def test_render_format():
    p = parse("-t^-3 + 2*t^-2 - 4*t^-1 + 6 - 5*t + 3*t^2 - 2*t^3 + t^4")
    assert render(p) == "-t^-3 + 2*t^-2 - 4*t^-1 + 6 - 5*t + 3*t^2 - 2*t^3 + t^4"
    assert render(q * t + q**-1 * t**-1) == "q^-1*t^-1 + q*t"
    assert render(ZERO) == "0"
    assert render(LaurentPolynomial({(0, 0): -1})) == "-1"


@pytest.mark.parametrize("bad", ["", "q +", "2**q", "x", "q t"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse(bad)


@given(polys())
def test_render_parse_roundtrip(p):
    assert parse(render(p)) == p


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys(), polys())
def test_substitution_is_a_ring_map(a, b):
    def sub(x):
        return x.substitute("t", q**2)

    assert sub(a + b) == sub(a) + sub(b)
    assert sub(a * b) == sub(a) * sub(b)


@given(polys(max_terms=3))
def test_evaluate_matches_substitute(p):
    assert p.substitute("t", -1).substitute("q", -1) == p.evaluate(q=-1, t=-1)


def test_negative_power_needs_unit_monomial():
    with pytest.raises(ValueError):
        (1 + q) ** -1
    with pytest.raises(ValueError):
        (2 * q) ** -1
    assert (-(q**2)) ** -1 == -(q**-2)


def test_exponent_overflow_guard():
    with pytest.raises(OverflowError):
        LaurentPolynomial.monomial(1, 2**40, 0)


def test_matrix_identity_and_trace():
    m = PolyMatrix([[1 - t, t, 0], [1, 0, 0], [0, 0, 1]])
    assert matrix_mul(PolyMatrix.identity(3), m) == m
    assert matrix_mul(m, PolyMatrix.identity(3)) == m
    assert matrix_trace(PolyMatrix.identity(5)) == 5
    assert matrix_trace(m) == 2 - t


def test_matrix_dimension_errors():
    a = PolyMatrix([[1, 2, 3]])
    with pytest.raises(ValueError):
        matrix_mul(a, a)
    with pytest.raises(ValueError):
        matrix_trace(a)
    with pytest.raises(ValueError):
        PolyMatrix([[1, 2], [3]])


def test_conjugate_examples():
    m = PolyMatrix([[1 - q**2, -q, 0], [-q, 0, 0], [0, 0, 1]])
    a3 = PolyMatrix.diagonal([q**-1, -(q**-2), q**-3])
    assert conjugate(m, PolyMatrix.identity(3)) == m
    assert conjugate(m, a3) == PolyMatrix([[1 - q**2, q**2, 0], [1, 0, 0], [0, 0, 1]])


def test_conjugate_rejects_bad_conjugator():
    m = PolyMatrix.identity(2)
    with pytest.raises(ValueError):
        conjugate(m, PolyMatrix([[1, 1], [0, 1]]))
    with pytest.raises(ValueError):
        conjugate(m, PolyMatrix.diagonal([1 + q, 1]))
    with pytest.raises(ValueError):
        conjugate(m, PolyMatrix.diagonal([2, 1]))


@given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3), polys(max_terms=3), polys(max_terms=1))
def test_conjugation_preserves_trace(a, b, c, d, e):
    m = PolyMatrix([[a, b], [c, d]])
    diag_entry = e if e.is_monomial() else q
    sign = next(iter(diag_entry.terms.values()))
    unit = LaurentPolynomial({exp: 1 if sign > 0 else -1 for exp in diag_entry.terms})
    dmat = PolyMatrix.diagonal([unit, -(t**3)])
    assert matrix_trace(conjugate(m, dmat)) == matrix_trace(m)
