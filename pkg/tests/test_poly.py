import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bernop.poly import Polynomial, axpy, from_roots

finite_complex = st.complex_numbers(
    max_magnitude=1e4, allow_nan=False, allow_infinity=False
)
coeff_lists = st.lists(finite_complex, min_size=1, max_size=17)


def test_eval_known_points():
    assert Polynomial([1, 0, 1]).eval(1j) == pytest.approx(0)
    assert Polynomial([0, 0, 0, 1]).eval(2) == pytest.approx(8)
    assert Polynomial([2, 1 + 1j]).eval(1) == pytest.approx(3 + 1j)


def test_eval_vectorized_matches_scalar():
    p = Polynomial([1, -2, 0.5j, 3])
    zs = np.exp(1j * np.linspace(0, 6, 11))
    vec = p.eval(zs)
    for z, v in zip(zs, vec):
        assert v == p.eval(complex(z))


def test_eval_rejects_nonfinite_point():
    p = Polynomial([1, 1])
    with pytest.raises(ValueError):
        p.eval(complex("inf"))
    with pytest.raises(ValueError):
        p.eval(complex(0, float("nan")))


def test_constructor_rejects_nonfinite_coeffs():
    with pytest.raises(ValueError):
        Polynomial([1, float("nan")])
    with pytest.raises(ValueError):
        Polynomial([complex(0, float("inf"))])


def test_nominal_degree_padding():
    p = Polynomial([1, 2], n=4)
    assert p.nominal_degree == 4
    assert list(p.coeffs) == [1, 2, 0, 0, 0]
    with pytest.raises(ValueError):
        Polynomial([1, 2, 3], n=1)


def test_derivative_examples():
    d = Polynomial([1, 3, 1]).derivative()
    assert list(d.coeffs) == [3, 2]
    const = Polynomial([5]).derivative()
    assert const.nominal_degree == 0 and const.coeffs[0] == 0
    quartic = Polynomial([0, 0, 0, 0, 1]).derivative()
    assert list(quartic.coeffs) == [0, 0, 0, 4]


def test_dilate_examples():
    assert list(Polynomial([1, 0, 1]).dilate(2).coeffs) == [1, 0, 4]
    p = Polynomial([2, -1j, 3])
    assert np.array_equal(p.dilate(1.0).coeffs, p.coeffs)
    assert list(Polynomial([1, 1]).dilate(3).coeffs) == [1, 3]
    with pytest.raises(ValueError):
        p.dilate(0.0)
    with pytest.raises(ValueError):
        p.dilate(-2.0)


def test_from_roots_examples():
    assert list(from_roots([1, -1], 1).coeffs) == [-1, 0, 1]
    empty = from_roots([], 7)
    assert empty.nominal_degree == 0 and empty.coeffs[0] == 7
    assert list(from_roots([1j, -1j], 2).coeffs) == [2, 0, 2]
    with pytest.raises(ValueError):
        from_roots([1.0], 0)


def test_from_roots_residuals():
    rng = np.random.default_rng(7)
    for _ in range(25):
        deg = int(rng.integers(1, 17))
        roots = rng.uniform(-3, 3, deg) + 1j * rng.uniform(-3, 3, deg)
        lead = complex(rng.uniform(0.5, 2)) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        p = from_roots(roots, lead)
        scale = 1.0 + np.abs(p.coeffs).max()
        for root in roots:
            assert abs(p.eval(complex(root))) <= 1e-10 * scale


def test_reciprocal_examples():
    self_inv = Polynomial([1, 0, 0, 0, 1])
    assert np.array_equal(self_inv.reciprocal().coeffs, self_inv.coeffs)

    # degree-1 case worked out from the coefficient-reversal definition
    q = Polynomial([1j, 2]).reciprocal()
    assert list(q.coeffs) == [2, -1j]

    monomial = Polynomial([0, 0, 0, 1])
    rec = monomial.reciprocal()
    assert rec.nominal_degree == 3
    assert list(rec.coeffs) == [1, 0, 0, 0]


def test_reciprocal_modulus_on_unit_circle():
    rng = np.random.default_rng(11)
    p = Polynomial(rng.standard_normal(9) + 1j * rng.standard_normal(9))
    q = p.reciprocal()
    for theta in rng.uniform(0, 2 * np.pi, 64):
        z = complex(np.exp(1j * theta))
        pv, qv = abs(p.eval(z)), abs(q.eval(z))
        assert abs(pv - qv) <= 1e-12 * (1 + pv)


def test_axpy_examples():
    z2 = Polynomial([0, 0, 1])
    cancel = axpy(1, z2, -1, z2)
    assert np.all(cancel.coeffs == 0)
    doubled = axpy(2, Polynomial([1, 1]), 0, Polynomial([9, 9, 9]))
    assert list(doubled.coeffs) == [2, 2, 0]
    assert list(axpy(1, z2, 1, Polynomial([1])).coeffs) == [1, 0, 1]


@given(a=finite_complex, b=finite_complex, pc=coeff_lists, sc=coeff_lists, t=st.floats(0, 2 * np.pi))
@settings(max_examples=150, deadline=None)
def test_eval_linearity(a, b, pc, sc, t):
    p, s = Polynomial(pc), Polynomial(sc)
    z = complex(np.exp(1j * t))
    lhs = axpy(a, p, b, s).eval(z)
    rhs = a * p.eval(z) + b * s.eval(z)
    assert abs(lhs - rhs) <= 1e-12 * (1 + abs(lhs) + abs(rhs))


@given(pc=coeff_lists)
@settings(max_examples=150, deadline=None)
def test_reciprocal_involution_exact(pc):
    p = Polynomial(pc)
    assert np.array_equal(p.reciprocal().reciprocal().coeffs, p.coeffs)


@given(pc=coeff_lists, r1=st.floats(0.1, 3.0), r2=st.floats(0.1, 3.0))
@settings(max_examples=150, deadline=None)
def test_dilate_composition(pc, r1, r2):
    p = Polynomial(pc)
    once = p.dilate(r1).dilate(r2).coeffs
    combined = p.dilate(r1 * r2).coeffs
    scale = np.abs(combined) + np.abs(once)
    assert np.all(np.abs(once - combined) <= 1e-12 * (1 + scale))


def test_json_round_trip():
    p = Polynomial([1 + 2j, 0, -3j], n=4)
    doc = p.to_json_dict()
    assert doc["n"] == 4 and len(doc["coeffs"]) == 5
    q = Polynomial.from_json_dict(doc)
    assert np.array_equal(p.coeffs, q.coeffs)
    with pytest.raises(ValueError):
        Polynomial.from_json_dict({"n": 2, "coeffs": [[0, 0]]})
