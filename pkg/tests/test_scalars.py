"""Coefficient ring: Koszul signs, truncation, grassmann vs clifford squares."""

from fractions import Fraction

from hypothesis import given, strategies as st

from supertwist import Parameter, Scalar, ScalarRing


def make_ring(truncation=None, square_zero=True):
    return ScalarRing(
        (
            Parameter("a"),
            Parameter("eta", odd=True, square_zero=square_zero),
            Parameter("mu", odd=True, square_zero=square_zero),
        ),
        truncation,
    )


def test_odd_parameters_anticommute():
    ring = make_ring()
    eta = ring.param("eta")
    mu = ring.param("mu")
    assert eta * mu == -(mu * eta)
    assert not (eta * mu).is_zero()


def test_grassmann_square_vanishes():
    ring = make_ring()
    eta = ring.param("eta")
    assert (eta * eta).is_zero()


def test_clifford_square_survives():
    ring = make_ring(square_zero=False)
    eta = ring.param("eta")
    sq = eta * eta
    assert not sq.is_zero()
    assert sq.parity() == 0
    # and it is central with respect to the other odd parameter
    mu = ring.param("mu")
    assert sq * mu == mu * sq


def test_even_parameter_commutes():
    ring = make_ring()
    a = ring.param("a")
    eta = ring.param("eta")
    assert a * eta == eta * a


def test_truncation_drops_high_degree():
    ring = make_ring(truncation=2)
    a = ring.param("a")
    assert (a * a * a).is_zero()
    assert not (a * a).is_zero()


def test_parity_classification():
    ring = make_ring()
    a = ring.param("a")
    eta = ring.param("eta")
    assert a.parity() == 0
    assert eta.parity() == 1
    assert (a + ring.one()).parity() == 0
    assert (a + eta).parity() is None


def scalars(ring):
    monos = st.tuples(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=1),
        st.integers(min_value=0, max_value=1),
    )
    coeffs = st.fractions(
        min_value=Fraction(-3), max_value=Fraction(3), max_denominator=3
    )
    return st.dictionaries(monos, coeffs, max_size=3).map(
        lambda d: sum((c * Scalar(ring, {e: Fraction(1)})
                       for e, c in d.items()), ring.zero())
    )


RING = make_ring(truncation=4)


@given(scalars(RING), scalars(RING), scalars(RING))
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x - x == RING.zero()


@given(scalars(RING), scalars(RING))
def test_super_commutativity(x, y):
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        return
    sign = -1 if (px and py) else 1
    assert x * y == sign * (y * x)
