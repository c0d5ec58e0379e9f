"""Graded-commutative coefficient ring: exact rationals with formal deformation
parameters.

Parameters carry a parity.  Odd parameters either square to zero (grassmann)
or keep their square as a symbolic even quantity (clifford).  Scalars are
finite sums of parameter monomials with rational coefficients, optionally
truncated in total parameter degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Parameter:
    """A named formal deformation parameter."""

    name: str
    odd: bool = False
    # Meaningful only for odd parameters: True kills the square, False keeps
    # it as a symbolic even monomial (stored as exponent 2).
    square_zero: bool = True


class RingMismatch(Exception):
    pass


class ScalarRing:
    """Declaration of parameters plus a truncation order.

    ``truncation`` is the maximal retained total parameter degree, or None
    for no truncation.  Canonical order of odd factors inside a monomial is
    declaration order; reordering during multiplication produces Koszul
    signs.
    """

    def __init__(self, params=(), truncation=4):
        names = [p.name for p in params]
        if len(set(names)) != len(names):
            raise ValueError("duplicate parameter names")
        self.params = tuple(params)
        self.truncation = truncation
        self.nparams = len(self.params)
        self._odd = tuple(p.odd for p in self.params)
        self._sqzero = tuple(p.odd and p.square_zero for p in self.params)
        self._index = {p.name: i for i, p in enumerate(self.params)}
        self.zero_exps = (0,) * self.nparams

    def with_truncation(self, truncation):
        return ScalarRing(self.params, truncation)

    def compatible(self, other):
        return self.params == other.params and self.truncation == other.truncation

    def monomial_parity(self, exps):
        p = 0
        for e, odd in zip(exps, self._odd):
            if odd:
                p ^= e & 1
        return p

    def mul_monomials(self, e1, e2):
        """Product of two parameter monomials.

        Returns (sign, exponents) or None when the product vanishes
        (grassmann square or truncation).
        """
        # Koszul sign: each odd unit of e2 at index j crosses the odd units
        # of e1 at indices i > j.
        swaps = 0
        tail = 0  # odd units of e1 with index > current j, counted downward
        for j in range(self.nparams - 1, -1, -1):
            if self._odd[j] and e2[j]:
                swaps += e2[j] * tail
            if self._odd[j] and e1[j]:
                tail += e1[j]
        out = []
        for j in range(self.nparams):
            e = e1[j] + e2[j]
            if e > 1 and self._sqzero[j]:
                return None
            out.append(e)
        if self.truncation is not None and sum(out) > self.truncation:
            return None
        return (-1 if swaps & 1 else 1), tuple(out)

    # -- constructors -----------------------------------------------------

    def scalar(self, value):
        value = Fraction(value)
        if value == 0:
            return Scalar(self, {})
        return Scalar(self, {self.zero_exps: value})

    def zero(self):
        return Scalar(self, {})

    def one(self):
        return self.scalar(1)

    def param(self, name):
        i = self._index[name]
        exps = tuple(1 if j == i else 0 for j in range(self.nparams))
        return Scalar(self, {exps: Fraction(1)})

    def param_index(self, name):
        return self._index[name]

    def monomial_str(self, exps, coeff):
        parts = []
        for p, e in zip(self.params, exps):
            if e == 1:
                parts.append(p.name)
            elif e > 1:
                parts.append("%s^%d" % (p.name, e))
        if not parts:
            return str(coeff)
        if coeff == 1:
            return "*".join(parts)
        if coeff == -1:
            return "-" + "*".join(parts)
        return str(coeff) + "*" + "*".join(parts)


def _monokey(exps):
    return (sum(exps), exps)


class Scalar:
    """Element of a ScalarRing: map parameter monomial -> rational."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def parity(self):
        """Common parity of all monomials, or None when mixed."""
        parities = {self.ring.monomial_parity(e) for e in self.terms}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def constant_term(self):
        return self.terms.get(self.ring.zero_exps, Fraction(0))

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def _check(self, other):
        if not self.ring.compatible(other.ring):
            raise RingMismatch("scalars from different ring declarations")

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = self.ring.scalar(other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Scalar(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = self.ring.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = self.ring.scalar(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                hit = self.ring.mul_monomials(e1, e2)
                if hit is None:
                    continue
                sign, e = hit
                terms[e] = terms.get(e, Fraction(0)) + sign * c1 * c2
        return Scalar(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = self.ring.scalar(other)
        return self.ring.compatible(other.ring) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def truncate(self, order):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return Scalar(
            self.ring, {e: c for e, c in self.terms.items() if sum(e) <= order}
        )

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=_monokey)
        out = self.ring.monomial_str(keys[0], self.terms[keys[0]])
        for e in keys[1:]:
            c = self.terms[e]
            piece = self.ring.monomial_str(e, abs(c) if c < 0 else c)
            out += (" - " if c < 0 else " + ") + piece
        return out

    __repr__ = __str__


def scalar_mul(a, b):
    return a * b


def scalar_truncate(a, order):
    return a.truncate(order)
