"""Tensor powers of a universal envelope or of its fundamental representation.

An Element is a finite sum of terms ``coeff * parameter_monomial *
(s_1 (x) ... (x) s_k)``.  In the formal backend each slot s_i is a normally
ordered PBW monomial in the algebra generators (negative root vectors, then
Cartan, then positive root vectors); multiplication straightens products via
the structure constants with all Koszul signs.  In the matrix backend each
slot is a matrix unit of the fundamental representation, so identities can be
checked exactly without truncation whenever the entries terminate.

Both backends share the same term arithmetic; only the slot product differs.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar


class BackendError(Exception):
    pass


class SeriesDivergence(Exception):
    """A power series failed to terminate on a non-nilpotent argument."""


_SERIES_CAP = 400


# --------------------------------------------------------------------------
# PBW straightening (cached on the algebra object)


def _mono_mul_gen(alg, mono, g):
    """Normal form of (normally ordered monomial) * (single generator)."""
    cache = alg._pbw_push_cache
    key = (mono, g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not mono:
        out = {((g, 1),): Fraction(1)}
        cache[key] = out
        return out
    pre = mono[:-1]
    a, e = mono[-1]
    pa = alg.gens[a].parity
    pg = alg.gens[g].parity
    if a < g:
        out = {mono + ((g, 1),): Fraction(1)}
    elif a == g:
        if pa == 0:
            out = {pre + ((a, e + 1),): Fraction(1)}
        else:
            # odd square: g*g = [g, g] / 2
            out = {}
            for k, c in alg.bracket(g, g).items():
                for m2, c2 in _mono_mul_gen(alg, pre, k).items():
                    _acc(out, m2, c * c2 / 2)
    else:
        # a > g: strip one a, then a*g = sign g*a + [a, g]
        rest = pre + ((a, e - 1),) if e > 1 else pre
        sign = Fraction(-1 if (pa and pg) else 1)
        out = {}
        for m2, c2 in _mono_mul_gen(alg, rest, g).items():
            for m3, c3 in _mono_mul_gen(alg, m2, a).items():
                _acc(out, m3, sign * c2 * c3)
        for k, c in alg.bracket(a, g).items():
            for m2, c2 in _mono_mul_gen(alg, rest, k).items():
                _acc(out, m2, c * c2)
    cache[key] = out
    return out


def _acc(store, key, val):
    s = store.get(key, Fraction(0)) + val
    if s:
        store[key] = s
    elif key in store:
        del store[key]


def pbw_mul(alg, m1, m2):
    """Product of two normally ordered monomials, as monomial -> coefficient."""
    cache = alg._pbw_mul_cache
    key = (m1, m2)
    hit = cache.get(key)
    if hit is not None:
        return hit
    states = {m1: Fraction(1)}
    for g, e in m2:
        for _ in range(e):
            nxt = {}
            for mono, c in states.items():
                for m2x, c2 in _mono_mul_gen(alg, mono, g).items():
                    _acc(nxt, m2x, c * c2)
            states = nxt
    cache[key] = states
    return states


def mono_parity(alg, mono):
    return sum(e * alg.gens[g].parity for g, e in mono) % 2


def mono_str(alg, mono):
    if not mono:
        return "1"
    return "*".join(
        alg.gens[g].name + ("" if e == 1 else "^%d" % e) for g, e in mono
    )


# --------------------------------------------------------------------------
# contexts


class Context:
    """A fixed algebra, scalar ring, backend and number of tensor legs."""

    def __init__(self, alg, ring, legs, backend="formal"):
        if backend not in ("formal", "matrix"):
            raise BackendError("unknown backend %r" % backend)
        self.alg = alg
        self.ring = ring
        self.legs = legs
        self.backend = backend
        self._parity_cache = {}
        if backend == "matrix":
            self.unit_slot = None  # expanded into diagonal units
        else:
            self.unit_slot = ()
        self._one = None

    def compatible(self, other):
        return (
            self.alg is other.alg
            and self.ring.compatible(other.ring)
            and self.legs == other.legs
            and self.backend == other.backend
        )

    def slot_parity(self, slot):
        hit = self._parity_cache.get(slot)
        if hit is None:
            if self.backend == "formal":
                hit = mono_parity(self.alg, slot)
            else:
                r, c = slot
                hit = (self.alg.vec_parity[r] + self.alg.vec_parity[c]) % 2
            self._parity_cache[slot] = hit
        return hit

    def slot_mul(self, s1, s2):
        if self.backend == "formal":
            return pbw_mul(self.alg, s1, s2)
        r1, c1 = s1
        r2, c2 = s2
        if c1 != r2:
            return {}
        return {(r1, c2): Fraction(1)}

    def _unit_slot_tuples(self):
        if self.backend == "formal":
            return [((),) * self.legs]
        diag = list(range(self.alg.dim))
        out = [()]
        for _ in range(self.legs):
            out = [s + ((d, d),) for s in out for d in diag]
        return out

    def zero(self):
        return Element(self, {})

    def one(self):
        if self._one is None:
            z = self.ring.zero_exps
            self._one = Element(
                self, {(z, s): Fraction(1) for s in self._unit_slot_tuples()}
            )
        return self._one

    def from_scalar(self, s):
        if not isinstance(s, Scalar):
            s = self.ring.scalar(s)
        if not self.ring.compatible(s.ring):
            raise BackendError("scalar from an incompatible ring")
        terms = {}
        for slots in self._unit_slot_tuples():
            for e, c in s.terms.items():
                terms[(e, slots)] = c
        return Element(self, terms)

    def embed_gen(self, leg, gen_idx):
        """One generator in the given leg, identity elsewhere."""
        z = self.ring.zero_exps
        if self.backend == "formal":
            terms = {}
            for slots in self._unit_slot_tuples():
                s = list(slots)
                s[leg] = ((gen_idx, 1),)
                terms[(z, tuple(s))] = Fraction(1)
            return Element(self, terms)
        mat = self.alg.rep[gen_idx]
        terms = {}
        diag = list(range(self.alg.dim))
        combos = [()]
        for l in range(self.legs):
            if l == leg:
                combos = [s + (unit,) for s in combos for unit in mat]
            else:
                combos = [s + ((d, d),) for s in combos for d in diag]
        for slots in combos:
            terms[(z, slots)] = mat[slots[leg]]
        return Element(self, terms)

    def embed(self, leg, algelem):
        out = self.zero()
        for g, c in algelem.items():
            out = out + Fraction(c) * self.embed_gen(leg, g)
        return out


# --------------------------------------------------------------------------
# elements


class Element:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, Element):
            if not self.ctx.compatible(other.ctx):
                raise BackendError("elements from incompatible contexts")
            return other
        return self.ctx.from_scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _acc(terms, k, v)
        return Element(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _slots_parity(self, slots):
        sp = self.ctx.slot_parity
        return tuple(sp(s) for s in slots)

    def __mul__(self, other):
        if not isinstance(other, Element):
            # right multiplication by a scalar: push it left past the slots
            if not isinstance(other, Scalar):
                other = self.ctx.ring.scalar(other)
            ring = self.ctx.ring
            terms = {}
            for (p1, slots), c1 in self.terms.items():
                sp = sum(self._slots_parity(slots)) % 2
                for e2, c2 in other.terms.items():
                    hit = ring.mul_monomials(p1, e2)
                    if hit is None:
                        continue
                    sgn, p = hit
                    if sp and ring.monomial_parity(e2):
                        sgn = -sgn
                    _acc(terms, (p, slots), sgn * c1 * c2)
            return Element(self.ctx, terms)
        other = self._coerce(other)
        ctx = self.ctx
        ring = ctx.ring
        matrix = ctx.backend == "matrix"
        terms = {}
        t2 = list(other.terms.items())
        par2 = [ring.monomial_parity(p2) for (p2, _), _ in t2]
        for (p1, s1), c1 in self.terms.items():
            sp1 = self._slots_parity(s1)
            for ((p2, s2), c2), pp2 in zip(t2, par2):
                if matrix and any(a[1] != b[0] for a, b in zip(s1, s2)):
                    continue
                hit = ring.mul_monomials(p1, p2)
                if hit is None:
                    continue
                sgn, p = hit
                # second factor's parameters cross the first factor's slots
                if pp2 and (sum(sp1) & 1):
                    sgn = -sgn
                # leg j content of the second factor crosses leg i > j of the first
                cross = 0
                tail = 0
                for j in range(ctx.legs - 1, -1, -1):
                    if ctx.slot_parity(s2[j]):
                        cross ^= tail & 1
                    if sp1[j]:
                        tail += 1
                if cross:
                    sgn = -sgn
                coeff = sgn * c1 * c2
                if matrix:
                    slots = tuple((a[0], b[1]) for a, b in zip(s1, s2))
                    _acc(terms, (p, slots), coeff)
                else:
                    partial = [((), coeff)]
                    for a, b in zip(s1, s2):
                        prod = ctx.slot_mul(a, b)
                        partial = [
                            (acc + (m,), cc * cm)
                            for acc, cc in partial
                            for m, cm in prod.items()
                        ]
                        if not partial:
                            break
                    for slots, cc in partial:
                        _acc(terms, (p, slots), cc)
        return Element(ctx, terms)

    def __rmul__(self, other):
        # left multiplication by a scalar
        if isinstance(other, Element):
            return NotImplemented
        return self.ctx.from_scalar(other) * self

    def __pow__(self, n):
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, (Element, Scalar, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("elements are mutable-sized; not hashable")

    def truncate(self, order):
        return Element(
            self.ctx,
            {k: v for k, v in self.terms.items() if sum(k[0]) <= order},
        )

    def param_coefficient(self, exps):
        """Terms with exactly this parameter monomial, parameters stripped."""
        z = self.ctx.ring.zero_exps
        return Element(
            self.ctx,
            {(z, s): c for (p, s), c in self.terms.items() if p == exps},
        )

    def max_param_degree(self):
        return max((sum(p) for (p, _) in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        ctx = self.ctx
        parts = []

        def slot_str(s):
            if ctx.backend == "formal":
                return mono_str(ctx.alg, s)
            return "E(%d,%d)" % s

        for (p, slots), c in sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0][0]), kv[0])
        ):
            mono = ctx.ring.monomial_str(p, c)
            parts.append("%s * %s" % (mono, " (x) ".join(map(slot_str, slots))))
        return "  +  ".join(parts)

    __repr__ = __str__


# --------------------------------------------------------------------------
# structure maps via leg substitution


def primitive_map(ctx, leg_a, leg_b):
    """Coproduct on generators: x -> x (x) 1 + 1 (x) x in the given legs."""

    def fn(g):
        return ctx.embed_gen(leg_a, g) + ctx.embed_gen(leg_b, g)

    return ("hom", fn)


def leg_map(ctx, leg):
    def fn(g):
        return ctx.embed_gen(leg, g)

    return ("hom", fn)


def counit_map(ctx):
    def fn(g):
        return ctx.zero()

    return ("hom", fn)


def antipode_map(ctx, leg):
    """Undeformed antipode: x -> -x, extended as an anti-homomorphism."""

    def fn(g):
        return -ctx.embed_gen(leg, g)

    return ("anti", fn)


def custom_map(fn, anti=False):
    return ("anti" if anti else "hom", fn)


def transform(elem, dst, specs):
    """Apply one (anti)homomorphism per source leg and multiply the images.

    Each spec is ('hom'|'anti', fn) with fn(generator index) -> Element of
    dst.  Images of distinct source legs must occupy disjoint, increasing
    groups of destination legs (the natural situation for coproduct legs,
    counit legs and representation functors); fold handles the one map that
    merges legs.
    """
    src = elem.ctx
    if src.backend != "formal":
        raise BackendError("transform is defined on the formal backend")
    if len(specs) != src.legs:
        raise BackendError("one map per source leg required")
    cache = {}

    def image(i, mono):
        hit = cache.get((i, mono))
        if hit is not None:
            return hit
        kind, fn = specs[i]
        seq = [g for g, e in mono for _ in range(e)]
        if kind == "anti":
            odd = sum(src.alg.gens[g].parity for g in seq)
            sign = Fraction(-1 if (odd * (odd - 1) // 2) % 2 else 1)
            seq = seq[::-1]
        else:
            sign = Fraction(1)
        out = dst.from_scalar(sign)
        for g in seq:
            out = out * fn(g)
        cache[(i, mono)] = out
        return out

    total = dst.zero()
    for (p, slots), c in elem.terms.items():
        acc = dst.from_scalar(Scalar(dst.ring, {p: c}))
        for i, s in enumerate(slots):
            acc = acc * image(i, s)
            if acc.is_zero():
                break
        total = total + acc
    return total


def super_flip(elem, i, j):
    """Exchange legs i and j with the Koszul sign."""
    ctx = elem.ctx
    terms = {}
    for (p, slots), c in elem.terms.items():
        s = list(slots)
        s[i], s[j] = s[j], s[i]
        sign = -1 if ctx.slot_parity(slots[i]) and ctx.slot_parity(slots[j]) else 1
        _acc(terms, (p, tuple(s)), sign * c)
    return Element(ctx, terms)


def fold(elem, dst, mid=None):
    """Contraction (a (x) b) o x = a x b of a two-leg formal element."""
    src = elem.ctx
    if src.backend != "formal" or src.legs != 2 or dst.legs != 1:
        raise BackendError("fold maps two formal legs onto one")
    total = dst.zero()
    for (p, (s1, s2)), c in elem.terms.items():
        left = Element(dst, {(p, (s1,)): c})
        right = Element(dst, {(dst.ring.zero_exps, (s2,)): Fraction(1)})
        if mid is None:
            total = total + left * right
        else:
            total = total + left * mid * right
    return total


def to_matrix(elem, dst):
    """Push a formal element through the fundamental representation."""
    if dst.backend != "matrix":
        raise BackendError("destination must be a matrix context")
    specs = [leg_map(dst, i) for i in range(elem.ctx.legs)]
    return transform(elem, dst, specs)


# --------------------------------------------------------------------------
# power series of nilpotent arguments


def series_eval(x, coeffs, one=True):
    """sum over k of coeffs(k) * x^k; x must be nilpotent (else raises)."""
    ctx = x.ctx
    out = ctx.from_scalar(coeffs(0)) if one else ctx.zero()
    power = ctx.one()
    for k in range(1, _SERIES_CAP):
        power = power * x
        if power.is_zero():
            return out
        c = coeffs(k)
        if c:
            out = out + Fraction(c) * power
    raise SeriesDivergence("series argument is not nilpotent at this order")


def exp_series(x):
    from math import factorial

    return series_eval(x, lambda k: Fraction(1, factorial(k)))


def log1p_series(x):
    return series_eval(
        x, lambda k: Fraction(0) if k == 0 else Fraction((-1) ** (k + 1), k)
    )


def inv1p_series(x):
    return series_eval(x, lambda k: Fraction((-1) ** k))


def sqrt1p_series(x):
    def coeff(k):
        # binomial(1/2, k)
        num = Fraction(1)
        half = Fraction(1, 2)
        for i in range(k):
            num *= (half - i) / (i + 1)
        return num

    return series_eval(x, coeff)


def inv_sqrt1p_series(x):
    def coeff(k):
        num = Fraction(1)
        mhalf = Fraction(-1, 2)
        for i in range(k):
            num *= (mhalf - i) / (i + 1)
        return num

    return series_eval(x, coeff)


_BERNOULLI = [Fraction(1)]


def bernoulli(k):
    """Bernoulli numbers, B1 = -1/2 convention."""
    from math import comb

    while len(_BERNOULLI) <= k:
        m = len(_BERNOULLI)
        s = sum(comb(m + 1, j) * _BERNOULLI[j] for j in range(m))
        _BERNOULLI.append(-s / Fraction(m + 1))
    return _BERNOULLI[k]


def x_over_expm1(x):
    """Evaluate t / (e^t - 1) at a nilpotent t."""
    from math import factorial

    return series_eval(x, lambda k: bernoulli(k) / factorial(k))
