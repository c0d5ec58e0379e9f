"""Tensor-leg engine: products, flips, transforms, series."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from supertwist import (
    Context,
    Parameter,
    ScalarRing,
    antipode_map,
    build_algebra,
    counit_map,
    exp_series,
    leg_map,
    log1p_series,
    primitive_map,
    super_flip,
    to_matrix,
    transform,
)

ALG = build_algebra("gl", 1, 1)
OSP = build_algebra("osp", 1, 2)
RING = ScalarRing((), truncation=None)


def random_element(ctx, rng, nfactors):
    out = ctx.one()
    ng = len(ctx.alg.gens)
    for _ in range(nfactors):
        leg = rng.randrange(ctx.legs)
        coeff = Fraction(rng.choice([1, -1]) * rng.randint(1, 3), rng.randint(1, 3))
        out = out * (coeff * ctx.embed_gen(leg, rng.randrange(ng)))
    return out


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_product_associativity(seed):
    rng = random.Random(seed)
    for alg in (ALG, OSP):
        ctx = Context(alg, RING, 2)
        a, b, c = (random_element(ctx, rng, rng.randint(1, 3)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_super_flip_involution_and_sign():
    ctx = Context(OSP, RING, 2)
    rng = random.Random(7)
    for _ in range(20):
        x = random_element(ctx, rng, rng.randint(1, 4))
        assert super_flip(super_flip(x, 0, 1), 0, 1) == x
    # single tensors pick up the Koszul sign
    for gi, g in enumerate(OSP.gens):
        for gj, h in enumerate(OSP.gens):
            x = ctx.embed_gen(0, gi) * ctx.embed_gen(1, gj)
            y = ctx.embed_gen(0, gj) * ctx.embed_gen(1, gi)
            sign = -1 if (g.parity and h.parity) else 1
            assert super_flip(x, 0, 1) == sign * y


def test_to_matrix_is_an_algebra_map():
    ring = ScalarRing((Parameter("xi"),), truncation=3)
    ctxf = Context(ALG, ring, 2, "formal")
    ctxm = Context(ALG, ring, 2, "matrix")
    rng = random.Random(11)
    for _ in range(25):
        a = random_element(ctxf, rng, rng.randint(1, 3))
        b = random_element(ctxf, rng, rng.randint(1, 3))
        assert to_matrix(a * b, ctxm) == to_matrix(a, ctxm) * to_matrix(b, ctxm)


def test_exp_log_inverse_on_nilpotent():
    ring = ScalarRing((Parameter("xi"),), truncation=5)
    ctx = Context(ALG, ring, 1)
    # xi * h1 is nilpotent only through truncation; series must invert
    x = ring.param("xi") * ctx.embed_gen(0, 0)
    assert log1p_series(exp_series(x) - ctx.one()) == x
    assert exp_series(x) * exp_series(-x) == ctx.one()


def test_counit_and_antipode_axioms_on_primitives():
    """m(S (x) id)Delta(x) = epsilon(x) = 0 for every generator."""
    for alg in (ALG, OSP):
        ring = ScalarRing((), truncation=None)
        ctx1 = Context(alg, ring, 1)
        ctx2 = Context(alg, ring, 2)
        for gi in range(len(alg.gens)):
            x = ctx1.embed_gen(0, gi)
            dx = transform(x, ctx2, [primitive_map(ctx2, 0, 1)])
            # counit on either leg returns the element itself
            assert transform(dx, ctx1, [counit_map(ctx1), leg_map(ctx1, 0)]) == x
            assert transform(dx, ctx1, [leg_map(ctx1, 0), counit_map(ctx1)]) == x
            # antipode axiom folds to zero
            folded = transform(
                dx, ctx1, [antipode_map(ctx1, 0), leg_map(ctx1, 0)]
            )
            assert folded.is_zero()


def test_antipode_is_an_antihomomorphism():
    ctx1 = Context(OSP, RING, 1)
    rng = random.Random(3)

    def S(elem):
        return transform(elem, ctx1, [antipode_map(ctx1, 0)])

    def homogeneous(nfactors):
        gens = [rng.randrange(len(OSP.gens)) for _ in range(nfactors)]
        elem = ctx1.one()
        for g in gens:
            elem = elem * ctx1.embed_gen(0, g)
        parity = sum(OSP.gens[g].parity for g in gens) % 2
        return elem, parity

    for _ in range(20):
        a, pa = homogeneous(rng.randint(1, 3))
        b, pb = homogeneous(rng.randint(1, 3))
        sign = -1 if (pa and pb) else 1
        assert S(a * b) == sign * (S(b) * S(a))
