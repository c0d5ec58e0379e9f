"""Twists as Hopf data: coassociativity, counit, antipode, triangularity.

These checks avoid the library's own residual helpers where possible: the
twisted coproduct is coassociative iff the cocycle identity holds, and that
is tested here by transporting Delta_F through both tensor legs explicitly.
"""

import random
from fractions import Fraction

import pytest

from supertwist import (
    Context,
    build_algebra,
    custom_map,
    element_inverse,
    exp_series,
    hopf_u,
    jordanian_twist,
    leg_emb,
    leg_map,
    make_chain,
    sigma,
    stage_twist,
    super_flip,
    transform,
    twisted_coproduct,
    universal_r,
)


def stage_setup(spec, truncation=4):
    alg = build_algebra(*parse(spec))
    chain = make_chain(alg, truncation=truncation)
    st = chain.stages[0]
    return alg, chain, st.carrier, st.param_name


def parse(spec):
    fam, rest = spec.split("(")
    m, n = rest.rstrip(")").split("|")
    return fam, int(m), int(n)


@pytest.mark.parametrize("spec", ["gl(1|1)", "sl(2|1)", "osp(1|2)"])
def test_twisted_coproduct_is_coassociative(spec):
    # K=3 keeps the half-root twist factor of osp(1|2) tractable here; the
    # acceptance suite exercises the same identity at K=4 via the cocycle
    truncation = 3 if spec == "osp(1|2)" else 4
    alg, chain, car, pname = stage_setup(spec, truncation)
    ctx1 = chain.context(1)
    ctx2 = chain.context(2)
    ctx3 = chain.context(3)

    f2 = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
    f01 = stage_twist(ctx3, leg_emb(ctx3, 0), leg_emb(ctx3, 1), car, pname)
    f12 = stage_twist(ctx3, leg_emb(ctx3, 1), leg_emb(ctx3, 2), car, pname)
    f01_inv = element_inverse(f01)
    f12_inv = element_inverse(f12)

    def df_front(g):
        dg = ctx3.embed_gen(0, g) + ctx3.embed_gen(1, g)
        return f01 * dg * f01_inv

    def df_back(g):
        dg = ctx3.embed_gen(1, g) + ctx3.embed_gen(2, g)
        return f12 * dg * f12_inv

    rng = random.Random(spec)
    samples = [ctx1.embed_gen(0, g) for g in range(len(alg.gens))]
    for _ in range(5):
        a, b = rng.randrange(len(alg.gens)), rng.randrange(len(alg.gens))
        samples.append(ctx1.embed_gen(0, a) * ctx1.embed_gen(0, b))
    for x in samples:
        dfx = twisted_coproduct(f2, x, ctx2)
        lhs = transform(dfx, ctx3, [custom_map(df_front), leg_map(ctx3, 2)])
        rhs = transform(dfx, ctx3, [leg_map(ctx3, 0), custom_map(df_back)])
        assert lhs == rhs


@pytest.mark.parametrize("spec", ["gl(1|1)", "osp(1|2)"])
def test_twisted_coproduct_is_an_algebra_map(spec):
    alg, chain, car, pname = stage_setup(spec)
    ctx1 = chain.context(1)
    ctx2 = chain.context(2)
    f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
    finv = element_inverse(f)
    rng = random.Random(1)
    for _ in range(10):
        a = ctx1.embed_gen(0, rng.randrange(len(alg.gens)))
        b = ctx1.embed_gen(0, rng.randrange(len(alg.gens)))
        lhs = twisted_coproduct(f, a * b, ctx2, finv)
        rhs = twisted_coproduct(f, a, ctx2, finv) * twisted_coproduct(
            f, b, ctx2, finv
        )
        assert lhs == rhs


def test_jordanian_twist_closed_form():
    """F_J = exp(2 h_theta (x) sigma) matches a direct exponential."""
    alg, chain, car, pname = stage_setup("gl(1|1)")
    ctx2 = chain.context(2)
    f = jordanian_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
    sig = sigma(ctx2, leg_emb(ctx2, 1), car, pname)
    direct = exp_series(2 * ctx2.embed(0, car.h_theta) * sig)
    assert f == direct
    # invertible and normalized
    assert (f * element_inverse(f)) == ctx2.one()


@pytest.mark.parametrize("spec", ["gl(1|1)", "osp(1|2)"])
def test_universal_r_is_triangular(spec):
    alg, chain, car, pname = stage_setup(spec)
    ctx2 = chain.context(2)
    f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
    r = universal_r(f)
    assert (super_flip(r, 0, 1) * r) == ctx2.one()


def test_hopf_u_is_invertible_and_gives_an_antipode():
    """S_F(x) = u S(x) u^-1 satisfies m(S_F (x) id)Delta_F(x) = 0 for
    generators (all of which have vanishing counit here)."""
    alg, chain, car, pname = stage_setup("osp(1|2)")
    ctx1 = chain.context(1)
    ctx2 = chain.context(2)
    f2 = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
    u = hopf_u(f2, ctx1)
    uinv = element_inverse(u)
    assert u * uinv == ctx1.one()

    def sf(g):
        return u * (-ctx1.embed_gen(0, g)) * uinv

    for g in range(len(alg.gens)):
        dfx = twisted_coproduct(f2, ctx1.embed_gen(0, g), ctx2)
        folded = transform(
            dfx, ctx1, [custom_map(sf, anti=True), leg_map(ctx1, 0)]
        )
        assert folded.is_zero()


def test_unpaired_lowering_root_twist_is_not_provided():
    alg = build_algebra("osp", 3, 2)
    chain = make_chain(alg)
    ctx2 = chain.context(2)
    st = chain.stages[0]
    assert st.carrier.extra is not None
    with pytest.raises(NotImplementedError):
        stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), st.carrier,
                    st.param_name)


def test_twist_is_one_at_zero_deformation():
    for spec in ("gl(1|1)", "sl(2|1)", "osp(1|2)"):
        alg, chain, car, pname = stage_setup(spec)
        ctx2 = chain.context(2)
        f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), car, pname)
        zero = chain.ring.zero_exps
        assert f.param_coefficient(zero) == ctx2.one().param_coefficient(zero)
