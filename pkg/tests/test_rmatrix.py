"""Classical r-matrices checked against an independent Schouten oracle.

The oracle below computes the three components of the Schouten bracket
[[r, r]] directly from the hand-derived closed formulas

    [r12, r13] = sum (-1)^(pd(pa+pb) + pa pc) [x_a, x_c] (x) x_b (x) x_d
    [r12, r23] = sum (-1)^(pa(pc+pd) + pb pd + pb pc) x_a (x) [x_b, x_c] (x) x_d
    [r13, r23] = sum (-1)^(pa(pc+pd) + pb pd) x_a (x) x_c (x) [x_b, x_d]

using nothing but the structure constants, so it shares no code paths with
the tensor-leg engine that the library uses for its own verification.  It
applies to even two-tensors (each term's coefficient parity equals the
parity of its element part), which covers all r-matrices here.
"""

import itertools
from fractions import Fraction

import pytest

from supertwist import (
    Context,
    Parameter,
    Scalar,
    ScalarRing,
    build_algebra,
    cobracket_kernel,
    kernel_closed_under_bracket,
    kernel_contains,
    make_chain,
    osp12_standard_basis,
    parse_algebra_spec,
)
from supertwist.rmatrix import _cybe_sum


def oracle_residual(alg, terms):
    """Schouten bracket of r = sum s * x_a (x) x_b given as (s, a, b) terms."""
    par = [g.parity for g in alg.gens]
    out = {}

    def acc(s, g1, g2, g3, sign):
        for exps, c in s.terms.items():
            key = (exps, (g1, g2, g3))
            out[key] = out.get(key, Fraction(0)) + sign * c
            if out[key] == 0:
                del out[key]

    for s1, a, b in terms:
        for s2, c, d in terms:
            pa, pb, pc, pd = par[a], par[b], par[c], par[d]
            # the second coefficient crosses the first element pair
            base = -1 if (s2.parity() and (pa + pb) % 2) else 1
            s = s1 * s2
            sign = base * (-1) ** ((pd * (pa + pb) + pa * pc) % 2)
            for g, v in alg.bracket(a, c).items():
                acc(v * s, g, b, d, sign)
            sign = base * (-1) ** ((pa * (pc + pd) + pb * pd + pb * pc) % 2)
            for g, v in alg.bracket(b, c).items():
                acc(v * s, a, g, d, sign)
            sign = base * (-1) ** ((pa * (pc + pd) + pb * pd) % 2)
            for g, v in alg.bracket(b, d).items():
                acc(v * s, a, c, g, sign)
    return out


def engine_residual(alg, ring, terms):
    """The same bracket computed by the tensor-leg engine, as a dict."""
    ctx3 = Context(alg, ring, 3, "formal")

    def place(la, lb):
        r = ctx3.zero()
        for s, a, b in terms:
            r = r + s * (ctx3.embed_gen(la, a) * ctx3.embed_gen(lb, b))
        return r

    res = _cybe_sum(ctx3, place(0, 1), place(0, 2), place(1, 2))
    out = {}
    for (exps, slots), c in res.terms.items():
        assert all(len(m) == 1 and m[0][1] == 1 for m in slots)
        out[(exps, tuple(m[0][0] for m in slots))] = c
    return out


def chain_terms(spec, upto=None):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg)
    r = chain.rmatrix(chain.context(2), upto=upto)
    terms = [
        (Scalar(chain.ring, {exps: c}), slots[0][0][0], slots[1][0][0])
        for (exps, slots), c in r.terms.items()
    ]
    return alg, chain.ring, terms


@pytest.mark.parametrize(
    "spec,upto",
    [
        ("gl(1|1)", 1),
        ("sl(2|1)", 1),
        ("sl(2|2)", 2),
        ("osp(1|2)", 1),
        ("osp(1|4)", 1),
        ("osp(1|4)", 2),
        ("osp(2|2)", 1),
    ],
)
def test_chain_rmatrices_solve_cybe_by_oracle(spec, upto):
    alg, ring, terms = chain_terms(spec, upto)
    oracle = oracle_residual(alg, terms)
    engine = engine_residual(alg, ring, terms)
    assert oracle == engine
    assert not oracle


def test_drinfeld_jimbo_residual_is_nonzero_and_matches_engine():
    alg = build_algebra("osp", 1, 2)
    basis = osp12_standard_basis(alg)
    ring = ScalarRing((Parameter("hbar"),), truncation=None)
    hb = ring.param("hbar")

    def single(elem):
        (g, c), = elem.items()
        return g, c

    ep, cep = single(basis["e+"])
    em, cem = single(basis["e-"])
    vp, cvp = single(basis["v+"])
    vm, cvm = single(basis["v-"])
    terms = [
        (hb * cep * cem, ep, em),
        (-hb * cep * cem, em, ep),
        (2 * hb * cvp * cvm, vp, vm),
        (2 * hb * cvp * cvm, vm, vp),
    ]
    oracle = oracle_residual(alg, terms)
    assert oracle  # the modified equation: nonzero invariant residual
    assert oracle == engine_residual(alg, ring, terms)


def test_oracle_detects_non_solutions():
    """Every even perturbation that breaks CYBE is flagged by both sides."""
    alg, ring, terms = chain_terms("osp(1|2)")
    broken = 0
    for ga, gb in itertools.product(range(len(alg.gens)), repeat=2):
        if (alg.gens[ga].parity + alg.gens[gb].parity) % 2:
            continue
        bad = terms + [(ring.param("xi1"), ga, gb)]
        oracle = oracle_residual(alg, bad)
        assert oracle == engine_residual(alg, ring, bad)
        if oracle:
            broken += 1
    assert broken >= 10


def test_carrier_shapes():
    chain = make_chain(build_algebra("gl", 2, 2))
    car = chain.stages[0].carrier
    assert len(car.pairs) == 2
    assert car.half is None
    assert all(p.t == Fraction(1, 2) for p in car.pairs)

    chain = make_chain(build_algebra("osp", 1, 2))
    car = chain.stages[0].carrier
    assert not car.pairs
    assert car.half is not None
    alg = chain.alg
    # e_theta = 4 x^2 normalization: [x, x] = e_theta / 2
    sq = alg.bracket_elems(car.half, car.half)
    assert sq == {g: v / 2 for g, v in car.e_theta.items()}


def test_cobracket_kernel_structure():
    alg = build_algebra("sl", 2, 2)
    chain = make_chain(alg)
    ctx2 = chain.context(2)
    kernel = cobracket_kernel(alg, chain.rmatrix(ctx2, upto=1))
    assert kernel_closed_under_bracket(alg, kernel)
    # the stage-2 carrier sits inside the stage-1 kernel
    car2 = chain.stages[1].carrier
    for elem in (car2.h_theta, car2.e_theta):
        assert kernel_contains(alg, kernel, elem)
    for p in car2.pairs:
        assert kernel_contains(alg, kernel, p.raising)
        assert kernel_contains(alg, kernel, p.lowering)
