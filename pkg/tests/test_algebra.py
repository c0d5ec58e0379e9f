"""Superalgebra construction: dimensions, root data, bracket identities."""

from fractions import Fraction

import pytest

from supertwist import (
    UnsupportedAlgebra,
    build_algebra,
    make_chain,
    osp12_standard_basis,
    parse_algebra_spec,
    remove_short_roots,
)


CASES = {
    # label -> (generators, positive roots, chain stages)
    "gl(1|1)": (4, 1, 1),
    "gl(2|2)": (16, 6, 2),
    "sl(3|1)": (16, 6, 2),
    "osp(1|2)": (5, 2, 1),
    "osp(1|4)": (14, 6, 2),
    "osp(3|2)": (12, 5, 1),
    "osp(2|2)": (8, 3, 1),
}


@pytest.mark.parametrize("spec", sorted(CASES))
def test_dimensions(spec):
    alg = parse_algebra_spec(spec)
    ngens, nroots, nstages = CASES[spec]
    assert alg.label == spec
    assert len(alg.gens) == ngens
    assert len(alg.positive_roots()) == nroots
    assert len(make_chain(alg).stages) == nstages


def test_parse_rejects_unknown():
    with pytest.raises((UnsupportedAlgebra, ValueError)):
        parse_algebra_spec("e8")
    with pytest.raises((UnsupportedAlgebra, ValueError)):
        parse_algebra_spec("osp(1|3)")


@pytest.mark.parametrize("spec", ["gl(1|1)", "osp(1|2)", "osp(2|2)"])
def test_bracket_super_identities(spec):
    alg = parse_algebra_spec(spec)
    ng = len(alg.gens)
    for i in range(ng):
        pi = alg.gens[i].parity
        for j in range(ng):
            pj = alg.gens[j].parity
            sign = -1 if (pi and pj) else 1
            assert alg.bracket(i, j) == {
                k: -sign * v for k, v in alg.bracket(j, i).items()
            }
            for k in range(ng):
                lhs = alg.bracket_elems({i: Fraction(1)}, alg.bracket(j, k))
                rhs = alg.bracket_elems(alg.bracket(i, j), {k: Fraction(1)})
                koszul = Fraction(-1 if (pi and pj) else 1)
                for g, v in alg.bracket_elems(
                    {j: Fraction(1)}, alg.bracket(i, k)
                ).items():
                    rhs[g] = rhs.get(g, Fraction(0)) + koszul * v
                assert lhs == {g: v for g, v in rhs.items() if v}


@pytest.mark.parametrize("spec", ["gl(2|1)", "osp(1|4)"])
def test_roots_are_ad_eigenvectors(spec):
    alg = parse_algebra_spec(spec)
    for gi, g in enumerate(alg.gens):
        if g.root is None:
            continue
        for hi, h in enumerate(alg.gens):
            if h.kind != "cartan":
                continue
            got = alg.bracket(hi, gi)
            expect = alg.weight_on({hi: Fraction(1)}, g.root)
            assert got == ({gi: expect} if expect else {})


def test_osp12_basis_relations():
    alg = build_algebra("osp", 1, 2)
    b = osp12_standard_basis(alg)
    br = alg.bracket_elems

    def eq(x, y):
        out = dict(x)
        for g, v in y.items():
            out[g] = out.get(g, Fraction(0)) - v
        return not {g: v for g, v in out.items() if v}

    def scale(x, c):
        return {g: Fraction(c) * v for g, v in x.items()}

    assert eq(br(b["h"], b["e+"]), b["e+"])
    assert eq(br(b["h"], b["e-"]), scale(b["e-"], -1))
    assert eq(br(b["h"], b["v+"]), scale(b["v+"], Fraction(1, 2)))
    assert eq(br(b["h"], b["v-"]), scale(b["v-"], Fraction(-1, 2)))
    assert eq(br(b["v+"], b["v+"]), scale(b["e+"], Fraction(1, 2)))
    assert eq(br(b["e+"], b["e-"]), scale(b["h"], 2))
    assert alg.elem_parity(b["v+"]) == 1
    assert alg.elem_parity(b["e+"]) == 0


def test_short_root_removal_gives_d_family():
    big = build_algebra("osp", 3, 2)
    small = remove_short_roots(big)
    assert small.label == "osp(2|2)"
    assert len(small.gens) == 8
    # brackets of surviving generators are literally unchanged
    names = {g.name: i for i, g in enumerate(big.gens)}
    for i, gi in enumerate(small.gens):
        for j, gj in enumerate(small.gens):
            got = {small.gens[k].name: v for k, v in small.bracket(i, j).items()}
            want = {
                big.gens[k].name: v
                for k, v in big.bracket(names[gi.name], names[gj.name]).items()
            }
            assert got == want


def test_normal_ordering_pairs_sum_to_theta():
    for spec in ("gl(2|2)", "osp(1|4)", "osp(3|2)"):
        alg = parse_algebra_spec(spec)
        chain = make_chain(alg)
        for st in chain.stages:
            car = st.carrier
            for p in car.pairs:
                raise_root = alg.gens[next(iter(p.raising))].root
                lower_root = alg.gens[next(iter(p.lowering))].root
                summed = tuple(
                    a + b for a, b in zip(raise_root.coeffs, lower_root.coeffs)
                )
                assert summed == car.theta.coeffs
