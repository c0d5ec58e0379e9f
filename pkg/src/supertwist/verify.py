"""Verification suites for every identity the library constructs.

Each suite builds the relevant objects and checks an identity mechanically,
returning a list of VerificationReport records.  Nothing here is assumed:
twisted coproducts and antipodes are always recomputed from first principles
(conjugation by the twist, foldings of the twist) before being compared with
their closed forms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from .algebra import build_algebra, osp12_standard_basis, parse_algebra_spec
from .rmatrix import (
    _cybe_sum,
    chain_cybe_residual,
    cobracket_kernel,
    kernel_closed_under_bracket,
    kernel_contains,
    make_chain,
    residual_vanishes_by_squares,
    stage_rmatrix,
    wedge,
)
from .scalars import Parameter, ScalarRing
from .tensor import (
    Context,
    exp_series,
    leg_map,
    super_flip,
    to_matrix,
    transform,
    x_over_expm1,
)
from .twist import (
    VerificationReport,
    antipode,
    chain_twist,
    cocycle_residual,
    coproduct_emb,
    counit_emb,
    counit_residuals,
    element_inverse,
    extension_twist,
    hopf_u,
    jordanian_twist,
    leg_emb,
    pair_sign,
    sigma,
    stage_twist,
    super_factor,
    twisted_antipode_genmap,
    twisted_coproduct,
    universal_r,
    w_builder,
)

# The universal R-matrix of a twisted enveloping algebra starts at
# 1 + GLOBAL_R_SIGN * r + higher order; the sign is fixed once on the
# gl(1|1) Jordanian twist and asserted uniform across all stages.
GLOBAL_R_SIGN = Fraction(-1)

ACCEPTANCE_ALGEBRAS = (
    "gl(1|1)",
    "sl(2|1)",
    "sl(2|2)",
    "sl(3|1)",
    "osp(1|2)",
    "osp(1|4)",
    "osp(3|2)",
    "osp(2|2)",
)
SINGLE_TWIST_ALGEBRAS = ("gl(1|1)", "sl(2|1)", "osp(1|2)", "osp(1|4)")
CHAIN_TWIST_ALGEBRAS = ("sl(2|2)", "osp(1|4)")
CLOSED_FORM_CASES = (
    ("gl(1|1)", 1),
    ("sl(2|1)", 1),
    ("sl(2|2)", 1),
    ("sl(2|2)", 2),
    ("osp(1|2)", 1),
    ("osp(1|4)", 1),
    ("osp(1|4)", 2),
)
FOLDING_CASES = (
    ("gl(1|1)", 1),
    ("sl(2|1)", 1),
    ("sl(2|2)", 1),
    ("osp(1|2)", 1),
    ("osp(1|4)", 1),
)
TRIVIALIZATION_ALGEBRAS = ("sl(2|2)", "osp(1|4)")
ENGINE_ALGEBRAS = ACCEPTANCE_ALGEBRAS + ("gl(2|0)",)


def _report(identity, ok, backend="formal", order=4, detail=""):
    return VerificationReport(
        identity, backend, order, "pass" if ok else "fail", detail
    )


def carrier_elements(car):
    """All algebra elements a stage carrier is built from."""
    out = [car.h_theta, car.e_theta]
    for p in car.pairs:
        out.append(p.raising)
        out.append(p.lowering)
    if car.half is not None:
        out.append(car.half)
    if car.extra is not None:
        out.append(car.extra[1])
        out.append(car.extra[2])
    return out


# --------------------------------------------------------------------------
# classical Yang-Baxter suite


def verify_cybe(spec, truncation=4):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    reports = []
    for upto in range(1, len(chain.stages) + 1):
        name = "cybe %s stages 1..%d" % (alg.label, upto)
        res = chain_cybe_residual(chain, upto, backend="formal")
        reports.append(_report(name, res.is_zero(), "formal", truncation))
        res = chain_cybe_residual(chain, upto, backend="matrix")
        reports.append(_report(name, res.is_zero(), "matrix", None))
    if any(p.odd for p in chain.ring.params):
        sharp = make_chain(alg, truncation=truncation, odd_square_zero=False)
        res = chain_cybe_residual(sharp, backend="formal")
        reports.append(
            _report(
                "cybe %s odd parameters kept symbolic" % alg.label,
                residual_vanishes_by_squares(res),
                "formal",
                truncation,
                "every residual term carries an odd square",
            )
        )
    return reports


def special_rmatrices():
    """The small hand-written r-matrices outside the chain construction.

    Returns (name, algebra, ring, builder, kind) tuples where
    builder(ctx, legs) places the two-tensor into any pair of legs of ctx.
    kind is 'cybe' for skew solutions of the homogeneous equation and
    'mcybe' for the non-skew quasitriangular ones, whose residual is a
    nonzero invariant element (the modified equation).
    """
    cases = []

    gl11 = build_algebra("gl", 1, 1)
    e12 = gl11.gen_elem((1, -1))
    e21 = gl11.gen_elem((-1, 1))
    ring = ScalarRing((Parameter("hbar"),), truncation=None)

    def build_sym(ctx, legs=(0, 1)):
        la, lb = legs
        hbar = ctx.ring.param("hbar")
        return hbar * (
            ctx.embed(la, e12) * ctx.embed(lb, e21)
            + ctx.embed(la, e21) * ctx.embed(lb, e12)
        )

    cases.append(("gl(1|1) Drinfeld-Jimbo", gl11, ring, build_sym, "mcybe"))

    car = make_chain(gl11).stages[0].carrier

    def build_odd_jordanian(ctx, legs=(0, 1)):
        eta = ctx.ring.param("eta")
        return 2 * eta * wedge(ctx, car.h_theta, car.e_theta, legs)

    ring = ScalarRing((Parameter("eta", odd=True),), truncation=None)
    cases.append(("gl(1|1) odd Jordanian", gl11, ring, build_odd_jordanian,
                  "cybe"))

    osp12 = build_algebra("osp", 1, 2)
    basis = osp12_standard_basis(osp12)

    def build_even_extended(ctx, legs=(0, 1)):
        la, lb = legs
        hbar = ctx.ring.param("hbar")
        body = wedge(ctx, basis["e+"], basis["e-"], legs)
        body = body + 2 * (ctx.embed(la, basis["v+"]) * ctx.embed(lb, basis["v-"]))
        body = body + 2 * (ctx.embed(la, basis["v-"]) * ctx.embed(lb, basis["v+"]))
        return hbar * body

    ring = ScalarRing((Parameter("hbar"),), truncation=None)
    cases.append(("osp(1|2) Drinfeld-Jimbo", osp12, ring, build_even_extended,
                  "mcybe"))

    def build_even_jordanian(ctx, legs=(0, 1)):
        xi = ctx.ring.param("xi")
        return xi * wedge(ctx, basis["h"], basis["e+"], legs)

    ring = ScalarRing((Parameter("xi"),), truncation=None)
    cases.append(("osp(1|2) even Jordanian", osp12, ring,
                  build_even_jordanian, "cybe"))

    def build_h_vplus(ctx, legs=(0, 1)):
        eta = ctx.ring.param("eta")
        return eta * wedge(ctx, basis["h"], basis["v+"], legs)

    ring = ScalarRing((Parameter("eta", odd=True),), truncation=None)
    cases.append(("osp(1|2) odd Cartan pair", osp12, ring, build_h_vplus,
                  "cybe"))

    def build_vplus_eplus(ctx, legs=(0, 1)):
        eta = ctx.ring.param("eta")
        return eta * wedge(ctx, basis["v+"], basis["e+"], legs)

    ring = ScalarRing((Parameter("eta", odd=True),), truncation=None)
    cases.append(("osp(1|2) odd nilpotent pair", osp12, ring,
                  build_vplus_eplus, "cybe"))

    return cases


def _residual_is_invariant(alg, res, ctx3):
    for g in range(len(alg.gens)):
        dx = (ctx3.embed_gen(0, g) + ctx3.embed_gen(1, g)
              + ctx3.embed_gen(2, g))
        if not (dx * res - res * dx).is_zero():
            return False
    return True


def verify_special_rmatrices(truncation=4):
    reports = []
    for name, alg, ring, build, kind in special_rmatrices():
        for backend in ("formal", "matrix"):
            order = truncation if backend == "formal" else None
            ctx3 = Context(alg, ring.with_truncation(order), 3, backend)
            res = _cybe_sum(ctx3, build(ctx3, (0, 1)), build(ctx3, (0, 2)),
                            build(ctx3, (1, 2)))
            if kind == "cybe":
                reports.append(_report("cybe " + name, res.is_zero(),
                                       backend, order))
            else:
                ok = (not res.is_zero()
                      and _residual_is_invariant(alg, res, ctx3))
                reports.append(
                    _report("modified cybe " + name, ok, backend, order,
                            "nonzero invariant residual")
                )
        if any(p.odd for p in ring.params):
            sharp = ScalarRing(
                tuple(Parameter(p.name, p.odd, square_zero=False)
                      for p in ring.params),
                truncation,
            )
            ctx3 = Context(alg, sharp, 3, "formal")
            res = _cybe_sum(ctx3, build(ctx3, (0, 1)), build(ctx3, (0, 2)),
                            build(ctx3, (1, 2)))
            reports.append(
                _report(
                    "cybe %s odd parameter kept symbolic" % name,
                    residual_vanishes_by_squares(res),
                    "formal",
                    truncation,
                    "every residual term carries an odd square",
                )
            )
    return reports


# --------------------------------------------------------------------------
# cobracket kernels along the chain


def expected_kernel_generators(alg, stage):
    """Basis elements of the subalgebra the kernel must contain after the
    first ``stage`` chain stages, or None when no closed-form family is
    asserted for this algebra.
    """
    if alg.family in ("gl", "sl"):
        lo, hi = stage, alg.n_eps - stage
        if hi - lo < 1:
            return None
        elems = []
        for a in range(lo, hi):
            elems.append(alg.gen_elem("h%d" % (a + 1)))
            for b in range(lo, hi):
                if a == b:
                    continue
                coeffs = tuple(
                    1 if k == a else (-1 if k == b else 0)
                    for k in range(alg.n_eps)
                )
                elems.append(alg.gen_elem(coeffs))
        m, n = alg.shape
        return "gl(%d|%d) inner block" % (max(m - stage, 0), max(n - stage, 0)), elems
    if alg.family == "osp" and alg.shape[0] == 1:
        n = alg.n_eps
        if stage >= n:
            return None
        elems = [alg.gen_elem("h%d" % (a + 1)) for a in range(stage, n)]
        for gi, g in enumerate(alg.gens):
            if g.root is not None and not any(g.root.coeffs[:stage]):
                elems.append({gi: Fraction(1)})
        return "osp(1|%d) tail" % (2 * (n - stage)), elems
    return None


def verify_kernels(spec, truncation=4):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    ctx2 = chain.context(2)
    reports = []
    for i in range(1, len(chain.stages) + 1):
        r = chain.rmatrix(ctx2, upto=i)
        kernel = cobracket_kernel(alg, r)
        reports.append(
            _report(
                "cobracket kernel closed under bracket %s stages 1..%d"
                % (alg.label, i),
                kernel_closed_under_bracket(alg, kernel),
                "formal",
                truncation,
                "dim %d" % len(kernel),
            )
        )
        if i < len(chain.stages):
            car = chain.stages[i].carrier
            ok = all(
                kernel_contains(alg, kernel, e) for e in carrier_elements(car)
            )
            reports.append(
                _report(
                    "kernel contains the stage-%d carrier %s" % (i + 1, alg.label),
                    ok,
                    "formal",
                    truncation,
                )
            )
        hit = expected_kernel_generators(alg, i)
        if hit is not None:
            name, elems = hit
            ok = all(kernel_contains(alg, kernel, e) for e in elems)
            reports.append(
                _report(
                    "kernel contains %s after %s stages 1..%d" % (name, alg.label, i),
                    ok,
                    "formal",
                    truncation,
                )
            )
    return reports


# --------------------------------------------------------------------------
# reduction chains


def verify_reduction(big_spec, small_spec, stages_used=1):
    """The tail of the big algebra's chain is the small algebra's chain.

    Small generators map to big ones by shifting every epsilon index up by
    the number of used stages (with symmetric padding for the gl families,
    whose lines strip one index from each end).
    """
    big = parse_algebra_spec(big_spec)
    small = parse_algebra_spec(small_spec)
    s = stages_used
    pad_right = big.family in ("gl", "sl")
    reports = []

    def map_coeffs(coeffs):
        out = (0,) * s + coeffs
        return out + (0,) * s if pad_right else out

    gmap = {}
    defined = True
    for i, g in enumerate(small.gens):
        if g.kind == "cartan":
            target = big.name_to_gen.get("h%d" % (int(g.name[1:]) + s))
        else:
            target = big.root_to_gen.get(map_coeffs(g.root.coeffs))
        if target is None:
            defined = False
            break
        gmap[i] = target
    label = "%s -> %s" % (big.label, small.label)
    reports.append(_report("reduction generator map defined " + label, defined,
                           "exact", None))
    if not defined:
        return reports

    ok = True
    for i in range(len(small.gens)):
        for j in range(len(small.gens)):
            mapped = {gmap[k]: v for k, v in small.bracket(i, j).items()}
            if mapped != big.bracket(gmap[i], gmap[j]):
                ok = False
    reports.append(
        _report("reduction map preserves all brackets " + label, ok, "exact", None)
    )

    big_lines = big.normal_ordering().lines[s:]
    small_lines = small.normal_ordering().lines
    ok = len(big_lines) == len(small_lines)
    if ok:
        for bl, sl in zip(big_lines, small_lines):
            if bl.theta.coeffs != map_coeffs(sl.theta.coeffs):
                ok = False
            if [r.coeffs for r in bl.roots] != [map_coeffs(r.coeffs)
                                                for r in sl.roots]:
                ok = False
    reports.append(
        _report("later ordering lines restrict to the subalgebra " + label, ok,
                "exact", None)
    )

    big_chain = make_chain(big)
    small_chain = make_chain(small)
    ok = True
    for bst, sst in zip(big_chain.stages[s:], small_chain.stages):
        bc, sc = bst.carrier, sst.carrier
        if len(bc.pairs) != len(sc.pairs):
            ok = False
            continue
        for bp, sp in zip(bc.pairs, sc.pairs):
            if (bp.t, bp.parity, bp.parity_lowering) != (
                sp.t, sp.parity, sp.parity_lowering
            ):
                ok = False
        if (bc.half is None) != (sc.half is None):
            ok = False
        if bc.theta.parity != sc.theta.parity:
            ok = False
    reports.append(
        _report("later chain stages equal the subalgebra chain " + label, ok,
                "exact", None)
    )
    return reports


# --------------------------------------------------------------------------
# twist axioms


def verify_twist_axioms(spec, upto=None, stage=None, truncation=4,
                        backends=("formal", "matrix"), sign_mode="raise"):
    """Cocycle and counit residuals of a chain twist (stages 1..upto) or of
    the standalone twist of one stage."""
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    if stage is not None:
        st = chain.stages[stage - 1]
        label = "%s stage %d" % (alg.label, stage)

        def build(ctx, emb_a, emb_b):
            return stage_twist(ctx, emb_a, emb_b, st.carrier, st.param_name,
                               sign_mode)
    else:
        if upto is None:
            upto = len(chain.stages)
        label = "%s stages 1..%d" % (alg.label, upto)

        def build(ctx, emb_a, emb_b):
            return chain_twist(ctx, chain, emb_a, emb_b, upto, sign_mode)

    reports = []
    for backend in backends:
        ring = chain.ring if backend == "formal" else \
            chain.ring.with_truncation(None)
        order = truncation if backend == "formal" else None
        res = cocycle_residual(alg, ring, build, backend)
        reports.append(_report("twist cocycle " + label, res.is_zero(),
                               backend, order))
        left, right = counit_residuals(alg, ring, build, backend)
        reports.append(
            _report("twist counit " + label,
                    left.is_zero() and right.is_zero(), backend, order)
        )
    return reports


# --------------------------------------------------------------------------
# closed-form coproducts and antipodes


def verify_closed_forms(spec, stage=1, truncation=4, sign_mode="raise"):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    st = chain.stages[stage - 1]
    car, pname = st.carrier, st.param_name
    ring = chain.ring
    label = "%s stage %d" % (alg.label, stage)

    ctx1 = Context(alg, ring, 1)
    ctx2 = Context(alg, ring, 2)
    e0, e1 = leg_emb(ctx2, 0), leg_emb(ctx2, 1)
    emb1 = leg_emb(ctx1, 0)
    xi = ring.param(pname)
    odd_stage = bool(car.theta.parity)

    f = stage_twist(ctx2, e0, e1, car, pname, sign_mode)
    finv = element_inverse(f)
    sa = sigma(ctx2, e0, car, pname)
    sb = sigma(ctx2, e1, car, pname)
    s1 = sigma(ctx1, emb1, car, pname)
    E = exp_series

    def dxi(elem1):
        return twisted_coproduct(f, elem1, ctx2, finv)

    reports = []

    def rep(name, ok, detail=""):
        reports.append(_report("%s %s" % (name, label), ok, "formal",
                               truncation, detail))

    # the exponential and product presentations of the extension factor
    arg = ctx2.zero()
    for p in car.pairs:
        arg = arg + pair_sign(p, sign_mode) * (
            xi * (e0(p.raising) * (e1(p.lowering) * E(Fraction(-2) * p.t * sb)))
        )
    single = E(arg) * super_factor(ctx2, e0, e1, car, pname)
    rep("extension twist product and exponential forms agree",
        single == extension_twist(ctx2, e0, e1, car, pname, sign_mode))

    # group-like behaviour of exp(+-2 sigma)
    g = ctx1.one() + xi * ctx1.embed(0, car.e_theta)
    rep("twisted coproduct group-like on exp(2s)",
        dxi(g) == E(2 * sa) * E(2 * sb))
    rep("twisted coproduct group-like on exp(-2s)",
        dxi(element_inverse(g)) == E(-2 * sa) * E(-2 * sb))

    if car.half is not None:
        x2 = {k: 2 * v for k, v in car.half.items()}
        rhs = ctx2.embed(0, x2) + E(sa) * ctx2.embed(1, x2)
        rep("twisted coproduct of the half-root vector",
            dxi(ctx1.embed(0, x2)) == rhs)

    rhs = ctx2.embed(0, car.h_theta) * E(-2 * sb) + ctx2.embed(1, car.h_theta)
    if car.half is not None:
        qa = (2 * e0(car.half)) * E(-sa)
        qb = (2 * e1(car.half)) * E(-2 * sb)
        rhs = rhs + Fraction(1, 4) * (xi * (qa * qb))
    for p in car.pairs:
        rhs = rhs - pair_sign(p, sign_mode) * (
            xi * (e0(p.raising) * (e1(p.lowering) * E(-2 * (p.t + 1) * sb)))
        )
    rep("twisted coproduct of h", dxi(ctx1.embed(0, car.h_theta)) == rhs)

    for k, p in enumerate(car.pairs, start=1):
        rhs = e0(p.raising) * E(-2 * p.t * sb) + e1(p.raising)
        rep("twisted coproduct of raising vector %d" % k,
            dxi(ctx1.embed(0, p.raising)) == rhs)
        gfac = E(-2 * sa) if odd_stage else E(2 * sa)
        rhs = e0(p.lowering) * E(2 * p.t * sb) + gfac * e1(p.lowering)
        rep("twisted coproduct of lowering vector %d" % k,
            dxi(ctx1.embed(0, p.lowering)) == rhs,
            "inverted group-like factor" if odd_stage else "")

    # antipode side, conjugation by u = sum f1 S(f2)
    u = hopf_u(f, ctx1)
    uinv = element_inverse(u)

    def sxi(elem1):
        return u * antipode(elem1, ctx1) * uinv

    g = ctx1.one() + xi * ctx1.embed(0, car.e_theta)
    rep("twisted antipode group-like on exp(2s)", sxi(g) == E(-2 * s1))

    if car.half is not None:
        x2 = {k: 2 * v for k, v in car.half.items()}
        rep("twisted antipode of the half-root vector",
            sxi(ctx1.embed(0, x2)) == -(ctx1.embed(0, x2) * E(-s1)))

    rhs = -(ctx1.embed(0, car.h_theta) * E(2 * s1))
    quarter = Fraction(1, 4) * (E(2 * s1) - ctx1.one())
    if car.half is not None:
        rhs = rhs + quarter
    for p in car.pairs:
        rhs = rhs - pair_sign(p, sign_mode) * (
            xi * (emb1(p.raising) * emb1(p.lowering))
        )
    lhs_h = sxi(ctx1.embed(0, car.h_theta))
    rep("twisted antipode of h", lhs_h == rhs)
    if car.half is None:
        rep("antipode scalar term must be removed without a half root",
            lhs_h != rhs + quarter)

    for k, p in enumerate(car.pairs, start=1):
        rep("twisted antipode of raising vector %d" % k,
            sxi(ctx1.embed(0, p.raising))
            == -(emb1(p.raising) * E(2 * p.t * s1)))
        kk = Fraction(2) - 2 * p.t if odd_stage else Fraction(-2) * (p.t + 1)
        rep("twisted antipode of lowering vector %d" % k,
            sxi(ctx1.embed(0, p.lowering))
            == -(emb1(p.lowering) * E(kk * s1)),
            "inverted group-like factor" if odd_stage else "")

    # Hopf antipode axiom on the twisted structure: the multiplication of
    # S_xi applied to the first coproduct leg against the second leg must
    # return the counit, which vanishes on every carrier generator.
    spec_s = ("anti", lambda gi: u * (-ctx1.embed_gen(0, gi)) * uinv)
    spec_h = ("hom", lambda gi: ctx1.embed_gen(0, gi))
    ok = True
    for x in carrier_elements(car):
        res = transform(dxi(ctx1.embed(0, x)), ctx1, [spec_s, spec_h])
        if not res.is_zero():
            ok = False
    rep("antipode axiom on carrier generators", ok)

    return reports


# --------------------------------------------------------------------------
# triangularity


def verify_triangularity(spec, stage=1, truncation=4, sign_mode="raise"):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    st = chain.stages[stage - 1]
    ctx2 = chain.context(2)
    label = "%s stage %d" % (alg.label, stage)
    f = stage_twist(ctx2, leg_emb(ctx2, 0), leg_emb(ctx2, 1), st.carrier,
                    st.param_name, sign_mode)
    r_univ = universal_r(f)
    reports = [
        _report("universal R triangular " + label,
                super_flip(r_univ, 0, 1) * r_univ == ctx2.one(),
                "formal", truncation)
    ]
    r_cl = stage_rmatrix(ctx2, st.carrier, st.param_name, st.extra_param_name)
    first = (r_univ - ctx2.one() - GLOBAL_R_SIGN * r_cl).truncate(1)
    reports.append(
        _report("universal R first order equals the classical r-matrix "
                + label, first.is_zero(), "formal", truncation,
                "global sign %+d" % GLOBAL_R_SIGN)
    )
    return reports


# --------------------------------------------------------------------------
# foldings of the extension factor


def _folding_product_form(ctx1, emb1, car, xi, sign_mode):
    out = ctx1.one()
    for p in car.pairs:
        s = pair_sign(p, sign_mode)
        term = ctx1.one()
        n = 1
        while not (xi ** n).is_zero():
            coeff = (Fraction(-1) ** n) * (s ** n) / factorial(n)
            term = term + coeff * (
                (xi ** n) * (emb1(p.raising) ** n * emb1(p.lowering) ** n)
            )
            n += 1
        out = out * term
    return out


def verify_foldings(spec, stage=1, truncation=4, sign_mode="raise"):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    st = chain.stages[stage - 1]
    car, pname = st.carrier, st.param_name
    ring = chain.ring
    label = "%s stage %d" % (alg.label, stage)

    ctx1 = Context(alg, ring, 1)
    ctx2 = Context(alg, ring, 2)
    e0, e1 = leg_emb(ctx2, 0), leg_emb(ctx2, 1)
    emb1 = leg_emb(ctx1, 0)
    xi = ring.param(pname)
    s1 = sigma(ctx1, emb1, car, pname)

    fn = extension_twist(ctx2, e0, e1, car, pname, sign_mode)
    reports = []

    def rep(name, ok, detail=""):
        reports.append(_report("%s %s" % (name, label), ok, "formal",
                               truncation, detail))

    # defining fold with the twisted antipode on the first leg
    u1 = transform(fn, ctx1,
                   [twisted_antipode_genmap(ctx1, car, pname, sign_mode),
                    leg_map(ctx1, 0)])

    # the same antipode from first principles (conjugation by the Hopf u
    # of the full stage twist) must give the same fold
    f_full = stage_twist(ctx2, e0, e1, car, pname, sign_mode)
    uf = hopf_u(f_full, ctx1)
    ufinv = element_inverse(uf)
    spec_sxi = ("anti", lambda gi: uf * (-ctx1.embed_gen(0, gi)) * ufinv)
    u1p = transform(fn, ctx1, [spec_sxi, leg_map(ctx1, 0)])
    rep("fold via first-principles twisted antipode", u1 == u1p)

    # second defining fold: Jordanian-twisted antipode on the second leg
    fj = jordanian_twist(ctx2, e0, e1, car, pname)
    uj = hopf_u(fj, ctx1)
    ujinv = element_inverse(uj)
    spec_sj = ("anti", lambda gi: uj * (-ctx1.embed_gen(0, gi)) * ujinv)
    u2 = transform(fn, ctx1, [leg_map(ctx1, 0), spec_sj])
    rep("two defining folds agree", u1 == u2)

    body = ctx1.zero()
    for p in car.pairs:
        body = body + pair_sign(p, sign_mode) * (
            emb1(p.raising) * emb1(p.lowering)
        )
    u_s = exp_series(Fraction(1, 2) * s1) if car.half is not None else ctx1.one()
    u_s_inv = element_inverse(u_s)

    uexp = exp_series(-((xi * x_over_expm1(2 * s1)) * body)) * u_s
    rep("fold equals the exponential closed form", u1 == uexp)

    uprod = _folding_product_form(ctx1, emb1, car, xi, sign_mode) * u_s
    rep("fold equals the product closed form", u1 == uprod)

    if any(p.parity and not p.parity_lowering for p in car.pairs):
        other = _folding_product_form(ctx1, emb1, car, xi, "product") * u_s
        rep("parity-product sign reading rejected by the fold", u1 != other,
            "only the raising-parity sign matches")

    uinv_closed = exp_series((xi * x_over_expm1(2 * s1)) * body) * u_s_inv
    rep("closed-form inverse of the fold",
        u1 * uinv_closed == ctx1.one() and uinv_closed * u1 == ctx1.one())

    w = w_builder(ctx1, emb1, car, pname, sign_mode)
    winv = w_builder(ctx1, emb1, car, pname, sign_mode, power=-1)
    rep("square root of the fold squares back", w * w == u1)
    rep("square root times its inverse", w * winv == ctx1.one())

    return reports


# --------------------------------------------------------------------------
# trivializing automorphism


def verify_trivialization(spec, truncation=3, sign_mode="raise"):
    alg = parse_algebra_spec(spec)
    chain = make_chain(alg, truncation=truncation)
    st = chain.stages[0]
    car, pname = st.carrier, st.param_name
    ring = chain.ring
    label = "%s stage 1" % alg.label

    ctx1 = Context(alg, ring, 1)
    ctx2 = Context(alg, ring, 2)
    e0, e1 = leg_emb(ctx2, 0), leg_emb(ctx2, 1)
    emb1 = leg_emb(ctx1, 0)

    r = stage_rmatrix(ctx2, car, pname, st.extra_param_name)
    kernel = cobracket_kernel(alg, r)
    f = stage_twist(ctx2, e0, e1, car, pname, sign_mode)
    finv = element_inverse(f)

    # The theta vector co-commutes with the r-matrix but no inner
    # automorphism can make its twisted coproduct primitive when the
    # parameter is even: the group-like relation adds a term quadratic in
    # the theta vector, and w itself commutes with it.  With an odd
    # parameter the quadratic term dies with the parameter square, so the
    # whole kernel is trivialized.  The subalgebra carrying the later
    # chain stages never contains the theta vector, so the automorphism
    # still applies to every element the chain construction uses.
    odd_stage = bool(car.theta.parity)
    if odd_stage:
        targets = kernel
        target_note = "full kernel, dim %d" % len(kernel)
    else:
        _, targets = expected_kernel_generators(alg, 1)
        target_note = "kernel minus the theta direction, %d elements" % \
            len(targets)

    w = w_builder(ctx1, emb1, car, pname, sign_mode)
    winv = w_builder(ctx1, emb1, car, pname, sign_mode, power=-1)
    dw = w_builder(ctx2, coproduct_emb(ctx2, 0, 1), car, pname, sign_mode)
    w2inv = (
        w_builder(ctx2, leg_emb(ctx2, 0), car, pname, sign_mode, power=-1)
        * w_builder(ctx2, leg_emb(ctx2, 1), car, pname, sign_mode, power=-1)
    )

    reports = []

    def rep(name, ok, detail=""):
        reports.append(_report("%s %s" % (name, label), ok, "formal",
                               truncation, detail))

    rep("w is 1 at order zero",
        (w - ctx1.one()).param_coefficient(ring.zero_exps).is_zero())
    wz = w_builder(ctx1, counit_emb(ctx1), car, pname, sign_mode)
    rep("counit of w is 1", wz == ctx1.one())

    t = w2inv * (f * dw)
    ok = True
    for x in targets:
        dx = ctx2.embed(0, x) + ctx2.embed(1, x)
        if not (dx * t - t * dx).is_zero():
            ok = False
    rep("dressed twist commutes with kernel coproducts", ok, target_note)

    ok = True
    for x in targets:
        y = w * ctx1.embed(0, x) * winv
        lhs = twisted_coproduct(f, y, ctx2, finv)
        rhs = transform(y, ctx2, [leg_map(ctx2, 0)]) + \
            transform(y, ctx2, [leg_map(ctx2, 1)])
        if lhs != rhs:
            ok = False
    rep("conjugation by w makes kernel coproducts primitive", ok, target_note)

    if not odd_stage:
        xi = ring.param(pname)
        et1 = ctx1.embed(0, car.e_theta)
        lhs = twisted_coproduct(f, et1, ctx2, finv)
        rhs = (ctx2.embed(0, car.e_theta) + ctx2.embed(1, car.e_theta)
               + xi * (ctx2.embed(0, car.e_theta)
                       * ctx2.embed(1, car.e_theta)))
        y = w * et1 * winv
        rep("theta direction obstruction is the group-like correction",
            lhs == rhs and y == et1,
            "excluded from the trivialized subalgebra")

    return reports


# --------------------------------------------------------------------------
# odd parameter branch


def verify_odd_branch():
    alg = build_algebra("gl", 1, 1)
    chain = make_chain(alg, truncation=None)
    st = chain.stages[0]
    ctx1 = chain.context(1)
    emb1 = leg_emb(ctx1, 0)
    eta = chain.ring.param(st.param_name)
    lhs = sigma(ctx1, emb1, st.carrier, st.param_name)
    rhs = Fraction(1, 2) * (eta * ctx1.embed(0, st.carrier.e_theta))
    return [
        _report("odd Jordanian sigma is linear in the parameter gl(1|1)",
                lhs == rhs, "formal", None, "no truncation")
    ]


# --------------------------------------------------------------------------
# engine properties


def verify_engine(spec, seed=0, samples=100):
    alg = parse_algebra_spec(spec)
    rng = random.Random("%s:%d" % (spec, seed))
    ng = len(alg.gens)
    reports = []

    ok = True
    for i in range(ng):
        for j in range(ng):
            sign = -1 if (alg.gens[i].parity and alg.gens[j].parity) else 1
            back = {k: -sign * v for k, v in alg.bracket(j, i).items()}
            if alg.bracket(i, j) != back:
                ok = False
    reports.append(_report("super antisymmetry exhaustive %s" % alg.label, ok,
                           "exact", None, "%d pairs" % (ng * ng)))

    ok = True
    for i in range(ng):
        xi = {i: Fraction(1)}
        pi = alg.gens[i].parity
        for j in range(ng):
            xj = {j: Fraction(1)}
            pj = alg.gens[j].parity
            koszul = Fraction(-1 if (pi and pj) else 1)
            for k in range(ng):
                xk = {k: Fraction(1)}
                lhs = alg.bracket_elems(xi, alg.bracket(j, k))
                rhs = alg.bracket_elems(alg.bracket(i, j), xk)
                for g, v in alg.bracket_elems(xj, alg.bracket(i, k)).items():
                    rhs[g] = rhs.get(g, Fraction(0)) + koszul * v
                if lhs != {g: v for g, v in rhs.items() if v}:
                    ok = False
    reports.append(_report("super Jacobi exhaustive %s" % alg.label, ok,
                           "exact", None, "%d triples" % (ng ** 3)))

    ring = ScalarRing((), truncation=None)
    ctx1 = Context(alg, ring, 1)

    def rand_program(legs, nfactors):
        return [
            (rng.choice(legs), rng.randrange(ng),
             Fraction(rng.choice([1, -1]) * rng.randint(1, 3),
                      rng.randint(1, 3)))
            for _ in range(nfactors)
        ]

    def eval_program(ctx, prog):
        out = ctx.one()
        for leg, g, c in prog:
            out = out * (c * ctx.embed_gen(leg, g))
        return out

    ok = True
    for _ in range(30):
        a, b, c = (eval_program(ctx1, rand_program([0], rng.randint(1, 3)))
                   for _ in range(3))
        if (a * b) * c != a * (b * c):
            ok = False
    reports.append(_report("normal-form multiplication associative %s"
                           % alg.label, ok, "formal", None,
                           "30 random triples"))

    ctxf = Context(alg, ring, 2, "formal")
    ctxm = Context(alg, ring, 2, "matrix")
    ok = True
    for _ in range(samples):
        prog = rand_program([0, 1], rng.randint(2, 5))
        pf = eval_program(ctxf, prog)
        if to_matrix(pf, ctxm) != eval_program(ctxm, prog):
            ok = False
    reports.append(_report("formal and matrix products agree %s" % alg.label,
                           ok, "both", None, "%d random products" % samples))
    return reports


# --------------------------------------------------------------------------
# everything


def run_all(seed=0, truncation=4):
    reports = []
    reports += verify_special_rmatrices(truncation)
    for spec in ACCEPTANCE_ALGEBRAS:
        reports += verify_cybe(spec, truncation)
        reports += verify_kernels(spec, truncation)
    reports += verify_reduction("sl(2|2)", "gl(1|1)")
    reports += verify_reduction("osp(1|4)", "osp(1|2)")
    for spec in SINGLE_TWIST_ALGEBRAS:
        reports += verify_twist_axioms(spec, upto=1, truncation=truncation)
    for spec in CHAIN_TWIST_ALGEBRAS:
        reports += verify_twist_axioms(spec, truncation=truncation)
    for spec, stage in CLOSED_FORM_CASES:
        reports += verify_closed_forms(spec, stage, truncation)
    for spec in SINGLE_TWIST_ALGEBRAS:
        reports += verify_triangularity(spec, 1, truncation)
    for spec, stage in FOLDING_CASES:
        reports += verify_foldings(spec, stage, truncation)
    for spec in TRIVIALIZATION_ALGEBRAS:
        reports += verify_trivialization(spec)
    reports += verify_odd_branch()
    for spec in ENGINE_ALGEBRAS:
        reports += verify_engine(spec, seed=seed)
    return reports


def failures(reports):
    return [r for r in reports if r.status != "pass"]
