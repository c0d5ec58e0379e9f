"""Command line front end.

Subcommands inspect root systems, verify classical r-matrices and their
cobracket kernels, and check the twisted Hopf structures.  Every command
prints one line per verified identity (or a JSON document with --json) and
exits 0 when all checks pass, 1 when any check fails, and 2 on usage errors
such as an unsupported algebra.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import UnsupportedAlgebra, parse_algebra_spec
from .rmatrix import (
    _cybe_sum,
    chain_cybe_residual,
    make_chain,
    residual_vanishes_by_squares,
)
from .scalars import Parameter, ScalarRing
from .tensor import Context
from .twist import VerificationReport
from .verify import (
    failures,
    run_all,
    special_rmatrices,
    verify_kernels,
    verify_reduction,
    verify_twist_axioms,
)


class UsageError(Exception):
    pass


def _backends(choice):
    if choice == "both":
        return ("formal", "matrix")
    return (choice,)


def _emit(reports, args, extra=None):
    """Print reports, return the process exit code."""
    bad = failures(reports)
    if args.json:
        doc = {
            "reports": [
                {
                    "identity": r.identity,
                    "backend": r.backend,
                    "truncation_order": r.truncation_order,
                    "status": r.status,
                    "detail": r.detail,
                }
                for r in reports
            ],
            "failures": len(bad),
        }
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        print("%d checks, %d failures" % (len(reports), len(bad)))
    return 1 if bad else 0


def _parse_algebra(text):
    try:
        return parse_algebra_spec(text)
    except (UnsupportedAlgebra, ValueError) as exc:
        raise UsageError(str(exc))


# --------------------------------------------------------------------------
# roots


def _carrier_doc(alg, stage):
    car = stage.carrier
    doc = {
        "stage": stage.index,
        "parameter": stage.param_name,
        "theta": car.theta.label,
        "h_theta": alg.elem_str(car.h_theta),
        "e_theta": alg.elem_str(car.e_theta),
        "pairs": [
            {
                "raising": alg.elem_str(p.raising),
                "lowering": alg.elem_str(p.lowering),
                "t": str(p.t),
                "parity": p.parity,
            }
            for p in car.pairs
        ],
        "half_root": car.half_root.label if car.half_root else None,
        "dropped": [r.label for r in car.dropped],
    }
    if car.extra is not None:
        doc["extra_jordanian"] = {
            "root": car.extra[0].label,
            "parameter": stage.extra_param_name,
        }
    return doc


def cmd_roots(args):
    alg = _parse_algebra(args.algebra)
    chain = make_chain(alg, truncation=args.order)
    if args.json:
        doc = {
            "algebra": alg.label,
            "generators": len(alg.gens),
            "positive_roots": [
                {"root": r.label, "parity": r.parity}
                for r in alg.positive_roots()
            ],
            "normal_ordering": [
                {
                    "theta": line.theta.label,
                    "roots": [r.label for r in line.roots],
                    "extra": line.extra.label if line.extra else None,
                }
                for line in alg.normal_ordering().lines
            ],
            "carriers": [_carrier_doc(alg, st) for st in chain.stages],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    print("%s: %d generators" % (alg.label, len(alg.gens)))
    print("positive roots:")
    for r in alg.positive_roots():
        print("  %s  (%s)" % (r.label, "odd" if r.parity else "even"))
    print("normal ordering:")
    for i, line in enumerate(alg.normal_ordering().lines, start=1):
        extra = "  [extra: %s]" % line.extra.label if line.extra else ""
        print("  line %d: theta = %s; %s%s"
              % (i, line.theta.label,
                 ", ".join(r.label for r in line.roots), extra))
    for st in chain.stages:
        car = st.carrier
        print("carrier %d (parameter %s): theta = %s"
              % (st.index, st.param_name, car.theta.label))
        print("  h_theta = %s" % alg.elem_str(car.h_theta))
        print("  e_theta = %s" % alg.elem_str(car.e_theta))
        for p in car.pairs:
            print("  pair: %s / %s  t = %s%s"
                  % (alg.elem_str(p.raising), alg.elem_str(p.lowering),
                     p.t, "  (odd)" if p.parity else ""))
        if car.half is not None:
            print("  half root %s: %s"
                  % (car.half_root.label, alg.elem_str(car.half)))
        if car.extra is not None:
            print("  extra Jordanian on %s (parameter %s)"
                  % (car.extra[0].label, st.extra_param_name))
        if car.dropped:
            print("  dropped roots: %s"
                  % ", ".join(r.label for r in car.dropped))
    return 0


# --------------------------------------------------------------------------
# r-matrices


def _cybe_reports(alg, backends, order, square_zero):
    chain = make_chain(alg, truncation=order, odd_square_zero=square_zero)
    reports = []
    has_odd = any(p.odd for p in chain.ring.params)
    for upto in range(1, len(chain.stages) + 1):
        name = "cybe %s stages 1..%d" % (alg.label, upto)
        for backend in backends:
            k = order if backend == "formal" else None
            res = chain_cybe_residual(chain, upto, backend=backend)
            if square_zero or not has_odd:
                ok, detail = res.is_zero(), ""
            else:
                ok = residual_vanishes_by_squares(res)
                detail = "odd squares kept symbolic"
            reports.append(
                VerificationReport(name, backend, k,
                                   "pass" if ok else "fail", detail)
            )
    return reports


def _special_reports(alg, backends, order, square_zero):
    reports = []
    for name, salg, ring, build, kind in special_rmatrices():
        if salg.label != alg.label:
            continue
        if not any(p.odd for p in ring.params):
            continue
        if not square_zero:
            ring = ScalarRing(
                tuple(Parameter(p.name, p.odd, square_zero=False)
                      for p in ring.params),
                order,
            )
        for backend in backends:
            k = order if backend == "formal" else None
            ctx3 = Context(salg, ring.with_truncation(k), 3, backend)
            res = _cybe_sum(ctx3, build(ctx3, (0, 1)), build(ctx3, (0, 2)),
                            build(ctx3, (1, 2)))
            if square_zero:
                ok, detail = res.is_zero(), ""
            else:
                ok = residual_vanishes_by_squares(res)
                detail = "odd squares kept symbolic"
            reports.append(
                VerificationReport("cybe " + name, backend, k,
                                   "pass" if ok else "fail", detail)
            )
    return reports


def cmd_rmatrix(args):
    alg = _parse_algebra(args.algebra)
    backends = _backends(args.backend)
    square_zero = not args.clifford
    reports = _cybe_reports(alg, backends, args.order, square_zero)
    if args.jordanian_odd:
        extra = _special_reports(alg, backends, args.order, square_zero)
        if not extra:
            raise UsageError(
                "no odd-parameter one-off r-matrices are defined for %s"
                % alg.label
            )
        reports += extra
    return _emit(reports, args, {"algebra": alg.label})


# --------------------------------------------------------------------------
# chains


def _reduction_target(alg):
    m, n = alg.shape
    if alg.family in ("gl", "sl") and m >= 1 and n >= 1:
        small = "gl(%d|%d)" % (m - 1, n - 1)
    elif alg.family == "osp" and m == 1 and n >= 4:
        small = "osp(1|%d)" % (n - 2)
    else:
        return None
    if not make_chain(parse_algebra_spec(small)).stages:
        return None
    return small


def cmd_chain(args):
    alg = _parse_algebra(args.algebra)
    backends = _backends(args.backend)
    reports = _cybe_reports(alg, backends, args.order, not args.clifford)
    reports += verify_kernels(args.algebra, truncation=args.order)
    small = _reduction_target(alg)
    if small is not None:
        reports += verify_reduction(args.algebra, small)
    return _emit(reports, args, {"algebra": alg.label})


# --------------------------------------------------------------------------
# twists


def cmd_twist(args):
    alg = _parse_algebra(args.algebra)
    chain = make_chain(alg)
    nstages = len(chain.stages)
    if not nstages:
        raise UsageError("%s has no twist stages" % alg.label)
    if args.stage is not None and not 1 <= args.stage <= nstages:
        raise UsageError(
            "%s has stages 1..%d, got --stage %d"
            % (alg.label, nstages, args.stage)
        )
    try:
        reports = verify_twist_axioms(
            args.algebra,
            stage=args.stage,
            truncation=args.order,
            backends=_backends(args.backend),
        )
    except NotImplementedError as exc:
        raise UsageError(str(exc))
    return _emit(reports, args, {"algebra": alg.label})


# --------------------------------------------------------------------------
# selftest


def cmd_selftest(args):
    reports = run_all(seed=args.seed, truncation=args.order)
    return _emit(reports, args)


# --------------------------------------------------------------------------
# parser


def _add_common(p, algebra=True):
    if algebra:
        p.add_argument("algebra", help="algebra spec such as gl(1|1) or osp(1|4)")
    p.add_argument("-K", "--order", type=int, default=4, metavar="K",
                   help="parameter truncation order for the formal backend")
    p.add_argument("--json", action="store_true",
                   help="emit a JSON report instead of text lines")


def _add_backend(p):
    p.add_argument("--backend", choices=("formal", "matrix", "both"),
                   default="both")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--grassmann", dest="clifford", action="store_false",
                      help="odd parameters square to zero (default)")
    mode.add_argument("--clifford", dest="clifford", action="store_true",
                      help="keep odd parameter squares symbolic")
    p.set_defaults(clifford=False)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="supertwist",
        description="Jordanian r-matrices and twists for Lie superalgebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root system, normal ordering, carriers")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("rmatrix",
                       help="verify the classical Yang-Baxter equation")
    _add_common(p)
    _add_backend(p)
    p.add_argument("--jordanian-odd", action="store_true",
                   help="also verify the odd-parameter one-off r-matrices")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("chain",
                       help="verify the full chain: CYBE, kernels, reduction")
    _add_common(p)
    _add_backend(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("twist", help="verify twist cocycle and counit axioms")
    _add_common(p)
    _add_backend(p)
    p.add_argument("--stage", type=int, default=None,
                   help="verify one stage's standalone twist instead of the chain")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("selftest", help="run every verification suite")
    _add_common(p, algebra=False)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized engine checks")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
