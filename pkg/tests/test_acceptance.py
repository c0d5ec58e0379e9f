"""End-to-end acceptance suite.

Each test covers one acceptance criterion, runs the corresponding
verification suites, prints a single PASS/FAIL line for the criterion (plus
the individual identity lines), and fails with the offending reports when
any identity does not hold.
"""

from supertwist import failures
from supertwist.verify import (
    ACCEPTANCE_ALGEBRAS,
    CHAIN_TWIST_ALGEBRAS,
    CLOSED_FORM_CASES,
    ENGINE_ALGEBRAS,
    FOLDING_CASES,
    SINGLE_TWIST_ALGEBRAS,
    TRIVIALIZATION_ALGEBRAS,
    verify_closed_forms,
    verify_cybe,
    verify_engine,
    verify_foldings,
    verify_kernels,
    verify_odd_branch,
    verify_reduction,
    verify_special_rmatrices,
    verify_triangularity,
    verify_trivialization,
    verify_twist_axioms,
)


def settle(criterion, reports):
    bad = failures(reports)
    for r in reports:
        print(r.line())
    print("[%s] %s (%d identities)"
          % ("PASS" if not bad else "FAIL", criterion, len(reports)))
    assert not bad, "\n".join(r.line() for r in bad)


def test_criterion_1_classical_yang_baxter():
    reports = verify_special_rmatrices()
    for spec in ACCEPTANCE_ALGEBRAS:
        reports += verify_cybe(spec)
    settle("criterion 1: one-off r-matrices and every chain partial sum "
           "solve the (modified) classical Yang-Baxter equation", reports)


def test_criterion_2_cobracket_kernels():
    reports = []
    for spec in ACCEPTANCE_ALGEBRAS:
        reports += verify_kernels(spec)
    settle("criterion 2: cobracket kernels close, contain the next carrier "
           "and the named subalgebra at every chain stage", reports)


def test_criterion_3_reduction_chains():
    reports = verify_reduction("sl(2|2)", "gl(1|1)")
    reports += verify_reduction("osp(1|4)", "osp(1|2)")
    settle("criterion 3: reduction embeddings preserve brackets, ordering "
           "lines and chain data", reports)


def test_criterion_4_twist_cocycle_and_counit():
    reports = []
    for spec in SINGLE_TWIST_ALGEBRAS:
        reports += verify_twist_axioms(spec, upto=1)
    for spec in CHAIN_TWIST_ALGEBRAS:
        reports += verify_twist_axioms(spec)
    settle("criterion 4: single-stage and chained twists satisfy the "
           "cocycle and counit axioms", reports)


def test_criterion_5_closed_form_coproducts_and_antipodes():
    reports = []
    for spec, stage in CLOSED_FORM_CASES:
        reports += verify_closed_forms(spec, stage)
    settle("criterion 5: closed-form twisted coproducts and antipodes match "
           "first-principles conjugation term by term", reports)


def test_criterion_6_triangularity():
    reports = []
    for spec in SINGLE_TWIST_ALGEBRAS:
        reports += verify_triangularity(spec)
    settle("criterion 6: the universal R-matrix is triangular with first "
           "order equal to the stage r-matrix", reports)


def test_criterion_7_foldings_and_trivialization():
    reports = []
    for spec, stage in FOLDING_CASES:
        reports += verify_foldings(spec, stage)
    for spec in TRIVIALIZATION_ALGEBRAS:
        reports += verify_trivialization(spec)
    settle("criterion 7: folding identities, u u^-1 = 1, w^2 = u and the w "
           "trivialization of co-commuting subalgebras", reports)


def test_criterion_8_odd_parameter_branch():
    reports = verify_odd_branch()
    settle("criterion 8: the odd-parameter branch gives sigma = eta e / 2 "
           "exactly", reports)


def test_criterion_9_engine_properties():
    reports = []
    for spec in ENGINE_ALGEBRAS:
        reports += verify_engine(spec, seed=0)
    settle("criterion 9: exhaustive bracket identities, associative normal "
           "forms and seeded formal/matrix agreement", reports)
