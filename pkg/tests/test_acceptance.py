"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run alone with ``pytest -m acceptance -s``; the lines are also collected in
the terminal summary.
"""

import time
from collections import Counter
from math import comb

import pytest

from gl3ortho import suites
from gl3ortho.exactcore import lagrange_interpolate
from gl3ortho.gl3rep import (
    build_gt_model,
    build_symmetric_model,
    check_commutation,
    vacuum_vectors,
)
from gl3ortho.orthopoly.casimir import (
    casimir_eigencheck,
    difference_apply_2var,
    erratum_table,
    gt_correspondence_check,
)
from gl3ortho.orthopoly.family1 import (
    RESOLVED_LOWER_SHAPE,
    closed_form_ratio,
    difference_apply_1var,
    eigenvalue_1var,
    f1_via_ad,
    form_plus,
    gram_schmidt_plus,
    plus_support_size,
    proportionality,
    resolve_lower_parameters,
)
from gl3ortho.orthopoly.family2 import (
    WEYL_GROUP,
    f2_via_ad,
    family2,
    form_full,
    leading_exponent,
    leading_exponent_h1_e33,
    weyl_transport,
)
from gl3ortho.quotient import (
    EnvelopeElement,
    adjoint_decomposition,
    component_side,
    normalized_trace,
    realize,
    words_up_to,
)
from gl3ortho.tgwverify import generic_certificate, verify_consistency, verify_relations

pytestmark = pytest.mark.acceptance

WEIGHTS = suites.TEST_WEIGHTS
ALPHAS_1VAR = range(5, 9)
ALPHAS_2VAR = (6, 7, 8)


def dominant_weights(top=5, bottom=-2):
    return [
        (a, b, c)
        for a in range(bottom, top + 1)
        for b in range(bottom, a + 1)
        for c in range(bottom, b + 1)
    ]


def family2_indices(maxdeg):
    return [(l, k) for l in range(maxdeg + 1) for k in range(maxdeg + 1 - l)]


def test_commutation(criterion):
    t0 = time.perf_counter()
    sym_ok = all(check_commutation(build_symmetric_model(a))["pass"] for a in range(9))
    lams = dominant_weights()
    gt_ok = all(check_commutation(build_gt_model(lam))["pass"] for lam in lams)
    elapsed = time.perf_counter() - t0
    ok = sym_ok and gt_ok and len(lams) >= 30 and elapsed < 60
    criterion("commutation suite", ok, f"{len(lams)} GT modules, {elapsed:.1f}s")
    assert ok


def test_model_agreement(criterion):
    words = [EnvelopeElement.word(*w) for w in words_up_to(3)]
    bad = []
    for alpha in range(7):
        sym, gt = build_symmetric_model(alpha), build_gt_model((alpha, 0, 0))
        if sym.dim != gt.dim or Counter(sym.weights) != Counter(gt.weights):
            bad.append((alpha, "shape"))
            continue
        for w in words:
            if normalized_trace(realize(w, sym)) != normalized_trace(realize(w, gt)):
                bad.append((alpha, repr(w)))
                break
    criterion("model agreement", not bad, f"{len(words)} words, failures {bad}")
    assert not bad


def test_irreducibility(criterion):
    dims = [len(vacuum_vectors(build_symmetric_model(a))) for a in range(9)]
    ok = dims == [1] * 9
    criterion("irreducibility", ok, f"vacuum dimensions {dims}")
    assert ok


def test_nondegeneracy(criterion):
    t0 = time.perf_counter()
    checks = [c for a in (1, 2, 3) for c in suites.nondegeneracy(a)]
    elapsed = time.perf_counter() - t0
    ok = all(c["pass"] for c in checks) and elapsed < 120
    criterion("nondegeneracy", ok, f"sizes 9, 36, 100 in {elapsed:.1f}s")
    assert ok


def test_decomposition(criterion):
    mults = {a: adjoint_decomposition(a, a + 2) for a in range(6)}
    mult_ok = all(m == [1] * (a + 1) + [0, 0] for a, m in mults.items())
    ident_ok = all(
        sum((k + 1) ** 3 for k in range(a + 1)) == comb(a + 2, 2) ** 2 for a in range(9)
    )
    ok = mult_ok and ident_ok
    criterion("decomposition", ok, f"multiplicities {mults[5]} at alpha=5")
    assert ok


def test_tgw(criterion):
    consistency = verify_consistency()["pass"]
    relations = all(verify_relations(a)["pass"] for a in range(7))
    cert = generic_certificate()
    ok = consistency and relations and cert["pass"]
    criterion("TGW relations", ok, f"generic certificate over {cert['words']} words")
    assert ok


def test_orthogonality(criterion):
    failures, skipped = [], []
    for nu in WEIGHTS:
        for alpha in ALPHAS_1VAR:
            kmax = min(4, plus_support_size(nu, alpha) - 1)
            skipped += [(nu, alpha, k) for k in range(kmax + 1, 5)]
            fs = [f1_via_ad(k, nu, alpha) for k in range(kmax + 1)]
            for k in range(kmax + 1):
                for m in range(k):
                    if form_plus(fs[k], fs[m], nu, alpha) != 0:
                        failures.append(("orth", nu, alpha, k, m))
            gs = gram_schmidt_plus(nu, alpha, kmax)
            for k in range(kmax + 1):
                if proportionality(fs[k], gs.polys[k]) is None:
                    failures.append(("gram-schmidt", nu, alpha, k))
    criterion("orthogonality", not failures, f"skipped for support: {skipped}; failures {failures}")
    assert not failures


def test_difference_equation(criterion):
    failures = []
    for nu in WEIGHTS:
        for alpha in ALPHAS_1VAR:
            ks = [k for k in range(5) if plus_support_size(nu, alpha) >= k + 1]
            lams = {}
            for k in ks:
                f = f1_via_ad(k, nu, alpha)
                lf, lam = difference_apply_1var(f, nu, alpha)
                lams[k] = lam
                if lf != f * lam or lam != eigenvalue_1var(k, nu):
                    failures.append((nu, alpha, k, lam))
            fit = lagrange_interpolate(sorted(lams.items()), name="k")
            if fit.degree() > 2 or fit.eval(0) != 0:
                failures.append((nu, alpha, "not quadratic through 0"))
    criterion("difference equation", not failures, f"failures {failures}")
    assert not failures


def test_closed_form(criterion):
    grid = [
        (k, nu, alpha)
        for nu in WEIGHTS
        for alpha in ALPHAS_1VAR
        for k in range(4)
        if plus_support_size(nu, alpha) >= k + 1
    ]
    failures = [g for g in grid if not closed_form_ratio(*g)]
    survivors = resolve_lower_parameters([g for g in grid if g[0] > 0])
    ok = not failures and survivors == [RESOLVED_LOWER_SHAPE]
    criterion("closed form", ok, f"{len(grid)} cases, resolver survivors {survivors}")
    assert ok


# --- two-variable family -----------------------------------------------------------


def _two_var_members(maxdeg=3):
    for alpha in ALPHAS_2VAR:
        for nu in WEIGHTS:
            for l, k in family2_indices(min(maxdeg, component_side(alpha, nu))):
                yield l, k, nu, alpha


def test_two_variable_leading_monomial_literal(criterion):
    # H1^l H2^k as the lex-leading term in (H1, H2)
    bad = [
        (l, k, nu, alpha, leading_exponent(f2_via_ad(l, k, nu, alpha)))
        for l, k, nu, alpha in _two_var_members()
        if leading_exponent(f2_via_ad(l, k, nu, alpha)) != (l, k)
    ]
    criterion("two-variable leading monomial H1^l H2^k", not bad, f"{len(bad)} mismatches, e.g. {bad[:2]}")
    assert not bad


def test_two_variable_leading_monomial_h1_e33(criterion):
    bad = [
        (l, k, nu, alpha)
        for l, k, nu, alpha in _two_var_members()
        if leading_exponent_h1_e33(f2_via_ad(l, k, nu, alpha), alpha) != (l, k)
    ]
    criterion("two-variable leading monomial H1^l E33^k", not bad, f"mismatches {bad}")
    assert not bad


def test_two_variable_orthogonality(criterion):
    bad = []
    for alpha in ALPHAS_2VAR:
        for nu in WEIGHTS:
            fam = family2(nu, alpha, min(3, component_side(alpha, nu)))
            keys = fam.indices()
            for i, a in enumerate(keys):
                for b in keys[:i]:
                    if form_full(fam.polys[a], fam.polys[b], nu, alpha) != 0:
                        bad.append((nu, alpha, a, b))
    criterion("two-variable orthogonality", not bad, f"failures {bad}")
    assert not bad


def _casimir_reports():
    return [casimir_eigencheck(l, k, nu, alpha) for l, k, nu, alpha in _two_var_members(2)]


def test_two_variable_casimir_diagram(criterion):
    bad = [r["params"] for r in _casimir_reports() if not r["pass"]]
    criterion("two-variable Casimir eigenvalues from the GT diagram", not bad, f"failures {bad}")
    assert not bad


def test_two_variable_casimir_displayed(criterion):
    reports = _casimir_reports()
    omega3_bad = [r["params"] for r in reports if r["omega3"] != r["displayed_omega3"]]
    omega2_bad = sorted({
        (tuple(r["params"]["nu"]), int(r["omega2"] - r["displayed_omega2"]))
        for r in reports if r["omega2"] != r["displayed_omega2"]
    })
    ok = not omega3_bad and not omega2_bad
    detail = f"Omega3 mismatches {len(omega3_bad)}; Omega2 defect by nu {omega2_bad}"
    criterion("two-variable Casimir eigenvalues from the displayed closed formulas", ok, detail)
    assert ok


def test_two_variable_gt_correspondence(criterion):
    bad = []
    for l, k, nu, alpha in _two_var_members(2):
        rep = gt_correspondence_check(l, k, nu, alpha)
        if not rep["pass"]:
            bad.append(rep["params"])
    criterion("two-variable GT correspondence", not bad, f"failures {bad}")
    assert not bad


def test_two_variable_weyl_transport(criterion):
    bad = []
    alpha = 6
    for nu in WEIGHTS:
        fam = family2(nu, alpha, min(2, component_side(alpha, nu)))
        for w in WEYL_GROUP:
            out = weyl_transport(w, fam)
            keys = out.indices()
            for i, a in enumerate(keys):
                for b in keys[:i]:
                    if form_full(out.polys[a], out.polys[b], out.nu, alpha) != 0:
                        bad.append((nu, w.perm, a, b))
    criterion("two-variable Weyl transport", not bad, f"failures {bad}")
    assert not bad


def test_two_variable_difference_reconciliation(criterion, capsys):
    cases = list(_two_var_members(2))
    oracle_bad = [
        (l, k, nu, alpha)
        for l, k, nu, alpha in cases
        if not difference_apply_2var(f2_via_ad(l, k, nu, alpha), l, k, nu, alpha)["pass"]
    ]
    table = erratum_table([c for c in cases if c[3] == ALPHAS_2VAR[0]])
    holds = Counter((r["equation"], r["reading"], r["holds"]) for r in table)
    with capsys.disabled():
        print("\nerratum table (alpha=6): l k nu equation reading holds lhs/f rhs/f")
        for r in table:
            print(
                f"  {r['l']} {r['k']} {tuple(r['nu'])} {r['equation']:6} {r['reading']:3} "
                f"{r['holds']!s:5} {r['lhs_multiple']} {r['rhs_multiple']}"
            )
    criterion(
        "two-variable difference equations (operator oracle)",
        not oracle_bad,
        f"displayed formulas: {dict(holds)}",
    )
    assert not oracle_bad


@pytest.mark.runs_last
def test_suite_runtime(criterion, session_elapsed):
    elapsed = session_elapsed()
    ok = elapsed < 600
    criterion("suite wall-clock under 10 minutes", ok, f"{elapsed:.1f}s")
    assert ok
