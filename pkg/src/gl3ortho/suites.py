"""Named verification suites; each returns a list of check dicts.

A check is ``{"name": str, "pass": bool, "witness": object | None}``.
"""

from __future__ import annotations

import random
from math import comb

from .exactcore import det_and_rank
from .gl3rep import (
    build_gt_model,
    build_symmetric_model,
    check_commutation,
    vacuum_vectors,
    weight_check,
)
from .orthopoly.casimir import casimir_eigencheck, difference_apply_2var, gt_correspondence_check
from .orthopoly.family1 import difference_apply_1var, eigenvalue_1var, f1_via_ad, plus_support_size
from .orthopoly.family2 import f2_via_ad
from .quotient import (
    EnvelopeElement,
    adjoint_decomposition,
    component_side,
    graded_operator_basis,
    gram_matrix,
    invariant_form,
    normalized_trace,
    omega_element,
    omega_operator,
    realize,
    words_up_to,
)
from .tgwverify import generic_certificate, verify_consistency, verify_relations

TEST_WEIGHTS = ((0, 0, 0), (1, -1, 0), (1, 0, -1), (2, -1, -1))


def check(name: str, ok: bool, witness=None) -> dict:
    return {"name": name, "pass": bool(ok), "witness": None if ok else witness}


def commutators(alpha: int) -> list[dict]:
    rep = build_symmetric_model(alpha)
    report = check_commutation(rep)
    bad_weights = weight_check(rep)
    return [
        check(f"commutators S^{alpha}", report["pass"], {"failures": report["failures"]}),
        check(f"weights S^{alpha}", not bad_weights, {"violations": len(bad_weights)}),
    ]


def gt_commutators(lam) -> list[dict]:
    rep = build_gt_model(lam)
    report = check_commutation(rep)
    return [check(f"commutators GT{tuple(lam)}", report["pass"], {"failures": report["failures"]})]


def irreducible(alpha: int) -> list[dict]:
    dim = len(vacuum_vectors(build_symmetric_model(alpha)))
    return [check(f"vacuum dimension S^{alpha}", dim == 1, {"dimension": dim})]


def decompose(alpha: int) -> list[dict]:
    mult = adjoint_decomposition(alpha, alpha + 1)
    expected = [1] * (alpha + 1) + [0]
    dims = sum((k + 1) ** 3 for k in range(alpha + 1)) == comb(alpha + 2, 2) ** 2
    return [
        check(f"adjoint multiplicities alpha={alpha}", mult == expected, {"multiplicities": mult}),
        check(f"dimension count alpha={alpha}", dims),
    ]


def tgw(alpha: int, generic: bool = False) -> list[dict]:
    out = [
        check(c["name"], c["pass"]) for c in verify_consistency(alpha)["checks"]
    ]
    out += [check(c["name"], c["pass"], c["witness"]) for c in verify_relations(alpha)["checks"]]
    if generic:
        cert = generic_certificate()
        out += [check("generic " + c["name"], c["pass"], c["witness"]) for c in cert["checks"]]
    return out


def _random_word(rng: random.Random, max_len: int) -> EnvelopeElement:
    gens = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    n = rng.randint(0, max_len)
    return EnvelopeElement.word(*(rng.choice(gens) for _ in range(n)), coeff=rng.randint(1, 3))


def form_properties(alpha: int, samples: int = 20, seed: int = 0) -> list[dict]:
    """Symmetry, contravariance, vanishing on commutators, omega-compatibility."""
    rng = random.Random(seed)
    rep = build_symmetric_model(alpha)
    results = {
        "symmetric": True, "left contravariant": True, "right contravariant": True,
        "ad contravariant": True, "trace kills commutators": True,
        "trace omega invariant": True, "omega matches on words": True,
    }
    for _ in range(samples):
        x, u, v = (_random_word(rng, 3) for _ in range(3))
        X, U, V = (realize(e, rep) for e in (x, u, v))
        wX = realize(omega_element(x), rep)
        f = lambda a, b: invariant_form(a, b, alpha)
        results["symmetric"] &= f(U, V) == f(V, U)
        results["left contravariant"] &= f(X @ U, V) == f(U, wX @ V)
        results["right contravariant"] &= f(U @ X, V) == f(U, V @ wX)
        results["ad contravariant"] &= f(X @ U - U @ X, V) == f(U, wX @ V - V @ wX)
        results["trace kills commutators"] &= normalized_trace(U @ V - V @ U) == 0
        results["trace omega invariant"] &= normalized_trace(omega_operator(U, alpha)) == normalized_trace(U)
        results["omega matches on words"] &= omega_operator(U, alpha) == realize(omega_element(u), rep)
    return [check(f"{name} alpha={alpha}", ok) for name, ok in results.items()]


def nondegeneracy(alpha: int) -> list[dict]:
    mats = [el.realize(alpha) for _, _, el in graded_operator_basis(alpha)]
    det, rank = det_and_rank(gram_matrix(mats, alpha))
    size = len(mats)
    return [
        check(f"basis size alpha={alpha}", size == comb(alpha + 2, 2) ** 2, {"size": size}),
        check(f"gram determinant nonzero alpha={alpha}", det != 0, {"rank": rank, "size": size}),
    ]


def difference(alpha: int, kmax: int = 4) -> list[dict]:
    out = []
    for nu in TEST_WEIGHTS:
        for k in range(kmax + 1):
            if plus_support_size(nu, alpha) < k + 1:
                continue
            f = f1_via_ad(k, nu, alpha)
            _, lam = difference_apply_1var(f, nu, alpha)
            out.append(check(
                f"one-variable eigenvalue nu={nu} k={k}",
                lam == eigenvalue_1var(k, nu),
                {"measured": str(lam), "expected": eigenvalue_1var(k, nu)},
            ))
    for nu in TEST_WEIGHTS:
        for l in range(3):
            for k in range(3 - l):
                if component_side(alpha, nu) < l + k:
                    continue
                f = f2_via_ad(l, k, nu, alpha)
                rep = difference_apply_2var(f, l, k, nu, alpha)
                out.append(check(
                    f"two-variable oracle nu={nu} l={l} k={k}", rep["pass"], rep["oracle"]
                ))
    return out


def casimir(alpha: int, maxdeg: int = 2) -> list[dict]:
    out = []
    for nu in TEST_WEIGHTS:
        for l in range(maxdeg + 1):
            for k in range(maxdeg + 1 - l):
                if component_side(alpha, nu) < l + k:
                    continue
                rep = casimir_eigencheck(l, k, nu, alpha)
                out.append(check(f"casimir nu={nu} l={l} k={k}", rep["pass"], {
                    "omega2": str(rep["omega2"]), "omega3": str(rep["omega3"]),
                    "expected": [rep["diagram_omega2"], rep["diagram_omega3"]],
                }))
                gt = gt_correspondence_check(l, k, nu, alpha)
                out.append(check(f"gt vector nu={nu} l={l} k={k}", gt["pass"], {
                    "diagram": gt["diagram"],
                }))
    return out


SUITES = {
    "commutators": commutators,
    "irreducible": irreducible,
    "decompose": decompose,
    "tgw": tgw,
    "form": form_properties,
    "nondegeneracy": nondegeneracy,
    "difference": difference,
    "casimir": casimir,
}
