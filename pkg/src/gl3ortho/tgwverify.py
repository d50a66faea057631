"""Twisted generalized Weyl algebra structure on A^alpha.

Coefficient ring: polynomials in E11, E22, E33 (kept as three free variables,
so identities checked there hold for every alpha).  Shifts::

    sigma1: (E11, E22, E33) -> (E11 - 1, E22 + 1, E33)
    sigma2: (E11, E22, E33) -> (E11, E22 - 1, E33 + 1)

with ``t1 = E22 (E11 + 1)``, ``t2 = E33 (E22 + 1)``, ``X = (E12, E23)`` and
``Y = (E21, E32)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exactcore import Poly, RationalMatrix
from .gl3rep import GENERATORS, build_symmetric_model
from .quotient import (
    E,
    EnvelopeElement,
    E_NAMES,
    hc_polynomial,
    omega_element,
    realize,
)

SIGMA_SHIFTS = {1: (-1, 1, 0), 2: (0, -1, 1)}


def _var(i: int) -> Poly:
    return Poly.var(i, E_NAMES)


def sigma(i: int, f: Poly, power: int = 1) -> Poly:
    """``sigma_i^power`` applied to f as an affine substitution."""
    return f.shift(tuple(power * s for s in SIGMA_SHIFTS[i]))


@dataclass(frozen=True)
class TGWData:
    alpha: object
    t: dict
    X: dict
    Y: dict

    def sigma(self, i: int, f: Poly, power: int = 1) -> Poly:
        return sigma(i, f, power)


def tgw_data(alpha=None) -> TGWData:
    e11, e22, e33 = (_var(i) for i in range(3))
    return TGWData(
        alpha=alpha,
        t={1: e22 * (e11 + 1), 2: e33 * (e22 + 1)},
        X={1: (1, 2), 2: (2, 3)},
        Y={1: (2, 1), 2: (3, 2)},
    )


def cartan_envelope(f: Poly) -> EnvelopeElement:
    """Polynomial in E11, E22, E33 as a combination of Cartan words."""
    out = EnvelopeElement()
    for exps, c in f.coeffs.items():
        letters = [(i + 1, i + 1) for i, k in enumerate(exps) for _ in range(k)]
        out = out + EnvelopeElement.word(*letters, coeff=c)
    return out


def verify_consistency(alpha=None) -> dict:
    """``t1 t2 = sigma1^-1(t2) sigma2^-1(t1)`` and the symmetric one, in the free ring."""
    data = tgw_data(alpha)
    t1, t2 = data.t[1], data.t[2]
    checks = [
        {
            "name": "t1*t2 = s1^-1(t2) * s2^-1(t1)",
            "pass": t1 * t2 == sigma(1, t2, -1) * sigma(2, t1, -1),
        },
        {
            "name": "t2*t1 = s2^-1(t1) * s1^-1(t2)",
            "pass": t2 * t1 == sigma(2, t1, -1) * sigma(1, t2, -1),
        },
        {
            "name": "sigma1 sigma2 = sigma2 sigma1",
            "pass": all(
                sigma(1, sigma(2, _var(i))) == sigma(2, sigma(1, _var(i))) for i in range(3)
            ),
        },
        {
            "name": "sigma fixes E11+E22+E33",
            "pass": all(
                sigma(i, _var(0) + _var(1) + _var(2)) == _var(0) + _var(1) + _var(2)
                for i in (1, 2)
            ),
        },
    ]
    return {"name": "tgw_consistency", "checks": checks, "pass": all(c["pass"] for c in checks)}


def relation_pairs() -> list[tuple[str, EnvelopeElement, EnvelopeElement]]:
    """All five relation families as (name, lhs, rhs) in U(gl3)."""
    data = tgw_data()
    out = []
    for i in (1, 2):
        x, y = E(*data.X[i]), E(*data.Y[i])
        for r in range(3):
            ri = _var(r)
            out.append((
                f"X{i}*{E_NAMES[r]} = sigma{i}({E_NAMES[r]})*X{i}",
                x * cartan_envelope(ri),
                cartan_envelope(sigma(i, ri)) * x,
            ))
            out.append((
                f"Y{i}*{E_NAMES[r]} = sigma{i}^-1({E_NAMES[r]})*Y{i}",
                y * cartan_envelope(ri),
                cartan_envelope(sigma(i, ri, -1)) * y,
            ))
    out.append(("X1*Y2 = Y2*X1", E(1, 2) * E(3, 2), E(3, 2) * E(1, 2)))
    out.append(("X2*Y1 = Y1*X2", E(2, 3) * E(2, 1), E(2, 1) * E(2, 3)))
    for i in (1, 2):
        x, y = E(*data.X[i]), E(*data.Y[i])
        out.append((f"Y{i}*X{i} = t{i}", y * x, cartan_envelope(data.t[i])))
        out.append((f"X{i}*Y{i} = sigma{i}(t{i})", x * y, cartan_envelope(sigma(i, data.t[i]))))
    return out


def verify_relations(alpha: int) -> dict:
    """Every relation as an exact matrix identity on S^alpha(V)."""
    rep = build_symmetric_model(alpha)
    checks = []
    for name, lhs, rhs in relation_pairs():
        diff = realize(lhs, rep) - realize(rhs, rep)
        witness = None
        if not diff.is_zero():
            r, c, v = next(iter(diff.items()))
            witness = {"row": r, "col": c, "value": str(v)}
        checks.append({"name": name, "pass": witness is None, "witness": witness})
    return {
        "name": "tgw_relations",
        "alpha": alpha,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def words_up_to(length: int):
    for n in range(length + 1):
        yield from product(GENERATORS, repeat=n)


def generic_certificate(max_word: int = 2) -> dict:
    """Trace pairings of each relation defect against all short words.

    ``hc_polynomial((lhs - rhs) * omega(w))`` must vanish identically in alpha
    for every word ``w`` of length <= ``max_word``; the interpolant is also
    validated at two extra sample points.
    """
    checks = []
    words = [EnvelopeElement.word(*w) for w in words_up_to(max_word)]
    for name, lhs, rhs in relation_pairs():
        defect = lhs - rhs
        bad = None
        for w in words:
            poly = hc_polynomial(defect * omega_element(w), validate=True)
            if poly:
                bad = {"word": repr(w), "polynomial": repr(poly)}
                break
        checks.append({"name": name, "pass": bad is None, "witness": bad})
    return {
        "name": "tgw_generic_certificate",
        "words": len(words),
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def relation_matrix(name: str, alpha: int) -> RationalMatrix:
    """Defect matrix of one named relation (zero when it holds)."""
    rep = build_symmetric_model(alpha)
    for n, lhs, rhs in relation_pairs():
        if n == name:
            return realize(lhs, rep) - realize(rhs, rep)
    raise KeyError(name)
