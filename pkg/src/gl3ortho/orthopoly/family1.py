"""One-variable families ``f_{k,nu}(E33)`` inside the E12-commutant."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..errors import (
    DegenerateForm,
    InsufficientSupport,
    NotCyclic,
    NotEigenfunction,
    PoleBeforeTermination,
    UnsupportedAlpha,
)
from ..exactcore import ONE, ZERO, Poly, Q, RationalMatrix, lagrange_interpolate
from ..gl3rep import monomial_basis
from ..quotient import (
    THETA,
    AlgebraElement,
    ad_action,
    generic_form,
    invariant_form,
    shift_support,
    u_nu_plus,
    z_element,
)
from .hypergeom import hahn_params, hyper3f2_poly

T_NAMES = ("E33",)


def _t():
    return Poly.var(0, T_NAMES)


def _is_integer(alpha) -> bool:
    return Q(alpha).denominator == 1 and Q(alpha) >= 0


def _add(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# extraction


def plus_support_size(nu, alpha: int) -> int:
    """Number of distinct E33 values among targets of ``u_nu^+`` on S^alpha."""
    return max(0, alpha - sum(max(0, x) for x in nu) + 1)


def extract_poly1(m: RationalMatrix, nu, alpha: int, degree: int | None = None) -> Poly:
    """Recover ``f`` from ``m = f(E33) u_nu^+`` by sampling at target weights.

    Every nonzero entry of ``m`` must sit on the support of ``u_nu^+`` and the
    ratios must depend on the target's E33 value only.  With ``degree`` given,
    at least ``degree + 1`` distinct sample points are required.
    """
    u = u_nu_plus(nu)
    basis = monomial_basis(alpha)
    support = shift_support(u, alpha)
    positions = {(row, col) for col, row, _ in support}
    for r, c, _ in m.items():
        if (r, c) not in positions:
            raise NotCyclic(f"entry ({r},{c}) outside the support of {u.describe()}")
    values: dict[int, Fraction] = {}
    for col, row, coeff in support:
        t = basis[row][2]
        v = m.get(row, col) / coeff
        if t in values and values[t] != v:
            raise NotCyclic(f"two values at E33={t}: {values[t]} and {v}")
        values[t] = v
    if degree is not None and len(values) < degree + 1:
        raise InsufficientSupport(
            f"{len(values)} sample points cannot fix degree {degree}; "
            f"need alpha >= {degree + sum(max(0, x) for x in nu)}"
        )
    return lagrange_interpolate(sorted(values.items()), name="E33")


# ---------------------------------------------------------------------------
# constructions


def uses_z31(nu) -> bool:
    """Branch choice: z31 when nu(E33) <= 0 (ties go here), else z23."""
    return nu[2] <= 0


def _start_weight(k: int, nu) -> tuple:
    if uses_z31(nu):
        return _add(nu, THETA, k)
    return _add(nu, (0, -1, 1), k)


@lru_cache(maxsize=None)
def _ad_operator(k: int, nu: tuple, alpha: int) -> RationalMatrix:
    z = z_element("z31" if uses_z31(nu) else "z23")
    m = AlgebraElement(Poly.const(1, T_NAMES), u_nu_plus(_start_weight(k, nu))).realize(alpha)
    for _ in range(k):
        m = ad_action(z, m, alpha)
    return m


def f1_operator(k: int, nu, alpha: int) -> RationalMatrix:
    """The k-fold ad image itself (may be the zero operator)."""
    return _ad_operator(k, tuple(nu), int(Q(alpha)))


def f1_via_ad(k: int, nu, alpha) -> Poly:
    """``f_{k,nu}`` by k-fold ad z31 (or z23) and extraction; raw normalization."""
    if not _is_integer(alpha):
        raise UnsupportedAlpha("matrix construction needs integer alpha; use f1_via_recurrence")
    alpha = int(Q(alpha))
    nu = tuple(nu)
    u_nu_plus(nu)
    if plus_support_size(nu, alpha) < k + 1:
        raise InsufficientSupport(
            f"alpha={alpha} gives {plus_support_size(nu, alpha)} sample points, "
            f"degree {k} needs alpha >= {k + sum(max(0, x) for x in nu)}"
        )
    return extract_poly1(f1_operator(k, nu, alpha), nu, alpha, degree=k)


def recurrence_step(f: Poly, source, alpha, literal: bool = False) -> Poly:
    """Coefficient of ``ad z31 (f u_source^+)`` on ``u_{source - theta}^+``.

    With ``t`` the target E33 value and source weight ``(a, -b, -c)``::

        g(t) = a [ t (alpha - t + b + 2) f(t-1) - (t + c)(alpha - t - a + 1) f(t) ]

    ``literal=True`` uses ``+ nu(E22)`` in the second bracket instead of
    ``- nu(E22)`` (the two agree when ``nu(E22) = 0``).
    """
    a, n2, n3 = source
    alpha = Q(alpha)
    t = _t()
    second = -n2 if literal else n2
    keep = (t - n3) * ((t - alpha) * a + (a - 1) * a)
    back = t * ((t - alpha) * a + (second - 2) * a)
    return keep * f - back * f.shift(-1)


def f1_via_recurrence(k: int, nu, alpha, literal: bool = False) -> Poly:
    """Apply the one-step coefficient formula k times starting from 1."""
    nu = tuple(nu)
    u_nu_plus(nu)
    if not uses_z31(nu):
        raise ValueError("the recurrence covers the nu(E33) <= 0 branch")
    f = Poly.const(1, T_NAMES)
    for j in range(k, 0, -1):
        f = recurrence_step(f, _add(nu, THETA, j), alpha, literal=literal)
    return f


# ---------------------------------------------------------------------------
# forms and Gram-Schmidt


def form_plus(f: Poly, g: Poly, nu, alpha) -> Fraction:
    """``<f u_nu^+, g u_nu^+>``; generic alpha goes through the trace polynomial."""
    u = u_nu_plus(nu)
    fe, ge = AlgebraElement(f, u), AlgebraElement(g, u)
    if _is_integer(alpha):
        a = int(Q(alpha))
        return invariant_form(fe.realize(a), ge.realize(a), a)
    return generic_form(fe.to_envelope(), ge.to_envelope(), alpha)


@dataclass
class OrthoFamily1:
    nu: tuple
    alpha: Fraction
    polys: list = field(default_factory=list)
    mode: str = "integer"

    def monic(self) -> list[Poly]:
        return [p.monic() for p in self.polys]


def gram_schmidt_plus(nu, alpha, maxdeg: int) -> OrthoFamily1:
    """Monic orthogonalization of ``1, E33, E33^2, ...`` under ``form_plus``."""
    nu = tuple(nu)
    t = _t()
    powers = [t**j for j in range(maxdeg + 1)]
    gram = [[form_plus(p, q, nu, alpha) for q in powers] for p in powers]
    coeffs: list[list[Fraction]] = []
    norms: list[Fraction] = []

    def pair(x, y):
        return sum(
            xi * yj * gram[i][j]
            for i, xi in enumerate(x) if xi
            for j, yj in enumerate(y) if yj
        )

    for n in range(maxdeg + 1):
        vec = [ZERO] * (maxdeg + 1)
        vec[n] = ONE
        for prev, nrm in zip(coeffs, norms):
            c = pair(vec, prev) / nrm
            vec = [a - c * b for a, b in zip(vec, prev)]
        nrm = pair(vec, vec)
        if not nrm:
            raise DegenerateForm(f"form degenerate at degree {n} (alpha={alpha}, nu={nu})")
        coeffs.append(vec)
        norms.append(nrm)
    polys = [Poly.from_list(c, "E33") for c in coeffs]
    mode = "integer" if _is_integer(alpha) else "generic"
    return OrthoFamily1(nu=nu, alpha=Q(alpha), polys=polys, mode=mode)


def family1(nu, alpha, maxdeg: int) -> OrthoFamily1:
    """``f_{0..maxdeg, nu}``: ad construction at integer alpha, recurrence otherwise."""
    nu = tuple(nu)
    if _is_integer(alpha):
        polys = [f1_via_ad(k, nu, alpha) for k in range(maxdeg + 1)]
        mode = "integer"
    else:
        polys = [f1_via_recurrence(k, nu, alpha) for k in range(maxdeg + 1)]
        mode = "generic"
    return OrthoFamily1(nu=nu, alpha=Q(alpha), polys=polys, mode=mode)


def proportionality(f: Poly, g: Poly) -> Fraction | None:
    """``c`` with ``f = c g`` (None if not proportional or g is zero)."""
    if not g:
        return None
    c = f.leading_coefficient() / g.leading_coefficient() if f else ZERO
    return c if f == g * c and c else None


# ---------------------------------------------------------------------------
# difference equation


def difference_operator_1var(nu, alpha):
    """Coefficients ``(A, B)`` of ``L f = A Delta f - B Nabla f``."""
    t = _t()
    alpha = Q(alpha)
    n1, n2, n3 = nu
    if n3 < 0:
        a = (t - n3 + 1) * (t + n1 - alpha)
        b = t * (t + n2 - alpha - 2)
    else:
        a = (t + 1) * (t + n1 - alpha)
        b = (t - n3) * (t + n2 - alpha - 2)
    return a, b


def eigenvalue_1var(k: int, nu) -> int:
    """Resolved eigenvalue: ``k(k + 2 nu_1 + 2)`` or ``k(k - 2 nu_2 + 2)``."""
    if nu[2] < 0:
        return k * (k + 2 * nu[0] + 2)
    return k * (k - 2 * nu[1] + 2)


def literal_eigenvalue_1var(k: int, nu) -> int:
    """Eigenvalue with ``nu(E11)`` in both cases, read as ``k(k +- 2 nu_1 + 2)``."""
    if nu[2] < 0:
        return k * (k + 2 * nu[0] + 2)
    return k * (k - 2 * nu[0] + 2)


def difference_apply_1var(f: Poly, nu, alpha, k: int | None = None) -> tuple[Poly, Fraction]:
    """``(L f, lambda)`` with ``L f = lambda f``; raises NotEigenfunction otherwise."""
    a, b = difference_operator_1var(nu, alpha)
    lf = a * (f.shift(1) - f) - b * (f - f.shift(-1))
    if not f:
        return lf, ZERO
    d = f.degree()
    lam = lf.coefficient((d,)) / f.coefficient((d,))
    if lf != f * lam:
        raise NotEigenfunction(f"L f is not a multiple of f (nu={nu}, alpha={alpha})")
    return lf, lam


# ---------------------------------------------------------------------------
# hypergeometric closed form and the lower-parameter resolution


def closed_form_ratio(k: int, nu, alpha) -> Fraction | None:
    """``c`` with ``f1_via_ad = c * 3F2`` at the resolved parameters."""
    return proportionality(f1_via_ad(k, nu, alpha), hyper3f2_poly(hahn_params(k, nu, alpha)))


def _affine(coeffs, nu):
    c0, c1, c3 = coeffs
    return c0 + c1 * nu[0] + c3 * nu[2]


def resolve_lower_parameters(grid, span=range(-1, 2), const_span=range(-2, 3)):
    """Affine pairs ``(a, b)`` for lower parameters ``(1 - a, b - alpha)``.

    ``a`` and ``b`` range over ``c0 + c1 nu_1 + c3 nu_3`` with small integer
    coefficients.  Returns every candidate for which the 3F2 polynomial is
    proportional to ``f1_via_ad`` at every ``(k, nu, alpha)`` of the grid.
    """
    targets = [(k, tuple(nu), alpha, f1_via_ad(k, nu, alpha)) for k, nu, alpha in grid]
    shapes = [c for c in product(const_span, span, span)]
    survivors = []
    for ca, cb in product(shapes, shapes):
        ok = True
        for k, nu, alpha, f in targets:
            lower = (Q(1 - _affine(ca, nu)), Q(_affine(cb, nu) - alpha))
            try:
                h = hyper3f2_poly(hahn_params(k, nu, alpha, lower=lower))
            except PoleBeforeTermination:
                ok = False
                break
            if proportionality(f, h) is None:
                ok = False
                break
        if ok:
            survivors.append((ca, cb))
    return survivors


# frozen result of resolve_lower_parameters: a = nu_3, b = nu_1
RESOLVED_LOWER_SHAPE = ((0, 0, 1), (0, 1, 0))
