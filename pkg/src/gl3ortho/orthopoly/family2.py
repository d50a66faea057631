"""Two-variable families ``f^nu_{l,k}(H1, H2)`` on full weight components."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..errors import InconsistentSystem, InsufficientSupport, NotCyclic, UnsupportedAlpha
from ..exactcore import H_NAMES, ZERO, Poly, Q, RationalMatrix, exponent_tuples, solve_linear
from ..gl3rep import monomial_basis
from ..quotient import (
    THETA,
    AlgebraElement,
    E,
    ad_action,
    component_side,
    e_from_h,
    generic_form,
    h_coordinates,
    invariant_form,
    shift_support,
    u_gamma,
    z_element,
)

E12_ROOT = (1, -1, 0)
E32_ROOT = (0, -1, 1)


def _add(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))


def _is_integer(alpha) -> bool:
    return Q(alpha).denominator == 1 and Q(alpha) >= 0


def extract_poly2(m: RationalMatrix, nu, alpha: int, degree: int) -> Poly:
    """Recover ``f`` of total degree <= ``degree`` from ``m = f(H1, H2) u_nu``.

    Samples sit on the triangle of target weights; the overdetermined linear
    system is solved exactly and any inconsistency means ``m`` is not of that
    form.
    """
    u = u_gamma(nu)
    side = component_side(alpha, nu)
    if side < degree:
        raise InsufficientSupport(
            f"triangle of side {side} cannot fix degree {degree}; "
            f"need alpha >= {degree + sum(max(0, x) for x in nu)}"
        )
    basis = monomial_basis(alpha)
    support = shift_support(u, alpha)
    positions = {(row, col) for col, row, _ in support}
    for r, c, _ in m.items():
        if (r, c) not in positions:
            raise NotCyclic(f"entry ({r},{c}) outside the support of {u.describe()}")
    exps = exponent_tuples(2, degree)
    rows, rhs = [], []
    for col, row, coeff in support:
        h1, h2 = h_coordinates(basis[row])
        rows.append([Fraction(h1) ** a * Fraction(h2) ** b for a, b in exps])
        rhs.append(m.get(row, col) / coeff)
    try:
        sol = solve_linear(rows, rhs)
    except InconsistentSystem as exc:
        raise NotCyclic(f"samples do not fit a degree-{degree} polynomial") from exc
    return Poly(dict(zip(exps, sol)), H_NAMES)


def uses_z31(nu) -> bool:
    return nu[2] <= 0


def start_weight2(l: int, k: int, nu) -> tuple:
    if uses_z31(nu):
        return _add(_add(nu, THETA, k), E12_ROOT, l)
    return _add(_add(nu, E32_ROOT, k), E12_ROOT, l)


@lru_cache(maxsize=None)
def _ad_operator2(l: int, k: int, nu: tuple, alpha: int) -> RationalMatrix:
    z = z_element("z31" if uses_z31(nu) else "z23")
    m = AlgebraElement(Poly.const(1, H_NAMES), u_gamma(start_weight2(l, k, nu))).realize(alpha)
    for _ in range(k):
        m = ad_action(z, m, alpha)
    for _ in range(l):
        m = ad_action(E(2, 1), m, alpha)
    return m


def f2_operator(l: int, k: int, nu, alpha: int) -> RationalMatrix:
    return _ad_operator2(l, k, tuple(nu), int(Q(alpha)))


def f2_via_ad(l: int, k: int, nu, alpha) -> Poly:
    """``(ad E21)^l (ad z)^k`` of the starting monomial, divided by ``u_nu``."""
    if not _is_integer(alpha):
        raise UnsupportedAlpha("two-variable construction needs integer alpha")
    nu = tuple(nu)
    u_gamma(nu)
    return extract_poly2(f2_operator(l, k, nu, alpha), nu, int(Q(alpha)), l + k)


def form_full(f: Poly, g: Poly, nu, alpha) -> Fraction:
    """``<f u_nu, g u_nu>`` with f, g in (H1, H2)."""
    u = u_gamma(nu)
    fe, ge = AlgebraElement(f, u), AlgebraElement(g, u)
    if _is_integer(alpha):
        a = int(Q(alpha))
        return invariant_form(fe.realize(a), ge.realize(a), a)
    return generic_form(fe.to_envelope(), ge.to_envelope(), alpha)


@dataclass
class OrthoFamily2:
    nu: tuple
    alpha: Fraction
    polys: dict = field(default_factory=dict)  # (l, k) -> Poly

    def indices(self):
        return sorted(self.polys)


def family2(nu, alpha, maxdeg: int) -> OrthoFamily2:
    nu = tuple(nu)
    polys = {
        (l, k): f2_via_ad(l, k, nu, alpha)
        for l in range(maxdeg + 1)
        for k in range(maxdeg + 1 - l)
    }
    return OrthoFamily2(nu=nu, alpha=Q(alpha), polys=polys)


def leading_exponent(f: Poly):
    """Lex-largest exponent (H1 dominant)."""
    return f.leading_monomial()


H1_E33_NAMES = ("H1", "E33")


def to_h1_e33(f: Poly, alpha) -> Poly:
    """Rewrite f(H1, H2) in the coordinates (H1, E33) using H2 = (alpha - H1 - 3 E33) / 2."""
    h1 = Poly.var(0, H1_E33_NAMES)
    e33 = Poly.var(1, H1_E33_NAMES)
    return f.substitute([h1, (h1 * -1 - e33 * 3 + Q(alpha)) / 2])


def leading_exponent_h1_e33(f: Poly, alpha):
    return to_h1_e33(f, alpha).leading_monomial()


# ---------------------------------------------------------------------------
# Weyl group


@dataclass(frozen=True)
class WeylElement:
    """Permutation ``i -> perm[i-1]`` of the indices 1, 2, 3."""

    perm: tuple = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.perm) != [1, 2, 3]:
            raise ValueError(f"{self.perm} is not a permutation of 1,2,3")

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "WeylElement":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return WeylElement(tuple(inv))

    def act_weight(self, nu) -> tuple:
        """``(w nu)_{w(i)} = nu_i``."""
        out = [0, 0, 0]
        for i in (1, 2, 3):
            out[self(i) - 1] = nu[i - 1]
        return tuple(out)

    def act_poly(self, f: Poly) -> Poly:
        """``f(E_{w1 w1}, E_{w2 w2}, E_{w3 w3})`` rewritten in (H1, H2)."""
        h1, h2 = Poly.var(0, H_NAMES), Poly.var(1, H_NAMES)
        # E_i - E_3 as a polynomial in H; differences need no alpha
        rel = {1: h1 + h2, 2: h2, 3: Poly.const(0, H_NAMES)}
        new_h1 = rel[self(1)] - rel[self(2)]
        new_h2 = rel[self(2)] - rel[self(3)]
        return f.substitute([new_h1, new_h2])

    def matrix(self, alpha: int) -> RationalMatrix:
        """Permutation of variables on S^alpha: ``x_i -> x_{w(i)}``."""
        basis = monomial_basis(alpha)
        index = {k: n for n, k in enumerate(basis)}
        entries = []
        for col, k in enumerate(basis):
            target = [0, 0, 0]
            for i in (1, 2, 3):
                target[self(i) - 1] = k[i - 1]
            entries.append((index[tuple(target)], col, 1))
        n = len(basis)
        return RationalMatrix.from_entries(n, n, entries)


WEYL_GROUP = tuple(
    WeylElement(p) for p in
    ((1, 2, 3), (2, 1, 3), (1, 3, 2), (3, 2, 1), (2, 3, 1), (3, 1, 2))
)


def weyl_transport(w: WeylElement, family: OrthoFamily2, nu=None) -> OrthoFamily2:
    nu = family.nu if nu is None else tuple(nu)
    return OrthoFamily2(
        nu=w.act_weight(nu),
        alpha=family.alpha,
        polys={key: w.act_poly(p) for key, p in family.polys.items()},
    )


# ---------------------------------------------------------------------------
# ad of Cartan-type quadratic words as difference operators


def _shift_vector(i: int, j: int) -> tuple[int, int]:
    """Change of (H1, H2) when the target weight moves by e_i - e_j."""
    d = [0, 0, 0]
    d[i - 1] += 1
    d[j - 1] -= 1
    return (d[0] - d[1], d[1] - d[2])


def raise_lower(f: Poly, nu, alpha, i: int, j: int) -> Poly:
    """``g`` with ``ad E_ji ad E_ij (f u_nu) = g u_nu``.

    With ``y`` the target weight, ``w = y - nu``, ``y+_i = y_i + max(0, -nu_i)``
    and ``y-_i = y_i - max(0, nu_i)``::

        g = [(y_i + 1) y_j + w_i (w_j + 1)] f
            - (y+_i + 1) y-_j f(y + e_i - e_j) - y-_i (y+_j + 1) f(y - e_i + e_j)
    """
    y = e_from_h(alpha)
    yi, yj = y[i - 1], y[j - 1]
    wi, wj = yi - nu[i - 1], yj - nu[j - 1]
    yi_up, yj_up = yi + max(0, -nu[i - 1]), yj + max(0, -nu[j - 1])
    yi_dn, yj_dn = yi - max(0, nu[i - 1]), yj - max(0, nu[j - 1])
    d = _shift_vector(i, j)
    fwd = f.shift(d)
    bwd = f.shift((-d[0], -d[1]))
    return (
        ((yi + 1) * yj + wi * (wj + 1)) * f
        - (yi_up + 1) * yj_dn * fwd
        - yi_dn * (yj_up + 1) * bwd
    )


def omega2_difference(f: Poly, nu, alpha) -> Poly:
    """``ad Omega2`` on ``f u_nu`` as a difference operator on f."""
    n1, n2, _ = nu
    return f * (n1 * n1 + n2 * n2 + n1 - n2) + raise_lower(f, nu, alpha, 1, 2) * 2


def omega3_difference(f: Poly, nu, alpha) -> Poly:
    n1, n2, n3 = nu
    cartan = n1 * n1 + n2 * n2 + n3 * n3 + 2 * n1 - 2 * n3
    total = f * cartan
    for i, j in ((1, 2), (1, 3), (2, 3)):
        total = total + raise_lower(f, nu, alpha, i, j) * 2
    return total
