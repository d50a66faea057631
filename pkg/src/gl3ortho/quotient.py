"""The quotient algebra A^alpha = U(gl3)/J^alpha realized on S^alpha(V).

Elements of U(gl3) are kept as formal combinations of words
(:class:`EnvelopeElement`) and realized as matrices on the symmetric model.
Weight-homogeneous operators are written ``f(E11, E22, E33) * u`` where
``u`` is a degree-balanced monomial in the Weyl generators ``p_i = x_i`` and
``q_i = d/dx_i`` and ``f`` is evaluated at the weight of the *target*
monomial (left multiplication).

``ad_action`` is the adjoint action of U(gl3) on A^alpha, i.e. a word
``x1 x2 ... xn`` acts as ``ad x1 o ad x2 o ... o ad xn``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, NamedTuple

from .errors import (
    NotInQPlus,
    NotInRootLattice,
    ParseError,
    ShapeMismatch,
)
from .exactcore import (
    ONE,
    ZERO,
    H_NAMES,
    Poly,
    Q,
    RationalMatrix,
    exponent_tuples,
    lagrange_interpolate,
    nullspace,
    rank,
)
from .gl3rep import (
    GENERATORS,
    Representation,
    build_symmetric_model,
    monomial_basis,
    symmetric_dim,
)

Word = tuple  # tuple of (i, j) pairs

E_NAMES = ("E11", "E22", "E33")
THETA = (1, 0, -1)


# ---------------------------------------------------------------------------
# envelope elements


class EnvelopeElement:
    """Rational combination of words in the generators ``E_ij``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(tuple(x) for x in w)
            c = Q(c)
            if not c:
                continue
            clean[w] = clean.get(w, ZERO) + c
            if not clean[w]:
                del clean[w]
        self.terms = clean

    @classmethod
    def gen(cls, i: int, j: int):
        return cls({((i, j),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def word(cls, *letters, coeff=1):
        return cls({tuple(letters): coeff})

    def _coerce(self, other):
        if isinstance(other, EnvelopeElement):
            return other
        return EnvelopeElement.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return EnvelopeElement(out)

    __radd__ = __add__

    def __neg__(self):
        return EnvelopeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, EnvelopeElement):
            c = Q(other)
            return EnvelopeElement({w: c * v for w, v in self.terms.items()})
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return EnvelopeElement(out)

    def __rmul__(self, other):
        c = Q(other)
        return EnvelopeElement({w: c * v for w, v in self.terms.items()})

    def __pow__(self, k: int):
        out = EnvelopeElement.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, EnvelopeElement):
            other = EnvelopeElement.const(other)
        return self.terms == other.terms

    __hash__ = None

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            mono = "*".join(f"E{i}{j}" for i, j in w) or "1"
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts)


def E(i: int, j: int) -> EnvelopeElement:
    return EnvelopeElement.gen(i, j)


def parse_envelope(text: str) -> EnvelopeElement:
    """Parse sums of products such as ``"2*E12*E21 - E11 + 3"``."""
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty expression")
    terms = []
    buf = ""
    for ch in src:
        if ch in "+-" and buf and buf[-1] not in "*":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    total = EnvelopeElement()
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise ParseError(f"dangling sign in {text!r}")
        elem = EnvelopeElement.const(sign)
        for factor in term.split("*"):
            if len(factor) == 3 and factor[0] == "E" and factor[1] in "123" and factor[2] in "123":
                elem = elem * E(int(factor[1]), int(factor[2]))
            elif factor.isdigit():
                elem = elem * int(factor)
            else:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
        total = total + elem
    return total


# ---------------------------------------------------------------------------
# realization, involution, trace


def realize(e: EnvelopeElement, rep: Representation) -> RationalMatrix:
    """Sum of coefficient times product of generator matrices per word."""
    n = rep.dim
    cache: dict[Word, RationalMatrix] = {(): RationalMatrix.identity(n)}

    def word_matrix(w: Word) -> RationalMatrix:
        if w not in cache:
            cache[w] = rep[w[0]] @ word_matrix(w[1:])
        return cache[w]

    out = RationalMatrix.zeros(n, n)
    for w, c in e.terms.items():
        out = out + word_matrix(w).scale(c)
    return out


def realize_alpha(e: EnvelopeElement, alpha: int) -> RationalMatrix:
    return realize(e, build_symmetric_model(alpha))


def omega_element(e: EnvelopeElement) -> EnvelopeElement:
    """Chevalley antiautomorphism: reverse words, ``E_ij -> E_ji``."""
    return EnvelopeElement({
        tuple((j, i) for i, j in reversed(w)): c for w, c in e.terms.items()
    })


@lru_cache(maxsize=None)
def fischer_weights(alpha: int) -> tuple:
    return tuple(
        factorial(k1) * factorial(k2) * factorial(k3)
        for k1, k2, k3 in monomial_basis(alpha)
    )


def _check_alpha_shape(m: RationalMatrix, alpha: int):
    n = symmetric_dim(alpha)
    if m.shape != (n, n):
        raise ShapeMismatch(f"matrix {m.shape} does not act on S^{alpha}(V) (dim {n})")


def omega_operator(m: RationalMatrix, alpha: int) -> RationalMatrix:
    """Adjoint for the Fischer pairing: ``D^-1 m^T D`` with ``D = diag(k!)``."""
    _check_alpha_shape(m, alpha)
    d = fischer_weights(alpha)
    return RationalMatrix.from_entries(
        m.cols, m.rows,
        ((c, r, v * d[r] / d[c]) for r, c, v in m.items()),
    )


def normalized_trace(m: RationalMatrix, alpha: int | None = None) -> Fraction:
    """Trace divided by the dimension of the module."""
    if alpha is not None:
        _check_alpha_shape(m, alpha)
    return m.trace() / m.rows


def invariant_form(u: RationalMatrix, v: RationalMatrix, alpha: int) -> Fraction:
    """``<u, v> = L(u omega(v))`` with ``L`` the normalized trace."""
    _check_alpha_shape(u, alpha)
    if u.shape != v.shape:
        raise ShapeMismatch(f"{u.shape} vs {v.shape}")
    return u.trace_of_product(omega_operator(v, alpha)) / u.rows


def hc_polynomial(e: EnvelopeElement, validate: bool = False) -> Poly:
    """Normalized trace of ``e`` on ``S^a(V)`` as a polynomial in ``a``.

    Sampled at ``a = 0..d`` with ``d`` the longest word.  With ``validate`` the
    interpolant is checked against two further samples.
    """
    d = e.max_length()
    samples = [(a, normalized_trace(realize_alpha(e, a))) for a in range(d + 1)]
    poly = lagrange_interpolate(samples, name="alpha")
    if validate:
        for a in (d + 1, d + 2):
            got = normalized_trace(realize_alpha(e, a))
            if poly.eval(a) != got:
                raise AssertionError(f"degree bound violated at alpha={a}")
    return poly


def generic_form(u: EnvelopeElement, v: EnvelopeElement, alpha) -> Fraction:
    """``<u, v>`` at any rational alpha through the interpolated trace."""
    return hc_polynomial(u * omega_element(v)).eval(Q(alpha))


# ---------------------------------------------------------------------------
# weight-shift monomials


class WeightShiftMonomial(NamedTuple):
    """Exponents ``m_i``: ``p_i^{m_i}`` if positive, ``q_i^{-m_i}`` if negative."""

    m1: int
    m2: int
    m3: int

    @property
    def weight(self) -> tuple[int, int, int]:
        return (self.m1, self.m2, self.m3)

    def describe(self) -> str:
        parts = []
        for i, m in enumerate(self, start=1):
            if m > 0:
                parts.append(f"p{i}" + (f"^{m}" if m > 1 else ""))
            elif m < 0:
                parts.append(f"q{i}" + (f"^{-m}" if m < -1 else ""))
        return "*".join(parts) or "1"

    def to_envelope(self) -> EnvelopeElement:
        """Word-level representative as a product of ``E_ij = p_i q_j``.

        Valid because no index carries both a p and a q, so all factors commute.
        """
        ps = [i + 1 for i, m in enumerate(self) for _ in range(max(m, 0))]
        qs = [i + 1 for i, m in enumerate(self) for _ in range(max(-m, 0))]
        return EnvelopeElement.word(*zip(ps, qs))


def _weight(nu) -> tuple[int, int, int]:
    nu = tuple(int(x) for x in nu)
    if len(nu) != 3:
        raise NotInRootLattice(f"weight needs three coordinates, got {nu}")
    if sum(nu) != 0:
        raise NotInRootLattice(f"{nu} does not sum to zero")
    return nu


def in_q_plus(nu) -> bool:
    return sum(nu) == 0 and nu[0] >= 0 and nu[1] <= 0


def u_gamma(gamma) -> WeightShiftMonomial:
    return WeightShiftMonomial(*_weight(gamma))


def u_nu_plus(nu) -> WeightShiftMonomial:
    nu = _weight(nu)
    if nu[0] < 0 or nu[1] > 0:
        raise NotInQPlus(f"{nu} needs k1 >= 0 and k2 <= 0")
    return WeightShiftMonomial(*nu)


def shift_coefficient(u: WeightShiftMonomial, k) -> int:
    """Coefficient of ``u x^k`` on ``x^(k + m)``: product of falling factorials."""
    c = 1
    for ki, m in zip(k, u):
        if m < 0:
            if ki < -m:
                return 0
            for t in range(-m):
                c *= ki - t
    return c


def shift_support(u: WeightShiftMonomial, alpha: int):
    """Pairs (source index, target index, coefficient) with nonzero image."""
    basis = monomial_basis(alpha)
    index = {k: n for n, k in enumerate(basis)}
    out = []
    for col, k in enumerate(basis):
        c = shift_coefficient(u, k)
        if c:
            target = tuple(a + b for a, b in zip(k, u))
            out.append((col, index[target], c))
    return out


def shift_realize(u: WeightShiftMonomial, alpha: int) -> RationalMatrix:
    n = symmetric_dim(alpha)
    return RationalMatrix.from_entries(
        n, n, ((r, c, v) for c, r, v in shift_support(u, alpha))
    )


# ---------------------------------------------------------------------------
# f(E11, E22, E33) * u


def h_coordinates(y) -> tuple[int, int]:
    return (y[0] - y[1], y[1] - y[2])


def e_from_h(alpha) -> tuple[Poly, Poly, Poly]:
    """E11, E22, E33 as polynomials in (H1, H2) modulo E11 + E22 + E33 = alpha."""
    alpha = Q(alpha)
    h1 = Poly.var(0, H_NAMES)
    h2 = Poly.var(1, H_NAMES)
    e11 = (h1 * 2 + h2 + alpha) / 3
    e22 = (-h1 + h2 + alpha) / 3
    e33 = (-h1 - h2 * 2 + alpha) / 3
    return e11, e22, e33


@dataclass(frozen=True)
class AlgebraElement:
    """``poly * shift``; ``poly`` is univariate in E33 or bivariate in (H1, H2)."""

    poly: Poly
    shift: WeightShiftMonomial

    def coefficient_at(self, y) -> Fraction:
        if self.poly.nvars == 1:
            return self.poly.eval(y[2])
        return self.poly.eval(h_coordinates(y))

    def realize(self, alpha: int) -> RationalMatrix:
        n = symmetric_dim(alpha)
        basis = monomial_basis(alpha)
        entries = []
        for col, row, c in shift_support(self.shift, alpha):
            entries.append((row, col, c * self.coefficient_at(basis[row])))
        return RationalMatrix.from_entries(n, n, entries)

    def cartan_envelope(self) -> EnvelopeElement:
        """The polynomial part as a combination of words in E11, E22, E33."""
        names = E_NAMES
        if self.poly.nvars == 1:
            p3 = self.poly.substitute([Poly.var(2, names)])
        else:
            e11, e22, e33 = (Poly.var(i, names) for i in range(3))
            p3 = self.poly.substitute([e11 - e22, e22 - e33])
        out = EnvelopeElement()
        for exps, c in p3.coeffs.items():
            letters = [(i + 1, i + 1) for i, k in enumerate(exps) for _ in range(k)]
            out = out + EnvelopeElement.word(*letters, coeff=c)
        return out

    def to_envelope(self) -> EnvelopeElement:
        return self.cartan_envelope() * self.shift.to_envelope()


def realize_poly_shift(poly: Poly, u: WeightShiftMonomial, alpha: int) -> RationalMatrix:
    return AlgebraElement(poly, u).realize(alpha)


# ---------------------------------------------------------------------------
# z-elements and the adjoint action


def z_element(kind: str, literal: bool = False) -> EnvelopeElement:
    """Extremal elements z21, z12, z13, z32, z31, z23.

    The default z31 carries the extra ``E21 E32`` term; ``literal=True``
    returns the bare ``(E11 - E22 + 2) E31``.
    """
    h = E(1, 1) - E(2, 2) + 2
    table = {
        "z21": lambda: E(2, 1),
        "z12": lambda: E(1, 2),
        "z13": lambda: E(1, 3),
        "z32": lambda: E(3, 2),
        "z31": lambda: h * E(3, 1) if literal else h * E(3, 1) + E(2, 1) * E(3, 2),
        "z23": lambda: h * E(2, 3) - E(2, 1) * E(1, 3),
    }
    if kind not in table:
        raise KeyError(f"unknown z-element {kind!r}")
    return table[kind]()


def _gens_for(m: RationalMatrix, alpha=None, rep: Representation | None = None):
    if rep is None:
        rep = build_symmetric_model(alpha)
    if m.shape != (rep.dim, rep.dim):
        raise ShapeMismatch(f"{m.shape} vs module of dimension {rep.dim}")
    return rep


def ad_action(z: EnvelopeElement, m: RationalMatrix, alpha=None,
              rep: Representation | None = None) -> RationalMatrix:
    """Adjoint action of ``z`` in U(gl3) on the operator ``m``."""
    rep = _gens_for(m, alpha, rep)
    out = RationalMatrix.zeros(*m.shape)
    for w, c in z.terms.items():
        cur = m
        for ij in reversed(w):
            g = rep[ij]
            cur = g @ cur - cur @ g
            if cur.is_zero():
                break
        out = out + cur.scale(c)
    return out


def inner_commutator(z: EnvelopeElement, m: RationalMatrix, alpha=None,
                     rep: Representation | None = None) -> RationalMatrix:
    """``realize(z) m - m realize(z)``; agrees with ``ad_action`` only for degree-one z."""
    rep = _gens_for(m, alpha, rep)
    zm = realize(z, rep)
    return zm @ m - m @ zm


# ---------------------------------------------------------------------------
# weight components and decomposition


def operator_weight_units(alpha: int, mu) -> list[tuple[int, int]]:
    """Matrix units (row, col) of ad-weight ``mu``: target = source + mu."""
    mu = _weight(mu)
    basis = monomial_basis(alpha)
    index = {k: n for n, k in enumerate(basis)}
    out = []
    for col, k in enumerate(basis):
        target = tuple(a + b for a, b in zip(k, mu))
        if target in index:
            out.append((index[target], col))
    return out


def component_side(alpha: int, mu) -> int:
    """Side length of the triangle of target weights in the mu-component."""
    return alpha - sum(max(0, x) for x in mu)


def weight_component_basis(alpha: int, mu) -> tuple[list[RationalMatrix], dict]:
    """Matrix-unit basis of the weight-mu subspace of End(S^alpha V).

    The report compares its dimension with the rank of
    ``{H1^a H2^b * u_mu : a + b <= side}``.
    """
    units = operator_weight_units(alpha, mu)
    n = symmetric_dim(alpha)
    basis = [RationalMatrix(n, n, {r: {c: ONE}}) for r, c in units]
    side = component_side(alpha, mu)
    u = u_gamma(mu)
    position = {rc: i for i, rc in enumerate(units)}
    rows = []
    for exps in exponent_tuples(2, max(side, 0)):
        mat = AlgebraElement(Poly({exps: 1}, H_NAMES), u).realize(alpha)
        vec = [ZERO] * len(units)
        for r, c, v in mat.items():
            vec[position[(r, c)]] = v
        rows.append(vec)
    span_rank = rank(rows) if units else 0
    report = {
        "name": "weight_component",
        "alpha": alpha,
        "mu": list(mu),
        "dimension": len(units),
        "monomial_span_rank": span_rank,
        "pass": span_rank == len(units),
    }
    return basis, report


def _highest_in_component(alpha: int, mu) -> int:
    units = operator_weight_units(alpha, mu)
    if not units:
        return 0
    rep = build_symmetric_model(alpha)
    keyed: dict[tuple, dict[int, Fraction]] = {}
    n = rep.dim
    for idx, (r, c) in enumerate(units):
        unit = RationalMatrix(n, n, {r: {c: ONE}})
        for tag in ((1, 2), (2, 3)):
            g = rep[tag]
            br = g @ unit - unit @ g
            for rr, cc, v in br.items():
                keyed.setdefault((tag, rr, cc), {})[idx] = v
    rows = [[row.get(i, ZERO) for i in range(len(units))] for row in keyed.values()]
    return len(units) - (rank(rows) if rows else 0)


def adjoint_decomposition(alpha: int, kmax: int | None = None) -> list[int]:
    """Multiplicity of ``L^{k theta}`` in End(S^alpha V) for k = 0..kmax."""
    if kmax is None:
        kmax = alpha
    return [
        _highest_in_component(alpha, tuple(k * t for t in THETA))
        for k in range(kmax + 1)
    ]


def highest_vectors_by_weight(alpha: int) -> dict[tuple, int]:
    """Dimension of ad-highest vectors for every weight that has any."""
    out = {}
    for mu in product(range(-alpha, alpha + 1), repeat=2):
        w = (mu[0], mu[1], -mu[0] - mu[1])
        if abs(w[2]) > alpha:
            continue
        d = _highest_in_component(alpha, w)
        if d:
            out[w] = d
    return out


# ---------------------------------------------------------------------------
# full operator basis and Gram matrices


def root_lattice_weights(alpha: int) -> list[tuple[int, int, int]]:
    """Weights of End(S^alpha V), sorted."""
    out = set()
    basis = monomial_basis(alpha)
    for a in basis:
        for b in basis:
            out.add(tuple(x - y for x, y in zip(a, b)))
    return sorted(out, reverse=True)


def graded_operator_basis(alpha: int) -> list[tuple[tuple, tuple, AlgebraElement]]:
    """Basis of End(S^alpha V) by graded components: ``H1^a H2^b * u_gamma``.

    Monomials of total degree <= side are unisolvent on the triangular set of
    target weights, so each component contributes exactly its dimension.
    """
    out = []
    for gamma in root_lattice_weights(alpha):
        side = component_side(alpha, gamma)
        u = u_gamma(gamma)
        for exps in exponent_tuples(2, side):
            out.append((gamma, exps, AlgebraElement(Poly({exps: 1}, H_NAMES), u)))
    return out


def gram_matrix(mats: list[RationalMatrix], alpha: int) -> list[list[Fraction]]:
    """Matrix of ``invariant_form`` on the given operators."""
    omegas = [omega_operator(m, alpha) for m in mats]
    dim = symmetric_dim(alpha)
    return [
        [mats[i].trace_of_product(omegas[j]) / dim for j in range(len(mats))]
        for i in range(len(mats))
    ]


def words_up_to(length: int) -> Iterable[Word]:
    for n in range(length + 1):
        yield from product(GENERATORS, repeat=n)
