"""Matrix models of irreducible gl(3)-modules.

Two models are built:

* the symmetric power ``S^alpha(V)`` on monomials ``x1^k1 x2^k2 x3^k3`` with
  ``E_ij`` acting as ``x_i d/dx_j``;
* the Gelfand-Tsetlin model ``L^lambda`` on GT diagrams, using the classical
  lowering/raising formulas for ``E_11, E_22, E_33, E_12, E_21, E_23, E_32``.
  ``E_13`` and ``E_31`` are obtained as ``[E_12, E_23]`` and ``[E_32, E_21]``.

Generators are indexed 1-based, ``gens[(i, j)]`` is the matrix of ``E_ij``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import NamedTuple

from .errors import DegenerateDiagram, InvalidHighestWeight, UnsupportedAlpha
from .exactcore import ONE, RationalMatrix, nullspace

INDICES = (1, 2, 3)
GENERATORS = tuple((i, j) for i in INDICES for j in INDICES)


class GTDiagram(NamedTuple):
    """Rows (l31, l32, l33), (l21, l22), (l11)."""

    l31: int
    l32: int
    l33: int
    l21: int
    l22: int
    l11: int

    @property
    def top(self):
        return (self.l31, self.l32, self.l33)

    def is_valid(self) -> bool:
        return (
            self.l31 >= self.l21 >= self.l32 >= self.l22 >= self.l33
            and self.l21 >= self.l11 >= self.l22
        )

    def weight(self) -> tuple[int, int, int]:
        e11 = self.l11
        e22 = self.l21 + self.l22 - self.l11
        e33 = sum(self.top) - self.l21 - self.l22
        return (e11, e22, e33)

    def shifted(self, which: str, delta: int) -> "GTDiagram":
        return self._replace(**{which: getattr(self, which) + delta})


@dataclass(frozen=True)
class Representation:
    """Finite basis with per-vector weights and the nine generator matrices."""

    labels: tuple
    weights: tuple
    gens: dict = field(compare=False)
    kind: str = "symmetric"
    highest: tuple = (0, 0, 0)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij) -> RationalMatrix:
        return self.gens[ij]

    def index(self, label) -> int:
        return self._index_map()[label]

    def _index_map(self):
        # frozen dataclass: cache through object.__setattr__
        cached = self.__dict__.get("_idx")
        if cached is None:
            cached = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_idx", cached)
        return cached


# ---------------------------------------------------------------------------
# symmetric powers


def monomial_basis(alpha: int) -> list[tuple[int, int, int]]:
    """Exponents (k1, k2, k3) with sum alpha, in descending lexicographic order."""
    return [
        (k1, k2, alpha - k1 - k2)
        for k1 in range(alpha, -1, -1)
        for k2 in range(alpha - k1, -1, -1)
    ]


def symmetric_dim(alpha: int) -> int:
    return comb(alpha + 2, 2)


def _check_alpha(alpha) -> int:
    if isinstance(alpha, bool) or not isinstance(alpha, (int, Fraction)):
        raise UnsupportedAlpha(f"alpha must be a nonnegative integer, got {alpha!r}")
    if isinstance(alpha, Fraction):
        if alpha.denominator != 1:
            raise UnsupportedAlpha(f"non-integer alpha {alpha} has no finite model")
        alpha = alpha.numerator
    if alpha < 0:
        raise UnsupportedAlpha(f"negative alpha {alpha}")
    return int(alpha)


@lru_cache(maxsize=None)
def _symmetric_model(alpha: int) -> Representation:
    basis = monomial_basis(alpha)
    index = {k: n for n, k in enumerate(basis)}
    dim = len(basis)
    gens = {}
    for i, j in GENERATORS:
        entries = []
        for col, k in enumerate(basis):
            kj = k[j - 1]
            if kj == 0:
                continue
            target = list(k)
            target[j - 1] -= 1
            target[i - 1] += 1
            entries.append((index[tuple(target)], col, kj))
        gens[(i, j)] = RationalMatrix.from_entries(dim, dim, entries)
    return Representation(
        labels=tuple(basis),
        weights=tuple(basis),
        gens=gens,
        kind="symmetric",
        highest=(alpha, 0, 0),
    )


def build_symmetric_model(alpha) -> Representation:
    """``S^alpha(V)`` with ``E_ij = x_i d/dx_j``; cached per alpha."""
    return _symmetric_model(_check_alpha(alpha))


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin


def _check_dominant(lam) -> tuple[int, int, int]:
    lam = tuple(lam)
    if len(lam) != 3 or not all(isinstance(x, int) for x in lam):
        raise InvalidHighestWeight(f"need three integers, got {lam!r}")
    if not (lam[0] >= lam[1] >= lam[2]):
        raise InvalidHighestWeight(f"{lam} is not dominant")
    return lam


def enumerate_gt_diagrams(lam) -> list[GTDiagram]:
    """All GT diagrams with top row ``lam``, sorted by (l21, l22, l11)."""
    l31, l32, l33 = _check_dominant(lam)
    out = []
    for l21 in range(l32, l31 + 1):
        for l22 in range(l33, l32 + 1):
            for l11 in range(l22, l21 + 1):
                out.append(GTDiagram(l31, l32, l33, l21, l22, l11))
    return out


def gt_dim(lam) -> int:
    a = lam[0] - lam[1]
    b = lam[1] - lam[2]
    return (a + 1) * (b + 1) * (a + b + 2) // 2


@lru_cache(maxsize=None)
def _gt_model(lam: tuple[int, int, int]) -> Representation:
    diagrams = enumerate_gt_diagrams(lam)
    index = {d: n for n, d in enumerate(diagrams)}
    dim = len(diagrams)
    entries = {ij: [] for ij in GENERATORS}

    def put(ij, target: GTDiagram, col: int, coeff):
        if coeff and target in index:
            entries[ij].append((index[target], col, coeff))

    for col, d in enumerate(diagrams):
        e11, e22, e33 = d.weight()
        entries[(1, 1)].append((col, col, e11))
        entries[(2, 2)].append((col, col, e22))
        entries[(3, 3)].append((col, col, e33))

        l11 = d.l11
        l21, l22 = d.l21, d.l22 - 1
        l31, l32, l33 = d.l31, d.l32 - 1, d.l33 - 2
        if l21 == l22:
            raise DegenerateDiagram(f"l21 == l22 in {d}")

        put((1, 2), d.shifted("l11", 1), col, -(l11 - l21) * (l11 - l22))
        put((2, 1), d.shifted("l11", -1), col, 1)

        c1 = -Fraction((l21 - l31) * (l21 - l32) * (l21 - l33), l21 - l22)
        c2 = -Fraction((l22 - l31) * (l22 - l32) * (l22 - l33), l22 - l21)
        put((2, 3), d.shifted("l21", 1), col, c1)
        put((2, 3), d.shifted("l22", 1), col, c2)

        c1 = Fraction(l21 - l11, l21 - l22)
        c2 = Fraction(l22 - l11, l22 - l21)
        put((3, 2), d.shifted("l21", -1), col, c1)
        put((3, 2), d.shifted("l22", -1), col, c2)

    gens = {
        ij: RationalMatrix.from_entries(dim, dim, ents)
        for ij, ents in entries.items()
    }
    gens[(1, 3)] = gens[(1, 2)].commutator(gens[(2, 3)])
    gens[(3, 1)] = gens[(3, 2)].commutator(gens[(2, 1)])
    return Representation(
        labels=tuple(diagrams),
        weights=tuple(d.weight() for d in diagrams),
        gens=gens,
        kind="gt",
        highest=lam,
    )


def build_gt_model(lam) -> Representation:
    """GT model of ``L^lam``; cached per highest weight."""
    return _gt_model(_check_dominant(lam))


# ---------------------------------------------------------------------------
# checks


def bracket_expected(rep: Representation, i, j, k, l) -> RationalMatrix:
    """``delta_jk E_il - delta_li E_kj``."""
    n = rep.dim
    out = RationalMatrix.zeros(n, n)
    if j == k:
        out = out + rep[(i, l)]
    if l == i:
        out = out - rep[(k, j)]
    return out


def check_commutation(rep: Representation) -> dict:
    """All 81 relations ``[E_ij, E_kl] = d_jk E_il - d_li E_kj``."""
    failures = []
    for (i, j), (k, l) in product(GENERATORS, GENERATORS):
        lhs = rep[(i, j)].commutator(rep[(k, l)])
        if lhs != bracket_expected(rep, i, j, k, l):
            failures.append({"pair": [f"E{i}{j}", f"E{k}{l}"]})
    return {
        "name": "commutators",
        "checked": 81,
        "failures": failures,
        "pass": not failures,
    }


def weight_check(rep: Representation) -> list:
    """Generators must move weight w to w + e_i - e_j; returns violations."""
    bad = []
    for (i, j), m in rep.gens.items():
        for r, c, _ in m.items():
            expected = list(rep.weights[c])
            expected[i - 1] += 1
            expected[j - 1] -= 1
            if tuple(expected) != tuple(rep.weights[r]):
                bad.append(((i, j), r, c))
    return bad


def _joint_kernel(mats: list[RationalMatrix], dim: int) -> list[dict[int, Fraction]]:
    rows = []
    for m in mats:
        rows.extend(m.to_dense())
    rows = [r for r in rows if any(r)]
    basis = nullspace(rows, dim)
    return [{i: v for i, v in enumerate(vec) if v} for vec in basis]


def vacuum_vectors(rep: Representation) -> list[dict[int, Fraction]]:
    """Basis of the joint kernel of ``E_12`` and ``E_23`` (sparse vectors)."""
    return _joint_kernel([rep[(1, 2)], rep[(2, 3)]], rep.dim)


def gl2_highest_subspace(rep: Representation) -> list[dict[int, Fraction]]:
    """Basis of the kernel of ``E_12``."""
    return _joint_kernel([rep[(1, 2)]], rep.dim)


def basis_vector(rep: Representation, label) -> dict[int, Fraction]:
    return {rep.index(label): ONE}
