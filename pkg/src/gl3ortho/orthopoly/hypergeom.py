"""Terminating 3F2 series with one symbolic upper parameter ``-E33``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..errors import NonTerminating, PoleBeforeTermination
from ..exactcore import ONE, Poly, Q


def pochhammer(a, i: int):
    """Rising factorial ``a (a+1) ... (a+i-1)``; works for Fractions and Polys."""
    if i < 0:
        raise ValueError("negative Pochhammer index")
    out = ONE if not isinstance(a, Poly) else Poly.const(1, a.names)
    for t in range(i):
        out = out * (a + t)
    return out


@dataclass(frozen=True)
class HypergeomParams:
    """``upper`` may hold Polys (e.g. ``-E33``); ``lower`` holds Rationals."""

    upper: tuple
    lower: tuple
    argument: Fraction = ONE

    def termination_order(self) -> int:
        """Smallest ``n`` with some constant upper parameter equal to ``-n``."""
        orders = []
        for a in self.upper:
            if isinstance(a, Poly):
                if not a.is_constant():
                    continue
                a = a.constant_value()
            a = Q(a)
            if a.denominator == 1 and a <= 0:
                orders.append(int(-a))
        if not orders:
            raise NonTerminating(f"no nonpositive integer upper parameter in {self.upper}")
        return min(orders)


def hyper3f2_poly(params: HypergeomParams, name: str = "E33") -> Poly:
    """Sum of the terminating series as a polynomial in the symbolic parameter."""
    if len(params.upper) != 3 or len(params.lower) != 2:
        raise ValueError("3F2 needs three upper and two lower parameters")
    n = params.termination_order()
    for b in params.lower:
        b = Q(b)
        for i in range(n):
            if b + i == 0:
                raise PoleBeforeTermination(f"lower parameter {b} vanishes at index {i}")
    z = Q(params.argument)
    total = Poly({}, (name,))
    for i in range(n + 1):
        num = Poly.const(1, (name,))
        for a in params.upper:
            if not isinstance(a, Poly):
                a = Poly.const(a, (name,))
            num = num * pochhammer(a, i)
        den = Fraction(factorial(i))
        for b in params.lower:
            den *= pochhammer(Q(b), i)
        total = total + num * (z**i / den)
    return total


def hahn_params(k: int, nu, alpha, lower=None) -> HypergeomParams:
    """Parameters ``(-k, k + 2 nu_1 + 2, -E33; lower)``.

    ``lower`` defaults to the resolved pair ``(1 - nu_3, nu_1 - alpha)``.
    """
    t = Poly.var(0, ("E33",))
    if lower is None:
        lower = resolved_lower(nu, alpha)
    return HypergeomParams(upper=(Q(-k), Q(k + 2 * nu[0] + 2), -t), lower=tuple(lower))


def resolved_lower(nu, alpha) -> tuple[Fraction, Fraction]:
    return (Q(1 - nu[2]), Q(nu[0]) - Q(alpha))


def hahn_poly(k: int, nu, alpha) -> Poly:
    return hyper3f2_poly(hahn_params(k, nu, alpha))
