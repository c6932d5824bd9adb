"""Invariants of the Z/c cover of P^1 branched at m finite points and infinity.

Every loop around a finite branch point maps to the generator 1 of Z/c, so
the loop around infinity maps to ``-m``.  For the character ``V_j``, the
pushed-forward invariant bundle is ``O(s_j)``.  Its weight is ``j/c`` at each
finite point and ``w_j = frac(-m*j/c)`` at infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .exact import rat_frac
from .parabolic import MarkedCurve, MarkedPoint, ParaLine, SplitBundle


@dataclass(frozen=True)
class CyclicCoverParams:
    m: int
    c: int

    def __post_init__(self):
        for name in ("m", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError(f"{name} must be a positive integer, got {v!r}")

    @property
    def r_inf(self) -> int:
        return self.c // math.gcd(self.c, self.m)


def _check_j(P: CyclicCoverParams, j: int, lo: int) -> None:
    if not isinstance(j, int) or isinstance(j, bool) or not lo <= j < P.c:
        raise InputError(f"j must be an integer in [{lo}, {P.c}), got {j!r}")


def w_j(P: CyclicCoverParams, j: int) -> Fraction:
    """Weight at infinity of ``V_j``: the representative of ``-m*j/c`` in [0, 1)."""
    _check_j(P, j, 0)
    return rat_frac(Fraction(-P.m * j, P.c))


def kappa_j(P: CyclicCoverParams, j: int) -> int:
    _check_j(P, j, 1)
    # c * w_j is (-m*j) mod c, so the test stays in the integers
    c = P.c
    return int((-P.m) % c + (-P.m * j) % c >= c)


def kappa(P: CyclicCoverParams) -> int:
    """Number of ``1 <= j < c`` with ``w_1 + w_j >= 1``; always ``(-m) mod c``."""
    k = sum(kappa_j(P, j) for j in range(1, P.c))
    if (k + P.m) % P.c:
        raise ConsistencyError(f"kappa({P.m},{P.c}) = {k} is not congruent to -m mod c")
    return k


def s1(P: CyclicCoverParams) -> int:
    num = P.m + kappa(P)
    if num % P.c:
        raise ConsistencyError(f"c = {P.c} does not divide m + kappa = {num}")
    return -(num // P.c)


def s_j(P: CyclicCoverParams, j: int) -> int:
    """Degree of the underlying line bundle for ``V_j``."""
    _check_j(P, j, 0)
    if j == 0:
        return 0
    return j * s1(P) + sum(kappa_j(P, i) for i in range(1, j))


def cyclic_curve(P: CyclicCoverParams) -> MarkedCurve:
    points = [MarkedPoint(f"p{i}", 1, P.c) for i in range(1, P.m + 1)]
    points.append(MarkedPoint("inf", 1, P.r_inf))
    return MarkedCurve(points)


def cyclic_bundle(P: CyclicCoverParams, j: int) -> SplitBundle:
    """The rank-one bundle attached to ``V_j``.

    Infinity stays on the curve even when its divisibility is 1, so that
    bundles for different ``j`` share a curve and can be tensored.
    """
    _check_j(P, j, 0)
    weights = [Fraction(j, P.c)] * P.m + [w_j(P, j)]
    return SplitBundle(cyclic_curve(P), [ParaLine(s_j(P, j), weights)])
