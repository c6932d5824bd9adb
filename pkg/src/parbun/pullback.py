"""Pullbacks of parabolic bundles on the projective line.

* :func:`plain_pullback` pulls back along ``z -> z**m`` for bundles marked at
  some of 0, 1 and infinity.
* :func:`root_pullback` passes from ``(n_i p_i, r_i)`` to the reduced divisor
  with divisibilities ``r_i / gcd(n_i, r_i)``.
* :func:`deloop` is the composite that removes ramification of order ``m``
  at 0.

:func:`root_pullback_oracle` recomputes values of the root pullback from
the filtration subsheaves directly and is meant for tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import InputError
from .exact import as_rational
from .parabolic import (
    MarkedCurve,
    MarkedPoint,
    ParaLine,
    SplitBundle,
    ms_filtration,
    require_valid,
    shift,
)
from .orbifold import is_removable, reduce_pair

ZERO_LABEL = "0"
ONE_LABEL = "1"
INFINITY_LABELS = ("inf", "∞")


def zeta_label(m: int, k: int) -> str:
    return f"zeta({m},{k})"


@dataclass(frozen=True)
class PowerMap:
    """The map ``z -> z**m`` on the projective line."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise InputError(f"power map exponent must be a positive integer, got {self.m!r}")


def plain_pullback(B: SplitBundle, f: Union[PowerMap, int]) -> SplitBundle:
    """Pullback along ``z -> z**m``.

    0 and infinity are totally ramified, so their multiplicities scale by
    ``m``; the point 1 splits into the m-th roots of unity, each keeping the
    weight it had.  Base degrees scale by ``m``.
    """
    if not isinstance(f, PowerMap):
        f = PowerMap(f)
    m = f.m
    require_valid(B)
    for lab in B.curve.labels:
        if lab not in (ZERO_LABEL, ONE_LABEL, *INFINITY_LABELS):
            raise InputError(f"plain pullback needs points labelled 0, 1 or inf; got {lab!r}")
    if m == 1:
        return B

    points: list[MarkedPoint] = []
    source: list[int] = []
    for i, p in enumerate(B.curve.points):
        if p.label == ONE_LABEL:
            for k in range(1, m + 1):
                points.append(MarkedPoint(zeta_label(m, k), p.multiplicity, p.divisibility))
                source.append(i)
        else:
            points.append(MarkedPoint(p.label, m * p.multiplicity, p.divisibility))
            source.append(i)
    curve = MarkedCurve(points)
    pieces = [ParaLine(m * pc.degree, [pc.weights[i] for i in source]) for pc in B.pieces]
    return SplitBundle(curve, pieces)


def _kept_points(reduced: MarkedCurve) -> list[int]:
    return [i for i, p in enumerate(reduced.points) if not is_removable(p)]


def root_pullback(B: SplitBundle) -> SplitBundle:
    """Root pullback on the reduced divisor.

    Each weight ``s/r`` at a point of multiplicity ``n`` is rewritten via
    ``n*s = a*r + e``: the piece gains ``a`` in degree and gets weight
    ``e/r``, which is a multiple of ``gcd(n, r)/r``.  Points whose reduced
    divisibility is 1 are deleted.
    """
    require_valid(B)
    curve = B.curve
    reduced = reduce_pair(curve)
    keep = _kept_points(reduced)
    pieces = []
    for pc in B.pieces:
        degree = pc.degree
        weights = []
        for pt, w in zip(curve.points, pc.weights):
            a, e = divmod(pt.multiplicity * int(w * pt.divisibility), pt.divisibility)
            degree += a
            weights.append(Fraction(e, pt.divisibility))
        for i in range(len(weights)):
            if i not in keep and weights[i] != 0:
                raise InputError(f"cannot delete point {curve.points[i].label!r} with weight {weights[i]}")
        pieces.append(ParaLine(degree, [weights[i] for i in keep]))
    return SplitBundle(MarkedCurve(reduced.points[i] for i in keep), pieces)


def _w_intersection_twist(B: SplitBundle, i: int, weight: Fraction) -> int:
    # twist at point i of a piece with this weight inside the intersection
    # over j of F(a_j p) + F_{j+1}(n p), i.e. min_j max(a_j, n*[weight > alpha_j])
    n = B.curve.points[i].multiplicity
    return min(
        max(step.a, n if weight > step.weight else 0) for step in ms_filtration(B, i)
    )


def root_pullback_oracle(B: SplitBundle, x: Sequence) -> list[int]:
    """Value of the root pullback of ``B`` at ``x``, from the filtration subsheaves.

    ``x`` has one entry per point of the *original* curve, each in [0, 1) and
    on the reduced grid (a multiple of ``gcd(n_i, r_i)/r_i``); entries for
    removable points must be 0.

    The subsheaf description gives the value at 0.  Other grid points are
    reached by shifting: shifting the source by ``k/r`` moves the reduced
    weight by ``n*k/r``.  Because ``n/d`` is invertible modulo ``r/d``, some
    ``k`` lands on ``x`` modulo 1.  The remaining integer gap is covered by
    periodicity on the reduced side.
    """
    require_valid(B)
    curve = B.curve
    if len(x) != len(curve):
        raise InputError(f"weight vector has {len(x)} entries for {len(curve)} points")
    x = [as_rational(v) for v in x]
    ks = []
    correction = Fraction(0)
    for pt, xi in zip(curve.points, x):
        n, r = pt.multiplicity, pt.divisibility
        d = math.gcd(n, r)
        rr = r // d
        if not 0 <= xi < 1 or (xi * rr).denominator != 1:
            raise InputError(f"point {pt.label}: {xi} is not a reduced grid weight in [0,1)")
        l = int(xi * rr)
        k = (l * pow(n // d, -1, rr)) % rr if rr > 1 else 0
        ks.append(Fraction(k, r))
        correction += Fraction(n * k, r) - xi
    assert correction.denominator == 1
    shifted = shift(B, ks)
    values = []
    for pc in shifted.pieces:
        total = pc.degree
        for i, w in enumerate(pc.weights):
            total += _w_intersection_twist(shifted, i, w)
        values.append(total + int(correction))
    return sorted(values)


def deloop(B: SplitBundle, m: int) -> SplitBundle:
    """Remove ramification of order ``m`` at 0: root pullback of the pullback along ``z**m``."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InputError(f"m must be a positive integer, got {m!r}")
    i0 = B.curve.index(ZERO_LABEL)
    r0 = B.curve.points[i0].divisibility
    if r0 != m:
        raise InputError(f"divisibility at 0 is {r0}, expected m = {m}")
    return root_pullback(plain_pullback(B, m))
