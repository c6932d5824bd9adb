"""Orbifold line-bundle data on a root stack and its parabolic counterpart.

An orbifold line is ``pi^* O(e) (x) N_1^{w_1} (x) ... (x) N_k^{w_k}`` with
``0 <= w_i < r_i``, where ``N_i`` is the canonical r_i-th root of
``O(n_i p_i)``.  Its parabolic bundle is the piece of degree ``e`` and
weights ``w_i / r_i``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InputError
from .parabolic import (
    MarkedCurve,
    MarkedPoint,
    ParaLine,
    SplitBundle,
    curve_from_json,
    curve_to_json,
    require_valid,
)


@dataclass(frozen=True, order=True)
class OrbLine:
    twist: int
    exponents: tuple[int, ...]

    def __init__(self, twist: int, exponents: Iterable[int] = ()):
        exponents = tuple(exponents)
        for v in (twist, *exponents):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InputError(f"orbifold data must be integers: {twist!r}, {exponents!r}")
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "exponents", exponents)


@dataclass(frozen=True)
class OrbBundle:
    curve: MarkedCurve
    pieces: tuple[OrbLine, ...]

    def __init__(self, curve: MarkedCurve, pieces: Iterable[OrbLine]):
        pieces = tuple(sorted(pieces))
        for pc in pieces:
            if len(pc.exponents) != len(curve):
                raise InputError(
                    f"orbifold piece has {len(pc.exponents)} exponents for {len(curve)} points"
                )
            for pt, w in zip(curve.points, pc.exponents):
                if not 0 <= w < pt.divisibility:
                    raise InputError(
                        f"point {pt.label}: exponent {w} out of range [0, {pt.divisibility})"
                    )
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "pieces", pieces)


def trivial_orbifold(curve: MarkedCurve) -> OrbBundle:
    return OrbBundle(curve, [OrbLine(0, [0] * len(curve))])


def to_parabolic(O: OrbBundle) -> SplitBundle:
    rs = O.curve.divisibilities
    return SplitBundle(
        O.curve,
        [ParaLine(pc.twist, [Fraction(w, r) for w, r in zip(pc.exponents, rs)]) for pc in O.pieces],
    )


def from_parabolic(B: SplitBundle) -> OrbBundle:
    require_valid(B)
    rs = B.curve.divisibilities
    return OrbBundle(
        B.curve,
        [OrbLine(pc.degree, [int(w * r) for w, r in zip(pc.weights, rs)]) for pc in B.pieces],
    )


def orb_tensor(O1: OrbBundle, O2: OrbBundle) -> OrbBundle:
    if O1.curve != O2.curve:
        raise InputError(f"curve mismatch: {O1.curve.labels} vs {O2.curve.labels}")
    curve = O1.curve
    pieces = []
    for p in O1.pieces:
        for q in O2.pieces:
            twist = p.twist + q.twist
            exps = []
            for pt, w1, w2 in zip(curve.points, p.exponents, q.exponents):
                w = w1 + w2
                # N^r = O(n p)
                if w >= pt.divisibility:
                    w -= pt.divisibility
                    twist += pt.multiplicity
                exps.append(w)
            pieces.append(OrbLine(twist, exps))
    return OrbBundle(curve, pieces)


def reduce_pair(curve: MarkedCurve) -> MarkedCurve:
    """Reduced divisor with divisibilities ``r_i / gcd(n_i, r_i)``.

    Points whose new divisibility is 1 carry no structure; they are kept
    here and dropped by the pullback operations (see :func:`is_removable`).
    """
    return MarkedCurve(
        MarkedPoint(p.label, 1, p.divisibility // math.gcd(p.multiplicity, p.divisibility))
        for p in curve.points
    )


def is_removable(point: MarkedPoint) -> bool:
    return point.multiplicity == 1 and point.divisibility == 1


def orb_root_pullback(O: OrbBundle) -> OrbBundle:
    """Pull back along the reduction morphism of root stacks.

    ``N_i`` on the ``(n_i p_i, r_i)`` stack pulls back to ``N_i'^{n_i/d_i}``
    on the reduced stack, so ``N_i^w`` becomes ``O(a p_i) (x) N_i'^{e/d_i}``
    with ``n_i w = a r_i + e``.  Removable points are deleted.
    """
    curve = O.curve
    reduced = reduce_pair(curve)
    keep = [i for i, p in enumerate(reduced.points) if not is_removable(p)]
    pieces = []
    for pc in O.pieces:
        twist = pc.twist
        exps = []
        for i, (pt, w) in enumerate(zip(curve.points, pc.exponents)):
            d = math.gcd(pt.multiplicity, pt.divisibility)
            a, e = divmod(pt.multiplicity * w, pt.divisibility)
            twist += a
            exps.append(e // d)
        if any(exps[i] for i in range(len(exps)) if i not in keep):
            raise InputError("cannot delete a point carrying a nonzero exponent")
        pieces.append(OrbLine(twist, [exps[i] for i in keep]))
    return OrbBundle(MarkedCurve(reduced.points[i] for i in keep), pieces)


def orb_to_json(O: OrbBundle) -> dict:
    return {
        "curve": curve_to_json(O.curve),
        "pieces": [{"twist": pc.twist, "exponents": list(pc.exponents)} for pc in O.pieces],
    }


def orb_from_json(obj) -> OrbBundle:
    if not isinstance(obj, dict) or set(obj) != {"curve", "pieces"}:
        raise InputError("orbifold bundle must be an object with keys 'curve' and 'pieces'")
    curve = curve_from_json(obj["curve"])
    if not isinstance(obj["pieces"], list):
        raise InputError("'pieces' must be a list")
    pieces = []
    for pc in obj["pieces"]:
        if not isinstance(pc, dict) or set(pc) != {"twist", "exponents"}:
            raise InputError(f"bad orbifold piece: {pc!r}")
        if not isinstance(pc["exponents"], list):
            raise InputError(f"exponents must be a list: {pc!r}")
        pieces.append(OrbLine(pc["twist"], pc["exponents"]))
    return OrbBundle(curve, pieces)
