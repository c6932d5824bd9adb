"""Split parabolic bundles on a marked curve.

A bundle is a finite multiset of rank-one pieces.  A piece of base degree
``d`` and weights ``w_i`` in [0, 1) takes the value

    O(d + sum_i n_i * floor(w_i - a_i))

at the weight vector ``a``, where ``n_i`` is the multiplicity of the i-th
marked point.  All structure (shift, tensor, dual, hom) is computed piecewise
on this normal form, so equality of bundles is equality of sorted piece lists.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .exact import as_rational, rat_floor, rat_frac, rational_from_json, rational_to_json


@dataclass(frozen=True)
class MarkedPoint:
    label: str
    multiplicity: int = 1
    divisibility: int = 1

    def __post_init__(self):
        for name in ("multiplicity", "divisibility"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError(f"point {self.label!r}: {name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class MarkedCurve:
    """The ordered marked points ``(n_1 p_1, ..., n_k p_k)`` with divisibilities."""

    points: tuple[MarkedPoint, ...]

    def __init__(self, points: Iterable):
        pts = []
        for p in points:
            if isinstance(p, MarkedPoint):
                pts.append(p)
            else:
                pts.append(MarkedPoint(*p))
        labels = [p.label for p in pts]
        if len(set(labels)) != len(labels):
            raise InputError(f"marked point labels must be distinct: {labels}")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(p.multiplicity for p in self.points)

    @property
    def divisibilities(self) -> tuple[int, ...]:
        return tuple(p.divisibility for p in self.points)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no marked point labelled {label!r}") from None


@dataclass(frozen=True, order=True)
class ParaLine:
    """Rank-one piece: base degree and one weight per marked point."""

    degree: int
    weights: tuple[Fraction, ...]

    def __init__(self, degree: int, weights: Iterable = ()):
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise InputError(f"degree must be an integer, got {degree!r}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in weights))


@dataclass(frozen=True)
class SplitBundle:
    """A multiset of :class:`ParaLine` pieces on a fixed :class:`MarkedCurve`.

    Pieces are stored sorted (degree, then weights) so that ``==`` is
    multiset equality.  Construction does not check the weight invariants;
    see :func:`validate`.
    """

    curve: MarkedCurve
    pieces: tuple[ParaLine, ...]

    def __init__(self, curve: MarkedCurve, pieces: Iterable[ParaLine]):
        pieces = tuple(sorted(pieces))
        for pc in pieces:
            if len(pc.weights) != len(curve):
                raise InputError(
                    f"piece has {len(pc.weights)} weights but the curve has {len(curve)} points"
                )
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "pieces", pieces)

    @property
    def rank(self) -> int:
        return len(self.pieces)

    def relabel(self, labels: Sequence[str]) -> "SplitBundle":
        if len(labels) != len(self.curve):
            raise InputError("relabel needs one label per marked point")
        curve = MarkedCurve(
            MarkedPoint(lab, p.multiplicity, p.divisibility)
            for lab, p in zip(labels, self.curve.points)
        )
        return SplitBundle(curve, self.pieces)


def unit_bundle(curve: MarkedCurve) -> SplitBundle:
    return SplitBundle(curve, [ParaLine(0, [Fraction(0)] * len(curve))])


def line(curve: MarkedCurve, degree: int, weights: Iterable) -> SplitBundle:
    return SplitBundle(curve, [ParaLine(degree, weights)])


def direct_sum(*bundles: SplitBundle) -> SplitBundle:
    if not bundles:
        raise InputError("direct_sum needs at least one bundle")
    curve = bundles[0].curve
    for b in bundles[1:]:
        _same_curve(curve, b.curve)
    return SplitBundle(curve, [pc for b in bundles for pc in b.pieces])


# ---------------------------------------------------------------------------
# validation


def validate(B: SplitBundle) -> list[str]:
    """All invariant violations of ``B`` as human-readable strings."""
    problems = []
    n_pts = len(B.curve)
    for k, pc in enumerate(B.pieces):
        if len(pc.weights) != n_pts:
            problems.append(f"piece {k}: {len(pc.weights)} weights for {n_pts} points")
            continue
        for pt, w in zip(B.curve.points, pc.weights):
            if not 0 <= w < 1:
                problems.append(f"piece {k}, point {pt.label}: weight out of [0,1): {w}")
            if (w * pt.divisibility).denominator != 1:
                problems.append(
                    f"piece {k}, point {pt.label}: divisibility violation: "
                    f"{w} is not a multiple of 1/{pt.divisibility}"
                )
    return problems


def require_valid(B: SplitBundle) -> SplitBundle:
    problems = validate(B)
    if problems:
        raise InputError("; ".join(problems))
    return B


def _same_curve(c1: MarkedCurve, c2: MarkedCurve) -> None:
    if c1 != c2:
        raise InputError(f"curve mismatch: {c1.labels} vs {c2.labels}")


def check_weight_vector(curve: MarkedCurve, alpha: Sequence) -> tuple[Fraction, ...]:
    """Coerce ``alpha`` to rationals and check it lies on the curve's weight grid."""
    if len(alpha) != len(curve):
        raise InputError(f"weight vector has {len(alpha)} entries for {len(curve)} points")
    out = tuple(as_rational(a) for a in alpha)
    for pt, a in zip(curve.points, out):
        if (a * pt.divisibility).denominator != 1:
            raise InputError(
                f"point {pt.label}: divisibility violation: {a} is not a multiple of 1/{pt.divisibility}"
            )
    return out


# ---------------------------------------------------------------------------
# evaluation and shift


def piece_value(curve: MarkedCurve, pc: ParaLine, alpha: Sequence[Fraction]) -> int:
    return pc.degree + sum(
        n * rat_floor(w - a) for n, w, a in zip(curve.multiplicities, pc.weights, alpha)
    )


def evaluate(B: SplitBundle, alpha: Sequence) -> list[int]:
    """Degrees of the line-bundle summands of the value at ``alpha``, ascending."""
    require_valid(B)
    alpha = check_weight_vector(B.curve, alpha)
    return sorted(piece_value(B.curve, pc, alpha) for pc in B.pieces)


def shift(B: SplitBundle, alpha: Sequence) -> SplitBundle:
    """The shifted bundle ``B[alpha]``, re-normalized to weights in [0, 1)."""
    require_valid(B)
    alpha = check_weight_vector(B.curve, alpha)
    pieces = [
        ParaLine(
            piece_value(B.curve, pc, alpha),
            [rat_frac(w - a) for w, a in zip(pc.weights, alpha)],
        )
        for pc in B.pieces
    ]
    return SplitBundle(B.curve, pieces)


# ---------------------------------------------------------------------------
# tensor structure


def tensor_pieces(curve: MarkedCurve, p: ParaLine, q: ParaLine) -> ParaLine:
    degree = p.degree + q.degree
    weights = []
    for n, w, v in zip(curve.multiplicities, p.weights, q.weights):
        s = w + v
        if s >= 1:
            degree += n
            s -= 1
        weights.append(s)
    return ParaLine(degree, weights)


def tensor(B1: SplitBundle, B2: SplitBundle) -> SplitBundle:
    _same_curve(B1.curve, B2.curve)
    require_valid(B1)
    require_valid(B2)
    return SplitBundle(
        B1.curve, [tensor_pieces(B1.curve, p, q) for p in B1.pieces for q in B2.pieces]
    )


def tensor_power(B: SplitBundle, j: int) -> SplitBundle:
    if not isinstance(j, int) or j < 0:
        raise InputError(f"tensor power must be a nonnegative integer, got {j!r}")
    result = unit_bundle(B.curve)
    for _ in range(j):
        result = tensor(result, B)
    return result


def tensor_oracle_degree(
    L1: ParaLine, L2: ParaLine, curve: MarkedCurve, alpha: Sequence
) -> int:
    """Degree of the rank-one tensor product at ``alpha`` by brute force.

    The value is the sum of the images of ``L1_beta (x) L2_gamma`` over all
    splittings ``beta + gamma = alpha``; for line subsheaves of a common line
    bundle that is the one of largest degree.  The summand is periodic in
    ``beta_i`` with period 1, so one period of the grid suffices per point.
    """
    alpha = check_weight_vector(curve, alpha)
    total = L1.degree + L2.degree
    for pt, w, v, a in zip(curve.points, L1.weights, L2.weights, alpha):
        r = pt.divisibility
        best = None
        for t in range(r + 1):
            beta = a - Fraction(t, r)
            val = rat_floor(w - beta) + rat_floor(v - (a - beta))
            if best is None or val > best:
                best = val
        total += pt.multiplicity * best
    return total


def dual(B: SplitBundle) -> SplitBundle:
    require_valid(B)
    pieces = []
    for pc in B.pieces:
        degree = -pc.degree - sum(
            n for n, w in zip(B.curve.multiplicities, pc.weights) if w > 0
        )
        pieces.append(ParaLine(degree, [rat_frac(-w) for w in pc.weights]))
    return SplitBundle(B.curve, pieces)


def hom(B1: SplitBundle, B2: SplitBundle) -> SplitBundle:
    """Internal hom, computed as ``dual(B1) (x) B2``."""
    _same_curve(B1.curve, B2.curve)
    return tensor(dual(B1), B2)


# ---------------------------------------------------------------------------
# Mehta-Seshadri data


@dataclass(frozen=True)
class FiltrationStep:
    weight: Fraction
    multiplicity: int
    a: int
    e: int


def ms_filtration(B: SplitBundle, i: int) -> list[FiltrationStep]:
    """Distinct weights at point ``i`` (ascending) with their multiplicities.

    For weight ``s/r`` the step also records ``n*s = a*r + e`` with
    ``0 <= e < r``.
    """
    require_valid(B)
    if not 0 <= i < len(B.curve):
        raise InputError(f"point index {i} out of range")
    pt = B.curve.points[i]
    counts = Counter(pc.weights[i] for pc in B.pieces)
    steps = []
    for w in sorted(counts):
        s = int(w * pt.divisibility)
        a, e = divmod(pt.multiplicity * s, pt.divisibility)
        steps.append(FiltrationStep(w, counts[w], a, e))
    return steps


def parabolic_degree(B: SplitBundle) -> Fraction:
    return sum(
        (
            pc.degree + sum(n * w for n, w in zip(B.curve.multiplicities, pc.weights))
            for pc in B.pieces
        ),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# JSON


def curve_to_json(curve: MarkedCurve) -> dict:
    return {
        "points": [
            {"label": p.label, "multiplicity": p.multiplicity, "divisibility": p.divisibility}
            for p in curve.points
        ]
    }


def curve_from_json(obj) -> MarkedCurve:
    if not isinstance(obj, dict) or not isinstance(obj.get("points"), list):
        raise InputError("curve must be an object with a 'points' list")
    pts = []
    for p in obj["points"]:
        if not isinstance(p, dict) or set(p) != {"label", "multiplicity", "divisibility"}:
            raise InputError(f"bad marked point: {p!r}")
        if not isinstance(p["label"], str):
            raise InputError(f"point label must be a string: {p!r}")
        pts.append(MarkedPoint(p["label"], p["multiplicity"], p["divisibility"]))
    return MarkedCurve(pts)


def bundle_to_json(B: SplitBundle) -> dict:
    return {
        "curve": curve_to_json(B.curve),
        "pieces": [
            {"degree": pc.degree, "weights": [rational_to_json(w) for w in pc.weights]}
            for pc in B.pieces
        ],
    }


def bundle_from_json(obj) -> SplitBundle:
    """Parse the bundle format; schema errors raise, invariants are left to :func:`validate`."""
    if not isinstance(obj, dict) or set(obj) != {"curve", "pieces"}:
        raise InputError("bundle must be an object with keys 'curve' and 'pieces'")
    curve = curve_from_json(obj["curve"])
    if not isinstance(obj["pieces"], list):
        raise InputError("'pieces' must be a list")
    pieces = []
    for pc in obj["pieces"]:
        if not isinstance(pc, dict) or set(pc) != {"degree", "weights"}:
            raise InputError(f"bad piece: {pc!r}")
        if not isinstance(pc["weights"], list):
            raise InputError(f"piece weights must be a list: {pc!r}")
        pieces.append(ParaLine(pc["degree"], [rational_from_json(w) for w in pc["weights"]]))
    return SplitBundle(curve, pieces)


def grid_size(curve: MarkedCurve) -> int:
    return math.prod(curve.divisibilities)
