"""Upper bounds on the Nori bundle degrees of a G-cover of P^1 - {0, 1, inf}.

The cover is given by the images of the loops around 0 and 1, either as
generator matrices of a representation ``V`` or directly as the orders and
stabilizer weights (:class:`CoverSpec`).  Pulling back along ``z -> z**m``
removes the ramification at 0 and leaves a cyclic Z/c situation.  Its
degrees ``t_j`` give the bound

    u_j <= (t_j - a_0 - a_inf) / m

on the sorted degrees ``u_j`` of ``V``'s bundle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclic import CyclicCoverParams, s_j
from .errors import InputError
from .exact import CycElem, cyc_from_json, rat_floor, rational_to_json, weight_multiplicities

ORDER_CUTOFF = 10_000

Matrix = tuple[tuple[CycElem, ...], ...]


# ---------------------------------------------------------------------------
# matrices over cyclotomic integers


def as_matrix(rows, order: int | None = None) -> Matrix:
    rows = [list(r) for r in rows]
    dim = len(rows)
    if dim == 0 or any(len(r) != dim for r in rows):
        raise InputError("generator matrices must be square and non-empty")
    if order is None:
        orders = {x.order for r in rows for x in r if isinstance(x, CycElem)}
        if len(orders) > 1:
            raise InputError(f"mixed cyclotomic orders in one matrix: {sorted(orders)}")
        order = orders.pop() if orders else 1
    out = []
    for r in rows:
        out.append(tuple(x if isinstance(x, CycElem) else CycElem.integer(order, x) for x in r))
    return tuple(out)


def identity(dim: int, order: int) -> Matrix:
    one, zero = CycElem.integer(order, 1), CycElem(order)
    return tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    if len(B) != n:
        raise InputError(f"dimension mismatch: {n} vs {len(B)}")
    order = A[0][0].order
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = CycElem(order)
            for k in range(n):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def trace(A: Matrix) -> CycElem:
    acc = CycElem(A[0][0].order)
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def multiplicative_order(A: Matrix, cutoff: int = ORDER_CUTOFF) -> int:
    one = identity(len(A), A[0][0].order)
    P = A
    for k in range(1, cutoff + 1):
        if P == one:
            return k
        P = mat_mul(P, A)
    raise InputError(f"matrix has no finite order below {cutoff}")


def stabilizer_weights(A: Matrix, order: int) -> list[int]:
    """Weights ``j`` (eigenvalue ``exp(2 pi i j / order)``) with multiplicity, ascending."""
    traces = []
    P = identity(len(A), A[0][0].order)
    for _ in range(order):
        traces.append(trace(P))
        P = mat_mul(P, A)
    mults = weight_multiplicities(order, traces)
    return [j for j, k in enumerate(mults) for _ in range(k)]


# ---------------------------------------------------------------------------
# cover data


@dataclass(frozen=True)
class CoverSpec:
    m: int
    c: int
    r_inf: int
    weights0: tuple[int, ...]
    weights1: tuple[int, ...]
    weights_inf: tuple[int, ...]

    def __init__(self, m, c, r_inf, weights0, weights1, weights_inf):
        for name, v in (("m", m), ("c", c), ("r_inf", r_inf)):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError(f"{name} must be a positive integer, got {v!r}")
        ws = []
        for name, w, r in (("weights0", weights0, m), ("weights1", weights1, c),
                           ("weights_inf", weights_inf, r_inf)):
            w = tuple(sorted(w))
            for x in w:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < r:
                    raise InputError(f"{name}: weight {x!r} not an integer in [0, {r})")
            ws.append(w)
        if not len(ws[0]) == len(ws[1]) == len(ws[2]) >= 1:
            raise InputError("weight multisets must have the same positive size (dim V)")
        for name, v in (("m", m), ("c", c), ("r_inf", r_inf)):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "weights0", ws[0])
        object.__setattr__(self, "weights1", ws[1])
        object.__setattr__(self, "weights_inf", ws[2])

    @property
    def dim(self) -> int:
        return len(self.weights1)


@dataclass(frozen=True)
class BoundReport:
    t: tuple[int, ...]
    a0: int
    a_inf: int
    u_bounds: tuple[int, ...]
    u_bounds_exact: tuple[Fraction, ...]


def spec_from_matrices(gen0, gen1) -> CoverSpec:
    """Orders and stabilizer weights of the loops around 0, 1 and infinity.

    The loop around infinity is ``(gen0 * gen1)^-1``, computed as a
    positive power since the product has finite order.
    """
    g0, g1 = as_matrix(gen0), as_matrix(gen1)
    if len(g0) != len(g1):
        raise InputError(f"dimension mismatch: {len(g0)} vs {len(g1)}")
    order = max(g0[0][0].order, g1[0][0].order)
    if order % g0[0][0].order or order % g1[0][0].order:
        raise InputError("generators use incompatible cyclotomic orders")
    g0 = tuple(tuple(x.lift(order) for x in r) for r in g0)
    g1 = tuple(tuple(x.lift(order) for x in r) for r in g1)
    m = multiplicative_order(g0)
    c = multiplicative_order(g1)
    prod = mat_mul(g0, g1)
    k = multiplicative_order(prod)
    g_inf = identity(len(g0), order)
    for _ in range(k - 1):
        g_inf = mat_mul(g_inf, prod)
    r_inf = multiplicative_order(g_inf)
    return CoverSpec(
        m, c, r_inf,
        stabilizer_weights(g0, m),
        stabilizer_weights(g1, c),
        stabilizer_weights(g_inf, r_inf),
    )


def t_values(S: CoverSpec) -> list[int]:
    P = CyclicCoverParams(S.m, S.c)
    return sorted(s_j(P, j) for j in S.weights1)


def a_values(S: CoverSpec) -> tuple[int, int]:
    """``floor(n*s/r)`` for the smallest weight at 0 and at infinity after pullback.

    Both points have multiplicity ``m`` after pulling back along ``z**m``;
    their divisibilities are ``m`` and ``r_inf``.
    """
    a0 = (S.m * min(S.weights0)) // S.m
    a_inf = (S.m * min(S.weights_inf)) // S.r_inf
    return a0, a_inf


def bound_u(S: CoverSpec) -> BoundReport:
    t = t_values(S)
    a0, a_inf = a_values(S)
    exact = tuple(Fraction(tj - a0 - a_inf, S.m) for tj in t)
    return BoundReport(tuple(t), a0, a_inf, tuple(rat_floor(q) for q in exact), exact)


def can_inject(s: Sequence[int], t: Sequence[int]) -> bool:
    """Whether some permutation pairs each ``s`` entry with a ``t`` entry at least as large."""
    if len(s) != len(t):
        raise InputError(f"length mismatch: {len(s)} vs {len(t)}")
    return all(a <= b for a, b in zip(sorted(s), sorted(t)))


# ---------------------------------------------------------------------------
# JSON


def _int_list(obj, name) -> list[int]:
    if not isinstance(obj, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in obj):
        raise InputError(f"{name} must be a list of integers")
    return obj


def cover_spec_from_json(obj) -> CoverSpec:
    keys = {"m", "c", "r_inf", "weights0", "weights1", "weights_inf"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise InputError(f"cover spec must be an object with keys {sorted(keys)}")
    return CoverSpec(
        obj["m"], obj["c"], obj["r_inf"],
        _int_list(obj["weights0"], "weights0"),
        _int_list(obj["weights1"], "weights1"),
        _int_list(obj["weights_inf"], "weights_inf"),
    )


def cover_spec_to_json(S: CoverSpec) -> dict:
    return {
        "m": S.m, "c": S.c, "r_inf": S.r_inf,
        "weights0": list(S.weights0),
        "weights1": list(S.weights1),
        "weights_inf": list(S.weights_inf),
    }


def matrices_from_json(obj) -> tuple[Matrix, Matrix]:
    keys = {"dim", "cyclotomic_order", "gen0", "gen1"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise InputError(f"matrices object must have keys {sorted(keys)}")
    dim, order = obj["dim"], obj["cyclotomic_order"]
    for name, v in (("dim", dim), ("cyclotomic_order", order)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InputError(f"{name} must be a positive integer")
    gens = []
    for name in ("gen0", "gen1"):
        rows = obj[name]
        if not isinstance(rows, list) or len(rows) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in rows
        ):
            raise InputError(f"{name} must be a {dim}x{dim} array")
        gens.append(as_matrix([[cyc_from_json(x, order) for x in r] for r in rows], order))
    return gens[0], gens[1]


def report_to_json(R: BoundReport) -> dict:
    return {
        "t": list(R.t),
        "a0": R.a0,
        "a_inf": R.a_inf,
        "u_bounds": list(R.u_bounds),
        "u_bounds_exact": [rational_to_json(q) for q in R.u_bounds_exact],
    }
