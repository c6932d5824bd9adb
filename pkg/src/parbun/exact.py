"""Exact scalars: rationals and cyclotomic integers.

Rationals are :class:`fractions.Fraction`; this module only adds the floor,
fractional-part and strict JSON helpers used everywhere else.

Cyclotomic integers live in Z[zeta_r].  Elements are stored as a length-``r``
coefficient vector (index ``t`` is the coefficient of ``zeta_r**t``) and are
kept in the canonical form obtained by reducing modulo the cyclotomic
polynomial Phi_r.  Two elements are equal iff their stored vectors agree, and
an element is a rational integer iff only index 0 is non-zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import InputError

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, (Integral, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def rat_floor(q) -> int:
    """Greatest integer <= q (true floor, also for negative q)."""
    return math.floor(as_rational(q))


def rat_frac(q) -> Fraction:
    """Fractional part ``q - floor(q)``, always in [0, 1)."""
    q = as_rational(q)
    return q - math.floor(q)


def rational_to_json(q) -> dict:
    q = as_rational(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj) -> Fraction:
    """Parse ``{"num": int, "den": int}``; non-reduced input is rejected."""
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise InputError(f"rational must be an object with keys num, den: {obj!r}")
    num, den = obj["num"], obj["den"]
    for v in (num, den):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InputError(f"rational fields must be integers: {obj!r}")
    if den <= 0:
        raise InputError(f"rational denominator must be positive: {obj!r}")
    if math.gcd(num, den) != 1:
        raise InputError(f"rational is not in reduced form: {obj!r}")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# cyclotomic integers


def _poly_divmod_monic(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # coefficient lists lowest degree first; den must be monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, dc in enumerate(den):
                num[k - dd + i] -= c * dc
    return quot, num[:dd] if dd else [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise InputError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _canonical(order: int, coeffs: Iterable[int]) -> tuple[int, ...]:
    folded = [0] * order
    for t, c in enumerate(coeffs):
        folded[t % order] += c
    _, rem = _poly_divmod_monic(folded, cyclotomic_polynomial(order))
    return tuple(rem) + (0,) * (order - len(rem))


@dataclass(frozen=True)
class CycElem:
    """An element of Z[zeta_r] with ``zeta_r = exp(2*pi*i/r)``."""

    order: int
    coeffs: tuple[int, ...]

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if not isinstance(order, int) or order < 1:
            raise InputError(f"cyclotomic order must be a positive integer, got {order!r}")
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InputError(f"cyclotomic coefficients must be integers: {coeffs!r}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _canonical(order, coeffs))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycElem":
        coeffs = [0] * order
        coeffs[k % order] = 1
        return cls(order, coeffs)

    @classmethod
    def integer(cls, order: int, n: int) -> "CycElem":
        return cls(order, [n])

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            if other.order != self.order:
                raise InputError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return CycElem.integer(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers of cyclotomic integers are not supported")
        result = CycElem.integer(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise InputError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def lift(self, order: int) -> "CycElem":
        """The same number viewed in Z[zeta_order]; ``order`` must be a multiple."""
        if order % self.order:
            raise InputError(f"cannot lift order {self.order} into order {order}")
        step = order // self.order
        coeffs = [0] * order
        for t, c in enumerate(self.coeffs):
            coeffs[t * step] = c
        return CycElem(order, coeffs)

    def __repr__(self) -> str:
        terms = [
            f"{c}" if t == 0 else f"{c}*z{self.order}^{t}"
            for t, c in enumerate(self.coeffs)
            if c
        ]
        return f"CycElem({' + '.join(terms) or '0'})"


def cyc_mul(a: CycElem, b: CycElem) -> CycElem:
    """Ring product in Z[zeta_r]; both factors must have the same order."""
    if a.order != b.order:
        raise InputError(f"cyclotomic order mismatch: {a.order} vs {b.order}")
    r = a.order
    out = [0] * r
    for s, x in enumerate(a.coeffs):
        if x:
            for t, y in enumerate(b.coeffs):
                if y:
                    out[(s + t) % r] += x * y
    return CycElem(r, out)


def cyc_to_json(z: CycElem) -> list[int]:
    return list(z.coeffs)


def cyc_from_json(obj, order: int) -> CycElem:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return CycElem.integer(order, obj)
    if not isinstance(obj, list) or len(obj) != order:
        raise InputError(f"cyclotomic element must be a list of {order} integers: {obj!r}")
    return CycElem(order, obj)


TraceLike = Union[CycElem, int]


def weight_multiplicities(r: int, traces: Sequence[TraceLike]) -> list[int]:
    """Multiplicity of each character ``t -> zeta_r**(j*t)`` in a representation
    of Z/r, recovered exactly from the traces of ``g**0, ..., g**(r-1)``.

    Traces may be plain integers or cyclotomic integers of any order; they are
    lifted to a common cyclotomic field before the discrete Fourier sum.
    """
    if not isinstance(r, int) or r < 1:
        raise InputError(f"group order must be a positive integer, got {r!r}")
    if len(traces) != r:
        raise InputError(f"expected {r} traces, got {len(traces)}")
    L = r
    for tr in traces:
        if isinstance(tr, CycElem):
            L = math.lcm(L, tr.order)
    lifted = [
        tr.lift(L) if isinstance(tr, CycElem) else CycElem.integer(L, tr) for tr in traces
    ]
    step = L // r
    mults = []
    for j in range(r):
        acc = CycElem(L)
        for t, tr in enumerate(lifted):
            acc = acc + tr * CycElem.zeta(L, -j * t * step)
        if not acc.is_integer():
            raise InputError(f"weight {j}: Fourier sum {acc!r} is not an integer")
        total = acc.to_int()
        if total % r:
            raise InputError(f"weight {j}: Fourier sum {total} is not divisible by {r}")
        if total < 0:
            raise InputError(f"weight {j}: negative multiplicity {total // r}")
        mults.append(total // r)
    dim = lifted[0]
    if not dim.is_integer() or sum(mults) != dim.to_int():
        raise InputError("multiplicities do not sum to the dimension traces[0]")
    return mults
