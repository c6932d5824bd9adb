"""Whole-period grid evaluation on integer numerators.

The exact API in :mod:`parbun.parabolic` evaluates one weight vector at a
time with rationals.  Exhaustive checks sweep every grid point of a period,
so they go through the integer kernels here instead.  A weight ``s/r`` is
passed as its numerator ``s``; grid point ``t`` on a point of divisibility
``r`` is the weight ``t/r``.

Each kernel has a numba ``@njit`` version and a numpy version.  The numba
path is used when numba imports and ``PARBUN_DISABLE_NUMBA`` is unset or
``0``; pass ``backend=`` to force one.  Values are int64.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import InputError
from .parabolic import MarkedCurve, ParaLine, SplitBundle, require_valid

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_INT64_SAFE = 2**60


def default_backend() -> str:
    flag = os.environ.get("PARBUN_DISABLE_NUMBA", "").strip().lower()
    if HAVE_NUMBA and flag in ("", "0", "false", "no"):
        return "numba"
    return "numpy"


def _resolve(backend):
    backend = backend or default_backend()
    if backend not in ("numba", "numpy"):
        raise InputError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise InputError("numba backend requested but numba is not installed")
    return backend


# ---------------------------------------------------------------------------
# numpy versions


def _piece_grid_numpy(degree, nums, dens, mults):
    out = np.full((), degree, dtype=np.int64)
    for s, r, n in zip(nums, dens, mults):
        col = n * np.floor_divide(s - np.arange(r, dtype=np.int64), r)
        out = np.add.outer(out, col)
    return out


def _bbn_grid_numpy(degree, nums1, nums2, dens, mults):
    out = np.full((), degree, dtype=np.int64)
    for s1, s2, r, n in zip(nums1, nums2, dens, mults):
        k = np.arange(r, dtype=np.int64)[:, None]
        t = np.arange(r + 1, dtype=np.int64)[None, :]
        vals = np.floor_divide(s1 - k + t, r) + np.floor_divide(s2 - t, r)
        out = np.add.outer(out, n * vals.max(axis=1))
    return out


# ---------------------------------------------------------------------------
# numba versions (flat row-major loops)

if HAVE_NUMBA:

    @njit(cache=True)
    def _fill_from_columns(degree, cols, dens):
        # out[t_1, ..., t_k] = degree + sum_i cols[i, t_i], row-major;
        # the index is stepped like an odometer to avoid a division per cell
        k = dens.shape[0]
        total = 1
        for i in range(k):
            total *= dens[i]
        out = np.empty(total, np.int64)
        idx = np.zeros(k, np.int64)
        val = degree
        for i in range(k):
            val += cols[i, 0]
        for flat in range(total):
            out[flat] = val
            i = k - 1
            while i >= 0:
                val -= cols[i, idx[i]]
                idx[i] += 1
                if idx[i] < dens[i]:
                    val += cols[i, idx[i]]
                    break
                idx[i] = 0
                val += cols[i, 0]
                i -= 1
        return out

    @njit(cache=True)
    def _piece_grid_jit(degree, nums, dens, mults):
        k = nums.shape[0]
        cols = np.zeros((k, max(dens.max(), 1) if k else 1), np.int64)
        for i in range(k):
            r = dens[i]
            for t in range(r):
                cols[i, t] = mults[i] * ((nums[i] - t) // r)
        return _fill_from_columns(degree, cols, dens)

    @njit(cache=True)
    def _bbn_grid_jit(degree, nums1, nums2, dens, mults):
        k = nums1.shape[0]
        cols = np.zeros((k, max(dens.max(), 1) if k else 1), np.int64)
        for i in range(k):
            r = dens[i]
            for a in range(r):
                best = (nums1[i] - a) // r + nums2[i] // r
                for t in range(1, r + 1):
                    cand = (nums1[i] - a + t) // r + (nums2[i] - t) // r
                    if cand > best:
                        best = cand
                cols[i, a] = mults[i] * best
        return _fill_from_columns(degree, cols, dens)


def _ints(values) -> np.ndarray:
    arr = np.asarray(list(values), dtype=object)
    if arr.size and np.max(np.abs(arr)) >= _INT64_SAFE:
        raise InputError("value too large for the int64 grid kernels")
    return arr.astype(np.int64).reshape(-1)


def _check_degree(d: int) -> None:
    if abs(d) >= _INT64_SAFE:
        raise InputError("degree too large for the int64 grid kernels")


def piece_grid(degree, nums, dens, mults, backend=None) -> np.ndarray:
    """``degree + sum_i n_i * floor((s_i - t_i) / r_i)`` for every ``t`` in the period."""
    _check_degree(degree)
    nums, dens, mults = _ints(nums), _ints(dens), _ints(mults)
    if _resolve(backend) == "numba":
        return _piece_grid_jit(np.int64(degree), nums, dens, mults).reshape(tuple(dens))
    return _piece_grid_numpy(degree, nums, dens, mults)


def bbn_grid(degree, nums1, nums2, dens, mults, backend=None) -> np.ndarray:
    """Per-point maximum over one period of splittings, summed over points."""
    _check_degree(degree)
    nums1, nums2 = _ints(nums1), _ints(nums2)
    dens, mults = _ints(dens), _ints(mults)
    if _resolve(backend) == "numba":
        return _bbn_grid_jit(np.int64(degree), nums1, nums2, dens, mults).reshape(tuple(dens))
    return _bbn_grid_numpy(degree, nums1, nums2, dens, mults)


def _numerators(curve: MarkedCurve, pc: ParaLine) -> list[int]:
    return [int(w * r) for w, r in zip(pc.weights, curve.divisibilities)]


def evaluate_grid(B: SplitBundle, backend=None) -> np.ndarray:
    """Values of ``B`` at every grid point of ``[0,1)^k``.

    Shape is ``(rank, r_1, ..., r_k)``; axis 0 is sorted ascending so that
    ``out[(slice(None),) + t]`` is ``evaluate(B, t/r)``.
    """
    require_valid(B)
    curve = B.curve
    layers = [
        piece_grid(pc.degree, _numerators(curve, pc), curve.divisibilities,
                   curve.multiplicities, backend)
        for pc in B.pieces
    ]
    if not layers:
        return np.zeros((0,) + curve.divisibilities, dtype=np.int64)
    return np.sort(np.stack(layers), axis=0)


def tensor_oracle_grid(L1: ParaLine, L2: ParaLine, curve: MarkedCurve, backend=None) -> np.ndarray:
    """:func:`parbun.parabolic.tensor_oracle_degree` at every grid point of one period."""
    require_valid(SplitBundle(curve, [L1, L2]))
    return bbn_grid(
        L1.degree + L2.degree,
        _numerators(curve, L1),
        _numerators(curve, L2),
        curve.divisibilities,
        curve.multiplicities,
        backend,
    )
