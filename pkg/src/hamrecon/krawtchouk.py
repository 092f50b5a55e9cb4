"""Exact Krawtchouk polynomial values and Hamming-graph eigenvalues.

For an alphabet of size q the value at integer arguments is

    P_i(t; N) = sum_{j=0}^{i} (-1)^j (q-1)^(i-j) C(t, j) C(N-t, i-j),

the eigenvalue of the i-th distance matrix of the Hamming scheme H(N, q)
on its t-th common eigenspace.  The same numbers appear as coefficients of
the bivariate generating polynomial

    (x - y)^t (x + (q-1)y)^(N-t) = sum_i P_i(t; N) y^i x^(N-i),

which this module expands independently (plain integer convolution) so the
two routes can be cross-checked against each other.

Everything here is arbitrary-precision integer arithmetic.  The
nondegeneracy checks downstream hinge on exact zero tests, so no value in
this module may ever pass through a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _check_args(q: int, i: int, t: int, N: int) -> None:
    if q < 2:
        raise ValueError(f"alphabet parameter must be >= 2, got q={q}")
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    if not 0 <= i <= N:
        raise ValueError(f"degree i={i} outside [0, {N}]")
    if not 0 <= t <= N:
        raise ValueError(f"argument t={t} outside [0, {N}]")


def krawtchouk_value(q: int, i: int, t: int, N: int) -> int:
    """P_i(t; N) for alphabet size q, by the defining alternating sum."""
    _check_args(q, i, t, N)
    return sum(
        (-1) ** j * (q - 1) ** (i - j) * math.comb(t, j) * math.comb(N - t, i - j)
        for j in range(i + 1)
    )


def krawtchouk_row(q: int, t: int, N: int) -> list[int]:
    """[P_0(t; N), ..., P_N(t; N)]."""
    return [krawtchouk_value(q, i, t, N) for i in range(N + 1)]


def _binomial_power(a: int, e: int) -> list[int]:
    # y-coefficients of (x + a*y)^e as a homogeneous bivariate polynomial
    return [math.comb(e, m) * a**m for m in range(e + 1)]


def polymul(p: list[int], r: list[int]) -> list[int]:
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(r):
            out[i + j] += a * b
    return out


def generating_coefficients(q: int, t: int, N: int) -> list[int]:
    """Coefficients of y^i x^(N-i) in (x - y)^t (x + (q-1)y)^(N-t).

    An independent oracle for :func:`krawtchouk_value`: it never evaluates
    the alternating sum, only multiplies out the two binomial powers.
    """
    _check_args(q, 0, t, N)
    return polymul(_binomial_power(-1, t), _binomial_power(q - 1, N - t))


@dataclass(frozen=True)
class KrawtchoukTable:
    """All values P_i(t; N), 0 <= i, t <= N, for a fixed (q, N)."""

    q: int
    N: int
    values: tuple[tuple[int, ...], ...]  # values[i][t]

    @classmethod
    def build(cls, q: int, N: int) -> "KrawtchoukTable":
        _check_args(q, 0, 0, N)
        rows = tuple(
            tuple(krawtchouk_value(q, i, t, N) for t in range(N + 1)) for i in range(N + 1)
        )
        return cls(q=q, N=N, values=rows)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, t = key
        return self.values[i][t]


@dataclass(frozen=True)
class SpectralIndex:
    """Eigenvalue lambda = (q-1)n - q*h together with its index h."""

    h: int
    eigenvalue: int


def eigenvalue_of_index(q: int, n: int, h: int) -> SpectralIndex:
    if not 0 <= h <= n:
        raise ValueError(f"eigenvalue index h={h} outside [0, {n}]")
    return SpectralIndex(h=h, eigenvalue=(q - 1) * n - q * h)


def index_of_eigenvalue(q: int, n: int, eigenvalue: int) -> SpectralIndex:
    """Inverse of :func:`eigenvalue_of_index`; rejects non-eigenvalues."""
    num = (q - 1) * n - eigenvalue
    h, rem = divmod(num, q)
    if rem != 0 or not 0 <= h <= n:
        raise ValueError(
            f"{eigenvalue} is not an eigenvalue of the ({q}, {n}) Hamming graph"
        )
    return SpectralIndex(h=h, eigenvalue=eigenvalue)
