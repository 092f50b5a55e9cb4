"""Exact singularity testing for dense rational matrices.

The nondegeneracy sweep needs an answer to "is this matrix of exact
rationals singular?" that is certified, not floating-point.  Small
matrices go through plain fraction elimination.  For larger ones the
verdict is still exact but assembled from cheaper certificates:

* a full rank modulo a single prime certifies nonsingularity outright
  (a nonzero determinant mod p is nonzero over the rationals);
* singularity is certified by an explicit rational kernel vector,
  recovered from reduced row echelon forms modulo several word-sized
  primes (CRT + rational reconstruction) and then verified by an exact
  integer matrix-vector product.

If the certificate search is exhausted without a verdict (which would
take an adversarial matrix whose determinant is divisible by every prime
in the list), the code falls back to full fraction elimination, so the
answer is exact in every path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

# primes just under 2^31; products of two residues stay inside int64
_PRIMES = (
    2147483647,
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
    2147483489,
    2147483477,
    2147483423,
    2147483399,
    2147483353,
    2147483323,
    2147483269,
    2147483249,
    2147483237,
    2147483179,
    2147483171,
    2147483137,
    2147483123,
    2147483077,
    2147483069,
    2147483059,
)

_FRACTION_ELIMINATION_LIMIT = 64


def fraction_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by straightforward Gaussian elimination."""
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    a = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        for r in range(rank + 1, m):
            if a[r][col] == 0:
                continue
            factor = a[r][col] * inv
            row_r, row_p = a[r], a[rank]
            for c in range(col, ncols):
                row_r[c] -= factor * row_p[c]
        rank += 1
        if rank == m:
            break
    return rank


def _integer_matrix(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # matrices here typically hold very few distinct values; memoize conversions
    denom = 1
    seen: dict = {}
    for row in rows:
        for x in row:
            if x not in seen:
                seen[x] = Fraction(x)
                d = seen[x].denominator
                denom = denom * d // math.gcd(denom, d)
    if denom == 1:
        scaled = {x: int(f) for x, f in seen.items()}
    else:
        scaled = {x: int(f * denom) for x, f in seen.items()}
    return [[scaled[x] for x in row] for row in rows]


def _mod_matrix(int_rows: list[list[int]], p: int) -> np.ndarray:
    try:
        return np.array(int_rows, dtype=np.int64) % p
    except OverflowError:
        return np.array([[x % p for x in row] for row in int_rows], dtype=np.int64)


def _rank_mod(a: np.ndarray, p: int) -> int:
    """Rank of a over GF(p); destroys its argument."""
    m, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1 :, col]
        hit = np.nonzero(below)[0]
        if hit.size:
            rows = rank + 1 + hit
            a[rows, col:] = (a[rows, col:] - np.outer(a[rows, col], a[rank, col:])) % p
        rank += 1
    return rank


def _rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form over GF(p) (canonical) and its pivot columns."""
    m, ncols = a.shape
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        if others.size:
            a[others, col:] = (a[others, col:] - np.outer(a[others, col], a[rank, col:])) % p
        pivots.append(col)
        rank += 1
    return a, tuple(pivots)


def _kernel_vector_mod(rref: np.ndarray, pivots: tuple[int, ...], free_col: int, p: int) -> list[int]:
    # canonical kernel vector with the chosen free coordinate set to 1
    ncols = rref.shape[1]
    v = [0] * ncols
    v[free_col] = 1
    for row, col in enumerate(pivots):
        v[col] = (-int(rref[row, free_col])) % p
    return v


def _crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        inv = pow(m % p, p - 2, p)
        t = ((r - x) * inv) % p
        x = x + m * t
        m *= p
    return x % m, m


def _rational_reconstruct(r: int, m: int) -> Fraction | None:
    """a/b with r*b = a (mod m), |a|, b <= sqrt(m/2), if one exists."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, r % m
    t0, t1 = 0, 1
    while r1 > bound:
        qout = r0 // r1
        r0, r1 = r1, r0 - qout * r1
        t0, t1 = t1, t0 - qout * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _verify_kernel(int_rows: list[list[int]], vec: list[int]) -> bool:
    if all(x == 0 for x in vec):
        return False
    for row in int_rows:
        if sum(a * b for a, b in zip(row, vec) if b != 0) != 0:
            return False
    return True


def kernel_vector(rows: Sequence[Sequence[Fraction]]) -> list[Fraction] | None:
    """An exact, verified nonzero kernel vector, or None if nonsingular.

    Only meaningful for square matrices.  The returned vector satisfies
    M v = 0 in exact arithmetic (this is re-verified before returning).
    """
    m = len(rows)
    int_rows = _integer_matrix(rows)
    for p in _PRIMES[:3]:
        if _rank_mod(_mod_matrix(int_rows, p), p) == m:
            return None
    # deficient modulo several primes: hunt for an exact kernel certificate
    reference_pivots: tuple[int, ...] | None = None
    residues: list[list[int]] = []
    moduli: list[int] = []
    for p in _PRIMES:
        rref, pivots = _rref_mod(_mod_matrix(int_rows, p), p)
        if len(pivots) == m:
            return None  # full rank after all: nonsingular, certified
        if reference_pivots is None:
            reference_pivots = pivots
        elif pivots != reference_pivots:
            continue  # unlucky prime: pivot structure differs, skip it
        free_col = next(c for c in range(m) if c not in reference_pivots)
        residues.append(_kernel_vector_mod(rref, pivots, free_col, p))
        moduli.append(p)
        if len(moduli) < 2:
            continue
        coords: list[Fraction] = []
        for idx in range(m):
            combined, modulus = _crt([r[idx] for r in residues], moduli)
            frac = _rational_reconstruct(combined, modulus)
            if frac is None:
                break
            coords.append(frac)
        else:
            denom = math.lcm(*(f.denominator for f in coords)) if coords else 1
            candidate = [int(f * denom) for f in coords]
            if _verify_kernel(int_rows, candidate):
                return [Fraction(x) for x in candidate]
    return None  # no certificate found; caller decides on the slow path


def is_singular(rows: Sequence[Sequence[Fraction]]) -> bool:
    """Exact singularity decision for a square matrix of rationals."""
    m = len(rows)
    if any(len(row) != m for row in rows):
        raise ValueError("matrix must be square")
    if m == 0:
        return False
    if m <= _FRACTION_ELIMINATION_LIMIT:
        return fraction_rank(rows) < m
    int_rows = _integer_matrix(rows)
    for p in _PRIMES[:3]:
        if _rank_mod(_mod_matrix(int_rows, p), p) == m:
            return False
    vec = kernel_vector(rows)
    if vec is not None:
        return True
    # certificate search failed: settle it by exact elimination
    return fraction_rank(rows) < m
