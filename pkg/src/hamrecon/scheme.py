"""Words, Hamming metric, and region enumeration for the q-ary n-cube.

The vertex set is the abelian group Z_q^n of words with n digits in
{0, ..., q-1}.  Two words are adjacent when they differ in exactly one
position.  Everything downstream (local distributions, transfer
coefficients, reconstruction) enumerates the regions defined here:

* sphere  W_r(c)   -- words at Hamming distance exactly r from c,
* ball    B_r(c)   -- words at distance at most r,
* face    G^I(c)   -- words agreeing with c outside the position set I
                      (an |I|-dimensional subcube),
* full-support S^I -- words whose set of nonzero positions is exactly I.

Positions are 1-based throughout the public API.  A word is a plain tuple
of digits; its rank is the value of the digit string read as a base-q
numeral, most significant position first, which doubles as the index into
dense value arrays.

Enumeration alone never allocates more than q^n items; construction of
``SchemeParams`` refuses instances above a configurable state cap so a
typo in (q, n) fails fast instead of exhausting memory.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

Word = tuple[int, ...]
IndexSet = tuple[int, ...]

DEFAULT_MAX_STATES = 4096 * 16
MAX_STATES_ENV = "HAMRECON_MAX_STATES"


def max_states() -> int:
    """Current enumeration cap on q^n (env var overrides the default)."""
    raw = os.environ.get(MAX_STATES_ENV)
    if raw is None:
        return DEFAULT_MAX_STATES
    value = int(raw)
    if value < 1:
        raise ValueError(f"{MAX_STATES_ENV} must be positive, got {raw}")
    return value


@dataclass(frozen=True)
class SchemeParams:
    """Alphabet size q >= 3 and dimension n >= 1 of the Hamming space."""

    q: int
    n: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise ValueError(f"alphabet size must be at least 3, got q={self.q}")
        if self.n < 1:
            raise ValueError(f"dimension must be at least 1, got n={self.n}")
        cap = max_states()
        if self.q**self.n > cap:
            raise ValueError(
                f"q^n = {self.q}^{self.n} exceeds the enumeration cap {cap}"
                f" (set {MAX_STATES_ENV} to raise it)"
            )

    @property
    def size(self) -> int:
        return self.q**self.n

    def positions(self) -> range:
        """All positions 1..n."""
        return range(1, self.n + 1)


# ---------------------------------------------------------------------------
# words


def check_word(params: SchemeParams, word: Sequence[int]) -> Word:
    w = tuple(int(x) for x in word)
    if len(w) != params.n:
        raise ValueError(f"word length {len(w)} != n = {params.n}")
    for x in w:
        if not 0 <= x < params.q:
            raise ValueError(f"digit {x} outside [0, {params.q})")
    return w


def zero_word(params: SchemeParams) -> Word:
    return (0,) * params.n


def word_rank(params: SchemeParams, word: Sequence[int]) -> int:
    """Rank of a word: its digit string read as a base-q numeral."""
    r = 0
    for x in word:
        r = r * params.q + int(x)
    return r


def rank_word(params: SchemeParams, rank: int) -> Word:
    if not 0 <= rank < params.size:
        raise ValueError(f"rank {rank} outside [0, {params.size})")
    digits = [0] * params.n
    for pos in range(params.n - 1, -1, -1):
        rank, digits[pos] = divmod(rank, params.q)
    return tuple(digits)


def word_text(word: Sequence[int]) -> str:
    """Text form: digits concatenated, most significant position first."""
    if any(x > 9 for x in word):
        raise ValueError("text form is only defined for single-character digits (q <= 10)")
    return "".join(str(x) for x in word)


def parse_word(params: SchemeParams, text: str) -> Word:
    if params.q > 10:
        raise ValueError("text form is only defined for q <= 10")
    return check_word(params, [int(c) for c in text])


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of positions where the two words differ."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def weight(a: Sequence[int]) -> int:
    return sum(1 for x in a if x != 0)


def support(a: Sequence[int]) -> IndexSet:
    """1-based positions of the nonzero digits."""
    return tuple(pos for pos, x in enumerate(a, start=1) if x != 0)


def weight_support(a: Sequence[int]) -> tuple[int, IndexSet]:
    s = support(a)
    return len(s), s


def inner_product(params: SchemeParams, a: Sequence[int], b: Sequence[int]) -> int:
    """<a, b> = sum_i a_i b_i mod q."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(int(x) * int(y) for x, y in zip(a, b)) % params.q


# ---------------------------------------------------------------------------
# position sets


def check_positions(positions: Iterable[int], n: int) -> IndexSet:
    """Canonicalize a set of 1-based positions: sorted, distinct, in [1, n]."""
    pos = sorted(int(p) for p in positions)
    for p in pos:
        if not 1 <= p <= n:
            raise ValueError(f"position {p} outside [1, {n}]")
    if len(set(pos)) != len(pos):
        raise ValueError(f"positions contain duplicates: {pos}")
    return tuple(pos)


def complement(positions: Iterable[int], n: int) -> IndexSet:
    inside = set(check_positions(positions, n))
    return tuple(p for p in range(1, n + 1) if p not in inside)


# ---------------------------------------------------------------------------
# region enumeration (deterministic order, restartable generators)


def sphere(params: SchemeParams, center: Sequence[int], radius: int) -> Iterator[Word]:
    """Words at Hamming distance exactly ``radius`` from the center."""
    c = check_word(params, center)
    if not 0 <= radius <= params.n:
        raise ValueError(f"radius {radius} outside [0, {params.n}]")
    if radius == 0:
        yield c
        return
    for pos_subset in itertools.combinations(range(params.n), radius):
        choices = [[x for x in range(params.q) if x != c[p]] for p in pos_subset]
        for vals in itertools.product(*choices):
            w = list(c)
            for p, v in zip(pos_subset, vals):
                w[p] = v
            yield tuple(w)


def ball(params: SchemeParams, center: Sequence[int], radius: int) -> Iterator[Word]:
    """Words at Hamming distance at most ``radius`` from the center."""
    if not 0 <= radius <= params.n:
        raise ValueError(f"radius {radius} outside [0, {params.n}]")
    for r in range(radius + 1):
        yield from sphere(params, center, r)


def face(params: SchemeParams, positions: Iterable[int], anchor: Sequence[int]) -> Iterator[Word]:
    """The subcube of words agreeing with ``anchor`` outside ``positions``."""
    a = check_word(params, anchor)
    pos = check_positions(positions, params.n)
    if not pos:
        yield a
        return
    for vals in itertools.product(range(params.q), repeat=len(pos)):
        w = list(a)
        for p, v in zip(pos, vals):
            w[p - 1] = v
        yield tuple(w)


def full_support(params: SchemeParams, positions: Iterable[int]) -> Iterator[Word]:
    """Words whose support is exactly ``positions``, in lexicographic order."""
    pos = check_positions(positions, params.n)
    if not pos:
        yield zero_word(params)
        return
    for vals in itertools.product(range(1, params.q), repeat=len(pos)):
        w = [0] * params.n
        for p, v in zip(pos, vals):
            w[p - 1] = v
        yield tuple(w)


def enumerate_region(
    params: SchemeParams,
    kind: str,
    center: Sequence[int] | None = None,
    radius: int | None = None,
    positions: Iterable[int] | None = None,
) -> Iterator[Word]:
    """Dispatch to one of the four region generators by name."""
    if kind == "sphere" or kind == "ball":
        if center is None or radius is None:
            raise ValueError(f"{kind} needs center and radius")
        gen = sphere if kind == "sphere" else ball
        return gen(params, center, radius)
    if kind == "face":
        if center is None or positions is None:
            raise ValueError("face needs an anchor (center) and positions")
        return face(params, positions, center)
    if kind == "full_support":
        if positions is None:
            raise ValueError("full_support needs positions")
        return full_support(params, positions)
    raise ValueError(f"unknown region kind {kind!r}")


# ---------------------------------------------------------------------------
# dense tables (cached per (q, n); sub-schemes may use q - 1 >= 2 here,
# which is why these are keyed on raw integers instead of SchemeParams)


@lru_cache(maxsize=None)
def digits_table(q: int, n: int) -> np.ndarray:
    """(q^n, n) array whose row r holds the digits of the rank-r word."""
    if q < 2 or n < 1:
        raise ValueError(f"digits_table needs q >= 2, n >= 1, got ({q}, {n})")
    ranks = np.arange(q**n)
    cols = [(ranks // q ** (n - 1 - j)) % q for j in range(n)]
    table = np.stack(cols, axis=1).astype(np.int64)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def weight_table(q: int, n: int) -> np.ndarray:
    """(q^n,) array of Hamming weights indexed by rank."""
    w = (digits_table(q, n) != 0).sum(axis=1)
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def weight_ranks(q: int, n: int, w: int) -> np.ndarray:
    """Ranks of all words of weight exactly w, ascending."""
    r = np.nonzero(weight_table(q, n) == w)[0]
    r.setflags(write=False)
    return r


def position_weights(params: SchemeParams, positions: IndexSet) -> np.ndarray:
    """Rank contribution q^(n-p) of each position p in ``positions``."""
    return np.array([params.q ** (params.n - p) for p in positions], dtype=np.int64)
