"""Characters, Fourier analysis and eigenspace machinery on Z_q^n.

A vertex function is a dense complex vector indexed by word rank.  The
characters chi_b(g) = xi^<b,g> with xi = exp(2*pi*i/q) diagonalize all
distance matrices simultaneously; chi_b lies in the eigenspace V_h with
h = wt(b), so a function belongs to V_h exactly when its Fourier transform
vanishes off the weight-h sphere.  That equivalence gives two independent
routes to the eigenspace projector (distance-operator combination vs.
Fourier masking), and the pair is kept around deliberately: each one
cross-checks the other in the test suite.

Conventions:
    forward   f^(a) = sum_b f(b) * conj(xi^<a,b>)
    inverse   f(g)  = q^-n sum_a f^(a) * xi^<a,g>

The transform is computed one tensor axis at a time (n passes of a dense
q x q kernel), which is exact enough at desk scale and two orders of
magnitude faster than the naive double sum at n = 6.

Combinatorial coefficients are always exact integers or Fractions and are
converted to floats only at the point where they multiply complex data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .krawtchouk import eigenvalue_of_index, krawtchouk_value
from .scheme import (
    SchemeParams,
    check_word,
    digits_table,
    parse_word,
    rank_word,
    weight,
    weight_table,
    word_rank,
    word_text,
)


@dataclass(frozen=True)
class FourierContext:
    """Primitive q-th root of unity used by all character sums."""

    q: int
    xi: complex

    @classmethod
    def create(cls, q: int) -> "FourierContext":
        if q < 2:
            raise ValueError(f"need q >= 2, got {q}")
        return cls(q=q, xi=np.exp(2j * np.pi / q))

    def power_table(self) -> np.ndarray:
        """xi^v for v = 0..q-1."""
        return np.exp(2j * np.pi * np.arange(self.q) / self.q)


@dataclass
class VertexFunction:
    """Dense complex-valued function on the vertices, indexed by word rank.

    ``eigenindex`` is advisory metadata: producers set it when the values
    are (numerically) an eigenfunction of the graph with that index.
    """

    params: SchemeParams
    values: np.ndarray
    eigenindex: int | None = None

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.params.size,):
            raise ValueError(f"values must have shape ({self.params.size},), got {v.shape}")
        self.values = v

    def copy(self) -> "VertexFunction":
        return VertexFunction(self.params, self.values.copy(), self.eigenindex)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __call__(self, word) -> complex:
        return complex(self.values[word_rank(self.params, word)])


# ---------------------------------------------------------------------------
# characters and transforms


def character(params: SchemeParams, beta) -> VertexFunction:
    """chi_beta(g) = xi^<beta,g>; an eigenfunction with index wt(beta)."""
    b = check_word(params, beta)
    digits = digits_table(params.q, params.n)
    ip = (digits @ np.asarray(b, dtype=np.int64)) % params.q
    powers = FourierContext.create(params.q).power_table()
    return VertexFunction(params, powers[ip], eigenindex=weight(b))


def _axis_transform(values: np.ndarray, q: int, n: int, sign: int) -> np.ndarray:
    """Apply the q x q kernel xi^(sign*a*b) along every tensor axis."""
    powers = np.exp(sign * 2j * np.pi * np.arange(q) / q)
    kernel = powers[np.outer(np.arange(q), np.arange(q)) % q]
    t = values.reshape((q,) * n)
    for axis in range(n):
        t = np.moveaxis(np.tensordot(kernel, t, axes=(1, axis)), 0, axis)
    return t.reshape(-1)


def fourier_transform(f: VertexFunction) -> VertexFunction:
    """f^(a) = sum_b f(b) conj(xi^<a,b>)."""
    out = _axis_transform(f.values, f.params.q, f.params.n, sign=-1)
    return VertexFunction(f.params, out)


def inverse_fourier(g: VertexFunction) -> VertexFunction:
    """f(c) = q^-n sum_a g(a) xi^<a,c>; inverse of :func:`fourier_transform`."""
    out = _axis_transform(g.values, g.params.q, g.params.n, sign=+1)
    return VertexFunction(g.params, out / g.params.size)


# ---------------------------------------------------------------------------
# distance operators


def _neighbor_axis_sum(t: np.ndarray, q: int, axis: int) -> np.ndarray:
    # sum of f over words whose digit at `axis` differs (all q-1 replacements)
    return sum(np.roll(t, -c, axis=axis) for c in range(1, q))


def distance_tensor_stack(values: np.ndarray, q: int, n: int, up_to: int) -> list[np.ndarray]:
    """[D_0 f, ..., D_up_to f] as tensors, via the subset-sum recurrence.

    Processing axes one at a time and keeping the elementary symmetric
    combinations of the per-axis neighbor sums enumerates every sphere
    exactly once without ever materializing a q^n x q^n matrix.  Works
    for any alphabet size q >= 2 (the sub-scheme solvers use q - 1).
    """
    t = np.asarray(values, dtype=np.complex128).reshape((q,) * n)
    acc: list = [t] + [None] * up_to
    for axis in range(n):
        for m in range(min(up_to, axis + 1), 0, -1):
            contrib = _neighbor_axis_sum(acc[m - 1], q, axis)
            acc[m] = contrib if acc[m] is None else acc[m] + contrib
    return [a if a is not None else np.zeros_like(t) for a in acc]


def _distance_tensors(f: VertexFunction, up_to: int) -> list[np.ndarray]:
    return distance_tensor_stack(f.values, f.params.q, f.params.n, up_to)


def apply_distance_operator(f: VertexFunction, i: int) -> VertexFunction:
    """(D_i f)(a) = sum of f over the radius-i sphere around a."""
    if not 0 <= i <= f.params.n:
        raise ValueError(f"distance index {i} outside [0, {f.params.n}]")
    t = _distance_tensors(f, i)[i]
    return VertexFunction(f.params, t.reshape(-1))


def eigen_residual(f: VertexFunction, h: int) -> float:
    """max_a |sum_{b in W_1(a)} f(b) - lambda_h f(a)|."""
    lam = eigenvalue_of_index(f.params.q, f.params.n, h).eigenvalue
    d1 = apply_distance_operator(f, 1)
    return float(np.max(np.abs(d1.values - lam * f.values)))


# ---------------------------------------------------------------------------
# eigenspace projection


def project_eigenspace(f: VertexFunction, h: int, method: str = "fourier") -> VertexFunction:
    """Orthogonal projection onto the eigenspace V_h.

    Two interchangeable implementations, kept as mutual cross-checks:

    * ``fourier``:  zero the transform off the weight-h sphere and invert;
    * ``distance``: q^-n * sum_i P_h(i; n) D_i f, the idempotent of the
      scheme algebra written in the distance-matrix basis.
    """
    params = f.params
    if not 0 <= h <= params.n:
        raise ValueError(f"eigenindex {h} outside [0, {params.n}]")
    if method == "fourier":
        ghat = fourier_transform(f).values
        ghat[weight_table(params.q, params.n) != h] = 0
        out = inverse_fourier(VertexFunction(params, ghat)).values
    elif method == "distance":
        tensors = _distance_tensors(f, params.n)
        acc = np.zeros_like(tensors[0])
        for i, t in enumerate(tensors):
            acc = acc + krawtchouk_value(params.q, h, i, params.n) * t
        out = acc.reshape(-1) / params.size
    else:
        raise ValueError(f"unknown projection method {method!r}")
    return VertexFunction(params, out, eigenindex=h)


def random_eigenfunction(
    params: SchemeParams, h: int, seed: int, max_retries: int = 8
) -> VertexFunction:
    """Seeded random element of V_h, rescaled to max modulus 1.

    Projects a uniform random complex vector onto the eigenspace;
    deterministic for a fixed seed.  Regenerates (from the same stream)
    in the measure-zero event that the projection vanishes.
    """
    if not 0 <= h <= params.n:
        raise ValueError(f"eigenindex {h} outside [0, {params.n}]")
    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        raw = rng.uniform(-1.0, 1.0, size=2 * params.size)
        f = VertexFunction(params, raw[: params.size] + 1j * raw[params.size :])
        proj = project_eigenspace(f, h)
        scale = proj.max_abs()
        if scale > 1e-12:
            return VertexFunction(params, proj.values / scale, eigenindex=h)
    raise RuntimeError(
        f"eigenspace projection degenerate after {max_retries} attempts (q={params.q},"
        f" n={params.n}, h={h}, seed={seed})"
    )


# ---------------------------------------------------------------------------
# JSON form
#
# {"q": 3, "n": 4, "eigenindex": 2, "values": [{"w": "0120", "re": .., "im": ..}, ...]}
# Words absent from "values" carry the value 0.  Sphere and ball files use the
# same schema plus an explicit radius field "d".


def values_to_entries(params: SchemeParams, values: np.ndarray, ranks=None) -> list[dict]:
    if ranks is None:
        ranks = range(params.size)
    entries = []
    for r in ranks:
        v = values[r]
        if v.real == 0.0 and v.imag == 0.0:
            continue
        entries.append(
            {"w": word_text(rank_word(params, int(r))), "re": float(v.real), "im": float(v.imag)}
        )
    return entries


def entries_to_values(params: SchemeParams, entries) -> np.ndarray:
    values = np.zeros(params.size, dtype=np.complex128)
    seen: set[int] = set()
    for entry in entries:
        r = word_rank(params, parse_word(params, entry["w"]))
        if r in seen:
            raise ValueError(f"duplicate word {entry['w']!r}")
        seen.add(r)
        values[r] = complex(float(entry["re"]), float(entry["im"]))
    return values


def function_to_dict(f: VertexFunction) -> dict:
    data: dict = {"q": f.params.q, "n": f.params.n}
    if f.eigenindex is not None:
        data["eigenindex"] = int(f.eigenindex)
    data["values"] = values_to_entries(f.params, f.values)
    return data


def function_from_dict(data: dict) -> VertexFunction:
    params = SchemeParams(int(data["q"]), int(data["n"]))
    values = entries_to_values(params, data.get("values", []))
    eigenindex = data.get("eigenindex")
    return VertexFunction(params, values, None if eigenindex is None else int(eigenindex))
