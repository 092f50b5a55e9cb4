"""Shared helpers for the test suite: desk-scale grids and cached fixtures."""

from functools import lru_cache

import hamrecon as hr

# every (q, n) the acceptance criteria quantify over
DESK_QN = [(q, n) for q in (3, 4, 5) for n in (3, 4, 5, 6) if q**n <= 4096]


def desk_cells():
    """(q, n, h, d) over the full desk grid."""
    for q, n in DESK_QN:
        for h in range(n + 1):
            for d in range(h + 1):
                yield q, n, h, d


@lru_cache(maxsize=None)
def params(q, n):
    return hr.SchemeParams(q, n)


@lru_cache(maxsize=None)
def eigfn(q, n, h, seed=0):
    """Cached seeded random eigenfunction (immutable by convention)."""
    return hr.random_eigenfunction(params(q, n), h, seed)


def tol_for(f, base=1e-9):
    return base * (1.0 + f.max_abs())
