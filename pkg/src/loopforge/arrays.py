"""Vectorized views of a loop table.

The scalar API in :mod:`loopforge.core` is the reference; this module
derives numpy arrays from it once per table so that whole-loop sweeps
(quantified identities, element-class sets, audits) run as array ops
instead of Python triple loops.  Everything is cached per table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import LoopTable


@dataclass(frozen=True)
class TableArrays:
    n: int
    M: np.ndarray        # M[x, y] = x*y
    LD: np.ndarray       # LD[x, z] = x \ z
    RD: np.ndarray       # RD[y, z] = z / y
    RHO: np.ndarray      # x * RHO[x] = 0
    LAM: np.ndarray      # LAM[x] * x = 0
    TT: np.ndarray       # TT[y, x] = (x)T_y
    EE: np.ndarray       # EE[x, z] = (z)E_x
    COMM: np.ndarray     # x*y = (y*x) * COMM[x, y]
    ASSOC: np.ndarray    # (x*y)*z = (x*(y*z)) * ASSOC[x, y, z]


@lru_cache(maxsize=None)
def arrays(q: LoopTable) -> TableArrays:
    n = q.n
    dtype = np.int16 if n < 2 ** 15 else np.int32
    M = np.array(q.rows, dtype=dtype)
    LD = np.empty_like(M)
    cols = np.arange(n)
    for x in range(n):
        LD[x, M[x]] = cols
    RD = np.empty_like(M)
    for y in range(n):
        RD[y, M[:, y]] = cols
    RHO = LD[:, 0].copy()
    LAM = RD[:, 0].copy()

    # (x)T_y = y \ (x*y): gather per y
    TT = np.empty_like(M)
    for y in range(n):
        TT[y] = LD[y, M[:, y]]
    # (z)E_x = (z*x) * rho(x)
    EE = np.empty_like(M)
    for x in range(n):
        EE[x] = M[M[:, x], RHO[x]]

    COMM = np.empty_like(M)
    for x in range(n):
        COMM[x] = LD[M[:, x], M[x, :]]

    idx = np.arange(n)
    XY = M  # (x, y)
    YZ = M  # (y, z)
    left = M[XY[:, :, None], idx[None, None, :]]          # (x*y)*z
    right = M[idx[:, None, None], YZ[None, :, :]]         # x*(y*z)
    ASSOC = LD[right, left]

    return TableArrays(n=n, M=M, LD=LD, RD=RD, RHO=RHO, LAM=LAM,
                       TT=TT, EE=EE, COMM=COMM, ASSOC=ASSOC)


@lru_cache(maxsize=None)
def subloop_closure(q: LoopTable, gens: frozenset) -> tuple:
    """Sorted elements of the subloop generated by ``gens`` (numpy closure)."""
    a = arrays(q)
    mask = np.zeros(q.n, dtype=bool)
    mask[0] = True
    for g in gens:
        mask[g] = True
    while True:
        (elems,) = np.nonzero(mask)
        prods = a.M[np.ix_(elems, elems)]
        new = np.zeros(q.n, dtype=bool)
        new[prods.ravel()] = True
        if not (new & ~mask).any():
            return tuple(int(e) for e in elems)
        mask |= new


@lru_cache(maxsize=None)
def is_associative_subset(q: LoopTable, elems: tuple) -> bool:
    """All associators vanish on a product-closed subset."""
    a = arrays(q)
    ix = np.ix_(elems, elems, elems)
    return bool((a.ASSOC[ix] == 0).all())
