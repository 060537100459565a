"""Loop isomorphism testing and isomorph-free deduplication.

The test compares cheap isomorphism invariants first, then backtracks
over images of a small generating set, extending each candidate map by
product closure.  No canonical labeling is computed: pairwise tests
inside invariant buckets are plenty for a few hundred candidates of
order <= 27.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from typing import List, Optional, Sequence

import numpy as np

from . import elements
from .arrays import arrays, subloop_closure
from .core import LoopTable, Perm


@lru_cache(maxsize=None)
def element_colors(q: LoopTable) -> tuple:
    """Per-element isomorphism-invariant keys, sharpened by two refinement
    rounds over the multiplication structure.  Keys are comparable across
    tables of the same order."""
    a = arrays(q)
    n = a.n
    commut = (a.COMM == 0).sum(axis=1)
    sq = a.M[np.arange(n), np.arange(n)]
    cols = tuple(
        (len(q.cyclic_subloop(x)), int(commut[x]), 1 if sq[x] == 0 else 0)
        for x in range(n)
    )
    M = a.M
    for _ in range(2):
        nxt = []
        for x in range(n):
            around = sorted((cols[int(M[x, y])], cols[int(M[y, x])]) for y in range(n))
            nxt.append((cols[x], cols[int(sq[x])], tuple(around)))
        cols = tuple(nxt)
    return cols


@lru_cache(maxsize=None)
def invariant_key(q: LoopTable) -> str:
    """Digest of the isomorphism-invariant vector; equal for isomorphic loops."""
    report = elements.classify_elements(q)
    nuc, _, _, _ = elements.nucleus_masks(q)
    n_center = int(elements.center_mask(q).sum())
    sq = arrays(q).M[np.arange(q.n), np.arange(q.n)]
    payload = repr((
        q.n,
        sorted(element_colors(q)),
        int(nuc.sum()),
        n_center,
        int((sq == 0).sum()),
        len(report.wip_set), len(report.moufang_set),
        len(report.pseudo_set), len(report.extra_set),
    ))
    return hashlib.sha256(payload.encode()).hexdigest()


@lru_cache(maxsize=None)
def generating_set(q: LoopTable) -> tuple:
    """Small generating set found greedily by closure growth."""
    gens: list = []
    closed = frozenset((0,))
    while len(closed) < q.n:
        best, best_size = None, -1
        for x in range(q.n):
            if x in closed:
                continue
            size = len(subloop_closure(q, frozenset(gens) | {x}))
            if size > best_size:
                best, best_size = x, size
        gens.append(best)
        closed = frozenset(subloop_closure(q, frozenset(gens)))
    return tuple(gens)


def _extend_map(q1: LoopTable, q2: LoopTable, gens: Sequence[int],
                images: Sequence[int], require_full: bool = True) -> Optional[list]:
    n = q1.n
    m = [-1] * n
    rm = [-1] * n
    m[0] = rm[0] = 0
    known: list = [0]
    pending = []
    for g, h in zip(gens, images):
        if m[g] == -1:
            if rm[h] != -1:
                return None
            m[g], rm[h] = h, g
            pending.append(g)
        elif m[g] != h:
            return None
    t1, t2 = q1.rows, q2.rows
    while pending:
        a = pending.pop()
        for b in list(known):
            for x, y in ((a, b), (b, a)):
                c = t1[x][y]
                d = t2[m[x]][m[y]]
                if m[c] == -1:
                    if rm[d] != -1:
                        return None
                    m[c], rm[d] = d, c
                    pending.append(c)
                elif m[c] != d:
                    return None
        # products of the new element with itself
        c = t1[a][a]
        d = t2[m[a]][m[a]]
        if m[c] == -1:
            if rm[d] != -1:
                return None
            m[c], rm[d] = d, c
            pending.append(c)
        elif m[c] != d:
            return None
        known.append(a)
    if require_full and any(v == -1 for v in m):
        return None
    return m


def _verify(q1: LoopTable, q2: LoopTable, m: list) -> bool:
    p = np.asarray(m)
    m1 = arrays(q1).M
    m2 = arrays(q2).M
    return bool((p[m1] == m2[np.ix_(p, p)]).all())


def are_isomorphic(q1: LoopTable, q2: LoopTable) -> Optional[Perm]:
    """A witnessing bijection with phi(x*y) == phi(x)*phi(y), or None."""
    if q1.n != q2.n:
        return None
    if invariant_key(q1) != invariant_key(q2):
        return None
    gens = generating_set(q1)
    col1 = element_colors(q1)
    col2 = element_colors(q2)
    candidates = [
        [h for h in range(q2.n) if col2[h] == col1[g]] for g in gens
    ]

    images = [0] * len(gens)

    def backtrack(i: int) -> Optional[list]:
        if i == len(gens):
            return _extend_map(q1, q2, gens, images)
        for h in candidates[i]:
            if h in images[:i]:
                continue
            images[i] = h
            found = _extend_map(q1, q2, gens[:i + 1], images[:i + 1],
                                require_full=False)
            if found is None:
                continue
            full = backtrack(i + 1)
            if full is not None:
                return full
        return None

    m = backtrack(0)
    if m is None:
        return None
    if not _verify(q1, q2, m):
        raise AssertionError("extension produced a non-isomorphism; bug")
    return Perm(m)


def relabel(q: LoopTable, p: Perm, name: str = "") -> LoopTable:
    """The isomorphic copy under p; renormalizes when p moves the identity."""
    n = q.n
    rows = [[0] * n for _ in range(n)]
    img = p.images
    for x in range(n):
        for y in range(n):
            rows[img[x]][img[y]] = img[q.rows[x][y]]
    return LoopTable.from_rows(rows, name=name or q.name)


def dedupe(loops: Sequence[LoopTable]) -> List[LoopTable]:
    """One representative per isomorphism class, sorted canonically.

    The representative of a class is its member with the smallest
    serialized table, so the result does not depend on input order.
    """
    classes: list = []          # list of lists of members
    buckets: dict = {}          # invariant digest -> class indexes
    for q in loops:
        key = invariant_key(q)
        placed = False
        for ci in buckets.get(key, []):
            if are_isomorphic(classes[ci][0], q) is not None:
                classes[ci].append(q)
                placed = True
                break
        if not placed:
            buckets.setdefault(key, []).append(len(classes))
            classes.append([q])
    reps = [min(cls, key=lambda t: t.canonical_str()) for cls in classes]
    return sorted(reps, key=lambda t: t.canonical_str())
