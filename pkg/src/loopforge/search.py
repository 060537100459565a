"""Exhaustive search over loops presented as Cayley tables.

Tables are explored in reduced form (row 0 and column 0 pinned to the
identity), with Latin forward checking, incremental checks of the
selected laws, and -- when deduplicating up to isomorphism -- orderly
pruning of prefixes that relabel to something lexicographically smaller.
Every emitted table is re-verified against the full (non-incremental)
law definitions before it is returned, so pruning bugs can cost
completeness but never correctness, and isomorph reduction is finished
by the pairwise dedupe from :mod:`loopforge.iso`.

A wall-clock budget bounds every call; an exhausted budget yields a
result flagged incomplete, never a wrong count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import elements, iso
from .core import LoopTable
from .search_engine import (
    LAW_EXTRA, LAW_FLEX, LAW_LCC, LAW_MOUFANG, LAW_PA, LAW_RCC, LAW_WIP,
    STATUS_DONE, STATUS_FULL, STATUS_SUSPENDED, dfs_engine,
)

LAW_BITS = {
    "lcc": LAW_LCC,
    "rcc": LAW_RCC,
    "pa": LAW_PA,
    "extra": LAW_EXTRA,
    "moufang": LAW_MOUFANG,
    "wip": LAW_WIP,
    "flex": LAW_FLEX,
}

DEFAULT_BUDGET = 600.0


class SearchTimeout(RuntimeError):
    def __init__(self, result: "SearchResult"):
        super().__init__("search budget exhausted (%d tables so far)" % result.count)
        self.result = result


@dataclass(frozen=True)
class SearchSpec:
    n: int
    laws: frozenset = frozenset()
    nonassociative_only: bool = False
    up_to_iso: bool = False
    count_only: bool = False
    limit: Optional[int] = None
    budget: float = DEFAULT_BUDGET
    jobs: int = 1
    canon_cell_rows: int = 2
    canon_budget: int = 30000
    out_cap: int = 200000

    def law_bits(self) -> int:
        bits = 0
        for law in self.laws:
            bits |= LAW_BITS[law]
        return bits

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")
        if self.n > 32:
            raise ValueError("search supports n <= 32")
        unknown = set(self.laws) - set(LAW_BITS)
        if unknown:
            raise ValueError("unknown laws: %s" % ", ".join(sorted(unknown)))
        if not self.laws and self.n > 6 and not self.limit:
            raise ValueError("unconstrained enumeration is only supported for n <= 6")


@dataclass
class SearchResult:
    spec: SearchSpec
    tables: List[LoopTable] = field(default_factory=list)
    count: int = 0
    complete: bool = True
    nodes: int = 0
    elapsed: float = 0.0


def _fresh_state(n: int):
    T = np.full(n * n, -1, dtype=np.int64)
    rowpos = np.full(n * n, -1, dtype=np.int64)
    colpos = np.full(n * n, -1, dtype=np.int64)
    row_av = np.empty(n, dtype=np.int64)
    col_av = np.empty(n, dtype=np.int64)
    full = (1 << n) - 1
    for y in range(n):
        T[y] = y
        rowpos[y] = y
        colpos[y * n + y] = 0
    for x in range(1, n):
        T[x * n] = x
        colpos[x] = x
        rowpos[x * n + x] = 0
    row_av[0] = 0
    col_av[0] = 0
    for r in range(1, n):
        row_av[r] = full & ~(1 << r)
        col_av[r] = full & ~(1 << r)
    stack_val = np.full((n - 1) * (n - 1), -1, dtype=np.int64)
    return T, row_av, col_av, rowpos, colpos, stack_val


def _apply_prefix(n, prefix, T, row_av, col_av, rowpos, colpos, stack_val):
    for depth, v in enumerate(prefix):
        r = 1 + depth // (n - 1)
        c = 1 + depth % (n - 1)
        T[r * n + c] = v
        row_av[r] &= ~(1 << v)
        col_av[c] &= ~(1 << v)
        rowpos[r * n + v] = c
        colpos[c * n + v] = r
        stack_val[depth] = v


def _run_tree(spec: SearchSpec, prefix: tuple, deadline: float, emit_depth: int):
    """Run one subtree to completion or deadline.

    Returns (list of n*n int arrays, complete flag, node count).
    """
    n = spec.n
    T, row_av, col_av, rowpos, colpos, stack_val = _fresh_state(n)
    _apply_prefix(n, prefix, T, row_av, col_av, rowpos, colpos, stack_val)
    state = np.array([len(prefix), 0, 0, len(prefix)], dtype=np.int64)
    out = np.empty((spec.out_cap, n * n), dtype=np.int64)
    canonical = 1 if spec.up_to_iso else 0
    laws = spec.law_bits()
    slice_nodes = 500_000
    while True:
        status = dfs_engine(n, laws, canonical, spec.canon_cell_rows,
                            spec.canon_budget, T, row_av, col_av, rowpos, colpos,
                            stack_val, state, out, spec.out_cap,
                            slice_nodes, emit_depth)
        if status == STATUS_DONE:
            break
        if status == STATUS_FULL:
            raise RuntimeError("search output buffer overflow (cap %d)" % spec.out_cap)
        if time.time() > deadline:
            return [out[i].copy() for i in range(state[1])], False, int(state[2])
        slice_nodes = min(slice_nodes * 2, 20_000_000)
    return [out[i].copy() for i in range(state[1])], True, int(state[2])


def _worker(args):
    spec_dict, prefixes, deadline, emit_depth = args
    spec = SearchSpec(**spec_dict)
    tables, complete, nodes = [], True, 0
    for prefix in prefixes:
        if time.time() > deadline:
            complete = False
            break
        tabs, done, nd = _run_tree(spec, prefix, deadline, emit_depth)
        tables.extend(tabs)
        nodes += nd
        complete = complete and done
    return [t.tolist() for t in tables], complete, nodes


def _spec_dict(spec: SearchSpec) -> dict:
    return {
        "n": spec.n, "laws": spec.laws,
        "nonassociative_only": spec.nonassociative_only,
        "up_to_iso": spec.up_to_iso, "count_only": spec.count_only,
        "limit": spec.limit, "budget": spec.budget, "jobs": spec.jobs,
        "canon_cell_rows": spec.canon_cell_rows,
        "canon_budget": spec.canon_budget, "out_cap": spec.out_cap,
    }


def verify_table(q: LoopTable, laws) -> None:
    """Full non-incremental law check; raises on any violation."""
    for law in sorted(laws):
        bad = elements.law_counterexample(q, law)
        if bad is not None:
            raise AssertionError(
                "engine emitted a table violating %s at %r" % (law, bad))


def search(spec: SearchSpec) -> SearchResult:
    start = time.time()
    deadline = start + spec.budget
    n = spec.n
    ncells = (n - 1) * (n - 1)
    raw: List[np.ndarray] = []
    complete = True
    nodes = 0
    if n == 1:
        return SearchResult(spec=spec, tables=[LoopTable([[0]])], count=1,
                            complete=True, elapsed=time.time() - start)
    if spec.jobs <= 1:
        raw, complete, nodes = _run_tree(spec, (), deadline, ncells)
    else:
        prefixes, pcomplete, pnodes = _run_tree(spec, (), deadline, n - 1)
        nodes += pnodes
        complete = pcomplete
        batches = [[] for _ in range(spec.jobs)]
        for i, arr in enumerate(prefixes):
            prefix = tuple(int(arr[n + c]) for c in range(1, n))
            batches[i % spec.jobs].append(prefix)
        args = [(_spec_dict(spec), batch, deadline, ncells)
                for batch in batches if batch]
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            for tabs, done, nd in pool.map(_worker, args):
                raw.extend(np.asarray(t, dtype=np.int64) for t in tabs)
                nodes += nd
                complete = complete and done
    tables = []
    for arr in raw:
        rows = [[int(arr[r * n + c]) for c in range(n)] for r in range(n)]
        q = LoopTable(rows)
        verify_table(q, spec.laws)
        if spec.nonassociative_only and elements.is_group(q):
            continue
        tables.append(q)
    if spec.up_to_iso and complete:
        tables = iso.dedupe(tables)
    tables.sort(key=lambda t: t.canonical_str())
    if spec.limit is not None:
        tables = tables[: spec.limit]
    return SearchResult(
        spec=spec,
        tables=[] if spec.count_only else tables,
        count=len(tables),
        complete=complete,
        nodes=nodes,
        elapsed=time.time() - start,
    )


def naive_reduced_count(n: int) -> int:
    """Independent brute-force count of reduced tables of order n.

    Deliberately naive (plain sets, no bitmasks, no shared code with the
    engine); only sensible for n <= 6.
    """
    if n == 1:
        return 1
    col_used = [set([c]) for c in range(n)]
    count = 0

    def fill(r, c, row_used):
        nonlocal count
        if c == n:
            if r == n - 1:
                count += 1
            else:
                fill(r + 1, 1, {r + 1})
            return
        for v in range(n):
            if v not in row_used and v not in col_used[c]:
                row_used.add(v)
                col_used[c].add(v)
                fill(r, c + 1, row_used)
                row_used.discard(v)
                col_used[c].discard(v)

    fill(1, 1, {1})
    return count
