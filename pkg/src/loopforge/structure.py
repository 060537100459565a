"""Structural subloops and quotients: generated subloops, nuclei, center,
associator subloop, normality, coset quotients, and closures of the
multiplication / inner-mapping groups.

Nucleus and center come from direct associator/commutator enumeration;
group closures are breadth-first over hashed permutation arrays with a
hard cap (the fixtures stay far below it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import elements
from .arrays import arrays, subloop_closure
from .core import LoopTable, Perm

GROUP_CLOSURE_CAP = 10 ** 6


class CapExceededError(RuntimeError):
    """Group closure hit the element cap; carries the partial count."""

    def __init__(self, partial: int):
        super().__init__("closure exceeded cap (%d elements seen)" % partial)
        self.partial = partial


@dataclass(frozen=True)
class Subloop:
    elements: tuple
    parent: LoopTable

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def generate_subloop(q: LoopTable, gens: Iterable[int]) -> Subloop:
    """Least subloop containing ``gens``.

    Closure runs under the product and rho; lam is added for non-CC
    parents.  (In a finite loop product closure already forces division
    closure, so the inverse closures are cheap safety.)
    """
    gens = frozenset(gens)
    if not gens:
        gens = frozenset((0,))
    elems = set(subloop_closure(q, gens))
    while True:
        extra = {q.rho(x) for x in elems} - elems
        if not elements.is_cc(q):
            extra |= {q.lam(x) for x in elems} - elems
        if not extra:
            break
        elems = set(subloop_closure(q, frozenset(elems | extra)))
    return Subloop(elements=tuple(sorted(elems)), parent=q)


@lru_cache(maxsize=None)
def nucleus_parts(q: LoopTable) -> tuple:
    """(nucleus, left, middle, right) as Subloops."""
    nuc, left, mid, right = elements.nucleus_masks(q)
    mk = lambda mask: Subloop(tuple(int(i) for i in np.nonzero(mask)[0]), q)
    return mk(nuc), mk(left), mk(mid), mk(right)


def nucleus(q: LoopTable) -> Subloop:
    return nucleus_parts(q)[0]


def center(q: LoopTable) -> Subloop:
    mask = elements.center_mask(q)
    return Subloop(tuple(int(i) for i in np.nonzero(mask)[0]), q)


@lru_cache(maxsize=None)
def associator_subloop(q: LoopTable) -> Subloop:
    a = arrays(q)
    gens = frozenset(int(v) for v in np.unique(a.ASSOC))
    return generate_subloop(q, gens)


def inner_generators(q: LoopTable):
    """T(x) plus both families of inner maps; on CC input the T(x) generate."""
    n = q.n
    for x in range(n):
        yield q.T(x)
    if not elements.is_cc(q):
        for x in range(n):
            for y in range(n):
                yield q.Rinner(x, y)
                yield q.Linner(x, y)


def is_normal(q: LoopTable, sub: Subloop) -> bool:
    elems = set(sub.elements)
    return all(all(p(h) in elems for h in elems) for p in inner_generators(q))


def quotient(q: LoopTable, sub: Subloop, name: str = "") -> LoopTable:
    """Cayley table on cosets of a normal subloop, minimal representative first."""
    if not is_normal(q, sub):
        raise ValueError("subloop %r is not normal" % (sub.elements,))
    n = q.n
    coset_of = [-1] * n
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        members = sorted(q.mul(x, h) for h in sub.elements)
        rep_index = len(reps)
        for mbr in members:
            if coset_of[mbr] >= 0:
                raise ValueError("cosets are not a partition; subloop invalid")
            coset_of[mbr] = rep_index
        reps.append(members[0])
    k = len(reps)
    rows = [[coset_of[q.mul(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    return LoopTable(rows, name=name or "%s/%s" % (q.name or q.n, len(sub)))


def exponent_of_abelian(q: LoopTable) -> int:
    """lcm of element orders; meaningful for power-associative tables."""
    exp = 1
    for x in range(q.n):
        exp = math.lcm(exp, q.order_of(x))
    return exp


# -- permutation-group closures ----------------------------------------------

def _closure(gens, cap: int) -> set:
    seen = {p.images for p in gens}
    n = len(next(iter(seen))) if seen else 0
    seen.add(tuple(range(n)))
    frontier = list(seen)
    gen_list = [p.images for p in gens]
    while frontier:
        new = []
        for a in frontier:
            for g in gen_list:
                c = tuple(g[a[i]] for i in range(n))
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    if len(seen) > cap:
                        raise CapExceededError(len(seen))
        frontier = new
    return seen


@dataclass
class MltSummary:
    order: int


@dataclass
class InnSummary:
    order: int
    rinn_order: int
    linn_order: int
    rinn_equals_linn: bool
    inn_abelian: bool
    rinn_abelian: bool


def mlt_group(q: LoopTable, cap: int = GROUP_CLOSURE_CAP) -> MltSummary:
    gens = [q.R(x) for x in range(q.n)] + [q.L(x) for x in range(q.n)]
    return MltSummary(order=len(_closure(gens, cap)))


def _is_abelian_closure(perms: set) -> bool:
    items = [list(p) for p in perms]
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if any(a[b[x]] != b[a[x]] for x in range(len(a))):
                return False
    return True


def inn_group(q: LoopTable, cap: int = GROUP_CLOSURE_CAP) -> InnSummary:
    n = q.n
    r_gens = [q.Rinner(x, y) for x in range(n) for y in range(n)]
    l_gens = [q.Linner(x, y) for x in range(n) for y in range(n)]
    t_gens = [q.T(x) for x in range(n)]
    rinn = _closure(r_gens, cap)
    linn = _closure(l_gens, cap)
    inn = _closure(r_gens + l_gens + t_gens, cap)
    return InnSummary(
        order=len(inn),
        rinn_order=len(rinn),
        linn_order=len(linn),
        rinn_equals_linn=rinn == linn,
        inn_abelian=_is_abelian_closure(inn) if len(inn) <= 4096 else False,
        rinn_abelian=_is_abelian_closure(rinn) if len(rinn) <= 4096 else False,
    )


# -- the aggregate report ------------------------------------------------------

@dataclass
class StructureReport:
    n: int
    nucleus: Subloop
    nucleus_left: Subloop
    nucleus_middle: Subloop
    nucleus_right: Subloop
    center: Subloop
    associator_subloop: Subloop
    innmap_group_order: int
    mlt_group_order: int
    quotient_by_nucleus: Optional[LoopTable]
    exponent_quotient: Optional[int]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "nucleus": list(self.nucleus.elements),
            "nucleus_left": list(self.nucleus_left.elements),
            "nucleus_middle": list(self.nucleus_middle.elements),
            "nucleus_right": list(self.nucleus_right.elements),
            "center": list(self.center.elements),
            "associator_subloop": list(self.associator_subloop.elements),
            "innmap_group_order": self.innmap_group_order,
            "mlt_group_order": self.mlt_group_order,
            "quotient_by_nucleus": [list(r) for r in self.quotient_by_nucleus.rows]
            if self.quotient_by_nucleus else None,
            "exponent_quotient": self.exponent_quotient,
        }


def structure_report(q: LoopTable, cap: int = GROUP_CLOSURE_CAP) -> StructureReport:
    nuc, nl, nm, nr = nucleus_parts(q)
    quot = exponent = None
    if is_normal(q, nuc):
        quot = quotient(q, nuc)
        if elements.is_power_associative_loop(quot):
            exponent = exponent_of_abelian(quot)
    return StructureReport(
        n=q.n,
        nucleus=nuc, nucleus_left=nl, nucleus_middle=nm, nucleus_right=nr,
        center=center(q),
        associator_subloop=associator_subloop(q),
        innmap_group_order=inn_group(q, cap).order,
        mlt_group_order=mlt_group(q, cap).order,
        quotient_by_nucleus=quot,
        exponent_quotient=exponent,
    )
