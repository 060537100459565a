"""Per-element and whole-loop predicates: conjugacy closure, power
associativity, weak-inverse, Moufang / pseudoMoufang / extra elements,
and the aggregate element-class report.

Quantified laws are evaluated by full enumeration; the orders handled
here make that instant and keep every predicate definition-faithful.
Cheap equivalent forms (e.g. the E-map characterizations) are used only
behind a verified conjugacy-closure check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .arrays import arrays, is_associative_subset, subloop_closure
from .core import LoopTable

LAW_NAMES = ("lcc", "rcc", "cc", "pa", "wip", "moufang", "extra", "flex", "aip", "diassoc")


# -- loop-level laws -------------------------------------------------------

@lru_cache(maxsize=None)
def is_rcc(q: LoopTable) -> bool:
    """x y . z == x z . (z \\ (y z)) for all x, y, z."""
    a = arrays(q)
    n, M, LD = a.n, a.M, a.LD
    idx = np.arange(n)
    lhs = M[M[:, :, None], idx[None, None, :]]
    w = LD[idx[None, :], M]                      # w[y, z] = z \ (y*z)
    rhs = M[M[:, None, idx], w[None, :, :]]
    return bool((lhs == rhs).all())


@lru_cache(maxsize=None)
def is_lcc(q: LoopTable) -> bool:
    """z . y x == ((z y) / z) . z x for all z, y, x."""
    a = arrays(q)
    n, M, RD = a.n, a.M, a.RD
    idx = np.arange(n)
    lhs = M[idx[:, None, None], M[None, :, :]]   # [z, y, x]
    w = RD[idx[:, None], M]                      # w[z, y] = (z*y) / z
    rhs = M[w[:, :, None], M[:, None, :]]
    return bool((lhs == rhs).all())


def is_cc(q: LoopTable) -> bool:
    return is_rcc(q) and is_lcc(q)


# -- element class masks ---------------------------------------------------

@lru_cache(maxsize=None)
def _squares(q: LoopTable) -> np.ndarray:
    a = arrays(q)
    return a.M[np.arange(a.n), np.arange(a.n)]


@lru_cache(maxsize=None)
def pa_mask(q: LoopTable) -> np.ndarray:
    """Power-associative elements.

    On a CC-loop this reduces to c*c^2 == c^2*c; otherwise each <c> is
    closed and tested for associativity directly.
    """
    a = arrays(q)
    if is_cc(q):
        sq = _squares(q)
        idx = np.arange(a.n)
        mask = a.M[idx, sq] == a.M[sq, idx]
        return mask
    return np.array([q.is_power_associative_elem(c) for c in range(q.n)], dtype=bool)


@lru_cache(maxsize=None)
def wip_mask(q: LoopTable) -> np.ndarray:
    """c with c * rho(x*c) == rho(x) for all x."""
    a = arrays(q)
    n = a.n
    g = a.RHO[a.M.T]                             # [c, x] = rho(x*c)
    v = a.M[np.arange(n)[:, None], g]
    return (v == a.RHO[None, :]).all(axis=1)


@lru_cache(maxsize=None)
def moufang_mask(q: LoopTable) -> np.ndarray:
    a = arrays(q)
    n, M = a.n, a.M
    if is_cc(q):
        return (a.EE == np.arange(n)[None, :]).all(axis=1)
    out = np.zeros(n, dtype=bool)
    for c in range(n):
        l1 = M[c, M[M, c]]                       # c * ((x*y)*c)
        r1 = M[np.ix_(M[c], M[:, c])]            # (c*x) * (y*c)
        l2 = M[M[c, M], c]                       # (c * (x*y)) * c
        out[c] = (l1 == r1).all() and (l2 == r1).all()
    return out


@lru_cache(maxsize=None)
def pseudomoufang_mask(q: LoopTable) -> np.ndarray:
    a = arrays(q)
    n, M = a.n, a.M
    if is_cc(q):
        return (a.EE == np.arange(n)[None, :]).all(axis=0)
    idx = np.arange(n)
    out = np.zeros(n, dtype=bool)
    for c in range(n):
        # z * ((c*x)*z) == (z*c) * (x*z)
        l1 = M[idx[:, None], M[M[c][None, :], idx[:, None]]]   # [z, x]
        r1 = M[M[:, c][:, None], M.T]                          # [z, x]
        # (z * (x*c)) * z == (z*x) * (c*z)
        l2 = M[M[:, M[:, c]], idx[:, None]]                    # [z, x]
        r2 = M[M, M[c][:, None]]                               # [z, x]
        out[c] = (l1 == r1).all() and (l2 == r2).all()
    return out


@lru_cache(maxsize=None)
def extra_mask(q: LoopTable) -> np.ndarray:
    """c with c(x . yc) == (cx . y)c for all x, y (the raw equation).

    On CC input the result is cross-checked against the equivalent
    'Moufang with nuclear square' form; a mismatch indicates a bug.
    """
    a = arrays(q)
    n, M = a.n, a.M
    out = np.zeros(n, dtype=bool)
    for c in range(n):
        lhs = M[c, M[:, M[:, c]]]                # [x, y]
        rhs = M[M[M[c], :], c]                   # [x, y]
        out[c] = (lhs == rhs).all()
    if is_cc(q):
        nuc, _, _, _ = nucleus_masks(q)
        alt = moufang_mask(q) & nuc[_squares(q)]
        if not (out == alt).all():
            raise AssertionError("extra-element characterizations disagree on a CC table")
    return out


@lru_cache(maxsize=None)
def nucleus_masks(q: LoopTable) -> tuple:
    """(nucleus, left, middle, right) boolean masks via vanishing associators."""
    a = arrays(q)
    zero = a.ASSOC == 0
    left = zero.all(axis=(1, 2))
    middle = zero.all(axis=(0, 2))
    right = zero.all(axis=(0, 1))
    return left & middle & right, left, middle, right


@lru_cache(maxsize=None)
def center_mask(q: LoopTable) -> np.ndarray:
    a = arrays(q)
    nuc, _, _, _ = nucleus_masks(q)
    return nuc & (a.COMM == 0).all(axis=1)


@lru_cache(maxsize=None)
def square_nuclear_mask(q: LoopTable) -> np.ndarray:
    nuc, _, _, _ = nucleus_masks(q)
    return nuc[_squares(q)]


# -- per-element wrappers ---------------------------------------------------

def is_power_associative_elem(q: LoopTable, c: int) -> bool:
    return bool(pa_mask(q)[c])


def is_wip_elem(q: LoopTable, c: int) -> bool:
    return bool(wip_mask(q)[c])


def is_moufang_elem(q: LoopTable, c: int) -> bool:
    return bool(moufang_mask(q)[c])


def is_pseudomoufang_elem(q: LoopTable, c: int) -> bool:
    return bool(pseudomoufang_mask(q)[c])


def is_extra_elem(q: LoopTable, c: int) -> bool:
    return bool(extra_mask(q)[c])


# -- the nine fixed-element equations ---------------------------------------

EQN_NAMES = ("flex", "lalt", "ralt", "lip", "rip", "mfg1", "mfg2", "f1", "f2")


@dataclass
class EqnsReport:
    element: int
    holds: bool                      # common truth value over all b
    agree: bool                      # the nine agreed for every b
    disagreement: Optional[tuple]    # (b, name_true, name_false) if not
    per_eqn: dict                    # name -> holds for all b


def _eqn_values(q: LoopTable, c: int, b: int) -> dict:
    m = q.mul
    sq = m(c, c)
    vals = {
        "flex": m(c, m(b, c)) == m(m(c, b), c),
        "lalt": m(c, m(c, b)) == m(sq, b),
        "ralt": m(m(b, c), c) == m(b, sq),
        "lip": m(q.lam(c), m(c, b)) == b,
        "rip": m(m(b, c), q.rho(c)) == b,
    }
    n = q.n
    vals["mfg1"] = all(m(m(c, b), m(x, c)) == m(c, m(m(b, x), c)) for x in range(n))
    vals["mfg2"] = all(m(m(c, x), m(b, c)) == m(m(c, m(x, b)), c) for x in range(n))
    vals["f1"] = all(m(m(c, b), m(c, x)) == m(c, m(m(b, c), x)) for x in range(n))
    vals["f2"] = all(m(m(x, c), m(b, c)) == m(m(x, m(c, b)), c) for x in range(n))
    return vals


def eqns_equiv_check(q: LoopTable, c: int) -> EqnsReport:
    """Evaluate the nine flexibility-family equations for element c.

    On a CC table the nine are equivalent for each fixed b; the report
    flags the first disagreeing pair otherwise (non-CC input or a bug).
    """
    per_eqn = {name: True for name in EQN_NAMES}
    agree, disagreement, holds = True, None, True
    for b in range(q.n):
        vals = _eqn_values(q, c, b)
        truth = set(vals.values())
        if len(truth) > 1 and agree:
            agree = False
            name_true = next(k for k, v in vals.items() if v)
            name_false = next(k for k, v in vals.items() if not v)
            disagreement = (b, name_true, name_false)
        if not all(vals.values()):
            holds = False
        for name, v in vals.items():
            per_eqn[name] = per_eqn[name] and v
    return EqnsReport(element=c, holds=holds, agree=agree,
                      disagreement=disagreement, per_eqn=per_eqn)


def is_flexible_elem(q: LoopTable, c: int) -> bool:
    m = q.mul
    return all(m(c, m(b, c)) == m(m(c, b), c) for b in range(q.n))


# -- loop-level aggregates ---------------------------------------------------

def is_power_associative_loop(q: LoopTable) -> bool:
    return bool(pa_mask(q).all())


@lru_cache(maxsize=None)
def has_aip(q: LoopTable) -> bool:
    """Inversion x -> x^-1 is an automorphism; defined for PA loops only."""
    if not is_power_associative_loop(q):
        raise ValueError("AIP needs a power-associative loop (inverses are ambiguous)")
    a = arrays(q)
    return bool((a.RHO[a.M] == a.M[np.ix_(a.RHO, a.RHO)]).all())


@lru_cache(maxsize=None)
def is_diassociative(q: LoopTable) -> bool:
    for x in range(q.n):
        for y in range(x, q.n):
            elems = subloop_closure(q, frozenset((x, y)))
            if not is_associative_subset(q, elems):
                return False
    return True


def is_group(q: LoopTable) -> bool:
    a = arrays(q)
    return bool((a.ASSOC == 0).all())


def is_abelian_group(q: LoopTable) -> bool:
    a = arrays(q)
    return is_group(q) and bool((a.COMM == 0).all())


@dataclass
class LoopFlags:
    lcc: bool
    rcc: bool
    cc: bool
    power_associative: bool
    wip: bool
    moufang: bool
    extra: bool
    diassociative: bool
    aip: bool
    group: bool
    abelian_group: bool


@dataclass
class ElementClassReport:
    n: int
    pa_set: frozenset
    wip_set: frozenset
    moufang_set: frozenset
    pseudo_set: frozenset
    extra_set: frozenset
    square_nuclear_set: frozenset
    flags: LoopFlags
    moufang_set_is_subloop: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "pa_set": sorted(self.pa_set),
            "wip_set": sorted(self.wip_set),
            "moufang_set": sorted(self.moufang_set),
            "pseudo_set": sorted(self.pseudo_set),
            "extra_set": sorted(self.extra_set),
            "square_nuclear_set": sorted(self.square_nuclear_set),
            "flags": vars(self.flags),
            "moufang_set_is_subloop": self.moufang_set_is_subloop,
        }


def _mask_to_set(mask: np.ndarray) -> frozenset:
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def _is_product_closed(q: LoopTable, elems: frozenset) -> bool:
    a = arrays(q)
    ix = sorted(elems)
    return bool(np.isin(a.M[np.ix_(ix, ix)], ix).all())


def classify_elements(q: LoopTable) -> ElementClassReport:
    pa = pa_mask(q)
    loop_pa = bool(pa.all())
    moufang = moufang_mask(q)
    flags = LoopFlags(
        lcc=is_lcc(q),
        rcc=is_rcc(q),
        cc=is_cc(q),
        power_associative=loop_pa,
        wip=bool(wip_mask(q).all()),
        moufang=bool(moufang.all()),
        extra=bool(extra_mask(q).all()),
        diassociative=is_diassociative(q),
        aip=has_aip(q) if loop_pa else False,
        group=is_group(q),
        abelian_group=is_abelian_group(q),
    )
    mset = _mask_to_set(moufang)
    return ElementClassReport(
        n=q.n,
        pa_set=_mask_to_set(pa),
        wip_set=_mask_to_set(wip_mask(q)),
        moufang_set=mset,
        pseudo_set=_mask_to_set(pseudomoufang_mask(q)),
        extra_set=_mask_to_set(extra_mask(q)),
        square_nuclear_set=_mask_to_set(square_nuclear_mask(q)),
        flags=flags,
        moufang_set_is_subloop=_is_product_closed(q, mset),
    )


# -- counterexample finders (scalar, definition-faithful) --------------------

def law_counterexample(q: LoopTable, law: str):
    """First tuple violating the named law, or None when it holds.

    These are independent scalar sweeps; the vectorized predicates above
    must agree with them (exercised by the test suite).
    """
    n, m = q.n, q.mul
    if law == "rcc":
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if m(m(x, y), z) != m(m(x, z), q.ldiv(z, m(y, z))):
                        return (x, y, z)
        return None
    if law == "lcc":
        for z in range(n):
            for y in range(n):
                for x in range(n):
                    if m(z, m(y, x)) != m(q.rdiv(m(z, y), z), m(z, x)):
                        return (z, y, x)
        return None
    if law == "cc":
        return law_counterexample(q, "rcc") or law_counterexample(q, "lcc")
    if law == "pa":
        for c in range(n):
            if not q.is_power_associative_elem(c):
                return (c,)
        return None
    if law == "wip":
        for c in range(n):
            for x in range(n):
                if m(c, q.rho(m(x, c))) != q.rho(x):
                    return (c, x)
        return None
    if law == "moufang":
        for z in range(n):
            for x in range(n):
                for y in range(n):
                    if m(z, m(m(x, y), z)) != m(m(z, x), m(y, z)):
                        return (z, x, y)
        return None
    if law == "extra":
        for c in range(n):
            for x in range(n):
                for y in range(n):
                    if m(c, m(x, m(y, c))) != m(m(m(c, x), y), c):
                        return (c, x, y)
        return None
    if law == "flex":
        for a_ in range(n):
            for b in range(n):
                if m(a_, m(b, a_)) != m(m(a_, b), a_):
                    return (a_, b)
        return None
    if law == "aip":
        bad = law_counterexample(q, "pa")
        if bad is not None:
            return bad
        for x in range(n):
            for y in range(n):
                if q.rho(m(x, y)) != m(q.rho(x), q.rho(y)):
                    return (x, y)
        return None
    if law == "diassoc":
        for x in range(n):
            for y in range(x, n):
                elems = subloop_closure(q, frozenset((x, y)))
                if not is_associative_subset(q, elems):
                    return (x, y)
        return None
    raise ValueError("unknown law %r" % law)
