"""Whole-loop audit: run every identity and structural fact that applies
to a table, given which hypotheses (conjugacy closure, power
associativity) it satisfies.

Each check is a vectorized sweep over the full quantifier range; a
failure reports the first witnessing tuple.  Checks whose hypotheses do
not hold are reported as not applicable rather than skipped silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional

import numpy as np

from . import elements, structure
from .arrays import arrays, is_associative_subset, subloop_closure
from .core import LoopTable, Perm


@dataclass
class CheckResult:
    name: str
    status: str                      # "pass" | "fail" | "na"
    counterexample: Optional[tuple] = None


@dataclass
class AuditReport:
    name: str
    n: int
    is_cc: bool
    is_pa: bool
    is_wip: bool
    checks: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "name": self.name, "n": self.n,
            "is_cc": self.is_cc, "is_pa": self.is_pa, "is_wip": self.is_wip,
            "checks": [
                {"name": c.name, "status": c.status,
                 "counterexample": list(c.counterexample) if c.counterexample else None}
                for c in self.checks
            ],
        }


def _first_bad(ok: np.ndarray) -> tuple:
    idx = np.argwhere(~ok)
    return tuple(int(v) for v in idx[0])


@lru_cache(maxsize=None)
def _rinner_all(q: LoopTable) -> np.ndarray:
    """RIN[x, y, z] = (z) R(x, y) = (z x . y) / (x y)."""
    a = arrays(q)
    n, M, RD = a.n, a.M, a.RD
    out = np.empty((n, n, n), dtype=M.dtype)
    for x in range(n):
        zx = M[:, x]
        for y in range(n):
            out[x, y] = RD[M[x, y], M[zx, y]]
    return out


@lru_cache(maxsize=None)
def _linner_all(q: LoopTable) -> np.ndarray:
    """LIN[x, y, z] = (z) L(x, y) = (y x) \\ (y . x z)."""
    a = arrays(q)
    n, M, LD = a.n, a.M, a.LD
    out = np.empty((n, n, n), dtype=M.dtype)
    for x in range(n):
        xz = M[x, :]
        for y in range(n):
            out[x, y] = LD[M[y, x], M[y, xz]]
    return out


def _perm_is_hom(M: np.ndarray, p: np.ndarray) -> bool:
    return bool((p[M] == M[np.ix_(p, p)]).all())


def _pow_all(q: LoopTable, k: int) -> np.ndarray:
    return np.array([q.power(x, k) for x in range(q.n)])


# -- check bodies -------------------------------------------------------------
# Each returns None on pass, a counterexample tuple on failure.

def _chk_nucleus_normal(q, a):
    nuc = structure.nucleus(q)
    return None if structure.is_normal(q, nuc) else tuple(nuc.elements)


def _chk_quotient_nucleus_abelian(q, a):
    quot = structure.quotient(q, structure.nucleus(q))
    qa = arrays(quot)
    if (qa.ASSOC == 0).all() and (qa.COMM == 0).all():
        return None
    return ("Q/N not abelian group",)


def _chk_inner_maps_automorphisms(q, a):
    rin, lin = _rinner_all(q), _linner_all(q)
    for x in range(a.n):
        for y in range(a.n):
            if not _perm_is_hom(a.M, rin[x, y]) or not _perm_is_hom(a.M, lin[x, y]):
                return (x, y)
    return None


def _chk_assoc_symmetric(q, a):
    A = a.ASSOC
    for axes in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        ok = A == A.transpose(axes)
        if not ok.all():
            return _first_bad(ok) + ("perm %r" % (axes,),)
    return None


def _chk_commutators_nuclear(q, a):
    nuc, _, _, _ = elements.nucleus_masks(q)
    ok = nuc[a.COMM]
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_translate_invariance(q, a):
    # associators unchanged by nuclear translation of any argument
    nuc = np.nonzero(elements.nucleus_masks(q)[0])[0]
    A = a.ASSOC
    for u in nuc:
        ok = (A[a.M[u, :], :, :] == A).all() \
            and (A[:, a.M[u, :], :] == A).all() \
            and (A[:, :, a.M[u, :]] == A).all()
        if not ok:
            return (int(u),)
    ok = A[a.RHO, :, :] == A[a.LAM, :, :]
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_in_center_of_nucleus(q, a):
    nuc_mask = elements.nucleus_masks(q)[0]
    sub = structure.associator_subloop(q)
    nuc = np.nonzero(nuc_mask)[0]
    for v in sub.elements:
        if not nuc_mask[v]:
            return (v, "not nuclear")
        if any(a.COMM[v, w] != 0 for w in nuc):
            return (v, "not central in nucleus")
    return None


def _chk_inner_map_assoc_formulas(q, a):
    lin, rin = _linner_all(q), _rinner_all(q)
    n, M, A = a.n, a.M, a.ASSOC
    idx = np.arange(n)
    # (z)L(x,y) = z * (z,x,y)^-1
    want = M[idx[None, None, :], a.RHO[A.transpose(2, 0, 1)]]
    ok = lin == want
    if not ok.all():
        return _first_bad(ok) + ("left form",)
    # (z)R(x,y) = z * (z, lam(x), lam(y))
    want = M[idx[None, None, :], A[:, a.LAM[:, None], a.LAM[None, :]].transpose(1, 2, 0)]
    ok = rin == want
    if not ok.all():
        return _first_bad(ok) + ("right form",)
    # R(x,y)^-1 = L(lam(x), lam(y))
    for x in range(n):
        for y in range(n):
            inv = np.empty(n, dtype=rin.dtype)
            inv[rin[x, y]] = idx
            if not (inv == lin[a.LAM[x], a.LAM[y]]).all():
                return (x, y, "inverse relation")
    return None


def _chk_rinn_symmetric(q, a):
    rin = _rinner_all(q)
    ok = rin == rin.transpose(1, 0, 2)
    return None if ok.all() else _first_bad(ok)


def _chk_rinn_equals_linn_abelian(q, a):
    summary = structure.inn_group(q)
    if not summary.rinn_equals_linn:
        return ("RInn != LInn",)
    if not summary.rinn_abelian:
        return ("RInn not abelian",)
    return None


def _chk_t_map_commutator(q, a):
    # (x)T_y = x * [x, y]
    n = a.n
    want = a.M[np.arange(n)[:, None], a.COMM]                 # [x, y] = x * COMM[x, y]
    ok = a.TT.T == want
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_product_expansion(q, a):
    n, M, A, TT = a.n, a.M, a.ASSOC, a.TT
    lhs = A[M]                                   # [x, y, z, u]
    t1 = TT[np.arange(n)[None, :, None, None], A[:, None, :, :]]
    rhs1 = M[t1, A[None, :, :, :]]
    ok = lhs == rhs1
    if not ok.all():
        return _first_bad(ok) + ("T_y form",)
    t2 = TT[np.arange(n)[:, None, None, None], A[None, :, :, :]]
    rhs2 = M[A[:, None, :, :], t2]
    ok = lhs == rhs2
    return None if ok.all() else _first_bad(ok) + ("T_x form",)


def _chk_assoc_commutator_symmetry(q, a):
    A, C = a.ASSOC, a.COMM
    n = a.n
    lhs = C[A[:, None, :, :], np.arange(n)[None, :, None, None]]
    rhs = C[A[None, :, :, :], np.arange(n)[:, None, None, None]]
    ok = lhs == rhs
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_inverse_twist(q, a):
    A, TT = a.ASSOC, a.TT
    n = a.n
    lhs = TT[np.arange(n)[:, None, None], A[a.RHO, :, :]]
    rhs = a.RHO[A]
    ok = lhs == rhs
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_cancellation(q, a):
    A, M = a.ASSOC, a.M
    ok = (A[M] == 0) == (A[:, None, :, :] == A[a.RHO][None, :, :, :])
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_fixers_subloop(q, a):
    A, M = a.ASSOC, a.M
    for x in range(a.n):
        for y in range(a.n):
            els = np.nonzero(A[:, x, y] == 0)[0]
            if not np.isin(M[np.ix_(els, els)], els).all():
                return (x, y)
    return None


def _chk_division_shortcuts(q, a):
    n, M = a.n, a.M
    idx = np.arange(n)
    # x \ y = rho(x) * ((y*x) * rho(x))
    want_ld = M[a.RHO[:, None], M[M[idx[None, :], idx[:, None]], a.RHO[:, None]]]
    ok = a.LD == want_ld
    if not ok.all():
        return _first_bad(ok) + ("ldiv",)
    # y / x = x * (rho(x) * (y * rho(x)))  -- RD[x, y] in our layout
    want_rd = M[idx[:, None], M[a.RHO[:, None], M[idx[None, :], a.RHO[:, None]]]]
    ok = a.RD == want_rd
    return None if ok.all() else _first_bad(ok) + ("rdiv",)


def _chk_e_map_forms(q, a):
    n = a.n
    for x in range(n):
        e = Perm(int(v) for v in a.EE[x])
        rx, lx = q.R(x), q.L(x)
        if e != rx * lx * rx.inv() * lx.inv():
            return (x, "commutator form")
        if e != q.Rinner(q.lam(x), x):
            return (x, "R(lam x, x) form")
        if e != q.Linner(x, q.lam(x)).inv():
            return (x, "L(x, lam x) form")
        if e != q.Linner(q.rho(x), x).inv():
            return (x, "L(rho x, x) form")
    # (y)E_x = y * (y, lam(x), x)
    idx = np.arange(n)
    want = a.M[idx[None, :], a.ASSOC[idx[None, :], a.LAM[:, None], idx[:, None]]]
    ok = a.EE == want
    return None if ok.all() else _first_bad(ok)


def _chk_assoc_cc_forms(q, a):
    A, TT = a.ASSOC, a.TT
    n = a.n
    # (x,y,z) = (x, z, (y)T_z)
    rhs = A[np.arange(n)[:, None, None],
            np.arange(n)[None, None, :],
            TT.T[None, :, :]]
    ok = A == rhs
    if not ok.all():
        return _first_bad(ok) + ("right form",)
    tti = np.empty_like(TT)
    idx = np.arange(n)
    for x in range(n):
        tti[x, TT[x]] = idx
    # (x,y,z) = ((y)T_x^-1, x, z)
    rhs = A[tti[:, :, None], idx[:, None, None], idx[None, None, :]]
    ok = A == rhs
    return None if ok.all() else _first_bad(ok) + ("left form",)


def _chk_wip_equivalences(q, a):
    n, M = a.n, a.M
    idx = np.arange(n)
    w1 = elements.wip_mask(q)
    v2 = M[idx[None, :], a.RHO[M]]
    w2 = (v2 == a.RHO[:, None]).all(axis=1)
    v3 = M[a.LAM[M.T], idx[None, :]]
    w3 = (v3 == a.LAM[:, None]).all(axis=1)
    v4 = M[M[idx[:, None], a.EE], a.RHO[None, :]]
    w4 = (v4 == idx[:, None]).all(axis=1)
    v5 = M[M[idx[None, :], a.EE.T], a.RHO[:, None]]
    w5 = (v5 == idx[None, :]).all(axis=1)
    v6 = a.ASSOC[idx[:, None], idx[None, :], a.RHO[None, :]] \
        == a.ASSOC[a.RHO[None, :], idx[:, None], a.RHO[:, None]]
    w6 = v6.all(axis=1)
    v7 = a.ASSOC[idx[None, :], idx[:, None], a.RHO[:, None]] \
        == a.ASSOC[a.RHO[:, None], idx[None, :], a.RHO[None, :]]
    w7 = v7.all(axis=1)
    for label, w in (("ii", w2), ("iii", w3), ("iv", w4), ("v", w5), ("vi", w6), ("vii", w7)):
        if not (w == w1).all():
            return _first_bad(w == w1) + (label,)
    return None


def _chk_wip_powers(q, a):
    wip = elements.wip_mask(q)
    for c in np.nonzero(wip)[0]:
        for p in q.cyclic_subloop(int(c)):
            if not wip[p]:
                return (int(c), p)
    return None


def _chk_wip_squares_associate(q, a):
    wip = elements.wip_mask(q)
    A, M = a.ASSOC, a.M
    idx = np.arange(a.n)
    for c in np.nonzero(wip)[0]:
        sq = int(M[c, c])
        for b in range(a.n):
            els = np.array(subloop_closure(q, frozenset((int(c), b))))
            if not (A[sq][np.ix_(els, els)] == 0).all():
                return (int(c), b)
            if elements.pa_mask(q)[b]:
                sqb = int(M[b, b])
                if not (A[sqb][np.ix_(els, els)] == 0).all():
                    return (int(c), b, "pa partner")
    return None


def _chk_moufang_pair_conditions(q, a):
    mfg = elements.moufang_mask(q)
    A, M = a.ASSOC, a.M
    for x in np.nonzero(mfg)[0]:
        for y in np.nonzero(mfg)[0]:
            c1 = bool(mfg[M[x, y]])
            c2 = bool(mfg[M[y, x]])
            c3 = bool((A[:, x, y] == A[:, a.RHO[x], y]).all())
            c4 = bool((A[:, x, y] == A[:, x, a.RHO[y]]).all())
            if not (c1 == c2 == c3 == c4):
                return (int(x), int(y))
    return None


def _chk_pseudomoufang_forms(q, a):
    n, M = a.n, a.M
    idx = np.arange(n)
    pm = elements.pseudomoufang_mask(q)
    for c in range(n):
        # c x == (c x . y rho(x)) . (x rho(y))
        cx = M[c]
        yrx = M[idx[None, :], a.RHO[:, None]]         # [x, y] = y * rho(x)
        t = M[cx[:, None], yrx]
        xry = M[idx[:, None], a.RHO[None, :]]         # [x, y] = x * rho(y)
        f2 = bool((M[t, xry] == cx[:, None]).all())
        # x c == (lam(y) x) ((lam(x) y) (x c))
        xc = M[:, c]
        lyx = M[a.LAM[None, :], idx[:, None]]         # [x, y] = lam(y) * x
        lxy = M[a.LAM[:, None], idx[None, :]]         # [x, y] = lam(x) * y
        inner = M[lxy, xc[:, None]]
        f3 = bool((M[lyx, inner] == xc[:, None]).all())
        if not (bool(pm[c]) == f2 == f3):
            return (c,)
    return None


def _chk_two_of_three(q, a):
    w = elements.wip_mask(q)
    m = elements.moufang_mask(q)
    p = elements.pseudomoufang_mask(q)
    ex = elements.extra_mask(q)
    for c in range(a.n):
        count = int(w[c]) + int(m[c]) + int(p[c])
        if count >= 2 and not (w[c] and m[c] and p[c] and ex[c]):
            return (c,)
    return None


def _chk_wip_square_extra(q, a):
    w = elements.wip_mask(q)
    ex = elements.extra_mask(q)
    nuc = elements.nucleus_masks(q)[0]
    M = a.M
    for c in np.nonzero(w)[0]:
        sq = M[c, c]
        if not ex[sq]:
            return (int(c), "square not extra")
        if not nuc[M[sq, sq]]:
            return (int(c), "fourth power not nuclear")
    return None


def _chk_class_sets_normal(q, a):
    for label, mask in (("wip", elements.wip_mask(q)),
                        ("pseudomoufang", elements.pseudomoufang_mask(q)),
                        ("extra", elements.extra_mask(q)),
                        ("square-nuclear", elements.square_nuclear_mask(q))):
        els = tuple(int(i) for i in np.nonzero(mask)[0])
        if not np.isin(a.M[np.ix_(els, els)], els).all():
            return (label, "not product closed")
        sub = structure.Subloop(els, q)
        if not structure.is_normal(q, sub):
            return (label, "not normal")
    return None


def _chk_extra_equivalences(q, a):
    n, M = a.n, a.M
    ex = elements.extra_mask(q)
    mfg = elements.moufang_mask(q)
    nuc = elements.nucleus_masks(q)[0]
    idx = np.arange(n)
    for c in range(n):
        cx = M[c]
        xc = M[:, c]
        # (ii) c(x . cy) == (cx . c) y
        l = M[c, M[idx[:, None], cx[None, :]]]
        r = M[M[cx, c][:, None], idx[None, :]]
        e2 = bool((l == r).all())
        # (iii) (yc . x)c == y(c . xc)
        l = M[M[xc[:, None], idx[None, :]], c]        # [y, x]
        r = M[idx[:, None], M[c, xc][None, :]]
        e3 = bool((l == r).all())
        # (iv) c(x . cy) == (c . xc) y
        l = M[c, M[idx[:, None], cx[None, :]]]
        r = M[M[c, xc][:, None], idx[None, :]]
        e4 = bool((l == r).all())
        # (v) (yc . x)c == y(cx . c)
        l = M[M[xc[:, None], idx[None, :]], c]
        r = M[idx[:, None], M[cx, c][None, :]]
        e5 = bool((l == r).all())
        e6 = bool(mfg[c] and nuc[M[c, c]])
        if not (bool(ex[c]) == e2 == e3 == e4 == e5 == e6):
            return (c,)
    return None


# -- power-associative-only checks --------------------------------------------

def _chk_cubes_wip(q, a):
    wip = elements.wip_mask(q)
    p3 = _pow_all(q, 3)
    ok = wip[p3]
    return None if ok.all() else _first_bad(ok)


def _chk_high_powers(q, a):
    ex = elements.extra_mask(q)
    nuc = elements.nucleus_masks(q)[0]
    p6 = _pow_all(q, 6)
    if not ex[p6].all():
        return _first_bad(ex[p6]) + ("sixth power not extra",)
    p12 = _pow_all(q, 12)
    ok = nuc[p12]
    return None if ok.all() else _first_bad(ok) + ("twelfth power not nuclear",)


def _quotient_by_mask(q, mask):
    els = tuple(int(i) for i in np.nonzero(mask)[0])
    return structure.quotient(q, structure.Subloop(els, q))


def _chk_quotient_exponents(q, a):
    qn = structure.quotient(q, structure.nucleus(q))
    if 12 % structure.exponent_of_abelian(qn) != 0:
        return ("Q/N exponent does not divide 12",)
    qw = _quotient_by_mask(q, elements.wip_mask(q))
    if not elements.is_abelian_group(qw):
        return ("Q/W not abelian",)
    if any(qw.order_of(x) not in (1, 3) for x in range(qw.n)):
        return ("Q/W not elementary abelian 3-group",)
    qe = _quotient_by_mask(q, elements.extra_mask(q))
    if 6 % structure.exponent_of_abelian(qe) != 0:
        return ("Q/Ex exponent does not divide 6",)
    return None


def _chk_e_map_order(q, a):
    n = a.n
    idx = np.arange(n)
    for x in range(n):
        p = a.EE[x]
        q6 = idx
        for _ in range(6):
            q6 = p[q6]
        if not (q6 == idx).all():
            return (x,)
    return None


def _chk_e_map_power_formulas(q, a):
    for x in range(a.n):
        ex = Perm(int(v) for v in a.EE[x])
        rx, lx = q.R(x), q.L(x)
        ord_x = q.order_of(x)
        for k in range(ord_x + 2):
            xk = q.power(x, k)
            if q.E(xk) != ex ** (k * k):
                return (x, k, "E power")
            if q.R(xk) != (rx ** k) * (ex ** ((k - 1) * k // 2)):
                return (x, k, "R power")
            if q.L(xk) != (lx ** k) * (ex ** (-(k - 1) * k // 2)):
                return (x, k, "L power")
        if ex * rx != rx * ex or ex * lx != lx * ex:
            return (x, "E commutes with translations")
        for m in range(3):
            for k in range(3):
                if (rx ** k) * (lx ** m) != (lx ** m) * (rx ** k) * (ex ** (m * k)):
                    return (x, m, k, "R-L interchange")
    return None


def _chk_two_generator_groups(q, a):
    for x in range(q.n):
        x3 = q.power(x, 3)
        x6 = q.power(x, 6)
        for y in range(q.n):
            y2 = q.mul(y, y)
            els = subloop_closure(q, frozenset((x3, y2)))
            if not is_associative_subset(q, els):
                return (x, y, "cube-square")
            els = subloop_closure(q, frozenset((x6, y)))
            if not is_associative_subset(q, els):
                return (x, y, "sixth-power")
    return None


def _chk_order_divisibility(q, a):
    if elements.is_group(q):
        return None
    wip = bool(elements.wip_mask(q).all())
    if wip and q.n % 16 != 0:
        return ("WIP but order not divisible by 16",)
    if not wip and q.n % 27 != 0:
        return ("non-WIP but order not divisible by 27",)
    return None


def _chk_cyclic_quotient_group(q, a):
    qn = structure.quotient(q, structure.nucleus(q))
    cyclic = any(len(qn.cyclic_subloop(x)) == qn.n for x in range(qn.n))
    if cyclic and not elements.is_group(q):
        return ("Q/N cyclic but Q not a group",)
    return None


def _chk_index4(q, a):
    nuc = structure.nucleus(q)
    if q.n != 4 * len(nuc):
        return None
    if not elements.wip_mask(q).all():
        return ("not WIP",)
    asub = structure.associator_subloop(q)
    if elements.is_group(q):
        return None
    if len(asub) != 2:
        return ("associator subloop size %d" % len(asub),)
    z = set(structure.center(q).elements)
    if not set(asub.elements) <= z:
        return ("associator subloop not central",)
    if len(nuc) % 4 != 0:
        return ("nucleus size not divisible by 4",)
    return None


def _chk_boolean_nz_extra(q, a):
    nuc = structure.nucleus(q)
    cen = structure.center(q)
    if nuc.elements != cen.elements:
        return None
    if any(q.mul(x, x) != 0 for x in nuc.elements):
        return None
    if not elements.extra_mask(q).all():
        return ("N = Z elementary abelian 2-group but loop not extra",)
    return None


def _chk_wip_loop_equivalences(q, a):
    sq = a.M[np.arange(a.n), np.arange(a.n)]
    conds = (
        bool(elements.wip_mask(q).all()),
        bool(elements.nucleus_masks(q)[0][sq].all()),
        bool(elements.extra_mask(q)[sq].all()),
        bool(elements.moufang_mask(q)[sq].all()),
        bool(elements.pseudomoufang_mask(q)[sq].all()),
        bool(elements.wip_mask(q)[sq].all()),
    )
    return None if len(set(conds)) == 1 else (conds,)


def _chk_p_equals_ex_in_w(q, a):
    p = elements.pseudomoufang_mask(q)
    ex = elements.extra_mask(q)
    w = elements.wip_mask(q)
    if not (p == ex).all():
        return _first_bad(p == ex)
    ok = ~ex | w
    return None if ok.all() else _first_bad(ok)


CHECKS = (
    ("nucleus-normal", "cc", _chk_nucleus_normal),
    ("nucleus-quotient-abelian", "cc", _chk_quotient_nucleus_abelian),
    ("inner-maps-automorphisms", "cc", _chk_inner_maps_automorphisms),
    ("associator-argument-symmetry", "cc", _chk_assoc_symmetric),
    ("commutators-nuclear", "cc", _chk_commutators_nuclear),
    ("associator-nuclear-translation", "cc", _chk_assoc_translate_invariance),
    ("associator-subloop-central-in-nucleus", "cc", _chk_assoc_in_center_of_nucleus),
    ("inner-map-associator-formulas", "cc", _chk_inner_map_assoc_formulas),
    ("right-inner-maps-symmetric", "cc", _chk_rinn_symmetric),
    ("right-inner-group-equals-left-abelian", "cc", _chk_rinn_equals_linn_abelian),
    ("conjugation-map-is-commutator", "cc", _chk_t_map_commutator),
    ("associator-product-expansion", "cc", _chk_assoc_product_expansion),
    ("associator-commutator-symmetry", "cc", _chk_assoc_commutator_symmetry),
    ("associator-inverse-twist", "cc", _chk_assoc_inverse_twist),
    ("associator-cancellation", "cc", _chk_assoc_cancellation),
    ("associator-fixers-are-subloops", "cc", _chk_assoc_fixers_subloop),
    ("division-shortcuts", "cc", _chk_division_shortcuts),
    ("e-map-forms", "cc", _chk_e_map_forms),
    ("associator-conjugacy-forms", "cc", _chk_assoc_cc_forms),
    ("weak-inverse-equivalences", "cc", _chk_wip_equivalences),
    ("weak-inverse-closed-under-powers", "cc", _chk_wip_powers),
    ("weak-inverse-squares-associate", "cc", _chk_wip_squares_associate),
    ("moufang-pair-conditions", "cc", _chk_moufang_pair_conditions),
    ("pseudomoufang-characterizations", "cc", _chk_pseudomoufang_forms),
    ("two-of-three-implies-extra", "cc", _chk_two_of_three),
    ("weak-inverse-square-extra", "cc", _chk_wip_square_extra),
    ("class-sets-normal", "cc", _chk_class_sets_normal),
    ("extra-element-equivalences", "cc", _chk_extra_equivalences),
    ("cubes-weak-inverse", "pacc", _chk_cubes_wip),
    ("sixth-and-twelfth-powers", "pacc", _chk_high_powers),
    ("quotient-exponents", "pacc", _chk_quotient_exponents),
    ("e-map-order-divides-6", "pacc", _chk_e_map_order),
    ("e-map-power-formulas", "pacc", _chk_e_map_power_formulas),
    ("two-generator-groups", "pacc", _chk_two_generator_groups),
    ("order-16-or-27", "pacc", _chk_order_divisibility),
    ("cyclic-nucleus-quotient-group", "pacc", _chk_cyclic_quotient_group),
    ("nucleus-index-4", "pacc", _chk_index4),
    ("boolean-center-extra", "pacc", _chk_boolean_nz_extra),
    ("wip-loop-equivalences", "pacc", _chk_wip_loop_equivalences),
    ("pseudomoufang-equals-extra", "pacc", _chk_p_equals_ex_in_w),
)


def audit(q: LoopTable) -> AuditReport:
    a = arrays(q)
    cc = elements.is_cc(q)
    pa = elements.is_power_associative_loop(q)
    wip = bool(elements.wip_mask(q).all())
    results = []
    for name, hyp, fn in CHECKS:
        applicable = (hyp == "any") or (hyp == "cc" and cc) or (hyp == "pacc" and cc and pa)
        if not applicable:
            results.append(CheckResult(name, "na"))
            continue
        bad = fn(q, a)
        results.append(CheckResult(name, "pass" if bad is None else "fail", bad))
    return AuditReport(name=q.name or "", n=q.n, is_cc=cc, is_pa=pa, is_wip=wip,
                       checks=results)
