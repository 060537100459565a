"""Small-order classification runs and the fixture corpus.

Order 27: all 243 parameter tuples of the five-parameter family are
built, the nonassociative ones deduplicated up to isomorphism, and each
class is labeled by recomputing its structural case (cube subloop size,
Moufang-element subloop, commutation pattern) from the table rather than
trusting the generating parameters.

Order 16: the three non-extra classes come from the parametrized family
plus the embedded sixteen-element table; the extra classes come from the
search census (long tier).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import elements, iso, structure
from .arrays import arrays
from .core import LoopTable, direct_product
from .families import family16, family27, poly2_4, poly16, check_aip_criterion
from .tables import cyclic, dihedral8, elem_abelian2, quaternion8, table1, table2


def build_corpus() -> List[LoopTable]:
    """Every fixture the audit sweep runs over (about 300 loops)."""
    loops: List[LoopTable] = [table1(), table2()]
    loops += [family16(r, s) for r in range(4) for s in range(4)]
    loops += [family27(*p) for p in itertools.product(range(3), repeat=5)]
    loops += [cyclic(n) for n in range(2, 28)]
    loops += [elem_abelian2(k) for k in range(2, 5)]
    loops += [dihedral8(), quaternion8()]
    loops += [
        direct_product(cyclic(3), cyclic(3), name="Z3xZ3"),
        direct_product(cyclic(2), cyclic(4), name="Z2xZ4"),
        direct_product(cyclic(3), cyclic(9), name="Z3xZ9"),
        direct_product(elem_abelian2(2), cyclic(3), name="Z2^2xZ3"),
    ]
    return loops


@dataclass
class ClassInfo27:
    rep: LoopTable
    members: int
    aip: bool
    cube_root_count: int            # |{x : x^3 = 0}|
    moufang_count: int
    moufang_is_subloop: bool
    case: str                       # "I" | "II" | "III"
    commuting_case: str             # "A" | "B"
    nucleus_size: int
    center_size: int

    def label(self) -> str:
        return self.case + self.commuting_case


@dataclass
class Order27Report:
    class_count: int
    aip_count: int
    case_counts: dict
    classes: List[ClassInfo27]
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "class_count": self.class_count,
            "aip_count": self.aip_count,
            "case_counts": self.case_counts,
            "classes": [
                {"label": c.label(), "members": c.members, "aip": c.aip,
                 "cube_root_count": c.cube_root_count,
                 "moufang_count": c.moufang_count,
                 "moufang_is_subloop": c.moufang_is_subloop,
                 "nucleus_size": c.nucleus_size, "center_size": c.center_size}
                for c in self.classes
            ],
            "elapsed": self.elapsed,
        }


def _case_labels(q: LoopTable) -> ClassInfo27:
    a = arrays(q)
    n = q.n
    mfg = elements.moufang_mask(q)
    nuc = elements.nucleus_masks(q)[0]
    cube_roots = frozenset(x for x in range(n) if q.power(x, 3) == 0)
    mset = frozenset(int(i) for i in np.nonzero(mfg)[0])
    nset = frozenset(int(i) for i in np.nonzero(nuc)[0])
    if len(cube_roots) == n:
        case = "I"
    elif cube_roots == mset:
        case = "II"
    else:
        case = "III"
    commutes = any(
        a.COMM[x, y] == 0
        for x in range(n) if x not in mset
        for y in mset - nset
    )
    m_closed = bool(np.isin(a.M[np.ix_(sorted(mset), sorted(mset))], sorted(mset)).all())
    return ClassInfo27(
        rep=q, members=0, aip=elements.has_aip(q),
        cube_root_count=len(cube_roots),
        moufang_count=len(mset), moufang_is_subloop=m_closed,
        case=case, commuting_case="A" if commutes else "B",
        nucleus_size=len(nset), center_size=len(structure.center(q)),
    )


def classify_order27() -> Order27Report:
    start = time.time()
    loops = [family27(*p) for p in itertools.product(range(3), repeat=5)]
    nonassoc = [q for q in loops if not elements.is_group(q)]
    reps = iso.dedupe(nonassoc)
    members = {rep.rows: 0 for rep in reps}
    for q in nonassoc:
        for rep in reps:
            if iso.are_isomorphic(rep, q) is not None:
                members[rep.rows] += 1
                break
    infos = []
    for rep in reps:
        info = _case_labels(rep)
        info.members = members[rep.rows]
        infos.append(info)
    case_counts: dict = {}
    for info in infos:
        case_counts[info.case] = case_counts.get(info.case, 0) + 1
    return Order27Report(
        class_count=len(reps),
        aip_count=sum(1 for i in infos if i.aip),
        case_counts=case_counts,
        classes=infos,
        elapsed=time.time() - start,
    )


@dataclass
class Order16Report:
    nonextra_class_count: int
    family_class_count: int
    parity_rule_holds: bool
    trio_facts: dict
    extra_class_count: Optional[int]
    total_class_count: Optional[int]
    search_complete: Optional[bool]
    classes: List[LoopTable] = field(default_factory=list)
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {
            "nonextra_class_count": self.nonextra_class_count,
            "family_class_count": self.family_class_count,
            "parity_rule_holds": self.parity_rule_holds,
            "trio_facts": self.trio_facts,
            "extra_class_count": self.extra_class_count,
            "total_class_count": self.total_class_count,
            "search_complete": self.search_complete,
            "elapsed": self.elapsed,
        }


def _pacc_nonassoc_nonextra(q: LoopTable) -> dict:
    rep = elements.classify_elements(q)
    nuc = structure.nucleus(q)
    cen = structure.center(q)
    center_cyclic = len(cen) == len(q.cyclic_subloop(cen.elements[-1])) if len(cen) > 1 else True
    return {
        "pacc": rep.flags.cc and rep.flags.power_associative,
        "nonassociative": not rep.flags.group,
        "extra": rep.flags.extra,
        "nucleus_size": len(nuc),
        "center_size": len(cen),
        "center_cyclic": center_cyclic,
    }


def classify_order16(long: bool = False, budget: float = 1800.0,
                     jobs: int = 1) -> Order16Report:
    start = time.time()
    q00, q11, t2 = family16(0, 0), family16(1, 1), table2()
    trio_facts = {
        "q16(0,0)": _pacc_nonassoc_nonextra(q00),
        "q16(1,1)": _pacc_nonassoc_nonextra(q11),
        "table2": _pacc_nonassoc_nonextra(t2),
    }
    trio = [q00, q11, t2]
    trio_classes = iso.dedupe(trio)
    family = [family16(r, s) for r in range(4) for s in range(4)]
    family_classes = iso.dedupe(family)
    parity = True
    for r in range(4):
        for s in range(4):
            target = q11 if (r % 2 == 1 and s % 2 == 1) else q00
            if iso.are_isomorphic(family16(r, s), target) is None:
                parity = False
    extra_count = total = complete = None
    classes: List[LoopTable] = list(trio_classes)
    if long:
        from .search import SearchSpec, search
        spec = SearchSpec(n=16, laws=frozenset({"extra"}), nonassociative_only=True,
                          up_to_iso=True, budget=budget, jobs=jobs)
        result = search(spec)
        complete = result.complete
        if result.complete:
            extra_count = len(result.tables)
            classes = iso.dedupe(list(trio_classes) + list(result.tables))
            total = len(classes)
    return Order16Report(
        nonextra_class_count=len(trio_classes),
        family_class_count=len(family_classes),
        parity_rule_holds=parity,
        trio_facts=trio_facts,
        extra_class_count=extra_count,
        total_class_count=total,
        search_complete=complete,
        classes=classes,
        elapsed=time.time() - start,
    )


def verify_polynomial_forms() -> dict:
    """The closed multiplication formulas rebuild the same loops."""
    from .iso import are_isomorphic, _extend_map, _verify

    out = {"family": {}, "table2": None}
    for r in range(4):
        for s in range(4):
            q = family16(r, s)
            p = poly16(r, s)
            # generator map: z -> (1,0,0), a -> (0,1,0), b -> (0,0,1)
            witness = _extend_map(q, p, (1, 8, 4), (4, 2, 1))
            ok = witness is not None and _verify(q, p, witness)
            if not ok:
                ok = are_isomorphic(q, p) is not None
            out["family"][(r, s)] = ok
    t2, p2 = table2(), poly2_4()
    witness = _extend_map(t2, p2, (1, 2, 4, 8), (8, 4, 2, 1))
    ok = witness is not None and _verify(t2, p2, witness)
    if not ok:
        ok = are_isomorphic(t2, p2) is not None
    out["table2"] = ok
    return out
