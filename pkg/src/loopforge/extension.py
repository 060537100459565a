"""Central extensions of abelian groups by cocycles.

An extension lives on A x G with product
``(a, x)(b, y) = (a + b, x + y + f(a, b))`` for a map f vanishing on the
axes.  Its associators are controlled by the form

    assoc_form(f)(a, b, c) = f(a,b) + f(a+b, c) - f(b,c) - f(a, b+c),

whose full symmetry / diagonal vanishing decide whether the extension is
conjugacy closed / additionally power-associative.  The exponent
polynomials for the rank-2 integer base are kept as exact integers and
reduced only inside the codomain group.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from .core import LoopTable

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group as a product of cyclic factors."""

    moduli: Tuple[int, ...]

    def __post_init__(self):
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValueError("moduli must be positive: %r" % (self.moduli,))

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli)

    @property
    def zero(self) -> Vec:
        return (0,) * len(self.moduli)

    def reduce(self, v) -> Vec:
        return tuple(int(x) % m for x, m in zip(v, self.moduli))

    def add(self, u: Vec, v: Vec) -> Vec:
        return tuple((a + b) % m for a, b, m in zip(u, v, self.moduli))

    def neg(self, u: Vec) -> Vec:
        return tuple((-a) % m for a, m in zip(u, self.moduli))

    def scale(self, k: int, u: Vec) -> Vec:
        return tuple((k * a) % m for a, m in zip(u, self.moduli))

    def elements(self):
        return (tuple(v) for v in itertools.product(*[range(m) for m in self.moduli]))

    def index(self, v: Vec) -> int:
        i = 0
        for a, m in zip(v, self.moduli):
            i = i * m + (a % m)
        return i

    def unindex(self, i: int) -> Vec:
        out = []
        for m in reversed(self.moduli):
            out.append(i % m)
            i //= m
        return tuple(reversed(out))


Z2 = FinAbGroup((2,))
Z3 = FinAbGroup((3,))
Z4 = FinAbGroup((4,))
Z6 = FinAbGroup((6,))


@dataclass(frozen=True)
class Cocycle:
    """A map f : A x A -> G with f(0, a) = f(a, 0) = 0."""

    A: FinAbGroup
    G: FinAbGroup
    fn: Callable[[Vec, Vec], Vec]

    def __call__(self, a: Vec, b: Vec) -> Vec:
        return self.G.reduce(self.fn(a, b))

    def satisfies_star1(self) -> bool:
        z = self.G.zero
        return all(self(self.A.zero, a) == z and self(a, self.A.zero) == z
                   for a in self.A.elements())


def cocycle_from_table(A: FinAbGroup, G: FinAbGroup, table: dict) -> Cocycle:
    return Cocycle(A, G, lambda a, b: table[(a, b)])


def assoc_form(f: Cocycle, a: Vec, b: Vec, c: Vec) -> Vec:
    G, A = f.G, f.A
    pos = G.add(f(a, b), f(A.add(a, b), c))
    negv = G.add(f(b, c), f(a, A.add(b, c)))
    return G.add(pos, G.neg(negv))


def is_cc_good(f: Cocycle) -> bool:
    """f vanishes on the axes and its associator form is fully symmetric."""
    if not f.satisfies_star1():
        return False
    elems = list(f.A.elements())
    for a in elems:
        for b in elems:
            for c in elems:
                base = assoc_form(f, a, b, c)
                if (assoc_form(f, a, c, b) != base
                        or assoc_form(f, b, a, c) != base
                        or assoc_form(f, b, c, a) != base
                        or assoc_form(f, c, a, b) != base
                        or assoc_form(f, c, b, a) != base):
                    return False
    return True


def is_pacc_good(f: Cocycle) -> bool:
    if not is_cc_good(f):
        return False
    z = f.G.zero
    return all(assoc_form(f, a, a, a) == z for a in f.A.elements())


def extend(A: FinAbGroup, G: FinAbGroup, f: Cocycle, name: str = "") -> LoopTable:
    """The loop on A x G; element (a, x) gets index A.index(a)*|G| + G.index(x)."""
    if not f.satisfies_star1():
        raise ValueError("cocycle does not vanish on the axes")
    na, ng = A.order, G.order
    a_elems = [A.unindex(i) for i in range(na)]
    g_elems = [G.unindex(i) for i in range(ng)]
    n = na * ng
    rows = [[0] * n for _ in range(n)]
    for ia, a in enumerate(a_elems):
        for ix, x in enumerate(g_elems):
            row = rows[ia * ng + ix]
            for ib, b in enumerate(a_elems):
                fab = f(a, b)
                iab = A.index(A.add(a, b)) * ng
                for iy, y in enumerate(g_elems):
                    row[ib * ng + iy] = iab + G.index(G.add(G.add(x, y), fab))
    return LoopTable(rows, name=name)


# -- the rank-2 integer-base exponent polynomials -----------------------------

def star2_exponents(i: int, j: int, k: int, l: int) -> Tuple[int, int, int]:
    """Exact (u, v, z) coefficients of the rank-2 cocycle at (i a + j b, k a + l b).

    The binomial-style terms are computed before any reduction; their
    parity matters to the power-associativity criterion.
    """
    cu = j * (k - 1) * k // 2 + i * l * k
    cv = -k * (j - 1) * j // 2 - i * j * l
    cz = j * k
    return cu, cv, cz


def star2_value(G: FinAbGroup, u: Vec, v: Vec, z: Vec,
                i: int, j: int, k: int, l: int) -> Vec:
    cu, cv, cz = star2_exponents(i, j, k, l)
    return G.add(G.add(G.scale(cu, u), G.scale(cv, v)), G.scale(cz, z))


def pacc_criterion(G: FinAbGroup, u: Vec, v: Vec) -> bool:
    """3u == 3v and 6u == 6v == 0: the extension over the rank-2 base is
    power-associative exactly under this condition."""
    return (G.scale(3, u) == G.scale(3, v)
            and G.scale(6, u) == G.zero and G.scale(6, v) == G.zero)


def diagonal_vanishes_on_window(G: FinAbGroup, u: Vec, v: Vec, z: Vec,
                                window: int = 6) -> bool:
    """Brute force: assoc_form(x, x, x) == 0 for all x = i a + j b with
    |i|, |j| <= window, evaluating the form from raw cocycle values."""
    def f(a, b):
        return star2_value(G, u, v, z, a[0], a[1], b[0], b[1])

    def add(a, b):
        return (a[0] + b[0], a[1] + b[1])

    zero = G.zero
    for i in range(-window, window + 1):
        for j in range(-window, window + 1):
            x = (i, j)
            form = G.add(G.add(f(x, x), f(add(x, x), x)),
                         G.neg(G.add(f(x, x), f(x, add(x, x)))))
            if form != zero:
                return False
    return True
