"""Finite loops as Cayley tables, and the translation maps built from them.

Elements are integers 0..n-1 with 0 the two-sided identity.  A table is
valid when every row and every column is a permutation of 0..n-1 (Latin
square) and row 0 / column 0 realize the identity.  Tables and permutations
are immutable after construction; every operation here is pure.

Mappings act on the right throughout: ``(p * q)(x) == q(p(x))``, i.e. the
left factor is applied first.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

MAX_ORDER = 255


class InvalidTableError(ValueError):
    """Raised when rows do not describe a loop (Latin square with identity)."""


class AmbiguousPowerError(ValueError):
    """Canonical power requested for an element whose powers depend on bracketing."""


class Perm:
    """A permutation of 0..n-1, stored as the tuple of images.

    Composition is left-to-right: ``(p * q)(x) == q(p(x))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation: %r" % (images,))
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):  # pragma: no cover - guard only
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        a, b = self.images, other.images
        return Perm(b[a[x]] for x in range(len(a)))

    def inv(self) -> "Perm":
        images = self.images
        out = [0] * len(images)
        for x, y in enumerate(images):
            out[y] = x
        return Perm(out)

    def __pow__(self, k: int) -> "Perm":
        n = len(self.images)
        if k < 0:
            return self.inv() ** (-k)
        result = Perm.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __repr__(self) -> str:
        return "Perm(%r)" % (self.images,)


def _validate(rows: Sequence[Sequence[int]]) -> None:
    n = len(rows)
    if n == 0:
        raise InvalidTableError("empty table")
    if n > MAX_ORDER:
        raise InvalidTableError("order %d exceeds supported maximum %d" % (n, MAX_ORDER))
    full = list(range(n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidTableError("row %d has length %d, expected %d" % (i, len(row), n))
        if sorted(row) != full:
            raise InvalidTableError("row %d is not a permutation of 0..%d" % (i, n - 1))
    for j in range(n):
        if sorted(rows[i][j] for i in range(n)) != full:
            raise InvalidTableError("column %d is not a permutation of 0..%d" % (j, n - 1))


def _find_identity(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    for e in range(n):
        if all(rows[e][y] == y for y in range(n)) and all(rows[x][e] == x for x in range(n)):
            return e
    raise InvalidTableError("table has no two-sided identity element")


class LoopTable:
    """A finite loop given by its Cayley table, identity normalized to 0.

    Use :meth:`from_rows` to build from raw rows; the constructor assumes the
    identity already sits at index 0.  If the raw table's identity is some
    other element, ``from_rows`` relabels by the transposition swapping it
    with 0 and records that map in ``relabeling``.
    """

    def __init__(self, rows: Sequence[Sequence[int]], name: str = "",
                 relabeling: Optional[tuple] = None):
        _validate(rows)
        if _find_identity(rows) != 0:
            raise InvalidTableError("identity is not element 0; use from_rows()")
        self.n = len(rows)
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.name = name
        self.relabeling = relabeling
        self._pa_cache: dict[int, bool] = {}
        self._subloop_cache: dict[int, tuple] = {}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str = "") -> "LoopTable":
        _validate(rows)
        e = _find_identity(rows)
        if e == 0:
            return cls(rows, name=name)
        n = len(rows)
        p = list(range(n))
        p[0], p[e] = e, 0
        relabeled = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                relabeled[p[x]][p[y]] = p[rows[x][y]]
        return cls(relabeled, name=name, relabeling=tuple(p))

    # -- products and divisions -------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    @cached_property
    def _ldiv_rows(self) -> tuple:
        # _ldiv_rows[x][z] is the unique w with x*w == z
        out = []
        for row in self.rows:
            inv = [0] * self.n
            for w, z in enumerate(row):
                inv[z] = w
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def _rdiv_cols(self) -> tuple:
        # _rdiv_cols[y][z] is the unique w with w*y == z
        n = self.n
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            row = self.rows[x]
            for y in range(n):
                out[y][row[y]] = x
        return tuple(tuple(col) for col in out)

    def ldiv(self, x: int, z: int) -> int:
        """The unique w with x*w == z."""
        return self._ldiv_rows[x][z]

    def rdiv(self, z: int, y: int) -> int:
        """The unique w with w*y == z."""
        return self._rdiv_cols[y][z]

    @cached_property
    def _rho(self) -> tuple:
        return tuple(self._ldiv_rows[x][0] for x in range(self.n))

    @cached_property
    def _lam(self) -> tuple:
        return tuple(self._rdiv_cols[x][0] for x in range(self.n))

    def rho(self, x: int) -> int:
        """Right inverse: x * rho(x) == 0."""
        return self._rho[x]

    def lam(self, x: int) -> int:
        """Left inverse: lam(x) * x == 0."""
        return self._lam[x]

    # -- powers ------------------------------------------------------------

    def cyclic_subloop(self, x: int) -> tuple:
        """Elements of the smallest subloop containing x, sorted.

        Closure under the product suffices in a finite loop: left and right
        translations restrict to bijections of any product-closed subset.
        """
        cached = self._subloop_cache.get(x)
        if cached is not None:
            return cached
        elems = {0, x}
        frontier = [0, x]
        while frontier:
            new = []
            for a in list(elems):
                for b in frontier:
                    for c in (self.rows[a][b], self.rows[b][a]):
                        if c not in elems:
                            elems.add(c)
                            new.append(c)
            frontier = new
        result = tuple(sorted(elems))
        self._subloop_cache[x] = result
        return result

    def is_power_associative_elem(self, x: int) -> bool:
        """True when the subloop generated by x is a group.

        This is the bracketing-independent definition; it makes no use of
        conjugacy closure.
        """
        cached = self._pa_cache.get(x)
        if cached is not None:
            return cached
        elems = self.cyclic_subloop(x)
        rows = self.rows
        ok = True
        for a in elems:
            if not ok:
                break
            for b in elems:
                ab = rows[a][b]
                row_ab = rows[ab]
                row_b = rows[b]
                if any(row_ab[c] != rows[a][row_b[c]] for c in elems):
                    ok = False
                    break
        self._pa_cache[x] = ok
        return ok

    def order_of(self, x: int) -> int:
        """Order of x inside <x>; requires x power-associative."""
        if not self.is_power_associative_elem(x):
            raise AmbiguousPowerError("element %d is not power-associative" % x)
        k, v = 1, x
        while v != 0:
            v = self.rows[v][x]
            k += 1
        return k if x != 0 else 1

    def power(self, x: int, k: int, left_normed: bool = False) -> int:
        """k-th power of x.

        For power-associative x the result is bracketing-independent and the
        exponent is reduced mod the order of x (negative k goes through the
        rho-inverse).  For other elements only ``left_normed=True`` is
        accepted: the result is then the explicit left-normed product
        ((x*x)*x)... and, for k < 0, the left-normed power of rho(x).
        """
        if k == 0:
            return 0
        if k == 1:
            return x
        if not left_normed:
            if k == 2:
                return self.rows[x][x]
            if not self.is_power_associative_elem(x):
                raise AmbiguousPowerError(
                    "element %d is not power-associative; pass left_normed=True "
                    "for the explicit left-normed product" % x)
            k %= self.order_of(x)
            # fall through: left-normed equals the canonical power in <x>
        base = x if k >= 0 else self._rho[x]
        v = 0
        for _ in range(abs(k)):
            v = self.rows[v][base]
        return v

    # -- translations and inner mappings ------------------------------------

    def R(self, x: int) -> Perm:
        """Right translation y -> y*x."""
        return Perm(self.rows[y][x] for y in range(self.n))

    def L(self, x: int) -> Perm:
        """Left translation y -> x*y."""
        return Perm(self.rows[x])

    def T(self, x: int) -> Perm:
        """R(x) followed by L(x)^-1, i.e. y -> x \\ (y*x)."""
        ld = self._ldiv_rows[x]
        return Perm(ld[self.rows[y][x]] for y in range(self.n))

    def E(self, x: int) -> Perm:
        """R(x) followed by R(rho(x)): y -> (y*x)*rho(x)."""
        xr = self._rho[x]
        return Perm(self.rows[self.rows[y][x]][xr] for y in range(self.n))

    def Rinner(self, x: int, y: int) -> Perm:
        """R(x) R(y) R(x*y)^-1, a right inner mapping."""
        xy = self.rows[x][y]
        rd = self._rdiv_cols[xy]
        return Perm(rd[self.rows[self.rows[z][x]][y]] for z in range(self.n))

    def Linner(self, x: int, y: int) -> Perm:
        """L(x) L(y) L(y*x)^-1, a left inner mapping."""
        yx = self.rows[y][x]
        ld = self._ldiv_rows[yx]
        return Perm(ld[self.rows[y][self.rows[x][z]]] for z in range(self.n))

    # -- commutators and associators ----------------------------------------

    def commutator(self, x: int, y: int) -> int:
        """The unique c with x*y == (y*x)*c."""
        return self._ldiv_rows[self.rows[y][x]][self.rows[x][y]]

    def associator(self, x: int, y: int, z: int) -> int:
        """The unique a with (x*y)*z == (x*(y*z))*a."""
        rows = self.rows
        lhs = rows[rows[x][y]][z]
        rhs = rows[x][rows[y][z]]
        return self._ldiv_rows[rhs][lhs]

    # -- plumbing ------------------------------------------------------------

    def canonical_str(self) -> str:
        lines = [str(self.n)]
        lines.extend(" ".join(str(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def renamed(self, name: str) -> "LoopTable":
        return LoopTable(self.rows, name=name, relabeling=self.relabeling)

    def __eq__(self, other) -> bool:
        return isinstance(other, LoopTable) and self.rows == other.rows

    @cached_property
    def _hash(self) -> int:
        return hash(self.rows)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        label = self.name or "n=%d" % self.n
        return "LoopTable(%s)" % label


def direct_product(a: LoopTable, b: LoopTable, name: str = "") -> LoopTable:
    """Componentwise product on pairs, indexed (x, y) -> x*|b| + y."""
    na, nb = a.n, b.n
    n = na * nb
    rows = [[0] * n for _ in range(n)]
    for xa in range(na):
        for xb in range(nb):
            x = xa * nb + xb
            for ya in range(na):
                row_a = a.rows[xa][ya]
                for yb in range(nb):
                    rows[x][ya * nb + yb] = row_a * nb + b.rows[xb][yb]
    return LoopTable(rows, name=name or "(%s)x(%s)" % (a.name or a.n, b.name or b.n))
