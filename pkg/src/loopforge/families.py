"""Parametrized loop constructions of orders 27 and 16.

Both families are finite quotients of rank-2 central extensions,
realized directly on canonical representatives: exponents of the two
generators stay in {0..2} (order 27) or {0..1} (order 16), and wrap-around
is compensated by fixed carry elements (the images of the generator cube
resp. square).  The polynomial-form variants build the same loops from
closed multiplication formulas on small vector groups.
"""

from __future__ import annotations

from .core import LoopTable
from .extension import FinAbGroup, Vec, Z3, Z4

Z2Z2 = FinAbGroup((2, 2))


def star3_exponents(i: int, j: int, k: int, l: int):
    """(u, v, z) coefficients of the exponent-3 reduction of the rank-2 cocycle."""
    cu = -j * k * k + i * l * k + j * k
    cv = k * j * j - i * j * l - j * k
    cz = j * k
    return cu, cv, cz


def family27g(G: FinAbGroup, z: Vec, u: Vec, v: Vec, t: Vec, w: Vec,
              name: str = "") -> LoopTable:
    """Order-9|G| loop on (i, j, x) with i, j in {0,1,2}, x in G (exponent 3)."""
    if G.exponent not in (1, 3):
        raise ValueError("codomain must have exponent dividing 3")
    ng = G.order
    g_elems = [G.unindex(ix) for ix in range(ng)]
    n = 9 * ng
    rows = [[0] * n for _ in range(n)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    cu, cv, cz = star3_exponents(i, j, k, l)
                    base = G.add(G.add(G.scale(cu, u), G.scale(cv, v)), G.scale(cz, z))
                    if i + k >= 3:
                        base = G.add(base, t)
                    if j + l >= 3:
                        base = G.add(base, w)
                    ii, jj = (i + k) % 3, (j + l) % 3
                    for ix, x in enumerate(g_elems):
                        row = rows[(i * 3 + j) * ng + ix]
                        col_base = (ii * 3 + jj) * ng
                        for iy, y in enumerate(g_elems):
                            row[(k * 3 + l) * ng + iy] = col_base + G.index(
                                G.add(G.add(x, y), base))
    return LoopTable(rows, name=name)


def family27(theta: int, alpha: int, beta: int, gamma: int, delta: int) -> LoopTable:
    """The order-27 member selected by the five parameters mod 3."""
    p = [theta % 3, alpha % 3, beta % 3, gamma % 3, delta % 3]
    theta, alpha, beta, gamma, delta = p
    return family27g(Z3, z=(theta,), u=(gamma,), v=(delta,), t=(alpha,), w=(beta,),
                     name="fam27(%d,%d,%d,%d,%d)" % tuple(p))


def family16g(G: FinAbGroup, z: Vec, t: Vec, w: Vec, name: str = "") -> LoopTable:
    """Order-4|G| loop on (i, j, x) with i, j in {0,1}; needs 4z = 0."""
    if G.scale(4, z) != G.zero:
        raise ValueError("z must satisfy 4z = 0")
    ng = G.order
    g_elems = [G.unindex(ix) for ix in range(ng)]
    n = 4 * ng
    rows = [[0] * n for _ in range(n)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    cz = 2 * i * k * l + 2 * i * j * l - j * k * k - k * j * j - j * k
                    base = G.scale(cz, z)
                    if i + k >= 2:
                        base = G.add(base, t)
                    if j + l >= 2:
                        base = G.add(base, w)
                    ii, jj = (i + k) % 2, (j + l) % 2
                    for ix, x in enumerate(g_elems):
                        row = rows[(i * 2 + j) * ng + ix]
                        col_base = (ii * 2 + jj) * ng
                        for iy, y in enumerate(g_elems):
                            row[(k * 2 + l) * ng + iy] = col_base + G.index(
                                G.add(G.add(x, y), base))
    return LoopTable(rows, name=name)


def family16(r: int, s: int) -> LoopTable:
    """Q(r, s): the order-16 member with central Z4 and a^2 = z^r, b^2 = z^s."""
    r, s = r % 4, s % 4
    return family16g(Z4, z=(1,), t=(r,), w=(s,), name="q16(%d,%d)" % (r, s))


def check_aip_criterion(theta: int, alpha: int, beta: int, gamma: int, delta: int) -> bool:
    """Inverse map is an automorphism of family27(...) iff delta = gamma + theta."""
    return (delta - gamma - theta) % 3 == 0


# -- polynomial forms ----------------------------------------------------------

def poly16(r: int, s: int) -> LoopTable:
    """Loop structure on Z4 x Z2 x Z2 from the cubic multiplication formula."""
    r, s = r % 4, s % 4
    n = 16
    rows = [[0] * n for _ in range(n)]
    for x1 in range(4):
        for x2 in range(2):
            for x3 in range(2):
                xi = (x1 * 2 + x2) * 2 + x3
                for y1 in range(4):
                    for y2 in range(2):
                        for y3 in range(2):
                            z1 = (x1 + y1 + r * x2 * y2 + s * x3 * y3
                                  + 2 * x2 * x3 * y3 + 2 * x2 * y2 * y3
                                  + x3 * y2 * y2) % 4
                            z2 = (x2 + y2) % 2
                            z3 = (x3 + y3) % 2
                            rows[xi][(y1 * 2 + y2) * 2 + y3] = (z1 * 2 + z2) * 2 + z3
    return LoopTable(rows, name="poly16(%d,%d)" % (r, s))


def poly2_4() -> LoopTable:
    """Loop structure on Z2^4 from the quartic multiplication formula."""
    n = 16
    rows = [[0] * n for _ in range(n)]
    for xi in range(n):
        x1, x2, x3, x4 = (xi >> 3) & 1, (xi >> 2) & 1, (xi >> 1) & 1, xi & 1
        for yi in range(n):
            y1, y2, y3, y4 = (yi >> 3) & 1, (yi >> 2) & 1, (yi >> 1) & 1, yi & 1
            z1 = (x1 + y1 + x3 * y2 + x3 * y3 * y4 + x4 * y2 * y2
                  + x3 * x4 * (y3 + y4)) % 2
            z2 = (x2 + y2 + x4 * y3 * y3) % 2
            z3 = (x3 + y3) % 2
            z4 = (x4 + y4) % 2
            rows[xi][yi] = (z1 << 3) | (z2 << 2) | (z3 << 1) | z4
    return LoopTable(rows, name="poly2_4")


# -- symbolic multiplication data for the order-27 family ---------------------
#
# TABLE27_COEFFS[j*3+i][l*3+k] is the coefficient vector
# (c_theta, c_alpha, c_beta, c_gamma, c_delta) of the codomain exponent in
#   a^i b^j . a^k b^l = a^(i+k) b^(j+l) n^(...)
# with row/column order 1, a, a2, b, ab, a2b, b2, ab2, a2b2.
# TABLE27_CUBES[j*3+i] is the same for (a^i b^j)^3.

TABLE27_COEFFS = (
    ((0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0), (0, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 0, 0), (0, 0, 0, 1, 0),
     (0, 1, 0, 2, 0), (0, 0, 0, 0, 0), (0, 0, 0, 2, 0), (0, 1, 0, 1, 0)),
    ((0, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 0, 0), (0, 1, 0, 2, 0),
     (0, 1, 0, 1, 0), (0, 0, 0, 0, 0), (0, 1, 0, 1, 0), (0, 1, 0, 2, 0)),
    ((0, 0, 0, 0, 0), (1, 0, 0, 0, 0), (2, 0, 0, 1, 0), (0, 0, 0, 0, 0), (1, 0, 0, 0, 0),
     (2, 0, 0, 1, 0), (0, 0, 1, 0, 0), (1, 0, 1, 0, 0), (2, 0, 1, 1, 0)),
    ((0, 0, 0, 0, 0), (1, 0, 0, 0, 0), (2, 1, 0, 1, 0), (0, 0, 0, 0, 2), (1, 0, 0, 1, 2),
     (2, 1, 0, 0, 2), (0, 0, 1, 0, 1), (1, 0, 1, 2, 1), (2, 1, 1, 2, 1)),
    ((0, 0, 0, 0, 0), (1, 1, 0, 0, 0), (2, 1, 0, 1, 0), (0, 0, 0, 0, 1), (1, 1, 0, 2, 1),
     (2, 1, 0, 2, 1), (0, 0, 1, 0, 2), (1, 1, 1, 1, 2), (2, 1, 1, 0, 2)),
    ((0, 0, 0, 0, 0), (2, 0, 0, 0, 2), (1, 0, 0, 2, 1), (0, 0, 1, 0, 0), (2, 0, 1, 0, 2),
     (1, 0, 1, 2, 1), (0, 0, 1, 0, 0), (2, 0, 1, 0, 2), (1, 0, 1, 2, 1)),
    ((0, 0, 0, 0, 0), (2, 0, 0, 0, 2), (1, 1, 0, 2, 1), (0, 0, 1, 0, 1), (2, 0, 1, 1, 0),
     (1, 1, 1, 1, 2), (0, 0, 1, 0, 2), (2, 0, 1, 2, 1), (1, 1, 1, 0, 0)),
    ((0, 0, 0, 0, 0), (2, 1, 0, 0, 2), (1, 1, 0, 2, 1), (0, 0, 1, 0, 2), (2, 1, 1, 2, 1),
     (1, 1, 1, 0, 0), (0, 0, 1, 0, 1), (2, 1, 1, 1, 0), (1, 1, 1, 1, 2)),
)

TABLE27_CUBES = (
    (0, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 2, 0, 0, 0),
    (0, 0, 1, 0, 0), (0, 1, 1, 0, 0), (0, 2, 1, 0, 0),
    (0, 0, 2, 0, 0), (0, 1, 2, 0, 0), (0, 2, 2, 0, 0),
)
