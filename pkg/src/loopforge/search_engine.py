"""Depth-first Cayley-table filler with incremental law checks.

The engine assigns interior cells in row-major order (row 0 / column 0
are pinned to the identity), keeps Latin candidate bitmasks per row and
column, and after each assignment re-checks exactly the law instances
that the new cell could have completed.  Optional orderly-generation
pruning rejects a partial table when some relabeling fixing 0 (and
permuting the completed rows among themselves) relabels the assigned
prefix to something lexicographically smaller.

Everything in this module is written in nopython style: the same源
functions run compiled under numba when it is available and as plain
Python otherwise.  State lives in caller-provided arrays so a run can be
suspended on a node budget and resumed later.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


LAW_LCC = 1
LAW_RCC = 2
LAW_PA = 4
LAW_EXTRA = 8
LAW_MOUFANG = 16
LAW_WIP = 32
LAW_FLEX = 64

STATUS_DONE = 0
STATUS_SUSPENDED = 1
STATUS_FULL = 2


@njit(cache=True, inline="always")
def _eval_flex(T, n, e, b):
    A = T[b * n + e]
    if A < 0:
        return True
    B = T[e * n + A]
    C = T[e * n + b]
    if C < 0 or B < 0:
        return True
    D = T[C * n + e]
    return D < 0 or B == D


@njit(cache=True, inline="always")
def _eval_pa(T, n, e):
    s = T[e * n + e]
    if s < 0:
        return True
    A = T[e * n + s]
    B = T[s * n + e]
    return A < 0 or B < 0 or A == B


@njit(cache=True, inline="always")
def _eval_extra(T, n, c, x, y):
    A = T[y * n + c]
    if A < 0:
        return True
    B = T[x * n + A]
    if B < 0:
        return True
    L = T[c * n + B]
    if L < 0:
        return True
    D = T[c * n + x]
    if D < 0:
        return True
    E = T[D * n + y]
    if E < 0:
        return True
    R = T[E * n + c]
    return R < 0 or L == R


@njit(cache=True, inline="always")
def _eval_moufang(T, n, z, x, y):
    A = T[x * n + y]
    if A < 0:
        return True
    B = T[A * n + z]
    if B < 0:
        return True
    L = T[z * n + B]
    if L < 0:
        return True
    D = T[z * n + x]
    if D < 0:
        return True
    E = T[y * n + z]
    if E < 0:
        return True
    R = T[D * n + E]
    return R < 0 or L == R


@njit(cache=True, inline="always")
def _eval_wip(T, n, x, c, y):
    A = T[x * n + c]
    if A < 0:
        return True
    Z1 = T[A * n + y]
    B = T[c * n + y]
    if B < 0:
        return True
    W = T[x * n + B]
    if Z1 == 0 and W >= 0 and W != 0:
        return False
    if W == 0 and Z1 >= 0 and Z1 != 0:
        return False
    return True


@njit(cache=True, inline="always")
def _eval_rcc(T, rowpos, n, x, y, z):
    A = T[x * n + y]
    if A < 0:
        return True
    L = T[A * n + z]
    if L < 0:
        return True
    D = T[y * n + z]
    if D < 0:
        return True
    w = rowpos[z * n + D]
    if w < 0:
        return True
    C = T[x * n + z]
    if C < 0:
        return True
    R = T[C * n + w]
    return R < 0 or L == R


@njit(cache=True, inline="always")
def _eval_lcc(T, rowpos, colpos, n, z, y, x):
    A = T[y * n + x]
    if A < 0:
        return True
    L = T[z * n + A]
    if L < 0:
        return True
    C = T[z * n + y]
    if C < 0:
        return True
    w = colpos[z * n + C]
    if w < 0:
        return True
    E = T[z * n + x]
    if E < 0:
        return True
    R = T[w * n + E]
    return R < 0 or L == R


@njit(cache=True)
def check_laws_cell(T, rowpos, colpos, n, ar, ac, laws):
    """All law instances that the just-assigned cell (ar, ac) could complete."""
    v = T[ar * n + ac]
    if laws & LAW_PA:
        if ar == ac:
            if not _eval_pa(T, n, ar):
                return False
        if T[ar * n + ar] == ac:
            B = T[ac * n + ar]
            if B >= 0 and v != B:
                return False
        if T[ac * n + ac] == ar:
            A = T[ac * n + ar]
            if A >= 0 and A != v:
                return False
    if laws & LAW_FLEX:
        if not _eval_flex(T, n, ac, ar):
            return False
        b = colpos[ar * n + ac]
        if b >= 0 and not _eval_flex(T, n, ar, b):
            return False
        if not _eval_flex(T, n, ar, ac):
            return False
        b = rowpos[ac * n + ar]
        if b >= 0 and not _eval_flex(T, n, ac, b):
            return False
    if laws & LAW_EXTRA:
        for x in range(n):
            if not _eval_extra(T, n, ac, x, ar):
                return False
            if not _eval_extra(T, n, ar, ac, x):
                return False
        for c in range(n):
            y = colpos[c * n + ac]
            if y >= 0 and not _eval_extra(T, n, c, ar, y):
                return False
            x = rowpos[c * n + ar]
            if x >= 0 and not _eval_extra(T, n, c, x, ac):
                return False
        for y in range(n):
            A = T[y * n + ar]
            if A >= 0:
                x = colpos[A * n + ac]
                if x >= 0 and not _eval_extra(T, n, ar, x, y):
                    return False
        for x in range(n):
            D = T[ac * n + x]
            if D >= 0:
                y = rowpos[D * n + ar]
                if y >= 0 and not _eval_extra(T, n, ac, x, y):
                    return False
    if laws & LAW_MOUFANG:
        for z in range(n):
            if not _eval_moufang(T, n, z, ar, ac):
                return False
            if not _eval_moufang(T, n, ar, ac, z):
                return False
            if not _eval_moufang(T, n, ac, z, ar):
                return False
        for x in range(n):
            y = rowpos[x * n + ar]
            if y >= 0 and not _eval_moufang(T, n, ac, x, y):
                return False
        A = colpos[ar * n + ac]
        if A >= 0:
            for x in range(n):
                y = rowpos[x * n + A]
                if y >= 0 and not _eval_moufang(T, n, ar, x, y):
                    return False
        for z in range(n):
            x = rowpos[z * n + ar]
            if x >= 0:
                y = colpos[z * n + ac]
                if y >= 0 and not _eval_moufang(T, n, z, x, y):
                    return False
    if laws & LAW_WIP:
        for y in range(n):
            if not _eval_wip(T, n, ar, ac, y):
                return False
        for x in range(n):
            c = rowpos[x * n + ar]
            if c >= 0 and not _eval_wip(T, n, x, c, ac):
                return False
            if not _eval_wip(T, n, x, ar, ac):
                return False
        for c in range(n):
            y = rowpos[c * n + ac]
            if y >= 0 and not _eval_wip(T, n, ar, c, y):
                return False
    if laws & LAW_RCC:
        for z in range(n):
            if not _eval_rcc(T, rowpos, n, ar, ac, z):
                return False
            if not _eval_rcc(T, rowpos, n, ar, z, ac):
                return False
        for x in range(n):
            y = rowpos[x * n + ar]
            if y >= 0 and not _eval_rcc(T, rowpos, n, x, y, ac):
                return False
            if not _eval_rcc(T, rowpos, n, x, ar, ac):
                return False
        y = colpos[ar * n + v]
        if y >= 0:
            for x in range(n):
                if not _eval_rcc(T, rowpos, n, x, y, ar):
                    return False
        for x in range(n):
            z = rowpos[x * n + ar]
            if z >= 0:
                D = T[z * n + ac]
                if D >= 0:
                    y = colpos[z * n + D]
                    if y >= 0 and not _eval_rcc(T, rowpos, n, x, y, z):
                        return False
    if laws & LAW_LCC:
        for z in range(n):
            if not _eval_lcc(T, rowpos, colpos, n, z, ar, ac):
                return False
            if not _eval_lcc(T, rowpos, colpos, n, ar, z, ac):
                return False
        for y in range(n):
            x = rowpos[y * n + ac]
            if x >= 0 and not _eval_lcc(T, rowpos, colpos, n, ar, y, x):
                return False
            if not _eval_lcc(T, rowpos, colpos, n, ar, ac, y):
                return False
        y = rowpos[ac * n + v]
        if y >= 0:
            for x in range(n):
                if not _eval_lcc(T, rowpos, colpos, n, ac, y, x):
                    return False
        for z in range(n):
            x = rowpos[z * n + ac]
            if x >= 0:
                C = T[ar * n + z]
                if C >= 0:
                    y = rowpos[z * n + C]
                    if y >= 0 and not _eval_lcc(T, rowpos, colpos, n, z, y, x):
                        return False
    return True


@njit(cache=True)
def canon_smaller(T, n, R, C, phi, phiinv, f_elem, f_kind, f_k, f_cand, budget):
    """True when some relabeling fixing 0 maps the assigned prefix to a
    lexicographically smaller one.

    The prefix is rows 1..R-1 complete plus row R through column C.  The
    relabeling is built lazily: choosing a source row/column fixes one
    value of the map, and value comparisons force the rest.  Kinds:
    0 = source-row choice, 1 = source-column choice, 2 = forced value tie.
    """
    for i in range(n):
        phi[i] = -1
        phiinv[i] = -1
    phi[0] = 0
    phiinv[0] = 0
    K = (R - 1) * (n - 1) + C
    nframes = 0
    k = 0
    steps = 0
    while True:
        steps += 1
        if steps > budget:
            return False
        if k == K:
            # full tie under this map; explore remaining choices
            advanced = False
            while nframes > 0:
                fe = f_elem[nframes - 1]
                kind = f_kind[nframes - 1]
                img = phi[fe]
                phi[fe] = -1
                phiinv[img] = -1
                if kind == 2:
                    nframes -= 1
                    continue
                x = img  # target index this frame serves
                nxt = -1
                if kind == 0:
                    for s in range(f_cand[nframes - 1] + 1, R + 1):
                        if phi[s] == -1:
                            nxt = s
                            break
                else:
                    for w in range(f_cand[nframes - 1] + 1, n):
                        if phi[w] == -1:
                            nxt = w
                            break
                if nxt < 0:
                    nframes -= 1
                    continue
                phi[nxt] = x
                phiinv[x] = nxt
                f_elem[nframes - 1] = nxt
                f_cand[nframes - 1] = nxt
                k = f_k[nframes - 1]
                advanced = True
                break
            if advanced:
                continue
            return False
        if k < (R - 1) * (n - 1):
            x = 1 + k // (n - 1)
            y = 1 + k % (n - 1)
        else:
            x = R
            y = 1 + (k - (R - 1) * (n - 1))
        if phiinv[x] == -1:
            s0 = -1
            for s in range(1, R + 1):
                if phi[s] == -1:
                    s0 = s
                    break
            if s0 < 0:
                # dead: force a backtrack by treating as exhausted frame
                k = K
                continue
            phi[s0] = x
            phiinv[x] = s0
            f_elem[nframes] = s0
            f_kind[nframes] = 0
            f_k[nframes] = k
            f_cand[nframes] = s0
            nframes += 1
            continue
        if phiinv[y] == -1:
            w0 = -1
            for w in range(1, n):
                if phi[w] == -1:
                    w0 = w
                    break
            if w0 < 0:
                k = K
                continue
            phi[w0] = y
            phiinv[y] = w0
            f_elem[nframes] = w0
            f_kind[nframes] = 1
            f_k[nframes] = k
            f_cand[nframes] = w0
            nframes += 1
            continue
        sr = phiinv[x]
        sc = phiinv[y]
        u = T[sr * n + sc]
        dead = False
        if u < 0:
            dead = True
        else:
            t = T[x * n + y]
            m = phi[u]
            if m >= 0:
                if m < t:
                    return True
                if m > t:
                    dead = True
                else:
                    k += 1
                    continue
            else:
                win = False
                for im in range(t):
                    if phiinv[im] == -1:
                        win = True
                        break
                if win:
                    return True
                if phiinv[t] != -1:
                    dead = True
                else:
                    phi[u] = t
                    phiinv[t] = u
                    f_elem[nframes] = u
                    f_kind[nframes] = 2
                    f_k[nframes] = k
                    f_cand[nframes] = 0
                    nframes += 1
                    k += 1
                    continue
        if dead:
            advanced = False
            while nframes > 0:
                fe = f_elem[nframes - 1]
                kind = f_kind[nframes - 1]
                img = phi[fe]
                phi[fe] = -1
                phiinv[img] = -1
                if kind == 2:
                    nframes -= 1
                    continue
                x2 = img
                nxt = -1
                if kind == 0:
                    for s in range(f_cand[nframes - 1] + 1, R + 1):
                        if phi[s] == -1:
                            nxt = s
                            break
                else:
                    for w in range(f_cand[nframes - 1] + 1, n):
                        if phi[w] == -1:
                            nxt = w
                            break
                if nxt < 0:
                    nframes -= 1
                    continue
                phi[nxt] = x2
                phiinv[x2] = nxt
                f_elem[nframes - 1] = nxt
                f_cand[nframes - 1] = nxt
                k = f_k[nframes - 1]
                advanced = True
                break
            if advanced:
                continue
            return False


@njit(cache=True)
def dfs_engine(n, laws, canonical, canon_cell_rows, canon_budget,
               T, row_av, col_av, rowpos, colpos, stack_val, state,
               out, out_cap, node_budget, emit_depth):
    """Run (or resume) the fill; see module docstring for the protocol.

    state: [depth, out_count, nodes, base_depth].  Returns a status code;
    SUSPENDED means the node budget ran out and the call can be repeated.
    """
    depth = state[0]
    out_count = state[1]
    nodes = state[2]
    base = state[3]
    ncells = (n - 1) * (n - 1)
    phi = np.empty(n, dtype=np.int64)
    phiinv = np.empty(n, dtype=np.int64)
    f_elem = np.empty(n + 2, dtype=np.int64)
    f_kind = np.empty(n + 2, dtype=np.int64)
    f_k = np.empty(n + 2, dtype=np.int64)
    f_cand = np.empty(n + 2, dtype=np.int64)
    budget = node_budget
    while depth >= base:
        if budget <= 0:
            state[0] = depth
            state[1] = out_count
            state[2] = nodes
            return STATUS_SUSPENDED
        r = 1 + depth // (n - 1)
        c = 1 + depth % (n - 1)
        v = stack_val[depth]
        if v >= 0:
            T[r * n + c] = -1
            row_av[r] |= 1 << v
            col_av[c] |= 1 << v
            rowpos[r * n + v] = -1
            colpos[c * n + v] = -1
        mask = row_av[r] & col_av[c]
        nv = -1
        for w in range(v + 1, n):
            if mask & (1 << w):
                nv = w
                break
        if nv < 0:
            stack_val[depth] = -1
            depth -= 1
            continue
        stack_val[depth] = nv
        T[r * n + c] = nv
        row_av[r] &= ~(1 << nv)
        col_av[c] &= ~(1 << nv)
        rowpos[r * n + nv] = c
        colpos[c * n + nv] = r
        nodes += 1
        budget -= 1
        ok = True
        for c2 in range(c + 1, n):
            if row_av[r] & col_av[c2] == 0:
                ok = False
                break
        if ok:
            for r2 in range(r + 1, n):
                if row_av[r2] & col_av[c] == 0:
                    ok = False
                    break
        if ok and laws != 0:
            ok = check_laws_cell(T, rowpos, colpos, n, r, c, laws)
        if ok and canonical != 0:
            if r <= canon_cell_rows or c == n - 1 or depth + 1 == emit_depth:
                if canon_smaller(T, n, r, c, phi, phiinv,
                                 f_elem, f_kind, f_k, f_cand, canon_budget):
                    ok = False
        if ok:
            if depth + 1 == emit_depth:
                if out_count == out_cap:
                    state[0] = depth
                    state[1] = out_count
                    state[2] = nodes
                    return STATUS_FULL
                for i in range(n * n):
                    out[out_count, i] = T[i]
                out_count += 1
            else:
                depth += 1
    state[0] = depth
    state[1] = out_count
    state[2] = nodes
    return STATUS_DONE


