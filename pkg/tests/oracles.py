"""Brute-force reference computations, independent of the package internals."""
from __future__ import annotations

from collections import deque
from fractions import Fraction as Q

from weylorbits import linalg
from weylorbits.rootsys import RootSystem


def _self_dual_block(k: int):
    """Jordan block of size k with the form B(v_i, v_j) = (-1)^i on the antidiagonal."""
    e = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        e[i + 1][i] = 1
    form = [[0] * k for _ in range(k)]
    for i in range(k):
        form[i][k - 1 - i] = (-1) ** (i + 1)
    return e, form


def _paired_block(k: int, eps: int):
    """diag(N, -N^T) on V + V* with the form [[0, I], [eps I, 0]]."""
    n = 2 * k
    e = [[0] * n for _ in range(n)]
    for i in range(k - 1):
        e[i + 1][i] = 1
        e[k + i][k + i + 1] = -1
    form = [[0] * n for _ in range(n)]
    for i in range(k):
        form[i][k + i] = 1
        form[k + i][i] = eps
    return e, form


def _direct_sum(mats):
    n = sum(len(m) for m in mats)
    out = [[0] * n for _ in range(n)]
    off = 0
    for m in mats:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(m)
    return out


def nilpotent_with_form(parts, algebra_type: str):
    """(e, J) with e nilpotent of Jordan type ``parts`` and e^T J + J e = 0.

    For type A the form is None.
    """
    if algebra_type == "A":
        es = [_self_dual_block(k)[0] for k in parts]
        return _direct_sum(es), None
    eps = -1 if algebra_type == "C" else 1
    self_dual_parity = 0 if algebra_type == "C" else 1
    es, forms = [], []
    remaining = list(parts)
    for k in sorted(set(parts), reverse=True):
        mult = remaining.count(k)
        if k % 2 == self_dual_parity:
            for _ in range(mult):
                e, f = _self_dual_block(k)
                es.append(e)
                forms.append(f)
        else:
            assert mult % 2 == 0
            for _ in range(mult // 2):
                e, f = _paired_block(k, eps)
                es.append(e)
                forms.append(f)
    return _direct_sum(es), _direct_sum(forms)


def centralizer_dim_bruteforce(parts, algebra_type: str) -> int:
    """dim {x in g : [x, e] = 0} by solving the linear system in n^2 unknowns."""
    e, form = nilpotent_with_form(parts, algebra_type)
    n = len(e)
    var = lambda i, j: i * n + j
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[var(i, k)] += e[k][j]
                row[var(k, j)] -= e[i][k]
            rows.append(row)
            if form is not None:
                row = [0] * (n * n)
                for k in range(n):
                    row[var(k, i)] += form[k][j]
                    row[var(k, j)] += form[i][k]
                rows.append(row)
    dim = n * n - linalg.rank([[Q(x) for x in r] for r in rows])
    return dim - 1 if algebra_type == "A" else dim


def check_in_algebra(parts, algebra_type: str) -> bool:
    e, form = nilpotent_with_form(parts, algebra_type)
    n = len(e)
    if form is None:
        return True
    et = [list(r) for r in zip(*e)]
    a = linalg.matmul(et, form)
    b = linalg.matmul(form, e)
    symmetric = all(form[i][j] == form[j][i] for i in range(n) for j in range(n))
    nondeg = linalg.rank([[Q(x) for x in r] for r in form]) == n
    return nondeg and symmetric == (algebra_type != "C") and all(
        a[i][j] + b[i][j] == 0 for i in range(n) for j in range(n))


def jordan_type_of(mat) -> tuple[int, ...]:
    n = len(mat)
    ranks = [n]
    power = [[Q(int(i == j)) for j in range(n)] for i in range(n)]
    while ranks[-1]:
        power = linalg.matmul(power, [[Q(x) for x in r] for r in mat])
        ranks.append(linalg.rank(power))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    parts = []
    for k in range(1, len(at_least)):
        parts += [k] * (at_least[k - 1] - at_least[k])
    return tuple(sorted(parts, reverse=True))


def cayley_lengths(rs: RootSystem) -> dict[bytes, int]:
    """Word length of every group element by BFS in the Cayley graph."""
    start = rs.identity_perm
    dist = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in range(rs.rank):
            q = rs.compose(p, rs.simple_perm(i))
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def filtration_counts(rs: RootSystem, perm: bytes) -> dict[int, int]:
    """Roots grouped by the least i with prod_{d | m, d <= i} Phi_d(w) killing them."""
    from weylorbits.rootsys import perm_order

    m = perm_order(perm)
    mat = [[Q(x) for x in row] for row in rs.basis_matrix(perm)]
    poly = [Q(1)]
    counts: dict[int, int] = {}
    placed = set()
    for d in range(1, m + 1):
        if m % d:
            continue
        poly = _polymul(poly, linalg.cyclotomic(d))
        p_at = linalg.poly_at_matrix(poly, mat)
        for idx in range(len(rs.roots)):
            if idx in placed:
                continue
            v = [Q(x) for x in rs.simple_coords(idx)]
            if all(x == 0 for x in linalg.matvec(p_at, v)):
                placed.add(idx)
                counts[d] = counts.get(d, 0) + 1
    assert len(placed) == len(rs.roots)
    return counts


def _polymul(a, b):
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
