"""Exact rational linear algebra on tuples of Fractions."""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

Matrix = tuple[tuple[Q, ...], ...]
Vector = tuple[Q, ...]


def as_matrix(rows: Sequence[Sequence[int | Q]]) -> Matrix:
    return tuple(tuple(Q(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple(tuple(Q(0) for _ in range(n if m is None else m)) for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Q(0)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence[Q]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Q(0)) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c: Q | int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    return sum((Q(x) * y for x, y in zip(u, v)), Q(0))


def rref(rows: Sequence[Sequence[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(map(Q, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Q]]) -> int:
    return len(rref(rows)[1])


def kernel(a: Sequence[Sequence[Q]], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}."""
    if ncols is None:
        ncols = len(a[0])
    red, pivots = rref(a) if a else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def in_span(basis: Sequence[Sequence[Q]], v: Sequence[Q]) -> bool:
    if not basis:
        return all(x == 0 for x in v)
    return rank(list(basis) + [list(v)]) == rank(basis)


def solve(a: Sequence[Sequence[Q]], b: Sequence[Q]) -> Vector | None:
    """One solution of a x = b, or None if inconsistent."""
    n = len(a[0])
    aug = [list(row) + [Q(y)] for row, y in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Q(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def matpow(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def poly_at_matrix(coeffs: Sequence[int], a: Matrix) -> Matrix:
    """Evaluate sum coeffs[k] * a**k by Horner's rule."""
    n = len(a)
    acc = zeros(n)
    for c in reversed(coeffs):
        acc = add(matmul(acc, a), scale(c, identity(n)))
    return acc


def charpoly(a: Matrix) -> tuple[int | Q, ...]:
    """Coefficients (constant first) of det(x I - a), via Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Q(0)] * (n + 1)
    coeffs[n] = Q(1)
    m = zeros(n)
    for k in range(1, n + 1):
        m = add(matmul(a, m), scale(coeffs[n - k + 1], identity(n)))
        am = matmul(a, m)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Q(0)) / k
    return tuple(int(c) if c.denominator == 1 else c for c in coeffs)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert not any(num), "inexact cyclotomic division"
    return out


_CYCLO: dict[int, tuple[int, ...]] = {}


def cyclotomic(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant first) of the n-th cyclotomic polynomial."""
    if n not in _CYCLO:
        poly = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                poly = _polydiv_exact(poly, list(cyclotomic(d)))
        _CYCLO[n] = tuple(poly)
    return _CYCLO[n]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
