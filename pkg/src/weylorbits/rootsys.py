"""Root systems and the reflection representation of their Weyl groups.

Everything is exact: roots are integer vectors in a fixed Euclidean space
(exceptional systems are scaled by 2 where the usual coordinates have halves),
reflections are rational matrices, and group elements are also carried as
permutations of the root list, which is what the enumeration code works with.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from math import factorial, lcm
from typing import Iterable, Mapping, Sequence

from . import linalg
from .labels import CLASSICAL, EXCEPTIONAL, ClassLabel
from .linalg import Matrix

Vec = tuple[int, ...]
Perm = bytes


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i] = c
    return v


def _simple_roots(cartan_type: str, rank: int) -> tuple[int, list[list[int]]]:
    n = rank
    if cartan_type == "A":
        return n + 1, [[a - b for a, b in zip(_unit(n + 1, i), _unit(n + 1, i + 1))] for i in range(n)]
    if cartan_type in ("B", "C", "D"):
        chain = [[a - b for a, b in zip(_unit(n, i), _unit(n, i + 1))] for i in range(n - 1)]
        if cartan_type == "B":
            return n, chain + [_unit(n, n - 1)]
        if cartan_type == "C":
            return n, chain + [_unit(n, n - 1, 2)]
        last = _unit(n, n - 1)
        last[n - 2] = 1
        return n, chain + [last]
    if cartan_type == "G2":
        return 3, [[1, -1, 0], [-2, 1, 1]]
    if cartan_type == "F4":
        return 4, [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    e8 = [[1, -1, -1, -1, -1, -1, -1, 1], [2, 2, 0, 0, 0, 0, 0, 0]]
    e8 += [[0] * i + [-2, 2] + [0] * (6 - i) for i in range(7)]
    return 8, e8[: int(cartan_type[1])]


_FIXED_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
_ROOT_COUNT = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}
_GROUP_ORDER = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}


def expected_root_count(cartan_type: str, rank: int) -> int:
    if cartan_type == "A":
        return rank * (rank + 1)
    if cartan_type in ("B", "C"):
        return 2 * rank * rank
    if cartan_type == "D":
        return 2 * rank * (rank - 1)
    return _ROOT_COUNT[cartan_type]


def weyl_group_order(cartan_type: str, rank: int) -> int:
    if cartan_type == "A":
        return factorial(rank + 1)
    if cartan_type in ("B", "C"):
        return 2**rank * factorial(rank)
    if cartan_type == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _GROUP_ORDER[cartan_type]


def _reflect(v: Sequence[int], a: Sequence[int]) -> Vec:
    num = 2 * sum(x * y for x, y in zip(v, a))
    den = sum(x * x for x in a)
    assert num % den == 0, "non-integral reflection of a root"
    c = num // den
    return tuple(x - c * y for x, y in zip(v, a))


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...] | None = None

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(linalg.matmul(self.matrix, other.matrix), word)


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: str
    rank: int
    roots: tuple[Vec, ...]
    simple_roots: tuple[Vec, ...]
    pairing: Matrix
    ambient_dim: int
    _index: dict = field(repr=False, default_factory=dict)
    _coords: tuple = field(repr=False, default=())
    _positive: tuple = field(repr=False, default=())
    _simple_index: tuple = field(repr=False, default=())
    _simple_perms: tuple = field(repr=False, default=())
    _to_ambient: Matrix = field(repr=False, default=())

    @property
    def name(self) -> str:
        return self.cartan_type if self.cartan_type in EXCEPTIONAL else f"{self.cartan_type}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.cartan_type in CLASSICAL

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    def index(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def simple_coords(self, i: int) -> Vec:
        """Coefficients of root i in the simple-root basis."""
        return self._coords[i]

    def is_positive(self, i: int) -> bool:
        return self._positive[i]

    # permutation model -------------------------------------------------

    @property
    def identity_perm(self) -> Perm:
        return bytes(range(len(self.roots)))

    def simple_perm(self, i: int) -> Perm:
        """Root permutation of the i-th simple reflection (0-based)."""
        return self._simple_perms[i]

    @staticmethod
    def compose(p: Perm, q: Perm) -> Perm:
        """Permutation of the product p q (q applied first)."""
        return q.translate(p + bytes(256 - len(p)))

    def perm_of(self, w: WeylElement) -> Perm:
        out = []
        for r in self.roots:
            img = linalg.matvec(w.matrix, r)
            if any(x.denominator != 1 for x in img):
                raise ValueError("matrix does not permute the roots")
            key = tuple(int(x) for x in img)
            if key not in self._index:
                raise ValueError("matrix does not permute the roots")
            out.append(self._index[key])
        return bytes(out)

    def element_of(self, perm: Perm, word: Iterable[int] | None = None) -> WeylElement:
        """Ambient matrix of the element acting on roots by perm."""
        cols = [self.roots[perm[j]] for j in self._simple_index]
        n = self.ambient_dim
        images = [list(map(Q, c)) for c in cols] + [list(row) for row in self._complement]
        image_cols = linalg.transpose(tuple(tuple(r) for r in images))
        m = linalg.matmul(image_cols, self._to_ambient)
        assert len(m) == n
        return WeylElement(m, tuple(word) if word is not None else None)

    def length(self, perm: Perm) -> int:
        neg = self._negative_table
        return sum(neg[perm[i]] for i in self._positive_indices)

    def basis_matrix(self, perm: Perm) -> tuple[tuple[int, ...], ...]:
        """Integer matrix of the element in the simple-root basis (columns are images)."""
        cols = [self._coords[perm[j]] for j in self._simple_index]
        return tuple(tuple(c[i] for c in cols) for i in range(self.rank))

    def reduced_word(self, perm: Perm) -> tuple[int, ...]:
        """A reduced word (1-based simple indices) found by peeling right descents."""
        word: list[int] = []
        p = perm
        neg = self._negative_table
        while True:
            for i, j in enumerate(self._simple_index):
                if neg[p[j]]:
                    p = self.compose(p, self._simple_perms[i])
                    word.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(word))

    def perm_from_word(self, word: Iterable[int]) -> Perm:
        p = self.identity_perm
        for i in word:
            if not 1 <= i <= self.rank:
                raise IndexError(f"simple reflection index {i} out of range 1..{self.rank}")
            p = self.compose(p, self._simple_perms[i - 1])
        return p

    def conjugate(self, perm: Perm, i: int) -> Perm:
        """s_i w s_i for the 0-based simple reflection i."""
        s = self._simple_perms[i]
        return self.compose(s, self.compose(perm, s))


def build_root_system(cartan_type: str, rank: int | None = None) -> RootSystem:
    """Root system of the given type, roots sorted lexicographically."""
    t = cartan_type.upper()
    if t in EXCEPTIONAL:
        if rank is not None and rank != _FIXED_RANK[t]:
            raise ValueError(f"{t} has rank {_FIXED_RANK[t]}, not {rank}")
        rank = _FIXED_RANK[t]
    elif t in CLASSICAL:
        if rank is None or rank < 1 or (t == "D" and rank < 2):
            raise ValueError(f"invalid rank {rank} for type {t}")
    else:
        raise ValueError(f"unknown Cartan type {cartan_type!r}")
    n, simple = _simple_roots(t, rank)
    simple_t = [tuple(a) for a in simple]

    found = set(simple_t)
    frontier = list(simple_t)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple_t:
                u = _reflect(v, a)
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    roots = tuple(sorted(found))
    assert len(roots) == expected_root_count(t, rank), (t, rank, len(roots))
    index = {r: i for i, r in enumerate(roots)}

    gram = [[Q(sum(x * y for x, y in zip(a, b))) for b in simple_t] for a in simple_t]
    coords = []
    for r in roots:
        rhs = [Q(sum(x * y for x, y in zip(r, a))) for a in simple_t]
        c = linalg.solve(gram, rhs)
        assert c is not None and all(x.denominator == 1 for x in c)
        ci = tuple(int(x) for x in c)
        assert all(x >= 0 for x in ci) or all(x <= 0 for x in ci)
        coords.append(ci)
    positive = tuple(all(x >= 0 for x in c) for c in coords)

    perms = []
    for a in simple_t:
        perms.append(bytes(index[_reflect(r, a)] for r in roots))

    complement = linalg.kernel([list(map(Q, a)) for a in simple_t], n)
    basis_cols = [list(map(Q, a)) for a in simple_t] + [list(v) for v in complement]
    basis = linalg.transpose(tuple(tuple(r) for r in basis_cols))
    inv = _inverse(basis)

    rs = RootSystem(
        cartan_type=t,
        rank=rank,
        roots=roots,
        simple_roots=tuple(simple_t),
        pairing=linalg.identity(n),
        ambient_dim=n,
        _index=index,
        _coords=tuple(coords),
        _positive=positive,
        _simple_index=tuple(index[a] for a in simple_t),
        _simple_perms=tuple(perms),
        _to_ambient=inv,
    )
    object.__setattr__(rs, "_complement", tuple(tuple(v) for v in complement))
    object.__setattr__(rs, "_positive_indices", tuple(i for i, p in enumerate(positive) if p))
    neg = bytearray(256)
    for i, p in enumerate(positive):
        neg[i] = 0 if p else 1
    object.__setattr__(rs, "_negative_table", bytes(neg))
    return rs


def _inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = linalg.rref(aug)
    assert pivots == list(range(n)), "singular basis"
    return tuple(tuple(row[n:]) for row in red)


def reflection_matrix(root: Sequence[int]) -> Matrix:
    n = len(root)
    norm = sum(x * x for x in root)
    return tuple(
        tuple(Q(int(i == j)) - Q(2 * root[i] * root[j], norm) for j in range(n)) for i in range(n)
    )


def weyl_from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Product s_{w1} s_{w2} ... of simple reflections (1-based indices)."""
    m = linalg.identity(rs.ambient_dim)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexError(f"simple reflection index {i} out of range 1..{rs.rank}")
        m = linalg.matmul(m, reflection_matrix(rs.simple_roots[i - 1]))
    return WeylElement(m, tuple(word))


def element_order(w: WeylElement) -> int:
    n = len(w.matrix)
    ident = linalg.identity(n)
    m, k = w.matrix, 1
    while m != ident:
        m = linalg.matmul(m, w.matrix)
        k += 1
    return k


def perm_order(perm: Perm) -> int:
    seen = bytearray(len(perm))
    order = 1
    for i in range(len(perm)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                k += 1
            order = lcm(order, k)
    return order


def fixed_space_dim(rs: RootSystem, w: WeylElement | Perm) -> int:
    """Dimension of the fixed space of w inside the span of the roots."""
    perm = w if isinstance(w, bytes) else rs.perm_of(w)
    m = rs.basis_matrix(perm)
    shifted = [[Q(m[i][j] - (i == j)) for j in range(rs.rank)] for i in range(rs.rank)]
    return rs.rank - linalg.rank(shifted)


# signed permutations ----------------------------------------------------

def _cycles_layout(parts: Sequence[int], start: int) -> list[list[int]]:
    out = []
    for p in parts:
        out.append(list(range(start, start + p)))
        start += p
    return out


def signed_permutation_matrix(n: int, images: Mapping[int, tuple[int, int]]) -> Matrix:
    """Matrix sending e_i to sign * e_j for images[i] = (j, sign)."""
    rows = [[Q(0)] * n for _ in range(n)]
    for i, (j, sign) in images.items():
        rows[j][i] = Q(sign)
    return tuple(tuple(r) for r in rows)


def class_representative(rs: RootSystem, label: ClassLabel, words: Mapping[str, Sequence[int]] | None = None) -> WeylElement:
    """A concrete element of the named class.

    Classical labels give signed permutation matrices laid out with the
    positive cycles first. Carter labels need ``words`` (label to word),
    normally taken from loaded exceptional tables.
    """
    t = rs.cartan_type
    if label.kind == "carter":
        if t in CLASSICAL:
            raise ValueError("Carter labels are only used for exceptional types")
        if words is None or label.name not in words:
            raise KeyError(f"no representative word for {label.name!r} in {t}; load tables")
        return weyl_from_word(rs, words[label.name])
    if label.kind == "cycle":
        if t != "A" or sum(label.alpha) != rs.rank + 1:
            raise ValueError(f"cycle type {label} does not fit {rs.name}")
        images = {}
        for cyc in _cycles_layout(label.alpha, 0):
            for k, i in enumerate(cyc):
                images[i] = (cyc[(k + 1) % len(cyc)], 1)
        return WeylElement(signed_permutation_matrix(rs.rank + 1, images))
    if t not in ("B", "C", "D"):
        raise ValueError(f"bipartition label used for type {t}")
    validate_bipartition(t, rs.rank, label)
    n = rs.rank
    images = {}
    for cyc in _cycles_layout(label.alpha, 0):
        for k, i in enumerate(cyc):
            images[i] = (cyc[(k + 1) % len(cyc)], 1)
    for cyc in _cycles_layout(label.beta, sum(label.alpha)):
        for k, i in enumerate(cyc):
            images[i] = (cyc[(k + 1) % len(cyc)], -1 if k == len(cyc) - 1 else 1)
    m = signed_permutation_matrix(n, images)
    if label.tag == "II":
        flip = signed_permutation_matrix(n, {i: (i, -1 if i == n - 1 else 1) for i in range(n)})
        m = linalg.matmul(flip, linalg.matmul(m, flip))
    return WeylElement(m)


def validate_bipartition(t: str, n: int, label: ClassLabel) -> None:
    if label.kind != "bipartition":
        raise ValueError(f"expected a bipartition label, got {label}")
    if sum(label.alpha) + sum(label.beta) != n:
        raise ValueError(f"{label} is not a bipartition of {n}")
    split = t == "D" and not label.beta and all(a % 2 == 0 for a in label.alpha)
    if t == "D" and len(label.beta) % 2:
        raise ValueError(f"{label}: type D needs an even number of negative cycles")
    if split and label.tag not in ("I", "II"):
        raise ValueError(f"{label}: split class in type D needs tag I or II")
    if not split and label.tag is not None:
        raise ValueError(f"{label}: tag only allowed on split type D classes")


def signed_cycle_type(matrix: Matrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(positive cycle lengths, negative cycle lengths) of a signed permutation."""
    n = len(matrix)
    target = {}
    for i in range(n):
        col = [(j, matrix[j][i]) for j in range(n) if matrix[j][i] != 0]
        if len(col) != 1 or abs(col[0][1]) != 1:
            raise ValueError("not a signed permutation matrix")
        target[i] = (col[0][0], int(col[0][1]))
    seen = set()
    pos, neg = [], []
    for i in range(n):
        if i in seen:
            continue
        j, sign, length = i, 1, 0
        while j not in seen:
            seen.add(j)
            j, s = target[j]
            sign *= s
            length += 1
        (pos if sign == 1 else neg).append(length)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))
