"""Conjugacy classes of Weyl groups, the eigenvalue filtration and delta."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from math import factorial, prod
from typing import Mapping, Sequence

from . import linalg
from .labels import ClassLabel
from .partitions import bipartitions, partitions
from .rootsys import (
    Perm,
    RootSystem,
    WeylElement,
    class_representative,
    perm_order,
    signed_cycle_type,
)

DEFAULT_BUDGET = 5_000_000
LARGE_EXCEPTIONAL = ("E7", "E8")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EigFiltration:
    m: int
    counts: dict[int, int]
    val_delta: int


@dataclass(frozen=True)
class ClassRecord:
    label: ClassLabel
    order: int
    fixed_dim: int
    delta: int
    min_length: int | None = None
    class_size: int | None = None
    word: tuple[int, ...] = field(default=(), compare=False)


def _as_perm(rs: RootSystem, w, words: Mapping[str, Sequence[int]] | None = None) -> Perm:
    if isinstance(w, bytes):
        return w
    if isinstance(w, ClassRecord):
        return rs.perm_from_word(w.word)
    if isinstance(w, ClassLabel):
        w = class_representative(rs, w, words)
    return rs.perm_of(w)


def _fixed_dim(m: Sequence[Sequence[int]]) -> int:
    r = len(m)
    return r - linalg.rank([[Q(m[i][j] - (i == j)) for j in range(r)] for i in range(r)])


def eig_filtration(rs: RootSystem, w) -> EigFiltration:
    """Counts of roots by the smallest eigenvalue order of the subspace they lie in.

    For each divisor i of the order m (ascending), V_i is the sum of the
    rational kernels of the cyclotomic polynomials of the divisors up to i,
    evaluated at w in the simple-root basis. A root counts for i when it lies
    in V_i but not in the previous one.
    """
    perm = _as_perm(rs, w)
    m = perm_order(perm)
    mat = linalg.as_matrix(rs.basis_matrix(perm))
    coords = [list(map(Q, rs.simple_coords(i))) for i in range(len(rs.roots))]
    span: list[tuple[Q, ...]] = []
    placed = [False] * len(rs.roots)
    counts: dict[int, int] = {}
    for d in linalg.divisors(m):
        span += linalg.kernel(linalg.poly_at_matrix(linalg.cyclotomic(d), mat), rs.rank)
        annihilator = linalg.kernel(span, rs.rank) if span else linalg.identity(rs.rank)
        new = 0
        for i, c in enumerate(coords):
            if not placed[i] and all(linalg.dot(a, c) == 0 for a in annihilator):
                placed[i] = True
                new += 1
        if new:
            counts[d] = new
    assert all(placed), "roots outside the eigenspace decomposition"
    val = sum((Q(c, i) for i, c in counts.items()), Q(0))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral valuation {val}")
    return EigFiltration(m, counts, int(val))


def delta(rs: RootSystem, w, words: Mapping[str, Sequence[int]] | None = None) -> int:
    """(val - (rank - fixed_dim)) / 2 for an element, class label or record."""
    perm = _as_perm(rs, w, words)
    filt = eig_filtration(rs, perm)
    twice = filt.val_delta - (rs.rank - _fixed_dim(rs.basis_matrix(perm)))
    if twice < 0 or twice % 2:
        raise ArithmeticError(f"bad delta {twice}/2")
    return twice // 2


def conjugacy_class(rs: RootSystem, perm: Perm, budget: int = DEFAULT_BUDGET) -> set[Perm]:
    """All conjugates of perm, by BFS over conjugation with simple reflections."""
    seen = {perm}
    frontier = [perm]
    while frontier:
        nxt = []
        for p in frontier:
            for i in range(rs.rank):
                q = rs.conjugate(p, i)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"class has more than {budget} elements")
        frontier = nxt
    return seen


def min_length(rs: RootSystem, label, budget: int = DEFAULT_BUDGET,
               words: Mapping[str, Sequence[int]] | None = None) -> int:
    """Minimal length of an element of the class, by exhaustive BFS."""
    perm = _as_perm(rs, label, words)
    return min(rs.length(p) for p in conjugacy_class(rs, perm, budget))


def is_elliptic(rs: RootSystem, label, words: Mapping[str, Sequence[int]] | None = None) -> bool:
    if isinstance(label, ClassLabel) and label.kind == "bipartition":
        return not label.alpha
    if isinstance(label, ClassLabel) and label.kind == "cycle":
        return len(label.alpha) == 1
    perm = _as_perm(rs, label, words)
    return _fixed_dim(rs.basis_matrix(perm)) == 0


# classical enumeration -------------------------------------------------

def _z(parts: Sequence[int], weight: int = 1) -> int:
    return prod((weight * k) ** m * factorial(m) for k, m in Counter(parts).items())


def classical_labels(cartan_type: str, rank: int) -> list[ClassLabel]:
    if cartan_type == "A":
        return [ClassLabel.cycle(p) for p in partitions(rank + 1)]
    out = []
    for a, b in bipartitions(rank):
        if cartan_type == "D":
            if len(b) % 2:
                continue
            if not b and all(x % 2 == 0 for x in a):
                out.append(ClassLabel.bipartition(a, b, "I"))
                out.append(ClassLabel.bipartition(a, b, "II"))
                continue
        out.append(ClassLabel.bipartition(a, b))
    return out


def classical_class_size(cartan_type: str, rank: int, label: ClassLabel) -> int:
    if cartan_type == "A":
        return factorial(rank + 1) // _z(label.alpha)
    size = 2**rank * factorial(rank) // (_z(label.alpha, 2) * _z(label.beta, 2))
    if cartan_type == "D" and label.tag:
        size //= 2
    return size


def _record(rs: RootSystem, label: ClassLabel, perm: Perm, size: int | None,
            with_min_length: bool, budget: int) -> ClassRecord:
    ml = min_length(rs, perm, budget) if with_min_length else None
    return ClassRecord(
        label=label,
        order=perm_order(perm),
        fixed_dim=_fixed_dim(rs.basis_matrix(perm)),
        delta=delta(rs, perm),
        min_length=ml,
        class_size=size,
        word=rs.reduced_word(perm),
    )


def identify_classical(rs: RootSystem, w, budget: int = DEFAULT_BUDGET) -> ClassLabel:
    """Label of the class containing a classical element (signed cycle type)."""
    mat = w.matrix if isinstance(w, WeylElement) else rs.element_of(w).matrix
    alpha, beta = signed_cycle_type(mat)
    if rs.cartan_type == "A":
        return ClassLabel.cycle(alpha + beta)
    label = ClassLabel.bipartition(alpha, beta)
    if rs.cartan_type == "D" and not beta and all(a % 2 == 0 for a in alpha):
        first = ClassLabel.bipartition(alpha, beta, "I")
        members = conjugacy_class(rs, rs.perm_of(class_representative(rs, first)), budget)
        perm = w if isinstance(w, bytes) else rs.perm_of(w)
        return first if perm in members else ClassLabel.bipartition(alpha, beta, "II")
    return label


# exceptional enumeration ----------------------------------------------

def enumerate_group(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> list[Perm]:
    seen = {rs.identity_perm}
    out = [rs.identity_perm]
    frontier = list(out)
    while frontier:
        nxt = []
        for p in frontier:
            for i in range(rs.rank):
                q = rs.compose(p, rs.simple_perm(i))
                if q not in seen:
                    seen.add(q)
                    out.append(q)
                    nxt.append(q)
            if len(seen) > budget:
                raise BudgetExceeded(f"group has more than {budget} elements")
        frontier = nxt
    return out


def class_partition(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> list[tuple[Perm, int, int]]:
    """Conjugacy classes as (minimal-length representative, size, minimal length)."""
    group = enumerate_group(rs, budget)
    assigned: set[Perm] = set()
    out = []
    for g in group:
        if g in assigned:
            continue
        members = conjugacy_class(rs, g, budget)
        assigned |= members
        lengths = {p: rs.length(p) for p in members}
        shortest = min(lengths.values())
        best = min((p for p in members if lengths[p] == shortest), key=rs.reduced_word)
        out.append((best, len(members), shortest))
    return out


def characteristic_polynomial(rs: RootSystem, perm: Perm) -> tuple:
    return linalg.charpoly(linalg.as_matrix(rs.basis_matrix(perm)))


def enumerate_classes(rs: RootSystem, tables=None, with_min_length: bool = False,
                      budget: int = DEFAULT_BUDGET, allow_large: bool = False) -> list[ClassRecord]:
    """All conjugacy classes with their numeric invariants.

    Classical types are listed combinatorially. Exceptional groups are
    partitioned into classes by BFS; labels come from ``tables`` (an object
    with a ``words`` mapping) by exact conjugacy membership of each table
    word, and unlabeled classes are named ``#k``.
    """
    if rs.is_classical:
        return [
            _record(rs, lab, rs.perm_of(class_representative(rs, lab)),
                    classical_class_size(rs.cartan_type, rs.rank, lab), with_min_length, budget)
            for lab in classical_labels(rs.cartan_type, rs.rank)
        ]
    if rs.cartan_type in LARGE_EXCEPTIONAL and not allow_large:
        raise BudgetExceeded(f"{rs.cartan_type} enumeration needs allow_large=True")
    parts = class_partition(rs, budget)
    keyed = []
    for rep, size, ml in parts:
        keyed.append(((-_fixed_dim(rs.basis_matrix(rep)), perm_order(rep), size, ml,
                       rs.reduced_word(rep)), rep, size, ml))
    keyed.sort(key=lambda x: x[0])
    labels: dict[Perm, ClassLabel] = {}
    order_hint: dict[Perm, int] = {}
    if tables is not None:
        lookup = {}
        for _, rep, _, _ in keyed:
            for p in conjugacy_class(rs, rep, budget):
                lookup[p] = rep
        for pos, (name, word) in enumerate(tables.words.items()):
            rep = lookup[rs.perm_from_word(word)]
            if rep in labels:
                raise ValueError(f"table labels {labels[rep].name} and {name} name the same class")
            labels[rep] = ClassLabel.carter(name)
            order_hint[rep] = pos
    keyed.sort(key=lambda x: (order_hint.get(x[1], len(order_hint)), x[0]))
    out = []
    unnamed = 0
    for _, rep, size, ml in keyed:
        if rep in labels:
            lab = labels[rep]
        else:
            unnamed += 1
            lab = ClassLabel("carter", name=f"#{unnamed}")
        out.append(ClassRecord(lab, perm_order(rep), _fixed_dim(rs.basis_matrix(rep)),
                               delta(rs, rep), ml, size, rs.reduced_word(rep)))
    return out


def signature(rs: RootSystem, record: ClassRecord) -> tuple:
    """(order, fixed_dim, characteristic polynomial, class size)."""
    perm = rs.perm_from_word(record.word)
    return (record.order, record.fixed_dim, characteristic_polynomial(rs, perm), record.class_size)


def ambiguous_signatures(rs: RootSystem, records: Sequence[ClassRecord]) -> list[list[ClassLabel]]:
    """Groups of classes that the invariant signature alone cannot tell apart."""
    groups: dict[tuple, list[ClassLabel]] = {}
    for r in records:
        groups.setdefault(signature(rs, r), []).append(r.label)
    return [g for g in groups.values() if len(g) > 1]
