"""Nilpotent orbits of classical Lie algebras as Jordan types."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import Partition, compact, dominates, normalize, parse_parts, partitions, transpose, union


def ambient_dim(algebra_type: str, rank: int) -> int:
    """Size of the natural representation: n+1 (A_n), 2n+1 (B_n), 2n (C_n, D_n)."""
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[algebra_type]


def rank_of(algebra_type: str, dim: int) -> int:
    return dim - 1 if algebra_type == "A" else dim // 2


def parity_ok(algebra_type: str, parts: Sequence[int]) -> bool:
    """Orthogonal: even parts have even multiplicity. Symplectic: odd parts do."""
    bad = {"B": 0, "D": 0, "C": 1}.get(algebra_type)
    if bad is None:
        return True
    return all(parts.count(p) % 2 == 0 for p in set(parts) if p % 2 == bad)


def is_very_even(algebra_type: str, parts: Sequence[int]) -> bool:
    return algebra_type == "D" and bool(parts) and all(p % 2 == 0 for p in parts)


@dataclass(frozen=True, order=True)
class JordanType:
    parts: Partition
    algebra_type: str
    ambient_dim: int
    very_even_tag: str | None = None

    def __post_init__(self):
        if tuple(self.parts) != normalize(self.parts) or sum(self.parts) != self.ambient_dim:
            raise ValueError(f"{self.parts} is not a partition of {self.ambient_dim}")
        if not parity_ok(self.algebra_type, list(self.parts)):
            raise ValueError(f"{self.parts} violates the parity rule for type {self.algebra_type}")
        if is_very_even(self.algebra_type, self.parts):
            if self.very_even_tag not in ("I", "II"):
                raise ValueError(f"very even {self.parts} needs tag I or II")
        elif self.very_even_tag is not None:
            raise ValueError(f"tag given for {self.parts}, which is not very even")

    @property
    def rank(self) -> int:
        return rank_of(self.algebra_type, self.ambient_dim)

    def __str__(self) -> str:
        s = compact(self.parts)
        return f"{s}_{self.very_even_tag}" if self.very_even_tag else s


def parse_jordan(text: str, algebra_type: str, rank: int) -> JordanType:
    t = text.strip()
    tag = None
    for suffix in ("_II", "_I"):
        if t.endswith(suffix):
            t, tag = t[: -len(suffix)], suffix[1:]
            break
    return JordanType(parse_parts(t), algebra_type, ambient_dim(algebra_type, rank), tag)


@dataclass(frozen=True)
class OrbitRecord:
    jordan: JordanType
    dim_orbit: int
    d_O: int


def valid_jordan_types(algebra_type: str, rank: int) -> list[JordanType]:
    """All orbits of the given type and rank, largest partitions first."""
    if rank < 1:
        raise ValueError("rank must be positive")
    n = ambient_dim(algebra_type, rank)
    out = []
    for p in partitions(n):
        if not parity_ok(algebra_type, list(p)):
            continue
        if is_very_even(algebra_type, p):
            out += [JordanType(p, algebra_type, n, "I"), JordanType(p, algebra_type, n, "II")]
        else:
            out.append(JordanType(p, algebra_type, n))
    return out


def algebra_dim(algebra_type: str, n: int) -> int:
    """Dimension of sl_n, so_n or sp_n for natural representation size n."""
    if algebra_type == "A":
        return n * n - 1
    if algebra_type == "C":
        return n * (n + 1) // 2
    return n * (n - 1) // 2


def centralizer_dim(jordan: JordanType) -> int:
    """dim of the centralizer of a nilpotent with this Jordan type (sl, so or sp)."""
    squares = sum(c * c for c in transpose(jordan.parts))
    odd = sum(1 for p in jordan.parts if p % 2)
    if jordan.algebra_type == "A":
        return squares - 1
    if jordan.algebra_type == "C":
        twice = squares + odd
    else:
        twice = squares - odd
    assert twice % 2 == 0
    return twice // 2


def springer_dim(jordan: JordanType) -> int:
    """d_O = (dim centralizer - rank) / 2."""
    twice = centralizer_dim(jordan) - jordan.rank
    if twice < 0 or twice % 2:
        raise ArithmeticError(f"bad Springer fiber dimension for {jordan}")
    return twice // 2


def orbit_record(jordan: JordanType) -> OrbitRecord:
    dim = algebra_dim(jordan.algebra_type, jordan.ambient_dim) - centralizer_dim(jordan)
    return OrbitRecord(jordan, dim, springer_dim(jordan))


def closure_leq(a: JordanType, b: JordanType) -> bool:
    """True when orbit a lies in the closure of orbit b (dominance order).

    The two orbits of a very even partition are incomparable with each other.
    """
    if (a.algebra_type, a.ambient_dim) != (b.algebra_type, b.ambient_dim):
        raise ValueError("orbits of different algebras are not comparable")
    if a.parts == b.parts:
        return a.very_even_tag == b.very_even_tag
    return dominates(b.parts, a.parts)


def _retag(algebra_type: str, parts: Partition, tag: str | None) -> str | None:
    if is_very_even(algebra_type, parts):
        return tag or "I"
    return None


def iota_embed(gl_blocks: Sequence[int], inner: JordanType, tag: str | None = None) -> JordanType:
    """Orbit of G containing a Levi orbit: each GL block a contributes a, a.

    ``tag`` names the very even orbit when the result is very even and the
    inner orbit carries no tag of its own (e.g. an empty inner factor in D).
    """
    doubled = [a for a in gl_blocks for _ in (0, 1)]
    parts = union(inner.parts, doubled)
    n = inner.ambient_dim + 2 * sum(gl_blocks)
    t = _retag(inner.algebra_type, parts, inner.very_even_tag or tag)
    return JordanType(parts, inner.algebra_type, n, t)


def plain_union(a: JordanType, b: JordanType, tag: str | None = None) -> JordanType:
    """Jordan type of a sum of two nilpotents on orthogonal summands."""
    if a.algebra_type != b.algebra_type:
        raise ValueError("union of orbits of different types")
    parts = union(a.parts, b.parts)
    return JordanType(parts, a.algebra_type, a.ambient_dim + b.ambient_dim,
                      _retag(a.algebra_type, parts, tag))
