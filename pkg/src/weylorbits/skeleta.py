"""Lattice-profile model for elliptic classes of types B, C, D.

An elliptic class with negative cycles n_1 >= ... >= n_r gives a graded
quadratic space U = sum_j U_j with dim U_j = #{i : n_i = j}. A Lagrangian in
U is summarised by its profile: ell_j = dim of its graded piece in degree j
and r_j = rank of the second form restricted to that piece. The profile
determines the ranks of all powers of the nilpotent reduction, hence a
Jordan type; the smallest one over all admissible profiles is compared with
the closed-form orbit rule.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import product
from random import Random
from typing import Sequence

from . import linalg
from .orbits import JordanType, ambient_dim
from .partitions import normalize


@dataclass(frozen=True)
class USpace:
    dims: dict[int, int]
    extra_zero_line: bool
    total_dim: int

    def above(self, j: int) -> int:
        """dim of U_{>=j}, the zero line counted at j = 0."""
        return sum(d for k, d in self.dims.items() if k >= j)


@dataclass(frozen=True)
class ReductionProfile:
    ell: dict[int, int]
    r: dict[int, int]

    def key(self) -> tuple:
        return tuple(sorted(self.ell.items())), tuple(sorted(self.r.items()))


@dataclass(frozen=True)
class JBlockPartition:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def build_uspace(cartan_type: str, negative_cycles: Sequence[int]) -> USpace:
    if not negative_cycles:
        raise ValueError("empty cycle list")
    if cartan_type not in ("B", "C", "D"):
        raise ValueError(f"no lattice model for type {cartan_type}")
    if any(n <= 0 for n in negative_cycles):
        raise ValueError("cycle lengths must be positive")
    if cartan_type == "D" and len(negative_cycles) % 2:
        raise ValueError("type D needs an even number of negative cycles")
    dims = dict(Counter(negative_cycles))
    extra = cartan_type == "B" and len(negative_cycles) % 2 == 1
    if extra:
        dims[0] = 1
    total = sum(dims.values())
    assert total % 2 == 0
    return USpace(dict(sorted(dims.items(), reverse=True)), extra, total)


def _suffix(profile_ell: dict[int, int], j: int) -> int:
    return sum(v for k, v in profile_ell.items() if k >= j)


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def minimal_profile(u: USpace) -> ReductionProfile:
    """Cumulative ell as small as allowed; r_j = 1 exactly when U_j != 0 and dim U_{>j} is even."""
    ell, r = {}, {}
    for j in u.dims:
        ell[j] = _ceil_half(u.above(j)) - _ceil_half(u.above(j + 1))
        r[j] = 1 if j > 0 and u.above(j + 1) % 2 == 0 else 0
    prof = ReductionProfile(ell, r)
    assert is_admissible(u, prof)
    return prof


def is_admissible(u: USpace, p: ReductionProfile) -> bool:
    """Shape constraints plus the two necessary conditions on Lagrangians.

    (1) sum_{j' >= j} ell_j' >= dim U_{>=j} / 2 for every j >= 1.
    (2) if (1) is an equality at j and j' < j is the largest degree with
        ell_j' > 0, then r_j' > 0. Degrees j above the support are included,
        so the top nonzero piece always needs r > 0 when it is half of U.
    """
    for j, d in u.dims.items():
        if not 0 <= p.ell.get(j, 0) <= d or not 0 <= p.r.get(j, 0) <= min(p.ell.get(j, 0), d):
            return False
    if sum(p.ell.values()) * 2 != u.total_dim:
        return False
    if u.extra_zero_line and p.r.get(0, 0) != 0:
        return False
    top = max(u.dims, default=0)
    for j in range(1, top + 2):
        s = _suffix(p.ell, j)
        if 2 * s < u.above(j):
            return False
        if 2 * s == u.above(j):
            lower = [k for k in u.dims if k < j and p.ell.get(k, 0) > 0]
            if lower and p.r.get(max(lower), 0) == 0:
                return False
    return True


def admissible_profiles(u: USpace, budget: int = 1_000_000) -> list[ReductionProfile]:
    degrees = list(u.dims)
    choices = []
    for j in degrees:
        opts = []
        for l in range(u.dims[j] + 1):
            top_r = 0 if (j == 0) else min(l, u.dims[j])
            opts += [(l, rr) for rr in range(top_r + 1)]
        choices.append(opts)
    count = 1
    for c in choices:
        count *= len(c)
    if count > budget:
        raise RuntimeError(f"{count} candidate profiles exceed the budget {budget}")
    out = []
    for combo in product(*choices):
        p = ReductionProfile({j: l for j, (l, _) in zip(degrees, combo)},
                             {j: rr for j, (_, rr) in zip(degrees, combo)})
        if is_admissible(u, p):
            out.append(p)
    return out


def rank_sequence(u: USpace, p: ReductionProfile) -> list[int]:
    """rk(gamma^N) for N = 0, 1, ... until it reaches 0."""
    out = []
    n = 0
    while True:
        rk = sum(2 * p.ell.get(j, 0) + (2 * j - 1 - n) * d
                 for j, d in u.dims.items() if j >= 1 and 2 * j - 1 >= n)
        if n % 2 == 0 and (n // 2) in u.dims:
            rk += p.r.get(n // 2, 0)
        out.append(rk)
        if rk == 0:
            return out
        n += 1


def blocks_from_ranks(ranks: Sequence[int]) -> tuple[int, ...] | None:
    """Jordan blocks with the given rank sequence, or None if none exists."""
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    if any(x < 0 for x in at_least) or any(a < b for a, b in zip(at_least, at_least[1:])):
        return None
    parts = []
    for k, c in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        parts += [k] * (c - nxt)
    return normalize(parts)


def _lattice_rank(cartan_type: str, negative_cycles: Sequence[int]) -> int:
    return sum(negative_cycles)


def jordan_from_profile(u: USpace, profile: ReductionProfile, cartan_type: str) -> JordanType:
    ranks = rank_sequence(u, profile)
    n = _lattice_rank(cartan_type, [j for j, d in u.dims.items() for _ in range(d) if j > 0])
    blocks = blocks_from_ranks(ranks)
    if blocks is None:
        raise ArithmeticError(f"rank sequence {ranks} is not realised by a nilpotent")
    if cartan_type == "B" and not u.extra_zero_line:
        blocks = normalize(blocks + (1,))
    tag = "I" if cartan_type == "D" and all(b % 2 == 0 for b in blocks) else None
    return JordanType(blocks, cartan_type, ambient_dim(cartan_type, n), tag)


class NonUniqueMinimum(AssertionError):
    pass


def minimal_jordan_via_skeleton(cartan_type: str, negative_cycles: Sequence[int],
                                budget: int = 1_000_000, check_phi: bool = True) -> JordanType:
    """Dominance-smallest Jordan type over admissible profiles.

    Profiles are compared through their rank sequences (pointwise order is
    dominance). Raises NonUniqueMinimum unless the minimal profile is below
    every other admissible profile, strictly somewhere. With ``check_phi``
    the result is also compared with the closed-form rule.
    """
    cycles = normalize(negative_cycles)
    if cartan_type == "C":
        return JordanType(normalize(2 * n for n in cycles), "C", 2 * sum(cycles))
    u = build_uspace(cartan_type, cycles)
    best = minimal_profile(u)
    best_ranks = rank_sequence(u, best)
    for p in admissible_profiles(u, budget):
        if p.key() == best.key():
            continue
        ranks = rank_sequence(u, p)
        length = max(len(ranks), len(best_ranks))
        a = ranks + [0] * (length - len(ranks))
        b = best_ranks + [0] * (length - len(best_ranks))
        if not all(x >= y for x, y in zip(a, b)) or a == b:
            raise NonUniqueMinimum(f"profile {p} is not strictly above the minimal profile for {cycles}")
    result = jordan_from_profile(u, best, cartan_type)
    if check_phi:
        _compare_with_rule(cartan_type, cycles, result)
    return result


def _compare_with_rule(cartan_type: str, cycles: tuple[int, ...], result: JordanType) -> None:
    from .labels import ClassLabel
    from .maps import phi
    from .rootsys import build_root_system

    rs = build_root_system(cartan_type, sum(cycles))
    expected = phi(rs, ClassLabel.bipartition((), cycles))
    if expected != result:
        raise AssertionError(f"skeleton gives {result}, closed-form rule gives {expected}")


def jblock_partition(u: USpace) -> JBlockPartition:
    """Finest split of the support (top degree first) into runs of even total dimension."""
    blocks, run, total = [], [], 0
    for j in sorted(u.dims, reverse=True):
        run.append(j)
        total += u.dims[j]
        if total % 2 == 0:
            blocks.append(tuple(run))
            run, total = [], 0
    assert not run
    return JBlockPartition(tuple(blocks))


def torsor_size(cartan_type: str, negative_cycles: Sequence[int]) -> int:
    """2^(|I| - a), with a the number of runs in the even block partition; 1 in type C."""
    if cartan_type == "C":
        return 1
    u = build_uspace(cartan_type, negative_cycles)
    return 2 ** (len(negative_cycles) - jblock_partition(u).count)


# Point counts on the exceptional group G2 recorded as data.
G2_TORSOR_SIZES = {"A2": 1, "A1+~A1": 4}


# two quadrics ----------------------------------------------------------

def _distinct_rationals(k: int, seed: int | None) -> list[Q]:
    if seed is None:
        return [Q(i) for i in range(1, k + 1)]
    rng = Random(seed)
    picked: list[Q] = []
    while len(picked) < k:
        x = Q(rng.randint(-50, 50), rng.randint(1, 9))
        if x not in picked:
            picked.append(x)
    return picked


def _count_lines(dim: int, equations: int, m: int, seed: int | None) -> int:
    """Number of lines [v] with (v, A^i v) = 0 for i < equations whose Krylov span is the answer.

    In an eigenbasis of A the conditions are linear in the squares s_k = v_k^2.
    Each sign vector over a nonzero solution s gives a vector v; v and -v give
    the same line. Every candidate is checked exactly: the span of
    v, Av, ..., A^(m-1) v has dimension m, is isotropic for (x, y), and the
    second form (x, A y) restricted to it has rank 1 in the even case.
    """
    a = _distinct_rationals(dim, seed)
    system = [[x**i for x in a] for i in range(equations)]
    sol = linalg.kernel(system, dim)
    if len(sol) != 1 or any(x == 0 for x in sol[0]):
        raise ArithmeticError("degenerate eigenvalue choice")
    s = sol[0]
    lines = set()
    for signs in product((1, -1), repeat=dim):
        if signs[0] == -1:
            continue
        gram = lambda p, q: sum((x ** (p + q) * sk for x, sk in zip(a, s)), Q(0))
        if any(gram(p, q) != 0 for p in range(m) for q in range(m)):
            continue
        second = [[sum((x ** (p + q + 1) * sk for x, sk in zip(a, s)), Q(0)) for q in range(m)]
                  for p in range(m)]
        krylov = [[sg * x**p for sg, x in zip(signs, a)] for p in range(m)]
        if linalg.rank(krylov) != m:
            continue
        if dim % 2 == 0 and linalg.rank(second) != 1:
            continue
        lines.add(signs)
    return len(lines)


def quadric_pair_counts(m: int, seed: int | None = None) -> tuple[int, int]:
    """(lines for a generic pencil in dim 2m, lines in dim 2m+1), checked constructively."""
    if not 1 <= m <= 5:
        raise ValueError("m must be between 1 and 5")
    x_count = _count_lines(2 * m, 2 * m - 1, m, seed)
    y_count = _count_lines(2 * m + 1, 2 * m, m, seed)
    if (x_count, y_count) != (2 ** (2 * m - 1), 2 ** (2 * m)):
        raise AssertionError(f"constructive counts {(x_count, y_count)} disagree with the closed form")
    return x_count, y_count

