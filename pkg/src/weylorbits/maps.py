"""Lusztig's map from Weyl classes to nilpotent orbits, its sections, and checks."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .conjclass import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ClassRecord,
    enumerate_classes,
    min_length,
)
from .labels import ClassLabel
from .orbits import JordanType, ambient_dim, iota_embed, orbit_record, valid_jordan_types
from .partitions import normalize
from .rootsys import RootSystem, validate_bipartition


@dataclass(frozen=True)
class PhiRule:
    negative_cycles: tuple[int, ...]
    epsilon: tuple[int, ...]

    @property
    def blocks(self) -> tuple[int, ...]:
        n = self.negative_cycles + (0,) * (len(self.epsilon) - len(self.negative_cycles))
        return normalize(2 * a + e for a, e in zip(n, self.epsilon))


def phi_rule(cartan_type: str, negative_cycles: Sequence[int]) -> PhiRule:
    """Correction signs for the Jordan blocks 2 n_i + eps_i of an elliptic B/D class.

    eps_i = +1 for odd i with n_i < n_(i-1), -1 for even i with n_i > n_(i+1),
    0 otherwise, where n_0 is infinite and missing n_i are 0. Type B uses
    i = 1..r+1, type D uses i = 1..r.
    """
    n = tuple(sorted(negative_cycles, reverse=True))
    r = len(n)
    if cartan_type == "D" and r % 2:
        raise ValueError("type D needs an even number of negative cycles")
    top = r + 1 if cartan_type == "B" else r
    padded = n + (0, 0)

    top_cycle = n[0] + 1 if n else 1

    def at(i: int) -> int:
        return top_cycle if i == 0 else padded[i - 1]

    eps = []
    for i in range(1, top + 1):
        if i % 2 and at(i) < at(i - 1):
            eps.append(1)
        elif i % 2 == 0 and at(i) > at(i + 1):
            eps.append(-1)
        else:
            eps.append(0)
    return PhiRule(n, tuple(eps))


@dataclass(frozen=True)
class ExceptionalOrbit:
    label: str
    dim_orbit: int
    d_O: int

    def __str__(self) -> str:
        return self.label


Orbit = JordanType | ExceptionalOrbit


def _elliptic_jordan(cartan_type: str, beta: Sequence[int]) -> JordanType:
    if cartan_type == "C":
        parts = normalize(2 * b for b in beta)
    else:
        parts = phi_rule(cartan_type, beta).blocks
    n = sum(beta)
    return JordanType(parts, cartan_type, ambient_dim(cartan_type, n))


def phi(rs: RootSystem, label: ClassLabel, tables=None) -> Orbit:
    """The nilpotent orbit attached to a Weyl group class."""
    t = rs.cartan_type
    if label.kind == "carter":
        if tables is None:
            raise KeyError(f"phi for {t} needs exceptional tables")
        orb = tables.phi_map.get(label.name)
        if orb is None:
            raise KeyError(f"class {label.name} not in the {t} table")
        return exceptional_orbit(rs, tables, orb)
    if label.kind == "cycle":
        if t != "A" or sum(label.alpha) != rs.rank + 1:
            raise ValueError(f"{label} is not a class of {rs.name}")
        return JordanType(label.alpha, "A", rs.rank + 1)
    validate_bipartition(t, rs.rank, label)
    if t == "C":
        parts = normalize([a for a in label.alpha for _ in (0, 1)] + [2 * b for b in label.beta])
        return JordanType(parts, "C", 2 * rs.rank)
    inner = _elliptic_jordan(t, label.beta)
    return iota_embed(label.alpha, inner, label.tag)


def exceptional_orbit(rs: RootSystem, tables, label: str) -> ExceptionalOrbit:
    from .tables import d_orbit

    dim = tables.orbit_dims[label]
    return ExceptionalOrbit(label, dim, d_orbit(rs, dim))


def all_orbits(rs: RootSystem, tables=None) -> list[Orbit]:
    if rs.is_classical:
        return valid_jordan_types(rs.cartan_type, rs.rank)
    if tables is None:
        raise KeyError(f"orbits of {rs.cartan_type} need exceptional tables")
    return [exceptional_orbit(rs, tables, lab) for lab, _ in tables.orbits]


def d_of(orbit: Orbit) -> int:
    return orbit.d_O if isinstance(orbit, ExceptionalOrbit) else orbit_record(orbit).d_O


def _records(rs: RootSystem, tables, records):
    if records is not None:
        return records
    return enumerate_classes(rs, tables)


def fiber_records(rs: RootSystem, orbit: Orbit, tables=None,
                  records: Sequence[ClassRecord] | None = None) -> list[ClassRecord]:
    return [r for r in _records(rs, tables, records) if phi(rs, r.label, tables) == orbit]


def fiber(rs: RootSystem, orbit: Orbit, tables=None,
          records: Sequence[ClassRecord] | None = None) -> list[ClassLabel]:
    """Classes mapping to the orbit, in enumeration order.

    Very even orbits of type D are matched together with their tag, using
    the convention that a split class with tag I maps to the orbit with tag I.
    """
    return [r.label for r in fiber_records(rs, orbit, tables, records)]


class NotUnique(ValueError):
    pass


def psi(rs: RootSystem, orbit: Orbit, tables=None,
        records: Sequence[ClassRecord] | None = None) -> ClassLabel:
    """The unique member of the fiber with the smallest fixed space."""
    members = fiber_records(rs, orbit, tables, records)
    if not members:
        raise NotUnique(f"empty fiber over {orbit}")
    low = min(r.fixed_dim for r in members)
    best = [r for r in members if r.fixed_dim == low]
    if len(best) != 1:
        raise NotUnique(f"{len(best)} classes minimise fixed_dim over {orbit}")
    return best[0].label


def kl(rs: RootSystem, orbit: Orbit, tables=None,
       records: Sequence[ClassRecord] | None = None) -> ClassLabel:
    """The unique member of the fiber whose delta equals d_O."""
    d = d_of(orbit)
    hits = [r for r in fiber_records(rs, orbit, tables, records) if r.delta == d]
    if len(hits) != 1:
        raise NotUnique(f"{len(hits)} classes over {orbit} have delta = d_O = {d}")
    return hits[0].label


@dataclass(frozen=True)
class MoveEdge:
    from_label: ClassLabel
    to_label: ClassLabel
    removed_part: int


def elementary_moves(label: ClassLabel, cartan_type: str) -> list[MoveEdge]:
    """Remove one part a of alpha and add ceil(a/2), floor(a/2) to beta.

    Type C only removes even parts. Type D never removes a part 1, since the
    result would have an odd number of negative cycles.
    """
    if label.kind != "bipartition":
        return []
    out = []
    for a in sorted(set(label.alpha), reverse=True):
        if cartan_type == "C" and a % 2:
            continue
        if cartan_type == "D" and a == 1:
            continue
        alpha = list(label.alpha)
        alpha.remove(a)
        added = [(a + 1) // 2, a // 2] if a > 1 else [1]
        to = ClassLabel.bipartition(alpha, list(label.beta) + added)
        out.append(MoveEdge(label, to, a))
    return out


# verification ----------------------------------------------------------

@dataclass
class VerificationReport:
    cartan_type: str
    rank: int
    entries: list[dict] = field(default_factory=list)

    def add(self, check: str, subject: str, ok: bool | None, detail: str = "") -> None:
        status = "skip" if ok is None else ("pass" if ok else "fail")
        self.entries.append({"check": check, "subject": subject, "status": status, "detail": detail})

    @property
    def failures(self) -> list[dict]:
        return [e for e in self.entries if e["status"] == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        counts = {s: sum(1 for e in self.entries if e["status"] == s) for s in ("pass", "fail", "skip")}
        return {"type": self.cartan_type, "rank": self.rank, "summary": counts, "entries": self.entries}


def move_graph(rs: RootSystem, members: Sequence[ClassRecord]) -> list[MoveEdge]:
    """Elementary moves with both ends in the given set of classes."""
    inside = {r.label for r in members}
    edges = []
    for r in members:
        for e in elementary_moves(r.label, rs.cartan_type):
            if e.to_label in inside:
                edges.append(e)
    return edges


def verify_identity(rs: RootSystem, budget: int = DEFAULT_BUDGET, tables=None,
                    check_min_length: bool = True) -> VerificationReport:
    """Run every computable identity for one root system and collect the results."""
    report = VerificationReport(rs.cartan_type, rs.rank)
    records = enumerate_classes(rs, tables, budget=budget)
    orbits = all_orbits(rs, tables)
    images = {r.label: phi(rs, r.label, tables) for r in records}

    if tables is not None:
        report.add("class_count", rs.name, len(records) == len(tables.classes),
                   f"BFS {len(records)} classes, table {len(tables.classes)}")
        unnamed = [str(r.label) for r in records if r.label.name.startswith("#")]
        report.add("classes_labelled", rs.name, not unnamed, ", ".join(unnamed))

    kl_image = {}
    for orb in orbits:
        subject = str(orb)
        members = [r for r in records if images[r.label] == orb]
        report.add("surjective", subject, bool(members), f"{len(members)} classes")
        if not members:
            continue
        d = d_of(orb)
        low = min(r.fixed_dim for r in members)
        mins = [r for r in members if r.fixed_dim == low]
        report.add("psi_unique", subject, len(mins) == 1, ", ".join(str(r.label) for r in mins))
        hits = [r for r in members if r.delta == d]
        report.add("kl_unique", subject, len(hits) == 1,
                   f"d_O={d}; delta=d_O at {', '.join(str(r.label) for r in hits) or 'none'}")
        below = [r for r in members if r.delta < d]
        report.add("delta_lower_bound", subject, not below, ", ".join(str(r.label) for r in below))
        if len(mins) == 1 and len(hits) == 1:
            report.add("kl_equals_psi", subject, mins[0].label == hits[0].label,
                       f"psi={mins[0].label} kl={hits[0].label}")
            others = [r for r in members if r is not hits[0] and r.delta <= d]
            report.add("kl_strict", subject, not others, ", ".join(str(r.label) for r in others))
            report.add("section", subject, images[hits[0].label] == orb, str(hits[0].label))
            kl_image[subject] = hits[0].label
        if rs.is_classical and rs.cartan_type != "A":
            _check_moves(rs, report, subject, members, mins[0].label if len(mins) == 1 else None)

    report.add("kl_injective", rs.name, len(set(kl_image.values())) == len(kl_image),
               f"{len(kl_image)} orbits")

    for r in records:
        if r.fixed_dim != 0:
            continue
        subject = str(r.label)
        d = d_of(images[r.label])
        report.add("elliptic_delta", subject, r.delta == d, f"delta={r.delta} d_O={d}")
        if check_min_length:
            try:
                ml = r.min_length if r.min_length is not None else min_length(rs, r, budget)
            except BudgetExceeded as exc:
                report.add("min_length", subject, None, str(exc))
                continue
            report.add("min_length", subject, 2 * r.delta == ml - rs.rank,
                       f"delta={r.delta} min_length={ml} rank={rs.rank}")
    return report


def _check_moves(rs: RootSystem, report: VerificationReport, subject: str,
                 members: Sequence[ClassRecord], target: ClassLabel | None) -> None:
    by_label = {r.label: r for r in members}
    edges = move_graph(rs, members)
    for e in edges:
        a, b = by_label[e.from_label], by_label[e.to_label]
        ok = b.delta < a.delta and len(e.from_label.alpha) - len(e.to_label.alpha) == 1 \
            and a.fixed_dim - b.fixed_dim == 1
        report.add("move_monotone", f"{subject}: {e.from_label} -> {e.to_label}", ok,
                   f"delta {a.delta}->{b.delta}, fixed_dim {a.fixed_dim}->{b.fixed_dim}")
    if target is None:
        return
    succ: dict[ClassLabel, list[ClassLabel]] = {}
    for e in edges:
        succ.setdefault(e.from_label, []).append(e.to_label)
    for r in members:
        seen = {r.label}
        queue = deque([r.label])
        while queue:
            x = queue.popleft()
            for y in succ.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        report.add("moves_reach_psi", f"{subject}: {r.label}", target in seen, f"target {target}")
