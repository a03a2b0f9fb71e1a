"""Ingestion and validation of exceptional class/orbit tables (TSV)."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .conjclass import BudgetExceeded, conjugacy_class, delta
from .labels import EXCEPTIONAL, canonical_carter
from .rootsys import RootSystem, build_root_system, fixed_space_dim

SHIPPED = ("G2", "F4")


class TableError(ValueError):
    """Raised with one diagnostic line per offending row."""

    def __init__(self, problems: list[str]):
        super().__init__("\n".join(problems))
        self.problems = problems


@dataclass(frozen=True)
class ExceptionalData:
    cartan_type: str
    classes: tuple[tuple[str, tuple[int, ...], int], ...]
    orbits: tuple[tuple[str, int], ...]
    phi_pairs: tuple[tuple[str, str], ...]
    kl_pairs: tuple[tuple[str, str], ...] | None = None

    @property
    def words(self) -> dict[str, tuple[int, ...]]:
        return {label: word for label, word, _ in self.classes}

    @property
    def orbit_dims(self) -> dict[str, int]:
        return dict(self.orbits)

    @property
    def phi_map(self) -> dict[str, str]:
        return dict(self.phi_pairs)


def _read(path: Path, columns: tuple[str, ...], problems: list[str]) -> list[tuple[int, dict]]:
    if not path.is_file():
        problems.append(f"{path}: missing file")
        return []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, delimiter="\t")
        if reader.fieldnames is None or tuple(reader.fieldnames[: len(columns)]) != columns:
            problems.append(f"{path.name}: header must start with {', '.join(columns)}")
            return []
        return [(n, row) for n, row in enumerate(reader, start=2)]


def _parse_word(text: str) -> tuple[int, ...]:
    text = (text or "").strip()
    return tuple(int(x) for x in text.split("-")) if text else ()


def _orbit_label(text: str) -> str:
    t = text.strip()
    return "0" if t in ("0", "1", "") else canonical_carter(t)


def load_exceptional_tables(path, cartan_type: str | None = None) -> ExceptionalData:
    """Load classes.tsv, orbits.tsv, phi.tsv (and optional kl.tsv) from a directory.

    The Cartan type defaults to the directory name. Every row is checked
    against invariants recomputed from the root system; all problems are
    collected and raised together as a TableError.
    """
    root = Path(path)
    t = (cartan_type or root.name).upper()
    if t not in EXCEPTIONAL:
        raise TableError([f"{root}: unknown exceptional type {t!r}"])
    rs = build_root_system(t)
    problems: list[str] = []

    classes = []
    for n, row in _read(root / "classes.tsv", ("label", "word", "fixed_dim"), problems):
        try:
            label = canonical_carter(row["label"])
            word = _parse_word(row["word"])
            fixed = int(row["fixed_dim"])
            if any(not 1 <= i <= rs.rank for i in word):
                raise ValueError(f"word index out of range 1..{rs.rank}")
        except (ValueError, TypeError, AttributeError) as exc:
            problems.append(f"classes.tsv line {n}: {exc}")
            continue
        classes.append((n, label, word, fixed))

    orbits = []
    for n, row in _read(root / "orbits.tsv", ("label", "dim"), problems):
        try:
            orbits.append((n, _orbit_label(row["label"]), int(row["dim"])))
        except (ValueError, TypeError, AttributeError) as exc:
            problems.append(f"orbits.tsv line {n}: {exc}")

    phi_pairs = []
    for n, row in _read(root / "phi.tsv", ("class", "orbit"), problems):
        try:
            phi_pairs.append((n, canonical_carter(row["class"]), _orbit_label(row["orbit"])))
        except (TypeError, AttributeError) as exc:
            problems.append(f"phi.tsv line {n}: {exc}")

    kl_pairs = None
    if (root / "kl.tsv").exists():
        kl_pairs = []
        for n, row in _read(root / "kl.tsv", ("orbit", "class"), problems):
            kl_pairs.append((n, _orbit_label(row["orbit"]), canonical_carter(row["class"])))
    if problems:
        raise TableError(problems)

    data = ExceptionalData(
        t,
        tuple((lab, w, f) for _, lab, w, f in classes),
        tuple((lab, d) for _, lab, d in orbits),
        tuple((c, o) for _, c, o in phi_pairs),
        tuple((o, c) for _, o, c in kl_pairs) if kl_pairs is not None else None,
    )
    problems = validate(rs, data, {lab: n for n, lab, _, _ in classes})
    if problems:
        raise TableError(problems)
    return data


def d_orbit(rs: RootSystem, dim_orbit: int) -> int:
    """Springer fiber dimension from the orbit dimension: (|R| - dim O) / 2."""
    twice = len(rs.roots) - dim_orbit
    if twice < 0 or twice % 2:
        raise ValueError(f"orbit dimension {dim_orbit} impossible for {rs.name}")
    return twice // 2


def validate(rs: RootSystem, data: ExceptionalData, lines: dict[str, int] | None = None) -> list[str]:
    """Internal consistency of a table against recomputed invariants."""
    lines = lines or {}
    problems = []
    where = lambda lab: f"classes.tsv line {lines[lab]}" if lab in lines else f"class {lab}"
    seen_labels = set()
    perms = {}
    for label, word, fixed in data.classes:
        if label in seen_labels:
            problems.append(f"{where(label)}: duplicate label {label}")
        seen_labels.add(label)
        perm = rs.perm_from_word(word)
        perms[label] = perm
        got = fixed_space_dim(rs, perm)
        if got != fixed:
            problems.append(f"{where(label)}: {label} word gives fixed_dim {got}, table says {fixed}")

    classes_of = {}
    for label, perm in perms.items():
        if perm in classes_of:
            problems.append(f"{where(label)}: {label} is conjugate to {classes_of[perm]}")
            continue
        try:
            for p in conjugacy_class(rs, perm, budget=200_000):
                classes_of.setdefault(p, label)
        except BudgetExceeded:
            problems.append(f"{where(label)}: class too large to check distinctness")

    dims = {}
    for label, dim in data.orbits:
        if label in dims:
            problems.append(f"orbits.tsv: duplicate orbit {label}")
        try:
            d_orbit(rs, dim)
        except ValueError as exc:
            problems.append(f"orbits.tsv {label}: {exc}")
            continue
        dims[label] = dim

    mapped = {}
    for cls, orb in data.phi_pairs:
        if cls not in perms:
            problems.append(f"phi.tsv: unknown class {cls}")
            continue
        if orb not in dims:
            problems.append(f"phi.tsv: unknown orbit {orb}")
            continue
        if cls in mapped:
            problems.append(f"phi.tsv: class {cls} listed twice")
        mapped[cls] = orb
        perm = perms[cls]
        if fixed_space_dim(rs, perm) == 0:
            dl, d = delta(rs, perm), d_orbit(rs, dims[orb])
            if dl != d:
                problems.append(f"phi.tsv: elliptic {cls} has delta {dl} but d({orb}) = {d}")
    for cls in perms:
        if cls not in mapped:
            problems.append(f"phi.tsv: class {cls} has no orbit")
    for orb in dims:
        if orb not in mapped.values():
            problems.append(f"phi.tsv: orbit {orb} is not hit")

    for orb, cls in data.kl_pairs or ():
        if mapped.get(cls) != orb:
            problems.append(f"kl.tsv: {cls} is not in the fiber of {orb}")
        elif delta(rs, perms[cls]) != d_orbit(rs, dims[orb]):
            problems.append(f"kl.tsv: delta({cls}) differs from d({orb})")
    return problems


def shipped_tables_path(cartan_type: str) -> Path:
    return Path(str(resources.files("weylorbits") / "data" / cartan_type.upper()))


def load_shipped_tables(cartan_type: str) -> ExceptionalData:
    t = cartan_type.upper()
    if t not in SHIPPED:
        raise KeyError(f"no shipped tables for {t}; pass --tables")
    return load_exceptional_tables(shipped_tables_path(t), t)
