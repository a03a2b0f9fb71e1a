"""Combinatorial names for Weyl group conjugacy classes."""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .partitions import Partition, normalize, parse_parts

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


@dataclass(frozen=True, order=True)
class ClassLabel:
    """A conjugacy class name.

    ``kind`` is ``"cycle"`` (type A, ``alpha`` holds the cycle type),
    ``"bipartition"`` (types B/C/D, positive cycles ``alpha`` and negative
    cycles ``beta``, optional D-type ``tag``) or ``"carter"`` (exceptional,
    canonical string in ``name``).
    """

    kind: str
    alpha: Partition = ()
    beta: Partition = ()
    tag: str | None = None
    name: str = ""

    @classmethod
    def cycle(cls, parts) -> "ClassLabel":
        return cls("cycle", alpha=normalize(parts))

    @classmethod
    def bipartition(cls, alpha, beta, tag: str | None = None) -> "ClassLabel":
        return cls("bipartition", alpha=normalize(alpha), beta=normalize(beta), tag=tag)

    @classmethod
    def carter(cls, name: str) -> "ClassLabel":
        return cls("carter", name=canonical_carter(name))

    @property
    def positive_count(self) -> int:
        return len(self.alpha)

    def __str__(self) -> str:
        if self.kind == "cycle":
            return ",".join(map(str, self.alpha))
        if self.kind == "bipartition":
            s = "({};{})".format(",".join(map(str, self.alpha)), ",".join(map(str, self.beta)))
            return s + (f"_{self.tag}" if self.tag else "")
        return self.name


_BIPART = re.compile(r"^\((?P<a>[^;()]*);(?P<b>[^;()]*)\)(?:_?(?P<tag>II|I))?$")


def parse_class_label(text: str, cartan_type: str) -> ClassLabel:
    """Parse the wire syntax for the given Cartan type."""
    t = text.strip().replace(" ", "")
    if cartan_type == "A":
        return ClassLabel.cycle(parse_parts(t.strip("()")))
    if cartan_type in ("B", "C", "D"):
        m = _BIPART.match(t)
        if not m:
            raise ValueError(f"bad bipartition label {text!r}; expected e.g. (2,1;3)")
        return ClassLabel.bipartition(parse_parts(m["a"]), parse_parts(m["b"]), m["tag"])
    return ClassLabel.carter(t)


_TILDE = re.compile(r"(?:\\tilde\{([A-G])\}|([A-G])̃|([A-G])~|~([A-G])|([A-G])')")
IDENTITY_NAMES = {"", "∅", "1", "e", "{}", "empty", "id"}


def _summand_key(s: str) -> tuple:
    m = re.match(r"^(\d*)(~?)([A-G])(\d+)", s)
    if not m:
        return (0, 0, s)
    return (-int(m[4]), m[2] == "~", m[3], s)


def canonical_carter(name: str) -> str:
    """Canonical ASCII spelling of a Carter (or Bala-Carter) label.

    Rules: whitespace dropped; any tilde spelling (``Ã1``, ``A~1``,
    ``\\tilde{A}1``, ``A'1``) becomes a ``~`` prefix; parenthesised
    qualifiers are lower-cased; summands are ordered by rank descending,
    untilded before tilded. The identity class is spelled ``∅``.
    """
    s = re.sub(r"\s+", "", unicodedata.normalize("NFD", name))
    if s in IDENTITY_NAMES:
        return "∅"
    s = _TILDE.sub(lambda m: "~" + next(g for g in m.groups() if g), s)
    s = re.sub(r"\(([^)]*)\)", lambda m: "(" + m[1].lower() + ")", s)
    summands = s.split("+")
    return "+".join(sorted(summands, key=_summand_key))
