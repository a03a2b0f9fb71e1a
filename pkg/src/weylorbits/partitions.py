"""Integer partitions, bipartitions and the dominance order."""
from __future__ import annotations

from collections import Counter
from itertools import accumulate
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order (largest first)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def bipartitions(n: int) -> Iterator[tuple[Partition, Partition]]:
    """Pairs (alpha, beta) with |alpha| + |beta| = n, larger alpha first."""
    for k in range(n, -1, -1):
        for a in partitions(k):
            for b in partitions(n - k):
                yield a, b


def normalize(parts: Sequence[int]) -> Partition:
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def transpose(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts)))


def dominates(big: Sequence[int], small: Sequence[int]) -> bool:
    """True when big >= small in dominance order (equal sizes assumed)."""
    a = list(accumulate(big))
    b = list(accumulate(small))
    length = max(len(a), len(b))
    a += [a[-1] if a else 0] * (length - len(a))
    b += [b[-1] if b else 0] * (length - len(b))
    return all(x >= y for x, y in zip(a, b))


def multiplicities(parts: Sequence[int]) -> Counter:
    return Counter(parts)


def union(*parts: Sequence[int]) -> Partition:
    """Multiset union of several partitions."""
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return normalize(out)


def compact(parts: Sequence[int]) -> str:
    """Digits run together when every part is a single digit, else comma separated.

    A lone multi-digit part gets a trailing comma so it is not read as digits.
    """
    if all(p < 10 for p in parts):
        return "".join(map(str, parts))
    text = ",".join(map(str, parts))
    return text + "," if len(parts) == 1 else text


def parse_parts(text: str) -> Partition:
    """Inverse of compact; also accepts spaces, commas and the empty-set sign."""
    text = text.strip().replace("∅", "").replace(" ", "")
    if not text:
        return ()
    if "," in text:
        chunks = [c for c in text.split(",") if c]
    else:
        chunks = list(text)
    try:
        parts = [int(c) for c in chunks]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"bad partition {text!r}")
    return normalize(parts)
