"""Block reversal BR(w): every word B_t...B_1 obtained from a factorisation w = B_1...B_t.

A factorisation of a word of length n is identified with a bitmask over the
n - 1 inner cut positions (bit i - 1 set means a cut after letter i), so there
are 2^(n-1) of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from blore.errors import ResourceLimitError
from blore.words import Word, abelian_equivalent

DEFAULT_MAX_LEN = 24


@dataclass(frozen=True)
class BlockPartition:
    source_length: int
    cuts: tuple[int, ...] = ()

    def __post_init__(self):
        prev = 0
        for c in self.cuts:
            if not prev < c < self.source_length:
                raise ValueError(f"cuts must be strictly increasing inside (0, {self.source_length})")
            prev = c

    @classmethod
    def from_mask(cls, source_length: int, mask: int) -> BlockPartition:
        return cls(source_length, tuple(i for i in range(1, source_length) if mask >> (i - 1) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << (c - 1) for c in self.cuts)

    @property
    def block_count(self) -> int:
        return len(self.cuts) + 1 if self.source_length else 0

    def blocks(self, text: str) -> list[str]:
        bounds = (0, *self.cuts, self.source_length)
        return [text[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1)]


@dataclass(frozen=True)
class BRSet:
    source: Word
    elements: tuple[Word, ...]
    partitions_explored: int
    distinct_count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "distinct_count", len(self.elements))

    def __contains__(self, v: Word) -> bool:
        return v in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.distinct_count

    def texts(self) -> set[str]:
        return {v.text for v in self.elements}


@dataclass(frozen=True)
class StreamStats:
    partitions_explored: int
    distinct_visited: int
    stopped_early: bool


def check_length(n: int, max_len: int = DEFAULT_MAX_LEN) -> None:
    if n > max_len:
        raise ResourceLimitError(
            f"word length {n} exceeds block-reversal bound {max_len} "
            f"(mask space 2^{n - 1} = {2 ** (n - 1)})",
            attempted=2 ** (n - 1),
            limit=max_len,
        )


def apply_partition(w: Word, p: BlockPartition) -> Word:
    if p.source_length != len(w):
        raise ValueError(f"partition is for length {p.source_length}, word has length {len(w)}")
    return w.derive("".join(reversed(p.blocks(w.text))))


def apply_mask(text: str, mask: int) -> str:
    parts = []
    start = 0
    for i in range(1, len(text)):
        if mask >> (i - 1) & 1:
            parts.append(text[start:i])
            start = i
    parts.append(text[start:])
    parts.reverse()
    return "".join(parts)


def br_texts(text: str) -> set[str]:
    """BR of raw text via prefix dynamic programming.

    The last block is some non-empty suffix z of w = x z, and the rest of the
    image is an element of BR(x); BR(empty) = {empty}.
    """
    n = len(text)
    table: list[set[str]] = [{""}]
    for k in range(1, n + 1):
        acc: set[str] = set()
        for j in range(k):
            tail = text[j:k]
            acc.update(tail + y for y in table[j])
        table.append(acc)
    return table[n]


def enumerate_br(w: Word, max_len: int = DEFAULT_MAX_LEN) -> BRSet:
    check_length(len(w), max_len)
    explored = 2 ** (len(w) - 1) if len(w) else 1
    elements = tuple(w.derive(s) for s in sorted(br_texts(w.text)))
    return BRSet(w, elements, explored)


def br_count(w: Word, max_len: int = DEFAULT_MAX_LEN) -> int:
    check_length(len(w), max_len)
    return len(br_texts(w.text))


def br_contains(w: Word, v: Word) -> bool:
    """Membership v in BR(w) without enumerating BR(w).

    ``reach[i]`` says the first i letters of v are the blocks of the last i
    letters of w written in reverse block order.
    """
    s, t = w.text, v.text
    n = len(s)
    if len(t) != n or not abelian_equivalent(w, v):
        return False
    reach = [True] + [False] * n
    for i in range(1, n + 1):
        for j in range(i):
            if reach[j] and t[j:i] == s[n - i:n - j]:
                reach[i] = True
                break
    return reach[n]


def br_stream(
    w: Word,
    visitor: Callable[[Word], object],
    max_len: int = DEFAULT_MAX_LEN,
    masks: Iterable[int] | None = None,
) -> StreamStats:
    """Call ``visitor`` once per distinct element of BR(w), in mask order.

    A truthy return value from ``visitor`` stops the enumeration. ``masks``
    restricts the walk to a shard of the mask space.
    """
    n = len(w)
    check_length(n, max_len)
    text = w.text
    if masks is None:
        masks = range(2 ** (n - 1)) if n else range(1)
    seen: set[str] = set()
    explored = 0
    for mask in masks:
        explored += 1
        image = apply_mask(text, mask)
        if image in seen:
            continue
        seen.add(image)
        if visitor(w.derive(image)):
            return StreamStats(explored, len(seen), True)
    return StreamStats(explored, len(seen), False)


def iter_br_texts(text: str, masks: Iterable[int] | None = None):
    """Distinct images of ``text`` as raw strings, mask order, no bound check."""
    n = len(text)
    if masks is None:
        masks = range(2 ** (n - 1)) if n else range(1)
    seen: set[str] = set()
    for mask in masks:
        image = apply_mask(text, mask)
        if image not in seen:
            seen.add(image)
            yield image
