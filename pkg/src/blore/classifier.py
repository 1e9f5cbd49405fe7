"""Table-driven decision of whether every element of BR(w) is rich.

Words over three or more letters qualify only when unary or when all letters
are distinct. Binary words qualify when short (|w| <= 7), when they have two
runs, and otherwise only when their run-length encoding matches one of the
finite, parameterised forms tabulated below for 3 <= l(w) <= 8. Nine or more
runs never qualify.

Forms are written with ``a`` leading, as in the literature; the table used for
matching is closed under reversal and complement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from blore.words import Word, run_sequence_of_text

SHORT_BINARY = 7


class RuleId(str, Enum):
    EMPTY = "Empty"
    UNARY = "Unary"
    NON_BINARY_DISTINCT = "NonBinaryDistinct"
    NON_BINARY_REPEAT = "NonBinaryRepeat"
    BINARY_SHORT = "BinaryShort"
    BINARY_L2 = "BinaryL2"
    BINARY_L3 = "BinaryL3Table"
    BINARY_L4 = "BinaryL4Table"
    BINARY_L5 = "BinaryL5Table"
    BINARY_L6 = "BinaryL6Table"
    BINARY_L7 = "BinaryL7Table"
    BINARY_L8 = "BinaryL8Table"
    BINARY_L9_PLUS = "BinaryL9Plus"
    BINARY_TABLE_MISS = "BinaryTableMiss"


AFFIRMATIVE = frozenset({
    RuleId.EMPTY, RuleId.UNARY, RuleId.NON_BINARY_DISTINCT, RuleId.BINARY_SHORT, RuleId.BINARY_L2,
    RuleId.BINARY_L3, RuleId.BINARY_L4, RuleId.BINARY_L5, RuleId.BINARY_L6, RuleId.BINARY_L7,
    RuleId.BINARY_L8,
})

TABLE_RULES = {
    3: RuleId.BINARY_L3, 4: RuleId.BINARY_L4, 5: RuleId.BINARY_L5,
    6: RuleId.BINARY_L6, 7: RuleId.BINARY_L7, 8: RuleId.BINARY_L8,
}


@dataclass(frozen=True)
class Verdict:
    all_rich: bool
    rule: RuleId
    matched_form: str | None = None


# -- exponent constraints -----------------------------------------------------
# Every constraint refers to run positions (0-based), so reversing a form is a
# matter of mapping position i to l - 1 - i.


@dataclass(frozen=True)
class AtLeast:
    low: int = 1

    def ok(self, n: int) -> bool:
        return n >= self.low

    def text(self, var: str) -> str:
        return f"{var}>={self.low}"


@dataclass(frozen=True)
class OneOf:
    values: frozenset[int]

    def ok(self, n: int) -> bool:
        return n in self.values

    def text(self, var: str) -> str:
        return f"{var} in {{{','.join(map(str, sorted(self.values)))}}}"


Slot = Union[int, AtLeast, OneOf]


@dataclass(frozen=True)
class SumEquals:
    positions: tuple[int, ...]
    total: int

    def ok(self, seq: tuple[int, ...]) -> bool:
        return sum(seq[i] for i in self.positions) == self.total

    def remap(self, f) -> SumEquals:
        return SumEquals(tuple(sorted(f(i) for i in self.positions)), self.total)

    def text(self) -> str:
        return "+".join(f"n{i + 1}" for i in self.positions) + f"={self.total}"


@dataclass(frozen=True)
class PairIn:
    positions: tuple[int, int]
    allowed: frozenset[tuple[int, int]]

    def ok(self, seq: tuple[int, ...]) -> bool:
        i, j = self.positions
        return (seq[i], seq[j]) in self.allowed

    def remap(self, f) -> PairIn:
        i, j = f(self.positions[0]), f(self.positions[1])
        if i < j:
            return PairIn((i, j), self.allowed)
        return PairIn((j, i), frozenset((y, x) for x, y in self.allowed))

    def text(self) -> str:
        i, j = self.positions
        pairs = ",".join(f"({x},{y})" for x, y in sorted(self.allowed, reverse=True))
        return f"(n{i + 1},n{j + 1}) in {{{pairs}}}"


Joint = Union[SumEquals, PairIn]


@dataclass(frozen=True)
class BinaryForm:
    """A run-length template: leading letter, per-run exponent slots, joint constraints.

    ``first`` is 0 when the trace starts with the smaller letter of the word.
    """

    form_id: str
    first: int
    slots: tuple[Slot, ...]
    joints: tuple[Joint, ...] = ()

    @property
    def run_count(self) -> int:
        return len(self.slots)

    def key(self):
        return (self.first, self.slots, frozenset(self.joints))

    def matches(self, first: int, seq: tuple[int, ...]) -> bool:
        if first != self.first or len(seq) != len(self.slots):
            return False
        for slot, n in zip(self.slots, seq):
            if isinstance(slot, int):
                if n != slot:
                    return False
            elif not slot.ok(n):
                return False
        return all(j.ok(seq) for j in self.joints)

    def reversed(self) -> BinaryForm:
        l = self.run_count
        last = self.first if l % 2 else 1 - self.first
        flip = lambda i: l - 1 - i  # noqa: E731
        return BinaryForm(
            self.form_id + "|R", last, self.slots[::-1], tuple(j.remap(flip) for j in self.joints)
        )

    def complemented(self) -> BinaryForm:
        return BinaryForm(self.form_id + "|C", 1 - self.first, self.slots, self.joints)

    def template(self) -> str:
        letters = "ab" if self.first == 0 else "ba"
        out = []
        conds = []
        for i, slot in enumerate(self.slots):
            ch = letters[i % 2]
            if isinstance(slot, int):
                out.append(ch if slot == 1 else f"{ch}^{slot}")
            else:
                out.append(f"{ch}^n{i + 1}")
                if slot != AtLeast(1):
                    conds.append(slot.text(f"n{i + 1}"))
        conds.extend(j.text() for j in self.joints)
        body = "".join(out)
        return f"{body} : {', '.join(conds)}" if conds else body


@dataclass(frozen=True)
class PatternTable:
    forms: tuple[BinaryForm, ...] = field(default_factory=tuple)

    def for_run_count(self, l: int) -> tuple[BinaryForm, ...]:
        return tuple(f for f in self.forms if f.run_count == l)

    def keys(self) -> frozenset:
        return frozenset(f.key() for f in self.forms)


def _forms(prefix: str, entries: Iterable[tuple[str, tuple[Slot, ...], tuple[Joint, ...]]]):
    return [BinaryForm(f"{prefix}.{name}", 0, slots, joints) for name, slots, joints in entries]


_ANY = AtLeast(1)
_ONE_TO_THREE = frozenset({(3, 1), (2, 2), (1, 3)})


def base_table() -> PatternTable:
    """Forms for 3 <= l <= 8 as published, ``a`` leading, l descending."""
    forms: list[BinaryForm] = []
    forms += _forms("L8", [("abababab", (1,) * 8, ())])
    forms += _forms("L7", [
        ("ababab^2a", (1, 1, 1, 1, 1, 2, 1), ()),
        ("abab^2aba", (1, 1, 1, 2, 1, 1, 1), ()),
        ("ab^2ababa", (1, 2, 1, 1, 1, 1, 1), ()),
    ])
    forms += _forms("L6.T", [
        ("ab^2aba^2b", (1, 2, 1, 1, 2, 1), ()),
        ("abab^2a^2b", (1, 1, 1, 2, 2, 1), ()),
        ("ababa^2b^2", (1, 1, 1, 1, 2, 2), ()),
        ("a^2bab^2ab", (2, 1, 1, 2, 1, 1), ()),
        ("a^2babab^2", (2, 1, 1, 1, 1, 2), ()),
        ("aba^2b^2ab", (1, 1, 2, 2, 1, 1), ()),
        ("a^n1-babab", (AtLeast(3), 1, 1, 1, 1, 1), ()),
    ])
    sum4 = (SumEquals((1, 3), 4),)
    forms += _forms("L5", [
        ("a^n1-b-a^n3-b-a^n5", (_ANY, 1, _ANY, 1, _ANY), ()),
        ("ab^n2-ab^n4-a^2", (1, _ANY, 1, _ANY, 2), sum4),
        ("a^2-b^n2-ab^n4-a", (2, _ANY, 1, _ANY, 1), sum4),
        ("ab^n2-a^2-b^n4-a", (1, _ANY, 2, _ANY, 1), sum4),
    ])
    forms += _forms("L4", [
        ("ab^n2-ab^n4", (1, _ANY, 1, _ANY), ()),
        ("a^n1-b-a^n3-b", (_ANY, 1, _ANY, 1), ()),
        ("S", (_ANY,) * 4, (PairIn((1, 3), _ONE_TO_THREE), PairIn((0, 2), _ONE_TO_THREE))),
    ])
    three_four = OneOf(frozenset({3, 4}))
    forms += _forms("L3", [
        ("a^2b^4a^2", (2, 4, 2), ()),
        ("ab^m2-a", (1, _ANY, 1), ()),
        ("a^m1-b-a^m3", (_ANY, 1, _ANY), ()),
        ("a^m1-b^2-a^m3", (_ANY, 2, _ANY), ()),
        ("ab^n2-a^n3", (1, three_four, AtLeast(3)), ()),
        ("a^n1-b^n2-a", (AtLeast(3), three_four, 1), ()),
    ])
    return PatternTable(tuple(forms))


def symmetry_closure(table: PatternTable) -> PatternTable:
    """Close under identity, reversal, complement and reversed complement.

    Images are listed right after their source form; forms describing the
    same language as an earlier entry are dropped, so closure is idempotent.
    """
    out: list[BinaryForm] = []
    seen = set()
    for form in table.forms:
        rev = form.reversed()
        for image in (form, rev, form.complemented(), rev.complemented()):
            if image.key() not in seen:
                seen.add(image.key())
                out.append(image)
    return PatternTable(tuple(out))


CLOSED_TABLE = symmetry_closure(base_table())
_BY_RUNS = {l: CLOSED_TABLE.for_run_count(l) for l in range(3, 9)}


def _binary_orientation(text: str) -> int:
    return 0 if text[0] == min(text) else 1


def match_binary_form(w: Word, l: int | None = None) -> str | None:
    """Identifier of the first closed-table form matching binary ``w``, if any."""
    seq = run_sequence_of_text(w.text)
    if l is None:
        l = len(seq)
    if not 3 <= l <= 8:
        raise ValueError(f"pattern tables cover 3 <= l <= 8, got l={l}")
    if len(set(w.text)) != 2:
        raise ValueError("match_binary_form needs a word over exactly two letters")
    first = _binary_orientation(w.text)
    for form in _BY_RUNS[l]:
        if form.matches(first, seq):
            return form.form_id
    return None


def classify_text(text: str) -> Verdict:
    letters = set(text)
    if not text:
        return Verdict(True, RuleId.EMPTY)
    if len(letters) == 1:
        return Verdict(True, RuleId.UNARY)
    if len(letters) >= 3:
        if len(letters) == len(text):
            return Verdict(True, RuleId.NON_BINARY_DISTINCT)
        return Verdict(False, RuleId.NON_BINARY_REPEAT)
    if len(text) <= SHORT_BINARY:
        return Verdict(True, RuleId.BINARY_SHORT)
    seq = run_sequence_of_text(text)
    l = len(seq)
    if l == 2:
        return Verdict(True, RuleId.BINARY_L2)
    if l >= 9:
        return Verdict(False, RuleId.BINARY_L9_PLUS)
    first = _binary_orientation(text)
    for form in _BY_RUNS[l]:
        if form.matches(first, seq):
            return Verdict(True, TABLE_RULES[l], form.form_id)
    return Verdict(False, RuleId.BINARY_TABLE_MISS)


def classify(w: Word) -> Verdict:
    return classify_text(w.text)


def dump_forms(table: PatternTable = CLOSED_TABLE) -> list[dict]:
    return [
        {"form_id": f.form_id, "runs": f.run_count, "template": f.template()} for f in table.forms
    ]
