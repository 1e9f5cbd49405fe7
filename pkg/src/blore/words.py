"""Finite words over a small indexed alphabet and elementary operators on them.

Letters are non-negative integer ids rendered as ``a``, ``b``, ``c``, ...
Internally a word keeps its letters as a ``str`` of those characters, which
keeps slicing, hashing and concatenation cheap in the exhaustive searches.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from blore.errors import WordSyntaxError

Letter = int

MAX_ALPHABET = 26
PLAIN_RENDER_LIMIT = 40
ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_TOKEN = re.compile(r"([a-z])(?:\^(?:(\d+)|\{(\d+)\}))?")
_SYNTAX = re.compile(r"(?:[a-z](?:\^(?:\d+|\{\d+\}))?)*")


def letter_char(letter: Letter) -> str:
    return ALPHABET[letter]


def letter_id(ch: str) -> Letter:
    return ord(ch) - 97


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word; ``text`` holds the letters as ``a``..``z`` characters."""

    text: str
    alphabet_size: int

    def __post_init__(self):
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise WordSyntaxError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.alphabet_size}")
        top = ALPHABET[self.alphabet_size - 1]
        for ch in self.text:
            if not "a" <= ch <= top:
                raise WordSyntaxError(
                    f"letter {ch!r} outside alphabet of size {self.alphabet_size}"
                )

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], alphabet_size: int) -> Word:
        return cls("".join(ALPHABET[x] for x in letters), alphabet_size)

    @classmethod
    def empty(cls, alphabet_size: int = 1) -> Word:
        return cls("", alphabet_size)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(letter_id(ch) for ch in self.text)

    def derive(self, text: str) -> Word:
        """Word over the same alphabet with different content."""
        return Word(text, self.alphabet_size)

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.derive(self.text[index])
        return letter_id(self.text[index])

    def __add__(self, other: Word) -> Word:
        return Word(self.text + other.text, max(self.alphabet_size, other.alphabet_size))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Word({render(self)!r}, alphabet_size={self.alphabet_size})"

    def is_palindrome(self) -> bool:
        return self.text == self.text[::-1]


@dataclass(frozen=True)
class RunLengthEncoding:
    """Maximal-run decomposition ``a_1^{n_1} ... a_k^{n_k}`` of a non-empty word."""

    runs: tuple[tuple[Letter, int], ...]
    alphabet_size: int

    def __post_init__(self):
        if not self.runs:
            raise ValueError("run-length encoding needs at least one run")
        prev = None
        for letter, exponent in self.runs:
            if exponent < 1:
                raise ValueError(f"run exponent must be positive, got {exponent}")
            if letter == prev:
                raise ValueError("adjacent runs must use distinct letters")
            if not 0 <= letter < self.alphabet_size:
                raise ValueError(f"letter id {letter} outside alphabet")
            prev = letter

    @property
    def run_count(self) -> int:
        return len(self.runs)

    def expand(self) -> Word:
        return Word("".join(ALPHABET[x] * n for x, n in self.runs), self.alphabet_size)

    def __str__(self) -> str:
        return "".join(_caret(ALPHABET[x], n) for x, n in self.runs)


def _caret(ch: str, n: int) -> str:
    return ch if n == 1 else f"{ch}^{n}"


def parse_word(text: str, alphabet_size: int | None = None) -> Word:
    """Parse plain (``abbc``) or caret run-length (``a^2b^3a^3``) word text.

    Whitespace is ignored everywhere. Without ``alphabet_size`` the alphabet is
    the number of distinct letters present, so the letters used must form a
    prefix of ``a..z``.
    """
    compact = re.sub(r"\s+", "", text)
    if not _SYNTAX.fullmatch(compact):
        raise WordSyntaxError(f"malformed word text: {text!r}")
    pieces = []
    for m in _TOKEN.finditer(compact):
        digits = m.group(2) or m.group(3)
        n = int(digits) if digits is not None else 1
        if n == 0:
            raise WordSyntaxError(f"zero exponent in {text!r}")
        pieces.append(m.group(1) * n)
    content = "".join(pieces)
    if alphabet_size is None:
        alphabet_size = max(1, len(set(content)))
    return Word(content, alphabet_size)


def render(w: Word, plain_limit: int = PLAIN_RENDER_LIMIT) -> str:
    """Plain text for short words, caret run-length form beyond ``plain_limit``."""
    if len(w) <= plain_limit:
        return w.text
    return str(rle(w))


def render_caret(w: Word) -> str:
    return str(rle(w)) if w.text else ""


def rle(w: Word) -> RunLengthEncoding:
    if not w.text:
        raise ValueError("the empty word has no run-length encoding")
    return RunLengthEncoding(tuple(_runs(w.text)), w.alphabet_size)


def _runs(text: str) -> list[tuple[Letter, int]]:
    out: list[tuple[Letter, int]] = []
    start = 0
    for i in range(1, len(text) + 1):
        if i == len(text) or text[i] != text[start]:
            out.append((letter_id(text[start]), i - start))
            start = i
    return out


def run_sequence_of_text(text: str) -> tuple[int, ...]:
    return tuple(n for _, n in _runs(text)) if text else ()


def trace(r: RunLengthEncoding) -> Word:
    return Word.from_letters((x for x, _ in r.runs), r.alphabet_size)


def run_sequence(r: RunLengthEncoding) -> tuple[int, ...]:
    return tuple(n for _, n in r.runs)


def run_length(w: Word) -> int:
    """l(w), the number of maximal runs; 0 for the empty word by convention."""
    if not w.text:
        return 0
    t = w.text
    return 1 + sum(1 for i in range(1, len(t)) if t[i] != t[i - 1])


def reverse(w: Word) -> Word:
    return w.derive(w.text[::-1])


_SWAP = str.maketrans("ab", "ba")


def complement(w: Word) -> Word:
    if w.alphabet_size != 2:
        raise ValueError("complement is only defined over a binary alphabet")
    return w.derive(w.text.translate(_SWAP))


def factors(w: Word) -> set[Word]:
    t = w.text
    n = len(t)
    return {w.derive(t[i:j]) for i in range(n + 1) for j in range(i, n + 1)}


def conjugates(w: Word) -> set[Word]:
    t = w.text
    if not t:
        return {w}
    return {w.derive(t[i:] + t[:i]) for i in range(len(t))}


def fractional_power(u: Word, k: Fraction | int | str) -> Word:
    """Length-``ceil(k * |u|)`` prefix of ``uuu...``."""
    k = Fraction(k)
    if not u.text:
        raise ValueError("fractional power of the empty word")
    if k < 1:
        raise ValueError(f"exponent must be at least 1, got {k}")
    length = math.ceil(k * len(u))
    reps = -(-length // len(u))
    return u.derive((u.text * reps)[:length])


def alph(w: Word) -> set[Letter]:
    return {letter_id(ch) for ch in set(w.text)}


def letter_count(w: Word, a: Letter) -> int:
    return w.text.count(ALPHABET[a])


def abelian_equivalent(u: Word, v: Word) -> bool:
    return Counter(u.text) == Counter(v.text)


def all_words(alphabet_size: int, length: int) -> Iterator[str]:
    """Every word text of ``length`` over the first ``alphabet_size`` letters, lexicographically."""
    for combo in itertools.product(ALPHABET[:alphabet_size], repeat=length):
        yield "".join(combo)
