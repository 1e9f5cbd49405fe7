"""Palindromic factors, richness tests and circular richness.

A word of length n has at most n distinct non-empty palindromic factors and
is *rich* when it has exactly n. Three independent decision procedures are
provided so they can check each other:

* :func:`is_rich` counts nodes of a palindromic tree (linear time),
* :func:`is_rich_prefix_property` checks that the longest palindromic suffix of
  every prefix occurs only once in that prefix,
* :func:`find_glen_violation` searches for a non-palindromic factor bordered by
  exactly two occurrences of one palindrome.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from blore.errors import ResourceLimitError
from blore.words import Word, conjugates

NAIVE_BOUND = 64


class PalindromeIndex:
    """Palindromic tree (eertree) of a word.

    Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
    Every other node is a distinct non-empty palindromic factor.
    """

    def __init__(self, text: str = ""):
        self.text = ""
        self.length = [-1, 0]
        self.link = [0, 0]
        self.edges: list[dict[str, int]] = [{}, {}]
        # end position (exclusive) of the first occurrence of each node
        self.first_end = [0, 0]
        # longest palindromic suffix node after each prefix, index by prefix length
        self.suffix_node = [1]
        self._last = 1
        for ch in text:
            self.append(ch)

    def _fits(self, node: int, pos: int, ch: str) -> bool:
        start = pos - self.length[node] - 1
        return start >= 0 and self.text[start] == ch

    def append(self, ch: str) -> bool:
        """Extend the indexed word by one letter; True if a new palindrome appeared."""
        pos = len(self.text)
        self.text += ch
        cur = self._last
        while not self._fits(cur, pos, ch):
            cur = self.link[cur]
        nxt = self.edges[cur].get(ch)
        if nxt is not None:
            self._last = nxt
            self.suffix_node.append(nxt)
            return False
        node = len(self.length)
        self.length.append(self.length[cur] + 2)
        self.edges.append({})
        self.first_end.append(pos + 1)
        if self.length[node] == 1:
            self.link.append(1)
        else:
            back = self.link[cur]
            while not self._fits(back, pos, ch):
                back = self.link[back]
            self.link.append(self.edges[back][ch])
        self.edges[cur][ch] = node
        self._last = node
        self.suffix_node.append(node)
        return True

    @property
    def pal_count(self) -> int:
        return len(self.length) - 2

    def palindrome(self, node: int) -> str:
        end = self.first_end[node]
        return self.text[end - self.length[node]:end]

    def palindromes(self) -> list[str]:
        return [self.palindrome(v) for v in range(2, len(self.length))]

    def longest_suffix_palindrome(self, prefix_len: int) -> str:
        """Longest palindromic suffix of the prefix of the given length."""
        node = self.suffix_node[prefix_len]
        return self.text[prefix_len - self.length[node]:prefix_len]


def _check_bound(w: Word, bound: int) -> None:
    if len(w) > bound:
        raise ResourceLimitError(
            f"word length {len(w)} exceeds naive oracle bound {bound}", attempted=len(w), limit=bound
        )


def distinct_palindromes(w: Word, bound: int = NAIVE_BOUND) -> set[Word]:
    """Non-empty palindromic factors by plain substring enumeration."""
    _check_bound(w, bound)
    t = w.text
    n = len(t)
    found = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            s = t[i:j]
            if s == s[::-1]:
                found.add(s)
    return {w.derive(s) for s in found}


def pal_count(w: Word) -> int:
    return PalindromeIndex(w.text).pal_count


@lru_cache(maxsize=1 << 18)
def is_rich_text(text: str) -> bool:
    """Richness of raw word text: every appended letter must open a new palindrome."""
    tree = PalindromeIndex()
    for ch in text:
        if not tree.append(ch):
            return False
    return True


def is_rich(w: Word) -> bool:
    return is_rich_text(w.text)


def _occurrences(hay: str, needle: str) -> int:
    count = 0
    i = hay.find(needle)
    while i != -1:
        count += 1
        i = hay.find(needle, i + 1)
    return count


def is_rich_prefix_property(w: Word) -> bool:
    t = w.text
    tree = PalindromeIndex(t)
    for k in range(1, len(t) + 1):
        prefix = t[:k]
        if _occurrences(prefix, tree.longest_suffix_palindrome(k)) != 1:
            return False
    return True


class WitnessKind(str, Enum):
    GLEN_VIOLATION = "GlenViolation"
    PREFIX_NON_UNIOCCURRENT = "PrefixNonUnioccurrent"


@dataclass(frozen=True)
class RichnessWitness:
    kind: WitnessKind
    factor: Word
    palindrome: Word


def find_glen_violation(w: Word, bound: int = NAIVE_BOUND) -> RichnessWitness | None:
    """Shortest, then lexicographically first, factor violating Glen's condition.

    A violation is a non-palindromic factor ``u`` whose proper prefix and
    suffix are the same palindrome ``p`` and ``p`` occurs in ``u`` exactly
    twice. Returns None exactly when ``w`` is rich.
    """
    _check_bound(w, bound)
    t = w.text
    n = len(t)
    for size in range(2, n + 1):
        candidates = sorted({t[i:i + size] for i in range(n - size + 1)})
        for u in candidates:
            if u == u[::-1]:
                continue
            for plen in range(1, size):
                p = u[:plen]
                if p != p[::-1] or not u.endswith(p):
                    continue
                if _occurrences(u, p) == 2:
                    return RichnessWitness(WitnessKind.GLEN_VIOLATION, w.derive(u), w.derive(p))
    return None


def longest_palindromic_suffix(w: Word) -> Word:
    t = w.text
    if not t:
        raise ValueError("the empty word has no palindromic suffix")
    for i in range(len(t)):
        s = t[i:]
        if s == s[::-1]:
            return w.derive(s)
    raise AssertionError("unreachable: the last letter is a palindrome")


def is_product_of_two_palindromes(w: Word) -> bool:
    t = w.text
    return any(
        t[:i] == t[:i][::-1] and t[i:] == t[i:][::-1] for i in range(len(t) + 1)
    )


def is_circularly_rich(w: Word) -> bool:
    if not w.text:
        raise ValueError("circular richness is undefined for the empty word")
    return is_product_of_two_palindromes(w) and all(is_rich(u) for u in conjugates(w))
