"""Brute-force ground truth and exhaustive classifier-versus-oracle sweeps.

The oracle knows nothing about the pattern tables: it walks BR(w) partition by
partition and tests each distinct image for richness, stopping at the first
image that is not rich.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from blore.block_reversal import (
    DEFAULT_MAX_LEN,
    br_contains,
    br_texts,
    check_length,
    iter_br_texts,
)
from blore.classifier import RuleId, Verdict, classify, classify_text
from blore.errors import ResourceLimitError
from blore.palindromes import is_rich, is_rich_text
from blore.words import ALPHABET, Word, parse_word, render

MAX_SWEEP_WORDS = 5_000_000
SHARD_SIZE = 2048


class VerificationError(AssertionError):
    """Two independent computations that must agree did not."""


@dataclass(frozen=True)
class OracleResult:
    all_rich: bool
    witness: Word | None
    elements_checked: int

    def to_dict(self) -> dict:
        return {
            "all_rich": self.all_rich,
            "witness": None if self.witness is None else render(self.witness),
            "elements_checked": self.elements_checked,
        }


def _oracle_text(text: str) -> tuple[bool, str | None, int]:
    checked = 0
    for image in iter_br_texts(text):
        checked += 1
        if not is_rich_text(image):
            return False, image, checked
    return True, None, checked


def oracle_all_rich(w: Word, max_len: int = DEFAULT_MAX_LEN) -> OracleResult:
    check_length(len(w), max_len)
    ok, witness, checked = _oracle_text(w.text)
    return OracleResult(ok, None if witness is None else w.derive(witness), checked)


@dataclass(frozen=True)
class Mismatch:
    word: Word
    verdict: Verdict
    oracle: OracleResult

    def to_dict(self) -> dict:
        return {
            "word": render(self.word),
            "verdict": {
                "all_rich": self.verdict.all_rich,
                "rule": self.verdict.rule.value,
                "matched_form": self.verdict.matched_form,
            },
            "oracle": self.oracle.to_dict(),
        }


@dataclass
class SweepReport:
    alphabet_size: int
    min_len: int
    max_len: int
    words_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    total_words: list[int] = field(default_factory=list)
    all_rich_counts: list[int] = field(default_factory=list)
    oracle_all_rich_counts: list[int] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def lengths(self) -> range:
        return range(self.min_len, self.max_len + 1)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "spec": {
                "alphabet_size": self.alphabet_size,
                "min_len": self.min_len,
                "max_len": self.max_len,
            },
            "words_checked": self.words_checked,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "counts": [
                {"length": n, "total_words": t, "all_rich_count": c}
                for n, t, c in zip(self.lengths, self.total_words, self.all_rich_counts)
            ],
            "wall_time_ms": round(self.wall_time * 1000, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["length", "total_words", "all_rich_count"])
        for n, t, c in zip(self.lengths, self.total_words, self.all_rich_counts):
            writer.writerow([n, t, c])
        return buf.getvalue()


def _word_at(index: int, alphabet_size: int, length: int) -> str:
    chars = []
    for _ in range(length):
        index, r = divmod(index, alphabet_size)
        chars.append(ALPHABET[r])
    return "".join(reversed(chars))


def _sweep_shard(args: tuple[int, int, int, int]):
    alphabet_size, length, start, stop = args
    classifier_hits = oracle_hits = 0
    bad = []
    for index in range(start, stop):
        text = _word_at(index, alphabet_size, length)
        verdict = classify_text(text)
        ok, witness, checked = _oracle_text(text)
        classifier_hits += verdict.all_rich
        oracle_hits += ok
        if ok != verdict.all_rich:
            bad.append((text, verdict, ok, witness, checked))
    return length, classifier_hits, oracle_hits, bad


def _shards(alphabet_size: int, min_len: int, max_len: int):
    for length in range(min_len, max_len + 1):
        total = alphabet_size ** length
        for start in range(0, total, SHARD_SIZE):
            yield alphabet_size, length, start, min(total, start + SHARD_SIZE)


def sweep(
    alphabet_size: int,
    min_len: int,
    max_len: int,
    jobs: int = 1,
    max_block_len: int = DEFAULT_MAX_LEN,
) -> SweepReport:
    """Classify and oracle-check every word over the alphabet with length in range.

    The whole word space is covered (no symmetry quotient). Shards are merged
    in a fixed order, so the report does not depend on ``jobs``.
    """
    if not 1 <= alphabet_size <= len(ALPHABET):
        raise ValueError(f"alphabet size must be in 1..{len(ALPHABET)}")
    if min_len < 0 or max_len < min_len:
        raise ValueError(f"bad length range {min_len}..{max_len}")
    check_length(max_len, max_block_len)
    space = sum(alphabet_size ** n for n in range(min_len, max_len + 1))
    if space > MAX_SWEEP_WORDS:
        raise ResourceLimitError(
            f"sweep would check {space} words (limit {MAX_SWEEP_WORDS})",
            attempted=space,
            limit=MAX_SWEEP_WORDS,
        )
    started = time.perf_counter()
    report = SweepReport(alphabet_size, min_len, max_len)
    span = max_len - min_len + 1
    report.total_words = [alphabet_size ** n for n in range(min_len, max_len + 1)]
    report.all_rich_counts = [0] * span
    report.oracle_all_rich_counts = [0] * span
    shards = list(_shards(alphabet_size, min_len, max_len))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_shard, shards, chunksize=4))
    else:
        results = [_sweep_shard(s) for s in shards]
    for length, classifier_hits, oracle_hits, bad in results:
        report.all_rich_counts[length - min_len] += classifier_hits
        report.oracle_all_rich_counts[length - min_len] += oracle_hits
        for text, verdict, ok, witness, checked in bad:
            w = Word(text, alphabet_size)
            oracle = OracleResult(ok, None if witness is None else w.derive(witness), checked)
            report.mismatches.append(Mismatch(w, verdict, oracle))
    report.words_checked = sum(report.total_words)
    report.wall_time = time.perf_counter() - started
    return report


def count_all_rich_sequence(
    alphabet_size: int, max_len: int, jobs: int = 1, max_block_len: int = DEFAULT_MAX_LEN
) -> list[int]:
    """Per-length counts (lengths 1..max_len) of words whose BR is all rich.

    Counted once from classifier verdicts and once from the oracle; raises
    :class:`VerificationError` if the two tallies differ anywhere.
    """
    report = sweep(alphabet_size, 1, max_len, jobs, max_block_len)
    if report.all_rich_counts != report.oracle_all_rich_counts:
        raise VerificationError(
            f"classifier counts {report.all_rich_counts} != oracle counts {report.oracle_all_rich_counts}"
        )
    return report.all_rich_counts


# -- algebraic laws -----------------------------------------------------------


@dataclass
class LawReport:
    seed: int
    reversal_words: int = 0
    reversal_violations: list[str] = field(default_factory=list)
    concat_pairs: int = 0
    concat_violations: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.reversal_violations and not self.concat_violations

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "reversal": {"words": self.reversal_words, "violations": self.reversal_violations},
            "concatenation": {
                "pairs": self.concat_pairs,
                "violations": [list(t) for t in self.concat_violations],
            },
        }


def reversal_law_holds(text: str) -> bool:
    return {v[::-1] for v in br_texts(text)} == br_texts(text[::-1])


def concat_law_violation(u: str, v: str) -> str | None:
    """First y·x with y in BR(v), x in BR(u) that is missing from BR(uv)."""
    target = br_texts(u + v)
    for y in sorted(br_texts(v)):
        for x in sorted(br_texts(u)):
            if y + x not in target:
                return y + x
    return None


def check_identity_laws(
    samples: int = 1000,
    max_len: int = 16,
    seed: int = 0,
    reversal_max_len: int = 10,
    alphabet_size: int = 2,
) -> LawReport:
    """Reversal law exhaustively on binary words, concatenation law on seeded random pairs."""
    report = LawReport(seed)
    for n in range(reversal_max_len + 1):
        for combo in itertools.product("ab", repeat=n):
            text = "".join(combo)
            report.reversal_words += 1
            if not reversal_law_holds(text):
                report.reversal_violations.append(text)
    rng = random.Random(seed)
    letters = ALPHABET[:alphabet_size]
    for _ in range(samples):
        total = rng.randint(0, max_len)
        cut = rng.randint(0, total)
        text = "".join(rng.choice(letters) for _ in range(total))
        u, v = text[:cut], text[cut:]
        report.concat_pairs += 1
        missing = concat_law_violation(u, v)
        if missing is not None:
            report.concat_violations.append((u, v, missing))
    return report


# -- fixtures from the literature --------------------------------------------


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class FixtureReport:
    results: list[FixtureResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(FixtureResult(name, bool(passed), detail))


def _all_rich_both(w: Word) -> tuple[bool, bool]:
    return classify(w).all_rich, oracle_all_rich(w).all_rich


def _alternating(l: int) -> str:
    # a(ba)^i for odd l, (ab)^i for even l
    return ("ab" * l)[:l]


def _u4_pair(l: int) -> tuple[str, str]:
    if l % 2:
        i = (l - 3) // 2
        return "aabbbaaa" + "ba" * i, "ba" * i + "aabbabaa"
    i = (l - 4) // 2
    return "aabbbaaa" + "ba" * i + "b", "ba" * i + "baabbabaa"


SEPARATED_WORD = "cde" "a" "fgh" "b" "ijk" "b" "lmn" "a" "opq"


def fixture_suite(include_large: bool = True) -> FixtureReport:
    """Concrete scenarios from the literature, each checked against the oracle."""
    report = FixtureReport()

    w = parse_word("abbc")
    expected = {"cbab", "cbba", "cabb", "bbca", "bcab", "abbc", "bcba"}
    got = br_texts(w.text)
    report.add("br_abbc", got == expected, f"{sorted(got)}")

    w = parse_word("a^2b^3a^3")
    v = parse_word("a^2bab^2a^2")
    report.add(
        "rich_source_non_rich_image",
        is_rich(w) and br_contains(w, v) and not is_rich(v) and not oracle_all_rich(w).all_rich,
    )

    for l in range(3, 9):
        w = parse_word(_alternating(l))
        c, o = _all_rich_both(w)
        report.add(f"u2_alternating_l{l}", c and o, f"{w.text}: classifier={c} oracle={o}")

    for l in range(3, 9):
        v, witness = _u4_pair(l)
        w, x = parse_word(v), parse_word(witness)
        member, rich = br_contains(w, x), is_rich(x)
        c, o = _all_rich_both(w)
        report.add(
            f"u4_witness_l{l}",
            member and not rich and not c and not o,
            f"{v} -> {witness}: member={member} rich={rich} classifier={c} oracle={o}",
        )

    for n1 in range(1, 11):
        w = parse_word(f"a^{n1}babab")
        c, o = _all_rich_both(w)
        report.add(f"rem2_positive_a^{n1}babab", c and o, f"classifier={c} oracle={o}")

    negatives = [("a^2babab^3", "bab^2a^2bab"), ("a^3babab^2", "abab^2a^2ba"), ("a^3babab^3", "bab^2a^3bab")]
    for source, witness in negatives:
        w, x = parse_word(source), parse_word(witness)
        member, rich = br_contains(w, x), is_rich(x)
        c, o = _all_rich_both(w)
        report.add(
            f"rem2_negative_{source}",
            member and not rich and not c and not o,
            f"witness {witness}: member={member} rich={rich} classifier={c} oracle={o}",
        )

    for n2 in (3, 4):
        for n1 in range(1, 9):
            for text in (f"a^{n1}b^{n2}a", f"ab^{n2}a^{n1}"):
                w = parse_word(text)
                c, o = _all_rich_both(w)
                report.add(f"l1_{text}", c and o, f"classifier={c} oracle={o}")

    if include_large:
        w = parse_word(SEPARATED_WORD)
        rich_found = 0
        explored = 0
        for image in iter_br_texts(w.text):
            explored += 1
            rich_found += is_rich_text(image)
        partitions = 2 ** (len(w) - 1)
        c = classify(w)
        report.add(
            "separated_word_no_rich_element",
            rich_found == 0 and len(w) == 19 and w.alphabet_size == 17 and not c.all_rich,
            f"{partitions} partitions, {explored} distinct images, {rich_found} rich",
        )
    return report


def two_letter_prefix_instances(count: int, seed: int = 0, alphabet_size: int = 6) -> list[Word]:
    """Random words a1^n1 a2 u v with u over {a1, a2} and v over the other letters."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        letters = list(ALPHABET[:alphabet_size])
        rng.shuffle(letters)
        a1, a2, rest = letters[0], letters[1], letters[2:]
        n1 = rng.randint(1, 3)
        u = "".join(rng.choice((a1, a2)) for _ in range(rng.randint(1, 4)))
        v = "".join(rng.choice(rest) for _ in range(rng.randint(1, 3)))
        out.append(Word(a1 * n1 + a2 + u + v, alphabet_size))
    return out


__all__ = [
    "OracleResult", "SweepReport", "Mismatch", "LawReport", "FixtureReport", "FixtureResult",
    "VerificationError", "oracle_all_rich", "sweep", "count_all_rich_sequence",
    "check_identity_laws", "fixture_suite", "two_letter_prefix_instances", "RuleId",
]
