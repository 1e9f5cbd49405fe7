import json

import pytest

from blore.block_reversal import br_contains, br_count
from blore.classifier import classify
from blore.errors import ResourceLimitError
from blore.palindromes import is_rich
from blore.verifier import (
    SEPARATED_WORD,
    VerificationError,
    check_identity_laws,
    concat_law_violation,
    count_all_rich_sequence,
    two_letter_prefix_instances,
    oracle_all_rich,
    fixture_suite,
    reversal_law_holds,
    sweep,
)
from blore.words import Word, parse_word


def W(text, k=None):
    return parse_word(text, k)


class TestOracle:
    @pytest.mark.parametrize("text, expected", [
        ("", True),
        ("a^12", True),
        ("abcde", True),
        ("abbc", False),
        ("a^3babab", True),
        ("a^2b^3a^3", False),
        ("aababbab", True),
    ])
    def test_examples(self, text, expected):
        assert oracle_all_rich(W(text)).all_rich is expected

    def test_witness_is_a_non_rich_member(self):
        for text in ("abbc", "a^2b^3a^3", "a^2babab^3", "abaababaab"):
            w = W(text)
            result = oracle_all_rich(w)
            assert not result.all_rich
            assert not is_rich(result.witness)
            assert br_contains(w, result.witness)

    def test_known_witness_is_member(self):
        # a^2b^3a^3 ba reaches ba a^2b^2 a b a^2 through a five-block split
        w, x = W("a^2b^3a^3ba"), W("baa^2b^2aba^2")
        assert br_contains(w, x) and not is_rich(x)
        assert not oracle_all_rich(w).all_rich

    def test_checks_every_element_when_all_rich(self):
        for text in ("a^3babab", "abababab", "a^4b^4", "abcdef"):
            w = W(text)
            result = oracle_all_rich(w)
            assert result.all_rich and result.witness is None
            assert result.elements_checked == br_count(w)

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            oracle_all_rich(W("a^25"))

    def test_to_dict(self):
        d = oracle_all_rich(W("abbc")).to_dict()
        assert d["all_rich"] is False and isinstance(d["witness"], str)
        assert json.loads(json.dumps(d)) == d


class TestSweep:
    def test_small_binary(self):
        report = sweep(2, 1, 9)
        assert report.ok
        assert report.total_words == [2 ** n for n in range(1, 10)]
        assert report.all_rich_counts == [2, 4, 8, 16, 32, 64, 128, 156, 112]
        assert report.all_rich_counts == report.oracle_all_rich_counts
        assert report.words_checked == sum(report.total_words)

    def test_jobs_do_not_change_the_report(self):
        one = sweep(3, 1, 7, jobs=1).to_dict()
        two = sweep(3, 1, 7, jobs=2).to_dict()
        one.pop("wall_time_ms"), two.pop("wall_time_ms")
        assert one == two

    def test_csv(self):
        lines = sweep(2, 8, 9).to_csv().splitlines()
        assert lines == ["length,total_words,all_rich_count", "8,256,156", "9,512,112"]

    def test_json_shape(self):
        d = json.loads(sweep(2, 1, 3).to_json())
        assert d["spec"] == {"alphabet_size": 2, "min_len": 1, "max_len": 3}
        assert d["mismatches"] == []
        assert [c["length"] for c in d["counts"]] == [1, 2, 3]

    def test_limits(self):
        with pytest.raises(ResourceLimitError):
            sweep(4, 1, 12)
        with pytest.raises(ResourceLimitError):
            sweep(2, 1, 30)
        with pytest.raises(ValueError):
            sweep(2, 5, 3)

    def test_sequence(self):
        assert count_all_rich_sequence(2, 10) == [2, 4, 8, 16, 32, 64, 128, 156, 112, 134]
        assert count_all_rich_sequence(3, 6) == [3, 9, 27, 45, 93, 189]

    def test_sequence_disagreement_raises(self, monkeypatch):
        import blore.verifier as verifier

        original = verifier.classify_text

        def lying(text):
            v = original(text)
            return v if text != "abb" else type(v)(not v.all_rich, v.rule, v.matched_form)

        monkeypatch.setattr(verifier, "classify_text", lying)
        with pytest.raises(VerificationError):
            count_all_rich_sequence(2, 4)


class TestLaws:
    def test_helpers(self):
        assert reversal_law_holds("aabab")
        assert concat_law_violation("ab", "ba") is None
        assert concat_law_violation("", "abc") is None

    def test_report(self):
        report = check_identity_laws(samples=200, max_len=12, seed=3, reversal_max_len=7)
        assert report.ok
        assert report.reversal_words == 2 ** 8 - 1
        assert report.concat_pairs == 200

    def test_seed_stable(self):
        a = check_identity_laws(50, 10, seed=11, reversal_max_len=4, alphabet_size=3).to_dict()
        b = check_identity_laws(50, 10, seed=11, reversal_max_len=4, alphabet_size=3).to_dict()
        assert a == b


class TestFixtures:
    def test_small_fixtures(self):
        report = fixture_suite(include_large=False)
        failed = [r for r in report.results if not r.passed]
        assert not failed, failed
        names = {r.name for r in report.results}
        assert {f"u4_witness_l{l}" for l in range(3, 9)} <= names
        assert "rem2_negative_a^2babab^3" in names

    def test_large_instance_shape(self):
        w = W(SEPARATED_WORD)
        assert len(w) == 19 and w.alphabet_size == 17
        assert not classify(w).all_rich


def test_two_letter_prefix_family_never_all_rich():
    instances = two_letter_prefix_instances(250, seed=0)
    assert len({w.text for w in instances}) > 150
    for w in instances:
        verdict = classify(w)
        assert not verdict.all_rich
        assert not oracle_all_rich(w).all_rich


def test_two_letter_prefix_instances_deterministic():
    assert two_letter_prefix_instances(20, seed=5) == two_letter_prefix_instances(20, seed=5)
    assert all(isinstance(w, Word) and w.alphabet_size == 6 for w in two_letter_prefix_instances(5))
