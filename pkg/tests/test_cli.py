import json
import subprocess
import sys

import pytest

from blore.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_rle(capsys):
    code, d = run_json(capsys, "rle", "a^2b^3a^3")
    assert code == 0
    assert d == {"word": "aabbbaaa", "rle": "a^2b^3a^3", "trace": "aba", "run_sequence": [2, 3, 3], "run_length": 3}


def test_pal(capsys):
    code, d = run_json(capsys, "pal", "abbc")
    assert code == 0 and d["pal_count"] == 4 and d["rich"] is True
    assert sorted(d["palindromes"]) == ["a", "b", "bb", "c"]


def test_rich_witness(capsys):
    code, d = run_json(capsys, "rich", "a^2bab^2a^2")
    assert code == 0 and d["rich"] is False
    assert d["witness"]["kind"] == "GlenViolation"


def test_power_and_circ(capsys):
    assert run_json(capsys, "power", "aba", "5/3")[1]["power"] == "abaab"
    assert run_json(capsys, "circ", "aabbabaa")[1]["circularly_rich"] is False
    assert run_json(capsys, "circ", "ab")[1]["circularly_rich"] is True


def test_classify_check(capsys):
    code, d = run_json(capsys, "classify", "abbc", "--check")
    assert code == 0
    assert d["verdict"] == "ExistsNonRich" and d["rule"] == "NonBinaryRepeat"
    assert d["agree"] is True and d["oracle"]["witness"]


def test_classify_table_form(capsys):
    code, d = run_json(capsys, "classify", "a^3babab")
    assert code == 0 and d["verdict"] == "AllRich" and d["matched_form"] == "L6.T.a^n1-babab"


def test_br(capsys):
    code, d = run_json(capsys, "br", "enum", "abbc")
    assert code == 0
    assert d["distinct_count"] == 7 and d["partitions_explored"] == 8
    assert {e["element"] for e in d["elements"]} == {"cbab", "cbba", "cabb", "bbca", "bcab", "abbc", "bcba"}
    assert run_json(capsys, "br", "count", "abbc")[1]["count"] == 7
    assert run_json(capsys, "br", "member", "abbc", "bcba")[1]["member"] is True
    assert run_json(capsys, "br", "member", "abbc", "abcb")[1]["member"] is False


def test_br_annotate_text(capsys):
    code, out, _ = run(capsys, "br", "enum", "abbc", "--annotate")
    assert code == 0
    assert "bcab\tnot-rich" in out.splitlines()
    assert sum(line.endswith("\trich") for line in out.splitlines()) == 6


def test_br_member_needs_candidate(capsys):
    code, _, err = run(capsys, "br", "member", "abbc")
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ["rle", "x"],
    ["rle", "a^0"],
    ["rich", "abc", "--alphabet", "2"],
    ["power", "ab", "1/3"],
    ["nosuchcommand"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_resource_limit_exit_3(capsys):
    code, _, err = run(capsys, "br", "count", "a^30")
    assert code == 3 and "limit" in err
    assert run(capsys, "br", "count", "a^30", "--max-block-len", "30")[0] == 0


def test_resource_limit_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BLORE_MAX_BLOCK_LEN", "4")
    assert run(capsys, "br", "count", "abbcd")[0] == 3


def test_verify_json_is_reproducible(capsys):
    a = run_json(capsys, "verify", "--alphabet", "2", "--max-len", "9")[1]
    b = run_json(capsys, "verify", "--alphabet", "2", "--max-len", "9", "--jobs", "2")[1]
    assert a["mismatches"] == [] and a["words_checked"] == 1022
    a.pop("wall_time_ms"), b.pop("wall_time_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--alphabet", "3", "--max-len", "5")
    assert code == 0 and "0 mismatches" in out


def test_sequence_csv_to_file(capsys, tmp_path):
    path = tmp_path / "seq.csv"
    code, out, _ = run(capsys, "sequence", "--max-len", "9", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == "length,total_words,all_rich_count"
    assert lines[-2:] == ["8,256,156", "9,512,112"]


def test_dump_forms(capsys):
    code, d = run_json(capsys, "dump-forms")
    assert code == 0
    ids = [f["form_id"] for f in d["forms"]]
    assert ids[0] == "L8.abababab" and len(ids) == len(set(ids))


def test_laws(capsys):
    code, d = run_json(capsys, "laws", "--samples", "50", "--max-len", "10", "--seed", "4")
    assert code == 0
    assert d["concatenation"]["pairs"] == 50 and d["concatenation"]["violations"] == []


def test_fixtures_small(capsys):
    code, d = run_json(capsys, "fixtures", "--skip-large")
    assert code == 0 and d["ok"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blore", "br", "count", "abbc"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "7" in proc.stdout
