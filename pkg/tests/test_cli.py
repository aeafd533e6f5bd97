from __future__ import annotations

import json

import pytest

from fanram.cli import main
from fanram.colorings import check_free, thm17_construction
from fanram.graph6 import decode
from fanram.io import load_coloring, parse_coloring, render_coloring, save_coloring
from fanram.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_detect_found(capsys):
    code, doc, _ = run_json(capsys, "detect", "--graph", "G6:D~{", "--target", "K4")
    assert code == 0
    assert doc["format"] == "fanram-report-1"
    assert doc["command"] == "detect"
    assert doc["found"] is True
    assert doc["witness"]["groups"] == [[0, 1, 2, 3]]


def test_detect_absent(capsys):
    code, doc, _ = run_json(capsys, "detect", "--graph", "K3", "--target", "K4")
    assert code == 1
    assert doc["found"] is False and doc["witness"] is None


def test_detect_bad_grammar(capsys):
    code, out, err = run(capsys, "detect", "--graph", "Q9", "--target", "K3")
    assert code == 2
    assert "error" in err


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "ramsey", "--red", "K3", "--blue", "K3")[0] == 2  # no --hi


def test_construct_writes_file_and_certifies(tmp_path, capsys):
    out_file = tmp_path / "c.fr2"
    code, doc, _ = run_json(
        capsys,
        "construct", "--family", "thm17",
        "--m", "3", "--s", "2", "--t", "2", "--n", "2",
        "--out", str(out_file),
    )
    assert code == 0
    assert doc["order"] == 13
    assert doc["certificate"]["red_target"] == "K3"
    assert doc["certificate"]["blue_target"] == "2xF:2,2"
    assert doc["certificate"]["red_witness"] is None
    coloring, metadata = load_coloring(out_file)
    assert coloring == thm17_construction(3, 2, 2, 2)
    assert metadata["family"] == "thm17"
    assert metadata["red_target"] == "K3"


def test_construct_lemma27_defaults(capsys):
    code, doc, _ = run_json(
        capsys, "construct", "--family", "lemma27", "--s", "2", "--t", "2", "--n", "1"
    )
    assert code == 0
    assert doc["order"] == 4
    assert doc["certificate"]["blue_target"] == "F:2,1"


def test_construct_burr_needs_explicit_targets(capsys):
    code, doc, _ = run_json(
        capsys,
        "construct", "--family", "burr",
        "--chi", "3", "--surplus", "1", "--h-order", "17",
    )
    assert code == 0
    assert doc["order"] == 32
    assert doc["certificate"] is None
    code, doc, _ = run_json(
        capsys,
        "construct", "--family", "burr",
        "--chi", "3", "--surplus", "1", "--h-order", "17",
        "--red", "K3", "--blue", "F:4,4",
    )
    assert code == 0
    assert doc["certificate"]["blue_witness"] is None


def test_construct_invalid_certification_exits_one(capsys):
    code, doc, _ = run_json(
        capsys,
        "construct", "--family", "burr",
        "--chi", "3", "--surplus", "1", "--h-order", "17",
        "--red", "K3", "--blue", "F:2,1",
    )
    assert code == 1
    assert doc["certificate"]["blue_witness"] is not None


def test_construct_missing_params(capsys):
    code, _, err = run(capsys, "construct", "--family", "thm17", "--m", "3")
    assert code == 2 and "needs" in err


def test_check_free_uses_metadata(tmp_path, capsys):
    out_file = tmp_path / "c.fr2"
    run(
        capsys,
        "construct", "--family", "lemma27",
        "--s", "2", "--t", "2", "--n", "2", "--out", str(out_file),
    )
    code, doc, _ = run_json(capsys, "check-free", "--file", str(out_file))
    assert code == 0
    assert doc["certificate"]["red_target"] == "M:2"
    # explicit flags override and can flip the verdict
    code, doc, _ = run_json(
        capsys, "check-free", "--file", str(out_file), "--red", "M:1", "--blue", "F:2,2"
    )
    assert code == 1
    assert doc["certificate"]["red_witness"] is not None


def test_check_free_without_targets(tmp_path, capsys):
    f = tmp_path / "bare.fr2"
    c = thm17_construction(3, 1, 2, 2)
    save_coloring(f, c)
    code, _, err = run(capsys, "check-free", "--file", str(f))
    assert code == 2 and "target" in err


def test_bound_formula(capsys):
    code, doc, _ = run_json(
        capsys, "bound", "--formula", "lem2.7", "--s", "2", "--t", "2", "--n", "1"
    )
    assert code == 0
    assert doc["report"]["value"] == 5
    assert doc["report"]["validity"]["satisfied"] is True


def test_bound_out_of_range_exits_one(capsys):
    code, doc, _ = run_json(capsys, "bound", "--formula", "thm1.4", "--n", "2")
    assert code == 1
    assert doc["report"]["value"] == 13
    assert doc["report"]["validity"]["satisfied"] is False


def test_bound_unknown_formula(capsys):
    code, _, err = run(capsys, "bound", "--formula", "thm7.7", "--n", "3")
    assert code == 2


def test_bound_structural(capsys):
    code, doc, _ = run_json(capsys, "bound", "--kind", "burr", "--g", "K3", "--h", "F:4,5")
    assert code == 0
    assert doc["report"]["value"] == 41
    code, doc, _ = run_json(capsys, "bound", "--kind", "star", "--g", "K3", "--h", "F:4,5")
    assert code == 0
    assert doc["report"]["value"] == 24


def test_ramsey_report(capsys):
    code, doc, _ = run_json(
        capsys, "ramsey", "--red", "M:2", "--blue", "F:2,1", "--lo", "3", "--hi", "8"
    )
    assert code == 0
    assert doc["value"] == 5 and doc["status"] == "exact"
    assert doc["witness"]["host"] == "C~"
    assert doc["stats"]["nodes"] >= 0


def test_ramsey_range_failure_exits_one(capsys):
    code, doc, _ = run_json(
        capsys, "ramsey", "--red", "K3", "--blue", "K3", "--lo", "3", "--hi", "5"
    )
    assert code == 1
    assert doc["value"] is None and doc["status"] == "no_value_in_range"


def test_ramsey_budget_exit_two(capsys):
    code, doc, _ = run_json(
        capsys,
        "ramsey", "--red", "K4", "--blue", "K4",
        "--lo", "3", "--hi", "18", "--budget", "500",
    )
    assert code == 2
    assert doc["status"] == "budget_exhausted"


def test_ramsey_byte_identical_across_thread_hints(capsys):
    args = ["ramsey", "--red", "K3", "--blue", "K3", "--lo", "3", "--hi", "8"]
    _, out1, _ = run(capsys, *args, "--threads", "1")
    _, out8, _ = run(capsys, *args, "--threads", "8")
    assert out1 == out8
    _, again, _ = run(capsys, *args, "--threads", "1")
    assert out1 == again


def test_star_cli(capsys):
    code, doc, _ = run_json(capsys, "star", "--red", "K3", "--blue", "K3", "--r", "6")
    assert code == 0
    assert doc["value"] == 5
    host = decode(doc["witness"]["host"])
    assert host.order == 6 and host.degree(5) == 4


def test_star_precondition_exit_two(capsys):
    code, _, err = run(capsys, "star", "--red", "K3", "--blue", "K3", "--r", "5")
    assert code == 2


def test_packing_check_cli(capsys):
    code, doc, _ = run_json(
        capsys, "packing-check", "--t", "2", "--n", "3", "--trials", "20", "--seed", "3"
    )
    assert code == 0
    assert doc["ok"] is True and doc["failures"] == []
    assert doc["min_degree_floor"] == 3


# ---------------------------------------------------------------------------
# cache behavior
# ---------------------------------------------------------------------------


def test_cache_store_and_replay(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = [
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "3", "--hi", "8", "--cache", str(cache),
    ]
    code1, out1, _ = run(capsys, *args)
    assert code1 == 0
    assert cache.exists() and len(cache.read_text().splitlines()) == 1
    code2, out2, _ = run(capsys, *args)
    assert code2 == 0
    assert out1 == out2
    # still exactly one record: hits do not append
    assert len(cache.read_text().splitlines()) == 1
    # different key computes fresh and appends
    code3, doc, _ = run(
        capsys,
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "3", "--hi", "9", "--cache", str(cache),
    )
    assert len(cache.read_text().splitlines()) == 2


def test_cache_env_variable(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache.jsonl"
    monkeypatch.setenv("FANRAM_CACHE", str(cache))
    run(capsys, "ramsey", "--red", "M:1", "--blue", "K3", "--lo", "1", "--hi", "5")
    assert cache.exists()
    monkeypatch.delenv("FANRAM_CACHE")


def test_cache_corrupt_line_skipped(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = [
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "3", "--hi", "8", "--cache", str(cache),
    ]
    _, out1, _ = run(capsys, *args)
    cache.write_text("this is not json\n" + cache.read_text())
    code, out2, err = run(capsys, *args)
    assert code == 0
    assert out1 == out2
    assert "skipped" in err


def test_cache_corrupt_certificate_recomputes(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = [
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "3", "--hi", "8", "--cache", str(cache),
    ]
    _, out1, _ = run(capsys, *args)
    rec = json.loads(cache.read_text())
    rec["artifact"]["witness"]["red"] = "C~"  # flip the stored coloring
    cache.write_text(json.dumps(rec) + "\n")
    code, out2, err = run(capsys, *args)
    assert code == 0
    assert out1 == out2  # recomputed result matches the original bytes
    assert "re-validation" in err


def test_cache_certificate_records(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    out_file = tmp_path / "c.fr2"
    run(
        capsys,
        "construct", "--family", "lemma27",
        "--s", "2", "--t", "2", "--n", "1", "--out", str(out_file),
    )
    args = ["check-free", "--file", str(out_file), "--cache", str(cache)]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(cache.read_text().splitlines()) == 1


def test_cache_subcommand_summary(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    run(
        capsys,
        "ramsey", "--red", "M:2", "--blue", "F:2,1",
        "--lo", "3", "--hi", "8", "--cache", str(cache),
    )
    code, doc, _ = run_json(capsys, "cache", "--cache", str(cache))
    assert code == 0
    assert doc["records"] == 1
    assert doc["by_kind"] == {"ramsey": 1}
    assert doc["entries"][0]["value"] == 5
    code, _, err = run(capsys, "cache")
    assert code == 2


# ---------------------------------------------------------------------------
# coloring files
# ---------------------------------------------------------------------------


def test_fr2_round_trip(tmp_path):
    c = thm17_construction(3, 2, 2, 2)
    path = tmp_path / "x.fr2"
    save_coloring(path, c, {"red_target": "K3", "blue_target": "2xF:2,2"})
    loaded, metadata = load_coloring(path)
    assert loaded == c
    assert metadata == {"red_target": "K3", "blue_target": "2xF:2,2"}
    assert (
        check_free(loaded, "K3", "2xF:2,2").content_hash
        == check_free(c, "K3", "2xF:2,2").content_hash
    )


def test_fr2_text_shape():
    c = thm17_construction(3, 1, 2, 1)
    text = render_coloring(c, {"k": "v"})
    lines = text.splitlines()
    assert len(lines) == 3
    assert decode(lines[0]) == c.host
    assert lines[2] == "k=v"


def test_fr2_parse_errors():
    with pytest.raises(ParseError):
        parse_coloring("D~{\n")  # missing red line
    with pytest.raises(ParseError):
        parse_coloring("D~{\nD??\nbad-line\n")
    with pytest.raises(ParseError):
        parse_coloring("D~{\nD??\n=novalue\n")


def test_fr2_red_must_fit_host():
    from fanram.errors import BadParam

    with pytest.raises(BadParam):
        parse_coloring("D??\nD~{\n")  # red edges not in empty host
