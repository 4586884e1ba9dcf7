import json

import pytest

from legfronts import cli, corpus
from legfronts.fronts import parse_front, render_front


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_corpus_lists_bundled_fronts(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    for name in ("unknot", "stabilized_unknot", "unlink2", "trefoil", "51", "trefoil_sum"):
        assert name in out


def test_rulings_trefoil_two_graded_json(capsys):
    code, out, _ = run(capsys, "rulings", "--class=two_graded", "trefoil", "--format=json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert [r["switches"] for r in data["rulings"]] == [[1], [1, 2, 3], [3]]
    assert [r["genus"] for r in data["rulings"]] == [0, 1, 0]
    assert data["polynomial_text"] == "z^2 + 2"


def test_validate_garbage_reports_line(tmp_path, capsys):
    bad = tmp_path / "garbage.front"
    bad.write_text("L 1\nnot an event\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert ":2:" in err


def test_validate_semantic_violation_uses_source_line(tmp_path, capsys):
    bad = tmp_path / "bad.front"
    bad.write_text("# header\nL 1\nR 2\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert f"{bad}:3" in err
    assert "out of range" in err


def test_validate_ok(capsys):
    code, out, err = run(capsys, "validate", "trefoil")
    assert code == 0
    assert "ok" in out
    assert err == ""


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "trefoil")
    assert code == 0
    assert "tb           1" in out


def test_invariants_reverse_component(capsys):
    code, out, _ = run(capsys, "invariants", "stabilized_unknot", "--format=json")
    data = json.loads(out)
    code2, out2, _ = run(
        capsys, "invariants", "stabilized_unknot", "--format=json", "--reverse-component=0"
    )
    data2 = json.loads(out2)
    assert code == code2 == 0
    assert data2["rotation_per_component"] == [-x for x in data["rotation_per_component"]]
    assert data2["tb"] == data["tb"]


def test_homfly_json(capsys):
    code, out, _ = run(capsys, "homfly", "trefoil", "--format=json")
    assert code == 0
    data = json.loads(out)
    assert data["homfly"] == [
        {"v": 2, "z": 0, "c": 2},
        {"v": 2, "z": 2, "c": 1},
        {"v": 4, "z": 0, "c": -1},
    ]


def test_conway_text(capsys):
    code, out, _ = run(capsys, "conway", "trefoil")
    assert code == 0
    assert "z^2 + 1" in out


def test_kauffman_runs(capsys):
    code, out, _ = run(capsys, "kauffman", "unknot")
    assert code == 0
    assert "= 1" in out


def test_max_crossings_exceeded_gives_exit_2(capsys):
    code, _, err = run(capsys, "homfly", "trefoil", "--max-crossings=2")
    assert code == 2
    assert "resource limit" in err


def test_rutherford_51_mentions_genus_two_term(capsys):
    code, out, _ = run(capsys, "rutherford", "51")
    assert code == 0
    assert "z^4" in out
    assert "PASS" in out


def test_rho_trefoil(capsys):
    code, out, _ = run(capsys, "rho", "trefoil")
    assert code == 0
    assert "rho(trefoil) = 1" in out


def test_tests_subcommand_passes_on_corpus(capsys):
    for name in corpus.corpus_names():
        code, out, _ = run(capsys, "tests", name)
        assert code == 0, name
        assert "overall: PASS" in out


def test_connsum_trefoils(capsys):
    code, out, _ = run(capsys, "connsum", "trefoil", "trefoil", "--format=json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert data["counts_multiplicative"] is True
    # the rendered composite front parses back to the same events
    again = parse_front(data["text"])
    assert str(again) == data["events"]


def test_missing_input(capsys):
    code, _, err = run(capsys, "homfly", "no_such_front")
    assert code == 1
    assert "no_such_front" in err


def test_deterministic_output_bytes(capsys):
    _, out1, _ = run(capsys, "rulings", "51", "--format=json")
    _, out2, _ = run(capsys, "rulings", "51", "--format=json")
    assert out1 == out2


def test_corpus_env_override(tmp_path, capsys, monkeypatch):
    (tmp_path / "mine.front").write_text("L 1\nR 1\n")
    monkeypatch.setenv(corpus.CORPUS_ENV_VAR, str(tmp_path))
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert "mine" in out
    assert "trefoil" not in out


def test_round_trip_corpus_files():
    for name in corpus.corpus_names():
        f = corpus.load(name)
        assert parse_front(render_front(f)).events == f.events
