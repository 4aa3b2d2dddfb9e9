"""Command line round trips, one exercise per subcommand."""

import json
import subprocess
import sys

import pytest

from kaleido.algebra import PrimeField, make_group
from kaleido.cli import main
from kaleido.compose import dm_to_json, field_dm
from kaleido.designs import (
    DifferenceFamily,
    PairwiseBalancedDesign,
    df_to_json,
    kdf_to_json,
    pbd_to_text,
)
from kaleido.search import generate_kdf_from_initial_block

F7 = make_group(PrimeField(7))
F19 = make_group(PrimeField(19))


def _out(capsys):
    captured = capsys.readouterr()
    return json.loads(captured.out)


def _fkdf19():
    return generate_kdf_from_initial_block(F19, (0, 1, 2, 4, 5, 11, 8))


@pytest.fixture
def kdf19_file(tmp_path):
    path = tmp_path / "fkdf19.json"
    path.write_text(json.dumps(kdf_to_json(_fkdf19())))
    return str(path)


@pytest.fixture
def kdf7_file(tmp_path):
    kdf = generate_kdf_from_initial_block(F7, (0, 1, 2, 3, 4, 5, 6))
    path = tmp_path / "fkdf7.json"
    path.write_text(json.dumps(kdf_to_json(kdf)))
    return str(path)


# -- verify -------------------------------------------------------------------


def test_verify_block_valid(capsys):
    rc = main(
        ["verify", "block", "--q", "37", "--block", "0,1,2,13,14,34,26"]
    )
    assert rc == 0
    assert _out(capsys)["valid"] is True


def test_verify_block_invalid(capsys):
    rc = main(
        ["verify", "block", "--q", "37", "--block", "0,1,2,13,14,34,25"]
    )
    assert rc == 1
    assert _out(capsys)["valid"] is False


def test_verify_block_bad_order():
    # 9 - 1 is not divisible by 3, so the class table cannot exist
    rc = main(["verify", "block", "--q", "9", "--block", "0;1;2;3;4;5;6"])
    assert rc == 2


def test_verify_kdf_file(capsys, kdf19_file):
    assert main(["verify", "kdf", "--file", kdf19_file]) == 0
    assert _out(capsys)["valid"] is True


def test_verify_kdf_file_invalid(capsys, tmp_path, kdf19_file):
    obj = json.loads((tmp_path / "fkdf19.json").read_text())
    obj["blocks"][0] = [0, 1, 2, 4, 5, 11, 9]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert main(["verify", "kdf", "--file", str(bad)]) == 1
    out = _out(capsys)
    assert out["valid"] is False
    assert out["failing_colors"]


def test_verify_df_file(capsys, tmp_path):
    df = DifferenceFamily(F7, 3, 1, (frozenset({0, 1, 3}),))
    path = tmp_path / "df.json"
    path.write_text(json.dumps(df_to_json(df)))
    assert main(["verify", "df", "--file", str(path)]) == 0
    assert _out(capsys)["valid"] is True


def test_verify_missing_file():
    assert main(["verify", "kdf", "--file", "/nonexistent.json"]) == 2


def test_verify_schema_builtin(capsys):
    assert main(["verify", "schema", "--schema", "hesse"]) == 0
    out = _out(capsys)
    assert out["valid"] is True
    assert out["name"] == "hesse"


def test_verify_schema_file_invalid(tmp_path, capsys):
    obj = {
        "name": "broken",
        "k": 7,
        "h": 3,
        "lines": [[0, 1, 2]] * 7,
    }
    path = tmp_path / "schema.json"
    path.write_text(json.dumps(obj))
    assert main(["verify", "schema", "--schema", str(path)]) == 1
    assert _out(capsys)["valid"] is False


def test_verify_pbd(tmp_path, capsys):
    pbd = PairwiseBalancedDesign(7, (frozenset(range(7)),))
    path = tmp_path / "pbd.txt"
    path.write_text(pbd_to_text(pbd))
    assert main(["verify", "pbd", "--file", str(path)]) == 0
    assert _out(capsys)["valid"] is True


# -- search -------------------------------------------------------------------


def test_search_parametric_hit(capsys):
    rc = main(
        ["search", "parametric", "--q", "37", "--form", "fano-affine"]
    )
    assert rc == 0
    out = _out(capsys)
    assert out["x"] == 13
    assert out["checked"] == 14


def test_search_parametric_miss(capsys):
    rc = main(
        ["search", "parametric", "--q", "13", "--form", "fano-affine"]
    )
    assert rc == 1
    assert _out(capsys)["found"] is False


def test_search_asymptotic(capsys):
    rc = main(["search", "asymptotic", "--q", "541", "--schema", "fano"])
    assert rc == 0
    assert _out(capsys)["block"] == [0, 1, 540, 5, 536, 3, 538]


def test_search_asymptotic_emit_kdf(capsys, tmp_path):
    rc = main(
        ["search", "asymptotic", "--q", "541", "--schema", "fano",
         "--emit-kdf"]
    )
    assert rc == 0
    out = _out(capsys)
    # the bare family object, ready to pipe into verify or develop
    assert len(out["blocks"]) == 90
    path = tmp_path / "fam541.json"
    path.write_text(json.dumps(out))
    assert main(["verify", "kdf", "--file", str(path)]) == 0
    assert _out(capsys)["valid"] is True


def test_search_prefix_emit_kdf(capsys, tmp_path):
    rc = main(
        ["search", "constrained", "--q", "109", "--schema", "hesse",
         "--prefix", "--emit-kdf"]
    )
    assert rc == 0
    out = _out(capsys)
    assert len(out["blocks"]) == 18
    path = tmp_path / "fam109.json"
    path.write_text(json.dumps(out))
    assert main(["verify", "kdf", "--file", str(path)]) == 0
    assert _out(capsys)["valid"] is True


def test_search_asymptotic_miss(capsys):
    rc = main(["search", "asymptotic", "--q", "13", "--schema", "hesse"])
    assert rc == 1
    assert _out(capsys)["found"] is False


def test_search_constrained_inline(capsys):
    rc = main(
        [
            "search", "constrained", "--q", "19",
            "--constraints", '[{"shift": 0, "class": 0}]',
        ]
    )
    assert rc == 0
    assert _out(capsys)["element"] == 1


def test_search_constrained_contradiction(capsys):
    rc = main(
        [
            "search", "constrained", "--q", "37",
            "--constraints",
            '[{"shift": 0, "class": 0}, {"shift": 0, "class": 1}]',
        ]
    )
    assert rc == 1
    out = _out(capsys)
    assert out["exhausted"] is True
    assert out["contradicts_bound"] is True


def test_search_constrained_file(tmp_path, capsys):
    path = tmp_path / "chain.json"
    path.write_text('[{"shift": 1, "class": 0}, {"shift": 0, "class": 1}]')
    rc = main(
        ["search", "constrained", "--q", "19", "--file", str(path)]
    )
    assert rc == 0
    assert _out(capsys)["found"] is True


def test_search_constrained_prefix(capsys):
    rc = main(
        ["search", "constrained", "--q", "109", "--schema", "hesse",
         "--prefix"]
    )
    assert rc == 0
    assert _out(capsys)["block"] == [0, 1, 2, 3, 11, 12, 24, 36, 23]


def test_search_constrained_dead_prefix(capsys):
    rc = main(
        ["search", "constrained", "--q", "19", "--schema", "fano",
         "--prefix", "0,1,2,3"]
    )
    assert rc == 1


def test_search_constrained_no_inputs():
    assert main(["search", "constrained", "--q", "19"]) == 2


# -- compose, develop, replicate ----------------------------------------------


def test_compose_dm(capsys):
    assert main(["compose", "dm", "--q", "7", "--k", "7"]) == 0
    out = _out(capsys)
    assert len(out["rows"]) == 7
    assert all(len(row) == 7 for row in out["rows"])


def test_compose_kdf_default_dm(capsys, kdf7_file, kdf19_file, tmp_path):
    rc = main(
        ["compose", "kdf", "--left", kdf7_file, "--right", kdf19_file]
    )
    assert rc == 0
    out = _out(capsys)
    assert out["group"] == {
        "kind": "product",
        "left": {"kind": "prime", "p": 7},
        "right": {"kind": "prime", "p": 19},
    }
    assert len(out["blocks"]) == 22
    composed = tmp_path / "composed.json"
    composed.write_text(json.dumps(out))
    assert main(["verify", "kdf", "--file", str(composed)]) == 0


def test_compose_kdf_explicit_dm(capsys, kdf7_file, tmp_path):
    m = field_dm(F7, 7)
    dm_path = tmp_path / "dm.json"
    dm_path.write_text(json.dumps(dm_to_json(m)))
    rc = main(
        [
            "compose", "kdf",
            "--left", kdf7_file,
            "--right", kdf7_file,
            "--dm", str(dm_path),
        ]
    )
    assert rc == 0
    # seven scaled copies of the right block plus the lifted left block
    assert len(_out(capsys)["blocks"]) == 8


def test_develop(capsys, kdf19_file):
    assert main(["develop", "--file", kdf19_file]) == 0
    out = _out(capsys)
    assert len(out["planes"]) == 57


def test_develop_invalid(tmp_path, capsys, kdf19_file):
    obj = json.loads((tmp_path / "fkdf19.json").read_text())
    obj["blocks"][0] = [0, 1, 2, 4, 5, 11, 9]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert main(["develop", "--file", str(bad)]) == 1
    assert _out(capsys)["valid"] is False


def test_replicate(tmp_path, capsys):
    pbd = PairwiseBalancedDesign(7, (frozenset(range(7)),))
    path = tmp_path / "unital.txt"
    path.write_text(pbd_to_text(pbd))
    assert main(["replicate", "--file", str(path), "--schema", "fano"]) == 0
    assert len(_out(capsys)["planes"]) == 7


def test_replicate_rejects_mixed_sizes(tmp_path, capsys):
    pbd = PairwiseBalancedDesign(
        9, (frozenset(range(7)), frozenset({0, 7}), frozenset({0, 8}),
            frozenset({7, 8}))
        + tuple(frozenset({i, j}) for i in range(1, 7) for j in (7, 8)),
    )
    path = tmp_path / "mixed.txt"
    path.write_text(pbd_to_text(pbd))
    assert main(["replicate", "--file", str(path), "--schema", "fano"]) == 1


# -- exhaustive sweep ---------------------------------------------------------


def test_nonexistence_v7(capsys):
    assert main(["nonexistence", "--v", "7"]) == 0
    out = _out(capsys)
    assert out["solutions"] == 8
    assert out["exhausted"] is True


def test_nonexistence_budgeted(capsys):
    rc = main(
        ["nonexistence", "--v", "13", "--max-nodes", "5000"]
    )
    assert rc == 1
    out = _out(capsys)
    assert out["solutions"] == 0
    assert out["exhausted"] is False


def test_nonexistence_unsupported():
    assert main(["nonexistence", "--v", "25"]) == 2


# -- reproduce ----------------------------------------------------------------


def test_reproduce_fast_table(capsys):
    assert main(["reproduce", "fano-13-extensions"]) == 0
    out = _out(capsys)
    assert out["all_valid"] is True
    assert [e["q"] for e in out["entries"]] == [169, 2197]


def test_reproduce_unknown_table():
    with pytest.raises(SystemExit):
        main(["reproduce", "no-such-table"])


# -- catalog ------------------------------------------------------------------


def test_catalog_cycle(tmp_path, capsys, kdf19_file, monkeypatch):
    monkeypatch.setenv("KALEIDO_CATALOG", str(tmp_path / "cat"))
    assert main(["catalog", "add", "--file", kdf19_file]) == 0
    stored = _out(capsys)["stored"]
    assert stored.endswith("k19_fano.json")

    assert main(["catalog", "list"]) == 0
    entries = _out(capsys)["entries"]
    assert entries == [
        {"order": 19, "schema": "fano", "file": "k19_fano.json"}
    ]

    assert main(["catalog", "get", "--order", "19", "--schema", "fano"]) == 0
    raw = _out(capsys)
    assert len(raw["blocks"]) == 3

    assert main(["catalog", "get", "--order", "7", "--schema", "fano"]) == 1


def test_compose_pbd_from_catalog(tmp_path, capsys, kdf7_file, monkeypatch):
    monkeypatch.setenv("KALEIDO_CATALOG", str(tmp_path / "cat"))
    assert main(["catalog", "add", "--file", kdf7_file]) == 0
    capsys.readouterr()
    pbd = PairwiseBalancedDesign(7, (frozenset(range(7)),))
    path = tmp_path / "pbd.txt"
    path.write_text(pbd_to_text(pbd))
    assert main(["compose", "pbd", "--file", str(path)]) == 0
    out = _out(capsys)
    assert len(out["planes"]) == 7


def test_compose_pbd_missing_ingredient(tmp_path, monkeypatch):
    monkeypatch.setenv("KALEIDO_CATALOG", str(tmp_path / "empty"))
    pbd = PairwiseBalancedDesign(7, (frozenset(range(7)),))
    path = tmp_path / "pbd.txt"
    path.write_text(pbd_to_text(pbd))
    assert main(["compose", "pbd", "--file", str(path)]) == 2


# -- console entry point ------------------------------------------------------


def test_console_script_smoke():
    proc = subprocess.run(
        [
            sys.executable, "-m", "kaleido.cli",
            "verify", "block", "--q", "37",
            "--block", "0,1,2,13,14,34,26",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valid"] is True
