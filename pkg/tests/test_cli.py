import json

import pytest

from tanglekit.algebra import AlgebraKind
from tanglekit.cli import run
from tanglekit.element import structure_constants
from tanglekit.errors import CorruptTable
from tanglekit.tables import load_table, persist_table


def call(argv, capsys):
    status = run(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_eval_golden(capsys):
    status, out, _ = call(["eval", "--algebra", "blob", "--rank", "3", "--word", "e1 e e1"], capsys)
    assert status == 0
    assert out == "dp · {3|3 :: N1-N2,S1-S2,N3-S3 ;loops:-}\n"


def test_enumerate_json(capsys):
    status, out, _ = call(["enumerate", "--algebra", "typeB", "--rank", "2", "--format", "json"], capsys)
    rows = json.loads(out)
    assert status == 0 and len(rows) == 7
    assert sorted(r["class"] for r in rows) == ["B1", "B1", "B1prime", "B2", "B2", "B2", "B2"]


def test_enumerate_text_is_stable(capsys):
    _, a, _ = call(["enumerate", "--algebra", "typeD", "--rank", "4"], capsys)
    _, b, _ = call(["enumerate", "--algebra", "typeD", "--rank", "4"], capsys)
    assert a == b and len(a.splitlines()) == 48


def test_render_generators(capsys):
    status, out, _ = call(["render", "--algebra", "tl", "--rank", "3"], capsys)
    assert status == 0
    assert out.splitlines() == [
        "e1\t3|3 :: N1-N2,S1-S2,N3-S3 ;loops:-",
        "e2\t3|3 :: N1-S1,N2-N3,S2-S3 ;loops:-",
    ]


def test_verify_passes(capsys):
    status, out, _ = call(["verify", "--suite", "presentation", "--max-rank", "4"], capsys)
    assert status == 0
    assert out.rstrip().endswith("reports)")
    assert "FAIL" not in out


def test_verify_json(capsys):
    status, out, _ = call(["verify", "--suite", "symmetric", "--max-rank", "3", "--format", "json"], capsys)
    doc = json.loads(out)
    assert status == 0 and doc["overall"] and len(doc["reports"]) == 3


def test_verify_failure_exit_status(capsys, monkeypatch):
    from tanglekit import correspondences
    from tanglekit.report import VerificationReport

    def broken(n):
        r = VerificationReport("symmetric", n)
        r.add("x", "a", "b", False)
        return r

    monkeypatch.setattr(correspondences, "verify_symmetric", broken)
    status, out, _ = call(["verify", "--suite", "symmetric", "--max-rank", "2"], capsys)
    assert status == 1 and "FAIL" in out


@pytest.mark.parametrize("argv,flag", [
    (["eval", "--algebra", "tl", "--rank", "3", "--word", "e5"], "--word"),
    (["enumerate", "--algebra", "typeE", "--rank", "3"], "--algebra"),
    (["enumerate", "--algebra", "tl", "--rank", "0"], "--rank"),
    (["verify", "--max-rank", "99"], "--max-rank"),
    (["enumerate", "--algebra", "tl", "--rank", "3", "--delta-prime", "2"], "--delta-prime"),
])
def test_usage_errors(argv, flag, capsys):
    status, _, err = call(argv, capsys)
    assert status == 2
    assert flag in err


def test_table_cache_round_trip(tmp_path, capsys):
    status, first, _ = call(["table", "--algebra", "typeB", "--rank", "2", "--cache-dir", str(tmp_path)], capsys)
    assert status == 0 and len(list(tmp_path.iterdir())) == 1
    _, second, _ = call(["table", "--algebra", "typeB", "--rank", "2", "--cache-dir", str(tmp_path)], capsys)
    assert first == second
    assert json.loads(first)["format_version"] == 1


def test_cache_dir_from_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TANGLEKIT_CACHE", str(tmp_path / "env"))
    call(["table", "--algebra", "tl", "--rank", "3"], capsys)
    assert len(list((tmp_path / "env").iterdir())) == 1


def test_persist_and_load_equal_recomputation(tmp_path):
    kind = AlgebraKind.type_b(2)
    path = persist_table(kind, tmp_path)
    assert load_table(path, kind) == structure_constants(kind)


def test_edited_hash_is_rejected(tmp_path):
    kind = AlgebraKind.type_b(2)
    path = persist_table(kind, tmp_path)
    doc = json.loads(path.read_text())
    doc["params_hash"] = "0" * 64
    path.write_text(json.dumps(doc))
    with pytest.raises(CorruptTable):
        load_table(path, kind)


def test_edited_entry_is_rejected(tmp_path):
    kind = AlgebraKind.tl(3)
    path = persist_table(kind, tmp_path)
    doc = json.loads(path.read_text())
    doc["entries"][0]["k"] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(CorruptTable):
        load_table(path, kind)


def test_wrong_version_is_rejected(tmp_path):
    kind = AlgebraKind.tl(3)
    path = persist_table(kind, tmp_path)
    doc = json.loads(path.read_text())
    doc["format_version"] = 0
    path.write_text(json.dumps(doc))
    with pytest.raises(CorruptTable):
        load_table(path, kind)


def test_tl5_table_is_sparse(tmp_path):
    kind = AlgebraKind.tl(5)
    doc = json.loads(persist_table(kind, tmp_path).read_text())
    assert len(doc["basis"]) == 42
    assert len(doc["entries"]) == 42 * 42
