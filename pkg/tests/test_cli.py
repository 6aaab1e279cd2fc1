import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from carterlab import cli, commands
from carterlab.builders import alternating, symmetric
from carterlab.commands import CommandResult, run_command
from carterlab.config import Limits
from carterlab.corpus import corpus_files, run_corpus, write_corpus
from carterlab.io import format_group_file

from conftest import CHECKED_IN_CORPUS


def _write(dirpath: Path, name: str, G) -> None:
    (dirpath / f"{name}.grp").write_text(format_group_file(G, name))


@pytest.fixture
def small_corpus(tmp_path):
    for name, G in [("Sym3", symmetric(3)), ("Sym4", symmetric(4)), ("Alt4", alternating(4)),
                    ("Alt5", alternating(5))]:
        _write(tmp_path, name, G)
    return tmp_path


def test_theorem_over_four_groups(small_corpus):
    summary = run_corpus(small_corpus, "theorem")
    assert [r["verdict"] for r in summary.records] == ["consistent"] * 4
    assert [r["group_id"] for r in summary.records] == ["Alt4", "Alt5", "Sym3", "Sym4"]
    assert summary.exit_code == 0 and summary.counts == {"total": 4, "ok": 4}


def test_empty_directory(tmp_path):
    summary = run_corpus(tmp_path, "carter")
    assert summary.records == [] and summary.exit_code == 0
    assert summary.counts == {"total": 0}


def test_malformed_file_is_isolated(small_corpus):
    (small_corpus / "broken.grp").write_text("degree 3\n(1 2 5)\n")
    summary = run_corpus(small_corpus, "carter")
    assert summary.counts == {"total": 5, "ok": 4, "parse_error": 1}
    bad = next(r for r in summary.records if r["status"] == "parse_error")
    assert bad["group_id"] == "broken" and bad["error"] == "DegreeMismatch"
    assert summary.exit_code == 0


def test_parallel_run_matches_serial(small_corpus):
    a = run_corpus(small_corpus, "star").as_record()
    b = run_corpus(small_corpus, "star", jobs=2).as_record()
    assert a == b


def test_violations_set_the_exit_code(small_corpus, monkeypatch):
    real = commands._DISPATCH["theorem"]

    def fake(G, gid, limits):
        res = real(G, gid, limits)
        if gid == "Sym4":
            res.record.update(verdict="COUNTEREXAMPLE", status="violation")
            return CommandResult(res.record, True)
        return res

    monkeypatch.setitem(commands._DISPATCH, "theorem", fake)
    assert run_corpus(small_corpus, "theorem").exit_code == 1


def test_library_errors_become_error_records():
    rec = run_command("carter", symmetric(5), "Sym5", Limits(subgroups=10, pruned=10)).record
    assert rec["status"] == "error" and rec["error"] == "GroupTooLarge"
    with pytest.raises(ValueError):
        run_command("nonsense", symmetric(3))


def test_commands_on_sym4():
    for c in commands.COMMANDS:
        res = run_command(c, symmetric(4), "Sym4")
        assert not res.violation, c
        assert res.record["status"] in ("ok", "not_applicable", "skipped"), c


def test_write_corpus_is_deterministic(tmp_path):
    write_corpus(tmp_path / "a", max_order=12)
    write_corpus(tmp_path / "b", max_order=12)
    fa = [p.relative_to(tmp_path / "a") for p in corpus_files(tmp_path / "a")]
    fb = [p.relative_to(tmp_path / "b") for p in corpus_files(tmp_path / "b")]
    assert fa == fb
    for rel in fa:
        text = (tmp_path / "a" / rel).read_text()
        assert text == (tmp_path / "b" / rel).read_text()
        checked_in = CHECKED_IN_CORPUS / rel
        if checked_in.exists():
            assert checked_in.read_text() == text


# -- the command line ----------------------------------------------------------------


def _run(argv, monkeypatch, stdin=""):
    out = io.StringIO()
    monkeypatch.setattr(sys, "stdout", out)
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    return code, out.getvalue()


def test_cli_carter_from_file(tmp_path, monkeypatch):
    _write(tmp_path, "Sym4", symmetric(4))
    code, text = _run(["carter", str(tmp_path / "Sym4.grp")], monkeypatch)
    assert code == 0
    assert "group_id: Sym4" in text and "total_count: 3" in text


def test_cli_reads_stdin_and_structured_format(monkeypatch):
    code, text = _run(["theorem", "--format", "structured"], monkeypatch, stdin="degree 4\n(1 2)(3 4)\n(1 2 3)\n")
    assert code == 0
    rec = json.loads(text)
    assert rec["verdict"] == "consistent" and rec["group_id"] == "stdin"


def test_cli_limits_are_recorded(monkeypatch):
    code, text = _run(["carter", "--format", "structured", "--limit-subgroups", "5", "--limit-degree", "77"],
                      monkeypatch, stdin="degree 3\n(1 2 3)\n(1 2)\n")
    rec = json.loads(text)
    assert code == 0 and rec["method"] == "pruned"
    assert rec["limits"]["subgroups"] == 5 and rec["limits"]["degree"] == 77


def test_cli_parse_error_exits_2(monkeypatch, capsys):
    code, _ = _run(["carter"], monkeypatch, stdin="degree 2\n(1 3)\n")
    assert code == 2


def test_cli_catalog(monkeypatch):
    code, text = _run(["catalog", "E_6", "--descriptor", '{"A_equals_G": false}', "--format", "structured"],
                      monkeypatch)
    assert code == 0 and json.loads(text)["verdict"] == "not_guaranteed"
    code, text = _run(["catalog", "--list"], monkeypatch)
    assert "alternating" in text.split()
    code, _ = _run(["catalog", "Monster"], monkeypatch)
    assert code == 2


def test_cli_corpus(small_corpus, monkeypatch):
    code, text = _run(["corpus", str(small_corpus), "--command", "theorem", "--format", "structured"], monkeypatch)
    rec = json.loads(text)
    assert code == 0 and rec["summary"] == {"total": 4, "ok": 4}
    (small_corpus / "x.grp").write_text("cayley 2\n1 2\n2 2\n")
    code, text = _run(["corpus", str(small_corpus), "--command", "carter"], monkeypatch)
    assert code == 0 and "parse_error: 1" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "carterlab", "catalog", "alternating"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "verdict: conjugate" in proc.stdout
