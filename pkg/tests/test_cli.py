"""Command line interface: subcommands, exit codes, JSON stability."""

import json

import pytest

from hfhat.cli import run


@pytest.fixture
def write_corpus(tmp_path, capsys):
    def _write(name, *extra):
        stem = name.replace("(", "_").replace(",", "_").replace(")", "")
        path = tmp_path / f"{stem}.hfd"
        assert run(["corpus", name, *extra, "-o", str(path)]) == 0
        capsys.readouterr()
        return path

    return _write


def test_validate_ok(write_corpus, capsys):
    f = write_corpus("s3_g1")
    assert run(["validate", str(f)]) == 0
    assert capsys.readouterr().out.strip().endswith("ok")


def test_validate_truncated_file(tmp_path):
    f = tmp_path / "bad.hfd"
    f.write_text('{"genus": 1')
    assert run(["validate", str(f)]) == 1


def test_validate_invalid_diagram(write_corpus, capsys):
    f = write_corpus("s1s2_g1")
    doc = json.loads(f.read_text())
    doc["basepoint_region"] = 99
    f.write_text(json.dumps(doc))
    assert run(["validate", str(f)]) == 1
    out = capsys.readouterr().out
    assert "basepoint" in out


def test_generators_listing(write_corpus, capsys):
    f = write_corpus("lens(3,1)")
    assert run(["generators", str(f), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 3


def test_spinc_report(write_corpus, capsys):
    f = write_corpus("s1s2_wind")
    assert run(["spinc", str(f), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["classes"]) == 1
    assert doc["classes"][0]["divisor"] == 2


def test_domains_subcommand(write_corpus, capsys):
    f = write_corpus("s1s2_g1")
    code = run(
        ["domains", str(f), "--from", "theta", "--to", "eta",
         "--index", "1", "--nz", "0", "--json"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 2


def test_domains_unknown_generator(write_corpus):
    f = write_corpus("s1s2_g1")
    code = run(["domains", str(f), "--from", "zzz", "--to", "eta", "--index", "1", "--nz", "0"])
    assert code == 4


def test_admissible_failure_prints_witness(write_corpus, capsys):
    f = write_corpus("s1s2_bad")
    assert run(["admissible", str(f)]) == 2
    out = capsys.readouterr().out
    assert "witness" in out


def test_admissible_strong_wind(write_corpus, capsys):
    f = write_corpus("s1s2_wind")
    assert run(["admissible", str(f), "--class", "0", "--strong", "--json"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["reports"][0]["verdict"] is False
    assert doc["reports"][0]["witness"]


def test_admissible_with_certificate(write_corpus, capsys):
    f = write_corpus("s1s2_g1")
    assert run(["admissible", str(f), "--class", "0", "--strong", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["reports"][0]["verdict"] is True
    assert doc["reports"][0]["areas"]


def test_homology_s1s2_g1(write_corpus, capsys):
    f = write_corpus("s1s2_g1")
    assert run(["homology", str(f), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total"] == 2


def test_homology_inadmissible_exits_2(write_corpus, capsys):
    f = write_corpus("s1s2_bad")
    assert run(["homology", str(f)]) == 2
    assert "witness" in capsys.readouterr().err


def test_homology_threads_deterministic(write_corpus, capsys):
    f = write_corpus("gsph(2)")
    assert run(["homology", str(f), "--json"]) == 0
    serial = capsys.readouterr().out
    assert run(["homology", str(f), "--json", "--threads", "4"]) == 0
    assert capsys.readouterr().out == serial


def test_stabilize_round_trip(write_corpus, tmp_path, capsys):
    f = write_corpus("lens(2,1)")
    out = tmp_path / "stab.hfd"
    assert run(["stabilize", str(f), "-o", str(out)]) == 0
    capsys.readouterr()
    assert run(["homology", str(out), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total"] == 2


def test_corpus_output_byte_stable(write_corpus, tmp_path):
    f1 = write_corpus("lens(5,2)")
    f2 = tmp_path / "again.hfd"
    assert run(["corpus", "lens(5,2)", "-o", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_corpus_kwargs_flags(write_corpus, tmp_path):
    f = tmp_path / "lens.hfd"
    assert run(["corpus", "lens", "-p", "5", "-q", "2", "-o", str(f)]) == 0
    assert f.read_bytes() == write_corpus("lens(5,2)").read_bytes()


def test_usage_errors():
    assert run(["frobnicate"]) == 4
    assert run([]) == 4
    assert run(["homology"]) == 4
    assert run(["corpus", "s3_g1"]) == 4  # missing -o


def test_missing_file_exits_1(capsys):
    assert run(["homology", "/nonexistent/x.hfd"]) == 1


def test_json_reports_are_sorted_and_stable(write_corpus, capsys):
    f = write_corpus("s1s2_g1")
    assert run(["spinc", str(f), "--json"]) == 0
    first = capsys.readouterr().out
    assert run(["spinc", str(f), "--json"]) == 0
    assert capsys.readouterr().out == first
    doc = json.loads(first)
    assert list(doc) == sorted(doc)
