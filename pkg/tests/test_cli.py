"""Command-line behaviour, end to end."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from tfik.catalog import complete
from tfik.cli import main
from tfik.graph import canonicalize, graph6_decode, graph6_encode, read_graph6_file, write_graph6_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_k33(capsys, tmp_path):
    out = tmp_path / "k33.g6"
    code, _, err = run(capsys, "enumerate", "--edges", "9", "--min-degree", "3", "--triangle-free", "--out", str(out))
    assert code == 0
    lines = out.read_bytes().splitlines()
    assert len(lines) == 1 and graph6_decode(lines[0]).edge_count == 9
    assert json.loads(err)["graphs"] == 1


def test_enumerate_to_stdout():
    res = subprocess.run(
        [sys.executable, "-m", "tfik.cli", "enumerate", "--edges", "9"], capture_output=True, check=True
    )
    assert res.stdout.splitlines() == [b"EFz_"]


def test_enumerate_regime_b_is_duplicate_free(capsys, tmp_path):
    out = tmp_path / "b.g6"
    assert run(capsys, "enumerate", "--edges", "22", "--profile", "two-deg5", "--out", str(out))[0] == 0
    graphs = read_graph6_file(out)
    assert len({canonicalize(g) for g in graphs}) == len(graphs) == 6594


def test_enumerate_jobs_identical(capsys, tmp_path):
    one, four = tmp_path / "one.g6", tmp_path / "four.g6"
    run(capsys, "enumerate", "--edges", "22", "--profile", "maxdeg6plus", "--out", str(one))
    run(capsys, "enumerate", "--edges", "22", "--profile", "maxdeg6plus", "--jobs", "4", "--out", str(four))
    assert one.read_bytes() == four.read_bytes() and one.stat().st_size > 0


def test_enumerate_truncation_exits_nonzero(capsys, tmp_path):
    code, _, err = run(capsys, "enumerate", "--edges", "22", "--budget", "10", "--out", str(tmp_path / "t.g6"))
    assert code == 3 and "truncated" in err


def test_missing_output_directory(tmp_path):
    with pytest.raises(SystemExit):
        main(["enumerate", "--edges", "9", "--out", str(tmp_path / "nope" / "x.g6")])


def test_theorem(capsys, tmp_path):
    report, certs = tmp_path / "report.json", tmp_path / "certs.jsonl"
    code, out, _ = run(capsys, "theorem", "--report", str(report), "--certificates", str(certs), "--no-timing")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and "timing" not in rep
    assert rep["regimes"]["maxdeg6plus"]["survivors"] == 0
    assert rep["regimes"]["two-deg5"]["survivors"] == 3
    assert json.loads(report.read_text()) == rep
    assert len(certs.read_text().splitlines()) == 2810 + 6594


def test_theorem_output_is_reproducible(capsys):
    first = run(capsys, "theorem", "--no-timing", "--jobs", "2")[1]
    second = run(capsys, "theorem", "--no-timing")[1]
    assert first == second


def test_prove_k7(capsys, tmp_path):
    src = tmp_path / "k7.g6"
    write_graph6_file(src, [complete(7)])
    code, out, _ = run(capsys, "prove", "--in", str(src))
    rec = json.loads(out)
    assert code == 0 and rec["kind"] == "Survivor" and rec["positive"] is None


def test_prove_rule_restriction(capsys, tmp_path):
    src = tmp_path / "b.g6"
    run(capsys, "enumerate", "--edges", "22", "--profile", "two-deg5", "--orders", "10", "11", "--out", str(src))
    full = [json.loads(x) for x in run(capsys, "prove", "--in", str(src))[1].splitlines()]
    only = [json.loads(x) for x in run(capsys, "prove", "--in", str(src), "--rules", "planar-reduction")[1].splitlines()]
    survivors = lambda recs: {r["graph6"] for r in recs if r["kind"] == "Survivor"}  # noqa: E731
    assert survivors(only) >= survivors(full)
    assert all(r["positive"]["family"] == "K7" for r in full if r["kind"] == "Survivor")


def test_prove_bad_rule(tmp_path):
    src = tmp_path / "k7.g6"
    write_graph6_file(src, [complete(7)])
    with pytest.raises(SystemExit):
        main(["prove", "--in", str(src), "--rules", "magic"])


def test_family(capsys, tmp_path):
    code, out, err = run(capsys, "family", "--seed", "named:K7", "--moves", "ty", "--out", str(tmp_path / "k7.g6"))
    assert code == 0 and out.strip() == "14"
    assert json.loads(err)["members"] == 14
    assert (tmp_path / "k7.g6.json").exists()


def test_family_from_graph6(capsys):
    g6 = graph6_encode(complete(7)).decode()
    assert run(capsys, "family", "--seed", f"g6:{g6}", "--moves", "ty")[1].strip() == "14"


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "M_11")
    g6, desc = out.splitlines()
    assert code == 0 and graph6_decode(g6).order == 11
    d = json.loads(desc)
    assert d["degree_sequence"] == [5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3] and d["witness_edge"]


def test_catalog_unknown(capsys):
    code, _, err = run(capsys, "catalog", "Heawood")
    assert code == 2 and "UnknownGraph" in err


def test_reduce_k7(capsys):
    g6 = graph6_encode(complete(7)).decode()
    code, out, _ = run(capsys, "reduce", "--graph", g6, "--pair", "0,1", "--ledger")
    d = json.loads(out)
    assert code == 0 and d["actual"] == 10 and d["planar"] is False and d["in_regime"] is False


@pytest.mark.parametrize("pair,code", [("0,0", 2), ("0,9", 2)])
def test_reduce_bad_pair(capsys, pair, code):
    g6 = graph6_encode(complete(7)).decode()
    assert run(capsys, "reduce", "--graph", g6, "--pair", pair)[0] == code


def test_reduce_bad_graph6(capsys):
    assert run(capsys, "reduce", "--graph", "A", "--pair", "0,1")[0] == 2


def test_python_backend_flag(capsys):
    from tfik import kernels

    previous = kernels.BACKEND
    try:
        assert run(capsys, "--backend", "python", "family", "--seed", "named:K7", "--moves", "ty")[1].strip() == "14"
    finally:
        kernels.set_backend(previous)


def test_fallback_selected_at_import():
    import os

    env = {**os.environ, "TFIK_BACKEND": "python"}
    code = "from tfik import kernels; from tfik.cli import main; print(kernels.BACKEND, flush=True); main(['enumerate', '--edges', '9'])"
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, check=True, env=env)
    assert res.stdout.splitlines() == [b"python", b"EFz_"]
