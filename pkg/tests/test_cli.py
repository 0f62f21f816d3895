import json

import pytest

from segrecalc import cache as cache_mod
from segrecalc.cli import main
from segrecalc.config import ConfigError, parse_config


def test_config_parse():
    cfg = parse_config(
        """
# a comment
[ring A]
variables = x0 x1
weights = 1 1

[job r]
kind = segre-report
ring_a = A
ring_b = A
shifts = 0 1
"""
    )
    assert cfg.rings["A"]["variables"] == ["x0", "x1"]
    assert cfg.jobs["r"]["shifts"] == ["0", "1"]


def test_config_errors_carry_positions():
    with pytest.raises(ConfigError) as err:
        parse_config("[ring A\n")
    assert err.value.line == 1
    with pytest.raises(ConfigError) as err:
        parse_config("key = 1\n")
    assert err.value.line == 1
    with pytest.raises(ConfigError) as err:
        parse_config("[ring A]\nvariables = x\nvariables = y\n")
    assert err.value.line == 3
    with pytest.raises(ConfigError) as err:
        parse_config("[widget A]\n")
    assert "widget" in str(err.value)


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache_mod.ENV_VAR, str(tmp_path))
    calls = []

    def produce():
        calls.append(1)
        return {"answer": 42}

    key = {"kind": "test", "n": 1}
    assert cache_mod.cache(key, produce) == {"answer": 42}
    assert cache_mod.cache(key, produce) == {"answer": 42}
    assert len(calls) == 1
    # distinct key recomputes
    cache_mod.cache({"kind": "test", "n": 2}, produce)
    assert len(calls) == 2


def test_cache_corruption_recovers(tmp_path, monkeypatch):
    monkeypatch.setenv(cache_mod.ENV_VAR, str(tmp_path))
    warnings = []
    key = {"kind": "corrupt"}
    cache_mod.cache(key, lambda: {"v": 1}, warn=warnings.append)
    path = tmp_path / f"{cache_mod.content_key(key)}.json"
    path.write_text(path.read_text()[: len(path.read_text()) // 2])
    assert cache_mod.cache(key, lambda: {"v": 1}, warn=warnings.append) == {"v": 1}
    assert warnings and "recomputing" in warnings[0]
    # tampered payload fails the integrity check
    record = json.loads(path.read_text())
    record["payload"] = {"v": 999}
    path.write_text(json.dumps(record))
    assert cache_mod.cache(key, lambda: {"v": 1}, warn=warnings.append) == {"v": 1}
    assert any("integrity" in w for w in warnings)


def test_usage_exit_codes(tmp_path, capsys):
    assert main([]) == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("[ring A\n")
    assert main(["run", "--config", str(bad), "--out", str(tmp_path / "o")]) == 2


def test_numsgp_subcommand(tmp_path, capsys):
    rc = main(
        [
            "numsgp",
            "--group",
            "2,2",
            "--gens",
            "1:00,1:10,1:01",
            "--out",
            str(tmp_path),
        ]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert '"frobenius": 1' in out
    art = json.loads((tmp_path / "numsgp.json").read_text())
    assert art["frobenius"] == 1 and art["twisted_symmetric_taus"] == ["11"]


def test_numsgp_subcommand_rejects_bad_generators(capsys):
    rc = main(["numsgp", "--group", "1", "--gens", "2:0"])
    assert rc == 2


def test_run_jobs(tmp_path, monkeypatch):
    monkeypatch.setenv(cache_mod.ENV_VAR, str(tmp_path / "cache"))
    cfg = tmp_path / "jobs.cfg"
    cfg.write_text(
        """
[ring A]
variables = x y z
weights = 1 1 1

[ring B]
variables = u v
weights = 1 2

[semigroup S]
group = 3
gaps = 0:1,0:2,1:1

[module omega]
pair = k2_k3
shift = 1

[job report]
kind = segre-report
ring_a = A
ring_b = B
shifts = 0

[job sgp]
kind = numsgp
semigroup = S

[job res]
kind = resolve
module = omega
depth = 2
window = 5

[job seq]
kind = sequence-check
pair = k3_w12
at = at-M1
window = 4
"""
    )
    out = tmp_path / "out"
    rc = main(["run", "--config", str(cfg), "--out", str(out)])
    assert rc == 0
    rep = json.loads((out / "report.json").read_text())
    assert rep["gorenstein"] and rep["a_invariant"] == -3
    sgp = json.loads((out / "sgp.json").read_text())
    assert sgp["frobenius"] == 1
    res = json.loads((out / "res.json").read_text())
    assert res["betti"][0] == [0, 0]
    seq = json.loads((out / "seq.json").read_text())
    assert seq["exact"]
    # resolve twice: cache hit produces identical bytes
    first = (out / "res.json").read_bytes()
    rc = main(["run", "--config", str(cfg), "--jobs", "res", "--out", str(out)])
    assert rc == 0 and (out / "res.json").read_bytes() == first


def test_unknown_job_name(tmp_path):
    cfg = tmp_path / "jobs.cfg"
    cfg.write_text("[job a]\nkind = kronecker\n")
    assert main(["run", "--config", str(cfg), "--jobs", "missing", "--out", str(tmp_path / "o")]) == 2


def test_field_flag_validation():
    assert main(["reproduce-paper", "--field", "float"]) == 2


def test_certification_gap_exit_code(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cache_mod.ENV_VAR, str(tmp_path / "cache"))
    cfg = tmp_path / "jobs.cfg"
    cfg.write_text(
        """
[module deep]
pair = k2_k3
shift = -3

[job r]
kind = resolve
module = deep
window = 2
"""
    )
    rc = main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")])
    assert rc == 3
    assert "certification gap" in capsys.readouterr().err


def test_reproduce_section_six(tmp_path):
    rc = main(["reproduce-paper", "--section", "6", "--out", str(tmp_path / "r")])
    assert rc == 0
    summary = json.loads((tmp_path / "r" / "summary.json").read_text())
    assert summary["pass"] and summary["checks"] == {"numsgp-suite": True}
