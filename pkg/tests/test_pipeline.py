"""Pipeline tests: JSONL round trips, checkpoint/resume byte identity, the
sweep and hunt flows, golden verification, and the CLI surface."""

import json
import math
import os

import pytest

from thetacong.arith import squarefree_count, squarefree_flags
from thetacong.candidates import CandidateRecord
from thetacong.curves import PI_3, TWO_PI_3, PointQ, build_curve, is_on_curve
from thetacong.cli import main as cli_main
from thetacong.dataset import PUBLISHED, TABLE1, find_published
from thetacong.nagao import SieveConfig
from thetacong.pipeline import (
    CheckpointedWriter,
    check_s0_has_no_small_point,
    record_from_json,
    record_to_json,
    run_analyze,
    run_hunt,
    run_sweep,
    run_table1,
    run_verify,
    selmer_tally,
)


def test_record_json_roundtrip():
    rec = CandidateRecord(
        n=646,
        theta=PI_3,
        provenance=[(1, 2), (3, 4)],
        omega_odd=2,
        nagao_values={1000: 17.25},
        selmer=3,
        rank_lb=3,
        points=[PointQ.affine(-722, 34656)],
    )
    back = record_from_json(record_to_json(rec))
    assert back == rec
    # n survives as an exact decimal string even past double precision
    big = CandidateRecord(n=365803464586**2 + 1, theta=TWO_PI_3)
    assert record_from_json(record_to_json(big)).n == big.n


def test_sweep_tally_partitions_range():
    recs = list(run_sweep(1, 300, PI_3, report_selmer_min=3, height_bound=100, torsor_bound=30))
    tally = selmer_tally(recs)
    assert tally["total"] == squarefree_count(300)
    assert sum(tally["cells"]) == tally["total"]
    ns = [r.n for r in recs]
    assert ns == sorted(ns)
    flags = squarefree_flags(300)
    assert ns == [n for n in range(1, 301) if flags[n]]


def test_sweep_records_satisfy_bounds():
    for rec in run_sweep(1, 200, TWO_PI_3, report_selmer_min=2, height_bound=150, torsor_bound=30):
        assert rec.selmer is not None and rec.selmer >= 0
        if rec.rank_lb is not None:
            assert rec.rank_lb <= rec.selmer
            E = build_curve(rec.n, rec.theta)
            for P in rec.points:
                assert is_on_curve(P, E)


def test_table1_small_matches_sweep():
    tally = run_table1(150, PI_3)
    recs = run_sweep(1, 150, PI_3, report_selmer_min=10**9)
    assert tally == selmer_tally(recs)


def test_checkpoint_resume_byte_identical(tmp_path):
    cfg = "sweep-test-config"
    base = tmp_path / "full.jsonl"
    w = CheckpointedWriter(str(base), cfg, interval=8)
    recs = list(run_sweep(1, 120, PI_3, report_selmer_min=3, writer=w))
    w.close()
    reference = base.read_bytes()

    # interrupted run: stop mid-range without closing cleanly, then resume
    part = tmp_path / "part.jsonl"
    w1 = CheckpointedWriter(str(part), cfg, interval=8)
    for i, rec in enumerate(recs):
        if rec.n > 60:
            break
        w1.write(rec)
    w1.fh.close()  # simulate a kill: no final checkpoint flush
    w2 = CheckpointedWriter(str(part), cfg, resume=True, interval=8)
    assert w2.last_n is not None
    resume_after = w2.last_n
    consumed = list(run_sweep(1, 120, PI_3, report_selmer_min=3, writer=w2))
    w2.close()
    assert part.read_bytes() == reference
    # the resumed sweep recomputed only n past the checkpoint
    assert consumed and consumed[0].n > resume_after


def test_checkpoint_config_mismatch_restarts(tmp_path):
    path = tmp_path / "out.jsonl"
    w = CheckpointedWriter(str(path), "config-A", interval=4)
    for rec in run_sweep(1, 40, PI_3, report_selmer_min=99, writer=w):
        pass
    w.close()
    # resuming with a different config ignores the stale checkpoint
    w2 = CheckpointedWriter(str(path), "config-B", resume=True, interval=4)
    assert w2.last_n is None
    w2.close()


def test_hunt_small_grid_emits_n6():
    cfg = SieveConfig(((100, -math.inf),))
    recs = list(
        run_hunt(30, 30, PI_3, min_omega=0, sieve=cfg, selmer_min=0,
                 height_bound=100, torsor_bound=20, pmin=1, qmin=1)
    )
    ns = {r.n for r in recs}
    assert 6 in ns
    for r in recs:
        assert r.selmer > 0
        assert r.rank_lb is not None and r.rank_lb <= r.selmer
        if r.n == 6:
            assert r.rank_lb >= 1
    assert [r.n for r in recs] == sorted(ns)


def test_hunt_empty_grid():
    assert list(run_hunt(1, 1, PI_3)) == []


def test_hunt_respects_nagao_filter():
    # default stages reject every tiny curve at S(10^3) > 15
    recs = list(run_hunt(8, 8, PI_3, min_omega=0, selmer_min=0, pmin=1, qmin=1))
    assert recs == []


def test_verify_report_all_green():
    report = run_verify(include_selmer=False, include_small_anchors=False)
    assert report.ok
    checks = {(r.entry, r.check) for r in report.results}
    assert len([c for c in checks if c[1] == "coefficients"]) == len(PUBLISHED)
    # the 2pi/3 rank-6 headline mismatch and duplicated companions are flagged
    assert any("4562490669" in a for a in report.anomalies)
    assert any("more than once" in a for a in report.anomalies)


def test_find_published():
    assert find_published(646, PI_3).rank == 3
    assert find_published(456249066, TWO_PI_3).rank == 6
    assert find_published(4562490669, TWO_PI_3) is not None  # headline alias
    assert find_published(646, TWO_PI_3) is None


def test_table1_reference_rows_shape():
    for theta_name, row in TABLE1.items():
        assert len(row) == 7
        assert sum(row) == 3039633


def test_analyze_output():
    text = run_analyze(1, PI_3, height_bound=100, torsor_bound=20)
    assert "selmer rank = 0" in text
    assert "rank lower bound from found points = 0" in text
    text = run_analyze(221, TWO_PI_3, height_bound=300, torsor_bound=40)
    assert "selmer rank = 3" in text
    assert "rank lower bound from found points = 3" in text


def test_check_s0_has_no_small_point():
    recs = list(run_sweep(1, 60, PI_3, report_selmer_min=99))
    zeros = [r for r in recs if r.selmer == 0]
    assert zeros, "range should contain selmer-0 curves"
    assert check_s0_has_no_small_point(recs, xheight=1000) == []


def test_cli_verify_quiet():
    assert cli_main(["verify", "--quiet"]) == 0


def test_cli_analyze(capsys):
    assert cli_main(["analyze", "1", "--theta", "pi/3", "--height-bound", "50", "--torsor-bound", "10"]) == 0
    out = capsys.readouterr().out
    assert "selmer rank = 0" in out


def test_cli_sweep_with_output(tmp_path, capsys):
    out_path = tmp_path / "sweep.jsonl"
    rc = cli_main([
        "sweep", "--range", "1:100", "--theta", "2pi/3",
        "--out", str(out_path), "--height-bound", "100", "--torsor-bound", "20",
    ])
    assert rc == 0
    printed = capsys.readouterr().out
    assert "total" in printed
    lines = out_path.read_text().strip().splitlines()
    flags = squarefree_flags(100)
    assert len(lines) == int(flags.sum())
    first = json.loads(lines[0])
    assert first["n"] == "1" and first["selmer"] == 0
    assert os.path.exists(str(out_path) + ".ckpt")


def test_cli_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("theta = 2pi/3\nheight-bound = 50\n# comment\n")
    assert cli_main(["--config", str(cfg), "analyze", "5"]) == 0
    out = capsys.readouterr().out
    assert "E_{5,2pi/3}" in out
