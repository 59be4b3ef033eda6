"""End-to-end CLI contract: output fields, CSV round-trip, exit codes."""

import pytest

from shaferbounds.cli import main


def run(capsys, *argv) -> tuple[int, str, str]:
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def field(out: str, name: str) -> str:
    for line in out.splitlines():
        if line.startswith(name):
            return line.split("=", 1)[1].strip()
    raise AssertionError(f"field {name!r} not found in output:\n{out}")


class TestEval:
    def test_increasing_point(self, capsys):
        rc, out, _ = run(capsys, "eval", "--alpha", "4", "--x", "0.6")
        assert rc == 0
        assert field(out, "regime") == "increasing"
        lower = float(field(out, "lower").split()[0])
        upper = float(field(out, "upper").split()[0])
        reference = float(field(out, "arcsin(x)"))
        assert lower < reference < upper
        assert lower == pytest.approx(0.6434623200651791, rel=1e-15)
        assert upper == pytest.approx(0.6449293353257812, rel=1e-15)
        # 17 significant digits everywhere
        assert field(out, "arcsin(x)") == "0.64350110879328437"

    def test_middle_regime_has_no_lower(self, capsys):
        rc, out, _ = run(capsys, "eval", "--alpha", "3.8", "--x", "0.5")
        assert rc == 0
        assert field(out, "regime") == "unique-minimum"
        assert "(none" in field(out, "lower")
        assert "lower margin" not in out
        assert float(field(out, "upper margin")) > 0.0

    def test_domain_violation_exits_2(self, capsys):
        rc, out, err = run(capsys, "eval", "--alpha", "4", "--x", "1.5")
        assert rc == 2
        assert err.strip().count("\n") == 0  # one-line diagnostic
        assert "x must lie in" in err


class TestSweep:
    def test_regime_transitions_and_roundtrip(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        rc, _, _ = run(
            capsys, "sweep", "--alpha-min", "3.5", "--alpha-max", "4.1",
            "--steps", "7", "--grid", "501", "--out", str(out_path),
        )
        assert rc == 0
        text = out_path.read_bytes()
        lines = text.decode("ascii").splitlines()
        assert lines[0] == "alpha,regime,const_at_zero,const_at_one,max_gap,x_min,f_min"
        assert len(lines) == 8

        regimes = [line.split(",")[1] for line in lines[1:]]
        collapsed = [regimes[0]]
        for r in regimes[1:]:
            if r != collapsed[-1]:
                collapsed.append(r)
        assert collapsed == ["decreasing", "unique-minimum", "increasing"]

        # alphas ascend and every numeric field round-trips byte-identically
        rows = [line.split(",") for line in lines[1:]]
        alphas = [float(r[0]) for r in rows]
        assert alphas == sorted(alphas)
        rebuilt = [lines[0]]
        for row in rows:
            rebuilt.append(
                ",".join(cell if cell == "" or cell in ("decreasing", "unique-minimum", "increasing")
                         else repr(float(cell)) for cell in row)
            )
        assert ("\n".join(rebuilt) + "\n").encode("ascii") == text

    def test_field_presence_matches_regime(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        rc, _, _ = run(
            capsys, "sweep", "--alpha-min", "3.5", "--alpha-max", "4.1",
            "--steps", "7", "--grid", "501", "--out", str(out_path),
        )
        assert rc == 0
        for line in out_path.read_text().splitlines()[1:]:
            _, regime, _, _, max_gap, x_min, f_min = line.split(",")
            if regime == "unique-minimum":
                assert max_gap == "" and x_min != "" and f_min != ""
            else:
                assert max_gap != "" and x_min == "" and f_min == ""

    def test_malesevic_row_has_equal_constants(self, capsys, tmp_path):
        import shaferbounds as sb

        alpha = sb.alpha_malesevic()
        out_path = tmp_path / "sweep.csv"
        rc, _, _ = run(
            capsys, "sweep", "--alpha-min", repr(alpha), "--alpha-max", repr(alpha + 1.0),
            "--steps", "2", "--grid", "501", "--out", str(out_path),
        )
        assert rc == 0
        row = out_path.read_text().splitlines()[1].split(",")
        assert abs(float(row[2]) - float(row[3])) <= 1e-12

    def test_empty_range_exits_2(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "sweep", "--alpha-min", "5", "--alpha-max", "5",
            "--steps", "3", "--out", str(tmp_path / "x.csv"),
        )
        assert rc == 2 and "alpha-min" in err

    def test_unwritable_path_exits_3(self, capsys):
        rc, _, err = run(
            capsys, "sweep", "--alpha-min", "1", "--alpha-max", "2",
            "--steps", "2", "--out", "/nonexistent-dir/sweep.csv",
        )
        assert rc == 3 and "i/o error" in err


class TestVerify:
    def test_single_alpha(self, capsys):
        rc, out, _ = run(capsys, "verify", "--alpha", "4", "--grid", "2001")
        assert rc == 0
        assert "PASS  classical-chain" in out
        assert "PASS  enclosure-two-sided[alpha=4]" in out
        assert "PASS  monotone-increasing[alpha=4]" in out
        assert "0 failed" in out

    def test_pole_band_skips_do_not_fail(self, capsys):
        rc, out, _ = run(capsys, "verify", "--alpha", "-2.5", "--grid", "2001")
        assert rc == 0
        assert "SKIP  lemma-h-sign[alpha=-2.5]" in out
        assert "PASS  lemma-F-negative[alpha=-2.5]" in out

    def test_suite_small_grid(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "--grid", "2001")
        assert rc == 0
        assert "0 failed" in out
        assert "3 skipped" in out

    def test_bad_tol_exits_2(self, capsys):
        rc, _, err = run(capsys, "verify", "--alpha", "4", "--tol", "0")
        assert rc == 2 and "--tol" in err

    def test_requires_target(self, capsys):
        rc, _, _ = run(capsys, "verify")
        assert rc == 2


class TestMinimize:
    def test_middle_regime(self, capsys):
        rc, out, _ = run(capsys, "minimize", "--alpha", "3.8", "--xtol", "1e-10")
        assert rc == 0
        assert float(field(out, "f_min")) < 5.8
        assert float(field(out, "bracket_width")) <= 1e-10
        assert float(field(out, "const_at_zero")) == 5.8

    def test_wrong_regime_exits_2(self, capsys):
        rc, _, err = run(capsys, "minimize", "--alpha", "4")
        assert rc == 2 and "no interior minimum" in err


class TestBench:
    def test_runs_and_is_deterministic(self, capsys):
        rc, out1, _ = run(capsys, "bench", "--iters", "1500")
        assert rc == 0
        assert "seed=0x5AFE" in out1
        rc, out2, _ = run(capsys, "bench", "--iters", "1500")
        assert rc == 0
        line = "midpoint max abs error"
        err1 = next(l for l in out1.splitlines() if l.startswith(line))
        err2 = next(l for l in out2.splitlines() if l.startswith(line))
        assert err1 == err2
        assert float(err1.split("=")[1]) <= 1.79e-3
        for row in out1.splitlines():
            if row.strip().startswith(("numba", "numpy")):
                assert float(row.split()[-1]) > 0.0

    def test_too_few_iters_exits_2(self, capsys):
        rc, _, err = run(capsys, "bench", "--iters", "999")
        assert rc == 2 and "iters" in err


class TestUsage:
    def test_unknown_command_exits_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_version(self, capsys):
        rc, out, _ = run(capsys, "--version")
        assert rc == 0 and "shaferbounds" in out
