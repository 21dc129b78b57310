"""Golden-file coverage for every CLI path."""

import json

import pytest

from sdncg import clique, cycle, dump_text, parse_text, path
from sdncg.cli import main


@pytest.fixture
def p5(tmp_path):
    f = tmp_path / "p5.txt"
    f.write_text(dump_text(path(5)))
    return str(f)


@pytest.fixture
def p6(tmp_path):
    f = tmp_path / "p6.txt"
    f.write_text(dump_text(path(6)))
    return str(f)


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text(dump_text(clique(4)))
    return str(f)


@pytest.fixture
def k6(tmp_path):
    f = tmp_path / "k6.txt"
    f.write_text(dump_text(clique(6)))
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_text_golden(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "path", "--n", "4")
        assert code == 0
        assert out == "4 3\n0 1\n1 2\n2 3\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 4 and len(payload["edges"]) == 4

    def test_output_file_round_trip(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        code, out, _ = run(
            capsys, "gen", "--family", "star-of-cliques", "--n", "14", "--alpha", "2",
            "--output", str(target),
        )
        assert code == 0 and out == ""
        g = parse_text(target.read_text())
        assert g.n == 14 and g.m == 31

    def test_all_families(self, capsys, k4):
        specs = [
            ("path", "--n", "5"),
            ("cycle", "--n", "5"),
            ("star", "--n", "5"),
            ("clique", "--n", "5"),
            ("hypercube", "--d", "3"),
            ("path-clique", "--n", "6", "--k", "3", "--c", "2"),
            ("clique-network", "--input", k4, "--sizes", "2,2,2,2"),
            ("star-of-cliques", "--n", "14", "--alpha", "2"),
            ("hypercube-clique-network", "--n", "12"),
            ("path-of-cliques", "--n", "20", "--d", "4"),
            ("wheel-clique-network", "--n", "10"),
        ]
        for family, *flags in specs:
            code, out, _ = run(capsys, "gen", "--family", family, *flags)
            assert code == 0, family
            parse_text(out)

    def test_infeasible_params_exit_2(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "star-of-cliques", "--n", "5", "--alpha", "9")
        assert code == 2
        assert "error" in err


class TestSw:
    def test_p5_golden(self, capsys, p5):
        code, out, _ = run(capsys, "sw", "--alpha", "1", "--input", p5)
        assert code == 0 and out == "48\n"

    def test_fractional(self, capsys, p5):
        code, out, _ = run(capsys, "sw", "--alpha", "1/2", "--input", p5)
        assert code == 0 and out == "44\n"


class TestStable:
    def test_p6_golden(self, capsys, p6):
        code, out, _ = run(capsys, "stable", "--alpha", "5/2", "--input", p6)
        assert code == 0 and out == "stable\n"

    def test_unstable_and_json(self, capsys, k4):
        code, out, _ = run(capsys, "stable", "--alpha", "1/2", "--input", k4)
        assert code == 0 and out == "unstable\n"
        code, out, _ = run(capsys, "stable", "--alpha", "1/2", "--input", k4, "--format", "json")
        payload = json.loads(out)
        assert payload["stable"] is False
        assert payload["witnesses"]

    def test_decimal_alpha_rejected(self, capsys, k4):
        code, _, err = run(capsys, "stable", "--alpha", "0.5", "--input", k4)
        assert code == 2 and "exact rational" in err


class TestDynamics:
    def test_first_policy_golden(self, capsys, k4):
        code, out, _ = run(capsys, "dynamics", "--alpha", "1/2", "--input", k4)
        assert code == 0
        assert out == "terminal: stable\nsteps: 3\n"

    def test_random_requires_seed(self, capsys, k4):
        code, _, err = run(capsys, "dynamics", "--alpha", "1/2", "--input", k4, "--policy", "random")
        assert code == 2 and "seed" in err

    def test_random_prints_seed_header(self, capsys, k4):
        code, out, _ = run(
            capsys, "dynamics", "--alpha", "1/2", "--input", k4, "--policy", "random", "--seed", "7"
        )
        assert code == 0
        assert out.startswith("# seed: 7\n")

    def test_json_trajectory(self, capsys, k4):
        code, out, _ = run(capsys, "dynamics", "--alpha", "1/2", "--input", k4, "--format", "json")
        payload = json.loads(out)
        assert payload["terminal"] == "stable"
        assert len(payload["moves"]) == payload["steps"] == 3


class TestTrees:
    def test_smrcst_text_is_parseable_tree(self, capsys, k6):
        code, out, _ = run(capsys, "smrcst", "--input", k6)
        assert code == 0
        g = parse_text(out)
        assert g.n == 6 and g.m == 5

    def test_smrcst_json(self, capsys, k6):
        code, out, _ = run(capsys, "smrcst", "--input", k6, "--format", "json", "--policy", "first")
        payload = json.loads(out)
        assert payload["routing_cost"] == 70

    def test_mrcst(self, capsys, k4):
        code, out, _ = run(capsys, "mrcst", "--input", k4, "--format", "json")
        payload = json.loads(out)
        assert payload["routing_cost"] == 20


class TestOpt:
    def test_text(self, capsys, k4):
        code, out, _ = run(capsys, "opt", "--alpha", "1", "--input", k4)
        assert code == 0 and out == "26\n"

    def test_json(self, capsys, k4):
        code, out, _ = run(capsys, "opt", "--alpha", "1", "--input", k4, "--format", "json")
        payload = json.loads(out)
        assert payload["welfare"] == "26" and payload["optima"] == 12

    def test_budget_exceeded_exit_1(self, capsys, k6):
        code, _, err = run(capsys, "opt", "--alpha", "1", "--input", k6, "--budget", "16")
        assert code == 1 and "budget" in err


class TestAtlas:
    def test_text_golden(self, capsys, k4):
        code, out, _ = run(capsys, "atlas", "--alpha", "1/2", "--input", k4)
        assert code == 0
        assert out == "stable_count: 16\nsw_worst_stable: 21\nsw_best_stable: 23\n"

    def test_json(self, capsys, k4):
        code, out, _ = run(capsys, "atlas", "--alpha", "3", "--input", k4, "--format", "json")
        payload = json.loads(out)
        assert payload["stable_count"] == 1


class TestPoa:
    def test_k6_golden(self, capsys, k6):
        code, out, _ = run(capsys, "poa", "--alpha", "1", "--input", k6)
        assert code == 0 and out == "4/3\n"


class TestCycle:
    def test_found(self, capsys):
        code, out, _ = run(
            capsys, "cycle", "--n", "5", "--alpha", "5/2", "--seed", "3", "--budget", "200000"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# seed: 3"
        assert lines[1] == "cycle: found"

    def test_not_found(self, capsys):
        code, out, _ = run(capsys, "cycle", "--n", "4", "--alpha", "1/2", "--seed", "0", "--budget", "30")
        assert code == 0
        assert "cycle: not-found" in out

    def test_requires_seed(self, capsys):
        code, _, err = run(capsys, "cycle", "--n", "5", "--alpha", "5/2")
        assert code == 2 and "seed" in err


class TestSweep:
    def test_hosts_csv(self, capsys, k4, tmp_path):
        out_file = tmp_path / "sweep.csv"
        code, _, _ = run(
            capsys, "sweep", "--alpha", "1/2,2", "--input", k4, "--output", str(out_file),
            "--budget", "256",
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert lines[0].startswith("n,m,alpha_num,alpha_den,sw_opt")
        assert len(lines) == 3

    def test_random_mode_seed_on_stderr(self, capsys):
        code, out, err = run(
            capsys, "sweep", "--alpha", "1", "--seed", "5", "--count", "2",
            "--n-min", "4", "--n-max", "5", "--budget", "4096",
        )
        assert code == 0
        assert "# seed: 5" in err
        assert out.splitlines()[0].startswith("n,m,")

    def test_workers_byte_identical(self, capsys, k4, tmp_path):
        outs = []
        for workers in ("1", "2"):
            f = tmp_path / f"w{workers}.csv"
            code, _, _ = run(
                capsys, "sweep", "--alpha", "1/2,1,2", "--input", k4,
                "--workers", workers, "--output", str(f), "--budget", "256",
            )
            assert code == 0
            outs.append(f.read_bytes())
        assert outs[0] == outs[1]

    def test_random_mode_requires_seed(self, capsys):
        code, _, err = run(capsys, "sweep", "--alpha", "1")
        assert code == 2 and "seed" in err


class TestCampaign:
    def test_single_suite(self, capsys, tmp_path):
        report = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "campaign", "--suite", "construction-stability", "--output", str(report)
        )
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())
        payload = json.loads(report.read_text())
        assert payload["suite"] == "construction-stability"
        assert payload["passed"] is True

    def test_unknown_suite_exit_2(self, capsys):
        code, _, err = run(capsys, "campaign", "--suite", "bogus")
        assert code == 2 and "unknown suite" in err


class TestErrors:
    def test_malformed_file_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3 2\n0 1\nx y\n")
        code, _, err = run(capsys, "sw", "--alpha", "1", "--input", str(bad))
        assert code == 2 and "line 3" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "sw", "--alpha", "1", "--input", "/nonexistent.txt")
        assert code == 2

    def test_usage_error_exit_2(self, capsys):
        assert main(["sw"]) == 2  # missing required flags

    def test_byte_identical_reruns(self, capsys, k6):
        outs = []
        for _ in range(2):
            code, out, _ = run(capsys, "poa", "--alpha", "1", "--input", k6)
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]
