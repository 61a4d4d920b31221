import json

import pytest

from dispersat.cli import probe_speedup, run


OR2 = "p cnf 2 1\n1 2 0\n"
UNSAT = "p cnf 1 2\n1 0\n-1 0\n"
TRIPLE = "p cnf 3 1\n1 2 3 0\n"


@pytest.fixture
def or2(tmp_path):
    path = tmp_path / "or2.cnf"
    path.write_text(OR2)
    return str(path)


def capture(capsys):
    out = capsys.readouterr().out
    return json.loads(out)


class TestDiameter:
    def test_fwht_json(self, or2, capsys):
        code = run(["diameter", "--algo", "fwht", or2])
        data = capture(capsys)
        assert code == 0
        assert data["status"] == "OK"
        assert data["values"]["distance"] == 2
        assert sorted(data["assignments"]) == ["01", "10"]
        assert data["schema_version"] == 1

    def test_unsat_exit_code(self, tmp_path, capsys):
        path = tmp_path / "unsat.cnf"
        path.write_text(UNSAT)
        code = run(["diameter", "--algo", "fwht", str(path)])
        data = capture(capsys)
        assert code == 1
        assert data["status"] == "UNSAT"

    @pytest.mark.parametrize("algo", ["minones", "ppz", "schoening"])
    def test_other_algos(self, or2, capsys, algo):
        code = run(["diameter", "--algo", algo, "--seed", "5", or2])
        data = capture(capsys)
        assert code == 0
        assert data["values"]["distance"] >= 1  # half the true diameter 2


class TestDisperse:
    @pytest.mark.parametrize("algo", ["exact", "fwht", "ppz", "schoening"])
    def test_min_objective(self, or2, capsys, algo):
        code = run(
            ["disperse", "--s", "2", "--objective", "min", "--algo", algo, or2]
        )
        data = capture(capsys)
        assert code == 0
        assert data["values"]["minPD"] >= 1
        assert len(data["assignments"]) == 2

    def test_clique_algo(self, or2, capsys):
        code = run(
            ["disperse", "--s", "3", "--objective", "min", "--algo", "clique", or2]
        )
        data = capture(capsys)
        assert code == 0
        assert data["values"]["minPD"] == 1

    def test_weighted(self, tmp_path, capsys):
        path = tmp_path / "triple.cnf"
        path.write_text(TRIPLE)
        code = run(
            [
                "disperse",
                "--s",
                "2",
                "--algo",
                "schoening",
                "--weight-min",
                "2",
                "--delta",
                "1/2",
                "--effort",
                "4",
                str(path),
            ]
        )
        data = capture(capsys)
        assert code == 0
        assert all(z.count("1") >= 1 for z in data["assignments"])

    def test_weight_flags_exclusive(self, or2, capsys):
        code = run(
            [
                "disperse",
                "--s",
                "2",
                "--algo",
                "schoening",
                "--weight-min",
                "1",
                "--weight-max",
                "1",
                or2,
            ]
        )
        assert code == 2

    def test_usage_error_weight_with_fwht(self, or2):
        code = run(
            ["disperse", "--s", "2", "--algo", "fwht", "--weight-min", "1", or2]
        )
        assert code == 2


class TestEnumerateReduce:
    def test_enumerate(self, or2, capsys):
        code = run(["enumerate", or2])
        data = capture(capsys)
        assert code == 0
        assert data["assignments"] == ["01", "10", "11"]

    def test_enumerate_unsat(self, tmp_path, capsys):
        path = tmp_path / "u.cnf"
        path.write_text(UNSAT)
        assert run(["enumerate", str(path)]) == 1
        capsys.readouterr()

    def test_reduce_emits_dimacs(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("3 3\n1 2\n2 3\n1 3\n")
        code = run(["reduce", "--problem", "vc", str(path)])
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("p cnf 3 3")
        assert "1 2 0" in out

    def test_bad_dimacs_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "bad.cnf"
        path.write_text("p cnf 1 1\n2 0\n")
        assert run(["diameter", str(path)]) == 2


class TestDiverseMin:
    def test_hitting_set(self, tmp_path, capsys):
        path = tmp_path / "fam.txt"
        path.write_text("1 2\n3 4\n")
        code = run(
            [
                "diverse-min",
                "--problem",
                "hs",
                "--s",
                "2",
                "--delta",
                "1/2",
                "--effort",
                "2",
                str(path),
            ]
        )
        data = capture(capsys)
        assert code == 0
        assert data["values"]["minPD"] >= 1
        assert all(size <= 3 for size in data["values"]["sizes"])


class TestEstimateRuntime:
    def test_table_value(self, capsys):
        code = run(
            ["estimate-runtime", "--c", "3.592", "--alpha", "1", "--delta", "0.5"]
        )
        data = capture(capsys)
        assert code == 0
        assert round(data["values"]["base"], 4) == 1.6420

    def test_variant_path(self, capsys):
        code = run(
            ["estimate-runtime", "--k", "3", "--variant", "v1", "--delta", "1/2",
             "--n", "30"]
        )
        data = capture(capsys)
        assert code == 0
        assert data["values"]["R"] == 3


class TestProbe:
    def test_zero_trials_header_only(self, capsys):
        code = run(["probe-speedup", "--trials", "0", "--n", "8", "--k", "3"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines()[0] == (
            "trial,algo,iterations,planted_count,min_separation"
        )
        assert len(out.splitlines()) == 1

    def test_rows_and_columns(self):
        rows = probe_speedup(8, 3, 24, 2, 3, seed=1, effort=1.0)
        assert len(rows) == 6
        assert {r["algo"] for r in rows} == {"ppz", "schoening"}
        assert all(r["min_separation"] == 4 for r in rows)
        assert all(r["iterations"] >= 1 for r in rows)


class TestDeterminism:
    def test_identical_argv_identical_json(self, or2, capsys):
        argv = ["disperse", "--s", "2", "--algo", "ppz", "--seed", "11", or2]
        run(argv)
        first = capture(capsys)
        run(argv)
        second = capture(capsys)
        first.pop("wall_time_ms")
        second.pop("wall_time_ms")
        assert first == second

    def test_text_format(self, or2, capsys):
        code = run(["diameter", "--format", "text", or2])
        out = capsys.readouterr().out
        assert code == 0
        assert "status: OK" in out
        assert "distance: 2" in out
