import json

import pytest

from braidket.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBracketCommand:
    def test_trefoil(self, capsys):
        code, out, _ = run_cli(capsys, ["bracket", "--strands", "2", "--word", "1 1 1"])
        assert code == 0
        assert out == "-A^5 - A^-3 + A^-7\n"

    def test_unknot(self, capsys):
        code, out, _ = run_cli(capsys, ["bracket", "--strands", "1", "--word", ""])
        assert code == 0
        assert out == "1\n"

    def test_check_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, ["bracket", "--strands", "3", "--word", "1 -2 1", "--check"]
        )
        assert code == 0

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, ["bracket", "--strands", "2", "--word", "1 1 1", "--json"]
        )
        assert code == 0
        assert json.loads(out) == {"bracket": [[5, -1, 0], [-3, -1, 0], [-7, 1, 0]]}

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, ["bracket", "--strands", "3", "--word", "3"])
        assert code == 1
        assert "token 1" in err

    def test_requires_one_source(self, capsys):
        code, _, err = run_cli(capsys, ["bracket", "--strands", "2"])
        assert code == 1
        assert "input source" in err

    def test_pd_file_input(self, capsys, tmp_path):
        pd = {
            "crossings": [
                {"slots": [1, 4, 2, 5], "sign": -1},
                {"slots": [3, 6, 4, 1], "sign": -1},
                {"slots": [5, 2, 6, 3], "sign": -1},
            ],
            "free_loops": 0,
        }
        path = tmp_path / "trefoil.json"
        path.write_text(json.dumps(pd))
        code, out, _ = run_cli(capsys, ["bracket", "--pd", str(path)])
        assert code == 0
        assert out == "A^7 - A^3 - A^-5\n"

    def test_size_guard_exit_code(self, capsys):
        word = " ".join(["1"] * 29)
        code, _, err = run_cli(capsys, ["bracket", "--strands", "2", "--word", word, "--check"])
        assert code == 2
        assert "crossing" in err


class TestJonesCommand:
    def test_trefoil_lines(self, capsys):
        code, out, _ = run_cli(capsys, ["jones", "--strands", "2", "--word", "1 1 1"])
        assert code == 0
        assert out.splitlines() == [
            "bracket: -A^5 - A^-3 + A^-7",
            "writhe: 3",
            "f: A^-4 + A^-12 - A^-16",
            "V: t + t^3 - t^4",
        ]

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, ["jones", "--strands", "2", "--word", "1 1 1", "--json"]
        )
        data = json.loads(out)
        assert code == 0
        assert data["writhe"] == 3
        assert data["f"] == [[-4, 1, 0], [-12, 1, 0], [-16, -1, 0]]
        assert data["V"] == [[4, 1, 0], [12, 1, 0], [16, -1, 0]]

    def test_byte_stability(self, capsys):
        first = run_cli(capsys, ["jones", "--strands", "3", "--word", "1 -2 1", "--json"])
        second = run_cli(capsys, ["jones", "--strands", "3", "--word", "1 -2 1", "--json"])
        assert first == second


class TestQsimCommand:
    def test_report_schema(self, capsys):
        code, out, _ = run_cli(
            capsys,
            [
                "qsim",
                "--theta",
                "0.314159",
                "--word",
                "1",
                "--prepare",
                "0",
                "--shots",
                "1000",
                "--seed",
                "42",
            ],
        )
        assert code == 0
        report = json.loads(out)
        assert list(report) == [
            "theta",
            "word",
            "prepare",
            "shots",
            "seed",
            "counts",
            "estimates",
            "exact",
        ]
        # rho(sigma_1) is diagonal and unitary: preparing |0> stays on index 0
        assert report["counts"] == [1000, 0]
        assert report["exact"][0][0] == pytest.approx(1.0)

    def test_identity_evolution(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["qsim", "--theta", "0", "--word", "", "--prepare", "1", "--shots", "10", "--seed", "1"],
        )
        assert code == 0
        assert json.loads(out)["counts"] == [0, 10]

    def test_invalid_angle_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, ["qsim", "--theta", "1.0", "--word", "1", "--shots", "10", "--seed", "1"]
        )
        assert code == 4
        assert "delta^2" in err

    def test_determinism(self, capsys):
        argv = ["qsim", "--theta", "0.2", "--word", "1 2", "--shots", "500", "--seed", "7"]
        assert run_cli(capsys, argv) == run_cli(capsys, argv)


class TestVerifyCommand:
    def test_passes_at_small_n(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "--n", "2"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 10
        assert all(line.endswith(": pass") for line in lines)

    def test_default_n(self, capsys):
        code, out, _ = run_cli(capsys, ["verify"])
        assert code == 0

    def test_size_guard(self, capsys):
        code, _, err = run_cli(capsys, ["verify", "--n", "9"])
        assert code == 2
        assert "n <= 5" in err

    def test_rejects_tiny_n(self, capsys):
        code, _, _ = run_cli(capsys, ["verify", "--n", "1"])
        assert code == 1
