import json
import subprocess
import sys

import pytest

from symchar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_char_json(capsys):
    code, out, _ = run_cli(capsys, "char", "--algebra", "A1", "--lambda", "2", "--N", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"] == "A1"
    assert payload["N"] == 4
    by_weight = {tuple(item["weight"]): item["mult"] for item in payload["character"]}
    assert by_weight[(0,)] == 3
    assert by_weight[(8,)] == 1
    assert len(by_weight) == 9


def test_char_text(capsys):
    code, out, _ = run_cli(
        capsys, "char", "--algebra", "A1", "--lambda", "2", "--N", "4", "--format", "text"
    )
    assert code == 0
    assert out.strip() == "q^8 + q^6 + 2*q^4 + 2*q^2 + 3 + 2*q^-2 + 2*q^-4 + q^-6 + q^-8"


def test_mult(capsys):
    code, out, _ = run_cli(
        capsys, "mult", "--algebra", "A1", "--lambda", "2", "--N", "4", "--mu", "2",
        "--format", "text",
    )
    assert code == 0
    assert out.strip() == "2"


def test_pfd_includes_order_two(capsys):
    code, out, _ = run_cli(capsys, "pfd", "--algebra", "A2", "--lambda", "1,1")
    assert code == 0
    payload = json.loads(out)
    orders = {(tuple(term["weight"]), term["order"]) for term in payload["terms"]}
    assert ((0, 0), 1) in orders
    assert ((0, 0), 2) in orders


def test_weights(capsys):
    code, out, _ = run_cli(capsys, "weights", "--algebra", "A2", "--lambda", "1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 8
    assert {"weight": [0, 0], "mult": 2} in payload["weights"]


def test_orbits(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--algebra", "A1", "--lambda", "3", "--N", "4")
    assert code == 0
    payload = json.loads(out)
    assert [s["dominant_weight"] for s in payload["summands"]] == [[1], [3]]


def test_vpart(capsys):
    code, out, _ = run_cli(
        capsys, "vpart", "--algebra", "A1", "--lambda", "2", "--max-n", "4"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == [[2, 0, -2], [1, 1, 1]]
    assert payload["all_pass"] is True


def test_verify_quick(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--case", "A1", "--max-n", "3", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert rows and all(row["status"] == "pass" for row in rows)
    checks = {row["check"] for row in rows}
    assert checks == {"coefficient-sum-1", "pfd-vs-molien", "pfd-vs-adams"}


def test_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "pfd", "--algebra", "A2", "--lambda", "1,1")
    _, second, _ = run_cli(capsys, "pfd", "--algebra", "A2", "--lambda", "1,1")
    assert first == second


class TestUserErrors:
    def test_unknown_algebra(self, capsys):
        code, _, err = run_cli(capsys, "char", "--algebra", "Z9", "--lambda", "1", "--N", "2")
        assert code == 1
        assert "label" in err

    def test_non_dominant_weight(self, capsys):
        code, _, err = run_cli(capsys, "char", "--algebra", "A1", "--lambda", "-2", "--N", "2")
        assert code == 1
        assert "dominant" in err

    def test_missing_degree(self, capsys):
        code, _, err = run_cli(capsys, "char", "--algebra", "A1", "--lambda", "2")
        assert code == 1

    def test_negative_degree(self, capsys):
        code, _, err = run_cli(capsys, "char", "--algebra", "A1", "--lambda", "2", "--N", "-3")
        assert code == 1

    def test_malformed_weight(self, capsys):
        code, _, err = run_cli(capsys, "char", "--algebra", "A2", "--lambda", "1", "--N", "2")
        assert code == 1
        assert "coordinates" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "symchar", "mult", "--algebra", "A1", "--lambda", "2",
         "--N", "4", "--mu", "0", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "3"
