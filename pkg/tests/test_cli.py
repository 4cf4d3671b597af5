import json

import pytest

from conftest import seeded
from tnnlu import Mat, format_matrix, parse_matrix, random_tnn
from tnnlu.cli import main

CRYER_TEXT = "3 3\n0 0 0\n1 0 1\n1 0 1\n"
A4_INLINE = "0 1 2 1; 0 2 4 2; 0 1 2 3; 0 3 6 11"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_cryer_from_file(tmp_path, capsys):
    path = tmp_path / "cryer.mat"
    path.write_text(CRYER_TEXT, encoding="utf-8")
    code, out, err = run_cli(capsys, "decompose", str(path), "--format", "structured")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["class"] == {"r": [2], "c": [1]}
    assert payload["L"] == [["0"], ["1"], ["1"]]
    assert payload["U"] == [["1", "0", "1"]]


def test_decompose_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(CRYER_TEXT))
    code, out, _ = run_cli(capsys, "decompose", "-", "--format", "structured")
    assert code == 0
    assert json.loads(out)["class"] == {"r": [2], "c": [1]}


@pytest.mark.parametrize("method", ["auto", "explicit", "neville", "reconstruct"])
def test_methods_agree(capsys, method):
    code, out, _ = run_cli(
        capsys, "decompose", "--inline", A4_INLINE, "--method", method, "--format", "structured"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == method
    assert payload["class"] == {"r": [1, 3], "c": [2, 4]}
    assert payload["L"] == [["1", "0"], ["2", "0"], ["1", "1"], ["3", "4"]]
    assert payload["U"] == [["0", "1", "2", "1"], ["0", "0", "0", "2"]]


def test_trace_emitted_for_neville(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose", "--inline", A4_INLINE,
        "--method", "neville", "--trace", "--format", "structured",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["trace"] == ["E 3 2 3", "E 2 2 1/2", "E 1 2 2", "D 2", "E 2 4 1", "D 3"]


def test_trace_unavailable_for_explicit(capsys):
    code, out, _ = run_cli(
        capsys,
        "decompose", "--inline", A4_INLINE,
        "--method", "explicit", "--trace", "--format", "structured",
    )
    assert code == 0
    assert json.loads(out)["trace"] is None


def test_detect_reports_none_with_success_status(capsys):
    code, out, _ = run_cli(capsys, "detect", "--inline", "0 1; 1 1")
    assert code == 0
    assert out == "class: none\n"
    code, out, _ = run_cli(capsys, "detect", "--inline", "0 1; 1 1", "--format", "structured")
    assert code == 0
    assert json.loads(out)["class"] is None


def test_decompose_fails_when_no_class_exists(capsys):
    code, _, err = run_cli(capsys, "decompose", "--inline", "0 1; 1 1")
    assert code == 4
    assert "class-not-found" in err


def test_check_tnn_witness(capsys):
    code, out, _ = run_cli(capsys, "check-tnn", "--inline", "0 1; 1 1", "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_tnn"] is False
    assert payload["witness"] == {"rows": [1, 2], "cols": [1, 2], "minor": "-1"}


def test_check_tnn_text(capsys):
    code, out, _ = run_cli(capsys, "check-tnn", "--inline", "0 0; 0 0")
    assert code == 0
    assert out == "is_tnn: true\nwitness: none\n"


def test_neville_method_rejects_non_tnn(capsys):
    code, _, err = run_cli(capsys, "decompose", "--inline", "0 1; 1 0", "--method", "neville")
    assert code == 5
    assert "not-tnn" in err


def test_unchecked_skips_verification(capsys):
    # [[1,1],[1,0]] is in a class, so unchecked explicit still succeeds
    code, out, _ = run_cli(
        capsys, "decompose", "--inline", "1 1; 1 0", "--method", "explicit",
        "--unchecked", "--format", "structured",
    )
    assert code == 0
    assert json.loads(out)["class"] == {"r": [1, 2], "c": [1, 2]}


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "decompose", "--inline", "1 x; 2 3")
    assert code == 3
    assert "parse-error" in err


def test_missing_file_is_parse_error(capsys):
    code, _, err = run_cli(capsys, "detect", "/nonexistent/matrix.txt")
    assert code == 3
    assert "parse-error" in err


def test_size_guard_exit_code(capsys):
    rows = ";".join(" ".join("1" for _ in range(9)) for _ in range(9))
    code, _, err = run_cli(capsys, "check-tnn", "--inline", rows)
    assert code == 6
    assert "size-guard" in err
    code, out, _ = run_cli(capsys, "check-tnn", "--inline", rows, "--max-bruteforce", "9")
    assert code == 0


def test_generate_round_trips(capsys):
    code, out, _ = run_cli(capsys, "generate", "--size", "3", "4", "--seed", "11")
    assert code == 0
    A = parse_matrix(out)
    assert A == random_tnn(3, 4, seed=11)
    assert format_matrix(A) == out


def test_generate_structured(capsys):
    code, out, _ = run_cli(
        capsys, "generate", "--size", "2", "2", "--seed", "3", "--format", "structured"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == 2 and payload["cols"] == 2
    rebuilt = Mat.from_rows([[x for x in row] for row in payload["matrix"]])
    assert rebuilt == random_tnn(2, 2, seed=3)


def test_identities_selftest(capsys):
    code, out, _ = run_cli(
        capsys, "identities-selftest", "--instances", "5", "--format", "structured"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(entry["failures"] == 0 for entry in payload["results"].values())


def test_output_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run_cli(
            capsys, "decompose", "--inline", A4_INLINE, "--trace", "--format", "structured"
        )
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_cli_round_trip_on_corpus(capsys):
    rng = seeded(14)
    for _ in range(10):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        seed = rng.randint(0, 10**6)
        code, out, _ = run_cli(
            capsys, "generate", "--size", str(m), str(n), "--seed", str(seed)
        )
        assert code == 0
        assert parse_matrix(out) == random_tnn(m, n, seed=seed)
