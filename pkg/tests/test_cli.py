"""Tests for the command-line front end."""

import argparse
import json
import logging
from pathlib import Path

import pytest

from gradedbezout import logging_config
from gradedbezout.cli import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK, main, parse_orders

FIXTURES = Path(__file__).parent / "fixtures"
NON_HOMOGENEOUS = (
    '{"m": 2, "generators": [{"terms": [{"exp": [2, 0]}, {"exp": [1, 0]}]}]}'
)


@pytest.fixture(autouse=True)
def fresh_logging():
    """Let every run configure logging against the current capture streams."""
    logging_config._logging_configured = False
    yield
    logging.getLogger("gradedbezout").handlers.clear()
    logging_config._logging_configured = False


@pytest.fixture
def run(capsys):
    """Run the CLI and return its exit status and decoded stdout."""

    def _run(*argv: str):
        status = main(list(argv))
        out = capsys.readouterr().out
        return status, json.loads(out)

    return _run


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def test_example_ex(run):
    """Test the codimension-3 witness reproduces its typical dimension."""
    status, payload = run("example-ex", "--k", "2")
    assert status == EXIT_OK
    assert payload == {"charpoly": 18, "expected": 18, "match": True}


def test_dimpoly_inline(run):
    """Test {(1,1)} gives 2*C(s+1,1) - 1 = 2s + 1."""
    status, payload = run(
        "dimpoly", "-i", '{"m": 2, "rows": [[1, 1]]}', "--verify-upto", "6"
    )
    assert status == EXIT_OK
    assert payload["polynomial"] == {"standard_coeffs": [2, -1]}
    assert payload["binomial_form"] == "2*C(s+1,1) - 1"
    assert payload["expanded_form"] == "2*s + 1"
    assert payload["stability_bound"] == 2
    assert payload["antichain"] == [[1, 1]]
    assert payload["verify"]["match"] is True
    assert [row["s"] for row in payload["verify"]["rows"]] == [2, 3, 4, 5, 6]


def test_dimpoly_text_input_and_output(capsys):
    """Test the text matrix format and the text renderer."""
    status = main(["dimpoly", "-i", fixture("pure_powers.txt"), "--format", "text"])
    out = capsys.readouterr().out
    assert status == EXIT_OK
    assert "polynomial: {\"standard_coeffs\": [4]}" in out
    assert "stability_bound: 4" in out


def test_mincoeffs_trace(run):
    """Test the minimizing sequence with its stages."""
    status, payload = run(
        "mincoeffs", "-i", fixture("quadratic_polynomial.json"), "--trace"
    )
    assert status == EXIT_OK
    assert payload["minimizing"] == [1, 1, 2]
    assert [stage["standard_coeffs"] for stage in payload["stages"]] == [
        [1, 1, 1],
        [1, 2],
        [2],
    ]


def test_in_w(run):
    """Test a negative constant is reported with its witness."""
    status, payload = run("in-w", "-i", '{"standard_coeffs": [1, -5]}')
    assert status == EXIT_OK
    assert payload["in_W"] is False
    assert payload["witness"] == {"index": 0, "value": -5}


def test_charpoly_module(run):
    """Test the module example with a rank-oracle cross-check."""
    status, payload = run(
        "charpoly", "-i", fixture("module_example.json"), "--verify-upto", "5"
    )
    assert status == EXIT_OK
    assert payload["charpoly"] == {"standard_coeffs": [1, 1]}
    assert payload["invariants"]["codimension"] == 0
    assert payload["invariants"]["typical_dimension"] == 1
    assert payload["verify"]["holds"] is True
    assert len(payload["groebner_basis"]) == 1


def test_charpoly_leader_form_default_window(run):
    """Test --verify-upto without a value uses the configured last degree."""
    status, payload = run(
        "charpoly", "-i", fixture("witness_k2.json"), "--verify-upto"
    )
    assert status == EXIT_OK
    assert payload["charpoly"] == {"standard_coeffs": [18]}
    assert [row["s"] for row in payload["verify"]["rows"]][-1] == 10
    assert "groebner_basis" not in payload


def test_bound_closed(run):
    """Test the closed codimension-3 form."""
    status, payload = run("bound", "--codim", "3", "--orders", "2")
    assert status == EXIT_OK
    assert payload["bound"] == 18
    assert payload["method"] == "closed"


def test_bound_general_trace(run):
    """Test the general derivation with its trace."""
    status, payload = run(
        "bound", "--codim", "2", "--orders", "3", "--general", "--trace"
    )
    assert status == EXIT_OK
    assert payload["bound"] == 9
    assert payload["derivation"]["b"] == [3, 0]
    assert payload["derivation"]["closed_bound"] == 9


def test_bound_general_without_trace(run):
    """Test the trace is omitted unless asked for."""
    status, payload = run("bound", "--codim", "2", "--orders", "3", "--general")
    assert status == EXIT_OK
    assert "derivation" not in payload


def test_bound_big_integers_are_strings(run):
    """Test bounds beyond 64 bits are written as decimal strings."""
    status, payload = run("bound", "--codim", "8", "--orders", "3", "--general")
    assert status == EXIT_OK
    assert isinstance(payload["bound"], str)
    assert int(payload["bound"]) > 2**63


@pytest.mark.parametrize(
    "argv, error_type",
    [
        (["bound", "--codim", "7", "--orders", "2"], "UnsupportedCodimError"),
        (
            ["bound", "--codim", "3", "--orders", "1,2"],
            "MultipleOrdersUnsupportedError",
        ),
        (["bound", "--codim", "2", "--orders", "1,2", "--general"], "InputError"),
        (["dimpoly", "-i", "no/such/file.json"], "InputError"),
        (["example-ex", "--k", "0"], "ValueError"),
        (["jacobi", "-i", '{"matrix": [[1, 2]]}'], "InputError"),
        (["charpoly", "-i", NON_HOMOGENEOUS], "NonHomogeneousInputError"),
        (["bound", "--codim", "1", "--orders", "a,b"], "InputError"),
        (["bound", "--codim", "1"], "InputError"),
        (["example-ex", "--k", "two"], "InputError"),
        (["dimpoly", "-i", "x.json", "--format", "xml"], "InputError"),
        (["no-such-command"], "InputError"),
        ([], "InputError"),
    ],
)
def test_errors_exit_one(run, argv, error_type):
    """Test failures print an error document and exit with 1."""
    status, payload = run(*argv)
    assert status == EXIT_ERROR
    assert payload["error"]["type"] == error_type


def test_jacobi(run):
    """Test the Jacobi number of a small matrix."""
    status, payload = run("jacobi", "-i", '{"matrix": [[1, 2], [3, 4]]}')
    assert status == EXIT_OK
    assert payload == {"jacobi_number": 5}


def test_verify_witness(run):
    """Test the witness meets its bound."""
    status, payload = run("verify", "-i", fixture("witness_k2.json"))
    assert status == EXIT_OK
    assert payload["holds"] is True
    assert payload["bound"] == payload["typical_dimension"] == 18


def test_verify_mismatch_exit_two(run):
    """Test a system exceeding the bound for its declared orders exits with 2."""
    status, payload = run("verify", "-i", fixture("understated_orders.json"))
    assert status == EXIT_MISMATCH
    assert payload["holds"] is False
    assert payload["typical_dimension"] == 6
    assert payload["bound"] == 1


def test_parse_orders():
    """Test order lists."""
    assert parse_orders("1, 2,3") == [1, 2, 3]
    with pytest.raises(argparse.ArgumentTypeError):
        parse_orders("1,-2")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_orders("a")


def test_charpoly_output_ignores_row_order(capsys):
    """Test permuted leader rows print byte-identical reports."""
    outputs = []
    for rows in ("[[2, 0], [0, 2], [3, 3]]", "[[3, 3], [0, 2], [2, 0]]"):
        text = '{"m": 2, "leader_matrices": [{"rows": ' + rows + "}]}"
        assert main(["charpoly", "-i", text]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["leader_matrices"] == [
        {"m": 2, "rows": [[0, 2], [2, 0]]}
    ]
