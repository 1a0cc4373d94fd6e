import io
import json

import pytest

from szlenk.cli import EXIT_DOMAIN, EXIT_OK, EXIT_OVERFLOW, EXIT_SYNTAX, run


def _run(argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def _run_json(argv):
    code, out, _ = _run(["--json", *argv])
    assert code == EXIT_OK
    assert out.count("\n") == 1
    return json.loads(out)


GOLDEN = [
    (["eval", "w^(w^2)*3 + w*5 + 7"], EXIT_OK, "w^(w^2)*3 + w*5 + 7\n", ""),
    (["eval", "1 + w"], EXIT_OK, "w\n", ""),
    (["cmp", "w + 1", "1 + w"], EXIT_OK, ">\n", ""),
    (
        ["--json", "cmp", "3", "W1"],
        EXIT_OK,
        '{"command": "cmp", "left": {"terms": [{"coefficient": 3, "exponent": {"terms": [], "text": "0"}}], "text": "3"}, '
        '"result": "<", "right": {"atom": 1, "text": "W1"}}\n',
        "",
    ),
    (["sz", "w^(w^2)"], EXIT_OK, "w^3\n", ""),
    (["sz", "W1"], EXIT_OK, "w^(W1 + 1)\n", ""),
    (["dz", "w"], EXIT_OK, "w^2\n", ""),
    (["dz", "w^(w^w)"], EXIT_OK, "w^(w + 1)\n", ""),
    (["gamma", "w^w*5 + w*2"], EXIT_OK, "1\n", ""),
    (
        ["report", "w^w*5 + w*2"],
        EXIT_OK,
        "alpha: w^w*5 + w*2\ngamma: 1\nbracket: [w^w, w^(w^2))\nszlenk: w^2\ndentability: w^3\n",
        "",
    ),
    (["report", "5"], EXIT_OK, "alpha: 5\nszlenk: 1\n", ""),
    (["iso", "w", "w*2"], EXIT_OK, "isomorphic (beta < alpha^w = w^w)\n", ""),
    (["iso", "w", "w^w"], EXIT_OK, "not isomorphic (beta >= alpha^w = w^w)\n", ""),
    (["rep", "w^(w^2 + w)*4 + 1"], EXIT_OK, "w^(w^2)\n", ""),
    (["cb", "w^2*3 + w*2 + 1", "--stage", "1"], EXIT_OK, "stage 1: {w*eta : 1 <= eta <= w*3 + 2}\n", ""),
    (["cb", "w^(w^2)"], EXIT_OK, "height: w^2 + 1\n", ""),
    (["cb", "w", "--stage", "2", "--height"], EXIT_OK, "stage 2: empty\nheight: 2\n", ""),
    (["dirac", "w^2*3 + w*2"], EXIT_OK, "1\n", ""),
    (["decompose", "w^w", "w"], EXIT_OK, "C0(w^(w + 1)) ~ C0(w) (+) c0(w, C0(w^w))\n", ""),
    (
        ["normalize-space", "C0(w^2)", "--trace"],
        EXIT_OK,
        "1. R1 @ root: C0(w^2) => C0(w) (+) c0(w, C0(w))\n"
        "2. R2 @ root: C0(w) (+) c0(w, C0(w)) => c0(w, C0(w))\n"
        "c0(w, C0(w))\n",
        "",
    ),
    (["normalize-space", "C(w^(w*2))"], EXIT_OK, "c0(w^w, C0(w^w))\n", ""),
    (["bounds", "C0(w^w) (+) C0(w)"], EXIT_OK, "lower: w^2\nupper: w^2\nexact: true\nvia: normal form\n", ""),
    (["dz", "5"], EXIT_DOMAIN, "", "error: The w*-dentability index is only determined for alpha >= w (got 5).\n"),
    (["eval", "w^^2"], EXIT_SYNTAX, "", "error: expected an ordinal, found '^' at position 2\n"),
    (["eval", "2^64"], EXIT_OVERFLOW, "", "error: 2^64 exceeds the 64-bit coefficient range.\n"),
]


@pytest.mark.parametrize("argv, code, out, err", GOLDEN, ids=[" ".join(case[0]) for case in GOLDEN])
def test_golden_transcript(argv, code, out, err):
    assert _run(argv) == (code, out, err)


def test_nested_trace_positions():
    code, out, _ = _run(["normalize-space", "C0(w^3)", "--trace"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1].startswith("2. R1 @ 1.0: C0(w^2) => ")
    assert lines[3].startswith("4. R3 @ 1: ")
    assert lines[-1] == "c0(w, C0(w))"


def test_unknown_subcommand():
    code, out, err = _run(["frobnicate"])
    assert code == EXIT_SYNTAX
    assert out == ""
    assert "invalid choice" in err


def test_missing_argument():
    code, _, err = _run(["cmp", "w"])
    assert code == EXIT_SYNTAX
    assert err.startswith("usage: szlenk")


@pytest.mark.parametrize(
    "argv, message",
    [
        (["iso", "w", "W1"], "does not hold in general"),
        (["decompose", "w", "w^2"], "zeta <= xi fails: zeta = w^2, xi = w."),
        (["gamma", "7"], "gamma-bracket defined for infinite ordinals only"),
        (["bounds", "C0(w) (+) C(3)"], "all be >= w or all be finite"),
    ],
)
def test_domain_errors(argv, message):
    code, out, err = _run(argv)
    assert code == EXIT_DOMAIN
    assert out == ""
    assert message in err


def test_space_syntax_error_exit_code():
    code, _, err = _run(["bounds", "C0(w"])
    assert code == EXIT_SYNTAX
    assert "at position 4" in err


def test_power_with_too_many_terms_is_an_overflow():
    code, out, err = _run(["eval", "(w+1)^20000"])
    assert code == EXIT_OVERFLOW
    assert out == ""
    assert err == "error: (w + 1)^20000 would have 20001 terms, more than the limit of 10000.\n"


def test_json_ordinal_schema():
    payload = _run_json(["sz", "w"])
    omega = {
        "text": "w",
        "terms": [{"exponent": {"text": "1", "terms": [{"exponent": {"text": "0", "terms": []}, "coefficient": 1}]}, "coefficient": 1}],
    }
    assert payload == {"command": "sz", "alpha": omega, "szlenk": omega}


def test_json_flag_after_subcommand():
    code, out, _ = _run(["sz", "w", "--json"])
    assert code == EXIT_OK
    assert json.loads(out)["command"] == "sz"


def test_json_atom():
    assert _run_json(["eval", "W1"]) == {"command": "eval", "value": {"text": "W1", "atom": 1}}


def test_json_output_is_sorted_single_line():
    code, out, _ = _run(["--json", "report", "w^w"])
    assert code == EXIT_OK
    assert out == json.dumps(json.loads(out), sort_keys=True) + "\n"


def test_json_trace():
    payload = _run_json(["normalize-space", "C0(w^2)", "--trace"])
    assert payload["checked"] is True
    assert [step["rule"] for step in payload["steps"]] == ["R1", "R2"]
    assert payload["steps"][0] == {
        "rule": "R1",
        "position": [],
        "before": "C0(w^2)",
        "after": "C0(w) (+) c0(w, C0(w))",
    }
    assert payload["result"] == "c0(w, C0(w))"


def test_json_iso_and_bounds():
    verdict = _run_json(["iso", "w", "w*2"])
    assert verdict["isomorphic"] is True
    assert verdict["witness_pow"]["text"] == "w^w"
    bounds = _run_json(["bounds", "c0(w^w, C0(w))"])
    assert bounds["exact"] is False
    assert bounds["lower"]["text"] == "w"
    assert bounds["upper"]["text"] == "w^2"
    assert bounds["justification"] == "containment"


def test_json_stage_zero_descriptor():
    payload = _run_json(["cb", "w", "--stage", "0"])
    assert payload["descriptor"]["whole_interval"] is True
    assert payload["descriptor"]["description"] == "[0, w]"
    assert "height" not in payload


def test_output_is_deterministic():
    argv = ["--json", "normalize-space", "C(w^(w*3))", "--trace"]
    assert _run(argv) == _run(argv)
