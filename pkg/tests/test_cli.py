from pathlib import Path

import pytest

from realwa.cli import main
from realwa.formats import load, parse
from realwa.oracle import complete_equiv_bounded, language_equiv_bounded

HERE = Path(__file__).parent
VALID = HERE / "data" / "valid"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_linearity_golden(capsys):
    code, out, _ = run(capsys, "linearity", VALID / "nonlinear3.json")
    assert code == 3
    assert out == (GOLDEN / "nonlinear3_linearity.txt").read_text()
    assert "rank(state matrix) = 2" in out and "rank(augmented matrix) = 3" in out


def test_linearity_linear(capsys):
    code, out, _ = run(capsys, "linearity", VALID / "swap_wavs.json")
    assert code == 0
    assert "verdict: linear" in out
    assert "transition matrix for x:" in out


def test_eval_swap(capsys):
    code, out, _ = run(capsys, "eval", VALID / "swap.json", "xx")
    assert code == 0
    assert out == "behavior: 1\ngenerated: 1\n"


def test_eval_cdwa_and_long_letters(capsys):
    assert run(capsys, "eval", VALID / "cdwa3.json", "@")[1] == "behavior: 0\n"
    code, out, _ = run(capsys, "eval", VALID / "long_letters.json", "ab,c,c")
    assert out.startswith("behavior: -12\n")


def test_eval_unknown_letter(capsys):
    code, _, err = run(capsys, "eval", VALID / "swap.json", "xq")
    assert code == 2
    assert "'q'" in err


def test_nerode_round_trip_and_equiv(capsys, tmp_path):
    out_file = tmp_path / "nerode_swap.json"
    code, _, err = run(capsys, "nerode", VALID / "swap.json", "-o", out_file)
    assert code == 0 and "complete" in err
    doc = load(out_file)
    assert doc.labels == ("@", "x")
    assert complete_equiv_bounded(load(VALID / "swap.json").body, doc.body, 8) is None
    code, out, _ = run(capsys, "equiv", VALID / "swap.json", out_file, "--complete", "--max-len", 8)
    assert code == 0 and out.startswith("equal")


def test_nerode_stdout_reparses(capsys):
    code, out, _ = run(capsys, "nerode", VALID / "collapsing.json")
    assert code == 0
    assert len(parse(out).body) == 3


def test_nerode_table(capsys):
    code, out, _ = run(capsys, "nerode", VALID / "collapsing.json", "--table")
    assert out.split("\n")[1:4] == ["    0  @", "    1  x", "    2  xx"]


def test_nerode_budget(capsys):
    code, out, err = run(capsys, "nerode", VALID / "counter.json", "--max-states", 30)
    assert code == 4
    assert out == "" and "budget-exhausted" in err


def test_to_wfa(capsys):
    code, out, _ = run(capsys, "to-wfa", VALID / "swap_wavs.json")
    assert code == 0
    assert parse(out).body == load(VALID / "swap.json").body
    code, out, err = run(capsys, "to-wfa", VALID / "nonlinear3.json")
    assert code == 3 and out == "" and "nonlinear" in err
    code, out, _ = run(capsys, "to-wfa", VALID / "cycle.json")
    assert language_equiv_bounded(parse(out).body, load(VALID / "cycle.json").body, 6) is None


def test_from_cdwa(capsys):
    code, out, _ = run(capsys, "from-cdwa", VALID / "cycle.json")
    assert code == 0
    w = parse(out).body
    assert [list(v) for v in w.states] == [[1, 0], [0, 1]]
    code, out, _ = run(capsys, "from-cdwa", VALID / "cdwa3.json", "--basis", VALID / "basis2.json")
    assert code == 2  # 2 vectors for 3 states
    code, out, _ = run(capsys, "from-cdwa", VALID / "cycle.json", "--basis", VALID / "basis2.json")
    assert code == 0
    assert language_equiv_bounded(parse(out).body, load(VALID / "cycle.json").body, 6) is None


def test_derivative(capsys):
    code, out, err = run(capsys, "derivative", VALID / "collapsing.json")
    assert code == 0 and "1 states" in err
    assert len(parse(out).body) == 1
    code, _, _ = run(capsys, "derivative", VALID / "counter.json", "--max-states", 20)
    assert code == 4


def test_prefix_closure(capsys):
    code, out, _ = run(capsys, "prefix-closure", VALID / "swap.json", "x")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "prefix-closure", VALID / "counter.json", "@", "--max-states", 20, "--horizon", 4)
    assert code == 0 and out.startswith(">= 4 (lower bound")
    code, _, _ = run(capsys, "prefix-closure", VALID / "counter.json", "@", "--max-states", 20, "--exact")
    assert code == 4


def test_equiv_counterexample(capsys):
    code, out, _ = run(capsys, "equiv", VALID / "swap.json", VALID / "counter.json")
    assert code == 3
    assert out == "counterexample: @ (behavior: 1 vs 0)\n"


def test_equiv_complete_needs_generated(capsys):
    code, _, err = run(capsys, "equiv", VALID / "cycle.json", VALID / "swap.json", "--complete")
    assert code == 2


def test_equiv_cdwa_vs_wfa(capsys):
    code, out, _ = run(capsys, "equiv", VALID / "cycle.json", VALID / "swap.json")
    assert code == 0


def test_rref(capsys):
    code, out, _ = run(capsys, "rref", VALID / "augmented.json")
    assert code == 0
    assert out.splitlines()[-2:] == ["   0  0  1 -1 -1 -1  1", "rank: 3"]


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["eval", "only-one-arg"], ["nerode", "f.json", "--max-states", "0"]],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_invalid_document_exit(capsys):
    code, _, err = run(capsys, "eval", HERE / "data" / "invalid" / "wfa_2x3.json", "x")
    assert code == 2
    assert "matrices.x" in err


def test_missing_file(capsys):
    code, _, _ = run(capsys, "eval", HERE / "nope.json", "x")
    assert code == 2


def test_wrong_kind(capsys):
    code, _, err = run(capsys, "linearity", VALID / "swap.json")
    assert code == 2 and "expected a wavs document" in err
