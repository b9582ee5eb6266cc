import random
from fractions import Fraction
from pathlib import Path

import pytest

from realwa import cdwa
from realwa.errors import DocumentError
from realwa.formats import Document, load, parse, serialize
from realwa.generate import random_cdwa, random_linear_wavs, random_wavs, random_wfa
from realwa.linalg import Matrix, Vector

DATA = Path(__file__).parent / "data"
VALID = sorted((DATA / "valid").glob("*.json"))

# file -> (where, message fragment)
INVALID = {
    "syntax.json": ("line 2, column 10", "Expecting ','"),
    "not_object.json": ("document", "expected an object"),
    "unknown_kind.json": ("kind", "got 'pda'"),
    "missing_field.json": ("matrices", "missing field"),
    "extra_field.json": ("cols", "unexpected field"),
    "wfa_2x3.json": ("matrices.x", "matrix for letter 'x' is 2x3, expected 2x2"),
    "wfa_sigma_length.json": ("sigma", "expected 2 entries, got 1"),
    "wfa_missing_letter.json": ("matrices", "missing letter 'y'"),
    "wfa_unknown_letter.json": ("matrices", "unknown letter 'z'"),
    "ragged.json": ("rows", "rows of different lengths"),
    "bad_number.json": ("sigma[0]", "'abc' is not an exact number"),
    "zero_denominator.json": ("matrices.x[0][0]", "not an exact number"),
    "boolean.json": ("sigma[0]", "expected a number, got true"),
    "dup_letters.json": ("alphabet", "duplicate letters: x"),
    "empty_alphabet.json": ("alphabet", "alphabet is empty"),
    "cdwa_not_total.json": ("delta.p", "missing letter 'y'"),
    "cdwa_bad_target.json": ("delta.p.x", "'r' is not a state"),
    "cdwa_bad_initial.json": ("initial", "'r' is not a state"),
    "cdwa_missing_theta.json": ("theta", "no weight for state 'q'"),
    "wavs_duplicate_state.json": ("states[1]", "repeats states[0]"),
    "wavs_index_range.json": ("trans[0].x", "index 3 out of range"),
    "wavs_state_length.json": ("states[1]", "expected 2 entries"),
    "wavs_theta_count.json": ("theta", "2 weights for 1 states"),
    "wavs_labels_count.json": ("labels", "0 labels for 1 states"),
}


def test_corpus_size():
    kinds = {load(p).kind for p in VALID}
    assert kinds == {"wfa", "cdwa", "wavs", "matrix"}
    assert len(VALID) + len(INVALID) >= 20
    assert sorted(p.name for p in (DATA / "invalid").glob("*.json")) == sorted(INVALID)


@pytest.mark.parametrize("path", VALID, ids=lambda p: p.name)
def test_round_trip(path):
    doc = load(path)
    text = serialize(doc)
    again = parse(text)
    assert again == doc
    assert serialize(again) == text


@pytest.mark.parametrize("name", sorted(INVALID))
def test_diagnostics(name):
    where, fragment = INVALID[name]
    with pytest.raises(DocumentError) as info:
        load(DATA / "invalid" / name)
    assert info.value.where == where
    assert fragment in info.value.detail


def test_decimals_exact():
    doc = load(DATA / "valid" / "decimals.json")
    a = doc.body
    assert a.sigma == Vector([Fraction(1, 4), Fraction(1, 2)])
    assert a.tau[0] == Fraction(1, 10)
    assert a.matrices[1][0, 1] == Fraction(7, 4)


def test_canonical_strings():
    text = serialize(load(DATA / "valid" / "decimals.json"))
    assert '"1/4"' in text and '"7/4"' in text and '"1/10"' in text
    assert "0.25" not in text


def test_letter_order_follows_alphabet():
    a = load(DATA / "valid" / "long_letters.json").body
    assert a.matrix("ab") == Matrix([[-1]])
    text = serialize(a)
    assert text.index('"ab"') < text.index('"c": [')


def test_labels_survive():
    doc = load(DATA / "valid" / "swap_wavs.json")
    assert doc.labels == ("@", "x")
    assert "labels" in serialize(doc)


def test_random_round_trips():
    rng = random.Random(11)
    for _ in range(40):
        for body in (random_wfa(rng), random_cdwa(rng), random_wavs(rng), random_linear_wavs(rng)):
            doc = Document(body)
            assert parse(serialize(doc)) == doc
    d = random_cdwa(rng)
    assert parse(serialize(cdwa.to_wavs(d))).body == cdwa.to_wavs(d)
