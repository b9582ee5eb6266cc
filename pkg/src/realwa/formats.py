"""JSON documents for automata and raw matrices.

Every document is an object with a ``kind`` field:

``wfa``     alphabet, n, sigma, matrices {letter: rows}, tau
``cdwa``    alphabet, states, initial, delta {state: {letter: state}}, theta {state: weight}
``wavs``    alphabet, dim, states [vectors], initial (index), trans [{letter: index}],
            theta [weights], optional labels [words]
``matrix``  rows

Numbers may be JSON integers, JSON decimals, or strings holding an
integer, a fraction "p/q" or a decimal; all are read exactly.  Output
always uses canonical fraction strings and a fixed field order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .cdwa import Cdwa
from .errors import DocumentError, RealwaError
from .linalg import Matrix, Vector
from .wavs import Wavs
from .wfa import Wfa
from .words import Alphabet

Automaton = Union[Wfa, Cdwa, Wavs]

_FIELDS = {
    "wfa": ("kind", "alphabet", "n", "sigma", "matrices", "tau"),
    "cdwa": ("kind", "alphabet", "states", "initial", "delta", "theta"),
    "wavs": ("kind", "alphabet", "dim", "states", "initial", "trans", "theta", "labels"),
    "matrix": ("kind", "rows"),
}
_OPTIONAL = {"labels"}


@dataclass(frozen=True)
class Document:
    body: Union[Wfa, Cdwa, Wavs, Matrix]
    labels: Optional[tuple] = None

    @property
    def kind(self) -> str:
        return {Wfa: "wfa", Cdwa: "cdwa", Wavs: "wavs", Matrix: "matrix"}[type(self.body)]


# ---------------------------------------------------------------- parsing


def _scalar(value, where: str) -> Fraction:
    if isinstance(value, bool) or value is None:
        raise DocumentError(where, f"expected a number, got {json.dumps(value)}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(where, f"{value!r} is not an exact number") from None
    raise DocumentError(where, f"expected a number, got {type(value).__name__}")


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(where, "expected a list")
    return value


def _object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError(where, "expected an object")
    return value


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(where, "expected an integer")
    return value


def _vector(value, where: str, length: Optional[int] = None) -> Vector:
    items = _list(value, where)
    if not items:
        raise DocumentError(where, "vector is empty")
    if length is not None and len(items) != length:
        raise DocumentError(where, f"expected {length} entries, got {len(items)}")
    return Vector(_scalar(x, f"{where}[{i}]") for i, x in enumerate(items))


def _matrix(value, where: str, shape: Optional[tuple] = None, label: str = "matrix") -> Matrix:
    rows = _list(value, where)
    if not rows:
        raise DocumentError(where, "matrix has no rows")
    parsed = [_vector(r, f"{where}[{i}]") for i, r in enumerate(rows)]
    widths = {len(r) for r in parsed}
    if len(widths) > 1:
        raise DocumentError(where, f"{label} has rows of different lengths {sorted(widths)}")
    m, n = len(parsed), len(parsed[0])
    if shape is not None and (m, n) != shape:
        raise DocumentError(where, f"{label} is {m}x{n}, expected {shape[0]}x{shape[1]}")
    return Matrix.from_rows(parsed)


def _alphabet(value) -> Alphabet:
    letters = _list(value, "alphabet")
    try:
        return Alphabet(letters)
    except RealwaError as e:
        raise DocumentError("alphabet", str(e)) from None


def _letter_keys(obj: dict, alphabet: Alphabet, where: str) -> None:
    missing = [a for a in alphabet if a not in obj]
    if missing:
        raise DocumentError(where, "missing letter " + ", ".join(repr(a) for a in missing))
    extra = [a for a in obj if a not in alphabet.letters]
    if extra:
        raise DocumentError(where, "unknown letter " + ", ".join(repr(a) for a in extra))


def _parse_wfa(doc: dict) -> Wfa:
    alphabet = _alphabet(doc["alphabet"])
    n = _int(doc["n"], "n")
    if n < 1:
        raise DocumentError("n", "dimension must be positive")
    sigma = _vector(doc["sigma"], "sigma", n)
    tau = _vector(doc["tau"], "tau", n)
    mats = _object(doc["matrices"], "matrices")
    _letter_keys(mats, alphabet, "matrices")
    matrices = [
        _matrix(mats[a], f"matrices.{a}", (n, n), label=f"matrix for letter {a!r}") for a in alphabet
    ]
    return Wfa(alphabet, sigma, matrices, tau)


def _parse_cdwa(doc: dict) -> Cdwa:
    alphabet = _alphabet(doc["alphabet"])
    states = _list(doc["states"], "states")
    if not states:
        raise DocumentError("states", "no states")
    for i, s in enumerate(states):
        if not isinstance(s, str) or not s:
            raise DocumentError(f"states[{i}]", "state names must be non-empty strings")
    if len(set(states)) != len(states):
        raise DocumentError("states", "duplicate state names")
    initial = doc["initial"]
    if initial not in states:
        raise DocumentError("initial", f"{initial!r} is not a state")
    delta = _object(doc["delta"], "delta")
    for s in delta:
        if s not in states:
            raise DocumentError("delta", f"unknown state {s!r}")
    table = {}
    for s in states:
        if s not in delta:
            raise DocumentError("delta", f"no transitions for state {s!r}")
        row = _object(delta[s], f"delta.{s}")
        _letter_keys(row, alphabet, f"delta.{s}")
        for a in alphabet:
            if row[a] not in states:
                raise DocumentError(f"delta.{s}.{a}", f"target {row[a]!r} is not a state")
            table[(s, a)] = row[a]
    theta_obj = _object(doc["theta"], "theta")
    for s in theta_obj:
        if s not in states:
            raise DocumentError("theta", f"unknown state {s!r}")
    theta = {}
    for s in states:
        if s not in theta_obj:
            raise DocumentError("theta", f"no weight for state {s!r}")
        theta[s] = _scalar(theta_obj[s], f"theta.{s}")
    return Cdwa(alphabet, states, initial, table, theta)


def _parse_wavs(doc: dict) -> tuple:
    alphabet = _alphabet(doc["alphabet"])
    dim = _int(doc["dim"], "dim")
    if dim < 1:
        raise DocumentError("dim", "dimension must be positive")
    raw_states = _list(doc["states"], "states")
    if not raw_states:
        raise DocumentError("states", "no states")
    states = [_vector(s, f"states[{i}]", dim) for i, s in enumerate(raw_states)]
    seen = {}
    for i, s in enumerate(states):
        if s in seen:
            raise DocumentError(f"states[{i}]", f"repeats states[{seen[s]}]")
        seen[s] = i
    m = len(states)
    initial = _int(doc["initial"], "initial")
    if not 0 <= initial < m:
        raise DocumentError("initial", f"index {initial} out of range 0..{m - 1}")
    trans = _list(doc["trans"], "trans")
    if len(trans) != m:
        raise DocumentError("trans", f"{len(trans)} rows for {m} states")
    table = []
    for i, row in enumerate(trans):
        row = _object(row, f"trans[{i}]")
        _letter_keys(row, alphabet, f"trans[{i}]")
        targets = []
        for a in alphabet:
            t = _int(row[a], f"trans[{i}].{a}")
            if not 0 <= t < m:
                raise DocumentError(f"trans[{i}].{a}", f"index {t} out of range 0..{m - 1}")
            targets.append(t)
        table.append(targets)
    theta_raw = _list(doc["theta"], "theta")
    if len(theta_raw) != m:
        raise DocumentError("theta", f"{len(theta_raw)} weights for {m} states")
    theta = [_scalar(t, f"theta[{i}]") for i, t in enumerate(theta_raw)]
    labels = None
    if "labels" in doc:
        raw = _list(doc["labels"], "labels")
        if len(raw) != m:
            raise DocumentError("labels", f"{len(raw)} labels for {m} states")
        for i, lab in enumerate(raw):
            if not isinstance(lab, str):
                raise DocumentError(f"labels[{i}]", "labels must be strings")
        labels = tuple(raw)
    return Wavs(alphabet, states, initial, table, theta), labels


def parse(text: str) -> Document:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise DocumentError(f"line {e.lineno}, column {e.colno}", e.msg) from None
    doc = _object(doc, "document")
    kind = doc.get("kind")
    if not isinstance(kind, str) or kind not in _FIELDS:
        raise DocumentError("kind", f"expected one of {', '.join(_FIELDS)}, got {kind!r}")
    fields = _FIELDS[kind]
    for f in doc:
        if f not in fields:
            raise DocumentError(f, f"unexpected field for a {kind} document")
    for f in fields:
        if f not in doc and f not in _OPTIONAL:
            raise DocumentError(f, "missing field")
    try:
        if kind == "wfa":
            return Document(_parse_wfa(doc))
        if kind == "cdwa":
            return Document(_parse_cdwa(doc))
        if kind == "wavs":
            body, labels = _parse_wavs(doc)
            return Document(body, labels)
        return Document(_matrix(doc["rows"], "rows"))
    except DocumentError:
        raise
    except RealwaError as e:
        # anything the constructors catch that the field checks above did not
        raise DocumentError(kind, str(e)) from None


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------- serialization


def _q(r: Fraction) -> str:
    return str(r)


def _vec(v: Vector) -> str:
    return json.dumps([_q(x) for x in v])


def _rows(m: Matrix, indent: str) -> str:
    inner = (",\n" + indent + "  ").join(json.dumps([_q(x) for x in row]) for row in m.rows)
    return "[\n" + indent + "  " + inner + "\n" + indent + "]"


def _obj(pairs: list, indent: str = "") -> str:
    inner = (",\n" + indent + "  ").join(f"{json.dumps(k)}: {v}" for k, v in pairs)
    return "{\n" + indent + "  " + inner + "\n" + indent + "}"


def serialize(doc: Union[Document, Wfa, Cdwa, Wavs, Matrix]) -> str:
    if not isinstance(doc, Document):
        doc = Document(doc)
    body = doc.body
    kind = doc.kind
    pairs = [("kind", json.dumps(kind))]
    if kind != "matrix":
        pairs.append(("alphabet", json.dumps(list(body.alphabet.letters))))
    if kind == "wfa":
        pairs += [
            ("n", str(body.dim)),
            ("sigma", _vec(body.sigma)),
            ("matrices", _obj([(a, _rows(m, "    ")) for a, m in zip(body.alphabet, body.matrices)], "  ")),
            ("tau", _vec(body.tau)),
        ]
    elif kind == "cdwa":
        pairs += [
            ("states", json.dumps(list(body.states))),
            ("initial", json.dumps(body.states[body.initial])),
            (
                "delta",
                _obj(
                    [
                        (s, json.dumps({a: body.states[t] for a, t in zip(body.alphabet, row)}))
                        for s, row in zip(body.states, body.trans)
                    ],
                    "  ",
                ),
            ),
            ("theta", json.dumps({s: _q(t) for s, t in zip(body.states, body.theta)})),
        ]
    elif kind == "wavs":
        pairs += [
            ("dim", str(body.dim)),
            ("states", _rows(Matrix.from_rows(body.states), "  ")),
            ("initial", str(body.initial)),
            (
                "trans",
                "[\n    "
                + ",\n    ".join(json.dumps(dict(zip(body.alphabet, row))) for row in body.trans)
                + "\n  ]",
            ),
            ("theta", json.dumps([_q(t) for t in body.theta])),
        ]
        if doc.labels is not None:
            pairs.append(("labels", json.dumps(list(doc.labels))))
    else:
        pairs.append(("rows", _rows(body, "  ")))
    return _obj(pairs) + "\n"
