"""Crisp-deterministic weighted automata.

A single initial state, a total deterministic transition function and a
weight on every state.  All weights sit in the terminal function, so such
an automaton embeds into a weighted finite automaton with 0/1 transition
matrices, and into an automaton over any set of distinct vectors of the
right size.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import ConversionError, ValidationError
from .linalg import Matrix, Vector, to_rational
from .wavs import Wavs
from .wfa import Wfa
from .words import Alphabet, WordLike


@dataclass(frozen=True)
class Cdwa:
    alphabet: Alphabet
    states: tuple
    initial: int
    trans: tuple
    theta: tuple

    def __init__(self, alphabet, states: Sequence[str], initial, delta, theta):
        """``delta`` maps (state, letter) -> state, or state -> {letter: state}.
        ``theta`` maps state -> weight, or is a sequence in state order."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        states = tuple(states)
        if not states:
            raise ValidationError("a crisp-deterministic automaton needs at least one state")
        for s in states:
            if not isinstance(s, str) or not s:
                raise ValidationError(f"state name {s!r} is not a non-empty string")
        index = {}
        for i, s in enumerate(states):
            if s in index:
                raise ValidationError(f"duplicate state {s!r}")
            index[s] = i
        if initial not in index:
            raise ValidationError(f"initial state {initial!r} is not a state")
        table = []
        for s in states:
            row = []
            for x in alphabet:
                if (s, x) in delta:
                    t = delta[(s, x)]
                elif s in delta and isinstance(delta[s], Mapping) and x in delta[s]:
                    t = delta[s][x]
                else:
                    raise ValidationError(f"no transition from {s!r} on {x!r}")
                if t not in index:
                    raise ValidationError(f"transition from {s!r} on {x!r} goes to unknown state {t!r}")
                row.append(index[t])
            table.append(tuple(row))
        if isinstance(theta, Mapping):
            missing = [s for s in states if s not in theta]
            if missing:
                raise ValidationError(f"no terminal weight for {', '.join(missing)}")
            extra = [s for s in theta if s not in index]
            if extra:
                raise ValidationError(f"terminal weights for unknown states {', '.join(map(str, extra))}")
            theta = [theta[s] for s in states]
        theta = tuple(to_rational(t) for t in theta)
        if len(theta) != len(states):
            raise ValidationError(f"{len(theta)} terminal weights for {len(states)} states")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "initial", index[initial])
        object.__setattr__(self, "trans", tuple(table))
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_tables(cls, alphabet, states, initial: int, trans, theta) -> "Cdwa":
        """Build from index tables: ``trans[i][k]`` is the target of state i on letter k."""
        delta = {s: {x: states[t] for x, t in zip(alphabet, row)} for s, row in zip(states, trans)}
        return cls(alphabet, states, states[initial], delta, theta)

    def __len__(self) -> int:
        return len(self.states)

    def state_index(self, name: str) -> int:
        try:
            return self.states.index(name)
        except ValueError:
            raise ValidationError(f"unknown state {name!r}") from None

    def delta(self) -> dict:
        return {
            (s, x): self.states[t]
            for s, row in zip(self.states, self.trans)
            for x, t in zip(self.alphabet, row)
        }


def _walk(d: Cdwa, i: int, u: WordLike) -> int:
    for x in d.alphabet.encode(u):
        i = d.trans[i][x]
    return i


def delta_star(d: Cdwa, state: str, u: WordLike) -> str:
    return d.states[_walk(d, d.state_index(state), u)]


def behavior(d: Cdwa, u: WordLike) -> Fraction:
    return d.theta[_walk(d, d.initial, u)]


def to_wfa(d: Cdwa) -> Wfa:
    m = len(d.states)
    matrices = []
    for k in range(len(d.alphabet)):
        rows = [[0] * m for _ in range(m)]
        for i, row in enumerate(d.trans):
            rows[i][row[k]] = 1
        matrices.append(Matrix(rows))
    return Wfa(d.alphabet, Vector.basis(m, d.initial), matrices, Vector(d.theta))


def to_wavs(d: Cdwa, state_vectors: Optional[Sequence[Vector]] = None) -> Wavs:
    """Relabel the states of ``d`` by distinct vectors.

    ``state_vectors[i]`` stands for the i-th state; the default is the
    standard basis of Q^|D|.
    """
    m = len(d.states)
    if state_vectors is None:
        vectors = [Vector.basis(m, i) for i in range(m)]
    else:
        vectors = [v if isinstance(v, Vector) else Vector(v) for v in state_vectors]
        if len(vectors) != m:
            raise ConversionError(f"{len(vectors)} vectors given for {m} states")
        lengths = {len(v) for v in vectors}
        if len(lengths) != 1:
            raise ConversionError(f"state vectors have mixed lengths {sorted(lengths)}")
        if len(set(vectors)) != m:
            raise ConversionError("state vectors are not pairwise distinct")
    return Wavs(d.alphabet, vectors, d.initial, d.trans, d.theta)
