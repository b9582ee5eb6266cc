"""Finite weighted automata whose states are vectors of Q^n.

The transition function is stored as a table between state indices, so the
state set is closed under every transition by construction.  The main
entry point beyond the semantics is :func:`linearity_check`, which decides
whether the transitions and terminal weights are restrictions of linear
maps by comparing the rank of the state matrix with the rank of the
augmented matrix [state | destination_1 | ... | destination_s | terminal].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import LinearityError, ValidationError
from .linalg import (
    Matrix,
    Vector,
    augment,
    column_matrix,
    format_rational,
    mat_mul,
    mat_vec_mul,
    max_norm,
    rank,
    rref,
    solve_right,
    solve_right_vector,
    to_rational,
)
from .wfa import Wfa
from .words import Alphabet, WordLike


@dataclass(frozen=True)
class Wavs:
    alphabet: Alphabet
    states: tuple
    initial: int
    trans: tuple
    theta: tuple

    def __init__(self, alphabet, states, initial: int, trans, theta):
        """``trans[i]`` is either a mapping letter -> target index or a sequence
        of target indices in alphabet order."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        states = tuple(s if isinstance(s, Vector) else Vector(s) for s in states)
        if not states:
            raise ValidationError("a vector-state automaton needs at least one state")
        dim = len(states[0])
        for i, s in enumerate(states):
            if len(s) != dim:
                raise ValidationError(f"state {i} has length {len(s)}, expected {dim}")
        seen = {}
        for i, s in enumerate(states):
            if s in seen:
                raise ValidationError(f"states {seen[s]} and {i} are the same vector")
            seen[s] = i
        m = len(states)
        if isinstance(initial, bool) or not isinstance(initial, int) or not 0 <= initial < m:
            raise ValidationError(f"initial index {initial!r} out of range 0..{m - 1}")
        if len(trans) != m:
            raise ValidationError(f"transition table has {len(trans)} rows for {m} states")
        table = []
        for i, row in enumerate(trans):
            if isinstance(row, Mapping):
                missing = [a for a in alphabet if a not in row]
                if missing:
                    raise ValidationError(f"state {i} has no transition on {', '.join(missing)}")
                extra = [a for a in row if a not in alphabet.letters]
                if extra:
                    raise ValidationError(f"state {i} has transitions on unknown letters {', '.join(map(str, extra))}")
                row = [row[a] for a in alphabet]
            row = tuple(row)
            if len(row) != len(alphabet):
                raise ValidationError(f"state {i} has {len(row)} transitions for {len(alphabet)} letters")
            for a, t in zip(alphabet, row):
                if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t < m:
                    raise ValidationError(f"state {i} on {a!r} goes to {t!r}, not a state index")
            table.append(row)
        theta = tuple(to_rational(t) for t in theta)
        if len(theta) != m:
            raise ValidationError(f"{len(theta)} terminal weights for {m} states")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "trans", tuple(table))
        object.__setattr__(self, "theta", theta)

    @property
    def dim(self) -> int:
        return len(self.states[0])

    @property
    def sigma(self) -> Vector:
        return self.states[self.initial]

    def __len__(self) -> int:
        return len(self.states)

    def index_of(self, v: Vector) -> Optional[int]:
        try:
            return self.states.index(v)
        except ValueError:
            return None


def walk(a: Wavs, u: WordLike, start: Optional[int] = None) -> int:
    """Index of the state reached from ``start`` (default: the initial state)."""
    i = a.initial if start is None else start
    for x in a.alphabet.encode(u):
        i = a.trans[i][x]
    return i


def delta_star(a: Wavs, u: WordLike) -> Vector:
    return a.states[walk(a, u)]


def behavior(a: Wavs, u: WordLike) -> Fraction:
    return a.theta[walk(a, u)]


def generated(a: Wavs, u: WordLike) -> Fraction:
    return max_norm(delta_star(a, u))


def build_test_matrices(a: Wavs):
    """(state matrix, {letter: destination matrix}, terminal vector)."""
    state_matrix = Matrix.from_rows(a.states)
    destinations = {
        x: Matrix.from_rows([a.states[row[k]] for row in a.trans])
        for k, x in enumerate(a.alphabet)
    }
    return state_matrix, destinations, Vector(a.theta)


@dataclass(frozen=True)
class LinearityReport:
    linear: bool
    state_matrix: Matrix
    destination_matrices: dict
    terminal_vector: Vector
    rank_state: int
    rank_augmented: int
    augmented: Matrix
    reduced: Matrix
    transition_matrices: Optional[dict] = None
    terminal_weights: Optional[Vector] = None

    @property
    def verdict(self) -> str:
        return "linear" if self.linear else "nonlinear"

    def format(self) -> str:
        n = self.state_matrix.ncols
        widths = [n] * (1 + len(self.destination_matrices)) + [1]
        head = ["state"] + [f"dest[{x}]" for x in self.destination_matrices] + ["terminal"]
        lines = [
            f"states: {self.state_matrix.nrows}, dimension: {n}, "
            f"letters: {', '.join(self.destination_matrices)}",
            "augmented matrix [" + " | ".join(head) + "]:",
        ]
        lines += _format_blocks(self.augmented, widths)
        lines.append("reduced row echelon form:")
        lines += _format_blocks(self.reduced, widths)
        lines.append(f"rank(state matrix) = {self.rank_state}")
        lines.append(f"rank(augmented matrix) = {self.rank_augmented}")
        lines.append(f"verdict: {self.verdict}")
        if self.linear:
            for x, m in self.transition_matrices.items():
                lines.append(f"transition matrix for {x}:")
                lines += ["  " + " ".join(format_rational(e) for e in row) for row in m.rows]
            lines.append(
                "terminal weights: " + " ".join(format_rational(e) for e in self.terminal_weights)
            )
        return "\n".join(lines) + "\n"


def _format_blocks(m: Matrix, widths: Sequence[int]) -> list:
    cells = [[format_rational(e) for e in row] for row in m.rows]
    w = max(len(c) for row in cells for c in row)
    out = []
    for row in cells:
        parts, k = [], 0
        for width in widths:
            parts.append(" ".join(c.rjust(w) for c in row[k : k + width]))
            k += width
        out.append("  " + " | ".join(parts))
    return out


def linearity_check(a: Wavs) -> LinearityReport:
    state_matrix, destinations, terminal = build_test_matrices(a)
    blocks = [state_matrix, *destinations.values(), column_matrix(terminal)]
    augmented = augment(blocks)
    reduced = rref(augmented)
    rank_state = rank(state_matrix)
    rank_aug = sum(1 for row in reduced.rows if any(row))
    linear = rank_state == rank_aug
    witness_m = witness_tau = None
    if linear:
        witness_m = {}
        for x, dest in destinations.items():
            mx = solve_right(state_matrix, dest)
            if mx is None or mat_mul(state_matrix, mx) != dest:
                raise AssertionError(f"equal ranks but no transition matrix for {x!r}")
            witness_m[x] = mx
        witness_tau = solve_right_vector(state_matrix, terminal)
        if witness_tau is None or mat_vec_mul(state_matrix, witness_tau) != terminal:
            raise AssertionError("equal ranks but no terminal weight vector")
    return LinearityReport(
        linear=linear,
        state_matrix=state_matrix,
        destination_matrices=destinations,
        terminal_vector=terminal,
        rank_state=rank_state,
        rank_augmented=rank_aug,
        augmented=augmented,
        reduced=reduced,
        transition_matrices=witness_m,
        terminal_weights=witness_tau,
    )


def to_wfa(a: Wavs, report: Optional[LinearityReport] = None) -> Wfa:
    """The weighted finite automaton (sigma, M_x, tau) of a linear automaton.

    Its reached vector after any word is exactly the vector state reached
    here, so both the behavior and the generated function carry over.
    """
    if report is None:
        report = linearity_check(a)
    if not report.linear:
        raise LinearityError(
            f"automaton is nonlinear: rank {report.rank_state} vs augmented rank {report.rank_augmented}",
            report,
        )
    return Wfa(a.alphabet, a.sigma, report.transition_matrices, report.terminal_weights)
