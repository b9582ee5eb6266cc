"""Derivatives of the word function computed by a weighted finite automaton.

For f = behavior of ``a``, the derivative f_u is v -> f(uv) = sigma_u M_v tau.
Two derivatives f_u and f_v coincide exactly when sigma_u and sigma_v agree
on the forward space span{M_w tau}.  So a basis B of that space turns every
derivative into a finite key sigma_u B, and the derivative automaton is
built over those keys.

The prefix closure sup_v |f(uv)| is only ever reported exactly when the
Nerode construction finished; otherwise a bounded search gives a value
marked as a lower bound.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PreconditionError
from .linalg import Matrix, Vector, dot, mat_vec_mul, rank, vec_mat_mul
from .nerode import DEFAULT_MAX_STATES, NerodeResult, Status
from .wavs import Wavs
from .wfa import Wfa, behavior, reached_vector
from .words import WordLike

DEFAULT_HORIZON = 12


@dataclass(frozen=True)
class ObservabilityBasis:
    """Independent columns spanning span{M_w tau : w a word}.

    May be empty (d == 0), which happens exactly when f is identically zero.
    """

    columns: tuple
    n: int

    @property
    def d(self) -> int:
        return len(self.columns)

    @property
    def matrix(self) -> Optional[Matrix]:
        return Matrix.from_columns(self.columns) if self.columns else None

    def key(self, v: Vector) -> Vector:
        # Vectors cannot be empty, so the zero space keys everything to [0].
        if not self.columns:
            return Vector([0])
        return Vector(dot(v, c) for c in self.columns)


def observability_basis(a: Wfa) -> ObservabilityBasis:
    columns = []
    queue = deque([a.tau])
    while queue:
        c = queue.popleft()
        if c.is_zero():
            continue
        if columns and rank(Matrix.from_rows(columns + [c])) == len(columns):
            continue
        columns.append(c)
        for m in a.matrices:
            queue.append(mat_vec_mul(m, c))
    return ObservabilityBasis(tuple(columns), a.dim)


def derivative_value(a: Wfa, u: WordLike, v: WordLike) -> Fraction:
    return behavior(a, a.alphabet.encode(u) + a.alphabet.encode(v))


@dataclass(frozen=True)
class DerivativeAutomaton:
    source: Wfa
    basis: ObservabilityBasis
    status: Status
    states: tuple
    representatives: tuple
    automaton: Optional[Wavs] = None

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE


def derivative_automaton(
    a: Wfa,
    max_states: int = DEFAULT_MAX_STATES,
    basis: Optional[ObservabilityBasis] = None,
) -> DerivativeAutomaton:
    """States are derivatives f_u, one per distinct key, found breadth first."""
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    if basis is None:
        basis = observability_basis(a)
    first = basis.key(a.sigma)
    index = {first: 0}
    keys, reps, vectors = [first], [()], [a.sigma]
    trans = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for k, m in enumerate(a.matrices):
            v = vec_mat_mul(vectors[i], m)
            key = basis.key(v)
            j = index.get(key)
            if j is None:
                j = len(keys)
                index[key] = j
                keys.append(key)
                reps.append(reps[i] + (k,))
                vectors.append(v)
                if len(keys) > max_states:
                    return DerivativeAutomaton(a, basis, Status.EXHAUSTED, tuple(keys), tuple(reps))
                queue.append(j)
            row.append(j)
        trans.append(tuple(row))
    theta = [dot(v, a.tau) for v in vectors]
    automaton = Wavs(a.alphabet, keys, 0, trans, theta)
    return DerivativeAutomaton(a, basis, Status.COMPLETE, tuple(keys), tuple(reps), automaton)


@dataclass(frozen=True)
class PrefixClosure:
    value: Fraction
    exact: bool
    horizon: Optional[int] = None

    def __str__(self) -> str:
        if self.exact:
            return str(self.value)
        return f">= {self.value} (lower bound, words up to length {self.horizon})"


def bounded_sup(a: Wfa, start: Vector, horizon: int) -> Fraction:
    """max |v' @ tau| over v' reachable from ``start`` by words of length <= horizon."""
    frontier = {start}
    best = abs(dot(start, a.tau))
    for _ in range(horizon):
        frontier = {vec_mat_mul(v, m) for v in frontier for m in a.matrices}
        for v in frontier:
            best = max(best, abs(dot(v, a.tau)))
    return best


def prefix_closure(
    a: Wfa,
    u: WordLike,
    nerode_result: NerodeResult,
    horizon: int = DEFAULT_HORIZON,
) -> PrefixClosure:
    if nerode_result.source != a:
        raise PreconditionError("Nerode result was built from a different automaton")
    start = reached_vector(a, u)
    if not nerode_result.complete:
        return PrefixClosure(bounded_sup(a, start, horizon), exact=False, horizon=horizon)
    graph = nerode_result.automaton
    i = graph.index_of(start)
    seen = {i}
    stack = [i]
    while stack:
        j = stack.pop()
        for t in graph.trans[j]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return PrefixClosure(max(abs(graph.theta[j]) for j in seen), exact=True)


def minimality_gap(da: DerivativeAutomaton, nr: NerodeResult) -> tuple:
    """(derivative states, Nerode states); the first never exceeds the second."""
    if not da.complete:
        raise PreconditionError(f"derivative automaton is {da.status}")
    if not nr.complete:
        raise PreconditionError(f"Nerode construction is {nr.status}")
    d_states, n_states = len(da.states), len(nr.states)
    if d_states > n_states:
        raise AssertionError(f"derivative automaton has {d_states} states, Nerode only {n_states}")
    return d_states, n_states
