"""Bounded construction of the Nerode automaton of a weighted finite automaton.

The states are the distinct reached vectors sigma_u, discovered breadth
first with successors in alphabet order, so state numbering is canonical
and every stored witness word is a shortest one.  The reachable set may be
infinite; exploration stops once more than ``max_states`` vectors appear.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .linalg import Vector, dot, vec_mat_mul
from .wavs import LinearityReport, Wavs, linearity_check
from .wfa import Wfa

DEFAULT_MAX_STATES = 10_000


class Status(str, enum.Enum):
    COMPLETE = "complete"
    EXHAUSTED = "budget-exhausted"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NerodeResult:
    source: Wfa
    status: Status
    states: tuple
    words: tuple
    automaton: Optional[Wavs] = None

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    @property
    def explored(self) -> int:
        return len(self.states)


def explore(sigma: Vector, matrices, max_states: int):
    """Breadth-first closure of ``sigma`` under v -> v @ M for each M.

    Returns (states, words, trans); ``trans`` is None when more than
    ``max_states`` distinct vectors turned up.
    """
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    index = {sigma: 0}
    states, words, trans = [sigma], [()], []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for k, m in enumerate(matrices):
            nxt = vec_mat_mul(states[i], m)
            j = index.get(nxt)
            if j is None:
                j = len(states)
                index[nxt] = j
                states.append(nxt)
                words.append(words[i] + (k,))
                if len(states) > max_states:
                    return tuple(states), tuple(words), None
                queue.append(j)
            row.append(j)
        trans.append(tuple(row))
    return tuple(states), tuple(words), tuple(trans)


def nerode(a: Wfa, max_states: int = DEFAULT_MAX_STATES) -> NerodeResult:
    states, words, trans = explore(a.sigma, a.matrices, max_states)
    if trans is None:
        return NerodeResult(a, Status.EXHAUSTED, states, words)
    theta = [dot(s, a.tau) for s in states]
    automaton = Wavs(a.alphabet, states, 0, trans, theta)
    return NerodeResult(a, Status.COMPLETE, states, words, automaton)


def nerode_is_linear(r: NerodeResult) -> LinearityReport:
    """Linearity report of a complete Nerode automaton; the verdict is always linear."""
    if not r.complete:
        raise PreconditionError(f"Nerode construction is {r.status}, not complete")
    return linearity_check(r.automaton)
