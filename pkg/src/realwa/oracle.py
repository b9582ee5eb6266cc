"""Naive reference computations used to certify the real constructions.

Nothing in the main modules calls into here.  These are deliberately slow:
the path sum is exponential in the word length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Optional

from .cdwa import Cdwa
from .errors import AlphabetError, ValidationError
from .linalg import Vector, dot, max_norm, solve_right, solve_right_vector, vec_mat_mul
from .wavs import Wavs, build_test_matrices
from .wfa import Wfa
from .words import Alphabet, Word, enumerate_words

__all__ = [
    "Counterexample",
    "behavior_pathsum",
    "brute_prefix_sup",
    "brute_prefix_sups",
    "complete_equiv_bounded",
    "enumerate_words",
    "equiv_bounded",
    "language_equiv_bounded",
    "linear_by_systems",
]


def behavior_pathsum(a: Wfa, u) -> Fraction:
    """Sum over every state sequence (a_0, ..., a_k) of the product of weights.

    Paths are expanded depth first; a prefix whose weight is already zero
    contributes nothing and is not extended.  Weights are scaled to integers
    over one common denominator so the inner loop avoids Fraction arithmetic.
    """
    word = a.alphabet.encode(u)
    n = a.dim
    den = 1
    for x in [a.sigma, a.tau, *(e for m in a.matrices for e in m.rows)]:
        for q in x:
            den = lcm(den, q.denominator)

    def scaled(row):
        return [int(q * den) for q in row]

    sigma, tau = scaled(a.sigma), scaled(a.tau)
    grids = [[scaled(r) for r in a.matrices[x].rows] for x in word]

    def extend(state: int, step: int, weight: int) -> int:
        if step == len(word):
            return weight * tau[state]
        row = grids[step][state]
        total = 0
        for nxt in range(n):
            if row[nxt]:
                total += extend(nxt, step + 1, weight * row[nxt])
        return total

    total = sum(extend(s, 0, sigma[s]) for s in range(n) if sigma[s])
    return Fraction(total, den ** (len(word) + 2))


@dataclass(frozen=True)
class Counterexample:
    word: Word
    which: str
    left: Fraction
    right: Fraction


def equiv_bounded(
    f: Callable[[Word], Fraction],
    g: Callable[[Word], Fraction],
    alphabet: Alphabet,
    max_len: int,
) -> Optional[Counterexample]:
    """First word (shortest, then alphabet order) where f and g differ, or None."""
    for u in enumerate_words(alphabet, max_len):
        left, right = f(u), g(u)
        if left != right:
            return Counterexample(u, "behavior", left, right)
    return None


def _cursor(a):
    """(initial state, step, behavior value, generated value) for a trie walk."""
    if isinstance(a, Wfa):
        return (
            a.sigma,
            lambda v, k: vec_mat_mul(v, a.matrices[k]),
            lambda v: dot(v, a.tau),
            max_norm,
        )
    if isinstance(a, Wavs):
        return (
            a.initial,
            lambda i, k: a.trans[i][k],
            lambda i: a.theta[i],
            lambda i: max_norm(a.states[i]),
        )
    if isinstance(a, Cdwa):
        return a.initial, lambda i, k: a.trans[i][k], lambda i: a.theta[i], None
    raise TypeError(f"not an automaton: {type(a).__name__}")


def _walk_both(a, b, max_len: int, complete: bool) -> Optional[Counterexample]:
    if set(a.alphabet.letters) != set(b.alphabet.letters):
        raise AlphabetError(
            f"alphabets differ: {list(a.alphabet.letters)} vs {list(b.alphabet.letters)}"
        )
    remap = [b.alphabet.index(x) for x in a.alphabet]
    sa, step_a, beh_a, gen_a = _cursor(a)
    sb, step_b, beh_b, gen_b = _cursor(b)
    if complete and (gen_a is None or gen_b is None):
        raise ValidationError("complete equivalence needs weighted finite or vector-state automata")
    level = [((), sa, sb)]
    for length in range(max_len + 1):
        for u, p, q in level:
            left, right = beh_a(p), beh_b(q)
            if left != right:
                return Counterexample(u, "behavior", left, right)
            if complete:
                left, right = gen_a(p), gen_b(q)
                if left != right:
                    return Counterexample(u, "generated", left, right)
        if length == max_len:
            break
        level = [
            (u + (k,), step_a(p, k), step_b(q, remap[k]))
            for u, p, q in level
            for k in range(len(a.alphabet))
        ]
    return None


def language_equiv_bounded(a, b, max_len: int) -> Optional[Counterexample]:
    """Compare behaviors of two automata of any kind on all words up to max_len."""
    return _walk_both(a, b, max_len, complete=False)


def complete_equiv_bounded(a, b, max_len: int) -> Optional[Counterexample]:
    """Compare both behavior and generated function; WFA or vector-state automata only."""
    return _walk_both(a, b, max_len, complete=True)


def linear_by_systems(a: Wavs) -> bool:
    """Linearity decided by solving each matrix equation on its own, no rank comparison."""
    state_matrix, destinations, terminal = build_test_matrices(a)
    for dest in destinations.values():
        if solve_right(state_matrix, dest) is None:
            return False
    return solve_right_vector(state_matrix, terminal) is not None


def brute_prefix_sups(a: Wfa, words, horizon: int) -> list:
    """max |f(uv)| over all words v with |v| <= horizon, for each u in ``words``.

    This is the recursion best(v, r) = max(|v.tau|, best(v M_x, r - 1) for each x),
    unrolled into a table indexed by depth and reached vector.  Vectors that
    coincide at the same depth share an entry, and all start words share
    one table.
    """
    starts = []
    for u in words:
        v = a.sigma
        for x in a.alphabet.encode(u):
            v = vec_mat_mul(v, a.matrices[x])
        starts.append(v)

    levels = [set(starts)]
    for _ in range(horizon):
        levels.append({vec_mat_mul(v, m) for v in levels[-1] for m in a.matrices})

    below = {v: abs(dot(v, a.tau)) for v in levels[horizon]}
    for depth in range(horizon - 1, -1, -1):
        below = {
            v: max(abs(dot(v, a.tau)), *(below[vec_mat_mul(v, m)] for m in a.matrices))
            for v in levels[depth]
        }
    return [below[v] for v in starts]


def brute_prefix_sup(a: Wfa, u, horizon: int) -> Fraction:
    """max |f(uv)| over all words v with |v| <= horizon."""
    return brute_prefix_sups(a, [u], horizon)[0]
