"""Random instances for property tests and sweep scripts.

All generators take a ``random.Random`` so runs are reproducible.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .cdwa import Cdwa
from .linalg import Matrix, Vector, dot, vec_mat_mul
from .wavs import Wavs
from .wfa import Wfa

LETTERS = ("x", "y", "z")


def alphabet_of(k: int) -> list:
    return list(LETTERS[:k])


def random_matrix(rng: random.Random, m: int, n: int, lo: int = -2, hi: int = 2) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)])


def random_rational(rng: random.Random, span: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_rational_matrix(rng: random.Random, m: int, n: int) -> Matrix:
    return Matrix([[random_rational(rng) for _ in range(n)] for _ in range(m)])


def random_wfa(rng: random.Random, n_max: int = 4, k_max: int = 3, lo: int = -2, hi: int = 2) -> Wfa:
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    return Wfa(
        alphabet_of(k),
        [rng.randint(lo, hi) for _ in range(n)],
        [random_matrix(rng, n, n, lo, hi) for _ in range(k)],
        [rng.randint(lo, hi) for _ in range(n)],
    )


def signed_function_matrix(rng: random.Random, n: int) -> Matrix:
    """Each row has at most one nonzero entry, and it is +1 or -1."""
    rows = []
    for _ in range(n):
        row = [0] * n
        if rng.random() < 0.85:
            row[rng.randrange(n)] = rng.choice((1, 1, -1))
        rows.append(row)
    return Matrix(rows)


def finite_orbit_wfa(rng: random.Random, n_max: int = 4, k_max: int = 3) -> Wfa:
    """A WFA whose reached vectors form a finite set.

    Multiplying by a signed function matrix never increases the sum of
    absolute values of an integer vector, so only finitely many vectors
    are reachable.
    """
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    scale = rng.choice((Fraction(1), Fraction(1), Fraction(1, 2)))
    return Wfa(
        alphabet_of(k),
        [scale * rng.randint(-2, 2) for _ in range(n)],
        [signed_function_matrix(rng, n) for _ in range(k)],
        [rng.randint(-2, 2) for _ in range(n)],
    )


def random_cdwa(rng: random.Random, max_states: int = 6, max_letters: int = 3) -> Cdwa:
    m = rng.randint(1, max_states)
    k = rng.randint(1, max_letters)
    states = [f"q{i}" for i in range(m)]
    trans = [[rng.randrange(m) for _ in range(k)] for _ in range(m)]
    theta = [random_rational(rng, 3, 2) for _ in range(m)]
    return Cdwa.from_tables(alphabet_of(k), states, rng.randrange(m), trans, theta)


def random_distinct_vectors(rng: random.Random, m: int, dim: int, lo: int = -2, hi: int = 2) -> list:
    if (hi - lo + 1) ** dim < m:
        raise ValueError("not enough distinct vectors in range")
    seen, out = set(), []
    while len(out) < m:
        v = Vector([rng.randint(lo, hi) for _ in range(dim)])
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def random_wavs(rng: random.Random, max_states: int = 5, max_dim: int = 3, max_letters: int = 3) -> Wavs:
    """Arbitrary vectors, arbitrary table, arbitrary weights; usually nonlinear."""
    dim = rng.randint(1, max_dim)
    m = rng.randint(1, min(max_states, 5 ** dim))
    k = rng.randint(1, max_letters)
    states = random_distinct_vectors(rng, m, dim)
    trans = [[rng.randrange(m) for _ in range(k)] for _ in range(m)]
    theta = [rng.randint(-2, 2) for _ in range(m)]
    return Wavs(alphabet_of(k), states, rng.randrange(m), trans, theta)


def orbit_wavs(a: Wfa, max_states: int, rng: random.Random = None):
    """The reached-vector automaton of ``a`` with Theta(v) = v.tau, or None if
    more than ``max_states`` vectors are reachable.  State order is shuffled
    when ``rng`` is given."""
    order = [a.sigma]
    where = {a.sigma: 0}
    i = 0
    while i < len(order):
        for m in a.matrices:
            w = vec_mat_mul(order[i], m)
            if w not in where:
                if len(order) == max_states:
                    return None
                where[w] = len(order)
                order.append(w)
        i += 1
    perm = list(range(len(order)))
    if rng is not None:
        rng.shuffle(perm)
    # perm[old] = new position
    states = [None] * len(order)
    for old, new in enumerate(perm):
        states[new] = order[old]
    trans = [None] * len(order)
    for old, v in enumerate(order):
        trans[perm[old]] = [perm[where[vec_mat_mul(v, m)]] for m in a.matrices]
    theta = [dot(v, a.tau) for v in states]
    return Wavs(a.alphabet, states, perm[0], trans, theta)


def random_linear_wavs(rng: random.Random, max_states: int = 40) -> Wavs:
    """Sample matrices and tau first, then take the orbit of sigma."""
    while True:
        a = finite_orbit_wfa(rng) if rng.random() < 0.7 else random_wfa(rng, n_max=3, k_max=2, lo=-1, hi=1)
        w = orbit_wavs(a, max_states, rng)
        if w is not None:
            return w
