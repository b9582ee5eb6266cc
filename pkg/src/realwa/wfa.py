"""Weighted finite automata given by a linear representation.

An automaton of dimension n holds an initial row vector, one n x n matrix
per letter and a terminal column vector.  A word is read left to right by
multiplying the reached row vector with the letter matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import ValidationError
from .linalg import Matrix, Vector, dot, mat_mul, max_norm, vec_mat_mul
from .words import Alphabet, WordLike


@dataclass(frozen=True)
class Wfa:
    alphabet: Alphabet
    sigma: Vector
    matrices: tuple
    tau: Vector

    def __init__(
        self,
        alphabet,
        sigma,
        matrices: Union[Mapping[str, Matrix], Sequence[Matrix]],
        tau,
    ):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        sigma = sigma if isinstance(sigma, Vector) else Vector(sigma)
        tau = tau if isinstance(tau, Vector) else Vector(tau)
        n = len(sigma)
        if len(tau) != n:
            raise ValidationError(f"initial vector has length {n} but terminal vector has length {len(tau)}")
        if isinstance(matrices, Mapping):
            missing = [a for a in alphabet if a not in matrices]
            extra = [a for a in matrices if a not in alphabet.letters]
            if missing or extra:
                parts = []
                if missing:
                    parts.append("missing matrices for " + ", ".join(missing))
                if extra:
                    parts.append("matrices for letters outside the alphabet: " + ", ".join(map(str, extra)))
                raise ValidationError("; ".join(parts))
            matrices = [matrices[a] for a in alphabet]
        matrices = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
        if len(matrices) != len(alphabet):
            raise ValidationError(f"{len(matrices)} matrices for {len(alphabet)} letters")
        for a, m in zip(alphabet, matrices):
            if m.shape != (n, n):
                raise ValidationError(f"matrix for letter {a!r} is {m.nrows}x{m.ncols}, expected {n}x{n}")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "tau", tau)

    @property
    def dim(self) -> int:
        return len(self.sigma)

    def matrix(self, letter: str) -> Matrix:
        return self.matrices[self.alphabet.index(letter)]

    def letter_matrices(self) -> dict:
        return dict(zip(self.alphabet.letters, self.matrices))


def word_matrix(a: Wfa, u: WordLike) -> Matrix:
    result = Matrix.identity(a.dim)
    for i in a.alphabet.encode(u):
        result = mat_mul(result, a.matrices[i])
    return result


def reached_vector(a: Wfa, u: WordLike) -> Vector:
    v = a.sigma
    for i in a.alphabet.encode(u):
        v = vec_mat_mul(v, a.matrices[i])
    return v


def behavior(a: Wfa, u: WordLike) -> Fraction:
    return dot(reached_vector(a, u), a.tau)


def generated(a: Wfa, u: WordLike) -> Fraction:
    return max_norm(reached_vector(a, u))
