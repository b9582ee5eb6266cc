import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realwa import cdwa, wavs
from realwa.errors import LinearityError, ValidationError
from realwa.generate import random_cdwa, random_linear_wavs, random_wavs
from realwa.linalg import Matrix, Vector, mat_mul, mat_vec_mul
from realwa.oracle import complete_equiv_bounded, enumerate_words, linear_by_systems
from realwa.wavs import Wavs, build_test_matrices, linearity_check, to_wfa
from realwa.wfa import Wfa

from conftest import cycle_cdwa, swap_wavs, swap_wfa


def test_delta_star(nonlinear3):
    assert wavs.delta_star(nonlinear3, ()) == Vector([1, 0])
    assert wavs.delta_star(nonlinear3, "x") == Vector([0, 1])
    assert wavs.delta_star(nonlinear3, "yx") == Vector([1, 1])


def test_behavior(nonlinear3):
    assert wavs.behavior(nonlinear3, "y") == 1
    assert wavs.behavior(nonlinear3, "x") == 0
    assert wavs.behavior(nonlinear3, "") == 0


def test_generated(nonlinear3):
    assert wavs.generated(nonlinear3, "") == 1
    assert wavs.generated(nonlinear3, "y") == 1
    zero = Wavs(["x"], [[0, 0]], 0, [[0]], [5])
    assert wavs.generated(zero, "xxx") == 0


def test_test_matrices(nonlinear3):
    n, dest, theta = build_test_matrices(nonlinear3)
    assert n == Matrix([[1, 0], [0, 1], [1, 1]])
    assert dest["x"] == Matrix([[0, 1], [0, 1], [1, 1]])
    assert dest["y"] == Matrix([[1, 1], [0, 1], [0, 1]])
    assert theta == Vector([0, 0, 1])


def test_test_matrices_single_state():
    a = Wavs(["x"], [[2, 3]], 0, [[0]], ["1/3"])
    n, dest, theta = build_test_matrices(a)
    assert n == dest["x"] == Matrix([[2, 3]])
    assert theta == Vector(["1/3"])


def test_test_matrices_swap():
    n, dest, _ = build_test_matrices(swap_wavs())
    assert n == Matrix.identity(2)
    assert dest["x"] == Matrix([[0, 1], [1, 0]])


def test_nonlinear3_report(nonlinear3):
    r = linearity_check(nonlinear3)
    assert not r.linear and r.verdict == "nonlinear"
    assert (r.rank_state, r.rank_augmented) == (2, 3)
    assert r.reduced == Matrix(
        [[1, 0, 0, 1, 1, 1, 0], [0, 1, 0, 1, 0, 1, 0], [0, 0, 1, -1, -1, -1, 1]]
    )
    assert r.transition_matrices is None


def test_swap_linear_with_witness():
    r = linearity_check(swap_wavs())
    assert r.linear
    assert r.transition_matrices["x"] == Matrix([[0, 1], [1, 0]])
    assert r.terminal_weights == Vector([1, 0])


def test_swap_to_wfa():
    assert to_wfa(swap_wavs()) == swap_wfa()


def test_nonlinear_to_wfa_raises(nonlinear3):
    with pytest.raises(LinearityError) as info:
        to_wfa(nonlinear3)
    assert info.value.report.rank_augmented == 3


def test_cdwa_default_basis_is_linear_and_matches_to_wfa():
    d = cycle_cdwa(3, -2)
    assert to_wfa(cdwa.to_wavs(d)) == cdwa.to_wfa(d)


def test_linear_but_not_full_rank():
    # states on a line, x negates, theta = first coordinate
    a = Wavs(["x"], [[1, 1], [-1, -1]], 0, [[1], [0]], [1, -1])
    r = linearity_check(a)
    assert r.linear and r.rank_state == 1
    assert complete_equiv_bounded(a, to_wfa(a, r), 6) is None
    doubling = Wavs(["x"], [[1, 1], [2, 2]], 0, [[1], [0]], [1, 2])
    assert not linearity_check(doubling).linear


def test_duplicate_states_rejected():
    with pytest.raises(ValidationError, match="same vector"):
        Wavs(["x"], [[1], [1]], 0, [[0], [1]], [0, 0])


def test_partial_table_rejected():
    with pytest.raises(ValidationError, match="no transition on y"):
        Wavs(["x", "y"], [[1]], 0, [{"x": 0}], [0])


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.booleans())
def test_rank_verdict_matches_per_system_solvability(seed, linear_source):
    rng = random.Random(seed)
    a = random_linear_wavs(rng) if linear_source else random_wavs(rng)
    r = linearity_check(a)
    assert r.rank_augmented >= r.rank_state
    assert r.linear == linear_by_systems(a)
    if linear_source:
        assert r.linear
    if r.linear:
        for x, m in r.transition_matrices.items():
            assert mat_mul(r.state_matrix, m) == r.destination_matrices[x]
        assert mat_vec_mul(r.state_matrix, r.terminal_weights) == r.terminal_vector


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_linear_to_wfa_completely_equivalent(seed):
    a = random_linear_wavs(random.Random(seed))
    assert complete_equiv_bounded(a, to_wfa(a), 6) is None


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_walk_is_composition(seed):
    rng = random.Random(seed)
    a = random_wavs(rng)
    words = list(enumerate_words(a.alphabet, 3))
    u, v = rng.choice(words), rng.choice(words)
    assert wavs.walk(a, u + v) == wavs.walk(a, v, start=wavs.walk(a, u))
