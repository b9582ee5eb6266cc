import pytest

from realwa import Cdwa, Wavs, Wfa


def swap_wfa():
    return Wfa(["x"], [1, 0], {"x": [[0, 1], [1, 0]]}, [1, 0])


def counter_wfa():
    return Wfa(["x"], [1, 0], {"x": [[1, 1], [0, 1]]}, [0, 1])


def one_state_wfa():
    return Wfa(["x"], [1], {"x": [[1]]}, [1])


def three_state_nonlinear():
    """Vector states [1,0], [0,1], [1,1] in Q^2 over {x, y}; only [1,1] has weight 1."""
    return Wavs(
        ["x", "y"],
        [[1, 0], [0, 1], [1, 1]],
        0,
        [{"x": 1, "y": 2}, {"x": 1, "y": 1}, {"x": 2, "y": 1}],
        [0, 0, 1],
    )


def swap_wavs():
    return Wavs(["x"], [[1, 0], [0, 1]], 0, [[1], [0]], [1, 0])


def cycle_cdwa(p_weight=1, q_weight=0):
    return Cdwa(["x"], ["p", "q"], "p", {("p", "x"): "q", ("q", "x"): "p"}, {"p": p_weight, "q": q_weight})


@pytest.fixture
def swap():
    return swap_wfa()


@pytest.fixture
def counter():
    return counter_wfa()


@pytest.fixture
def nonlinear3():
    return three_state_nonlinear()


@pytest.fixture
def cycle():
    return cycle_cdwa()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
