"""Walk through the three-state vector automaton that fails the rank test.

States (1,0), (0,1), (1,1) over letters x, y; only (1,1) has weight 1.
The state matrix has rank 2 but the augmented test matrix has rank 3,
so no transition matrices reproduce this automaton.
"""
from realwa import Wavs
from realwa.linalg import solve_right, solve_right_vector
from realwa.oracle import enumerate_words
from realwa.wavs import behavior, build_test_matrices, linearity_check


def main():
    a = Wavs(
        ["x", "y"],
        [[1, 0], [0, 1], [1, 1]],
        0,
        [{"x": 1, "y": 2}, {"x": 1, "y": 1}, {"x": 2, "y": 1}],
        [0, 0, 1],
    )
    report = linearity_check(a)
    print(report.format())

    n, dest, theta = build_test_matrices(a)
    print()
    for letter, m in dest.items():
        print(f"N M_{letter} = N_{letter} solvable: {solve_right(n, m) is not None}")
    print(f"N t = theta solvable: {solve_right_vector(n, theta) is not None}")

    print()
    print("behavior on short words:")
    for u in enumerate_words(a.alphabet, 3):
        print(f"  {a.alphabet.format(u):>4}  {behavior(a, u)}")


if __name__ == "__main__":
    main()
