"""Smoke tests for the rectcount Python module."""

import math

import pytest

import rectcount as rc

WORKED_MATRIX = [[0, 1, 0], [1, 1, 0]]
WORKED_PATTERN = [0, 1]


def test_counting_ops():
    assert rc.count_direct(WORKED_MATRIX, WORKED_PATTERN) == 1
    assert rc.count_inclusion_exclusion(WORKED_MATRIX, WORKED_PATTERN) == 1
    assert rc.mismatch_count(WORKED_MATRIX, WORKED_PATTERN, []) == 3
    assert rc.mismatch_count(WORKED_MATRIX, WORKED_PATTERN, [0]) == 1
    assert rc.mismatch_count(WORKED_MATRIX, WORKED_PATTERN, [0, 1]) == 0


def test_counting_matches_python_oracle():
    matrix = [[(r * 7 + c * 3) % 4 for c in range(9)] for r in range(5)]
    pattern = [1, 0, 3, 2, 1]
    direct = sum(
        all(matrix[r][c] == pattern[r] for r in range(5)) for c in range(9)
    )
    assert rc.count_direct(matrix, pattern) == direct
    assert rc.count_inclusion_exclusion(matrix, pattern) == direct


def test_specialized_forms():
    assert rc.count_uniform([8, 4, 2, 1], 3) == 1
    assert rc.count_binary_bivariate([[8], [4]], 1, 1) == 4


def test_binom_is_exact_and_unbounded():
    assert rc.binom(5, 2) == 10
    assert rc.binom(4, -1) == 0
    assert rc.binom(60, 30) == math.comb(60, 30)
    assert rc.binom(300, 150) == math.comb(300, 150)
    with pytest.raises(ValueError):
        rc.binom(-1, 0)


def test_bernoulli_row():
    assert rc.bernoulli_row(4, 4) == [1, 5, 11, 15, 16]
    assert rc.bernoulli_row(200, 200)[-1] == 2**200


def test_identity_catalog():
    names = rc.identity_names()
    assert len(names) == 8
    assert "klee" in names
    assert rc.identity_params("eq7") == ["n", "k", "l", "m1", "m2"]

    assert rc.eval_identity("klee", {"k": 2, "m": 3}) == (2, 2)
    assert rc.eval_identity("prop2_1", {"k": 64}) == (1, 1)
    lhs, rhs = rc.eval_identity("eq7", {"n": 9, "k": 4, "l": 2, "m1": 1, "m2": 6})
    assert lhs == rhs

    with pytest.raises(ValueError):
        rc.eval_identity("eq7", {"n": 9, "k": 2, "l": 4, "m1": 1, "m2": 6})  # l > k


def test_subset_lattice():
    assert rc.build_incidence(2) == [[0, 1, 0, 1], [0, 0, 1, 1]]
    assert rc.count_subsets_brute(4, [0], [1], 0, 4) == 4
    assert rc.count_subsets_formula(4, [0], [1], 0, 4) == 4
    assert rc.theorem_input_table(3, 1, 1, 0, 3) == [[8], [4]]


def test_verifier_reports():
    report = rc.verify_identity("klee", {"k": (0, 10), "m": (0, 10)})
    assert report["status"] == "PASS"
    assert report["tuples_checked"] == 121
    assert report["failures"] == []
    assert report["seed"] is None

    report = rc.verify_counting(samples=30, seed=5)
    assert report["status"] == "PASS"
    assert report["tuples_checked"] == 5050 + 30
    assert report["seed"] == 5

    report = rc.verify_pipeline(4)
    assert report["status"] == "PASS"


def test_version():
    assert rc.__version__ == "0.1.0"
