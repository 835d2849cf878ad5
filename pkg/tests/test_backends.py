"""Agreement between the compiled and pure-Python row-reduction kernels."""

import random

import pytest

from adelcat import intlinalg
from adelcat import _hnf_py

try:
    from adelcat import _hnf_cy
except ImportError:
    _hnf_cy = None


def random_rows(rng, max_dim=6, max_entry=30):
    m = rng.randint(0, max_dim)
    n = rng.randint(0, max_dim)
    return [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)], n


def test_selected_backend_is_reported():
    assert intlinalg.BACKEND in ("pure", "compiled")


@pytest.mark.skipif(_hnf_cy is None, reason="compiled kernel not built")
def test_hnf_outputs_identical():
    rng = random.Random(2024)
    for _ in range(200):
        rows, n = random_rows(rng)
        got = _hnf_cy.hnf_rows(rows, n, True)
        want = _hnf_py.hnf_rows(rows, n, True)
        assert got == want


@pytest.mark.skipif(_hnf_cy is None, reason="compiled kernel not built")
def test_hnf_without_transform_identical():
    rng = random.Random(11)
    for _ in range(100):
        rows, n = random_rows(rng)
        got = _hnf_cy.hnf_rows(rows, n, False)
        want = _hnf_py.hnf_rows(rows, n, False)
        assert got[0] == want[0] and got[2] == want[2]


@pytest.mark.skipif(_hnf_cy is None, reason="compiled kernel not built")
def test_mul_outputs_identical():
    rng = random.Random(5)
    for _ in range(100):
        m = rng.randint(0, 5)
        k = rng.randint(0, 5)
        n = rng.randint(0, 5)
        a = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(m)]
        b = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(k)]
        assert _hnf_cy.mul_rows(a, b, k, n) == _hnf_py.mul_rows(a, b, k, n)


@pytest.mark.skipif(_hnf_cy is None, reason="compiled kernel not built")
def test_big_integer_growth_preserved():
    # coefficients must stay exact far beyond machine width
    rows = [[10**40 + 1, 3], [7, 10**41 - 9]]
    got = _hnf_cy.hnf_rows(rows, 2, True)
    want = _hnf_py.hnf_rows(rows, 2, True)
    assert got == want
    n = 10**50
    assert _hnf_cy.mul_rows([[n]], [[n]], 1, 1) == [[n * n]]
