"""Cell statistics on Young diagrams and the q,t weights B, T, Pi, n."""

import pytest

from nsdelta.partitions import (
    cell_stats,
    compositions_of,
    conjugate,
    elementary_of_weights,
    mu_stats,
    partitions_of,
    z_lambda,
)
from nsdelta.scalars import SymbolicDomain

D = SymbolicDomain()
q, t = D.q, D.t


def test_cell_stats_figure_example():
    # cell in the 4th column, 4th row of (9,9,8,8,6,5,3)
    assert cell_stats((9, 9, 8, 8, 6, 5, 3), (4, 4)) == (4, 2, 3, 3)


def test_cell_stats_small():
    assert cell_stats((1,), (1, 1)) == (0, 0, 0, 0)
    assert cell_stats((3, 1), (1, 1)) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        cell_stats((2, 1), (2, 2))


def test_mu_stats_examples():
    B, T, Pi, n = mu_stats((1,), D)
    assert (B, T, Pi, n) == (D.one, D.one, D.one, 0)
    B, T, Pi, n = mu_stats((2,), D)
    assert B == D.one + q and T == q and Pi == D.one - q and n == 0
    B, T, Pi, n = mu_stats((1, 1), D)
    assert B == D.one + t and T == t and Pi == D.one - t and n == 1


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    for lam in partitions_of(5):
        assert conjugate(conjugate(lam)) == lam


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(compositions_of(4)) == 8


def test_elementary_of_weights():
    ws = [q, t, D.one]
    assert elementary_of_weights(ws, 0, D) == D.one
    assert elementary_of_weights(ws, 1, D) == q + t + D.one
    assert elementary_of_weights(ws, 3, D) == q * t
    assert elementary_of_weights(ws, 4, D).is_zero()


def test_z_lambda():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2,)) == 2
    assert z_lambda((2, 1)) == 2
