"""Partitions, compositions and the q,t cell statistics on Young diagrams.

Partitions are plain tuples of weakly decreasing positive integers, drawn in
French convention: row 1 is the bottom row and has the largest part.  A cell
is addressed as (col, row), both 1-indexed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def is_partition(lam):
    return all(isinstance(p, int) and p > 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def is_composition(alpha):
    """The paper's compositions are strict: every part is positive."""
    return all(isinstance(p, int) and p > 0 for p in alpha)


def check_partition(lam):
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n with parts bounded by max_part, largest-first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions_of(n):
    """All strict compositions of n."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return out


def conjugate(lam):
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for i in range(part):
            cols[i] += 1
    return tuple(cols)


def cells(lam):
    """Cells (col, row) of the Young diagram, 1-indexed."""
    return [(i, j) for j, part in enumerate(lam, start=1) for i in range(1, part + 1)]


def cell_stats(lam, cell):
    """(arm, leg, coarm, coleg) of a cell; the cell must lie in the diagram."""
    lam = tuple(lam)
    i, j = cell
    if not (1 <= j <= len(lam) and 1 <= i <= lam[j - 1]):
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    arm = lam[j - 1] - i
    coarm = i - 1
    leg = sum(1 for jj in range(j + 1, len(lam) + 1) if lam[jj - 1] >= i)
    coleg = j - 1
    return arm, leg, coarm, coleg


def n_stat(lam):
    """n(mu) = sum_i mu_i * (i - 1)."""
    return sum(p * i for i, p in enumerate(lam))


def mu_stats(lam, domain):
    """(B_mu, T_mu, Pi_mu, n(mu)); empty products are 1."""
    B = domain.zero
    T = domain.one
    Pi = domain.one
    for (i, j) in cells(lam):
        coarm, coleg = i - 1, j - 1
        w = domain.monomial(1, coarm, coleg)
        B = B + w
        T = T * w
        if (i, j) != (1, 1):
            Pi = Pi * (domain.one - w)
    return B, T, Pi, n_stat(lam)


def cell_weights(lam, domain, drop_corner=False):
    """The multiset {q^coarm t^coleg} over cells, optionally without (1,1)."""
    out = []
    for (i, j) in cells(lam):
        if drop_corner and (i, j) == (1, 1):
            continue
        out.append(domain.monomial(1, i - 1, j - 1))
    return out


def elementary_of_weights(weights, k, domain):
    """e_k of a finite multiset of scalars, via the product expansion."""
    if k < 0:
        return domain.zero
    es = [domain.one] + [domain.zero] * k
    for w in weights:
        for i in range(min(k, len(es) - 1), 0, -1):
            es[i] = es[i] + es[i - 1] * w
    return es[k]


def z_lambda(lam):
    """The centralizer size prod_i i^{m_i} m_i! used by the Hall pairing."""
    z = Fraction(1)
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= Fraction(p) ** m
        for i in range(1, m + 1):
            z *= i
    return z


def sort_to_partition(exps):
    """Sort an exponent vector into a partition, dropping zeros."""
    return tuple(sorted((e for e in exps if e), reverse=True))
