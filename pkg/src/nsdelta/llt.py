"""Flagged row/column LLT polynomials and the combinatorial sides of the
main identities.

Fillings map the n rows of the full path N^ell pihat to the super alphabet
1 < 1bar < 2 < 2bar < ...; the flag bounds T(j) <= j on the first ell rows.
Inversion pairs are the area cells of the full path read as (column, row)
pairs; marked corners impose the same comparison as a hard constraint
without contributing to the statistic.
"""

from __future__ import annotations

import itertools

from .pspace import PElem, lift_polynomial
from .symfunc import SymFunc

ROW_VARIANTS = ("row_signed", "row")
COL_VARIANTS = ("col_signed", "col")


def _letters(max_value, signed):
    """Super letters as (value, negative?) with order key 2v-1 / 2v."""
    out = []
    for v in range(1, max_value + 1):
        out.append((v, False))
        if signed:
            out.append((v, True))
    return out


def _key(letter):
    v, neg = letter
    return 2 * v if neg else 2 * v - 1


def _row_pair_ok(ti, tj):
    """T(j) < T(i), or T(i), T(j) equal positive."""
    return _key(tj) < _key(ti) or (ti == tj and not ti[1])


def _col_pair_ok(ti, tj):
    """T(j) > T(i), or T(j), T(i) equal negative."""
    return _key(tj) > _key(ti) or (ti == tj and ti[1])


def llt_poly(partial, sigma, variant, nvars, domain):
    """The flagged LLT polynomial of (pihat, sigma) as an element of P(ell).

    Letters are truncated to absolute value <= nvars; adequacy is asserted
    by the trailing-symmetry check of the lift (nvars >= ell + n).
    """
    if variant not in ROW_VARIANTS + COL_VARIANTS:
        raise ValueError(f"unknown LLT variant {variant}")
    sigma = frozenset(sigma)
    corners = set(partial.corners())
    if not sigma <= corners:
        raise ValueError(f"marking {sorted(sigma)} not among corners {sorted(corners)}")
    n = partial.n
    ell = partial.ell
    signed = variant.endswith("signed")
    pair_ok = _row_pair_ok if variant in ROW_VARIANTS else _col_pair_ok
    area = sorted(partial.area_pairs())
    sig = sorted(sigma)
    letters = _letters(nvars, signed)

    acc = {}
    for filling in itertools.product(letters, repeat=n):
        if any(_key(filling[j]) > 2 * (j + 1) - 1 for j in range(min(ell, n))):
            continue
        if any(not pair_ok(filling[i - 1], filling[j - 1]) for (i, j) in sig):
            continue
        inv = sum(1 for (i, j) in area if pair_ok(filling[i - 1], filling[j - 1]))
        m = sum(1 for x in filling if x[1])
        texp = inv + m if variant in ROW_VARIANTS else inv - m
        coeff = -1 if m % 2 else 1
        exps = [0] * nvars
        for v, _neg in filling:
            exps[v - 1] += 1
        key = (tuple(exps), texp)
        acc[key] = acc.get(key, 0) + coeff
    poly = {}
    for (exps, texp), c in acc.items():
        if not c:
            continue
        s = domain.monomial(c, 0, texp)
        poly[exps] = poly[exps] + s if exps in poly else s
    return lift_polynomial(poly, ell, domain)


def all_llt_cases(max_total):
    """(ell, n, pihat, sigma) over all partial paths and markings with
    ell + n <= max_total."""
    from .paths import enumerate_partial

    out = []
    for ell in range(0, max_total):
        for n in range(max(ell, 1), max_total - ell + 1):
            for partial in enumerate_partial(ell, n):
                for sigma in partial.markings():
                    out.append((ell, n, partial, sigma))
    return out


# ---------------------------------------------------------------------------
# Combinatorial right-hand sides
# ---------------------------------------------------------------------------

def rhs_symmetric(alpha, k, domain, nvars=None):
    """The labelled-path side of the compositional Delta identity:
    sum over LD(n)^{*k} with dcomp = alpha of q^area t^dinv x^labels."""
    from .paths import dinv, enumerate_decorated, enumerate_labels

    alpha = tuple(alpha)
    n = sum(alpha) + k
    nvars = n if nvars is None else nvars
    acc = {}
    for dec in enumerate_decorated(n, k, alpha):
        a = dec.area()
        for labels in enumerate_labels(dec.path, "PF", nvars):
            d = dinv(dec.path, labels)
            exps = [0] * nvars
            for w in labels:
                exps[w - 1] += 1
            key = (tuple(exps), (a, d))
            acc[key] = acc.get(key, 0) + 1
    poly = {}
    for (exps, (qe, te)), c in acc.items():
        s = domain.monomial(c, qe, te)
        poly[exps] = poly[exps] + s if exps in poly else s
    return lift_polynomial(poly, 0, domain).to_symfunc()


def rhs_nonsym(alpha, k, domain, weak=True, nvars=None):
    """The flagged word parking function side, as an element of P(ell).

    With ``weak`` the labels weakly decrease up vertical runs and the
    statistic is dinv' (attacks with w_i >= w_j); otherwise labels strictly
    increase and the statistic counts attacks with w_i < w_j.
    """
    from .paths import dinv_variants, enumerate_decorated, enumerate_labels

    alpha = tuple(alpha)
    ell = len(alpha)
    n = sum(alpha) + k
    nvars = (ell + n) if nvars is None else nvars
    mode = "FWPF_weak" if weak else "FWPF"
    stat = "weak_ge" if weak else "strict_lt_fwpf"
    acc = {}
    for dec in enumerate_decorated(n, k, alpha):
        a = dec.area()
        for labels in enumerate_labels(dec.path, mode, nvars, ell=ell):
            d = dinv_variants(dec.path, labels, stat)
            exps = [0] * nvars
            for w in labels:
                exps[w - 1] += 1
            key = (tuple(exps), (a, d))
            acc[key] = acc.get(key, 0) + 1
    poly = {}
    for (exps, (qe, te)), c in acc.items():
        s = domain.monomial(c, qe, te)
        poly[exps] = poly[exps] + s if exps in poly else s
    return lift_polynomial(poly, ell, domain)
