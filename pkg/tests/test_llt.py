"""Flagged LLT polynomials and the combinatorial sums."""

import pytest

from nsdelta.llt import all_llt_cases, llt_poly, rhs_nonsym, rhs_symmetric
from nsdelta.paths import PartialPath
from nsdelta.pspace import PElem, TruncationError, plethysm_pi_ell
from nsdelta.scalars import SymbolicDomain
from nsdelta.symfunc import SymFunc

D = SymbolicDomain()
q, t = D.q, D.t


def test_single_cell():
    pp = PartialPath.from_string(1, "E")
    assert llt_poly(pp, frozenset(), "row", 3, D) == PElem.x_monomial(D, (1,))
    assert llt_poly(pp, frozenset(), "col", 3, D) == PElem.x_monomial(D, (1,))


def test_ene_unsigned_row():
    # flag forces T(1) = 1 and no inversion pairs exist, so the unsigned
    # flagged row LLT of ENE is x_1 h_1[X]
    pp = PartialPath.from_string(1, "ENE")
    got = llt_poly(pp, frozenset(), "row", 4, D)
    expected = PElem(D, 1, {((2,), ()): D.one, ((1,), (1,)): D.one})
    assert got == expected


def test_signed_row_matches_word_image():
    # Grow+-_1(NEE) = (1-t) x_1 h_1[tail], pinned by the operator route
    pp = PartialPath.from_string(1, "NEE")
    got = llt_poly(pp, frozenset(), "row_signed", 4, D)
    expected = PElem(D, 1, {((1,), (1,)): D.one - t})
    assert got == expected


def test_marked_corner_constraint():
    pp = PartialPath.from_string(1, "ENE")
    sigma = frozenset({(1, 2)})
    got = llt_poly(pp, sigma, "row", 4, D)
    # the corner forces T(2) <= T(1) = 1, so only x_1^2, with no area pair
    assert got == PElem.x_monomial(D, (2,))


def test_invalid_marking():
    pp = PartialPath.from_string(1, "NEE")
    with pytest.raises(ValueError):
        llt_poly(pp, frozenset({(1, 2)}), "row", 4, D)


def test_three_row_unsigned_values():
    pp = PartialPath.from_string(3, "EEE")
    got = llt_poly(pp, frozenset(), "row", 6, D)
    expected = PElem(
        D,
        3,
        {
            ((1, 1, 1), ()): D.one,
            ((2, 1, 0), ()): t + t * t,
            ((2, 0, 1), ()): t,
            ((1, 2, 0), ()): t,
            ((3, 0, 0), ()): t * t * t,
        },
    )
    assert got == expected
    assert plethysm_pi_ell(llt_poly(pp, frozenset(), "row_signed", 6, D)) == got


def test_case_listing():
    cases = all_llt_cases(4)
    assert all(ell + n <= 4 for (ell, n, _p, _s) in cases)
    assert any(ell == 2 for (ell, n, _p, _s) in cases)


def test_rhs_symmetric_small():
    assert rhs_symmetric((1,), 0, D) == SymFunc.gen(D, "h", (1,))
    assert rhs_symmetric((1,), 1, D) == SymFunc.gen(D, "e", (2,))
    s2 = SymFunc.gen(D, "s", (2,))
    s11 = SymFunc.gen(D, "s", (1, 1))
    assert rhs_symmetric((1, 1), 0, D) == s2 + s11.scale(t)


def test_rhs_nonsym_small():
    assert rhs_nonsym((1,), 0, D, weak=True) == PElem.x_monomial(D, (1,))
    assert rhs_nonsym((1,), 1, D, weak=True) == PElem.x_monomial(D, (2,))
    got = rhs_nonsym((1, 1), 0, D, weak=True)
    assert got == PElem(D, 2, {((2, 0), ()): t, ((1, 1), ()): D.one})
    # strict flavor at the smallest sizes: NNEE has area 1 and forced w_1=1
    assert rhs_nonsym((1,), 0, D, weak=False) == PElem.x_monomial(D, (1,))
    got = rhs_nonsym((2,), 0, D, weak=False)
    assert got == PElem(D, 1, {((1,), (1,)): q})
