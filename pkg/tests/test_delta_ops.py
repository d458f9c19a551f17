"""The assembled operator pipelines behind the main identities."""

from nsdelta.delta_ops import (
    calpha_word_value,
    chi_op,
    core_bracket,
    lhs_column,
    lhs_eq1,
    lhs_eq2,
    newform_value,
    ns_c_alpha,
    ns_m_alpha_k,
    w_check_p,
)
from nsdelta import macdonald as mac
from nsdelta.llt import llt_poly, rhs_nonsym
from nsdelta.paths import PartialPath
from nsdelta.pspace import PElem, plethysm_pi_ell, weyl_chain
from nsdelta.scalars import SymbolicDomain

D = SymbolicDomain()
q, t = D.q, D.t


def test_ns_m_smallest():
    assert ns_m_alpha_k((1,), 0, D) == PElem.x_monomial(D, (1,))
    assert ns_m_alpha_k((1,), 1, D) == PElem.x_monomial(D, (2,))


def test_lhs_eq1_values():
    assert lhs_eq1((1,), 0, D) == PElem.x_monomial(D, (1,))
    assert lhs_eq1((1,), 1, D) == PElem.x_monomial(D, (2,))
    assert lhs_eq1((1, 1), 0, D) == PElem(D, 2, {((2, 0), ()): t, ((1, 1), ()): D.one})


def test_lhs_eq1_matches_enumeration():
    for alpha, k in [((2,), 1), ((1, 1), 1), ((2, 1), 0)]:
        assert lhs_eq1(alpha, k, D) == rhs_nonsym(alpha, k, D, weak=True)


def test_chi_single_column():
    pp = PartialPath.from_string(1, "E")
    assert chi_op(pp, frozenset(), "row_P", D) == PElem.x_monomial(D, (1,))
    assert chi_op(pp, frozenset(), "col_P", D) == PElem.x_monomial(D, (1,))


def test_chi_matches_enumeration():
    pp = PartialPath.from_string(1, "ENE")
    sigma = frozenset({(1, 2)})
    assert chi_op(pp, sigma, "row_P", D) == llt_poly(pp, sigma, "row_signed", 4, D)
    assert chi_op(pp, sigma, "col_P", D) == llt_poly(pp, sigma, "col_signed", 4, D).invert_t()


def test_chi_v_recovers_symmetric_llt():
    pp = PartialPath.from_string(1, "ENE")
    v = chi_op(pp, frozenset(), "row_V", D)
    sym = v.d_minus().to_symfunc()
    assert sym.degrees() == [2]


def test_core_bracket_u0():
    # the u^0 layer of the bracket is nabla-check^{-1} alone
    from nsdelta.pspace import pp_map
    from nsdelta.words import nabla_check
    from nsdelta.pspace import pp_inv

    for alpha in [(1,), (2,), (1, 1)]:
        got = core_bracket(alpha, 0, D)
        direct = pp_inv(nabla_check(pp_map(PElem.x_monomial(D, alpha)), inverse=True))
        assert got == direct


def test_newform():
    for alpha, k in [((1,), 0), ((2,), 1), ((1, 1), 1)]:
        assert ns_m_alpha_k(alpha, k, D) == newform_value(alpha, k, D)


def test_w_check_p_involution():
    f = PElem(D, 1, {((2,), ()): q, ((1,), (1,)): D.one})
    assert w_check_p(w_check_p(f)) == f


def test_lhs_eq2_values():
    assert lhs_eq2((1,), 0, D) == PElem.x_monomial(D, (1,))
    for alpha, k in [((2,), 0), ((1, 1), 1)]:
        assert lhs_eq2(alpha, k, D) == rhs_nonsym(alpha, k, D, weak=False)


def test_lhs_column_cross():
    for alpha, k in [((1,), 0), ((1, 1), 0)]:
        n = sum(alpha) + k
        a = lhs_column(alpha, k, D)
        b = w_check_p(ns_m_alpha_k(alpha, k, D)).vartheta().scale(D.from_int((-1) ** n))
        assert a == b


def test_ns_c_alpha_weyl():
    for alpha in [(1,), (2,), (1, 1)]:
        lhs = weyl_chain(ns_c_alpha(alpha, D)).to_symfunc()
        rhs = mac.c_compose(alpha, D).invert_t()
        assert lhs == rhs


def test_calpha_word_identity():
    for alpha in [(1,), (2,), (1, 1), (2, 1)]:
        lhs = mac.c_compose(alpha, D).scale(D.from_int((-1) ** sum(alpha)))
        assert lhs == calpha_word_value(alpha, D)


def test_recover_omega_instance():
    alpha, k = (1, 1), 1
    lhs = weyl_chain(lhs_eq1(alpha, k, D)).to_symfunc()
    rhs = mac.theta_op(k, mac.nabla(mac.c_compose(alpha, D))).omega()
    assert lhs == rhs
