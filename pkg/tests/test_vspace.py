"""The Dyck path algebra action on V_ell."""

import random

import pytest

from nsdelta.scalars import SymbolicDomain, UDomain
from nsdelta.symfunc import SymFunc
from nsdelta.vspace import (
    VElem,
    lift_velem,
    tau_star_ell,
    u_component_v,
    y_operator_check,
)

D = SymbolicDomain()
q, t = D.q, D.t


def rand_velem(level, seed, degree=3):
    rng = random.Random(seed)
    terms = {}
    for _ in range(4):
        y = tuple(rng.randint(0, 2) for _ in range(level))
        lam = tuple(sorted((rng.randint(1, 2) for _ in range(rng.randint(0, 1))), reverse=True))
        c = D.monomial(rng.randint(-3, 3), rng.randint(0, 1), rng.randint(0, 1))
        if not c.is_zero():
            terms[(y, lam)] = c
    return VElem(D, level, terms)


def test_d_plus_tower():
    v = VElem.one(D, 0)
    signs = []
    for ell in range(1, 4):
        v = v.d_plus()
        expect = VElem(D, ell, {((1,) * ell, ()): D.from_int((-1) ** ell)})
        assert v == expect
        signs.append(ell)


def test_d_minus_basics():
    assert VElem.one(D, 1).d_minus() == VElem.one(D, 0)
    v = VElem.one(D, 0).d_plus().d_minus()
    assert v == VElem(D, 0, {((), (1,)): D.one})
    with pytest.raises(ValueError):
        VElem.one(D, 0).d_minus()


def test_hecke_examples():
    y1 = VElem(D, 2, {((1, 0), ()): D.one})
    assert y1.hecke_t(1) == VElem(D, 2, {((0, 1), ()): D.one, ((1, 0), ()): D.one - t})
    assert VElem.one(D, 2).hecke_t(1) == VElem.one(D, 2)
    with pytest.raises(ValueError):
        VElem.one(D, 1).hecke_t(1)


def test_hecke_relations():
    for level in (2, 3):
        for seed in range(3):
            F = rand_velem(level, 10 * level + seed)
            for i in range(1, level):
                TF = F.hecke_t(i)
                assert TF.hecke_t(i) == TF.scale(D.one - t) + F.scale(t)
                assert F.hecke_t(i).hecke_t(i, inverse=True) == F
    F = rand_velem(3, 99)
    assert F.hecke_t(1).hecke_t(2).hecke_t(1) == F.hecke_t(2).hecke_t(1).hecke_t(2)


def test_d_plus_star():
    assert VElem.one(D, 0).d_plus_star() == VElem.one(D, 1)
    # gamma moves y_1 into the q-twisted last slot
    v = VElem(D, 1, {((1,), ()): D.one})
    assert v.d_plus_star() == VElem(D, 2, {((0, 1), ()): D.one})


def test_z1_relation():
    for level in (0, 1, 2):
        for seed in range(3):
            F = rand_velem(level, 31 * level + seed)
            lhs = F.d_plus().z_one()
            rhs = F.d_plus_star().y_mult(1).scale(-(q * D.t_pow(level + 1)))
            assert lhs == rhs


def test_y_operator_recursion():
    for level in (1, 2, 3):
        for i in range(1, level + 1):
            F = rand_velem(level, 7 * level + i)
            assert y_operator_check(i, F) == F.y_mult(i)


def test_tau_star_intertwining():
    K = 2
    udom = UDomain(D, K)

    def one_minus_uy1(level):
        y = [0] * level
        y[0] = 1
        return VElem(udom, level, {((0,) * level, ()): udom.one, (tuple(y), ()): -udom.u})

    for level in (1, 2):
        F = rand_velem(level, 41 * level)
        tF = tau_star_ell(F, K)
        assert tF.d_minus() == tau_star_ell(F.d_minus(), K)
        assert tF.d_plus() == tau_star_ell(F.d_plus(), K)
        assert tF.y_mult(1) == tau_star_ell(F.y_mult(1), K)
        if level >= 2:
            assert tF.hecke_t(1) == tau_star_ell(F.hecke_t(1), K)
        assert tF.d_plus_star() == one_minus_uy1(level + 1) * tau_star_ell(F.d_plus_star(), K)
        assert tF.z_one() == one_minus_uy1(level) * tau_star_ell(F.z_one(), K)


def test_tau_star_inverse():
    K = 2
    for level in (1, 2):
        F = rand_velem(level, 5 + level)
        assert tau_star_ell(tau_star_ell(F, K), K, inverse=True) == lift_velem(F, UDomain(D, K))
        assert tau_star_ell(F, K, inverse=True).d_minus() == tau_star_ell(F.d_minus(), K, inverse=True)
        u0 = u_component_v(tau_star_ell(F, K), 0)
        assert u0 == F


def test_symfunc_embedding():
    f = SymFunc(D, "s", {(2,): q})
    v = VElem.from_symfunc(f, 0)
    assert v.to_symfunc() == f
