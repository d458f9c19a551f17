"""P(ell): the pp isomorphism, Demazure machinery, Pi_ell, atoms."""

import random

import pytest

from nsdelta.pspace import (
    PElem,
    TruncationError,
    atom,
    atom_expand,
    demazure_pi,
    pi_ell_inv,
    plethysm_pi_ell,
    pol_part,
    pp_inv,
    pp_map,
    stable_atom,
    weyl_chain,
    weyl_pibold,
)
from nsdelta.scalars import SymbolicDomain
from nsdelta.symfunc import SymFunc
from nsdelta.vspace import VElem

D = SymbolicDomain()
q, t = D.q, D.t


def rand_pelem(level, seed, degree=3):
    rng = random.Random(seed)
    terms = {}
    for _ in range(4):
        x = tuple(rng.randint(0, 2) for _ in range(level))
        room = max(0, degree - sum(x))
        lam = tuple(sorted((rng.randint(1, 2) for _ in range(room // 2)), reverse=True))
        if sum(x) + sum(lam) > degree:
            lam = ()
        c = D.monomial(rng.randint(-3, 3), rng.randint(0, 1), rng.randint(0, 1))
        if not c.is_zero():
            terms[(x, lam)] = c
    return PElem(D, level, terms)


def test_pp_examples():
    assert pp_map(PElem.x_monomial(D, (2,))) == VElem(D, 1, {((2,), ()): D.one})
    h1tail = PElem(D, 1, {((0,), (1,)): D.one})
    assert pp_map(h1tail) == VElem(D, 1, {((0,), (1,)): D.one / (t - D.one)})
    for level in (0, 1, 2):
        f = rand_pelem(level, 17 + level)
        assert pp_inv(pp_map(f)) == f


def test_demazure():
    assert demazure_pi({(1, 0): D.one}, 1) == {(1, 0): D.one, (0, 1): D.one}
    assert demazure_pi({(0, 0): D.one}, 1) == {(0, 0): D.one}
    f = {(2, 1): q, (0, 3): D.one - t}
    assert demazure_pi(demazure_pi(f, 1), 1) == demazure_pi(f, 1)


def test_pol_part():
    assert pol_part((2, 0), D) == {(2, 0): D.one}
    assert pol_part((1, 1), D) == {(1, 1): D.one, (2, 0): t}
    assert pol_part((3,), D) == {(3,): D.one}


def test_pi_ell_values():
    out = plethysm_pi_ell(PElem.x_monomial(D, (1, 1)))
    assert out == PElem(D, 2, {((1, 1), ()): D.one, ((2, 0), ()): t})
    # level 0 is the plain plethysm X -> X/(1-t) on power sums
    f = PElem(D, 0, {((), (2, 1)): D.one})
    out = plethysm_pi_ell(f)
    assert out == PElem(D, 0, {((), (2, 1)): D.one / ((D.one - t * t) * (D.one - t))})


def test_pi_ell_three_variable_value():
    # pinned by the signed-to-unsigned flagged LLT identity: the naive
    # kernel truncation would produce an extra t^2 x_1^3 here
    out = plethysm_pi_ell(PElem.x_monomial(D, (1, 1, 1)))
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
    assert out == expected


def test_pi_ell_roundtrip():
    for level in (0, 1, 2, 3):
        for seed in range(2):
            f = rand_pelem(level, 91 * level + seed)
            assert pi_ell_inv(plethysm_pi_ell(f)) == f


def test_weyl_pibold():
    assert weyl_pibold(PElem.x_monomial(D, (1,))).to_symfunc() == SymFunc.gen(D, "h", (1,))
    assert weyl_pibold(PElem.one(D, 1)).to_symfunc() == SymFunc.one(D)
    with pytest.raises(ValueError):
        weyl_pibold(PElem.one(D, 0))


def test_pi0p0():
    for lam in [(2,), (1, 1), (2, 1)]:
        f = SymFunc.gen(D, "s", lam)
        lhs = plethysm_pi_ell(pp_inv(VElem.from_symfunc(f))).to_symfunc()
        rhs = f.omega().scale(D.from_int((-1) ** sum(lam)))
        assert lhs == rhs


def test_atoms():
    assert atom((2,), D) == {(2,): D.one}
    assert atom((0, 1), D) == {(0, 1): D.one}
    a10 = atom((1, 0), D)
    a01 = atom((0, 1), D)
    total = dict(a10)
    for k, v in a01.items():
        total[k] = total.get(k, D.zero) + v
    assert total == {(1, 0): D.one, (0, 1): D.one}


def test_atom_orbit_sum_is_schur():
    # atoms decompose the antidominant key, which is the Schur polynomial
    import itertools

    total = {}
    for alpha in set(itertools.permutations((2, 1, 0))):
        for k, v in atom(alpha, D, 3).items():
            total[k] = total.get(k, D.zero) + v
    total = {k: v for k, v in total.items() if not v.is_zero()}
    from nsdelta.pspace import lift_polynomial

    assert lift_polynomial(total, 0, D).to_symfunc() == SymFunc.gen(D, "s", (2, 1))


def test_stable_atom_weyl_property():
    assert weyl_chain(stable_atom((1,), (1,), D)).to_symfunc() == SymFunc.gen(D, "s", (1, 1))
    assert weyl_chain(stable_atom((2,), (1,), D)).to_symfunc() == SymFunc.gen(D, "s", (2, 1))
    assert weyl_chain(stable_atom((1,), (2,), D)).to_symfunc().is_zero()


def test_atom_expand_roundtrip():
    f = rand_pelem(2, 5)
    expansion = atom_expand(f)
    acc = PElem.zero(D, 2)
    for (eta, lam), c in expansion.items():
        acc = acc + stable_atom(eta, lam, D).scale(c)
    assert acc == f


def test_lift_detects_asymmetry():
    from nsdelta.pspace import lift_polynomial

    poly = {(1, 0): D.one}  # x_1 alone is not symmetric at level 0
    with pytest.raises(TruncationError):
        lift_polynomial(poly, 0, D)
