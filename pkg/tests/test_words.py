"""Generator words, spanning expansions, and the word-defined operators."""

import pytest

from nsdelta.scalars import SymbolicDomain, UDomain
from nsdelta.symfunc import SymFunc
from nsdelta.vspace import VElem, u_component_v
from nsdelta import macdonald as mac
from nsdelta.words import (
    SpanError,
    WordExpansion,
    eval_word,
    expand_in_word_images,
    mq_apply,
    nabla_check,
    ns_argument_words,
    w_check,
    word_from_text,
    word_levels,
    word_to_text,
    y_as_words,
)

D = SymbolicDomain()
q, t = D.q, D.t

DP = ("D+",)
DM = ("D-",)


def test_word_levels():
    levels, exit_level = word_levels((DM, ("T", 1), DP, DP))
    assert exit_level == 1
    with pytest.raises(ValueError):
        word_levels((DM,))
    with pytest.raises(ValueError):
        word_levels((("T", 1), DP))


def test_word_text_roundtrip():
    w = (DM, ("T", 1), ("Ti", 2), DP, DP)
    assert word_from_text(word_to_text(w)) == w
    assert word_to_text(w) == "D- T1 T2^-1 D+ D+"


def test_eval_examples():
    assert eval_word((DP, DP), D) == VElem(D, 2, {((1, 1), ()): D.one})
    assert eval_word((DM, DP), D) == VElem(D, 0, {((), (1,)): D.one})
    assert eval_word((("T", 1), DP, DP), D) == VElem(D, 2, {((1, 1), ()): D.one})


def test_y_as_words_acts_as_multiplication():
    for level in (1, 2, 3):
        for i in range(1, level + 1):
            expansion = y_as_words(i, level, D)
            base = WordExpansion(level, [(D.one, (DP,) * level)])
            total = expansion.compose(base).evaluate(D)
            direct = eval_word((DP,) * level, D).y_mult(i)
            assert total == direct


def test_ns_argument_words():
    exp = ns_argument_words((2, 1), D)
    v = exp.evaluate(D)
    target = eval_word((DP, DP), D).y_mult(1)
    assert v == target


def test_expansion_roundtrip():
    v = VElem(D, 1, {((2,), ()): q, ((1,), (1,)): D.one - t})
    expansion = expand_in_word_images(v)
    assert expansion.evaluate(D) == v
    v2 = VElem(D, 2, {((1, 1), (1,)): t, ((2, 1), ()): D.one})
    assert expand_in_word_images(v2).evaluate(D) == v2


def test_expansion_requires_y_module():
    v = VElem(D, 1, {((0,), (1,)): D.one})
    with pytest.raises(ValueError):
        expand_in_word_images(v)


def test_expansion_requires_homogeneous():
    v = VElem(D, 1, {((1,), ()): D.one, ((2,), ()): D.one})
    with pytest.raises(ValueError):
        expand_in_word_images(v)


def test_w_check_involution_and_base():
    one = VElem.one(D, 0)
    assert w_check(one) == one
    v = VElem(D, 1, {((2,), ()): t, ((1,), (1,)): D.one})
    assert w_check(w_check(v)) == v


def test_w_check_on_sym():
    # on V_0 the involution restricts to omega-bar
    f = SymFunc(D, "s", {(2,): q, (1, 1): D.one})
    v = VElem.from_symfunc(f)
    assert w_check(v).to_symfunc() == f.omega_bar()


def test_nabla_check_restricts_to_nabla_prime():
    one = VElem.one(D, 0)
    assert nabla_check(one) == one
    f = SymFunc(D, "s", {(2,): q, (1,): D.one})
    v = VElem.from_symfunc(f)
    assert nabla_check(v).to_symfunc() == mac.nabla(f, primed=True).convert("p")


def test_nabla_check_inverse():
    v = VElem(D, 1, {((2,), ()): D.one, ((1,), (1,)): q})
    assert nabla_check(nabla_check(v), inverse=True) == v
    assert nabla_check(nabla_check(v, inverse=True)) == v


def test_mq_push_through():
    arg = WordExpansion(1, [(D.one, (DP,))])
    mv = mq_apply(arg, 1, D)
    assert u_component_v(mv, 0) == VElem(D, 1, {((1,), ()): -D.one})
    assert u_component_v(mv, 1) == VElem(D, 1, {((2,), ()): -D.one})


def test_mq_base_case():
    # <u^0> of M^Q on the empty word is 1
    arg = WordExpansion(0, [(D.one, ())])
    mv = mq_apply(arg, 1, D)
    assert u_component_v(mv, 0) == VElem.one(D, 0)
    assert u_component_v(mv, 1).is_zero()


def test_mq_antilinear():
    arg = WordExpansion(1, [(q, (DP,))])
    mv = mq_apply(arg, 0, D)
    assert u_component_v(mv, 0) == VElem(D, 1, {((1,), ()): -(D.one / q)})


def test_mq_commutes_with_d_minus():
    base = WordExpansion(2, [(D.one, (DP, DP)), (t, (("T", 1), DP, DP))])
    lhs = mq_apply(WordExpansion(1, [(c, (DM,) + w) for c, w in base.terms]), 1, D)
    rhs = mq_apply(base, 1, D).d_minus()
    assert lhs == rhs


def test_expansion_serialization():
    exp = WordExpansion(1, [(q, (DP,))])
    recs = exp.to_records()
    assert recs[0]["word"] == "D+"
