"""Path combinatorics: statistics, enumerations, labellings."""

import pytest

from nsdelta.paths import (
    DecoratedPath,
    DyckPath,
    PartialPath,
    dinv,
    dinv_pairs,
    dinv_variants,
    enumerate_decorated,
    enumerate_dyck,
    enumerate_labels,
    enumerate_partial,
    marking_to_text,
    parse_marking,
    path_stats,
)

FIG2 = DyckPath.from_string("NNNEENEENNNEENEE")
FIG2_LABELS = (1, 2, 3, 2, 1, 3, 4, 4)


def test_figure2_statistics():
    dec = DecoratedPath(FIG2, {2, 6})
    area, dcomp, touches = path_stats(dec)
    assert area == 6
    assert dcomp == (3, 3)
    assert touches == [(0, 0), (4, 4), (8, 8)]
    assert dinv(FIG2, FIG2_LABELS) == 9
    expected = {(2, 5), (2, 6), (2, 8), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (6, 8)}
    assert dinv_pairs(FIG2, FIG2_LABELS) == frozenset(expected)


def test_area_word_and_rises():
    assert FIG2.area_word == (0, 1, 2, 1, 0, 1, 2, 1)
    assert FIG2.double_rises() == (2, 3, 6, 7)
    with pytest.raises(ValueError):
        DecoratedPath(FIG2, {4})


def test_attack_pairs_small():
    assert DyckPath.from_string("NENE").attack_pairs() == frozenset({(1, 2)})
    assert DyckPath.from_string("NNEE").attack_pairs() == frozenset()


def test_area_pairs_small():
    # the LLT inversion set: area cells as (column, row) pairs
    assert DyckPath.from_string("NENE").area_pairs() == frozenset()
    assert DyckPath.from_string("NNEE").area_pairs() == frozenset({(1, 2)})
    assert DyckPath.from_string("NNENEE").area_pairs() == frozenset({(1, 2), (2, 3)})
    for path in enumerate_dyck(5):
        assert len(path.area_pairs()) == sum(path.area_word)


def test_catalan_counts():
    assert [len(enumerate_dyck(n)) for n in range(1, 9)] == [
        1, 2, 5, 14, 42, 132, 429, 1430,
    ]


def test_dcomp_decoration_bookkeeping():
    for n in range(1, 7):
        for path in enumerate_dyck(n):
            rises = path.double_rises()
            for k in range(len(rises) + 1):
                for dec in (DecoratedPath(path, rises[:k]),):
                    assert sum(dec.dcomp()) + len(dec.dr) == n


def test_enumerate_decorated():
    assert enumerate_decorated(2, 0, (1, 1)) == [DecoratedPath(DyckPath.from_string("NENE"))]
    assert enumerate_decorated(2, 1, (1,)) == [
        DecoratedPath(DyckPath.from_string("NNEE"), {2})
    ]
    assert enumerate_decorated(1, 1) == []


def test_labels_modes():
    nnee = DyckPath.from_string("NNEE")
    nene = DyckPath.from_string("NENE")
    assert enumerate_labels(nnee, "FWPF_weak", 5) == [(1, 1)]
    assert enumerate_labels(nene, "FWPF_weak", 5) == [(1, 1), (1, 2)]
    assert enumerate_labels(nnee, "PF", 2) == [(1, 2)]
    assert enumerate_labels(nnee, "FWPF", 3) == [(1, 2), (1, 3)]
    with pytest.raises(ValueError):
        enumerate_labels(nnee, "bogus", 2)


def test_flag_respects_ell():
    # with ell=1 only the first diagonal north step is bounded
    nene = DyckPath.from_string("NENE")
    assert enumerate_labels(nene, "FWPF_weak", 3, ell=1) == [(1, 1), (1, 2), (1, 3)]


def test_dinv_variants():
    nene = DyckPath.from_string("NENE")
    assert dinv_variants(nene, (1, 2), "strict_lt") == 1
    assert dinv_variants(nene, (1, 1), "strict_lt") == 0
    assert dinv_variants(nene, (1, 1), "weak_ge") == 1
    assert dinv_variants(nene, (1, 2), "weak_ge") == 0
    # the weak statistic flips across the diagonal step
    nneene = DyckPath.from_string("NNEENE")
    assert nneene.area_word == (0, 1, 0)
    assert dinv_variants(nneene, (1, 1, 2), "weak_ge") == 1  # pair (2,3), w_2 <= w_3
    assert dinv_variants(nneene, (1, 1, 1), "weak_ge") == 2


def test_partial_paths():
    assert sorted(str(p) for p in enumerate_partial(1, 2)) == ["ENE", "NEE"]
    assert [str(p) for p in enumerate_partial(2, 2)] == ["EE"]
    assert len(enumerate_partial(1, 3)) == 5
    pp = PartialPath.from_string(1, "ENE")
    assert pp.full == DyckPath.from_string("NENE")
    assert pp.corners() == ((1, 2),)
    assert pp.markings() == [frozenset(), frozenset({(1, 2)})]


def test_marking_literals():
    sigma = parse_marking("(2,1);(6,4)")
    assert sigma == frozenset({(1, 2), (4, 6)})
    assert parse_marking(marking_to_text(sigma)) == sigma


def test_invalid_paths():
    with pytest.raises(ValueError):
        DyckPath.from_string("EN")
    with pytest.raises(ValueError):
        DyckPath.from_string("NNE")
