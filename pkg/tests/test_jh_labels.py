from collections import Counter

import pytest

from category_o.errors import ParabolicError
from category_o.jh_labels import (
    InducedLabel,
    SmoothLabel,
    expand_label,
    irreducibility_test,
    jh_series,
    steinberg_constituents,
    transitivity_rewrite,
)
from category_o.roots import root_system
from category_o.weyl import ParabolicSubset, max_parabolic_for


@pytest.fixture
def a2():
    return root_system("A2")


def test_steinberg_constituents_order(a2):
    labels = steinberg_constituents(ParabolicSubset.borel(2), ParabolicSubset.full(2))
    assert len(labels) == 4
    assert labels[0].kind == "trivial"
    assert [sorted(label.parabolic.indices) for label in labels[1:]] == [[1], [2], []]
    assert labels[-1].text() == "v^G_B"


def test_steinberg_constituents_equal_parabolics(a2):
    P = ParabolicSubset.of([1], 2)
    labels = steinberg_constituents(P, P)
    assert len(labels) == 1
    assert labels[0].kind == "trivial"


def test_steinberg_constituents_need_containment():
    with pytest.raises(ParabolicError):
        steinberg_constituents(ParabolicSubset.of([1], 2), ParabolicSubset.of([2], 2))


def test_sl2_series():
    rs = root_system("A1")
    series = jh_series(rs, [rs.weight([0]), rs.weight([-2])], SmoothLabel.trivial(), ParabolicSubset.borel(1))
    assert series.total_length == 3
    assert [c.index for c in series.constituents] == [0, 0, 1]
    assert series.constituents[0].text() == "F^G_G(L(0), 1)"
    assert series.constituents[1].text() == "F^G_G(L(0), v^G_B)"
    assert series.constituents[2].text() == "F^G_B(L(-2), 1)"


def test_series_concatenation_is_additive(a2):
    first = [a2.weight([0, 0]), a2.weight([-2, 1])]
    second = [a2.weight([1, -2]), a2.weight([-2, -2])]
    P = ParabolicSubset.borel(2)
    whole = jh_series(a2, first + second, SmoothLabel.trivial(), P).multiset()
    parts = Counter(jh_series(a2, first, SmoothLabel.trivial(), P).multiset())
    parts.update(jh_series(a2, second, SmoothLabel.trivial(), P).multiset())
    assert whole == dict(parts)


def test_series_rejects_factor_outside_category(a2):
    with pytest.raises(ParabolicError):
        jh_series(a2, [a2.weight([-2, 1])], SmoothLabel.trivial(), ParabolicSubset.of([1], 2))


def test_opaque_smooth_stays_unresolved():
    rs = root_system("A1")
    series = jh_series(rs, [rs.weight([0])], SmoothLabel.parse("opaque:pi"), ParabolicSubset.borel(1))
    assert series.total_length == 1
    assert not series.constituents[0].resolved
    assert series.constituents[0].smooth.kind == "induction"


def test_opaque_factors_refine_when_levi_is_unchanged():
    rs = root_system("A1")
    V = SmoothLabel.opaque("pi", factors=[SmoothLabel.opaque("pi1", True), SmoothLabel.opaque("pi2", True)])
    series = jh_series(rs, [rs.weight([0])], V, ParabolicSubset.full(1))
    assert [c.smooth.name for c in series.constituents] == ["pi1", "pi2"]
    assert all(c.resolved for c in series.constituents)


def test_opaque_factors_are_induced_to_larger_levi():
    rs = root_system("A1")
    V = SmoothLabel.opaque("pi", factors=[SmoothLabel.opaque("pi1", True), SmoothLabel.opaque("pi2", True)])
    series = jh_series(rs, [rs.weight([0])], V, ParabolicSubset.borel(1))
    assert [c.smooth.kind for c in series.constituents] == ["induction", "induction"]
    assert [c.smooth.inner.name for c in series.constituents] == ["pi1", "pi2"]
    assert not any(c.resolved for c in series.constituents)


def test_smooth_label_parsing():
    assert SmoothLabel.parse("trivial") == SmoothLabel.trivial()
    label = SmoothLabel.parse("opaque:pi:irreducible")
    assert label.name == "pi"
    assert label.is_irreducible
    with pytest.raises(ParabolicError):
        SmoothLabel.parse("cuspidal")


def test_irreducibility_verdicts():
    rs = root_system("A1")
    zero = rs.weight([0])
    trivial = SmoothLabel.trivial()
    assert irreducibility_test(rs, zero, trivial, ParabolicSubset.borel(1), 5).verdict == "reducible"
    assert irreducibility_test(rs, zero, trivial, ParabolicSubset.full(1), 5).verdict == "irreducible"
    opaque = SmoothLabel.opaque("pi")
    assert irreducibility_test(rs, zero, opaque, ParabolicSubset.borel(1), 5).verdict == "unknown"
    assert irreducibility_test(rs, rs.weight([-2]), trivial, ParabolicSubset.borel(1), 5).verdict == "irreducible"


def test_transitivity_identity(a2):
    label = InducedLabel(ParabolicSubset.borel(2), a2.weight([0, 0]), SmoothLabel.trivial())
    assert transitivity_rewrite(a2, label, ParabolicSubset.borel(2)) == label


def test_transitivity_preserves_constituents(a2):
    B, G = ParabolicSubset.borel(2), ParabolicSubset.full(2)
    label = InducedLabel(B, a2.weight([0, 0]), SmoothLabel.trivial())
    expected = [c.smooth for c in expand_label(a2, label)]
    assert expected == steinberg_constituents(B, G)
    rewritten = transitivity_rewrite(a2, label, G)
    assert rewritten.base == G
    assert [c.smooth for c in expand_label(a2, rewritten)] == expected
    middle = transitivity_rewrite(a2, label, ParabolicSubset.of([2], 2))
    assert [c.smooth for c in expand_label(a2, middle)] == expected


def test_transitivity_bounded_by_max_parabolic(a2):
    label = InducedLabel(ParabolicSubset.borel(2), a2.weight([-2, 1]), SmoothLabel.trivial())
    with pytest.raises(ParabolicError):
        transitivity_rewrite(a2, label, ParabolicSubset.of([1], 2))


def test_gl2_series_labels():
    rs = root_system("GL2")
    factors = [rs.weight([0, 0]), rs.weight([-1, 1])]
    series = jh_series(rs, factors, SmoothLabel.trivial(), ParabolicSubset.borel(1))
    assert series.total_length == 3
    assert [c.text(True) for c in series.constituents] == [
        "F^G_P(2)(L(0,0), 1)",
        "F^G_P(2)(L(0,0), v^P(2)_P(1,1))",
        "F^G_P(1,1)(L(-1,1), 1)",
    ]


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_total_length_formula(label):
    rs = root_system(label)
    P = ParabolicSubset.borel(2)
    factors = [rs.weight(w) for w in ([0, 0], [-2, 1], [1, -2], [-2, -2], [3, 0])]
    series = jh_series(rs, factors, SmoothLabel.trivial(), P)
    expected = sum(2 ** len(max_parabolic_for(rs, mu).indices - P.indices) for mu in factors)
    assert series.total_length == expected
