"""Group arithmetic, dense sets, sumsets, spans, cosets, weight classes."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relrep import (ElementSet, GroupSpec, cyclotomic_cosets, hamming_weights,
                    is_prime, is_primitive_root, primitive_root, span, sumset,
                    sumset_reference, weight_class)
from relrep.groups import _walsh_hadamard


# -- GroupSpec basics ---------------------------------------------------------


def test_constructor_validation():
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSpec((1, 4))
    with pytest.raises(ValueError):
        GroupSpec((2,) * 21)  # over the default dense cap
    assert GroupSpec((2,) * 21, order_cap=1 << 21).order == 1 << 21


def test_scalar_arithmetic_examples():
    g = GroupSpec.cyclic(113)
    assert g.add(50, 63) == 0
    assert g.neg(1) == 112
    assert g.sub(3, 5) == 111
    g2 = GroupSpec.power(2, 10)
    assert all(g2.add(x, x) == 0 for x in (0, 1, 77, 1023))


@given(st.lists(st.integers(2, 9), min_size=1, max_size=4), st.data())
def test_encode_decode_round_trip(moduli, data):
    g = GroupSpec(moduli)
    x = data.draw(st.integers(0, g.order - 1))
    assert g.encode(g.decode(x)) == x
    coords = g.decode(x)
    assert len(coords) == g.rank
    assert all(0 <= c < n for c, n in zip(coords, g.moduli))


def test_bitstring_convention_leftmost_is_coordinate_zero():
    g = GroupSpec.power(2, 10)
    x = g.parse_element("1000000000")
    assert g.decode(x)[0] == 1 and sum(g.decode(x)) == 1
    assert g.format_element(x) == "1000000000"
    assert x == int("1000000000", 2)


def test_element_text_forms():
    cyc = GroupSpec.cyclic(7)
    assert cyc.parse_element("5") == 5 and cyc.format_element(5) == "5"
    mixed = GroupSpec((3, 4))
    x = mixed.encode((2, 1))
    assert mixed.format_element(x) == "2,1"
    assert mixed.parse_element("2,1") == x
    with pytest.raises(ValueError):
        cyc.parse_element("7")
    with pytest.raises(ValueError):
        GroupSpec.power(2, 4).parse_element("012")
    with pytest.raises(ValueError):
        GroupSpec.power(2, 4).parse_element("0123")


def test_out_of_range_elements_rejected():
    g = GroupSpec.cyclic(5)
    with pytest.raises(ValueError):
        g.add(5, 0)
    with pytest.raises(ValueError):
        g.neg(-1)


# -- ElementSet ----------------------------------------------------------------


def test_element_set_basics():
    g = GroupSpec.cyclic(10)
    s = ElementSet.from_indices(g, [1, 3, 3, 9])
    assert len(s) == 3 and 3 in s and 2 not in s
    assert list(s) == [1, 3, 9]
    assert s.negated() == ElementSet.from_indices(g, [9, 7, 1])
    assert s.translate(1) == ElementSet.from_indices(g, [2, 4, 0])
    assert (s | s.complement()) == ElementSet.full(g)
    assert not ElementSet.empty(g)
    assert s.is_symmetric is False
    assert ElementSet.from_indices(g, [2, 8]).is_symmetric


def test_element_set_group_mismatch():
    a = ElementSet.full(GroupSpec.cyclic(4))
    b = ElementSet.full(GroupSpec.cyclic(5))
    with pytest.raises(ValueError):
        _ = a | b
    with pytest.raises(ValueError):
        sumset(a, b)


def test_element_set_mask_is_immutable():
    s = ElementSet.full(GroupSpec.cyclic(4))
    with pytest.raises(ValueError):
        s.mask[0] = False


# -- sumsets ---------------------------------------------------------------------


def test_sumset_trivial_cases():
    g = GroupSpec.power(2, 5)
    s = ElementSet.from_indices(g, [3, 17, 30])
    assert sumset(ElementSet.empty(g), s) == ElementSet.empty(g)
    assert sumset(ElementSet.singleton(g, 0), s) == s


def test_weight_class_sumsets_match_reported_identities():
    g = GroupSpec.power(2, 10)
    low = weight_class(g, 1, 6)
    high = weight_class(g, 7, 10)
    assert sumset(high, high) == ElementSet.full(g) - high
    assert sumset(low, high) == ElementSet.full(g) - ElementSet.singleton(g, 0)
    assert sumset(low, low) == ElementSet.full(g)


small_groups = st.sampled_from([
    GroupSpec.cyclic(5), GroupSpec.cyclic(12), GroupSpec.cyclic(24),
    GroupSpec.power(2, 4), GroupSpec.power(2, 6), GroupSpec((3, 4)),
    GroupSpec((2, 3, 5)),
])


@settings(deadline=None)
@given(small_groups, st.data())
def test_sumset_agrees_with_reference(group, data):
    pick = st.lists(st.integers(0, group.order - 1), max_size=8)
    left = ElementSet.from_indices(group, data.draw(pick))
    right = ElementSet.from_indices(group, data.draw(pick))
    assert sumset(left, right) == sumset_reference(left, right)


@settings(deadline=None)
@given(small_groups, st.data())
def test_sumset_commutative_and_monotone(group, data):
    pick = st.lists(st.integers(0, group.order - 1), max_size=8)
    a = ElementSet.from_indices(group, data.draw(pick))
    b = ElementSet.from_indices(group, data.draw(pick))
    assert sumset(a, b) == sumset(b, a)
    assert sumset(a, b) <= sumset(a | b, b | a)
    assert sumset(a, ElementSet.singleton(group, 0)) == a


def test_walsh_hadamard_is_self_inverse_up_to_n():
    rng = np.random.default_rng(5)
    for k in (1, 3, 6):
        v = rng.integers(-4, 5, size=1 << k)
        assert np.array_equal(_walsh_hadamard(_walsh_hadamard(v)), v * (1 << k))


# -- span --------------------------------------------------------------------------


def test_span_trivial_and_cyclic():
    g = GroupSpec.cyclic(113)
    assert span(g, []).order == 1
    assert 0 in span(g, []).elements
    assert span(g, [1]).order == 113
    assert span(g, [0]).order == 1


def test_span_is_closed():
    g = GroupSpec((4, 6))
    sub = span(g, [g.encode((2, 0)), g.encode((0, 3))])
    elems = list(sub.elements)
    members = set(elems)
    for x in elems:
        assert g.neg(x) in members
        for y in elems:
            assert g.add(x, y) in members


def test_span_of_shipped_fixture_has_order_64(fixtures_dir):
    from relrep import parse_bitstrings
    g = GroupSpec.power(2, 10)
    lines = (fixtures_dir / "h52_k10.txt").read_text().splitlines()
    elements = parse_bitstrings(lines, 10)
    assert span(g, elements).order == 64


# -- primitive roots and cyclotomic cosets ----------------------------------------


def test_primitive_root_values():
    assert primitive_root(113) == 3
    assert primitive_root(2) == 1
    # direct-powering oracle for p = 7: order of 2 is 3, order of 3 is 6
    orders = {g: min(e for e in range(1, 7) if pow(g, e, 7) == 1) for g in (2, 3)}
    assert orders[2] == 3 and orders[3] == 6
    assert primitive_root(7) == 3


def test_primitive_root_rejects_composites():
    with pytest.raises(ValueError):
        primitive_root(112)
    assert is_prime(113) and not is_prime(1)


def test_is_primitive_root():
    assert is_primitive_root(3, 113)
    assert not is_primitive_root(2, 113)  # 2 = 3^? has even index: 2^56 = 1 mod 113
    assert pow(2, 56, 113) == 1


def test_cyclotomic_cosets_113():
    cosets = cyclotomic_cosets(113, 8, 3)
    assert [len(c) for c in cosets] == [14] * 8
    union = cosets[0]
    for c in cosets[1:]:
        union = union | c
    g = cosets[0].group
    assert union == ElementSet.full(g) - ElementSet.singleton(g, 0)
    assert 112 in cosets[0]  # -1 = 3^56 and 56 = 0 mod 8
    assert pow(3, 56, 113) == 112


def test_cyclotomic_cosets_edge_cases():
    assert list(cyclotomic_cosets(7, 1)[0]) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(ValueError):
        cyclotomic_cosets(113, 9)
    with pytest.raises(ValueError):
        cyclotomic_cosets(113, 8, g=2)
    with pytest.raises(ValueError):
        cyclotomic_cosets(112, 8)


def test_coset_stability_under_subgroup_action():
    # multiplying X_i by any element of X_0 permutes X_i onto itself
    p, m = 13, 4
    cosets = cyclotomic_cosets(p, m)
    for u in cosets[0]:
        for c in cosets:
            assert {x * u % p for x in c} == set(c)


def test_sumsets_of_cosets_are_coset_saturated():
    p, m = 13, 4
    cosets = cyclotomic_cosets(p, m)
    for j in range(m):
        for k in range(m):
            s = sumset(cosets[j], cosets[k])
            for c in cosets:
                overlap = len(c & s)
                assert overlap in (0, len(c))


# -- weight classes ------------------------------------------------------------------


def test_weight_class_sizes_against_binomial_sums():
    g = GroupSpec.power(2, 10)
    assert len(weight_class(g, 1, 6)) == sum(math.comb(10, w) for w in range(1, 7)) == 847
    assert len(weight_class(g, 7, 10)) == sum(math.comb(10, w) for w in range(7, 11)) == 176
    assert len(weight_class(g, 0, 10)) == 1024


def test_weight_class_validation():
    with pytest.raises(ValueError):
        weight_class(GroupSpec.cyclic(8), 0, 1)
    with pytest.raises(ValueError):
        weight_class(GroupSpec.power(2, 4), 2, 5)
    with pytest.raises(ValueError):
        weight_class(GroupSpec.power(2, 4), -1, 2)


def test_hamming_weights_match_bit_count():
    w = hamming_weights(11)
    for x in (0, 1, 5, 1000, 2047):
        assert int(w[x]) == x.bit_count()
