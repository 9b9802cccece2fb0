import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandbricks.exceptions import BandError, StringError
from bandbricks.strings import (
    Syllable,
    canonical_form,
    cyclic_permutations,
    enumerate_bands,
    enumerate_strings,
    is_primitive_sequence,
    make_band,
    make_string,
    periods,
    standard_partition,
)

from conftest import EX41, EX74


def test_written_order_is_reversed_internally(load):
    x = make_string(load("gamma"), "b e")
    assert x.syllables == (Syllable("e"), Syllable("b"))
    assert str(x) == "b e"


def test_relation_and_backtrack_are_rejected(load):
    p = load("gamma")
    with pytest.raises(StringError) as err:
        make_string(p, "a c")
    assert err.value.reason == "relation"
    with pytest.raises(StringError) as err:
        make_string(p, "a a^-1")
    assert err.value.reason == "backtrack"


def test_trivial_strings(load):
    x = make_string(load("gamma"), "1(v2,-1)")
    assert x.is_trivial and x.start_element == ("v2", -1) == x.end_element
    assert x.inverse().trivial == ("v2", 1)


def test_standard_partition_of_example_band(load):
    b = make_band(load("gamma"), EX41)
    parts = [str(x) for x in standard_partition(b.string)]
    assert parts == ["a^-1", "e", "d^-1", "b e c"]


def test_example_band_not_a_string_of_the_barbell(load):
    with pytest.raises(StringError):
        make_string(load("gamma_double_prime"), EX74)


def test_band_axioms_named(load):
    p = load("gamma")
    with pytest.raises(BandError) as err:
        make_band(p, "e a^-1 b")
    assert err.value.axiom in {"cyclic", "first-inverse", "last-direct"}
    with pytest.raises(BandError) as err:
        make_band(p, "b e c d^-1 e a^-1 b e c d^-1 e a^-1")
    assert err.value.axiom == "primitive"


# frozen from the brute-force enumerator; counts per exact length 1..12
BAND_COUNTS = {
    "gamma": [0, 0, 2, 0, 0, 1, 0, 0, 2, 0, 0, 3],
    "lambda_2": [0, 1] + [0] * 10,
}


@pytest.mark.parametrize("name", sorted(BAND_COUNTS))
def test_band_counts(load, name):
    bands = enumerate_bands(load(name), 12)
    counts = [sum(len(b) == n for b in bands) for n in range(1, 13)]
    assert counts == BAND_COUNTS[name]


@pytest.mark.parametrize("name", ["gamma", "gamma_prime", "lambda_3"])
def test_enumeration_is_canonical_and_deduplicated(load, name):
    bands = enumerate_bands(load(name), 10)
    assert len({b.canonical for b in bands}) == len(bands)
    for b in bands:
        assert b.syllables == b.canonical
        assert canonical_form(b.canonical) == b.canonical
        assert canonical_form(b.inverse().syllables) == b.canonical


def test_every_band_shaped_rotation_has_same_canonical_form(load):
    for b in enumerate_bands(load("lambda_3"), 8):
        for _, x, special in cyclic_permutations(b):
            if x.syllables[0].inverse and not x.syllables[-1].inverse:
                assert make_band(b.presentation, x).canonical == b.canonical


def test_string_enumeration_closed_under_inverse(load):
    p = load("gamma")
    strings = {(x.syllables, x.trivial) for x in enumerate_strings(p, 5)}
    for syls, triv in strings:
        if syls:
            assert (tuple(s.inv() for s in reversed(syls)), None) in strings


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=30))
def test_fine_wilf_gcd_period(seq):
    ps = sorted(periods(seq))
    for p1 in ps:
        for p2 in ps:
            from math import gcd

            g = gcd(p1, p2)
            if len(seq) >= p1 + p2 - g:
                assert g in ps


def test_gcd_of_periods_needs_length():
    # periods 2 and 3 of "aba" exist but 1 is not a period
    assert {2, 3} <= periods("aba") and 1 not in periods("aba")


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=8), st.integers(2, 4))
def test_powers_are_not_primitive(base, k):
    assert not is_primitive_sequence(base * k)
