import pytest

from bandbricks.correspondence import (
    BandModuleSpec,
    is_brick,
    is_brick_infinite,
    is_semibrick,
    morphism_exists,
    w_ba,
    w_ba_inverse,
    w_st,
    w_st_inverse,
)
from bandbricks.exceptions import BandBricksError, CrownError, NotAcyclicError, StringError
from bandbricks.morphisms import morphism_exists as oracle_morphism
from bandbricks.morphisms import oracle_is_brick
from bandbricks.presentation import make_presentation, solve_signs
from bandbricks.strings import (
    AlgString,
    cyclic_permutations,
    enumerate_bands,
    enumerate_strings,
    make_band,
    make_string,
    standard_partition,
)
from bandbricks.traced_poset import build_traced_poset, is_valid_zigzag
from bandbricks.words import phi_tilde

from conftest import EX41, EX74

BARBELL_CROWN = (
    ("v4", 1), ("v6", -1), ("v5", -1), ("v3", -1), ("v2", -1), ("v1", 1),
    ("v5", 1), ("v6", 1), ("v4", -1), ("v3", -1), ("v2", -1), ("v1", 1),
)


def test_w_st_of_example_band(load):
    x = make_string(load("gamma"), EX41)
    w = w_st(x)
    assert len(w) == 5 == len(standard_partition(x)) + 1
    assert [v for v, _ in w] == ["v1", "v3", "v2", "v4", "v1"]
    assert is_valid_zigzag(build_traced_poset(x.presentation), w)


def test_w_st_trivial(load):
    p = load("gamma")
    x = AlgString(p, (), ("v2", -1))
    assert w_st(x) == (("v2", -1),)
    assert w_st_inverse(p, [("v2", -1)]).trivial == ("v2", -1)


def test_w_st_inverse_rejects_invalid(load):
    p = load("gamma_double_prime")
    with pytest.raises(StringError):
        w_st_inverse(p, [("v1", 1), ("v3", 1)])
    with pytest.raises(StringError):
        w_st_inverse(p, [])


@pytest.mark.parametrize("name", ["gamma_double_prime", "gamma"])
def test_string_round_trip(load, name):
    p = load(name)
    strings = enumerate_strings(p, 8)
    assert strings
    for x in strings:
        assert w_st_inverse(p, w_st(x)).syllables == x.syllables


def test_band_round_trip(load):
    p = load("gamma_double_prime")
    bands = enumerate_bands(p, 10)
    assert bands
    for b in bands:
        c = w_ba(b)
        assert c.valid and c.special
        assert len(c) == len(standard_partition(b.canonical_band().string))
        back = make_band(p, w_ba_inverse(p, c))
        assert back.same_class(b)


def test_barbell_crown_verbatim(load):
    b = make_band(load("gamma_double_prime_relaxed"), EX74)
    assert w_ba(b).letters == BARBELL_CROWN


def test_barbell_band_is_not_a_string_of_barbell(load):
    with pytest.raises(BandBricksError):
        make_band(load("gamma_double_prime"), EX74)


def test_crown_inverse_reproduces_phi_tilde(load):
    p = load("lambda_4")
    crown = [("v1", 1), ("v3", 1), ("v2", 1), ("v4", 1)]
    assert w_ba_inverse(p, crown).syllables == phi_tilde("1324", p).syllables


def test_w_ba_rejects_non_special_string(load):
    x = make_string(load("gamma"), "c d^-1 e a^-1 b e")
    with pytest.raises(CrownError):
        w_ba(x)


def test_brick_examples(load):
    b = make_band(load("gamma"), EX41)
    assert is_brick(b)
    assert not is_brick(b, l=2)
    assert is_brick(BandModuleSpec(b, l=1, lam="t"))
    assert not is_brick(BandModuleSpec(b, l=3))
    with pytest.raises(ValueError):
        is_brick(b, l=0)
    nb = make_band(load("gamma_double_prime_relaxed"), EX74)
    assert not is_brick(nb)


def test_brick_invariant_under_rotation_and_inverse(load):
    p = load("gamma")
    for b in enumerate_bands(p, 9):
        flag = is_brick(b)
        shaped = [r for _, r, _ in cyclic_permutations(b) if r.syllables[0].inverse and not r.syllables[-1].inverse]
        assert len(shaped) >= 1
        for r in shaped:
            rb = make_band(p, r)
            assert is_brick(rb) == flag
            assert is_brick(rb.inverse()) == flag


def test_brick_requires_acyclic_quiver():
    p = solve_signs(make_presentation(["u"], [("x", "u", "u")], [("x", "x")]))
    with pytest.raises(NotAcyclicError):
        build_traced_poset(p)


@pytest.mark.parametrize("name", ["gamma", "gamma_double_prime"])
def test_pair_criterion_matches_morphisms(load, name):
    bands = enumerate_bands(load(name), 8)
    for b1 in bands:
        for b2 in bands:
            assert morphism_exists(b1, b2) == oracle_morphism(b1, b2)


def test_semibrick(load):
    p = load("gamma")
    b = make_band(p, EX41)
    assert is_semibrick([b]) == is_brick(b)
    assert is_semibrick([BandModuleSpec(b, lam=1), BandModuleSpec(b, lam=2)])
    with pytest.raises(BandBricksError):
        is_semibrick([BandModuleSpec(b), BandModuleSpec(b)])
    with pytest.raises(ValueError):
        is_semibrick([])
    assert not is_semibrick([BandModuleSpec(b, l=2)])
    nb = make_band(load("gamma_double_prime_relaxed"), EX74)
    others = enumerate_bands(nb.presentation, 6)
    assert not is_semibrick([nb] + [o for o in others[:1] if not o.same_class(nb)])


def test_semibrick_pairs_match_oracle(load):
    bands = enumerate_bands(load("lambda_3"), 6)
    bricks = [b for b in bands if oracle_is_brick(b)]
    for b1 in bricks:
        for b2 in bricks:
            if b1.same_class(b2):
                continue
            expect = not (oracle_morphism(b1, b2) or oracle_morphism(b2, b1))
            assert is_semibrick([b1, b2]) == expect


def test_brick_infinite(load):
    r = is_brick_infinite(load("lambda_2"))
    assert r and r.witness.same_class(make_band(load("lambda_2"), "a1 b1^-1"))
    assert not is_brick_infinite(load("a2"))
    g = is_brick_infinite(load("gamma"))
    assert g.brick_infinite and len(g.witness) <= 8 and oracle_is_brick(g.witness)
    assert is_brick_infinite(load("gamma"), method="oracle").brick_infinite
    with pytest.raises(ValueError):
        is_brick_infinite(load("gamma"), method="guess")
