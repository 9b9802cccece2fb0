import itertools

import pytest

from bandbricks.correspondence import w_ba
from bandbricks.exceptions import CrownError, NotAcyclicError, TracedPosetError
from bandbricks.presentation import is_isomorphic, make_presentation, solve_signs
from bandbricks.strings import make_band
from bandbricks.traced_poset import (
    build_traced_poset,
    covering_quiver,
    enumerate_valid_crowns,
    linear_traced_poset,
    make_crown,
    make_traced_poset,
    recover_presentation,
    traced_poset_from_json,
    validate_traced_poset,
    wpc_pair,
    wpc_pair_literal,
    wpc_witness,
)
from bandbricks.words import is_wpc_crown

from conftest import EX74

ALL = ["gamma", "gamma_prime", "gamma_double_prime", "lambda_2", "lambda_3", "lambda_4", "a2"]

# Hasse diagram of the barbell poset, as (lower, upper)
BARBELL_COVERS = {
    (("v1", 1), ("v3", 1)),
    (("v1", -1), ("v3", -1)),
    (("v2", 1), ("v1", 1)),
    (("v2", 1), ("v3", -1)),
    (("v2", -1), ("v3", 1)),
    (("v2", -1), ("v1", -1)),
    (("v4", 1), ("v6", -1)),
    (("v5", -1), ("v6", -1)),
    (("v5", 1), ("v6", 1)),
    (("v4", -1), ("v6", 1)),
    (("v5", 1), ("v4", 1)),
    (("v4", 1), ("v1", 1)),
    (("v5", -1), ("v4", -1)),
    (("v4", -1), ("v1", -1)),
}


def n(v, i):
    return (v, i)


def test_covering_quiver_edges(load):
    q = covering_quiver(load("gamma_double_prime"))
    edges = {(str(e.syllable), e.source, e.target) for e in q.edges}
    assert ("a3", n("v3", 1), n("v1", 1)) in edges
    assert ("b^-1", n("v4", -1), n("v1", -1)) in edges


@pytest.mark.parametrize("name", ALL)
def test_covering_quiver_counts(load, name):
    p = load(name)
    q = covering_quiver(p)
    assert len(q.nodes) == 2 * len(p.vertices)
    assert len(q.edges) == 2 * len(p.arrows)
    assert q.to_dot().startswith("digraph")


def test_barbell_hasse_diagram(load):
    t = build_traced_poset(load("gamma_double_prime"))
    assert set(t.covers) == BARBELL_COVERS


def test_barbell_maximal_traces(load):
    t = build_traced_poset(load("gamma_double_prime"))
    expected = {
        (n("v1", -1), n("v2", -1)),
        (n("v2", -1), n("v3", 1)),
        (n("v3", 1), n("v1", 1), n("v4", 1)),
        (n("v1", 1), n("v4", 1), n("v5", 1)),
        (n("v5", 1), n("v6", 1)),
        (n("v6", 1), n("v4", -1)),
        (n("v4", -1), n("v1", -1), n("v3", -1)),
        (n("v3", -1), n("v2", 1)),
        (n("v2", 1), n("v1", 1)),
    }
    found = set(t.maximal_traces())
    assert expected <= found
    mirrored = {tuple(t.mu[x] for x in reversed(s)) for s in expected}
    assert found == expected | mirrored


@pytest.mark.parametrize("name", ALL)
def test_opposite_signs_incomparable(load, name):
    t = build_traced_poset(load(name))
    for x in t.elements:
        assert not t.comparable(x, t.mu[x])


@pytest.mark.parametrize("name", ["gamma_double_prime", "lambda_2", "lambda_3", "lambda_4", "a2"])
def test_axioms_hold(load, name):
    t = build_traced_poset(load(name))
    assert validate_traced_poset(t).ok
    assert t.report.ok


@pytest.mark.parametrize("name", ["gamma", "gamma_prime"])
def test_parallel_paths_break_cover_axiom(load, name):
    rep = build_traced_poset(load(name)).report
    assert not rep.ok
    assert set(rep.axioms()) <= {"3", "3'"}


def test_mu_deletion_breaks_axiom_5(load):
    t = build_traced_poset(load("lambda_3"))
    mu = dict(t.mu)
    del mu[n("v1", 1)]
    bad = make_traced_poset(t.elements, t.covers, t.traces.values(), mu)
    assert "5" in validate_traced_poset(bad).axioms()


def test_truncated_trace_is_caught(load):
    t = build_traced_poset(load("gamma_double_prime"))
    traces = [s for s in t.traces.values() if s != (n("v3", 1), n("v1", 1), n("v4", 1))]
    traces.append((n("v3", 1), n("v4", 1)))
    bad = make_traced_poset(t.elements, t.covers, traces, t.mu)
    assert {"closure", "3", "3'", "6"} & set(validate_traced_poset(bad).axioms())


def test_cycle_rejected():
    p = solve_signs(make_presentation(["u", "w"], [("x", "u", "w"), ("y", "w", "u")], [("x", "y"), ("y", "x")]))
    with pytest.raises(NotAcyclicError):
        build_traced_poset(p)


@pytest.mark.parametrize("name", ALL)
def test_json_round_trip(load, name):
    t = build_traced_poset(load(name))
    u = traced_poset_from_json(t.to_json())
    assert u.less == t.less and u.traces == t.traces and u.mu == t.mu


def test_json_rejects_unknown_schema():
    with pytest.raises(TracedPosetError):
        traced_poset_from_json('{"schema": 9, "elements": [], "traces": [], "mu": []}')


@pytest.mark.parametrize("name", ["gamma", "gamma_prime", "gamma_double_prime", "lambda_2", "lambda_3", "lambda_4"])
def test_recover_round_trip(load, name):
    p = load(name)
    q = recover_presentation(build_traced_poset(p))
    assert is_isomorphic(p, q)
    assert build_traced_poset(q).less is not None


def test_recover_single_vertex():
    p = solve_signs(make_presentation(["v"], [], []))
    t = build_traced_poset(p)
    assert len(t.elements) == 2 and not t.less
    q = recover_presentation(t)
    assert list(q.vertices) == ["v"] and not q.arrows


def test_recover_rejects_broken_poset(load):
    t = build_traced_poset(load("lambda_2"))
    mu = dict(t.mu)
    mu[n("v1", 1)] = n("v1", 1)
    with pytest.raises(TracedPosetError):
        recover_presentation(make_traced_poset(t.elements, t.covers, t.traces.values(), mu))


@pytest.mark.parametrize("name,max_len", [("lambda_2", 4), ("lambda_3", 4), ("lambda_4", 4), ("gamma", 4), ("gamma_double_prime", 6)])
def test_shift_pairs_match_literal_definition(load, name, max_len):
    t = build_traced_poset(load(name))
    crowns = enumerate_valid_crowns(t, max_len, primitive=False)
    assert crowns
    for c1, c2 in itertools.product(crowns, repeat=2):
        assert wpc_pair(t, c1, c2) == wpc_pair_literal(t, c1, c2)


def test_linear_posets_agree_with_word_test(load):
    t = build_traced_poset(load("lambda_3"))
    checked = 0
    for c in enumerate_valid_crowns(t, 6):
        letters = c.letters
        if {i for _, i in letters} != {1}:
            continue
        word = tuple(int(v[1:]) for v, _ in letters)
        assert wpc_pair(t, c, c) == is_wpc_crown(word)
        checked += 1
    assert checked == 44


def test_linear_traced_poset_matches_family(load):
    t = linear_traced_poset([1, 2, 3])
    assert validate_traced_poset(t).ok
    family = build_traced_poset(load("lambda_3"))
    rename = {(f"v{a}", i): (a, i) for a in (1, 2, 3) for i in (1, -1)}
    assert {(rename[x], rename[y]) for x, y in family.less} == set(t.less)
    crowns = [c for c in enumerate_valid_crowns(t, 6) if {i for _, i in c.letters} == {1}]
    assert len(crowns) == 44
    for c in crowns:
        word = tuple(a for a, _ in c.letters)
        assert wpc_pair(t, c, c) == is_wpc_crown(word)


def test_barbell_band_witness(load):
    p = load("gamma_double_prime_relaxed")
    t = build_traced_poset(p)
    w = w_ba(make_band(p, EX74))
    assert not wpc_pair(t, w, w)
    r1 = (n("v5", -1), n("v3", -1), n("v2", -1), n("v1", 1), n("v5", 1))
    r2 = (n("v4", -1), n("v3", -1), n("v2", -1), n("v1", 1), n("v4", 1))
    rots = {w.letters[i:] + w.letters[:i] for i in range(len(w))}
    assert any(r[:5] == r1 for r in rots) and any(r[:5] == r2 for r in rots)
    assert wpc_witness(t, w, w) is not None


def test_invalid_crowns_rejected(load):
    t = build_traced_poset(load("lambda_3"))
    with pytest.raises(CrownError):
        make_crown(t, [n("v1", 1), n("v1", -1)])
    c = make_crown(t, [n("v1", 1), n("v3", 1)])
    assert c.valid and c.special
    u = build_traced_poset(load("gamma_double_prime"))
    half = make_crown(u, [n("v1", 1), n("v3", 1)])
    assert not half.valid
    with pytest.raises(CrownError):
        wpc_pair(u, half, half)
