import pytest

from bandbricks import catalog
from bandbricks.exceptions import PresentationError, SignError
from bandbricks.presentation import (
    is_isomorphic,
    make_presentation,
    parse_presentation,
    serialize_presentation,
    sign_violations,
    solve_signs,
    validate,
)


@pytest.mark.parametrize("name", catalog.available())
def test_round_trip_text(name):
    p = catalog.load(name, signs=False)
    assert parse_presentation(serialize_presentation(p)) == p


@pytest.mark.parametrize(
    "name,string,gentle,acyclic",
    [
        ("gamma", True, True, True),
        ("gamma_prime", True, True, True),
        ("gamma_double_prime", True, False, True),
        ("lambda_3", True, True, True),
        ("a2", True, True, True),
        ("gp23", True, False, False),
    ],
)
def test_validate_fixtures(name, string, gentle, acyclic):
    r = validate(catalog.load(name, signs=False))
    assert (r.is_string_algebra, r.is_gentle, r.is_acyclic) == (string, gentle, acyclic)


def test_gp23_cycle_is_reported():
    r = validate(catalog.load("gp23", signs=False))
    assert r.cycle and set(r.cycle) <= {"a", "b"}


def test_three_arrows_out_breaks_condition_one():
    p = make_presentation(["u", "v"], [("x", "u", "v"), ("y", "u", "v"), ("z", "u", "v")])
    r = validate(p)
    assert not r and any(v[0] == "I" for v in r.violations)


def test_two_free_continuations_break_condition_two():
    p = make_presentation(["u", "v", "w", "x"], [("a", "u", "v"), ("b", "v", "w"), ("c", "v", "x")])
    assert any(v[0] == "II" for v in validate(p).violations)


def test_unbounded_loop_breaks_condition_three():
    p = make_presentation(["v"], [("a", "v", "v")])
    assert any(v[0] == "III" for v in validate(p).violations)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(PresentationError, match="line 2"):
        parse_presentation("vertices: u v\narrow a u -> v\n")
    with pytest.raises(PresentationError):
        parse_presentation("vertices: u v\narrow a : u -> w\n")
    with pytest.raises(PresentationError):
        parse_presentation("vertices: u v w\narrow a : u -> v\narrow b : v -> w\nrelation a*b\n")


@pytest.mark.parametrize("name", ["gamma", "gamma_prime", "gamma_double_prime", "lambda_2", "lambda_4"])
def test_solved_signs_satisfy_constraints(name):
    p = solve_signs(catalog.load(name, signs=False).without_signs())
    assert sign_violations(p) == []


def test_hand_fixed_signs_on_barbell_are_valid(load):
    p = load("gamma_double_prime")
    assert sign_violations(p) == []
    assert (p.sigma("a3"), p.eps("a3")) == (-1, 1)


def test_bad_signs_rejected():
    with pytest.raises(SignError):
        make_presentation(["u", "v"], [("a", "u", "v"), ("b", "u", "v")], signs={"a": (1, 1), "b": (1, -1)})


def test_isomorphism_ignores_names(load):
    p = load("gamma")
    text = serialize_presentation(p)
    for old, new in [("v1", "q1"), ("v2", "q2"), ("v3", "q3"), ("v4", "q4")]:
        text = text.replace(old, new)
    assert is_isomorphic(parse_presentation(text), p)
    assert not is_isomorphic(load("gamma_prime"), p)
