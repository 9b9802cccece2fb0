"""Split every arrow in three so that a gentle algebra gets an acyclic quiver."""

from __future__ import annotations

from .exceptions import NotGentleError, PresentationError
from .presentation import make_presentation, solve_signs, validate
from .strings import AlgString, Syllable, make_band


def _names(a):
    return f"{a}1", f"{a}2", f"{a}3", f"v_{a}_1", f"v_{a}_2"


def trisect(p, require_gentle=True):
    """Arrow ``alpha: s -> t`` becomes ``alpha1: s -> v_alpha_1``, ``alpha2: v_alpha_2 -> v_alpha_1``
    and ``alpha3: v_alpha_2 -> t``; each two-arrow relation ``alpha beta`` becomes ``alpha1 beta3``.

    Longer relations have no image, so without ``require_gentle`` they are dropped.
    """
    if require_gentle and not validate(p).is_gentle:
        raise NotGentleError("trisection keeps band bricks only for gentle algebras")
    vertices = list(p.vertices)
    arrows = []
    taken = set(vertices) | {a.id for a in p.arrows}
    for a in p.arrows:
        a1, a2, a3, u1, u2 = _names(a.id)
        for name in (a1, a2, a3, u1, u2):
            if name in taken:
                raise PresentationError(f"trisected name {name!r} clashes with an existing one")
            taken.add(name)
        vertices += [u1, u2]
        arrows += [(a1, a.source, u1), (a2, u2, u1), (a3, u2, a.target)]
    relations = [(f"{r[0]}1", f"{r[1]}3") for r in p.relations if len(r) == 2]
    return solve_signs(make_presentation(vertices, arrows, relations))


def lift_syllables(syls):
    """``gamma`` becomes ``gamma3 gamma2^-1 gamma1``; inverses lift to the inverse triple."""
    out = []
    for s in syls:
        if s.inverse:
            out += [Syllable(f"{s.arrow}3", True), Syllable(f"{s.arrow}2", False), Syllable(f"{s.arrow}1", True)]
        else:
            out += [Syllable(f"{s.arrow}1", False), Syllable(f"{s.arrow}2", True), Syllable(f"{s.arrow}3", False)]
    return tuple(out)


def lift_band(b, trisected=None):
    q = trisected if trisected is not None else trisect(b.presentation)
    return make_band(q, AlgString(q, lift_syllables(b.syllables)))
