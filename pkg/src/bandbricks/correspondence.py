"""Strings as valid zigzags, bands as valid crowns, and the brick tests built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, NamedTuple

from .exceptions import BandBricksError, CrownError, StringError
from .strings import AlgString, Band, enumerate_bands, standard_partition
from .traced_poset import (
    PosetCrown,
    build_traced_poset,
    is_valid_zigzag,
    make_crown,
    wpc_pair,
)


def w_st(x):
    """Letters ``n_1 ... n_{k+1}`` met by ``x`` at the joints of its standard partition."""
    if x.is_trivial:
        return (x.trivial,)
    parts = standard_partition(x)
    return (x.start_element,) + tuple(part.end_element for part in parts)


def w_st_inverse(p, w):
    """The string whose zigzag is ``w``; consecutive letters are joined by their unique connectors."""
    w = tuple(tuple(n) for n in w)
    if not w:
        raise StringError("empty zigzag")
    t = build_traced_poset(p)
    if len(w) == 1:
        if w[0] not in t.mu:
            raise StringError(f"{w[0]} is not an element of the poset")
        return AlgString(p, (), w[0])
    if not is_valid_zigzag(t, w):
        raise StringError("word is not a valid zigzag over the poset")
    syls = ()
    for a, b in zip(w, w[1:]):
        syls += t.connectors[(a, b)]
    return AlgString(p, syls)


def _special(x):
    syls = x.syllables
    return bool(syls) and syls[0].inverse != syls[-1].inverse


def w_ba(b):
    """Crown of a band read from a special cyclic permutation (its canonical one if needed)."""
    x = b.string if isinstance(b, Band) else b
    if not _special(x):
        if not isinstance(b, Band):
            raise CrownError("string is not a special cyclic permutation")
        x = b.canonical_band().string
    letters = w_st(x)
    if letters[0] != letters[-1]:
        raise CrownError("string is not cyclic")
    t = build_traced_poset(x.presentation)
    return make_crown(t, letters[:-1])


def w_ba_inverse(p, crown):
    """Cyclic string of a valid crown, returned as the special cyclic permutation it reads off."""
    letters = crown.letters if isinstance(crown, PosetCrown) else tuple(tuple(n) for n in crown)
    t = build_traced_poset(p)
    c = make_crown(t, letters)
    if not c.valid:
        raise CrownError("crown is not valid over the poset")
    return w_st_inverse(p, c.letters + (c.letters[0],))


def no_morphism(b1, b2):
    """True iff no nontrivial morphism goes from the length-one module of ``b1`` to that of ``b2``."""
    t = build_traced_poset(b1.presentation)
    c1 = w_ba(b1)
    return wpc_pair(t, c1, w_ba(b2)) and wpc_pair(t, c1, w_ba(b2.inverse()))


def morphism_exists(b1, b2):
    return not no_morphism(b1, b2)


@dataclass(frozen=True)
class BandModuleSpec:
    band: Band
    l: int = 1
    lam: Hashable = 1

    def key(self):
        return self.band.canonical, self.l, self.lam


def is_brick(b, l=1):
    """Crown criterion for the band module ``B(b, l, lambda)``; the scalar plays no role.

    ``b`` may also be a :class:`BandModuleSpec`, whose ``l`` then wins.
    Raises :class:`~bandbricks.exceptions.NotAcyclicError` when the quiver has
    a directed cycle; trisect gentle algebras first.
    """
    if isinstance(b, BandModuleSpec):
        b, l = b.band, b.l
    if l < 1:
        raise ValueError("l must be a positive integer")
    build_traced_poset(b.presentation)
    if l != 1:
        return False
    return no_morphism(b, b)


def _as_spec(m):
    return m if isinstance(m, BandModuleSpec) else BandModuleSpec(m)


def is_semibrick(modules):
    """Band semibrick test for a direct sum of pairwise non-isomorphic band modules."""
    specs = [_as_spec(m) for m in modules]
    if not specs:
        raise ValueError("need at least one summand")
    keys = [s.key() for s in specs]
    if len(set(keys)) != len(keys):
        raise BandBricksError("summands must be pairwise non-isomorphic")
    for s in specs:
        if s.l < 1:
            raise ValueError("l must be a positive integer")
        build_traced_poset(s.band.presentation)
    if any(s.l != 1 for s in specs):
        return False
    for s in specs:
        for r in specs:
            if not no_morphism(s.band, r.band):
                return False
    return True


class BrickInfiniteResult(NamedTuple):
    """``(flag, witness)``; truthiness follows the flag."""

    brick_infinite: bool
    witness: Band | None

    def __bool__(self):
        return self.brick_infinite


def is_brick_infinite(p, method="crowns"):
    """Search bands of length at most ``2 |Q0|`` for a band brick."""
    bound = 2 * len(p.vertices)
    if method == "crowns":
        test = is_brick
        build_traced_poset(p)
    elif method == "oracle":
        from .morphisms import oracle_is_brick as test
    else:
        raise ValueError("method must be 'crowns' or 'oracle'")
    for b in enumerate_bands(p, bound):
        if test(b):
            return BrickInfiniteResult(True, b)
    return BrickInfiniteResult(False, None)
