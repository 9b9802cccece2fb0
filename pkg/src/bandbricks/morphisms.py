"""Brute-force morphism oracle for band modules.

Factor and image substrings of the periodic string ``...bbb...`` are
enumerated inside a finite window ``b^w`` and matched against each other.
Nothing here uses the poset machinery, so it serves as an independent check
of the crown-based decisions.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .strings import AlgString, syllable_eps, syllable_target

FACTOR = "factor"
IMAGE = "image"


@dataclass(frozen=True)
class MarkedOccurrence:
    """Substring ``alpha_{k2} ... alpha_{k1+1}`` of ``window`` (``k1 == k2`` marks a trivial one)."""

    window: AlgString
    k1: int
    k2: int
    period: int

    @property
    def phase(self):
        return self.k1 % self.period

    @property
    def substring(self):
        syls = self.window.syllables
        p = self.window.presentation
        if self.k1 == self.k2:
            if self.k1 >= 1:
                prev = syls[self.k1 - 1]
                return AlgString(p, (), (syllable_target(p, prev), syllable_eps(p, prev)))
            nxt = AlgString(p, (syls[self.k1],))
            return AlgString(p, (), nxt.start_element)
        return AlgString(p, syls[self.k1:self.k2])


@dataclass(frozen=True)
class OccurrenceClass:
    substring: AlgString
    kind: str
    phase: int


def theta(m):
    """``(theta_l, theta_r)``: -1 on the factor side, +1 on the image side, 0 past the window."""
    syls = m.window.syllables
    if m.k2 < len(syls):
        left = 1 if syls[m.k2].inverse else -1
    else:
        left = 0
    if m.k1 >= 1:
        right = -1 if syls[m.k1 - 1].inverse else 1
    else:
        right = 0
    return left, right


def window_size(b, max_len):
    return math.ceil((max_len + 2) / len(b)) + 1


def occurrences(b, kind, max_len, window=None):
    """Occurrence classes of ``kind`` substrings of length at most ``max_len``, sorted by (phase, length)."""
    if kind not in (FACTOR, IMAGE):
        raise ValueError(f"kind must be {FACTOR!r} or {IMAGE!r}")
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    n = len(b)
    w = window if window is not None else window_size(b, max_len)
    if w * n < n + max_len + 1:
        raise ValueError("window too small for the requested length")
    win = AlgString(b.presentation, b.syllables * w)
    want = -1 if kind == FACTOR else 1
    out = []
    for k1 in range(1, n + 1):
        for length in range(0, max_len + 1):
            m = MarkedOccurrence(win, k1, k1 + length, n)
            if theta(m) == (want, want):
                out.append(OccurrenceClass(m.substring, kind, m.phase))
    out.sort(key=lambda c: (c.phase, len(c.substring)))
    return out


def default_bound(b1, b2):
    """Length bound beyond which no substring can be factor of one band and image of the other.

    Any longer match has periods ``|b1|`` and ``|b2|`` and length at least
    ``|b1| + |b2| - gcd``, so the gcd is a period too, forcing a proper power.
    """
    return len(b1) + len(b2)


def _matches(b1, b2, max_len, window):
    if max_len is None:
        max_len = default_bound(b1, b2)
    facs = occurrences(b1, FACTOR, max_len, window)
    imgs = Counter(c.substring for c in occurrences(b2, IMAGE, max_len, window))
    for f in facs:
        yield f, imgs.get(f.substring, 0) + imgs.get(f.substring.inverse(), 0)


def matched_pairs(b1, b2, max_len=None, window=None):
    """List ``(factor class of b1, image class of b2)`` with equal substrings up to inversion."""
    if max_len is None:
        max_len = default_bound(b1, b2)
    imgs = occurrences(b2, IMAGE, max_len, window)
    out = []
    for f in occurrences(b1, FACTOR, max_len, window):
        inv = f.substring.inverse()
        out += [(f, g) for g in imgs if g.substring == f.substring or g.substring == inv]
    return out


def morphism_exists(b1, b2, max_len=None, window=None):
    """True iff there is a nonzero non-identity morphism between the length-one band modules."""
    return any(count for _, count in _matches(b1, b2, max_len, window))


def oracle_is_brick(b, l=1, max_len=None, window=None):
    if l < 1:
        raise ValueError("l must be a positive integer")
    if l >= 2:
        return False
    return not morphism_exists(b, b, max_len, window)


def hom_dimension(b1, b2, max_len=None, window=None):
    """Matched (factor, image) class pairs, plus one when the bands agree up to rotation and inversion.

    The scalar parameter is not modelled; the extra term assumes both modules
    carry the same one, which is exact when ``b1`` and ``b2`` are the same band.
    """
    total = sum(count for _, count in _matches(b1, b2, max_len, window))
    return total + (1 if b1.canonical == b2.canonical else 0)


__all__ = [
    "FACTOR",
    "IMAGE",
    "MarkedOccurrence",
    "OccurrenceClass",
    "theta",
    "occurrences",
    "matched_pairs",
    "morphism_exists",
    "oracle_is_brick",
    "hom_dimension",
    "window_size",
    "default_bound",
]
