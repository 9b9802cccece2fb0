"""Strings and bands over a string algebra.

A string ``alpha_k ... alpha_1`` is stored rightmost-first: ``syllables[0]`` is
the first syllable ``alpha_1`` (applied first). Printing always uses the
written order, leftmost syllable last applied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .exceptions import BandError, PresentationError, StringError
from .presentation import Presentation


class Syllable(NamedTuple):
    arrow: str
    inverse: bool = False

    def inv(self):
        return Syllable(self.arrow, not self.inverse)

    def __str__(self):
        return f"{self.arrow}^-1" if self.inverse else self.arrow


def syllable_source(p, s):
    a = p.arrow(s.arrow)
    return a.target if s.inverse else a.source


def syllable_target(p, s):
    a = p.arrow(s.arrow)
    return a.source if s.inverse else a.target


def syllable_sigma(p, s):
    return p.eps(s.arrow) if s.inverse else p.sigma(s.arrow)


def syllable_eps(p, s):
    return p.sigma(s.arrow) if s.inverse else p.eps(s.arrow)


@dataclass(frozen=True)
class AlgString:
    """A string: either trivial ``1_(v, i)`` or a nonempty syllable sequence."""

    presentation: Presentation = field(compare=False, repr=False)
    syllables: tuple[Syllable, ...] = ()
    trivial: tuple[str, int] | None = None

    @property
    def is_trivial(self):
        return self.trivial is not None

    def __len__(self):
        return len(self.syllables)

    @property
    def source(self):
        if self.trivial:
            return self.trivial[0]
        return syllable_source(self.presentation, self.syllables[0])

    @property
    def target(self):
        if self.trivial:
            return self.trivial[0]
        return syllable_target(self.presentation, self.syllables[-1])

    @property
    def sigma(self):
        if self.trivial:
            return -self.trivial[1]
        return syllable_sigma(self.presentation, self.syllables[0])

    @property
    def eps(self):
        if self.trivial:
            return self.trivial[1]
        return syllable_eps(self.presentation, self.syllables[-1])

    @property
    def delta(self):
        """-1 if all syllables are direct, +1 if all inverse, 0 if mixed or trivial."""
        if self.trivial:
            return 0
        kinds = {s.inverse for s in self.syllables}
        if len(kinds) == 2:
            return 0
        return 1 if kinds.pop() else -1

    @property
    def start_element(self):
        """The covering-quiver node where this string starts: ``(s(x), -sigma(x))``."""
        return (self.source, -self.sigma)

    @property
    def end_element(self):
        return (self.target, self.eps)

    def inverse(self):
        if self.trivial:
            return AlgString(self.presentation, (), (self.trivial[0], -self.trivial[1]))
        return AlgString(self.presentation, tuple(s.inv() for s in reversed(self.syllables)))

    def tokens(self):
        if self.trivial:
            v, i = self.trivial
            return [f"1({v},{i:+d})"]
        return [str(s) for s in reversed(self.syllables)]

    def __str__(self):
        return " ".join(self.tokens())


# -- relation windows ---------------------------------------------------------


def _relation_sets(p):
    return p.relation_set, p.applied_relation_set


def _first_defect(p, syls, start=1):
    """Return ``(index, reason)`` of the first defect at or after ``start`` (1-based), or None.

    ``index`` names the syllable at which the defect is detected: the later
    syllable of a non-composable or backtracking pair, or the last syllable of
    a window lying in the relations.
    """
    written_rels, app_rels = _relation_sets(p)
    maxrel = p.max_relation_length
    for j in range(max(start, 1), len(syls)):
        prev, cur = syls[j - 1], syls[j]
        if syllable_target(p, prev) != syllable_source(p, cur):
            return j + 1, "not composable"
        if prev == cur.inv():
            return j + 1, "backtrack"
        if cur.inverse != prev.inverse:
            continue
        for k in range(2, min(maxrel, j + 1) + 1):
            window = syls[j + 1 - k:j + 1]
            if any(s.inverse != cur.inverse for s in window):
                break
            arrows = tuple(s.arrow for s in window)
            if (arrows in written_rels) if cur.inverse else (arrows in app_rels):
                return j + 1, "relation"
    return None


def is_string_sequence(p, syls):
    for s in syls:
        p.arrow(s.arrow)
    return _first_defect(p, tuple(syls)) is None


# -- token syntax ---------------------------------------------------------------


def parse_tokens(text):
    """Parse written-order tokens into rightmost-first syllables, or a trivial spec.

    Returns either a tuple of :class:`Syllable` or ``("trivial", vertex, sign)``.
    """
    toks = text.split() if isinstance(text, str) else list(text)
    if len(toks) == 1 and toks[0].startswith("1("):
        inner = toks[0][2:]
        if not inner.endswith(")") or "," not in inner:
            raise StringError(f"malformed trivial string {toks[0]!r}")
        v, _, sign = inner[:-1].rpartition(",")
        try:
            i = int(sign)
        except ValueError:
            raise StringError(f"malformed trivial sign in {toks[0]!r}") from None
        if i not in (1, -1):
            raise StringError(f"trivial sign must be +1 or -1, got {sign}")
        return ("trivial", v.strip(), i)
    if not toks:
        raise StringError("empty token list")
    out = []
    for t in toks:
        if t.endswith("^-1"):
            out.append(Syllable(t[:-3], True))
        elif "^" in t or not t:
            raise StringError(f"malformed syllable {t!r}")
        else:
            out.append(Syllable(t, False))
    return tuple(reversed(out))


def make_string(p, tokens):
    """Validate a token sequence (or trivial spec) as a string of ``p``.

    ``tokens`` may be written-order text, a list of tokens, a tuple of
    rightmost-first :class:`Syllable`, or ``(vertex, sign)`` for a trivial string.
    """
    if not p.has_signs:
        raise StringError("presentation has no sign maps; solve signs first")
    if isinstance(tokens, tuple) and len(tokens) == 2 and isinstance(tokens[1], int) and not isinstance(tokens[0], Syllable):
        spec = ("trivial", tokens[0], tokens[1])
    elif isinstance(tokens, tuple) and tokens and all(isinstance(s, Syllable) for s in tokens):
        spec = tokens
    else:
        spec = parse_tokens(tokens)
    if spec and spec[0] == "trivial":
        _, v, i = spec
        if v not in p.vertices:
            raise StringError(f"unknown vertex {v}")
        if i not in (1, -1):
            raise StringError("trivial sign must be +1 or -1")
        return AlgString(p, (), (v, i))
    syls = tuple(spec)
    for idx, s in enumerate(syls, start=1):
        try:
            p.arrow(s.arrow)
        except PresentationError:
            raise StringError(f"unknown arrow {s.arrow}", index=idx, reason="unknown arrow") from None
    defect = _first_defect(p, syls)
    if defect:
        idx, reason = defect
        raise StringError(f"not a string: {reason} at syllable {idx}", index=idx, reason=reason)
    return AlgString(p, syls)


def concat(y, x):
    """Return the concatenation ``yx`` (``x`` applied first)."""
    p = x.presentation
    if y.is_trivial or x.is_trivial:
        if y.source != x.target or y.sigma != -x.eps:
            raise StringError("strings are not composable")
        return x if y.is_trivial else y
    syls = x.syllables + y.syllables
    defect = _first_defect(p, syls, start=len(x.syllables))
    if defect:
        idx, reason = defect
        raise StringError(f"concatenation is not a string: {reason}", index=idx, reason=reason)
    return AlgString(p, syls)


def standard_partition(x):
    """Maximal one-direction runs of ``x``, rightmost-first."""
    if x.is_trivial or not x.syllables:
        raise StringError("standard partition needs a positive-length string")
    parts = []
    run = [x.syllables[0]]
    for s in x.syllables[1:]:
        if s.inverse == run[-1].inverse:
            run.append(s)
        else:
            parts.append(run)
            run = [s]
    parts.append(run)
    return [AlgString(x.presentation, tuple(r)) for r in parts]


# -- periods and primitivity --------------------------------------------------


def periods(seq):
    """All ``q`` in ``[1, len(seq)]`` with ``seq[i + q] == seq[i]`` wherever defined."""
    seq = tuple(seq.syllables) if isinstance(seq, AlgString) else tuple(seq)
    n = len(seq)
    if n == 0:
        raise ValueError("periods of an empty sequence")
    return {q for q in range(1, n + 1) if seq[q:] == seq[:n - q]}


def is_primitive_sequence(seq):
    """True iff ``seq`` is not a proper power ``u^m`` with ``m >= 2``."""
    seq = tuple(seq)
    n = len(seq)
    if n == 0:
        raise ValueError("primitivity of an empty sequence")
    return not any(n % d == 0 and seq[d:] == seq[:n - d] for d in range(1, n))


def is_primitive(x):
    if x.is_trivial:
        return True
    if x.source != x.target:
        raise StringError("primitivity is defined for cyclic strings")
    return is_primitive_sequence(x.syllables)


# -- bands ------------------------------------------------------------------------


def _band_shaped(syls):
    return syls[0].inverse and not syls[-1].inverse


def _inverse_syllables(syls):
    return tuple(s.inv() for s in reversed(syls))


def canonical_form(syls):
    """Least band-shaped rotation of ``syls`` or its inverse (rightmost-first tuples)."""
    syls = tuple(syls)
    n = len(syls)
    best = None
    for seq in (syls, _inverse_syllables(syls)):
        for i in range(n):
            r = seq[i:] + seq[:i]
            if _band_shaped(r) and (best is None or r < best):
                best = r
    return best


@dataclass(frozen=True)
class Band:
    """A band together with its canonical representative."""

    string: AlgString
    canonical: tuple[Syllable, ...]

    @property
    def presentation(self):
        return self.string.presentation

    @property
    def syllables(self):
        return self.string.syllables

    def __len__(self):
        return len(self.string.syllables)

    def inverse(self):
        inv = self.string.inverse()
        return Band(inv, self.canonical)

    def canonical_band(self):
        return Band(AlgString(self.presentation, self.canonical), self.canonical)

    def same_class(self, other):
        return self.canonical == other.canonical

    def __str__(self):
        return str(self.string)


def band_defects(p, x, depth=2):
    """Return ``(axiom, message)`` for the first failed band axiom, or None.

    Powers are checked up to ``x**depth``; ``depth=2`` already covers every
    power since relations and backtracks live inside windows shorter than the
    band (every direct run is shorter than the band itself).
    """
    if x.is_trivial or not x.syllables:
        return "cyclic", "a band has positive length"
    syls = x.syllables
    if x.source != x.target:
        return "cyclic", "string is not cyclic (source differs from target)"
    if not syls[0].inverse:
        return "first-inverse", "first syllable must be inverse"
    if syls[-1].inverse:
        return "last-direct", "last syllable must be direct"
    if _first_defect(p, syls * max(2, depth)) is not None:
        return "powers", "some power of the string is not a string"
    if not is_primitive_sequence(syls):
        return "primitive", "string is a proper power"
    return None


def make_band(p, x, depth=2):
    if not isinstance(x, AlgString):
        x = make_string(p, x)
    bad = band_defects(p, x, depth)
    if bad:
        raise BandError(bad[1], axiom=bad[0])
    return Band(x, canonical_form(x.syllables))


def band_from_syllables(p, syls):
    """Build a :class:`Band` from rightmost-first syllables already known to form a band."""
    syls = tuple(syls)
    return Band(AlgString(p, syls), canonical_form(syls))


def rotation(seq, i):
    """``sigma_i``: the rotation whose first syllable is ``alpha_i`` (1-based)."""
    seq = tuple(seq)
    return seq[i - 1:] + seq[:i - 1]


def cyclic_permutations(b):
    """All ``(i, sigma_i(b), is_special)``, ``i`` from 1 to ``|b|``."""
    syls = b.syllables
    n = len(syls)
    out = []
    for i in range(1, n + 1):
        r = rotation(syls, i)
        special = syls[i - 1].inverse != syls[i - 2].inverse
        out.append((i, AlgString(b.presentation, r), special))
    return out


def enumerate_bands(p, max_len):
    """All bands of length at most ``max_len``, one per class, ordered by (length, canonical form)."""
    if not p.has_signs:
        raise StringError("presentation has no sign maps; solve signs first")
    found = []
    starts = sorted({Syllable(a.id, True) for a in p.arrows})
    path = []

    def extend(depth):
        last = path[-1]
        if (
            not last.inverse
            and syllable_target(p, last) == syllable_source(p, path[0])
        ):
            syls = tuple(path)
            if (
                _first_defect(p, syls + syls, start=len(syls))
                is None
                and is_primitive_sequence(syls)
                and canonical_form(syls) == syls
            ):
                found.append(syls)
        if depth == max_len:
            return
        v = syllable_target(p, last)
        for a in p.out_arrows.get(v, ()):
            _try(Syllable(a.id, False), depth)
        for a in p.in_arrows.get(v, ()):
            _try(Syllable(a.id, True), depth)

    def _try(cand, depth):
        path.append(cand)
        if _first_defect(p, path, start=len(path) - 1) is None:
            extend(depth + 1)
        path.pop()

    for s in starts:
        path.append(s)
        extend(1)
        path.pop()
    found.sort(key=lambda syls: (len(syls), syls))
    return [band_from_syllables(p, syls) for syls in found]


def enumerate_strings(p, max_len, include_trivial=True):
    """All strings of length at most ``max_len`` (each orientation listed separately)."""
    out = []
    if include_trivial:
        out += [AlgString(p, (), (v, i)) for v in p.vertices for i in (1, -1)]
    path = []

    def go():
        out.append(AlgString(p, tuple(path)))
        if len(path) == max_len:
            return
        v = syllable_target(p, path[-1])
        cands = [Syllable(a.id, False) for a in p.out_arrows.get(v, ())]
        cands += [Syllable(a.id, True) for a in p.in_arrows.get(v, ())]
        for c in cands:
            path.append(c)
            if _first_defect(p, path, start=len(path) - 1) is None:
                go()
            path.pop()

    if max_len >= 1:
        for a in p.arrows:
            for s in (Syllable(a.id, False), Syllable(a.id, True)):
                path.append(s)
                go()
                path.pop()
    return out
