"""Words over a linearly ordered alphabet.

Words are read left to right and handled as tuples. An explicit alphabet order
can be passed as a sequence of letters (smallest first); otherwise letters are
compared with ``<``. Plain digit strings such as ``"1324"`` are accepted and
turned into tuples of ints.
"""

from __future__ import annotations

from .exceptions import CrownError
from .catalog import lambda_n
from .strings import (
    AlgString,
    Syllable,
    band_from_syllables,
    is_primitive_sequence,
    make_band,
    make_string,
    standard_partition,
)


def as_word(w):
    if isinstance(w, str):
        w = w.split() if " " in w.strip() else list(w)
        return tuple(int(x) if x.isdigit() else x for x in w)
    return tuple(w)


def _rank(order):
    if order is None:
        return lambda x: x
    table = {a: i for i, a in enumerate(order)}
    if len(table) != len(order):
        raise ValueError("alphabet order lists a letter twice")

    def rank(x):
        try:
            return table[x]
        except KeyError:
            raise ValueError(f"letter {x!r} is not in the alphabet") from None

    return rank


def rotations(w):
    w = as_word(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def bw_transform(w, order=None):
    """Last letters of the cyclic permutations of ``w`` sorted lexicographically."""
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    rank = _rank(order)
    rots = sorted(rotations(w), key=lambda r: tuple(rank(x) for x in r))
    return tuple(r[-1] for r in rots)


def is_primitive_word(w):
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    return is_primitive_sequence(w)


def _cyclic_lcp(w, i, j, cap):
    n = len(w)
    k = 0
    while k < cap and w[(i + k) % n] == w[(j + k) % n]:
        k += 1
    return k


def _require_primitive(w):
    if not w:
        raise ValueError("empty word")
    if not is_primitive_sequence(w):
        raise ValueError("word is not primitive")


def is_pcw(w, order=None, method="criterion"):
    """Perfectly clustering test for a primitive word.

    ``method="criterion"`` searches for rotations ``n' z m' ...`` and
    ``n'' z m'' ...`` with ``n' < n''`` and ``m' < m''``; ``method="bw"``
    checks that the Burrows-Wheeler transform is weakly decreasing.
    """
    w = as_word(w)
    _require_primitive(w)
    rank = _rank(order)
    if method == "bw":
        bw = [rank(x) for x in bw_transform(w, order)]
        return all(a >= b for a, b in zip(bw, bw[1:]))
    if method != "criterion":
        raise ValueError("method must be 'criterion' or 'bw'")
    return _pcw_obstruction(w, rank, min_z=0) is None


def _pcw_obstruction(w, rank, min_z):
    """First ``(i, j, |z|)`` witnessing rotations ``n' z m'`` at ``i`` and ``n'' z m''`` at ``j``."""
    n = len(w)
    r = [rank(x) for x in w]
    for i in range(n):
        for j in range(n):
            if r[i] >= r[j]:
                continue
            lz = _cyclic_lcp(w, i + 1, j + 1, n - 1)
            if lz > n - 2 or lz < min_z:
                continue
            if r[(i + 1 + lz) % n] < r[(j + 1 + lz) % n]:
                return i, j, lz
    return None


def _cmp(rank, a, b):
    ra, rb = rank(a), rank(b)
    return (ra > rb) - (ra < rb)


def is_zigzag(w, order=None, less=None):
    """Consecutive comparisons strictly alternate between ``<`` and ``>``.

    ``less`` overrides the alphabet with a strict partial order; incomparable
    neighbours make the word fail.
    """
    w = as_word(w)
    if not w:
        raise ValueError("empty word")
    signs = _comparisons(w, order, less, cyclic=False)
    return _alternates(signs, cyclic=False)


def _comparisons(w, order, less, cyclic):
    pairs = list(zip(w, w[1:]))
    if cyclic:
        pairs.append((w[-1], w[0]))
    if less is not None:
        return [(-1 if less(a, b) else 1 if less(b, a) else 0) for a, b in pairs]
    rank = _rank(order)
    return [_cmp(rank, a, b) for a, b in pairs]


def _alternates(signs, cyclic):
    if any(s == 0 for s in signs):
        return False
    ok = all(a == -b for a, b in zip(signs, signs[1:]))
    if cyclic and signs:
        ok = ok and signs[-1] == -signs[0]
    return ok


def is_crown(w, order=None, less=None):
    """Every cyclic permutation is a zigzag (forces even length)."""
    w = as_word(w)
    if len(w) < 2:
        return False
    return _alternates(_comparisons(w, order, less, cyclic=True), cyclic=True)


def interval_trace(order=None):
    """Trace oracle of a linear alphabet: ``(n, m)`` maps to the set of letters between them."""
    rank = _rank(order)

    def trace(n, m):
        lo, hi = sorted((rank(n), rank(m)))
        return frozenset(range(lo, hi + 1))

    return trace


def is_wpc_crown(w, order=None, trace=None):
    """Weakly perfectly clustering test for a primitive crown over a linear alphabet.

    Fails if rotations ``n' z m' ...`` and ``n'' z m'' ...`` exist with
    ``n' < n''``, ``m' < m''`` and ``|z| >= 1``, or if adjacent pairs
    ``n' m'`` and ``n'' m''`` with ``n' < n''``, ``m' < m''``, the same
    direction and intersecting traces exist. ``trace`` defaults to closed
    intervals in rank space.
    """
    w = as_word(w)
    _require_primitive(w)
    if not is_crown(w, order):
        raise CrownError("word is not a crown")
    rank = _rank(order)
    if _pcw_obstruction(w, rank, min_z=1) is not None:
        return False
    tr = trace or interval_trace(order)
    n = len(w)
    adjacent = [(w[i], w[(i + 1) % n]) for i in range(n)]
    for a1, b1 in adjacent:
        for a2, b2 in adjacent:
            if rank(a1) < rank(a2) and rank(b1) < rank(b2):
                if (rank(a1) < rank(b1)) == (rank(a2) < rank(b2)) and tr(a1, b1) & tr(a2, b2):
                    return False
    return True


def is_wpc_crown_literal(w, order=None):
    """Direct transcription of both obstructions over explicit rotation pairs; for cross-checks."""
    w = as_word(w)
    _require_primitive(w)
    rank = _rank(order)
    n = len(w)
    rots = rotations(w)
    for r1 in rots:
        for r2 in rots:
            if not rank(r1[0]) < rank(r2[0]):
                continue
            for lz in range(1, n - 1):
                if r1[1:1 + lz] == r2[1:1 + lz] and rank(r1[1 + lz]) < rank(r2[1 + lz]):
                    return False
            if rank(r1[1]) < rank(r2[1]) and (rank(r1[0]) < rank(r1[1])) == (rank(r2[0]) < rank(r2[1])):
                lo1, hi1 = sorted((rank(r1[0]), rank(r1[1])))
                lo2, hi2 = sorted((rank(r2[0]), rank(r2[1])))
                if max(lo1, lo2) <= min(hi1, hi2):
                    return False
    return True


# -- the two-arrow family ----------------------------------------------------------


def _lambda(presentation, letters):
    if presentation is not None:
        return presentation
    return lambda_n(max(2, max(letters)))


def _vertex_index(v):
    if not (isinstance(v, str) and v.startswith("v") and v[1:].isdigit()):
        raise ValueError(f"vertex {v!r} is not of the form v<number>")
    return int(v[1:])


def _down(i, j):
    """Written-order tokens of the direct string from ``v_j`` down to ``v_i`` (``i < j``)."""
    return [f"a{k}" for k in range(i, j)]


def _up(i, j):
    """Inverse string from ``v_i`` up to ``v_j`` (``i < j``)."""
    return [f"b{k}^-1" for k in range(j - 1, i - 1, -1)]


def _syllables_from_written(tokens):
    out = []
    for t in reversed(tokens):
        out.append(Syllable(t[:-3], True) if t.endswith("^-1") else Syllable(t, False))
    return tuple(out)


def phi(w, presentation=None):
    """Band ``b_{n_k} ... b_{n_1}`` with ``b_n = a_1 ... a_{n-1} b_{n-1}^-1 ... b_1^-1``."""
    w = as_word(w)
    _require_primitive(w)
    p = _lambda(presentation, w)
    top = len(p.vertices)
    syls = ()
    for n in w:
        if not isinstance(n, int) or not 2 <= n <= top:
            raise ValueError(f"letter {n!r} outside 2..{top}")
        syls += _syllables_from_written(_down(1, n) + _up(1, n))
    return make_band(p, AlgString(p, syls))


def phi_tilde(w, presentation=None):
    """The cyclic string ``x_k ... x_1`` joining consecutive letters of a crown by one-sign strings.

    The result is a special cyclic permutation of a band, returned as an
    :class:`AlgString`; :func:`bandbricks.strings.band_from_syllables` or
    ``make_band`` turns it into a band when it starts with an inverse syllable.
    """
    w = as_word(w)
    _require_primitive(w)
    if not is_crown(w):
        raise CrownError("word is not a crown")
    p = _lambda(presentation, w)
    top = len(p.vertices)
    for n in w:
        if not isinstance(n, int) or not 1 <= n <= top:
            raise ValueError(f"letter {n!r} outside 1..{top}")
    syls = ()
    k = len(w)
    for i in range(k):
        a, b = w[i], w[(i + 1) % k]
        tokens = _up(a, b) if a < b else _down(b, a)
        syls += _syllables_from_written(tokens)
    make_string(p, syls + syls)
    return AlgString(p, syls)


def phi_tilde_inverse(b):
    """Vertex indices ``s(x_1) ... s(x_m)`` over the standard partition of a band."""
    x = b.string if hasattr(b, "canonical") else b
    return tuple(_vertex_index(part.source) for part in standard_partition(x))


def lift_word(w):
    """``n_1 ... n_k`` becomes ``1 n_1 1 n_2 ... 1 n_k``."""
    w = as_word(w)
    out = []
    for n in w:
        out += [1, n]
    return tuple(out)


def phi_tilde_band(w, presentation=None):
    """Band class of ``phi_tilde(w)``, represented by its canonical rotation."""
    x = phi_tilde(w, presentation)
    b = band_from_syllables(x.presentation, x.syllables)
    return b.canonical_band()
