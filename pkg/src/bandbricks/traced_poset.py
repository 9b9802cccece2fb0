"""Covering quivers, traced posets, crowns over them and weakly perfectly clustering pairs.

Elements built from a presentation are ``(vertex, sign)`` tuples. A direct
arrow ``alpha`` is an edge from ``(s, -sigma)`` down to ``(t, eps)``; its
inverse climbs from ``(t, -eps)`` to ``(s, sigma)``. The order is the
transitive closure of these steps, and the trace of a pair lists the nodes
crossed by the unique one-direction string joining them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product

from .exceptions import CrownError, NotAcyclicError, TracedPosetError
from .presentation import make_presentation, sign_violations, solve_signs, validate
from .strings import AlgString, Syllable, _first_defect, syllable_source, syllable_target


# -- covering quiver ------------------------------------------------------------


@dataclass(frozen=True)
class CoveringEdge:
    syllable: Syllable
    source: tuple
    target: tuple


@dataclass(frozen=True)
class CoveringQuiver:
    nodes: tuple
    edges: tuple[CoveringEdge, ...]

    def to_dot(self):
        lines = ["digraph covering_quiver {"]
        lines += [f'  "{_fmt(n)}";' for n in self.nodes]
        for e in self.edges:
            lines.append(f'  "{_fmt(e.source)}" -> "{_fmt(e.target)}" [label="{e.syllable}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _fmt(n):
    if isinstance(n, tuple) and len(n) == 2 and n[1] in (1, -1):
        return f"({n[0]},{n[1]})"
    return str(n)


def covering_quiver(p):
    nodes = tuple((v, i) for v in p.vertices for i in (1, -1))
    edges = []
    for a in p.arrows:
        sg, ep = p.sigma(a.id), p.eps(a.id)
        edges.append(CoveringEdge(Syllable(a.id, False), (a.source, -sg), (a.target, ep)))
    for a in p.arrows:
        sg, ep = p.sigma(a.id), p.eps(a.id)
        edges.append(CoveringEdge(Syllable(a.id, True), (a.target, -ep), (a.source, sg)))
    return CoveringQuiver(nodes, tuple(edges))


# -- traced posets --------------------------------------------------------------------


def _closure(elements, pairs):
    """Transitive closure of a set of ``(lower, upper)`` pairs."""
    up = {x: set() for x in elements}
    for a, b in pairs:
        up[a].add(b)
    closed = {}

    def reach(x, stack):
        if x in closed:
            return closed[x]
        if x in stack:
            raise TracedPosetError("order relation has a cycle", violations=[("antisymmetry", x)])
        stack.add(x)
        out = set()
        for y in up[x]:
            out.add(y)
            out |= reach(y, stack)
        stack.discard(x)
        closed[x] = frozenset(out)
        return closed[x]

    for x in elements:
        reach(x, set())
    return frozenset((x, y) for x in elements for y in closed[x])


@dataclass(frozen=True)
class TracedPoset:
    """A finite strict poset with an involution and a family of trace sequences.

    ``less`` holds every pair ``(x, y)`` with ``x < y``; ``traces`` maps an
    ordered pair to its nonempty trace (absent pairs have the empty trace);
    ``connectors`` optionally maps pairs to the one-direction strings they
    come from (rightmost-first syllables).
    """

    elements: tuple
    less: frozenset
    traces: dict = field(hash=False, compare=False)
    mu: dict = field(hash=False, compare=False)
    connectors: dict = field(default_factory=dict, hash=False, compare=False, repr=False)
    report: "TracedPosetReport | None" = field(default=None, hash=False, compare=False, repr=False)

    def lt(self, x, y):
        return (x, y) in self.less

    def comparable(self, x, y):
        return (x, y) in self.less or (y, x) in self.less

    def trace(self, x, y):
        return self.traces.get((x, y), ())

    @cached_property
    def covers(self):
        """Pairs ``(x, y)`` where ``y`` covers ``x``."""
        above = {x: set() for x in self.elements}
        for x, y in self.less:
            above[x].add(y)
        out = set()
        for x, y in self.less:
            if not any((z, y) in self.less for z in above[x]):
                out.add((x, y))
        return frozenset(out)

    def hasse_dot(self):
        lines = ["graph hasse {", "  rankdir=BT;"]
        lines += [f'  "{_fmt(n)}";' for n in self.elements]
        for x, y in sorted(self.covers, key=repr):
            lines.append(f'  "{_fmt(x)}" -- "{_fmt(y)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def maximal_traces(self):
        seqs = set(self.traces.values())
        out = []
        for s in seqs:
            if not any(len(o) > len(s) and _contains(o, s) for o in seqs):
                out.append(s)
        return sorted(out, key=repr)

    def to_json(self):
        enc = _encode
        return json.dumps(
            {
                "schema": 1,
                "elements": [enc(x) for x in self.elements],
                "covers": sorted(([enc(x), enc(y)] for x, y in self.covers), key=repr),
                "less": sorted(([enc(x), enc(y)] for x, y in self.less), key=repr),
                "traces": sorted(([enc(x) for x in s] for s in self.traces.values()), key=repr),
                "mu": sorted(([enc(x), enc(self.mu[x])] for x in self.elements if x in self.mu), key=repr),
            },
            indent=2,
        )


def _contains(big, small):
    n = len(small)
    return any(big[i:i + n] == small for i in range(len(big) - n + 1))


def _encode(x):
    return list(x) if isinstance(x, tuple) else x


def _decode(x):
    return tuple(x) if isinstance(x, list) else x


def traced_poset_from_json(text):
    data = json.loads(text)
    if data.get("schema") != 1:
        raise TracedPosetError("unsupported traced poset schema")
    elements = tuple(_decode(x) for x in data["elements"])
    pairs = [(_decode(a), _decode(b)) for a, b in data.get("less", data.get("covers", []))]
    less = _closure(elements, pairs)
    traces = {}
    for s in data["traces"]:
        seq = tuple(_decode(x) for x in s)
        if len(seq) >= 2:
            traces[(seq[0], seq[-1])] = seq
    mu = {_decode(a): _decode(b) for a, b in data["mu"]}
    return TracedPoset(elements, less, traces, mu)


def make_traced_poset(elements, covers, traces, mu):
    """Assemble a traced poset from cover pairs ``(lower, upper)``, trace sequences and ``mu``."""
    elements = tuple(elements)
    less = _closure(elements, covers)
    tr = {}
    for s in traces:
        s = tuple(s)
        if len(s) >= 2:
            tr[(s[0], s[-1])] = s
    return TracedPoset(elements, less, tr, dict(mu))


def linear_traced_poset(letters):
    """Two mirrored chains ``(a, 1) < (b, 1) < ...`` and ``(a, -1) < (b, -1) < ...``.

    Every interval of either chain is a trace in both directions, as in the
    poset of the two-arrow family.
    """
    letters = tuple(letters)
    elements = tuple((a, i) for a in letters for i in (1, -1))
    covers = []
    for i in (1, -1):
        covers += [((letters[k], i), (letters[k + 1], i)) for k in range(len(letters) - 1)]
    traces = []
    n = len(letters)
    for i in (1, -1):
        for lo in range(n):
            for hi in range(lo + 1, n):
                up = tuple((letters[k], i) for k in range(lo, hi + 1))
                traces += [up, up[::-1]]
    mu = {(a, i): (a, -i) for a, i in elements}
    return make_traced_poset(elements, covers, traces, mu)


def _one_sign_strings(p):
    """Every positive-length direct string, as rightmost-first syllable tuples."""
    out = []
    path = []

    def go():
        out.append(tuple(path))
        v = syllable_target(p, path[-1])
        for a in p.out_arrows.get(v, ()):
            path.append(Syllable(a.id, False))
            if _first_defect(p, path, start=len(path) - 1) is None:
                go()
            path.pop()

    for a in p.arrows:
        path.append(Syllable(a.id, False))
        go()
        path.pop()
    return out


def _node_sequence(p, syls):
    x = AlgString(p, syls)
    nodes = [x.start_element]
    for s in syls:
        nodes.append(AlgString(p, (s,)).end_element)
    return tuple(nodes)


@lru_cache(maxsize=64)
def build_traced_poset(p):
    """The traced poset of a string algebra with acyclic quiver and fixed signs.

    The axioms are re-checked and the outcome kept in ``report``; a failure
    is recorded rather than raised, because parallel paths (``a`` beside
    ``b e``) make a one-step trace span a non-cover.
    """
    report = validate(p)
    if not report.is_acyclic:
        raise NotAcyclicError(f"quiver has a directed cycle: {' '.join(report.cycle)}")
    if not p.has_signs:
        p = solve_signs(p)
    cq = covering_quiver(p)
    steps = []
    for e in cq.edges:
        if e.syllable.inverse:
            steps.append((e.source, e.target))
        else:
            steps.append((e.target, e.source))
    less = _closure(cq.nodes, steps)
    traces, connectors = {}, {}
    for syls in _one_sign_strings(p):
        for seq in (syls, tuple(s.inv() for s in reversed(syls))):
            nodes = _node_sequence(p, seq)
            key = (nodes[0], nodes[-1])
            if key in traces and connectors[key] != seq:
                raise TracedPosetError("two one-direction strings join the same pair", violations=[("2", key)])
            traces[key] = nodes
            connectors[key] = seq
    mu = {(v, i): (v, -i) for v, i in cq.nodes}
    t = TracedPoset(cq.nodes, less, traces, mu, connectors)
    object.__setattr__(t, "report", validate_traced_poset(t))
    return t


@dataclass(frozen=True)
class TracedPosetReport:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok

    def axioms(self):
        return sorted({v[0] for v in self.violations})


def validate_traced_poset(t):
    v = []
    els = set(t.elements)
    for x, y in t.less:
        if x == y:
            v.append(("order", f"{x} < {x}"))
        if (y, x) in t.less:
            v.append(("order", f"{x} and {y} are mutually below each other"))
    for (x, y) in t.less:
        for (y2, z) in t.less:
            if y2 == y and (x, z) not in t.less:
                v.append(("order", f"not transitive at {x} < {y} < {z}"))
                break
    covered_by = {x: [] for x in t.elements}
    covering = {x: [] for x in t.elements}
    for x, y in t.covers:
        covered_by[x].append(y)
        covering[y].append(x)
    for x in t.elements:
        if len(covered_by[x]) > 2:
            v.append(("1", f"{x} is covered by {len(covered_by[x])} elements"))
        if len(covering[x]) > 2:
            v.append(("1'", f"{x} covers {len(covering[x])} elements"))
    for (a, b), seq in t.traces.items():
        if len(seq) < 2 or seq[0] != a or seq[-1] != b:
            v.append(("2", f"trace stored under {(a, b)} has endpoints {seq[:1]}, {seq[-1:]}"))
            continue
        if any(x not in els for x in seq):
            v.append(("2", f"trace {seq} uses unknown elements"))
            continue
        up = t.lt(a, b)
        for x, y in zip(seq, seq[1:]):
            if up and (x, y) not in t.covers:
                v.append(("3", f"in {seq}, {y} does not cover {x}"))
            if not up and (y, x) not in t.covers:
                v.append(("3'", f"in {seq}, {x} does not cover {y}"))
        for i in range(len(seq)):
            for j in range(i + 2, len(seq) + 1):
                sub = seq[i:j]
                if t.trace(sub[0], sub[-1]) != sub:
                    v.append(("closure", f"{sub} is a piece of {seq} but not a trace"))
    for m in t.elements:
        ups = [n for n in t.elements if t.lt(m, n) and t.trace(m, n) == (m, n)]
        downs = [n for n in t.elements if t.lt(n, m) and t.trace(n, m) == (n, m)]
        if len(ups) > 1:
            v.append(("4", f"{m} has two one-step up-traces: {ups}"))
        if len(downs) > 1:
            v.append(("4'", f"{m} has two one-step up-traces ending at it: {downs}"))
    mu = t.mu
    for x in t.elements:
        if x not in mu or mu[x] not in els:
            v.append(("5", f"mu undefined at {x}"))
            continue
        if mu[x] == x:
            v.append(("5", f"mu fixes {x}"))
        if mu.get(mu[x]) != x:
            v.append(("5", f"mu is not an involution at {x}"))
    if not any(a == "5" for a, _ in v):
        for x, y in product(t.elements, repeat=2):
            if t.lt(x, y) != t.lt(mu[x], mu[y]):
                v.append(("5", f"mu does not preserve the order at {x}, {y}"))
                break
        for (a, b), seq in t.traces.items():
            mirrored = tuple(mu[x] for x in reversed(seq))
            if t.trace(mu[b], mu[a]) != mirrored:
                v.append(("6", f"mirror of {seq} is not a trace"))
    return TracedPosetReport(not v, tuple(v))


# -- crowns -------------------------------------------------------------------


@dataclass(frozen=True)
class PosetCrown:
    letters: tuple
    valid: bool
    special: bool

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def is_poset_zigzag(t, w):
    w = tuple(w)
    dirs = []
    for x, y in zip(w, w[1:]):
        if t.lt(x, y):
            dirs.append(1)
        elif t.lt(y, x):
            dirs.append(-1)
        else:
            return False
    return all(a == -b for a, b in zip(dirs, dirs[1:]))


def is_valid_zigzag(t, w):
    w = tuple(w)
    return is_poset_zigzag(t, w) and all(t.trace(x, y) for x, y in zip(w, w[1:]))


def make_crown(t, letters):
    """Wrap ``letters`` as a crown over ``t``; raises if consecutive letters do not alternate."""
    w = tuple(letters)
    if len(w) < 2 or not is_poset_zigzag(t, w + (w[0],)) or not _wrap_alternates(t, w):
        raise CrownError("letters do not form a crown over this poset")
    valid = all(t.trace(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
    return PosetCrown(w, valid, valid and t.lt(w[0], w[1]))


def _wrap_alternates(t, w):
    n = len(w)
    first = t.lt(w[0], w[1])
    last = t.lt(w[n - 1], w[0])
    return first != last


def _as_crown(t, w):
    return w if isinstance(w, PosetCrown) else make_crown(t, w)


def _lcp(a, b, start_a, start_b, cap):
    na, nb = len(a), len(b)
    k = 0
    while k < cap and a[(start_a + k) % na] == b[(start_b + k) % nb]:
        k += 1
    return k


def _pair_witness(t, w1, w2):
    """First obstruction to the pair being weakly perfectly clustering, or None."""
    a, b = w1.letters, w2.letters
    n1, n2 = len(a), len(b)
    length = 2 * n1 * n2
    for i in range(n1):
        for j in range(n2):
            if not t.lt(a[i], b[j]):
                continue
            z = _lcp(a, b, i + 1, j + 1, length - 1)
            if 1 <= z <= length - 2 and t.lt(a[(i + 1 + z) % n1], b[(j + 1 + z) % n2]):
                return ("1", i, j, z)
            m1, m2 = a[(i + 1) % n1], b[(j + 1) % n2]
            if t.lt(m1, m2) and t.lt(a[i], m1) == t.lt(b[j], m2):
                if set(t.trace(a[i], m1)) & set(t.trace(b[j], m2)):
                    return ("2", i, j, 0)
    return None


def wpc_pair(t, w1, w2):
    """True iff the ordered pair of valid crowns is weakly perfectly clustering.

    Rotations of ``w1^(2|w2|)`` and ``w2^(2|w1|)`` are rotations of ``w1`` and
    ``w2`` read periodically, so every shift pair is examined once and the
    common factor after the first letters is measured up to ``2|w1||w2| - 1``.
    """
    w1, w2 = _as_crown(t, w1), _as_crown(t, w2)
    if not (w1.valid and w2.valid):
        raise CrownError("both crowns must be valid over the poset")
    return _pair_witness(t, w1, w2) is None


def wpc_witness(t, w1, w2):
    """Describe the first obstruction as ``(condition, rotation of w1, rotation of w2, |z|)``."""
    w1, w2 = _as_crown(t, w1), _as_crown(t, w2)
    found = _pair_witness(t, w1, w2)
    if found is None:
        return None
    cond, i, j, z = found
    a, b = w1.letters, w2.letters
    return cond, a[i:] + a[:i], b[j:] + b[:j], z


def wpc_pair_literal(t, w1, w2):
    """Materialise both powers and all their rotations; slow, used to cross-check :func:`wpc_pair`."""
    w1, w2 = _as_crown(t, w1), _as_crown(t, w2)
    if not (w1.valid and w2.valid):
        raise CrownError("both crowns must be valid over the poset")
    big1 = w1.letters * (2 * len(w2))
    big2 = w2.letters * (2 * len(w1))
    L = len(big1)
    rots1 = [big1[i:] + big1[:i] for i in range(L)]
    rots2 = [big2[i:] + big2[:i] for i in range(L)]
    for r1 in rots1:
        for r2 in rots2:
            if not t.lt(r1[0], r2[0]):
                continue
            for z in range(1, L - 1):
                if r1[z] != r2[z]:
                    break
                if t.lt(r1[z + 1], r2[z + 1]):
                    return False
            n1, m1, n2, m2 = r1[0], r1[1], r2[0], r2[1]
            if t.lt(m1, m2) and t.lt(n1, m1) == t.lt(n2, m2):
                if set(t.trace(n1, m1)) & set(t.trace(n2, m2)):
                    return False
    return True


def enumerate_valid_crowns(t, max_len, primitive=True):
    """All valid crowns of length at most ``max_len`` (every rotation listed)."""
    from .strings import is_primitive_sequence

    out = []
    succ = {x: [y for y in t.elements if t.trace(x, y)] for x in t.elements}

    def go(path):
        if len(path) >= 2 and len(path) % 2 == 0 and t.trace(path[-1], path[0]):
            w = tuple(path)
            if is_poset_zigzag(t, w + (w[0],)) and _wrap_alternates(t, w):
                if not primitive or is_primitive_sequence(w):
                    out.append(PosetCrown(w, True, t.lt(w[0], w[1])))
        if len(path) == max_len:
            return
        for y in succ[path[-1]]:
            if len(path) >= 2 and t.lt(path[-2], path[-1]) == t.lt(path[-1], y):
                continue
            path.append(y)
            go(path)
            path.pop()

    for x in t.elements:
        go([x])
    return out


# -- recovering a presentation ------------------------------------------------------


def _orbit_names(t):
    mu = t.mu
    names = {}
    tupled = all(isinstance(x, tuple) and len(x) == 2 and x[1] in (1, -1) and mu[x] == (x[0], -x[1]) for x in t.elements)
    reps = []
    seen = set()
    for x in sorted(t.elements, key=repr):
        if x in seen:
            continue
        seen |= {x, mu[x]}
        reps.append(x)
    for k, x in enumerate(reps):
        name = str(x[0]) if tupled else f"o{k + 1}"
        names[x] = names[mu[x]] = name
    signs = {}
    for x in reps:
        if tupled:
            signs[x], signs[mu[x]] = x[1], -x[1]
        else:
            signs[x], signs[mu[x]] = 1, -1
    return reps, names, signs


def recover_presentation(t):
    """Rebuild a presentation whose traced poset is ``t``.

    Vertices are ``mu``-orbits. Each arrow is found once from a fixed
    representative ``n'`` of its source orbit, and recorded by the pair
    ``(hi, lo)`` of its one-step downward trace. One-step traces stand in for
    covers, which they are whenever axiom (3) holds. A relation-free path
    whose consecutive pairs do not chain, or whose end-to-end downward trace
    is empty, is a minimal relation.
    """
    report = validate_traced_poset(t)
    fatal = [v for v in report.violations if v[0] not in ("3", "3'")]
    if fatal:
        raise TracedPosetError("traced poset is invalid", violations=fatal)
    mu = t.mu
    reps, names, signs = _orbit_names(t)
    pairs = []
    for n1 in reps:
        for m in t.elements:
            if not t.lt(m, n1):
                continue
            if t.trace(n1, m) == (n1, m):
                pairs.append((n1, m))
            if t.trace(m, n1) == (m, n1):
                pairs.append((mu[n1], mu[m]))
    pairs = sorted(set(pairs), key=lambda hl: (names[hl[0]], names[hl[1]], repr(hl)))
    arrows = []
    for k, (hi, lo) in enumerate(pairs, start=1):
        arrows.append((f"x{k}", names[hi], names[lo], hi, lo))
    by_source = {}
    for arr in arrows:
        by_source.setdefault(arr[1], []).append(arr)

    relations = []
    rel_set = set()

    def is_rel_free(path):
        for i in range(len(path)):
            for j in range(i + 2, len(path) + 1):
                if tuple(a[0] for a in path[i:j]) in rel_set:
                    return False
        return True

    frontier = [[a] for a in arrows]
    while frontier:
        nxt = []
        for path in frontier:
            for b in by_source.get(path[-1][2], ()):
                cand = path + [b]
                if not is_rel_free(cand[1:]) or not is_rel_free(cand[:-1]):
                    continue
                broken = any(x[4] != y[3] for x, y in zip(cand, cand[1:]))
                if broken or not t.trace(cand[0][3], cand[-1][4]):
                    key = tuple(a[0] for a in cand)
                    rel_set.add(key)
                    relations.append(tuple(reversed(key)))
                else:
                    nxt.append(cand)
        frontier = nxt

    vertices = sorted({names[x] for x in t.elements}, key=_natural)
    arrow_specs = [(a[0], a[1], a[2]) for a in arrows]
    sign_map = {a[0]: (-signs[a[3]], signs[a[4]]) for a in arrows}
    p = make_presentation(vertices, arrow_specs, relations)
    candidate = p.with_signs(sign_map)
    return candidate if not sign_violations(candidate) else solve_signs(p)


def _natural(s):
    import re

    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", s)]
