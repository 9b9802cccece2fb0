"""Quivers with monomial relations: parsing, validation, sign maps, isomorphism.

Relations are written right-to-left, matching composition of maps: the
relation ``c1*b*a3`` is the path that applies ``a3`` first and ``c1`` last.
Internally relations are kept as tuples in that same written order.
"""

from __future__ import annotations

import re
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .exceptions import PresentationError, SignError


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex id")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise PresentationError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in vs:
                    raise PresentationError(f"arrow {a.id} uses undeclared vertex {end}")


@dataclass(frozen=True)
class Presentation:
    """A quiver, a set of monomial relations and optionally solved sign maps.

    ``signs`` is either ``None`` or a tuple of ``(arrow, sigma, eps)`` triples,
    one per arrow in declaration order.
    """

    quiver: Quiver
    relations: tuple[tuple[str, ...], ...] = ()
    signs: tuple[tuple[str, int, int], ...] | None = None

    def __post_init__(self):
        ids = {a.id for a in self.quiver.arrows}
        for rel in self.relations:
            if len(rel) < 2:
                raise PresentationError(f"relation {'*'.join(rel)} has length < 2")
            for a in rel:
                if a not in ids:
                    raise PresentationError(f"relation uses unknown arrow {a}")
            for left, right in zip(rel, rel[1:]):
                if self.arrow(left).source != self.arrow(right).target:
                    raise PresentationError(f"relation {'*'.join(rel)} is not a path")
        if len(set(self.relations)) != len(self.relations):
            raise PresentationError("duplicate relation")
        if self.signs is not None:
            if [s[0] for s in self.signs] != [a.id for a in self.quiver.arrows]:
                raise PresentationError("sign map must list every arrow once, in declaration order")
            for a, sg, ep in self.signs:
                if sg not in (1, -1) or ep not in (1, -1):
                    raise PresentationError(f"sign values for {a} must be +1 or -1")

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @cached_property
    def _arrow_map(self):
        return {a.id: a for a in self.quiver.arrows}

    def arrow(self, arrow_id):
        try:
            return self._arrow_map[arrow_id]
        except KeyError:
            raise PresentationError(f"unknown arrow {arrow_id}") from None

    @cached_property
    def _sign_map(self):
        if self.signs is None:
            return None
        return {a: (sg, ep) for a, sg, ep in self.signs}

    @property
    def has_signs(self):
        return self.signs is not None

    def sigma(self, arrow_id):
        if self._sign_map is None:
            raise SignError("presentation has no sign maps; call solve_signs first")
        return self._sign_map[arrow_id][0]

    def eps(self, arrow_id):
        if self._sign_map is None:
            raise SignError("presentation has no sign maps; call solve_signs first")
        return self._sign_map[arrow_id][1]

    @cached_property
    def relation_set(self):
        return frozenset(self.relations)

    @cached_property
    def applied_relation_set(self):
        """Relations listed in application order (first applied arrow first)."""
        return frozenset(tuple(reversed(r)) for r in self.relations)

    @cached_property
    def max_relation_length(self):
        return max((len(r) for r in self.relations), default=0)

    @cached_property
    def out_arrows(self):
        out = defaultdict(list)
        for a in self.quiver.arrows:
            out[a.source].append(a)
        return dict(out)

    @cached_property
    def in_arrows(self):
        inc = defaultdict(list)
        for a in self.quiver.arrows:
            inc[a.target].append(a)
        return dict(inc)

    def with_signs(self, signs):
        """Return a copy carrying ``signs`` (a mapping arrow -> (sigma, eps))."""
        triples = tuple((a.id, int(signs[a.id][0]), int(signs[a.id][1])) for a in self.arrows)
        return Presentation(self.quiver, self.relations, triples)

    def without_signs(self):
        return Presentation(self.quiver, self.relations, None)


def make_presentation(vertices, arrows, relations=(), signs=None):
    """Convenience constructor from plain Python data.

    ``arrows`` is an iterable of ``(id, source, target)``; ``relations`` of
    sequences or ``"x*y*z"`` strings; ``signs`` a mapping arrow -> (sigma, eps).
    """
    quiver = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    rels = tuple(tuple(r.split("*")) if isinstance(r, str) else tuple(r) for r in relations)
    p = Presentation(quiver, rels)
    if signs is not None:
        p = p.with_signs(signs)
        violations = sign_violations(p)
        if violations:
            raise SignError(f"sign map violates {violations[0][0]}: {violations[0][1]}")
    return p


# -- text format -------------------------------------------------------------

_ARROW_RE = re.compile(r"^arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)$")
_SIGN_RE = re.compile(r"^sign\s+(\S+)\s+([+-]?1)\s+([+-]?1)$")


def parse_presentation(text):
    """Parse the line-oriented presentation format.

    Syntax and structural errors raise :class:`PresentationError` carrying the
    offending line number.
    """
    vertices = None
    arrows = []
    relations = []
    signs = {}
    seen_arrows = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices"):
            head, _, rest = line.partition(":")
            if head.strip() != "vertices" or not _:
                raise PresentationError("expected 'vertices: v1 v2 ...'", lineno)
            if vertices is not None:
                raise PresentationError("vertices declared twice", lineno)
            vertices = rest.split()
            if len(set(vertices)) != len(vertices):
                raise PresentationError("duplicate vertex id", lineno)
            continue
        if line.startswith("arrow"):
            m = _ARROW_RE.match(line)
            if not m:
                raise PresentationError("expected 'arrow <id> : <src> -> <tgt>'", lineno)
            aid, src, tgt = m.groups()
            if vertices is None:
                raise PresentationError("arrow declared before vertices", lineno)
            if aid in seen_arrows:
                raise PresentationError(f"duplicate arrow id {aid}", lineno)
            for end in (src, tgt):
                if end not in vertices:
                    raise PresentationError(f"arrow {aid} uses undeclared vertex {end}", lineno)
            seen_arrows[aid] = (src, tgt)
            arrows.append((aid, src, tgt))
            continue
        if line.startswith("relation"):
            parts = line.split(None, 1)
            if len(parts) != 2 or parts[0] != "relation":
                raise PresentationError("expected 'relation x*y*...'", lineno)
            rel = tuple(t.strip() for t in parts[1].split("*"))
            if len(rel) < 2 or any(not t for t in rel):
                raise PresentationError("relation must have length >= 2", lineno)
            for a in rel:
                if a not in seen_arrows:
                    raise PresentationError(f"relation uses unknown arrow {a}", lineno)
            for left, right in zip(rel, rel[1:]):
                if seen_arrows[left][0] != seen_arrows[right][1]:
                    raise PresentationError(f"relation {parts[1]} is not a path", lineno)
            if rel in relations:
                raise PresentationError(f"duplicate relation {parts[1]}", lineno)
            relations.append(rel)
            continue
        if line.startswith("sign"):
            m = _SIGN_RE.match(line)
            if not m:
                raise PresentationError("expected 'sign <arrow> <+-1> <+-1>'", lineno)
            aid, sg, ep = m.groups()
            if aid not in seen_arrows:
                raise PresentationError(f"sign for unknown arrow {aid}", lineno)
            if aid in signs:
                raise PresentationError(f"duplicate sign for {aid}", lineno)
            signs[aid] = (int(sg), int(ep))
            continue
        raise PresentationError(f"unrecognised line: {line!r}", lineno)
    if vertices is None:
        raise PresentationError("missing 'vertices:' line")
    if signs and set(signs) != set(seen_arrows):
        missing = sorted(set(seen_arrows) - set(signs))
        raise PresentationError(f"incomplete sign map, missing {' '.join(missing)}")
    return make_presentation(vertices, arrows, relations, signs or None)


def serialize_presentation(p):
    lines = ["vertices: " + " ".join(p.vertices)]
    lines += [f"arrow {a.id} : {a.source} -> {a.target}" for a in p.arrows]
    lines += ["relation " + "*".join(r) for r in p.relations]
    if p.signs is not None:
        lines += [f"sign {a} {sg} {ep}" for a, sg, ep in p.signs]
    return "\n".join(lines) + "\n"


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    is_string_algebra: bool
    is_gentle: bool
    is_acyclic: bool
    violations: tuple[tuple[str, object], ...] = ()
    cycle: tuple[str, ...] | None = field(default=None)

    def __bool__(self):
        return self.is_string_algebra


def _relation_free(path_app, rels_app, max_len):
    """True if no window of ``path_app`` (application order) ending at its last arrow is a relation."""
    n = len(path_app)
    for k in range(2, min(n, max_len) + 1):
        if tuple(path_app[n - k:]) in rels_app:
            return False
    return True


def _find_quiver_cycle(p):
    """Return the arrows of a directed cycle, or None if the quiver is acyclic."""
    colour = {v: 0 for v in p.vertices}
    via = {}

    def dfs(v):
        colour[v] = 1
        for a in p.out_arrows.get(v, ()):
            w = a.target
            if colour[w] == 1:
                cyc = [a.id]
                u = v
                while u != w:
                    arr = via[u]
                    cyc.append(arr.id)
                    u = arr.source
                return tuple(reversed(cyc))
            if colour[w] == 0:
                via[w] = a
                found = dfs(w)
                if found:
                    return found
        colour[v] = 2
        return None

    for v in p.vertices:
        if colour[v] == 0:
            found = dfs(v)
            if found:
                return found
    return None


def _unbounded_path_witness(p):
    """Search the automaton of relation-free windows for a cycle.

    States are relation-free paths of length ``K = max(1, longest relation - 1)``;
    a cycle among them means relation-free paths of every length exist.
    """
    K = max(1, p.max_relation_length - 1)
    rels_app = {tuple(reversed(r)) for r in p.relations}
    maxrel = p.max_relation_length
    frontier = [(a.id,) for a in p.arrows]
    for _ in range(K - 1):
        nxt = []
        for path in frontier:
            for b in p.out_arrows.get(p.arrow(path[-1]).target, ()):
                cand = path + (b.id,)
                if _relation_free(cand, rels_app, maxrel):
                    nxt.append(cand)
        frontier = nxt
    states = frontier

    def successors(state):
        for b in p.out_arrows.get(p.arrow(state[-1]).target, ()):
            cand = state + (b.id,)
            if _relation_free(cand, rels_app, maxrel):
                yield cand[1:], b.id

    colour = {s: 0 for s in states}
    stack_arrows = []

    def dfs(s):
        colour[s] = 1
        for t, b in successors(s):
            stack_arrows.append((s, b))
            if colour.get(t, 0) == 1:
                idx = next(i for i, (st, _) in enumerate(stack_arrows) if st == t)
                return tuple(arr for _, arr in stack_arrows[idx:])
            if colour.get(t, 0) == 0:
                found = dfs(t)
                if found:
                    return found
            stack_arrows.pop()
        colour[s] = 2
        return None

    for s in states:
        if colour[s] == 0:
            found = dfs(s)
            if found:
                return found
    return None


def validate(p):
    """Check the string-algebra axioms, the gentle axioms and acyclicity."""
    violations = []
    for v in p.vertices:
        outs = p.out_arrows.get(v, [])
        ins = p.in_arrows.get(v, [])
        if len(outs) > 2:
            violations.append(("I", f"{len(outs)} arrows start at {v}: {' '.join(a.id for a in outs)}"))
        if len(ins) > 2:
            violations.append(("I", f"{len(ins)} arrows end at {v}: {' '.join(a.id for a in ins)}"))
    rels = p.relation_set
    for a in p.arrows:
        before = p.in_arrows.get(a.source, [])
        after = p.out_arrows.get(a.target, [])
        free_before = [b.id for b in before if (a.id, b.id) not in rels]
        free_after = [c.id for c in after if (c.id, a.id) not in rels]
        if len(free_before) > 1:
            violations.append(("II", f"{a.id} composes freely after {' '.join(free_before)}"))
        if len(free_after) > 1:
            violations.append(("II", f"{' '.join(free_after)} compose freely after {a.id}"))
    unbounded = _unbounded_path_witness(p)
    if unbounded:
        violations.append(("III", "relation-free cycle " + " ".join(unbounded)))
    is_string = not violations

    gentle_violations = []
    for rel in p.relations:
        if len(rel) != 2:
            gentle_violations.append(("gentle-length", "*".join(rel)))
    for a in p.arrows:
        before = p.in_arrows.get(a.source, [])
        after = p.out_arrows.get(a.target, [])
        rel_before = [b.id for b in before if (a.id, b.id) in rels]
        rel_after = [c.id for c in after if (c.id, a.id) in rels]
        if len(rel_before) > 1:
            gentle_violations.append(("IIa", f"{a.id} composes to zero after {' '.join(rel_before)}"))
        if len(rel_after) > 1:
            gentle_violations.append(("IIb", f"{' '.join(rel_after)} compose to zero after {a.id}"))
    cycle = _find_quiver_cycle(p)
    return ValidationReport(
        is_string_algebra=is_string,
        is_gentle=is_string and not gentle_violations,
        is_acyclic=cycle is None,
        violations=tuple(violations + gentle_violations),
        cycle=cycle,
    )


# -- sign maps ----------------------------------------------------------------


def _sign_constraints(p):
    """Yield (var1, var2, reason) meaning var1 = -var2; vars are ('s'|'e', arrow)."""
    arrows = p.arrows
    for i, a in enumerate(arrows):
        for b in arrows[i + 1:]:
            if a.source == b.source:
                yield ("s", a.id), ("s", b.id), f"(a) {a.id},{b.id} share source"
            if a.target == b.target:
                yield ("e", a.id), ("e", b.id), f"(b) {a.id},{b.id} share target"
    rels = p.relation_set
    for a in arrows:
        for b in p.in_arrows.get(a.source, ()):
            if (a.id, b.id) not in rels:
                yield ("s", a.id), ("e", b.id), f"(c) {a.id}*{b.id} not a relation"


def sign_violations(p):
    out = []
    for x, y, why in _sign_constraints(p):
        vx = p.sigma(x[1]) if x[0] == "s" else p.eps(x[1])
        vy = p.sigma(y[1]) if y[0] == "s" else p.eps(y[1])
        if vx != -vy:
            out.append((why.split()[0].strip("()"), why))
    return out


def solve_signs(p):
    """Return ``p`` equipped with sign maps satisfying constraints (a)-(c).

    All constraints say two variables are opposite, so this is a two-colouring
    of the constraint graph. Variables are visited in arrow declaration order
    (sigma before eps) and each new component is seeded with +1.
    """
    adj = defaultdict(list)
    for x, y, why in _sign_constraints(p):
        adj[x].append((y, why))
        adj[y].append((x, why))
    value = {}
    parent = {}
    for a in p.arrows:
        for var in (("s", a.id), ("e", a.id)):
            if var in value:
                continue
            value[var] = 1
            parent[var] = None
            queue = deque([var])
            while queue:
                u = queue.popleft()
                for w, why in adj[u]:
                    if w not in value:
                        value[w] = -value[u]
                        parent[w] = (u, why)
                        queue.append(w)
                    elif value[w] == value[u]:
                        raise SignError(
                            "sign constraints are unsatisfiable (odd cycle)",
                            cycle=_odd_cycle(parent, u, w, why),
                        )
    return p.with_signs({a.id: (value[("s", a.id)], value[("e", a.id)]) for a in p.arrows})


def _odd_cycle(parent, u, w, closing):
    def chain(x):
        out = []
        while parent[x] is not None:
            prev, why = parent[x]
            out.append(why)
            x = prev
        return out

    return tuple(chain(u) + [closing] + list(reversed(chain(w))))


def ensure_signs(p):
    return p if p.has_signs else solve_signs(p)


# -- isomorphism --------------------------------------------------------------


def is_isomorphic(p, q):
    """Decide whether two presentations agree up to renaming vertices and arrows.

    Sign maps are ignored. Candidate vertex images are restricted by
    (in-degree, out-degree, loops) signature, then arrows are matched by
    backtracking and the relation sets compared.
    """
    if (len(p.vertices), len(p.arrows), len(p.relations)) != (len(q.vertices), len(q.arrows), len(q.relations)):
        return False
    if sorted(map(len, p.relations)) != sorted(map(len, q.relations)):
        return False

    def signature(pr, v):
        return (
            len(pr.in_arrows.get(v, ())),
            len(pr.out_arrows.get(v, ())),
            sum(1 for a in pr.out_arrows.get(v, ()) if a.target == v),
        )

    psig = {v: signature(p, v) for v in p.vertices}
    qsig = {v: signature(q, v) for v in q.vertices}
    if sorted(psig.values()) != sorted(qsig.values()):
        return False
    pverts = sorted(p.vertices, key=lambda v: (psig[v], v))
    q_by_sig = defaultdict(list)
    for v in q.vertices:
        q_by_sig[qsig[v]].append(v)

    def edge_count(pr, u, v):
        return sum(1 for a in pr.out_arrows.get(u, ()) if a.target == v)

    vmap = {}
    used = set()

    def match_arrows():
        amap = {}
        qused = set()
        parrows = list(p.arrows)

        def go(i):
            if i == len(parrows):
                mapped = {tuple(amap[x] for x in r) for r in p.relations}
                return mapped == q.relation_set
            a = parrows[i]
            for b in q.arrows:
                if b.id in qused or b.source != vmap[a.source] or b.target != vmap[a.target]:
                    continue
                amap[a.id] = b.id
                qused.add(b.id)
                if go(i + 1):
                    return True
                qused.discard(b.id)
                del amap[a.id]
            return False

        return go(0)

    def go(i):
        if i == len(pverts):
            return match_arrows()
        v = pverts[i]
        for w in q_by_sig[psig[v]]:
            if w in used:
                continue
            ok = all(
                edge_count(p, v, u) == edge_count(q, w, vmap[u]) and edge_count(p, u, v) == edge_count(q, vmap[u], w)
                for u in vmap
            )
            if not ok:
                continue
            vmap[v] = w
            used.add(w)
            if go(i + 1):
                return True
            used.discard(w)
            del vmap[v]
        return False

    return go(0)
