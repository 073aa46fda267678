"""Matching systems of counting equations and their semigroups of solutions.

A system consists of m equations between sums of 0/1-weighted variables,
written as 2m rows: row k and row m+k are the two sides of equation k
(0-based). The axioms are:

* coefficients are 0 or 1,
* no variable occurs on both sides of one equation,
* each variable occurs in at most two rows total.

The solution set U collects the nonnegative integer vectors making every
equation balance. Its generators and relations are computed from walks in
the matching graph further down in this module; the oracle module gets the
same answers by brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, InvariantError, ValidationReport, require


@dataclass(frozen=True)
class MatchingSystem:
    """2m coefficient rows over named variables.

    rows[k] and rows[m+k] are the sides of equation k. Row entries are 0/1.
    """

    m: int
    var_names: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def var_index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def row_support(self, row: int) -> tuple[int, ...]:
        return tuple(j for j, cj in enumerate(self.rows[row]) if cj)

    def fvalue(self, row: int, u: Sequence[int]) -> int:
        return sum(cj * uj for cj, uj in zip(self.rows[row], u))

    def fprofile(self, u: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.fvalue(i, u) for i in range(2 * self.m))

    def equations(self) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
        out = []
        for k in range(self.m):
            lhs = tuple(self.var_names[j] for j in self.row_support(k))
            rhs = tuple(self.var_names[j] for j in self.row_support(self.m + k))
            out.append((lhs, rhs))
        return out

    def column_rows(self, j: int) -> tuple[int, ...]:
        return tuple(i for i in range(2 * self.m) if self.rows[i][j])


def make_system(
    equations: Sequence[tuple[Iterable[str], Iterable[str]]],
    var_names: Optional[Sequence[str]] = None,
) -> MatchingSystem:
    """Build a system from (lhs names, rhs names) pairs.

    Variable order is taken from var_names when given, else from first
    appearance. A name repeated within one side would need coefficient 2 and
    is rejected.
    """
    order: list[str] = list(var_names) if var_names is not None else []
    known = set(order)
    if len(known) != len(order):
        raise InputError("duplicate variable name")
    sides: list[list[str]] = []
    for lhs, rhs in equations:
        for side in (lhs, rhs):
            names = [str(n) for n in side]
            if len(set(names)) != len(names):
                raise InputError(f"variable repeated within one side: {names}")
            for n in names:
                if n not in known:
                    if var_names is not None:
                        raise InputError(f"undeclared variable {n!r}")
                    known.add(n)
                    order.append(n)
            sides.append(names)
    m = len(equations)
    idx = {n: j for j, n in enumerate(order)}
    rows = []
    for k in range(m):
        row = [0] * len(order)
        for n in sides[2 * k]:
            row[idx[n]] = 1
        rows.append(tuple(row))
    for k in range(m):
        row = [0] * len(order)
        for n in sides[2 * k + 1]:
            row[idx[n]] = 1
        rows.append(tuple(row))
    sys_ = MatchingSystem(m=m, var_names=tuple(order), rows=tuple(rows))
    rep = validate_system(sys_)
    if not rep.ok:
        raise InputError(f"not a matching system: {rep.violations}")
    return sys_


def system_from_rows(
    rows: Sequence[Sequence[int]], var_names: Optional[Sequence[str]] = None
) -> MatchingSystem:
    if len(rows) % 2 != 0:
        raise InputError("row count must be even")
    m = len(rows) // 2
    width = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != width:
            raise InputError("ragged coefficient rows")
    if var_names is None:
        var_names = [f"x{j + 1}" for j in range(width)]
    if len(var_names) != width:
        raise InputError("variable name count does not match row width")
    sys_ = MatchingSystem(
        m=m,
        var_names=tuple(str(n) for n in var_names),
        rows=tuple(tuple(int(c) for c in r) for r in rows),
    )
    rep = validate_system(sys_)
    if not rep.ok:
        raise InputError(f"not a matching system: {rep.violations}")
    return sys_


def validate_system(sys_: MatchingSystem) -> ValidationReport:
    rep = ValidationReport()
    if len(sys_.rows) != 2 * sys_.m:
        rep.add("shape", "row count is not 2m")
        return rep
    for i, row in enumerate(sys_.rows):
        if len(row) != sys_.num_vars:
            rep.add("shape", f"row {i} has wrong width")
            return rep
        for j, cj in enumerate(row):
            if cj not in (0, 1):
                rep.add("coeff", f"coefficient at row {i}, var {j} is {cj}")
    for k in range(sys_.m):
        for j in range(sys_.num_vars):
            if sys_.rows[k][j] and sys_.rows[sys_.m + k][j]:
                rep.add(
                    "pair",
                    f"variable {sys_.var_names[j]} sits on both sides of"
                    f" equation {k + 1}",
                )
    for j in range(sys_.num_vars):
        occ = sum(row[j] for row in sys_.rows)
        if occ > 2:
            rep.add(
                "column",
                f"variable {sys_.var_names[j]} occurs in {occ} rows",
            )
    return rep


def is_member(sys_: MatchingSystem, u: Sequence[int]) -> bool:
    """Whether u solves every equation. u must be a nonnegative int vector."""
    if len(u) != sys_.num_vars:
        raise InputError(
            f"vector length {len(u)} does not match {sys_.num_vars} variables"
        )
    if any(int(x) != x for x in u):
        raise InputError("membership is defined for integer vectors")
    if any(x < 0 for x in u):
        return False
    return all(
        sys_.fvalue(k, u) == sys_.fvalue(sys_.m + k, u) for k in range(sys_.m)
    )


# ---------------------------------------------------------------------------
# the matching graph

DOTTED = -1


@dataclass(frozen=True)
class SolidEdge:
    """One engaged variable, drawn between the rows it occurs in."""

    var: int
    ends: tuple[int, ...]  # (v,) for a loop, else (p, q) with p < q

    @property
    def is_loop(self) -> bool:
        return len(self.ends) == 1

    def other(self, v: int) -> int:
        if self.is_loop:
            return self.ends[0]
        p, q = self.ends
        return q if v == p else p


@dataclass
class MatchingGraph:
    """Vertices 1..2m, one per row; solid edges per engaged variable.

    Vertex k+1 is row k's side of equation k and is dotted-matched to vertex
    k+1+m. Zero columns are free variables. Presolve marks columns that every
    solution sends to zero (an empty equation side forces the other side, and
    the forcing cascades); their edges are dropped.
    """

    system: MatchingSystem
    solid_edges: tuple[SolidEdge, ...]
    free_vars: tuple[int, ...]
    forced_zero: tuple[int, ...]
    _at: dict = field(repr=False, default_factory=dict)

    @property
    def m(self) -> int:
        return self.system.m

    def partner(self, v: int) -> int:
        return v + self.m if v <= self.m else v - self.m

    def edges_at(self, v: int) -> tuple[int, ...]:
        return self._at.get(v, ())

    def dotted_edges(self) -> list[tuple[int, int]]:
        return [(k + 1, k + 1 + self.m) for k in range(self.m)]


def forced_zero_vars(sys_: MatchingSystem) -> set[int]:
    """Columns that must be zero in every solution."""
    forced: set[int] = set()
    changed = True
    while changed:
        changed = False
        for k in range(sys_.m):
            lhs = [j for j in sys_.row_support(k) if j not in forced]
            rhs = [j for j in sys_.row_support(sys_.m + k) if j not in forced]
            if lhs and not rhs:
                forced.update(lhs)
                changed = True
            elif rhs and not lhs:
                forced.update(rhs)
                changed = True
    return forced


def build_graph(sys_: MatchingSystem) -> MatchingGraph:
    rep = validate_system(sys_)
    if not rep.ok:
        raise InputError(f"not a matching system: {rep.violations}")
    forced = forced_zero_vars(sys_)
    edges: list[SolidEdge] = []
    free: list[int] = []
    for j in range(sys_.num_vars):
        rows = sys_.column_rows(j)
        if not rows:
            free.append(j)
            continue
        if j in forced:
            continue
        verts = tuple(sorted(r + 1 for r in rows))
        if len(verts) == 2:
            require(
                not (verts[0] <= sys_.m and verts[1] == verts[0] + sys_.m),
                "solid edge would close an alternating two-cycle",
            )
        edges.append(SolidEdge(var=j, ends=verts))
    at: dict[int, list[int]] = {}
    for eid, e in enumerate(edges):
        for v in set(e.ends):
            at.setdefault(v, []).append(eid)
    return MatchingGraph(
        system=sys_,
        solid_edges=tuple(edges),
        free_vars=tuple(free),
        forced_zero=tuple(sorted(forced)),
        _at={v: tuple(sorted(ids)) for v, ids in at.items()},
    )


# ---------------------------------------------------------------------------
# alternating walks


@dataclass(frozen=True)
class Walk:
    """Alternating walk; edges[i] joins vertices[i] to vertices[i+1].

    Edge entries are solid edge ids, or DOTTED for the step between a vertex
    and its dotted partner. Strings run loop to loop; bands are closed walks
    with vertices[0] == vertices[-1] and no loop edges.
    """

    kind: str  # "string" or "band"
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def walk_vector(graph: MatchingGraph, walk: Walk) -> tuple[int, ...]:
    u = [0] * graph.system.num_vars
    for e in walk.edges:
        if e != DOTTED:
            u[graph.solid_edges[e].var] += 1
    return tuple(u)


def render_walk(graph: MatchingGraph, walk: Walk) -> str:
    names = graph.system.var_names
    parts = [str(walk.vertices[0])]
    for e, v in zip(walk.edges, walk.vertices[1:]):
        label = "~" if e == DOTTED else f"-{names[graph.solid_edges[e].var]}-"
        parts.append(label)
        parts.append(str(v))
    return " ".join(parts)


def _tokens(graph: MatchingGraph, vertices, edges) -> tuple:
    out = [vertices[0]]
    for e, v in zip(edges, vertices[1:]):
        out.append(DOTTED if e == DOTTED else graph.solid_edges[e].var)
        out.append(v)
    return tuple(out)


def _string_canonical(graph, vertices, edges):
    fwd = (tuple(vertices), tuple(edges))
    rev = (tuple(reversed(vertices)), tuple(reversed(edges)))
    tf = _tokens(graph, *fwd)
    tr = _tokens(graph, *rev)
    return (tf, fwd) if tf <= tr else (tr, rev)


def _band_orientations(vertices, edges):
    # vertices v0..vn with v0 == vn; edges e1..en, odd positions solid
    n = len(edges)
    vs = list(vertices[:-1])
    es = list(edges)
    cands = []
    for start in range(0, n, 2):
        vv = [vs[(start + i) % n] for i in range(n)]
        vv.append(vv[0])
        cands.append((tuple(vv), tuple(es[(start + i) % n] for i in range(n))))
    # reversed traversal: starts with the last edge, which is dotted, so only
    # odd rotation offsets give a solid-first closed walk
    rvs = [vs[0]] + vs[:0:-1]
    res = es[::-1]
    for start in range(1, n, 2):
        vv = [rvs[(start + i) % n] for i in range(n)]
        vv.append(vv[0])
        cands.append((tuple(vv), tuple(res[(start + i) % n] for i in range(n))))
    return cands


def _band_canonical(graph, vertices, edges):
    best = None
    for vv, ee in _band_orientations(vertices, edges):
        t = _tokens(graph, vv, ee)
        if best is None or t < best[0]:
            best = (t, (vv, ee))
    return best


def enumerate_strings(graph: MatchingGraph) -> list[Walk]:
    """All loop-to-loop alternating walks with every row count at most 2."""
    found: dict[tuple, Walk] = {}
    loops = [eid for eid, e in enumerate(graph.solid_edges) if e.is_loop]

    def record(verts, edges):
        key, (vv, ee) = _string_canonical(graph, verts, edges)
        if key not in found:
            w = Walk("string", vv, ee)
            require(
                is_member(graph.system, walk_vector(graph, w)),
                "string walk vector fails membership",
            )
            found[key] = w

    for start in loops:
        v0 = graph.solid_edges[start].ends[0]
        fv = {v0: 1}
        verts = [v0, v0]
        edges = [start]

        def extend(cur):
            w = graph.partner(cur)
            verts.append(w)
            edges.append(DOTTED)
            for eid in graph.edges_at(w):
                e = graph.solid_edges[eid]
                if e.is_loop:
                    if fv.get(w, 0) + 1 <= 2:
                        verts.append(w)
                        edges.append(eid)
                        record(list(verts), list(edges))
                        verts.pop()
                        edges.pop()
                else:
                    z = e.other(w)
                    if fv.get(w, 0) + 1 <= 2 and fv.get(z, 0) + 1 <= 2:
                        fv[w] = fv.get(w, 0) + 1
                        fv[z] = fv.get(z, 0) + 1
                        verts.append(z)
                        edges.append(eid)
                        extend(z)
                        edges.pop()
                        verts.pop()
                        fv[z] -= 1
                        fv[w] -= 1
            verts.pop()
            edges.pop()

        extend(v0)
    return [found[k] for k in sorted(found)]


def enumerate_bands(graph: MatchingGraph) -> list[Walk]:
    """All closed loop-free alternating walks with row counts at most 2."""
    found: dict[tuple, Walk] = {}
    nonloops = [eid for eid, e in enumerate(graph.solid_edges) if not e.is_loop]

    for start in nonloops:
        p, q = graph.solid_edges[start].ends
        for v0, v1 in ((p, q), (q, p)):
            fv = {p: 1, q: 1}
            verts = [v0, v1]
            edges = [start]

            def extend(cur):
                w = graph.partner(cur)
                verts.append(w)
                edges.append(DOTTED)
                if w == v0 and len(edges) >= 4:
                    key, (vv, ee) = _band_canonical(
                        graph, tuple(verts), tuple(edges)
                    )
                    if key not in found:
                        wlk = Walk("band", vv, ee)
                        require(
                            is_member(graph.system, walk_vector(graph, wlk)),
                            "band walk vector fails membership",
                        )
                        found[key] = wlk
                for eid in graph.edges_at(w):
                    e = graph.solid_edges[eid]
                    if e.is_loop:
                        continue
                    z = e.other(w)
                    if fv.get(w, 0) + 1 <= 2 and fv.get(z, 0) + 1 <= 2:
                        fv[w] = fv.get(w, 0) + 1
                        fv[z] = fv.get(z, 0) + 1
                        verts.append(z)
                        edges.append(eid)
                        extend(z)
                        edges.pop()
                        verts.pop()
                        fv[z] -= 1
                        fv[w] -= 1
                verts.pop()
                edges.pop()

            extend(v1)
    return [found[k] for k in sorted(found)]


def _walk_sort_key(graph, w: Walk):
    return (len(w.edges), _tokens(graph, w.vertices, w.edges))


def enumerate_irreducible_walks(
    graph: MatchingGraph,
) -> list[tuple[tuple[int, ...], Walk]]:
    """Walk vectors that admit no split into smaller walk vectors.

    Returns (vector, walk) pairs sorted by (total, lex); among walks sharing
    a vector the shortest (then token-smallest) representative is kept.
    """
    best: dict[tuple, Walk] = {}
    for w in enumerate_strings(graph) + enumerate_bands(graph):
        u = walk_vector(graph, w)
        cur = best.get(u)
        if cur is None or _walk_sort_key(graph, w) < _walk_sort_key(graph, cur):
            best[u] = w
    vecs = set(best)
    memo: dict[tuple, bool] = {}

    def expressible(v):
        if not any(v):
            return True
        if v in memo:
            return memo[v]
        memo[v] = False
        ok = False
        for g in vecs:
            if all(gi <= vi for gi, vi in zip(g, v)):
                if expressible(tuple(vi - gi for vi, gi in zip(v, g))):
                    ok = True
                    break
        memo[v] = ok
        return ok

    out = []
    for u in sorted(vecs, key=lambda v: (sum(v), v)):
        reducible = False
        for g in vecs:
            if g == u:
                continue
            if all(gi <= ui for gi, ui in zip(g, u)):
                rest = tuple(ui - gi for ui, gi in zip(u, g))
                if any(rest) and expressible(rest):
                    reducible = True
                    break
        if not reducible:
            out.append((u, best[u]))
    return out


# ---------------------------------------------------------------------------
# generators and relations


@dataclass(frozen=True)
class Generator:
    name: str
    vector: tuple[int, ...]
    kind: str  # "string", "band" or "free"
    walk: Optional[str] = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "vector": list(self.vector), "kind": self.kind}
        if self.walk is not None:
            out["walk"] = self.walk
        return out


@dataclass(frozen=True)
class Relation:
    lhs: tuple[str, ...]  # generator names with repetition, sorted
    rhs: tuple[str, ...]
    provenance: str

    def as_dict(self) -> dict:
        return {
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "provenance": self.provenance,
        }


@dataclass
class Presentation:
    system: MatchingSystem
    graph: MatchingGraph
    generators: list[Generator]
    relations: list[Relation]
    relation_cap: int

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise InputError(f"unknown generator {name!r}")

    def as_dict(self) -> dict:
        return {
            "generators": [g.as_dict() for g in self.generators],
            "relations": [r.as_dict() for r in self.relations],
            "free_variables": [
                self.system.var_names[j] for j in self.graph.free_vars
            ],
            "forced_zero": [
                self.system.var_names[j] for j in self.graph.forced_zero
            ],
            "relation_cap": self.relation_cap,
        }


def generators(graph: MatchingGraph) -> list[Generator]:
    """Irreducible walk vectors plus unit generators for free variables."""
    items = []
    for u, w in enumerate_irreducible_walks(graph):
        items.append((u, w.kind, render_walk(graph, w)))
    nv = graph.system.num_vars
    for j in graph.free_vars:
        u = tuple(1 if i == j else 0 for i in range(nv))
        items.append((u, "free", None))
    items.sort(key=lambda t: (sum(t[0]), t[0]))
    return [
        Generator(name=f"g{i + 1}", vector=u, kind=k, walk=r)
        for i, (u, k, r) in enumerate(items)
    ]


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _msort(seq):
    return tuple(sorted(seq))


def _side_vector(vectors, side, n):
    u = [0] * n
    for i in side:
        for j, x in enumerate(vectors[i]):
            u[j] += x
    return tuple(u)


def _decompose_first(vectors, target):
    """One expression of target as a sum of the given vectors, by index."""

    def go(rem, start):
        if not any(rem):
            return ()
        for i in range(start, len(vectors)):
            g = vectors[i]
            if all(gi <= ri for gi, ri in zip(g, rem)):
                sub = go(tuple(ri - gi for ri, gi in zip(rem, g)), i)
                if sub is not None:
                    return (i,) + sub
        return None

    return go(tuple(target), 0)


def _decompositions_all(vectors, target):
    out = []
    acc: list[int] = []

    def go(rem, start):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(start, len(vectors)):
            g = vectors[i]
            if all(gi <= ri for gi, ri in zip(g, rem)):
                acc.append(i)
                go(tuple(ri - gi for ri, gi in zip(rem, g)), i)
                acc.pop()

    go(tuple(target), 0)
    return out


def _cancel_orient(lhs, rhs):
    """Cancel shared generators, orient the smaller side first.

    Returns None when the sides agree as multisets (a trivial relation).
    """
    la, rb = list(lhs), list(rhs)
    for x in list(la):
        if x in rb:
            la.remove(x)
            rb.remove(x)
    if not la and not rb:
        return None
    a, b = _msort(la), _msort(rb)
    require(bool(a) and bool(b), "relation with an empty side")
    if (len(b), b) < (len(a), a):
        a, b = b, a
    return (a, b)


def _contains(state, sub):
    pool = list(state)
    for x in sub:
        if x in pool:
            pool.remove(x)
        else:
            return False
    return True


def _replace(state, old, new):
    pool = list(state)
    for x in old:
        pool.remove(x)
    return _msort(pool + list(new))


def _moves(state, rels):
    out = []
    for a, b in rels:
        for src, dst in ((a, b), (b, a)):
            if _contains(state, src):
                out.append(_replace(state, src, dst))
    return out


def _congruent_multisets(a, b, rels):
    """Whether the relation set rewrites multiset a into multiset b."""
    start, target = _msort(a), _msort(b)
    if start == target:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for st in frontier:
            for t in _moves(st, rels):
                if t == target:
                    return True
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return False


def _fiber_classes(decs, rels):
    decs = sorted(set(decs))
    idx = {d: i for i, d in enumerate(decs)}
    parent = list(range(len(decs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for d in decs:
        for t in _moves(d, rels):
            if t in idx:
                a, b = find(idx[d]), find(idx[t])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for d in decs:
        groups.setdefault(find(idx[d]), []).append(d)
    return sorted(groups.values())


def _reachable_sums(sys_: MatchingSystem, vecs, cap, budget=200000):
    start = tuple([0] * sys_.num_vars)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for g in vecs:
                w = _vadd(v, g)
                if w in seen:
                    continue
                if max(sys_.fprofile(w), default=0) <= cap:
                    seen.add(w)
                    if len(seen) > budget:
                        raise InvariantError(
                            "relation sweep exceeded the internal budget;"
                            " the system is too large for exact search"
                        )
                    nxt.append(w)
        frontier = nxt
    seen.discard(start)
    return seen


def _partial_strings(graph: MatchingGraph):
    """Vectors of loop-started walks ending with a solid edge, by endpoint.

    A second loop would sit in the interior of any string completed through
    a dotted edge, so continuations use non-loop edges only.
    """
    arms: dict[int, set] = {}
    nv = graph.system.num_vars
    loops = [eid for eid, e in enumerate(graph.solid_edges) if e.is_loop]
    for start in loops:
        v0 = graph.solid_edges[start].ends[0]
        fv = {v0: 1}
        vec = [0] * nv
        vec[graph.solid_edges[start].var] += 1
        arms.setdefault(v0, set()).add(tuple(vec))

        def extend(cur):
            w = graph.partner(cur)
            for eid in graph.edges_at(w):
                e = graph.solid_edges[eid]
                if e.is_loop:
                    continue
                z = e.other(w)
                if fv.get(w, 0) + 1 <= 2 and fv.get(z, 0) + 1 <= 2:
                    fv[w] = fv.get(w, 0) + 1
                    fv[z] = fv.get(z, 0) + 1
                    vec[e.var] += 1
                    arms.setdefault(z, set()).add(tuple(vec))
                    extend(z)
                    vec[e.var] -= 1
                    fv[z] -= 1
                    fv[w] -= 1

        extend(v0)
    return arms


def _loop_free_walks(graph: MatchingGraph):
    """Vectors of solid-bounded loop-free walks, keyed by (start, end)."""
    out: dict[tuple[int, int], set] = {}
    nv = graph.system.num_vars
    for x in range(1, 2 * graph.m + 1):
        fv: dict[int, int] = {}
        vec = [0] * nv

        def extend(cur, first):
            w = cur if first else graph.partner(cur)
            for eid in graph.edges_at(w):
                e = graph.solid_edges[eid]
                if e.is_loop:
                    continue
                z = e.other(w)
                if fv.get(w, 0) + 1 <= 2 and fv.get(z, 0) + 1 <= 2:
                    fv[w] = fv.get(w, 0) + 1
                    fv[z] = fv.get(z, 0) + 1
                    vec[e.var] += 1
                    out.setdefault((x, z), set()).add(tuple(vec))
                    extend(z, False)
                    vec[e.var] -= 1
                    fv[z] -= 1
                    fv[w] -= 1

        extend(x, True)
    return out


def _x_candidates(graph, dec):
    arms = _partial_strings(graph)
    cands = []
    for v, w in graph.dotted_edges():
        av = sorted(arms.get(v, ()))
        aw = sorted(arms.get(w, ()))
        for p1, p2 in itertools.combinations(av, 2):
            for q1, q2 in itertools.combinations(aw, 2):
                lhs = dec(_vadd(q1, p1)) + dec(_vadd(q2, p2))
                rhs = dec(_vadd(q1, p2)) + dec(_vadd(q2, p1))
                rel = _cancel_orient(lhs, rhs)
                if rel is not None:
                    cands.append((rel, "X-configuration({%d,%d})" % (v, w)))
    return cands


def _h_candidates(graph, dec):
    walks = _loop_free_walks(graph)
    cands = []
    dotted = graph.dotted_edges()
    for (v, vbar), (w, wbar) in itertools.combinations(dotted, 2):
        for aend, bend in ((w, wbar), (wbar, w)):
            avs = sorted(walks.get((v, aend), ()))
            bvs = sorted(walks.get((vbar, bend), ()))
            for a1, a2 in itertools.combinations(avs, 2):
                for b1, b2 in itertools.combinations(bvs, 2):
                    lhs = dec(_vadd(a1, b1)) + dec(_vadd(a2, b2))
                    rhs = dec(_vadd(a1, b2)) + dec(_vadd(a2, b1))
                    rel = _cancel_orient(lhs, rhs)
                    if rel is not None:
                        cands.append(
                            (
                                rel,
                                "H-configuration({%d,%d},{%d,%d})"
                                % (v, vbar, w, wbar),
                            )
                        )
    return cands


class _RelationSearch:
    """Shared state for relation discovery over a fixed generator list."""

    def __init__(self, graph: MatchingGraph, gens: list[Generator]):
        self.graph = graph
        self.sys = graph.system
        self.gens = gens
        self.vectors = [g.vector for g in gens]
        self.searchable = [i for i, g in enumerate(gens) if g.kind != "free"]
        self.svecs = [self.vectors[i] for i in self.searchable]
        self._dec_cache: dict[tuple, tuple] = {}

    def dec(self, target):
        if target not in self._dec_cache:
            local = _decompose_first(self.svecs, target)
            require(
                local is not None,
                "configuration side does not decompose into generators",
            )
            self._dec_cache[target] = tuple(self.searchable[i] for i in local)
        return self._dec_cache[target]

    def candidates(self, which: str):
        cands = []
        if "x" in which:
            cands += _x_candidates(self.graph, self.dec)
        if "h" in which:
            cands += _h_candidates(self.graph, self.dec)
        seen = set()
        ordered = []
        for rel, prov in cands:
            if rel in seen:
                continue
            seen.add(rel)
            ordered.append((rel, prov))
        n = self.sys.num_vars
        ordered.sort(
            key=lambda t: (sum(_side_vector(self.vectors, t[0][0], n)), t[0])
        )
        return ordered

    def side_sum(self, side):
        return _side_vector(self.vectors, side, self.sys.num_vars)

    def decs_of(self, v):
        return [
            _msort(tuple(self.searchable[i] for i in d))
            for d in _decompositions_all(self.svecs, v)
        ]

    def to_relations(self, kept, prov_of):
        out = []
        for rel in kept:
            out.append(
                Relation(
                    lhs=tuple(self.gens[i].name for i in rel[0]),
                    rhs=tuple(self.gens[i].name for i in rel[1]),
                    provenance=prov_of[rel],
                )
            )
        return out


def _config_relations(graph: MatchingGraph, gens, which: str):
    if gens is None:
        gens = generators(graph)
    search = _RelationSearch(graph, gens)
    kept = []
    prov_of = {}
    for rel, prov in search.candidates(which):
        if _congruent_multisets(rel[0], rel[1], kept):
            continue
        kept.append(rel)
        prov_of[rel] = prov
    return search.to_relations(kept, prov_of)


def find_x_configurations(graph: MatchingGraph, gens=None) -> list[Relation]:
    """Relations from swapping partial strings across one dotted edge."""
    return _config_relations(graph, gens, "x")


def find_h_configurations(graph: MatchingGraph, gens=None) -> list[Relation]:
    """Relations from recombining loop-free walks between two dotted edges."""
    return _config_relations(graph, gens, "h")


SWEEP_CAP = 4


def presentation(sys_: MatchingSystem) -> Presentation:
    """Generators and a minimal relation set for the solution semigroup.

    Relations come from a greedy sweep of all decomposable sums with row
    counts at most SWEEP_CAP, preferring X/H configuration candidates and
    falling back on direct fiber joins; configuration relations above the
    sweep domain are appended when not already implied.
    """
    graph = build_graph(sys_)
    gens = generators(graph)
    search = _RelationSearch(graph, gens)
    ordered = search.candidates("xh")

    kept: list[tuple] = []
    prov_of: dict[tuple, str] = {}
    sums = _reachable_sums(sys_, search.svecs, SWEEP_CAP)
    decs_at: dict[tuple, list] = {}
    for v in sorted(sums, key=lambda u: (sum(u), u)):
        decs = search.decs_of(v)
        if len(decs) < 2:
            continue
        decs_at[v] = decs
        while True:
            cls = _fiber_classes(decs, kept)
            if len(cls) == 1:
                break
            added = False
            for rel, prov in ordered:
                if rel in prov_of:
                    continue
                a, b = rel
                if search.side_sum(a) != v:
                    continue
                if a not in decs_at[v] or b not in decs_at[v]:
                    continue
                ca = next(i for i, c in enumerate(cls) if a in c)
                cb = next(i for i, c in enumerate(cls) if b in c)
                if ca != cb:
                    kept.append(rel)
                    prov_of[rel] = prov
                    added = True
                    break
            if not added:
                rel = _cancel_orient(cls[0][0], cls[1][0])
                require(rel is not None, "distinct classes with equal members")
                kept.append(rel)
                prov_of[rel] = "toric-kernel"

    for rel, prov in ordered:
        if rel in prov_of:
            continue
        if _congruent_multisets(rel[0], rel[1], kept):
            continue
        kept.append(rel)
        prov_of[rel] = prov

    # final re-check: one class per decomposable sum in the sweep domain
    for v, decs in decs_at.items():
        require(
            len(_fiber_classes(decs, kept)) == 1,
            "relation set leaves a decomposition fiber disconnected",
        )

    cap_used = SWEEP_CAP
    for rel in kept:
        u = search.side_sum(rel[0])
        cap_used = max(cap_used, max(sys_.fprofile(u), default=0))

    return Presentation(
        system=sys_,
        graph=graph,
        generators=gens,
        relations=search.to_relations(kept, prov_of),
        relation_cap=cap_used,
    )
