"""Brute-force ground truth, kept independent of the walk machinery.

Everything here recomputes answers from first principles: membership by
evaluating coefficient rows, generators by subtracting points inside a box,
relations by joining decomposition classes, semi-invariance by summing
mirrored entries. The walk-based engine has to agree with this module; the
test suite wires the two against each other on fixed and random inputs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError, require
from .matching import MatchingSystem, system_from_rows
from .quivers import Arrow, Coloring, Quiver, color_incidence, vertex_colors


@dataclass
class OracleConfig:
    coordinate_cap: int = 3
    relation_degree_cap: int = 4
    seed: int = 0


def enumerate_points(sys_: MatchingSystem, cap: int) -> list[tuple[int, ...]]:
    """All solutions with coordinates at most cap, in lexicographic order.

    Walks the box depth first keeping running side counts, so each step
    touches only the rows of one variable.
    """
    if cap < 0:
        raise InputError("cap must be nonnegative")
    l = sys_.num_vars
    m = sys_.m
    cols = [sys_.column_rows(j) for j in range(l)]
    prof = [0] * (2 * m)
    u = [0] * l
    out: list[tuple[int, ...]] = []

    def rec(j: int) -> None:
        if j == l:
            for k in range(m):
                if prof[k] != prof[m + k]:
                    return
            out.append(tuple(u))
            return
        for val in range(cap + 1):
            u[j] = val
            for r in cols[j]:
                prof[r] += val
            rec(j + 1)
            for r in cols[j]:
                prof[r] -= val
        u[j] = 0

    rec(0)
    return out


def minimal_generators_bruteforce(
    sys_: MatchingSystem, cap: int = 3
) -> list[tuple[int, ...]]:
    """Points that are not sums of two nonzero solutions.

    Inside the box this test is exact, because both parts of any split are
    coordinatewise below the point being split. Requires cap >= 2 so that
    splits of small points stay visible. The counting bound (no side of any
    equation above 2, no coordinate above 2) is asserted on the result.
    """
    if cap < 2:
        raise InputError("generator search needs cap >= 2")
    pts = enumerate_points(sys_, cap)
    zero = tuple([0] * sys_.num_vars)
    ptset = set(pts)
    nonzero = [p for p in pts if p != zero]
    nonzero.sort(key=lambda p: (sum(p), p))
    gens = []
    for u in nonzero:
        total = sum(u)
        reducible = False
        for v in nonzero:
            if sum(v) >= total:
                break
            if all(vj <= uj for vj, uj in zip(v, u)):
                rest = tuple(uj - vj for uj, vj in zip(u, v))
                if rest != zero and rest in ptset:
                    reducible = True
                    break
        if not reducible:
            gens.append(u)
    for g in gens:
        require(
            max(g) <= 2,
            f"irreducible solution {g} has a coordinate above 2",
        )
        require(
            max(sys_.fprofile(g), default=0) <= 2,
            f"irreducible solution {g} has an equation side above 2",
        )
    return sorted(gens)


# ---------------------------------------------------------------------------
# multiset utilities over generator index tuples


def _msub(m: tuple[int, ...], s: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    out = list(m)
    for i in s:
        if i in out:
            out.remove(i)
        else:
            return None
    return tuple(out)


def _madd(m: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(m + s))


def _cancel_common(
    a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rest_b = list(b)
    lhs = []
    for i in a:
        if i in rest_b:
            rest_b.remove(i)
        else:
            lhs.append(i)
    return tuple(lhs), tuple(rest_b)


def _orient(
    a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (a, b) if (len(a), a) <= (len(b), b) else (b, a)


def _vector_sum(gens: Sequence[tuple[int, ...]], mset: tuple[int, ...]):
    width = len(gens[0]) if gens else 0
    acc = [0] * width
    for i in mset:
        for j, gj in enumerate(gens[i]):
            acc[j] += gj
    return tuple(acc)


def decompositions(
    gens: Sequence[tuple[int, ...]], v: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All multisets of generator indices with the given sum, sorted."""
    gens = [tuple(g) for g in gens]
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec(rem: tuple[int, ...], start: int) -> None:
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(start, len(gens)):
            g = gens[i]
            if all(rj >= gj for rj, gj in zip(rem, g)):
                acc.append(i)
                rec(tuple(rj - gj for rj, gj in zip(rem, g)), i)
                acc.pop()

    rec(tuple(v), 0)
    return sorted(out)


def congruent(
    gens: Sequence[tuple[int, ...]],
    relations: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
    a: tuple[int, ...],
    b: tuple[int, ...],
) -> bool:
    """Whether the relation moves connect the two generator multisets.

    A move replaces an embedded relation side by the opposite side; the sum
    vector never changes, so the search space is the finite decomposition
    fiber and plain breadth-first search decides the question exactly.
    """
    a = tuple(sorted(a))
    b = tuple(sorted(b))
    if a == b:
        return True
    if _vector_sum(gens, a) != _vector_sum(gens, b):
        return False
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for m in frontier:
            for lhs, rhs in relations:
                for src, dst in ((lhs, rhs), (rhs, lhs)):
                    rest = _msub(m, src)
                    if rest is None:
                        continue
                    m2 = _madd(rest, dst)
                    if m2 == b:
                        return True
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        frontier = nxt
    return False


def _classes(
    decs: list[tuple[int, ...]],
    relations: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
) -> list[list[tuple[int, ...]]]:
    index = {m: i for i, m in enumerate(decs)}
    parent = list(range(len(decs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for m in decs:
        for lhs, rhs in relations:
            for src, dst in ((lhs, rhs), (rhs, lhs)):
                rest = _msub(m, src)
                if rest is None:
                    continue
                m2 = _madd(rest, dst)
                require(m2 in index, "relation move left the decomposition fiber")
                union(index[m], index[m2])
    groups: dict[int, list[tuple[int, ...]]] = {}
    for m in decs:
        groups.setdefault(find(index[m]), []).append(m)
    return sorted(groups.values(), key=lambda g: min(g))


def reachable_sums(
    gens: Sequence[tuple[int, ...]],
    degree_cap: int,
    system: Optional[MatchingSystem] = None,
) -> list[tuple[int, ...]]:
    """Nonzero sums of generator multisets inside the degree bound.

    With a system the bound caps every equation side count of the sum;
    without one it caps the total coordinate sum. Generators supported only
    on zero columns never enter a relation (their multiplicity is pinned by
    the free coordinates of the sum), and with a system they would make the
    capped region infinite, so they are left out of the walk.
    """
    gens = [tuple(g) for g in gens]
    if system is not None:
        gens = [g for g in gens if any(system.fprofile(g))]
    if not gens:
        return []
    width = len(gens[0])
    zero = tuple([0] * width)

    if system is not None:

        def in_domain(v: tuple[int, ...]) -> bool:
            return all(
                system.fvalue(i, v) <= degree_cap for i in range(2 * system.m)
            )

    else:

        def in_domain(v: tuple[int, ...]) -> bool:
            return sum(v) <= degree_cap

    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if w not in seen and in_domain(w):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    seen.discard(zero)
    return sorted(seen, key=lambda v: (sum(v), v))


def toric_relations_bruteforce(
    gens: Sequence[tuple[int, ...]],
    degree_cap: int,
    system: Optional[MatchingSystem] = None,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A minimal list of binomial relations among the generators.

    Sums are processed small to large; whenever a decomposition fiber is
    still disconnected under the relations found so far, the two smallest
    multisets in different classes are joined (common generators cancelled,
    shorter side first). The result generates the congruence of equal sums
    restricted to the bounded region, and no listed relation follows from
    the ones before it.
    """
    gens = [tuple(g) for g in gens]
    relations: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for v in reachable_sums(gens, degree_cap, system):
        decs = decompositions(gens, v)
        if len(decs) < 2:
            continue
        while True:
            classes = _classes(decs, relations)
            if len(classes) == 1:
                break
            a = classes[0][0]
            b = classes[1][0]
            lhs, rhs = _cancel_common(a, b)
            require(bool(lhs) and bool(rhs), "trivial relation reached the fiber join")
            relations.append(_orient(lhs, rhs))
    return relations


def relations_generate_same_congruence(
    gens: Sequence[tuple[int, ...]],
    rels_a: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
    rels_b: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
) -> bool:
    """Mutual implication: each listed relation follows from the other list."""
    for lhs, rhs in rels_a:
        if not congruent(gens, rels_b, lhs, rhs):
            return False
    for lhs, rhs in rels_b:
        if not congruent(gens, rels_a, lhs, rhs):
            return False
    return True


# ---------------------------------------------------------------------------
# semi-invariance equations, summed form


def _partition_vector(
    lam: dict[str, tuple[int, ...]],
    inc_in: Optional[str],
    inc_out: Optional[str],
    beta_x: int,
) -> list[int]:
    out_parts = list(lam[inc_out]) if inc_out is not None else []
    in_parts = list(lam[inc_in]) if inc_in is not None else []
    if len(out_parts) + len(in_parts) > beta_x:
        raise InputError("partition lengths exceed the dimension at a vertex")
    pad = beta_x - len(out_parts) - len(in_parts)
    return out_parts + [0] * pad + [-p for p in reversed(in_parts)]


def _check_partition_map(q: Quiver, lam: dict[str, tuple[int, ...]]) -> None:
    names = set(q.arrow_names())
    if set(lam) != names:
        raise InputError("partition map keys must be exactly the arrow names")
    for a, parts in lam.items():
        parts = tuple(parts)
        if any(int(p) != p for p in parts):
            raise InputError(f"partition for {a} has non-integer parts")
        if any(p < 0 for p in parts):
            raise InputError(f"partition for {a} has negative parts")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InputError(f"partition for {a} is not weakly decreasing")


def verify_si_equations(
    lam: dict[str, tuple[int, ...]],
    q: Quiver,
    c: Coloring,
    beta: dict[str, int],
) -> bool:
    """Summed form of the semi-invariance test, entry plus mirrored entry.

    At a vertex carrying two colors, all sums vec1[i] + vec2[beta-1-i] must
    agree; at a vertex carrying one color, all entries of its vector must
    agree. Independent of the difference form used by the engine.
    """
    _check_partition_map(q, lam)
    missing = [x for x in q.vertices if x not in beta]
    if missing:
        raise InputError(f"vertices without dimension entry: {missing}")
    inc = color_incidence(q, c)
    touching = vertex_colors(q, c)
    for x in q.vertices:
        colors = touching.get(x, [])
        bx = beta[x]
        if not colors or bx == 0:
            continue
        vecs = []
        for s in colors:
            pair = inc[(x, s)]
            vecs.append(_partition_vector(lam, pair.in_arrow, pair.out_arrow, bx))
        if len(vecs) == 1:
            if any(v != vecs[0][0] for v in vecs[0]):
                return False
        elif len(vecs) == 2:
            sums = {vecs[0][i] + vecs[1][bx - 1 - i] for i in range(bx)}
            if len(sums) > 1:
                return False
        else:
            raise InputError(f"vertex {x} carries more than two colors")
    return True


# ---------------------------------------------------------------------------
# random instances


def random_matching_system(
    rng: random.Random, max_m: int = 4, max_l: int = 8
) -> MatchingSystem:
    """Sample a valid system: column occupancies 0..2, no same-equation pair."""
    m = rng.randint(1, max_m)
    l = rng.randint(1, max_l)
    while True:
        rows = [[0] * l for _ in range(2 * m)]
        for j in range(l):
            k = rng.choice((0, 1, 1, 2, 2))
            if k == 2 and m == 1:
                k = 1
            placed: list[int] = []
            attempts = 0
            while len(placed) < k:
                attempts += 1
                if attempts > 50:
                    break
                i = rng.randrange(2 * m)
                if i in placed:
                    continue
                if any(abs(i - p) == m for p in placed):
                    continue
                placed.append(i)
            for i in placed:
                rows[i][j] = 1
        try:
            return system_from_rows(rows)
        except InputError:  # pragma: no cover - construction obeys the axioms
            continue


def random_colored_quiver(
    rng: random.Random, max_vertices: int = 6, max_colors: int = 3
) -> tuple[Quiver, Coloring]:
    """A small acyclic quiver whose arrows are grouped into directed paths.

    Each color class is built as an increasing run through a fixed vertex
    order, which makes the coloring valid by construction. Parallel arrows
    and shared vertices between colors are allowed.
    """
    n = rng.randint(1, max_vertices)
    vertices = [str(i) for i in range(1, n + 1)]
    arrows: list[Arrow] = []
    color_of: dict[str, str] = {}
    ncolors = rng.randint(0, max_colors)
    color = 0
    for _ in range(ncolors):
        if n < 2:
            break
        # strictly increasing vertex run, so the class is automatically a path
        start = rng.randrange(1, n)
        run = [start]
        cur = start
        while cur < n and rng.random() < 0.6:
            cur += rng.randint(1, min(2, n - cur))
            run.append(cur)
        if len(run) < 2:
            run.append(start + 1)
        color += 1
        cid = str(color)
        for a, b in zip(run, run[1:]):
            name = f"a{len(arrows) + 1}"
            arrows.append(Arrow(name, str(a), str(b)))
            color_of[name] = cid
    return Quiver(vertices, arrows), Coloring(color_of)


def verify_presentation(
    sys_: MatchingSystem, pres, config: Optional[OracleConfig] = None
) -> dict:
    """Check an engine presentation against brute force.

    pres needs .generators (objects with .name and .vector), .relations
    (objects with .lhs/.rhs name tuples) and .relation_cap. Generators are
    compared as vector sets; relations must generate the same congruence as
    the brute-force kernel over the row-count domain given by the larger of
    the two caps. Returns the report dict; witnesses list each discrepancy.
    """
    cfg = config or OracleConfig()
    witnesses: list[str] = []

    ogens = minimal_generators_bruteforce(sys_, cap=cfg.coordinate_cap)
    evecs = sorted(g.vector for g in pres.generators)
    generators_match = evecs == ogens
    if not generators_match:
        for v in ogens:
            if v not in evecs:
                witnesses.append(f"oracle generator missing from engine: {v}")
        for v in evecs:
            if v not in ogens:
                witnesses.append(f"engine generator unknown to oracle: {v}")

    relations_match = False
    if generators_match:
        cap = max(cfg.relation_degree_cap, pres.relation_cap)
        orels = toric_relations_bruteforce(ogens, cap, system=sys_)
        idx = {v: i for i, v in enumerate(ogens)}
        byname = {g.name: g.vector for g in pres.generators}
        try:
            erels = [
                (
                    tuple(sorted(idx[byname[n]] for n in r.lhs)),
                    tuple(sorted(idx[byname[n]] for n in r.rhs)),
                )
                for r in pres.relations
            ]
        except KeyError as missing:
            raise InputError(f"relation names unknown generator {missing}")
        relations_match = True
        for lhs, rhs in erels:
            if not congruent(ogens, orels, lhs, rhs):
                relations_match = False
                witnesses.append(
                    "engine relation outside the oracle congruence: "
                    f"{lhs} ~ {rhs}"
                )
        for lhs, rhs in orels:
            if not congruent(ogens, erels, lhs, rhs):
                relations_match = False
                witnesses.append(
                    f"oracle relation not implied by engine: {lhs} ~ {rhs}"
                )
    else:
        witnesses.append("relation comparison skipped: generator sets differ")

    return {
        "system": {
            "m": sys_.m,
            "var_names": list(sys_.var_names),
        },
        "cap": cfg.coordinate_cap,
        "relation_cap": max(cfg.relation_degree_cap, pres.relation_cap),
        "generators_match": generators_match,
        "relations_match": relations_match,
        "witnesses": witnesses,
    }


def maximal_rank_sequences_bruteforce(
    q: Quiver, c: Coloring, beta: dict[str, int]
) -> list[dict[str, int]]:
    """Maximal rank sequences by scanning the joint box over all arrows.

    The admissibility test is rebuilt here from the quiver directly, and the
    enumeration runs over all arrows at once instead of per color, so this
    is a genuinely different route from the per-color product.
    """
    names = sorted(q.arrow_names())
    bounds = {}
    for n in names:
        a = q.arrow(n)
        bounds[n] = min(beta[a.tail], beta[a.head])

    def admissible(r: dict[str, int]) -> bool:
        for v in q.vertices:
            for a_in in q.incoming(v):
                for a_out in q.outgoing(v):
                    if c.color(a_in.name) != c.color(a_out.name):
                        continue
                    if r[a_in.name] + r[a_out.name] > beta[v]:
                        return False
            for a_in in q.incoming(v):
                if r[a_in.name] > beta[v]:
                    return False
            for a_out in q.outgoing(v):
                if r[a_out.name] > beta[v]:
                    return False
        return True

    points = []
    for combo in itertools.product(*(range(bounds[n] + 1) for n in names)):
        r = dict(zip(names, combo))
        if admissible(r):
            points.append(combo)
    maximal = []
    for p in points:
        dominated = any(
            p != other and all(x <= y for x, y in zip(p, other)) for other in points
        )
        if not dominated:
            maximal.append(p)
    maximal.sort()
    return [dict(zip(names, pt)) for pt in maximal]
