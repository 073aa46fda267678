"""From matching semigroup elements back to partition maps and weights.

The graph layer turns a rank component into a matching system whose
solution semigroup the engine presents. This module translates the results
the other way: an element (u, y), a system solution plus one value per
band, unfolds into the partition map that stacks component jump values on
top of u, and mirrored entry sums at each vertex recover the weight, the
degree and the grading by graph components.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError, require
from .matching import Presentation, Relation, is_member, presentation
from .peg import (
    Endpoint,
    MatchingSystemExtract,
    PegComponent,
    PegGraph,
    Root,
    build_peg,
    classify_endpoints,
    components,
    extract_matching_system,
)
from .quivers import Coloring, Incidence, Quiver, color_incidence, vertex_colors
from .ranks import check_beta, is_maximal_rank

PartitionMap = dict[str, tuple[int, ...]]


# ---------------------------------------------------------------------------
# pipeline context

@dataclass
class PegContext:
    """Graph, components and extraction for one (beta, r) pair, with lookups."""

    q: Quiver
    c: Coloring
    beta: dict[str, int]
    r: dict[str, int]
    graph: PegGraph
    comps: list[PegComponent]
    extract: MatchingSystemExtract
    inc: dict[tuple[str, str], Incidence]
    comp_of: dict[Root, int]
    endpoint_of: dict[Root, Endpoint]
    band_slot: dict[int, int]


def peg_context(
    q: Quiver, c: Coloring, beta: dict[str, int], r: dict[str, int]
) -> PegContext:
    graph = build_peg(q, c, beta, r)
    comps = components(graph)
    extract = extract_matching_system(graph, q, c, beta, r)
    comp_of = {}
    band_slot = {}
    for idx, cp in enumerate(comps):
        for rt in cp.roots:
            comp_of[rt] = idx
        if cp.kind == "band":
            band_slot[idx] = len(band_slot)
    endpoint_of = {e.root: e for e in classify_endpoints(graph, q, c, beta, r)}
    require(
        len(band_slot) == len(extract.band_index),
        "band count mismatch between components and extraction",
    )
    return PegContext(
        q,
        c,
        beta,
        r,
        graph,
        comps,
        extract,
        color_incidence(q, c),
        comp_of,
        endpoint_of,
        band_slot,
    )


def _check_uy(
    ctx: PegContext, u: Sequence[int], y: Optional[Sequence[int]]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    sys_ = ctx.extract.system
    u = tuple(u)
    if len(u) != sys_.num_vars:
        raise InputError(
            f"vector length {len(u)} does not match {sys_.num_vars} variables"
        )
    if any(not isinstance(v, int) or v < 0 for v in u):
        raise InputError("u must have nonnegative integer entries")
    if not is_member(sys_, u):
        raise InputError("u does not solve the matching system")
    nb = len(ctx.extract.band_index)
    y = (0,) * nb if y is None else tuple(y)
    if len(y) != nb:
        raise InputError(f"y must have one entry per band, expected {nb}")
    if any(not isinstance(v, int) or v < 0 for v in y):
        raise InputError("y must have nonnegative integer entries")
    return u, y


def _phi_sum(ctx: PegContext, endpoint: Endpoint, u: Sequence[int]) -> int:
    sys_ = ctx.extract.system
    return sum(u[sys_.var_index(a)] for a in endpoint.phi)


def _values_by_component(
    ctx: PegContext, u: Sequence[int], y: Sequence[int]
) -> list[int]:
    vals = []
    for idx, cp in enumerate(ctx.comps):
        if cp.kind == "isolated":
            vals.append(0)
        elif cp.kind == "band":
            vals.append(y[ctx.band_slot[idx]])
        else:
            vals.append(_phi_sum(ctx, ctx.endpoint_of[cp.endpoints[0]], u))
    return vals


def component_values(
    ctx: PegContext, u: Sequence[int], y: Optional[Sequence[int]] = None
) -> tuple[int, ...]:
    """Jump value of the element (u, y) on each component, canonical order.

    Strings read their boundary coefficients off u, bands read y, isolated
    roots always sit at jump zero.
    """
    u, y = _check_uy(ctx, u, y)
    return tuple(_values_by_component(ctx, u, y))


def component_labels(ctx: PegContext) -> list[str]:
    """One label per component, its smallest root in vertex|color|index form."""
    out = []
    for cp in ctx.comps:
        rt = min(cp.roots)
        out.append(f"{rt.vertex}|{rt.color}|{rt.index}")
    return out


# ---------------------------------------------------------------------------
# partition maps

def lambda_from_uy(
    ctx: PegContext, u: Sequence[int], y: Optional[Sequence[int]] = None
) -> PartitionMap:
    """Partition map of the semigroup element (u, y).

    The partition at an arrow has r(a) parts; the bottom part is u(a) and
    moving up from part i+1 to part i adds the jump value of the component
    through the tail-side root of a at height i. u must solve the extracted
    matching system, y gives one value per band and defaults to zero.
    """
    u, y = _check_uy(ctx, u, y)
    vals = _values_by_component(ctx, u, y)
    sys_ = ctx.extract.system
    lam: PartitionMap = {}
    for a in ctx.q.arrow_names():
        ra = ctx.r[a]
        if ra == 0:
            lam[a] = ()
            continue
        arrow = ctx.q.arrow(a)
        s = ctx.c.color(a)
        ua = u[sys_.var_index(a)]
        parts = [ua] * ra
        acc = ua
        for i in range(ra - 1, 0, -1):
            acc += vals[ctx.comp_of[Root(arrow.tail, s, i)]]
            parts[i - 1] = acc
        lam[a] = tuple(parts)
    return lam


def _check_partitions(q: Quiver, lam: PartitionMap) -> None:
    names = set(q.arrow_names())
    if set(lam) != names:
        raise InputError("partition map keys must be exactly the arrow names")
    for a, parts in lam.items():
        if any(not isinstance(p, int) for p in parts):
            raise InputError(f"partition for {a} has non-integer parts")
        if any(p < 0 for p in parts):
            raise InputError(f"partition for {a} has negative parts")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InputError(f"partition for {a} is not weakly decreasing")


def _incidence_vector(
    lam: PartitionMap, pair: Incidence, bx: int, x: str
) -> list[int]:
    out_parts = list(lam[pair.out_arrow]) if pair.out_arrow else []
    in_parts = list(lam[pair.in_arrow]) if pair.in_arrow else []
    if len(out_parts) + len(in_parts) > bx:
        raise InputError(f"partition parts exceed the dimension at vertex {x}")
    pad = bx - len(out_parts) - len(in_parts)
    return out_parts + [0] * pad + [-p for p in reversed(in_parts)]


@dataclass
class MembershipResult:
    ok: bool
    sigma: Optional[dict[str, int]] = None
    witness: Optional[tuple[str, int]] = None


def si_membership(
    lam: PartitionMap, q: Quiver, c: Coloring, beta: dict[str, int]
) -> MembershipResult:
    """Check the vertex equations of a partition map and read off its weight.

    At a two-color vertex, entry i of one incidence vector plus entry
    beta+1-i of the other must not depend on i; at a one-color vertex all
    entries of the single vector must agree. On success sigma maps every
    vertex to the common value (zero where nothing is constrained); on
    failure witness names the first bad (vertex, entry) pair, scanning
    vertices in sorted order and entries upward.
    """
    _check_partitions(q, lam)
    check_beta(q, beta)
    inc = color_incidence(q, c)
    touching = vertex_colors(q, c)
    sigma: dict[str, int] = {}
    for x in sorted(q.vertices):
        colors = touching.get(x, [])
        bx = beta[x]
        if not colors or bx == 0:
            sigma[x] = 0
            continue
        vecs = [_incidence_vector(lam, inc[(x, s)], bx, x) for s in colors]
        if len(vecs) == 1:
            v = vecs[0]
            sig = v[0]
            for i in range(1, bx):
                if v[i] != sig:
                    return MembershipResult(False, witness=(x, i + 1))
        elif len(vecs) == 2:
            v1, v2 = vecs
            sig = v1[0] + v2[bx - 1]
            for i in range(1, bx):
                if v1[i] + v2[bx - 1 - i] != sig:
                    return MembershipResult(False, witness=(x, i + 1))
        else:
            raise InputError(f"vertex {x} carries more than two colors")
        sigma[x] = sig
    return MembershipResult(True, sigma=sigma)


def root_jumps(ctx: PegContext, lam: PartitionMap) -> dict[Root, int]:
    """Difference between consecutive incidence vector entries at each root.

    For maps built by lambda_from_uy the jump is constant along every graph
    component.
    """
    _check_partitions(ctx.q, lam)
    out = {}
    cache: dict[tuple[str, str], list[int]] = {}
    for rt in ctx.graph.roots:
        key = (rt.vertex, rt.color)
        if key not in cache:
            cache[key] = _incidence_vector(
                lam, ctx.inc[key], ctx.beta[rt.vertex], rt.vertex
            )
        v = cache[key]
        out[rt] = v[rt.index - 1] - v[rt.index]
    return out


def roundtrip_uy(
    ctx: PegContext, lam: PartitionMap
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover (u, y) from a partition map: bottom parts and band jumps.

    Partitions must have exactly r(a) parts. The jump values along each band
    must agree; disagreement means lam did not come from a semigroup element
    and raises InvariantError.
    """
    _check_partitions(ctx.q, lam)
    for a in ctx.q.arrow_names():
        if len(lam[a]) != ctx.r[a]:
            raise InputError(f"partition for {a} must have exactly {ctx.r[a]} parts")
    u = tuple(lam[a][-1] for a in ctx.extract.system.var_names)
    jumps = root_jumps(ctx, lam)
    ys = []
    for slot, band in enumerate(ctx.extract.band_index):
        vals = {jumps[rt] for rt in band.roots}
        require(
            len(vals) == 1,
            f"jump values along band {slot + 1} disagree: {sorted(vals)}",
        )
        ys.append(vals.pop())
    return u, tuple(ys)


# ---------------------------------------------------------------------------
# degrees and bounds

def generator_degree(lam: PartitionMap) -> int:
    """Total size of all partitions in the map."""
    return sum(sum(parts) for parts in lam.values())


def degree_bounds(q: Quiver, r: dict[str, int]) -> tuple[int, int]:
    """Degree ceilings for generators and relations of the invariant ring.

    Both are multiples of the sum over arrows of the triangular number
    C(r(a)+1, 2): generators appear in degree at most twice that sum and
    relations in degree at most eight times it.
    """
    total = 0
    for a in q.arrow_names():
        if a not in r:
            raise InputError(f"rank sequence missing arrow {a}")
        if not isinstance(r[a], int) or r[a] < 0:
            raise InputError(f"rank at {a} must be a nonnegative integer")
        total += math.comb(r[a] + 1, 2)
    return 2 * total, 8 * total


# ---------------------------------------------------------------------------
# the translated presentation

@dataclass
class SiGenerator:
    """One ring generator with its partition map, weight, degree and grade."""

    name: str
    kind: str
    u: tuple[int, ...]
    y: tuple[int, ...]
    partitions: PartitionMap
    degree: int
    sigma: dict[str, int]
    grade: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "u": list(self.u),
            "y": list(self.y),
            "partitions": {a: list(p) for a, p in sorted(self.partitions.items())},
            "degree": self.degree,
            "sigma": dict(sorted(self.sigma.items())),
            "grade": list(self.grade),
        }


def multigrading(ctx: PegContext, gens: Sequence) -> dict[str, tuple[int, ...]]:
    """Component value vector for each named generator.

    Accepts translated SiGenerator records or raw engine generators, which
    carry no band part.
    """
    out = {}
    for g in gens:
        if hasattr(g, "u"):
            out[g.name] = component_values(ctx, g.u, g.y)
        else:
            out[g.name] = component_values(ctx, g.vector)
    return out


@dataclass
class SiPresentation:
    """Finite presentation data for the invariant ring of one rank component."""

    context: PegContext
    matching: Presentation
    band_vars: tuple[str, ...]
    generators: list[SiGenerator]
    degree_bound_gens: int
    degree_bound_rels: int
    grading: dict[str, tuple[int, ...]]
    rank_maximal: bool

    @property
    def component_label(self) -> dict[str, int]:
        return dict(self.context.r)

    def generator(self, name: str) -> SiGenerator:
        for g in self.generators:
            if g.name == name:
                return g
        raise InputError(f"unknown generator {name!r}")

    def relation_degree(self, rel: Relation) -> int:
        return sum(self.generator(n).degree for n in rel.lhs)

    def as_dict(self) -> dict:
        sys_ = self.matching.system
        return {
            "component": dict(sorted(self.component_label.items())),
            "dimensions": dict(sorted(self.context.beta.items())),
            "variables": list(sys_.var_names),
            "band_vars": list(self.band_vars),
            "free_arrows": list(self.context.extract.free_arrows),
            "forced_zero": [
                sys_.var_names[j] for j in self.matching.graph.forced_zero
            ],
            "generators": [g.as_dict() for g in self.generators],
            "relations": [rel.as_dict() for rel in self.matching.relations],
            "relation_cap": self.matching.relation_cap,
            "degree_bounds": {
                "generators": self.degree_bound_gens,
                "relations": self.degree_bound_rels,
            },
            "grading_components": component_labels(self.context),
            "rank_maximal": self.rank_maximal,
        }


def _translate(
    ctx: PegContext,
    name: str,
    kind: str,
    u: tuple[int, ...],
    y: tuple[int, ...],
    gen_bound: int,
) -> SiGenerator:
    lam = lambda_from_uy(ctx, u, y)
    deg = generator_degree(lam)
    mem = si_membership(lam, ctx.q, ctx.c, ctx.beta)
    require(
        mem.ok, f"generator {name} fails the weight equations at {mem.witness}"
    )
    require(
        deg <= gen_bound,
        f"generator {name} has degree {deg} above the bound {gen_bound}",
    )
    grade = tuple(_values_by_component(ctx, u, y))
    return SiGenerator(name, kind, u, y, lam, deg, mem.sigma, grade)


def si_presentation(
    q: Quiver, c: Coloring, beta: dict[str, int], r: dict[str, int]
) -> SiPresentation:
    """Generators, relations, degrees and weights for one rank component.

    Builds the graph for (beta, r), presents the solution semigroup of the
    extracted matching system, adjoins one free variable per band and
    translates every generator back into partition language. Warns when r
    is not maximal; the result then describes a smaller stratum rather than
    an irreducible component.
    """
    ctx = peg_context(q, c, beta, r)
    maximal = is_maximal_rank(q, c, beta, r)
    if not maximal:
        warnings.warn(
            "rank sequence is not maximal for this dimension vector",
            stacklevel=2,
        )
    pres = presentation(ctx.extract.system)
    gen_bound, rel_bound = degree_bounds(q, r)
    nb = len(ctx.extract.band_index)
    band_vars = tuple(f"y{k + 1}" for k in range(nb))
    zero_y = (0,) * nb
    zero_u = (0,) * ctx.extract.system.num_vars

    records = []
    for g in pres.generators:
        records.append(_translate(ctx, g.name, g.kind, g.vector, zero_y, gen_bound))
    for k, name in enumerate(band_vars):
        y = tuple(1 if i == k else 0 for i in range(nb))
        records.append(_translate(ctx, name, "band_var", zero_u, y, gen_bound))

    by_name = {rec.name: rec.degree for rec in records}
    for rel in pres.relations:
        dl = sum(by_name[n] for n in rel.lhs)
        dr = sum(by_name[n] for n in rel.rhs)
        require(
            dl == dr,
            f"relation {rel.lhs} = {rel.rhs} has mismatched degrees {dl} and {dr}",
        )

    grading = {rec.name: rec.grade for rec in records}
    return SiPresentation(
        ctx,
        pres,
        band_vars,
        records,
        gen_bound,
        rel_bound,
        grading,
        maximal,
    )
