"""Tests for the translation from semigroup elements to partitions and weights."""

import json
import random

import pytest

from fixtures import (
    RUNNING_GENERATORS,
    determinant_example,
    path_example,
    running_example,
)

from gentle_si import oracle
from gentle_si.errors import InputError, InvariantError
from gentle_si.si import (
    component_labels,
    component_values,
    degree_bounds,
    generator_degree,
    lambda_from_uy,
    multigrading,
    peg_context,
    roundtrip_uy,
    root_jumps,
    si_membership,
    si_presentation,
)


def running_context():
    q, c, beta, r = running_example()
    return peg_context(q, c, beta, r), q, c, beta, r


def add_maps(lam1, lam2):
    return {
        a: tuple(x + y for x, y in zip(lam1[a], lam2[a])) for a in lam1
    }


def running_element(rng, ctx):
    """A random semigroup element over the running example."""
    u = [0] * 7
    for vec in RUNNING_GENERATORS:
        k = rng.randint(0, 3)
        u = [a + k * b for a, b in zip(u, vec)]
    y = (rng.randint(0, 3),)
    return tuple(u), y


# ---------------------------------------------------------------------------
# the determinant example

def test_determinant_presentation_frozen():
    pres = si_presentation(*determinant_example())
    assert pres.rank_maximal
    assert pres.band_vars == ()
    assert pres.matching.relations == []
    assert [g.name for g in pres.generators] == ["g1"]
    g = pres.generator("g1")
    assert g.kind == "free"
    assert g.u == (1,)
    assert g.y == ()
    assert g.partitions == {"a": (1, 1)}
    assert g.degree == 2
    assert g.sigma == {"1": 1, "2": -1}
    assert g.grade == (0,)
    assert pres.grading == {"g1": (0,)}
    assert (pres.degree_bound_gens, pres.degree_bound_rels) == (6, 24)
    assert component_labels(pres.context) == ["1|s|1"]


def test_determinant_membership_failure_witness():
    q, c, beta, r = determinant_example()
    res = si_membership({"a": (2, 1)}, q, c, beta)
    assert not res.ok
    assert res.sigma is None
    assert res.witness == ("1", 2)
    assert not oracle.verify_si_equations({"a": (2, 1)}, q, c, beta)


def test_membership_validates_partitions():
    q, c, beta, r = determinant_example()
    with pytest.raises(InputError):
        si_membership({"b": (1, 1)}, q, c, beta)
    with pytest.raises(InputError):
        si_membership({"a": (1, 2)}, q, c, beta)
    with pytest.raises(InputError):
        si_membership({"a": (1, -1)}, q, c, beta)
    with pytest.raises(InputError):
        si_membership({"a": (1, 1, 1)}, q, c, beta)


# ---------------------------------------------------------------------------
# the running example

def test_running_band_unit_generator_frozen():
    pres = si_presentation(*running_example())
    assert pres.rank_maximal
    assert pres.band_vars == ("y1",)
    g = pres.generator("y1")
    assert g.kind == "band_var"
    assert g.u == (0,) * 7
    assert g.y == (1,)
    assert g.partitions == {a: (1, 0) for a in g.partitions}
    assert g.degree == 7
    assert g.sigma == {"1": 1, "2": 0, "3": 0, "4": 0, "5": -1}
    assert g.grade == (1, 0, 0, 0, 0)


def test_running_walk_generators_frozen():
    pres = si_presentation(*running_example())
    walk_gens = [g for g in pres.generators if g.name != "y1"]
    assert [g.u for g in walk_gens] == RUNNING_GENERATORS
    assert [g.degree for g in walk_gens] == [4, 4, 4, 6, 6]
    for g in walk_gens:
        assert g.partitions == {
            a: (g.u[i], g.u[i])
            for i, a in enumerate(pres.matching.system.var_names)
        }
    g1 = pres.generator("g1")
    assert g1.sigma == {"1": 0, "2": 0, "3": 0, "4": 1, "5": -2}
    assert g1.grade == (0, 0, 0, 0, 1)
    assert pres.generator("g3").grade == (0, 1, 0, 0, 0)
    assert pres.generator("g4").grade == (0, 0, 0, 1, 1)


def test_running_relation_degrees_within_bound():
    pres = si_presentation(*running_example())
    assert (pres.degree_bound_gens, pres.degree_bound_rels) == (42, 168)
    sides = {
        (frozenset(rel.lhs), frozenset(rel.rhs))
        for rel in pres.matching.relations
    }
    assert (
        sides == {(frozenset({"g1", "g5"}), frozenset({"g2", "g4"}))}
        or sides == {(frozenset({"g2", "g4"}), frozenset({"g1", "g5"}))}
    )
    for rel in pres.matching.relations:
        assert pres.relation_degree(rel) <= pres.degree_bound_rels


def test_running_generators_satisfy_oracle_equations():
    q, c, beta, r = running_example()
    pres = si_presentation(q, c, beta, r)
    for g in pres.generators:
        assert oracle.verify_si_equations(g.partitions, q, c, beta)


def test_running_component_labels():
    ctx, q, c, beta, r = running_context()
    assert component_labels(ctx) == [
        "1|a|1",
        "2|a|2",
        "2|a|3",
        "2|a|4",
        "4|b|2",
    ]


def test_multigrading_matches_presentation():
    pres = si_presentation(*running_example())
    assert multigrading(pres.context, pres.generators) == pres.grading
    raw = multigrading(pres.context, pres.matching.generators)
    for g in pres.matching.generators:
        assert raw[g.name] == pres.grading[g.name]


# ---------------------------------------------------------------------------
# the element map and its inverse

def test_lambda_rejects_bad_input():
    ctx, q, c, beta, r = running_context()
    with pytest.raises(InputError):
        lambda_from_uy(ctx, (1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(InputError):
        lambda_from_uy(ctx, (1, 0, 0))
    with pytest.raises(InputError):
        lambda_from_uy(ctx, (-1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(InputError):
        lambda_from_uy(ctx, (0,) * 7, (1, 2))


def test_roundtrip_identity_random():
    ctx, q, c, beta, r = running_context()
    rng = random.Random(7)
    for _ in range(100):
        u, y = running_element(rng, ctx)
        lam = lambda_from_uy(ctx, u, y)
        assert si_membership(lam, q, c, beta).ok
        assert roundtrip_uy(ctx, lam) == (u, y)


def test_jumps_constant_per_component():
    ctx, q, c, beta, r = running_context()
    rng = random.Random(11)
    for _ in range(25):
        u, y = running_element(rng, ctx)
        lam = lambda_from_uy(ctx, u, y)
        jumps = root_jumps(ctx, lam)
        vals = component_values(ctx, u, y)
        for idx, cp in enumerate(ctx.comps):
            assert {jumps[rt] for rt in cp.roots} == {vals[idx]}


def test_lambda_and_weight_are_additive():
    ctx, q, c, beta, r = running_context()
    rng = random.Random(13)
    for _ in range(25):
        u1, y1 = running_element(rng, ctx)
        u2, y2 = running_element(rng, ctx)
        lam1 = lambda_from_uy(ctx, u1, y1)
        lam2 = lambda_from_uy(ctx, u2, y2)
        u12 = tuple(a + b for a, b in zip(u1, u2))
        y12 = tuple(a + b for a, b in zip(y1, y2))
        lam12 = lambda_from_uy(ctx, u12, y12)
        assert lam12 == add_maps(lam1, lam2)
        s1 = si_membership(lam1, q, c, beta).sigma
        s2 = si_membership(lam2, q, c, beta).sigma
        s12 = si_membership(lam12, q, c, beta).sigma
        assert s12 == {x: s1[x] + s2[x] for x in s1}
        assert generator_degree(lam12) == generator_degree(lam1) + generator_degree(lam2)


def test_membership_agrees_with_oracle_on_random_maps():
    q, c, beta, r = running_example()
    rng = random.Random(17)
    for _ in range(200):
        lam = {
            a: tuple(
                sorted((rng.randint(0, 3), rng.randint(0, 3)), reverse=True)
            )
            for a in q.arrow_names()
        }
        res = si_membership(lam, q, c, beta)
        assert res.ok == oracle.verify_si_equations(lam, q, c, beta)


def test_band_jump_disagreement_raises():
    ctx, q, c, beta, r = running_context()
    lam = {a: (0, 0) for a in q.arrow_names()}
    lam["a1"] = (1, 0)
    with pytest.raises(InvariantError):
        roundtrip_uy(ctx, lam)


def test_roundtrip_requires_full_partitions():
    ctx, q, c, beta, r = running_context()
    lam = {a: (0, 0) for a in q.arrow_names()}
    lam["a1"] = (0,)
    with pytest.raises(InputError):
        roundtrip_uy(ctx, lam)


# ---------------------------------------------------------------------------
# degrees, bounds and degenerate ranks

def test_degree_bounds_frozen():
    q, c, beta, r = running_example()
    assert degree_bounds(q, r) == (42, 168)
    assert degree_bounds(q, {a: 1 for a in r}) == (14, 56)
    assert degree_bounds(q, {a: 0 for a in r}) == (0, 0)
    with pytest.raises(InputError):
        degree_bounds(q, {"a1": 2})


def test_rank_zero_arrow_presentation():
    q, c, beta = path_example()
    pres = si_presentation(q, c, beta, {"a1": 1, "a2": 0})
    assert pres.rank_maximal
    assert [g.name for g in pres.generators] == ["g1"]
    g = pres.generator("g1")
    assert g.partitions == {"a1": (1,), "a2": ()}
    assert g.degree == 1
    assert g.sigma == {"1": 1, "2": -1, "3": 0}
    assert (pres.degree_bound_gens, pres.degree_bound_rels) == (2, 8)
    assert pres.as_dict()["grading_components"] == []


def test_non_maximal_rank_warns():
    q, c, beta, r = running_example()
    smaller = dict(r, b2=1)
    with pytest.warns(UserWarning):
        pres = si_presentation(q, c, beta, smaller)
    assert not pres.rank_maximal
    for g in pres.generators:
        assert oracle.verify_si_equations(g.partitions, q, c, beta)


def test_presentation_as_dict_is_json_ready():
    pres = si_presentation(*running_example())
    data = pres.as_dict()
    assert set(data) == {
        "component",
        "dimensions",
        "variables",
        "band_vars",
        "free_arrows",
        "forced_zero",
        "generators",
        "relations",
        "relation_cap",
        "degree_bounds",
        "grading_components",
        "rank_maximal",
    }
    text = json.dumps(data, sort_keys=True)
    assert json.loads(text)["component"] == {a: 2 for a in data["variables"]}
    for entry in data["generators"]:
        assert set(entry) == {
            "name",
            "kind",
            "u",
            "y",
            "partitions",
            "degree",
            "sigma",
            "grade",
        }
        assert len(entry["grade"]) == len(data["grading_components"])
