"""Command line interface: parse model files, drive the pipeline, emit reports.

Two input formats, not mixable in one file. A quiver model lists vertices,
arrows with optional colors, length-two relations (rel b a means the path
b after a vanishes), dimensions and ranks:

    vertex 1
    arrow a1 1 2 color a
    rel a2 a1
    beta 1 2
    rank a1 2

An abstract matching system lists equations over named variables, with
optional var lines fixing the variable order:

    var x1
    eq 1: x1 x2 = x4 x5

Reports print to stdout as readable text, as JSON with --json, or as DOT
for the peg command with --dot. Exit codes: 0 ok, 1 bad input, 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InputError, InvariantError, ValidationReport, require
from .matching import (
    MatchingSystem,
    build_graph,
    generators as walk_generators,
    presentation,
    validate_system,
)
from .oracle import OracleConfig, verify_presentation
from .peg import export_dot
from .quivers import (
    Arrow,
    Coloring,
    Quiver,
    RelationSet,
    color_classes,
    coloring_from_gentle,
    gentle_cover,
    is_gentle,
    is_string_algebra,
    monochromatic_ideal,
    validate_coloring,
    validate_relations,
)
from .ranks import maximal_rank_sequences
from .si import PegContext, degree_bounds, peg_context, si_presentation

COMMANDS = (
    "validate",
    "color",
    "cover",
    "components",
    "peg",
    "generators",
    "relations",
    "presentation",
    "degrees",
    "verify",
)

_QUIVER_DIRECTIVES = {"vertex", "arrow", "rel", "beta", "rank"}
_SYSTEM_DIRECTIVES = {"eq", "var"}


@dataclass
class CliConfig:
    json: bool = False
    dot: bool = False
    cap: int = 3
    seed: int = 0


@dataclass
class ModelFile:
    """Parsed input: either a quiver with its data or an abstract system."""

    kind: str  # "quiver" or "system"
    q: Optional[Quiver] = None
    coloring: Optional[Coloring] = None
    relations: Optional[RelationSet] = None
    beta: dict[str, int] = field(default_factory=dict)
    rank: Optional[dict[str, int]] = None
    system: Optional[MatchingSystem] = None


# ---------------------------------------------------------------------------
# model parsing

_EQ_RE = re.compile(r"^eq\s+(\d+)\s*:\s*(.*)$")


def _fail(lineno: int, msg: str) -> None:
    raise InputError(f"line {lineno}: {msg}")


def _nonneg(tok: str, lineno: int, what: str) -> int:
    try:
        n = int(tok)
    except ValueError:
        n = -1
    if n < 0:
        _fail(lineno, f"{what} must be a nonnegative integer, got {tok!r}")
    return n


def parse_model(text: str) -> ModelFile:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    arrow_lines: dict[str, int] = {}
    colors: dict[str, str] = {}
    rel_pairs: list[tuple[str, str]] = []
    rel_lines: dict[tuple[str, str], int] = {}
    beta: dict[str, int] = {}
    beta_lines: dict[str, int] = {}
    rank: dict[str, int] = {}
    rank_lines: dict[str, int] = {}
    eqs: dict[int, tuple[tuple[str, ...], tuple[str, ...]]] = {}
    var_decls: list[str] = []
    kinds_seen: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head in _QUIVER_DIRECTIVES:
            kinds_seen.add("quiver")
        elif head in _SYSTEM_DIRECTIVES:
            kinds_seen.add("system")
        else:
            _fail(lineno, f"unknown directive {head!r}")
        if head == "vertex":
            if len(toks) != 2:
                _fail(lineno, "expected: vertex <id>")
            if toks[1] in vertices:
                _fail(lineno, f"duplicate vertex {toks[1]}")
            vertices.append(toks[1])
        elif head == "arrow":
            if len(toks) == 4:
                name, tail, head_v = toks[1:4]
                color = None
            elif len(toks) == 6 and toks[4] == "color":
                name, tail, head_v = toks[1:4]
                color = toks[5]
            else:
                _fail(lineno, "expected: arrow <id> <tail> <head> [color <id>]")
            if name in arrow_lines:
                _fail(lineno, f"duplicate arrow {name}")
            arrow_lines[name] = lineno
            arrows.append(Arrow(name, tail, head_v))
            if color is not None:
                colors[name] = color
        elif head == "rel":
            if len(toks) != 3:
                _fail(lineno, "expected: rel <later> <earlier>")
            pair = (toks[1], toks[2])
            if pair in rel_lines:
                _fail(lineno, f"duplicate relation {toks[1]} {toks[2]}")
            rel_lines[pair] = lineno
            rel_pairs.append(pair)
        elif head == "beta":
            if len(toks) != 3:
                _fail(lineno, "expected: beta <vertex> <n>")
            if toks[1] in beta:
                _fail(lineno, f"duplicate beta for vertex {toks[1]}")
            beta[toks[1]] = _nonneg(toks[2], lineno, "dimension")
            beta_lines[toks[1]] = lineno
        elif head == "rank":
            if len(toks) != 3:
                _fail(lineno, "expected: rank <arrow> <n>")
            if toks[1] in rank:
                _fail(lineno, f"duplicate rank for arrow {toks[1]}")
            rank[toks[1]] = _nonneg(toks[2], lineno, "rank")
            rank_lines[toks[1]] = lineno
        elif head == "var":
            if len(toks) != 2:
                _fail(lineno, "expected: var <name>")
            if toks[1] in var_decls:
                _fail(lineno, f"duplicate variable {toks[1]}")
            var_decls.append(toks[1])
        elif head == "eq":
            m = _EQ_RE.match(line)
            if not m:
                _fail(lineno, "expected: eq <n>: <lhs> = <rhs>")
            j = int(m.group(1))
            if j in eqs:
                _fail(lineno, f"duplicate equation {j}")
            rest = m.group(2).split()
            if rest.count("=") != 1:
                _fail(lineno, "equation needs exactly one =")
            cut = rest.index("=")
            lhs, rhs = tuple(rest[:cut]), tuple(rest[cut + 1 :])
            for side in (lhs, rhs):
                if len(set(side)) != len(side):
                    _fail(lineno, "variable repeated within one equation side")
            eqs[j] = (lhs, rhs)

    if kinds_seen == {"quiver", "system"}:
        raise InputError("model mixes quiver and system directives")
    if "system" in kinds_seen:
        return ModelFile(kind="system", system=_assemble_system(eqs, var_decls))
    if not vertices:
        raise InputError("no vertices")

    for a in arrows:
        for v in (a.tail, a.head):
            if v not in vertices:
                _fail(arrow_lines[a.name], f"unknown vertex {v}")
    if colors and len(colors) != len(arrow_lines):
        missing = sorted(set(arrow_lines) - set(colors))
        raise InputError(f"arrows without color: {', '.join(missing)}")
    for pair in rel_pairs:
        for nm in pair:
            if nm not in arrow_lines:
                _fail(rel_lines[pair], f"unknown arrow {nm}")
    for v in beta:
        if v not in vertices:
            _fail(beta_lines[v], f"unknown vertex {v}")
    for a in rank:
        if a not in arrow_lines:
            _fail(rank_lines[a], f"unknown arrow {a}")
    if rank and set(rank) != set(arrow_lines):
        missing = sorted(set(arrow_lines) - set(rank))
        raise InputError(f"rank missing for arrows: {', '.join(missing)}")

    q = Quiver(vertices, arrows)
    coloring = Coloring(colors) if colors else None
    if rel_pairs or coloring is None:
        relations: Optional[RelationSet] = RelationSet(rel_pairs)
    else:
        relations = None
    return ModelFile(
        kind="quiver",
        q=q,
        coloring=coloring,
        relations=relations,
        beta=beta,
        rank=rank if rank else None,
    )


def _assemble_system(
    eqs: dict[int, tuple[tuple[str, ...], tuple[str, ...]]],
    var_decls: list[str],
) -> MatchingSystem:
    m = len(eqs)
    if set(eqs) != set(range(1, m + 1)):
        raise InputError("equation indices must be 1..m without gaps")
    order = list(var_decls)
    known = set(order)
    for j in range(1, m + 1):
        for side in eqs[j]:
            for n in side:
                if n not in known:
                    known.add(n)
                    order.append(n)
    idx = {n: j for j, n in enumerate(order)}
    rows = []
    for offset in (0, 1):
        for j in range(1, m + 1):
            row = [0] * len(order)
            for n in eqs[j][offset]:
                row[idx[n]] = 1
            rows.append(tuple(row))
    return MatchingSystem(m=m, var_names=tuple(order), rows=tuple(rows))


# ---------------------------------------------------------------------------
# pipeline plumbing

def _first_violation(rep: ValidationReport) -> str:
    tag, desc = rep.violations[0]
    return f"[{tag}] {desc}"


def _model_quiver(model: ModelFile) -> Quiver:
    if model.kind != "quiver":
        raise InputError("this command needs a quiver model")
    return model.q


def _pipeline_coloring(model: ModelFile) -> Coloring:
    q = _model_quiver(model)
    if model.coloring is not None:
        rep = validate_coloring(q, model.coloring)
        if not rep.ok:
            raise InputError(f"invalid coloring: {_first_violation(rep)}")
        ideal = monochromatic_ideal(q, model.coloring)
        grep = is_gentle(q, ideal)
        if not grep.ok:
            raise InputError(
                "the colored quotient is not gentle:"
                f" {_first_violation(grep)}; try the cover command"
            )
        if model.relations is not None and model.relations != ideal:
            raise InputError(
                "declared relations do not match the coloring's ideal"
            )
        return model.coloring
    return coloring_from_gentle(q, model.relations)


def _resolve_rank(
    model: ModelFile, c: Coloring
) -> tuple[dict[str, int], bool]:
    if model.rank is not None:
        return dict(model.rank), False
    seqs = maximal_rank_sequences(model.q, c, model.beta)
    require(bool(seqs), "no maximal rank sequences")
    return seqs[0], True


@dataclass
class _Pipeline:
    c: Coloring
    r: dict[str, int]
    rank_derived: bool
    ctx: PegContext


def _quiver_pipeline(model: ModelFile) -> _Pipeline:
    q = _model_quiver(model)
    c = _pipeline_coloring(model)
    r, derived = _resolve_rank(model, c)
    ctx = peg_context(q, c, model.beta, r)
    return _Pipeline(c=c, r=r, rank_derived=derived, ctx=ctx)


def _model_system(model: ModelFile) -> tuple[MatchingSystem, Optional[_Pipeline]]:
    if model.kind == "system":
        rep = validate_system(model.system)
        if not rep.ok:
            raise InputError(f"not a matching system: {_first_violation(rep)}")
        return model.system, None
    pl = _quiver_pipeline(model)
    return pl.ctx.extract.system, pl


def _pairs(rels) -> list[list[str]]:
    return [[b, a] for b, a in sorted(rels)]


def _root_key(rt) -> list:
    return list(rt.key())


# ---------------------------------------------------------------------------
# commands

def _cmd_validate(model: ModelFile, cfg: CliConfig) -> dict:
    if model.kind == "system":
        rep = validate_system(model.system)
        return {
            "command": "validate",
            "ok": rep.ok,
            "reports": {"system": rep.as_dict()},
        }
    q = model.q
    reports = {}
    consistent = None
    if model.coloring is not None:
        crep = validate_coloring(q, model.coloring)
        reports["coloring"] = crep.as_dict()
        if crep.ok:
            ideal = monochromatic_ideal(q, model.coloring)
            reports["gentle"] = is_gentle(q, ideal).as_dict()
            if model.relations is not None:
                consistent = model.relations == ideal
    if model.relations is not None:
        rrep = validate_relations(q, model.relations)
        reports["relations"] = rrep.as_dict()
        if rrep.ok:
            reports["string_algebra"] = is_string_algebra(
                q, model.relations
            ).as_dict()
            if model.coloring is None:
                reports["gentle"] = is_gentle(q, model.relations).as_dict()
    ok = all(rep["ok"] for rep in reports.values())
    out = {"command": "validate", "ok": ok and consistent is not False, "reports": reports}
    if consistent is not None:
        out["relations_match_coloring"] = consistent
    return out


def _cmd_color(model: ModelFile, cfg: CliConfig) -> dict:
    q = _model_quiver(model)
    if model.coloring is not None:
        rep = validate_coloring(q, model.coloring)
        if not rep.ok:
            raise InputError(f"invalid coloring: {_first_violation(rep)}")
        c, derived = model.coloring, False
    else:
        c, derived = coloring_from_gentle(q, model.relations), True
    return {
        "command": "color",
        "derived": derived,
        "coloring": {a: c.color(a) for a in q.arrow_names()},
        "classes": color_classes(q, c),
        "ideal": _pairs(monochromatic_ideal(q, c)),
    }


def _cmd_cover(model: ModelFile, cfg: CliConfig) -> dict:
    q = _model_quiver(model)
    if model.relations is not None:
        rels = model.relations
    else:
        rels = monochromatic_ideal(q, model.coloring)
    res = gentle_cover(q, rels)
    return {
        "command": "cover",
        "coloring": {a: res.coloring.color(a) for a in q.arrow_names()},
        "classes": color_classes(q, res.coloring),
        "kernel": _pairs(res.kernel),
        "kept": _pairs(monochromatic_ideal(q, res.coloring)),
        "flags": list(res.flags),
    }


def _cmd_components(model: ModelFile, cfg: CliConfig) -> dict:
    q = _model_quiver(model)
    c = _pipeline_coloring(model)
    return {
        "command": "components",
        "dimensions": dict(model.beta),
        "maximal_ranks": maximal_rank_sequences(q, c, model.beta),
    }


def _cmd_peg(model: ModelFile, cfg: CliConfig) -> dict:
    pl = _quiver_pipeline(model)
    graph = pl.ctx.graph
    comps = []
    for cp in pl.ctx.comps:
        if cp.kind == "string":
            ep_roots = cp.endpoints
        elif cp.kind == "isolated":
            ep_roots = cp.roots
        else:
            ep_roots = ()
        comps.append(
            {
                "kind": cp.kind,
                "roots": [_root_key(rt) for rt in cp.roots],
                "endpoints": [
                    {
                        "root": _root_key(rt),
                        "cls": pl.ctx.endpoint_of[rt].cls,
                        "phi": list(pl.ctx.endpoint_of[rt].phi),
                    }
                    for rt in ep_roots
                ],
            }
        )
    return {
        "command": "peg",
        "rank": pl.r,
        "rank_derived": pl.rank_derived,
        "roots": [_root_key(rt) for rt in graph.roots],
        "vertex_edges": [
            [_root_key(u), _root_key(w)] for u, w in graph.vertex_edges
        ],
        "colored_edges": [
            [_root_key(u), _root_key(w), a] for u, w, a in graph.colored_edges
        ],
        "components": comps,
    }


def _with_rank(payload: dict, pl: Optional[_Pipeline]) -> dict:
    if pl is not None:
        payload["rank"] = pl.r
        payload["rank_derived"] = pl.rank_derived
    return payload


def _cmd_generators(model: ModelFile, cfg: CliConfig) -> dict:
    sys_, pl = _model_system(model)
    graph = build_graph(sys_)
    gens = walk_generators(graph)
    payload = {
        "command": "generators",
        "variables": list(sys_.var_names),
        "free_variables": [sys_.var_names[j] for j in graph.free_vars],
        "forced_zero": [sys_.var_names[j] for j in graph.forced_zero],
        "generators": [g.as_dict() for g in gens],
    }
    return _with_rank(payload, pl)


def _cmd_relations(model: ModelFile, cfg: CliConfig) -> dict:
    sys_, pl = _model_system(model)
    pres = presentation(sys_)
    payload = {
        "command": "relations",
        "generators": [g.as_dict() for g in pres.generators],
        "relations": [rel.as_dict() for rel in pres.relations],
        "relation_cap": pres.relation_cap,
    }
    return _with_rank(payload, pl)


def _cmd_presentation(model: ModelFile, cfg: CliConfig) -> dict:
    if model.kind == "system":
        sys_, _ = _model_system(model)
        pres = presentation(sys_)
        payload = {"command": "presentation", "variables": list(sys_.var_names)}
        payload.update(pres.as_dict())
        return payload
    pl = _quiver_pipeline(model)
    pres = si_presentation(model.q, pl.c, model.beta, pl.r)
    payload = {"command": "presentation", "rank_derived": pl.rank_derived}
    payload.update(pres.as_dict())
    return payload


def _cmd_degrees(model: ModelFile, cfg: CliConfig) -> dict:
    q = _model_quiver(model)
    if model.rank is not None:
        r, derived = dict(model.rank), False
    else:
        c = _pipeline_coloring(model)
        r, derived = _resolve_rank(model, c)
    gen_bound, rel_bound = degree_bounds(q, r)
    return {
        "command": "degrees",
        "rank": r,
        "rank_derived": derived,
        "degree_bounds": {"generators": gen_bound, "relations": rel_bound},
    }


def _cmd_verify(model: ModelFile, cfg: CliConfig) -> dict:
    sys_, pl = _model_system(model)
    pres = presentation(sys_)
    report = verify_presentation(
        sys_, pres, OracleConfig(coordinate_cap=cfg.cap, seed=cfg.seed)
    )
    payload = {"command": "verify", "cap": cfg.cap}
    payload.update(report)
    return _with_rank(payload, pl)


_COMMANDS = {
    "validate": _cmd_validate,
    "color": _cmd_color,
    "cover": _cmd_cover,
    "components": _cmd_components,
    "peg": _cmd_peg,
    "generators": _cmd_generators,
    "relations": _cmd_relations,
    "presentation": _cmd_presentation,
    "degrees": _cmd_degrees,
    "verify": _cmd_verify,
}


def run_command(command: str, model: ModelFile, cfg: CliConfig) -> str:
    if command not in _COMMANDS:
        raise InputError(f"unknown command {command!r}")
    if command == "peg" and cfg.dot:
        pl = _quiver_pipeline(model)
        return export_dot(pl.ctx.graph)
    payload = _COMMANDS[command](model, cfg)
    if cfg.json:
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return _render_text(command, payload)


# ---------------------------------------------------------------------------
# text rendering

def _term_sum(names: Sequence[str], vector: Sequence[int]) -> str:
    terms = []
    for name, k in zip(names, vector):
        if k == 1:
            terms.append(name)
        elif k > 1:
            terms.append(f"{k}*{name}")
    return " + ".join(terms) if terms else "0"


def _name_sum(names: Sequence[str]) -> str:
    return " + ".join(names) if names else "0"


def _endpoint_text(ep: dict) -> str:
    phi = " ".join(ep["phi"])
    return f"{ep['cls']}({phi})" if phi else ep["cls"]


def _render_text(command: str, payload: dict) -> str:
    lines: list[str] = []
    if command == "validate":
        for name in sorted(payload["reports"]):
            rep = payload["reports"][name]
            lines.append(f"{name}: {'ok' if rep['ok'] else 'failed'}")
            for v in rep["violations"]:
                lines.append(f"  [{v['tag']}] {v['description']}")
        if "relations_match_coloring" in payload:
            match = "yes" if payload["relations_match_coloring"] else "no"
            lines.append(f"relations match coloring: {match}")
        lines.append("ok" if payload["ok"] else "not ok")
    elif command in ("color", "cover"):
        for s in sorted(payload["classes"]):
            lines.append(f"{s}: " + " ".join(payload["classes"][s]))
        key = "ideal" if command == "color" else "kept"
        for b, a in payload[key]:
            lines.append(f"rel {b} {a}")
        if command == "cover":
            for b, a in payload["kernel"]:
                lines.append(f"dropped {b} {a}")
            for flag in payload["flags"]:
                lines.append(f"flag: {flag}")
    elif command == "components":
        for rk in payload["maximal_ranks"]:
            lines.append(" ".join(f"{a}={rk[a]}" for a in sorted(rk)))
    elif command == "peg":
        lines.append(
            f"{len(payload['roots'])} roots,"
            f" {len(payload['vertex_edges'])} vertex edges,"
            f" {len(payload['colored_edges'])} colored edges"
        )
        for cp in payload["components"]:
            label = "|".join(str(t) for t in min(cp["roots"]))
            entry = f"{cp['kind']} [{len(cp['roots'])} roots] {label}"
            if cp["endpoints"]:
                entry += "  " + " ".join(
                    _endpoint_text(ep) for ep in cp["endpoints"]
                )
            lines.append(entry)
    elif command == "generators":
        for g in payload["generators"]:
            lines.append(
                f"{g['name']} ({g['kind']}):"
                f" {_term_sum(payload['variables'], g['vector'])}"
            )
        if payload["free_variables"]:
            lines.append("free: " + " ".join(payload["free_variables"]))
        if payload["forced_zero"]:
            lines.append("forced zero: " + " ".join(payload["forced_zero"]))
        if not payload["generators"]:
            lines.append("no generators")
    elif command == "relations":
        for rel in payload["relations"]:
            lines.append(
                f"{_name_sum(rel['lhs'])} = {_name_sum(rel['rhs'])}"
                f"  [{rel['provenance']}]"
            )
        if not payload["relations"]:
            lines.append("no relations")
        lines.append(f"relation cap: {payload['relation_cap']}")
    elif command == "presentation":
        if "band_vars" in payload:
            lines.append("variables: " + " ".join(payload["variables"]))
            if payload["band_vars"]:
                lines.append("band variables: " + " ".join(payload["band_vars"]))
            for g in payload["generators"]:
                sigma = " ".join(
                    f"{x}:{s}" for x, s in sorted(g["sigma"].items())
                )
                lines.append(
                    f"{g['name']} ({g['kind']}) degree {g['degree']}"
                    f"  sigma {sigma}"
                )
            for rel in payload["relations"]:
                lines.append(
                    f"{_name_sum(rel['lhs'])} = {_name_sum(rel['rhs'])}"
                )
            bounds = payload["degree_bounds"]
            lines.append(
                f"degree bounds: generators {bounds['generators']},"
                f" relations {bounds['relations']}"
            )
        else:
            for g in payload["generators"]:
                lines.append(
                    f"{g['name']} ({g['kind']}):"
                    f" {_term_sum(payload['variables'], g['vector'])}"
                )
            for rel in payload["relations"]:
                lines.append(
                    f"{_name_sum(rel['lhs'])} = {_name_sum(rel['rhs'])}"
                )
    elif command == "degrees":
        lines.append(
            "rank: " + " ".join(f"{a}={n}" for a, n in sorted(payload["rank"].items()))
        )
        bounds = payload["degree_bounds"]
        lines.append(f"generators in degree <= {bounds['generators']}")
        lines.append(f"relations in degree <= {bounds['relations']}")
    elif command == "verify":
        lines.append(f"cap: {payload['cap']}")
        gm = "match" if payload["generators_match"] else "MISMATCH"
        rm = "match" if payload["relations_match"] else "MISMATCH"
        lines.append(f"generators: {gm}")
        lines.append(f"relations: {rm}")
        for w in payload["witnesses"]:
            lines.append(f"  {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gentle-si",
        description="Semi-invariant ring presentations for colored gentle quivers.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)
    helps = {
        "validate": "structural checks on the model",
        "color": "show or derive the coloring",
        "cover": "peel a gentle cover off a string algebra",
        "components": "maximal rank sequences for the dimension vector",
        "peg": "the root graph, as JSON or DOT",
        "generators": "semigroup generators of the extracted system",
        "relations": "presentation relations of the extracted system",
        "presentation": "full translated presentation",
        "degrees": "degree bounds for generators and relations",
        "verify": "cross-check the presentation against brute force",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument(
            "model", nargs="?", default="-", help="model file, - for stdin"
        )
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if name == "peg":
            sp.add_argument("--dot", action="store_true", help="emit DOT")
        if name == "verify":
            sp.add_argument(
                "--cap", type=int, default=3, help="coordinate cap for brute force"
            )
            sp.add_argument("--seed", type=int, default=0, help="oracle seed")
    return parser


def _read_model_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _emit_error(json_mode: bool, kind: str, message: str) -> None:
    if json_mode:
        obj = {"error": {"kind": kind, "message": message}}
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args_list = list(sys.argv[1:] if argv is None else argv)
    json_mode = "--json" in args_list
    try:
        args = build_parser().parse_args(args_list)
        cfg = CliConfig(
            json=args.json,
            dot=getattr(args, "dot", False),
            cap=getattr(args, "cap", 3),
            seed=getattr(args, "seed", 0),
        )
        model = parse_model(_read_model_text(args.model))
        out = run_command(args.command, model, cfg)
    except InputError as exc:
        _emit_error(json_mode, "input", str(exc))
        return 1
    except InvariantError as exc:
        _emit_error(json_mode, "invariant", str(exc))
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
