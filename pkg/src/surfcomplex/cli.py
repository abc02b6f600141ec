"""Command-line front end.

Subcommands:
  torus path A B
  torus distance A B --height H
  torus simplex V1 V2 ... [--complex finegold|surface] [--dim N]
  torus graph --height H [--kind finegold|surface] [--dim N] [--format dot|json]
  torus diameter --height H
  farey neighbors P,Q --height H
  seifert info --genus G --b B [--fiber A:B]...

Vectors are comma-separated integers ("2,3,5"), fibers are "alpha:beta".
Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 invalid input, 1 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import seifert, toruscomplex
from .toruscomplex import canonicalize


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation: one subcommand plus its flags."""

    command: str
    subcommand: str
    output_format: str = "json"
    vectors: tuple[tuple[int, ...], ...] = ()
    height: int | None = None
    dim: int | None = None
    complex_kind: str | None = None
    genus: int | None = None
    b: int | None = None
    fibers: tuple[tuple[int, int], ...] = ()


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed vector {text!r}: expected comma-separated integers") from None


def parse_fiber(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"malformed fiber {text!r}: expected alpha:beta")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"malformed fiber {text!r}: expected integers") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfcomplex",
        description="Torus-complex paths and graphs, Farey neighbors, and "
        "Seifert fibered space reports.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    torus = top.add_parser("torus", help="torus-complex operations")
    tsub = torus.add_subparsers(dest="subcommand", required=True)

    p = tsub.add_parser("path", help="certified path of at most two edges")
    p.add_argument("a", help="start vertex, e.g. 2,3,5")
    p.add_argument("b", help="end vertex, e.g. 0,0,1")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = tsub.add_parser("distance", help="BFS distance in a height truncation")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = tsub.add_parser("simplex", help="simplex test with witness minors")
    p.add_argument("vertices", nargs="+")
    p.add_argument("--complex", choices=("finegold", "surface"), default="finegold")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = tsub.add_parser("graph", help="truncated 1-skeleton as DOT or JSON")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--kind", choices=("finegold", "surface"), default="surface")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = tsub.add_parser("diameter", help="max BFS distance in a truncation")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    farey = top.add_parser("farey", help="Farey graph operations")
    fsub = farey.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("neighbors", help="neighbors of a slope in a truncation")
    p.add_argument("vertex", help="slope as P,Q")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    sf = top.add_parser("seifert", help="Seifert fibered space reports")
    ssub = sf.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("info", help="invariants, homology, and classification")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--fiber", action="append", default=[], metavar="A:B")
    p.add_argument("--format", choices=("json", "text"), default="json")

    return parser


def _config_from_args(ns: argparse.Namespace) -> CliConfig:
    vectors: tuple[tuple[int, ...], ...] = ()
    if getattr(ns, "a", None) is not None:
        vectors = (parse_vector(ns.a), parse_vector(ns.b))
    elif getattr(ns, "vertices", None) is not None:
        vectors = tuple(parse_vector(v) for v in ns.vertices)
    elif getattr(ns, "vertex", None) is not None:
        vectors = (parse_vector(ns.vertex),)
    height = getattr(ns, "height", None)
    if height is not None and height < 1:
        raise ValueError("height must be >= 1")
    return CliConfig(
        command=ns.command,
        subcommand=getattr(ns, "subcommand", ""),
        output_format=getattr(ns, "format", "json"),
        vectors=vectors,
        height=height,
        dim=getattr(ns, "dim", None),
        complex_kind=getattr(ns, "complex", None) or getattr(ns, "kind", None),
        genus=getattr(ns, "genus", None),
        b=getattr(ns, "b", None) if ns.command == "seifert" else None,
        fibers=tuple(parse_fiber(f) for f in getattr(ns, "fiber", []) or []),
    )


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _run_torus_path(cfg: CliConfig) -> str:
    a, b = canonicalize(cfg.vectors[0]), canonicalize(cfg.vectors[1])
    cert = toruscomplex.connect_path(a, b)
    if cfg.output_format == "text":
        return " -> ".join(v.label for v in cert.waypoints)
    return _emit_json(cert.to_json_dict())


def _run_torus_distance(cfg: CliConfig) -> str:
    a, b = canonicalize(cfg.vectors[0]), canonicalize(cfg.vectors[1])
    graph = toruscomplex.build_graph("surface-complex-s1", cfg.height)
    dist = toruscomplex.bfs_distance(graph, a, b)
    value = "unreachable-in-truncation" if dist is None else dist
    if cfg.output_format == "text":
        return str(value)
    return _emit_json(
        {
            "from": list(a.coords),
            "to": list(b.coords),
            "height": cfg.height,
            "distance": value,
        }
    )


def _run_torus_simplex(cfg: CliConfig) -> str:
    vs = [canonicalize(v) for v in cfg.vectors]
    n = cfg.dim if cfg.dim is not None else len(vs[0])
    payload: dict = {
        "complex": cfg.complex_kind,
        "dim": n,
        "vertices": [list(v.coords) for v in vs],
    }
    if cfg.complex_kind == "surface":
        if n != 3:
            raise ValueError("the surface complex is implemented for dimension 3")
        if len(vs) < 2 or len(set(vs)) != len(vs):
            raise ValueError("need at least two distinct vertices")
        pair_gcds = [
            [i, j, toruscomplex.intersection_components(vs[i], vs[j])]
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        ]
        payload["is_simplex"] = all(g == 1 for _, _, g in pair_gcds)
        payload["pair_minor_gcds"] = pair_gcds
    else:
        from .exactlin import IntMatrix, minors_gcd

        payload["is_simplex"] = toruscomplex.is_finegold_simplex(vs, n)
        if len(vs) <= n:
            m = IntMatrix.from_columns([v.coords for v in vs])
            payload["minors_gcd"] = minors_gcd(m, len(vs))
        else:
            facet_gcds = []
            for omit in range(len(vs)):
                cols = [v.coords for j, v in enumerate(vs) if j != omit]
                facet_gcds.append(minors_gcd(IntMatrix.from_columns(cols), n))
            payload["facet_minors_gcds"] = facet_gcds
    if cfg.output_format == "text":
        return "true" if payload["is_simplex"] else "false"
    return _emit_json(payload)


_KIND_TAGS = {"finegold": "finegold-skeleton", "surface": "surface-complex-s1"}


def _run_torus_graph(cfg: CliConfig) -> str:
    kind = _KIND_TAGS[cfg.complex_kind]
    graph = toruscomplex.build_graph(kind, cfg.height, n=cfg.dim)
    if cfg.output_format == "dot":
        return toruscomplex.graph_to_dot(graph).rstrip("\n")
    return _emit_json(toruscomplex.graph_to_json_dict(graph))


def _run_torus_diameter(cfg: CliConfig) -> str:
    graph = toruscomplex.build_graph("surface-complex-s1", cfg.height)
    diam, pair = toruscomplex.truncation_diameter(graph)
    value = "unreachable-in-truncation" if diam is None else diam
    pair_out = None if pair is None else [list(pair[0].coords), list(pair[1].coords)]
    if cfg.output_format == "text":
        return f"{value} {pair_out}"
    return _emit_json({"height": cfg.height, "diameter": value, "pair": pair_out})


def _run_farey_neighbors(cfg: CliConfig) -> str:
    v = canonicalize(cfg.vectors[0])
    neighbors = toruscomplex.farey_neighbors(v, cfg.height)
    if cfg.output_format == "text":
        return "\n".join(u.label for u in neighbors)
    return _emit_json(
        {
            "vertex": list(v.coords),
            "height": cfg.height,
            "neighbors": [list(u.coords) for u in neighbors],
        }
    )


def _run_seifert_info(cfg: CliConfig) -> str:
    inv = seifert.SeifertInvariants(cfg.genus, cfg.b, cfg.fibers)
    payload = seifert.info_json_dict(inv)
    if cfg.output_format == "text":
        fibers = " ".join(f"{a}:{b}" for a, b in payload["fibers"])
        return (
            f"verdict={payload['verdict']} e={payload['euler_number']} "
            f"d={payload['d']} h1_free={payload['h1']['free_rank']} "
            f"h1_torsion={payload['h1']['torsion']} h2={payload['h2_rank']} "
            f"fibers=[{fibers}]"
        )
    return _emit_json(payload)


_DISPATCH = {
    ("torus", "path"): _run_torus_path,
    ("torus", "distance"): _run_torus_distance,
    ("torus", "simplex"): _run_torus_simplex,
    ("torus", "graph"): _run_torus_graph,
    ("torus", "diameter"): _run_torus_diameter,
    ("farey", "neighbors"): _run_farey_neighbors,
    ("seifert", "info"): _run_seifert_info,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(ns)
        output = _DISPATCH[(cfg.command, cfg.subcommand)](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal invariant failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
