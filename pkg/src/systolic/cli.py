"""Command-line front end.

Exit status: 0 verdict true / success, 1 verdict false (witness emitted),
2 usage or input error, 3 internal-consistency or lemma violation.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import dot
from .arborescent import ball_filtration_check, facet_files_generator, hex_plane_generator
from .core import Complex, combinatorial_distance, is_flag
from .errors import ConsistencyError, InputError, UnknownSimplex
from .formats import dumps, read_complex
from .morse import acyclicity, collapse_sequence, gradient_matching
from .projection import ball_tower, directed_geodesic, is_directed_geodesic, sphere
from .verify import SYSTOLE_SEARCH_BOUND, is_k_large, is_systolic, systole

COMMANDS = ("check", "morse", "collapse", "geodesic", "balls", "filtration", "export-dot")


@dataclass
class RunConfig:
    command: str
    inputs: List[str] = field(default_factory=list)
    base: Optional[int] = None
    k: int = 6
    radius: Optional[int] = None
    source: Optional[int] = None
    target: Optional[int] = None
    output: Optional[str] = None
    format: str = "json"
    hex_plane: bool = False
    cat0: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.command in ("morse", "collapse", "balls") and self.base is None:
            raise InputError(f"{self.command} needs --base")
        if self.k < 4:
            raise InputError("--k must be at least 4")
        if self.radius is not None and self.radius < 0:
            raise InputError("--radius must be non-negative")
        if self.command == "geodesic" and (self.source is None or self.target is None):
            raise InputError("geodesic needs --from and --to")
        if self.command == "filtration":
            if not self.hex_plane and not self.inputs:
                raise InputError("filtration needs --hex-plane or facet files")
        elif len(self.inputs) != 1:
            raise InputError(f"{self.command} takes exactly one facet file")


def _vertex(K: Complex, v: int) -> int:
    if v not in K.adjacency:
        raise UnknownSimplex(f"vertex {v} not in complex")
    return v


def _pairs(ps):
    return [[list(s), list(t)] for s, t in ps]


def _check(cfg: RunConfig, K: Complex):
    sysrep = is_systolic(K, cfg.k)
    large = is_k_large(K, cfg.k)
    sys_len = systole(K, bound=SYSTOLE_SEARCH_BOUND)
    report = sysrep.to_dict()
    report["flag"] = is_flag(K)
    report["k_large"] = large.to_dict()
    report["systole"] = (f">={SYSTOLE_SEARCH_BOUND}" if math.isinf(sys_len) else sys_len)
    report["f_vector"] = list(K.f_vector)
    if sysrep.verdict:
        text = f"{cfg.k}-systolic (h1-proxy): yes\n"
    else:
        text = (f"{cfg.k}-systolic (h1-proxy): no\n"
                f"connected: {sysrep.connected}\n"
                f"locally {cfg.k}-large: {sysrep.locally_6_large.verdict}\n"
                f"witness cycle: {report['witness_cycle']} at {report['witness_location']}\n"
                f"H1 rank {sysrep.h1.rank}, torsion {list(sysrep.h1.torsion)}\n")
    return sysrep.verdict, report, text, None


def _morse(cfg: RunConfig, K: Complex):
    v = _vertex(K, cfg.base)
    V = gradient_matching(K, v)
    cert = acyclicity(K, V)
    report = V.to_dict()
    report.update(base=v, acyclic=cert.verdict, closed_path=cert.to_dict()["closed_path"])
    text = "".join(f"{list(s)} -> {list(t)}\n" for s, t in V.pairs)
    text += f"critical: {[list(c) for c in V.critical]}\nacyclic: {cert.verdict}\n"
    return cert.verdict, report, text, dot.hasse_dot(K, V.pairs, V.critical)


def _collapse(cfg: RunConfig, K: Complex):
    v = _vertex(K, cfg.base)
    V = gradient_matching(K, v)
    cert = acyclicity(K, V)
    if not cert:
        report = {"base": v, "acyclic": False, "closed_path": _pairs(cert.closed_path)}
        return False, report, f"closed gradient path: {report['closed_path']}\n", None
    seq = collapse_sequence(K, V, cert)
    report = {"base": v, "sequence": _pairs(seq), "final": [v], "steps": len(seq)}
    text = "".join(f"collapse {list(s)} into {list(t)}\n" for s, t in seq)
    text += f"final: [{v}]\n"
    return True, report, text, dot.hasse_dot(K, V.pairs, V.critical)


def _geodesic(cfg: RunConfig, K: Complex):
    u, w = _vertex(K, cfg.source), _vertex(K, cfg.target)
    g = directed_geodesic(K, u, w)
    check = is_directed_geodesic(K, g)
    report = {"from": u, "to": w, "distance": combinatorial_distance(K, u, w),
              "geodesic": g.to_list(), "is_directed_geodesic": check.ok}
    text = " -> ".join(str(list(s)) for s in g) + "\n"
    return check.ok, report, text, dot.chain_dot([g.simplices], "geodesic")


def _balls(cfg: RunConfig, K: Complex):
    v = _vertex(K, cfg.base)
    tower = ball_tower(K, [v], n_max=cfg.radius)
    report = tower.to_dict()
    report["spheres"] = [
        {"radius": n, "vertices": sorted(sphere(K, tower, n).vertex_set)}
        for n in range(1, tower.depth + 1)
    ]
    text = "".join(f"B_{lv['radius']}: {len(lv['vertices'])} vertices, {lv['faces']} faces\n"
                   for lv in report["levels"])
    rays = []
    for n in range(1, tower.depth + 1):
        rays += [directed_geodesic(K, x, v).simplices for x in tower.vertices_at(n)]
    return True, report, text, dot.chain_dot(rays, "balls")


def _filtration(cfg: RunConfig, K: Optional[Complex]):
    if cfg.hex_plane:
        gen = hex_plane_generator()
    else:
        gen = facet_files_generator(cfg.inputs, base=cfg.base or 0)
    N = cfg.radius if cfg.radius is not None else (3 if cfg.hex_plane else len(cfg.inputs))
    rep = ball_filtration_check(gen, N, cat0_asserted=cfg.cat0)
    header = f"{'radius':>6} {'f-vector':<18} {'monotone':>8} {'systolic':>8} {'collapsible':>11} {'oracle':>6}\n"
    rows = "".join(
        f"{lv.radius:>6} {str(list(lv.f_vector)):<18} {str(lv.monotone):>8} "
        f"{str(lv.systolic):>8} {str(lv.collapsible):>11} {str(lv.oracle_collapsible):>6}\n"
        for lv in rep.levels)
    text = header + rows + f"verdict: {rep.verdict} ({rep.hypothesis})\n"
    return rep.verdict, rep.to_dict(), text, None


def _export_dot(cfg: RunConfig, K: Complex):
    if cfg.source is not None and cfg.target is not None:
        ok, report, _, graph = _geodesic(cfg, K)
        return ok, report, graph, graph
    if cfg.base is None:
        return True, {}, dot.hasse_dot(K), dot.hasse_dot(K)
    ok, report, _, graph = _morse(cfg, K)
    return ok, report, graph, graph


HANDLERS = {
    "check": _check,
    "morse": _morse,
    "collapse": _collapse,
    "geodesic": _geodesic,
    "balls": _balls,
    "filtration": _filtration,
    "export-dot": _export_dot,
}


def _emit(cfg: RunConfig, payload: str) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        K = None if cfg.command == "filtration" else read_complex(cfg.inputs[0])
        ok, report, text, graph = HANDLERS[cfg.command](cfg, K)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency error: {type(exc).__name__}: {exc}", file=sys.stderr)
        witness = {"verdict": False, "error": type(exc).__name__, "message": str(exc)}
        for attr in ("vertex", "critical", "first", "second"):
            if getattr(exc, attr, None) is not None:
                witness[attr] = _jsonable(getattr(exc, attr))
        if cfg.format == "json":
            _emit(cfg, dumps(witness))
        return 3
    fmt = "dot" if cfg.command == "export-dot" else cfg.format
    if fmt == "json":
        _emit(cfg, dumps(report))
    elif fmt == "dot":
        if graph is None:
            print(f"error: {cfg.command} has no DOT rendering", file=sys.stderr)
            return 2
        _emit(cfg, graph)
    else:
        _emit(cfg, text)
    return 0 if ok else 1


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="systolic",
        description="Systolicity checks, gradient matchings and collapse certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("text", "json", "dot"), default="json")
        return p

    p = add("check", "local k-largeness, connectivity and the H1 proxy")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("input")
    for name, help_text in (("morse", "gradient matching and acyclicity"),
                            ("collapse", "collapse sequence to the base vertex")):
        p = add(name, help_text)
        p.add_argument("--base", type=int, required=True)
        p.add_argument("input")
    p = add("geodesic", "directed geodesic between two vertices")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("input")
    p = add("balls", "combinatorial balls and spheres around a vertex")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--radius", type=int)
    p.add_argument("input")
    p = add("filtration", "ball filtration of a generator")
    p.add_argument("--radius", type=int)
    p.add_argument("--base", type=int, default=0)
    p.add_argument("--hex-plane", action="store_true", help="use the triangular-lattice generator")
    p.add_argument("--cat0", action="store_true", help="label the run as CAT(0) hypothesis asserted")
    p.add_argument("inputs", nargs="*")
    p = add("export-dot", "Hasse diagram (with matching when --base is given) or geodesic chain")
    p.add_argument("--base", type=int)
    p.add_argument("--from", dest="source", type=int)
    p.add_argument("--to", dest="target", type=int)
    p.add_argument("input")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    ns = vars(args)
    inputs = ns.pop("inputs", None)
    single = ns.pop("input", None)
    cfg = RunConfig(
        command=ns.pop("command"),
        inputs=list(inputs) if inputs is not None else [single],
        **{k: v for k, v in ns.items() if k in RunConfig.__dataclass_fields__},
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
