"""Command-line interface: ``adequa <command> INPUT``.

Inputs are PD codes (``X[1,5,2,4] ...``), braid words (``"3: 1 1 -2"``) or
pretzel tuples (``"P(-2,3,3)"``).  The exit status is 0 whenever a report was
produced, whatever the verdict, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from . import __version__
from .certifier import (
    Certificate,
    HypothesisError,
    certify,
    certify_braid,
    link_primality,
    nonsplit,
    turaev_genus,
    volume_lower_bound,
)
from .diagram import DiagramError, PlanarDiagram, braid_closure, canonical, parse_braid, parse_diagram, torus_2q
from .generators import (
    core_pattern,
    parse_pattern,
    random_alternating,
    random_braid,
    random_diagram,
    random_pretzel,
    satellite,
    whitehead_pattern,
)
from .kauffman import InadequateError, build_H, graph_of, reduce, resolve_all
from .polyhedral import SIDES, guts_euler, maximal_nonprime_arcs, polyhedral_regions
from .twist import (
    is_twist_reduced,
    normalize_bigons,
    nugatory_crossings,
    prime_cut_witness,
    resolution_kind,
    twist_regions,
    two_edge_loop_witness,
)

TOOL = "adequa"


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rendering helpers


def _crossing(D: PlanarDiagram, x: int) -> str:
    a, b, c, d = D.crossings[x]
    return f"c{x + 1} X[{a},{b},{c},{d}]"


def _graph_dump(D: PlanarDiagram, side: str) -> dict[str, Any]:
    G = graph_of(D, SIDES[side])
    out: dict[str, Any] = {
        "vertices": len(G.vertices),
        "edges": [list(e) for e in G.edges],
        "adjacency": {str(v): ns for v, ns in G.adjacency().items()},
    }
    try:
        Gp = reduce(G)
    except InadequateError:
        out["reduced"] = None
    else:
        out["reduced"] = {
            "edges": [list(e) for e in Gp.edges],
            "adjacency": {str(v): ns for v, ns in Gp.adjacency().items()},
            "euler_char": len(Gp.vertices) - len(Gp.edges),
        }
    return out


def _certificate_text(D: PlanarDiagram, cert: Certificate) -> str:
    lines = [f"input: {cert.input}", f"verdict: {cert.verdict}", f"side: {cert.to_json()['side']}"]
    for r in cert.reasons:
        lines.append(f"  {r['name']:<20}{r['outcome']}")
    for w in cert.witnesses:
        detail = []
        if "crossings" in w:
            detail.append("crossings " + ", ".join(_crossing(D, x) for x in w["crossings"]))
        if "regions" in w:
            detail.append("twist regions " + ", ".join(str(r + 1) for r in w["regions"]))
        if "arcs" in w:
            detail.append("arcs " + ", ".join(str(a) for a in w["arcs"]))
        for key in ("pieces", "twist_number"):
            if key in w:
                detail.append(f"{key.replace('_', ' ')} {w[key]}")
        lines.append(f"witness {w['reason']}: " + "; ".join(detail))
    q = cert.quantities
    lines.append(f"chi(G'): {q['chi']}")
    if q["volume_bound"] is not None:
        lines.append(f"volume bound: {q['volume_bound']:.5f} (effective {q['effective_bound']:.5f})")
    lines.append(f"turaev genus: {q['turaev_genus']}")
    lines.append(f"guts chi: {q['guts_chi']}")
    lines.append(f"non-split: {'yes' if q['nonsplit'] else 'unknown'}")
    lines.append(f"link primality: {q['link_primality']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands; each returns (json payload, text)


def _cmd_parse(D: PlanarDiagram, args) -> tuple[dict, str]:
    data = {
        "pd": D.pd_string(),
        "canonical": canonical(D).pd_string(),
        "crossings": D.num_crossings,
        "components": D.component_count,
        "faces": len(D.faces) if D.crossings else 0,
        "connected": D.is_connected(),
    }
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return {"diagram": data}, text


def _cmd_resolve(D: PlanarDiagram, args) -> tuple[dict, str]:
    data = {}
    lines = []
    for side in _sides(args):
        state = resolve_all(D, SIDES[side])
        circles = [list(c.arcs) for c in state.circles]
        data[side] = {"circle_count": state.circle_count, "circles": circles}
        lines.append(f"{side}: {state.circle_count} circles")
        lines += [f"  circle {i}: arcs {' '.join(map(str, arcs)) or '(free loop)'}" for i, arcs in enumerate(circles)]
    return {"states": data}, "\n".join(lines)


def _cmd_graphs(D: PlanarDiagram, args) -> tuple[dict, str]:
    data = {side: _graph_dump(D, side) for side in _sides(args)}
    lines = []
    for side, g in data.items():
        lines.append(f"{side}: G has {g['vertices']} vertices, {len(g['edges'])} edges")
        if g["reduced"] is None:
            lines.append("  G has a loop edge; G' undefined")
        else:
            lines.append(f"  G' has {len(g['reduced']['edges'])} edges, chi = {g['reduced']['euler_char']}")
    return {"graphs": data}, "\n".join(lines)


def _cmd_twist(D: PlanarDiagram, args) -> tuple[dict, str]:
    regions = []
    for R in twist_regions(D):
        entry: dict[str, Any] = {"crossings": [x + 1 for x in R.crossings], "alternating": R.alternating}
        if R.alternating:
            entry["kinds"] = {side: resolution_kind(D, R, SIDES[side]).value for side in SIDES}
        regions.append(entry)
    data: dict[str, Any] = {"twist_number": len(regions), "regions": regions}
    for side in SIDES:
        try:
            pair = two_edge_loop_witness(D, SIDES[side])
            data[f"two_edge_loop_{side}"] = None if pair is None else [x + 1 for x in pair]
        except InadequateError:
            data[f"two_edge_loop_{side}"] = "inadequate"
        data[f"twist_reduced_{side}"] = is_twist_reduced(D, SIDES[side])
    lines = [f"twist number: {len(regions)}"]
    for i, r in enumerate(regions, start=1):
        kinds = ", ".join(f"{s} {k}" for s, k in r.get("kinds", {}).items()) or "non-alternating bigon"
        lines.append(f"  region {i}: crossings {' '.join(map(str, r['crossings']))} ({kinds})")
    for side in SIDES:
        lines.append(f"2-edge loop witness ({side}): {data[f'two_edge_loop_{side}']}")
        lines.append(f"twist reduced ({side}): {data[f'twist_reduced_{side}']}")
    return {"twist": data}, "\n".join(lines)


def _cmd_certify(D: PlanarDiagram, args) -> tuple[dict, str]:
    if args.normalize_bigons:
        D = normalize_bigons(D)
    cert = certify(D, side=args.side, label=args.input_text)
    payload: dict[str, Any] = {"certificate": cert.to_json()}
    if args.graphs:
        payload["graphs"] = {side: _graph_dump(D, side) for side in SIDES}
    return payload, _certificate_text(D, cert)


def _cmd_volume(D: PlanarDiagram, args) -> tuple[dict, str]:
    bound, effective = volume_lower_bound(D, side=args.side)
    return {"volume_bound": bound, "effective_bound": effective}, f"volume >= {bound:.5f} (effective {effective:.5f})"


def _cmd_turaev(D: PlanarDiagram, args) -> tuple[dict, str]:
    g = turaev_genus(D)
    return {"turaev_genus": g}, f"turaev genus: {g}"


def _cmd_guts(D: PlanarDiagram, args) -> tuple[dict, str]:
    g = guts_euler(D, side=args.side)
    side = args.side if args.side != "auto" else None
    data: dict[str, Any] = {"guts_chi": g}
    lines = [f"guts chi: {g}"]
    for s in ([side] if side else list(SIDES)):
        try:
            H = build_H(D, SIDES[s])
            arcs = maximal_nonprime_arcs(H)
            regions = polyhedral_regions(H, arcs)
        except (DiagramError, InadequateError):
            continue
        data[f"nonprime_arcs_{s}"] = [{"circle": a.circle, "positions": list(a.positions), "side": a.side} for a in arcs]
        data[f"region_sizes_{s}"] = [r.size for r in regions]
        lines.append(f"{s}: {len(arcs)} non-prime arcs, region sizes {[r.size for r in regions]}")
    return {"guts": data}, "\n".join(lines)


def _cmd_primality(D: PlanarDiagram, args) -> tuple[dict, str]:
    cut = prime_cut_witness(D) if D.is_connected() else None
    data = {
        "diagram_prime": None if not D.is_connected() else cut is None,
        "cut_arcs": list(cut) if cut else None,
        "nugatory": [x + 1 for x in nugatory_crossings(D)],
        "link_primality": link_primality(D),
        "nonsplit": nonsplit(D),
    }
    text = "\n".join(f"{k.replace('_', ' ')}: {v}" for k, v in data.items())
    return {"primality": data}, text


COMMANDS: dict[str, Callable] = {
    "parse": _cmd_parse,
    "resolve": _cmd_resolve,
    "graphs": _cmd_graphs,
    "twist": _cmd_twist,
    "certify": _cmd_certify,
    "volume-bound": _cmd_volume,
    "turaev-genus": _cmd_turaev,
    "guts": _cmd_guts,
    "primality": _cmd_primality,
}


def _sides(args) -> list[str]:
    return list(SIDES) if args.side == "auto" else [args.side]


# ---------------------------------------------------------------------------
# generate and batch


def _generate(args) -> list[str]:
    out = []
    for k in range(args.count):
        seed = args.seed + k
        if args.kind == "alternating":
            D = random_alternating(args.crossings, seed)
        elif args.kind == "random":
            D = random_diagram(args.crossings, seed)
        elif args.kind == "torus":
            D = torus_2q(args.crossings)
        elif args.kind == "pretzel":
            params = random_pretzel(seed)
            out.append("P(" + ",".join(map(str, params)) + ")")
            continue
        elif args.kind == "braid":
            out.append(str(random_braid(args.strands, seed)))
            continue
        else:
            companion = parse_diagram(args.companion) if args.companion else torus_2q(3)
            if args.pattern in (None, "whitehead"):
                pattern = whitehead_pattern()
            elif args.pattern == "core":
                pattern = core_pattern()
            else:
                pattern = parse_pattern(args.pattern)
            arc = args.arc if args.arc is not None else min(companion.arc_ends)
            D = satellite(companion, pattern, arc)
            if args.json:
                out.append(json.dumps({"pd": D.pd_string(), "placement_arc": arc, "winding": pattern.winding}))
                continue
        out.append(D.pd_string())
    return out


def _batch_one(task: tuple[str, str, bool, bool]) -> tuple[str, bool]:
    text, side, normalize, as_json = task
    start = time.perf_counter()
    try:
        D = parse_diagram(text)
        cert = certify(D, side=side, normalize=normalize, label=text)
    except (DiagramError, ValueError) as exc:
        if as_json:
            return json.dumps({"tool": TOOL, "version": __version__, "input": text, "error": str(exc)}), False
        return f"{text}\terror: {exc}", False
    if as_json:
        report = {
            "tool": TOOL,
            "version": __version__,
            "input": text,
            "certificate": cert.to_json(),
            "timing": {"seconds": round(time.perf_counter() - start, 6)},
        }
        return json.dumps(report), True
    return f"{text}\t{cert.verdict}", True


def _jobs(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    try:
        return max(1, int(os.environ.get("ADEQUA_JOBS", "1")))
    except ValueError:
        return 1


def _batch(args, out) -> int:
    lines = _read_file(args.file) if args.file else args.inputs
    inputs = [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]
    if not inputs:
        raise InputError("batch needs inputs, one per line")
    tasks = [(t, args.side, args.normalize_bigons, args.json) for t in inputs]
    jobs = _jobs(args.jobs)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_batch_one(t) for t in tasks]
    ok = True
    for line, good in results:
        print(line, file=out)
        ok &= good
    return 0 if ok else 2


def _read_file(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL, description="Hyperbolicity certificates for semi-adequate link diagrams.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--side", choices=["auto", "A", "mirror"], default="auto", help="state to certify from")
    common.add_argument("--normalize-bigons", action="store_true", help="remove non-alternating bigons first")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name in list(COMMANDS) + ["certify-braid"]:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", help="PD code, braid word or pretzel tuple")
        p.add_argument("--file", help="read the input from a file")
        if name == "certify":
            p.add_argument("--graphs", action="store_true", help="include state graph dumps")
    g = sub.add_parser("generate", parents=[common])
    g.add_argument("kind", choices=["alternating", "random", "torus", "pretzel", "braid", "satellite"])
    g.add_argument("--crossings", type=int, default=8)
    g.add_argument("--strands", type=int, default=4)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--companion", help="companion diagram for satellites (default trefoil)")
    g.add_argument("--pattern", help="'whitehead', 'core' or a pattern text")
    g.add_argument("--arc", type=int, help="companion arc carrying the pattern")
    b = sub.add_parser("batch", parents=[common])
    b.add_argument("inputs", nargs="*")
    b.add_argument("--file", help="one input per line, '#' starts a comment")
    b.add_argument("--jobs", type=int, help="worker processes (default $ADEQUA_JOBS or 1)")
    b.add_argument("--seed", type=int, default=0, help="accepted for symmetry with generate")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "batch":
            return _batch(args, out)
        if args.command == "generate":
            for line in _generate(args):
                print(line, file=out)
            return 0
        text = _read_file(args.file) if args.file else None
        text = "\n".join(text).strip() if text is not None else (args.input or "").strip()
        if not text:
            parser.print_usage(sys.stderr)
            print(f"{TOOL} {args.command}: error: no input given", file=sys.stderr)
            return 2
        args.input_text = text
        if args.command == "certify-braid":
            b = parse_braid(text)
            cert = certify_braid(b, label=text)
            payload, rendered = {"certificate": cert.to_json()}, _certificate_text(braid_closure(b), cert)
        else:
            D = parse_diagram(text)
            payload, rendered = COMMANDS[args.command](D, args)
    except (DiagramError, HypothesisError, InputError, ValueError) as exc:
        print(f"{TOOL} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        report = {"tool": TOOL, "version": __version__, "input": text}
        report.update(payload)
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        print(json.dumps(report, indent=2), file=out)
    else:
        print(rendered, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
