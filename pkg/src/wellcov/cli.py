"""Command-line front end.

Exit codes for ``recognize``: 0 = property holds, 1 = it does not,
2 = refused (family gate or precondition), 3 = unreadable input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import certify, oracle
from . import recognizers as rec
from .errors import FamilyError, GraphFormatError, InputError, PreconditionError, SizeLimitError
from .formats import FORMATS, GraphDocument, format_graph, parse_graph, to_dot, to_graph6
from .generate import FAMILIES, MAX_EXHAUSTIVE_N, connected_graphs, family, random_graph
from .graph import Graph, contains_cycle_len, girth, is_claw_free
from .reduction import parse_cnf, sat_to_shed
from .verdict import Verdict, certificate_to_json

EXIT_TRUE, EXIT_FALSE, EXIT_REFUSED, EXIT_PARSE = 0, 1, 2, 3

PROPERTIES = ("wc", "w2", "shed", "relating")
ALGORITHMS = (
    "auto",
    "oracle",
    "c5free",
    "clawfree",
    "c46free",
    "girth5",
    "c3c5free",
    "c45free",
    "bounded-alpha",
    "vertex-deletion",
    "shedding-all",
)


def workers() -> int:
    return max(1, int(os.environ.get("WELLCOV_WORKERS", "1")))


# ---------------------------------------------------------------------------
# recognition


def _alpha_k(G: Graph, k: int | None) -> int:
    return oracle.independence_number(G) if k is None else k


def auto_shed(G: Graph, v: int) -> Verdict:
    """Shedding test through the most specific applicable recognizer."""
    if girth(G) >= 5 and G.is_connected() and rec.well_covered(G):
        return rec.shed_girth5_wc(G, v, check_well_covered=False)
    if not contains_cycle_len(G, 5):
        return rec.shed_c5free(G, v)
    if not contains_cycle_len(G, 4) and not contains_cycle_len(G, 6):
        return rec.shed_c46free(G, v)
    if is_claw_free(G):
        return rec.shed_clawfree(G, v)
    alpha = oracle.independence_number(G)
    if 2 <= alpha <= 4:
        return rec.shed_bounded_alpha(G, v, alpha, verify_alpha=False)
    if G.n <= oracle.oracle_max_n():
        return oracle.is_shedding_oracle(G, v)
    raise FamilyError(f"no shedding recognizer applies (n = {G.n}, alpha = {alpha})")


def _require_wc(G: Graph, who: str) -> None:
    if not rec.well_covered(G):
        raise PreconditionError("well-covered", f"{who} requires a well-covered graph")


def run_property(G: Graph, prop: str, algorithm: str, vertex=None, edge=None, k=None) -> Verdict:
    """Route one recognition request; raises FamilyError/PreconditionError on refusal."""
    a = algorithm
    if prop == "shed":
        if vertex is None:
            raise InputError("--vertex is required for property 'shed'")
        table = {
            "auto": lambda: auto_shed(G, vertex),
            "oracle": lambda: oracle.is_shedding_oracle(G, vertex),
            "c5free": lambda: rec.shed_c5free(G, vertex),
            "clawfree": lambda: rec.shed_clawfree(G, vertex),
            "c46free": lambda: rec.shed_c46free(G, vertex),
            "girth5": lambda: rec.shed_girth5_wc(G, vertex),
            "bounded-alpha": lambda: rec.shed_bounded_alpha(G, vertex, _alpha_k(G, k)),
        }
    elif prop == "wc":
        table = {
            "auto": lambda: rec.well_covered(G),
            "oracle": lambda: oracle.is_well_covered_oracle(G),
            "bounded-alpha": lambda: rec.wc_bounded_alpha(G, _alpha_k(G, k)),
        }
    elif prop == "w2":

        def shedding_all():
            _require_wc(G, "shedding-all")
            return rec.w2_via_shedding(G, auto_shed)

        table = {
            "auto": lambda: rec.dispatch_w2(G),
            "oracle": lambda: oracle.is_w2_oracle(G),
            "girth5": lambda: rec.w2_girth5(G),
            "c3c5free": lambda: rec.w2_c3c5free(G),
            "c45free": lambda: rec.w2_c45free(G),
            "bounded-alpha": lambda: rec.w2_bounded_alpha(G, _alpha_k(G, k)),
            "vertex-deletion": lambda: rec.w2_via_vertex_deletion(G, rec.well_covered),
            "shedding-all": shedding_all,
        }
    elif prop == "relating":
        if edge is None:
            raise InputError("--edge is required for property 'relating'")
        x, y = edge

        def auto_relating():
            try:
                return rec.relating_via_shedding(G, x, y)
            except PreconditionError:
                if G.n <= oracle.oracle_max_n():
                    return oracle.is_relating_oracle(G, x, y)
                raise

        table = {
            "auto": auto_relating,
            "oracle": lambda: oracle.is_relating_oracle(G, x, y),
            "c46free": lambda: rec.relating_via_shedding(G, x, y),
        }
    else:
        raise InputError(f"unknown property {prop!r}")
    if a not in table:
        raise InputError(f"algorithm {a!r} does not decide property {prop!r}; choose from {sorted(table)}")
    return table[a]()


def _json_notes(notes: dict) -> dict:
    out = {}
    for key, value in sorted(notes.items()):
        if isinstance(value, (bool, int, float, str)) or value is None:
            out[key] = value
        elif isinstance(value, (list, tuple)) and all(isinstance(x, (int, str)) for x in value):
            out[key] = list(value)
        else:
            try:
                out[key] = certificate_to_json(value)
            except TypeError:
                out[key] = repr(value)
    return out


def build_report(doc: GraphDocument, raw: bytes, prop: str, verdict: Verdict, vertex, edge, elapsed_ms) -> dict:
    G = doc.graph
    return {
        "command": "recognize",
        "format": doc.format,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "n": G.n,
        "m": G.m,
        "property": prop,
        "vertex": vertex,
        "edge": list(edge) if edge else None,
        "algorithm": verdict.algorithm,
        "verdict": verdict.answer,
        "certificate": certificate_to_json(verdict.certificate),
        "details": _json_notes(verdict.notes),
        "labels": list(doc.labels) if doc.labels else None,
        "elapsed_ms": elapsed_ms,
    }


def _resolve_vertex(doc: GraphDocument, token: str) -> int:
    if doc.labels and token in doc.labels:
        return doc.labels.index(token)
    try:
        v = int(token)
    except ValueError:
        raise InputError(f"unknown vertex {token!r}") from None
    doc.graph.check_vertex(v)
    return v


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if getattr(args, "report", None):
        Path(args.report).write_text(text)
    if getattr(args, "json", False):
        sys.stdout.write(text)


def cmd_recognize(args) -> int:
    try:
        raw = _read_input(args.input)
        doc = parse_graph(raw, args.format)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    G = doc.graph
    try:
        vertex = _resolve_vertex(doc, args.vertex) if args.vertex is not None else None
        edge = tuple(_resolve_vertex(doc, t) for t in args.edge) if args.edge else None
        start = time.perf_counter()
        verdict = run_property(G, args.property, args.algorithm, vertex, edge, args.k)
        elapsed = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    except (FamilyError, PreconditionError, InputError, SizeLimitError) as exc:
        if not args.quiet:
            print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    cert_prop = {"wc": "wc", "w2": "w2", "shed": "shed", "relating": "relating"}[args.property]
    certify.verify(G, cert_prop, verdict, vertex=vertex, edge=edge)
    report = build_report(doc, raw, args.property, verdict, vertex, edge, elapsed)
    _emit(report, args)
    if not args.json and not args.quiet:
        cert = json.dumps(report["certificate"]) if report["certificate"] is not None else "-"
        print(f"{args.property}: {'yes' if verdict.answer else 'no'} [{verdict.algorithm}] certificate: {cert}")
    return EXIT_TRUE if verdict.answer else EXIT_FALSE


# ---------------------------------------------------------------------------
# reduction


def cmd_reduce(args) -> int:
    try:
        inst = parse_cnf(_read_input(args.input))
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = sat_to_shed(inst)
    graph_text = format_graph(out.gadget, args.format)
    roles = {"format": args.format, "n": out.gadget.n, "m": out.gadget.m, **out.roles()}
    roles_text = json.dumps(roles, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(graph_text)
        Path(args.roles or args.output + ".roles.json").write_text(roles_text)
    else:
        sys.stdout.write(graph_text)
        if args.roles:
            Path(args.roles).write_text(roles_text)
    if args.dot:
        Path(args.dot).write_text(to_dot(out.gadget, highlight=1 << out.v))
    return 0


# ---------------------------------------------------------------------------
# cross-validation


def _shed_checks(G: Graph, wc: bool, alpha: int):
    checks = {
        "shed_c5free": rec.shed_c5free,
        "shed_clawfree": rec.shed_clawfree,
        "shed_c46free": rec.shed_c46free,
    }
    if alpha >= 2:
        checks["shed_bounded_alpha"] = lambda g, v: rec.shed_bounded_alpha(g, v, alpha, verify_alpha=False)
    if wc:
        checks["shed_girth5_wc"] = lambda g, v: rec.shed_girth5_wc(g, v, check_well_covered=False)
    return checks


def _w2_checks(G: Graph, wc: bool, alpha: int):
    checks = {
        "w2_girth5": rec.w2_girth5,
        "w2_c3c5free": rec.w2_c3c5free,
        "w2_c45free": rec.w2_c45free,
        "w2_via_vertex_deletion": lambda g: rec.w2_via_vertex_deletion(g, rec.bounded_alpha_wc_check),
        "dispatch_w2": rec.dispatch_w2,
    }
    if alpha >= 2:
        checks["w2_bounded_alpha"] = lambda g: rec.w2_bounded_alpha(g, alpha, verify_alpha=False)
    if wc:
        checks["w2_via_shedding"] = lambda g: rec.w2_via_shedding(g, auto_shed)
    return checks


def _attempt(fn, *a):
    try:
        return fn(*a)
    except (FamilyError, PreconditionError):
        return None


def crossvalidate_graph(G: Graph, properties: tuple[str, ...]) -> dict:
    """Run every applicable recognizer on ``G`` against the oracle."""
    counts: dict[str, list[int]] = {}
    mismatches = []
    g6 = to_graph6(G)
    wc_verdict = oracle.is_well_covered_oracle(G)
    wc = wc_verdict.answer
    alpha = oracle.independence_number(G)
    extra = {}

    def record(name, got: Verdict | None, expected: bool, prop, **where):
        if got is None:
            return
        slot = counts.setdefault(name, [0, 0])
        slot[0] += 1
        certify.verify(G, prop, got, **where)
        if got.answer != expected:
            slot[1] += 1
            mismatches.append({"graph6": g6, "recognizer": name, **where, "expected": expected, "got": got.answer})

    if "shed" in properties:
        checks = _shed_checks(G, wc, alpha)
        for v in G.vertices():
            expected = oracle.is_shedding_oracle(G, v).answer
            for name, fn in checks.items():
                record(name, _attempt(fn, G, v), expected, "shed", vertex=v)
    if "wc" in properties and alpha >= 2:
        record("wc_bounded_alpha", rec.wc_bounded_alpha(G, alpha, verify_alpha=False), wc, "wc")
    if "w2" in properties:
        expected = oracle.is_w2_oracle(G).answer
        if expected:
            extra["w2_member"] = g6
        for name, fn in _w2_checks(G, wc, alpha).items():
            record(name, _attempt(fn, G), expected, "w2")
    if "relating" in properties:
        for x, y in G.edges():
            got = _attempt(rec.relating_via_shedding, G, x, y)
            if got is not None:
                record("relating_via_shedding", got, oracle.is_relating_oracle(G, x, y).answer, "relating", edge=(x, y))
    return {"counts": counts, "mismatches": mismatches, **extra}


def _graph_source(args):
    fam = family(args.family)
    if args.sample:
        import random

        rng = random.Random(args.seed)
        for _ in range(args.sample):
            n = rng.randint(max(1, args.n_min), args.n_max)
            yield random_graph(n, fam, p=args.p, rng=rng, connected=True)
    else:
        if args.n_max > MAX_EXHAUSTIVE_N:
            raise SizeLimitError(f"exhaustive mode needs --n-max <= {MAX_EXHAUSTIVE_N}; use --sample")
        yield from connected_graphs(args.n_max, fam, n_min=args.n_min)


def _map(fn, items) -> list:
    """``map`` over a bounded process pool; results keep input order."""
    k = workers()
    if k == 1:
        return list(map(fn, items))
    with ProcessPoolExecutor(k) as pool:
        return list(pool.map(fn, items, chunksize=16))


def _cv_job(payload):
    g6, properties = payload
    from .formats import from_graph6

    return crossvalidate_graph(from_graph6(g6), properties)


def crossvalidate(family_name: str, n_max: int, properties, n_min=1, sample=0, seed=0, p=0.3, max_graphs=None) -> dict:
    args = argparse.Namespace(family=family_name, n_max=n_max, n_min=n_min, sample=sample, seed=seed, p=p)
    properties = tuple(properties)
    totals: dict[str, dict[str, int]] = {}
    mismatches = []
    members = []
    graphs = 0
    complete = True
    source = _graph_source(args)
    payloads = []
    for G in source:
        if max_graphs is not None and len(payloads) >= max_graphs:
            complete = False
            break
        payloads.append((to_graph6(G), properties))
    for result in _map(_cv_job, payloads):
        graphs += 1
        for name, (runs, bad) in result["counts"].items():
            slot = totals.setdefault(name, {"checks": 0, "mismatches": 0})
            slot["checks"] += runs
            slot["mismatches"] += bad
        mismatches.extend(result["mismatches"])
        if "w2_member" in result:
            members.append(result["w2_member"])
    report = {
        "command": "crossvalidate",
        "family": family_name,
        "n_min": n_min,
        "n_max": n_max,
        "mode": "sample" if sample else "exhaustive",
        "seed": seed if sample else None,
        "properties": list(properties),
        "graphs": graphs,
        "recognizers": dict(sorted(totals.items())),
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
        "complete": complete,
    }
    if "w2" in properties:
        report["w2_members"] = members
    return report


def cmd_crossvalidate(args) -> int:
    props = PROPERTIES if args.property == "all" else (args.property,)
    try:
        report = crossvalidate(
            args.family, args.n_max, props, args.n_min, args.sample, args.seed, args.p, args.max_graphs
        )
    except SizeLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    _emit(report, args)
    if not args.json and not args.quiet:
        print(f"{report['graphs']} graphs, {report['mismatch_count']} mismatches, complete={report['complete']}")
        for name, t in report["recognizers"].items():
            print(f"  {name:24s} {t['checks']:7d} checks  {t['mismatches']} mismatches")
        if "w2_members" in report:
            print(f"  W2 members: {' '.join(report['w2_members'])}")
    return 0 if report["mismatch_count"] == 0 else 1


# ---------------------------------------------------------------------------
# conjecture search


def conjecture_graph(g6: str) -> dict:
    from .formats import from_graph6

    G = from_graph6(g6)
    wc = oracle.is_well_covered_oracle(G).answer
    w2 = oracle.is_w2_oracle(G).answer
    cond = oracle.w2_alpha_condition(G).answer
    return {"graph6": g6, "well_covered": wc, "w2": w2, "condition": cond}


def conjecture_search(n_max: int, seed: int | None = None, samples: int = 0, n_min: int = 1, p: float = 0.3) -> dict:
    """Compare W2 membership with the local independence condition on every graph."""
    if samples or n_max > 9:
        import random

        rng = random.Random(0 if seed is None else seed)
        count = samples or 1000
        graphs = [
            random_graph(rng.randint(max(1, n_min), n_max), "all", p=p, rng=rng, connected=True)
            for _ in range(count)
        ]
        mode = "sample"
    else:
        graphs = list(connected_graphs(n_max, "all", n_min=n_min))
        mode = "exhaustive"
    results = _map(conjecture_graph, [to_graph6(G) for G in graphs])
    wc_bad = [r["graph6"] for r in results if r["well_covered"] and r["w2"] != r["condition"]]
    other_bad = [r["graph6"] for r in results if not r["well_covered"] and r["w2"] != r["condition"]]
    return {
        "command": "conjecture",
        "mode": mode,
        "n_min": n_min,
        "n_max": n_max,
        "seed": seed if mode == "sample" else None,
        "graphs": len(results),
        "well_covered": sum(r["well_covered"] for r in results),
        "w2": sum(r["w2"] for r in results),
        "well_covered_disagreements": wc_bad,
        "counterexample_candidates": other_bad,
    }


def cmd_conjecture(args) -> int:
    report = conjecture_search(args.n_max, args.seed, args.samples, args.n_min, args.p)
    _emit(report, args)
    if not args.json and not args.quiet:
        print(
            f"{report['graphs']} graphs ({report['mode']}), {report['well_covered']} well-covered, "
            f"{report['w2']} in W2; disagreements on well-covered graphs: "
            f"{len(report['well_covered_disagreements'])}; counterexample candidates: "
            f"{len(report['counterexample_candidates'])}"
        )
        for g6 in report["counterexample_candidates"]:
            print(f"  {g6}")
    return 0 if not report["well_covered_disagreements"] else 1


# ---------------------------------------------------------------------------
# generation


def cmd_generate(args) -> int:
    import random

    try:
        if args.exhaustive:
            graphs = list(connected_graphs(args.n, args.family, n_min=args.n))
        else:
            rng = random.Random(args.seed)
            graphs = [
                random_graph(args.n, args.family, p=args.p, rng=rng, connected=args.connected)
                for _ in range(args.count)
            ]
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        ext = {"graph6": "g6", "edge-list": "txt", "dimacs-graph": "dimacs"}[args.format]
        for i, G in enumerate(graphs):
            (out / f"{args.family}_n{args.n}_{i:04d}.{ext}").write_text(format_graph(G, args.format))
    else:
        for G in graphs:
            sys.stdout.write(format_graph(G, args.format))
    return 0


# ---------------------------------------------------------------------------


def _add_output_flags(p):
    p.add_argument("--json", action="store_true", help="print the JSON report on stdout")
    p.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wellcov", description="Well-covered, W2 and shedding-vertex recognition.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide a property of one graph")
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--vertex", help="vertex id or label (property shed)")
    p.add_argument("--edge", nargs=2, metavar=("U", "W"), help="edge endpoints (property relating)")
    p.add_argument("--k", type=int, help="independence number for bounded-alpha (computed if omitted)")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (makes reports run-dependent)")
    _add_output_flags(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reduce", help="build the non-shedding gadget of a DIMACS CNF formula")
    p.add_argument("input", help="CNF file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, default="edge-list")
    p.add_argument("-o", "--output", help="graph output file (default stdout)")
    p.add_argument("--roles", help="JSON vertex-role map (default <output>.roles.json)")
    p.add_argument("--dot", help="also write a DOT drawing")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("crossvalidate", help="compare recognizers with the oracles over a graph family")
    p.add_argument("--family", choices=sorted(FAMILIES), default="all")
    p.add_argument("--property", choices=PROPERTIES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--sample", type=int, default=0, metavar="COUNT", help="random sampling instead of enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3, help="edge probability when sampling")
    p.add_argument("--max-graphs", type=int, help="stop after this many graphs (report flagged incomplete)")
    _add_output_flags(p)
    p.set_defaults(func=cmd_crossvalidate)

    p = sub.add_parser("conjecture", help="search for graphs separating W2 from the local independence condition")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3)
    _add_output_flags(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("generate", help="write random or all connected graphs of a family")
    p.add_argument("--family", choices=sorted(FAMILIES), default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--exhaustive", action="store_true", help="all connected graphs on n vertices")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--output-dir")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
