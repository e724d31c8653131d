"""Command line interface.

Exit codes: 0 success, 1 invalid input, 2 a guard set failed verification,
3 an internal invariant broke (the instance is dumped for a bug report).
"""

import argparse
import hashlib
import json
import os
import sys

from .errors import GenerationFailedError, InstanceSyntaxError, InvariantError, PolygonError, TooLargeError
from .formats import dump_instance, emit_result, parse_guards, parse_instance, verification_dict
from .generator import GeneratorConfig, generate
from .geometry import pt
from .pipeline import explain, place_guards
from .polygon import visibility_graph
from .render import render_svg
from .special import find_special_triangle
from .verification import certify, check_guards, min_dominating_oracle

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump_counterexample(poly, exc, directory):
    text = dump_instance(poly)
    name = "counterexample-" + hashlib.sha1(text.encode()).hexdigest()[:12] + ".json"
    path = os.path.join(directory, name)
    with open(path, "w") as fh:
        fh.write(json.dumps({"error": f"{type(exc).__name__}: {exc}",
                             **json.loads(text)}, sort_keys=True) + "\n")
    return path


def _solve(poly, args, find):
    try:
        return place_guards(poly, find=find)
    except InvariantError as exc:
        path = _dump_counterexample(poly, exc, args.dump_dir)
        print(f"internal failure: {type(exc).__name__}: {exc}; instance saved to {path}",
              file=sys.stderr)
        raise SystemExit(EXIT_INTERNAL)


def cmd_solve(args, find):
    poly = parse_instance(_read(args.instance))
    result = _solve(poly, args, find)
    cert = certify(result) if args.verify else None
    _write(args.out, emit_result(result, cert))
    if args.explain:
        sys.stderr.write(explain(result))
    if args.svg:
        gaps = cert.boundary.gaps + cert.holes.gaps if cert else ()
        _write(args.svg, render_svg(poly, result, gaps=gaps))
    if cert is not None and not cert.ok:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args, find):
    poly = parse_instance(_read(args.instance))
    guards, bases = parse_guards(_read(args.guards))
    for g in guards:
        if g not in poly.vertex_ids:
            raise InstanceSyntaxError(f"guard {g!r} is not a vertex of the polygon")
    cert = check_guards(poly, guards, bases)
    _write(args.out, json.dumps(verification_dict(cert), sort_keys=True, indent=2) + "\n")
    return EXIT_OK if cert.ok else EXIT_VERIFY


def cmd_oracle(args, find):
    poly = parse_instance(_read(args.instance))
    best = min_dominating_oracle(visibility_graph(poly), size_limit=args.limit)
    doc = {"size": len(best), "guards": [list(v) for v in best],
           "bound": (poly.n + poly.h) // 3}
    _write(args.out, json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_gen(args, find):
    cfg = GeneratorConfig(seed=args.seed, outer_vertices=args.outer, holes=args.holes,
                          hole_vertices=args.hole_vertices, coordinate_range=args.range)
    _write(args.out, dump_instance(generate(cfg)))
    return EXIT_OK


def cmd_render(args, find):
    poly = parse_instance(_read(args.instance))
    guards = triangles = None
    if args.result:
        text = _read(args.result)
        guards, _ = parse_guards(text)
        doc = json.loads(text)
        if "certificate" in doc:
            triangles = [tuple(pt(*v["point"]) for v in [c["apex"]] + c["base_edge"])
                         for c in doc["certificate"]["cuts"]]
    _write(args.out, render_svg(poly, guards=guards, triangles=triangles))
    return EXIT_OK


def _seed_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected A..B")
    return range(int(lo), int(hi) + 1)


def cmd_batch(args, find):
    status = EXIT_OK
    for seed in args.seeds:
        cfg = GeneratorConfig(seed=seed, outer_vertices=args.outer, holes=args.holes,
                              hole_vertices=args.hole_vertices, coordinate_range=args.range)
        poly = generate(cfg)
        result = _solve(poly, args, find)
        cert = certify(result)
        print(f"seed={seed} n={poly.n} h={poly.h} guards={len(result.guards)} "
              f"bound={result.bound} dominating={cert.dominating} "
              f"outer_gaps={len(cert.boundary.gaps)} hole_gaps={len(cert.holes.gaps)} "
              f"{'ok' if cert.ok else 'FAIL'}")
        if not cert.ok:
            _dump_counterexample(poly, RuntimeError("verification failed"), args.dump_dir)
            status = EXIT_VERIFY
    return status


def build_parser():
    parser = argparse.ArgumentParser(prog="vertexguards", description=__doc__.splitlines()[0])
    parser.add_argument("--dump-dir", default=".", help="where counterexample files go")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="place guards on an instance")
    p.add_argument("instance")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--explain", action="store_true", help="print the certificate trace to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a guard set against an instance")
    p.add_argument("instance")
    p.add_argument("guards")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="minimum dominating set by exhaustive search")
    p.add_argument("instance")
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    def gen_args(p, single=True):
        if single:
            p.add_argument("--seed", type=int, required=True)
        p.add_argument("--outer", type=int, required=True)
        p.add_argument("--holes", type=int, required=True)
        p.add_argument("--hole-vertices", type=int, default=3)
        p.add_argument("--range", type=int, default=200)

    p = sub.add_parser("gen", help="generate a random instance")
    gen_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw an instance (and a result) as SVG")
    p.add_argument("instance")
    p.add_argument("result", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("batch", help="solve and verify a range of generated instances")
    p.add_argument("--seeds", type=_seed_range, required=True)
    gen_args(p, single=False)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None, find=find_special_triangle) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, find)
    except SystemExit as exc:
        return exc.code
    except (PolygonError, InstanceSyntaxError, TooLargeError, GenerationFailedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
