"""Command-line entry point: ``python -m thompsonf <subcommand> ...``.

Numbers are read and written in exact text form (``3/8``, ``1/4+1/2*sqrt2``).
Reports are JSON. ``--output`` writes to a file instead of stdout; a
relative output path is placed under ``$THOMPSONF_OUTPUT_DIR`` when that
variable is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .amenability import boundary, doubling_check
from .exact import parse_dyadic
from .gamma_s import (
    DEFAULT_DEPTH,
    DEFAULT_NMAX,
    build_gamma_s,
    check_structure,
    gamma_s_doubling_witness,
)
from .graph import FrontierError, LabeledGraph
from .haar import HaarIndex, apply_pi, hilbert_schreier_graph, matrix_slice
from .monoid import Word, word_to_forest, word_to_plhomeo
from .plhomeo import PLHomeo, compose, evaluate, generator
from .schreier import (
    dyadic_schreier_graph,
    find_transporter,
    folner_ratio,
    stab_transporter,
    word_length_lower_bound,
)
from .verify import REGISTRY, run_all

OUTPUT_DIR_ENV = "THOMPSONF_OUTPUT_DIR"


class UsageError(Exception):
    pass


def _element(text: str) -> PLHomeo:
    """A word like ``"x0 x1^-1"`` or a breakpoint list like ``"[(0, 0), (1/2, 1/4), ...]"``."""
    text = text.strip()
    if text.startswith("["):
        return PLHomeo.from_text(text)
    return word_to_plhomeo(Word.parse(text))


def _generator_index(text: str) -> int:
    t = text.strip()
    if not (t.startswith("x") and t[1:].isdigit()):
        raise UsageError(f"expected a generator like x0 or x1, got {text!r}")
    return int(t[1:])


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        path = Path(args.output)
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not path.is_absolute():
            path = Path(base) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def _graph_out(args, g: LabeledGraph, name: str) -> None:
    _emit(args, g.to_dot(name) if args.format == "dot" else g.to_json(indent=1))


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _load_graph(path: str) -> LabeledGraph:
    return LabeledGraph.from_json(Path(path).read_text())


def _load_set(path: str) -> List[str]:
    text = Path(path).read_text().strip()
    if text.startswith("["):
        return [str(x) for x in json.loads(text)]
    return [line.strip() for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    f = _element(args.word)
    _emit(args, str(evaluate(f, parse_dyadic(args.at))))
    return 0


def cmd_compose(args) -> int:
    f = _element(args.element[0])
    for text in args.element[1:]:
        f = compose(f, _element(text))
    _emit(args, f.to_text())
    return 0


def cmd_forest(args) -> int:
    forest = word_to_forest(Word.parse(args.word))
    if args.format == "json":
        _emit(args, _json({"word": args.word, "forest": forest.to_text(), "carets": forest.caret_count()}))
    else:
        _emit(args, forest.to_text())
    return 0


def cmd_schreier(args) -> int:
    g = dyadic_schreier_graph(parse_dyadic(args.seed), depth=args.depth, max_exp=args.max_exp)
    _graph_out(args, g, "schreier")
    return 0


def cmd_folner(args) -> int:
    _emit(args, str(folner_ratio(args.m, args.tuple_size)))
    return 0


def cmd_transporter(args) -> int:
    a, b = parse_dyadic(args.source), parse_dyadic(args.target)
    if args.stab:
        _emit(args, stab_transporter(a, b).to_text())
    else:
        w = find_transporter(a, b)
        _emit(args, str(w) if len(w) else "e")
    return 0


def cmd_length_bound(args) -> int:
    f = _element(args.word)
    g = dyadic_schreier_graph(max_exp=args.max_exp) if args.max_exp is not None else None
    _emit(args, str(word_length_lower_bound(f, g)))
    return 0


def cmd_haar(args) -> int:
    if args.haar_cmd == "apply":
        k = _generator_index(args.gen)
        h = HaarIndex.parse(args.index)
        c = apply_pi(generator(k), h)
        if args.format == "json":
            _emit(args, _json({"generator": f"x{k}", "input": h.to_text(), "image": c.to_json_dict()}))
        else:
            _emit(args, "\n".join(f"{out.to_text()}\t{coef}" for out, coef in c.items()))
    elif args.haar_cmd == "graph":
        _graph_out(args, hilbert_schreier_graph(args.imax), "haar")
    else:
        k = _generator_index(args.gen)
        _emit(args, _json(matrix_slice(k, args.imax)))
    return 0


def cmd_gamma_s(args) -> int:
    g = build_gamma_s(args.nmax, args.depth)
    if args.action == "doubling":
        rep = gamma_s_doubling_witness(g, samples=args.samples, seed=args.seed)
    elif args.action == "structure":
        rep = check_structure(g)
    else:
        _graph_out(args, g, "gamma_s")
        return 0
    _emit(args, rep.to_json())
    return 0 if rep.passed else 1


def cmd_cheeger(args) -> int:
    g = _load_graph(args.graph)
    s = _load_set(args.set)
    missing = [v for v in s if v not in g]
    if missing:
        raise UsageError(f"vertices not in the graph: {missing[:5]}")
    bd = boundary(g, s)
    _emit(args, _json({
        "set_size": len(set(s)),
        "boundary_size": len(bd),
        "ratio": str(Fraction(len(bd), len(set(s)))),
        "boundary": sorted(bd),
    }))
    return 0


def cmd_doubling(args) -> int:
    g = _load_graph(args.graph)
    fw, gw = Word.parse(args.f_word), Word.parse(args.g_word)
    if args.region:
        region = _load_set(args.region)
    else:
        region = []
        for v in g.vertices:
            if not g.neighborhood_known(v) or not all(g.neighborhood_known(u) for u in g.neighbors(v)):
                continue
            try:
                g.follow(v, fw)
                g.follow(v, gw)
            except (KeyError, ValueError, FrontierError):
                continue
            region.append(v)
    rep = doubling_check(g, args.k, lambda v: g.follow(v, fw), lambda v: g.follow(v, gw), region,
                         samples=args.samples, seed=args.seed)
    _emit(args, rep.to_json())
    return 0 if rep.passed else 1


def cmd_verify_all(args) -> int:
    only = set(args.only) if args.only else None
    if only:
        unknown = only - {c.name for c in REGISTRY}
        if unknown:
            raise UsageError(f"unknown checks: {sorted(unknown)}")

    def progress(name, rep):
        print(rep.summary_line(), file=sys.stderr)

    results = run_all(seed=args.seed, only=only, progress=progress)
    passed = all(r["passed"] for r in results.values())
    summary = {"passed": passed, "seed": args.seed, "reports": results}
    _emit(args, _json(summary))
    return 0 if passed else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    out_only = argparse.ArgumentParser(add_help=False)
    out_only.add_argument("--output", "-o", help="write to this file instead of stdout")
    common = argparse.ArgumentParser(add_help=False, parents=[out_only])
    common.add_argument("--seed", type=int, default=0, help="random seed for sampled reports")

    p = argparse.ArgumentParser(prog="thompsonf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, parents=(common,)):
        sp = sub.add_parser(name, parents=list(parents), help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("eval", cmd_eval, "evaluate an element at a dyadic point")
    sp.add_argument("--word", required=True, help='word ("x0 x1^-1") or breakpoint list')
    sp.add_argument("--at", required=True)

    sp = add("compose", cmd_compose, "multiply elements left to right")
    sp.add_argument("element", nargs="+")

    sp = add("forest", cmd_forest, "forest of a positive word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")

    # here --seed is the base point of the orbit, not a random seed
    sp = add("schreier", cmd_schreier, "Schreier graph on the orbit of a dyadic point", parents=(out_only,))
    sp.add_argument("--seed", default="1/2", help="base point of the orbit")
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--max-exp", type=int, default=None)
    sp.add_argument("--format", choices=["dot", "json"], default="json")

    sp = add("folner", cmd_folner, "Cheeger ratio of the Folner set S_m for n-tuples")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--tuple-size", type=int, required=True)

    sp = add("transporter", cmd_transporter, "geodesic word moving one point to another")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--stab", action="store_true", help="return an element fixing 1/2 instead")

    sp = add("length-bound", cmd_length_bound, "lower bound on word length from point distances")
    sp.add_argument("--word", required=True)
    sp.add_argument("--max-exp", type=int, default=None, help="use a truncated graph instead of searching")

    sp = add("haar", cmd_haar, "action on the Haar basis")
    hsub = sp.add_subparsers(dest="haar_cmd", required=True)
    hp = hsub.add_parser("apply", parents=[common])
    hp.add_argument("--gen", required=True)
    hp.add_argument("--index", required=True, help='"(i,j)" or "const"')
    hp.add_argument("--format", choices=["text", "json"], default="text")
    hp = hsub.add_parser("graph", parents=[common])
    hp.add_argument("--imax", type=int, default=4)
    hp.add_argument("--format", choices=["dot", "json"], default="json")
    hp = hsub.add_parser("matrix", parents=[common])
    hp.add_argument("--gen", required=True)
    hp.add_argument("--imax", type=int, default=3)

    sp = add("gamma-s", cmd_gamma_s, "the induced subgraph on {x_n u}")
    sp.add_argument("action", nargs="?", choices=["graph", "structure", "doubling"], default="graph")
    sp.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--format", choices=["dot", "json"], default="json")

    sp = add("cheeger", cmd_cheeger, "vertex boundary and Cheeger ratio of a set")
    sp.add_argument("--graph", required=True, help="graph JSON as written by the graph commands")
    sp.add_argument("--set", required=True, help="JSON list or one vertex key per line")

    sp = add("doubling", cmd_doubling, "doubling-condition check for two word maps")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--f-word", default="x1 x0")
    sp.add_argument("--g-word", default="x1 x1")
    sp.add_argument("--region", default=None)
    sp.add_argument("--samples", type=int, default=100)

    sp = add("verify-all", cmd_verify_all, "run every verification report")
    sp.add_argument("--only", nargs="*", help="names of checks to run")
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, FrontierError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
