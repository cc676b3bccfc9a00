"""Command-line front end.

Exit codes: 0 ok, 1 other error, 2 bad input or missing file, 3 budget
exceeded, 4 solver or generator precondition violated. Errors also print one
``error=<kind> ...`` line on stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path
from typing import Optional

from . import exact, io
from .approx import approx_solve
from .core import EMPTY, ValidationError, XwordError, classify_graph, evaluate, grid_graph
from .treewidth import TooLargeForExact, tree_decomposition

EXIT_OK, EXIT_OTHER, EXIT_INPUT, EXIT_BUDGET, EXIT_PRECONDITION = 0, 1, 2, 3, 4

GEN_KINDS = ("indset", "3partition", "x1sat", "sparse", "ulc", "path", "random")


class InputMissing(XwordError):
    pass


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _exit_code(e: Exception) -> int:
    from .generators import GeneratorError

    if isinstance(e, (exact.BudgetExceeded, TooLargeForExact)):
        return EXIT_BUDGET
    if isinstance(e, (exact.PreconditionViolated, GeneratorError)):
        return EXIT_PRECONDITION
    if isinstance(e, (io.ParseError, ValidationError, InputMissing, XwordError, ValueError)):
        return EXIT_INPUT
    return EXIT_OTHER


def _error_line(e: Exception) -> str:
    parts = [f"error={type(e).__name__}"]
    line = getattr(e, "line", None)
    if line is not None:
        parts.append(f"line={line}")
    msg = e.args[0] if e.args and not isinstance(e, OSError) else str(e)
    parts.append("message=" + str(msg).replace("\n", " "))
    return " ".join(parts)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.is_file():
        raise InputMissing(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")


def _load(path: str):
    return io.parse_instance(_read(path))


def _summary(instance, a, algo: str, candidates: int) -> str:
    ev = evaluate(instance, a)
    complete = ev.valid and all(w is not EMPTY for w in a.values())
    return (f"weight={ev.weight} valid={_bool(ev.valid)} complete={_bool(complete)} "
            f"algo={algo} candidates={candidates}")


# ------------------------------------------------------------------ solve


def run_solve(instance, algo: str, mode: str, budget: Optional[int], jobs: int):
    """Returns (assignment, algo name, candidate count)."""
    if mode == "opt":
        res = exact.solve(instance, algo, budget=budget, jobs=jobs)
        return res.best_assignment, res.algo, res.candidates
    name = "search" if algo == "auto" else algo
    a, stats = exact.decide_with_witness(instance, name, budget=budget, jobs=jobs)
    count = stats.get("candidates", stats.get("nodes", 0)) + stats.get("fallback_nodes", 0)
    if a is None:
        a = instance.empty_assignment()
    return a, name, count


def cmd_solve(args) -> int:
    inst = _load(args.input)
    a, algo, count = run_solve(inst, args.algo, args.mode, args.budget, args.jobs)
    if args.output:
        _write(args.output, io.write_solution(a, inst))
    if args.render:
        print(io.render(inst, a))
    print(_summary(inst, a, algo, count))
    return EXIT_OK


def cmd_eval(args) -> int:
    inst = _load(args.input)
    a = io.parse_solution(_read(args.solution), inst)
    ev = evaluate(inst, a)
    complete = ev.valid and all(w is not EMPTY for w in a.values())
    line = f"weight={ev.weight} valid={_bool(ev.valid)} complete={_bool(complete)}"
    if not ev.valid:
        line += " reason=" + (ev.reason or "").replace(" ", "_")
    if args.render and ev.valid:
        print(io.render(inst, a))
    print(line)
    return EXIT_OK


def cmd_graph(args) -> int:
    inst = _load(args.input)
    g = grid_graph(inst.grid)
    cls = classify_graph(g)
    td = tree_decomposition(g, args.method)
    print(f"slots={len(g.vertices)} shared={len(g.edges)} components={len(cls.components)}")
    print("degrees=" + ",".join(f"{v}:{g.degree(v)}" for v in g.vertices))
    print(f"max_degree={cls.max_degree}")
    print(f"is_matching={_bool(cls.is_matching)}")
    print(f"is_union_of_stars={_bool(cls.is_union_of_stars)}")
    print(f"width={td.width} method={args.method}")
    print("vertex_cover=" + ",".join(cls.vertex_cover_hint))
    return EXIT_OK


def cmd_approx(args) -> int:
    inst = _load(args.input)
    res, cert = approx_solve(inst, args.epsilon, budget=args.budget, jobs=args.jobs)
    if args.output:
        _write(args.output, io.write_solution(res.best_assignment, inst))
    print(f"weight={res.best_weight} bound={float(cert.bound):.4f} bound_exact={cert.bound} "
          f"epsilon={cert.epsilon} k_v={cert.k_v} r_v={cert.r_v} k_h={cert.k_h} r_h={cert.r_h} "
          f"candidates={res.candidates}")
    return EXIT_OK


# -------------------------------------------------------------------- gen


def generate(kind: str, side: Optional[str], args) -> str:
    """Instance file text for one generator run."""
    from . import corpus, generators as gens

    if kind == "random":
        inst = corpus.random_instance(args.seed, reuse=not args.noreuse_variant)
        return io.write_instance(inst, ["generator random", f"param seed={args.seed}"])
    if side is None:
        raise InputMissing(f"gen {kind} needs a side input")
    if kind == "path":
        try:
            m = int(side)
        except ValueError:
            raise InputMissing(f"gen path expects the dictionary size m, got {side!r}") from None
        return io.write_instance(corpus.path_instance(m), ["generator path", f"param m={m}"])
    text = _read(side)
    if kind == "indset":
        g = gens.parse_graph(text)
        k = args.k if args.k is not None else g.k
        if k is None:
            raise InputMissing("indset needs --k or a 'k' line in the graph file")
        return gens.gen_from_independent_set(g, k, noreuse_variant=args.noreuse_variant).text()
    if kind == "3partition":
        return gens.gen_from_three_partition(gens.parse_int_list(text)).text()
    if kind == "x1sat":
        return gens.gen_from_x1sat(gens.restrict_sat(gens.parse_dimacs(text))).text()
    if kind == "sparse":
        p = gens.sparse_partition(gens.parse_dimacs(text), epsilon=args.epsilon, seed=args.seed, C=args.C)
        branches = gens.sparse_branches(p)
        if not branches:
            raise gens.GeneratorError("every branch falsifies a clause; the formula is unsatisfiable")
        if not 0 <= args.branch < len(branches):
            raise InputMissing(f"--branch must lie in 0..{len(branches) - 1}")
        gen = gens.gen_from_sparse_sat(branches[args.branch], budget=args.budget)
        gen.params.update(branches=len(branches), branch=args.branch, seed=args.seed)
        return gen.text()
    if kind == "ulc":
        return gens.gen_from_ulc(gens.parse_ulc(text)).text()
    raise InputMissing(f"unknown generator {kind!r}")


def cmd_gen(args) -> int:
    _write(args.output, generate(args.kind, args.side_input, args))
    return EXIT_OK


# ------------------------------------------------------------------ bench

_PATH_NAME = re.compile(r"path_m(\d+)\.xw$")


def bench(corpus_dir: Path, repeat: int, algo: str = "auto", budget: Optional[int] = None,
          jobs: int = 1) -> list[dict]:
    if not corpus_dir.is_dir():
        raise InputMissing(f"no such corpus directory: {corpus_dir}")
    rows = []
    for path in sorted(corpus_dir.glob("*.xw")):
        inst = io.parse_instance(path.read_text(encoding="utf-8"))
        times, first = [], None
        for _ in range(repeat):
            t0 = time.perf_counter()
            res = exact.solve(inst, algo, budget=budget, jobs=jobs)
            times.append(time.perf_counter() - t0)
            if first is None:
                first = res
            elif (res.candidates, res.best_weight) != (first.candidates, first.best_weight):
                raise AssertionError(f"{path.name}: counts differ between repeats")
        rows.append({
            "instance": path.name,
            "algo": first.algo,
            "slots": len(inst.grid.slots),
            "words": len(inst.dictionary),
            "shared": len(inst.grid.shared),
            "weight": first.best_weight,
            "candidates": first.candidates,
            "times": times,
        })
    return rows


def cmd_bench(args) -> int:
    from . import report

    if args.repeat < 1:
        raise InputMissing("--repeat must be at least 1")
    rows = bench(Path(args.corpus), args.repeat, args.algo, args.budget, args.jobs)
    _write(args.output, report.write_table(rows, args.repeat))
    figure = args.figure
    if figure is None and args.output and args.output != "-":
        figure = str(Path(args.output).with_suffix(".png"))
    if figure:
        report.plot_bench(rows, Path(figure))
        ms = [_PATH_NAME.search(r["instance"]) for r in rows]
        if rows and all(ms):
            growth = Path(figure).with_name(Path(figure).stem + "_growth.png")
            report.plot_growth([int(x.group(1)) for x in ms], [r["candidates"] for r in rows], growth)
    return EXIT_OK


# ----------------------------------------------------------------- parser


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xword", description="Crossword fill solvers and generators.")
    sub = ap.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--budget", type=_positive, default=None,
                       help="candidate budget (default: XWORD_BUDGET or 10^7)")
        p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", help="solution file to write")
    p.add_argument("--algo", choices=("auto",) + exact.ALGOS, default="auto")
    p.add_argument("--mode", choices=("dec", "opt"), default="opt")
    p.add_argument("--render", action="store_true", help="print the filled grid")
    solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", help="score a solution file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-s", "--solution", required=True)
    p.add_argument("--render", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("graph", help="describe the grid graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--method", choices=("minfill", "mindegree", "exact_small"), default="minfill")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("approx", help="run the grouped approximation")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--epsilon", required=True)
    solver_flags(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("gen", help="generate an instance from a source problem")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("side_input", nargs="?", help="source-problem file (for path: the dictionary size m)")
    p.add_argument("-o", "--output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=None, help="independent set size")
    p.add_argument("--noreuse-variant", action="store_true",
                   help="indset: no-reuse construction; random: no-reuse mode")
    p.add_argument("--epsilon", type=float, default=0.5, help="sparse: deletion parameter")
    p.add_argument("--C", type=float, default=None, help="sparse: colouring constant")
    p.add_argument("--branch", type=int, default=0, help="sparse: which substitution branch to emit")
    p.add_argument("--budget", type=_positive, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solvers over a directory of instances")
    p.add_argument("--corpus", required=True)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--algo", choices=("auto",) + exact.ALGOS, default="auto")
    p.add_argument("-o", "--output", help="TSV file (default stdout)")
    p.add_argument("--figure", help="PNG file (default: next to the TSV)")
    solver_flags(p)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (XwordError, ValueError, OSError) as e:
        print(_error_line(e), file=sys.stderr)
        return _exit_code(e) if not isinstance(e, OSError) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
