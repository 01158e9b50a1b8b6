"""Command line front end.

Subcommands: gen (emit S(G, t) as edge list or DOT), solve (exact
domination or Roman domination), construct (closed-form labelings),
formula (closed-form values as JSON), verify (cross-check formulas,
solver and constructions over the named families), and sweep (random
connected bases, property checks).

Exit codes: 0 success, 1 a verified property failed, 2 bad input,
3 budget or timeout.  Machine output is JSON lines without timing
fields, so a rerun with the same arguments and seed is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional

from . import constructions, formulas
from .errors import BudgetError, ContractError, SolveTimeout
from .generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_spanning_subgraph,
    star_graph,
)
from .graphs import Graph, format_edge_list, parse_edge_list, to_dot
from .roman import RomanFunction, derived_sets
from .sierpinski import DEFAULT_VERTEX_BUDGET, SierpinskiGraph, build, extreme_vertices
from .solver import brute_force_gamma_r, gamma_exact, gamma_r_exact

BUDGET_ENV = "SIERPDOM_VERTEX_BUDGET"

_FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
}

_ROMAN_COLORS = {0: "white", 1: "lightgrey", 2: "black"}


@dataclass(frozen=True)
class RunConfig:
    """Echo of the arguments that shaped a run, embedded in its output."""

    command: str
    seed: Optional[int] = None
    budget: int = DEFAULT_VERTEX_BUDGET

    def to_dict(self) -> dict:
        d = {"command": self.command, "budget": self.budget}
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def _budget(args) -> int:
    if getattr(args, "budget", None):
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_VERTEX_BUDGET


def _load_base(args) -> Graph:
    if getattr(args, "base", None):
        with open(args.base) as fh:
            return parse_edge_list(fh.read(), name=os.path.basename(args.base))
    if getattr(args, "family", None):
        if args.n is None:
            raise ValueError("--family needs --n")
        return _FAMILIES[args.family](args.n)
    raise ValueError("give either --family with --n or --base FILE")


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    base = _load_base(args)
    budget = _budget(args)
    s = build(base, args.t, budget)
    if args.format == "dot":
        text = to_dot(s.graph, graph_name="S")
    else:
        text = format_edge_list(s.graph)
    _emit(text, args.out)
    if args.meta:
        meta = {
            "config": RunConfig("gen", budget=budget).to_dict(),
            "base_order": base.order,
            "base_size": base.size,
            "depth": s.depth,
            "order": s.order,
            "size": s.graph.size,
            "extreme_vertices": [s.word_label(v) for v in extreme_vertices(s)],
        }
        line = json.dumps(meta, sort_keys=True) + "\n"
        if args.meta == "-":
            sys.stdout.write(line)
        else:
            with open(args.meta, "w") as fh:
                fh.write(line)
    return 0


def _solve_target(args) -> tuple[Graph, Optional[SierpinskiGraph]]:
    budget = _budget(args)
    if args.sierpinski:
        with open(args.sierpinski) as fh:
            base = parse_edge_list(fh.read(), name=os.path.basename(args.sierpinski))
        s = build(base, args.depth or 1, budget)
        return s.graph, s
    if args.input:
        with open(args.input) as fh:
            return parse_edge_list(fh.read(), name=os.path.basename(args.input)), None
    base = _load_base(args)
    if args.depth and args.depth > 1:
        s = build(base, args.depth, budget)
        return s.graph, s
    return base, None


def _cmd_solve(args) -> int:
    g, s = _solve_target(args)
    if args.domination:
        cert = gamma_exact(g, time_limit=args.timeout)
    elif args.oracle:
        cert = brute_force_gamma_r(g)
    else:
        cert = gamma_r_exact(g, time_limit=args.timeout)
    if args.json:
        _emit(cert.to_json(graph=g) + "\n", args.out)
    else:
        kind = "domination number" if cert.kind == "domination" else "Roman domination number"
        lines = [f"{g.name or 'graph'}: {kind} = {cert.value}"]
        if cert.kind == "domination":
            names = [s.word_label(v) if s else str(v) for v in sorted(cert.witness)]
            lines.append(f"  witness set: {{{', '.join(names)}}}")
        else:
            f = cert.witness
            twos = [s.word_label(v) if s else str(v) for v in sorted(f.twos)]
            ones = [s.word_label(v) if s else str(v) for v in sorted(f.ones)]
            lines.append(f"  label 2 on: {{{', '.join(twos)}}}")
            lines.append(f"  label 1 on: {{{', '.join(ones)}}}")
        lines.append(f"  nodes explored: {cert.nodes}, elapsed: {cert.elapsed:.3f}s")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_construct(args) -> int:
    budget = _budget(args)
    if args.family == "theorem":
        base = _load_base(args)
        if not args.function:
            raise ValueError("theorem construction needs --function FILE with a base labeling")
        with open(args.function) as fh:
            f = RomanFunction.from_json(fh.read())
        cert = gamma_r_exact(base)
        if cert.value != f.weight:
            raise ContractError(
                f"supplied labeling has weight {f.weight}, optimal is {cert.value}"
            )
        report = constructions.theorem_upper_bound_construction(f, base, args.t, cert, budget)
        s = build(base, args.t, budget)
    elif args.n is None:
        raise ValueError(f"--family {args.family} needs --n")
    elif args.family == "path":
        report = constructions.path_construction(args.n, args.t, budget)
        s = build(path_graph(args.n), args.t, budget)
    elif args.family == "cycle":
        report = constructions.cycle_construction(args.n, args.t, budget)
        s = build(cycle_graph(args.n), args.t, budget)
    else:
        report = constructions.complete_graph_construction(args.n, args.t, budget)
        s = build(complete_graph(args.n), args.t, budget)
    if args.dot:
        colors = {v: _ROMAN_COLORS[x] for v, x in enumerate(report.function.labels)}
        with open(args.dot, "w") as fh:
            fh.write(to_dot(s.graph, graph_name="S", colors=colors))
    _emit(report.to_json(sierpinski=s if args.words else None) + "\n", args.out)
    return 0


def _cmd_formula(args) -> int:
    n, t = args.n, args.t
    name = args.name
    if name == "path-cycle":
        doc = {"value": formulas.gamma_r_path_cycle(n)}
    elif name == "path":
        doc = {"value": formulas.gamma_r_sierpinski_path(n, t)}
    elif name == "cycle":
        doc = formulas.gamma_r_sierpinski_cycle(n, t).to_dict()
    elif name == "complete-gamma":
        doc = {"value": formulas.gamma_knt(n, t)}
    elif name == "complete-roman-upper":
        doc = {"value": formulas.gamma_r_knt_upper(n, t)}
    elif name == "universal":
        doc = {"value": formulas.universal_vertex_value(n, t)}
    elif name == "min-degree-lower":
        doc = {"value": formulas.min_degree_lower_bound(n, t)}
    else:
        doc = formulas.knt_lower_bound_for_any_graph(n, t).to_dict()
    doc.update({"formula": name, "n": n, "t": t})
    _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return 0


def _universal_examples() -> list[Graph]:
    plus = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)], name="star4+e")
    return [star_graph(4), plus, star_graph(5)]


def _verify_rows(args):
    budget = _budget(args)
    families = set(args.families.split(",")) if args.families else {
        "paths",
        "cycles",
        "complete",
        "universal",
        "perfect-codes",
    }
    timeout = args.timeout

    def solve_value(g):
        return gamma_r_exact(g, time_limit=timeout).value

    if "paths" in families:
        for n in range(3, min(args.max_n, 6) + 1):
            expect = formulas.gamma_r_sierpinski_path(n, 2)
            row = {"family": "paths", "instance": f"S(P{n},2)", "expected": expect}
            try:
                base = path_graph(n)
                got = solve_value(build(base, 2, budget).graph)
                if n % 3 == 2:
                    rep = constructions.path_construction(n, 2, budget)
                else:
                    cert = gamma_r_exact(base)
                    rep = constructions.theorem_upper_bound_construction(
                        cert.witness, base, 2, cert, budget
                    )
                row.update(
                    solver=got,
                    construction=rep.actual_weight,
                    construction_valid=rep.valid,
                    status="pass"
                    if got == expect and rep.valid and rep.actual_weight == expect
                    else "fail",
                )
            except SolveTimeout:
                row["status"] = "timeout"
            yield row
    if "cycles" in families:
        for n in range(4, min(args.max_n, 6) + 1):
            vb = formulas.gamma_r_sierpinski_cycle(n, 2)
            row = {
                "family": "cycles",
                "instance": f"S(C{n},2)",
                "expected": vb.to_dict(),
            }
            try:
                got = solve_value(build(cycle_graph(n), 2, budget).graph)
                rep = constructions.cycle_construction(n, 2, budget)
                ok = (
                    vb.lower <= got <= vb.upper
                    and rep.valid
                    and rep.actual_weight == vb.upper
                )
                row.update(
                    solver=got,
                    construction=rep.actual_weight,
                    construction_valid=rep.valid,
                    status="pass" if ok else "fail",
                )
            except SolveTimeout:
                row["status"] = "timeout"
            yield row
    if "complete" in families:
        for t in range(1, min(args.max_t, 3) + 1):
            n = 3
            row = {"family": "complete", "instance": f"S(K{n},{t})"}
            try:
                g = build(complete_graph(n), t, budget).graph
                dom = gamma_exact(g, time_limit=timeout).value
                rom = gamma_r_exact(g, time_limit=timeout).value
                rep = constructions.complete_graph_construction(n, t, budget)
                expect_dom = formulas.gamma_knt(n, t)
                upper = formulas.gamma_r_knt_upper(n, t)
                ok = dom == expect_dom and rom <= upper and rep.valid and rep.actual_weight == upper
                row.update(
                    expected={"gamma": expect_dom, "roman_upper": upper},
                    solver={"gamma": dom, "roman": rom},
                    construction=rep.actual_weight,
                    construction_valid=rep.valid,
                    status="pass" if ok else "fail",
                )
            except SolveTimeout:
                row["status"] = "timeout"
            yield row
    if "universal" in families:
        for g in _universal_examples():
            expect = formulas.universal_vertex_value(g.order, 2)
            row = {"family": "universal", "instance": f"S({g.name},2)", "expected": expect}
            try:
                got = solve_value(build(g, 2, budget).graph)
                cert = gamma_r_exact(g)
                rep = constructions.theorem_upper_bound_construction(
                    cert.witness, g, 2, cert, budget
                )
                ok = got == expect and rep.valid and rep.actual_weight == expect
                row.update(
                    solver=got,
                    construction=rep.actual_weight,
                    construction_valid=rep.valid,
                    status="pass" if ok else "fail",
                )
            except SolveTimeout:
                row["status"] = "timeout"
            yield row
    if "perfect-codes" in families:
        for n, t in ((3, 2), (3, 3), (2, 2)):
            row = {
                "family": "perfect-codes",
                "instance": f"S(K{n},{t})",
                "expected": formulas.gamma_knt(n, t),
            }
            try:
                code = constructions.perfect_code_knt(n, t, budget)
                row.update(size=len(code), status="pass" if len(code) == row["expected"] else "fail")
            except SolveTimeout:
                row["status"] = "timeout"
            yield row


def _cmd_verify(args) -> int:
    rows = list(_verify_rows(args))
    lines = [json.dumps(r, sort_keys=True) for r in rows]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    width = max(len(r["instance"]) for r in rows) if rows else 10
    print(f"{'instance':<{width}}  {'family':<14}{'status'}")
    for r in rows:
        print(f"{r['instance']:<{width}}  {r['family']:<14}{r['status']}")
    statuses = {r["status"] for r in rows}
    if "fail" in statuses:
        return 1
    if "timeout" in statuses:
        return 3
    return 0


def _cmd_sweep(args) -> int:
    budget = _budget(args)
    rng = random.Random(args.seed)
    rows = []
    failures = 0
    for i in range(args.count):
        n = rng.randint(2, args.max_n)
        g = random_connected_graph(n, rng, args.extra_prob)
        h = random_spanning_subgraph(g, rng)
        dom = gamma_exact(g)
        rom = gamma_r_exact(g)
        rom_h = gamma_r_exact(h)
        checks = {
            "sandwich": dom.value <= rom.value <= 2 * dom.value,
            "spanning-monotone": rom.value <= rom_h.value,
        }
        if args.full and args.t >= 2:
            s = build(g, args.t, budget)
            s_rom = gamma_r_exact(s.graph)
            bound = constructions.bound_value(rom.witness, g, args.t)
            lower = formulas.knt_lower_bound_for_any_graph(n, args.t).value
            checks["product-bound"] = s_rom.value <= bound
            checks["complete-base-lower"] = lower <= s_rom.value
        ok = all(checks.values())
        failures += 0 if ok else 1
        rows.append(
            {
                "config": RunConfig("sweep", seed=args.seed, budget=budget).to_dict(),
                "index": i,
                "order": n,
                "edges": g.size,
                "gamma": dom.value,
                "gamma_r": rom.value,
                "checks": checks,
                "status": "pass" if ok else "fail",
            }
        )
    lines = [json.dumps(r, sort_keys=True) for r in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    passed = args.count - failures
    print(f"sweep: {passed}/{args.count} instances passed", file=sys.stderr)
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sierpdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_budget(sp):
        sp.add_argument("--budget", type=int, help="vertex budget override")

    gen = sub.add_parser("gen", help="emit S(G, t)")
    gen.add_argument("--family", choices=sorted(_FAMILIES))
    gen.add_argument("--n", type=int)
    gen.add_argument("--base", help="edge list file for the base graph")
    gen.add_argument("--t", type=int, default=1)
    gen.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    gen.add_argument("--out")
    gen.add_argument("--meta", help="write a JSON metadata block to FILE, or - for stdout")
    add_budget(gen)
    gen.set_defaults(run=_cmd_gen)

    solve = sub.add_parser("solve", help="exact solve")
    solve.add_argument("--input", help="edge list file to solve directly")
    solve.add_argument("--sierpinski", help="base edge list; solve S(base, --depth)")
    solve.add_argument("--depth", type=int)
    solve.add_argument("--family", choices=sorted(_FAMILIES))
    solve.add_argument("--n", type=int)
    solve.add_argument("--base")
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument("--roman", action="store_true", default=True)
    mode.add_argument("--domination", action="store_true")
    solve.add_argument("--oracle", action="store_true", help="exhaustive reference solver")
    solve.add_argument("--timeout", type=float)
    solve.add_argument("--json", action="store_true")
    solve.add_argument("--out")
    add_budget(solve)
    solve.set_defaults(run=_cmd_solve)

    cons = sub.add_parser("construct", help="closed-form labelings")
    cons.add_argument("--family", choices=("path", "cycle", "complete", "theorem"), required=True)
    cons.add_argument("--n", type=int)
    cons.add_argument("--t", type=int, required=True)
    cons.add_argument("--base", help="base edge list for the theorem construction")
    cons.add_argument("--function", help="base labeling JSON for the theorem construction")
    cons.add_argument("--dot", help="write a colored DOT rendering to FILE")
    cons.add_argument("--words", action="store_true", help="key the labeling by words")
    cons.add_argument("--out")
    add_budget(cons)
    cons.set_defaults(run=_cmd_construct)

    form = sub.add_parser("formula", help="closed-form values as JSON")
    form.add_argument(
        "--name",
        required=True,
        choices=(
            "path-cycle",
            "path",
            "cycle",
            "complete-gamma",
            "complete-roman-upper",
            "universal",
            "min-degree-lower",
            "complete-lower-any",
        ),
    )
    form.add_argument("--n", type=int, required=True)
    form.add_argument("--t", type=int, default=2)
    form.add_argument("--out")
    form.set_defaults(run=_cmd_formula)

    ver = sub.add_parser("verify", help="cross-check formulas, solver and constructions")
    ver.add_argument("--families", help="comma list: paths,cycles,complete,universal,perfect-codes")
    ver.add_argument("--max-n", type=int, default=6)
    ver.add_argument("--max-t", type=int, default=3)
    ver.add_argument("--timeout", type=float, help="per-row solve limit in seconds")
    ver.add_argument("--out", help="write JSON rows to FILE")
    add_budget(ver)
    ver.set_defaults(run=_cmd_verify)

    sw = sub.add_parser("sweep", help="random connected bases, property checks")
    sw.add_argument("--count", type=int, default=20)
    sw.add_argument("--max-n", type=int, default=5)
    sw.add_argument("--t", type=int, default=2)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--extra-prob", type=float, default=0.2)
    sw.add_argument("--full", action="store_true", help="also check the product bounds on S(G, t)")
    sw.add_argument("--out")
    add_budget(sw)
    sw.set_defaults(run=_cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ContractError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetError, SolveTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
