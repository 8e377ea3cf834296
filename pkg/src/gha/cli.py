"""Command-line surface tying the solvers, generators, and checks together.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 resource cap exceeded.  Diagnostics go to stderr; data goes to stdout or
the --out file.  Every randomized subcommand takes --seed and is
reproducible under it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import approx, bench, exact, gadgets, randgraph, repunit, serialize, verify
from .core import HouseValues
from .errors import GhaError, TooLargeError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_TOO_LARGE = 3


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_instance(path: str):
    return serialize.instance_from_json(serialize.load_json(path))


def cmd_solve(args) -> int:
    instance = _load_instance(args.instance)
    if args.solver == "bruteforce":
        result = exact.solve_exact_bruteforce(instance, cap=args.cap)
    else:
        result = exact.solve_exact_dp(instance, cap=args.cap)
    doc = {
        "optimal_envy": str(result.optimal_envy),
        "assignment": list(result.witness.assignment),
        "states_explored": result.states_explored,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_approx(args) -> int:
    if args.algo == "inorder":
        if args.depth is None or args.values is None:
            raise GhaError("inorder needs --depth and --values")
        raw = serialize.load_json(args.values)
        houses = serialize.values_from_strings(raw["values"])
        alloc, cert = approx.inorder_allocation(args.depth, houses)
    else:
        if args.instance is None:
            raise GhaError(f"{args.algo} needs --instance")
        instance = _load_instance(args.instance)
        if args.algo == "trickle":
            alloc, cert = approx.trickle_down(instance.graph, instance.houses)
        else:
            strategy = approx.LayoutStrategy(args.strategy)
            layout = approx.heuristic_layout(instance.graph, strategy)
            alloc, cert = approx.layout_allocation(instance, layout)
    doc = {
        "assignment": list(alloc.assignment),
        "achieved_envy": str(cert.achieved_envy),
        "bound_name": cert.bound_name,
        "guarantee_bound": str(cert.guarantee_bound),
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family == "flower":
        if args.n is None or args.k is None:
            raise GhaError("flower needs --n and --k")
        flower = gadgets.build_flower(args.n, args.k)
        from .core import Instance

        instance = Instance.create(
            flower.tree, HouseValues.from_iterable([0] * flower.n)
        )
        roles = tuple(
            "pistil" if v == flower.pistil
            else ("petal-root" if v in flower.petal_roots else "petal")
            for v in range(flower.n)
        )
    else:
        if args.tp is None:
            raise GhaError(f"{args.family} needs --tp")
        tp = serialize.tp_from_json(serialize.load_json(args.tp))
        if args.family == "depth2":
            gadget = gadgets.gen_depth2_tree(tp, args.C)
        elif args.family == "clique":
            gadget = gadgets.gen_clique(tp, args.C)
        elif args.family == "grid":
            gadget = gadgets.gen_grid(tp, args.C)
        elif args.family == "expander":
            gadget = gadgets.gen_expander(tp, args.C, seed=args.seed)
        else:
            gadget = gadgets.gen_bounded_tree_instance(
                tp, allow_desk_scale=args.desk_scale
            )
        instance = gadget.instance
        roles = gadget.role_labels
    instance_doc = serialize.instance_to_json(instance)
    roles_doc = {"roles": list(roles)}
    if args.out:
        serialize.dump_json(instance_doc, args.out + ".json")
        serialize.dump_json(roles_doc, args.out + ".roles.json")
        print(f"wrote {args.out}.json and {args.out}.roles.json", file=sys.stderr)
    else:
        sys.stdout.write(
            json.dumps({"instance": instance_doc, "roles": list(roles)}, indent=2) + "\n"
        )
    return EXIT_OK


def cmd_elegance(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "elegance", "witness_terms", "runs"])
    for m in range(1, args.upto + 1):
        rec = repunit.elegance(m)
        witness = ";".join(str(t) for t in rec.witness.terms)
        writer.writerow([m, rec.elegance, witness, repunit.runs(m)])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_random_experiment(args) -> int:
    graph = randgraph.sample_gnp_half(args.n, args.seed)
    eps = args.epsilon if args.epsilon is not None else randgraph.epsilon_threshold(args.n)
    report = randgraph.concentration_check(graph, eps, args.subsets, args.seed)
    import numpy as np

    rng = np.random.default_rng(args.seed)
    values = HouseValues.from_iterable(
        sorted(int(x) for x in rng.integers(0, 10_000, size=args.n))
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["trial", "ratio"])
    worst = 0.0
    for t in range(args.trials):
        ratio = randgraph.arbitrary_allocation_ratio(graph, values, trials=1, seed=args.seed + t)
        worst = max(worst, float(ratio))
        writer.writerow([t, f"{float(ratio):.8f}"])
    _emit(buf.getvalue(), args.out)
    summary = {
        "n": args.n,
        "seed": args.seed,
        "epsilon": report.epsilon,
        "subset_samples": report.samples,
        "violations": report.violations,
        "worst_low_ratio": float(report.worst_low_ratio),
        "worst_high_ratio": float(report.worst_high_ratio),
        "worst_allocation_ratio": worst,
        "envelope": float(randgraph.approximation_envelope(args.n)),
    }
    target = sys.stdout if args.out else sys.stderr
    target.write(json.dumps(summary, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify.run_suite(args.suite, seed=args.seed)
    failed = 0
    for name, ok, detail in checks:
        tag = "ok" if ok else "FAIL"
        print(f"[{tag}] {name}: {detail}")
        failed += 0 if ok else 1
    if failed:
        print(f"{failed} of {len(checks)} checks failed", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_bench(args) -> int:
    manifest = serialize.load_json(args.manifest)
    records = bench.bench_run(manifest)
    _emit(bench.records_to_csv(records), args.out)
    if args.plot_dir:
        import os

        os.makedirs(args.plot_dir, exist_ok=True)
        for family, body in bench.plot_data_by_family(records).items():
            with open(os.path.join(args.plot_dir, f"plot_{family}.csv"), "w") as fh:
                fh.write(body)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gha", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact optimal envy")
    p.add_argument("--instance", required=True)
    p.add_argument("--solver", choices=["dp", "bruteforce"], default="dp")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("approx", help="approximation algorithms with certificates")
    p.add_argument("--algo", choices=["trickle", "layout", "inorder"], required=True)
    p.add_argument("--instance")
    p.add_argument("--strategy", choices=[s.value for s in approx.LayoutStrategy], default="bfs")
    p.add_argument("--depth", type=int)
    p.add_argument("--values")
    p.add_argument("--out")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("generate", help="hardness-reduction instances")
    p.add_argument(
        "--family",
        choices=["depth2", "clique", "grid", "expander", "flower", "bounded-tree"],
        required=True,
    )
    p.add_argument("--tp", help="3-partition JSON: {items, T}")
    p.add_argument("--C", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, help="flower size")
    p.add_argument("--k", type=int, help="flower petal parameter")
    p.add_argument("--desk-scale", action="store_true",
                   help="allow bounded-tree items below 1000")
    p.add_argument("--out", help="basename; writes .json and .roles.json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("elegance", help="repunit elegance table as CSV")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_elegance)

    p = sub.add_parser("random-experiment", help="G(n,1/2) concentration experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--subsets", type=int, default=10_000)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random_experiment)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out")
    p.add_argument("--plot-dir")
    p.set_defaults(func=cmd_bench)

    return parser


def cli_dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (GhaError, FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return cli_dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
