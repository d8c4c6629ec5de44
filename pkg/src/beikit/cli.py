"""Command-line frontend.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap,
4 oracle budget exceeded.
"""

import argparse
import json
import sys

from . import io
from .algebra import make_field
from .errors import BudgetExceeded, InputError, SizeCapExceeded
from .gbasis import groebner_basis, normal_form
from .graph import enumerate_admissible_paths
from .oracle import Budget
from .primdec import minimal_primes
from .verify import drop_component, flip_sign, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE, EXIT_BUDGET = 0, 1, 2, 3, 4

DEFAULT_FIELDS = {"verify": "32003"}


def _common(p):
    p.add_argument("graph", help="graph file (text or JSON)")
    p.add_argument("--d0", type=int, default=2, help="number of rows, at least 2")
    p.add_argument("--field", default=None,
                   help="'rational' or a prime (default: rational; 32003 for verify)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--max-vertices", type=int, default=20)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bei-kit",
        description="Gröbner bases and minimal primes of generalized binomial edge ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="list admissible paths")
    _common(p)
    p.add_argument("--from", dest="start", type=int, default=None)
    p.add_argument("--to", dest="end", type=int, default=None)

    p = sub.add_parser("gbasis", help="emit the reduced Gröbner basis")
    _common(p)

    p = sub.add_parser("reduce", help="normal form of a polynomial modulo the basis")
    _common(p)
    p.add_argument("polynomial", help="e.g. 'p[1,1]*p[2,2] - p[1,2]*p[2,1]'")

    p = sub.add_parser("minimal-primes", help="emit the minimal primes")
    _common(p)
    p.add_argument("--list-limit", type=int, default=200,
                   help="omit generator listings for components with more generators")

    p = sub.add_parser("verify", help="cross-check everything against the Buchberger oracle")
    _common(p)
    p.add_argument("--budget-spairs", type=int, default=2_000_000)
    p.add_argument("--budget-seconds", type=float, default=900.0)
    p.add_argument("--budget-basis", type=int, default=20000)
    p.add_argument("--basis", default=None, help="verify this serialized basis instead")
    p.add_argument("--inject-fault", choices=("flip-sign", "drop-component"), default=None)
    return parser


def _emit(args, payload, lines):
    if args.output == "json":
        print(io.dumps(payload))
    else:
        for line in lines:
            print(line)


def _cmd_paths(args, g, field):
    paths = enumerate_admissible_paths(g, args.start, args.end)
    payload = {"command": "paths", "n": g.n,
               "paths": [list(p.vertices) for p in paths], "count": len(paths)}
    lines = [" ".join(map(str, p.vertices)) for p in paths]
    lines.append(f"paths: {len(paths)}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_gbasis(args, g, field):
    basis = groebner_basis(g, args.d0, field)
    payload = {"command": "gbasis", "n": g.n, "d0": args.d0, "field": repr(field),
               "count": len(basis), "basis": io.basis_to_json(basis)}
    lines = [f"{list(e.path.vertices)} {list(e.kappa.values)}: {io.format_polynomial(e.poly)}"
             for e in basis]
    lines.append(f"elements: {len(basis)}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_reduce(args, g, field):
    p = io.parse_polynomial(args.polynomial, field, args.d0, g.n)
    r = normal_form(p, groebner_basis(g, args.d0, field))
    member = r.is_zero()
    payload = {"command": "reduce", "input": io.format_polynomial(p),
               "normal_form": io.format_polynomial(r), "member": member}
    lines = [io.format_polynomial(r), "MEMBER" if member else "NOT MEMBER"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_minimal_primes(args, g, field):
    comps = minimal_primes(g, args.d0, args.max_vertices)
    payload = {"command": "minimal-primes", "n": g.n, "d0": args.d0, "count": len(comps),
               "components": io.components_to_json(comps, field, args.list_limit)}
    lines = []
    for c in comps:
        n_mono, n_bin = c.count_generators()
        lines.append(f"Y={list(c.y)} blocks={[list(b) for b in c.components]} "
                     f"monomials={n_mono} binomials={n_bin}")
    lines.append(f"components: {len(comps)}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify(args, g, field):
    budget = Budget(max_basis=args.budget_basis, max_spairs=args.budget_spairs,
                    max_seconds=args.budget_seconds)
    basis = None
    if args.basis:
        try:
            with open(args.basis) as fh:
                data = json.load(fh)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read basis {args.basis}: {exc}") from None
        items = data["basis"] if isinstance(data, dict) else data
        basis = io.basis_from_json(items, field, args.d0, g.n)
    components = minimal_primes(g, args.d0, args.max_vertices)
    if args.inject_fault == "flip-sign":
        if basis is None:
            basis = groebner_basis(g, args.d0, field)
        basis = flip_sign(basis)
    elif args.inject_fault == "drop-component":
        components = drop_component(components)
    results = run_checks(g, args.d0, field, basis, components, budget)
    passed = all(r.passed for r in results)
    payload = {"command": "verify", "n": g.n, "d0": args.d0, "field": repr(field),
               "passed": passed,
               "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                          for r in results]}
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f" ({r.detail})" if r.detail else "")
             for r in results]
    lines.append("ALL PASS" if passed else "VERIFICATION FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if passed else EXIT_FAIL


COMMANDS = {
    "paths": _cmd_paths,
    "gbasis": _cmd_gbasis,
    "reduce": _cmd_reduce,
    "minimal-primes": _cmd_minimal_primes,
    "verify": _cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.d0 < 2:
            raise InputError("--d0 must be at least 2")
        field = make_field(args.field or DEFAULT_FIELDS.get(args.command, "rational"))
        g = io.load_graph(args.graph)
        if g.n > args.max_vertices:
            raise SizeCapExceeded(f"{g.n} vertices exceeds --max-vertices {args.max_vertices}")
        return COMMANDS[args.command](args, g, field)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: budget exceeded in check {exc.check}: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
