"""Command-line front end.

Exit codes: 0 success, 2 argument or domain error, 3 numerical budget
exceeded. Results go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from dataclasses import asdict

from ._errors import BudgetExceededError, DomainError, UnreachableTargetError
from .bounds import RegisterSpec, WindowConvention, failure_probability
from .planner import Method, compare_bounds, emit_table, min_guard_qubits
from .qpe_sim import distribution, parse_phase, rotation_demo
from .search import maximize_failure

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3

COMPARE_COLUMNS = ("epsilon", "s", "p_exact", "p_trigamma", "p_cleve", "p_ib",
                   "p_inf_printed", "p_inf_exact_inverse")
TABLE_COLUMNS = ("p", "epsilon_exact", "epsilon_trigamma", "epsilon_p_infinity")


def format_float(x):
    """Scientific notation with a 12-digit mantissa fraction, e.g. ``1.464466094067e-1``."""
    mantissa, exponent = f"{float(x):.12e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _render(value):
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return format_float(value)  # valid JSON number literal
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}"
                               for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    return json.dumps(value)


def _emit(records, columns, fmt, out):
    if fmt == "json":
        out.write(_json_value([dict(zip(columns, r)) for r in records]) + "\n")
    elif fmt == "csv":
        out.write(",".join(columns) + "\n")
        for r in records:
            out.write(",".join(_render(v) for v in r) + "\n")
    else:
        cells = [[_render(v) for v in r] for r in records]
        widths = [max([len(c)] + [len(row[i]) for row in cells])
                  for i, c in enumerate(columns)]
        out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
        for row in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")


def _epsilon_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad epsilon list {text!r}") from exc


def _phase(text):
    try:
        return parse_phase(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_eps(args, out):
    spec = RegisterSpec(args.s, args.p)
    report = failure_probability(spec, args.a, args.convention)
    if args.format == "human":
        out.write(format_float(report.epsilon) + "\n")
    else:
        record = (report.epsilon, spec.s, spec.p, report.a, report.convention.value)
        _emit([record], ("epsilon", "s", "p", "a", "convention"), args.format, out)


def cmd_plan(args, out):
    p = min_guard_qubits(args.s, args.epsilon, args.method)
    if args.format == "human":
        out.write(f"{p}\n")
    else:
        _emit([(args.epsilon, args.s, args.method, p)],
              ("epsilon", "s", "method", "p"), args.format, out)


def cmd_compare(args, out):
    rows = []
    for epsilon in args.epsilon_list:
        c = compare_bounds(args.s, epsilon)
        rows.append((c.epsilon_target, c.s, c.p_exact, c.p_trigamma, c.p_cleve,
                     c.p_ib, c.p_inf_printed, c.p_inf_exact_inverse))
    _emit(rows, COMPARE_COLUMNS, args.format, out)


def cmd_table(args, out):
    _emit([tuple(r) for r in emit_table(args.s, args.p_max)], TABLE_COLUMNS,
          args.format, out)


def cmd_simulate(args, out):
    if args.demo == "rotation":
        if args.t < 2:
            raise DomainError("the rotation demo needs t >= 2 (s >= 1, p >= 1)")
        dist = rotation_demo(RegisterSpec(1, args.t - 1), args.phi)
    else:
        dist = distribution(args.t, args.phi)
    rows = [(k, float(v)) for k, v in enumerate(dist.probs)]
    if args.format == "json":
        _emit(rows, ("index", "probability"), "json", out)
    else:
        if args.format == "csv":
            out.write("index,probability\n")
        for k, v in rows:
            out.write(f"{k},{format_float(v)}\n")


def cmd_search(args, out):
    result = maximize_failure(RegisterSpec(args.s, args.p), args.grid, args.tol)
    record = asdict(result)
    if args.format == "json":
        out.write(_json_value(record) + "\n")
    elif args.format == "csv":
        out.write(",".join(record) + "\n")
        out.write(",".join(_render(v) for v in record.values()) + "\n")
    else:
        for key, value in record.items():
            out.write(f"{key}: {_render(value)}\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qpe-bounds",
        description="Exact failure probabilities and qubit budgets for phase estimation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("human", "csv", "json"), default="human")
        p.set_defaults(func=func)
        return p

    p = add("eps", cmd_eps, "failure probability for (s, p, a)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--convention", choices=[c.value for c in WindowConvention],
                   default=WindowConvention.SYMMETRIC.value)

    p = add("plan", cmd_plan, "minimal guard qubits for a target")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.EXACT.value)

    p = add("compare", cmd_compare, "guard qubits from every bound")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--epsilon-list", type=_epsilon_list, required=True)

    p = add("table", cmd_table, "failure rates for p = 1 .. p-max")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)

    p = add("simulate", cmd_simulate, "measurement distribution of the register")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--phi", type=_phase, required=True, help="decimal or num/den")
    p.add_argument("--demo", choices=("rotation",), default=None)

    p = add("search", cmd_search, "numerical worst-case offset search")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (BudgetExceededError, UnreachableTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
