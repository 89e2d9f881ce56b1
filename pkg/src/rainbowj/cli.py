"""``rainbowj`` command line.

Exit codes: 0 yes/valid, 1 no/invalid, 2 error or budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass

from . import formats
from .budget import BudgetExceeded, default_budget_ms
from .coloring import chi_minus_colourings, r_chi_counts
from .cordial import find_cordial_labeling, is_cordial_labeling, labeling_stats
from .generators import complete, cycle, jahangir, mycielski, path, wheel
from .graph import Graph, GraphError, complement
from .jcolor import (
    JDecision,
    construct_cycle_j,
    construct_jahangir_j,
    construct_wheel_j,
    decide_cycle,
    decide_jahangir,
    decide_wheel,
    j_failures,
    j_number,
)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

FAMILIES = ("path", "cycle", "wheel", "jahangir", "mycielski-of", "complement-of", "complete")
CLOSED_FORM = ("cycle", "wheel", "jahangir")


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            flag = {"n": "-n", "m": "-m", "c": "-c"}.get(name, f"--{name}")
            raise UsageError(f"family {args.family!r} needs {flag}")
    return [getattr(args, name) for name in names]


def _family_graph(args, family: str | None = None) -> Graph:
    family = family or args.family
    if family == "path":
        (n,) = _need(args, "n")
        return path(n)
    if family == "complete":
        (n,) = _need(args, "n")
        return complete(n)
    if family == "cycle":
        (c,) = _need(args, "c")
        return cycle(c)
    if family == "wheel":
        (c,) = _need(args, "c")
        return wheel(c).graph
    if family == "jahangir":
        n, m = _need(args, "n", "m")
        return jahangir(n, m).graph
    if family in ("mycielski-of", "complement-of"):
        if args.graph:
            base = formats.graph_from_dict(formats.load_json(args.graph))
        elif args.base:
            if args.base not in FAMILIES[:4] + ("complete",):
                raise UsageError(f"--base must be a plain family, got {args.base!r}")
            base = _family_graph(args, args.base)
        else:
            raise UsageError(f"{family} needs --base FAMILY or --graph FILE")
        return mycielski(base) if family == "mycielski-of" else complement(base)
    raise UsageError(f"unknown family {family!r}")


def _input_graph(args) -> Graph:
    if getattr(args, "family", None):
        return _family_graph(args)
    if getattr(args, "graph", None):
        return formats.graph_from_dict(formats.load_json(args.graph))
    raise UsageError("give --family (with parameters) or --graph FILE")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _closed_form(args) -> JDecision | None:
    if args.family == "cycle":
        return decide_cycle(_need(args, "c")[0])
    if args.family == "wheel":
        return decide_wheel(_need(args, "c")[0])
    if args.family == "jahangir":
        return decide_jahangir(*_need(args, "n", "m"))
    return None


def _describe(d: JDecision) -> str:
    return f"admits, J={d.j_number}" if d.admits else "not admits"


# -- subcommands ----------------------------------------------------------


def cmd_gen(args) -> int:
    if not args.family:
        raise UsageError("gen needs --family")
    g = _family_graph(args)
    text = formats.to_dot(g) if args.format == "dot" else formats.dumps(formats.graph_to_dict(g))
    _emit(text, args.out)
    return EXIT_YES


def cmd_decide(args) -> int:
    closed = _closed_form(args) if args.family else None
    if closed is None or args.oracle:
        oracle = j_number(_input_graph(args), budget_ms=args.budget_ms, threads=args.threads)
    if closed is None:
        print(f"{_describe(oracle)}, rule=oracle")
        return EXIT_YES if oracle.admits else EXIT_NO
    print(f"{_describe(closed)} (closed-form), rule={closed.rule}")
    if not args.oracle:
        return EXIT_YES if closed.admits else EXIT_NO
    if _agree(closed, oracle):
        print("oracle agrees")
    else:
        print(f"oracle DISAGREES: {_describe(oracle)}")
    # the exact search is ground truth whenever it has been run
    return EXIT_YES if oracle.admits else EXIT_NO


def cmd_construct(args) -> int:
    if args.family == "cycle":
        d = decide_cycle(_need(args, "c")[0])
        build = lambda: construct_cycle_j(args.c)  # noqa: E731
    elif args.family == "wheel":
        d = decide_wheel(_need(args, "c")[0])
        build = lambda: construct_wheel_j(args.c)  # noqa: E731
    elif args.family == "jahangir":
        n, m = _need(args, "n", "m")
        d = decide_jahangir(n, m)
        build = lambda: construct_jahangir_j(n, m)  # noqa: E731
    else:
        raise UsageError("construct supports --family cycle, wheel or jahangir")
    if not d.admits:
        print(f"{args.family}: no J-colouring to construct", file=sys.stderr)
        return EXIT_NO
    g = _family_graph(args)
    col = build()
    if args.format == "dot":
        _emit(formats.to_dot(g, col), args.out)
    else:
        _emit(formats.dumps(formats.certificate_to_dict(g, col, "J")), args.out)
    return EXIT_YES


def cmd_verify(args) -> int:
    g, col, claim, k = formats.certificate_from_dict(formats.load_json(args.certificate))
    failures = []
    if k != col.k:
        failures.append(f"certificate k={k} but colouring declares k={col.k}")
    failures.extend(j_failures(g, col, internal_only=claim == "Jstar"))
    if failures:
        print(f"INVALID {claim}-colouring claim with k={k}")
        for line in failures:
            print(f"  {line}")
        return EXIT_NO
    print(f"valid {claim}-colouring with k={k}")
    return EXIT_YES


@dataclass
class SurveyRow:
    params: str
    closed_form: JDecision
    oracle: JDecision | None
    agree: bool | None
    notes: str


def _agree(a: JDecision, b: JDecision) -> bool:
    return a.admits == b.admits and (not a.admits or a.j_number == b.j_number)


def _survey_instances(args) -> list[tuple[str, JDecision, Graph, str]]:
    out = []
    if args.family in ("cycle", "wheel"):
        lo = args.min if args.min is not None else 3
        if args.max is None:
            raise UsageError("survey of cycles/wheels needs --max")
        for c in range(lo, args.max + 1):
            if args.family == "cycle":
                out.append((f"c={c}", decide_cycle(c), cycle(c), ""))
            else:
                out.append((f"c={c}", decide_wheel(c), wheel(c).graph, ""))
    elif args.family == "jahangir":
        if args.max_vertices is None:
            raise UsageError("survey of Jahangir graphs needs --max-vertices")
        lo = args.min_n if args.min_n is not None else 1
        for n in range(max(lo, 1), args.max_vertices):
            for m in range(3, (args.max_vertices - 1) // n + 1):
                note = "n=1: wheel rule" if n == 1 else ""
                out.append((f"n={n} m={m}", decide_jahangir(n, m), jahangir(n, m).graph, note))
    else:
        raise UsageError("survey supports --family cycle, wheel or jahangir")
    return out


def survey_rows(args) -> list[SurveyRow]:
    rows = []
    for params, closed, g, note in _survey_instances(args):
        try:
            oracle = j_number(g, budget_ms=args.budget_ms, threads=args.threads)
        except BudgetExceeded:
            rows.append(SurveyRow(params, closed, None, None, "budget exceeded"))
            continue
        agree = _agree(closed, oracle)
        notes = note if agree else "; ".join(x for x in (note, "closed form disagrees with oracle") if x)
        rows.append(SurveyRow(params, closed, oracle, agree, notes))
    return rows


def _fmt_decision(d: JDecision | None) -> tuple[str, str]:
    if d is None:
        return "?", ""
    return ("yes" if d.admits else "no"), ("" if d.j_number is None else str(d.j_number))


def cmd_survey(args) -> int:
    rows = survey_rows(args)
    header = ["params", "closed_admits", "closed_J", "rule", "oracle_admits", "oracle_J", "agree", "notes"]
    table = []
    for r in rows:
        ca, cj = _fmt_decision(r.closed_form)
        oa, oj = _fmt_decision(r.oracle)
        agree = "?" if r.agree is None else ("yes" if r.agree else "NO")
        table.append([r.params, ca, cj, r.closed_form.rule, oa, oj, agree, r.notes])
    if args.format == "markdown":
        buf = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        buf += ["| " + " | ".join(row) + " |" for row in table]
        text = "\n".join(buf) + "\n"
    else:
        sio = io.StringIO()
        w = csv.writer(sio, lineterminator="\n")
        w.writerow(header)
        w.writerows(table)
        text = sio.getvalue()
    _emit(text, args.out)
    if any(r.agree is None for r in rows):
        return EXIT_ERROR
    return EXIT_YES if all(r.agree for r in rows) else EXIT_NO


def cmd_rchi(args) -> int:
    g = _input_graph(args)
    counts = r_chi_counts(g, budget_ms=args.budget_ms)
    cols = chi_minus_colourings(g, budget_ms=args.budget_ms)
    print(f"r_chi: min={min(counts)} max={max(counts)} (n={g.num_vertices})")
    print(f"chi={cols[0].k}, class sizes={list(cols[0].class_sizes())}, "
          f"{len(cols)} chi-minus colourings ({len(counts)} up to renaming)")
    for c in cols:
        rainbow = sum(
            1 for v in range(g.num_vertices)
            if len({c[v], *(c[u] for u in g.adjacency[v])}) == c.k
        )
        print(f"  {list(c.assignment)} rainbow={rainbow}")
    return EXIT_YES


def cmd_cordial(args) -> int:
    if args.action == "check":
        if len(args.files) != 2:
            raise UsageError("cordial check needs GRAPH.json LABELING.json")
        g = formats.graph_from_dict(formats.load_json(args.files[0]))
        f = formats.labeling_from_dict(formats.load_json(args.files[1]))
        s = labeling_stats(g, f)
        ok = is_cordial_labeling(g, f)
        print(f"{'cordial' if ok else 'not cordial'}: v0={s.v0} v1={s.v1} e0={s.e0} e1={s.e1}")
        return EXIT_YES if ok else EXIT_NO
    if args.files:
        args.graph = args.files[0]
    g = _input_graph(args)
    f = find_cordial_labeling(g, budget_ms=args.budget_ms)
    if f is None:
        print("no cordial labeling exists", file=sys.stderr)
        return EXIT_NO
    _emit(formats.dumps(formats.labeling_to_dict(f)), args.out)
    return EXIT_YES


# -- parser ---------------------------------------------------------------


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("-n", type=int, help="path/complete order, or Jahangir gap n")
    p.add_argument("-m", type=int, help="Jahangir spoke count")
    p.add_argument("-c", type=int, help="cycle length or wheel rim length")
    p.add_argument("--base", choices=FAMILIES, help="base family for mycielski-of / complement-of")
    p.add_argument("--graph", help="graph JSON file")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-ms", type=float, default=None,
                   help="search budget in ms (default: $RAINBOWJ_BUDGET_MS or 60000)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowj", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    _add_family_args(p)
    _add_common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("decide", help="decide J-colourability")
    _add_family_args(p)
    _add_common(p)
    p.add_argument("--oracle", action="store_true", help="also run the exact search")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="emit a J-colouring certificate")
    _add_family_args(p)
    _add_common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="compare closed forms with the exact search")
    p.add_argument("--family", choices=CLOSED_FORM, required=True)
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    _add_common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("rchi", help="rainbow counts over chi-minus colourings")
    p.add_argument("graph_file", nargs="?")
    _add_family_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_rchi)

    p = sub.add_parser("cordial", help="check or find cordial labelings")
    p.add_argument("action", choices=("check", "find"))
    p.add_argument("files", nargs="*")
    _add_family_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_cordial)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "graph_file", None):
        args.graph = args.graph_file
    if getattr(args, "budget_ms", None) is None and hasattr(args, "budget_ms"):
        args.budget_ms = default_budget_ms()
    try:
        return args.func(args)
    except (UsageError, GraphError, formats.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
