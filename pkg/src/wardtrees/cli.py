"""Command-line front end: ``wardtrees <subcommand> [options]``.

Subcommands
-----------
ward        Ward number table, plain or weighted.
enumerate   Stream every object of a family as canonical JSON.
biject      Total partition tree <-> increasing Schroeder tree.
involute    Apply psi' (ordered partitions) or psi_n (Schroeder trees).
series      Invert a series (newton / variant / lagrange) or check the
            tree functional equation.
verify      Run a verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 series precondition error.

Examples
--------
  wardtrees ward --n 4
  wardtrees ward --n 3 --weights ones --alternating --format plain
  wardtrees enumerate --family total --n 3
  echo '[[1],[3],[2]]' | wardtrees involute --map psi-prime
  wardtrees series invert-variant --preset ward-egf --weights ones --order 6
  wardtrees verify --suite all
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijections as bj
from . import series as sr
from . import structures as st
from . import verify as vf
from . import ward as wd

ENUM_BUDGET = 7
TABLE_BUDGET = 64
SERIES_BUDGET = 64

FAMILIES = ("setpart", "oppart", "schroeder", "inc-schroeder", "enriched", "total", "meadow", "semilabeled")


class UsageError(Exception):
    """Bad input; exit status 2."""


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


class _Output:
    def __init__(self, path: str | None):
        self._fh = open(path, "w", encoding="utf-8") if path else sys.stdout

    def line(self, text: str = "") -> None:
        self._fh.write(text + "\n")

    def close(self) -> None:
        if self._fh is not sys.stdout:
            self._fh.close()
        else:
            self._fh.flush()


def _read_json(path: str | None):
    try:
        if path and path != "-":
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}") from None


def _weights(spec: str | None, default: str | None = "ones") -> wd.WeightSystem | None:
    if spec is None:
        spec = default
    if spec is None:
        return None
    try:
        return wd.parse_weights(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# ward
# ---------------------------------------------------------------------------


def cmd_ward(args, out: _Output) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("ward needs --n >= 0")
    if args.n > TABLE_BUDGET:
        raise UsageError(f"--n {args.n} exceeds the table budget of {TABLE_BUDGET}")
    g = _weights(args.weights, None)
    if g is None or g.name == "ones":
        table = wd.ward_recurrence_table(args.n)
    else:
        try:
            table = wd.weighted_ward_table(args.n, g)
        except wd.IncompleteWeightsError as exc:
            raise UsageError(str(exc)) from None
    fmt = args.format or "csv"
    if fmt == "json":
        out.line(_dumps(table.to_json()))
    elif fmt == "csv":
        if args.alternating:
            out.line("n,row_sum,alternating_sum")
            for n in range(table.N + 1):
                out.line(f"{n},{table.row_sum(n)},{table.alternating_sum(n)}")
        else:
            out.line(table.to_csv().rstrip("\n"))
    else:
        for n, row in enumerate(table.entries):
            out.line(f"n={n}: " + ",".join(str(v) for v in row))
        if args.alternating:
            for n in range(table.N + 1):
                out.line(f"alternating n={n}: {table.alternating_sum(n)}")
    return 0


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _generator(args):
    fam, n, k = args.family, args.n, args.k
    if fam is None:
        raise UsageError("enumerate needs --family")
    if n is None:
        raise UsageError("enumerate needs --n")
    if n > ENUM_BUDGET:
        raise UsageError(f"--n {n} exceeds the enumeration budget of {ENUM_BUDGET}")
    if fam == "setpart":
        if k is None:
            raise UsageError("setpart needs --k")
        return st.enumerate_set_partitions(n, k, args.min_block)
    if fam == "meadow":
        if k is None:
            raise UsageError("meadow needs --k")
        return st.enumerate_meadows(n, k, args.increasing)
    if fam == "semilabeled":
        if k is None or k < 1 or n < 1:
            raise UsageError("semilabeled needs --n >= 1 leaves and --k >= 1 internal vertices")
        if n + k > ENUM_BUDGET + 1:
            raise UsageError("semilabeled enumeration budget is n + k <= 8")
        return st.enumerate_semilabeled_trees(n, k)
    if n < 1:
        raise UsageError(f"{fam} needs --n >= 1")
    gens = {
        "oppart": st.enumerate_ordered_partitions,
        "schroeder": st.enumerate_schroeder_trees,
        "inc-schroeder": st.enumerate_increasing_schroeder_trees,
        "enriched": st.enumerate_enriched_trees,
        "total": st.enumerate_total_partition_trees,
    }
    if fam not in gens:
        raise UsageError(f"unknown family {fam!r}")
    return gens[fam](n)


def cmd_enumerate(args, out: _Output) -> int:
    gen = _generator(args)
    fmt = args.format or "json"
    if fmt == "csv":
        out.line("index,object")
    count = 0
    for obj in gen:
        enc = _dumps(st.to_json(obj))
        if fmt == "csv":
            out.line(f'{count},"{enc.replace(chr(34), chr(34) * 2)}"')
        else:
            out.line(enc)
        count += 1
    out.line(_dumps({"count": count}) if fmt == "json" else f"count: {count}" if fmt == "plain" else f"count,{count}")
    return 0


# ---------------------------------------------------------------------------
# biject / involute
# ---------------------------------------------------------------------------


def _decode(data, family: str):
    try:
        return st.from_json(data, family)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"input is not a canonical {family} object: {exc}") from None


def _emit_record(out: _Output, record: dict, fmt: str) -> None:
    if fmt == "json":
        out.line(_dumps(record))
    else:
        sep = "," if fmt == "csv" else ": "
        if fmt == "csv":
            out.line("key,value")
        for key, value in record.items():
            text = value if isinstance(value, str) else _dumps(value)
            if fmt == "csv":
                text = '"' + text.replace('"', '""') + '"'
            out.line(f"{key}{sep}{text}")


def cmd_biject(args, out: _Output) -> int:
    direction = args.direction or "total-to-inc"
    data = _read_json(args.input)
    if direction == "total-to-inc":
        image = bj.total_to_increasing(_decode(data, "total"))
    elif direction == "inc-to-total":
        image = bj.increasing_to_total(_decode(data, "inc-schroeder"))
    else:
        raise UsageError(f"unknown direction {direction!r}")
    fmt = args.format or "json"
    if fmt == "json":
        out.line(_dumps(st.to_json(image)))
    else:
        _emit_record(out, {"image": st.to_json(image), "type": str(st.type_of(image))}, fmt)
    return 0


def cmd_involute(args, out: _Output) -> int:
    mapping = args.map or "psi-prime"
    data = _read_json(args.input)
    if mapping == "psi-prime":
        obj = _decode(data, "oppart")
        fn = bj.psi_prime
    elif mapping == "psi-n":
        obj = _decode(data, "schroeder")
        fn = bj.psi_n
    else:
        raise UsageError(f"unknown map {mapping!r}")
    try:
        image = fn(obj)
        record = {"image": st.to_json(image), "sign": st.sign_of(obj), "image_sign": st.sign_of(image)}
    except bj.FixedPointError:
        record = {"fixed": True, "sign": st.sign_of(obj)}
    _emit_record(out, record, args.format or "json")
    return 0


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _series_input(args) -> sr.TruncatedSeries:
    order = args.order if args.order is not None else 8
    if order < 1 or order > SERIES_BUDGET:
        raise UsageError(f"--order must be in 1..{SERIES_BUDGET}")
    if args.input:
        try:
            return sr.TruncatedSeries.from_json(_read_json(args.input))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    preset = args.preset or "ward-egf"
    if preset == "identity":
        return sr.TruncatedSeries.x(order)
    if preset == "exp-minus-one":
        return sr.TruncatedSeries.from_egf([0] + [1] * order, order)
    if preset == "ward-egf":
        return sr.ward_h_series(_weights(args.weights), order)
    raise UsageError(f"unknown series preset {preset!r}")


def _fmt_series(out: _Output, s: sr.TruncatedSeries, fmt: str) -> None:
    egf = [str(c) for c in s.egf_coeffs()]
    if fmt == "json":
        out.line(_dumps({"series": s.to_json(), "egf": egf}))
    elif fmt == "csv":
        out.line("n,coefficient,egf")
        for n, c in enumerate(s.coeffs):
            out.line(f"{n},{c},{egf[n]}")
    else:
        out.line("egf: " + ",".join(egf))


def cmd_series(args, out: _Output) -> int:
    fmt = args.format or "json"
    if args.action == "check":
        order = args.order if args.order is not None else 8
        if order < 1 or order > SERIES_BUDGET:
            raise UsageError(f"--order must be in 1..{SERIES_BUDGET}")
        report = sr.ward_functional_check(_weights(args.weights), order)
        _emit_record(out, report, fmt)
        return 0 if report["ok"] else 1
    h = _series_input(args)
    if args.action == "invert-newton":
        _fmt_series(out, sr.invert_newton(h), fmt)
    elif args.action == "invert-variant":
        _fmt_series(out, sr.invert_variant(h), fmt)
    elif args.action == "lagrange":
        b = [str(sr.lagrange_classical(h, n)) for n in range(1, h.order + 1)]
        if fmt == "json":
            out.line(_dumps({"b": b}))
        elif fmt == "csv":
            out.line("n,b")
            for n, v in enumerate(b, start=1):
                out.line(f"{n},{v}")
        else:
            out.line("b: " + ",".join(b))
    else:
        raise UsageError(f"unknown series action {args.action!r}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args, out: _Output) -> int:
    suite = args.suite or "all"
    if suite != "all" and suite not in vf.SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(vf.SUITES)}, all")
    report = vf.run_suite(suite, timings=args.timings)
    fmt = args.format or "json"
    if fmt == "json":
        out.line(_dumps(report))
    else:
        for c in report["checks"]:
            status = "PASS" if c["ok"] else "FAIL"
            line = f"{c['suite']},{c['check']},{status}" if fmt == "csv" else f"{status} {c['suite']}/{c['check']}"
            out.line(line)
        if report["first_failure"] is not None:
            out.line(_dumps(report["first_failure"]))
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"))
    common.add_argument("--out", help="write output to PATH instead of stdout")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--weights", help="preset name, delta:<j>:<scale>, list:<g1>,<g2>,... or signed:<spec>")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--min-block", type=int, default=1)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--map", choices=("psi-prime", "psi-n"))
    common.add_argument("--direction", choices=("total-to-inc", "inc-to-total"))
    common.add_argument("--suite", choices=vf.SUITES + ("all",))
    common.add_argument("--input", help="JSON input file ('-' or omitted: stdin)")

    parser = argparse.ArgumentParser(
        prog="wardtrees", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ward", parents=[common], help="Ward number table")
    p.add_argument("--alternating", action="store_true", help="report row and alternating sums")
    p.set_defaults(func=cmd_ward)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate a family")
    p.add_argument("--increasing", action="store_true", help="meadows: only increasing small trees")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("biject", parents=[common], help="total partition <-> increasing Schroeder tree")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("involute", parents=[common], help="apply psi' or psi_n")
    p.set_defaults(func=cmd_involute)

    p = sub.add_parser("series", parents=[common], help="series inversion and functional checks")
    p.add_argument("action", choices=("invert-newton", "invert-variant", "lagrange", "check"))
    p.add_argument("--preset", choices=("identity", "exp-minus-one", "ward-egf"))
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _Output(args.out)
    except OSError as exc:
        print(f"wardtrees: cannot open output: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"wardtrees: {exc}", file=sys.stderr)
        return 2
    except sr.SeriesError as exc:
        print(f"wardtrees: precondition failed: {exc}", file=sys.stderr)
        return 3
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
