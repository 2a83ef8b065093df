"""Command-line front end.

    hfconcordance alexander "T(4,5)"
    hfconcordance vk "2*Kn(1) # -T(2,5)" --k 0..2 --check-oracle
    hfconcordance dinv 9 4 "2*Kn(2)#-T(2,5)" --all-labels
    hfconcordance obstruct --n 1..4 --format csv

Results go to stdout, diagnostics to stderr.  Exit status: 0 when the
computation finished, 1 for usage or input errors, 2 when an internal
consistency check (oracle comparison, tower check) fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__, cfk, dinv, expr, reduced
from .cfk import NotKnotLike, TruncationInsufficient
from .obstruction import OracleMismatch, build_family, verdicts
from .records import OBSTRUCT_CSV_COLUMNS, OutputRecord, to_csv, to_table
from .staircase import IncompatibleShapes, representative_sum

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2

GRAMMAR_HELP = """knot expressions:
  T(p,q)          torus knot            torus p q
  C(p,q; K)       (p,q)-cable of K      cable p q K
  Kn(n)           C(2,4n-1; T(2,2n+1))  Kn n
  k*K             k-fold connected sum
  K # J           connected sum
  -T(2,5)         the only mirrored summand allowed for V_k
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


# -- computations behind the commands --------------------------------------


def fast_tower(lists, mirrors: int) -> reduced.Tower:
    if mirrors > 1:
        raise IncompatibleShapes("the reduced path handles at most one -T(2,5); use --brute")
    if lists:
        tower = reduced.reduce_staircase(representative_sum(lists))
    else:
        tower = reduced.Tower((0,))
    if mirrors:
        tower = reduced.tensor_with_mirror_t25(tower)
    return tower


def full_complex(lists, mirrors: int) -> cfk.FilteredComplex:
    parts = [cfk.staircase_complex(L) for L in lists]
    parts += [cfk.mirror(cfk.staircase_complex((1, 1)))] * mirrors
    return cfk.tensor_all(parts)


def knot_vs(node, kmax: int, brute: bool = False, check_oracle: bool = False) -> dict:
    lists, mirrors = expr.summands(node)
    out: dict = {"summands": [list(L) for L in lists], "mirrored_T25": mirrors}
    fast = slow = None
    if not brute or check_oracle:
        try:
            if lists:
                out["representative_staircase"] = list(representative_sum(lists))
            fast = reduced.fast_vs(fast_tower(lists, mirrors), kmax)
        except IncompatibleShapes as exc:
            print(f"note: {exc}; using the full tensor product", file=sys.stderr)
            brute = True
    if brute or check_oracle:
        slow = cfk.brute_force_vs(full_complex(lists, mirrors), kmax)
    if fast is not None and slow is not None and fast != slow:
        raise OracleMismatch(f"reduced path {fast} != tensor path {slow}")
    both = fast is not None and slow is not None
    out["method"] = "both" if both else ("reduced" if fast is not None else "tensor")
    if both:
        out["oracle_agrees"] = True
    out["V"] = fast if fast is not None else slow
    return out


def cmd_alexander(args) -> tuple[OutputRecord, list, list]:
    node = expr.parse(args.knot)
    poly = expr.alexander(node)
    stair = expr.try_staircase(poly)
    results = {
        "knot": expr.describe(node),
        "polynomial": str(poly),
        "min_exp": poly.min_exp,
        "coefficients": list(poly.coeffs),
        "staircase": list(stair) if stair is not None else None,
    }
    rec = OutputRecord(["alexander", args.knot], {"knot": args.knot}, results)
    rows = [[e, c] for e, c in poly.terms()]
    return rec, ["exponent", "coefficient"], rows


def cmd_vk(args) -> tuple[OutputRecord, list, list]:
    node = expr.parse(args.knot)
    lists, _ = expr.summands(node)
    ks = parse_range(args.k) if args.k else list(range(0, max(1, sum(map(sum, lists))) + 1))
    if ks[0] < 0:
        raise UsageError("k must be nonnegative")
    res = knot_vs(node, ks[-1], brute=args.brute, check_oracle=args.check_oracle)
    vs = res.pop("V")
    res["V"] = [{"k": k, "V": vs[k]} for k in ks]
    prov = []
    if "representative_staircase" in res:
        prov.append("connected sum replaced by its representative staircase (strictly compatible riffle)")
    if res["method"] == "tensor" and not args.brute:
        prov.append("no strictly compatible riffle; V_k from the full tensor product")
    if res["mirrored_T25"]:
        prov.append("-T(2,5) handled by tensoring the reduced tower with CFK^-(-T(2,5))")
    rec = OutputRecord(
        ["vk", args.knot] + (["--k", args.k] if args.k else [])
        + (["--brute"] if args.brute else []) + (["--check-oracle"] if args.check_oracle else []),
        {"knot": expr.describe(node), "k": ks},
        res,
        prov,
    )
    return rec, ["k", "V_k"], [[k, vs[k]] for k in ks]


def _split_dinv_rest(rest: Sequence[str]) -> tuple[Optional[str], Optional[int]]:
    rest = list(rest)
    label = None
    if rest and rest[-1].lstrip("-").isdigit():
        label = int(rest.pop())
    return (" ".join(rest) or None), label


def cmd_dinv(args) -> tuple[OutputRecord, list, list]:
    p, q = args.p, args.q
    knot_text, label = _split_dinv_rest(args.rest)
    kmax = (p + q - 1) // q
    prov = []
    if knot_text is None:
        vs = [0] * (kmax + 1)
        knot = "U"
    else:
        node = expr.parse(knot_text)
        knot = expr.describe(node)
        vs = knot_vs(node, kmax)["V"]
        prov.append("d from the V-sequence via the rational surgery formula")
    if label is not None and not args.all_labels:
        labels = [label]
        if not 0 <= label < p:
            raise dinv.LabelError(f"label {label} outside Z_{p}")
    else:
        labels = list(range(p))
    spin = dinv.spin_label(p, q) if p % 2 else None
    rows = []
    for i in labels:
        rows.append([i, str(dinv.lens_d(p, q, i)), str(dinv.niwu_d(p, q, i, vs)), "spin" if i == spin else ""])
    results = {
        "knot": knot,
        "V": vs,
        "spin_label": spin,
        "d": [{"label": r[0], "d_unknot": r[1], "d": r[2], "spin": r[0] == spin} for r in rows],
    }
    cmd = ["dinv", str(p), str(q)] + list(args.rest) + (["--all-labels"] if args.all_labels else [])
    rec = OutputRecord(cmd, {"p": p, "q": q, "knot": knot, "labels": labels}, results, prov)
    return rec, ["label", "d(U)", "d(K)", "spin"], rows


def cmd_obstruct(args) -> tuple[OutputRecord, list, list]:
    ns = parse_range(args.n)
    if ns[0] < 1:
        raise UsageError("n must be >= 1")
    reports = [verdicts(build_family(n)) for n in ns]
    rows = []
    for r in reports:
        dv = r.dbar_values
        rows.append([
            r.n, r.V0, r.V1, str(dv.get(0)), str(dv.get(3)), str(dv.get(6)), str(r.d_spin),
            "obstructed" if r.verdict_trivial_alex else "unobstructed",
        ])
    rec = OutputRecord(
        ["obstruct", "--n", args.n],
        {"n": ns, "surgery": "9/4", "linking_self_pairing": "-4/9"},
        {"reports": [r.to_dict() for r in reports]},
        list(reports[0].provenance) if len(reports) == 1 else ["see per-report provenance"],
    )
    return rec, list(OBSTRUCT_CSV_COLUMNS), rows


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hfconcordance",
        description="Knot Floer concordance invariants and the d-bar obstruction.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alexander", parents=[fmt], help="Alexander polynomial and staircase",
                       epilog=GRAMMAR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("knot", help='knot expression, e.g. "T(4,5)" or "cable 2 7 (torus 2 5)"')
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("vk", parents=[fmt], help="V_k of a sum of L-space knots (and -T(2,5))",
                       epilog=GRAMMAR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("knot")
    p.add_argument("--k", help="k or range A..B (default 0..genus)")
    p.add_argument("--brute", action="store_true", help="use the full tensor product complex")
    p.add_argument("--check-oracle", action="store_true", help="run both paths and compare")
    p.set_defaults(func=cmd_vk)

    p = sub.add_parser("dinv", parents=[fmt], help="d-invariants of p/q surgery",
                       epilog=GRAMMAR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("rest", nargs="*", metavar="[KNOT] [LABEL]",
                   help="optional knot expression and Spin^c label (default: unknot, all labels)")
    p.add_argument("--all-labels", action="store_true")
    p.set_defaults(func=cmd_dinv)

    p = sub.add_parser("obstruct", parents=[fmt], help="d-bar obstruction for the links L_n")
    p.add_argument("--n", required=True, help="n or range A..B")
    p.set_defaults(func=cmd_obstruct)
    return parser


def render(rec: OutputRecord, header, rows, fmt: str) -> str:
    if fmt == "json":
        return rec.to_json()
    if fmt == "csv":
        return to_csv(header, rows)
    lines = [f"# hfconcordance {rec.version}", "# " + " ".join(rec.command)]
    res = rec.results
    if "polynomial" in res:
        lines.append(f"Delta = {res['polynomial']}")
        st = res["staircase"]
        lines.append(f"staircase: {tuple(st) if st else 'none (not an L-space polynomial)'}")
    if res.get("representative_staircase"):
        lines.append(f"representative staircase: {tuple(res['representative_staircase'])}")
    if res.get("oracle_agrees"):
        lines.append("oracle check: reduced and tensor paths agree")
    lines.extend(f"# {p}" for p in rec.provenance)
    return "\n".join(lines) + "\n" + to_table(header, rows)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec, header, rows = args.func(args)
    except (OracleMismatch, NotKnotLike, TruncationInsufficient, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(rec, header, rows, args.format))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
