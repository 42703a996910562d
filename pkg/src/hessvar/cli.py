"""Command-line interface: ``hessvar {components,gkm,patch,scan,verify,table}``.

Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
3 internal inconsistency (tangent dimension below local dimension).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .components import (InvalidHessenberg, NotStandardPosition, UnsupportedHessenberg,
                         component_data, hessenberg_from_function, make_semisimple)
from .gkm import build_gkm, to_dot
from .patch import (InconsistencyError, groebner_certificate, origin_rank, patch_ideal,
                    singular_scan, verify_against_combinatorics)
from .roots import RootSystemError, build_root_system
from .weyl import GroupTooLarge, WeylGroup

OUT_OF_SCOPE = "n/a(out-of-scope)"

# representative S for each eigenvalue multiplicity pattern, in standard position
BLOCK_REPRESENTATIVES = {
    (2, 1): (1, 1, -1),
    (3, 1): (1, 1, 1, -1),
    (2, 2): (1, 1, -1, -1),
    (2, 1, 1): (2, 2, -1, -3),
}

BUILTIN_ROWS = [
    ((2, 3, 3), (2, 1)),
    ((2, 3, 4, 4), (3, 1)),
    ((2, 4, 4, 4), (3, 1)),
    ((3, 4, 4, 4), (3, 1)),
    ((2, 3, 4, 4), (2, 2)),
    ((2, 4, 4, 4), (2, 2)),
    ((3, 4, 4, 4), (2, 2)),
    ((2, 3, 4, 4), (2, 1, 1)),
    ((2, 4, 4, 4), (2, 1, 1)),
    ((3, 4, 4, 4), (2, 1, 1)),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_values(text: str) -> tuple:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse values {text!r}: {exc}") from None


def parse_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse integer list {text!r}") from None


def fmt_value(x: Fraction) -> str:
    return str(x)


def fmt_labels(labels) -> str:
    return "{" + ", ".join(f"a{i}" for i in sorted(labels)) + "}"


def blocks_of(values: Sequence) -> tuple:
    counts = {}
    for x in values:
        counts[x] = counts.get(x, 0) + 1
    return tuple(sorted(counts.values(), reverse=True))


def _root_system(args):
    t = args.type.upper()
    if t == "A":
        if args.n is not None:
            rank = args.n - 1
        elif args.rank is not None:
            rank = args.rank
        else:
            raise UsageError("type A needs --n (matrix size) or --rank")
    else:
        if args.rank is None:
            raise UsageError(f"type {t} needs --rank")
        rank = args.rank
    return build_root_system(t, rank)


def _require(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required for this command")
    return getattr(args, name)


# -- renderers ----------------------------------------------------------------

def render_components(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "dot":
        raise UsageError("components supports text and json output")
    rs = report.W.rs
    S = report.S
    lines = [
        f"type {rs.name}, S = ({', '.join(fmt_value(x) for x in S.values)}), "
        f"Delta_M = {fmt_labels(S.delta_M)}",
        f"{len(report.components)} irreducible component(s), variety dimension {report.variety_dim}",
    ]
    for c in report.components:
        lines.append(f"  X_{c.v}: dim {c.dimension}, R(v) = {fmt_labels(c.R_v)}, "
                     f"x_v = {c.x_v}, w_v = {c.w_v}, {len(c.vertices)} fixed points")
    pts = sorted(report.all_singular, key=lambda w: w.index)
    lines.append(f"singular fixed points ({len(pts)}): " + (", ".join(map(str, pts)) or "none"))
    return "\n".join(lines) + "\n"


def render_gkm(graph, fmt: str, highlight: str) -> str:
    if fmt == "dot":
        return to_dot(graph, highlight=highlight)
    if fmt == "json":
        return graph.to_json() + "\n"
    rs = graph.W.rs
    lines = [f"{len(graph.vertices)} vertices, {len(graph.edges)} edges"]
    for e in graph.edges:
        lines.append(f"  {e.src} --{rs.pretty(e.label)}--> {e.dst}")
    if highlight == "singular":
        pts = [str(w) for w in graph.vertices if w in graph.singular]
        lines.append(f"singular ({len(pts)}): " + (", ".join(pts) or "none"))
    return "\n".join(lines) + "\n"


def render_patch(ideal, fmt: str) -> str:
    rank0 = origin_rank(ideal)
    tangent = ideal.order.nvars - rank0
    basis, certified = groebner_certificate(ideal)
    data = {
        "w": str(ideal.w),
        "n": ideal.n,
        "h": list(ideal.h),
        "s": [str(x) for x in ideal.s_values],
        "generators": [str(g) for g in ideal.nonzero_generators],
        "reduced_generators": [str(g) for g in ideal.reduced_generators],
        "groebner_basis": [str(g) for g in basis],
        "radical_certified": certified,
        "origin_rank": rank0,
        "tangent_dim": tangent,
    }
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "dot":
        raise UsageError("patch supports text and json output")
    lines = [f"patch ideal at {data['w']}, h = {tuple(ideal.h)}, "
             f"{len(data['generators'])} nonzero generator(s)"]
    lines += [f"  {g}" for g in data["reduced_generators"]] or ["  (zero ideal)"]
    lines.append("Groebner basis:")
    lines += [f"  {g}" for g in data["groebner_basis"]] or ["  (empty)"]
    lines.append(f"radical_certified: {certified}")
    lines.append(f"origin Jacobian rank: {rank0}")
    lines.append(f"tangent_dim: {tangent}")
    return "\n".join(lines) + "\n"


def render_scan(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=2) + "\n"
    if fmt == "dot":
        raise UsageError("scan supports text and json output")
    lines = [f"local dimension source: {result.source}"]
    if result.note:
        lines.append(result.note)
    for r in result.reports:
        extra = ""
        if r.on_multiple_components is not None:
            extra = f"  components>1={r.on_multiple_components}"
        lines.append(f"  {str(r.w):<24} tangent {r.tangent_dim}  local {r.local_dim}  "
                     f"{r.verdict:<8} radical={r.radical_certified}{extra}")
    sing = [str(w) for w in result.singular]
    lines.append(f"singular fixed points ({len(sing)}): " + (", ".join(sing) or "none"))
    return "\n".join(lines) + "\n"


# -- the table ----------------------------------------------------------------

def table_row(h: Sequence[int], s_values: Sequence) -> dict:
    n = len(s_values)
    rs = build_root_system("A", n - 1)
    W = WeylGroup(rs)
    S = make_semisimple(rs, s_values)
    H = hessenberg_from_function(rs, h)
    row = {"h": tuple(h), "blocks": blocks_of(S.values), "s": S.values}
    if all(x == n for x in h):
        row.update(singular="No", irreducible="Yes", equidimensional="Yes",
                   method="full flag variety")
    elif H.is_standard:
        report = component_data(W, S)
        dims = {c.dimension for c in report.components}
        row.update(singular="Yes" if report.all_singular else "No",
                   irreducible="Yes" if len(report.components) == 1 else "No",
                   equidimensional="Yes" if len(dims) == 1 else "No",
                   method="components")
    else:
        scan = singular_scan(S.values, h, "max_cell", W=W)
        certified = any(r.verdict == "singular" and r.radical_certified for r in scan.reports)
        row.update(singular="Yes" if certified else OUT_OF_SCOPE,
                   irreducible=OUT_OF_SCOPE, equidimensional=OUT_OF_SCOPE,
                   method="scan(max_cell)")
    return row


def read_table_spec(path: str) -> list:
    """Lines ``h=2,3,4,4 s=1,1,-1,-1``; blank lines and ``#`` comments ignored."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
            if "h" not in fields or "s" not in fields:
                raise UsageError(f"{path}:{lineno}: expected 'h=... s=...'")
            rows.append((parse_ints(fields["h"]), parse_values(fields["s"])))
    return rows


def render_table(rows: list, fmt: str) -> str:
    if fmt == "json":
        out = [{"h": list(r["h"]), "blocks": list(r["blocks"]), "s": [str(x) for x in r["s"]],
                "singular": r["singular"], "irreducible": r["irreducible"],
                "equidimensional": r["equidimensional"], "method": r["method"]} for r in rows]
        return json.dumps(out, indent=2) + "\n"
    if fmt == "dot":
        raise UsageError("table supports text and json output")
    header = ("Hess. fun.", "Blocks", "Singular", "Irreduc.", "Equidim.", "Method")
    body = [(str(r["h"]), str(r["blocks"]), r["singular"], r["irreducible"],
             r["equidimensional"], r["method"]) for r in rows]
    widths = [max(len(x[k]) for x in [header] + body) for k in range(len(header))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip()
             for line in [header] + body]
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_components(args) -> str:
    rs = _root_system(args)
    W = WeylGroup(rs)
    S = make_semisimple(rs, _require(args, "s"))
    return render_components(component_data(W, S), args.format)


def cmd_gkm(args) -> str:
    rs = _root_system(args)
    W = WeylGroup(rs)
    S = make_semisimple(rs, _require(args, "s"))
    return render_gkm(build_gkm(W, S), args.format, args.highlight)


def _type_a_n(args) -> int:
    if args.type.upper() != "A":
        raise UsageError("patch ideals are implemented for type A only")
    if args.n is None:
        s = _require(args, "s")
        return len(s)
    return args.n


def _check_len(n: int, values, what: str):
    if len(values) != n:
        raise ValueError(f"{what} needs {n} entries, got {len(values)}")


def cmd_patch(args) -> str:
    n = _type_a_n(args)
    s = _require(args, "s")
    _check_len(n, s, "--s")
    W = WeylGroup(build_root_system("A", n - 1))
    w = W.from_word(args.w or "e")
    h = args.h or tuple(min(j + 1, n) for j in range(1, n + 1))
    return render_patch(patch_ideal(w, s, h), args.format)


def cmd_scan(args) -> str:
    n = _type_a_n(args)
    s = _require(args, "s")
    _check_len(n, s, "--s")
    h = args.h or tuple(min(j + 1, n) for j in range(1, n + 1))
    dim = args.dim
    if dim not in ("combinatorial", "max_cell"):
        try:
            dim = int(dim)
        except ValueError:
            raise UsageError("--dim must be an integer, 'combinatorial' or 'max_cell'") from None
    return render_scan(singular_scan(s, h, dim, seed=args.seed), args.format)


def cmd_verify(args) -> str:
    n = _type_a_n(args)
    s = _require(args, "s")
    _check_len(n, s, "--s")
    res = verify_against_combinatorics(s, seed=args.seed)
    if args.format == "json":
        return json.dumps({"agree": res.agree,
                           "disagreements": [list(d) for d in res.disagreements],
                           "radical_certified": all(r.radical_certified
                                                    for r in res.scan.reports)},
                          indent=2) + "\n"
    n_pts = len(res.scan.reports)
    if res.agree:
        return f"agreement: Jacobian and combinatorial singular loci coincide on {n_pts} fixed points\n"
    lines = [f"disagreement at {len(res.disagreements)} of {n_pts} fixed points:"]
    lines += [f"  {w}: verdict {v}, on several components {m}" for w, v, m in res.disagreements]
    return "\n".join(lines) + "\n"


def cmd_table(args) -> str:
    if args.spec:
        specs = read_table_spec(args.spec)
    else:
        specs = [(h, BLOCK_REPRESENTATIVES[b]) for h, b in BUILTIN_ROWS]
    if args.n is not None:
        specs = [(h, s) for h, s in specs if len(h) == args.n]
    rows = []
    for h, s in specs:
        if len(h) != len(s):
            raise ValueError(f"h={h} and s={s} have different lengths")
        rows.append(table_row(h, s))
    return render_table(rows, args.format)


COMMANDS = {
    "components": cmd_components,
    "gkm": cmd_gkm,
    "patch": cmd_patch,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A", choices=["A", "B", "C", "D", "a", "b", "c", "d"])
    common.add_argument("--n", type=int, help="matrix size (type A)")
    common.add_argument("--rank", type=int, help="rank of the root system")
    common.add_argument("--s", type=parse_values,
                        help="comma-separated rationals, e.g. 1,1,-1,-1 or 1/2,0,-1")
    common.add_argument("--h", type=parse_ints, help="Hessenberg function, e.g. 2,3,4,4")
    common.add_argument("--format", default="text", choices=["text", "json", "dot"])
    common.add_argument("--seed", type=int, default=0, help="seed for the diagnostic sampler")
    common.add_argument("--out", help="write output to FILE instead of stdout")

    parser = _Parser(prog="hessvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("components", parents=[common], help="irreducible components")
    g = sub.add_parser("gkm", parents=[common], help="GKM graph")
    g.add_argument("--highlight", default="components", choices=["components", "singular", "none"])
    p = sub.add_parser("patch", parents=[common], help="patch ideal at one fixed point")
    p.add_argument("--w", help="Weyl group word, e.g. s2s1")
    sc = sub.add_parser("scan", parents=[common], help="Jacobian scan of all fixed points")
    sc.add_argument("--dim", default="combinatorial",
                    help="local dimension: an integer, 'combinatorial' or 'max_cell'")
    sub.add_parser("verify", parents=[common], help="cross-check Jacobian and combinatorics")
    t = sub.add_parser("table", parents=[common], help="geometric properties table")
    t.add_argument("--spec", help="file of 'h=... s=...' rows")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hessvar: usage error: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"hessvar: internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except NotStandardPosition as exc:
        print(f"hessvar: S is not in standard position: {exc}", file=sys.stderr)
        return 2
    except (InvalidHessenberg, UnsupportedHessenberg, RootSystemError, GroupTooLarge,
            ValueError) as exc:
        print(f"hessvar: invalid input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hessvar: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
