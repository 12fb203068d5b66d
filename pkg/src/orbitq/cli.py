"""Command line harness: verify, table, explore-noncoprime, affine-window.

Exit status is 0 when every record passes, 1 when some record fails and 2
for invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Sequence

from . import ekv
from .affine import AdmissibilityError, is_admissible_number, verify_prop_2_4
from .integral_roots import (
    IntegralCountError,
    count_by_heights,
    count_by_pairing,
    lambda_q,
)
from .oracle import OracleError, max_orbit_in_Nq
from .orbits import (
    COPRINCIPAL,
    EXTENDED,
    PRINCIPAL,
    SubCaseError,
    UnsupportedError,
    case_for,
    orbit_q,
    table_rows,
)
from .partitions import ClassicalFamily, PartitionError
from .report import (
    Record,
    Table,
    TableLine,
    VerificationReport,
    pretty_label,
    report_to_csv,
    report_to_json,
    report_to_markdown,
    table_to_csv,
    table_to_json,
    table_to_markdown,
)
from .rootsys import CartanType, RootSystemError, build, langlands_dual

ORACLE_MAX_N = 10


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# selectors

def parse_int_set(text: str) -> list[int]:
    """"2..40", "5", "2,3,7..9" -> sorted distinct integers."""
    out: set[int] = set()
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            if ".." in tok:
                lo, hi = (int(x) for x in tok.split("..", 1))
                if lo > hi:
                    raise UsageError(f"empty range {tok!r}")
                out.update(range(lo, hi + 1))
            else:
                out.add(int(tok))
        except ValueError as exc:
            raise UsageError(f"cannot parse {tok!r} as an integer or a..b range") from exc
    if not out:
        raise UsageError(f"empty selection {text!r}")
    return sorted(out)


def default_q_values(ct: CartanType, start: int = 1) -> list[int]:
    """start .. r*h + 2: every distinct O_q in both cases plus stabilized rows."""
    rs = build(ct)
    return list(range(start, rs.lacing * rs.coxeter_number + 3))


def family_type(letter: str, n: int) -> CartanType | None:
    """Cartan type of the classical algebra of n x n matrices in family A, B, C or D.

    Returns None when n does not fit the family (wrong parity or too small).
    """
    letter = letter.upper()
    kind = {"A": "SL", "B": "SO", "C": "SP", "D": "SO"}.get(letter)
    if kind is None:
        raise UsageError(f"unknown family {letter!r}; use A, B, C or D")
    if letter == "B" and n % 2 == 0 or letter == "D" and n % 2 == 1:
        return None
    try:
        fam = ClassicalFamily(kind, n)
    except PartitionError:
        return None
    ct = fam.cartan_type
    if ct is None or (letter == "D" and ct.family != "D"):
        return None
    return ct


def resolve_types(type_spec: str | None, family: str | None, n_spec: str | None) -> list[CartanType]:
    types: list[CartanType] = []
    if type_spec:
        for tok in type_spec.split(","):
            try:
                types.append(CartanType.parse(tok.strip()))
            except (RootSystemError, ValueError) as exc:
                raise UsageError(str(exc)) from exc
    if family:
        if not n_spec:
            raise UsageError("--family needs --n")
        ns = parse_int_set(n_spec)
        found = [ct for ct in (family_type(family, n) for n in ns) if ct is not None]
        if not found:
            raise UsageError(f"no valid n in {n_spec!r} for family {family}")
        types.extend(found)
    if not types:
        raise UsageError("select types with --type or --family/--n")
    return sorted(set(types))


def _mode(args) -> str | None:
    for m in (PRINCIPAL, COPRINCIPAL, EXTENDED):
        if getattr(args, m, False):
            return m
    return None


def selected_q(ct: CartanType, qs: Iterable[int], mode: str | None) -> list[tuple[int, bool]]:
    """(q, extended) pairs for one type under a case selector."""
    rs = build(ct)
    out = []
    for q in qs:
        if q < 1:
            raise UsageError("q must be positive")
        case = case_for(rs.lacing, q)
        if mode == PRINCIPAL and case != PRINCIPAL:
            continue
        if mode == COPRINCIPAL and case != COPRINCIPAL:
            continue
        extended = mode == EXTENDED and case == COPRINCIPAL
        if extended and not ct.is_exceptional:
            raise UsageError(f"extended data is tabulated only for exceptional types, not {ct}")
        out.append((q, extended))
    return out


# ---------------------------------------------------------------------------
# records

def _classical_family(ct: CartanType) -> ClassicalFamily | None:
    return None if ct.is_exceptional else ClassicalFamily.from_cartan_type(ct)


def minimal_admissible_p(ct: CartanType, q: int) -> int:
    p = 1
    while not is_admissible_number(ct, p, q):
        p += 1
    return p


def build_record(ct: CartanType, q: int, extended: bool = False, with_oracle: bool = False,
                 window: int | None = None) -> Record:
    rs = build(ct)
    res = orbit_q(ct, q, extended)
    lq = lambda_q(ct, q, extended)
    direct = count_by_pairing(lq)
    checks: dict[str, bool] = {}
    try:
        checks["paths"] = direct == count_by_heights(lq)
    except IntegralCountError:
        checks["paths"] = False
    joseph = rs.dim_nilcone - direct
    centralizer = rs.dim - res.dim
    fam = _classical_family(ct)
    d_q = ekv.d_via_heights(rs, q)
    if res.case_tag == PRINCIPAL:
        ok = d_q == centralizer
        if fam is not None:
            ok = ok and ekv.d_classical(fam, q) == d_q
        checks["ekv"] = ok
    elif res.case_tag == COPRINCIPAL and fam is not None:
        checks["ekv"] = ekv.predicted_centralizer_coprincipal(fam, q) == centralizer
    checks["duality"] = d_q == ekv.d_via_heights(build(langlands_dual(ct)), q)
    if with_oracle and fam is not None and fam.n <= ORACLE_MAX_N and res.case_tag != EXTENDED:
        try:
            top = max_orbit_in_Nq(fam, q, res.case_tag, max_n=ORACLE_MAX_N)
            checks["oracle"] = res.orbit is not None and top.partition == res.orbit.partition
        except OracleError:
            checks["oracle"] = False
    if window is not None and res.case_tag != EXTENDED:
        p = minimal_admissible_p(ct, q)
        checks["affine-window"] = verify_prop_2_4(ct, p, q, max(window, 3 * q)).passed
    return Record(str(ct), q, res.case_tag, res.label, res.dim, direct, joseph, checks)


def run_verify(types: Sequence[CartanType], qs: Sequence[int] | None = None, mode: str | None = None,
               with_oracle: bool = False, window: int | None = None) -> VerificationReport:
    records = []
    for ct in sorted(types):
        for q, extended in selected_q(ct, qs if qs is not None else default_q_values(ct), mode):
            records.append(build_record(ct, q, extended, with_oracle, window))
    return VerificationReport(records)


# ---------------------------------------------------------------------------
# tables

def build_table(ct: CartanType, case: str = PRINCIPAL, qs: Sequence[int] | None = None) -> Table:
    """Rows grouped by orbit; bracketed values are principal data at non-coprime q.

    Without an explicit q list the range starts at 2 and the final regular
    orbit is shown as an open tail.
    """
    rs = build(ct)
    if case == COPRINCIPAL and rs.lacing == 1:
        raise UsageError(f"{ct} is simply laced and has no coprincipal case")
    explicit = qs is not None
    values = list(qs) if explicit else default_q_values(ct, start=2)
    entries = []  # (q, bracketed, label, dim, integral)
    for q in values:
        natural = case_for(rs.lacing, q)
        if case == PRINCIPAL and natural == PRINCIPAL:
            ext = False
        elif case == PRINCIPAL and ct.is_exceptional and _bracketed(ct, q):
            ext = True
        elif case == COPRINCIPAL and natural == COPRINCIPAL:
            ext = False
        else:
            continue
        res = orbit_q(ct, q, ext)
        n = count_by_pairing(lambda_q(ct, q, ext))
        entries.append((q, ext, res.label, res.dim, n))
    groups: list[list] = []
    for e in entries:
        if groups and groups[-1][-1][2] == e[2]:
            groups[-1].append(e)
        else:
            groups.append([e])
    lines = []
    for idx, g in enumerate(groups):
        qv = [e[0] for e in g]
        br = [e[0] for e in g if e[1]]
        tail = None
        last = idx == len(groups) - 1
        if last and not explicit and g[0][3] == rs.dim_nilcone:
            first_plain = next(e[0] for e in g if not e[1])
            qv = [v for v in qv if v < first_plain]
            br = [v for v in br if v < first_plain]
            tail = first_plain
        lines.append(TableLine(tuple(qv), tuple(br), tail, g[0][2], g[0][3], g[0][4]))
    step = rs.lacing if case == COPRINCIPAL else 1
    return Table(str(ct), case, step, lines)


def _bracketed(ct: CartanType, q: int) -> bool:
    """Principal-table data exists for this non-coprime q."""
    for r in table_rows(ct, PRINCIPAL):
        if q in r.bracketed or (r.from_q is not None and q >= r.from_q):
            return True
    return False


# ---------------------------------------------------------------------------
# non-coprime exploration

def explore_noncoprime(ct: CartanType, qs: Sequence[int] | None = None) -> list[dict]:
    """dim N - |Delta(rho/q - rho)| next to dim N_q for q not coprime to r.

    These rows are outside the range where the identity is proved, so the
    result is reported and never asserted.
    """
    rs = build(ct)
    if not ct.is_exceptional or rs.lacing == 1:
        raise UsageError(f"non-coprime data is tabulated only for G2 and F4, not {ct}")
    if qs is None:
        qs = sorted({q for r in table_rows(ct, PRINCIPAL) for q in r.bracketed})
    out = []
    for q in qs:
        if case_for(rs.lacing, q) != COPRINCIPAL:
            raise UsageError(f"q={q} is coprime to the lacing number; use verify")
        res = orbit_q(ct, q, extended=True)
        n = count_by_pairing(lambda_q(ct, q, extended=True))
        joseph = rs.dim_nilcone - n
        out.append({"cartan_type": str(ct), "q": q, "orbit_label": res.label,
                    "dim_Nq": res.dim, "integral_count": n, "var_dim_joseph": joseph,
                    "equal": joseph == res.dim, "status": "CONJECTURAL"})
    return out


def _explore_render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in r.items()})
        return buf.getvalue()
    lines = ["| type | q | N_q | dim N_q | \\|Δ(ρ/q − ρ)\\| | dim N − \\|Δ\\| | equal | status |",
             "|---|---|---|---|---|---|---|---|"]
    for r in rows:
        lines.append(f"| {r['cartan_type']} | ({r['q']}) | {pretty_label(r['orbit_label'])} | "
                     f"{r['dim_Nq']} | {r['integral_count']} | {r['var_dim_joseph']} | "
                     f"{'yes' if r['equal'] else 'no'} | {r['status']} |")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument handling

def _add_common(p: argparse.ArgumentParser, need_q: bool = True) -> None:
    p.add_argument("--type", help="Cartan type(s), e.g. E8 or G2,F4")
    p.add_argument("--family", help="classical family A, B, C or D (with --n)")
    p.add_argument("--n", help="matrix size(s) for --family, e.g. 4..12")
    if need_q:
        p.add_argument("--q", help="q values, e.g. 2..40 or 3,5,7")
    p.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p.add_argument("--out", help="write output to this file instead of stdout")


def _add_case(p: argparse.ArgumentParser, extended: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--principal", action="store_true", help="only q coprime to the lacing number")
    g.add_argument("--coprincipal", action="store_true", help="only q divisible by the lacing number")
    if extended:
        g.add_argument("--extended", action="store_true",
                       help="use principal data at non-coprime q (exceptional types)")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbitq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check dim N - |Delta(lambda_q)| = dim O_q and cross-checks")
    _add_common(v)
    _add_case(v)
    v.add_argument("--with-oracle", action="store_true",
                   help=f"compare with the matrix oracle for n <= {ORACLE_MAX_N}")
    v.add_argument("--window", type=int, help="also run the affine window check with this N (at least 3q)")

    t = sub.add_parser("table", help="O_q table for one type")
    _add_common(t)
    _add_case(t, extended=False)

    e = sub.add_parser("explore-noncoprime", help="report the identity at non-coprime q (not asserted)")
    _add_common(e)

    p = sub.add_parser("affine-window", help="affine window check for lambda-hat_q")
    _add_common(p)
    p.add_argument("--p", type=int, help="numerator p (default: smallest admissible)")
    p.add_argument("--window", type=int, help="window N (default 3q)")
    return ap


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _single_type(args) -> CartanType:
    types = resolve_types(args.type, args.family, args.n)
    if len(types) != 1:
        raise UsageError("this command takes exactly one type")
    return types[0]


def _cmd_verify(args) -> int:
    types = resolve_types(args.type, args.family, args.n)
    qs = parse_int_set(args.q) if args.q else None
    if args.window is not None and args.window < 0:
        raise UsageError("--window must be non-negative")
    rep = run_verify(types, qs, _mode(args), args.with_oracle, args.window)
    render = {"json": report_to_json, "csv": report_to_csv, "md": report_to_markdown}[args.format]
    _emit(render(rep), args.out)
    for r in rep.failures():
        print(f"FAILED: {r}", file=sys.stderr)
    return 0 if rep.passed else 1


def _cmd_table(args) -> int:
    ct = _single_type(args)
    case = COPRINCIPAL if args.coprincipal else PRINCIPAL
    qs = parse_int_set(args.q) if args.q else None
    tab = build_table(ct, case, qs)
    render = {"json": table_to_json, "csv": table_to_csv, "md": table_to_markdown}[args.format]
    _emit(render(tab), args.out)
    return 0


def _cmd_explore(args) -> int:
    ct = _single_type(args)
    qs = parse_int_set(args.q) if args.q else None
    _emit(_explore_render(explore_noncoprime(ct, qs), args.format), args.out)
    return 0


def _cmd_window(args) -> int:
    ct = _single_type(args)
    qs = parse_int_set(args.q) if args.q else [2]
    rows = []
    ok = True
    for q in qs:
        p = args.p if args.p is not None else minimal_admissible_p(ct, q)
        rep = verify_prop_2_4(ct, p, q, args.window)
        ok = ok and rep.passed
        rows.append({"cartan_type": str(ct), "p": p, "q": q, "window": rep.window,
                     "case_tag": rep.case_tag, "bezout": [list(b) for b in rep.bezout],
                     "checks": rep.checks, "passed": rep.passed, "failures": rep.failures[:20]})
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["cartan_type", "p", "q", "window", "case_tag", "bezout", "passed"])
        for r in rows:
            w.writerow([r["cartan_type"], r["p"], r["q"], r["window"], r["case_tag"],
                        ";".join(f"{c}/{d}" for c, d in r["bezout"]), str(r["passed"]).lower()])
        text = buf.getvalue()
    else:
        lines = ["| type | p | q | N | case | (c, d) | checks | status |", "|---|---|---|---|---|---|---|---|"]
        for r in rows:
            bz = ", ".join(f"({c}, {d})" for c, d in r["bezout"])
            lines.append(f"| {r['cartan_type']} | {r['p']} | {r['q']} | {r['window']} | {r['case_tag']} "
                         f"| {bz} | {len(r['checks'])} | {'pass' if r['passed'] else 'FAIL'} |")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    for r in rows:
        for f in r["failures"]:
            print(f"FAILED {r['cartan_type']} p={r['p']} q={r['q']}: {f}", file=sys.stderr)
    return 0 if ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    handler = {"verify": _cmd_verify, "table": _cmd_table,
               "explore-noncoprime": _cmd_explore, "affine-window": _cmd_window}[args.command]
    try:
        return handler(args)
    except (UsageError, UnsupportedError, AdmissibilityError, RootSystemError,
            PartitionError, SubCaseError) as exc:
        print(f"orbitq: error: {exc}", file=sys.stderr)
        return 2
