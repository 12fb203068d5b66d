"""Report records and their JSON, CSV and markdown renderings.

JSON and CSV parse back to equal objects; markdown is for reading and for
diffing against the published tables.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# verification records

@dataclass(frozen=True)
class Record:
    cartan_type: str
    q: int
    case_tag: str
    orbit_label: str
    dim_orbit: int
    integral_count: int
    var_dim_joseph: int
    checks_passed: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.var_dim_joseph == self.dim_orbit and all(self.checks_passed.values())


@dataclass
class VerificationReport:
    records: list[Record]

    @property
    def summary(self) -> dict[str, int]:
        ok = sum(r.passed for r in self.records)
        return {"total": len(self.records), "passed": ok, "failed": len(self.records) - ok}

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed]


_FIELDS = ["cartan_type", "q", "case_tag", "orbit_label", "dim_orbit",
           "integral_count", "var_dim_joseph"]
_INT_FIELDS = {"q", "dim_orbit", "integral_count", "var_dim_joseph"}


def report_to_json(rep: VerificationReport) -> str:
    data = {"schema": SCHEMA_VERSION,
            "records": [dict(asdict(r), passed=r.passed) for r in rep.records],
            "summary": rep.summary}
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def report_from_json(text: str) -> VerificationReport:
    data = json.loads(text)
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    records = []
    for d in data["records"]:
        d = dict(d)
        d.pop("passed", None)
        records.append(Record(**d))
    rep = VerificationReport(records)
    if data.get("summary") != rep.summary:
        raise ValueError("summary does not match the records")
    return rep


def _check_names(rep: VerificationReport) -> list[str]:
    names: list[str] = []
    for r in rep.records:
        for k in r.checks_passed:
            if k not in names:
                names.append(k)
    return names


def report_to_csv(rep: VerificationReport) -> str:
    checks = _check_names(rep)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(_FIELDS + [f"check:{c}" for c in checks] + ["passed"])
    for r in rep.records:
        row = [getattr(r, f) for f in _FIELDS]
        row += ["" if c not in r.checks_passed else str(r.checks_passed[c]).lower() for c in checks]
        row.append(str(r.passed).lower())
        w.writerow(row)
    return buf.getvalue()


def report_from_csv(text: str) -> VerificationReport:
    rows = list(csv.DictReader(io.StringIO(text)))
    records = []
    for row in rows:
        kw = {f: int(row[f]) if f in _INT_FIELDS else row[f] for f in _FIELDS}
        checks = {k[len("check:"):]: v == "true" for k, v in row.items()
                  if k.startswith("check:") and v != ""}
        records.append(Record(**kw, checks_passed=checks))
    return VerificationReport(records)


def report_to_markdown(rep: VerificationReport) -> str:
    lines = ["| type | q | case | orbit | dim | \\|Δ(λ_q)\\| | dim N − \\|Δ(λ_q)\\| | checks | status |",
             "|---|---|---|---|---|---|---|---|---|"]
    for r in rep.records:
        checks = ", ".join(f"{k}{'' if v else ' FAILED'}" for k, v in r.checks_passed.items())
        lines.append(f"| {r.cartan_type} | {r.q} | {r.case_tag} | {pretty_label(r.orbit_label)} | {r.dim_orbit} "
                     f"| {r.integral_count} | {r.var_dim_joseph} | {checks} | "
                     f"{'pass' if r.passed else 'FAIL'} |")
    s = rep.summary
    lines.append("")
    lines.append(f"{s['passed']}/{s['total']} records pass, {s['failed']} fail")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# tables

@dataclass(frozen=True)
class TableLine:
    q_values: tuple[int, ...]
    bracketed: tuple[int, ...]
    tail: int | None
    orbit: str
    dim: int
    integral_count: int


@dataclass
class Table:
    cartan_type: str
    case: str
    step: int
    lines: list[TableLine]


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def pretty_label(label: str) -> str:
    """E8(a7) -> E₈(a₇), ~A1 -> Ã₁, (3^2,1) -> (3²,1)."""
    if label.startswith("("):
        return re.sub(r"\^(\d+)", lambda m: m.group(1).translate(_SUP), label)
    out = re.sub(r"(?<=[A-Za-z])(\d+)", lambda m: m.group(1).translate(_SUB), label)
    return out.replace("~A", "\u00c3")


def q_cell(line: TableLine, step: int, ascii_only: bool = False) -> str:
    """"(3), 4, 5", "14, …, 17", "(6), ≥ 7"; ascii form "(3),4,5", "14,15,16,17", "(6),>=7"."""
    sep = "," if ascii_only else ", "
    parts: list[tuple[str, int]] = []
    for v in line.q_values:
        parts.append(("b" if v in line.bracketed else "p", v))
    # compress maximal runs of unbracketed consecutive values
    tokens: list[str] = []
    i = 0
    while i < len(parts):
        kind, v = parts[i]
        if kind == "b":
            tokens.append(f"({v})")
            i += 1
            continue
        j = i
        while j + 1 < len(parts) and parts[j + 1][0] == "p" and parts[j + 1][1] == parts[j][1] + step:
            j += 1
        run = [parts[k][1] for k in range(i, j + 1)]
        if len(run) >= 4 and not ascii_only:
            tokens.append(f"{run[0]}, …, {run[-1]}")
        else:
            tokens.extend(str(x) for x in run)
        i = j + 1
    if line.tail is not None:
        tokens.append(f">={line.tail}" if ascii_only else f"≥ {line.tail}")
    return sep.join(tokens)


def parse_q_cell(cell: str) -> tuple[tuple[int, ...], tuple[int, ...], int | None]:
    values, bracketed, tail = [], [], None
    for tok in cell.split(","):
        tok = tok.strip()
        inside = tok.startswith("(") and tok.endswith(")")
        if inside:
            tok = tok[1:-1]
        if tok.startswith(">="):
            tail = int(tok[2:])
            continue
        if ".." in tok:
            lo, hi = (int(x) for x in tok.split(".."))
            vals = list(range(lo, hi + 1))
        else:
            vals = [int(tok)]
        values += vals
        if inside:
            bracketed += vals
    return tuple(values), tuple(bracketed), tail


def table_to_markdown(t: Table) -> str:
    lines = ["| q | orbit | dim | \\|Δ(λ_q)\\| |", "|---|---|---|---|"]
    for ln in t.lines:
        lines.append(f"| {q_cell(ln, t.step)} | {pretty_label(ln.orbit)} | {ln.dim} | {ln.integral_count} |")
    return "\n".join(lines) + "\n"


def table_to_json(t: Table) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **asdict(t)}, indent=2) + "\n"


def table_from_json(text: str) -> Table:
    d = json.loads(text)
    if d.pop("schema", None) != SCHEMA_VERSION:
        raise ValueError("unsupported schema")
    lines = [TableLine(tuple(x["q_values"]), tuple(x["bracketed"]), x["tail"], x["orbit"],
                       x["dim"], x["integral_count"]) for x in d.pop("lines")]
    return Table(lines=lines, **d)


def table_to_csv(t: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["type", "case", "step", "q", "orbit", "dim", "integral_count"])
    for ln in t.lines:
        w.writerow([t.cartan_type, t.case, t.step, q_cell(ln, t.step, ascii_only=True),
                    ln.orbit, ln.dim, ln.integral_count])
    return buf.getvalue()


def table_from_csv(text: str) -> Table:
    rows = list(csv.DictReader(io.StringIO(text)))
    lines = []
    for row in rows:
        values, bracketed, tail = parse_q_cell(row["q"])
        lines.append(TableLine(values, bracketed, tail, row["orbit"], int(row["dim"]),
                               int(row["integral_count"])))
    return Table(rows[0]["type"], rows[0]["case"], int(rows[0]["step"]), lines)
