"""The orbit O_q: closed forms for classical types, tables for exceptional ones.

For classical types O_q is described by a short list of partition shapes,
each involving a run length ``m`` and a remainder ``s`` subject to parity
and range conditions.  ``orbit_q_classical`` solves every shape for (m, s),
keeps the ones that satisfy their conditions and insists that exactly one
partition survives.  A silent fall-through would hide a mistake in the
shape list, so anything else raises ``SubCaseError``.

Exceptional types are table lookups from ``data/exceptional_tables.txt``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Callable

from .partitions import (
    ClassicalFamily,
    ClassicalOrbit,
    Partition,
    PartitionError,
    membership,
    orbit_dim,
)
from .report import parse_q_cell
from .rootsys import CartanType, build

PRINCIPAL = "principal"
COPRINCIPAL = "coprincipal"
EXTENDED = "extended"  # principal data at q not coprime to the lacing number


class SubCaseError(RuntimeError):
    pass


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitQResult:
    label: str
    dim: int
    case_tag: str
    orbit: ClassicalOrbit | None = None
    subcase: str | None = None


def case_for(lacing: int, q: int) -> str:
    if q < 1:
        raise UnsupportedError("q must be a positive integer")
    g = gcd(q, lacing)
    if g == 1:
        return PRINCIPAL
    if g == lacing:
        return COPRINCIPAL
    raise UnsupportedError(f"gcd(q, r) = {g} is neither 1 nor r")


# ---------------------------------------------------------------------------
# classical shapes

@dataclass(frozen=True)
class Shape:
    name: str
    parts: Callable[[int, int, int], list]  # (base, m, s) -> parts
    base_parity: int | None  # parity required of the base (q or q/2)
    m_parity: int | None
    s_parity: int | None
    s_max: Callable[[int], int]  # upper bound for s in terms of the base
    s_min: int = 0


def _run(base, m):
    return [base] * m


_upto_q = lambda b: b
_upto_q1 = lambda b: b - 1

# principal case, (q, r) = 1
_SL = [Shape("(q^m,s)", lambda b, m, s: _run(b, m) + [s], None, None, None, _upto_q1)]

_SO_EVEN = [
    Shape("(q^m,s)", lambda b, m, s: _run(b, m) + [s], 1, 1, 1, _upto_q),
    Shape("(q^m,s,1)", lambda b, m, s: _run(b, m) + [s, 1], 1, 0, 1, _upto_q1),
    Shape("(q+1,q^m,s)", lambda b, m, s: [b + 1] + _run(b, m) + [s], 0, 0, 1, _upto_q1),
    Shape("(q+1,q^m,q-1,s,1)", lambda b, m, s: [b + 1] + _run(b, m) + [b - 1, s, 1],
          0, 0, 1, _upto_q1),
]

_SO_ODD = [
    Shape("(q^m,s)", lambda b, m, s: _run(b, m) + [s], 1, 0, 1, _upto_q),
    Shape("(q^m,s,1)", lambda b, m, s: _run(b, m) + [s, 1], 1, 1, 1, _upto_q1),
]

_SP = [
    Shape("(q^m,s)", lambda b, m, s: _run(b, m) + [s], 1, 0, 0, _upto_q1),
    Shape("(q^m,q-1,s)", lambda b, m, s: _run(b, m) + [b - 1, s], 1, 0, 0, _upto_q1),
]

# coprincipal case, (q, r) = r = 2; for sp the base is q/2
_SO_ODD_CO = [
    Shape("(q^m,s)", lambda b, m, s: _run(b, m) + [s], 0, 0, 1, _upto_q1),
    Shape("(q^m,q-1,s,1)", lambda b, m, s: _run(b, m) + [b - 1, s, 1], 0, 0, 1, _upto_q1),
]

_SP_CO = [
    # m is unconstrained: with q/2 even the run (q/2)^m is legal in sp for any m
    Shape("((q/2)^m,s)", lambda b, m, s: _run(b, m) + [s], 0, None, 0, _upto_q1),
    Shape("(q/2+1,(q/2)^m,s)", lambda b, m, s: [b + 1] + _run(b, m) + [s], 1, 0, 0, _upto_q1),
    Shape("(q/2+1,(q/2)^m,q/2-1,s)", lambda b, m, s: [b + 1] + _run(b, m) + [b - 1, s],
          1, 0, 0, _upto_q1),
]


def _shapes(family: ClassicalFamily, case: str):
    if family.kind == "SL":
        return _SL
    if family.kind == "SO" and family.n % 2 == 0:
        return _SO_EVEN
    if family.kind == "SO":
        return _SO_ODD if case == PRINCIPAL else _SO_ODD_CO
    return _SP if case == PRINCIPAL else _SP_CO


def _parity_ok(value, parity):
    return parity is None or value % 2 == parity


def solve_shape(shape: Shape, n: int, base: int) -> list[tuple[int, int, Partition]]:
    """All (m, s, partition) realizing the shape for a partition of n."""
    if not _parity_ok(base, shape.base_parity):
        return []
    hits = []
    for m in range(0, n + 1):
        fixed = sum(shape.parts(base, m, 0))
        s = n - fixed
        if s < shape.s_min:
            break
        if s > shape.s_max(base):
            continue
        if not (_parity_ok(m, shape.m_parity) and _parity_ok(s, shape.s_parity)):
            continue
        raw = shape.parts(base, m, s)
        if any(x < 0 for x in raw):
            continue
        hits.append((m, s, Partition.normalize(raw)))
    return hits


def stable_threshold(family: ClassicalFamily, case: str) -> int:
    """Smallest q at which O_q is the regular orbit.

    Principal: the regular nilpotent has (ad x)^(2h-1) = 0 and no lower
    power vanishes, so q >= h.  Coprincipal: the regular nilpotent acts on
    the little adjoint module with nilpotency order n (so_n) or 2n - 3
    (sp_n); q is even, so round up to the next even number.
    """
    if case == PRINCIPAL:
        return family.coxeter_number
    order = family.n if family.kind == "SO" else 2 * family.n - 3
    return order + (order % 2)


def _check_case(family: ClassicalFamily, q: int, case: str) -> None:
    if case not in (PRINCIPAL, COPRINCIPAL):
        raise UnsupportedError(f"unknown case {case!r}")
    expected = case_for(family.lacing, q)
    if expected != case:
        raise UnsupportedError(f"{family} with q={q} is in the {expected} case, not {case}")


def classical_partition(family: ClassicalFamily, q: int, case: str = PRINCIPAL) -> tuple[Partition, str]:
    _check_case(family, q, case)
    if family.kind == "SP" and family.n == 2:
        # sp_2 = sl_2, with the same partition labels
        return classical_partition(ClassicalFamily("SL", 2), q, PRINCIPAL)
    base = q // 2 if (family.kind == "SP" and case == COPRINCIPAL) else q
    found: dict[Partition, list[str]] = {}
    for shape in _shapes(family, case):
        for m, s, p in solve_shape(shape, family.n, base):
            found.setdefault(p, []).append(f"{shape.name} m={m} s={s}")
    regular = family.regular_partition()
    if q >= stable_threshold(family, case):
        if found and set(found) != {regular}:
            raise SubCaseError(f"{family}, q={q}: stable range but shapes give {list(found)}")
        return regular, "regular"
    if len(found) != 1:
        raise SubCaseError(f"{family}, q={q}, {case}: {len(found)} candidate partitions "
                           f"{ {str(k): v for k, v in found.items()} }")
    (p, tags), = found.items()
    if not membership(family, p):
        raise SubCaseError(f"{family}, q={q}: {p} is not a valid orbit label")
    return p, tags[0]


def orbit_q_classical(family: ClassicalFamily, q: int, case: str = PRINCIPAL) -> OrbitQResult:
    p, tag = classical_partition(family, q, case)
    try:
        orbit = ClassicalOrbit(family, p)
    except PartitionError as exc:
        raise SubCaseError(f"{family}, q={q}: {exc}") from exc
    return OrbitQResult(str(p), orbit_dim(orbit), case, orbit, tag)


# ---------------------------------------------------------------------------
# exceptional tables

@dataclass(frozen=True)
class TableRow:
    type: str
    case: str
    q_values: tuple[int, ...]      # explicitly listed values
    bracketed: tuple[int, ...]     # values printed in parentheses
    from_q: int | None             # the ">= bound" tail, if any
    label: str
    dim: int
    integral: int

    def covers(self, q: int) -> bool:
        return q in self.q_values or (self.from_q is not None and q >= self.from_q)


@lru_cache(maxsize=None)
def exceptional_tables() -> tuple[TableRow, ...]:
    text = resources.files("orbitq").joinpath("data/exceptional_tables.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        typ, case, qspec, label, dim, integral = line.split()
        values, bracketed, tail = parse_q_cell(qspec)
        rows.append(TableRow(typ, case, values, bracketed, tail, label, int(dim), int(integral)))
    return tuple(rows)


def table_rows(ct: CartanType, case: str) -> list[TableRow]:
    return [r for r in exceptional_tables() if r.type == str(ct) and r.case == case]


def orbit_q_exceptional(ct: CartanType, q: int, extended: bool = False) -> OrbitQResult:
    """Tabulated O_q; with ``extended`` the bracketed principal entries are used
    for q divisible by the lacing number."""
    if not ct.is_exceptional:
        raise UnsupportedError(f"{ct} is not exceptional")
    rs = build(ct)
    case = case_for(rs.lacing, q)
    if q == 1:
        return OrbitQResult("0", 0, case)
    lookup = case
    if extended and case == COPRINCIPAL:
        lookup = PRINCIPAL
    rows = [r for r in table_rows(ct, lookup) if r.covers(q)]
    if lookup == PRINCIPAL and case == COPRINCIPAL:
        rows = [r for r in rows if q in r.bracketed or
                (r.from_q is not None and q >= r.from_q)]
        tag = EXTENDED
    else:
        rows = [r for r in rows if q not in r.bracketed]
        tag = case
    if len(rows) != 1:
        raise UnsupportedError(f"no table entry for {ct}, q={q}, case={lookup}")
    return OrbitQResult(rows[0].label, rows[0].dim, tag)


# ---------------------------------------------------------------------------
# dispatch

def orbit_q(ct: CartanType, q: int, extended: bool = False) -> OrbitQResult:
    if ct.is_exceptional:
        return orbit_q_exceptional(ct, q, extended)
    family = ClassicalFamily.from_cartan_type(ct)
    case = case_for(family.lacing, q)
    if extended and case == COPRINCIPAL:
        raise UnsupportedError("extended (non-coprime principal) data is tabulated only "
                               "for exceptional types")
    return orbit_q_classical(family, q, case)


def dim_Nq(ct: CartanType, q: int, extended: bool = False) -> int:
    """dim of N_q when (q, r) = 1 and of ^L N_{q/r} otherwise."""
    return orbit_q(ct, q, extended).dim
