"""End-to-end acceptance checks, one group per criterion.

A summary line per criterion is printed at the end of the run by the hook
in conftest.py.
"""
import json
import time
from pathlib import Path

import pytest

from conftest import DETAILS
from orbitq.affine import AdmissibilityError, verify_prop_2_4
from orbitq.cli import build_record, explore_noncoprime, main
from orbitq.ekv import d_classical, d_via_heights
from orbitq.oracle import centralizer_nullity, max_orbit_in_Nq, nilpotent_from_partition
from orbitq.orbits import COPRINCIPAL, PRINCIPAL, case_for, orbit_q_classical
from orbitq.partitions import ClassicalFamily, centralizer_dim_of, dual_partition, family_partitions
from orbitq.rootsys import CartanType, all_types, build, langlands_dual

GOLDEN = Path(__file__).parent / "golden"

SCALE = ([CartanType("A", r) for r in range(1, 14)]
         + [CartanType("B", r) for r in range(2, 26)]
         + [CartanType("C", r) for r in range(2, 25)]
         + [CartanType("D", r) for r in range(4, 26)])


@pytest.fixture(scope="module")
def scale_records():
    t0 = time.perf_counter()
    recs = []
    for ct in SCALE:
        h = build(ct).coxeter_number
        recs += [build_record(ct, q) for q in range(1, 2 * h + 1)]
    return recs, time.perf_counter() - t0


# -- 1 -----------------------------------------------------------------------

TABLES = [("G2_principal", ["--type", "G2"]), ("G2_coprincipal", ["--type", "G2", "--coprincipal"]),
          ("F4_principal", ["--type", "F4"]), ("F4_coprincipal", ["--type", "F4", "--coprincipal"]),
          ("E6_principal", ["--type", "E6"]), ("E7_principal", ["--type", "E7"]),
          ("E8_principal", ["--type", "E8"])]


@pytest.mark.criterion(1)
def test_tables_reproduced(capsys):
    t0 = time.perf_counter()
    mismatched = []
    for name, args in TABLES:
        assert main(["table", *args]) == 0
        out = capsys.readouterr().out
        if out != (GOLDEN / f"{name}.md").read_text(encoding="utf-8"):
            mismatched.append(name)
    elapsed = time.perf_counter() - t0
    DETAILS[1] = f"7 tables byte-identical, {elapsed:.1f}s"
    assert not mismatched
    assert elapsed < 5


# -- 2 and 7 -----------------------------------------------------------------

@pytest.mark.criterion(2)
def test_identity_at_scale(scale_records):
    recs, elapsed = scale_records
    bad = [r for r in recs if r.var_dim_joseph != r.dim_orbit]
    DETAILS[2] = f"{len(recs)} records, {len(bad)} mismatches, {elapsed:.1f}s"
    assert len(recs) > 3000
    assert not bad
    assert {r.case_tag for r in recs} == {PRINCIPAL, COPRINCIPAL}
    assert elapsed < 120


@pytest.mark.criterion(7)
def test_paths_agree_at_scale(scale_records):
    recs, _ = scale_records
    bad = [r for r in recs if not r.checks_passed["paths"]]
    DETAILS[7] = f"{len(recs)} records, {len(bad)} disagreements"
    assert not bad


# -- 3 -----------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_ekv_relation():
    n = 0
    for ct in SCALE:
        fam = ClassicalFamily.from_cartan_type(ct)
        rs = build(ct)
        for q in range(1, 2 * rs.coxeter_number + 1):
            assert d_classical(fam, q) == d_via_heights(rs, q), (ct, q)
            n += 1
    DETAILS[3] = f"{n} classical (type, q) pairs"


@pytest.mark.criterion(3)
def test_dual_types_agree():
    n = 0
    for ct in all_types(25):
        rs, dual = build(ct), build(langlands_dual(ct))
        for q in range(1, 2 * rs.coxeter_number + 1):
            assert d_via_heights(rs, q) == d_via_heights(dual, q), (ct, q)
            n += 1
    DETAILS[3] = DETAILS.get(3, "") + f", duality on {n} pairs"


# -- 4 -----------------------------------------------------------------------

def _oracle_families(max_n):
    for n in range(2, max_n + 1):
        yield ClassicalFamily("SL", n)
        if n % 2 == 0:
            yield ClassicalFamily("SP", n)
        if n >= 5 and n != 6:
            yield ClassicalFamily("SO", n)


@pytest.mark.criterion(4)
def test_oracle_equivalence():
    t0 = time.perf_counter()
    n_cases = n_parts = 0
    for fam in _oracle_families(10):
        for q in range(1, fam.n + 3):
            case = case_for(fam.lacing, q)
            if fam.kind == "SP" and fam.n == 2 and case == COPRINCIPAL:
                continue  # sp(2) = sl(2) is simply laced
            top = max_orbit_in_Nq(fam, q, case)
            assert top.partition == orbit_q_classical(fam, q, case).orbit.partition, (fam, q, case)
            n_cases += 1
    for fam in _oracle_families(8):
        for p in family_partitions(fam, include_very_even=True):
            rep = nilpotent_from_partition(fam, p)
            assert centralizer_nullity(rep) == centralizer_dim_of(fam, p), (fam, p)
            n_parts += 1
    elapsed = time.perf_counter() - t0
    DETAILS[4] = f"{n_cases} (family, q) cases, {n_parts} partitions, {elapsed:.1f}s"
    assert elapsed < 300


# -- 5 -----------------------------------------------------------------------

def _classical_exponents(ct):
    r = ct.rank
    if ct.family == "A":
        return list(range(1, r + 1))
    if ct.family in "BC":
        return list(range(1, 2 * r, 2))
    return sorted(list(range(1, 2 * r - 2, 2)) + [r - 1])


@pytest.mark.criterion(5)
def test_steinberg_duality():
    fixture = json.loads((GOLDEN / "exponents.json").read_text())
    types = all_types(25)
    for ct in types:
        rs = build(ct)
        mult = rs.height_multiplicities()
        dual = sorted(dual_partition(mult))
        expect = fixture[str(ct)] if ct.is_exceptional else _classical_exponents(ct)
        assert dual == expect, ct
        assert rs.exponents() == expect
        assert sum(expect) == len(rs.positive_roots)
    DETAILS[5] = f"{len(types)} types"


# -- 6 -----------------------------------------------------------------------

TRIPLES = [("A1", 3, 2), ("A2", 4, 3), ("B2", 5, 2), ("C3", 7, 2), ("G2", 7, 3),
           pytest.param("F4", 9, 2, marks=pytest.mark.xfail(
               strict=True, raises=AdmissibilityError,
               reason="(9, 2) is not admissible for F4: even q needs p >= h = 12")),
           ("E6", 13, 2)]


@pytest.mark.criterion(6)
@pytest.mark.parametrize("t,p,q", TRIPLES)
def test_window_check(t, p, q):
    rep = verify_prop_2_4(CartanType.parse(t), p, q, window=3 * q)
    assert len({c for c, _ in rep.bezout}) == 2
    assert rep.passed, rep.failures[:3]


@pytest.mark.criterion(6)
def test_window_check_f4_at_smallest_admissible_p():
    rep = verify_prop_2_4(CartanType("F", 4), 13, 2, window=6)
    DETAILS[6] = "6 of 7 listed triples pass; F4 at q=2 passes with p=13"
    assert rep.passed


# -- 8 -----------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_conjectural_rows_reported():
    rows = explore_noncoprime(CartanType("G", 2)) + explore_noncoprime(CartanType("F", 4))
    seen = {(r["cartan_type"], r["q"]) for r in rows}
    assert seen == {("G2", 3), ("G2", 6)} | {("F4", q) for q in (2, 4, 6, 8, 10, 12)}
    equal = sum(r["equal"] for r in rows)
    # reported only: these rows lie outside the proved range
    DETAILS[8] = f"reported, not asserted: {equal}/{len(rows)} rows with both sides equal"
