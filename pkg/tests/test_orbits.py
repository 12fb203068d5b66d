import pytest

from orbitq.orbits import (
    COPRINCIPAL,
    EXTENDED,
    PRINCIPAL,
    UnsupportedError,
    case_for,
    classical_partition,
    dim_Nq,
    exceptional_tables,
    orbit_q,
    orbit_q_classical,
    orbit_q_exceptional,
    stable_threshold,
)
from orbitq.partitions import ClassicalFamily
from orbitq.rootsys import CartanType, build


def ct(s):
    return CartanType.parse(s)


def test_case_for():
    assert case_for(1, 6) == PRINCIPAL
    assert case_for(2, 5) == PRINCIPAL
    assert case_for(2, 4) == COPRINCIPAL
    assert case_for(3, 9) == COPRINCIPAL
    with pytest.raises(UnsupportedError):
        case_for(2, 0)


def test_classical_examples():
    r = orbit_q_classical(ClassicalFamily("SL", 7), 3)
    assert r.label == "(3^2,1)" and r.dim == 32
    p, _ = classical_partition(ClassicalFamily("SP", 4), 2, COPRINCIPAL)
    assert p == (2, 1, 1)
    for n in range(2, 9):
        for q in range(n, n + 3):
            r = orbit_q_classical(ClassicalFamily("SL", n), q)
            assert r.orbit.partition == (n,) and r.dim == n * n - n


def test_exceptional_examples():
    def key(r):
        return r.label, r.dim, r.case_tag

    assert key(orbit_q_exceptional(ct("E6"), 5)) == ("A4+A1", 62, PRINCIPAL)
    assert key(orbit_q_exceptional(ct("F4"), 6)) == ("F4(a3)", 40, COPRINCIPAL)
    assert key(orbit_q_exceptional(ct("G2"), 2)) == ("~A1", 8, PRINCIPAL)
    assert dim_Nq(ct("G2"), 4) == 10
    assert dim_Nq(ct("E7"), 14) == 124
    for n in range(2, 8):
        assert dim_Nq(CartanType("A", n - 1), 1) == 0


def test_extended_lookup():
    r = orbit_q(ct("F4"), 4, extended=True)
    assert (r.label, r.dim, r.case_tag) == ("F4(a3)", 40, EXTENDED)
    assert orbit_q(ct("G2"), 9, extended=True).dim == 12
    # extended has no effect at coprime q
    assert orbit_q(ct("F4"), 5, extended=True).case_tag == PRINCIPAL
    with pytest.raises(UnsupportedError):
        orbit_q(ct("B3"), 2, extended=True)


def test_table_file_is_consistent():
    rows = exceptional_tables()
    assert {r.type for r in rows} == {"G2", "F4", "E6", "E7", "E8"}
    for r in rows:
        rs = build(ct(r.type))
        assert r.dim + r.integral == rs.dim_nilcone
        for q in r.q_values:
            natural = case_for(rs.lacing, q)
            assert (q in r.bracketed) == (natural != r.case)


@pytest.mark.parametrize("t", ["G2", "F4", "E6", "E7", "E8"])
def test_exceptional_monotone_and_stable(t):
    rs = build(ct(t))
    for case in (PRINCIPAL, COPRINCIPAL):
        qs = [q for q in range(1, 3 * rs.lacing * rs.coxeter_number) if case_for(rs.lacing, q) == case]
        dims = [dim_Nq(ct(t), q) for q in qs]
        assert dims == sorted(dims)
        if dims:
            assert dims[-1] == rs.dim_nilcone


def _families(max_n):
    for n in range(2, max_n + 1):
        yield ClassicalFamily("SL", n)
        if n % 2 == 0:
            yield ClassicalFamily("SP", n)
        if n >= 5 and n != 6:
            yield ClassicalFamily("SO", n)


@pytest.mark.parametrize("f", list(_families(40)), ids=str)
def test_exactly_one_subcase_and_monotone(f):
    h = f.coxeter_number
    for case in (PRINCIPAL, COPRINCIPAL):
        qs = [q for q in range(1, 2 * max(h, 2) + 3) if case_for(f.lacing, q) == case]
        if f.kind == "SP" and f.n == 2:
            qs = [q for q in qs if case == PRINCIPAL]
        dims = [orbit_q_classical(f, q, case).dim for q in qs]
        assert dims == sorted(dims)
        if qs and max(qs) >= stable_threshold(f, case):
            assert dims[-1] == f.dim_nilcone


def test_stable_threshold_is_sharp():
    # just below the threshold the orbit is not yet regular
    for n in range(5, 30):
        for kind in ("SL", "SO", "SP"):
            if kind == "SP" and n % 2 or kind == "SO" and n == 6:
                continue
            f = ClassicalFamily(kind, n)
            cases = [PRINCIPAL] + ([COPRINCIPAL] if f.lacing == 2 else [])
            for case in cases:
                t = stable_threshold(f, case)
                below = [q for q in range(1, t) if case_for(f.lacing, q) == case]
                if below:
                    assert orbit_q_classical(f, below[-1], case).dim < f.dim_nilcone


def test_wrong_case_rejected():
    with pytest.raises(UnsupportedError):
        orbit_q_classical(ClassicalFamily("SO", 7), 3, COPRINCIPAL)
    with pytest.raises(UnsupportedError):
        orbit_q_exceptional(ct("A3"), 2)
