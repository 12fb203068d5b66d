from fractions import Fraction

import pytest

from orbitq.integral_roots import (
    EXTENDED,
    count_by_heights,
    count_by_pairing,
    integral_count,
    lambda_q,
    var_dim_joseph,
)
from orbitq.orbits import COPRINCIPAL, exceptional_tables, orbit_q
from orbitq.rootsys import CartanType, all_types, build


def ct(s):
    return CartanType.parse(s)


def test_q1_is_zero_weight():
    for t in all_types(5):
        lq = lambda_q(t, 1)
        assert all(x == 0 for x in lq.weight)
        rs = build(t)
        assert integral_count(lq) == len(rs.roots)
        assert var_dim_joseph(t, 1) == 0


def test_rank_one():
    lq = lambda_q(ct("A1"), 3)
    rs = build(ct("A1"))
    assert rs.pairing(lq.shifted, (1,)) == Fraction(1, 3)


def test_b2_coprincipal_pairings():
    rs = build(ct("B2"))
    lq = lambda_q(ct("B2"), 2)
    assert lq.case_tag == COPRINCIPAL
    for a in rs.roots:
        # lambda + rho = rho_check / 2
        assert rs.pairing(lq.shifted, a) == rs.pairing(rs.rho_check, a) / 2
    # long roots need 2 | ht, short roots always integral
    expect = sum(1 for a in rs.long_roots if sum(a) % 2 == 0) + len(rs.short_roots)
    assert integral_count(lq) == expect


def test_table_examples():
    assert integral_count(lambda_q(ct("G2"), 4)) == 2
    assert integral_count(lambda_q(ct("E7"), 9)) == 8
    assert var_dim_joseph(ct("F4"), 3) == 36
    assert var_dim_joseph(ct("E8"), 5) == 200


@pytest.mark.parametrize("t", all_types(7), ids=str)
def test_two_paths_agree(t):
    rs = build(t)
    for q in range(1, 2 * rs.lacing * rs.coxeter_number + 1):
        lq = lambda_q(t, q)
        assert count_by_pairing(lq) == count_by_heights(lq)


def test_extended_weight():
    lq = lambda_q(ct("F4"), 4, extended=True)
    assert lq.case_tag == EXTENDED
    rs = build(ct("F4"))
    assert lq.shifted == tuple(x / 4 for x in rs.rho)


def test_every_table_row():
    for row in exceptional_tables():
        t = ct(row.type)
        qs = list(row.q_values) + ([row.from_q, row.from_q + 1] if row.from_q else [])
        for q in qs:
            ext = q in row.bracketed or (row.case == "principal" and orbit_q(t, q).case_tag == COPRINCIPAL)
            assert integral_count(lambda_q(t, q, ext)) == row.integral
            assert var_dim_joseph(t, q, ext) == row.dim
