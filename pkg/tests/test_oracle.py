import numpy as np
import pytest

from orbitq.exact import inverse, matmul, nullity, rank
from orbitq.oracle import (
    OracleError,
    ad_nilpotency_order,
    centralizer_nullity,
    form_matrix,
    in_algebra,
    little_adjoint_order,
    max_orbit_in_Nq,
    nilpotent_from_partition,
    realization,
)
from orbitq.partitions import ClassicalFamily, family_partitions


def fam(kind, n):
    return ClassicalFamily(kind, n)


def test_exact_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert nullity([[1, 0, 1], [0, 1, 1]]) == 1
    m = [[2, 1], [1, 1]]
    assert matmul(m, inverse(m)) == [[1, 0], [0, 1]]
    big = [[10 ** 30, 1], [10 ** 30 + 1, 1]]
    assert rank(big) == 2


@pytest.mark.parametrize("f", [fam("SL", 4), fam("SO", 7), fam("SO", 8), fam("SP", 6)], ids=str)
def test_realization_dimension(f):
    r = realization(f)
    assert r.dim == f.dim
    for b in r.basis[:5]:
        assert in_algebra(f, b)


def test_form_matrices():
    assert form_matrix(fam("SL", 3)) is None
    j = form_matrix(fam("SP", 4))
    assert (j.T == -j).all()
    s = form_matrix(fam("SO", 5))
    assert (s.T == s).all()


@pytest.mark.parametrize("f", [fam("SL", 5), fam("SO", 7), fam("SO", 8), fam("SP", 6)], ids=str)
def test_representatives_have_the_right_jordan_type(f):
    for p in family_partitions(f, include_very_even=True):
        x = nilpotent_from_partition(f, p).matrix
        assert in_algebra(f, x)
        # rank of x^k equals the number of boxes outside the first k columns
        pw = np.eye(f.n, dtype=object)
        for k in range(1, p[0] + 1):
            pw = pw.dot(x)
            assert rank(pw.tolist()) == sum(max(part - k, 0) for part in p)


def test_centralizer_examples():
    assert centralizer_nullity(nilpotent_from_partition(fam("SL", 4), (2, 2))) == 7
    assert centralizer_nullity(nilpotent_from_partition(fam("SO", 7), (3, 3, 1))) == 7
    assert centralizer_nullity(nilpotent_from_partition(fam("SP", 4), (2, 2))) == 4


def test_conjugate_representative_agrees():
    f = fam("SO", 7)
    for p in family_partitions(f):
        a = nilpotent_from_partition(f, p)
        b = nilpotent_from_partition(f, p, variant=1)
        assert not np.array_equal(a.matrix, b.matrix) or p == (1,) * 7
        assert centralizer_nullity(a) == centralizer_nullity(b)
        assert ad_nilpotency_order(a) == ad_nilpotency_order(b)


@pytest.mark.parametrize("f", [fam("SL", 5), fam("SO", 7), fam("SO", 9), fam("SP", 6), fam("SP", 8)], ids=str)
def test_regular_orders(f):
    reg = nilpotent_from_partition(f, f.regular_partition())
    assert ad_nilpotency_order(reg) == 2 * f.coxeter_number - 1
    if f.lacing == 2:
        expect = f.n if f.kind == "SO" else 2 * f.n - 3
        assert little_adjoint_order(reg) == expect


def test_max_orbit_examples():
    assert max_orbit_in_Nq(fam("SL", 7), 3).partition == (3, 3, 1)
    assert max_orbit_in_Nq(fam("SP", 4), 2, "coprincipal").partition == (2, 1, 1)
    with pytest.raises(OracleError):
        max_orbit_in_Nq(fam("SL", 12), 3)
    with pytest.raises(OracleError):
        max_orbit_in_Nq(fam("SO", 7), 3, "coprincipal")
