import pytest

from orbitq.ekv import (
    SO_EVEN,
    STANDARD,
    EkvError,
    K,
    coprincipal_correction,
    d_classical,
    d_via_heights,
    decompose,
    predicted_centralizer_coprincipal,
    short_root_excess,
)
from orbitq.orbits import orbit_q
from orbitq.partitions import ClassicalFamily, centralizer_dim
from orbitq.rootsys import CartanType, all_types, build


def fam(kind, n):
    return ClassicalFamily(kind, n)


def test_K_examples():
    assert K(7, 3) == 17
    for q in range(1, 9):
        assert K(q, q) == q
    assert K(8, 3, SO_EVEN) == 22
    assert decompose(6, 3, SO_EVEN).s0 == 3
    assert decompose(6, 3, STANDARD).s0 == 0


def test_d_classical_examples():
    assert d_classical(fam("SL", 7), 3) == 16
    assert d_classical(fam("SP", 4), 2) == 4
    assert d_classical(fam("SO", 7), 2) == 9


def test_d_via_heights_examples():
    assert d_via_heights(CartanType.parse("A2"), 2) == 4
    assert d_via_heights(CartanType.parse("G2"), 7) == 2
    for t in all_types(6):
        assert d_via_heights(t, 1) == build(t).dim


def test_correction_examples():
    assert coprincipal_correction(fam("SO", 7), 2) == 4
    assert coprincipal_correction(fam("SP", 4), 4) == 0
    assert coprincipal_correction(fam("SP", 6), 2) == -6
    with pytest.raises(EkvError):
        coprincipal_correction(fam("SO", 7), 3)
    with pytest.raises(EkvError):
        coprincipal_correction(fam("SL", 5), 2)


def _classical(max_rank):
    for t in all_types(max_rank):
        if not t.is_exceptional:
            yield t


@pytest.mark.parametrize("t", list(_classical(8)), ids=str)
def test_closed_form_matches_heights(t):
    f = ClassicalFamily.from_cartan_type(t)
    rs = build(t)
    for q in range(1, 2 * rs.coxeter_number + 1):
        assert d_classical(f, q) == d_via_heights(rs, q)


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_langlands_duality_of_counts(t):
    rs = build(t)
    for q in range(1, 2 * rs.coxeter_number + 1):
        assert d_via_heights(rs, q) == d_via_heights(rs.dual(), q)


@pytest.mark.parametrize("kind,ns", [("SO", range(5, 22, 2)), ("SP", range(4, 22, 2))])
def test_coprincipal_centralizer_prediction(kind, ns):
    for n in ns:
        f = fam(kind, n)
        t = f.cartan_type
        for q in range(2, 4 * n, 2):
            res = orbit_q(t, q)
            assert predicted_centralizer_coprincipal(f, q) == centralizer_dim(res.orbit), (f, q)


@pytest.mark.parametrize("t", ["B3", "C4", "F4", "B5"])
def test_short_root_bookkeeping(t):
    rs = build(CartanType.parse(t))
    for q in range(2, 20, 2):
        direct = sum(1 for a in rs.short_roots if sum(a) % (q // 2) == 0) \
            - sum(1 for a in rs.short_roots if sum(a) % q == 0)
        assert short_root_excess(rs, q) == direct
