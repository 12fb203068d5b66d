"""Brute-force matrix computations for sl_n, so_n and sp_n.

Nothing in here uses orbit theory: the Lie algebra is realized as explicit
n x n matrices preserving an anti-diagonal form, a nilpotent element is
built from a partition and accepted only after its Jordan type and form
condition are checked, and the nilpotency orders and centralizer
dimensions are measured with exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from . import exact
from .partitions import (
    ClassicalFamily,
    ClassicalOrbit,
    Partition,
    family_partitions,
    is_very_even,
    membership,
)

# int64 products stay exact below this bound; beyond it we switch to objects
_SAFE = 1 << 40


class OracleError(RuntimeError):
    pass


def form_matrix(family: ClassicalFamily) -> np.ndarray | None:
    """Anti-diagonal invariant form; None for sl_n."""
    n = family.n
    if family.kind == "SL":
        return None
    j = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        j[i, n - 1 - i] = 1 if (family.kind == "SO" or i < n // 2) else -1
    return j


def in_algebra(family: ClassicalFamily, x) -> bool:
    x = np.asarray(x, dtype=object)
    if family.kind == "SL":
        return sum(x[i, i] for i in range(family.n)) == 0
    j = form_matrix(family).astype(object)
    return not (x.T.dot(j) + j.dot(x)).any()


@dataclass(frozen=True)
class MatrixRealization:
    family: ClassicalFamily
    basis: np.ndarray  # shape (dim, n, n), int64

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


@lru_cache(maxsize=None)
def realization(family: ClassicalFamily) -> MatrixRealization:
    n = family.n
    mats = []

    def unit(i, k):
        e = np.zeros((n, n), dtype=np.int64)
        e[i, k] = 1
        return e

    if family.kind == "SL":
        for i in range(n):
            for k in range(n):
                if i != k:
                    mats.append(unit(i, k))
        for i in range(n - 1):
            mats.append(unit(i, i) - unit(i + 1, i + 1))
    else:
        # x^T J + J x = 0  <=>  J x is antisymmetric (SO) / symmetric (SP)
        j = form_matrix(family)
        jinv = j.T  # J is a signed permutation matrix
        sign = -1 if family.kind == "SO" else 1
        for i in range(n):
            for k in range(i + (1 if family.kind == "SO" else 0), n):
                s = unit(i, k) + sign * unit(k, i)
                if i == k:
                    s = unit(i, i)
                mats.append(jinv @ s)
    basis = np.array(mats, dtype=np.int64)
    real = MatrixRealization(family, basis)
    _check_realization(real)
    return real


def _check_realization(real: MatrixRealization) -> None:
    fam = real.family
    if real.dim != fam.dim:
        raise OracleError(f"{fam}: basis has {real.dim} elements, expected {fam.dim}")
    flat = real.basis.reshape(real.dim, -1)
    if exact.rank(flat.tolist()) != fam.dim:
        raise OracleError(f"{fam}: basis is not independent")
    for b in real.basis:
        if not in_algebra(fam, b):
            raise OracleError(f"{fam}: basis element violates the form condition")
    # closure: every bracket satisfies the defining condition, hence lies in the span
    br = np.einsum("aij,bjk->abik", real.basis, real.basis)
    br = br - br.transpose(1, 0, 2, 3)
    if fam.kind == "SL":
        if np.trace(br, axis1=2, axis2=3).any():
            raise OracleError(f"{fam}: bracket leaves sl_n")
    else:
        j = form_matrix(fam)
        cond = np.swapaxes(br, 2, 3) @ j + j @ br
        if cond.any():
            raise OracleError(f"{fam}: bracket leaves the algebra")


# ---------------------------------------------------------------------------
# nilpotent representatives

@dataclass(frozen=True)
class NilpotentRep:
    family: ClassicalFamily
    partition: Partition
    matrix: np.ndarray  # integer n x n


def _shift(a: int) -> list[list[int]]:
    return [[int(k == i + 1) for k in range(a)] for i in range(a)]


def _blocks(family: ClassicalFamily, p: Partition):
    """Split p into single Jordan blocks and W + W* pairs.

    Returns (blocks, pairs): blocks are part sizes carrying their own form,
    pairs are part sizes a realized as N_a + (-N_a^T) on a 2a-dim space.
    """
    if family.kind == "SL":
        return list(p), []
    forced_parity = 0 if family.kind == "SO" else 1  # parts that must pair up
    blocks, pairs = [], []
    counts = p.multiplicities()
    for part in sorted(counts, reverse=True):
        m = counts[part]
        if part % 2 == forced_parity:
            pairs += [part] * (m // 2)
        else:
            blocks += [part] * m
    return blocks, pairs


def _block_form_model(family: ClassicalFamily, p: Partition):
    """x and the form B in a block basis, plus the anisotropic sign targets."""
    n = family.n
    x = [[0] * n for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    blocks, pairs = _blocks(family, p)
    off = 0
    odd_seen = 0
    for a in blocks:
        nn = _shift(a)
        for i in range(a):
            for k in range(a):
                x[off + i][off + k] = nn[i][k]
        sigma = 1
        if a % 2:
            # alternate the sign of the anisotropic middle vector so that
            # consecutive odd blocks combine into hyperbolic planes over Q
            target = 1 if odd_seen % 2 == 0 else -1
            odd_seen += 1
            mid = (a - 1) // 2
            sigma = target * (-1) ** mid
        for i in range(a):
            b[off + i][off + a - 1 - i] = sigma * (-1) ** i
        off += a
    for a in pairs:
        nn = _shift(a)
        for i in range(a):
            for k in range(a):
                x[off + i][off + k] = nn[i][k]
                x[off + a + i][off + a + k] = -nn[k][i]
        for i in range(a):
            b[off + i][off + a + i] = 1
            b[off + a + i][off + i] = family.epsilon
        off += 2 * a
    assert off == n
    return x, b


def _witt_basis(family: ClassicalFamily, b) -> list[list[Fraction]]:
    """Columns M with M^T B M equal to the anti-diagonal form."""
    n = family.n
    vec = lambda i, s=1: [Fraction(s if k == i else 0) for k in range(n)]
    hyper, aniso = [], []
    done = set()
    for i in range(n):
        if i in done:
            continue
        partner = [k for k in range(n) if b[i][k]]
        assert len(partner) == 1
        k = partner[0]
        if k == i:
            aniso.append((i, b[i][i]))
            done.add(i)
            continue
        done |= {i, k}
        hyper.append((vec(i), vec(k, b[i][k])))  # B(e_i, s e_k) = 1
    plus = [i for i, s in aniso if s == 1]
    minus = [i for i, s in aniso if s == -1]
    if len(plus) - len(minus) not in (0, 1):
        raise OracleError(f"cannot split the form for {family}")
    for xp, ym in zip(plus, minus):
        u = [a + c for a, c in zip(vec(xp), vec(ym))]
        v = [(a - c) / 2 for a, c in zip(vec(xp), vec(ym))]
        hyper.append((u, v))
    cols = [None] * n
    for k, (f, g) in enumerate(hyper):
        cols[k] = f
        cols[n - 1 - k] = g
    if len(plus) > len(minus):
        cols[n // 2] = vec(plus[-1])
    assert all(c is not None for c in cols)
    return exact.transpose(cols)


def _jordan_ranks_ok(x: np.ndarray, p: Partition) -> bool:
    n = x.shape[0]
    power = np.eye(n, dtype=object)
    xo = x.astype(object)
    for k in range(0, (p[0] if p else 0) + 1):
        expected = sum(max(part - k, 0) for part in p)
        if exact.rank(power.tolist()) != expected:
            return False
        power = power.dot(xo)
    return not power.any()


def nilpotent_from_partition(family: ClassicalFamily, p, variant: int = 0) -> NilpotentRep:
    """An integer nilpotent matrix of Jordan type p inside the algebra.

    ``variant`` > 0 conjugates the basic representative by unipotent group
    elements, giving a different matrix in the same orbit.
    """
    p = Partition(p)
    if not membership(family, p):
        raise OracleError(f"{p} does not label an orbit of {family}")
    if family.kind == "SL":
        x, _ = _block_form_model(family, p)
        mat = np.array(x, dtype=np.int64)
    else:
        x, b = _block_form_model(family, p)
        m = _witt_basis(family, b)
        xr = exact.matmul(exact.matmul(exact.inverse(m), x), m)
        den = 1
        for row in xr:
            for v in row:
                den = lcm(den, Fraction(v).denominator)
        mat = np.array([[int(v * den) for v in row] for row in xr], dtype=np.int64)
    for s in range(variant):
        mat = _conjugate_unipotent(family, mat, s)
    if not in_algebra(family, mat):
        raise OracleError(f"representative of {p} is not in {family}")
    if not _jordan_ranks_ok(mat, p):
        raise OracleError(f"representative of {p} has the wrong Jordan type")
    return NilpotentRep(family, p, mat)


def _conjugate_unipotent(family, mat, seed):
    """g x g^-1 with g = 1 + y, y^2 = 0, y taken from the algebra basis."""
    real = realization(family)
    n = family.n
    one = np.eye(n, dtype=np.int64)
    picks = [y for y in real.basis if not (y @ y).any()]
    y = picks[(7 * seed + 3) % len(picks)] + picks[(11 * seed + 5) % len(picks)]
    if (y @ y).any():
        y = picks[(7 * seed + 3) % len(picks)]
    return (one + y) @ mat @ (one - y)


# ---------------------------------------------------------------------------
# measured invariants

def _operator_order(step, start: np.ndarray) -> int:
    """Smallest N with step^N(start[k]) = 0 for every k."""
    z = start
    k = 0
    while z.any():
        if z.dtype != object and np.abs(z).max() > _SAFE:
            z = z.astype(object)
        z = step(z)
        k += 1
        if k > 4 * start.shape[-1] + 4:
            raise OracleError("operator is not nilpotent")
    return max(k, 1)


def ad_nilpotency_order(rep: NilpotentRep) -> int:
    """Smallest N with (ad x)^N = 0 on the Lie algebra (1 for x = 0)."""
    x = rep.matrix
    basis = realization(rep.family).basis
    return _operator_order(lambda z: x @ z - z @ x, basis)


def little_adjoint_order(rep: NilpotentRep) -> int:
    """Nilpotency order of x in the representation with highest weight theta_s.

    For so_{2l+1} this is the natural representation; for sp_n it is the
    action A -> xA + Ax^T on antisymmetric matrices, i.e. on the exterior
    square, whose invariant line is killed by x.
    """
    fam = rep.family
    x = rep.matrix
    n = fam.n
    if fam.kind == "SO" and n % 2:
        return _operator_order(lambda z: x @ z, np.eye(n, dtype=np.int64)[None])
    if fam.kind == "SP":
        mats = []
        for i in range(n):
            for k in range(i + 1, n):
                a = np.zeros((n, n), dtype=np.int64)
                a[i, k], a[k, i] = 1, -1
                mats.append(a)
        return _operator_order(lambda z: x @ z + z @ x.T, np.array(mats))
    raise OracleError(f"no little adjoint representation for {fam}")


def centralizer_nullity(rep: NilpotentRep) -> int:
    """dim of {z in g : [x, z] = 0}, by exact rank of z -> [x, z]."""
    basis = realization(rep.family).basis
    x = rep.matrix
    images = (x @ basis - basis @ x).reshape(basis.shape[0], -1)
    cols = images[:, images.any(axis=0)]
    return basis.shape[0] - exact.rank(cols.tolist())


@dataclass(frozen=True)
class OrbitMeasurements:
    partition: Partition
    centralizer: int
    orbit_dim: int
    ad_order: int
    little_order: int | None


@lru_cache(maxsize=None)
def measure(family: ClassicalFamily, p: Partition) -> OrbitMeasurements:
    rep = nilpotent_from_partition(family, p)
    c = centralizer_nullity(rep)
    little = None
    if family.lacing == 2:
        little = little_adjoint_order(rep)
    return OrbitMeasurements(p, c, family.dim - c, ad_nilpotency_order(rep), little)


def max_orbit_in_Nq(family: ClassicalFamily, q: int, case: str = "principal",
                    max_n: int = 10) -> ClassicalOrbit:
    """The unique dimension-maximal orbit in N_q (or ^L N_{q/r}).

    principal:   (ad x)^(2q) = 0
    coprincipal: pi_{theta_s}(x)^q = 0, i.e. ^L N_{q/2} for lacing number 2
    """
    if family.n > max_n:
        raise OracleError(f"{family} exceeds the oracle bound n <= {max_n}")
    if case == "coprincipal":
        if family.lacing != 2 or q % 2:
            raise OracleError(f"coprincipal case needs lacing 2 and even q ({family}, q={q})")
        ok = lambda m: m.little_order <= q
    elif case == "principal":
        ok = lambda m: m.ad_order <= 2 * q
    else:
        raise ValueError(case)
    inside = [measure(family, p) for p in family_partitions(family, include_very_even=True)]
    inside = [m for m in inside if ok(m)]
    top = max(m.orbit_dim for m in inside)
    winners = [m for m in inside if m.orbit_dim == top]
    if len(winners) != 1:
        raise OracleError(f"{family}, q={q}, {case}: maximum not unique: "
                          f"{[str(m.partition) for m in winners]}")
    if family.kind == "SO" and is_very_even(winners[0].partition):
        raise OracleError(f"{family}, q={q}: very even maximum {winners[0].partition}")
    return ClassicalOrbit(family, winners[0].partition)
