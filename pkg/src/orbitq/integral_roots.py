"""The weight lambda_q and its integral root system.

``integral_count`` computes |Delta(lambda_q)| twice: once straight from the
definition (which coroot pairings of lambda_q + rho are integers) and once
from heights, either of coroots inside the Langlands dual system
(principal case) or of long and short roots separately (coprincipal case).
The two must agree.  Joseph's formula then turns the count into the
dimension of the associated variety of the primitive ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np

from .orbits import COPRINCIPAL, EXTENDED, PRINCIPAL, case_for
from .rootsys import CartanType, RootSystem, Weight, build


class IntegralCountError(RuntimeError):
    pass


@dataclass(frozen=True)
class LambdaQ:
    ct: CartanType
    q: int
    weight: Weight
    case_tag: str

    @property
    def shifted(self) -> Weight:
        """lambda_q + rho."""
        rho = build(self.ct).rho
        return tuple(w + r for w, r in zip(self.weight, rho))


def lambda_q(ct: CartanType, q: int, extended: bool = False) -> LambdaQ:
    """rho/q - rho when (q, r) = 1 (or when ``extended``), else rho_check/q - rho."""
    rs = build(ct)
    case = case_for(rs.lacing, q)
    if case == COPRINCIPAL and not extended:
        top = rs.rho_check
    else:
        top = rs.rho
        if case == COPRINCIPAL:
            case = EXTENDED
    weight = tuple(t / q - r for t, r in zip(top, rs.rho))
    lq = LambdaQ(ct, q, weight, case)
    values, den = _scaled_pairings(lq)
    npos = len(rs.positive_roots)
    if not (values[:npos] > 0).all():
        bad = rs.positive_roots[int(np.argmin(values[:npos] > 0))]
        raise IntegralCountError(f"lambda_q + rho is not regular dominant at {bad}")
    return lq


@lru_cache(maxsize=None)
def _coroot_matrix(ct: CartanType) -> tuple[np.ndarray, int]:
    """Integer matrix C and scale E with <w, alpha^vee> = (C w)_alpha / E.

    Rows follow the positive roots and then their negatives.
    """
    rs = build(ct)
    order = list(rs.positive_roots) + [tuple(-x for x in a) for a in rs.positive_roots]
    # with G an integer multiple of the Gram matrix, the row is 2 G a / (a^T G a)
    _, g = rs.integer_gram
    G = np.array(g, dtype=np.int64)
    R = np.array(order, dtype=np.int64)
    num = 2 * (R @ G)
    den = np.einsum("ij,ij->i", R @ G, R)
    scale = lcm(*(int(x) for x in set(den.tolist())))
    mat = num * (scale // den)[:, None]
    return mat, scale


def _scaled_pairings(lq: LambdaQ) -> tuple[np.ndarray, int]:
    """All pairings <lambda_q + rho, alpha^vee>, as integers over a common denominator."""
    mat, scale = _coroot_matrix(lq.ct)
    v = lq.shifted
    d = lcm(*(x.denominator for x in v))
    vec = np.array([int(x * d) for x in v], dtype=np.int64)
    return mat @ vec, d * scale


@lru_cache(maxsize=None)
def _coroot_heights(ct: CartanType) -> tuple[int, ...]:
    rs = build(ct)
    return tuple(rs.coroot_height(a) for a in rs.roots)


def count_by_pairing(lq: LambdaQ) -> int:
    """#{alpha : <lambda_q + rho, alpha^vee> in Z}."""
    values, den = _scaled_pairings(lq)
    return int(np.count_nonzero(values % den == 0))


def count_by_heights(lq: LambdaQ) -> int:
    rs = build(lq.ct)
    q = lq.q
    if lq.case_tag in (PRINCIPAL, EXTENDED):
        return sum(1 for h in _coroot_heights(lq.ct) if h % q == 0)
    r = rs.lacing
    if q % r:
        raise IntegralCountError(f"q={q} is not divisible by the lacing number {r}")
    longs = sum(1 for a in rs.long_roots if sum(a) % q == 0)
    shorts = sum(1 for a in rs.short_roots if sum(a) % (q // r) == 0)
    return longs + shorts


def integral_count(lq: LambdaQ) -> int:
    direct = count_by_pairing(lq)
    by_height = count_by_heights(lq)
    if direct != by_height:
        raise IntegralCountError(f"{lq.ct}, q={lq.q}: pairing count {direct} "
                                 f"!= height count {by_height}")
    return direct


def var_dim_joseph(ct: CartanType, q: int, extended: bool = False) -> int:
    """dim N - |Delta(lambda_q)|."""
    rs: RootSystem = build(ct)
    return rs.dim_nilcone - integral_count(lambda_q(ct, q, extended))
