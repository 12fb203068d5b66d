"""Counting roots whose height is divisible by q.

``d_via_heights`` counts directly on the root system; ``d_classical`` is
the closed form in terms of n = q*m0 + s0.  The doubled formulas are
evaluated as written and halved with an exactness check, so a parity slip
fails loudly instead of rounding.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import ClassicalFamily
from .rootsys import CartanType, RootSystem, build

STANDARD = "standard"  # 0 <= s0 <= q - 1
SO_EVEN = "so-even"    # 1 <= s0 <= q


class EkvError(ArithmeticError):
    pass


@dataclass(frozen=True)
class EkvDecomposition:
    n: int
    q: int
    m0: int
    s0: int
    convention: str

    def __post_init__(self):
        lo, hi = (0, self.q - 1) if self.convention == STANDARD else (1, self.q)
        if self.n != self.q * self.m0 + self.s0 or not lo <= self.s0 <= hi:
            raise EkvError(f"bad decomposition {self}")


def decompose(n: int, q: int, convention: str = STANDARD) -> EkvDecomposition:
    if n < 1 or q < 1:
        raise EkvError("n and q must be positive")
    m0, s0 = divmod(n, q)
    if convention == SO_EVEN and s0 == 0:
        m0, s0 = m0 - 1, q
    return EkvDecomposition(n, q, m0, s0, convention)


def convention_for(family: ClassicalFamily) -> str:
    return SO_EVEN if family.kind == "SO" and family.n % 2 == 0 else STANDARD


def K(n: int, q: int, convention: str = STANDARD) -> int:
    """K_n(q) = m0^2 (q - s0) + (m0 + 1)^2 s0."""
    e = decompose(n, q, convention)
    return e.m0 ** 2 * (q - e.s0) + (e.m0 + 1) ** 2 * e.s0


def _halve(doubled: int, what: str) -> int:
    if doubled % 2:
        raise EkvError(f"{what}: 2d = {doubled} is odd")
    return doubled // 2


def d_classical(family: ClassicalFamily, q: int) -> int:
    n = family.n
    conv = convention_for(family)
    e = decompose(n, q, conv)
    k, m0 = K(n, q, conv), e.m0
    q_odd, m_odd = q % 2 == 1, m0 % 2 == 1
    if family.kind == "SL":
        return k - 1
    if family.kind == "SP":
        if not q_odd:
            extra = 0
        else:
            extra = m0 + 1 if m_odd else m0
        return _halve(k + extra, f"{family}, q={q}")
    if n % 2:
        if not q_odd:
            extra = 2 * m0 + 1
        else:
            extra = m0 if m_odd else m0 + 1
        return _halve(k - extra, f"{family}, q={q}")
    if q_odd:
        extra = m0 + 1 if m_odd else m0
    else:
        extra = 2 * (m0 + 1) if m_odd else 2 * m0
    return _halve(k - extra, f"{family}, q={q}")


def count_divisible(roots, q: int) -> int:
    return sum(1 for a in roots if sum(a) % q == 0)


def d_via_heights(ct: CartanType | RootSystem, q: int) -> int:
    """#{alpha in Delta : q | ht(alpha)} + rank, over all roots."""
    rs = ct if isinstance(ct, RootSystem) else build(ct)
    return count_divisible(rs.roots, q) + rs.rank


def coprincipal_correction(family: ClassicalFamily, q: int) -> int:
    """Signed term added to the base value to predict dim g^f in the coprincipal case.

    so_n, n odd: base d(q), correction +m0 (m0 even) or +(m0 + 1) (m0 odd).
    sp_n:        base d(q/2), correction 0 (q/2 even), else -m1 or -(m1 + 1)
                 with n = (q/2) m1 + s1.
    """
    if q % 2:
        raise EkvError("coprincipal case needs q even")
    if family.kind == "SO" and family.n % 2:
        m0 = decompose(family.n, q).m0
        return m0 if m0 % 2 == 0 else m0 + 1
    if family.kind == "SP":
        half = q // 2
        if half % 2 == 0:
            return 0
        m1 = decompose(family.n, half).m0
        return -(m1 if m1 % 2 == 0 else m1 + 1)
    raise EkvError(f"no coprincipal case for {family}")


def predicted_centralizer_coprincipal(family: ClassicalFamily, q: int) -> int:
    base = d_classical(family, q // 2 if family.kind == "SP" else q)
    return base + coprincipal_correction(family, q)


def short_root_excess(rs: RootSystem, q: int) -> int:
    """#{short alpha : (q/2) | ht} - #{short alpha : q | ht}."""
    if q % 2:
        raise EkvError("q must be even")
    shorts = rs.short_roots
    return count_divisible(shorts, q // 2) - count_divisible(shorts, q)
