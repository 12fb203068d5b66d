"""Finite root systems of the simple Lie algebras, in exact arithmetic.

Simple roots are numbered as in Bourbaki (1-based in the docs, 0-based in
code):

    A_l   1 - 2 - ... - l
    B_l   1 - 2 - ... - (l-1) => l          (alpha_l short)
    C_l   1 - 2 - ... - (l-1) <= l          (alpha_l long)
    D_l   1 - 2 - ... - (l-2) - (l-1), (l-2) - l
    E_l   1 - 3 - 4 - 5 - ... - l, 2 - 4
    F_4   1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
    G_2   1 <= 2                            (alpha_1 short)

The invariant form is normalized so that long roots have squared length 2.
Roots are integer tuples of coefficients over the simple roots; weights are
tuples of ``Fraction`` over the same basis.  Everything else (pairings,
Weyl vectors, Coxeter numbers) is derived from the Gram matrix.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Sequence

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise RootSystemError(f"invalid rank {self.rank} for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_exceptional(self) -> bool:
        return self.family in "EFG"

    @property
    def is_simply_laced(self) -> bool:
        return self.family in "ADE"


def langlands_dual(ct: CartanType) -> CartanType:
    """B and C are exchanged, every other type is self-dual."""
    swap = {"B": "C", "C": "B"}
    return CartanType(swap.get(ct.family, ct.family), ct.rank)


def _diagram(ct: CartanType):
    """Edges (0-based) and squared lengths of the simple roots."""
    l, f = ct.rank, ct.family
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1) for i in range(l - 1)]
    if f == "A":
        return chain, [two] * l
    if f == "B":
        return chain, [two] * (l - 1) + [one]
    if f == "C":
        return chain, [one] * (l - 1) + [two]
    if f == "D":
        return [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)], [two] * l
    if f == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, l - 1)]
        return edges, [two] * l
    if f == "F":
        return chain, [two, two, one, one]
    if f == "G":
        return chain, [Fraction(2, 3), two]
    raise AssertionError(f)


def gram_matrix(ct: CartanType) -> tuple[tuple[Fraction, ...], ...]:
    # for adjacent nodes (a_i|a_j) = -max(|a_i|^2, |a_j|^2) / 2
    edges, lengths = _diagram(ct)
    l = ct.rank
    g = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        g[i][i] = lengths[i]
    for i, j in edges:
        g[i][j] = g[j][i] = -max(lengths[i], lengths[j]) / 2
    return tuple(tuple(row) for row in g)


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """a_ij = 2 (a_i|a_j) / (a_i|a_i)."""
    g = gram_matrix(ct)
    rows = []
    for i, gi in enumerate(g):
        row = []
        for x in gi:
            v = 2 * x / gi[i]
            assert v.denominator == 1
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _dual_partition(parts: Sequence[int]) -> list[int]:
    if not parts:
        return []
    return [sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1)]


# Reference exponents, used only to cross-check the height-multiplicity route.
def _tabulated_exponents(ct: CartanType) -> list[int]:
    l = ct.rank
    if ct.family == "A":
        return list(range(1, l + 1))
    if ct.family in "BC":
        return list(range(1, 2 * l, 2))
    if ct.family == "D":
        return sorted(list(range(1, 2 * l - 2, 2)) + [l - 1])
    return {
        ("E", 6): [1, 4, 5, 7, 8, 11],
        ("E", 7): [1, 5, 7, 9, 11, 13, 17],
        ("E", 8): [1, 7, 11, 13, 17, 19, 23, 29],
        ("F", 4): [1, 5, 7, 11],
        ("G", 2): [1, 5],
    }[(ct.family, l)]


def dim_algebra(ct: CartanType) -> int:
    return len(build(ct).roots) + ct.rank


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    gram: tuple[tuple[Fraction, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...] = field(repr=False)
    _root_set: frozenset = field(repr=False, compare=False)

    # ----- basic geometry -------------------------------------------------
    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra."""
        return len(self.roots) + self.rank

    @property
    def dim_nilcone(self) -> int:
        return len(self.roots)

    @property
    def symmetrizers(self) -> tuple[Fraction, ...]:
        """Squared lengths (a_i|a_i) of the simple roots."""
        return tuple(self.gram[i][i] for i in range(self.rank))

    @cached_property
    def integer_gram(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """(D, G) with G = D * gram an integer matrix."""
        d = lcm(*(x.denominator for row in self.gram for x in row))
        return d, tuple(tuple(int(x * d) for x in row) for row in self.gram)

    def form(self, u: Sequence, v: Sequence) -> Fraction:
        """(u|v) for vectors given in simple-root coordinates."""
        d, g = self.integer_gram
        du = lcm(*(Fraction(x).denominator for x in u))
        dv = lcm(*(Fraction(x).denominator for x in v))
        if du > 1:
            u = [int(x * du) for x in u]
        if dv > 1:
            v = [int(x * dv) for x in v]
        total = 0
        for i, ui in enumerate(u):
            if ui:
                gi = g[i]
                total += ui * sum(gi[j] * vj for j, vj in enumerate(v) if vj)
        return Fraction(int(total), d * du * dv)

    def norm2(self, v: Sequence) -> Fraction:
        n = self._root_norms.get(tuple(v))
        return self.form(v, v) if n is None else n

    @cached_property
    def _root_norms(self) -> dict:
        return {a: self.form(a, a) for a in self.roots}

    def is_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._root_set

    def _check_root(self, alpha) -> Root:
        alpha = tuple(alpha)
        if alpha not in self._root_set:
            raise RootSystemError(f"{alpha} is not a root of {self.cartan_type}")
        return alpha

    def is_long(self, alpha: Sequence[int]) -> bool:
        return self.norm2(self._check_root(alpha)) == 2

    def is_positive(self, alpha: Sequence[int]) -> bool:
        return any(c > 0 for c in self._check_root(alpha))

    @cached_property
    def long_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if self.norm2(a) == 2)

    @cached_property
    def short_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if self.norm2(a) != 2)

    def height(self, alpha: Sequence[int]) -> int:
        return sum(self._check_root(alpha))

    def coroot(self, alpha: Sequence[int]) -> Weight:
        """alpha^vee = 2 alpha / (alpha|alpha), in simple-root coordinates."""
        alpha = self._check_root(alpha)
        s = 2 / self.norm2(alpha)
        return tuple(Fraction(c) * s for c in alpha)

    def pairing(self, w: Sequence, alpha: Sequence[int]) -> Fraction:
        """<w, alpha^vee> = 2 (w|alpha) / (alpha|alpha)."""
        alpha = self._check_root(alpha)
        return 2 * self.form(w, alpha) / self.norm2(alpha)

    def simple_reflection(self, i: int, v: Sequence) -> tuple:
        c = sum(v[j] * self.cartan_matrix[i][j] for j in range(self.rank))
        out = list(v)
        out[i] -= c
        return tuple(out)

    # ----- distinguished vectors ------------------------------------------
    @cached_property
    def rho(self) -> Weight:
        return _half_sum(self.positive_roots, self.rank)

    @cached_property
    def rho_check(self) -> Weight:
        """Half sum of the positive coroots, as an element of h* via the form."""
        return _half_sum([self.coroot(a) for a in self.positive_roots], self.rank)

    @cached_property
    def theta(self) -> Root:
        return max(self.positive_roots, key=sum)

    @cached_property
    def theta_short(self) -> Root:
        shorts = [a for a in self.positive_roots if self.norm2(a) != 2]
        if not shorts:
            return self.theta
        return max(shorts, key=sum)

    @cached_property
    def lacing(self) -> int:
        """r-check: ratio of squared lengths of long and short roots."""
        r = 2 / min(self.symmetrizers)
        assert r.denominator == 1
        return int(r)

    @cached_property
    def coxeter_number(self) -> int:
        h = self.form(self.rho_check, self.theta) + 1
        assert h.denominator == 1
        return int(h)

    @cached_property
    def dual_coxeter_number(self) -> int:
        hv = self.pairing(self.rho, self.theta) + 1
        assert hv.denominator == 1
        return int(hv)

    # ----- heights and exponents ------------------------------------------
    def height_multiplicities(self) -> list[int]:
        """p_i = number of positive roots of height i, for i = 1 .. h-1."""
        top = max(sum(a) for a in self.positive_roots)
        counts = [0] * top
        for a in self.positive_roots:
            counts[sum(a) - 1] += 1
        return counts

    def exponents(self) -> list[int]:
        """Exponents as the dual partition of the height multiplicities."""
        p = self.height_multiplicities()
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise RootSystemError("height multiplicities are not a partition")
        ex = sorted(_dual_partition(p))
        if ex != _tabulated_exponents(self.cartan_type):
            raise RootSystemError(f"exponent mismatch for {self.cartan_type}: {ex}")
        return ex

    # ----- Langlands dual ---------------------------------------------------
    def dual(self) -> "RootSystem":
        return build(langlands_dual(self.cartan_type))

    @cached_property
    def dual_index_map(self) -> tuple[int, ...]:
        """pi with alpha_i^vee / r = dual simple root pi(i)."""
        return _dual_index_map(self.cartan_type)

    def coroot_in_dual(self, alpha: Sequence[int]) -> Root:
        """alpha^vee / r as an integer root of the Langlands dual system."""
        alpha = self._check_root(alpha)
        n2 = self.norm2(alpha)
        pi = self.dual_index_map
        out = [0] * self.rank
        for i, c in enumerate(alpha):
            v = c * self.gram[i][i] / n2
            assert v.denominator == 1
            out[pi[i]] = int(v)
        out = tuple(out)
        if not self.dual().is_root(out):
            raise RootSystemError(f"coroot of {alpha} is not a dual root")
        return out

    def coroot_height(self, alpha: Sequence[int]) -> int:
        return self.dual().height(self.coroot_in_dual(alpha))


def _half_sum(vectors, rank) -> Weight:
    acc = [Fraction(0)] * rank
    for v in vectors:
        for i, c in enumerate(v):
            acc[i] += c
    return tuple(x / 2 for x in acc)


@lru_cache(maxsize=None)
def _dual_index_map(ct: CartanType) -> tuple[int, ...]:
    a = cartan_matrix(ct)
    ad = cartan_matrix(langlands_dual(ct))
    l = ct.rank
    for pi in (tuple(range(l)), tuple(reversed(range(l)))):
        if all(ad[pi[i]][pi[j]] == a[j][i] for i in range(l) for j in range(l)):
            return pi
    raise RootSystemError(f"no index map to the dual of {ct}")


@lru_cache(maxsize=None)
def build(ct: CartanType) -> RootSystem:
    """Generate all roots by closing the simple roots under simple reflections."""
    if not isinstance(ct, CartanType):
        ct = CartanType.parse(str(ct))
    a = cartan_matrix(ct)
    l = ct.rank
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(l):
                c = sum(beta[j] * a[i][j] for j in range(l))
                if c == 0:
                    continue
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    roots = sorted(seen, key=lambda r: (sum(r), r))
    for r in roots:
        if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
            raise RootSystemError(f"mixed-sign root {r}")
    pos = tuple(r for r in roots if sum(r) > 0)
    rs = RootSystem(ct, gram_matrix(ct), a, tuple(roots), pos, frozenset(roots))
    _validate(rs)
    return rs


def _validate(rs: RootSystem) -> None:
    assert len(rs.positive_roots) * 2 == len(rs.roots)
    assert rs.norm2(rs.theta) == 2
    tops = [a for a in rs.positive_roots if sum(a) == sum(rs.theta)]
    assert len(tops) == 1, "highest root not unique"
    rc = rs.rho_check
    for a in rs.positive_roots:
        assert rs.form(rc, a) == sum(a)
    for i in range(rs.rank):
        e = tuple(int(i == j) for j in range(rs.rank))
        assert rs.pairing(rs.rho, e) == 1


# Spec-level operations as plain functions.
def height(rs: RootSystem, alpha: Sequence[int]) -> int:
    return rs.height(alpha)


def pairing(rs: RootSystem, w: Sequence, alpha: Sequence[int]) -> Fraction:
    return rs.pairing(w, alpha)


def exponents(rs: RootSystem) -> list[int]:
    return rs.exponents()


def all_types(max_classical_rank: int = 8) -> list[CartanType]:
    """Every supported type up to the given classical rank."""
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        out += [CartanType(fam, r) for r in range(lo, max_classical_rank + 1)]
    out += [CartanType("E", r) for r in (6, 7, 8)]
    out += [CartanType("F", 4), CartanType("G", 2)]
    return out
