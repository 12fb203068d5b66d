"""Partitions and the nilpotent orbits of sl_n, so_n and sp_n.

A nilpotent orbit of a classical Lie algebra is labelled by the Jordan type
of its elements in the natural representation.  For so_n the partition must
have every even part with even multiplicity, for sp_n every odd part.
Centralizer dimensions are read off the dual partition.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .rootsys import CartanType


class PartitionError(ValueError):
    pass


class VeryEvenError(PartitionError):
    """Very even so_n partitions label two orbits and are never needed here."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def normalize(cls, parts) -> "Partition":
        """Drop zeros and sort; used when a formula produces boundary parts."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        if not self:
            return "()"
        chunks = []
        for part, mult in sorted(self.multiplicities().items(), reverse=True):
            chunks.append(str(part) if mult == 1 else f"{part}^{mult}")
        return "(" + ",".join(chunks) + ")"


def dual_partition(p) -> Partition:
    """Transpose of the Young diagram."""
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


# ---------------------------------------------------------------------------
# classical families

_KINDS = ("SL", "SO", "SP")


@dataclass(frozen=True, order=True)
class ClassicalFamily:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise PartitionError(f"unknown family {self.kind!r}")
        if self.kind == "SL" and self.n < 2:
            raise PartitionError("SL(n) needs n >= 2")
        if self.kind == "SO" and self.n < 5:
            raise PartitionError("SO(n) needs n >= 5")
        if self.kind == "SP" and (self.n < 2 or self.n % 2):
            raise PartitionError("SP(n) needs n even and positive")

    def __str__(self):
        return f"{self.kind}({self.n})"

    @classmethod
    def parse(cls, text: str) -> "ClassicalFamily":
        m = re.fullmatch(r"\s*(sl|so|sp)\s*\(?\s*(\d+)\s*\)?\s*", text, re.I)
        if not m:
            raise PartitionError(f"cannot parse family {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @classmethod
    def from_cartan_type(cls, ct: CartanType) -> "ClassicalFamily":
        l = ct.rank
        if ct.family == "A":
            return cls("SL", l + 1)
        if ct.family == "B":
            return cls("SO", 2 * l + 1)
        if ct.family == "C":
            return cls("SP", 2 * l)
        if ct.family == "D":
            return cls("SO", 2 * l)
        raise PartitionError(f"{ct} is not classical")

    @property
    def cartan_type(self) -> CartanType | None:
        """Matching type within the root-system rank bounds, if any."""
        n = self.n
        if self.kind == "SL":
            return CartanType("A", n - 1)
        if self.kind == "SP":
            return CartanType("C", n // 2) if n >= 4 else CartanType("A", 1)
        if n % 2:
            return CartanType("B", (n - 1) // 2)
        return CartanType("D", n // 2) if n >= 8 else None

    @property
    def epsilon(self) -> int:
        """+1 for a symmetric form, -1 for a symplectic one, 0 for sl."""
        return {"SL": 0, "SO": 1, "SP": -1}[self.kind]

    @property
    def dim(self) -> int:
        n = self.n
        if self.kind == "SL":
            return n * n - 1
        if self.kind == "SO":
            return n * (n - 1) // 2
        return n * (n + 1) // 2

    @property
    def rank(self) -> int:
        return self.n - 1 if self.kind == "SL" else self.n // 2

    @property
    def dim_nilcone(self) -> int:
        return self.dim - self.rank

    @property
    def lacing(self) -> int:
        if self.kind == "SO" and self.n % 2:
            return 2
        if self.kind == "SP" and self.n >= 4:
            return 2
        return 1

    @property
    def coxeter_number(self) -> int:
        if self.kind == "SO":
            return self.n - 1 if self.n % 2 else self.n - 2
        return self.n

    def regular_partition(self) -> Partition:
        if self.kind == "SO" and self.n % 2 == 0:
            return Partition((self.n - 1, 1))
        return Partition((self.n,))


def is_very_even(p) -> bool:
    return len(p) > 0 and all(x % 2 == 0 for x in p)


def membership(family: ClassicalFamily, p) -> bool:
    """Whether p labels nilpotent orbits of the family's Lie algebra."""
    p = Partition(p)
    if p.size != family.n:
        raise PartitionError(f"{p} is not a partition of {family.n}")
    mult = p.multiplicities()
    if family.kind == "SO":
        return all(m % 2 == 0 for part, m in mult.items() if part % 2 == 0)
    if family.kind == "SP":
        return all(m % 2 == 0 for part, m in mult.items() if part % 2 == 1)
    return True


@lru_cache(maxsize=None)
def family_partitions(family: ClassicalFamily, include_very_even: bool = False) -> tuple[Partition, ...]:
    out = []
    for p in partitions_of(family.n):
        if not membership(family, p):
            continue
        if family.kind == "SO" and is_very_even(p) and not include_very_even:
            continue
        out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class ClassicalOrbit:
    family: ClassicalFamily
    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        if not membership(self.family, self.partition):
            raise PartitionError(f"{self.partition} does not label an orbit of {self.family}")
        if self.family.kind == "SO" and is_very_even(self.partition):
            raise VeryEvenError(f"{self.partition} is very even")

    def __str__(self):
        return f"{self.family}{self.partition}"

    @property
    def label(self) -> str:
        return str(self.partition)


def centralizer_dim_of(family: ClassicalFamily, p) -> int:
    """dim g^x for x with Jordan type p; also valid for very even p."""
    p = Partition(p)
    if not membership(family, p):
        raise PartitionError(f"{p} does not label an orbit of {family}")
    mu = dual_partition(p)
    sq = sum(m * m for m in mu)
    odd = sum(1 for x in p if x % 2)
    if family.kind == "SL":
        return sq - 1
    doubled = sq - odd if family.kind == "SO" else sq + odd
    if doubled % 2:
        raise PartitionError(f"odd doubled centralizer dimension for {family}{p}")
    return doubled // 2


def centralizer_dim(orbit: ClassicalOrbit) -> int:
    return centralizer_dim_of(orbit.family, orbit.partition)


def orbit_dim(orbit: ClassicalOrbit) -> int:
    d = orbit.family.dim - centralizer_dim(orbit)
    assert d % 2 == 0 and 0 <= d <= orbit.family.dim_nilcone, (orbit, d)
    return d
