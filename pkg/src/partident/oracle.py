"""Naive partition enumeration, used as the reference for every count."""
from __future__ import annotations

from dataclasses import dataclass

from .partset import PartSet
from .statistic import Statistic

DEFAULT_CAP = 40


@dataclass(frozen=True)
class Partition:
    # (part, multiplicity) pairs, parts descending, multiplicities >= 1
    multiplicities: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return sum(a * m for a, m in self.multiplicities)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def parts(self) -> list[int]:
        return [a for a, m in self.multiplicities for _ in range(m)]

    def __str__(self):
        return "+".join(map(str, self.parts())) or "0"


def enumerate_partitions(partset: PartSet, n: int, alpha: int | None = None) -> list[Partition]:
    """Every partition of n into parts from ``partset`` with each part used at most alpha times."""
    if n < 0:
        raise ValueError("n must be >= 0")
    parts = sorted(partset.enumerate(n), reverse=True)
    out = []
    chosen = []

    def rec(rem, i):
        if rem == 0:
            out.append(Partition(tuple(chosen)))
            return
        for j in range(i, len(parts)):
            a = parts[j]
            if a > rem:
                continue
            top = rem // a
            if alpha is not None:
                top = min(top, alpha)
            for m in range(top, 0, -1):
                chosen.append((a, m))
                rec(rem - a * m, j + 1)
                chosen.pop()

    rec(n, 0)
    return out


def tally(partitions) -> dict[str, int]:
    """Aggregate a list of partitions into count / signed / even / odd."""
    even = sum(1 for p in partitions if p.num_parts % 2 == 0)
    odd = len(partitions) - even
    return {"count": len(partitions), "signed": even - odd, "even": even, "odd": odd}


def value_from_tally(statistic: Statistic, t: dict[str, int]) -> int:
    if statistic.parity == 0:
        return t["even"]
    if statistic.parity == 1:
        return t["odd"]
    return t["signed"] if statistic.signed else t["count"]


def brute_force(statistic: Statistic, partset: PartSet, n: int, cap: int = DEFAULT_CAP) -> int:
    if n > cap:
        raise ValueError(f"n={n} exceeds oracle cap {cap}")
    return value_from_tally(statistic, tally(enumerate_partitions(partset, n, statistic.alpha)))
