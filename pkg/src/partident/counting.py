"""Partition counts by dynamic programming.

This path shares no code with ``series``; the two are cross-checked.
Parity of a partition means parity of its number of parts, counted with
multiplicity.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partset import PartSet
from .statistic import Statistic


@dataclass(frozen=True)
class CountTable:
    statistic: Statistic
    set_label: str
    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise ValueError(f"{self.statistic} table covers 0..{self.max_n}, need {n}")


def _fold(values: list[int], part: int, alpha: int | None, weight: int) -> list[int]:
    N = len(values) - 1
    out = [0] * (N + 1)
    kmax = N // part if alpha is None else min(alpha, N // part)
    for n in range(N + 1):
        total = 0
        w = 1
        for k in range(0, min(kmax, n // part) + 1):
            total += w * values[n - k * part]
            w *= weight
        out[n] = total
    return out


def _fold_parity(even: list[int], odd: list[int], part: int, alpha: int | None):
    N = len(even) - 1
    kmax = N // part if alpha is None else min(alpha, N // part)
    new_even = [0] * (N + 1)
    new_odd = [0] * (N + 1)
    for n in range(N + 1):
        e = o = 0
        for k in range(0, min(kmax, n // part) + 1):
            m = n - k * part
            if k % 2:
                e += odd[m]
                o += even[m]
            else:
                e += even[m]
                o += odd[m]
        new_even[n] = e
        new_odd[n] = o
    return new_even, new_odd


def count(statistic: Statistic, partset: PartSet, max_n: int) -> CountTable:
    """Exact values of ``statistic`` for n = 0..max_n."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    parts = partset.enumerate(max_n)
    alpha = statistic.alpha
    if statistic.parity is None:
        weight = -1 if statistic.signed else 1
        values = [1] + [0] * max_n
        for a in parts:
            values = _fold(values, a, alpha, weight)
    else:
        even = [1] + [0] * max_n
        odd = [0] * (max_n + 1)
        for a in parts:
            even, odd = _fold_parity(even, odd, a, alpha)
        values = odd if statistic.parity else even
    return CountTable(statistic, partset.label, tuple(values))
