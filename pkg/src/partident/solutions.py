"""Solution matrices of n = sum_i base^i N_i and n = (alpha+1) sum_i 2^i N_i.

Rows are non-negative integer tuples (N_0, N_1, ...) with trailing zeros
trimmed, sorted ascending lexicographically. The empty tuple is the single
solution for n = 0.
"""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ENUM_CAP = 60


@dataclass(frozen=True)
class SolutionMatrix:
    n: int
    base: int
    rows: tuple[tuple[int, ...], ...]
    multiplier: int = 1  # rows solve n = multiplier * sum base^j N_j

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def check(self) -> bool:
        return all(
            self.multiplier * sum(self.base**j * x for j, x in enumerate(row)) == self.n
            for row in self.rows
        )


def _trim(row):
    k = len(row)
    while k and row[k - 1] == 0:
        k -= 1
    return tuple(row[:k])


def _powers(n: int, base: int) -> list[int]:
    out = [1]
    while out[-1] * base <= n:
        out.append(out[-1] * base)
    return out


def enumerate_solutions(n: int, base: int) -> SolutionMatrix:
    """All non-negative solutions of n = sum_i base^i N_i."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    powers = _powers(n, base)
    rows = []
    row = [0] * len(powers)

    def rec(rem: int, idx: int) -> None:
        if idx == 0:
            row[0] = rem
            rows.append(_trim(row))
            return
        p = powers[idx]
        for k in range(rem // p + 1):
            row[idx] = k
            rec(rem - k * p, idx - 1)
        row[idx] = 0

    rec(n, len(powers) - 1)
    rows.sort()
    return SolutionMatrix(n, base, tuple(rows))


def count_solutions(n: int, base: int) -> int:
    """Number of partitions of n into powers of base."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    ways = [1] + [0] * n
    for p in _powers(n, base):
        for m in range(p, n + 1):
            ways[m] += ways[m - p]
    return ways[n]


def gamma_support(n: int, alpha: int) -> SolutionMatrix:
    """Solutions of n = (alpha+1) sum_i 2^i N_i; empty unless (alpha+1) | n."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    m = alpha + 1
    if n % m:
        return SolutionMatrix(n, 2, (), multiplier=m)
    inner = enumerate_solutions(n // m, 2)
    return SolutionMatrix(n, 2, inner.rows, multiplier=m)
