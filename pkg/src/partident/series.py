"""Exact truncated power series over the integers.

A ``SeriesZ`` of order N keeps the coefficients of q^0 .. q^N. Every
infinite product used in the identities is reduced to a finite product at
the working order: factors whose lowest non-constant exponent exceeds the
order are identically 1 after truncation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partset import PartSet
from .statistic import Statistic


@dataclass(frozen=True)
class SeriesZ:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def of(cls, coeffs, order: int | None = None) -> SeriesZ:
        """Build from a coefficient list, padding or truncating to ``order``."""
        coeffs = [int(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> SeriesZ:
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> SeriesZ:
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> SeriesZ:
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(tuple(c))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: SeriesZ) -> None:
        if not isinstance(other, SeriesZ):
            raise TypeError(f"expected SeriesZ, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: SeriesZ) -> SeriesZ:
        self._check(other)
        return SeriesZ(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: SeriesZ) -> SeriesZ:
        self._check(other)
        return SeriesZ(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> SeriesZ:
        return SeriesZ(tuple(-a for a in self.coeffs))

    def __mul__(self, other: SeriesZ) -> SeriesZ:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        # iterate over the sparser operand; product factors are mostly zeros
        if sum(1 for x in a if x) > sum(1 for x in b if x):
            a, b = b, a
        N = len(a)
        out = [0] * N
        for i, ai in enumerate(a):
            if ai:
                for j in range(N - i):
                    out[i + j] += ai * b[j]
        return SeriesZ(tuple(out))

    def scale(self, k: int) -> SeriesZ:
        return SeriesZ(tuple(k * a for a in self.coeffs))

    def exact_div(self, k: int) -> SeriesZ:
        out = []
        for a in self.coeffs:
            q, r = divmod(a, k)
            if r:
                raise ValueError(f"coefficient {a} not divisible by {k}")
            out.append(q)
        return SeriesZ(tuple(out))

    def substitute(self, k: int) -> SeriesZ:
        """Series in q^k: coefficient n moves to exponent k*n (dropped past the order)."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        out = [0] * len(self.coeffs)
        for n in range(0, self.order // k + 1):
            out[k * n] = self.coeffs[n]
        return SeriesZ(tuple(out))

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}q^{n}")
        return " + ".join(terms) or "0"


def add(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    return a + b


def mul(a: SeriesZ, b: SeriesZ) -> SeriesZ:
    return a * b


def invert(a: SeriesZ) -> SeriesZ:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    c0 = a[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    b = [c0] + [0] * a.order
    for n in range(1, a.order + 1):
        s = 0
        for i in range(1, n + 1):
            if a[i]:
                s += a[i] * b[n - i]
        b[n] = -c0 * s
    return SeriesZ(tuple(b))


def factor(part: int, alpha: int | None, sign: int, order: int) -> SeriesZ:
    """sum_{k=0}^{alpha} sign^k q^(k*part); alpha=None is the geometric series."""
    if part < 1:
        raise ValueError("part must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if alpha is None:
        return invert(SeriesZ.one(order) - SeriesZ.monomial(part, order, sign))
    if alpha < 1:
        raise ValueError("multiplicity cap must be >= 1")
    c = [0] * (order + 1)
    for k in range(alpha + 1):
        if k * part > order:
            break
        c[k * part] = sign**k
    return SeriesZ(tuple(c))


def build_gf(statistic: Statistic, partset: PartSet, order: int) -> SeriesZ:
    """Generating function of a statistic over a part set, truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if statistic.parity is not None:
        plain = _product(partset, statistic.alpha, 1, order)
        alt = _product(partset, statistic.alpha, -1, order)
        both = plain + alt if statistic.parity == 0 else plain - alt
        return both.exact_div(2)
    sign = -1 if statistic.signed else 1
    return _product(partset, statistic.alpha, sign, order)


def _product(partset: PartSet, alpha, sign, order) -> SeriesZ:
    out = SeriesZ.one(order)
    for a in partset.enumerate(order):
        out = out * factor(a, alpha, sign, order)
    return out


def scale_product(s: SeriesZ, base: int) -> SeriesZ:
    """prod_{i >= 0} s(q^(base^i)), truncated at s.order.

    Requires s[0] == 1 so that the omitted factors (base^i > order) are 1.
    """
    if base < 2:
        raise ValueError("base must be >= 2")
    if s[0] != 1:
        raise ValueError("scale product needs constant term 1")
    out = SeriesZ.one(s.order)
    k = 1
    while k <= s.order:
        out = out * s.substitute(k)
        k *= base
    return out


def product_over_scales(statistic: Statistic, partset: PartSet, base: int, order: int) -> SeriesZ:
    return scale_product(build_gf(statistic, partset, order), base)
