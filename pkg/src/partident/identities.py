"""Both sides of the part-set-independent partition identities.

Each identity has a left side read from a ``CountTable`` and a right side
that is a sum, over the rows of a solution matrix, of products of table
values. The right side is evaluated two ways:

* enumerative: list the solution matrix and add up the row products;
* convolution: the same number is the coefficient of q^n in a product of
  rescaled copies of the table's generating series.

The identities:

    forward_general   p(n)          = sum_rows prod p_alpha(a_ij),  base alpha+1
    forward_binary    forward_general at alpha = 1
    inverse           p_alpha(n)    = sum_i p(n-i) Gamma_alpha(i)
    signed_binary     pbar_1(n)     = sum_rows prod pbar(a_ij),     base 2
    signed_general    pbar(n)       = sum_rows prod pbar_alpha(a_ij), base alpha+1, alpha even
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import counting, solutions
from .counting import CountTable
from .partset import PartSet
from .series import SeriesZ, scale_product
from .solutions import SolutionMatrix
from .statistic import SIGNED, UNRESTRICTED, bounded, signed_bounded

IDENTITIES = ("forward_binary", "forward_general", "inverse", "signed_binary", "signed_general")
MODES = ("both", "enumerative", "convolution")


class IdentityError(ValueError):
    pass


def row_product(row, table: CountTable) -> int:
    """Product of table values over a row; absent and zero entries give table[0] = 1."""
    out = 1
    for x in row:
        if x:
            out *= table[x]
    return out


def sum_of_products(matrix: SolutionMatrix, table: CountTable) -> int:
    return sum(row_product(row, table) for row in matrix.rows)


def expand_terms(matrix: SolutionMatrix, table: CountTable) -> list[tuple[tuple[int, ...], int]]:
    """(sorted non-zero row entries, row product) for every row of the matrix."""
    return [
        (tuple(sorted((x for x in row if x), reverse=True)), row_product(row, table))
        for row in matrix.rows
    ]


def rhs_forward(n: int, alpha: int, bounded_counts: CountTable) -> int:
    """sum over solutions of n = sum (alpha+1)^i N_i of prod p_alpha(N_i)."""
    if alpha < 1:
        raise IdentityError("alpha must be >= 1")
    bounded_counts.require(n)
    return sum_of_products(solutions.enumerate_solutions(n, alpha + 1), bounded_counts)


def gamma_table(alpha: int, signed_counts: CountTable, max_n: int) -> CountTable:
    """Gamma_alpha(0..max_n) from the solution matrices B_{n,alpha}."""
    if alpha < 1:
        raise IdentityError("alpha must be >= 1")
    signed_counts.require(max_n // (alpha + 1))
    values = [1]
    for n in range(1, max_n + 1):
        support = solutions.gamma_support(n, alpha)
        values.append(sum_of_products(support, signed_counts))
    return CountTable(f"gamma({alpha})", signed_counts.set_label, tuple(values))


def gamma_series(alpha: int, signed: SeriesZ) -> SeriesZ:
    """prod_i S(q^(2^i (alpha+1))) where S is the signed-count series."""
    if alpha < 1:
        raise IdentityError("alpha must be >= 1")
    return scale_product(signed, 2).substitute(alpha + 1)


def rhs_inverse(n: int, alpha: int, unrestricted_counts: CountTable, gamma: CountTable) -> int:
    unrestricted_counts.require(n)
    gamma.require(n)
    return sum(unrestricted_counts[n - i] * gamma[i] for i in range(n + 1))


def rhs_signed(identity: str, n: int, alpha: int, table: CountTable, allow_odd_alpha: bool = False) -> int:
    if identity == "signed_binary":
        base = 2
    elif identity == "signed_general":
        _check_alpha(identity, alpha, allow_odd_alpha)
        base = alpha + 1
    else:
        raise IdentityError(f"not a signed identity: {identity!r}")
    table.require(n)
    return sum_of_products(solutions.enumerate_solutions(n, base), table)


def _check_alpha(identity, alpha, allow_odd_alpha):
    if alpha is None or alpha < 1:
        raise IdentityError("alpha must be >= 1")
    if identity == "signed_general" and alpha % 2 and not allow_odd_alpha:
        raise IdentityError("signed_general holds only for even alpha (use allow_odd_alpha to explore)")


@dataclass(frozen=True)
class Record:
    n: int
    lhs: int
    rhs_convolution: int | None
    rhs_enumerative: int | None

    @property
    def rhs(self) -> int:
        return self.rhs_convolution if self.rhs_convolution is not None else self.rhs_enumerative

    @property
    def equal(self) -> bool:
        return all(r == self.lhs for r in (self.rhs_convolution, self.rhs_enumerative) if r is not None)

    @property
    def paths_agree(self) -> bool:
        if self.rhs_convolution is None or self.rhs_enumerative is None:
            return True
        return self.rhs_convolution == self.rhs_enumerative


@dataclass
class VerificationReport:
    identity: str
    set_label: str
    alpha: int
    N: int
    mode: str
    records: list[Record]
    exploration: bool = False
    elapsed: float = field(default=0.0, compare=False)

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.records)

    @property
    def paths_agree(self) -> bool:
        return all(r.paths_agree for r in self.records)

    def first_failure(self) -> Record | None:
        return next((r for r in self.records if not r.equal), None)

    def to_dict(self) -> dict:
        recs = []
        for r in self.records:
            d = {"n": r.n, "lhs": str(r.lhs), "rhs": str(r.rhs), "equal": r.equal}
            if r.rhs_enumerative is not None:
                d["rhs_enumerative"] = str(r.rhs_enumerative)
            if r.rhs_convolution is not None:
                d["rhs_convolution"] = str(r.rhs_convolution)
            recs.append(d)
        return {
            "identity": self.identity,
            "set": self.set_label,
            "alpha": self.alpha,
            "N": self.N,
            "mode": self.mode,
            "exploration": self.exploration,
            "all_equal": self.all_equal,
            "records": recs,
        }


def normalize_identity(identity: str) -> str:
    name = identity.replace("-", "_")
    if name == "forward":
        name = "forward_general"
    if name not in IDENTITIES:
        raise IdentityError(f"unknown identity {identity!r}")
    return name


def verify(
    identity: str,
    partset: PartSet,
    alpha: int,
    N: int,
    mode: str = "both",
    enum_cap: int = solutions.DEFAULT_ENUM_CAP,
    allow_odd_alpha: bool = False,
) -> VerificationReport:
    """Check one identity for n = 0..N over ``partset``."""
    t0 = time.perf_counter()
    identity = normalize_identity(identity)
    if mode not in MODES:
        raise IdentityError(f"unknown mode {mode!r}")
    if identity in ("forward_binary", "signed_binary"):
        if alpha not in (None, 1):
            raise IdentityError(f"{identity} is the alpha = 1 case")
        alpha = 1
    _check_alpha(identity, alpha, allow_odd_alpha)
    if N < 0:
        raise IdentityError("N must be >= 0")
    if mode == "enumerative" and N > enum_cap:
        raise IdentityError(f"enumerative mode capped at n <= {enum_cap}, got N={N}")
    do_enum = mode in ("both", "enumerative")
    do_conv = mode in ("both", "convolution")
    enum_top = min(N, enum_cap) if do_enum else -1

    if identity in ("forward_binary", "forward_general"):
        lhs = counting.count(UNRESTRICTED, partset, N)
        table = counting.count(bounded(alpha), partset, N)
        base = alpha + 1
    elif identity == "signed_binary":
        lhs = counting.count(signed_bounded(1), partset, N)
        table = counting.count(SIGNED, partset, N)
        base = 2
    elif identity == "signed_general":
        lhs = counting.count(SIGNED, partset, N)
        table = counting.count(signed_bounded(alpha), partset, N)
        base = alpha + 1
    else:
        lhs = counting.count(bounded(alpha), partset, N)
        unrestricted = counting.count(UNRESTRICTED, partset, N)
        signed = counting.count(SIGNED, partset, N)

    conv = enum = None
    if identity == "inverse":
        if do_conv:
            gamma = gamma_series(alpha, SeriesZ(signed.values))
            conv = (SeriesZ(unrestricted.values) * gamma).coeffs
        if do_enum:
            gtab = gamma_table(alpha, signed, enum_top)
            enum = [rhs_inverse(n, alpha, unrestricted, gtab) for n in range(enum_top + 1)]
    else:
        if do_conv:
            conv = scale_product(SeriesZ(table.values), base).coeffs
        if do_enum:
            enum = [
                sum_of_products(solutions.enumerate_solutions(n, base), table)
                for n in range(enum_top + 1)
            ]

    records = [
        Record(
            n,
            lhs[n],
            conv[n] if conv is not None else None,
            enum[n] if enum is not None and n <= enum_top else None,
        )
        for n in range(N + 1)
    ]
    exploration = identity == "signed_general" and alpha % 2 == 1
    return VerificationReport(
        identity, partset.label, alpha, N, mode, records, exploration, time.perf_counter() - t0
    )
