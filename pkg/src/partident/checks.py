"""Agreement suites behind the ``oracle-check`` and ``series-check`` commands."""
from __future__ import annotations

from dataclasses import dataclass

from . import counting, oracle
from .identities import gamma_series
from .partset import BUILTINS, PartSet, parse_partset
from .series import build_gf, product_over_scales
from .statistic import (
    SIGNED,
    UNRESTRICTED,
    Statistic,
    bounded,
    even_parts,
    odd_parts,
    signed_bounded,
)

ORACLE_ALPHAS = (1, 2, 3, 4, None)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def statistics_for_cap(alpha: int | None) -> list[Statistic]:
    return [bounded(alpha), signed_bounded(alpha), even_parts(alpha), odd_parts(alpha)]


def oracle_check(cap: int = oracle.DEFAULT_CAP, sets=None, alphas=ORACLE_ALPHAS) -> list[Check]:
    """Brute force vs dynamic programming vs series coefficients, n = 0..cap."""
    sets = [parse_partset(s) for s in BUILTINS] if sets is None else sets
    out = []
    for ps in sets:
        for alpha in alphas:
            stats = statistics_for_cap(alpha)
            tables = {s: counting.count(s, ps, cap) for s in stats}
            gfs = {s: build_gf(s, ps, cap) for s in stats}
            bad = []
            for n in range(cap + 1):
                t = oracle.tally(oracle.enumerate_partitions(ps, n, alpha))
                for s in stats:
                    want = oracle.value_from_tally(s, t)
                    if tables[s][n] != want or gfs[s][n] != want:
                        bad.append(f"{s} n={n}: oracle {want}, dp {tables[s][n]}, series {gfs[s][n]}")
            cap_txt = "inf" if alpha is None else alpha
            out.append(Check(f"{ps.label} alpha={cap_txt}", not bad, "; ".join(bad[:3])))
    return out


def _compare(name, a, b) -> Check:
    if a == b:
        return Check(name, True)
    n = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
    return Check(name, False, f"first difference at q^{n}: {a[n]} vs {b[n]}")


def series_check(partset: PartSet, alpha: int, order: int) -> list[Check]:
    """Telescoping-product identities between generating series, to ``order``."""
    base = alpha + 1
    out = [
        _compare(
            f"forward: p = prod_i p_{alpha}(q^({base}^i))",
            build_gf(UNRESTRICTED, partset, order),
            product_over_scales(bounded(alpha), partset, base, order),
        ),
        _compare(
            "signed binary: pbar_1 = prod_i pbar(q^(2^i))",
            build_gf(signed_bounded(1), partset, order),
            product_over_scales(SIGNED, partset, 2, order),
        ),
        _compare(
            f"inverse: p_{alpha} = p * Gamma_{alpha}",
            build_gf(bounded(alpha), partset, order),
            build_gf(UNRESTRICTED, partset, order) * gamma_series(alpha, build_gf(SIGNED, partset, order)),
        ),
    ]
    if alpha % 2 == 0:
        out.append(
            _compare(
                f"signed general: pbar = prod_i pbar_{alpha}(q^({base}^i))",
                build_gf(SIGNED, partset, order),
                product_over_scales(signed_bounded(alpha), partset, base, order),
            )
        )
    return out
