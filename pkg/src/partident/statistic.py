"""Tags for the partition statistics counted by this package."""
from __future__ import annotations

from dataclasses import dataclass

KINDS = ("unrestricted", "bounded", "signed", "signed_bounded", "even_parts", "odd_parts")


@dataclass(frozen=True)
class Statistic:
    """A partition statistic.

    ``alpha`` is the multiplicity cap; ``None`` means unbounded. It is
    required for ``bounded`` and ``signed_bounded``, forbidden for
    ``unrestricted`` and ``signed``, and optional for the parity counts.
    """

    kind: str
    alpha: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown statistic {self.kind!r}")
        if self.kind in ("bounded", "signed_bounded") and self.alpha is None:
            raise ValueError(f"{self.kind} needs a multiplicity cap")
        if self.kind in ("unrestricted", "signed") and self.alpha is not None:
            raise ValueError(f"{self.kind} takes no multiplicity cap")
        if self.alpha is not None and self.alpha < 1:
            raise ValueError("multiplicity cap must be >= 1")

    @property
    def signed(self) -> bool:
        return self.kind in ("signed", "signed_bounded")

    @property
    def parity(self) -> int | None:
        """0 for even_parts, 1 for odd_parts, else None."""
        return {"even_parts": 0, "odd_parts": 1}.get(self.kind)

    def __str__(self):
        return self.kind if self.alpha is None else f"{self.kind}({self.alpha})"


UNRESTRICTED = Statistic("unrestricted")
SIGNED = Statistic("signed")


def bounded(alpha: int | None) -> Statistic:
    """p_alpha; a cap of None gives the unrestricted count."""
    return UNRESTRICTED if alpha is None else Statistic("bounded", alpha)


def signed_bounded(alpha: int | None) -> Statistic:
    return SIGNED if alpha is None else Statistic("signed_bounded", alpha)


def even_parts(alpha: int | None = None) -> Statistic:
    return Statistic("even_parts", alpha)


def odd_parts(alpha: int | None = None) -> Statistic:
    return Statistic("odd_parts", alpha)
