"""Part sets: the allowed summands of a partition.

Only the image of the indexing map matters, so a part set is stored as a
bounded enumeration of its elements rather than as the map itself. Finite
explicit sets are allowed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

BUILTINS = ("naturals", "primes", "squares", "odds")


class PartSetError(ValueError):
    """Raised for malformed part-set specifications."""


@lru_cache(maxsize=8)
def _primes_upto(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class PartSet:
    kind: str
    label: str
    elements: tuple[int, ...] = field(default=(), repr=False)
    path: str | None = None

    def __post_init__(self):
        if self.kind in BUILTINS:
            return
        if self.kind not in ("list", "file"):
            raise PartSetError(f"unknown part-set kind {self.kind!r}")
        _check_elements(self.elements)

    def enumerate(self, bound: int) -> list[int]:
        """Return the elements that are <= bound, ascending."""
        if bound < 1:
            return []
        if self.kind == "naturals":
            return list(range(1, bound + 1))
        if self.kind == "primes":
            return list(_primes_upto(bound))
        if self.kind == "squares":
            return [k * k for k in range(1, math.isqrt(bound) + 1)]
        if self.kind == "odds":
            return list(range(1, bound + 1, 2))
        return [a for a in self.elements if a <= bound]

    def __contains__(self, a: int) -> bool:
        if a < 1:
            return False
        if self.kind == "naturals":
            return True
        if self.kind == "primes":
            return a >= 2 and all(a % d for d in range(2, math.isqrt(a) + 1))
        if self.kind == "squares":
            return math.isqrt(a) ** 2 == a
        if self.kind == "odds":
            return a % 2 == 1
        return a in self.elements

    @property
    def is_finite(self) -> bool:
        return self.kind in ("list", "file")

    def render(self) -> str:
        """Spec string that parses back to this set."""
        if self.kind in BUILTINS:
            return self.kind
        if self.kind == "file":
            return f"file:{self.path}"
        return "list:" + ",".join(map(str, self.elements))


def _check_elements(elements) -> None:
    prev = 0
    for a in elements:
        if not isinstance(a, int) or a < 1:
            raise PartSetError(f"parts must be positive integers, got {a!r}")
        if a == prev:
            raise PartSetError(f"duplicate part {a}")
        if a < prev:
            raise PartSetError(f"parts must be ascending, {a} follows {prev}")
        prev = a


def _parse_ints(tokens, source: str) -> tuple[int, ...]:
    out = []
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise PartSetError(f"{source}: not an integer: {tok!r}") from None
    return tuple(out)


def explicit(elements, label: str | None = None) -> PartSet:
    elements = tuple(int(a) for a in elements)
    if label is None:
        label = "list:" + ",".join(map(str, elements))
    return PartSet("list", label, elements)


def parse_partset(spec: str) -> PartSet:
    """Parse ``naturals|primes|squares|odds|list:c1,c2,...|file:<path>``."""
    spec = spec.strip()
    if spec in BUILTINS:
        return PartSet(spec, spec)
    if spec.startswith("list:"):
        elements = _parse_ints(spec[5:].split(","), "list")
        return PartSet("list", spec, elements)
    if spec.startswith("file:"):
        path = spec[5:]
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise PartSetError(f"cannot read part-set file {path!r}: {exc}") from None
        elements = _parse_ints(text.splitlines(), path)
        return PartSet("file", spec, elements, path=path)
    raise PartSetError(f"unknown part set {spec!r}")


def enumerate_parts(partset: PartSet, bound: int) -> list[int]:
    return partset.enumerate(bound)
