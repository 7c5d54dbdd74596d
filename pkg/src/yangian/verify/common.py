"""Small helpers shared by the suites."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List, Sequence, Tuple

from ..algebra import Element
from ..series import Series
from .core import SuiteSpec


def compositions(n: int) -> List[Tuple[int, ...]]:
    """All compositions of ``n`` into positive parts, longest parts first."""
    out: List[Tuple[int, ...]] = []

    def rec(rest: int, prefix: Tuple[int, ...]) -> None:
        if rest == 0:
            out.append(prefix)
            return
        for part in range(rest, 0, -1):
            rec(rest - part, prefix + (part,))

    rec(n, ())
    return out


def nus(spec: SuiteSpec) -> List[Tuple[int, ...]]:
    return [spec.nu] if spec.nu is not None else compositions(spec.n)


def tag(nu: Sequence[int]) -> str:
    return ".".join(map(str, nu))


def level_tuples(count: int, bound: int, low: int = 1) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``count`` levels ``>= low`` with sum at most ``bound``."""
    for ks in itertools.product(range(low, bound + 1), repeat=count):
        if sum(ks) <= bound:
            yield ks


def series_diff(a: Series, b: Series) -> Series:
    cut = min(a.cutoff, b.cutoff)
    return a.truncate(cut) - b.truncate(cut)


def total(alg, parts) -> Element:
    out = alg.zero()
    for p in parts:
        out = out + p
    return out


def fmt(**kw) -> str:
    return ",".join(f"{k}={v}" for k, v in kw.items())


def exact_rank(vectors: Sequence[dict]) -> int:
    """Rank over Q of sparse vectors given as ``{key: coefficient}`` dicts."""
    pivots: dict = {}  # pivot key -> reduced row with coefficient 1 there
    rank = 0
    for vec in vectors:
        row = {k: v for k, v in vec.items() if v}
        while row:
            key = max(row)
            piv = pivots.get(key)
            if piv is None:
                c = row[key]
                pivots[key] = {k: v / c for k, v in row.items()}
                rank += 1
                break
            c = row[key]
            for k, v in piv.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def seeded(seed: int, label: str) -> random.Random:
    """A generator seeded by ``seed`` and a case family label."""
    return random.Random(f"{seed}:{label}")
