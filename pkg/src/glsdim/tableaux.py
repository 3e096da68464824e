"""(m|n)-hook semistandard tableaux: an enumeration oracle for covariant modules.

Letters are ``1 < ... < m < 1' < ... < n'``.  Rows and columns weakly
increase, an unprimed letter never repeats in a column and a primed letter
never repeats in a row.  The number of such fillings of shape ``lam`` is
``dim L(lam)``, and counting each with sign ``(-1)^{#primed}`` gives the
superdimension.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import BoundExceeded, HookViolation
from .weights import SuperWeight

DEFAULT_CELL_CAP = 12


@dataclass(frozen=True)
class HookPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"{self.parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def fits(self, m: int, n: int) -> bool:
        return len(self.parts) <= m or self.parts[m] <= n


def partitions(size: int) -> Iterator[HookPartition]:
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(size, size):
        yield HookPartition(parts)


def hook_partitions(m: int, n: int, max_cells: int) -> list[HookPartition]:
    return [lam for k in range(max_cells + 1) for lam in partitions(k) if lam.fits(m, n)]


def _require_hook(lam: HookPartition, m: int, n: int) -> None:
    if not lam.fits(m, n):
        raise HookViolation(f"{lam.parts} does not fit the ({m}|{n}) hook: part {m + 1} exceeds {n}")


def covariant_weight(lam: HookPartition, m: int, n: int) -> SuperWeight:
    """Highest weight of the covariant module: ``c_i = lam_i``, ``d_j = -max(lam'_j - m, 0)``."""
    _require_hook(lam, m, n)
    parts = lam.parts + (0,) * m
    conj = lam.conjugate() + (0,) * n
    return SuperWeight(parts[:m], tuple(-max(conj[j] - m, 0) for j in range(n)))


def _fillings(lam: HookPartition, m: int, n: int) -> Iterator[list[list[int]]]:
    """Yield each valid filling as rows of letters ``0..m+n-1`` (``>= m`` means primed)."""
    shape = lam.parts
    rows = [[-1] * p for p in shape]
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    letters = range(m + n)

    def ok(i, j, x):
        if j > 0:
            left = rows[i][j - 1]
            if x < left or (x == left and x >= m):
                return False
        if i > 0:
            up = rows[i - 1][j]
            if x < up or (x == up and x < m):
                return False
        return True

    def rec(pos):
        if pos == len(cells):
            yield rows
            return
        i, j = cells[pos]
        for x in letters:
            if ok(i, j, x):
                rows[i][j] = x
                yield from rec(pos + 1)
        rows[i][j] = -1

    yield from rec(0)


def hook_tableau_counts(lam: HookPartition, m: int, n: int, cap: int = DEFAULT_CELL_CAP) -> tuple[int, int]:
    """(number of hook tableaux, signed count by parity of primed letters)."""
    _require_hook(lam, m, n)
    if lam.size > cap:
        raise BoundExceeded(f"{lam.size} cells exceeds cap {cap}")
    count = signed = 0
    for rows in _fillings(lam, m, n):
        primed = sum(1 for row in rows for x in row if x >= m)
        count += 1
        signed += -1 if primed % 2 else 1
    return count, signed


def hook_tableau_character(lam: HookPartition, m: int, n: int, cap: int = DEFAULT_CELL_CAP) -> dict[tuple, int]:
    """Content generating function: eps/delta coefficient vector -> number of tableaux."""
    _require_hook(lam, m, n)
    if lam.size > cap:
        raise BoundExceeded(f"{lam.size} cells exceeds cap {cap}")
    out: Counter = Counter()
    for rows in _fillings(lam, m, n):
        content = [0] * (m + n)
        for row in rows:
            for x in row:
                content[x] += 1
        out[tuple(content)] += 1
    return dict(out)
