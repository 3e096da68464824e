"""Weight diagrams of rho-shifted weights and the count of admissible permutations.

Every integer ``k`` gets one of four symbols depending on whether it occurs
among the ``a_i`` and/or the ``b_j`` of ``Lambda + rho = (a | b)``.  Crosses
(values shared by both) are numbered left to right; cross ``k`` is the
atypical root ``beta_k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import permutations

from .errors import BoundExceeded
from .weights import RhoShiftedWeight

DEFAULT_ENUMERATION_BOUND = 8


class Symbol(str, Enum):
    GT = ">"
    LT = "<"
    CROSS = "x"
    CIRC = "o"


@dataclass(frozen=True)
class WeightDiagram:
    lo: int
    hi: int
    symbols: tuple[Symbol, ...]
    cross_positions: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.cross_positions)

    def symbol_at(self, k: int) -> Symbol:
        if self.lo <= k <= self.hi:
            return self.symbols[k - self.lo]
        return Symbol.CIRC

    def render(self, pad: int = 1) -> str:
        """Two-line ASCII picture: symbols over position labels, crosses subscripted by number."""
        if not self.symbols:
            return "(empty diagram)"
        positions = range(self.lo - pad, self.hi + pad + 1)
        number = {p: k + 1 for k, p in enumerate(self.cross_positions)}
        tops = [
            f"x{number[p]}" if p in number else self.symbol_at(p).value for p in positions
        ]
        labels = [str(p) for p in positions]
        width = max(len(t) for t in tops + labels)
        top = " ".join(t.rjust(width) for t in tops)
        bottom = " ".join(t.rjust(width) for t in labels)
        return f"... {top} ...\n    {bottom}"


def build_diagram(rs: RhoShiftedWeight) -> WeightDiagram:
    a, b = set(rs.a), set(rs.b)
    values = a | b
    if not values:
        return WeightDiagram(0, -1, (), ())
    lo, hi = min(values), max(values)
    symbols = []
    for k in range(lo, hi + 1):
        if k in a and k in b:
            symbols.append(Symbol.CROSS)
        elif k in a:
            symbols.append(Symbol.GT)
        elif k in b:
            symbols.append(Symbol.LT)
        else:
            symbols.append(Symbol.CIRC)
    crosses = tuple(sorted(a & b))
    return WeightDiagram(lo, hi, tuple(symbols), crosses)


def _check_index(d: WeightDiagram, *idx: int) -> None:
    for k in idx:
        if not 1 <= k <= d.r:
            raise IndexError(f"cross index {k} outside 1..{d.r}")


def strongly_connected(d: WeightDiagram, k: int, l: int) -> bool:
    """Crosses ``k <= l`` are strongly connected.

    For every ``k < i <= l`` the number of circles strictly between cross ``k``
    and cross ``i`` must not exceed the number of crosses strictly between them.
    """
    _check_index(d, k, l)
    if k > l:
        raise IndexError(f"need k <= l, got k={k}, l={l}")
    circles = 0
    for i in range(k + 1, l + 1):
        prev, cur = d.cross_positions[i - 2], d.cross_positions[i - 1]
        circles += sum(1 for p in range(prev + 1, cur) if d.symbol_at(p) is Symbol.CIRC)
        # crosses strictly between start and cross i are k+1 .. i-1
        if circles > i - k - 1:
            return False
    return True


def max_s(d: WeightDiagram, s: int) -> int:
    """Largest ``t`` such that crosses ``s`` and ``t`` are strongly connected."""
    _check_index(d, s)
    t = s
    while t < d.r and strongly_connected(d, s, t + 1):
        t += 1
    return t


def s_lambda(d: WeightDiagram) -> int:
    """``r! / prod_s (max_s - s + 1)``; 1 when there are no crosses."""
    r = d.r
    denom = math.prod(max_s(d, s) - s + 1 for s in range(1, r + 1))
    q, rem = divmod(math.factorial(r), denom)
    assert rem == 0, f"r!={math.factorial(r)} not divisible by {denom}"
    return q


def connected_pairs(d: WeightDiagram) -> list[tuple[int, int]]:
    """All ``s < t`` with crosses ``s`` and ``t`` strongly connected, tested pair by pair."""
    return [
        (s, t)
        for s in range(1, d.r + 1)
        for t in range(s + 1, d.r + 1)
        if strongly_connected(d, s, t)
    ]


def enumerate_S_Lambda(d: WeightDiagram, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[tuple[int, ...]]:
    """All permutations ``sigma`` of ``1..r`` with ``sigma^-1(s) < sigma^-1(t)`` for connected ``s < t``.

    A permutation is returned in one-line notation ``(sigma(1), ..., sigma(r))``;
    the condition says value ``s`` appears before value ``t``.  Brute force over
    ``Sym_r``, so ``r`` is capped by ``bound``.
    """
    r = d.r
    if r > bound:
        raise BoundExceeded(f"r={r} exceeds enumeration bound {bound}")
    pairs = connected_pairs(d)
    out = []
    for perm in permutations(range(1, r + 1)):
        where = {v: p for p, v in enumerate(perm)}
        if all(where[s] < where[t] for s, t in pairs):
            out.append(perm)
    return out
