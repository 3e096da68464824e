"""Weights and roots of gl(m|n) with the standard Borel subalgebra.

Two coordinate systems are used throughout:

* vector notation ``(c_1, ..., c_m | d_1, ..., d_n)`` meaning
  ``sum c_i eps_i - sum d_j delta_j`` (``SuperWeight``, ``RhoShiftedWeight``);
* plain coefficient vectors of length ``m + n`` in the basis
  ``eps_1, ..., eps_m, delta_1, ..., delta_n``.  These are what the character
  engine stores as exponents and what ``bilinear`` consumes.

The rho-shift uses the integral representative ``rho + (m+n+1)/2 * str`` so
that ``0 + rho = (m, ..., 1 | 1, ..., n)``.  ``str`` is orthogonal to every
root and fixed by the Weyl group, so nothing computed here depends on the
choice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotDominant, UnsupportedShape

Vector = tuple  # tuple of int or Fraction, length m + n


@dataclass(frozen=True)
class SuperWeight:
    """Integral weight ``(eps | delta)`` of gl(m|n) in vector notation."""

    eps: tuple[int, ...]
    delta: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(int(x) for x in self.eps))
        object.__setattr__(self, "delta", tuple(int(x) for x in self.delta))
        if not self.eps:
            raise UnsupportedShape("m must be positive")

    @property
    def m(self) -> int:
        return len(self.eps)

    @property
    def n(self) -> int:
        return len(self.delta)

    def vector(self) -> Vector:
        return self.eps + tuple(-d for d in self.delta)

    @classmethod
    def zero(cls, m: int, n: int) -> "SuperWeight":
        return cls((0,) * m, (0,) * n)

    def __str__(self):
        return ",".join(map(str, self.eps)) + "|" + ",".join(map(str, self.delta))


@dataclass(frozen=True)
class RhoShiftedWeight:
    """``Lambda + rho`` written as ``(a | b)``; a strictly decreasing, b strictly increasing."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if any(x <= y for x, y in zip(self.a, self.a[1:])):
            raise NotDominant(f"a={self.a} is not strictly decreasing")
        if any(x >= y for x, y in zip(self.b, self.b[1:])):
            raise NotDominant(f"b={self.b} is not strictly increasing")

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.b)

    def vector(self) -> Vector:
        return self.a + tuple(-x for x in self.b)

    def __str__(self):
        return ",".join(map(str, self.a)) + "|" + ",".join(map(str, self.b))


@dataclass(frozen=True, order=True)
class Root:
    """A root of gl(m|n); indices are 1-based.

    ``kind`` is ``"eps"`` for eps_i - eps_k, ``"delta"`` for delta_i - delta_k
    and ``"odd"`` for eps_i - delta_k.
    """

    kind: str
    i: int
    k: int

    def __post_init__(self):
        if self.kind not in ("eps", "delta", "odd"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind != "odd" and self.i == self.k:
            raise ValueError("even root needs distinct indices")

    @property
    def is_odd(self) -> bool:
        return self.kind == "odd"

    def vector(self, m: int, n: int) -> Vector:
        if not (1 <= self.i <= (n if self.kind == "delta" else m)) or not (
            1 <= self.k <= (m if self.kind == "eps" else n)
        ):
            raise IndexError(f"{self} out of range for gl({m}|{n})")
        v = [0] * (m + n)
        if self.kind == "eps":
            v[self.i - 1], v[self.k - 1] = 1, -1
        elif self.kind == "delta":
            v[m + self.i - 1], v[m + self.k - 1] = 1, -1
        else:
            v[self.i - 1], v[m + self.k - 1] = 1, -1
        return tuple(v)

    def __str__(self):
        left = "e" if self.kind in ("eps", "odd") else "d"
        right = "e" if self.kind == "eps" else "d"
        return f"{left}{self.i}-{right}{self.k}"


@dataclass(frozen=True)
class GammaSet:
    """Ordered atypical roots ``beta_k = eps_{i_k} - delta_{j_k}`` with ``j_1 < ... < j_r``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        js = [j for _, j in self.pairs]
        is_ = [i for i, _ in self.pairs]
        if any(x >= y for x, y in zip(js, js[1:])) or len(set(is_)) != len(is_):
            raise ValueError(f"malformed atypical root set {self.pairs}")

    @property
    def r(self) -> int:
        return len(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def roots(self) -> list[Root]:
        return [Root("odd", i, j) for i, j in self.pairs]

    def eps_indices(self) -> set[int]:
        return {i for i, _ in self.pairs}

    def delta_indices(self) -> set[int]:
        return {j for _, j in self.pairs}


def is_dominant(w: SuperWeight) -> bool:
    """Integral dominance for the standard Borel: eps entries weakly decrease, delta entries weakly increase."""
    return all(x >= y for x, y in zip(w.eps, w.eps[1:])) and all(
        x <= y for x, y in zip(w.delta, w.delta[1:])
    )


def check_shape(m: int, n: int) -> None:
    if m < 1 or n < 0:
        raise UnsupportedShape(f"gl({m}|{n}) needs m >= 1 and n >= 0")
    if m < n:
        raise UnsupportedShape(
            f"gl({m}|{n}) has m < n; only m >= n is supported (swap the roles of m and n by hand)"
        )


def rho_shift(w: SuperWeight) -> RhoShiftedWeight:
    """Return ``w + rho`` as ``(a | b)`` with ``a_i = c_i + m - i + 1`` and ``b_j = d_j + j``."""
    check_shape(w.m, w.n)
    if not is_dominant(w):
        raise NotDominant(f"weight ({w}) is not dominant: {_dominance_violations(w)}")
    m = w.m
    a = tuple(c + m - i for i, c in enumerate(w.eps))
    b = tuple(d + j + 1 for j, d in enumerate(w.delta))
    return RhoShiftedWeight(a, b)


def unshift(rs: RhoShiftedWeight) -> SuperWeight:
    """Inverse of ``rho_shift``."""
    m = rs.m
    return SuperWeight(
        tuple(x - (m - i) for i, x in enumerate(rs.a)),
        tuple(x - (j + 1) for j, x in enumerate(rs.b)),
    )


def _dominance_violations(w: SuperWeight) -> str:
    bad = [f"c{i + 1}={x} < c{i + 2}={y}" for i, (x, y) in enumerate(zip(w.eps, w.eps[1:])) if x < y]
    bad += [
        f"d{j + 1}={x} > d{j + 2}={y}" for j, (x, y) in enumerate(zip(w.delta, w.delta[1:])) if x > y
    ]
    return ", ".join(bad)


def rho_hat(m: int, n: int) -> Vector:
    """Coefficient vector of the integral rho representative."""
    return rho_shift(SuperWeight.zero(m, n)).vector()


def bilinear(x: Sequence, y: Sequence, m: int):
    """Invariant form on coefficient vectors: ``(eps_i, eps_j) = delta_ij``, ``(delta_i, delta_j) = -delta_ij``."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vectors of length {len(x)} and {len(y)}")
    if not 0 <= m <= len(x):
        raise DimensionMismatch(f"m={m} does not split a vector of length {len(x)}")
    return sum(p * q for p, q in zip(x[:m], y[:m])) - sum(p * q for p, q in zip(x[m:], y[m:]))


def pair_coroot(x: Sequence, root: Root, m: int, n: int) -> Fraction:
    """``<x, alpha^vee> = 2 (x, alpha) / (alpha, alpha)`` for an even root."""
    if root.is_odd:
        raise ValueError("odd roots are isotropic and have no coroot")
    v = root.vector(m, n)
    return Fraction(2 * bilinear(x, v, m), bilinear(v, v, m))


def gamma_set(rs: RhoShiftedWeight) -> GammaSet:
    """Atypical roots: all ``eps_i - delta_j`` with ``a_i = b_j``, ordered by ``j``."""
    where = {x: i + 1 for i, x in enumerate(rs.a)}
    return GammaSet(tuple((where[x], j + 1) for j, x in enumerate(rs.b) if x in where))


def atypicality(rs: RhoShiftedWeight) -> int:
    return gamma_set(rs).r


def is_maximal(rs: RhoShiftedWeight) -> bool:
    """True when the atypicality equals the defect ``n`` (m >= n is assumed)."""
    check_shape(rs.m, rs.n)
    return atypicality(rs) == rs.n


def even_positive_roots(m: int, n: int) -> list[Root]:
    return [Root("eps", i, k) for i in range(1, m + 1) for k in range(i + 1, m + 1)] + [
        Root("delta", j, l) for j in range(1, n + 1) for l in range(j + 1, n + 1)
    ]


def odd_positive_roots(m: int, n: int) -> list[Root]:
    return [Root("odd", i, j) for i in range(1, m + 1) for j in range(1, n + 1)]


def m_lambda_positive(rs: RhoShiftedWeight, gamma: GammaSet) -> list[Root]:
    """Even positive roots orthogonal to every atypical root."""
    free_eps = [i for i in range(1, rs.m + 1) if i not in gamma.eps_indices()]
    free_delta = [j for j in range(1, rs.n + 1) if j not in gamma.delta_indices()]
    out = [Root("eps", i, k) for x, i in enumerate(free_eps) for k in free_eps[x + 1:]]
    out += [Root("delta", j, l) for x, j in enumerate(free_delta) for l in free_delta[x + 1:]]
    return out


def rho0_lambda(roots: Sequence[Root], m: int, n: int) -> Vector:
    """Half-sum of the given roots as an exact rational coefficient vector."""
    total = [0] * (m + n)
    for root in roots:
        for idx, c in enumerate(root.vector(m, n)):
            total[idx] += c
    return tuple(Fraction(c, 2) for c in total)


def str_shift(w: SuperWeight, t: int) -> SuperWeight:
    """Add ``t * str = t * (1, ..., 1 | 1, ..., 1)``."""
    return SuperWeight(tuple(c + t for c in w.eps), tuple(d + t for d in w.delta))
