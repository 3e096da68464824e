"""Character and supercharacter of simple gl(m|n)-modules as signed sums of chi terms.

Characters are stored as finite maps from exponent vectors (coefficient
vectors in the eps/delta basis, length ``m + n``) to exact coefficients.
Everything is expanded in the direction of negative roots and truncated
below an absolute floor of the grading

    phi(eps_i) = m + n + 1 - i,   phi(delta_j) = n + 1 - j,

which is 1 on every simple root and therefore positive on every positive
root.  Coefficients at or above the floor are exact.

The odd part of the (super)denominator is a product over *all* odd positive
roots and the Weyl group permutes those roots among themselves, so it can be
moved inside the alternating Weyl sum where it cancels the factors
``1 -+ e^{-w beta}``.  That leaves, for a single chi term,

    chi(nu) = e^{-rho} / prod_{even alpha > 0} (1 - e^{-alpha})
              * sum_w sgn(w) e^{w nu} prod_{odd alpha > 0, alpha not in w Gamma} (1 - e^{-alpha})

(with ``1 + e^{-alpha}`` for the ordinary character).  The numerator is a
Laurent polynomial; the even denominator is expanded as geometric series.
"""
from __future__ import annotations

import json
import math
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from . import diagram as _diagram
from .errors import NotInCoset, ShellNotClean
from .weights import (
    GammaSet,
    RhoShiftedWeight,
    SuperWeight,
    even_positive_roots,
    gamma_set,
    odd_positive_roots,
    rho_hat,
    rho_shift,
)

DEFAULT_MARGIN = 5
CUTOFF_ENV = "SUPERDIM_CUTOFF"

Exponent = tuple  # tuple[int, ...] of length m + n


# --------------------------------------------------------------------------
# grading and the truncated character type


def phi(mu: Sequence[int], m: int, n: int) -> int:
    return sum((m + n - i) * x for i, x in enumerate(mu[:m])) + sum(
        (n - j) * y for j, y in enumerate(mu[m:])
    )


@dataclass(frozen=True)
class FormalCharacter:
    """Truncated formal character: exact for every exponent with ``phi >= floor``."""

    m: int
    n: int
    coeffs: Mapping[Exponent, int | Fraction]
    top: Exponent
    cutoff: int

    @property
    def floor(self) -> int:
        return phi(self.top, self.m, self.n) - self.cutoff

    def __getitem__(self, mu) -> int | Fraction:
        return self.coeffs.get(tuple(mu), 0)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def degree(self, mu) -> int:
        return phi(mu, self.m, self.n)

    def shell(self, margin: int = DEFAULT_MARGIN) -> dict[Exponent, int | Fraction]:
        """Nonzero coefficients in the lowest ``margin`` retained levels."""
        lo = self.floor
        return {mu: c for mu, c in self.coeffs.items() if lo <= self.degree(mu) < lo + margin}

    def to_json(self) -> str:
        rows = sorted(self.coeffs.items(), key=lambda kv: (-self.degree(kv[0]), kv[0]))
        return json.dumps(
            [{"weight": list(mu), "coeff": str(c)} for mu, c in rows], indent=None
        )


def evaluate_at_zero(f: FormalCharacter, margin: int = DEFAULT_MARGIN) -> int:
    """Sum of coefficients, after checking that the bottom ``margin`` levels vanish."""
    bad = f.shell(margin)
    if bad:
        raise ShellNotClean(
            f"{len(bad)} nonzero coefficients within {margin} levels of the cutoff "
            f"(cutoff={f.cutoff}); retry with a larger cutoff",
            cutoff=f.cutoff,
        )
    total = sum(f.coeffs.values())
    assert Fraction(total).denominator == 1
    return int(total)


# --------------------------------------------------------------------------
# Laurent polynomial helpers on dicts


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _geometric_divide(poly: Mapping[Exponent, int], pos: int, neg: int, m: int, n: int, floor: int) -> dict:
    """Multiply by ``sum_{t>=0} e^{-t alpha}`` for ``alpha = e_pos - e_neg``, dropping ``phi < floor``.

    Terms are grouped into alpha-strings; the product is a running sum walked
    down each string.  A string stops as soon as the running sum is zero with
    no input left below it, so exact divisions cost only their support.
    """
    step = (m + n - pos if pos < m else n - (pos - m)) - (m + n - neg if neg < m else n - (neg - m))
    assert step > 0
    strings: dict[tuple, dict[int, int]] = defaultdict(dict)
    for mu, c in poly.items():
        t = mu[pos]
        key = list(mu)
        key[pos] = 0
        key[neg] += t
        strings[tuple(key)][t] = c
    out = {}
    for key, entries in strings.items():
        ts = sorted(entries, reverse=True)
        base = list(key)
        base_neg = base[neg]
        # phi of the string point with coordinate t at `pos`
        base[pos] = ts[0]
        base[neg] = base_neg - ts[0]
        deg = phi(base, m, n)
        t, running, idx = ts[0], 0, 0
        while deg >= floor:
            if idx < len(ts) and ts[idx] == t:
                running += entries[t]
                idx += 1
            if running:
                mu = list(key)
                mu[pos] = t
                mu[neg] = base_neg - t
                out[tuple(mu)] = running
            elif idx < len(ts):
                deg -= (t - ts[idx]) * step
                t = ts[idx]
                continue
            else:
                break
            t -= 1
            deg -= step
    return out


def _divide_even_denominator(poly: Mapping[Exponent, int], m: int, n: int, floor: int) -> dict:
    out = {mu: c for mu, c in poly.items() if phi(mu, m, n) >= floor}
    for root in even_positive_roots(m, n):
        pos, neg = (root.i - 1, root.k - 1) if root.kind == "eps" else (m + root.i - 1, m + root.k - 1)
        out = _geometric_divide(out, pos, neg, m, n, floor)
    return out


@lru_cache(maxsize=None)
def weyl_group(m: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Elements of Sym_m x Sym_n as (coordinate permutation, sign).

    The permutation ``g`` acts on exponents by ``(w mu)[g[x]] = mu[x]``.
    """
    out = []
    for p in permutations(range(m)):
        for q in permutations(range(n)):
            g = tuple(p) + tuple(m + y for y in q)
            out.append((g, _perm_sign(p) * _perm_sign(q)))
    return tuple(out)


def _perm_sign(p: Sequence[int]) -> int:
    seen, sign = set(), 1
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _act(g: Sequence[int], mu: Sequence[int]) -> Exponent:
    out = [0] * len(mu)
    for x, y in enumerate(mu):
        out[g[x]] = y
    return tuple(out)


# --------------------------------------------------------------------------
# the rho-shifted coset and the operations on it


@dataclass(frozen=True)
class EngineContext:
    """Fixed data for one highest weight: shifted weight, atypical roots, grading floor."""

    weight: SuperWeight
    shifted: RhoShiftedWeight
    gamma: GammaSet
    cutoff: int
    rho: Exponent = field(init=False)
    top: Exponent = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", rho_hat(self.m, self.n))
        object.__setattr__(self, "top", self.weight.vector())

    @property
    def m(self) -> int:
        return self.weight.m

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def floor(self) -> int:
        return phi(self.top, self.m, self.n) - self.cutoff

    @classmethod
    def for_weight(cls, w: SuperWeight, cutoff: int | None = None, margin: int = DEFAULT_MARGIN):
        rs = rho_shift(w)
        if cutoff is None:
            cutoff = default_cutoff(w, margin)
        return cls(w, rs, gamma_set(rs), cutoff)


def default_cutoff(w: SuperWeight, margin: int = DEFAULT_MARGIN) -> int:
    """Depth that provably contains the whole module, plus ``margin`` empty levels.

    L(Lambda) is a quotient of the Kac module, whose weights lie within
    ``phi(Lambda) - phi(w0 Lambda) + phi(sum of odd positive roots)`` of the top.
    ``$SUPERDIM_CUTOFF`` overrides the computed value.
    """
    env = os.environ.get(CUTOFF_ENV)
    if env:
        return int(env)
    m, n = w.m, w.n
    mu = w.vector()
    lowest = mu[:m][::-1] + mu[m:][::-1]
    odd = sum(phi(r.vector(m, n), m, n) for r in odd_positive_roots(m, n))
    return phi(mu, m, n) - phi(lowest, m, n) + odd + margin


@dataclass(frozen=True)
class CosetCoordinates:
    c: tuple[int, ...]

    def norm(self) -> int:
        return sum(abs(x) for x in self.c)


def coset_coordinates(lam: Sequence[int], base: RhoShiftedWeight, gamma: GammaSet) -> CosetCoordinates:
    """Solve ``lam = base - sum c_k beta_k``."""
    m = base.m
    diff = [x - y for x, y in zip(base.vector(), lam)]
    if len(diff) != len(lam) or len(lam) != m + base.n:
        raise NotInCoset(f"weight {tuple(lam)} has the wrong length")
    c = []
    for i, j in gamma.pairs:
        ck = diff[i - 1]
        if diff[m + j - 1] != -ck:
            raise NotInCoset(f"{tuple(lam)} not in the atypical coset of {base}")
        c.append(ck)
        diff[i - 1] = 0
        diff[m + j - 1] = 0
    if any(diff):
        raise NotInCoset(f"{tuple(lam)} not in the atypical coset of {base}")
    return CosetCoordinates(tuple(c))


def up_arrow(lam: Sequence[int], base: RhoShiftedWeight, gamma: GammaSet) -> Exponent:
    """Largest coset element below ``lam`` whose entries ``b_{j_1}, ..., b_{j_r}`` weakly increase.

    In vector notation ``(a | b)`` the atypical entries satisfy
    ``a_{i_k} = b_{j_k}``; lowering by ``beta_k`` decreases both by one.  The
    minimal lowering is the suffix-minimum rule ``b'_k = min_{l >= k} b_{j_l}``,
    so ``Lambda + rho`` itself is fixed and the map is idempotent.
    """
    coset_coordinates(lam, base, gamma)
    m = base.m
    out = list(lam)
    running = None
    for i, j in reversed(gamma.pairs):
        b = -lam[m + j - 1]
        running = b if running is None else min(running, b)
        e = b - running
        out[i - 1] -= e
        out[m + j - 1] += e
    return tuple(out)


def sym_r_apply(sigma: Sequence[int], lam: Sequence[int], gamma: GammaSet, m: int) -> Exponent:
    """Permute the atypical slots: slot ``k`` receives the entries of slot ``sigma(k)``.

    ``sigma`` is in one-line notation ``(sigma(1), ..., sigma(r))``.  Both the
    eps_{i_k} and the delta_{j_k} coordinates move, so this is the Weyl group
    element built from the products ``s_{eps_{i_k} - eps_{i_l}} s_{delta_{j_k} - delta_{j_l}}``
    and it preserves the atypical coset.
    """
    out = list(lam)
    pairs = gamma.pairs
    for k, source in enumerate(sigma):
        i, j = pairs[k]
        si, sj = pairs[source - 1]
        out[i - 1] = lam[si - 1]
        out[m + j - 1] = lam[m + sj - 1]
    return tuple(out)


# --------------------------------------------------------------------------
# block-cyclic permutations


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def r(self) -> int:
        return sum(self.parts)


def cyclic_permutations(r: int) -> list[Composition]:
    """All compositions of ``r``; each one stands for a product of consecutive block cycles."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return [Composition(())]
    out = []
    for mask in range(1 << (r - 1)):
        parts, run = [], 1
        for bit in range(r - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(tuple(parts)))
    return out


def multinomial(comp: Composition) -> int:
    return math.factorial(comp.r) // math.prod(math.factorial(p) for p in comp.parts)


def pi_sign(comp: Composition) -> int:
    """Sign of the block-cycle permutation: parity of ``r + (number of cycles)``."""
    return -1 if (comp.r + len(comp.parts)) % 2 else 1


def pi_as_permutation(comp: Composition) -> tuple[int, ...]:
    """One-line notation of ``(1 .. i_1)(i_1+1 .. i_1+i_2) ...``."""
    out, start = [], 1
    for p in comp.parts:
        out.extend(range(start + 1, start + p))
        out.append(start)
        start += p
    return tuple(out)


def lemma2_sum(r: int) -> int:
    if r < 1:
        raise ValueError("r must be positive")
    return sum(multinomial(c) * pi_sign(c) for c in cyclic_permutations(r))


# --------------------------------------------------------------------------
# chi terms and their assembly


def _odd_numerator(m: int, n: int, gamma_roots: Iterable, sign: int) -> dict[Exponent, int]:
    """``prod_{odd alpha > 0, alpha not in gamma_roots} (1 + sign * e^{-alpha})`` as exponent -> coeff."""
    skip = set(gamma_roots)
    poly = {(0,) * (m + n): 1}
    for root in odd_positive_roots(m, n):
        if (root.i, root.k) in skip:
            continue
        v = root.vector(m, n)
        nxt = defaultdict(int)
        for mu, c in poly.items():
            nxt[mu] += c
            nxt[tuple(x - y for x, y in zip(mu, v))] += sign * c
        poly = _clean(nxt)
    return poly


@lru_cache(maxsize=4096)
def _numerator_cache(m: int, n: int, pairs: tuple, sign: int):
    # odd products are the same for every nu with the same Gamma; cache them per w
    out = []
    base = _odd_numerator(m, n, pairs, sign)
    for g, sgn in weyl_group(m, n):
        out.append((g, sgn, tuple((_act(g, mu), c) for mu, c in base.items())))
    return tuple(out)


def character_term(nu: Sequence[int], ctx: EngineContext, variant: str = "super") -> FormalCharacter:
    """``e^{-rho} D^{-1} F_W(e^nu / prod_{beta in Gamma} (1 -+ e^{-beta}))`` truncated at ``ctx.floor``.

    ``variant="super"`` uses the superdenominator (the chi term of the
    supercharacter); ``variant="ordinary"`` uses the ordinary Weyl
    denominator with ``1 + e^{-alpha}`` odd factors.
    """
    if variant not in ("super", "ordinary"):
        raise ValueError(f"unknown variant {variant!r}")
    m, n = ctx.m, ctx.n
    sign = -1 if variant == "super" else 1
    rho = ctx.rho
    numerator: dict[Exponent, int] = defaultdict(int)
    for g, sgn, terms in _numerator_cache(m, n, ctx.gamma.pairs, sign):
        shift = tuple(x - y for x, y in zip(_act(g, nu), rho))
        for mu, c in terms:
            numerator[tuple(x + y for x, y in zip(shift, mu))] += sgn * c
    quotient = _divide_even_denominator(_clean(numerator), m, n, ctx.floor)
    return FormalCharacter(m, n, quotient, ctx.top, ctx.cutoff)


def chi(nu: Sequence[int], ctx: EngineContext) -> FormalCharacter:
    return character_term(nu, ctx, "super")


def su_zhang_arguments(ctx: EngineContext) -> list[tuple[tuple[int, ...], Composition, Exponent]]:
    """All ``(sigma, pi, (pi((sigma(Lambda + rho))^))^)`` in the double sum."""
    base, gamma, m = ctx.shifted, ctx.gamma, ctx.m
    top = base.vector()
    d = _diagram.build_diagram(base)
    out = []
    for sigma in _diagram.enumerate_S_Lambda(d, bound=max(gamma.r, _diagram.DEFAULT_ENUMERATION_BOUND)):
        inner = up_arrow(sym_r_apply(sigma, top, gamma, m), base, gamma)
        for comp in cyclic_permutations(gamma.r):
            arg = up_arrow(sym_r_apply(pi_as_permutation(comp), inner, gamma, m), base, gamma)
            out.append((sigma, comp, arg))
    return out


def _assemble(ctx: EngineContext, variant: str) -> FormalCharacter:
    r = ctx.gamma.r
    total: dict[Exponent, int] = defaultdict(int)
    # group identical arguments so each chi term is expanded once
    weights: dict[Exponent, int] = defaultdict(int)
    for _sigma, comp, arg in su_zhang_arguments(ctx):
        s = pi_sign(comp)
        if variant == "ordinary":
            s *= -1 if coset_coordinates(arg, ctx.shifted, ctx.gamma).norm() % 2 else 1
        weights[arg] += multinomial(comp) * s
    for arg, mult in weights.items():
        if not mult:
            continue
        for mu, c in character_term(arg, ctx, variant).items():
            total[mu] += mult * c
    scale = math.factorial(r)
    coeffs = {}
    for mu, c in total.items():
        if c:
            q = Fraction(c, scale)
            assert q.denominator == 1, f"non-integral coefficient {q} at {mu}"
            coeffs[mu] = int(q)
    return FormalCharacter(ctx.m, ctx.n, coeffs, ctx.top, ctx.cutoff)


def su_zhang_character(w: SuperWeight, cutoff: int | None = None, margin: int = DEFAULT_MARGIN) -> FormalCharacter:
    """Ordinary character ``ch L(w)``; coefficients are asserted to be nonnegative integers."""
    ctx = EngineContext.for_weight(w, cutoff, margin)
    ch = _assemble(ctx, "ordinary")
    assert all(c > 0 for c in ch.coeffs.values()), "negative multiplicity in ch"
    return ch


def supercharacter(w: SuperWeight, cutoff: int | None = None, margin: int = DEFAULT_MARGIN) -> FormalCharacter:
    """Supercharacter ``sch L(w)``."""
    return _assemble(EngineContext.for_weight(w, cutoff, margin), "super")


def engine_dimension(w: SuperWeight, kind: str = "super", cutoff: int | None = None,
                     margin: int = DEFAULT_MARGIN, retries: int = 3) -> int:
    """``sch|_0`` (``kind="super"``) or ``ch|_0`` with automatic cutoff doubling on a dirty shell."""
    build = supercharacter if kind == "super" else su_zhang_character
    if cutoff is None:
        cutoff = default_cutoff(w, margin)
    for attempt in range(retries + 1):
        try:
            return evaluate_at_zero(build(w, cutoff, margin), margin)
        except ShellNotClean:
            if attempt == retries:
                raise
            cutoff *= 2
    raise AssertionError("unreachable")


def parity(mu: Sequence[int], top: Sequence[int], m: int) -> int:
    """Parity of ``top - mu``: the number of odd roots in any decomposition, mod 2."""
    return sum(x - y for x, y in zip(top[m:], mu[m:])) % 2
