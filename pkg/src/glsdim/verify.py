"""Cross-checks between the closed formula and the two independent oracles."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from . import charformula as cf
from . import diagram
from .superdim import superdimension
from .tableaux import covariant_weight, hook_partitions, hook_tableau_counts
from .weights import SuperWeight, is_dominant, rho_shift

SUITES = ("formula", "engine", "tableaux", "lemma2")


@dataclass
class VerifyConfig:
    max_m: int = 3
    max_n: int = 2
    min_n: int = 1
    entry_bound: int = 2
    cutoff: int | None = None
    margin: int = cf.DEFAULT_MARGIN
    max_r: int = 10
    max_cells: int = 8
    weyl_guard: int = 10_000
    retries: int = 3


@dataclass
class CaseResult:
    suite: str
    case: str
    passed: bool
    detail: str = ""


def shapes(cfg: VerifyConfig) -> Iterator[tuple[int, int]]:
    for m in range(1, cfg.max_m + 1):
        for n in range(cfg.min_n, min(m, cfg.max_n) + 1):
            if math.factorial(m) * math.factorial(n) > cfg.weyl_guard:
                continue
            yield m, n


def dominant_weights(m: int, n: int, bound: int) -> Iterator[SuperWeight]:
    rng = range(-bound, bound + 1)
    for c in itertools.product(rng, repeat=m):
        if any(x < y for x, y in zip(c, c[1:])):
            continue
        for d in itertools.product(rng, repeat=n):
            w = SuperWeight(c, d)
            if is_dominant(w):
                yield w


def worked_examples(m: int, n: int) -> list[tuple[str, SuperWeight, int]]:
    """Trivial, natural and adjoint highest weights with their known |sdim|."""
    zero = SuperWeight.zero(m, n)
    natural = SuperWeight((1,) + (0,) * (m - 1), (0,) * n)
    out = [("trivial", zero, 1), ("natural", natural, m - n)]
    if n >= 1:
        adjoint = SuperWeight((1,) + (0,) * (m - 1), (0,) * (n - 1) + (1,))
        if m == n == 1:
            expected = 1  # e1 - d1 is one-dimensional for gl(1|1)
        elif m == n:
            expected = 2
        elif m == n + 1:
            expected = 0
        else:
            expected = (m - n) ** 2 - 1
        out.append(("adjoint", adjoint, expected))
    return out


def suite_formula(cfg: VerifyConfig) -> Iterator[CaseResult]:
    for m in range(1, cfg.max_m + 1):
        for n in range(1, min(m, cfg.max_n) + 1):
            for name, w, expected in worked_examples(m, n):
                got = superdimension(w).sdim_abs
                yield CaseResult("formula", f"gl({m}|{n}) {name} ({w})", got == expected,
                                 f"sdim={got} expected={expected}")
    d = diagram.build_diagram(rho_shift(SuperWeight((1, 1, 0, 0, 0), (0, 1, 3, 4))))
    facts = [diagram.strongly_connected(d, 1, 2), diagram.strongly_connected(d, 1, 3),
             not diagram.strongly_connected(d, 2, 3)]
    s, enum = diagram.s_lambda(d), len(diagram.enumerate_S_Lambda(d))
    yield CaseResult("formula", "worked diagram x>xo>xo<", all(facts) and s == enum == 2,
                     f"connectivity={facts} s_lambda={s} enumerated={enum}")


def _engine_value(w: SuperWeight, kind: str, cfg: VerifyConfig) -> int:
    return cf.engine_dimension(w, kind, cutoff=cfg.cutoff, margin=cfg.margin, retries=cfg.retries)


def suite_engine(cfg: VerifyConfig, dump: Callable | None = None) -> Iterator[CaseResult]:
    for m, n in shapes(cfg):
        for w in dominant_weights(m, n, cfg.entry_bound):
            rep = superdimension(w)
            engine = _engine_value(w, "super", cfg)
            ok = abs(engine) == rep.sdim_abs and ((engine != 0) == (rep.atypicality == n))
            if dump is not None:
                dump(w, cf.supercharacter(w, cfg.cutoff, cfg.margin))
            yield CaseResult("engine", f"gl({m}|{n}) {w}", ok,
                             f"engine={engine} formula={rep.sdim_abs} r={rep.atypicality}")


def suite_tableaux(cfg: VerifyConfig) -> Iterator[CaseResult]:
    for m, n in shapes(cfg):
        for lam in hook_partitions(m, n, cfg.max_cells):
            w = covariant_weight(lam, m, n)
            count, signed = hook_tableau_counts(lam, m, n)
            dim = _engine_value(w, "ordinary", cfg)
            sdim = _engine_value(w, "super", cfg)
            formula = superdimension(w).sdim_abs
            ok = count == dim and abs(signed) == abs(sdim) == formula
            yield CaseResult("tableaux", f"gl({m}|{n}) lambda={lam.parts}", ok,
                             f"tableaux=({count},{signed}) engine=({dim},{sdim}) formula={formula}")


def suite_lemma2(cfg: VerifyConfig) -> Iterator[CaseResult]:
    for r in range(1, cfg.max_r + 1):
        value = cf.lemma2_sum(r)
        yield CaseResult("lemma2", f"r={r}", value == 1, f"sum={value}")


def run(suite: str, cfg: VerifyConfig, dump: Callable | None = None) -> Iterator[CaseResult]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name == "formula":
            yield from suite_formula(cfg)
        elif name == "engine":
            yield from suite_engine(cfg, dump)
        elif name == "tableaux":
            yield from suite_tableaux(cfg)
        elif name == "lemma2":
            yield from suite_lemma2(cfg)
        else:
            raise ValueError(f"unknown suite {name!r}")
