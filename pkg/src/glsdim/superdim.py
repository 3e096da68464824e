"""Closed-form absolute superdimension of a simple gl(m|n)-module.

``|sdim L(Lambda)| = s_Lambda * dim L_Lambda`` when the atypicality equals
``n`` and 0 otherwise.  ``dim L_Lambda`` is the Weyl dimension of the
gl(m-n)-module living on the eps-indices not touched by the atypical roots,
evaluated at the rho-shifted weight:

    prod_{alpha in M+} <Lambda + rho, alpha^vee> / <rho0, alpha^vee>

where ``rho0`` is the half-sum of ``M+``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import diagram
from .weights import (
    GammaSet,
    Root,
    RhoShiftedWeight,
    SuperWeight,
    gamma_set,
    m_lambda_positive,
    pair_coroot,
    rho0_lambda,
    rho_shift,
)


@dataclass(frozen=True)
class SuperdimReport:
    weight: SuperWeight
    shifted: RhoShiftedWeight
    gamma: GammaSet
    m_plus: tuple[Root, ...]
    atypicality: int
    maximal: bool
    s_lambda: int
    glambda_dim: int
    sdim_abs: int


def glambda_dim(rs: RhoShiftedWeight, m_plus: Sequence[Root]) -> int:
    m, n = rs.m, rs.n
    top = rs.vector()
    half = rho0_lambda(m_plus, m, n)
    value = Fraction(1)
    for alpha in m_plus:
        num = pair_coroot(top, alpha, m, n)
        den = pair_coroot(half, alpha, m, n)
        assert den != 0, f"rho0 is orthogonal to {alpha}"
        value *= num / den
    assert value.denominator == 1 and value > 0, f"non-integral dimension {value}"
    return int(value)


def superdimension(w: SuperWeight) -> SuperdimReport:
    rs = rho_shift(w)
    gamma = gamma_set(rs)
    m_plus = tuple(m_lambda_positive(rs, gamma))
    maximal = gamma.r == rs.n
    s = diagram.s_lambda(diagram.build_diagram(rs))
    dim = glambda_dim(rs, m_plus)
    return SuperdimReport(
        weight=w,
        shifted=rs,
        gamma=gamma,
        m_plus=m_plus,
        atypicality=gamma.r,
        maximal=maximal,
        s_lambda=s,
        glambda_dim=dim,
        sdim_abs=s * dim if maximal else 0,
    )


def sdim_abs(w: SuperWeight) -> int:
    return superdimension(w).sdim_abs
