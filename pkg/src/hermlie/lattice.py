"""Integrality probes for ``exp(t ad_X)`` restricted to the nilradical.

For an almost nilpotent algebra ``g = n ⋊ span(X)``, a cocompact lattice in
the corresponding simply connected group can be constructed whenever there
are a nonzero ``t`` and a rational basis of ``n`` in which the matrix of
``exp(t ad_X|_n)`` has integer entries.  This module evaluates that matrix
(float scaling-and-squaring in general, an exact truncated series when
``ad_X`` is nilpotent) and tests integrality to a tolerance.  ``t`` is never
searched for automatically: it comes from the caller or from a small
built-in list of candidates.

The probe is one-sided: an integral matrix certifies the construction
applies, while a non-integral one for a particular ``(X, t, basis)`` decides
nothing.  For ``s6.152`` the probe is inconclusive by design.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy
from scipy.linalg import expm

from .scalars import GaussianRational
from .liealg import LieAlgebra, find_nilradical

__all__ = [
    "LatticeProbe",
    "parse_time",
    "parse_vector",
    "ad_restricted",
    "exp_ad",
    "exact_exp_nilpotent",
    "integrality_check",
    "nilradical_basis",
    "run_probe",
    "builtin_probe",
    "BUILTIN_PROBES",
    "CANDIDATE_TIMES",
]

#: Built-in time candidates tried by the CLI when none is supplied.
CANDIDATE_TIMES = ("2pi", "pi", "1")


def _normalize(text: str) -> str:
    t = text.replace("π", "pi").replace("^", "**").strip()
    # insert explicit multiplication: "2pi", ")f5", "pi(", "3f2", ...
    t = re.sub(r"(\d|\))\s*(pi\b|f\d)", r"\1*\2", t)
    t = re.sub(r"(pi\b|\))\s*(\(|f\d)", r"\1*\2", t)
    t = re.sub(r"(f\d)\s*(\()", r"\1*\2", t)
    return t


def parse_time(text: str) -> float:
    """Parse a time expression such as ``2pi``, ``pi``, ``1`` or ``3/4``."""
    expr = sympy.sympify(_normalize(text), {"pi": sympy.pi})
    if expr.free_symbols:
        raise ValueError(f"time expression has free symbols: {text!r}")
    return float(expr.evalf())


def parse_vector(text: str, dim: int = 6) -> np.ndarray:
    """Parse a vector like ``f6-((pi-1)/pi)f5`` into float components."""
    names = [f"f{i}" for i in range(1, dim + 1)]
    syms = sympy.symbols(names)
    local = dict(zip(names, syms))
    local["pi"] = sympy.pi
    expr = sympy.expand(sympy.sympify(_normalize(text), local))
    out = np.zeros(dim)
    rest = expr
    for i, s in enumerate(syms):
        c = expr.coeff(s, 1)
        if c.free_symbols:
            raise ValueError(f"nonlinear or coupled coefficient in {text!r}")
        out[i] = float(c.evalf())
        rest = rest - c * s
    if sympy.simplify(rest) != 0:
        raise ValueError(f"not a linear combination of f1..f{dim}: {text!r}")
    return out


@dataclass
class LatticeProbe:
    """One integrality probe: direction ``X``, time ``t``, rational basis."""

    X: Sequence[float]
    t: float
    basis: Sequence[Sequence[Fraction]]
    tolerance: float = 1e-9


def nilradical_basis(g: LieAlgebra) -> list:
    """Rational basis rows of the nilradical, as Fractions."""
    rows = []
    for row in find_nilradical(g):
        out = []
        for x in row:
            x = GaussianRational.coerce(x)
            if x.im:
                raise ValueError("nilradical basis must be rational")
            out.append(Fraction(x.re))
        rows.append(out)
    return rows


def ad_restricted(g: LieAlgebra, X: Sequence[float], basis) -> np.ndarray:
    """Matrix of ``ad_X`` on ``span(basis)``; error if the span moves."""
    n = g.dim
    B = np.array([[float(x) for x in row] for row in basis], dtype=float).T
    x = [float(v) for v in X]
    ad = g.ad_matrix(x)
    A6 = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            v = complex(ad[i][j])
            if abs(v.imag) > 1e-12:
                raise ValueError("ad_X must be real")
            A6[i, j] = v.real
    M = A6 @ B
    coords, *_ = np.linalg.lstsq(B, M, rcond=None)
    if np.max(np.abs(B @ coords - M)) > 1e-9:
        raise ValueError("ad_X does not preserve the span of the given basis")
    return coords


def exp_ad(g: LieAlgebra, probe: LatticeProbe) -> np.ndarray:
    """``exp(t ad_X)`` on the probe basis (float scaling-and-squaring)."""
    A = ad_restricted(g, probe.X, probe.basis)
    return expm(probe.t * A)


def exact_exp_nilpotent(A, t) -> list:
    """Exact ``exp(t A)`` for nilpotent rational ``A`` via the finite series."""
    k = len(A)
    A = [[Fraction(x) for x in row] for row in A]
    t = Fraction(t)

    def matmul(P, Q):
        return [[sum(P[i][l] * Q[l][j] for l in range(k)) for j in range(k)]
                for i in range(k)]

    result = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    power = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    coeff = Fraction(1)
    for m in range(1, k + 1):
        power = matmul(power, A)
        coeff = coeff * t / m
        if all(x == 0 for row in power for x in row):
            return result
        for i in range(k):
            for j in range(k):
                result[i][j] += coeff * power[i][j]
    raise ValueError("matrix is not nilpotent")


def integrality_check(matrix: np.ndarray, tol: float = 1e-9):
    """True iff all entries are near integers and |det| is near 1."""
    M = np.asarray(matrix, dtype=float)
    rounded = np.rint(M)
    entry_ok = bool(np.max(np.abs(M - rounded)) <= tol)
    det_ok = bool(abs(abs(float(np.linalg.det(M))) - 1.0) <= tol)
    return entry_ok and det_ok, rounded.astype(int).tolist()


#: Probes with a known decisive answer, as (X, t, presentation); None marks
#: a deliberately open case.  The s6.147^0 probe is integral in its "table1"
#: presentation (the probe vector is tied to that choice of basis).
BUILTIN_PROBES = {
    "s6.147^0": ("f6-((pi-1)/pi)f5", "2pi", "table1"),
    "s6.154^0": ("f6", "2pi", None),
    "s6.152": None,
}


def run_probe(g: LieAlgebra, x_text: str, t_text: str,
              tolerance: float = 1e-9, name: Optional[str] = None) -> dict:
    """Evaluate one probe and report the matrix with its integrality verdict."""
    X = parse_vector(x_text, g.dim)
    t = parse_time(t_text)
    basis = nilradical_basis(g)
    probe = LatticeProbe(X, t, basis, tolerance)
    M = exp_ad(g, probe)
    integral, rounded = integrality_check(M, tolerance)
    return {
        "algebra": name or g.name,
        "X": x_text,
        "t": t_text,
        "matrix": M.tolist(),
        "integral": integral,
        "rounded": rounded if integral else None,
        "status": "integral" if integral else "not integral at this (X, t)",
        "note": "" if integral else
                "a failed probe decides nothing (evidence, not proof)",
    }


def builtin_probe(name: str, g: Optional[LieAlgebra] = None) -> dict:
    """Run the stored probe for a catalog algebra, if one is known."""
    if name not in BUILTIN_PROBES:
        raise KeyError(f"no built-in probe for {name!r}")
    spec = BUILTIN_PROBES[name]
    if spec is None:
        return {
            "algebra": name,
            "status": "inconclusive",
            "note": "lattice existence deliberately left open for this algebra",
        }
    x_text, t_text, presentation = spec
    if g is None:
        from .catalog import get_entry

        entry = get_entry(name)
        g = (entry.algebra_instance(presentation=presentation)
             if presentation else entry.algebra_instance())
    return run_probe(g, x_text, t_text, name=name)
