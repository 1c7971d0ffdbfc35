"""Hermitian metrics and the special-structure checkers.

All checkers work on a :class:`~hermlie.cpx.Complexification` (real algebra +
integrable J + complex coframe) and a fundamental form given in the complex
coframe basis.  The fundamental form of a metric with diagonal coefficients
``lambda1..lambda3`` and off-diagonal ``w1..w3`` is

    omega = i(l1 a^{1 conj1} + l2 a^{2 conj2} + l3 a^{3 conj3})
            + w1 a^{2 conj3} - conj(w1) a^{3 conj2}
            + w2 a^{1 conj3} - conj(w2) a^{3 conj1}
            + w3 a^{1 conj2} - conj(w3) a^{2 conj1}

and is positive iff the associated 3x3 Hermitian matrix is positive definite.

Conventions: the torsion 3-form is ``H = d^c omega = i (dbar - del) omega``,
which agrees with ``d^c omega (X,Y,Z) = -d omega (JX, JY, JZ)``; the Lee form
``theta`` is the unique 1-form with ``d omega^2 = theta ^ omega^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .cpx import HOLO, Complexification, ComplexFrame, conj_alpha
from .forms import Form
from .liealg import ce_differential
from .scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational, conj_scalar

# index helper: a^{j conjk} lives at (j, k+3) in the complex coframe basis


def _bar(k: int) -> int:
    return k + HOLO


@dataclass
class HermitianMetric:
    """Metric coefficients relative to a fixed (1,0)-coframe."""

    lams: Sequence  # three real scalars
    ws: Sequence    # three complex scalars
    shape: str = "full"  # "almost_abelian" forces w2 = w3 = 0

    def __post_init__(self):
        if self.shape == "almost_abelian" and (self.ws[1] or self.ws[2]):
            raise ValueError("almost abelian metric shape requires w2 = w3 = 0")


def fundamental_form(metric: HermitianMetric) -> Form:
    l1, l2, l3 = metric.lams
    w1, w2, w3 = metric.ws
    i = GR_I
    return Form(6, 2, {
        (1, _bar(1)): i * l1,
        (2, _bar(2)): i * l2,
        (3, _bar(3)): i * l3,
        (2, _bar(3)): w1,
        (3, _bar(2)): -conj_scalar(w1),
        (1, _bar(3)): w2,
        (3, _bar(1)): -conj_scalar(w2),
        (1, _bar(2)): w3,
        (2, _bar(1)): -conj_scalar(w3),
    })


def metric_from_alpha_form(omega: Form, shape: str = "full") -> HermitianMetric:
    """Read the coefficient data off a (1,1)-form in the complex coframe."""
    i_inv = -GR_I

    def g(j, k):
        c = omega.coeff(j, _bar(k))
        return GaussianRational.coerce(c) if not isinstance(c, complex) else c

    lams = [i_inv * g(k, k) for k in (1, 2, 3)]
    ws = [g(2, 3), g(1, 3), g(1, 2)]
    if shape == "almost_abelian":
        ws = [ws[0], GR_ZERO, GR_ZERO]
    return HermitianMetric(lams, ws, shape=shape)


def is_positive(metric: HermitianMetric) -> bool:
    """Exact positivity of the associated Hermitian matrix (leading minors)."""
    l1, l2, l3 = (GaussianRational.coerce(l) for l in metric.lams)
    w1, w2, w3 = (GaussianRational.coerce(w) for w in metric.ws)
    for l in (l1, l2, l3):
        if l.im:
            raise ValueError("diagonal coefficients must be real")

    def norm(w):
        return (w * w.conj()).re

    c1 = l1.re > 0
    c2 = l1.re * l2.re > norm(w3)
    c3 = l2.re * l3.re > norm(w1)
    c4 = l1.re * l3.re > norm(w2)
    cross = (GR_I * w1.conj() * w2 * w3.conj()).re
    c5 = (l1.re * l2.re * l3.re + 2 * cross
          > l1.re * norm(w1) + l2.re * norm(w2) + l3.re * norm(w3))
    return bool(c1 and c2 and c3 and c4 and c5)


def gram_matrix(cx: Complexification, omega_real: Form) -> list:
    """g(X, Y) = omega(X, JY) on the real basis."""
    n = cx.g.dim
    J = cx.J
    cols = [[J[i][j] for i in range(n)] for j in range(n)]
    basis = [[GR_ONE if t == i else GR_ZERO for t in range(n)] for i in range(n)]
    return [[omega_real.evaluate(basis[i], cols[j]) for j in range(n)] for i in range(n)]


def is_positive_real(cx: Complexification, omega_real: Form) -> bool:
    """Positivity through leading principal minors of the Gram matrix."""
    G = linalg.coerce_matrix(gram_matrix(cx, omega_real))
    n = len(G)
    for i in range(n):
        for j in range(n):
            if G[i][j] != G[j][i]:
                return False
    for k in range(1, n + 1):
        mk = [row[:k] for row in G[:k]]
        d = linalg.det(mk)
        if d.im or d.re <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# derived quantities


def torsion_H(frame: ComplexFrame, omega: Form) -> Form:
    """H = d^c omega = i (dbar - del) omega for a (1,1)-form omega."""
    d = frame.d(omega)
    del_part = frame.project(d, 2, 1)
    dbar_part = frame.project(d, 1, 2)
    return (dbar_part - del_part) * GR_I


def lee_form(cx: Complexification, omega: Form) -> Form:
    """Unique real 1-form theta with d omega^2 = theta ^ omega^2.

    Input and output are in the real coframe basis; omega may be given in
    either basis (converted by bidegree bookkeeping of its indices).
    """
    n = cx.g.dim
    om = omega
    om_real = cx.to_real(om)
    om2 = om_real.wedge(om_real)
    dom2 = ce_differential(cx.g, om2)
    cols = []
    for i in range(1, n + 1):
        w = Form.basis(n, (i,)).wedge(om2)
        cols.append(w)
    keys = sorted({k for c in cols for k in c.coeffs} | set(dom2.coeffs))
    mat = [[c.coeffs.get(k, GR_ZERO) for c in cols] for k in keys]
    rhs = [dom2.coeffs.get(k, GR_ZERO) for k in keys]
    sol = linalg.solve(mat, rhs)
    if sol is None:
        raise ValueError("omega^2 is degenerate; no Lee form")
    return Form(n, 1, {(i + 1,): sol[i] for i in range(n)})


def closed_one_forms(cx: Complexification) -> list[Form]:
    """Basis of closed real 1-forms on the algebra."""
    n = cx.g.dim
    from .forms import all_index_tuples

    keys = all_index_tuples(n, 2)
    rows = []
    for key in keys:
        rows.append([
            GaussianRational.coerce(cx.g.d1[i].coeffs.get(key, GR_ZERO))
            for i in range(n)
        ])
    kernel = linalg.nullspace(rows, ncols=n)
    return [Form(n, 1, {(i + 1,): v[i] for i in range(n)}) for v in kernel]


# ---------------------------------------------------------------------------
# condition reports


@dataclass
class ConditionReport:
    condition: str
    holds: bool
    certificate: dict = field(default_factory=dict)
    notes: str = ""

    def __bool__(self):
        return self.holds


def check_kahler(cx: Complexification, omega: Form) -> ConditionReport:
    d = cx.frame.d(omega)
    return ConditionReport("kahler", not d,
                           certificate={} if d else {"d_omega": "0"})


def check_skt(cx: Complexification, omega: Form) -> ConditionReport:
    H = torsion_H(cx.frame, omega)
    dH = cx.frame.d(H)
    return ConditionReport("skt", not dH,
                           certificate={"H_zero": not H})


def check_balanced(cx: Complexification, omega: Form) -> ConditionReport:
    om2 = omega.wedge(omega)
    return ConditionReport("balanced", not cx.frame.d(om2))


def check_lcb(cx: Complexification, omega: Form) -> ConditionReport:
    theta = lee_form(cx, omega)
    dtheta = ce_differential(cx.g, theta)
    return ConditionReport("lcb", not dtheta,
                           certificate={"lee_form": repr(theta)})


def check_lck(cx: Complexification, omega: Form) -> ConditionReport:
    """d omega = (1/2) theta ^ omega with theta the (closed) Lee form.

    Cross-checked against the formulation "exists a closed 1-form mu with
    d omega = mu ^ omega" (solved exactly); the two must agree.
    """
    theta = lee_form(cx, omega)
    om_real = cx.to_real(omega)
    dom = ce_differential(cx.g, om_real)
    resid = dom - theta.wedge(om_real) * Fraction(1, 2)
    primary = (not resid) and (not ce_differential(cx.g, theta))

    # variant: solve d omega = mu ^ omega over closed 1-forms
    closed = closed_one_forms(cx)
    cols = [mu.wedge(om_real) for mu in closed]
    keys = sorted({k for c in cols for k in c.coeffs} | set(dom.coeffs))
    mat = [[c.coeffs.get(k, GR_ZERO) for c in cols] for k in keys]
    rhs = [dom.coeffs.get(k, GR_ZERO) for k in keys]
    sol = linalg.solve(mat, rhs) if cols else ([] if not dom else None)
    variant = sol is not None
    if primary != variant:
        raise AssertionError("LCK formulations disagree on this structure")
    cert = {"lee_form": repr(theta)} if primary else {}
    return ConditionReport("lck", primary, certificate=cert)


def check_lcskt(cx: Complexification, omega: Form) -> ConditionReport:
    """Exists a closed nonzero real 1-form mu with dH = mu ^ H."""
    H = torsion_H(cx.frame, omega)
    H_real = cx.to_real(H)
    if not H_real:
        closed = closed_one_forms(cx)
        mu = next((m for m in closed if m), None)
        return ConditionReport(
            "lcskt", mu is not None,
            certificate={"mu": repr(mu), "torsion_free": True},
            notes="H = 0: twisted condition is vacuous; separate torsion-free verdict",
        )
    dH = ce_differential(cx.g, H_real)
    closed = closed_one_forms(cx)
    cols = [mu.wedge(H_real) for mu in closed]
    keys = sorted({k for c in cols for k in c.coeffs} | set(dH.coeffs))
    mat = [[c.coeffs.get(k, GR_ZERO) for c in cols] for k in keys]
    rhs = [dH.coeffs.get(k, GR_ZERO) for k in keys]
    if dH:
        sol = linalg.solve(mat, rhs)
        if sol is None:
            return ConditionReport("lcskt", False)
        mu = _combine(closed, sol)
        return ConditionReport("lcskt", True, certificate={"mu": repr(mu)})
    # dH = 0 (SKT): need a nonzero closed mu with mu ^ H = 0
    kernel = linalg.nullspace(mat, ncols=len(cols)) if cols else []
    for v in kernel:
        if any(v):
            mu = _combine(closed, v)
            return ConditionReport("lcskt", True,
                                   certificate={"mu": repr(mu), "skt": True})
    return ConditionReport("lcskt", False, certificate={"skt": True})


def _combine(forms: Sequence[Form], coeffs: Sequence) -> Form:
    out = Form.zero(forms[0].dim, forms[0].degree) if forms else None
    for f, c in zip(forms, coeffs):
        if c:
            out = out + f * c
    return out


def verify_twisted_certificate(cx: Complexification, omega: Form, mu: Form) -> bool:
    """Does the given closed mu satisfy dH = mu ^ H (mu in the real basis)?"""
    if ce_differential(cx.g, mu):
        return False
    H_real = cx.to_real(torsion_H(cx.frame, omega))
    return ce_differential(cx.g, H_real) == mu.wedge(H_real)


def check_first_gauduchon(cx_or_frame, omega: Form) -> ConditionReport:
    frame = cx_or_frame.frame if isinstance(cx_or_frame, Complexification) else cx_or_frame
    ddbar = frame.project(frame.d(frame.project(frame.d(omega), 1, 2)), 2, 2)
    top = ddbar.wedge(omega)
    c = top.coeff(1, 2, 3, 4, 5, 6)
    return ConditionReport("first_gauduchon", not c,
                           certificate={"top_coefficient": repr(c)})


def first_gauduchon_coefficient(frame: ComplexFrame, omega: Form):
    """Coefficient of a^{1 conj1 2 conj2 3 conj3} in (del dbar omega) ^ omega."""
    ddbar = frame.project(frame.d(frame.project(frame.d(omega), 1, 2)), 2, 2)
    return ddbar.wedge(omega).coeff(1, 4, 2, 5, 3, 6)


def check_strongly_gauduchon(cx_or_frame, omega: Form) -> ConditionReport:
    """del(omega^2) is dbar-exact: solve dbar beta = del omega^2 with beta a
    (3,1)-form."""
    frame = cx_or_frame.frame if isinstance(cx_or_frame, Complexification) else cx_or_frame
    om2 = omega.wedge(omega)
    target = frame.project(frame.d(om2), 3, 2)
    betas = [Form(6, 4, {(1, 2, 3, _bar(k)): GR_ONE}) for k in (1, 2, 3)]
    cols = [frame.project(frame.d(b), 3, 2) for b in betas]
    keys = sorted({k for c in cols for k in c.coeffs} | set(target.coeffs))
    mat = [[GaussianRational.coerce(c.coeffs.get(k, GR_ZERO)) for c in cols] for k in keys]
    rhs = [GaussianRational.coerce(target.coeffs.get(k, GR_ZERO)) for k in keys]
    sol = linalg.solve(mat, rhs)
    cert = {}
    if sol is not None:
        cert = {"beta_coefficients": [repr(c) for c in sol]}
    return ConditionReport("strongly_gauduchon", sol is not None, certificate=cert)


def check_tamed(cx_or_frame, omega: Form) -> ConditionReport:
    """Exists a del-closed (2,0)-form beta with del omega = dbar beta.

    Solvability of this system is the obstruction used for taming symplectic
    forms; it is meaningful alongside an SKT metric, noted in the report.
    """
    frame = cx_or_frame.frame if isinstance(cx_or_frame, Complexification) else cx_or_frame
    del_om = frame.project(frame.d(omega), 2, 1)
    betas = [Form(6, 2, {key: GR_ONE}) for key in ((1, 2), (1, 3), (2, 3))]
    rows_cols = []
    for b in betas:
        db = frame.d(b)
        rows_cols.append((frame.project(db, 2, 1), frame.project(db, 3, 0)))
    keys21 = sorted({k for c, _ in rows_cols for k in c.coeffs} | set(del_om.coeffs))
    keys30 = sorted({k for _, c in rows_cols for k in c.coeffs})
    mat = []
    rhs = []
    for k in keys21:
        mat.append([GaussianRational.coerce(c.coeffs.get(k, GR_ZERO)) for c, _ in rows_cols])
        rhs.append(GaussianRational.coerce(del_om.coeffs.get(k, GR_ZERO)))
    for k in keys30:
        mat.append([GaussianRational.coerce(c.coeffs.get(k, GR_ZERO)) for _, c in rows_cols])
        rhs.append(GR_ZERO)
    sol = linalg.solve(mat, rhs)
    return ConditionReport(
        "tamed", sol is not None,
        certificate={"beta_coefficients": [repr(c) for c in sol]} if sol is not None else {},
        notes="linear taming obstruction; evaluated alongside an SKT metric",
    )


CHECKERS = {
    "kahler": check_kahler,
    "skt": check_skt,
    "balanced": check_balanced,
    "lcb": check_lcb,
    "lck": check_lck,
    "lcskt": check_lcskt,
    "first_gauduchon": check_first_gauduchon,
    "strongly_gauduchon": check_strongly_gauduchon,
    "tamed": check_tamed,
}


def check_all(cx: Complexification, omega: Form) -> dict:
    return {name: fn(cx, omega) for name, fn in CHECKERS.items()}
