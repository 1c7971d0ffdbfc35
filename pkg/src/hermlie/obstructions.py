"""Registry of symbolic obstructions: exact certificates of non-existence.

Each row documents why a given Hermitian condition fails on a given algebra,
as a staged symbolic computation over the generic compatible metric
``omega = i(l1 a^{11'} + l2 a^{22'} + l3 a^{33'}) + w1 a^{23'} - w1~ a^{32'}
+ w2 a^{13'} - w2~ a^{31'} + w3 a^{12'} - w3~ a^{21'}`` on a family of
complex structure equations (one row per family branch).  A row consists of
steps; each step extracts a coefficient (or combination) of the appropriate
residual form, asserts its exact polynomial value, and optionally installs a
substitution forced by setting it to zero.  The final step exhibits a value
that cannot vanish on the positivity cone (l's > 0, l_j l_k > |w_i|^2), or
shows that the twisting 1-form is forced to vanish.

Residual conventions (xi denotes the coefficient of the *sorted* monomial):
  - "twisted"  (rules out both SKT and LCSKT): d(H) - mu ^ H with H = d^c w
  - "lck":     d(omega) - mu ^ omega, mu a generic closed real 1-form
  - "strg":    del(omega^2) - dbar(beta), beta = a^{123} ^ (sum b_k a^{k'})
  - "firstg":  the a^{11'22'33'} coefficient of del dbar omega ^ omega
  - "tamed":   del(omega) - dbar(beta), beta a del-closed (2,0)-form
  - "nijenhuis": staged elimination on a fully generic J proving that no
    integrable complex structure exists (J^2 = -Id leads to a sign
    contradiction).

Rows with sign parameters (values in {-1, +1}) are replayed for every sign
choice; rows whose family coefficients involve divisions by parameters are
replayed at exact rational parameter samples instead of symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .cpx import ComplexFrame, instantiate_family, nijenhuis, generic_j_ring
from .forms import Form
from .herm import HermitianMetric, fundamental_form, first_gauduchon_coefficient, torsion_H
from .liealg import parse_structure_equations
from .scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational, Poly, PolyRing, conj_scalar

F = Fraction
I = GR_I


# ---------------------------------------------------------------------------
# replay machinery


class ReplayContext:
    """State threaded through the steps of one obstruction row replay."""

    def __init__(self, ring: PolyRing, params: dict, frame: Optional[ComplexFrame]):
        self.ring = ring
        self.params = params
        self.frame = frame
        self.residual = None  # Form or scalar, set by the driver
        self.subs: dict = {}

    # -- variable access ------------------------------------------------
    def v(self, name):
        return self.ring.var(name)

    def p(self, name):
        """Parameter value: symbolic Poly, sign, or exact sample."""
        return self.params[name]

    def re(self, x):
        return _re_of(self.ring, x)

    def im(self, x):
        return _im_of(self.ring, x)

    def cj(self, x):
        return conj_scalar(x)

    def norm_sq(self, x):
        return x * conj_scalar(x)

    # -- residual access ------------------------------------------------
    def _apply(self, value):
        if isinstance(value, Poly) and self.subs:
            return value.substitute(self.subs)
        return value

    def xi(self, *indices):
        """Coefficient of the sorted alpha-monomial, current substitutions
        applied.  Conjugate slots use indices 4, 5, 6 for 1', 2', 3'."""
        return self._apply(self.ring.coerce(self.residual.coeff(*indices)))

    def value(self):
        """The residual itself when it is a scalar (first-Gauduchon rows)."""
        return self._apply(self.ring.coerce(self.residual))

    # -- substitutions forced by a step ---------------------------------
    def set(self, name: str, value):
        """Install variable := value (and the conjugate partner, if any)."""
        value = self.ring.coerce(value)
        if self.subs:
            value = value.substitute(self.subs)
        self.subs[name] = value
        partner = _conj_name(self.ring, name)
        if partner is not None and partner != name:
            self.subs[partner] = conj_scalar(value)

    def set_zero(self, *names):
        for n in names:
            self.set(n, 0)


def _conj_name(ring: PolyRing, name: str) -> Optional[str]:
    partner = ring.names[ring.conj_index[ring._index[name]]]
    return None if partner == name else partner


def _re_of(ring: PolyRing, x):
    x = ring.coerce(x)
    half = GaussianRational("1/2")
    return (x + conj_scalar(x)) * half


def _im_of(ring: PolyRing, x):
    x = ring.coerce(x)
    return (x - conj_scalar(x)) * (-GaussianRational("1/2") * I)


@dataclass(frozen=True)
class Step:
    label: str
    value: Callable[[ReplayContext], object]
    expected: Callable[[ReplayContext], object]
    after: Optional[Callable[[ReplayContext], None]] = None


@dataclass
class ObstructionRow:
    algebra: str
    condition: str          # lcskt | lck | strongly_gauduchon | first_gauduchon | tamed | complex
    family_id: str
    branch: str
    residual: str           # twisted | lck | strg | firstg | tamed | nijenhuis
    conclusion: str         # residual_nonzero | mu_forced_zero | no_solution
    signs: tuple = ()       # names looped over {-1, +1}
    sym_real: tuple = ()    # symbolic real family parameters
    sym_cpx: tuple = ()     # symbolic complex family parameters
    samples: tuple = ()     # tuple of dicts of exact parameter values
    mu_real: tuple = ()     # extra real variables of the twisting form
    mu_cpx: tuple = ()      # extra complex variables of the twisting form
    mu: Optional[Callable[[ReplayContext], Form]] = None
    steps: tuple = ()
    note: str = ""

    def key(self):
        return (self.algebra, self.condition, self.branch)


# ---------------------------------------------------------------------------
# residual builders


def _metric_ring(row: ObstructionRow) -> PolyRing:
    real = ["l1", "l2", "l3"] + list(row.sym_real) + list(row.mu_real)
    cpx = ["w1", "w2", "w3"] + list(row.sym_cpx) + list(row.mu_cpx)
    return PolyRing(real_vars=real, complex_vars=cpx)


def _omega(ring: PolyRing, shape: str) -> Form:
    zero = ring.zero()
    ws = [ring.var("w1"), zero, zero] if shape == "almost_abelian" else [
        ring.var("w1"), ring.var("w2"), ring.var("w3")]
    m = HermitianMetric(
        lams=[ring.var("l1"), ring.var("l2"), ring.var("l3")],
        ws=ws, shape=shape)
    return fundamental_form(m)


def _mu_form(entries: dict) -> Form:
    return Form(6, 1, {(k,): v for k, v in entries.items() if v})


def _mu_re1(ctx: ReplayContext) -> Form:
    """i y (a^1 - a^{1'})."""
    y = ctx.v("y")
    return _mu_form({1: I * y, 4: -(I * y)})


def _mu_re1_z3(ctx: ReplayContext) -> Form:
    """i y (a^1 - a^{1'}) + zeta a^3 + zeta~ a^{3'}."""
    y, z = ctx.v("y"), ctx.v("zeta")
    return _mu_form({1: I * y, 4: -(I * y), 3: z, 6: conj_scalar(z)})


def _mu_z3(ctx: ReplayContext) -> Form:
    """zeta a^3 + zeta~ a^{3'}."""
    z = ctx.v("zeta")
    return _mu_form({3: z, 6: conj_scalar(z)})


def _mu_re2_minus_re3(scale_name: str):
    """i y (a^2 - a^{2'}) - i y Re(scale) (a^3 - a^{3'})."""

    def build(ctx: ReplayContext) -> Form:
        y = ctx.v("y")
        r = ctx.re(ctx.p(scale_name))
        iy = I * y
        return _mu_form({2: iy, 5: -iy, 3: -(iy * r), 6: iy * r})

    return build


def _build_residual(row: ObstructionRow, ctx: ReplayContext, shape: str):
    ring, frame = ctx.ring, ctx.frame
    om = _omega(ring, shape)
    if row.residual == "twisted":
        H = torsion_H(frame, om)
        res = frame.d(H)
        if row.mu is not None:
            mu = row.mu(ctx)
            if any(frame.d(mu).coeffs.values()):
                raise AssertionError("twisting form is not closed")
            res = res - mu.wedge(H)
        return res
    if row.residual == "lck":
        res = frame.d(om)
        if row.mu is not None:
            mu = row.mu(ctx)
            if any(frame.d(mu).coeffs.values()):
                raise AssertionError("twisting form is not closed")
            res = res - mu.wedge(om)
        return res
    if row.residual == "strg":
        beta = Form(6, 3, {(1, 2, 3): ring.one()}).wedge(
            _mu_form({4: ring.var("b1"), 5: ring.var("b2"), 6: ring.var("b3")}))
        return frame.del_(om.wedge(om)) - frame.dbar(beta)
    if row.residual == "tamed":
        beta = Form(6, 2, {(1, 2): ring.var("b1"), (1, 3): ring.var("b2")})
        if any(frame.del_(beta).coeffs.values()):
            raise AssertionError("taming candidate is not del-closed")
        return frame.del_(om) - frame.dbar(beta)
    if row.residual == "firstg":
        return first_gauduchon_coefficient(frame, om)
    raise ValueError(f"unknown residual kind {row.residual!r}")


def replay_obstruction_row(row: ObstructionRow) -> dict:
    """Re-run every step of a row exactly; raises AssertionError on the
    first mismatch, returns a report otherwise."""
    if row.residual == "nijenhuis":
        return _replay_nijenhuis(row)

    sign_choices = list(product((1, -1), repeat=len(row.signs))) or [()]
    samples = list(row.samples) or [{}]
    shape = "almost_abelian" if row.family_id.startswith("AA-") else "full"
    runs = 0
    for signs in sign_choices:
        for sample in samples:
            ring = _metric_ring(row)
            params = dict(zip(row.signs, signs))
            params.update({n: ring.var(n) for n in row.sym_real})
            params.update({n: ring.var(n) for n in row.sym_cpx})
            params.update(sample)
            fam = instantiate_family(row.family_id, params)
            ctx = ReplayContext(ring, params, fam.frame)
            ctx.residual = _build_residual(row, ctx, shape)
            for step in row.steps:
                got = ring.coerce(step.value(ctx))
                want = ring.coerce(step.expected(ctx))
                if got != want:
                    raise AssertionError(
                        f"{row.algebra}/{row.condition}/{row.branch} step "
                        f"{step.label!r} at {params}: got {got}, expected {want}")
                if step.after is not None:
                    step.after(ctx)
            runs += 1
    return {
        "algebra": row.algebra,
        "condition": row.condition,
        "branch": row.branch,
        "conclusion": row.conclusion,
        "runs": runs,
        "steps": [s.label for s in row.steps],
        "ok": True,
    }


# ---------------------------------------------------------------------------
# row definitions: twisted SKT (rules out SKT and LCSKT together)


def _rows_twisted() -> list:
    rows = []

    rows.append(ObstructionRow(
        "s6.44", "lcskt", "HT-s6.44", "", "twisted", "residual_nonzero",
        signs=("eps",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_12_1'3'", lambda c: c.xi(1, 2, 4, 6),
                 lambda c: -2 * c.v("y") * c.v("l2"),
                 after=lambda c: c.set_zero("y")),
            Step("xi_13_1'3'", lambda c: c.xi(1, 3, 4, 6),
                 lambda c: 4 * c.v("l2")),
        )))

    rows.append(ObstructionRow(
        "s6.145^0", "lcskt", "N51-145", "", "twisted", "residual_nonzero",
        sym_cpx=("nu",),
        samples=({"c": 1}, {"c": GaussianRational(F(3, 5), F(4, 5))}),
        mu_cpx=("zeta",), mu=_mu_z3,
        note="the zeta-dependence cancels in the combination "
             "l1 xi_23_2'3' + 2 Im(conj(w3) xi_13_2'3')",
        steps=(
            Step("l1 xi_23_2'3' + 2 Im(conj(w3) xi_13_2'3')",
                 lambda c: c.v("l1") * c.xi(2, 3, 5, 6)
                 + 2 * c.im(c.cj(c.v("w3")) * c.xi(1, 3, 5, 6)),
                 lambda c: 4 * c.v("l1") ** 2),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lcskt", "N51-147-a", "J1", "twisted", "residual_nonzero",
        sym_cpx=("z", "nu"), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("l1 xi_23_2'3' + 2 Im(conj(w3) xi_13_2'3')",
                 lambda c: c.v("l1") * c.xi(2, 3, 5, 6)
                 + 2 * c.im(c.cj(c.v("w3")) * c.xi(1, 3, 5, 6)),
                 lambda c: 4 * (1 + c.norm_sq(c.p("z"))) * c.v("l1") ** 2),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lcskt", "N51-147-b", "J2", "twisted", "residual_nonzero",
        sym_cpx=("z",), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_123_3'", lambda c: c.xi(1, 2, 3, 6),
                 lambda c: c.v("l1") * c.v("zeta"),
                 after=lambda c: c.set_zero("zeta")),
            Step("xi_13_2'3'", lambda c: c.xi(1, 3, 5, 6),
                 lambda c: 4 * c.v("l1") * c.cj(c.p("z")) + 8 * I * c.v("w3"),
                 after=lambda c: c.set(
                     "w3", I * GaussianRational("1/2") * c.v("l1") * c.cj(c.p("z")))),
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: 2 * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lcskt", "N51-147-c", "J3", "twisted", "residual_nonzero",
        sym_real=("x",), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_123_3'", lambda c: c.xi(1, 2, 3, 6),
                 lambda c: c.v("l1") * c.v("zeta"),
                 after=lambda c: c.set_zero("zeta")),
            Step("xi_23_2'3' - x Re(xi_13_2'3')",
                 lambda c: c.xi(2, 3, 5, 6) - c.p("x") * c.re(c.xi(1, 3, 5, 6)),
                 lambda c: 2 * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.152", "lcskt", "N52-152-a", "J1", "twisted", "residual_nonzero",
        signs=("delta",), sym_cpx=("z1", "z2"),
        mu_real=("y",), mu=_mu_re2_minus_re3("z2"),
        steps=(
            Step("xi_123_2'", lambda c: c.xi(1, 2, 3, 5),
                 lambda c: -(c.p("delta") * c.v("l1") * c.v("y")),
                 after=lambda c: c.set_zero("y")),
            Step("xi_12_2'3'", lambda c: c.xi(1, 2, 5, 6),
                 lambda c: 4 * c.v("l1") * c.cj(c.p("z1"))
                 - 8 * I * c.re(c.p("z2")) * c.v("w3") - 8 * I * c.v("w2"),
                 after=lambda c: c.set(
                     "w2",
                     -(I * GaussianRational("1/2") * c.v("l1") * c.cj(c.p("z1")))
                     - c.re(c.p("z2")) * c.v("w3"))),
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: 2 * c.v("l1")),
        )))

    def _152b_samples():
        out = []
        for z1, z2, delta in (
            (GaussianRational(F(1), F(1)), GaussianRational(F(1, 2), F(2)), 1),
            (GaussianRational(F(-1, 3), F(2)), GaussianRational(F(0), F(1)), -1),
            (GaussianRational(F(2), F(0)), GaussianRational(F(3), F(-1)), 1),
        ):
            out.append({"z1": z1, "z2": z2, "delta": delta})
        return tuple(out)

    def _152b_y_coeff(c):
        z1 = GaussianRational.coerce(c.p("z1"))
        z2 = GaussianRational.coerce(c.p("z2"))
        d = GaussianRational.coerce(c.p("delta"))
        rez2, imz2 = GaussianRational(z2.re), GaussianRational(z2.im)
        factor = (z1 * z1.conj() - d * rez2 * imz2) * (imz2 ** 2).inverse()
        return factor * c.v("l1") * c.v("y")

    def _152b_final(c):
        z1, z2, d = c.p("z1"), c.p("z2"), c.p("delta")
        rez2 = GaussianRational(z2.re)
        imz2 = GaussianRational(z2.im)
        nz1 = z1 * z1.conj()
        num = (d * rez2 * imz2 - nz1) ** 2 + imz2 ** 2 * (1 + imz2 ** 2)
        return c.v("l1") * (num * (imz2 ** 4).inverse())

    rows.append(ObstructionRow(
        "s6.152", "lcskt", "N52-152-b", "J2", "twisted", "residual_nonzero",
        samples=_152b_samples(),
        mu_real=("y",), mu=_mu_re2_minus_re3("z1"),
        note="the y-coefficient is l1 (|z1|^2 - delta Re(z2) Im(z2)) "
             "/ Im(z2)^2; the samples keep that factor nonzero",
        steps=(
            Step("Im(xi_12_2'3')", lambda c: c.im(c.xi(1, 2, 5, 6)),
                 _152b_y_coeff,
                 after=lambda c: c.set_zero("y")),
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6), _152b_final),
        )))

    rows.append(ObstructionRow(
        "s6.159", "lcskt", "HT-s6.159", "", "twisted", "residual_nonzero",
        signs=("delta", "eps"), mu_real=("y",), mu_cpx=("zeta",), mu=_mu_re1_z3,
        steps=(
            Step("xi_12_1'2'", lambda c: c.xi(1, 2, 4, 5),
                 lambda c: 2 * c.p("delta") * c.v("l1") * c.v("y"),
                 after=lambda c: c.set_zero("y")),
            Step("xi_12_2'3'", lambda c: c.xi(1, 2, 5, 6),
                 lambda c: -(I * c.p("delta") * c.v("l1") * c.cj(c.v("zeta"))),
                 after=lambda c: c.set_zero("zeta")),
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: -4 * c.p("delta") * c.p("eps") * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.162^1", "lcskt", "HT-s6.162^1", "", "twisted", "residual_nonzero",
        mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: 4 * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.165^p", "lcskt", "HT-s6.165", "", "twisted", "residual_nonzero",
        sym_real=("p",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: 4 * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.166^p", "lcskt", "HT-s6.166", "", "twisted", "residual_nonzero",
        signs=("delta", "eps"), sym_real=("p",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: -4 * c.p("eps") * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s6.167", "lcskt", "HT-s6.167", "", "twisted", "residual_nonzero",
        signs=("eps",), sym_real=("x",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_23_2'3'", lambda c: c.xi(2, 3, 5, 6),
                 lambda c: 4 * c.v("l1")),
        )))

    rows.append(ObstructionRow(
        "s4.7+R2", "lcskt", "HT-s4.7+R2", "", "twisted", "mu_forced_zero",
        signs=("eps",), mu_real=("y",), mu_cpx=("zeta",), mu=_mu_re1_z3,
        steps=(
            Step("xi_12_1'2'", lambda c: c.xi(1, 2, 4, 5),
                 lambda c: 2 * c.p("eps") * c.v("y") * c.v("l1"),
                 after=lambda c: c.set_zero("y")),
            Step("xi_23_1'2'", lambda c: c.xi(2, 3, 4, 5),
                 lambda c: I * c.p("eps") * c.v("zeta") * c.v("l1"),
                 after=lambda c: c.set_zero("zeta")),
        )))

    rows.append(ObstructionRow(
        "s6.52^0,q", "lcskt", "HT-s6.52", "", "twisted", "mu_forced_zero",
        signs=("delta", "eps"), sym_real=("q",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_12_1'2'", lambda c: c.xi(1, 2, 4, 5),
                 lambda c: 2 * c.p("delta") * c.v("y") * c.v("l1"),
                 after=lambda c: c.set_zero("y")),
        )))

    return rows


# ---------------------------------------------------------------------------
# row definitions: LCK


def _rows_lck() -> list:
    rows = []

    rows.append(ObstructionRow(
        "h3+s3.3^0", "lck", "HT-h3+s3.3^0", "", "lck", "residual_nonzero",
        signs=("eps",), mu_real=("y",), mu_cpx=("zeta",), mu=_mu_re1_z3,
        note="rules out Kahler as well (mu = 0 is covered by the same steps)",
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: c.v("y") * c.v("l2"),
                 after=lambda c: c.set_zero("y")),
            Step("xi_23_2'", lambda c: c.xi(2, 3, 5),
                 lambda c: I * c.v("zeta") * c.v("l2"),
                 after=lambda c: c.set_zero("zeta")),
            Step("xi_13_3'", lambda c: c.xi(1, 3, 6),
                 lambda c: c.p("eps") * c.v("l1")),
        )))

    def _47_samples():
        vals = []
        for l1, l2, l3 in ((F(1), F(1), F(2)), (F(2), F(3), F(5)), (F(1, 2), F(4), F(3))):
            for w2 in (GaussianRational(F(0)), GaussianRational(F(1), F(1))):
                vals.append({"l1s": l1, "l2s": l2, "l3s": l3, "w2s": w2})
        return tuple(vals)

    rows.append(ObstructionRow(
        "s4.7+R2", "lck", "HT-s4.7+R2", "", "lck", "residual_nonzero",
        signs=("eps",), samples=_47_samples(),
        mu_real=("y",), mu_cpx=("zeta",), mu=_mu_re1_z3,
        note="metric entries sampled exactly: the forced y, zeta involve 1/l2",
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: c.p("eps") * c.v("l1") + c.v("y") * c.v("l2"),
                 after=lambda c: _47_force(c)),
            Step("xi_13_3'", lambda c: _47_substituted_final(c),
                 lambda c: GR_ZERO),
        )))

    rows.append(ObstructionRow(
        "s6.44", "lck", "HT-s6.44", "", "lck", "mu_forced_zero",
        signs=("eps",), mu_real=("y",), mu=_mu_re1,
        note="mu = 0 would make the metric Kahler, impossible (not even LCSKT)",
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: c.v("y") * c.v("l2"),
                 after=lambda c: c.set_zero("y")),
        )))

    rows.append(ObstructionRow(
        "s6.52^0,q", "lck", "HT-s6.52", "", "lck", "mu_forced_zero",
        signs=("delta", "eps"), sym_real=("q",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_13_3'", lambda c: c.xi(1, 3, 6),
                 lambda c: c.v("y") * c.v("l3"),
                 after=lambda c: c.set_zero("y")),
        )))

    rows.append(ObstructionRow(
        "s6.145^0", "lck", "N51-145", "", "lck", "mu_forced_zero",
        sym_cpx=("nu",),
        samples=({"c": 1}, {"c": GaussianRational(F(3, 5), F(4, 5))}),
        mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_13_1'", lambda c: c.xi(1, 3, 4),
                 lambda c: I * c.v("zeta") * c.v("l1"),
                 after=lambda c: c.set_zero("zeta")),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lck", "N51-147-a", "J1", "lck", "mu_forced_zero",
        sym_cpx=("z", "nu"), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_13_1'", lambda c: c.xi(1, 3, 4),
                 lambda c: I * c.v("zeta") * c.v("l1"),
                 after=lambda c: c.set_zero("zeta")),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lck", "N51-147-b", "J2", "lck", "residual_nonzero",
        sym_cpx=("z",), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_12_3'", lambda c: c.xi(1, 2, 6),
                 lambda c: -(I * c.v("l1"))),
        )))

    rows.append(ObstructionRow(
        "s6.147^0", "lck", "N51-147-c", "J3", "lck", "residual_nonzero",
        sym_real=("x",), mu_cpx=("zeta",), mu=_mu_z3,
        steps=(
            Step("xi_12_3'", lambda c: c.xi(1, 2, 6),
                 lambda c: -(I * c.v("l1"))),
        )))

    rows.append(ObstructionRow(
        "s6.152", "lck", "N52-152-a", "J1", "lck", "mu_forced_zero",
        signs=("delta",), sym_cpx=("z1", "z2"),
        mu_real=("y",), mu=_mu_re2_minus_re3("z2"),
        steps=(
            Step("xi_12_1'", lambda c: c.xi(1, 2, 4),
                 lambda c: -(c.v("y") * c.v("l1")),
                 after=lambda c: c.set_zero("y")),
        )))

    rows.append(ObstructionRow(
        "s6.152", "lck", "N52-152-b", "J2", "lck", "mu_forced_zero",
        samples=(
            {"z1": GaussianRational(F(1), F(1)), "z2": GaussianRational(F(1, 2), F(2)), "delta": 1},
            {"z1": GaussianRational(F(-1, 3), F(2)), "z2": GaussianRational(F(0), F(1)), "delta": -1},
        ),
        mu_real=("y",), mu=_mu_re2_minus_re3("z1"),
        steps=(
            Step("xi_12_1'", lambda c: c.xi(1, 2, 4),
                 lambda c: -(c.v("y") * c.v("l1")),
                 after=lambda c: c.set_zero("y")),
        )))

    rows.append(ObstructionRow(
        "s6.154^0", "lck", "N52-154", "", "lck", "mu_forced_zero",
        samples=(
            {"z": GaussianRational(F(1), F(1)), "x": F(2), "y": F(1)},
            {"z": GaussianRational(F(0), F(-1)), "x": F(1, 2), "y": F(-3)},
        ),
        mu_real=("y",), mu=_mu_re2_minus_re3("z"),
        steps=(
            Step("xi_12_1'", lambda c: c.xi(1, 2, 4),
                 lambda c: -(c.v("y") * c.v("l1")),
                 after=lambda c: c.set_zero("y")),
        )))

    rows.append(ObstructionRow(
        "s6.162^1", "lck", "HT-s6.162^1", "", "lck", "residual_nonzero",
        mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: (c.v("y") - 2) * c.v("l2"),
                 after=lambda c: c.set("y", 2)),
            Step("xi_13_3'", lambda c: c.xi(1, 3, 6),
                 lambda c: 4 * c.v("l3")),
        )))

    rows.append(ObstructionRow(
        "s6.165^p", "lck", "HT-s6.165", "", "lck", "residual_nonzero",
        sym_real=("p",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: (c.v("y") - 2 * c.p("p")) * c.v("l2"),
                 after=lambda c: c.set("y", 2 * c.p("p"))),
            Step("xi_13_3'", lambda c: c.xi(1, 3, 6),
                 lambda c: 4 * c.p("p") * c.v("l3")),
        )))

    rows.append(ObstructionRow(
        "s6.167", "lck", "HT-s6.167", "", "lck", "mu_forced_zero",
        signs=("eps",), sym_real=("x",), mu_real=("y",), mu=_mu_re1,
        steps=(
            Step("xi_12_2'", lambda c: c.xi(1, 2, 5),
                 lambda c: c.v("y") * c.v("l2"),
                 after=lambda c: c.set_zero("y")),
        )))

    return rows


def _47_force(c: ReplayContext):
    """y = -eps l1 / l2 and zeta = eps w2~ / l2 at the sampled metric."""
    l2 = c.p("l2s")
    eps = GaussianRational.coerce(c.p("eps"))
    inv = GaussianRational.coerce(l2).inverse()
    _bind_metric_sample(c)
    c.set("y", -(eps * GaussianRational.coerce(c.p("l1s")) * inv))
    c.set("zeta", eps * inv * conj_scalar(GaussianRational.coerce(c.p("w2s"))))


def _bind_metric_sample(c: ReplayContext):
    for var, key in (("l1", "l1s"), ("l2", "l2s"), ("l3", "l3s"), ("w2", "w2s")):
        c.set(var, GaussianRational.coerce(c.p(key)))


def _47_substituted_final(c: ReplayContext):
    """xi_13_3' + (eps / l2)(l1 l3 - |w2|^2) at the sampled metric."""
    eps = GaussianRational.coerce(c.p("eps"))
    l1 = GaussianRational.coerce(c.p("l1s"))
    l2 = GaussianRational.coerce(c.p("l2s"))
    l3 = GaussianRational.coerce(c.p("l3s"))
    w2 = GaussianRational.coerce(c.p("w2s"))
    claimed = -(eps * l2.inverse() * (l1 * l3 - w2 * w2.conj()))
    return c.xi(1, 3, 6) - claimed


# ---------------------------------------------------------------------------
# row definitions: strongly Gauduchon


def _rows_strg() -> list:
    rows = []

    def simple(algebra, family, branch, signs, sym_real, sym_cpx, samples, combo, expected):
        return ObstructionRow(
            algebra, "strongly_gauduchon", family, branch, "strg",
            "residual_nonzero", signs=signs, sym_real=sym_real,
            sym_cpx=sym_cpx, samples=samples,
            mu_real=("b1", "b2", "b3"),
            steps=(Step("xi_123 combo", combo, expected),))

    rows.append(simple(
        "h3+s3.3^0", "HT-h3+s3.3^0", "", ("eps",), (), (), (),
        lambda c: c.xi(1, 2, 3, 5, 6),
        lambda c: -2 * I * c.p("eps") * (c.v("l1") * c.v("l2") - c.norm_sq(c.v("w3")))))

    rows.append(simple(
        "s4.7+R2", "HT-s4.7+R2", "", ("eps",), (), (), (),
        lambda c: c.xi(1, 2, 3, 5, 6),
        lambda c: -2 * I * c.p("eps") * (c.v("l1") * c.v("l3") - c.norm_sq(c.v("w2")))))

    rows.append(simple(
        "s6.44", "HT-s6.44", "", ("eps",), (), (), (),
        lambda c: c.xi(1, 2, 3, 5, 6),
        lambda c: -2 * I * c.p("eps") * (c.v("l1") * c.v("l2") - c.norm_sq(c.v("w3")))))

    rows.append(simple(
        "s6.52^0,q", "HT-s6.52", "", ("delta", "eps"), ("q",), (), (),
        lambda c: c.xi(1, 2, 3, 5, 6),
        lambda c: -2 * I * c.p("delta") * (c.v("l1") * c.v("l3") - c.norm_sq(c.v("w2")))))

    rows.append(simple(
        "s6.152", "N52-152-a", "J1", ("delta",), (), ("z1", "z2"), (),
        lambda c: c.re(c.p("z2")) * c.xi(1, 2, 3, 4, 5) + c.xi(1, 2, 3, 4, 6),
        lambda c: -(I * c.p("delta")) * (c.v("l1") * c.v("l2") - c.norm_sq(c.v("w3")))))

    def _152b_expected(c):
        d = c.p("delta")
        imz2 = GaussianRational(GaussianRational.coerce(c.p("z2")).im)
        return I * d * imz2 * (c.v("l1") * c.v("l2") - c.norm_sq(c.v("w3")))

    rows.append(simple(
        "s6.152", "N52-152-b", "J2", (), (), (),
        ({"z1": GaussianRational(F(1), F(1)), "z2": GaussianRational(F(1, 2), F(2)), "delta": 1},
         {"z1": GaussianRational(F(-1, 3), F(2)), "z2": GaussianRational(F(0), F(1)), "delta": -1}),
        lambda c: c.re(GaussianRational.coerce(c.p("z1"))) * c.xi(1, 2, 3, 4, 5)
        + c.xi(1, 2, 3, 4, 6),
        _152b_expected))

    def _154_expected(c):
        x = GaussianRational.coerce(F(1) * c.p("x"))
        return I * x * (c.v("l1") * c.v("l2") - c.norm_sq(c.v("w3")))

    rows.append(simple(
        "s6.154^0", "N52-154", "", (), (), (),
        ({"z": GaussianRational(F(1), F(1)), "x": F(2), "y": F(1)},
         {"z": GaussianRational(F(0), F(-1)), "x": F(1, 2), "y": F(-3)}),
        lambda c: c.re(GaussianRational.coerce(c.p("z"))) * c.xi(1, 2, 3, 4, 5)
        + c.xi(1, 2, 3, 4, 6),
        _154_expected))

    return rows


# ---------------------------------------------------------------------------
# row definitions: first Gauduchon


def _rows_firstg() -> list:
    rows = []

    def fg(algebra, family, branch, expected, signs=(), sym_real=(), sym_cpx=(),
           samples=(), note=""):
        return ObstructionRow(
            algebra, "first_gauduchon", family, branch, "firstg",
            "residual_nonzero", signs=signs, sym_real=sym_real,
            sym_cpx=sym_cpx, samples=samples, note=note,
            steps=(Step("del dbar omega ^ omega", lambda c: c.value(), expected),))

    rows.append(fg(
        "s6.145^0", "N51-145", "",
        lambda c: -2 * c.v("l1") ** 2,
        sym_cpx=("nu",),
        samples=({"c": 1}, {"c": GaussianRational(F(3, 5), F(4, 5))})))

    rows.append(fg(
        "s6.147^0", "N51-147-a", "J1",
        lambda c: -2 * (1 + c.norm_sq(c.p("z"))) * c.v("l1") ** 2,
        sym_cpx=("z", "nu")))

    rows.append(fg(
        "s6.147^0", "N51-147-b", "J2",
        lambda c: -2 * (c.v("l1") * c.re(c.p("z")) - 2 * c.im(c.v("w3"))) ** 2
        - 2 * (c.v("l1") * c.im(c.p("z")) - 2 * c.re(c.v("w3"))) ** 2
        - c.v("l1") ** 2,
        sym_cpx=("z",)))

    rows.append(fg(
        "s6.147^0", "N51-147-c", "J3",
        lambda c: -2 * (c.p("x") * c.v("l1") - 2 * c.im(c.v("w3"))) ** 2
        - 8 * c.re(c.v("w3")) ** 2 - c.v("l1") ** 2,
        sym_real=("x",)))

    rows.append(fg(
        "s6.152", "N52-152-a", "J1",
        lambda c: -2 * (c.v("l1") * c.re(c.p("z1"))
                        + 2 * c.im(c.v("w3")) * c.re(c.p("z2"))
                        + 2 * c.im(c.v("w2"))) ** 2
        - 2 * (c.v("l1") * c.im(c.p("z1"))
               + 2 * c.re(c.v("w3")) * c.re(c.p("z2"))
               + 2 * c.re(c.v("w2"))) ** 2
        - c.v("l1") ** 2,
        signs=("delta",), sym_cpx=("z1", "z2")))

    def _152b_fg(c):
        z1 = GaussianRational.coerce(c.p("z1"))
        z2 = GaussianRational.coerce(c.p("z2"))
        d = GaussianRational.coerce(c.p("delta"))
        rez2, imz2 = GaussianRational(z2.re), GaussianRational(z2.im)
        nz1 = z1 * z1.conj()
        num = (d * rez2 * imz2 - nz1) ** 2 + imz2 ** 2 * (1 + imz2 ** 2)
        return -(c.v("l1") ** 2) * (num * (2 * imz2 ** 4).inverse())

    rows.append(fg(
        "s6.152", "N52-152-b", "J2", _152b_fg,
        samples=(
            {"z1": GaussianRational(F(1), F(1)), "z2": GaussianRational(F(1, 2), F(2)), "delta": 1},
            {"z1": GaussianRational(F(-1, 3), F(2)), "z2": GaussianRational(F(0), F(1)), "delta": -1},
            {"z1": GaussianRational(F(2), F(0)), "z2": GaussianRational(F(3), F(-1)), "delta": 1},
        )))

    def _154_fg(c):
        z = GaussianRational.coerce(c.p("z"))
        x = GaussianRational.coerce(F(1) * c.p("x"))
        y = GaussianRational.coerce(F(1) * c.p("y"))
        nz = z * z.conj()
        num = (x * y - nz) ** 2 + x ** 2
        return -(c.v("l1") ** 2) * (num * (2 * x ** 4).inverse())

    rows.append(fg(
        "s6.154^0", "N52-154", "", _154_fg,
        samples=(
            {"z": GaussianRational(F(1), F(1)), "x": F(2), "y": F(1)},
            {"z": GaussianRational(F(0), F(-1)), "x": F(1, 2), "y": F(-3)},
            {"z": GaussianRational(F(3, 2), F(1)), "x": F(-1), "y": F(2)},
        )))

    rows.append(fg(
        "s6.17^1,q,q,-2(1+q)", "AA-s6.17", "q=1",
        lambda c: 8 * (c.v("l2") * c.v("l3") - c.norm_sq(c.v("w1"))),
        sym_cpx=("z1", "z2"), samples=({"q": F(1)},),
        note="derived here: strictly positive on the positivity cone, so no "
             "1st-Gauduchon structure exists at q=1 (generic coefficient is "
             "8 q l2 l3 - 2 (1+q)^2 |w1|^2, solvable with positivity iff "
             "0 < q < 1)"))

    return rows


# ---------------------------------------------------------------------------
# row definitions: tamed


def _rows_tamed() -> list:
    return [ObstructionRow(
        "h3+s3.3^0", "tamed", "HT-h3+s3.3^0", "", "tamed", "residual_nonzero",
        signs=("eps",), mu_cpx=("b1", "b2"),
        note="residual evaluated on (Z1, Z3, Z3'); independent of the "
             "del-closed (2,0) potential",
        steps=(
            Step("coeff a^{13 3'}", lambda c: c.xi(1, 3, 6),
                 lambda c: c.p("eps") * c.v("l1")),
        ))]


# ---------------------------------------------------------------------------
# Nijenhuis chains: non-existence of complex structures (generic J)


@dataclass(frozen=True)
class NStep:
    """One staged assertion on the generic-J elimination: with the branch
    substitutions installed so far, the quantity named by ``target`` equals
    ``expected``.  ``target`` is ("N", i, j, k) for the f_k-component of
    N(f_i, f_j), ("J2", i, j) for an entry of J^2, or ("N-J2", i, j, k, a, b)
    for their difference.  ``subs`` (installed after the check) records the
    variable values forced by setting the quantity to zero (to -1 for pure
    J^2 diagonal targets)."""
    label: str
    target: tuple
    expected: Callable
    subs: tuple = ()       # tuple of (name, value-or-callable)


@dataclass(frozen=True)
class NBranch:
    """A case of the elimination: ``assume`` names the entries already known
    to vanish when the branch is entered; ``pivots`` (optional) carries exact
    rational values for a pivot variable that appears in denominators."""
    label: str
    assume: tuple = ()     # variable names set to zero on entry
    steps: tuple = ()
    pivots: tuple = ()     # tuple of dicts name -> exact value


def _replay_nijenhuis(row: ObstructionRow) -> dict:
    runs = 0
    for sample in row.samples:
        eqs = sample["_eqs"]
        consts = {k: GaussianRational.coerce(v)
                  for k, v in sample.items() if not k.startswith("_")}
        g = parse_structure_equations(eqs, name=row.algebra)
        ring, J = generic_j_ring(6)
        nj = nijenhuis(g, J)
        J2 = [[sum((J[i][t] * J[t][j] for t in range(6)), ring.zero())
               for j in range(6)] for i in range(6)]

        def target_value(t, subs):
            if t[0] == "N":
                v = ring.coerce(nj[(t[1], t[2])][t[3] - 1])
            elif t[0] == "J2":
                v = J2[t[1] - 1][t[2] - 1]
            else:  # ("N-J2", i, j, k, a, b)
                v = (ring.coerce(nj[(t[1], t[2])][t[3] - 1])
                     - J2[t[4] - 1][t[5] - 1])
            return v.substitute(subs) if subs else v

        for branch in row.steps:
            for pivot in (branch.pivots or ({},)):
                V = {f"J{i}{j}": ring.var(f"J{i}{j}")
                     for i in range(1, 7) for j in range(1, 7)}
                V.update(consts)
                subs = {}
                for name in branch.assume:
                    subs[name] = ring.zero()
                for name, val in pivot.items():
                    val = GaussianRational.coerce(val)
                    V[name] = val
                    subs[name] = ring.constant(val)
                for st in branch.steps:
                    got = target_value(st.target, subs)
                    want = ring.coerce(st.expected(V))
                    if subs:
                        want = want.substitute(subs)
                    if got != want:
                        raise AssertionError(
                            f"{row.algebra} branch {branch.label!r} step "
                            f"{st.label!r} at {sample}: got {got}, "
                            f"expected {want}")
                    for name, val in st.subs:
                        val = ring.coerce(val(V) if callable(val) else val)
                        if subs:
                            val = val.substitute(subs)
                        # keep the substitution map idempotent: fold the new
                        # value into every previously installed one
                        for k in subs:
                            subs[k] = subs[k].substitute({name: val})
                        subs[name] = val
            runs += 1
    return {
        "algebra": row.algebra,
        "condition": row.condition,
        "branch": row.branch,
        "conclusion": row.conclusion,
        "runs": runs,
        "steps": [b.label for b in row.steps],
        "ok": True,
    }


def _rows_nijenhuis() -> list:
    """Staged generic-J eliminations proving that the four algebras kept as
    negative controls in the catalog admit no complex structure.  Each row
    merges two algebras via a coefficient eps in {0, 1}; the structure
    equations (with eps resolved) travel in the samples under the key
    ``_eqs``.  Every branch ends in a sign contradiction with J^2 = -Id,
    recorded in the step labels; division-bearing branches are replayed at
    exact rational pivot values."""
    rows = []

    N = lambda label, i, j, k, expected, *subs: NStep(
        label, ("N", i, j, k), expected, tuple(subs))
    Q = lambda label, i, j, expected, *subs: NStep(
        label, ("J2", i, j), expected, tuple(subs))

    # ---- merged family with nilradical n5.1 -------------------------------
    # eps = 0 and eps = 1 give the two algebras named in row.algebra.
    f1 = (
        NBranch(
            "J62 nonzero",
            steps=(
                N("f6(N(f2,f4))", 2, 4, 6,
                  lambda V: V["J62"] * (V["J52"] - V["eps"] * V["J62"]),
                  ("J52", lambda V: V["eps"] * V["J62"])),
                N("f4(N(f1,f2))", 1, 2, 4,
                  lambda V: -2 * V["J41"] * V["J62"]),
                N("f6(N(f1,f2))", 1, 2, 6,
                  lambda V: -2 * V["J61"] * V["J62"],
                  ("J41", 0), ("J61", 0)),
                N("f5(N(f1,f2))", 1, 2, 5,
                  lambda V: -(V["J51"] * V["J62"]),
                  ("J51", 0)),
                N("f3(N(f1,f5))", 1, 5, 3,
                  lambda V: -(V["J31"] ** 2),
                  ("J31", 0)),
                N("f6(N(f1,f6))", 1, 6, 6,
                  lambda V: V["J21"] * V["J62"],
                  ("J21", 0)),
                Q("(J^2)_11 = J11^2 >= 0, contradiction", 1, 1,
                  lambda V: V["J11"] ** 2),
            )),
        NBranch(
            "J61 nonzero", assume=("J62",),
            steps=(
                N("f3(N(f1,f2))", 1, 2, 3,
                  lambda V: -2 * V["J32"] * V["J61"],
                  ("J32", 0)),
                N("f4(N(f2,f5))", 2, 5, 4,
                  lambda V: -(V["J42"] ** 2),
                  ("J42", 0)),
                N("f6(N(f2,f6))", 2, 6, 6,
                  lambda V: -(V["J12"] * V["J61"]),
                  ("J12", 0)),
                N("f6(N(f2,f3))", 2, 3, 6,
                  lambda V: V["J52"] * V["J61"],
                  ("J52", 0)),
                Q("(J^2)_22 = J22^2 >= 0, contradiction", 2, 2,
                  lambda V: V["J22"] ** 2),
            )),
        NBranch(
            "J51 nonzero", assume=("J61", "J62"),
            steps=(
                N("f3(N(f1,f3))", 1, 3, 3,
                  lambda V: V["J31"] * V["J51"],
                  ("J31", 0)),
                N("f1(N(f1,f2))", 1, 2, 1,
                  lambda V: -(V["J51"] * V["J32"])),
                N("f1(N(f1,f3))", 1, 3, 1,
                  lambda V: V["J51"] * (V["J11"] - V["J33"])),
                N("f5(N(f1,f3))", 1, 3, 5,
                  lambda V: V["J51"] * (V["J51"] - V["J63"]),
                  ("J32", 0), ("J33", lambda V: V["J11"]),
                  ("J63", lambda V: V["J51"])),
                N("f4(N(f2,f5))", 2, 5, 4,
                  lambda V: -(V["J42"] ** 2)),
                N("f4(N(f1,f3))", 1, 3, 4,
                  lambda V: -(V["J41"] * V["J51"]),
                  ("J41", 0), ("J42", 0)),
                N("f1(N(f1,f5))", 1, 5, 1,
                  lambda V: -(V["J35"] * V["J51"])),
                N("f2(N(f1,f5))", 1, 5, 2,
                  lambda V: -(2 * V["J21"] * V["J65"] + V["J45"] * V["J51"])),
                N("f5(N(f1,f5))", 1, 5, 5,
                  lambda V: -(V["J65"] * V["J51"]),
                  ("J35", 0), ("J45", 0), ("J65", 0)),
                N("f1(N(f2,f3))", 2, 3, 1,
                  lambda V: 2 * V["J51"] * V["J12"],
                  ("J12", 0)),
                N("f5(N(f2,f3))", 2, 3, 5,
                  lambda V: 2 * V["J52"] * V["J51"],
                  ("J52", 0)),
                Q("(J^2)_11 contradiction", 1, 1,
                  lambda V: V["J11"] ** 2 + V["J15"] * V["J51"]),
            )),
        NBranch(
            "J52 nonzero", assume=("J51", "J61", "J62"),
            steps=(
                N("f1(N(f1,f2))", 1, 2, 1,
                  lambda V: V["J31"] * V["J52"]),
                N("f2(N(f1,f2))", 1, 2, 2,
                  lambda V: V["J41"] * V["J52"],
                  ("J31", 0), ("J41", 0)),
                N("f5(N(f1,f6))", 1, 6, 5,
                  lambda V: V["J52"] * V["J21"],
                  ("J21", 0)),
                Q("(J^2)_11 = J11^2 >= 0, contradiction", 1, 1,
                  lambda V: V["J11"] ** 2),
            )),
        NBranch(
            "J41 nonzero (rational pivot)",
            assume=("J51", "J52", "J61", "J62"),
            pivots=({"J41": F(1)}, {"J41": F(-2)}, {"J41": F(1, 3)}),
            steps=(
                N("f4(N(f1,f3))", 1, 3, 4,
                  lambda V: -2 * V["J41"] * V["J63"],
                  ("J63", 0)),
                N("f2(N(f1,f3))", 1, 3, 2,
                  lambda V: V["J41"] * V["J53"],
                  ("J53", 0)),
                N("f5(N(f1,f6))", 1, 6, 5,
                  lambda V: V["J54"] * V["J41"]),
                N("f4(N(f1,f4))", 1, 4, 4,
                  lambda V: -2 * V["J64"] * V["J41"]),
                N("f3(N(f1,f5))", 1, 5, 3,
                  lambda V: -(V["J31"] ** 2) - V["J32"] * V["J41"]),
                N("f4(N(f1,f5))", 1, 5, 4,
                  lambda V: -(V["J41"]
                              * (V["J31"] + V["J42"] + 2 * V["J65"])),
                  ("J54", 0), ("J64", 0),
                  ("J32", lambda V: -(V["J31"] ** 2) * _inv_gr(V["J41"])),
                  ("J42", lambda V: -V["J31"] - 2 * V["J65"])),
                N("f3(N(f2,f5))", 2, 5, 3,
                  lambda V: -4 * V["J31"] ** 2 * V["J65"] * _inv_gr(V["J41"]),
                  ("J31", 0)),
                N("f4(N(f2,f5)) = -4 J65^2, but (J^2)_55 < 0 needs J65 != 0",
                  2, 5, 4, lambda V: -4 * V["J65"] ** 2),
            )),
        NBranch(
            "all pivots zero",
            assume=("J41", "J51", "J52", "J61", "J62"),
            steps=(
                N("f3(N(f1,f5))", 1, 5, 3,
                  lambda V: -(V["J31"] ** 2),
                  ("J31", 0)),
                N("f4(N(f2,f5))", 2, 5, 4,
                  lambda V: -(V["J42"] ** 2),
                  ("J42", 0)),
                NStep("f1(N(f1,f6)) - (J^2)_11 = -2 J11^2 - 1, but N = 0 "
                      "and J^2 = -Id force the value 1",
                      ("N-J2", 1, 6, 1, 1, 1),
                      lambda V: -2 * V["J11"] ** 2 - 1),
            )),
    )

    rows.append(ObstructionRow(
        "s6.140^-1|s6.146^-1", "complex", "", "merged", "nijenhuis",
        "no_solution",
        samples=(
            {"_eqs": "(f35+f16, f45-f26, f36, -f46, 0, 0)", "eps": 0},
            {"_eqs": "(f35+f16+f36, f45-f26-f46, f36, -f46, 0, 0)", "eps": 1},
        ),
        steps=f1))

    # ---- merged family with nilradical n5.2 -------------------------------
    f2 = (
        NBranch(
            "J61 nonzero",
            steps=(
                N("f5(N(f1,f2))", 1, 2, 5,
                  lambda V: -2 * V["J52"] * V["J61"]),
                N("f6(N(f1,f2))", 1, 2, 6,
                  lambda V: -2 * V["J62"] * V["J61"],
                  ("J52", 0), ("J62", 0)),
                N("f4(N(f2,f3))", 2, 3, 4,
                  lambda V: V["J42"] ** 2,
                  ("J42", 0)),
                N("f3(N(f1,f2))", 1, 2, 3,
                  lambda V: -(V["J32"] * V["J61"])),
                N("f6(N(f2,f6))", 2, 6, 6,
                  lambda V: -(V["J12"] * V["J61"]),
                  ("J12", 0), ("J32", 0)),
                Q("(J^2)_22 = J22^2 >= 0, contradiction", 2, 2,
                  lambda V: V["J22"] ** 2),
            )),
        NBranch(
            "J62 nonzero", assume=("J61",),
            steps=(
                N("f4(N(f1,f2))", 1, 2, 4,
                  lambda V: -2 * V["J41"] * V["J62"],
                  ("J41", 0)),
                N("f5(N(f1,f3))", 1, 3, 5,
                  lambda V: V["J51"] ** 2,
                  ("J51", 0)),
                N("f3(N(f1,f2))", 1, 2, 3,
                  lambda V: -(V["J31"] * V["J62"])),
                N("f6(N(f1,f6))", 1, 6, 6,
                  lambda V: V["J21"] * V["J62"],
                  ("J21", 0), ("J31", 0)),
                Q("(J^2)_11 = J11^2 >= 0, contradiction", 1, 1,
                  lambda V: V["J11"] ** 2),
            )),
        NBranch(
            "J63 nonzero", assume=("J61", "J62"),
            steps=(
                N("f6(N(f1,f4))", 1, 4, 6,
                  lambda V: V["J51"] * V["J63"]),
                N("f6(N(f1,f5))", 1, 5, 6,
                  lambda V: -(V["J41"] * V["J63"]),
                  ("J41", 0), ("J51", 0)),
                N("f3(N(f1,f3))", 1, 3, 3,
                  lambda V: -(V["J31"] * V["J63"]),
                  ("J31", 0)),
                N("f2(N(f1,f3))", 1, 3, 2,
                  lambda V: -2 * V["J21"] * V["J63"],
                  ("J21", 0)),
                Q("(J^2)_11 = J11^2 >= 0, contradiction", 1, 1,
                  lambda V: V["J11"] ** 2),
            )),
        NBranch(
            "J64 nonzero", assume=("J61", "J62", "J63"),
            steps=(
                N("f6(N(f4,f5))", 4, 5, 6,
                  lambda V: 2 * V["J64"] * V["J65"],
                  ("J65", 0)),
                N("f6(N(f1,f6))", 1, 6, 6,
                  lambda V: V["J41"] * V["J64"]),
                N("f6(N(f2,f6))", 2, 6, 6,
                  lambda V: V["J42"] * V["J64"]),
                N("f6(N(f3,f6))", 3, 6, 6,
                  lambda V: V["J43"] * V["J64"]),
                N("f6(N(f5,f6))", 5, 6, 6,
                  lambda V: V["J45"] * V["J64"],
                  ("J41", 0), ("J42", 0), ("J43", 0), ("J45", 0)),
                N("f5(N(f1,f3))", 1, 3, 5,
                  lambda V: V["J51"] ** 2,
                  ("J51", 0)),
                N("f3(N(f1,f5))", 1, 5, 3,
                  lambda V: -(V["J31"] ** 2),
                  ("J31", 0)),
                N("f2(N(f1,f4))", 1, 4, 2,
                  lambda V: -2 * V["J21"] * V["J64"],
                  ("J21", 0)),
                Q("(J^2)_11 = J11^2 >= 0, contradiction", 1, 1,
                  lambda V: V["J11"] ** 2),
            )),
        NBranch(
            "J65 nonzero (forced by (J^2)_66 = J66^2 + J56 J65 < 0)",
            assume=("J61", "J62", "J63", "J64"),
            steps=(
                Q("(J^2)_61", 6, 1, lambda V: V["J51"] * V["J65"]),
                Q("(J^2)_62", 6, 2, lambda V: V["J52"] * V["J65"]),
                Q("(J^2)_63", 6, 3, lambda V: V["J53"] * V["J65"]),
                Q("(J^2)_64", 6, 4, lambda V: V["J54"] * V["J65"],
                  ("J51", 0), ("J52", 0), ("J53", 0), ("J54", 0)),
                N("f4(N(f2,f3))", 2, 3, 4,
                  lambda V: V["J42"] ** 2),
                N("f3(N(f2,f4))", 2, 4, 3,
                  lambda V: -(V["J32"] ** 2),
                  ("J32", 0), ("J42", 0)),
                N("f1(N(f2,f5))", 2, 5, 1,
                  lambda V: 2 * V["J12"] * V["J65"],
                  ("J12", 0)),
                Q("(J^2)_22 = J22^2 >= 0, contradiction", 2, 2,
                  lambda V: V["J22"] ** 2),
            )),
    )

    rows.append(ObstructionRow(
        "s6.151|s6.155^1", "complex", "", "merged", "nijenhuis",
        "no_solution",
        samples=(
            {"_eqs": "(f35+f16, f34-f26-f46, f45, -f46, f56, 0)", "eps": 1},
            {"_eqs": "(f35+f16, f34-f26, f45, -f46, f56, 0)", "eps": 0},
        ),
        steps=f2))

    return rows


def _inv_gr(x):
    return GaussianRational.coerce(x).inverse()


# ---------------------------------------------------------------------------
# public registry


_ROWS: Optional[list] = None


def obstruction_table(algebra: Optional[str] = None,
                      condition: Optional[str] = None) -> list:
    """All registered obstruction rows, optionally filtered."""
    global _ROWS
    if _ROWS is None:
        _ROWS = (_rows_twisted() + _rows_lck() + _rows_strg()
                 + _rows_firstg() + _rows_tamed() + _rows_nijenhuis())
    out = _ROWS
    if algebra is not None:
        out = [r for r in out if algebra in r.algebra.split("|")]
    if condition is not None:
        cond = {"skt": "lcskt"}.get(condition, condition)
        out = [r for r in out if r.condition == cond]
    return list(out)


def replay_all(algebra: Optional[str] = None,
               condition: Optional[str] = None) -> list:
    return [replay_obstruction_row(r) for r in obstruction_table(algebra, condition)]
