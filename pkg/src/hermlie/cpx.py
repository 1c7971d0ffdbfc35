"""Almost complex structures, integrability, and complex coframes.

Two coordinate worlds coexist here:

* the *real* basis ``f_1..f_6`` (equivalently ``e_1..e_6`` for realified
  families), in which Lie algebras and J matrices live;
* the *complex* coframe basis, a 6-element indexing of
  ``(alpha^1, alpha^2, alpha^3, conj alpha^1, conj alpha^2, conj alpha^3)``
  as indices 1..6.  A monomial's bidegree (p, q) counts indices <= 3 versus
  indices > 3.

:class:`ComplexFrame` carries complex structure equations directly in the
second world -- the coefficients may be exact Gaussian rationals, symbolic
polynomials, or floats -- and provides d, del, dbar.
:class:`Complexification` ties a frame to an actual real Lie algebra with an
integrable J, in either direction (J given on a real algebra, or a family's
complex equations realified through ``alpha^k = e^{2k-1} + i e^{2k}``).
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from . import linalg
from .forms import Form, sort_sign
from .liealg import LieAlgebra, ce_differential
from .scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational, Poly, PolyRing, conj_scalar

HOLO = 3  # indices 1..3 are (1,0), indices 4..6 their conjugates


# ---------------------------------------------------------------------------
# almost complex structures on a real algebra


def apply_matrix(J: Sequence[Sequence], v: Sequence) -> list:
    n = len(v)
    out = []
    for i in range(n):
        acc = GR_ZERO
        for j in range(n):
            if J[i][j] and v[j]:
                acc = acc + J[i][j] * v[j]
        out.append(acc)
    return out


def squares_to_minus_id(J: Sequence[Sequence]) -> bool:
    n = len(J)
    J2 = [apply_matrix(J, [J[i][j] for i in range(n)]) for j in range(n)]
    for j in range(n):
        for i in range(n):
            expect = -GR_ONE if i == j else GR_ZERO
            if GaussianRational.coerce(J2[j][i]) != expect:
                return False
    return True


def j_from_images(images: Mapping[int, Sequence], dim: int = 6) -> list:
    """Build a J matrix from images of basis vectors, closing under J^2 = -Id.

    ``images[j]`` is the component vector of ``J f_j``; for each given image
    that is itself ``c * f_k`` the inverse image ``J f_k = -(1/c) f_j`` is
    filled in automatically.
    """
    cols: dict[int, list] = {}
    for j, img in images.items():
        cols[j] = [GaussianRational.coerce(x) for x in img]
    for j, img in list(cols.items()):
        support = [k for k, x in enumerate(img) if x]
        if len(support) == 1:
            k = support[0] + 1
            if k not in cols:
                inv = img[support[0]].inverse()
                v = [GR_ZERO] * dim
                v[j - 1] = -inv
                cols[k] = v
    if len(cols) != dim:
        raise ValueError("underdetermined J; give images for all basis vectors")
    return [[cols[j + 1][i] for j in range(dim)] for i in range(dim)]


def nijenhuis(g: LieAlgebra, J: Sequence[Sequence]) -> dict:
    """Nijenhuis tensor as {(i, j): component vector of N(f_i, f_j)}, i < j.

    N(X, Y) = [X, Y] + J[JX, Y] + J[X, JY] - [JX, JY]; works for exact,
    symbolic (generic J entries), or float scalars.
    """
    n = g.dim
    basis = [[GR_ONE if t == i else GR_ZERO for t in range(n)] for i in range(n)]
    jb = [apply_matrix(J, e) for e in basis]
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            t1 = g.bracket(jb[i], jb[j])
            t2 = apply_matrix(J, g.bracket(jb[i], basis[j]))
            t3 = apply_matrix(J, g.bracket(basis[i], jb[j]))
            t4 = g.bracket(basis[i], basis[j])
            out[(i + 1, j + 1)] = [t4[k] + t2[k] + t3[k] - t1[k] for k in range(n)]
    return out


def generic_j_ring(dim: int = 6) -> tuple[PolyRing, list]:
    """A fully generic J matrix with symbolic real entries J11..Jnn."""
    names = [f"J{i}{j}" for i in range(1, dim + 1) for j in range(1, dim + 1)]
    ring = PolyRing(real_vars=names)
    J = [[ring.var(f"J{i}{j}") for j in range(1, dim + 1)] for i in range(1, dim + 1)]
    return ring, J


def is_integrable(g: LieAlgebra, J: Sequence[Sequence]) -> bool:
    """J^2 = -Id and N = 0, cross-checked against d(Lambda^{1,0}) having no
    (0,2) part."""
    if not squares_to_minus_id(J):
        return False
    nj = nijenhuis(g, J)
    vanishes = all(not any(v) for v in nj.values())
    cx = Complexification.from_real(g, J, check=False)
    no02 = all(
        not cx.frame.bigrade(cx.frame.d_alpha[k]).get((0, 2))
        for k in range(HOLO)
    )
    if vanishes != no02:
        raise AssertionError("integrability cross-check failed")
    return vanishes


def coframe_from_J(g: LieAlgebra, J: Sequence[Sequence]) -> list[Form]:
    """Three independent (1,0)-forms: solutions of a(J X) = i a(X)."""
    n = g.dim
    Jt = [[GaussianRational.coerce(J[j][i]) for j in range(n)] for i in range(n)]
    mat = [[Jt[i][j] - (GR_I if i == j else GR_ZERO) for j in range(n)] for i in range(n)]
    kernel = linalg.nullspace(mat)
    if len(kernel) != n // 2:
        raise ValueError("J does not have the right eigenstructure")
    return [Form(n, 1, {(i + 1,): v[i] for i in range(n)}) for v in kernel]


# ---------------------------------------------------------------------------
# the complex coframe world


def conj_alpha(form: Form) -> Form:
    """Conjugation in the alpha basis: conjugate coefficients, swap k <-> k+3."""
    dim = form.dim
    out: dict[tuple, object] = {}
    for key, c in form.coeffs.items():
        mapped = tuple((i + HOLO) if i <= HOLO else (i - HOLO) for i in key)
        sign, sorted_key = sort_sign(mapped)
        cc = conj_scalar(c)
        if sign == -1:
            cc = -cc
        cur = out.get(sorted_key)
        cc = cc if cur is None else cur + cc
        if cc:
            out[sorted_key] = cc
        else:
            out.pop(sorted_key, None)
    res = Form.zero(dim, form.degree)
    res.coeffs = out
    return res


def monomial_type(key: tuple) -> tuple[int, int]:
    p = sum(1 for i in key if i <= HOLO)
    return p, len(key) - p


class ComplexFrame:
    """Structure equations of an integrable J in a (1,0)-coframe.

    ``d_alpha[k]`` is d of alpha^{k+1} (k = 0..2) as a 2-form in alpha
    indexing; d of the conjugates follows by conjugation.
    """

    def __init__(self, d10: Sequence[Form]):
        if len(d10) != HOLO:
            raise ValueError("need d of the three (1,0) coframe elements")
        self.d_alpha: list[Form] = list(d10) + [conj_alpha(f) for f in d10]

    def d(self, form: Form) -> Form:
        out = Form.zero(form.dim, form.degree + 1)
        for key, c in form.coeffs.items():
            for t, i in enumerate(key):
                term = Form.basis(form.dim, key[:t]).wedge(self.d_alpha[i - 1]).wedge(
                    Form.basis(form.dim, key[t + 1:])
                )
                if t % 2:
                    term = -term
                out = out + term * c
        return out

    @staticmethod
    def bigrade(form: Form) -> dict:
        out: dict[tuple, Form] = {}
        for key, c in form.coeffs.items():
            pq = monomial_type(key)
            if pq not in out:
                out[pq] = Form.zero(form.dim, form.degree)
            out[pq].coeffs[key] = c
        return out

    @staticmethod
    def project(form: Form, p: int, q: int) -> Form:
        return ComplexFrame.bigrade(form).get((p, q), Form.zero(form.dim, form.degree))

    def del_(self, form: Form) -> Form:
        """(p+1, q) part of d of a pure-type form."""
        p, q = self._type_of(form)
        return self.project(self.d(form), p + 1, q)

    def dbar(self, form: Form) -> Form:
        p, q = self._type_of(form)
        return self.project(self.d(form), p, q + 1)

    @staticmethod
    def _type_of(form: Form) -> tuple[int, int]:
        types = {monomial_type(k) for k in form.coeffs}
        if len(types) > 1:
            raise ValueError("form is not of pure type")
        return types.pop() if types else (0, form.degree)

    def integrable(self) -> bool:
        """No (0,2) component in d alpha^k, and d^2 = 0."""
        for k in range(HOLO):
            if self.bigrade(self.d_alpha[k]).get((0, 2)):
                return False
            if self.d(self.d_alpha[k]):
                return False
        return True


# ---------------------------------------------------------------------------
# tying frames to real algebras


def _real_part(c) -> GaussianRational:
    c = GaussianRational.coerce(c)
    if c.im:
        raise ValueError(f"expected a real coefficient, got {c!r}")
    return c


class Complexification:
    """A real algebra with integrable J plus the induced complex coframe.

    Attributes: ``g`` (real :class:`LieAlgebra`), ``J`` (matrix), ``alphas``
    (three (1,0)-forms in the real coframe), ``frame``
    (:class:`ComplexFrame`), plus the change-of-basis maps ``to_alpha`` /
    ``to_real``.
    """

    def __init__(self, g: LieAlgebra, J, alphas: Sequence[Form], check: bool = True):
        self.g = g
        self.J = J
        self.alphas = list(alphas)
        n = g.dim
        rows = [[a.coeff(i) for i in range(1, n + 1)] for a in alphas]
        rows += [[conj_scalar(GaussianRational.coerce(x)) for x in r] for r in rows]
        self._M = linalg.coerce_matrix(rows)        # alpha = M . f
        self._Minv = linalg.inverse(self._M)        # f = Minv . alpha
        self._img_real_to_alpha = {
            i + 1: Form(n, 1, {(k + 1,): self._Minv[i][k] for k in range(n)})
            for i in range(n)
        }
        self._img_alpha_to_real = {
            k + 1: Form(n, 1, {(i + 1,): self._M[k][i] for i in range(n)})
            for k in range(n)
        }
        d10 = [self.to_alpha(ce_differential(g, self._alpha_real(k))) for k in range(HOLO)]
        self.frame = ComplexFrame(d10)
        if check and not self.frame.integrable():
            raise ValueError("J is not integrable")

    def _alpha_real(self, k: int) -> Form:
        return self.alphas[k]

    def to_alpha(self, form: Form) -> Form:
        return form.substitute_basis(self._img_real_to_alpha)

    def to_real(self, form: Form) -> Form:
        return form.substitute_basis(self._img_alpha_to_real)

    @classmethod
    def from_real(cls, g: LieAlgebra, J, check: bool = True) -> "Complexification":
        return cls(g, J, coframe_from_J(g, J), check=check)


def standard_j(dim: int = 6) -> list:
    """J e_{2k-1} = e_{2k}."""
    J = [[GR_ZERO] * dim for _ in range(dim)]
    for k in range(dim // 2):
        J[2 * k + 1][2 * k] = GR_ONE
        J[2 * k][2 * k + 1] = -GR_ONE
    return J


def realify(frame: ComplexFrame, name: Optional[str] = None) -> Complexification:
    """Real Lie algebra underlying exact complex structure equations.

    Uses the fixed identification ``alpha^k = e^{2k-1} + i e^{2k}`` with the
    standard J.  Requires Gaussian-rational coefficients.
    """
    dim = 2 * HOLO
    # alpha-basis 1-forms written in the real coframe
    img = {}
    for k in range(HOLO):
        img[k + 1] = Form(dim, 1, {(2 * k + 1,): GR_ONE, (2 * k + 2,): GR_I})
        img[k + 4] = Form(dim, 1, {(2 * k + 1,): GR_ONE, (2 * k + 2,): -GR_I})
    half = GaussianRational("1/2")
    half_i = GaussianRational(0, "-1/2")
    d1 = []
    for j in range(1, dim + 1):
        k = (j + 1) // 2
        da = frame.d_alpha[k - 1].substitute_basis(img)
        dac = frame.d_alpha[k + 2].substitute_basis(img)
        if j % 2:  # e^{2k-1} = (alpha + conj)/2
            de = (da + dac) * half
        else:      # e^{2k} = (alpha - conj)/(2i)
            de = (da - dac) * half_i
        d1.append(de.map_coefficients(_real_part))
    g = LieAlgebra(dim, d1, name=name)
    alphas = [img[k + 1] for k in range(HOLO)]
    return Complexification(g, standard_j(dim), alphas, check=False)


# ---------------------------------------------------------------------------
# families of complex structure equations

def _two(idx, coeff=1):
    """2-form c * alpha^{idx[0]} ^ alpha^{idx[1]} in alpha indexing."""
    return Form(6, 2, {tuple(idx): coeff})


def _alpha_k_wedge_re3(k: int, coeff=1) -> Form:
    """coeff * alpha^k ^ (alpha^3 - conj alpha^3)."""
    return _two((k, 3), coeff) - _two((k, 6), coeff)


def _alpha_k_wedge_re1(k: int, coeff=1) -> Form:
    """coeff * alpha^k ^ (alpha^1 - conj alpha^1)."""
    return _two((k, 1), coeff) - _two((k, 4), coeff)


class FamilyInstance:
    """A family of complex structure equations at chosen parameter values."""

    def __init__(self, family_id: str, params: dict, frame: ComplexFrame,
                 metric_shape: str = "full"):
        self.family_id = family_id
        self.params = dict(params)
        self.frame = frame
        self.metric_shape = metric_shape  # "full" or "almost_abelian"
        self._cx: Optional[Complexification] = None

    def complexification(self) -> Complexification:
        """Realified algebra (exact coefficients only); cached."""
        if self._cx is None:
            self._cx = realify(self.frame, name=self.family_id)
        return self._cx


def _unit_circle(params: dict):
    """Resolve e^{i theta}: exact via params['c'] (unit Gaussian rational),
    or float via params['theta']."""
    if "c" in params:
        c = GaussianRational.coerce(params["c"])
        if c * c.conj() != GR_ONE:
            raise ValueError("c must lie on the unit circle")
        return c
    import cmath

    return cmath.exp(1j * float(params["theta"]))


def _heis_family(family_id: str, params: dict) -> list[Form]:
    """Complex equations for the Heisenberg-type families (nilradical h3 + R^2)."""
    p = params
    if family_id == "HT-h3+s3.3^0":
        eps = p["eps"]
        return [_two((3, 6), GR_I * eps), -_alpha_k_wedge_re1(2), Form.zero(6, 2)]
    if family_id == "HT-s4.7+R2":
        eps = p["eps"]
        return [_two((2, 5), GR_I * eps), -_alpha_k_wedge_re1(2), Form.zero(6, 2)]
    if family_id == "HT-s6.44":
        eps = p["eps"]
        d2 = -_alpha_k_wedge_re1(2) - _alpha_k_wedge_re1(3, GR_I)
        return [_two((3, 6), GR_I * eps), d2, -_alpha_k_wedge_re1(3)]
    if family_id == "HT-s6.52":
        delta, eps, q = p["delta"], p["eps"], p["q"]
        return [
            _two((2, 5), GR_I * delta),
            -_alpha_k_wedge_re1(2),
            -_alpha_k_wedge_re1(3, eps * q),
        ]
    if family_id == "HT-s6.159":
        delta, eps = p["delta"], p["eps"]
        return [
            _two((2, 5), GR_I * delta) + _two((3, 6), GR_I * eps),
            -_alpha_k_wedge_re1(2),
            Form.zero(6, 2),
        ]
    if family_id == "HT-s6.162^1":
        return [
            _two((2, 6)) - _two((3, 5)),
            -_alpha_k_wedge_re1(2, GR_I),
            _alpha_k_wedge_re1(3, GR_I),
        ]
    if family_id == "HT-s6.165":
        pp = p["p"]
        return [
            _two((2, 6)) - _two((3, 5)),
            -_alpha_k_wedge_re1(2, 1 + GR_I * pp),
            -_alpha_k_wedge_re1(3, 1 - GR_I * pp),
        ]
    if family_id == "HT-s6.166":
        delta, eps, pp = p["delta"], p["eps"], p["p"]
        return [
            _two((2, 5), GR_I * delta) + _two((3, 6), GR_I * (eps * delta)),
            -_alpha_k_wedge_re1(2),
            -_alpha_k_wedge_re1(3, eps * pp),
        ]
    if family_id == "HT-s6.167":
        eps, x = p["eps"], p["x"]
        d2 = -_alpha_k_wedge_re1(2) - _alpha_k_wedge_re1(3, GR_I)
        return [
            _two((2, 6), eps) - _two((3, 5), eps) + _two((3, 6), GR_I * x),
            d2,
            -_alpha_k_wedge_re1(3),
        ]
    raise KeyError(family_id)


def _aa_family(family_id: str, params: dict) -> list[Form]:
    """Complex equations for the almost abelian families.

    All carry inhomogeneous z (or z1, z2) alpha^{1 conj1} terms; the metric
    is restricted to the w2 = w3 = 0 shape for these.
    """
    p = params
    i = GR_I

    def a11(c):
        return _two((1, 4), c)

    def d_scaled(k, c, z):
        """c * alpha^k ^ (alpha^1 - conj alpha^1) + z alpha^{1 conj 1}."""
        return _alpha_k_wedge_re1(k, c) + a11(z)

    if family_id == "AA-s3.3^0+R3":
        return [Form.zero(6, 2), d_scaled(2, -i, p["z"]), Form.zero(6, 2)]
    if family_id == "AA-s4.3+R2":
        return [a11(i), d_scaled(2, i * GaussianRational("1/2"), p["z1"]), a11(p["z2"])]
    if family_id == "AA-s4.5+R2":
        pp = p["p"]
        return [
            a11(i * pp),
            d_scaled(2, -(1 + i * GaussianRational("1/2") * pp), p["z1"]),
            a11(p["z2"]),
        ]
    if family_id == "AA-s5.4^0+R":
        return [Form.zero(6, 2), d_scaled(2, -1, p["z1"]), a11(p["z2"])]
    if family_id == "AA-s5.8^0+R":
        d2 = -_alpha_k_wedge_re1(2) - _alpha_k_wedge_re1(3, i) + a11(p["z1"])
        return [Form.zero(6, 2), d2, d_scaled(3, -1, p["z2"])]
    if family_id == "AA-s5.9+R":
        return [Form.zero(6, 2), d_scaled(2, -1, p["z1"]), d_scaled(3, i, p["z2"])]
    if family_id == "AA-s5.11+R":
        pp = p["p"]
        return [
            Form.zero(6, 2),
            d_scaled(2, -i * pp, p["z1"]),
            d_scaled(3, -1 + i * pp, p["z2"]),
        ]
    if family_id == "AA-s5.13+R":
        pp, r, eps = p["p"], p["r"], p["eps"]
        return [
            Form.zero(6, 2),
            d_scaled(2, -(1 + i * pp), p["z1"]),
            d_scaled(3, -eps * r + i * pp, p["z2"]),
        ]
    if family_id == "AA-s6.14":
        q = GaussianRational("1/4")
        d2 = (
            _alpha_k_wedge_re1(2, i * q)
            - _alpha_k_wedge_re1(3, i)
            + a11(p["z1"])
        )
        return [a11(i), d2, d_scaled(3, i * q, p["z2"])]
    if family_id == "AA-s6.16":
        pp = p["p"]
        d2 = (
            -_alpha_k_wedge_re1(2, i * (pp - i))
            - _alpha_k_wedge_re1(3, i)
            + a11(p["z1"])
        )
        return [a11(-4 * i * pp), d2, d_scaled(3, -(1 + i * pp), p["z2"])]
    if family_id == "AA-s6.17":
        q = p["q"]
        return [
            a11(-2 * i * (1 + q)),
            d_scaled(2, -i, p["z1"]),
            d_scaled(3, -i * q, p["z2"]),
        ]
    if family_id == "AA-s6.18":
        return [
            a11(i),
            d_scaled(2, -i, p["z1"]),
            d_scaled(3, GaussianRational("3/2") * i, p["z2"]),
        ]
    if family_id == "AA-s6.19":
        pp, q = p["p"], p["q"]
        return [
            a11(i * q),
            d_scaled(2, -i * pp, p["z1"]),
            d_scaled(3, i * (pp + q * GaussianRational("1/2")) - 1, p["z2"]),
        ]
    if family_id == "AA-s6.20":
        pp = p["p"]
        return [
            a11(i * pp),
            d_scaled(2, -i * pp, p["z1"]),
            d_scaled(3, -(1 + GaussianRational("3/2") * i * pp), p["z2"]),
        ]
    if family_id == "AA-s6.21":
        pp, q, r, eps = p["p"], p["q"], p["r"], p["eps"]
        return [
            a11(-2 * i * (pp + q)),
            d_scaled(2, -(eps + i * pp), p["z1"]),
            d_scaled(3, -(r + i * q), p["z2"]),
        ]
    raise KeyError(family_id)


def _n5_family(family_id: str, params: dict) -> list[Form]:
    """Complex equations on the algebras with five-dimensional nilradical
    n5.1 / n5.2 and first Betti number two of the nilradical."""
    p = params
    i = GR_I
    half = GaussianRational("1/2")
    if family_id in ("N51-145", "N51-147-a"):
        nu = p["nu"]
        if family_id == "N51-145":
            c = _unit_circle(p)
            c23, c23b = c, conj_scalar(c)
        else:
            z = p["z"]
            c23, c23b = 1 + z, 1 - z
        d1 = (
            _alpha_k_wedge_re3(1)
            + _two((2, 3), c23)
            + _two((2, 6), c23b)
            + _two((3, 6), nu)
        )
        return [d1, _alpha_k_wedge_re3(2), Form.zero(6, 2)]
    if family_id in ("N51-147-b", "N51-147-c"):
        zc = p["z"] if family_id == "N51-147-b" else p["x"]
        d1 = (
            _alpha_k_wedge_re3(1)
            + _alpha_k_wedge_re3(2, zc)
            - _two((3, 5))
        )
        if family_id == "N51-147-b":
            d1 = d1 + _two((3, 6))
        return [d1, -_alpha_k_wedge_re3(2), Form.zero(6, 2)]
    if family_id == "N52-152-a":
        z1, z2, delta = p["z1"], p["z2"], p["delta"]
        rez2 = _re(z2)
        d1 = (
            _two((1, 2))
            + _two((1, 3), -rez2)
            - _two((1, 5))
            + _two((1, 6), rez2)
            + _two((2, 3), z1)
            + _two((2, 5), z2)
            + _two((2, 6), -(rez2 * z2 + i * delta))
            + _two((3, 5), z1 - rez2 * z2)
            + _two((3, 6), rez2 * rez2 * z2 - rez2 * z1 + i * half * delta * _cj(z2))
        )
        d2 = (
            _two((2, 3), rez2)
            + _two((3, 5), rez2)
            - _two((3, 6), rez2 * rez2 + i * half * delta)
        )
        d3 = _two((2, 3)) + _two((3, 5)) - _two((3, 6), rez2)
        return [d1, d2, d3]
    if family_id in ("N52-152-b", "N52-154"):
        # Shared coefficient shape; for the z2-parameterized branch the slots
        # are X = delta * Im(z2) (real) and Y = z2 (complex), while the
        # (z, x, y) branch takes X = x, Y = y real with x != 0.
        if family_id == "N52-152-b":
            z, delta = p["z1"], p["delta"]
            X = delta * _im(p["z2"])
            Y = p["z2"]
        else:
            z, X, Y = p["z"], p["x"], p["y"]
        rez, imz = _re(z), _im(z)
        X2 = X * X
        inv2X2 = _inv(2 * X2)
        c23 = inv2X2 * (z * _cj(z) - X * (Y + i))
        c22b = _inv(X2) * z
        c23b = -(_inv(X2) * rez * z)
        c32b = -(inv2X2 * (z * z + X * (Y - i)))
        c33b = inv2X2 * (rez * z * z + X * Y * rez - X * imz)
        d1 = (
            _two((1, 2))
            + _two((1, 3), -rez)
            - _two((1, 5))
            + _two((1, 6), rez)
            + _two((2, 3), c23)
            + _two((2, 5), c22b)
            + _two((2, 6), c23b)
            + _two((3, 5), c32b)
            + _two((3, 6), c33b)
        )
        d2 = (
            _two((2, 3), -rez)
            - _two((3, 5), rez)
            + _two((3, 6), rez * rez + i * half * X)
        )
        d3 = -_two((2, 3)) - _two((3, 5)) + _two((3, 6), rez)
        return [d1, d2, d3]
    raise KeyError(family_id)


def _re(z):
    if isinstance(z, Poly):
        names = sorted(z.variables())
        base = [n for n in names if not n.endswith("~")]
        if len(base) == 1 and z == z.ring.var(base[0]):
            return z.ring.re_part(base[0])
        raise ValueError("symbolic Re() only supported for bare variables")
    z = GaussianRational.coerce(z) if not isinstance(z, complex) else z
    if isinstance(z, complex):
        return z.real
    return GaussianRational(z.re)


def _im(z):
    if isinstance(z, Poly):
        names = sorted(z.variables())
        base = [n for n in names if not n.endswith("~")]
        if len(base) == 1 and z == z.ring.var(base[0]):
            return z.ring.im_part(base[0])
        raise ValueError("symbolic Im() only supported for bare variables")
    z = GaussianRational.coerce(z) if not isinstance(z, complex) else z
    if isinstance(z, complex):
        return z.imag
    return GaussianRational(z.im)


def _cj(z):
    return conj_scalar(GaussianRational.coerce(z) if isinstance(z, (int, str)) else z)


def _inv(z):
    from fractions import Fraction

    if isinstance(z, (int, Fraction)):
        return GaussianRational(Fraction(1) / z)
    if isinstance(z, GaussianRational):
        return z.inverse()
    if isinstance(z, (float, complex)):
        return 1.0 / z
    raise TypeError("cannot invert symbolic coefficients; bind parameters first")


FAMILY_PARAMS = {
    "AA-s3.3^0+R3": ("z",),
    "AA-s4.3+R2": ("z1", "z2"),
    "AA-s4.5+R2": ("p", "z1", "z2"),
    "AA-s5.4^0+R": ("z1", "z2"),
    "AA-s5.8^0+R": ("z1", "z2"),
    "AA-s5.9+R": ("z1", "z2"),
    "AA-s5.11+R": ("p", "z1", "z2"),
    "AA-s5.13+R": ("p", "r", "eps", "z1", "z2"),
    "AA-s6.14": ("z1", "z2"),
    "AA-s6.16": ("p", "z1", "z2"),
    "AA-s6.17": ("q", "z1", "z2"),
    "AA-s6.18": ("z1", "z2"),
    "AA-s6.19": ("p", "q", "z1", "z2"),
    "AA-s6.20": ("p", "z1", "z2"),
    "AA-s6.21": ("p", "q", "r", "eps", "z1", "z2"),
    "HT-h3+s3.3^0": ("eps",),
    "HT-s4.7+R2": ("eps",),
    "HT-s6.44": ("eps",),
    "HT-s6.52": ("delta", "eps", "q"),
    "HT-s6.159": ("delta", "eps"),
    "HT-s6.162^1": (),
    "HT-s6.165": ("p",),
    "HT-s6.166": ("delta", "eps", "p"),
    "HT-s6.167": ("eps", "x"),
    "N51-145": ("theta|c", "nu"),
    "N51-147-a": ("z", "nu"),
    "N51-147-b": ("z",),
    "N51-147-c": ("x",),
    "N52-152-a": ("z1", "z2", "delta"),
    "N52-152-b": ("z1", "z2", "delta"),
    "N52-154": ("z", "x", "y"),
}


def instantiate_family(family_id: str, params: Optional[Mapping] = None) -> FamilyInstance:
    """Complex structure equations of a named family at parameter values.

    Parameter values may be exact (int/Fraction/GaussianRational), symbolic
    (:class:`~hermlie.scalars.Poly`), or floats/complex for numeric work.
    """
    params = dict(params or {})
    if family_id.startswith("AA-"):
        d10 = _aa_family(family_id, params)
        shape = "almost_abelian"
    elif family_id.startswith("HT-"):
        d10 = _heis_family(family_id, params)
        shape = "full"
    elif family_id.startswith("N5"):
        d10 = _n5_family(family_id, params)
        shape = "full"
    else:
        raise KeyError(f"unknown family {family_id!r}")
    return FamilyInstance(family_id, params, ComplexFrame(d10), metric_shape=shape)
