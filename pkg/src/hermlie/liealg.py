"""Lie algebras given by structure equations, and exact structural predicates.

A Lie algebra is stored through the Chevalley-Eilenberg differential of its
dual coframe: ``d f^i`` as exact rational 2-forms.  The sign convention is

    d alpha(X, Y) = -alpha([X, Y]),

so ``df^1 = f^35`` means ``[f_3, f_5] = -f_1``.  Structure equations are
written in the usual shorthand tuple notation, e.g.::

    (f35+f16, f45-f26, f36, -f46, 0, 0)

with optional symbolic coefficients resolved through a parameter binding,
e.g. ``"(pf16+f26, ...)"`` with ``{"p": Fraction(1, 2)}``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import linalg
from .forms import Form
from .scalars import GR_ONE, GR_ZERO, GaussianRational


class LieAlgebra:
    """Finite-dimensional real Lie algebra in a fixed basis ``f_1..f_dim``."""

    def __init__(self, dim: int, d1: Sequence[Form], name: Optional[str] = None):
        if len(d1) != dim:
            raise ValueError("need one differential per coframe element")
        self.dim = dim
        self.d1 = list(d1)
        self.name = name
        for i, df in enumerate(self.d1):
            if df.dim != dim or df.degree != 2:
                raise ValueError(f"d f^{i + 1} must be a 2-form on the same coframe")

    # -- structure constants ------------------------------------------
    def structure_constant(self, i: int, j: int, k: int) -> GaussianRational:
        """c^i_{jk} with [f_j, f_k] = sum_i c^i_{jk} f_i."""
        c = self.d1[i - 1].coeff(j, k)
        c = GaussianRational.coerce(c) if not isinstance(c, GaussianRational) else c
        return -c

    def bracket(self, u: Sequence, v: Sequence) -> list:
        """Bracket of vectors given by components (generic scalar type)."""
        out = []
        for i in range(1, self.dim + 1):
            acc = GR_ZERO
            for (j, k), c in self.d1[i - 1].coeffs.items():
                term = (-c) * (u[j - 1] * v[k - 1] - u[k - 1] * v[j - 1])
                acc = acc + term
            out.append(acc)
        return out

    def ad_matrix(self, x: Sequence) -> list:
        """Matrix of ad_x = [x, .] (columns are ad_x(f_j))."""
        cols = []
        for j in range(self.dim):
            e = [GR_ONE if t == j else GR_ZERO for t in range(self.dim)]
            cols.append(self.bracket(x, e))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        label = self.name or f"dim {self.dim}"
        return f"LieAlgebra({label}: {print_structure_equations(self)})"


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg differential


def ce_differential(g: LieAlgebra, form: Form) -> Form:
    """d of a left-invariant form, extended as an antiderivation."""
    out = Form.zero(g.dim, form.degree + 1)
    for key, c in form.coeffs.items():
        for t, i in enumerate(key):
            term = Form.basis(g.dim, key[:t]).wedge(g.d1[i - 1]).wedge(
                Form.basis(g.dim, key[t + 1:])
            )
            if t % 2:
                term = -term
            out = out + term * c
    return out


def jacobi_holds(g: LieAlgebra) -> bool:
    """d^2 = 0 on the coframe, equivalent to the Jacobi identity."""
    return all(not ce_differential(g, df) for df in g.d1)


# ---------------------------------------------------------------------------
# parsing and printing of structure equations

_TOKEN = re.compile(
    r"\s*(?:(?P<form>f\d+)|(?P<num>\d+)|(?P<name>[a-zA-Z_][a-zA-Z_0-9]*)"
    r"|(?P<op>[-+*/^(),]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "name":
            # split identifiers that run into a basis symbol, e.g. "pf16"
            fm = re.search(r"f\d", val)
            if fm and fm.start() > 0:
                head = val[: fm.start()]
                tokens.append(("name", head))
                rest = val[fm.start():]
                if not re.fullmatch(r"f\d+", rest):
                    raise ValueError(f"bad token {val!r}")
                tokens.append(("form", rest))
                continue
            if re.fullmatch(r"f\d+", val):
                kind = "form"
        tokens.append((kind, val))
    return tokens


class _Parser:
    """Recursive-descent parser for one structure-equation entry."""

    def __init__(self, tokens: list, params: Mapping[str, object], degree: int = 2):
        self.tokens = tokens
        self.pos = 0
        self.params = params
        self.degree = degree

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, val: str):
        kind, v = self.take()
        if v != val:
            raise ValueError(f"expected {val!r}, got {v!r}")

    # expression -> sum of (coefficient, indices) terms
    def parse_entry(self, dim: int) -> Form:
        out = Form.zero(dim, self.degree)
        sign = GR_ONE
        first = True
        while True:
            kind, val = self.peek()
            if kind is None or val in (",", ")"):
                if first:
                    raise ValueError("empty entry")
                return out
            if val == "+":
                self.take()
                sign = GR_ONE
            elif val == "-":
                self.take()
                sign = -GR_ONE
            elif not first:
                raise ValueError(f"expected + or - before {val!r}")
            coeff, indices = self.parse_term()
            if indices is None:
                # bare scalar entry; only literal 0 is allowed
                if coeff:
                    raise ValueError("scalar entry in structure equations must be 0")
                first = False
                continue
            out = out + Form(dim, self.degree, {indices: sign * coeff})
            first = False
            sign = GR_ONE

    def parse_term(self):
        """One product of coefficient factors, optionally ending in f<jk>."""
        coeff = GR_ONE
        indices = None
        saw_factor = False
        while True:
            kind, val = self.peek()
            if kind == "form":
                self.take()
                digits = val[1:]
                if len(digits) != self.degree:
                    raise ValueError(
                        f"expected a degree-{self.degree} symbol, got {val!r}"
                    )
                indices = tuple(int(d) for d in digits)
                return coeff, indices
            if kind == "num":
                self.take()
                factor = GaussianRational(int(val))
            elif kind == "name":
                self.take()
                if val not in self.params:
                    raise ValueError(f"unbound parameter {val!r}")
                factor = GaussianRational.coerce(self.params[val])
            elif val == "(":
                self.take()
                factor = self.parse_sum()
                self.expect(")")
            else:
                if not saw_factor:
                    raise ValueError(f"unexpected token {val!r}")
                return coeff, None
            saw_factor = True
            # optional power and division
            while True:
                kind2, val2 = self.peek()
                if val2 == "^":
                    self.take()
                    k2, v2 = self.take()
                    if k2 != "num":
                        raise ValueError("exponent must be an integer")
                    factor = factor ** int(v2)
                elif val2 == "/":
                    # lookahead: divide by the next single factor
                    self.take()
                    factor = factor / self.parse_atom()
                else:
                    break
            coeff = coeff * factor

    def parse_atom(self) -> GaussianRational:
        kind, val = self.take()
        if kind == "num":
            out = GaussianRational(int(val))
        elif kind == "name":
            if val not in self.params:
                raise ValueError(f"unbound parameter {val!r}")
            out = GaussianRational.coerce(self.params[val])
        elif val == "(":
            out = self.parse_sum()
            self.expect(")")
        else:
            raise ValueError(f"unexpected token {val!r}")
        kind2, val2 = self.peek()
        if val2 == "^":
            self.take()
            k2, v2 = self.take()
            if k2 != "num":
                raise ValueError("exponent must be an integer")
            out = out ** int(v2)
        return out

    def parse_sum(self) -> GaussianRational:
        out = GaussianRational(0)
        sign = GR_ONE
        first = True
        while True:
            kind, val = self.peek()
            if val == "+":
                self.take()
                sign = GR_ONE
            elif val == "-":
                self.take()
                sign = -GR_ONE
            elif not first and (kind is None or val in (")", ",")):
                return out
            term = self.parse_product()
            out = out + sign * term
            first = False
            sign = GR_ONE

    def parse_product(self) -> GaussianRational:
        out = self.parse_atom()
        while True:
            kind, val = self.peek()
            if val == "*":
                self.take()
                out = out * self.parse_atom()
            elif val == "/":
                self.take()
                out = out / self.parse_atom()
            elif kind in ("num", "name") or val == "(":
                out = out * self.parse_atom()
            else:
                return out


def parse_structure_equations(
    text: str,
    params: Optional[Mapping[str, object]] = None,
    name: Optional[str] = None,
    dim: int = 6,
) -> LieAlgebra:
    """Parse tuple-notation structure equations into a :class:`LieAlgebra`."""
    params = dict(params or {})
    tokens = _tokenize(text)
    if not tokens or tokens[0][1] != "(":
        raise ValueError("structure equations must start with '('")
    parser = _Parser(tokens, params)
    parser.expect("(")
    entries = []
    while True:
        entries.append(parser.parse_entry(dim))
        kind, val = parser.take()
        if val == ")":
            break
        if val != ",":
            raise ValueError(f"expected ',' or ')', got {val!r}")
    if parser.pos != len(tokens):
        raise ValueError("trailing input after ')'")
    if len(entries) != dim:
        raise ValueError(f"expected {dim} entries, got {len(entries)}")
    return LieAlgebra(dim, entries, name=name)


def parse_form(
    text: str,
    params: Optional[Mapping[str, object]] = None,
    degree: int = 2,
    dim: int = 6,
) -> Form:
    """Parse a single form expression such as ``"f12+4f34"`` or ``"-2f6"``."""
    parser = _Parser(_tokenize(text), dict(params or {}), degree=degree)
    form = parser.parse_entry(dim)
    if parser.pos != len(parser.tokens):
        raise ValueError("trailing input in form expression")
    return form


def parse_scalar(text: str, params: Optional[Mapping[str, object]] = None) -> GaussianRational:
    """Parse a coefficient expression like ``"-1/p"`` or ``"2(1+q)^2"``."""
    parser = _Parser(_tokenize(text), dict(params or {}))
    value = parser.parse_sum()
    if parser.pos != len(parser.tokens):
        raise ValueError("trailing input in scalar expression")
    return value


def _coeff_str(c: GaussianRational) -> str:
    if not c.is_real():
        raise ValueError("structure constants must be real")
    return str(c.re)


def print_structure_equations(g: LieAlgebra) -> str:
    """Tuple notation inverse to :func:`parse_structure_equations`."""
    entries = []
    for df in g.d1:
        if not df:
            entries.append("0")
            continue
        parts = []
        for (j, k) in sorted(df.coeffs):
            c = GaussianRational.coerce(df.coeffs[(j, k)])
            s = _coeff_str(c)
            sym = f"f{j}{k}"
            if s == "1":
                term = sym
            elif s == "-1":
                term = f"-{sym}"
            elif s.startswith("-"):
                term = f"-{s[1:]}{sym}"
            else:
                term = f"{s}{sym}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        entries.append("".join(parts))
    return "(" + ", ".join(entries) + ")"


def to_json(g: LieAlgebra) -> str:
    d = []
    for df in g.d1:
        entry = []
        for (j, k) in sorted(df.coeffs):
            c = GaussianRational.coerce(df.coeffs[(j, k)])
            entry.append([[j, k], _coeff_str(c)])
        d.append(entry)
    payload = {"dim": g.dim, "d": d}
    if g.name:
        payload["name"] = g.name
    return json.dumps(payload)


def from_json(text: str) -> LieAlgebra:
    payload = json.loads(text)
    dim = payload["dim"]
    d1 = []
    for entry in payload["d"]:
        coeffs = {tuple(idx): GaussianRational(Fraction(c)) for idx, c in entry}
        d1.append(Form(dim, 2, coeffs))
    return LieAlgebra(dim, d1, name=payload.get("name"))


# ---------------------------------------------------------------------------
# subspaces and structural predicates

Subspace = list  # list of vectors (components in f_1..f_dim)


def span_basis(vectors: Sequence[Sequence]) -> Subspace:
    """Row-reduce a spanning set to a canonical basis."""
    if not vectors:
        return []
    r, pivots = linalg.rref(vectors)
    return [r[i] for i in range(len(pivots))]


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [g.bracket(u, v) for u in a for v in b]
    return span_basis([v for v in vecs if any(v)])


def full_space(g: LieAlgebra) -> Subspace:
    return linalg.identity(g.dim)


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """g^0 = g, g^{k+1} = [g, g^k]; stops when stationary."""
    series = [full_space(g)]
    while True:
        nxt = bracket_span(g, full_space(g), series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
        if not nxt:
            break
    return series

def derived_series(g: LieAlgebra) -> list[Subspace]:
    series = [full_space(g)]
    while True:
        nxt = bracket_span(g, series[-1], series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
        if not nxt:
            break
    return series


def is_nilpotent(g: LieAlgebra) -> bool:
    return not lower_central_series(g)[-1]


def is_solvable(g: LieAlgebra) -> bool:
    return not derived_series(g)[-1]


def _coordinate_positions(basis: Subspace):
    """Indices i with basis vector e_i, or None if any vector is not one."""
    pos = []
    for v in basis:
        support = [i for i, x in enumerate(v) if x]
        if len(support) != 1 or GaussianRational.coerce(v[support[0]]) != GR_ONE:
            return None
        pos.append(support[0])
    return pos if len(set(pos)) == len(pos) else None


def restrict_to_ideal(g: LieAlgebra, basis: Subspace) -> LieAlgebra:
    """The subalgebra spanned by ``basis`` as a Lie algebra in that basis."""
    k = len(basis)
    pos = _coordinate_positions(basis)
    if pos is not None:
        # coordinate subspace: re-index the structure equations directly
        allowed = {p + 1 for p in pos}
        local = {p + 1: t + 1 for t, p in enumerate(pos)}
        for q in range(g.dim):
            if q in pos:
                continue
            # a bracket of two subspace elements must have no component
            # along any outside direction
            if any(a in allowed and b in allowed
                   for (a, b) in g.d1[q].coeffs):
                raise ValueError("not closed under the bracket")
        d1 = []
        for p in pos:
            kept = {
                (local[a], local[b]): c
                for (a, b), c in g.d1[p].coeffs.items()
                if a in allowed and b in allowed
            }
            d1.append(Form(k, 2, kept))
        return LieAlgebra(k, d1)
    mat = linalg.transpose(basis)
    d1 = [Form.zero(k, 2) for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            w = g.bracket(basis[a], basis[b])
            coords = linalg.solve(mat, w)
            if coords is None:
                raise ValueError("not closed under the bracket")
            for i in range(k):
                if coords[i]:
                    d1[i] = d1[i] + Form(k, 2, {(a + 1, b + 1): -coords[i]})
    return LieAlgebra(k, d1)


def is_ideal(g: LieAlgebra, basis: Subspace) -> bool:
    for e in full_space(g):
        for v in basis:
            w = g.bracket(e, v)
            if any(w) and not linalg.in_span(basis, w):
                return False
    return True


def verify_nilradical(g: LieAlgebra, basis: Subspace) -> dict:
    """Certify a candidate nilradical.

    A nilpotent ideal of codimension one in a non-nilpotent solvable algebra
    is automatically the nilradical (it is contained in it, and the
    nilradical of a non-nilpotent algebra is proper).
    """
    basis = span_basis(basis)
    ideal = is_ideal(g, basis)
    nilp = ideal and is_nilpotent(restrict_to_ideal(g, basis))
    codim = g.dim - len(basis)
    certified = ideal and nilp and codim == 1 and not is_nilpotent(g)
    return {
        "is_ideal": ideal,
        "is_nilpotent_ideal": nilp,
        "codimension": codim,
        "certified_nilradical": certified,
    }


def induced_endomorphism(
    matrix: Sequence[Sequence], sub: Subspace, modulo: Subspace
) -> tuple[list, Subspace]:
    """Matrix of an endomorphism induced on ``sub / modulo``.

    ``matrix`` must map ``sub`` into ``sub`` and ``modulo`` into ``modulo``.
    The quotient basis is chosen greedily from ``sub`` (first vectors
    independent of ``modulo``).  Returns (matrix on quotient, complement
    vectors used as the quotient basis).
    """
    modulo = span_basis(modulo)
    complement: Subspace = []
    for v in sub:
        if not linalg.in_span(modulo + complement, v):
            complement.append(v)
    full = modulo + complement
    mat_cols = linalg.transpose(full)
    k = len(complement)
    out = [[GR_ZERO] * k for _ in range(k)]
    for j, v in enumerate(complement):
        w = linalg.mat_vec(linalg.coerce_matrix(matrix), linalg.coerce_vector(v))
        coords = linalg.solve(mat_cols, w)
        if coords is None:
            raise ValueError("endomorphism does not preserve the subspace")
        for i in range(k):
            out[i][j] = coords[len(modulo) + i]
    return out, complement


def _trace(m: Sequence[Sequence]) -> GaussianRational:
    return sum((m[i][i] for i in range(len(m))), GR_ZERO)


def is_strongly_unimodular(g: LieAlgebra, nilradical: Optional[Subspace] = None) -> bool:
    """tr(ad_X) vanishes on every quotient n^k / n^{k+1} of the nilradical."""
    if nilradical is None:
        nilradical = find_nilradical(g)
    n = span_basis(nilradical)
    sub = restrict_to_ideal(g, n)
    # lower central series of n, expressed back in the ambient basis
    layers = [n]
    for layer in lower_central_series(sub)[1:]:
        amb = [
            [sum((v[t] * n[t][i] for t in range(len(n))), GR_ZERO) for i in range(g.dim)]
            for v in layer
        ]
        layers.append(span_basis(amb))
    layers.append([])
    # Precompute, per layer pair, a square change of basis whose inverse
    # reads off quotient coordinates with a single matrix-vector product;
    # the expensive exact solves then happen once instead of once per
    # ambient direction.
    pair_data = []
    for k in range(len(layers) - 1):
        modulo = span_basis(layers[k + 1])
        complement: Subspace = []
        for v in layers[k]:
            if not linalg.in_span(modulo + complement, v):
                complement.append(v)
        if not complement:
            continue
        ext = list(modulo) + list(complement)
        for i in range(g.dim):
            e = [GR_ONE if t == i else GR_ZERO for t in range(g.dim)]
            if len(ext) == g.dim:
                break
            if not linalg.in_span(ext, e):
                ext.append(e)
        inv = linalg.inverse(linalg.transpose(ext))
        pair_data.append((len(modulo), len(modulo) + len(complement),
                          complement, inv))
    for x in full_space(g):
        ad = linalg.coerce_matrix(g.ad_matrix(x))
        for lo, hi, complement, inv in pair_data:
            tr = GR_ZERO
            for i, v in enumerate(complement):
                w = linalg.mat_vec(ad, linalg.coerce_vector(v))
                coords = linalg.mat_vec(inv, w)
                if any(coords[hi:]):
                    raise ValueError(
                        "ad does not preserve the lower central series layer")
                tr = tr + coords[lo + i]
            if tr:
                return False
    return True


def find_nilradical(g: LieAlgebra) -> Subspace:
    """Nilradical for the algebras handled here.

    If g is nilpotent it is g itself.  Otherwise try coordinate codimension-one
    subspaces (dropping one basis vector at a time, last first), which covers
    every almost nilpotent algebra presented with the nilradical spanned by an
    initial segment of the basis.
    """
    if is_nilpotent(g):
        return full_space(g)
    for drop in range(g.dim - 1, -1, -1):
        basis = [
            [GR_ONE if t == i else GR_ZERO for t in range(g.dim)]
            for i in range(g.dim)
            if i != drop
        ]
        if is_ideal(g, basis) and is_nilpotent(restrict_to_ideal(g, basis)):
            return basis
    raise ValueError("no codimension-one nilpotent ideal found")
