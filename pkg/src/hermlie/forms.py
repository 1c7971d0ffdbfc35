"""Exterior algebra of left-invariant forms on a fixed basis.

A :class:`Form` is a homogeneous element of the exterior algebra over a
coframe ``f^1, ..., f^dim``: a dict mapping strictly increasing index tuples
to scalar coefficients.  The scalar type is generic -- exact
(:class:`~hermlie.scalars.GaussianRational`, :class:`~hermlie.scalars.Poly`)
for certified computations, plain ``complex`` for the numeric search path.
Zero coefficients are dropped eagerly, so ``bool(form)`` is "is nonzero".
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Mapping, Sequence

from .scalars import GaussianRational, conj_scalar


def merge_sign(a: tuple, b: tuple):
    """Merge two strictly increasing tuples; return (sign, merged) or (0, None)."""
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return 0, None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a)-i entries of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def sort_sign(indices: Sequence[int]):
    """Sort an index tuple; return (sign, sorted_tuple) or (0, None) on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting swaps
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return 0, None
    return sign, tuple(idx)


class Form:
    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[tuple, object] = ()):
        self.dim = dim
        self.degree = degree
        self.coeffs: dict[tuple, object] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for idx, c in items:
            if not c:
                continue
            sign, key = sort_sign(tuple(idx))
            if sign == 0:
                continue
            if len(key) != degree:
                raise ValueError(f"index tuple {idx} has wrong degree (expected {degree})")
            if key and (key[0] < 1 or key[-1] > dim):
                raise ValueError(f"index out of range in {idx} (dim={dim})")
            cur = self.coeffs.get(key)
            val = sign * c if sign == -1 else c
            val = cur + val if cur is not None else val
            if val:
                self.coeffs[key] = val
            else:
                self.coeffs.pop(key, None)

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, dim: int, degree: int) -> "Form":
        return cls(dim, degree, {})

    @classmethod
    def basis(cls, dim: int, indices: Sequence[int], coeff=1) -> "Form":
        return cls(dim, len(indices), {tuple(indices): coeff})

    # -- predicates ----------------------------------------------------
    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.coeffs.items())))

    def coeff(self, *indices):
        """Coefficient of the (possibly unsorted) index tuple."""
        sign, key = sort_sign(indices)
        if sign == 0:
            return 0
        c = self.coeffs.get(key, 0)
        return -c if sign == -1 and c else c

    # -- linear structure ---------------------------------------------
    def _check_compatible(self, other: "Form"):
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("forms of different dimension or degree")

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = coeffs.get(k)
            s = c if s is None else s + c
            if s:
                coeffs[k] = s
            else:
                coeffs.pop(k, None)
        out = Form.zero(self.dim, self.degree)
        out.coeffs = coeffs
        return out

    def __neg__(self) -> "Form":
        out = Form.zero(self.dim, self.degree)
        out.coeffs = {k: -c for k, c in self.coeffs.items()}
        return out

    def __sub__(self, other: "Form") -> "Form":
        return self.__add__(-other)

    def __mul__(self, scalar) -> "Form":
        if isinstance(scalar, Form):
            raise TypeError("use wedge() for products of forms")
        out = Form.zero(self.dim, self.degree)
        if not scalar:
            return out
        out.coeffs = {k: c * scalar for k, c in self.coeffs.items() if c * scalar}
        return out

    __rmul__ = __mul__

    # -- multiplicative structure ---------------------------------------
    def wedge(self, other: "Form") -> "Form":
        if self.dim != other.dim:
            raise ValueError("forms over different coframes")
        out = Form.zero(self.dim, self.degree + other.degree)
        coeffs: dict[tuple, object] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                sign, key = merge_sign(ka, kb)
                if sign == 0:
                    continue
                term = ca * cb
                if sign == -1:
                    term = -term
                s = coeffs.get(key)
                s = term if s is None else s + term
                if s:
                    coeffs[key] = s
                else:
                    coeffs.pop(key, None)
        out.coeffs = coeffs
        return out

    def contract(self, vector: Sequence) -> "Form":
        """Interior product with a vector given by components in f_1..f_dim."""
        if self.degree == 0:
            raise ValueError("cannot contract a 0-form")
        out = Form.zero(self.dim, self.degree - 1)
        coeffs: dict[tuple, object] = {}
        for key, c in self.coeffs.items():
            for t, idx in enumerate(key):
                v = vector[idx - 1]
                if not v:
                    continue
                term = c * v
                if t % 2:
                    term = -term
                sub = key[:t] + key[t + 1:]
                s = coeffs.get(sub)
                s = term if s is None else s + term
                if s:
                    coeffs[sub] = s
                else:
                    coeffs.pop(sub, None)
        out.coeffs = coeffs
        return out

    def evaluate(self, *vectors: Sequence):
        """Evaluate on ``degree`` many vectors."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of vectors")
        f = self
        for v in vectors:
            f = f.contract(v)
        return f.coeffs.get((), 0)

    # -- coefficient-wise operations ------------------------------------
    def map_coefficients(self, fn: Callable) -> "Form":
        out = Form.zero(self.dim, self.degree)
        out.coeffs = {k: v for k, v in ((k, fn(c)) for k, c in self.coeffs.items()) if v}
        return out

    def conjugate(self) -> "Form":
        """Coefficient-wise complex conjugation (basis indices untouched)."""
        return self.map_coefficients(conj_scalar)

    def to_complex(self) -> "Form":
        """Numeric copy with ``complex`` coefficients."""
        return self.map_coefficients(
            lambda c: complex(c) if isinstance(c, GaussianRational) else complex(c)
        )

    def substitute_basis(self, images: Mapping[int, "Form"]) -> "Form":
        """Replace coframe elements: ``f^i -> images[i]`` (1-forms), wedge-expand.

        Indices absent from ``images`` are kept as themselves.  Used for
        basis changes between the real coframe and a complex coframe.
        """
        cache: dict[int, Form] = {}

        def image(i: int) -> Form:
            if i not in cache:
                img = images.get(i)
                cache[i] = img if img is not None else Form.basis(self.dim, (i,))
            return cache[i]

        out = Form.zero(self.dim, self.degree)
        for key, c in self.coeffs.items():
            term = None
            for i in key:
                term = image(i) if term is None else term.wedge(image(i))
                if term is not None and not term:
                    break
            if term is None:
                term = Form(self.dim, 0, {(): 1})
            if term:
                out = out + term * c
        return out

    # -- display --------------------------------------------------------
    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key in sorted(self.coeffs):
            c = self.coeffs[key]
            label = "f" + "".join(str(i) for i in key) if key else "1"
            parts.append(f"({c!r})*{label}" if key else f"({c!r})")
        return " + ".join(parts)

    def norm_sq_float(self) -> float:
        """Sum of squared magnitudes of (numeric) coefficients."""
        return float(sum(abs(complex(c)) ** 2 for c in self.coeffs.values()))


def all_index_tuples(dim: int, degree: int):
    return list(combinations(range(1, dim + 1), degree))
