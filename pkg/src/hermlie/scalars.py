"""Exact scalar types used throughout the package.

Two exact coefficient rings:

* :class:`GaussianRational` -- complex numbers with rational real and
  imaginary part.  A field, so exact Gaussian elimination works.
* :class:`Poly` -- sparse multivariate polynomials over the Gaussian
  rationals, with built-in complex conjugation.  Variables are declared on a
  :class:`PolyRing` either as *real* (fixed by conjugation, e.g. metric
  coefficients ``lambda1`` or a real family parameter) or as *complex*, in
  which case a partner variable holding the conjugate is created
  automatically.

Mixed arithmetic coerces upward: ``int``/``Fraction`` -> ``GaussianRational``
-> ``Poly``.  Multiplying a ``GaussianRational`` by a Python float/complex
falls through to ordinary complex floating point, which is what the numeric
search code relies on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class GaussianRational:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    # -- constructors -------------------------------------------------
    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(0, 1)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, str)):
            return cls(x)
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")

    # -- predicates ---------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        res = self.__add__(-other if not isinstance(other, (float, complex)) else other)
        if isinstance(other, (float, complex)):
            return complex(self) - other
        return res

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- conversions / comparisons ------------------------------------
    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class PolyRing:
    """Polynomial ring over the Gaussian rationals with conjugation.

    ``real_vars`` are fixed by conjugation.  Every name in ``complex_vars``
    gets a companion variable ``name + "~"`` representing its complex
    conjugate; conjugating a polynomial swaps the pair and conjugates the
    coefficients.
    """

    def __init__(self, real_vars: Iterable[str] = (), complex_vars: Iterable[str] = ()):
        self.names: list[str] = []
        self.conj_index: list[int] = []
        self._index: dict[str, int] = {}
        for name in real_vars:
            self._add(name, real=True)
        for name in complex_vars:
            self._add(name, real=False)

    def _add(self, name: str, real: bool):
        if name in self._index:
            raise ValueError(f"duplicate variable {name!r}")
        idx = len(self.names)
        self.names.append(name)
        self._index[name] = idx
        if real:
            self.conj_index.append(idx)
        else:
            cname = name + "~"
            if cname in self._index:
                raise ValueError(f"duplicate variable {cname!r}")
            cidx = idx + 1
            self.names.append(cname)
            self._index[cname] = cidx
            self.conj_index.append(cidx)
            self.conj_index.append(idx)

    # -- element constructors ----------------------------------------
    def var(self, name: str) -> "Poly":
        idx = self._index[name]
        return Poly(self, {((idx, 1),): GR_ONE})

    def constant(self, c) -> "Poly":
        c = GaussianRational.coerce(c)
        return Poly(self, {(): c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def re_part(self, name: str) -> "Poly":
        """(z + conj z)/2 for a complex variable z."""
        return (self.var(name) + self.var(name + "~")) * GaussianRational(Fraction(1, 2))

    def im_part(self, name: str) -> "Poly":
        """(z - conj z)/(2i)."""
        return (self.var(name) - self.var(name + "~")) * GaussianRational(0, Fraction(-1, 2))

    def norm_sq(self, name: str) -> "Poly":
        """z * conj z."""
        return self.var(name) * self.var(name + "~")

    def coerce(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring is not self:
                raise ValueError("polynomial from a different ring")
            return x
        return self.constant(GaussianRational.coerce(x))


Monomial = tuple  # tuple of (var_index, exponent) pairs, sorted by var_index


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for idx, e in b:
        d[idx] = d.get(idx, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, GaussianRational]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    # -- predicates ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), GR_ZERO)

    # -- arithmetic ----------------------------------------------------
    def _coerce_other(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.ring.constant(GaussianRational.coerce(other))
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            s = terms.get(m, GR_ZERO) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, GR_ZERO) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Poly":
        ci = self.ring.conj_index
        terms: dict = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((ci[idx], e) for idx, e in m))
            terms[nm] = terms.get(nm, GR_ZERO) + c.conj()
        return Poly(self.ring, terms)

    # -- substitution --------------------------------------------------
    def substitute(self, values: Mapping[str, object]) -> "Poly":
        """Substitute polynomials/constants for variables (by name).

        Substituting for a complex variable does *not* automatically
        substitute for its conjugate partner; pass both explicitly.
        """
        idx_values: dict[int, Poly] = {}
        for name, v in values.items():
            idx_values[self.ring._index[name]] = self.ring.coerce(v)
        out = self.ring.zero()
        for m, c in self.terms.items():
            term = self.ring.constant(c)
            for idx, e in m:
                if idx in idx_values:
                    term = term * idx_values[idx] ** e
                else:
                    term = term * Poly(self.ring, {((idx, e),): GR_ONE})
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, object]) -> GaussianRational:
        """Fully evaluate; ``values`` must cover every variable that occurs."""
        return self.substitute(values).constant_value()

    def variables(self) -> set:
        return {self.ring.names[idx] for m in self.terms for idx, _ in m}

    # -- comparisons / display ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = self.ring.constant(GaussianRational.coerce(other))
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            c = self.terms[m]
            factors = "*".join(
                f"{self.ring.names[idx]}^{e}" if e > 1 else self.ring.names[idx]
                for idx, e in m
            )
            if not factors:
                parts.append(repr(c))
            elif c == GR_ONE:
                parts.append(factors)
            else:
                parts.append(f"{c!r}*{factors}")
        return " + ".join(parts)


def conj_scalar(s):
    """Complex conjugation dispatch for every supported scalar type."""
    if isinstance(s, (GaussianRational, Poly)):
        return s.conj()
    if isinstance(s, complex):
        return s.conjugate()
    if isinstance(s, (int, float, Fraction)):
        return s
    raise TypeError(f"cannot conjugate {type(s).__name__}")
