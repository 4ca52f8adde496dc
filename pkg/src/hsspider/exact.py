"""Exact coefficient domains.

Rationals are :class:`fractions.Fraction`.  On top of them:

* :class:`GoldenNumber` -- elements ``a + b*sqrt(5)`` of Q(sqrt 5),
* :class:`LaurentPoly` -- one-variable Laurent polynomials,
* :class:`BiLaurent` -- Laurent polynomials in ``Q`` and ``a``,
* :class:`Frac` -- fractions of either polynomial kind, compared by
  cross-multiplication.

Everything is immutable and hashable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

__all__ = [
    "GoldenNumber",
    "LaurentPoly",
    "BiLaurent",
    "Frac",
    "TAU",
    "SQRT5",
    "parse_golden",
    "parse_laurent",
    "NotDivisible",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division has a nonzero remainder."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


# ---------------------------------------------------------------------------
# Q(sqrt 5)
# ---------------------------------------------------------------------------


class GoldenNumber:
    """``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    @classmethod
    def coerce(cls, x) -> "GoldenNumber":
        if isinstance(x, GoldenNumber):
            return x
        return cls(_frac(x), 0)

    # field operations
    def __add__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def conjugate(self) -> "GoldenNumber":
        return GoldenNumber(self.a, -self.b)

    def inverse(self) -> "GoldenNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        return GoldenNumber(self.a / n, -self.b / n)

    def __truediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = GoldenNumber(1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*s5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*s5"


TAU = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
SQRT5 = GoldenNumber(0, 1)

_RAT = r"-?\d+(?:/\d+)?"
_GOLDEN_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*(?:(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\*s5)?"
    rf"|(?P<bonly>{_RAT})\*s5)\s*$"
)


def parse_golden(text: str) -> GoldenNumber:
    """Inverse of ``str(GoldenNumber)``."""
    m = _GOLDEN_RE.match(text)
    if not m:
        raise ValueError(f"not a golden number: {text!r}")
    if m.group("bonly") is not None:
        return GoldenNumber(0, Fraction(m.group("bonly")))
    a = Fraction(m.group("a"))
    b = Fraction(0)
    if m.group("b") is not None:
        b = Fraction(m.group("b"))
        if m.group("sign") == "-":
            b = -b
    return GoldenNumber(a, b)


# ---------------------------------------------------------------------------
# Sparse Laurent polynomials
# ---------------------------------------------------------------------------

Exp = Tuple[int, ...]


class _Laurent:
    """Sparse Laurent polynomial with exponent tuples of fixed length."""

    __slots__ = ("_terms", "_hash")
    nvars = 0
    names: Tuple[str, ...] = ()

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: Dict[Exp, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                e = self._key(e)
                c = _frac(c)
                if c:
                    acc[e] = acc.get(e, Fraction(0)) + c
        object.__setattr__(self, "_terms", tuple(sorted((e, c) for e, c in acc.items() if c)))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _key(cls, e) -> Exp:
        if isinstance(e, int):
            e = (e,)
        e = tuple(int(x) for x in e)
        if len(e) != cls.nvars:
            raise ValueError(f"exponent {e} has wrong arity for {cls.__name__}")
        return e

    @classmethod
    def _from_sorted(cls, items):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", tuple(items))
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def constant(cls, c=1):
        return cls({(0,) * cls.nvars: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({cls._key(exp): c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, _Laurent):
            raise TypeError(f"cannot mix {type(x).__name__} with {cls.__name__}")
        return cls.constant(_frac(x))

    # inspection
    def terms(self) -> Dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> Exp:
        return tuple(min(e[i] for e, _ in self._terms) for i in range(self.nvars))

    def max_exponents(self) -> Exp:
        return tuple(max(e[i] for e, _ in self._terms) for i in range(self.nvars))

    # ring operations
    def __add__(self, other):
        try:
            o = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return type(self)._from_sorted(sorted((e, c) for e, c in acc.items() if c))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_sorted((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        try:
            o = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _Laurent) and not isinstance(other, type(self)):
            return NotImplemented
        try:
            o = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        if len(o) == 1 and o._terms[0][0] == (0,) * self.nvars:
            c = o._terms[0][1]
            return type(self)._from_sorted((e, c * x) for e, x in self._terms)
        acc: Dict[Exp, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in o._terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return type(self)._from_sorted(sorted((e, c) for e, c in acc.items() if c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            (e, c), = self._terms
            return type(self)._from_sorted([(tuple(k * x for x in e), c ** k)])
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp) -> "_Laurent":
        """Multiply by the monomial with exponent ``exp``."""
        exp = self._key(exp)
        return type(self)._from_sorted(
            (tuple(x + y for x, y in zip(e, exp)), c) for e, c in self._terms
        )

    def divmono(self, other) -> "_Laurent":
        """Divide by a monomial; anything else is an error (use :class:`Frac`)."""
        o = type(self).coerce(other)
        if not o.is_monomial():
            raise NotDivisible(f"{o} is not a monomial")
        (e, c), = o._terms
        return type(self)._from_sorted(
            (tuple(x - y for x, y in zip(ee, e)), cc / c) for ee, cc in self._terms
        )

    def exact_div(self, other) -> "_Laurent":
        """Quotient ``self / other``, raising :class:`NotDivisible` on a remainder.

        Leading terms are cancelled in lex order.  Any quotient term must lie in
        the exponent box ``[min(f) - min(g), max(f) - max(g)]``, which bounds
        the loop.
        """
        g = type(self).coerce(other)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if g.is_monomial():
            return self.divmono(g)
        lo = tuple(a - b for a, b in zip(self.min_exponents(), g.min_exponents()))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), g.max_exponents()))
        if any(l > h for l, h in zip(lo, hi)):
            raise NotDivisible("exponent span too small")
        glead_e, glead_c = g._terms[-1]
        rem = dict(self._terms)
        quot: Dict[Exp, Fraction] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(x - y for x, y in zip(e, glead_e))
            if any(t < l or t > h for t, l, h in zip(qe, lo, hi)):
                raise NotDivisible(f"{self} is not divisible by {g}")
            qc = c / glead_c
            quot[qe] = qc
            for ge, gc in g._terms:
                k = tuple(x + y for x, y in zip(qe, ge))
                v = rem.get(k, Fraction(0)) - qc * gc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return type(self)(quot)

    def divides(self, other) -> bool:
        try:
            type(self).coerce(other).exact_div(self)
        except NotDivisible:
            return False
        return True

    def content_monomial(self) -> "_Laurent":
        """Monomial ``c*x^m`` with ``m`` the exponent-wise minimum, ``c`` the top coefficient."""
        if self.is_zero():
            return type(self).constant(1)
        return type(self).monomial(self.min_exponents(), self._terms[-1][1])

    # comparisons
    def __eq__(self, other):
        if isinstance(other, _Laurent) and not isinstance(other, type(self)):
            return False
        try:
            o = type(self).coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, self._terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def _mono_str(self, e: Exp) -> str:
        return "*".join(f"{n}^{x}" for n, x in zip(self.names, e))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(reversed(self._terms)):
            body = f"{abs(c)}*{self._mono_str(e)}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


class LaurentPoly(_Laurent):
    """One-variable Laurent polynomial with rational coefficients.

    ``var`` only affects rendering; equality ignores it.
    """

    __slots__ = ("var",)
    nvars = 1

    def __init__(self, terms=None, var: str = "q"):
        super().__init__(terms)
        object.__setattr__(self, "var", var)

    @property
    def names(self):
        return (self.var,)

    @classmethod
    def _from_sorted(cls, items, var="q"):
        obj = super()._from_sorted(items)
        object.__setattr__(obj, "var", var)
        return obj

    def _wrap(self, result):
        if isinstance(result, LaurentPoly):
            object.__setattr__(result, "var", self.var)
        return result

    def __add__(self, other):
        return self._wrap(super().__add__(other))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(super().__neg__())

    def __sub__(self, other):
        return self._wrap(super().__sub__(other))

    def __rsub__(self, other):
        return self._wrap(super().__rsub__(other))

    def __mul__(self, other):
        return self._wrap(super().__mul__(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        return self._wrap(super().__pow__(k))

    def shift(self, exp):
        return self._wrap(super().shift(exp))

    def divmono(self, other):
        return self._wrap(super().divmono(other))

    def exact_div(self, other):
        return self._wrap(super().exact_div(other))

    @classmethod
    def constant(cls, c=1, var: str = "q") -> "LaurentPoly":
        return cls({(0,): c}, var=var)

    @classmethod
    def gen(cls, var: str = "q") -> "LaurentPoly":
        return cls({1: 1}, var=var)

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, object], var: str = "q") -> "LaurentPoly":
        return cls({(e,): c for e, c in coeffs.items()}, var=var)

    def coeffs(self) -> Dict[int, Fraction]:
        return {e[0]: c for e, c in self._terms}

    def degree_span(self) -> Tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree span")
        return self._terms[0][0][0], self._terms[-1][0][0]

    def evaluate(self, val):
        """Evaluate at ``val`` (a ring element: GoldenNumber, Fraction, LaurentPoly...)."""
        if isinstance(val, (int, Rational)):
            val = Fraction(val)
        if not val:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        total = val ** 0 * 0
        inv = None
        for e, c in self._terms:
            k = e[0]
            if k < 0:
                if inv is None:
                    inv = val ** -1
                total = total + (inv ** (-k)) * c
            else:
                total = total + (val ** k) * c
        return total

    def substitute_power(self, k: int) -> "LaurentPoly":
        """``p(x) -> p(x^k)``."""
        return type(self)._from_sorted(
            sorted(((e[0] * k,), c) for e, c in self._terms), var=self.var
        )

    def with_var(self, var: str) -> "LaurentPoly":
        return type(self)._from_sorted(self._terms, var=var)


class BiLaurent(_Laurent):
    """Laurent polynomial in ``Q`` and ``a`` (``a`` stands for ``Q^(d-1)``)."""

    __slots__ = ()
    nvars = 2
    names = ("Q", "a")

    @classmethod
    def Q(cls) -> "BiLaurent":
        return cls({(1, 0): 1})

    @classmethod
    def A(cls) -> "BiLaurent":
        return cls({(0, 1): 1})

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "BiLaurent":
        return cls({(e[0], 0): c for e, c in p.items()})

    def specialize_a(self, k: int, var: str = "Q") -> LaurentPoly:
        """Substitute ``a -> Q^k``, landing in :class:`LaurentPoly`."""
        acc: Dict[int, Fraction] = {}
        for (i, j), c in self._terms:
            acc[i + k * j] = acc.get(i + k * j, Fraction(0)) + c
        return LaurentPoly.from_coeffs(acc, var=var)

    def invert_variables(self) -> "BiLaurent":
        """``(Q, a) -> (1/Q, 1/a)``."""
        return BiLaurent({(-i, -j): c for (i, j), c in self._terms})

    def evaluate(self, Qval, aval):
        total = Qval ** 0 * 0
        for (i, j), c in self._terms:
            total = total + (Qval ** i) * (aval ** j) * c
        return total


# ---------------------------------------------------------------------------
# Fractions of Laurent polynomials
# ---------------------------------------------------------------------------


class Frac:
    """``num / den`` with polynomial parts of a common type.

    No gcds are computed.  Monomial content is moved into the numerator and
    obvious divisibility is exploited when adding, which keeps denominators
    to products of the few factors that actually occur.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            if isinstance(num, Frac):
                n, d = num.num, num.den
            else:
                n, d = num, type(num).constant(1)
        else:
            kind = type(num) if isinstance(num, _Laurent) else type(den)
            n, d = kind.coerce(num), kind.coerce(den)
        if not isinstance(n, _Laurent):
            raise TypeError("Frac needs polynomial parts")
        if d.is_zero():
            raise ZeroDivisionError("Frac with zero denominator")
        if d.is_monomial():
            n, d = n.divmono(d), type(d).constant(1)
            if isinstance(n, LaurentPoly):
                d = d.with_var(n.var)
        else:
            m = d.content_monomial()
            n, d = n.divmono(m), d.divmono(m)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    @property
    def kind(self):
        return type(self.num)

    def _coerce(self, other) -> "Frac":
        if isinstance(other, Frac):
            return other
        if isinstance(other, _Laurent):
            return Frac(other)
        return Frac(self.num * 0 + other)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        if self.den == o.den:
            return Frac(self.num + o.num, self.den)
        for a, b in ((self, o), (o, self)):
            try:
                k = b.den.exact_div(a.den)
            except NotDivisible:
                continue
            return Frac(a.num * k + b.num, b.den)
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return Frac(self.num * 0)
        n, d = self.num * o.num, self.den * o.den
        return Frac(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Frac(self.num ** k, self.den ** k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # only reliable when already cleared; used for dict keys sparingly
        c = self.cleared()
        return hash(c) if c is not None else hash((self.num, self.den))

    def cleared(self) -> Optional[_Laurent]:
        """The polynomial equal to this fraction, or ``None`` if it is not one."""
        try:
            return self.num.exact_div(self.den)
        except NotDivisible:
            return None

    def map_parts(self, f) -> "Frac":
        return Frac(f(self.num), f(self.den))

    def evaluate(self, *vals):
        den = self.den.evaluate(*vals)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(*vals) / den

    def __repr__(self):
        return f"Frac({str(self)!r})"

    def __str__(self):
        c = self.cleared()
        if c is not None:
            return str(c)
        return f"({self.num}) / ({self.den})"


_TERM_RE = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)\*(\w+)\^(-?\d+)")


def parse_laurent(text: str, var: Optional[str] = None) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``."""
    s = text.strip()
    if s == "0":
        return LaurentPoly(var=var or "q")
    pos = 0
    coeffs: Dict[int, Fraction] = {}
    seen_var = var
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse Laurent polynomial near {s[pos:]!r}")
        sign, c, v, e = m.groups()
        if not first and not sign:
            raise ValueError(f"missing sign in {text!r}")
        if seen_var is None:
            seen_var = v
        elif v != seen_var:
            raise ValueError(f"mixed variables {seen_var!r} and {v!r}")
        val = Fraction(c) * (-1 if sign == "-" else 1)
        coeffs[int(e)] = coeffs.get(int(e), Fraction(0)) + val
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
        first = False
    return LaurentPoly.from_coeffs(coeffs, var=seen_var or "q")
