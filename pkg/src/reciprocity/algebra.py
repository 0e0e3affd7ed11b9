"""Exact univariate algebra over the rationals.

Three value types live here:

* :class:`Polynomial` -- dense coefficient tuple, index = degree.
* :class:`Quasipolynomial` -- one polynomial constituent per residue class.
* :class:`RationalGF` -- ``num(z) / prod_i (1 - z**e_i)``, the shape every
  generating function in this package takes.

All coefficients are :class:`fractions.Fraction`; nothing here ever touches a
float.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"refusing to convert {type(x).__name__} to an exact rational")


class Polynomial:
    """Immutable univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number], lead: Number = 1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    # basic queries

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def low_degree(self) -> int:
        """Exponent of the lowest nonzero term (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    # arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading()
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(q), Polynomial(rem[: other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True iff ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``z**k`` (k >= 0)."""
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """``z**degree * p(1/z)``; ``degree`` defaults to ``self.degree``."""
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [Fraction(0)] * (degree + 1 - len(self.coeffs))
        return Polynomial(cs[::-1])

    def substitute_linear(self, a: Number, b: Number) -> "Polynomial":
        """The polynomial ``t -> p(a*t + b)``."""
        inner = Polynomial([b, a])
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def __call__(self, t):
        return poly_eval(self, t)

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    # serialization

    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(Fraction(s) for s in data)


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def poly_eval(p: Polynomial, t: Number) -> Fraction:
    """Horner evaluation at an integer or rational argument (negative allowed)."""
    t = _frac(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_interpolate(points: Sequence[tuple[Number, Number]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    if not points:
        raise ValueError("need at least one point to interpolate")
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be pairwise distinct")
    table = [_frac(y) for _, y in points]
    n = len(xs)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    p = Polynomial([newton[-1]])
    for k in range(n - 2, -1, -1):
        p = p * Polynomial([-xs[k], 1]) + newton[k]
    return p


def binomial_poly(shift: Number, k: int) -> Polynomial:
    """The polynomial ``binom(t + shift, k)`` in ``t``."""
    p = Polynomial([1])
    for i in range(k):
        p = p * Polynomial([_frac(shift) - i, 1])
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return p * Fraction(1, fact)


class Quasipolynomial:
    """Function ``t -> constituents[t mod period](t)``.

    The period is kept exactly as given; equal constituents are allowed.
    """

    __slots__ = ("period", "constituents")

    def __init__(self, constituents: Sequence[Polynomial]):
        constituents = tuple(_as_poly(c) for c in constituents)
        if not constituents:
            raise ValueError("a quasipolynomial needs at least one constituent")
        object.__setattr__(self, "period", len(constituents))
        object.__setattr__(self, "constituents", constituents)

    def __setattr__(self, name, value):
        raise AttributeError("Quasipolynomial is immutable")

    def __call__(self, t: int) -> Fraction:
        if not isinstance(t, int):
            raise TypeError("quasipolynomials are evaluated at integers")
        return poly_eval(self.constituents[t % self.period], t)

    def is_polynomial(self) -> bool:
        return all(c == self.constituents[0] for c in self.constituents)

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("constituents differ; not a polynomial")
        return self.constituents[0]

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.constituents)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = Quasipolynomial([other])
        if not isinstance(other, Quasipolynomial):
            return NotImplemented
        # compare as functions on Z: expand both to the common period
        p = lcm(self.period, other.period)
        return all(
            self.constituents[k % self.period] == other.constituents[k % other.period]
            for k in range(p)
        )

    def __hash__(self):
        return hash(("Quasipolynomial", self.constituents))

    def __repr__(self):
        return f"Quasipolynomial(period={self.period}, {list(map(str, self.constituents))})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.constituents[0])
        parts = [f"[t = {k} mod {self.period}] {c}" for k, c in enumerate(self.constituents)]
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {"period": self.period, "constituents": [c.to_json() for c in self.constituents]}


# ---------------------------------------------------------------------------
# rational generating functions


def _one_minus_z(e: int) -> Polynomial:
    return Polynomial([1] + [0] * (e - 1) + [-1])


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n) if n % k == 0]


class RationalGF:
    """``numerator(z) / prod_i (1 - z**e_i)`` kept in canonical form.

    Canonical form: exponents sorted ascending; any factor ``1 - z**e`` that
    divides the numerator is cancelled, and any factor ``(1-z**e)/(1-z**f)``
    (``f`` a proper divisor of ``e``) that divides it is cancelled by
    replacing ``e`` with ``f``. Repeat until nothing changes.
    """

    __slots__ = ("numerator", "den")

    def __init__(self, numerator, den: Iterable[int] = (), *, reduce: bool = True):
        num = _as_poly(numerator)
        den = list(den)
        if any((not isinstance(e, int)) or e <= 0 for e in den):
            raise ValueError("denominator exponents must be positive integers")
        if reduce:
            num, den = _reduce(num, den)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "den", tuple(sorted(den)))

    def __setattr__(self, name, value):
        raise AttributeError("RationalGF is immutable")

    def denominator(self) -> Polynomial:
        d = Polynomial([1])
        for e in self.den:
            d = d * _one_minus_z(e)
        return d

    def series(self, n: int) -> list[int]:
        return gf_series_prefix(self, n)

    def reciprocal(self) -> "RationalGF":
        return gf_reciprocal(self)

    def __add__(self, other: "RationalGF") -> "RationalGF":
        common = Counter(self.den) | Counter(other.den)
        a = self.numerator * _missing(common, self.den)
        b = other.numerator * _missing(common, other.den)
        return RationalGF(a + b, common.elements())

    def __neg__(self):
        return RationalGF(-self.numerator, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalGF(self.numerator * _as_poly(other), self.den)
        if isinstance(other, RationalGF):
            return RationalGF(self.numerator * other.numerator, self.den + other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.numerator == other.numerator and self.den == other.den

    def __hash__(self):
        return hash(("RationalGF", self.numerator, self.den))

    def __repr__(self):
        return f"RationalGF({self.numerator.to_json()}, den={list(self.den)})"

    def __str__(self):
        num = self.numerator.format("z")
        if not self.den:
            return num
        factors = Counter(self.den)
        den = "".join(
            (f"(1 - z^{e})" if e > 1 else "(1 - z)") + (f"^{m}" if m > 1 else "")
            for e, m in sorted(factors.items())
        )
        if sum(1 for c in self.numerator.coeffs if c) > 1:
            num = f"({num})"
        return f"{num} / ({den})" if len(factors) > 1 or max(factors.values()) > 1 else f"{num} / {den}"

    def to_json(self) -> dict:
        return {"num": self.numerator.to_json(), "den": list(self.den)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalGF":
        return cls(Polynomial.from_json(data["num"]), data["den"])


def _missing(common: Counter, den: Sequence[int]) -> Polynomial:
    rest = common - Counter(den)
    p = Polynomial([1])
    for e in rest.elements():
        p = p * _one_minus_z(e)
    return p


def _reduce(num: Polynomial, den: list[int]) -> tuple[Polynomial, list[int]]:
    if num.is_zero():
        return num, []
    changed = True
    while changed:
        changed = False
        for e in sorted(set(den), reverse=True):
            q, r = divmod(num, _one_minus_z(e))
            if r.is_zero():
                num = q
                den.remove(e)
                changed = True
                break
            for f in _divisors(e):
                cyc = _one_minus_z(e) // _one_minus_z(f)
                q, r = divmod(num, cyc)
                if r.is_zero():
                    num = q
                    den.remove(e)
                    den.append(f)
                    changed = True
                    break
            if changed:
                break
    return num, den


def gf_series_prefix(g: RationalGF, n: int) -> list[int]:
    """Coefficients of ``z**0 .. z**n`` of the Maclaurin expansion of ``g``.

    Long division by each ``1 - z**e`` in turn, i.e. the recurrence
    ``a_k <- a_k + a_{k-e}``, on the truncated numerator.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [g.numerator.coeff(k) for k in range(n + 1)]
    for e in g.den:
        for k in range(e, n + 1):
            coeffs[k] += coeffs[k - e]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError(f"series coefficient {c} is not an integer")
        out.append(int(c))
    return out


def gf_reciprocal(g: RationalGF) -> RationalGF:
    """Canonical form of ``g(1/z)`` over the same denominator.

    Uses ``1 - z**-e = -z**-e (1 - z**e)``, so
    ``g(1/z) = (-1)**k z**(sum e - deg num) rev(num)(z) / prod (1 - z**e)``.
    Requires ``deg num <= sum e`` so the result is again a polynomial over
    the product.
    """
    num = g.numerator
    if num.is_zero():
        return g
    total = sum(g.den)
    if num.degree > total:
        raise ValueError("g(1/z) has a pole at 0; not representable over prod(1 - z^e)")
    new = num.reversed().shift(total - num.degree)
    if len(g.den) % 2:
        new = -new
    return RationalGF(new, g.den)


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """Equality as rational functions, by exact cross-multiplication."""
    return a.numerator * b.denominator() == b.numerator * a.denominator()


def series_to_gf(prefix: Sequence[int], degree: int, den: Sequence[int]) -> RationalGF:
    """Numerator ``prefix * prod(1 - z^e)`` truncated to ``degree``.

    Exact when the true numerator has degree <= ``degree`` and ``prefix``
    has at least ``degree + 1`` terms.
    """
    if len(prefix) < degree + 1:
        raise ValueError("prefix too short for requested numerator degree")
    d = Polynomial([1])
    for e in den:
        d = d * _one_minus_z(e)
    full = Polynomial(prefix) * d
    return RationalGF(Polynomial(full.coeff(k) for k in range(degree + 1)), den)


def neg_z_power(k: int) -> Polynomial:
    """The monomial ``(-z)**k``."""
    return Polynomial.monomial(k, (-1) ** k)
