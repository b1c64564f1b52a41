"""Dense univariate polynomials over any FieldDesc.

Coefficients are stored ascending (index i holds the coefficient of X^i)
and trimmed, so the top stored coefficient is nonzero unless the polynomial
is zero.  The zero polynomial has degree -1, which stands in for minus
infinity in degree comparisons.

Two text formats:
  term format   "x^4+x^3+1", "2*x^2+x+2", "(1,0)*x+(0,1)"  (canonical output
                is descending with explicit '^')
  comma format  "1,1,0,1" == x^3+x+1, ascending, for machine interchange
"""

from __future__ import annotations

import re

from .errors import (
    ConstantPolynomial,
    DivisionByZeroPoly,
    FieldMismatch,
    NotCoprime,
    ZeroConstantTerm,
    ZeroDenominator,
)
from .numutil import factorize, prime_divisors


class Poly:
    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs=()):
        cs = [field.element(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def x_power(cls, field, n: int):
        return cls(field, (field.zero(),) * n + (field.one(),))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (minus-infinity sentinel)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def leading(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def constant_term(self):
        return self.coeff(0)

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c):
        c = self.field.element(c)
        return Poly(self.field, [a * c for a in self.coeffs])

    def shift(self, k: int):
        """Multiply by X^k."""
        if self.is_zero() or k == 0:
            return self if k >= 0 else self
        return Poly(self.field, (self.field.zero(),) * k + self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        acc = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        rem = list(self.coeffs)
        dv = other.degree
        lead_inv = other.coeffs[-1].inverse()
        q = [self.field.zero()] * (self.degree - dv + 1)
        for i in range(self.degree - dv, -1, -1):
            c = rem[dv + i] * lead_inv
            q[i] = c
            if not c.is_zero():
                for j in range(dv + 1):
                    rem[i + j] = rem[i + j] - c * other.coeffs[j]
        return Poly(self.field, q), Poly(self.field, rem[:dv])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def evaluate(self, x):
        """Horner evaluation at a field element."""
        x = self.field.element(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.evaluate(x)

    # -- reversals -------------------------------------------------------

    def reversal(self, formal_degree: int | None = None):
        """X^D * f(1/X) with D >= deg f: the raw coefficient reversal."""
        d = self.degree
        if formal_degree is None:
            formal_degree = d
        if formal_degree < d:
            raise ValueError("formal degree below actual degree")
        out = [self.field.zero()] * (formal_degree + 1)
        for i, c in enumerate(self.coeffs):
            out[formal_degree - i] = c
        return Poly(self.field, out)

    def reciprocal(self):
        """Monic reciprocal X^d f(1/X) / f(0)."""
        if self.degree < 1:
            raise ConstantPolynomial("reciprocal requires degree >= 1")
        if self.coeffs[0].is_zero():
            raise ZeroConstantTerm("reciprocal requires f(0) != 0")
        return self.reversal().monic()

    def compose(self, g: "Poly") -> "Poly":
        """h(g(X)) by Horner."""
        self._check(g)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly.constant(self.field, c)
        return acc

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((hash(self.field), self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    # -- text ----------------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        prime = self.field.base is None
        one = self.field.one()
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            ctext = self.field.format_element(c)
            if k == 0:
                terms.append(ctext)
            else:
                xpart = "x" if k == 1 else f"x^{k}"
                if prime and c == one:
                    terms.append(xpart)
                else:
                    terms.append(f"{ctext}*{xpart}")
        return "+".join(terms)

    def to_coeff_text(self) -> str:
        """Comma format, ascending."""
        if self.is_zero():
            return "0"
        return ",".join(self.field.format_element(c) for c in self.coeffs)

    _TERM_RE = re.compile(r"^(?P<coef>.*?)\*?x(?:\^(?P<exp>\d+))?$", re.IGNORECASE)

    @classmethod
    def parse(cls, field, text: str) -> "Poly":
        from .gf import split_outside_parens

        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if "x" not in s and "X" not in s:
            parts = split_outside_parens(s, ",")
            return cls(field, [field.parse_element(t) for t in parts])
        # fold binary minus into per-term sign markers at depth zero
        out = []
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "-" and depth == 0 and i > 0:
                out.append("+-")
            else:
                out.append(ch)
        coeffs: dict[int, object] = {}
        for term in split_outside_parens("".join(out), "+"):
            if not term:
                raise ValueError(f"malformed polynomial text {text!r}")
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            m = cls._TERM_RE.match(term)
            if m:
                coef_text = m.group("coef")
                exp = int(m.group("exp")) if m.group("exp") else 1
                coef = field.one() if coef_text == "" else field.parse_element(coef_text)
            else:
                exp = 0
                coef = field.parse_element(term)
            if neg:
                coef = -coef
            coeffs[exp] = coeffs.get(exp, field.zero()) + coef
        top = max(coeffs)
        return cls(field, [coeffs.get(i, field.zero()) for i in range(top + 1)])


# --------------------------------------------------------------------------
# module-level operations
# --------------------------------------------------------------------------

def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(a: Poly, e: int, f: Poly) -> Poly:
    """a^e mod f by binary exponentiation."""
    if e < 0:
        raise ValueError("negative exponent")
    acc = Poly.one(a.field) % f
    base = a % f
    while e:
        if e & 1:
            acc = acc * base % f
        base = base * base % f
        e >>= 1
    return acc


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: X^(Q^d) = X mod f and gcd(X^(Q^(d/l)) - X, f) = 1 for
    every prime l dividing d = deg f."""
    if f.degree < 1:
        raise ConstantPolynomial("irreducibility is defined for degree >= 1")
    f = f.monic()
    q = f.field.order
    d = f.degree
    x = Poly.x(f.field)
    for ell in prime_divisors(d):
        g = pow_mod(x, q ** (d // ell), f)
        if gcd(g - x, f).degree != 0:
            return False
    return pow_mod(x, q**d, f) == x % f


def is_primitive(f: Poly) -> bool:
    """Irreducible with the class of X of order Q^d - 1 in field[X]/(f)."""
    if f.degree < 1:
        raise ConstantPolynomial("primitivity is defined for degree >= 1")
    if f.coeffs[0].is_zero():
        raise ZeroConstantTerm("primitivity requires f(0) != 0")
    if not is_irreducible(f):
        return False
    f = f.monic()
    r = f.field.order ** f.degree - 1
    x = Poly.x(f.field)
    one = Poly.one(f.field)
    for ell in sorted(factorize(r)):
        if pow_mod(x, r // ell, f) == one:
            return False
    return True


def rational_substitute(h: Poly, e: Poly, g: Poly) -> Poly:
    """g(X)^m * h(e(X)/g(X)) for monic h of degree m, always a polynomial.

    Horner accumulation acc <- acc*e + h_k * g^(m-k); no rational-function
    intermediates.
    """
    h._check(e)
    h._check(g)
    if g.is_zero():
        raise ZeroDenominator("zero denominator polynomial")
    if h.degree < 1:
        raise ConstantPolynomial("h must have degree >= 1")
    if not h.is_monic():
        raise ValueError("h must be monic")
    if gcd(e, g).degree != 0:
        raise NotCoprime("e and g share a nonconstant factor")
    m = h.degree
    g_pows = [Poly.one(h.field)]
    for _ in range(m):
        g_pows.append(g_pows[-1] * g)
    acc = Poly.zero(h.field)
    for k in range(m, -1, -1):
        acc = acc * e + g_pows[m - k].scale(h.coeffs[k])
    return acc


def compose(h: Poly, g: Poly) -> Poly:
    return h.compose(g)


def is_form_AB(g: Poly) -> bool:
    """True iff g = X*A(X^p) + B(X^p): every exponent is 0 or 1 mod p."""
    p = g.field.characteristic
    return all(
        c.is_zero() or i % p in (0, 1) for i, c in enumerate(g.coeffs)
    )


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def monic_polys(field, d: int):
    """All monic polynomials of degree d, ascending coefficient code."""
    q = field.order
    one = field.one()
    for code in range(q**d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(field.element_from_code(c % q))
            c //= q
        yield Poly(field, coeffs + [one])


def irreducible_polys(field, d: int):
    for f in monic_polys(field, d):
        if is_irreducible(f):
            yield f
