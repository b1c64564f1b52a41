"""Finite fields F_p, F_{p^r} and two-level towers F_q <= F_{q^m}.

Elements are coefficient vectors over the base field in ascending power
order (the polynomial basis 1, x, ..., x^{d-1} of the chosen modulus).
A prime-field element is the length-1 vector (c,).  Every element also has
an integer code in [0, |F|): the base-|base| expansion of its coefficient
codes, constant coefficient least significant.  Codes give the canonical
enumeration order and feed the table-driven kernels.

Field descriptors are immutable and cached, so identical construction
arguments return the identical object.
"""

from __future__ import annotations

from functools import lru_cache

from . import polyring
from .errors import (
    FieldMismatch,
    NonPrimeCharacteristic,
    ReducibleModulus,
    TsrError,
    ZeroInversion,
)
from .numutil import factorize, is_prime

ORDER_CAP = 2**31  # hard cap: (Q-1) must stay trial-division factorable


class FieldElement:
    """Immutable element of a FieldDesc."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        if self.field.base is None:
            return self.coeffs[0] == 0
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.base is None:
            return FieldElement(f, ((self.coeffs[0] + other.coeffs[0]) % f.characteristic,))
        return FieldElement(f, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if f.base is None:
            return FieldElement(f, ((self.coeffs[0] - other.coeffs[0]) % f.characteristic,))
        return FieldElement(f, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        f = self.field
        if f.base is None:
            return FieldElement(f, ((-self.coeffs[0]) % f.characteristic,))
        return FieldElement(f, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.base is None:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % f.characteristic,))
        prod = _list_mul(f.base, self.coeffs, other.coeffs)
        return FieldElement(f, _list_reduce(f, prod))

    def inverse(self):
        """Multiplicative inverse; extended gcd against the modulus."""
        if self.is_zero():
            raise ZeroInversion("zero has no inverse")
        f = self.field
        if f.base is None:
            return FieldElement(f, (pow(self.coeffs[0], f.characteristic - 2, f.characteristic),))
        return FieldElement(f, _list_inverse(f, self.coeffs))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.field.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((hash(self.field), self.coeffs))
        return self._hash

    def __repr__(self):
        return f"FieldElement({self.field.spec_string()!r}, {self.field.format_element(self)})"

    def __str__(self):
        return self.field.format_element(self)


class FieldDesc:
    """Immutable finite-field descriptor.

    Attributes:
        characteristic: the prime p.
        base: the base field (None for a prime field).
        degree: extension degree over the base (1 for a prime field).
        modulus: monic irreducible Poly of that degree over the base
            (None for a prime field).
        order: cardinality p^(absolute degree).
    """

    def __init__(self, characteristic, degree, modulus, base, _token=None):
        if _token is not _CONSTRUCT_TOKEN:
            raise TypeError("use construct_field() / extension_field()")
        self.characteristic = characteristic
        self.degree = degree
        self.modulus = modulus
        self.base = base
        self.order = characteristic if base is None else base.order**degree
        self.absolute_degree = 1 if base is None else base.absolute_degree * degree
        self._zero = None
        self._one = None
        self._hash = hash(
            (
                characteristic,
                degree,
                None if modulus is None else tuple(modulus.coeffs),
                None if base is None else hash(base),
            )
        )

    # -- canonical elements ---------------------------------------------

    def zero(self):
        if self._zero is None:
            if self.base is None:
                self._zero = FieldElement(self, (0,))
            else:
                z = self.base.zero()
                self._zero = FieldElement(self, (z,) * self.degree)
        return self._zero

    def one(self):
        if self._one is None:
            if self.base is None:
                self._one = FieldElement(self, (1,))
            else:
                row = [self.base.one()] + [self.base.zero()] * (self.degree - 1)
                self._one = FieldElement(self, row)
        return self._one

    # -- coercion ---------------------------------------------------------

    def element(self, v):
        """Coerce v (int, coefficient sequence, base element, str) into this field."""
        if isinstance(v, FieldElement):
            if v.field == self:
                return v
            if self.base is not None and v.field == self.base:
                return self.embed(v)
            raise FieldMismatch("element belongs to a different field")
        if isinstance(v, str):
            return self.parse_element(v)
        if isinstance(v, int):
            if self.base is None:
                return FieldElement(self, (v % self.characteristic,))
            return self.embed_scalar(v)
        if isinstance(v, (tuple, list)):
            if self.base is None:
                if len(v) != 1:
                    raise ValueError("prime-field vectors have length 1")
                return self.element(v[0])
            if len(v) > self.degree:
                raise ValueError("coefficient vector longer than extension degree")
            coeffs = [self.base.element(c) for c in v]
            coeffs += [self.base.zero()] * (self.degree - len(coeffs))
            return FieldElement(self, coeffs)
        raise TypeError(f"cannot coerce {type(v).__name__} into a field element")

    def embed(self, a: FieldElement) -> FieldElement:
        """Constant-vector injection of a base-field element."""
        if self.base is None or a.field != self.base:
            raise FieldMismatch("embed expects an element of the base field")
        row = [a] + [self.base.zero()] * (self.degree - 1)
        return FieldElement(self, row)

    def embed_scalar(self, v: int) -> FieldElement:
        """Integer via the prime subfield."""
        if self.base is None:
            return self.element(v)
        return self.embed(self.base.embed_scalar(v) if self.base.base is not None else self.base.element(v))

    # -- codes ------------------------------------------------------------

    def element_code(self, a: FieldElement) -> int:
        if a.field != self:
            raise FieldMismatch("element of a different field")
        if self.base is None:
            return a.coeffs[0]
        b = self.base.order
        code = 0
        for c in reversed(a.coeffs):
            code = code * b + self.base.element_code(c)
        return code

    def element_from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.order:
            raise ValueError("code out of range")
        if self.base is None:
            return FieldElement(self, (code,))
        b = self.base.order
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(self.base.element_from_code(code % b))
            code //= b
        return FieldElement(self, coeffs)

    def __iter__(self):
        return iterate_field(self)

    # -- text -------------------------------------------------------------

    def format_element(self, a: FieldElement) -> str:
        if self.base is None:
            return str(a.coeffs[0])
        return "(" + ",".join(self.base.format_element(c) for c in a.coeffs) + ")"

    def parse_element(self, s: str) -> FieldElement:
        s = s.strip()
        if self.base is None:
            return self.element(int(s))
        if s.startswith("(") and s.endswith(")"):
            parts = split_outside_parens(s[1:-1], ",")
            if len(parts) != self.degree:
                raise ValueError(
                    f"expected {self.degree} coefficients, got {len(parts)}: {s!r}"
                )
            return FieldElement(self, [self.base.parse_element(t) for t in parts])
        return self.embed_scalar(int(s))

    def spec_string(self) -> str:
        if self.base is None:
            return str(self.characteristic)
        if self.base.base is None:
            return f"{self.characteristic}^{self.degree}:{self.modulus.to_text()}"
        raise TsrError("tower fields have no spec string")

    # -- construction helpers ----------------------------------------------

    def extension(self, m: int, modulus=None) -> "FieldDesc":
        """The extension of degree m of this field (tower when self is not prime)."""
        return extension_field(self, m, modulus)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldDesc):
            return NotImplemented
        return (
            self.characteristic == other.characteristic
            and self.degree == other.degree
            and self.base == other.base
            and (
                (self.modulus is None and other.modulus is None)
                or (
                    self.modulus is not None
                    and other.modulus is not None
                    and self.modulus.coeffs == other.modulus.coeffs
                )
            )
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.base is None:
            return f"FieldDesc(F_{self.order})"
        return f"FieldDesc(F_{self.order} over F_{self.base.order})"


_CONSTRUCT_TOKEN = object()


# --------------------------------------------------------------------------
# list-based polynomial helpers over a base field (extension arithmetic)
# --------------------------------------------------------------------------

def _list_mul(base, u, v):
    out = [base.zero()] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            out[i + j] = out[i + j] + a * b
    return out


def _list_reduce(field, r):
    """Reduce a coefficient list modulo the (monic) field modulus."""
    d = field.degree
    mod = field.modulus.coeffs  # length d+1, monic
    r = list(r)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c.is_zero():
            continue
        for j in range(d):
            r[i - d + j] = r[i - d + j] - c * mod[j]
        r[i] = field.base.zero()
    out = r[:d]
    out += [field.base.zero()] * (d - len(out))
    return out


def _list_deg(u):
    for i in range(len(u) - 1, -1, -1):
        if not u[i].is_zero():
            return i
    return -1


def _list_divmod(base, u, v):
    du, dv = _list_deg(u), _list_deg(v)
    if dv < 0:
        raise ZeroDivisionError
    q = [base.zero()] * max(du - dv + 1, 1)
    r = list(u[: du + 1]) if du >= 0 else [base.zero()]
    lead_inv = v[dv].inverse()
    for i in range(du - dv, -1, -1):
        c = r[dv + i] * lead_inv
        q[i] = c
        if not c.is_zero():
            for j in range(dv + 1):
                r[i + j] = r[i + j] - c * v[j]
    return q, r[:dv] if dv > 0 else [base.zero()]


def _list_inverse(field, u):
    """Inverse of u modulo the field modulus, by extended Euclid."""
    base = field.base
    r0 = list(field.modulus.coeffs)
    r1 = list(u)
    t0 = [base.zero()]
    t1 = [base.one()]
    while _list_deg(r1) > 0:
        q, rem = _list_divmod(base, r0, r1)
        r0, r1 = r1, rem
        qt = _list_mul(base, q, t1)
        nt = [base.zero()] * max(len(t0), len(qt))
        for i, c in enumerate(t0):
            nt[i] = nt[i] + c
        for i, c in enumerate(qt):
            nt[i] = nt[i] - c
        t0, t1 = t1, nt
    c = r1[_list_deg(r1)]  # nonzero constant: modulus is irreducible
    cinv = c.inverse()
    out = [x * cinv for x in t1[: field.degree]]
    out += [base.zero()] * (field.degree - len(out))
    return out


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldDesc:
    return FieldDesc(p, 1, None, None, _token=_CONSTRUCT_TOKEN)


def construct_field(p: int, r: int = 1, modulus=None) -> FieldDesc:
    """Build F_{p^r}; picks the lexicographically least modulus when omitted.

    Modulus tuples (c_0, ..., c_{r-1}) are compared left to right, constant
    coefficient first.
    """
    if p < 2 or not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    base = _prime_field(p)
    if r == 1:
        if modulus is not None:
            raise ValueError("prime fields take no modulus")
        return base
    return extension_field(base, r, modulus)


def extension_field(base: FieldDesc, m: int, modulus=None) -> FieldDesc:
    """Degree-m extension of base; at most a two-level tower over the prime field."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if m == 1 and modulus is None:
        return base
    if base.base is not None and base.base.base is not None:
        raise TsrError("towers deeper than two levels are not supported")
    if base.order**m > ORDER_CAP:
        raise TsrError(f"field order {base.order}**{m} exceeds the 2^31 cap")
    if modulus is None:
        modulus = find_default_modulus(base, m)
    else:
        modulus = _validate_modulus(base, m, modulus)
    return _extension_cached(base, m, modulus)


@lru_cache(maxsize=None)
def _extension_cached(base, m, modulus) -> FieldDesc:
    return FieldDesc(base.characteristic, m, modulus, base, _token=_CONSTRUCT_TOKEN)


def _validate_modulus(base, m, modulus):
    if not isinstance(modulus, polyring.Poly):
        modulus = polyring.Poly(base, modulus)
    if modulus.field != base:
        raise FieldMismatch("modulus must live over the base field")
    if modulus.degree != m or not modulus.is_monic():
        raise ValueError(f"modulus must be monic of degree {m}")
    if not polyring.is_irreducible(modulus):
        raise ReducibleModulus(f"{modulus.to_text()} factors over the base field")
    return modulus


@lru_cache(maxsize=None)
def find_default_modulus(base: FieldDesc, m: int):
    """Lexicographically least monic irreducible of degree m over base."""
    for coeffs in _lex_coefficient_tuples(base, m):
        cand = polyring.Poly(base, list(coeffs) + [base.one()])
        if polyring.is_irreducible(cand):
            return cand
    raise TsrError("no irreducible modulus found")  # unreachable: fields of every degree exist


def _lex_coefficient_tuples(base, m):
    # (c_0, ..., c_{m-1}) in lex order with c_0 the most significant position
    elements = [base.element_from_code(i) for i in range(base.order)]

    def rec(k):
        if k == m:
            yield ()
            return
        for e in elements:
            for rest in rec(k + 1):
                yield (e,) + rest

    return rec(0)


# --------------------------------------------------------------------------
# spec strings:  "p"  |  "p^r"  |  "p^r:<poly>"
# --------------------------------------------------------------------------

def parse_field_spec(s: str) -> FieldDesc:
    s = s.strip()
    if ":" in s:
        head, polytext = s.split(":", 1)
    else:
        head, polytext = s, None
    if "^" in head:
        ptxt, rtxt = head.split("^", 1)
        p, r = int(ptxt), int(rtxt)
    else:
        p, r = int(head), 1
    modulus = None
    if polytext is not None:
        if r == 1:
            raise ValueError("prime field spec takes no modulus")
        base = construct_field(p)
        modulus = polyring.Poly.parse(base, polytext)
    return construct_field(p, r, modulus)


# --------------------------------------------------------------------------
# spec operations
# --------------------------------------------------------------------------

def invert(a: FieldElement) -> FieldElement:
    return a.inverse()


def multiplicative_order(a: FieldElement) -> int:
    """Least k >= 1 with a^k = 1; divisor descent over |F*|."""
    if a.is_zero():
        raise ZeroInversion("the zero element has no multiplicative order")
    n = a.field.order - 1
    one = a.field.one()
    order = n
    for p in sorted(factorize(n)):
        while order % p == 0 and a ** (order // p) == one:
            order //= p
    return order


def iterate_field(field: FieldDesc):
    """Every element exactly once, ascending code (constant coefficient fastest)."""
    for code in range(field.order):
        yield field.element_from_code(code)


# --------------------------------------------------------------------------
# shared text helper
# --------------------------------------------------------------------------

def split_outside_parens(s: str, sep: str) -> list[str]:
    """Split on sep at paren depth zero."""
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    parts.append("".join(cur))
    return parts
