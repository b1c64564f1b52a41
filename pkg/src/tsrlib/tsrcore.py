"""Periodic transformation shift registers over F_q.

A register of block size m and order n is the data (c_1, ..., c_{n-1}, B)
with B invertible m x m over F_q: the state recurrence is

    s_{i+n} = s_i B + s_{i+1} (c_1 B) + ... + s_{i+n-1} (c_{n-1} B)

on length-m row vectors, equivalently S_k = S_0 T^k for the mn x mn block
companion matrix T with subdiagonal identity blocks and last block column
(B, c_1 B, ..., c_{n-1} B).

Characteristic polynomials come in two independent routes that must agree:
fraction-free Bareiss elimination on XI - T over the polynomial ring, and
the structural form g(X)^m psi_B(X^n / g(X)) with g = 1 + c_1 X + ...
+ c_{n-1} X^{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from . import gf, polyring
from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .gf import FieldDesc, FieldElement, split_outside_parens
from .numutil import factorize
from .polyring import Poly


class MatrixFq:
    """Immutable square matrix over a FieldDesc, row-major."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(field.element(e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and nonempty")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field, dim):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, field, dim):
        zero = field.zero()
        return cls(field, [[zero] * dim for _ in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check(self, other):
        if not isinstance(other, MatrixFq):
            raise TypeError("expected MatrixFq")
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.dim != other.dim:
            raise DimensionMismatch("matrix dimensions differ")

    def __add__(self, other):
        self._check(other)
        return MatrixFq(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check(other)
        return MatrixFq(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __mul__(self, other):
        self._check(other)
        n = self.dim
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append(
                [sum_elems(self.field, (row[k] * cols[j][k] for k in range(n))) for j in range(n)]
            )
        return MatrixFq(self.field, out)

    def scale(self, c):
        c = self.field.element(c)
        return MatrixFq(self.field, [[a * c for a in row] for row in self.rows])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative matrix power")
        acc = MatrixFq.identity(self.field, self.dim)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def det(self) -> FieldElement:
        """Exact determinant by Gaussian elimination."""
        field = self.field
        n = self.dim
        rows = [list(r) for r in self.rows]
        det = field.one()
        for k in range(n):
            piv = next((r for r in range(k, n) if not rows[r][k].is_zero()), None)
            if piv is None:
                return field.zero()
            if piv != k:
                rows[k], rows[piv] = rows[piv], rows[k]
                det = -det
            det = det * rows[k][k]
            inv = rows[k][k].inverse()
            for r in range(k + 1, n):
                f = rows[r][k] * inv
                if f.is_zero():
                    continue
                for c in range(k, n):
                    rows[r][c] = rows[r][c] - f * rows[k][c]
        return det

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((hash(self.field), self.rows))

    def to_text(self) -> str:
        return ";".join(
            ",".join(self.field.format_element(e) for e in row) for row in self.rows
        )

    @classmethod
    def parse(cls, field, text: str) -> "MatrixFq":
        rows = [
            [field.parse_element(t) for t in split_outside_parens(row, ",")]
            for row in text.strip().split(";")
        ]
        return cls(field, rows)

    def __repr__(self):
        return f"MatrixFq({self.to_text()!r})"


def sum_elems(field, elems):
    acc = field.zero()
    for e in elems:
        acc = acc + e
    return acc


def vec_mat(field, vec, mat: MatrixFq):
    """Row vector times matrix."""
    if len(vec) != mat.dim:
        raise DimensionMismatch("vector length does not match matrix dimension")
    cols = list(zip(*mat.rows))
    return tuple(
        sum_elems(field, (vec[k] * cols[j][k] for k in range(mat.dim)))
        for j in range(mat.dim)
    )


class TsrState:
    """An n-tuple of length-m coordinate vectors over F_q."""

    __slots__ = ("field", "vectors")

    def __init__(self, field, vectors):
        vs = tuple(tuple(field.element(e) for e in v) for v in vectors)
        if not vs:
            raise DimensionMismatch("state needs at least one vector")
        m = len(vs[0])
        if any(len(v) != m for v in vs):
            raise DimensionMismatch("state vectors have unequal lengths")
        self.field = field
        self.vectors = vs

    @property
    def n(self):
        return len(self.vectors)

    @property
    def m(self):
        return len(self.vectors[0])

    def is_zero(self):
        return all(e.is_zero() for v in self.vectors for e in v)

    def flatten(self):
        return tuple(e for v in self.vectors for e in v)

    @classmethod
    def from_flat(cls, field, flat, m):
        return cls(field, [flat[i : i + m] for i in range(0, len(flat), m)])

    def to_text(self) -> str:
        return ";".join(
            ",".join(self.field.format_element(e) for e in v) for v in self.vectors
        )

    @classmethod
    def parse(cls, field, text: str) -> "TsrState":
        return cls(
            field,
            [
                [field.parse_element(t) for t in split_outside_parens(row, ",")]
                for row in text.strip().split(";")
            ],
        )

    def __eq__(self, other):
        if not isinstance(other, TsrState):
            return NotImplemented
        return self.field == other.field and self.vectors == other.vectors

    def __hash__(self):
        return hash((hash(self.field), self.vectors))

    def __repr__(self):
        return f"TsrState({self.to_text()!r})"


@dataclass(frozen=True)
class TsrSpec:
    """Periodic TSR data (q, m, n, c_1..c_{n-1}, B) with B in GL_m(F_q)."""

    field: FieldDesc
    m: int
    n: int
    c: tuple
    B: MatrixFq

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DimensionMismatch("m and n must be >= 1")
        c = tuple(self.field.element(e) for e in self.c)
        if len(c) != self.n - 1:
            raise DimensionMismatch(f"need exactly {self.n - 1} feedback scalars")
        object.__setattr__(self, "c", c)
        if self.B.field != self.field or self.B.dim != self.m:
            raise DimensionMismatch("B must be m x m over the register field")
        if not self.B.is_invertible():
            raise SingularMatrix("B must be invertible (periodic form)")

    @classmethod
    def from_general(cls, field, m, n, c0, c_rest, A: MatrixFq) -> "TsrSpec":
        """Normalize the general form (c_0, ..., c_{n-1}, A) to (c', B=c_0 A).

        The general coefficients are c_i A; with B = c_0 A they become
        (c_i / c_0) B.  Rejects c_0 = 0 and singular A.
        """
        c0 = field.element(c0)
        if c0.is_zero():
            raise SingularMatrix("c_0 = 0 gives a non-periodic register")
        if not A.is_invertible():
            raise SingularMatrix("A must be invertible for a periodic register")
        inv0 = c0.inverse()
        c = tuple(field.element(e) * inv0 for e in c_rest)
        return cls(field, m, n, c, A.scale(c0))

    def feedback_poly(self) -> Poly:
        """g(X) = 1 + c_1 X + ... + c_{n-1} X^{n-1}."""
        return Poly(self.field, (self.field.one(),) + self.c)

    def to_json_dict(self) -> dict:
        return {
            "q_spec": self.field.spec_string(),
            "m": self.m,
            "n": self.n,
            "c": [element_to_jsonable(e) for e in self.c],
            "B": [[element_to_jsonable(e) for e in row] for row in self.B.rows],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TsrSpec":
        field = gf.parse_field_spec(d["q_spec"])
        B = MatrixFq(field, d["B"])
        return cls(field, int(d["m"]), int(d["n"]), tuple(d["c"]), B)


def element_to_jsonable(e: FieldElement):
    if e.field.base is None:
        return e.coeffs[0]
    return [element_to_jsonable(c) for c in e.coeffs]


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def block_companion(spec: TsrSpec) -> MatrixFq:
    """The mn x mn state-transition matrix; B itself when n = 1."""
    if spec.n == 1:
        return spec.B
    return _block_companion_raw(spec.field, spec.m, spec.n, spec.c, spec.B)


def _block_companion_raw(field, m, n, c, B: MatrixFq) -> MatrixFq:
    """Block layout without the invertibility requirement (test hook)."""
    dim = m * n
    zero = field.zero()
    rows = [[zero] * dim for _ in range(dim)]
    one = field.one()
    for blk in range(n - 1):
        for r in range(m):
            rows[(blk + 1) * m + r][blk * m + r] = one
    col0 = (n - 1) * m
    scalars = (one,) + tuple(c)
    for blk in range(n):
        s = scalars[blk]
        for r in range(m):
            for cc in range(m):
                rows[blk * m + r][col0 + cc] = s * B.rows[r][cc]
    return MatrixFq(field, rows)


def step_sequence(spec: TsrSpec, state: TsrState, steps: int) -> TsrState:
    """Advance the recurrence; equals S_0 T^steps."""
    if state.n != spec.n or state.m != spec.m or state.field != spec.field:
        raise DimensionMismatch("state shape does not match the register")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    field = spec.field
    mats = [spec.B] + [spec.B.scale(cj) for cj in spec.c]
    vecs = list(state.vectors)
    for _ in range(steps):
        new = vec_mat(field, vecs[0], mats[0])
        for j in range(1, spec.n):
            term = vec_mat(field, vecs[j], mats[j])
            new = tuple(a + b for a, b in zip(new, term))
        vecs = vecs[1:] + [new]
    return TsrState(field, vecs)


def char_poly_direct(T: MatrixFq) -> Poly:
    """det(XI - T) by fraction-free Bareiss elimination over field[X]."""
    field = T.field
    dim = T.dim
    X = Poly.x(field)
    W = [
        [
            (X if i == j else Poly.zero(field)) - Poly.constant(field, T.rows[i][j])
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    sign = 1
    prev = Poly.one(field)
    for k in range(dim - 1):
        if W[k][k].is_zero():
            r = next((i for i in range(k + 1, dim) if not W[i][k].is_zero()), None)
            if r is None:
                return Poly.zero(field)  # cannot happen for XI - T
            W[k], W[r] = W[r], W[k]
            sign = -sign
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                num = W[k][k] * W[i][j] - W[i][k] * W[k][j]
                quo, rem = divmod(num, prev)
                assert rem.is_zero(), "Bareiss division must be exact"
                W[i][j] = quo
            W[i][k] = Poly.zero(field)
        prev = W[k][k]
    det = W[dim - 1][dim - 1]
    return det if sign == 1 else -det


def char_poly_structural(spec: TsrSpec) -> Poly:
    """g(X)^m psi_B(X^n / g(X)) with g the feedback polynomial."""
    psi_b = char_poly_direct(spec.B)
    e = Poly.x_power(spec.field, spec.n)
    return polyring.rational_substitute(psi_b, e, spec.feedback_poly())


def matrix_order(T: MatrixFq) -> int:
    """Least k >= 1 with T^k = I.

    Irreducible characteristic polynomial: descend the factorization of
    q^dim - 1.  Otherwise descend E = lcm_{d<=dim}(q^d - 1) * p^ceil(log_p dim),
    a guaranteed exponent of GL elements with that invariant structure.
    """
    if not T.is_invertible():
        raise SingularMatrix("singular matrices have no multiplicative order")
    field = T.field
    q = field.order
    dim = T.dim
    psi = char_poly_direct(T)
    fac: dict[int, int] = {}
    if polyring.is_irreducible(psi):
        fac = dict(factorize(q**dim - 1))
    else:
        for d in range(1, dim + 1):
            for pr, e in factorize(q**d - 1).items():
                fac[pr] = max(fac.get(pr, 0), e)
        p = field.characteristic
        pe, k = 0, 1
        while k < dim:
            k *= p
            pe += 1
        if pe:
            fac[p] = pe
    exponent = prod(pr**e for pr, e in fac.items())
    ident = MatrixFq.identity(field, dim)
    order = exponent
    for pr in sorted(fac):
        while order % pr == 0 and T ** (order // pr) == ident:
            order //= pr
    return order


def sequence_period(spec: TsrSpec, state: TsrState) -> int:
    """Least r >= 1 with S_r = S_0: the order of T on the cyclic subspace of S_0.

    Divisor descent from the order of T; never steps the recurrence.
    The zero state has period 1.
    """
    if state.n != spec.n or state.m != spec.m or state.field != spec.field:
        raise DimensionMismatch("state shape does not match the register")
    if state.is_zero():
        return 1
    T = block_companion(spec)
    flat = state.flatten()
    order = matrix_order(T)
    for pr in sorted(factorize(order)):
        while order % pr == 0 and vec_mat(spec.field, flat, T ** (order // pr)) == flat:
            order //= pr
    return order


@dataclass(frozen=True)
class TsrClassification:
    char_poly: Poly
    irreducible: bool
    primitive: bool


def classify_tsr(spec: TsrSpec) -> TsrClassification:
    """Irreducibility/primitivity of the register's characteristic polynomial."""
    psi = char_poly_structural(spec)
    irr = polyring.is_irreducible(psi)
    prim = irr and not psi.constant_term().is_zero() and polyring.is_primitive(psi)
    return TsrClassification(psi, irr, prim)
