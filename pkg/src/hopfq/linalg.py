"""Exact scalars and the linear algebra every check is built on.

Two coefficient fields are supported: the rationals (``fractions.Fraction``)
and prime fields GF(p) (:class:`Residue`). Nothing here ever touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import FieldMismatch

DEFAULT_PRIME = 101


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@total_ordering
class Residue:
    """An element of GF(p), always reduced into ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) mixed with GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"GF({self.p}) mixed with a rational")
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Residue(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        # ordering on representatives; only used for deterministic sorting
        if isinstance(other, Residue):
            return self.value < other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class RationalField:
    name = "rational"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Residue):
            raise FieldMismatch("residue passed to the rational field")
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"

    def format(self, x) -> str:
        return str(x)


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    def __call__(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element passed to GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return Residue(x.numerator, self.p) / Residue(x.denominator, self.p)
        return Residue(int(x), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def format(self, x) -> str:
        return str(x.value)


Field = RationalField | PrimeField
QQ = RationalField()


def parse_field(name: str) -> Field:
    """``rational`` or ``gf:p``."""
    if name in ("rational", "Q", "QQ"):
        return QQ
    if name.startswith("gf:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r}; use 'rational' or 'gf:p'")


def field_of(x) -> Field:
    if isinstance(x, Residue):
        return PrimeField(x.p)
    return QQ


def field_inverse(x):
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    if isinstance(x, Residue):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / x


# ---------------------------------------------------------------------------
# sparse vectors and tensors
# ---------------------------------------------------------------------------

def clean(d: dict) -> dict:
    """Drop explicit zeros in place and return ``d``."""
    for k in [k for k, v in d.items() if not v]:
        del d[k]
    return d


def axpy(acc: dict, c, x: Mapping) -> dict:
    """acc += c * x, for sparse dicts. Zeros are left for a later :func:`clean`."""
    for k, v in x.items():
        if k in acc:
            acc[k] = acc[k] + c * v
        else:
            acc[k] = c * v
    return acc


def scaled(c, x: Mapping) -> dict:
    return clean({k: c * v for k, v in x.items()})


def sparse_sum(*xs: Mapping) -> dict:
    out: dict = {}
    for x in xs:
        axpy(out, 1, x)
    return clean(out)


def sparse_sub(x: Mapping, y: Mapping) -> dict:
    out = dict(x)
    axpy(out, -1, y)
    return clean(out)


class Tensor2:
    """Sparse element of a two-fold tensor power, keyed by basis-index pairs.

    Zero coefficients are never stored and iteration is in sorted key order.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[tuple[int, int], object] | None = None):
        self.dim = dim
        self.coeffs = clean(dict(coeffs or {}))

    @classmethod
    def pure(cls, dim: int, a: Mapping[int, object], b: Mapping[int, object]) -> "Tensor2":
        return cls(dim, {(i, j): x * y for i, x in a.items() for j, y in b.items()})

    def items(self) -> Iterator[tuple[tuple[int, int], object]]:
        for k in sorted(self.coeffs):
            yield k, self.coeffs[k]

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.dim, sparse_sum(self.coeffs, other.coeffs))

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.dim, sparse_sub(self.coeffs, other.coeffs))

    def __rmul__(self, c) -> "Tensor2":
        return Tensor2(self.dim, scaled(c, self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Tensor2({self.dim}, {dict(self.items())!r})"


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise ValueError("rows*cols does not match the entry count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls.from_rows([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], n)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence) -> list:
        return [sum((self[i, j] * v[j] for j in range(self.cols)), 0 * v[0] if v else 0)
                for i in range(self.rows)]


def _as_rows(M) -> tuple[list[list], int]:
    if isinstance(M, Matrix):
        return M.to_rows(), M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def _detect_field(rows: Iterable[Iterable], field: Field | None) -> Field:
    if field is not None:
        return field
    for r in rows:
        for x in r:
            if isinstance(x, Residue):
                return PrimeField(x.p)
    return QQ


def _bareiss_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination over the integers.

    Returns the nonzero echelon rows and their pivot columns.
    """
    m = [r[:] for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _integer_rows(rows: list[list]) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        den = math.lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def _rref_rational(rows: list[list], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    ech, pivots = _bareiss_echelon(_integer_rows(rows), ncols)
    red = [[Fraction(x) for x in r] for r in ech]
    # back substitution on the (few) pivot rows
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pv = red[k][c]
        red[k] = [x / pv for x in red[k]]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [a - f * b for a, b in zip(red[i], red[k])]
    return red, pivots


def _rref_prime(rows: list[list], ncols: int, field: PrimeField) -> tuple[list[list[Residue]], list[int]]:
    p = field.p
    m = [[field(x).value for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [[Residue(x, p) for x in row] for row in m[:r]], pivots


def rref(M, field: Field | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    rows, ncols = _as_rows(M)
    field = _detect_field(rows, field)
    if not rows or ncols == 0:
        return [], []
    if isinstance(field, PrimeField):
        return _rref_prime(rows, ncols, field)
    return _rref_rational(rows, ncols)


def rank(M, field: Field | None = None) -> int:
    rows, ncols = _as_rows(M)
    field = _detect_field(rows, field)
    if not rows or ncols == 0:
        return 0
    if isinstance(field, PrimeField):
        return len(_rref_prime(rows, ncols, field)[1])
    return len(_bareiss_echelon(_integer_rows(rows), ncols)[1])


def null_space(M, field: Field | None = None) -> list[list]:
    """Basis of {v : Mv = 0}, one vector per free column."""
    rows, ncols = _as_rows(M)
    field = _detect_field(rows, field)
    red, pivots = rref(rows, field) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for k, c in enumerate(pivots):
            v[c] = field.zero - red[k][f]
        basis.append(v)
    return basis


def solve(M, b: Sequence, field: Field | None = None) -> list | None:
    """One solution x of Mx = b, or None when the system is inconsistent."""
    rows, ncols = _as_rows(M)
    field = _detect_field(rows, field)
    aug = [list(r) + [field(x)] for r, x in zip(rows, b)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for k, c in enumerate(pivots):
        x[c] = red[k][ncols]
    return x


def inverse(M, field: Field | None = None) -> Matrix | None:
    """Inverse of a square matrix, or None when singular."""
    rows, n = _as_rows(M)
    field = _detect_field(rows, field)
    if len(rows) != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(map(field, r)) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return Matrix.from_rows([r[n:] for r in red[:n]], n)


def mat_vec(M, v: Sequence, field: Field | None = None) -> list:
    rows, _ = _as_rows(M)
    field = _detect_field(rows, field)
    out = []
    for r in rows:
        acc = field.zero
        for a, x in zip(r, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out
