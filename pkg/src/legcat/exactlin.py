"""Exact linear algebra over prime fields and the rationals.

Field elements are plain Python values: residues ``0 <= x < p`` for a prime
field, :class:`fractions.Fraction` for the rationals.  A field object carries
the arithmetic; matrices are immutable row-major tuples tagged with their
field.  No floating point is used anywhere.

Elimination never pivots on magnitude: the leftmost column and topmost
nonzero entry always win, so every basis returned here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ParseError, ShapeError, SingularMatrixError

Vector = tuple


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ with canonical residues in ``range(p)``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ParseError(f"field characteristic must be a prime, got {self.p!r}")

    is_finite = True
    zero = 0
    one = 1

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def elements(self) -> range:
        return range(self.p)

    def units(self) -> range:
        return range(1, self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_json(self, a):
        return a

    def from_json(self, a):
        return self(a)

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Rationals:
    """The field Q, elements stored as reduced :class:`Fraction` values."""

    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def p(self):
        return None

    @property
    def order(self):
        return None

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            try:
                return Fraction(x.strip())
            except ValueError as exc:
                raise ParseError(f"not a rational number: {x!r}") from exc
        return Fraction(x)

    def elements(self):
        raise ValueError("Q is infinite; enumeration requires a finite field")

    units = elements

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_json(self, a):
        return str(a)

    def from_json(self, a):
        return self(a)

    def __str__(self):
        return "Q"


Field = PrimeField | Rationals


def parse_field(spec) -> Field:
    """Parse ``"Q"`` or a prime such as ``"5"`` into a field."""
    if isinstance(spec, (PrimeField, Rationals)):
        return spec
    text = str(spec).strip()
    if text.upper() in {"Q", "QQ"}:
        return Rationals()
    try:
        p = int(text)
    except ValueError as exc:
        raise ParseError(f"field spec must be a prime or 'Q', got {spec!r}") from exc
    return PrimeField(p)


def vector(F: Field, values: Iterable) -> Vector:
    return tuple(F(v) for v in values)


def vec_add(F: Field, u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F: Field, u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_scale(F: Field, c, v: Sequence) -> Vector:
    return tuple(F.mul(c, a) for a in v)


def is_zero_vector(F: Field, v: Sequence) -> bool:
    return all(F.is_zero(a) for a in v)


def standard_basis_vector(F: Field, n: int, i: int) -> Vector:
    return tuple(F.one if k == i else F.zero for k in range(n))


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix; ``entries`` is row-major."""

    rows: int
    cols: int
    entries: tuple
    field: Field = dc_field(compare=True)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, F: Field, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, tuple(F(x) for r in rows for x in r), F)

    @classmethod
    def from_columns(cls, F: Field, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ShapeError("ragged columns")
        return cls(
            rows,
            len(columns),
            tuple(F(columns[j][i]) for i in range(rows) for j in range(len(columns))),
            F,
        )

    @classmethod
    def identity(cls, F: Field, n: int) -> Matrix:
        return cls(n, n, tuple(F.one if i == j else F.zero for i in range(n) for j in range(n)), F)

    @classmethod
    def zeros(cls, F: Field, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (F.zero,) * (rows * cols), F)

    @classmethod
    def diagonal(cls, F: Field, values: Sequence) -> Matrix:
        n = len(values)
        return cls(n, n, tuple(F(values[i]) if i == j else F.zero for i in range(n) for j in range(n)), F)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> Matrix:
        return Matrix.from_columns(self.field, [self.row(i) for i in range(self.rows)], self.cols)

    def submatrix(self, k: int) -> Matrix:
        """Top-left ``k x k`` block."""
        return Matrix.from_rows(self.field, [self.row(i)[:k] for i in range(k)], k)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product ``A v``."""
        if len(v) != self.cols:
            raise ShapeError(f"cannot apply {self.rows}x{self.cols} matrix to length-{len(v)} vector")
        F = self.field
        out = []
        for i in range(self.rows):
            acc = F.zero
            for a, b in zip(self.row(i), v):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        return mul(self, other)

    def __str__(self):
        return "\n".join("[" + " ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


def mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    F = A.field
    bcols = B.columns()
    out = []
    for i in range(A.rows):
        r = A.row(i)
        for c in bcols:
            acc = F.zero
            for a, b in zip(r, c):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
    return Matrix(A.rows, B.cols, tuple(out), F)


def _require_square(A: Matrix):
    if A.rows != A.cols:
        raise ShapeError(f"square matrix required, got {A.rows}x{A.cols}")


def det(A: Matrix):
    _require_square(A)
    F = A.field
    m = A.to_rows()
    n = A.rows
    result = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if not F.is_zero(m[r][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = F.neg(result)
        pv = m[c][c]
        result = F.mul(result, pv)
        inv = F.inv(pv)
        for r in range(c + 1, n):
            if F.is_zero(m[r][c]):
                continue
            f = F.mul(m[r][c], inv)
            m[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[r], m[c])]
    return result


def inverse(A: Matrix) -> Matrix:
    _require_square(A)
    F = A.field
    n = A.rows
    m = [list(A.row(i)) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not F.is_zero(m[r][c])), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = F.inv(m[c][c])
        m[c] = [F.mul(inv, a) for a in m[c]]
        for r in range(n):
            if r != c and not F.is_zero(m[r][c]):
                f = m[r][c]
                m[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[r], m[c])]
    return Matrix.from_rows(F, [row[n:] for row in m], n)


def rref(A: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    F = A.field
    m = A.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        piv = next((i for i in range(r, A.rows) if not F.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, a) for a in m[r]]
        for i in range(A.rows):
            if i != r and not F.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def kernel_basis(A: Matrix) -> list[Vector]:
    """Right null space basis read off the RREF.

    One vector per non-pivot column, in ascending column order, with that
    free variable set to 1 and the other free variables set to 0.
    """
    F = A.field
    m, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * A.cols
        v[f] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(m[r][f])
        basis.append(tuple(v))
    return basis


def free_columns(A: Matrix) -> list[int]:
    pivots = set(rref(A)[1])
    return [c for c in range(A.cols) if c not in pivots]


def solve(A: Matrix, b: Sequence) -> Vector | None:
    """Some ``x`` with ``A x = b``, or ``None`` when ``b`` is not in the column space."""
    F = A.field
    if len(b) != A.rows:
        raise ShapeError("right-hand side has the wrong length")
    aug = Matrix.from_rows(F, [list(A.row(i)) + [b[i]] for i in range(A.rows)], A.cols + 1)
    m, pivots = rref(aug)
    if A.cols in pivots:
        return None
    x = [F.zero] * A.cols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][A.cols]
    return tuple(x)


@dataclass(frozen=True)
class ImageEchelon:
    """Reduced column echelon basis of a column space.

    ``pivot_rows[k]`` is the 0-based row holding the leading 1 of
    ``basis[k]``; every other basis vector vanishes on that row.
    """

    pivot_rows: tuple[int, ...]
    basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def image_echelon(A: Matrix) -> ImageEchelon:
    F = A.field
    basis: list[list] = []
    pivots: list[int] = []
    for col in A.columns():
        v = list(col)
        for b, pr in zip(basis, pivots):
            if not F.is_zero(v[pr]):
                f = v[pr]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, b)]
        pr = next((i for i, x in enumerate(v) if not F.is_zero(x)), None)
        if pr is None:
            continue
        inv = F.inv(v[pr])
        v = [F.mul(inv, x) for x in v]
        for k, b in enumerate(basis):
            if not F.is_zero(b[pr]):
                f = b[pr]
                basis[k] = [F.sub(x, F.mul(f, y)) for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(pr)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return ImageEchelon(tuple(pivots[k] for k in order), tuple(tuple(basis[k]) for k in order))


@dataclass(frozen=True)
class Cokernel:
    """A standard-basis complement of a column space, with its normal-form map."""

    ambient_dim: int
    image: ImageEchelon
    complement_rows: tuple[int, ...]
    field: Field

    @property
    def dim(self) -> int:
        return len(self.complement_rows)

    @property
    def complement_basis(self) -> list[Vector]:
        return [standard_basis_vector(self.field, self.ambient_dim, r) for r in self.complement_rows]

    def reduce(self, v: Sequence) -> Vector:
        """Coordinates of the class of ``v`` along the complement basis."""
        F = self.field
        if len(v) != self.ambient_dim:
            raise ShapeError(f"expected length {self.ambient_dim}, got {len(v)}")
        w = [F(x) for x in v]
        for b, pr in zip(self.image.basis, self.image.pivot_rows):
            if not F.is_zero(w[pr]):
                f = w[pr]
                w = [F.sub(x, F.mul(f, y)) for x, y in zip(w, b)]
        return tuple(w[r] for r in self.complement_rows)

    def lift(self, coords: Sequence) -> Vector:
        """The complement vector with the given coordinates."""
        F = self.field
        if len(coords) != self.dim:
            raise ShapeError(f"expected {self.dim} coordinates, got {len(coords)}")
        out = [F.zero] * self.ambient_dim
        for r, c in zip(self.complement_rows, coords):
            out[r] = F(c)
        return tuple(out)


def complement_and_reduce(A: Matrix) -> Cokernel:
    img = image_echelon(A)
    taken = set(img.pivot_rows)
    return Cokernel(A.rows, img, tuple(r for r in range(A.rows) if r not in taken), A.field)


def leading_principal_minors(A: Matrix) -> list:
    _require_square(A)
    return [det(A.submatrix(k)) for k in range(1, A.rows + 1)]


def lu_admissible(A: Matrix) -> bool:
    """Invertible with every leading principal minor nonzero."""
    F = A.field
    return all(not F.is_zero(m) for m in leading_principal_minors(A))


def matrix_fn(F: Field) -> Callable[[Sequence[Sequence]], Matrix]:
    """Shorthand constructor ``M([[...], ...])`` bound to a field."""
    return lambda rows: Matrix.from_rows(F, rows)
