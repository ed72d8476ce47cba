"""Objects, delta maps, Ext^0 / Ext^1 and graded composition.

An object is a braid-variety point (plus an inert basis label).  For an
ordered pair ``(F, G)`` with points ``x, y`` the delta map sends
``u in K^n`` to the vector whose j-th entry is

    uh[i_j] * x_j - y_j * uh[i_j + 1],     uh = u tracked through j-1 crossings

i.e. the (i_j + 1, i_j) entry of ``B(y_j)^-1 D(uh) B(x_j)``.  Then
``Ext^0 = ker delta`` and ``Ext^1 = coker delta``; higher Ext vanish and are
not represented.

Degree-1 classes keep a full representative in ``K^l`` next to its normal
form, because the braided products are defined on representatives and only
afterwards reduced into the fixed complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .braid import BraidWord, permuted_tuple, tracked_prefixes
from .braidmat import braid_matrix, braid_matrix_inverse
from .errors import IllegalDegree, InvalidPoint, InvariantViolation, ShapeError
from .exactlin import (
    Cokernel,
    Field,
    Matrix,
    Vector,
    complement_and_reduce,
    is_zero_vector,
    kernel_basis,
    mul,
    rref,
)
from .variety import is_member


@dataclass(frozen=True)
class SheafObject:
    braid: BraidWord
    point: tuple
    field: Field
    label: str | None = None

    def __post_init__(self):
        pt = tuple(self.field(x) for x in self.point)
        object.__setattr__(self, "point", pt)
        if len(pt) != self.braid.length or not is_member(self.field, self.braid, pt):
            raise InvalidPoint(f"{pt} is not a point of X({self.braid}, {self.field})")

    def __str__(self):
        name = self.label or "F"
        return f"{name}{self.point}"


@dataclass(frozen=True)
class DeltaMap:
    source: SheafObject
    target: SheafObject
    matrix: Matrix

    def __call__(self, u: Sequence) -> Vector:
        return self.matrix.apply(u)


def _check_pair(F_obj: SheafObject, G_obj: SheafObject):
    if F_obj.braid != G_obj.braid:
        raise ValueError(f"objects live over different braids: {F_obj.braid} vs {G_obj.braid}")
    if F_obj.field != G_obj.field:
        raise ValueError("objects live over different fields")


def delta_matrix(F_obj: SheafObject, G_obj: SheafObject, convention: str = "tracking") -> DeltaMap:
    """The ``l x n`` matrix of the delta map, one column per basis vector of ``K^n``.

    ``convention="literal"`` indexes by ``(u[pi(1)], ..., u[pi(n)])`` instead
    of strand tracking; it exists only to show that reading disagrees with
    the worked examples.
    """
    _check_pair(F_obj, G_obj)
    K = F_obj.field
    w = F_obj.braid
    x, y = F_obj.point, G_obj.point
    n, l = w.n, w.length
    columns = []
    for c in range(n):
        e = tuple(K.one if i == c else K.zero for i in range(n))
        if convention == "tracking":
            hats = tracked_prefixes(w, e)[:l]
        elif convention == "literal":
            hats = [permuted_tuple(w, j, e) for j in range(l)]
        else:
            raise ValueError(f"unknown convention {convention!r}")
        col = []
        for j, k in enumerate(w.gens):
            uh = hats[j]
            col.append(K.sub(K.mul(uh[k - 1], x[j]), K.mul(y[j], uh[k])))
        columns.append(col)
    return DeltaMap(F_obj, G_obj, Matrix.from_columns(K, columns, l))


def delta_matrix_by_products(F_obj: SheafObject, G_obj: SheafObject) -> Matrix:
    """Same matrix, read off full products ``B(y_j)^-1 D(uh) B(x_j)`` (slow cross-check)."""
    _check_pair(F_obj, G_obj)
    K = F_obj.field
    w = F_obj.braid
    n, l = w.n, w.length
    columns = []
    for c in range(n):
        e = tuple(K.one if i == c else K.zero for i in range(n))
        hats = tracked_prefixes(w, e)
        col = []
        for j, k in enumerate(w.gens):
            prod = mul(
                mul(braid_matrix_inverse(K, n, k, G_obj.point[j]), Matrix.diagonal(K, hats[j])),
                braid_matrix(K, n, k, F_obj.point[j]),
            )
            col.append(prod[k, k - 1])
        columns.append(col)
    return Matrix.from_columns(K, columns, l)


@dataclass(frozen=True, eq=False)
class ExtClass:
    """A class in Ext^0 or Ext^1 of some ordered pair.

    ``payload`` is a kernel vector (degree 0) or a representative in
    ``K^l`` (degree 1).  ``coords`` are coordinates in the hom's chosen
    basis; two classes are equal exactly when degree and coords agree.
    """

    degree: int
    payload: tuple
    coords: tuple

    def __eq__(self, other):
        if not isinstance(other, ExtClass):
            return NotImplemented
        return self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((self.degree, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class GradedHom:
    delta: DeltaMap
    ext0_basis: tuple
    free_columns: tuple
    cokernel: Cokernel = dc_field(repr=False)

    @property
    def source(self) -> SheafObject:
        return self.delta.source

    @property
    def target(self) -> SheafObject:
        return self.delta.target

    @property
    def field(self) -> Field:
        return self.delta.source.field

    @property
    def braid(self) -> BraidWord:
        return self.delta.source.braid

    @property
    def ext0_dim(self) -> int:
        return len(self.ext0_basis)

    @property
    def ext1_dim(self) -> int:
        return self.cokernel.dim

    @property
    def dims(self) -> tuple[int, int]:
        return (self.ext0_dim, self.ext1_dim)

    @property
    def ext1_complement(self) -> list[Vector]:
        return self.cokernel.complement_basis

    def reducer(self, v: Sequence) -> Vector:
        return self.cokernel.reduce(v)

    def in_kernel(self, u: Sequence) -> bool:
        return is_zero_vector(self.field, self.delta(u))

    # -- class constructors -------------------------------------------------

    def kernel_class(self, u: Sequence) -> ExtClass:
        K = self.field
        u = tuple(K(a) for a in u)
        if len(u) != self.braid.n:
            raise ShapeError(f"Ext^0 vectors have length {self.braid.n}")
        if not self.in_kernel(u):
            raise ValueError(f"{u} is not in the kernel of delta")
        # basis vectors are unit vectors on the free columns, so coordinates are read off there
        return ExtClass(0, u, tuple(u[c] for c in self.free_columns))

    def ext0_class(self, coords: Sequence) -> ExtClass:
        K = self.field
        if len(coords) != self.ext0_dim:
            raise ShapeError(f"Ext^0 has dimension {self.ext0_dim}, got {len(coords)} coordinates")
        u = [K.zero] * self.braid.n
        for c, b in zip(coords, self.ext0_basis):
            u = [K.add(a, K.mul(K(c), bb)) for a, bb in zip(u, b)]
        return ExtClass(0, tuple(u), tuple(K(c) for c in coords))

    def ext1_from_rep(self, rep: Sequence) -> ExtClass:
        K = self.field
        rep = tuple(K(a) for a in rep)
        return ExtClass(1, rep, self.cokernel.reduce(rep))

    def ext1_class(self, coords: Sequence) -> ExtClass:
        return self.ext1_from_rep(self.cokernel.lift(coords))

    def basis_classes(self, degree: int) -> list[ExtClass]:
        dim = self.ext0_dim if degree == 0 else self.ext1_dim
        make = self.ext0_class if degree == 0 else self.ext1_class
        K = self.field
        return [make([K.one if i == k else K.zero for i in range(dim)]) for k in range(dim)]

    def zero(self, degree: int) -> ExtClass:
        K = self.field
        if degree == 0:
            return self.ext0_class([K.zero] * self.ext0_dim)
        return self.ext1_class([K.zero] * self.ext1_dim)

    def add(self, a: ExtClass, b: ExtClass) -> ExtClass:
        if a.degree != b.degree:
            raise ValueError("cannot add classes of different degrees")
        K = self.field
        s = tuple(K.add(x, y) for x, y in zip(a.payload, b.payload))
        return self.kernel_class(s) if a.degree == 0 else self.ext1_from_rep(s)

    def scale(self, c, a: ExtClass) -> ExtClass:
        K = self.field
        s = tuple(K.mul(K(c), x) for x in a.payload)
        return self.kernel_class(s) if a.degree == 0 else self.ext1_from_rep(s)


def graded_hom(F_obj: SheafObject, G_obj: SheafObject) -> GradedHom:
    d = delta_matrix(F_obj, G_obj)
    A = d.matrix
    _, pivots = rref(A)
    free = tuple(c for c in range(A.cols) if c not in set(pivots))
    return GradedHom(d, tuple(kernel_basis(A)), free, complement_and_reduce(A))


def identity_morphism(H_FF: GradedHom) -> ExtClass:
    """The all-ones vector as a degree-0 endomorphism class."""
    if H_FF.source != H_FF.target:
        raise ValueError("identity needs an endomorphism space")
    K = H_FF.field
    ones = (K.one,) * H_FF.braid.n
    if not H_FF.in_kernel(ones):
        raise InvariantViolation("all-ones vector is not in ker delta_{F,F}")
    return H_FF.kernel_class(ones)


def hadamard(K: Field, v: Sequence, u: Sequence) -> Vector:
    if len(v) != len(u):
        raise ShapeError(f"Hadamard product of lengths {len(v)} and {len(u)}")
    return tuple(K.mul(a, b) for a, b in zip(v, u))


def right_braided(K: Field, w: BraidWord, q: Sequence, u: Sequence) -> Vector:
    """``q o_R u``: entry j is ``q_j`` times entry ``i_j`` of ``u`` tracked through j crossings."""
    if len(q) != w.length:
        raise ShapeError(f"expected an {w.length}-vector, got length {len(q)}")
    tracks = tracked_prefixes(w, u)
    return tuple(K.mul(K(q[j]), tracks[j + 1][k - 1]) for j, k in enumerate(w.gens))


def left_braided(K: Field, w: BraidWord, v: Sequence, p: Sequence) -> Vector:
    """``v o_L p``: entry j is entry ``i_j + 1`` of ``v`` tracked through j crossings, times ``p_j``."""
    if len(p) != w.length:
        raise ShapeError(f"expected an {w.length}-vector, got length {len(p)}")
    tracks = tracked_prefixes(w, v)
    return tuple(K.mul(tracks[j + 1][k], K(p[j])) for j, k in enumerate(w.gens))


def compose(H_FG: GradedHom, H_GQ: GradedHom, H_FQ: GradedHom, b: ExtClass, a: ExtClass) -> ExtClass:
    """``b o a`` for ``a`` in Ext(F, G) and ``b`` in Ext(G, Q), landing in Ext(F, Q)."""
    if not (H_FG.target == H_GQ.source and H_FG.source == H_FQ.source and H_GQ.target == H_FQ.target):
        raise ValueError("homs do not form a composable triple F -> G -> Q")
    if not (H_FG.braid == H_GQ.braid == H_FQ.braid):
        raise ValueError("homs live over different braids")
    K = H_FQ.field
    w = H_FQ.braid
    if a.degree + b.degree >= 2:
        raise IllegalDegree(
            "degree 1 o degree 1 would land in Ext^2, which vanishes by the hereditary-type property"
        )
    if a.degree == 0 and b.degree == 0:
        out = hadamard(K, b.payload, a.payload)
        if not H_FQ.in_kernel(out):
            raise InvariantViolation(f"Hadamard product {out} left ker delta_(F,Q)")
        return H_FQ.kernel_class(out)
    if b.degree == 1:
        return H_FQ.ext1_from_rep(right_braided(K, w, b.payload, a.payload))
    return H_FQ.ext1_from_rep(left_braided(K, w, b.payload, a.payload))


def euler_characteristic(H: GradedHom) -> int:
    return H.ext0_dim - H.ext1_dim


class Category:
    """The objects attached to a list of points, with graded homs cached per ordered pair."""

    def __init__(self, K: Field, w: BraidWord, points: Sequence[Sequence], labels: Sequence[str] | None = None):
        if labels is None:
            labels = [f"F{i + 1}" for i in range(len(points))]
        self.field = K
        self.braid = w
        self.objects = [SheafObject(w, tuple(p), K, lab) for p, lab in zip(points, labels)]
        self._homs: dict[tuple[int, int], GradedHom] = {}

    def __len__(self):
        return len(self.objects)

    def hom(self, i: int, j: int) -> GradedHom:
        key = (i, j)
        if key not in self._homs:
            self._homs[key] = graded_hom(self.objects[i], self.objects[j])
        return self._homs[key]

    def compose(self, i: int, j: int, k: int, b: ExtClass, a: ExtClass) -> ExtClass:
        """``b o a`` with ``a: i -> j`` and ``b: j -> k``."""
        return compose(self.hom(i, j), self.hom(j, k), self.hom(i, k), b, a)

    @cached_property
    def dims_table(self) -> list[list[tuple[int, int]]]:
        return [[self.hom(i, j).dims for j in range(len(self))] for i in range(len(self))]
