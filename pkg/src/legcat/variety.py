"""Braid varieties over finite fields, the reduced slice and the torus action.

A point of ``X(beta, K)`` is a parameter tuple ``z`` whose path matrix
``P_beta(z)`` has an LU factorisation, i.e. all leading principal minors are
nonzero.  Enumeration sweeps ``K^l`` lexicographically as a depth-first walk
over prefixes, so each prefix product is computed once and shared by all of
its extensions.

Torus
-----
The diagonal torus acts by rescaling parameters through the intertwining
relations ``D(t_{j-1}) B(z_j) = B(z'_j) D(t_j)``, where ``t_j`` is ``t``
carried through the first ``j`` crossings.  Scalar tuples act trivially, so
the effective group is ``(K^*)^n / K^*``; :func:`torus_elements` enumerates
it through representatives with last entry 1 (``kind="projective"``).  The
determinant-one torus (``kind="special"``) has the same size but, over
fields with nontrivial n-th roots of unity, contains nontrivial scalars and
misses non-residue rescalings, so it is neither free nor transitive on the
fibres of the slice map there.

The reduced slice asks the leading principal minors of orders ``1..n-1`` to
equal 1; the order-``n`` minor is ``det P = (-1)^l`` for every point and is
not a condition.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, is_knot, tracked_prefixes
from .braidmat import braid_matrix, path_matrix
from .errors import BudgetExceeded, FieldError, InvalidPoint, InvariantViolation, ShapeError
from .exactlin import Field, Matrix, leading_principal_minors, lu_admissible, mul

DEFAULT_BUDGET = 10**8


def _require_finite(F: Field):
    if not F.is_finite:
        raise FieldError(f"enumeration needs a finite field, got {F}")


def is_member(F: Field, w: BraidWord, z: Sequence) -> bool:
    return lu_admissible(path_matrix(F, w, z))


def is_reduced_member(F: Field, w: BraidWord, z: Sequence) -> bool:
    minors = leading_principal_minors(path_matrix(F, w, z))
    return all(m == F.one for m in minors[:-1]) and not F.is_zero(minors[-1])


def enumeration_cost(w: BraidWord, q: int) -> int:
    """Field multiplications spent by a full sweep of ``F_q^l``."""
    n, l = w.n, w.length
    internal = sum(q**k for k in range(1, l + 1)) * 2 * n
    return internal + q**l * n**3


def _lu_check(cols: list, n: int, p: int, reduced: bool) -> bool:
    # leading minors of a matrix and of its transpose agree, so eliminate on columns
    m = [list(c) for c in cols]
    for k in range(n):
        piv = m[k][k]
        if piv == 0:
            return False
        if reduced and k < n - 1:
            # k-th minor is the product of the first k+1 pivots; all earlier ones are 1
            if piv != 1:
                return False
        if k == n - 1:
            break
        inv = pow(piv, p - 2, p)
        rowk = m[k]
        for i in range(k + 1, n):
            f = m[i][k]
            if f:
                f = f * inv % p
                ri = m[i]
                for j in range(k + 1, n):
                    ri[j] = (ri[j] - f * rowk[j]) % p
    return True


def _sweep(n: int, gens: tuple, p: int, reduced: bool, head: tuple = ()) -> list[tuple]:
    ident = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    cols = ident
    for k, zj in zip(gens, head):
        cols = _step(cols, k, zj, p)
    out: list[tuple] = []
    l = len(gens)
    prefix = list(head)

    def walk(depth: int, cols):
        if depth == l:
            if _lu_check(cols, n, p, reduced):
                out.append(tuple(prefix))
            return
        k = gens[depth]
        for zj in range(p):
            prefix.append(zj)
            walk(depth + 1, _step(cols, k, zj, p))
            prefix.pop()

    walk(len(head), cols)
    return out


def _step(cols: list, k: int, z: int, p: int) -> list:
    a = k - 1
    ca, cb = cols[a], cols[a + 1]
    new = list(cols)
    new[a] = tuple((y + x * z) % p for x, y in zip(ca, cb))
    new[a + 1] = ca
    return new


def _sweep_job(args):
    return _sweep(*args)


def enumerate_variety(
    F: Field,
    w: BraidWord,
    *,
    reduced: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> list[tuple]:
    """All points of ``X(w, F)`` (or of the reduced slice) in lexicographic order."""
    _require_finite(F)
    cost = enumeration_cost(w, F.p)
    if cost > budget:
        raise BudgetExceeded(
            f"sweeping {F.p}^{w.length} tuples costs ~{cost:.3g} multiplications, budget is {budget}"
        )
    if workers <= 1 or w.length == 0:
        return _sweep(w.n, w.gens, F.p, reduced)
    jobs = [(w.n, w.gens, F.p, reduced, (z1,)) for z1 in range(F.p)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_sweep_job, jobs))
    return sorted(itertools.chain.from_iterable(parts))


def enumerate_reduced(F: Field, w: BraidWord, **kwargs) -> list[tuple]:
    return enumerate_variety(F, w, reduced=True, **kwargs)


@dataclass(frozen=True)
class TorusElement:
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(self.t))

    def validate(self, F: Field, n: int):
        if len(self.t) != n:
            raise ShapeError(f"torus element needs {n} entries, got {len(self.t)}")
        if any(F.is_zero(x) for x in self.t):
            raise ValueError(f"torus element {self.t} has a zero entry")

    def is_special(self, F: Field) -> bool:
        return math.prod(self.t) % F.p == 1 if F.is_finite else math.prod(self.t) == 1


def torus_identity(F: Field, n: int) -> TorusElement:
    return TorusElement((F.one,) * n)


def torus_mul(F: Field, s: TorusElement, t: TorusElement) -> TorusElement:
    return TorusElement(tuple(F.mul(a, b) for a, b in zip(s.t, t.t)))


def torus_inverse(F: Field, t: TorusElement) -> TorusElement:
    return TorusElement(tuple(F.inv(a) for a in t.t))


def torus_size(F: Field, n: int) -> int:
    _require_finite(F)
    return (F.p - 1) ** (n - 1)


def torus_elements(F: Field, n: int, kind: str = "projective") -> Iterable[TorusElement]:
    """Enumerate an ``(n-1)``-dimensional torus over a finite field.

    ``projective``: ``(K^*)^n / K^*`` via representatives with ``t_n = 1``.
    ``special``: tuples with product 1.
    """
    _require_finite(F)
    p = F.p
    for head in itertools.product(range(1, p), repeat=n - 1):
        if kind == "projective":
            yield TorusElement(head + (1,))
        elif kind == "special":
            last = pow(math.prod(head) % p, p - 2, p)
            yield TorusElement(head + (last,))
        else:
            raise ValueError(f"unknown torus kind {kind!r}")


def torus_act(F: Field, w: BraidWord, t: TorusElement, z: Sequence) -> tuple:
    """``t * z``: the unique ``z'`` with ``D(t_{j-1}) B(z_j) = B(z'_j) D(t_j)`` for all j."""
    t.validate(F, w.n)
    if len(z) != w.length:
        raise ShapeError(f"braid of length {w.length} needs {w.length} parameters, got {len(z)}")
    tracks = tracked_prefixes(w, t.t)
    out = []
    for j, (k, zj) in enumerate(zip(w.gens, z)):
        th = tracks[j]
        assert not F.is_zero(th[k]), "torus entries are nonzero"
        out.append(F.div(F.mul(th[k - 1], F(zj)), th[k]))
    return tuple(out)


def torus_relation_holds(F: Field, w: BraidWord, t: TorusElement, z: Sequence, z_new: Sequence) -> bool:
    """Check the defining matrix relations crossing by crossing."""
    tracks = tracked_prefixes(w, t.t)
    for j, k in enumerate(w.gens):
        lhs = mul(Matrix.diagonal(F, tracks[j]), braid_matrix(F, w.n, k, z[j]))
        rhs = mul(braid_matrix(F, w.n, k, z_new[j]), Matrix.diagonal(F, tracks[j + 1]))
        if lhs != rhs:
            return False
    return True


def _check_torus_budget(F: Field, w: BraidWord, budget: int):
    cost = torus_size(F, w.n) * max(w.length, 1)
    if cost > budget:
        raise BudgetExceeded(f"torus sweep costs ~{cost} operations, budget is {budget}")


def _require_member(F: Field, w: BraidWord, z: Sequence):
    if len(z) != w.length or not is_member(F, w, z):
        raise InvalidPoint(f"{tuple(z)} is not a point of X({w}, {F})")


def orbit(F: Field, w: BraidWord, z: Sequence, kind: str = "projective", budget: int = DEFAULT_BUDGET) -> set[tuple]:
    _check_torus_budget(F, w, budget)
    return {torus_act(F, w, t, z) for t in torus_elements(F, w.n, kind)}


def orbit_equivalent(
    F: Field,
    w: BraidWord,
    z1: Sequence,
    z2: Sequence,
    kind: str = "projective",
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether ``z2 = t * z1`` for some torus element, by sweeping the torus."""
    _require_member(F, w, z1)
    _require_member(F, w, z2)
    _check_torus_budget(F, w, budget)
    target = tuple(F(x) for x in z2)
    return any(torus_act(F, w, t, z1) == target for t in torus_elements(F, w.n, kind))


def reduced_representative(
    F: Field,
    w: BraidWord,
    z: Sequence,
    kind: str = "projective",
    budget: int = DEFAULT_BUDGET,
) -> tuple[TorusElement, tuple]:
    """The unique ``(t, z')`` with ``z'`` in the reduced slice and ``z = t * z'`` (knots only)."""
    if not is_knot(w):
        raise ValueError(f"{w} closes to a link with several components; factorisation is knot-only")
    _require_member(F, w, z)
    _check_torus_budget(F, w, budget)
    found = []
    for t in torus_elements(F, w.n, kind):
        zr = torus_act(F, w, torus_inverse(F, t), z)
        if is_reduced_member(F, w, zr):
            found.append((t, zr))
    if len(found) != 1:
        raise InvariantViolation(
            f"{tuple(z)} has {len(found)} factorisations through the reduced slice (expected 1)"
        )
    return found[0]
