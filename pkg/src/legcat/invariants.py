"""Structural checks: Euler characteristic, the knot-case dichotomy, endomorphism
rings and the composition laws.

Every check produces :class:`CheckRecord` values collected in a
:class:`Report`; reports are plain data so the CLI can print them as text or
JSON.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Sequence

from .braid import BraidWord, is_knot, thurston_bennequin
from .category import Category, ExtClass, GradedHom, SheafObject, compose, euler_characteristic, graded_hom, hadamard, identity_morphism, left_braided, right_braided
from .errors import BudgetExceeded, FieldError
from .exactlin import Field, Matrix, solve, vec_add
from .variety import (
    DEFAULT_BUDGET,
    enumerate_reduced,
    enumerate_variety,
    is_member,
    orbit,
    torus_act,
    torus_elements,
    torus_identity,
    torus_mul,
    torus_relation_holds,
    torus_size,
)


def jsonable(x):
    """Tuples become lists, Fractions become strings; the result survives ``json`` unchanged."""
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


@dataclass
class CheckRecord:
    check: str
    subject: str
    passed: bool
    expected: Any = None
    observed: Any = None

    def __post_init__(self):
        self.expected = jsonable(self.expected)
        self.observed = jsonable(self.observed)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "passed": self.passed,
            "expected": self.expected,
            "observed": self.observed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CheckRecord:
        return cls(d["check"], d["subject"], bool(d["passed"]), d.get("expected"), d.get("observed"))


@dataclass
class Report:
    name: str
    braid: str
    field: str
    records: list[CheckRecord] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def add(self, check: str, subject: str, passed: bool, expected=None, observed=None):
        self.records.append(CheckRecord(check, subject, bool(passed), expected, observed))

    def extend(self, records: Iterable[CheckRecord]):
        self.records.extend(records)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "braid": self.braid,
            "field": self.field,
            "passed": self.passed,
            "records": [r.to_dict() for r in self.records],
        }

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["name"], d["braid"], d["field"], [CheckRecord.from_dict(r) for r in d["records"]])


def random_point(K: Field, w: BraidWord, rng: random.Random, max_tries: int = 10_000) -> tuple:
    """Rejection-sample a variety point over a finite field."""
    if not K.is_finite:
        raise FieldError("random points need a finite field")
    for _ in range(max_tries):
        z = tuple(rng.randrange(K.p) for _ in range(w.length))
        if is_member(K, w, z):
            return z
    raise RuntimeError(f"no point of X({w}, {K}) found in {max_tries} draws")


def random_braid(rng: random.Random, max_n: int = 4, max_len: int = 8, min_len: int = 0) -> BraidWord:
    n = rng.randint(2, max_n)
    l = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(l)))


def _pair_subject(i: int, j: int) -> str:
    return f"(F{i + 1},F{j + 1})"


def verify_euler(
    K: Field,
    w: BraidWord,
    *,
    samples: int | None = None,
    rng: random.Random | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """dim Ext^0 - dim Ext^1 = n - l for every ordered pair (exhaustive) or ``samples`` random pairs."""
    rep = Report("euler", w.spec(), str(K))
    expected = -thurston_bennequin(w)
    if samples is None:
        pts = enumerate_variety(K, w, budget=budget)
        cat = Category(K, w, pts)
        pairs = [(i, j) for i in range(len(pts)) for j in range(len(pts))]
        for i, j in pairs:
            H = cat.hom(i, j)
            rep.add("euler", _pair_subject(i, j), euler_characteristic(H) == expected, expected, euler_characteristic(H))
        return rep
    rng = rng or random.Random(0)
    for s in range(samples):
        x, y = random_point(K, w, rng), random_point(K, w, rng)
        H = graded_hom(SheafObject(w, x, K), SheafObject(w, y, K))
        rep.add("euler", f"sample {s}: {x} -> {y}", euler_characteristic(H) == expected, expected, euler_characteristic(H))
    return rep


def orbit_labels(K: Field, w: BraidWord, points: Sequence[tuple], budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """Canonical orbit representative (lexicographic minimum) for each point."""
    if torus_size(K, w.n) * max(w.length, 1) * len(points) > budget:
        raise BudgetExceeded("torus sweep over all points exceeds the budget")
    return [min(orbit(K, w, z, budget=budget)) for z in points]


def knot_dimension_check(K: Field, w: BraidWord, budget: int = DEFAULT_BUDGET) -> Report:
    """Ext dims are (1, tb+1) on torus-equivalent pairs and (0, tb) otherwise."""
    if not is_knot(w):
        raise ValueError(f"{w} is not a knot braid")
    tb = thurston_bennequin(w)
    rep = Report("knot", w.spec(), str(K))
    pts = enumerate_variety(K, w, budget=budget)
    labels = orbit_labels(K, w, pts, budget)
    cat = Category(K, w, pts)
    for i, j in itertools.product(range(len(pts)), repeat=2):
        same = labels[i] == labels[j]
        want = (1, tb + 1) if same else (0, tb)
        got = cat.hom(i, j).dims
        rep.add("knot-dims", _pair_subject(i, j) + (" equivalent" if same else ""), got == want, want, got)
        rep.add("ext0-at-most-1", _pair_subject(i, j), got[0] in (0, 1), [0, 1], got[0])
    return rep


def verify_torus(K: Field, w: BraidWord, kind: str = "projective", budget: int = DEFAULT_BUDGET) -> Report:
    """Group-action laws and closure on X(w, K); for knots also freeness and the slice bijection."""
    rep = Report(f"torus:{kind}", w.spec(), str(K))
    pts = enumerate_variety(K, w, budget=budget)
    T = list(torus_elements(K, w.n, kind))
    if len(T) ** 2 * max(len(pts), 1) > budget:
        raise BudgetExceeded("torus law sweep exceeds the budget")
    e = torus_identity(K, w.n)
    point_set = set(pts)
    for z in pts:
        rep.add("identity", str(z), torus_act(K, w, e, z) == z)
        images = {t: torus_act(K, w, t, z) for t in T}
        rep.add("closure", str(z), all(img in point_set for img in images.values()))
        rep.add("intertwining", str(z), all(torus_relation_holds(K, w, t, z, images[t]) for t in T))
        compat = all(
            torus_act(K, w, s, images[t]) == images[torus_mul(K, s, t)] for s in T for t in T
        )
        rep.add("compatibility", str(z), compat)
        if is_knot(w):
            stab = [t for t in T if images[t] == z]
            rep.add("free", str(z), stab == [e], 1, len(stab))
    if is_knot(w):
        slice_pts = enumerate_reduced(K, w, budget=budget)
        hits = [torus_act(K, w, t, zr) for t in T for zr in slice_pts]
        rep.add("slice-injective", str(w), len(set(hits)) == len(hits), len(hits), len(set(hits)))
        rep.add("slice-surjective", str(w), set(hits) == point_set, len(pts), len(set(hits)))
    return rep


# -- endomorphism rings ----------------------------------------------------------


@dataclass
class EndoRing:
    """Structure constants of End(F) in the hom's chosen bases.

    ``t00[i][k]`` are the coordinates of ``e0_i o e0_k``, ``t10[i][k]`` of
    ``e1_i o e0_k`` and ``t01[i][k]`` of ``e0_i o e1_k``, where ``e0``/``e1``
    are the degree-0 and degree-1 basis classes.
    """

    obj: SheafObject
    unit: tuple
    d0: int
    d1: int
    tb: int
    t00: list
    t10: list
    t01: list

    @property
    def dims(self) -> tuple[int, int]:
        return (self.d0, self.d1)


def endo_ring(H: GradedHom) -> EndoRing:
    if H.source != H.target:
        raise ValueError("endo_ring needs an endomorphism space")
    e0 = H.basis_classes(0)
    e1 = H.basis_classes(1)
    t00 = [[compose(H, H, H, b, a).coords for a in e0] for b in e0]
    t10 = [[compose(H, H, H, q, a).coords for a in e0] for q in e1]
    t01 = [[compose(H, H, H, b, p).coords for p in e1] for b in e0]
    return EndoRing(H.source, identity_morphism(H).coords, H.ext0_dim, H.ext1_dim, thurston_bennequin(H.braid), t00, t10, t01)


@dataclass
class SurfaceRingModel:
    """K[0] + K^d[1] with (v, y) o (u, x) = (vu, v x + u y); d = 2g + r - 1 for r boundary circles."""

    genus: int
    boundary: int
    field: Field

    @property
    def degree1_dim(self) -> int:
        return 2 * self.genus + self.boundary - 1

    def multiply(self, left, right):
        (v, y), (u, x) = left, right
        K = self.field
        return (K.mul(v, u), tuple(K.add(K.mul(v, a), K.mul(u, b)) for a, b in zip(x, y)))

    def structure_constants(self):
        """Tables in the :class:`EndoRing` layout, degree-0 basis = unit."""
        K = self.field
        d = self.degree1_dim
        e = [tuple(K.one if i == k else K.zero for i in range(d)) for k in range(d)]
        zero = (K.zero,) * d
        t00 = [[self.multiply((K.one, zero), (K.one, zero))[0:1]]]
        t10 = [[self.multiply((K.zero, e[i]), (K.one, zero))[1]] for i in range(d)]
        t01 = [[self.multiply((K.one, zero), (K.zero, e[k]))[1] for k in range(d)]]
        return t00, t10, t01


@dataclass
class SurfaceRingCheck:
    isomorphic: bool
    genus: int | None = None
    boundary: int | None = None
    obstruction: str | None = None
    detail: dict = dc_field(default_factory=dict)


def surface_ring_isomorphic(E: EndoRing) -> SurfaceRingCheck:
    """Compare End(F) with the cohomology ring of a punctured surface.

    True exactly when Ext^0 is spanned by the unit, dim Ext^1 = tb + 1 and
    the degree-0 element acts on Ext^1 by scalar multiplication from both
    sides; degree-1 products vanish for degree reasons.
    """
    K = E.obj.field
    if E.d0 != 1:
        return SurfaceRingCheck(False, obstruction="d0", detail={"d0": E.d0})
    if E.d1 != E.tb + 1:
        return SurfaceRingCheck(False, obstruction="d1", detail={"d1": E.d1, "tb+1": E.tb + 1})
    if K.is_zero(E.unit[0]):
        return SurfaceRingCheck(False, obstruction="unit", detail={"unit": list(E.unit)})
    # basis element = lam * unit, so it must act as multiplication by lam
    lam = K.inv(E.unit[0])
    genus, boundary = E.d1 // 2, 1 if E.d1 % 2 == 0 else 2
    model = SurfaceRingModel(genus, boundary, K)
    m00, m10, m01 = model.structure_constants()
    scale = lambda table: [[tuple(K.mul(lam, c) for c in cell) for cell in row] for row in table]
    if E.t00 != scale(m00):
        return SurfaceRingCheck(False, obstruction="degree-0 product", detail={"t00": E.t00})
    if E.t10 != scale(m10):
        return SurfaceRingCheck(False, obstruction="right action", detail={"t10": E.t10})
    if E.t01 != scale(m01):
        return SurfaceRingCheck(False, obstruction="left action", detail={"t01": E.t01})
    return SurfaceRingCheck(True, genus, boundary)


# -- composition laws ----------------------------------------------------------


def closure_records(cat: Category, i: int, j: int, k: int) -> list[CheckRecord]:
    """Hadamard and braided products respect kernels and images for the triple i -> j -> k."""
    K, w = cat.field, cat.braid
    H_ij, H_jk, H_ik = cat.hom(i, j), cat.hom(j, k), cat.hom(i, k)
    subj = f"({cat.objects[i].label},{cat.objects[j].label},{cat.objects[k].label})"
    out = []
    ok = all(H_ik.in_kernel(hadamard(K, v, u)) for u in H_ij.ext0_basis for v in H_jk.ext0_basis)
    out.append(CheckRecord("hadamard-kernel", subj, ok))
    zero_ik = (K.zero,) * H_ik.ext1_dim
    ok = all(
        H_ik.reducer(right_braided(K, w, c, u)) == zero_ik
        for u in H_ij.ext0_basis
        for c in H_jk.delta.matrix.columns()
    )
    out.append(CheckRecord("right-braided-image", subj, ok))
    ok = all(
        H_ik.reducer(left_braided(K, w, v, c)) == zero_ik
        for v in H_jk.ext0_basis
        for c in H_ij.delta.matrix.columns()
    )
    out.append(CheckRecord("left-braided-image", subj, ok))
    return out


def _random_class(H: GradedHom, degree: int, rng: random.Random) -> ExtClass:
    K = H.field
    dim = H.ext0_dim if degree == 0 else H.ext1_dim
    coords = [rng.randrange(K.p) for _ in range(dim)]
    return H.ext0_class(coords) if degree == 0 else H.ext1_class(coords)


def _perturb(H: GradedHom, c: ExtClass, rng: random.Random) -> ExtClass:
    """Same class, representative shifted by a random image vector."""
    K = H.field
    u = [rng.randrange(K.p) for _ in range(H.braid.n)]
    return H.ext1_from_rep(vec_add(K, c.payload, H.delta(u)))


def representative_records(cat: Category, i: int, j: int, k: int, rng: random.Random, trials: int = 3) -> list[CheckRecord]:
    H_ij, H_jk, H_ik = cat.hom(i, j), cat.hom(j, k), cat.hom(i, k)
    subj = f"({cat.objects[i].label},{cat.objects[j].label},{cat.objects[k].label})"
    ok = True
    for _ in range(trials):
        a0, b0 = _random_class(H_ij, 0, rng), _random_class(H_jk, 0, rng)
        a1, b1 = _random_class(H_ij, 1, rng), _random_class(H_jk, 1, rng)
        ok &= compose(H_ij, H_jk, H_ik, _perturb(H_jk, b1, rng), a0) == compose(H_ij, H_jk, H_ik, b1, a0)
        ok &= compose(H_ij, H_jk, H_ik, b0, _perturb(H_ij, a1, rng)) == compose(H_ij, H_jk, H_ik, b0, a1)
    return [CheckRecord("representative-independence", subj, ok)]


def unit_records(cat: Category, i: int, j: int) -> list[CheckRecord]:
    H = cat.hom(i, j)
    id_i = identity_morphism(cat.hom(i, i))
    id_j = identity_morphism(cat.hom(j, j))
    ok = True
    for deg in (0, 1):
        for a in H.basis_classes(deg):
            ok &= cat.compose(i, j, j, id_j, a) == a
            ok &= cat.compose(i, i, j, a, id_i) == a
    return [CheckRecord("unit", _pair_subject(i, j), ok)]


def associativity_records(cat: Category, i: int, j: int, k: int, m: int) -> list[CheckRecord]:
    """(c o b) o a == c o (b o a) on basis classes of total degree <= 1."""
    ok = True
    for da, db, dc in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        for a in cat.hom(i, j).basis_classes(da):
            for b in cat.hom(j, k).basis_classes(db):
                for c in cat.hom(k, m).basis_classes(dc):
                    left = cat.compose(i, k, m, c, cat.compose(i, j, k, b, a))
                    right = cat.compose(i, j, m, cat.compose(j, k, m, c, b), a)
                    ok &= left == right
    subj = "(" + ",".join(cat.objects[x].label for x in (i, j, k, m)) + ")"
    return [CheckRecord("associativity", subj, ok)]


def bilinearity_records(cat: Category, i: int, j: int, k: int, rng: random.Random) -> list[CheckRecord]:
    H_ij, H_jk = cat.hom(i, j), cat.hom(j, k)
    H_ik = cat.hom(i, k)
    K = cat.field
    ok = True
    for db, da in [(0, 0), (1, 0), (0, 1)]:
        a1, a2 = _random_class(H_ij, da, rng), _random_class(H_ij, da, rng)
        b1, b2 = _random_class(H_jk, db, rng), _random_class(H_jk, db, rng)
        c = rng.randrange(K.p)
        left = cat.compose(i, j, k, b1, H_ij.add(a1, H_ij.scale(c, a2)))
        right = H_ik.add(cat.compose(i, j, k, b1, a1), H_ik.scale(c, cat.compose(i, j, k, b1, a2)))
        ok &= left == right
        left = cat.compose(i, j, k, H_jk.add(b1, H_jk.scale(c, b2)), a1)
        right = H_ik.add(cat.compose(i, j, k, b1, a1), H_ik.scale(c, cat.compose(i, j, k, b2, a1)))
        ok &= left == right
    subj = f"({cat.objects[i].label},{cat.objects[j].label},{cat.objects[k].label})"
    return [CheckRecord("bilinearity", subj, ok)]


def composition_law_records(cat: Category, triples: Iterable[tuple[int, int, int]], rng: random.Random) -> list[CheckRecord]:
    out = []
    for i, j, k in triples:
        out += closure_records(cat, i, j, k)
        out += representative_records(cat, i, j, k, rng)
        out += bilinearity_records(cat, i, j, k, rng)
        out += associativity_records(cat, i, j, k, i)
    for i, j in {(t[0], t[1]) for t in triples}:
        out += unit_records(cat, i, j)
    return out


def verify_composition_laws(
    K: Field,
    w: BraidWord,
    *,
    samples: int | None = None,
    rng: random.Random | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """Closure, representative independence, bilinearity, unit and associativity laws.

    Exhaustive over all object triples of the enumerated variety, or over
    ``samples`` random triples of random points.
    """
    rng = rng or random.Random(0)
    rep = Report("composition-laws", w.spec(), str(K))
    if samples is None:
        pts = enumerate_variety(K, w, budget=budget)
        cat = Category(K, w, pts)
        triples = list(itertools.product(range(len(pts)), repeat=3))
    else:
        pts = [random_point(K, w, rng) for _ in range(3 * samples)]
        cat = Category(K, w, pts)
        triples = [(3 * s, 3 * s + 1, 3 * s + 2) for s in range(samples)]
    rep.extend(composition_law_records(cat, triples, rng))
    return rep


def is_in_column_space(A: Matrix, v) -> bool:
    return solve(A, v) is not None
