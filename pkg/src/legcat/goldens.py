"""Reference tables for the Hopf link (sigma1 sigma2 sigma1) and the trefoil
(sigma1 sigma2 sigma1 sigma2) over Z/2, and their comparison with the engine.

Bases are stored exactly as published.  Degree-0 bases are compared
verbatim; degree-1 generators only modulo the image of delta, because any
complement of the image is a valid model of Ext^1.  Composition tables are
stored as structure constants in the published bases: ``table[b][a]`` holds
the coordinates of ``basis_b o basis_a`` in the published basis of the target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import parse_braid
from .category import Category, ExtClass, GradedHom
from .exactlin import Matrix, PrimeField, rank, solve
from .invariants import Report
from .variety import enumerate_variety


@dataclass(frozen=True)
class GoldenHom:
    pair: tuple[int, int]
    ext0: tuple
    ext1: tuple


@dataclass(frozen=True)
class GoldenComposition:
    name: str
    triple: tuple[int, int, int]
    degrees: tuple[int, int]  # (degree of b, degree of a) for b o a
    table: tuple


@dataclass(frozen=True)
class GoldenExample:
    name: str
    braid: str
    points: tuple
    dims: tuple
    homs: tuple
    compositions: tuple


def _diag_dims(m: int, on, off) -> tuple:
    return tuple(tuple(on if i == j else off for j in range(m)) for i in range(m))


def _endo_rows(name: str, i: int, d0: int, d1: int, t01) -> tuple:
    """Unital endomorphism tables: (0,0) and (1,0) diagonal, (0,1) given."""
    e = lambda k, d: tuple(1 if x == k else 0 for x in range(d))
    z = lambda d: (0,) * d
    t00 = tuple(tuple(e(b, d0) if a == b else z(d0) for a in range(d0)) for b in range(d0))
    t10 = tuple(tuple(e(q, d1) if d0 == 1 or a == q else z(d1) for a in range(d0)) for q in range(d1))
    return (
        GoldenComposition(f"{name} (0,0)", (i, i, i), (0, 0), t00),
        GoldenComposition(f"{name} (1,0)", (i, i, i), (1, 0), t10),
        GoldenComposition(f"{name} (0,1)", (i, i, i), (0, 1), t01),
    )


HOPF = GoldenExample(
    name="hopf",
    braid="n=3; w=1,2,1",
    points=((0, 1, 0), (0, 1, 1), (1, 1, 0)),
    dims=tuple(tuple((2, 2) if (i, j) == (0, 0) else (1, 1) for j in range(3)) for i in range(3)),
    homs=(
        GoldenHom((0, 0), ((0, 1, 0), (1, 0, 1)), ((1, 0, 0), (0, 0, 1))),
        GoldenHom((1, 1), ((1, 1, 1),), ((1, 0, 0),)),
        GoldenHom((2, 2), ((1, 1, 1),), ((0, 0, 1),)),
        GoldenHom((2, 0), ((0, 1, 0),), ((0, 0, 1),)),
        GoldenHom((0, 1), ((0, 1, 0),), ((1, 0, 0),)),
        GoldenHom((2, 1), ((0, 1, 0),), ((1, 1, 1),)),
    ),
    compositions=(
        # b_i u_i o p_k alpha_k = b2 p1 alpha1 + b1 p2 alpha2
        *_endo_rows("End(F1)", 0, 2, 2, (((0, 0), (0, 1)), ((1, 0), (0, 0)))),
        *_endo_rows("End(F2)", 1, 1, 1, (((1,),),)),
        *_endo_rows("End(F3)", 2, 1, 1, (((1,),),)),
        GoldenComposition("(F3,F1,F2) (0,0)", (2, 0, 1), (0, 0), (((1,),),)),
        GoldenComposition("(F3,F1,F2) (1,0)", (2, 0, 1), (1, 0), (((0,),),)),
        GoldenComposition("(F3,F1,F2) (0,1)", (2, 0, 1), (0, 1), (((0,),),)),
    ),
)

TREFOIL = GoldenExample(
    name="trefoil",
    braid="n=3; w=1,2,1,2",
    points=((0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 0, 1)),
    dims=_diag_dims(5, (1, 2), (0, 1)),
    homs=(
        GoldenHom((0, 0), ((1, 1, 1),), ((1, 0, 0, 0), (0, 0, 1, 0))),
        GoldenHom((0, 1), (), ((1, 0, 0, 0),)),
        GoldenHom((1, 2), (), ((0, 0, 0, 1),)),
        GoldenHom((0, 2), (), ((1, 0, 0, 1),)),
    ),
    compositions=(
        *_endo_rows("End(F1)", 0, 1, 2, (((1, 0), (0, 1)),)),
        GoldenComposition("(F1,F2,F3) (0,0)", (0, 1, 2), (0, 0), ()),
        GoldenComposition("(F1,F2,F3) (1,0)", (0, 1, 2), (1, 0), ((),)),
        GoldenComposition("(F1,F2,F3) (0,1)", (0, 1, 2), (0, 1), ()),
        GoldenComposition("(F1,F1,F2) (0,0)", (0, 0, 1), (0, 0), ()),
        GoldenComposition("(F1,F1,F2) (1,0)", (0, 0, 1), (1, 0), (((1,),),)),
        GoldenComposition("(F1,F1,F2) (0,1)", (0, 0, 1), (0, 1), ()),
    ),
)

EXAMPLES = (HOPF, TREFOIL)


def _golden_hom(ex: GoldenExample, pair) -> GoldenHom:
    for h in ex.homs:
        if h.pair == tuple(pair):
            return h
    raise KeyError(f"{ex.name} has no published bases for {pair}")


def _published_classes(H: GradedHom, gh: GoldenHom, degree: int) -> list[ExtClass]:
    if degree == 0:
        return [H.kernel_class(u) for u in gh.ext0]
    return [H.ext1_from_rep(p) for p in gh.ext1]


def coordinates_in(H: GradedHom, basis: list[ExtClass], c: ExtClass, degree: int):
    """Coordinates of ``c`` in ``basis`` (classes of ``H``), or None if outside their span."""
    dim = H.ext0_dim if degree == 0 else H.ext1_dim
    if dim == 0:
        return (0,) * len(basis)
    if not basis:
        return () if c.is_zero() else None
    A = Matrix.from_columns(H.field, [b.coords for b in basis])
    return solve(A, list(c.coords))


def classes_form_basis(H: GradedHom, classes: list[ExtClass], degree: int) -> bool:
    dim = H.ext0_dim if degree == 0 else H.ext1_dim
    if len(classes) != dim:
        return False
    if dim == 0:
        return True
    return rank(Matrix.from_columns(H.field, [c.coords for c in classes])) == dim


def engine_table(cat: Category, ex: GoldenExample, row: GoldenComposition):
    """Structure constants of the engine's composition in the published bases."""
    i, j, k = row.triple
    db, da = row.degrees
    H_ij, H_jk, H_ik = cat.hom(i, j), cat.hom(j, k), cat.hom(i, k)
    A = _published_classes(H_ij, _golden_hom(ex, (i, j)), da)
    B = _published_classes(H_jk, _golden_hom(ex, (j, k)), db)
    T = _published_classes(H_ik, _golden_hom(ex, (i, k)), db + da)
    out = []
    for b in B:
        line = []
        for a in A:
            c = cat.compose(i, j, k, b, a)
            coords = coordinates_in(H_ik, T, c, db + da)
            line.append(None if coords is None else tuple(coords))
        out.append(tuple(line))
    return tuple(out)


def _table_class_equal(H: GradedHom, T: list[ExtClass], degree: int, got, want) -> bool:
    """Compare two coefficient tables as classes, so redundant published generators do not matter."""
    if len(got) != len(want):
        return False
    for g_line, w_line in zip(got, want):
        if len(g_line) != len(w_line):
            return False
        for g, w in zip(g_line, w_line):
            if g is None:
                return False
            combo = lambda cs: H.zero(degree) if not T else _combine(H, T, cs)
            if combo(g) != combo(w):
                return False
    return True


def _combine(H: GradedHom, T: list[ExtClass], coords) -> ExtClass:
    acc = H.zero(T[0].degree)
    for c, t in zip(coords, T):
        acc = H.add(acc, H.scale(c, t))
    return acc


def check_example(ex: GoldenExample) -> Report:
    K = PrimeField(2)
    w = parse_braid(ex.braid)
    rep = Report(f"tables:{ex.name}", w.spec(), str(K))
    pts = enumerate_variety(K, w)
    rep.add("points", ex.name, tuple(pts) == ex.points, ex.points, pts)
    cat = Category(K, w, ex.points)
    dims = tuple(tuple(cat.hom(i, j).dims for j in range(len(pts))) for i in range(len(pts)))
    rep.add("dims", ex.name, dims == ex.dims, ex.dims, dims)
    for gh in ex.homs:
        H = cat.hom(*gh.pair)
        subj = f"{ex.name} (F{gh.pair[0] + 1},F{gh.pair[1] + 1})"
        got0 = tuple(tuple(u) for u in H.ext0_basis)
        rep.add("ext0-basis", subj, got0 == gh.ext0, gh.ext0, got0)
        ok1 = classes_form_basis(H, _published_classes(H, gh, 1), 1)
        rep.add("ext1-generators", subj, ok1, gh.ext1, [tuple(v) for v in H.ext1_complement])
    for row in ex.compositions:
        got = engine_table(cat, ex, row)
        i, _, k = row.triple
        H_ik = cat.hom(i, k)
        degree = sum(row.degrees)
        T = _published_classes(H_ik, _golden_hom(ex, (i, k)), degree)
        ok = _table_class_equal(H_ik, T, degree, got, row.table)
        rep.add("composition", f"{ex.name} {row.name}", ok, row.table, got)
    return rep


def check_all() -> list[Report]:
    return [check_example(ex) for ex in EXAMPLES]
