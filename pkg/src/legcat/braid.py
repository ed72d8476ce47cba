"""Positive braid words and the permutation data derived from them.

Generators are 1-indexed (``sigma_1 .. sigma_{n-1}``) exactly as written in
the text grammar ``n=3; w=1,2,1``.  Tuples of values attached to strands are
ordinary 0-indexed Python sequences.

Two readings of "permute a tuple by the truncated braid" exist.  The one
used everywhere is *strand tracking*: walk through the first ``j`` crossings
and swap the values sitting at positions ``i_k, i_k + 1``.  This reproduces
the worked Hopf and trefoil formulas.  :func:`permuted_tuple` implements the
other reading, ``(u[pi(1)], ..., u[pi(n)])``, for comparison only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError, ShapeError


@dataclass(frozen=True)
class BraidWord:
    n: int
    gens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(int(g) for g in self.gens))
        if self.n < 2:
            raise ValueError(f"need at least 2 strands, got n={self.n}")
        bad = [g for g in self.gens if not 1 <= g <= self.n - 1]
        if bad:
            raise ValueError(f"generator indices {bad} outside [1, {self.n - 1}]")

    @property
    def length(self) -> int:
        return len(self.gens)

    def __len__(self):
        return len(self.gens)

    def spec(self) -> str:
        return f"n={self.n}; w={','.join(map(str, self.gens))}"

    def __str__(self):
        if not self.gens:
            return f"e_{self.n}"
        return "".join(f"s{g}" for g in self.gens)


_SPEC_RE = re.compile(r"^n=(?P<n>[+-]?\d+);w=(?P<w>[\d,]*)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n=<int>; w=<i1>,<i2>,..."``; whitespace is ignored."""
    compact = re.sub(r"\s+", "", text)
    m = _SPEC_RE.match(compact)
    if not m:
        raise ParseError(f"cannot parse braid spec {text!r}; expected 'n=<int>; w=<i,j,...>'")
    w = m.group("w")
    parts = w.split(",") if w else []
    if any(p == "" for p in parts):
        raise ParseError(f"empty generator index in {text!r}")
    try:
        return BraidWord(int(m.group("n")), tuple(int(p) for p in parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _check_index(w: BraidWord, j: int):
    if not 0 <= j <= w.length:
        raise IndexError(f"truncation index {j} outside [0, {w.length}]")


def truncate(w: BraidWord, j: int) -> BraidWord:
    _check_index(w, j)
    return BraidWord(w.n, w.gens[:j])


def permutation_of(w: BraidWord, j: int | None = None) -> tuple[int, ...]:
    """One-line notation of ``s_{i_1} ... s_{i_j}``, composed left to right.

    Entry ``k - 1`` holds the image of ``k``; values are 1-based.  With
    left-to-right composition ``(p1 p2)(k) = p2(p1(k))``, so each new
    transposition acts on the images produced so far.
    """
    if j is None:
        j = w.length
    _check_index(w, j)
    perm = list(range(1, w.n + 1))
    for g in w.gens[:j]:
        perm = [g + 1 if x == g else g if x == g + 1 else x for x in perm]
    return tuple(perm)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm, start=1):
        inv[p - 1] = i
    return tuple(inv)


def tracked_tuple(w: BraidWord, j: int, u: Sequence) -> tuple:
    """Values of ``u`` carried along the strands through the first ``j`` crossings."""
    _check_index(w, j)
    if len(u) != w.n:
        raise ShapeError(f"expected a {w.n}-tuple, got length {len(u)}")
    out = list(u)
    for g in w.gens[:j]:
        out[g - 1], out[g] = out[g], out[g - 1]
    return tuple(out)


def tracked_prefixes(w: BraidWord, u: Sequence) -> list[tuple]:
    """``[tracked_tuple(w, j, u) for j in 0..l]`` in one pass."""
    if len(u) != w.n:
        raise ShapeError(f"expected a {w.n}-tuple, got length {len(u)}")
    cur = list(u)
    out = [tuple(cur)]
    for g in w.gens:
        cur[g - 1], cur[g] = cur[g], cur[g - 1]
        out.append(tuple(cur))
    return out


def permuted_tuple(w: BraidWord, j: int, u: Sequence) -> tuple:
    """Literal reading ``(u[pi(1)], ..., u[pi(n)])`` with ``pi = permutation_of(w, j)``.

    Kept for comparison; it does not reproduce the worked examples.
    """
    if len(u) != w.n:
        raise ShapeError(f"expected a {w.n}-tuple, got length {len(u)}")
    perm = permutation_of(w, j)
    return tuple(u[p - 1] for p in perm)


def thurston_bennequin(w: BraidWord) -> int:
    return w.length - w.n


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        k = start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k - 1]
        out.append(tuple(cyc))
    return out


def component_count(w: BraidWord) -> int:
    return len(cycles(permutation_of(w)))


def is_knot(w: BraidWord) -> bool:
    return component_count(w) == 1
