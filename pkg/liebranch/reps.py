# -*- coding: utf-8 -*-
"""
Characters of irreducible representations.

Dimensions come from the Weyl product formula, dominant multiplicities from
the Freudenthal recursion, tensor products from the Klimyk alternation, and
branching maps the full weight multiset through a restriction matrix before
stripping irreducible characters off the top.

Weights over a product type are concatenations of the factor weights;
central coordinates ride along untouched.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from liebranch.logging_utils import get_logger
from liebranch.rootsys import (
    LieType,
    RootSystem,
    ShapeError,
    SimpleLieType,
    Weight,
    build_root_system,
    split_weight,
)
from liebranch.weyl import NotDominantError, orbit_coords, straighten_coords

_log = get_logger(__name__)

Coords = Tuple[int, ...]


class DecompositionError(ArithmeticError):
    """A character could not be written as a nonnegative sum of irreducibles."""

    def __init__(self, message: str, weight: Optional[Weight] = None):
        self.weight = weight
        super().__init__(message if weight is None else f"{message} at {weight}")


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

class Decomposition:
    """Finite multiset of dominant weights over ``type``."""

    def __init__(self, type: LieType, terms: Optional[Mapping[Weight, int]] = None, convention: str = "native"):
        self.type = type
        self.convention = convention
        self.terms: Dict[Weight, int] = {}
        for w, m in (terms or {}).items():
            if m < 0:
                raise DecompositionError("negative multiplicity", w)
            if m:
                self.terms[w] = self.terms.get(w, 0) + int(m)

    def items(self) -> List[Tuple[Weight, int]]:
        """Terms sorted lexicographically on (k-weight, central values)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0].coords, kv[0].central))

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, w: Weight) -> int:
        return self.terms.get(w, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.type == other.type and self.terms == other.terms

    def __repr__(self) -> str:
        body = " +".join(f"{m}X{w}" for w, m in self.items())
        return f"Decomposition({self.type}: {body})"

    def total_dim(self) -> int:
        return sum(m * dim(self.type, w) for w, m in self.terms.items())

    def central_values(self) -> List[Tuple[Fraction, ...]]:
        return sorted({w.central for w in self.terms})


@dataclass(frozen=True)
class RestrictionMatrix:
    """
    Rows: restrictions of g's fundamental weights.  Columns: k's semisimple
    weight coordinates, then the central columns listed in ``central_cols``,
    whose values are divided by ``central_den``.
    """

    entries: Tuple[Tuple[int, ...], ...]
    central_cols: Tuple[int, ...] = ()
    central_den: int = 1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "central_cols", tuple(self.central_cols))
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ShapeError(max(widths), min(widths), "matrix row")
        if self.central_den <= 0:
            raise ValueError("central_den must be positive")

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def semisimple_cols(self) -> Tuple[int, ...]:
        return tuple(j for j in range(self.n_cols) if j not in self.central_cols)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=np.int64).reshape(self.n_rows, self.n_cols)
        arr.setflags(write=False)
        return arr

    def apply(self, coords: Sequence[int]) -> Weight:
        """Restrict one weight (row vector times matrix)."""
        if len(coords) != self.n_rows:
            raise ShapeError(self.n_rows, len(coords))
        img = np.asarray(coords, dtype=np.int64) @ self.array
        return Weight(
            tuple(int(img[j]) for j in self.semisimple_cols),
            tuple(Fraction(int(img[j]), self.central_den) for j in self.central_cols),
        )

    @classmethod
    def direct_sum(cls, blocks: Sequence["RestrictionMatrix"]) -> "RestrictionMatrix":
        """Block-diagonal sum; semisimple columns first, then every central column."""
        dens = [b.central_den for b in blocks]
        den = 1
        for d in dens:
            den = den * d // math.gcd(den, d)
        n_rows = sum(b.n_rows for b in blocks)
        ss_total = sum(len(b.semisimple_cols) for b in blocks)
        c_total = sum(len(b.central_cols) for b in blocks)
        rows = [[0] * (ss_total + c_total) for _ in range(n_rows)]
        r0, s0, c0 = 0, 0, ss_total
        for b in blocks:
            scale = den // b.central_den
            for i, row in enumerate(b.entries):
                for a, j in enumerate(b.semisimple_cols):
                    rows[r0 + i][s0 + a] = row[j]
                for a, j in enumerate(b.central_cols):
                    rows[r0 + i][c0 + a] = row[j] * scale
            r0 += b.n_rows
            s0 += len(b.semisimple_cols)
            c0 += len(b.central_cols)
        return cls(tuple(map(tuple, rows)), tuple(range(ss_total, ss_total + c_total)), den)


def _coords_of(t: LieType, w) -> Tuple[Coords, Tuple[Fraction, ...]]:
    if isinstance(w, Weight):
        coords, central = w.coords, w.central
    else:
        coords, central = tuple(int(x) for x in w), ()
    if len(coords) != t.semisimple_rank:
        raise ShapeError(t.semisimple_rank, len(coords))
    return coords, central


def _require_dominant(coords: Coords) -> None:
    if any(c < 0 for c in coords):
        raise NotDominantError(coords)


# ---------------------------------------------------------------------------
# Dimension
# ---------------------------------------------------------------------------

def _dim_simple(rs: RootSystem, coords: Coords) -> int:
    num, den = 1, 1
    for k in rs.pos_coroots:
        num *= sum((c + 1) * kj for c, kj in zip(coords, k))
        den *= sum(k)
    q, r = divmod(num, den)
    if r:
        raise DecompositionError(f"Weyl formula gave non-integer {num}/{den}")
    return q


def dim(t: LieType, w) -> int:
    """Weyl dimension, exact; multiplicative over factors, central part ignored."""
    coords, _ = _coords_of(t, w)
    _require_dominant(coords)
    out = 1
    for f, piece in zip(t.simple_factors, split_weight(t, coords)):
        out *= _dim_simple(build_root_system(f), piece)
    return out


# ---------------------------------------------------------------------------
# Freudenthal recursion
# ---------------------------------------------------------------------------

def _scale(rs: RootSystem) -> Tuple[int, Tuple[int, ...]]:
    """(L, s) with s_j = L·d_j/2 integral, d_j the squared simple-root lengths."""
    halves = [x / 2 for x in rs.lengths]
    big = 1
    for h in halves:
        big = big * h.denominator // math.gcd(big, h.denominator)
    return big, tuple(int(h * big) for h in halves)


@lru_cache(maxsize=4096)
def _freudenthal(t: SimpleLieType, top: Coords) -> Tuple[Tuple[Coords, int], ...]:
    rs = build_root_system(t)
    n = rs.rank
    roots = rs.pos_roots
    roots_w = rs.pos_root_weights
    _, s = _scale(rs)

    # dominant weights below top with their root-coordinate distance
    below: Dict[Coords, Coords] = {top: (0,) * n}
    queue = [top]
    for mu in queue:
        base = below[mu]
        for alpha, aw in zip(roots, roots_w):
            nu = tuple(a - b for a, b in zip(mu, aw))
            if min(nu) >= 0 and nu not in below:
                below[nu] = tuple(x + y for x, y in zip(base, alpha))
                queue.append(nu)
    order = sorted(below, key=lambda mu: (sum(below[mu]), tuple(-c for c in mu)))

    # (x, α)·L for x in weight coordinates, per positive root
    pair = [tuple(alpha[j] * s[j] for j in range(n)) for alpha in roots]

    mults: Dict[Coords, int] = {top: 1}
    conj: Dict[Coords, Coords] = {}

    def lookup(x: Coords) -> int:
        d = conj.get(x)
        if d is None:
            d = straighten_coords(rs, x)[0]
            conj[x] = d
        return mults.get(d, 0)

    shifted_top = tuple(c + 1 for c in top)
    for mu in order[1:]:
        diff = below[mu]
        # L·(λ-μ, λ+μ+2ρ)
        lhs = sum(diff[j] * (shifted_top[j] + mu[j] + 1) * s[j] for j in range(n))
        acc = 0
        for aw, p in zip(roots_w, pair):
            k = 1
            x = tuple(a + b for a, b in zip(mu, aw))
            m = lookup(x)
            while m:
                acc += m * sum(x[j] * p[j] for j in range(n))
                k += 1
                x = tuple(a + b for a, b in zip(x, aw))
                m = lookup(x)
        q, r = divmod(2 * acc, lhs)
        if r:
            raise DecompositionError(f"Freudenthal recursion not integral for {t} {list(top)}")
        if q:
            mults[mu] = q
    _log.debug("freudenthal %s %s: %d dominant weights", t, list(top), len(mults))
    return tuple(sorted(mults.items(), key=lambda kv: below[kv[0]]))


def _dominant_coords(t: LieType, coords: Coords) -> Dict[Coords, int]:
    pieces = split_weight(t, coords)
    tables = [_freudenthal(f, piece) for f, piece in zip(t.simple_factors, pieces)]
    out: Dict[Coords, int] = {}
    for combo in itertools.product(*tables):
        key = tuple(itertools.chain.from_iterable(c for c, _ in combo))
        out[key] = math.prod(m for _, m in combo)
    return out


def dominant_mults(t: LieType, w) -> Dict[Weight, int]:
    """Every dominant weight below ``w`` with its multiplicity in V(w)."""
    coords, central = _coords_of(t, w)
    _require_dominant(coords)
    return {Weight(c, central): m for c, m in _dominant_coords(t, coords).items()}


def _multiset_coords(t: LieType, coords: Coords) -> Dict[Coords, int]:
    pieces = split_weight(t, coords)
    per_factor = []
    for f, piece in zip(t.simple_factors, pieces):
        rs = build_root_system(f)
        full: Dict[Coords, int] = {}
        for mu, m in _freudenthal(f, piece):
            for nu in orbit_coords(rs, mu):
                full[nu] = m
        per_factor.append(list(full.items()))
    out: Dict[Coords, int] = {}
    for combo in itertools.product(*per_factor):
        key = tuple(itertools.chain.from_iterable(c for c, _ in combo))
        out[key] = math.prod(m for _, m in combo)
    return out


def weight_multiset(t: LieType, w) -> Dict[Weight, int]:
    """All weights of V(w), dominant or not, with multiplicities."""
    coords, central = _coords_of(t, w)
    _require_dominant(coords)
    return {Weight(c, central): m for c, m in _multiset_coords(t, coords).items()}


# ---------------------------------------------------------------------------
# Decomposition of characters
# ---------------------------------------------------------------------------

def _height(t: LieType, coords: Coords) -> Fraction:
    return sum(
        (build_root_system(f).weight_height(piece) for f, piece in zip(t.simple_factors, split_weight(t, coords))),
        Fraction(0),
    )


def decompose_character(t: LieType, c: Mapping[Weight, int]) -> Decomposition:
    """
    Strip irreducible characters off the top: highest <λ, ρ^∨> first, ties
    broken lexicographically descending.
    """
    remaining: Dict[Weight, int] = {}
    for w, m in c.items():
        if len(w.coords) != t.semisimple_rank:
            raise ShapeError(t.semisimple_rank, len(w.coords))
        if not w.is_dominant():
            raise NotDominantError(w.coords)
        if m:
            remaining[w] = remaining.get(w, 0) + m
    result: Dict[Weight, int] = {}
    heights: Dict[Coords, Fraction] = {}

    def key(w: Weight):
        h = heights.get(w.coords)
        if h is None:
            h = heights[w.coords] = _height(t, w.coords)
        return (h, w.coords, w.central)

    while remaining:
        top = max(remaining, key=key)
        m = remaining[top]
        if m < 0:
            raise DecompositionError("negative coefficient", top)
        result[top] = m
        for mu, k in _dominant_coords(t, top.coords).items():
            w = Weight(mu, top.central)
            left = remaining.get(w, 0) - m * k
            if left < 0:
                raise DecompositionError("negative coefficient", w)
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return Decomposition(t, result)


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------

def _tensor_simple(f: SimpleLieType, a: Coords, b: Coords) -> Dict[Coords, int]:
    rs = build_root_system(f)
    # expand the smaller factor
    if _dim_simple(rs, a) < _dim_simple(rs, b):
        a, b = b, a
    shifted = tuple(x + 1 for x in a)
    acc: Dict[Coords, int] = defaultdict(int)
    for mu, m in _freudenthal(f, b):
        for nu in orbit_coords(rs, mu):
            x = tuple(p + q for p, q in zip(shifted, nu))
            dom, count = straighten_coords(rs, x)
            if min(dom) == 0:
                continue
            acc[tuple(d - 1 for d in dom)] += m if count % 2 == 0 else -m
    out = {}
    for lam, m in acc.items():
        if m < 0:
            raise DecompositionError(f"Klimyk alternation left {m} at {list(lam)}")
        if m:
            out[lam] = m
    return out


def tensor(t: LieType, a, b) -> Decomposition:
    """V(a) ⊗ V(b) by the Klimyk alternation, factor by factor."""
    ca, za = _coords_of(t, a)
    cb, zb = _coords_of(t, b)
    _require_dominant(ca)
    _require_dominant(cb)
    central = _add_central(za, zb, t.torus_rank)
    tables = [
        list(_tensor_simple(f, pa, pb).items())
        for f, pa, pb in zip(t.simple_factors, split_weight(t, ca), split_weight(t, cb))
    ]
    terms: Dict[Weight, int] = {}
    for combo in itertools.product(*tables):
        key = tuple(itertools.chain.from_iterable(c for c, _ in combo))
        terms[Weight(key, central)] = math.prod(m for _, m in combo)
    return Decomposition(t, terms)


def _add_central(za: Sequence[Fraction], zb: Sequence[Fraction], rank: int) -> Tuple[Fraction, ...]:
    za = tuple(za) or (Fraction(0),) * rank
    zb = tuple(zb) or (Fraction(0),) * rank
    if not rank:
        return ()
    return tuple(x + y for x, y in zip(za, zb))


def branch_diag(t, rows: Sequence) -> Decomposition:
    """Restriction of an outer product of ``rows`` to the diagonal copy of ``t``."""
    lt = t if isinstance(t, LieType) else LieType((t,))
    if not rows:
        raise ValueError("branch_diag needs at least one row")
    first, central = _coords_of(lt, rows[0])
    _require_dominant(first)
    current: Dict[Weight, int] = {Weight(first, central): 1}
    for row in rows[1:]:
        nxt: Dict[Weight, int] = defaultdict(int)
        for lam, m in current.items():
            for mu, k in tensor(lt, lam, row).terms.items():
                nxt[mu] += m * k
        current = dict(nxt)
    return Decomposition(lt, current)


# ---------------------------------------------------------------------------
# Branching through a restriction matrix
# ---------------------------------------------------------------------------

def _check_shapes(g: LieType, R: RestrictionMatrix, k: LieType) -> None:
    if R.n_rows != g.semisimple_rank:
        raise ShapeError(g.semisimple_rank, R.n_rows, "restriction matrix rows")
    if R.n_cols != k.rank or len(R.central_cols) != k.torus_rank:
        raise ShapeError(k.rank, R.n_cols, "restriction matrix columns")


def restricted_character(g: LieType, w, R: RestrictionMatrix, k: LieType,
                         dominant_only: bool = True) -> Tuple[Dict[Weight, int], Dict[Weight, Coords]]:
    """
    Image of the weight multiset of V(w) under R, plus for each image weight
    the g-weight it came from (first one seen when the map is not injective).
    """
    _check_shapes(g, R, k)
    coords, _ = _coords_of(g, w)
    _require_dominant(coords)
    ms = _multiset_coords(g, coords)
    keys = list(ms)
    if not keys:
        return {}, {}
    img = np.asarray(keys, dtype=np.int64).reshape(len(keys), R.n_rows) @ R.array
    ss = list(R.semisimple_cols)
    cc = list(R.central_cols)
    out: Dict[Weight, int] = defaultdict(int)
    origin: Dict[Weight, Coords] = {}
    for src, row in zip(keys, img):
        kw = tuple(int(x) for x in row[ss])
        if dominant_only and any(x < 0 for x in kw):
            continue
        cent = tuple(Fraction(int(row[j]), R.central_den) for j in cc)
        wt = Weight(kw, cent)
        out[wt] += ms[src]
        origin.setdefault(wt, src)
    _log.debug("restricted %d weights of %s %s to %d %s-weights", len(keys), g, list(coords), len(out), k)
    return dict(out), origin


def branch(g: LieType, w, R: RestrictionMatrix, k: LieType) -> Decomposition:
    """Decomposition of V(w)|k; checks dimension conservation."""
    char, _ = restricted_character(g, w, R, k)
    dec = decompose_character(k, char)
    expected = dim(g, w)
    got = dec.total_dim()
    if got != expected:
        raise DecompositionError(f"dimension not conserved: {got} != {expected}")
    return dec


def branch_tracked(g: LieType, w, R: RestrictionMatrix, k: LieType) -> Tuple[Decomposition, Dict[Weight, Coords]]:
    """As ``branch``, also returning the g-weight of each component's top vector."""
    char, origin = restricted_character(g, w, R, k)
    dec = decompose_character(k, char)
    if dec.total_dim() != dim(g, w):
        raise DecompositionError(f"dimension not conserved: {dec.total_dim()} != {dim(g, w)}")
    return dec, {lam: origin[lam] for lam in dec.terms}


def branch_product(parts: Sequence[Tuple[LieType, RestrictionMatrix, LieType]], weight) -> Decomposition:
    """
    Branch a weight of a product g = g_1 × … × g_r, each factor through its own
    restriction; k is the product of the targets.
    """
    g = LieType(
        tuple(itertools.chain.from_iterable(p[0].simple_factors for p in parts)),
    )
    k = LieType(
        tuple(itertools.chain.from_iterable(p[2].simple_factors for p in parts)),
        sum(p[2].torus_rank for p in parts),
    )
    R = RestrictionMatrix.direct_sum([p[1] for p in parts])
    return branch(g, weight, R, k)


def character_of(t: LieType, dec: Decomposition) -> Dict[Weight, int]:
    """Full weight multiset of a decomposition (inverse of stripping)."""
    out: Dict[Weight, int] = defaultdict(int)
    for lam, m in dec.terms.items():
        for mu, k in _multiset_coords(t, lam.coords).items():
            out[Weight(mu, lam.central)] += m * k
    return dict(out)
