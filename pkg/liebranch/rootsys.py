# -*- coding: utf-8 -*-
"""
Classified simple Lie types in Bourbaki order and their Cartan data.

Conventions used everywhere in the package:

  * Weight coordinates are taken in the fundamental-weight basis ξ_i.
  * Root vectors are integer coefficient tuples in the simple-root basis ψ_i.
  * Row i of ``cartan`` is the weight-coordinate vector of ψ_i, i.e.
    cartan[i][j] = <ψ_i, ψ_j^∨>.  Converting a root vector ``c`` to weight
    coordinates is the row-vector product ``c · cartan``.
  * The invariant form is normalized so long roots have squared length 2.

Usage:
    from liebranch.rootsys import LieType, build_root_system
    rs = build_root_system(LieType.parse("F4").simple_factors[0])
    rs.highest_root            # (2, 3, 4, 2)
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import sympy

from liebranch.logging_utils import get_logger

_log = get_logger(__name__)

RootVec = Tuple[int, ...]

FAMILIES = "ABCDEFG"


class LieTypeError(ValueError):
    """Raised for an unknown family, an out-of-range rank or bad type syntax."""

    def __init__(self, text: str, message: str):
        self.text = text
        self.message = message
        super().__init__(f"{message}: {text!r}")


class ShapeError(ValueError):
    """Raised when a vector or matrix does not match the rank it is used with."""

    def __init__(self, expected: int, got: int, what: str = "vector"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what} has length {got}, expected {expected}")


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleLieType:
    """A canonical simple type; aliases go through ``canonical_factors``."""

    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES:
            raise LieTypeError(f"{fam}{n}", "unknown family")
        if fam in _EXCEPTIONAL_RANKS:
            ok = n in _EXCEPTIONAL_RANKS[fam]
        else:
            ok = n >= _MIN_RANK[fam]
        if not ok:
            raise LieTypeError(f"{fam}{n}", "rank out of range (use canonical_factors for aliases)")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class LieType:
    """Product of simple factors plus a central torus of rank ``torus_rank``."""

    simple_factors: Tuple[SimpleLieType, ...] = ()
    torus_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "simple_factors", tuple(self.simple_factors))
        if self.torus_rank < 0:
            raise LieTypeError(str(self.torus_rank), "negative torus rank")

    @property
    def semisimple_rank(self) -> int:
        return sum(f.rank for f in self.simple_factors)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    def offsets(self) -> List[int]:
        """Start index of each simple factor inside a concatenated weight."""
        out, pos = [], 0
        for f in self.simple_factors:
            out.append(pos)
            pos += f.rank
        return out

    def is_simple(self) -> bool:
        return len(self.simple_factors) == 1 and self.torus_rank == 0

    def __str__(self) -> str:
        text = "".join(str(f) for f in self.simple_factors)
        if self.torus_rank:
            text += f"T{self.torus_rank}"
        return text or "T0"

    @classmethod
    def of(cls, *factors: SimpleLieType, torus_rank: int = 0) -> "LieType":
        return cls(tuple(factors), torus_rank)

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse "E8", "A2A2", "A1D6", "E6T1"; aliases such as "D3" canonicalize."""
        src = (text or "").strip().replace("x", "").replace("*", "").replace(" ", "")
        if not src or not re.fullmatch(r"([A-GT]\d+)+", src):
            raise LieTypeError(text, "bad Lie type syntax")
        factors: List[SimpleLieType] = []
        torus = 0
        for fam, num in re.findall(r"([A-GT])(\d+)", src):
            n = int(num)
            if fam == "T":
                torus += n
                continue
            canon, _ = canonical_factors(fam, n)
            factors.extend(canon)
        return cls(tuple(factors), torus)


@dataclass(frozen=True, order=True)
class Weight:
    """Fundamental-weight coordinates plus optional exact central coordinates."""

    coords: Tuple[int, ...]
    central: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        object.__setattr__(self, "central", tuple(Fraction(c) for c in self.central))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        text = "[" + ",".join(str(c) for c in self.coords) + "]"
        if self.central:
            text += "(" + ",".join(str(c) for c in self.central) + ")"
        return text

    @classmethod
    def of(cls, *coords: int) -> "Weight":
        return cls(tuple(coords))


# ---------------------------------------------------------------------------
# Aliases and raw Cartan matrices
# ---------------------------------------------------------------------------

def canonical_factors(family: str, rank: int) -> Tuple[Tuple[SimpleLieType, ...], Tuple[int, ...]]:
    """
    Canonical factors of a possibly aliased (family, rank), plus the node order.

    ``order[i]`` is the raw node index (0-based, raw Bourbaki numbering of
    ``family``/``rank``) that sits at canonical position ``i``.  B0 has no
    factors.  D1 is a torus and is not representable here.
    """
    key = (family, rank)
    if key in {("B", 1), ("C", 1)}:
        return (SimpleLieType("A", 1),), (0,)
    if key == ("C", 2):
        return (SimpleLieType("B", 2),), (1, 0)
    if key == ("D", 2):
        return (SimpleLieType("A", 1), SimpleLieType("A", 1)), (0, 1)
    if key == ("D", 3):
        return (SimpleLieType("A", 3),), (1, 0, 2)
    if family == "B" and rank == 0:
        return (), ()
    return (SimpleLieType(family, rank),), tuple(range(rank))


def raw_cartan(family: str, rank: int) -> List[List[int]]:
    """Cartan matrix for the raw Bourbaki numbering, aliases included."""
    n = rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, a: int = -1, b: int = -1) -> None:
        c[i][j] = a
        c[j][i] = b

    if family in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if n >= 2 and family == "B":
            bond(n - 2, n - 1, -2, -1)
        elif n >= 2 and family == "C":
            bond(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        if n >= 3:
            bond(n - 3, n - 1)
    elif family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            bond(i, j)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    else:
        raise LieTypeError(f"{family}{rank}", "unknown family")
    return c


def block_cartan(t: LieType) -> List[List[int]]:
    """Block-diagonal Cartan matrix of the semisimple part of ``t``."""
    n = t.semisimple_rank
    out = [[0] * n for _ in range(n)]
    for f, off in zip(t.simple_factors, t.offsets()):
        sub = raw_cartan(f.family, f.rank)
        for i in range(f.rank):
            for j in range(f.rank):
                out[off + i][off + j] = sub[i][j]
    return out


def root_lengths(cartan: Sequence[Sequence[int]]) -> List[Fraction]:
    """Squared lengths of the simple roots, long roots normalized to 2."""
    n = len(cartan)
    d: List[Fraction] = [None] * n  # type: ignore[list-item]
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        component = [start]
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # (ψ_i, ψ_j) = C[i][j] d_j / 2 = C[j][i] d_i / 2
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    queue.append(j)
                    component.append(j)
        scale = Fraction(2) / max(d[k] for k in component)
        for k in component:
            d[k] *= scale
    return d


# ---------------------------------------------------------------------------
# RootSystem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSystem:
    type: SimpleLieType
    cartan: Tuple[Tuple[int, ...], ...]
    i_cartan_num: Tuple[Tuple[int, ...], ...]
    det_cartan: int
    pos_roots: Tuple[RootVec, ...]
    highest_root: RootVec
    rho: Tuple[int, ...]
    sym_form_num: Tuple[Tuple[int, ...], ...]
    sym_den: int
    lengths: Tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def cartan_array(self) -> np.ndarray:
        arr = np.array(self.cartan, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def pos_root_weights(self) -> Tuple[Tuple[int, ...], ...]:
        """Positive roots in weight coordinates, same order as ``pos_roots``."""
        arr = np.array(self.pos_roots, dtype=np.int64) @ self.cartan_array
        return tuple(tuple(int(x) for x in row) for row in arr)

    @cached_property
    def pos_coroots(self) -> Tuple[Tuple[int, ...], ...]:
        """Integer coefficients of α^∨ in the simple-coroot basis, per positive root."""
        out = []
        for alpha in self.pos_roots:
            norm = self.norm(alpha)
            out.append(tuple(int(c * self.lengths[j] / norm) for j, c in enumerate(alpha)))
        return tuple(out)

    def norm(self, r: Sequence[int]) -> Fraction:
        return inner(self, r, r)

    def weight_height(self, w: Sequence[int]) -> Fraction:
        """<w, ρ^∨>: the sum of the simple-root coefficients of ``w``."""
        det = self.det_cartan
        total = sum(w[i] * sum(self.i_cartan_num[i]) for i in range(self.rank))
        return Fraction(total, det)

    def weight_to_root(self, w: Sequence[int]) -> Tuple[Fraction, ...]:
        """Simple-root coefficients of a weight (rational in general)."""
        _check_len(self.rank, w)
        det = self.det_cartan
        return tuple(
            Fraction(sum(w[i] * self.i_cartan_num[i][j] for i in range(self.rank)), det)
            for j in range(self.rank)
        )


def _check_len(n: int, v: Sequence) -> None:
    if len(v) != n:
        raise ShapeError(n, len(v))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleLieType) -> RootSystem:
    """Cartan data and positive roots (height-by-height closure) for ``t``."""
    n = t.rank
    cartan = raw_cartan(t.family, n)
    m = sympy.Matrix(cartan)
    det = int(m.det())
    adj = m.adjugate()
    i_cartan = tuple(tuple(int(adj[i, j]) for j in range(n)) for i in range(n))

    lengths = root_lengths(cartan)
    sym = [[Fraction(cartan[i][j]) * lengths[j] / 2 for j in range(n)] for i in range(n)]
    sym_den = 1
    for row in sym:
        for x in row:
            sym_den = sym_den * x.denominator // math.gcd(sym_den, x.denominator)
    sym_num = tuple(tuple(int(x * sym_den) for x in row) for row in sym)

    pos_roots = _positive_roots(cartan)
    _log.debug("built %s: %d positive roots, det %d", t, len(pos_roots), det)
    return RootSystem(
        type=t,
        cartan=tuple(tuple(r) for r in cartan),
        i_cartan_num=i_cartan,
        det_cartan=det,
        pos_roots=pos_roots,
        highest_root=pos_roots[-1],
        rho=(1,) * n,
        sym_form_num=sym_num,
        sym_den=sym_den,
        lengths=tuple(lengths),
    )


def _positive_roots(cartan: List[List[int]]) -> Tuple[RootVec, ...]:
    """
    Closure by height: α + ψ_i is a root iff p = q - <α, ψ_i^∨> > 0, where q is
    the length of the ψ_i-string below α.
    """
    n = len(cartan)
    level: List[RootVec] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(level)
    out: List[RootVec] = []
    while level:
        level.sort()
        out.extend(level)
        nxt = set()
        for alpha in level:
            wt = [sum(alpha[k] * cartan[k][j] for k in range(n)) for j in range(n)]
            for i in range(n):
                q = 0
                beta = list(alpha)
                beta[i] -= 1
                while tuple(beta) in known:
                    q += 1
                    beta[i] -= 1
                if q - wt[i] > 0:
                    up = list(alpha)
                    up[i] += 1
                    nxt.add(tuple(up))
        known.update(nxt)
        level = list(nxt)
    return tuple(out)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def root_to_weight(rs: RootSystem, r: Sequence[int]) -> Tuple[int, ...]:
    """Weight coordinates <α, ψ_i^∨> of α = Σ r_j ψ_j."""
    _check_len(rs.rank, r)
    return tuple(int(x) for x in np.asarray(r, dtype=np.int64) @ rs.cartan_array)


def inner(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Invariant form on root vectors, long roots of squared length 2."""
    _check_len(rs.rank, a)
    _check_len(rs.rank, b)
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = rs.sym_form_num[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b))
    return Fraction(total, rs.sym_den)


def is_root(rs: RootSystem, r: Iterable[int]) -> bool:
    """True when ``r`` or ``-r`` is a positive root."""
    v = tuple(r)
    return v in _root_set(rs) or tuple(-x for x in v) in _root_set(rs)


@lru_cache(maxsize=None)
def _root_set(rs: RootSystem) -> frozenset:
    return frozenset(rs.pos_roots)


def positive_root_count(t: SimpleLieType) -> int:
    """Classical count of positive roots (independent of the closure)."""
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]


def split_weight(t: LieType, coords: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cut a concatenated semisimple weight into per-factor pieces."""
    _check_len(t.semisimple_rank, coords)
    return [tuple(coords[off:off + f.rank]) for f, off in zip(t.simple_factors, t.offsets())]
