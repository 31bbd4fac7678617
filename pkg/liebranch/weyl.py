# -*- coding: utf-8 -*-
"""
Weyl-group actions: simple reflections, dominant representatives, orbits,
S-antidominant points for parabolic subgroups and Bourbaki relabeling of a
candidate simple system.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

import sympy

from liebranch.logging_utils import get_logger
from liebranch.rootsys import (
    LieType,
    RootSystem,
    RootVec,
    ShapeError,
    SimpleLieType,
    Weight,
    inner,
    raw_cartan,
    root_to_weight,
)

_log = get_logger(__name__)

WeightLike = Union[Weight, Sequence[int]]


class NotDominantError(ValueError):
    """Raised when an operation needs a dominant (or S-dominant) input."""

    def __init__(self, weight, message: str = "weight is not dominant"):
        self.weight = tuple(weight)
        super().__init__(f"{message}: {list(self.weight)}")


class SimpleSystemError(ValueError):
    """Raised when candidate roots do not pair to a Cartan matrix."""


# ---------------- Types ----------------

@dataclass(frozen=True)
class SimpleSubset:
    """Strictly increasing 1-based node indices."""

    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing: {list(idx)}")
        if any(i < 1 for i in idx):
            raise ValueError(f"node indices start at 1: {list(idx)}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, nodes: Iterable[int]) -> "SimpleSubset":
        return cls(tuple(sorted(set(int(n) for n in nodes))))

    def check(self, rank: int) -> None:
        bad = [i for i in self.indices if i > rank]
        if bad:
            raise ValueError(f"node index out of range 1..{rank}: {bad}")

    def complement(self, rank: int) -> "SimpleSubset":
        return SimpleSubset(tuple(i for i in range(1, rank + 1) if i not in self.indices))

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class SignedDominant:
    weight: Weight
    sign: int
    length: int = 0


def _coords(w: WeightLike) -> Tuple[int, ...]:
    return w.coords if isinstance(w, Weight) else tuple(int(x) for x in w)


# ---------------- Reflections ----------------

def reflect_coords(rs: RootSystem, i0: int, x: Tuple[int, ...]) -> Tuple[int, ...]:
    """s_i on a plain coordinate tuple, 0-based node index."""
    c = x[i0]
    if c == 0:
        return x
    row = rs.cartan[i0]
    return tuple(a - c * b for a, b in zip(x, row))


def reflect(rs: RootSystem, i: int, w: WeightLike) -> Weight:
    """Simple reflection s_i (1-based): w - w[i]·(weight coordinates of ψ_i)."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"node {i} out of range 1..{rs.rank}")
    x = _coords(w)
    if len(x) != rs.rank:
        raise ShapeError(rs.rank, len(x))
    return Weight(reflect_coords(rs, i - 1, x))


def straighten_coords(rs: RootSystem, x: Tuple[int, ...]) -> Tuple[Tuple[int, ...], int]:
    """Dominant representative and the number of reflections used."""
    count = 0
    n = rs.rank
    while True:
        for i0 in range(n):
            if x[i0] < 0:
                x = reflect_coords(rs, i0, x)
                count += 1
                break
        else:
            return x, count


def straighten(rs: RootSystem, w: WeightLike) -> SignedDominant:
    """
    Dominant point of the orbit of ``w``; sign (-1)^length for regular
    orbits, 0 when the representative lies on a wall.
    """
    x = _coords(w)
    if len(x) != rs.rank:
        raise ShapeError(rs.rank, len(x))
    dom, count = straighten_coords(rs, x)
    sign = 0 if any(c == 0 for c in dom) else (-1) ** count
    return SignedDominant(Weight(dom), sign, count)


def orbit_coords(rs: RootSystem, x: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Orbit of a dominant coordinate tuple, walking down from the top."""
    seen = {x}
    frontier = [x]
    out = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for i0 in range(rs.rank):
                if y[i0] > 0:
                    z = reflect_coords(rs, i0, y)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
        out.extend(nxt)
        frontier = nxt
    return out


def orbit(rs: RootSystem, w: WeightLike) -> Set[Weight]:
    x = _coords(w)
    if len(x) != rs.rank:
        raise ShapeError(rs.rank, len(x))
    if any(c < 0 for c in x):
        raise NotDominantError(x)
    return {Weight(y) for y in orbit_coords(rs, x)}


# ---------------- Parabolic subgroups ----------------

def parabolic_antidominant(rs: RootSystem, S: SimpleSubset, r: Sequence[int]) -> Tuple[RootVec, int]:
    """
    S-antidominant point of the W_S-orbit of an S-dominant root vector.

    Greedy descent: reflect at the smallest index of S with positive pairing.
    Returns the root vector and the number of reflections.
    """
    S.check(rs.rank)
    v = [int(c) for c in r]
    if len(v) != rs.rank:
        raise ShapeError(rs.rank, len(v))
    wt = root_to_weight(rs, v)
    if any(wt[i - 1] < 0 for i in S.indices):
        raise NotDominantError(v, "root vector is not S-dominant")
    steps = 0
    while True:
        wt = root_to_weight(rs, v)
        pos = [i for i in S.indices if wt[i - 1] > 0]
        if not pos:
            return tuple(v), steps
        i0 = pos[0] - 1
        v[i0] -= wt[i0]
        steps += 1


# ---------------- Bourbaki relabeling ----------------

def pairing_matrix(rs: RootSystem, vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """M[a][b] = <φ_a, φ_b^∨> for root vectors φ; same orientation as cartan."""
    norms = [inner(rs, v, v) for v in vectors]
    out = []
    for a in vectors:
        row = []
        for b, nb in zip(vectors, norms):
            val = 2 * inner(rs, a, b) / nb
            if val.denominator != 1:
                raise SimpleSystemError(f"non-integral pairing {val} between {list(a)} and {list(b)}")
            row.append(int(val))
        out.append(row)
    return out


def _candidate_types(size: int) -> List[SimpleLieType]:
    out = [SimpleLieType("A", size)]
    if size >= 2:
        out.append(SimpleLieType("B", size))
    if size >= 3:
        out.append(SimpleLieType("C", size))
    if size >= 4:
        out.append(SimpleLieType("D", size))
    if size in (6, 7, 8):
        out.append(SimpleLieType("E", size))
    if size == 4:
        out.append(SimpleLieType("F", 4))
    if size == 2:
        out.append(SimpleLieType("G", 2))
    return out


def _labelings(m: List[List[int]], nodes: List[int], target: List[List[int]]) -> List[Tuple[int, ...]]:
    """All bijections position -> node with m[σp][σq] == target[p][q]."""
    size = len(nodes)
    found: List[Tuple[int, ...]] = []

    def extend(prefix: List[int]) -> None:
        p = len(prefix)
        if p == size:
            found.append(tuple(prefix))
            return
        for node in nodes:
            if node in prefix:
                continue
            if all(
                m[node][prefix[q]] == target[p][q] and m[prefix[q]][node] == target[q][p]
                for q in range(p)
            ):
                prefix.append(node)
                extend(prefix)
                prefix.pop()

    extend([])
    return found


def _components(m: List[List[int]]) -> List[List[int]]:
    n = len(m)
    seen: Set[int] = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and m[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def check_cartan_shape(m: List[List[int]]) -> None:
    n = len(m)
    for i in range(n):
        for j in range(n):
            if i == j and m[i][j] != 2:
                raise SimpleSystemError(f"diagonal entry {m[i][j]} at {i + 1}")
            if i != j and (m[i][j] > 0 or (m[i][j] == 0) != (m[j][i] == 0)):
                raise SimpleSystemError(f"pairing matrix is not a Cartan matrix at ({i + 1},{j + 1})")


def identify(m: List[List[int]], perm: Optional[Sequence[int]] = None) -> LieType:
    """
    Type of an already ordered Cartan matrix (after ``perm``); each factor
    must occupy a consecutive block in Bourbaki order.
    """
    n = len(m)
    order = list(range(n)) if perm is None else list(perm)
    pm = [[m[order[a]][order[b]] for b in range(n)] for a in range(n)]
    check_cartan_shape(pm)
    factors = []
    start = 0
    while start < n:
        end = start + 1
        while end < n and any(pm[i][j] != 0 for i in range(start, end) for j in range(end, n)):
            end += 1
        block = [row[start:end] for row in pm[start:end]]
        for t in _candidate_types(end - start):
            if raw_cartan(t.family, t.rank) == block:
                factors.append(t)
                break
        else:
            raise SimpleSystemError(f"block at positions {start + 1}..{end} is not in Bourbaki order")
        start = end
    return LieType(tuple(factors))


def bourbaki_reorder(rs: RootSystem, candidate_simples: Sequence[Sequence[int]]) -> Tuple[LieType, Tuple[int, ...]]:
    """
    Cartan type of a candidate simple system and the permutation putting it in
    Bourbaki order: ``perm[j]`` is the input position that lands at position j.
    Minimizes the number of moved positions, ties broken lexicographically.
    """
    vecs = [tuple(int(x) for x in v) for v in candidate_simples]
    for v in vecs:
        if len(v) != rs.rank:
            raise ShapeError(rs.rank, len(v))
    if vecs and sympy.Matrix(vecs).rank() != len(vecs):
        raise SimpleSystemError("candidate roots are linearly dependent")
    m = pairing_matrix(rs, vecs)
    check_cartan_shape(m)

    options = []
    for comp in _components(m):
        found = []
        for t in _candidate_types(len(comp)):
            for lab in _labelings(m, comp, raw_cartan(t.family, t.rank)):
                found.append((t, lab))
        if not found:
            raise SimpleSystemError(f"component {[i + 1 for i in comp]} is not a Dynkin diagram")
        options.append(found)

    best = None
    for order in itertools.permutations(range(len(options))):
        for choice in itertools.product(*(options[c] for c in order)):
            perm = tuple(itertools.chain.from_iterable(lab for _, lab in choice))
            key = (sum(1 for j, p in enumerate(perm) if p != j), perm)
            if best is None or key < best[0]:
                best = (key, tuple(t for t, _ in choice))
    (_, perm), factors = best if best else ((0, ()), ())
    _log.debug("bourbaki_reorder: %s via %s", "".join(map(str, factors)), perm)
    return LieType(factors), perm

