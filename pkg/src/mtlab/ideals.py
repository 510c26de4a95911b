"""Ideals of a finite commutative ring and their residuated operations.

An ideal is stored as a bitmask over the ring's element indices.  The
lattice of all ideals is enumerated once per ring and caches the four
operation tables (meet, join, product, residuum) indexed by canonical
position, which is what the classification and identity suites consume.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .ring import (FiniteRing, MixedRingError, RingError, RingMap,
                   require_unital, subset_mask)


class NotAnIdealError(RingError):
    pass


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    mask: int

    @property
    def members(self) -> tuple:
        m, out, x = self.mask, [], 0
        while m:
            if m & 1:
                out.append(x)
            m >>= 1
            x += 1
        return tuple(out)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __le__(self, other: "Ideal") -> bool:
        _same(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    def __repr__(self):
        return f"Ideal({self.ring.name}, {list(self.members)})"

    @property
    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << self.ring.order) - 1

    @property
    def sort_key(self) -> tuple:
        return (len(self), self.members)


def _same(*ideals: Ideal) -> FiniteRing:
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring is not ring:
            raise MixedRingError(f"ideals of different rings: {ring.name} and {I.ring.name}")
    return ring


def is_ideal(R: FiniteRing, members: Iterable[int]) -> bool:
    S = set(members)
    if R.zero not in S:
        return False
    for x in S:
        for y in S:
            if R.add[x][y] not in S:
                return False
        for r in R.elements:
            if R.mul[r][x] not in S:
                return False
    return True


def make_ideal(R: FiniteRing, members: Iterable[int]) -> Ideal:
    members = list(members)
    if not is_ideal(R, members):
        raise NotAnIdealError(f"{sorted(set(members))} is not an ideal of {R.name}")
    return Ideal(R, subset_mask(members))


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, 1 << R.zero)


def whole_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, (1 << R.order) - 1)


def _additive_closure(R: FiniteRing, seed: Iterable[int]) -> set:
    S = {R.zero}
    todo = list(seed)
    while todo:
        x = todo.pop()
        if x in S:
            continue
        new = [x] + [R.add[x][y] for y in S]
        S.add(x)
        todo.extend(z for z in new if z not in S)
    return S


def generated_ideal(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``gens``.

    Fixpoint of closing under addition and under ``r*x``; additive
    inverses come for free because every element has finite additive order.
    """
    S = {R.zero}
    todo = [g for g in gens]
    for g in todo:
        if not 0 <= g < R.order:
            raise RingError(f"element {g} not in {R.name}")
    while todo:
        x = todo.pop()
        if x in S:
            continue
        S.add(x)
        for r in R.elements:
            y = R.mul[r][x]
            if y not in S:
                todo.append(y)
        for y in list(S):
            z = R.add[x][y]
            if z not in S:
                todo.append(z)
    return Ideal(R, subset_mask(S))


def principal_ideal(R: FiniteRing, x: int) -> Ideal:
    return generated_ideal(R, [x])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same(I, J)
    return Ideal(R, subset_mask(R.add[a][b] for a in I.members for b in J.members))


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    R = _same(I, J)
    return Ideal(R, I.mask & J.mask)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    # Sums of products already absorb ring multiples: r(xy) = (rx)y.
    R = _same(I, J)
    S = _additive_closure(R, {R.mul[a][b] for a in I.members for b in J.members})
    return Ideal(R, subset_mask(S))


def ideal_power(I: Ideal, n: int) -> Ideal:
    if n < 1:
        raise ValueError("ideal powers start at 1")
    P = I
    for _ in range(n - 1):
        P = ideal_product(P, I)
    return P


def residuum(I: Ideal, J: Ideal) -> Ideal:
    """``I -> J = {x : x*i in J for all i in I}``."""
    R = _same(I, J)
    Im = I.members
    return Ideal(R, subset_mask(
        x for x in R.elements if all(J.mask >> R.mul[x][i] & 1 for i in Im)))


def annihilator(I: Ideal) -> Ideal:
    return residuum(I, zero_ideal(I.ring))


def radical(I: Ideal) -> Ideal:
    R = I.ring
    out = []
    for x in R.elements:
        y = x
        for _ in range(R.order):
            if y in I:
                out.append(x)
                break
            y = R.mul[y][x]
    rad = Ideal(R, subset_mask(out))
    if not is_ideal(R, out):
        raise RingError(f"radical of {I} is not an ideal")
    return rad


def build_quotient(R: FiniteRing, I: Ideal, name: Optional[str] = None) -> tuple:
    """``R/I`` with its canonical projection.

    Cosets are indexed in order of their smallest representative, so the
    zero coset is always element 0.
    """
    if I.ring is not R:
        raise MixedRingError("ideal belongs to a different ring")
    if not is_ideal(R, I.members):
        raise NotAnIdealError(f"{I} is not an ideal")
    coset_of = [None] * R.order
    reps = []
    for x in R.elements:
        if coset_of[x] is None:
            c = len(reps)
            reps.append(x)
            for i in I.members:
                coset_of[R.add[x][i]] = c
    n = len(reps)
    add = tuple(tuple(coset_of[R.add[a][b]] for b in reps) for a in reps)
    mul = tuple(tuple(coset_of[R.mul[a][b]] for b in reps) for a in reps)
    one = None if R.one is None else coset_of[R.one]
    Q = FiniteRing(n, add, mul, coset_of[R.zero], one, name or f"{R.name}/{_short(I)}")
    return Q, RingMap(R, Q, tuple(coset_of))


def image_ideal(f: RingMap, I: Ideal) -> Ideal:
    """Image of an ideal under a surjective map, as an ideal of the target."""
    return Ideal(f.target, subset_mask(f.image[x] for x in I.members))


def preimage_ideal(f: RingMap, J: Ideal) -> Ideal:
    return Ideal(f.source, subset_mask(x for x in f.source.elements if f.image[x] in J))


def minimal_generators(I: Ideal, limit: int = 6) -> tuple:
    """A smallest generating set, first in lexicographic order."""
    R = I.ring
    if I.is_zero:
        return (R.zero,)
    cand = [x for x in I.members if x != R.zero]
    for k in range(1, min(limit, len(cand)) + 1):
        for gens in itertools.combinations(cand, k):
            if generated_ideal(R, gens).mask == I.mask:
                return gens
    return tuple(cand)


def _short(I: Ideal) -> str:
    m = I.members
    return "{" + ",".join(map(str, m)) + "}" if len(m) <= 6 else f"<{I.mask:#x}>"


def _label(I: Ideal) -> str:
    return "(" + ",".join(map(str, minimal_generators(I))) + ")"


def enumerate_ideals(R: FiniteRing) -> "IdealLattice":
    """All ideals: principal ideals closed under binary sums.

    Every ideal of a finite ring is the sum of the principal ideals of its
    members, so the fixpoint is complete.
    """
    masks = {principal_ideal(R, x).mask for x in R.elements}
    frontier = set(masks)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(masks):
                s = ideal_sum(Ideal(R, a), Ideal(R, b)).mask
                if s not in masks:
                    new.add(s)
        masks |= new
        frontier = new
    ideals = sorted((Ideal(R, m) for m in masks), key=lambda I: I.sort_key)
    return IdealLattice(R, tuple(ideals))


class IdealLattice:
    """The enumerated ideals of a ring in canonical order.

    Canonical order is by cardinality, then by the sorted member tuple, so
    index 0 is the zero ideal and the last index is the whole ring.
    """

    def __init__(self, ring: FiniteRing, ideals: tuple):
        self.ring = ring
        self.ideals = ideals
        self.index = {I.mask: k for k, I in enumerate(ideals)}

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, k: int) -> Ideal:
        return self.ideals[k]

    def __repr__(self):
        return f"<IdealLattice of {self.ring.name}: {len(self)} ideals>"

    def position(self, I: Ideal) -> int:
        if I.ring is not self.ring:
            raise MixedRingError("ideal belongs to a different ring")
        return self.index[I.mask]

    @property
    def bot(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.ideals) - 1

    @cached_property
    def leq(self) -> tuple:
        return tuple(tuple(a.mask & ~b.mask == 0 for b in self.ideals) for a in self.ideals)

    @cached_property
    def covers(self) -> tuple:
        n, le = len(self.ideals), self.leq
        edges = []
        for a in range(n):
            for b in range(n):
                if a != b and le[a][b] and not any(
                        c not in (a, b) and le[a][c] and le[c][b] for c in range(n)):
                    edges.append((a, b))
        return tuple(edges)

    def _table(self, op) -> tuple:
        return tuple(tuple(self.index[op(I, J).mask] for J in self.ideals)
                     for I in self.ideals)

    @cached_property
    def meet(self) -> tuple:
        return self._table(ideal_intersect)

    @cached_property
    def join(self) -> tuple:
        return self._table(ideal_sum)

    @cached_property
    def product(self) -> tuple:
        return self._table(ideal_product)

    @cached_property
    def imp(self) -> tuple:
        return self._table(residuum)

    @cached_property
    def radical(self) -> tuple:
        return tuple(self.index[radical(I).mask] for I in self.ideals)

    def power(self, k: int, n: int) -> int:
        p = k
        for _ in range(n - 1):
            p = self.product[p][k]
        return p

    def label(self, k: int) -> str:
        return _label(self.ideals[k])


def maximal_ideals(R: FiniteRing, lattice: Optional[IdealLattice] = None) -> list:
    require_unital(R, "maximal_ideals")
    if R.is_zero_ring:
        raise RingError("the zero ring has no maximal ideals")
    L = lattice or enumerate_ideals(R)
    proper = [k for k in range(len(L)) if k != L.top]
    return [L[a] for a in proper
            if not any(b != a and L.leq[a][b] for b in proper)]


@dataclass(frozen=True)
class LatticeShape:
    is_chain: bool
    is_distributive: bool
    distributivity_witness: Optional[tuple]
    atoms: tuple
    unique_atom: Optional[Ideal]


def structure_queries(L: IdealLattice) -> LatticeShape:
    n, le = len(L), L.leq
    chain = all(le[a][b] or le[b][a] for a in range(n) for b in range(n))
    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        if L.meet[L.join[i][j]][k] != L.join[L.meet[i][k]][L.meet[j][k]]:
            witness = (L[i], L[j], L[k])
            break
    atoms = tuple(L[a] for a in range(1, n)
                  if not any(le[b][a] and b != a for b in range(1, n)))
    return LatticeShape(chain, witness is None, witness, atoms,
                        atoms[0] if len(atoms) == 1 else None)


def to_dot(L: IdealLattice) -> str:
    lines = ["digraph ideals {"]
    for k in range(len(L)):
        lines.append(f'I{k} [label="{L.label(k)}"];')
    for a, b in L.covers:
        lines.append(f"I{a} -> I{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
