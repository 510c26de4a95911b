"""Finite residuated lattices given by operation tables.

Everything here is an exhaustive check over all pairs or triples of
carrier elements.  Witnesses are the first counterexample in row-major
order, as carrier indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .ideals import enumerate_ideals
from .ring import FiniteRing, RingError, check_star


class MalformedAlgebraError(ValueError):
    pass


class StarConditionError(RingError):
    """The ring fails x = r*x for some x, so R need not be the unit of ideal product."""


@dataclass(frozen=True)
class ResLattice:
    size: int
    meet: tuple
    join: tuple
    otimes: tuple
    imp: tuple
    bot: int
    top: int

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise MalformedAlgebraError("size must be positive")
        for name in ("meet", "join", "otimes", "imp"):
            t = getattr(self, name)
            if len(t) != n or any(len(row) != n for row in t):
                raise MalformedAlgebraError(f"{name} table must be {n}x{n}")
            if any(not 0 <= v < n for row in t for v in row):
                raise MalformedAlgebraError(f"{name} table has entries out of range")
        if not (0 <= self.bot < n and 0 <= self.top < n):
            raise MalformedAlgebraError("bot/top out of range")

    @classmethod
    def from_tables(cls, size, meet, join, otimes, imp, bot, top) -> "ResLattice":
        freeze = lambda t: tuple(tuple(int(v) for v in row) for row in t)
        return cls(size, freeze(meet), freeze(join), freeze(otimes), freeze(imp), bot, top)

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x


@dataclass
class AlgebraFlags:
    is_bounded_lattice: bool
    is_res_lattice: bool
    is_mtl: bool
    is_bl: bool
    is_mv: bool
    is_godel: bool
    witnesses: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "is_bounded_lattice": self.is_bounded_lattice,
            "is_res_lattice": self.is_res_lattice,
            "is_mtl": self.is_mtl,
            "is_bl": self.is_bl,
            "is_mv": self.is_mv,
            "is_godel": self.is_godel,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "failed": dict(self.failed),
        }


def _first(pred, n: int, arity: int) -> Optional[tuple]:
    for t in itertools.product(range(n), repeat=arity):
        if not pred(*t):
            return t
    return None


def _lattice_failure(A: ResLattice) -> Optional[tuple]:
    m, j, n = A.meet, A.join, A.size
    checks = [
        ("meet_commutative", 2, lambda x, y: m[x][y] == m[y][x]),
        ("join_commutative", 2, lambda x, y: j[x][y] == j[y][x]),
        ("absorption", 2, lambda x, y: m[x][j[x][y]] == x and j[x][m[x][y]] == x),
        ("bounds", 1, lambda x: m[A.bot][x] == A.bot and j[A.top][x] == A.top),
        ("meet_associative", 3, lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]]),
        ("join_associative", 3, lambda x, y, z: j[j[x][y]][z] == j[x][j[y][z]]),
    ]
    for name, arity, pred in checks:
        w = _first(pred, n, arity)
        if w is not None:
            return name, w
    return None


def _residuation_failure(A: ResLattice) -> Optional[tuple]:
    o, i, n, le = A.otimes, A.imp, A.size, A.leq
    checks = [
        ("otimes_commutative", 2, lambda x, y: o[x][y] == o[y][x]),
        ("otimes_unit", 1, lambda x: o[A.top][x] == x),
        ("otimes_associative", 3, lambda x, y, z: o[o[x][y]][z] == o[x][o[y][z]]),
        ("adjunction", 3, lambda x, y, z: le(o[x][y], z) == le(x, i[y][z])),
    ]
    for name, arity, pred in checks:
        w = _first(pred, n, arity)
        if w is not None:
            return name, w
    return None


def check_axioms(A: ResLattice) -> AlgebraFlags:
    """Exhaustively compute every flag.

    BL, MV and Goedel are MTL-algebras satisfying an extra identity, so each
    of those flags requires ``is_mtl``; when MTL fails they inherit its
    witness.
    """
    o, i, m, j, n = A.otimes, A.imp, A.meet, A.join, A.size
    witnesses, failed = {}, {}

    lat = _lattice_failure(A)
    bounded = lat is None
    if not bounded:
        failed["is_bounded_lattice"], witnesses["is_bounded_lattice"] = lat

    res = _residuation_failure(A) if bounded else lat
    is_res = bounded and res is None
    if not is_res:
        failed["is_res_lattice"], witnesses["is_res_lattice"] = res

    if is_res:
        w = _first(lambda x, y: j[i[x][y]][i[y][x]] == A.top, n, 2)
        mtl_fail = None if w is None else ("prelinearity", w)
    else:
        mtl_fail = res
    is_mtl = mtl_fail is None
    if not is_mtl:
        failed["is_mtl"], witnesses["is_mtl"] = mtl_fail

    extras = {
        "is_bl": ("divisibility", 2, lambda x, y: m[x][y] == o[x][i[x][y]]),
        "is_mv": ("mv_identity", 2, lambda x, y: i[i[x][y]][y] == i[i[y][x]][x]),
        "is_godel": ("idempotence", 1, lambda x: o[x][x] == x),
    }
    flags = {}
    for flag, (name, arity, pred) in extras.items():
        if not is_mtl:
            flags[flag] = False
            failed[flag], witnesses[flag] = mtl_fail
            continue
        w = _first(pred, n, arity)
        flags[flag] = w is None
        if w is not None:
            failed[flag], witnesses[flag] = name, w

    return AlgebraFlags(bounded, is_res, is_mtl, flags["is_bl"], flags["is_mv"],
                        flags["is_godel"], witnesses, failed)


def nm_chain(k: int) -> ResLattice:
    """Nilpotent-minimum chain on integer levels ``0..k-1``.

    Level ``i`` stands for ``i/(k-1)`` and negation is ``(k-1) - i``.
    """
    if k < 2:
        raise ValueError("nm_chain needs at least 2 levels")
    top = k - 1
    L = range(k)
    neg = lambda x: top - x
    otimes = tuple(tuple(0 if x <= neg(y) else min(x, y) for y in L) for x in L)
    imp = tuple(tuple(top if x <= y else max(neg(x), y) for y in L) for x in L)
    meet = tuple(tuple(min(x, y) for y in L) for x in L)
    join = tuple(tuple(max(x, y) for y in L) for x in L)
    return ResLattice(k, meet, join, otimes, imp, 0, top)


def boolean_algebra() -> ResLattice:
    return nm_chain(2)


# Item 4 uses x->(y^z) = (x->y)^(x->z); the printed (x->y)^(y->z) fails
# already on the two-element Boolean algebra (see literal_property_4).
BASIC_PROPERTIES = {
    1: (2, lambda A, x, y: A.leq(x, y) == (A.imp[x][y] == A.top)),
    2: (2, lambda A, x, y: A.leq(A.otimes[x][y], A.meet[x][y])),
    3: (1, lambda A, x: A.imp[A.top][x] == x),
    4: (3, lambda A, x, y, z: A.imp[x][A.meet[y][z]] == A.meet[A.imp[x][y]][A.imp[x][z]]),
    5: (3, lambda A, x, y, z: A.imp[A.join[x][y]][z] == A.meet[A.imp[x][z]][A.imp[y][z]]),
    6: (3, lambda A, x, y, z: not A.leq(x, y) or A.leq(A.otimes[x][z], A.otimes[y][z])),
    7: (2, lambda A, x, y: A.imp[x][y] == A.imp[x][A.meet[x][y]]),
    8: (2, lambda A, x, y: A.imp[x][y] == A.imp[A.join[x][y]][y]),
    9: (2, lambda A, x, y: A.leq(x, A.imp[y][x])),
}


@dataclass
class PropertyReport:
    results: dict
    witnesses: dict

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())

    def as_dict(self) -> dict:
        return {"results": {str(k): v for k, v in self.results.items()},
                "witnesses": {str(k): list(v) for k, v in self.witnesses.items()},
                "all_pass": self.all_pass}


def check_basic_properties(A: ResLattice) -> PropertyReport:
    results, witnesses = {}, {}
    for k, (arity, pred) in BASIC_PROPERTIES.items():
        w = _first(lambda *t: pred(A, *t), A.size, arity)
        results[k] = w is None
        if w is not None:
            witnesses[k] = w
    return PropertyReport(results, witnesses)


def literal_property_4(A: ResLattice) -> Optional[tuple]:
    """First counterexample to ``x->(y^z) = (x->y)^(y->z)``, or None."""
    return _first(lambda x, y, z: A.imp[x][A.meet[y][z]] == A.meet[A.imp[x][y]][A.imp[y][z]],
                  A.size, 3)


@dataclass(frozen=True)
class DerivedOps:
    algebra: ResLattice
    neg: tuple
    oplus: tuple
    biimp: tuple

    def power(self, x: int, n: int) -> int:
        """``x`` multiplied by itself ``n`` times; ``x**0`` is top."""
        r = self.algebra.top
        for _ in range(n):
            r = self.algebra.otimes[r][x]
        return r


def derived_ops(A: ResLattice) -> DerivedOps:
    L = range(A.size)
    neg = tuple(A.imp[x][A.bot] for x in L)
    oplus = tuple(tuple(neg[A.otimes[neg[x]][neg[y]]] for y in L) for x in L)
    biimp = tuple(tuple(A.meet[A.imp[x][y]][A.imp[y][x]] for y in L) for x in L)
    return DerivedOps(A, neg, oplus, biimp)


def from_ideal_lattice(R: FiniteRing, lattice=None) -> ResLattice:
    """The algebra of ideals ``(Id(R), cap, +, *, ->, {0}, R)`` in canonical order."""
    star = check_star(R)
    if not star:
        raise StarConditionError(f"{R.name} fails x = r*x at x={star.witness}")
    L = lattice or enumerate_ideals(R)
    return ResLattice(len(L), L.meet, L.join, L.product, L.imp, L.bot, L.top)


def permute(A: ResLattice, perm) -> ResLattice:
    """Relabel the carrier: element ``x`` becomes ``perm[x]``."""
    inv = [0] * A.size
    for x, y in enumerate(perm):
        inv[y] = x
    L = range(A.size)
    t = lambda T: tuple(tuple(perm[T[inv[a]][inv[b]]] for b in L) for a in L)
    return ResLattice(A.size, t(A.meet), t(A.join), t(A.otimes), t(A.imp),
                      perm[A.bot], perm[A.top])
