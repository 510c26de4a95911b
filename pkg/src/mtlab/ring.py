"""Finite commutative rings given by explicit operation tables.

Elements are the integers ``0..order-1``; all structure lives in the
``add`` and ``mul`` tables.  Rings compare by identity: two separately
built copies of Z/4 are different objects, and ideals of one cannot be
mixed with ideals of the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class RingError(ValueError):
    """Base class for ring construction and hypothesis errors."""


class RingAxiomError(RingError):
    """A table fails a ring axiom.  ``witness`` holds the offending elements."""

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class NotUnitalError(RingError):
    pass


class MixedRingError(RingError):
    pass


class Check:
    """A boolean outcome with an optional counterexample.

    Truthiness follows ``holds`` so callers can write ``if check_star(R):``.
    """

    __slots__ = ("holds", "witness")

    def __init__(self, holds: bool, witness=None):
        self.holds = bool(holds)
        self.witness = witness

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "Check(True)"
        return f"Check(False, witness={self.witness!r})"


@dataclass(frozen=True, eq=False)
class FiniteRing:
    order: int
    add: tuple
    mul: tuple
    zero: int
    one: Optional[int] = None
    name: str = field(default="R")

    def __repr__(self):
        return f"<FiniteRing {self.name} order={self.order}>"

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    @property
    def is_zero_ring(self) -> bool:
        return self.order == 1

    @cached_property
    def neg(self) -> tuple:
        row = [None] * self.order
        for x in self.elements:
            for y in self.elements:
                if self.add[x][y] == self.zero:
                    row[x] = y
                    break
        return tuple(row)

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def power(self, x: int, k: int) -> int:
        """``x**k`` for ``k >= 1``."""
        r = x
        for _ in range(k - 1):
            r = self.mul[r][x]
        return r

    def smul(self, c: int, x: int) -> int:
        """The integer multiple ``c * x``."""
        r = self.zero
        for _ in range(c):
            r = self.add[r][x]
        return r

    @cached_property
    def additive_order(self) -> tuple:
        orders = []
        for x in self.elements:
            k, y = 1, x
            while y != self.zero:
                y = self.add[y][x]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def idempotents(self) -> tuple:
        return tuple(x for x in self.elements if self.mul[x][x] == x)

    def same_tables(self, other: "FiniteRing") -> bool:
        return (self.order == other.order and self.add == other.add
                and self.mul == other.mul and self.zero == other.zero
                and self.one == other.one)

    def renamed(self, name: str) -> "FiniteRing":
        return FiniteRing(self.order, self.add, self.mul, self.zero, self.one, name)


@dataclass(frozen=True, eq=False)
class RingMap:
    source: FiniteRing
    target: FiniteRing
    image: tuple

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_homomorphism(self, unital: bool = False) -> Check:
        s, t, f = self.source, self.target, self.image
        if f[s.zero] != t.zero:
            return Check(False, ("zero", s.zero))
        for x in s.elements:
            for y in s.elements:
                if f[s.add[x][y]] != t.add[f[x]][f[y]]:
                    return Check(False, ("add", x, y))
                if f[s.mul[x][y]] != t.mul[f[x]][f[y]]:
                    return Check(False, ("mul", x, y))
        if unital and s.is_unital and t.is_unital and f[s.one] != t.one:
            return Check(False, ("one", s.one))
        return Check(True)

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source.order

    @property
    def is_surjective(self) -> bool:
        return set(self.image) == set(self.target.elements)

    def kernel(self) -> tuple:
        return tuple(x for x in self.source.elements if self.image[x] == self.target.zero)


def _freeze(table) -> tuple:
    return tuple(tuple(int(v) for v in row) for row in table)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def validate_tables(order, add, mul, zero, one=None) -> None:
    """Raise :class:`RingAxiomError` on the first violated ring axiom.

    Cheap checks run first; the cubic associativity and distributivity
    scans run last so that an identity failure is reported as such.
    """
    n = order
    if n < 1:
        raise RingAxiomError("shape", (), "order must be positive")
    for name, table in (("add", add), ("mul", mul)):
        if len(table) != n or any(len(row) != n for row in table):
            raise RingAxiomError("shape", (), f"{name} table must be {n}x{n}")
        for x, row in enumerate(table):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise RingAxiomError("range", (x, y), f"{name}[{x}][{y}]={v} out of range")
    if not 0 <= zero < n:
        raise RingAxiomError("range", (zero,), "zero out of range")
    if one is not None and not 0 <= one < n:
        raise RingAxiomError("range", (one,), "one out of range")
    E = range(n)

    for x in E:
        if add[zero][x] != x:
            raise RingAxiomError("add_identity", (x,), f"additive identity fails at {x}")
    for x in E:
        for y in E:
            if add[x][y] != add[y][x]:
                raise RingAxiomError("add_commutative", (x, y), f"addition not commutative at ({x}, {y})")
    for x in E:
        if zero not in add[x]:
            raise RingAxiomError("add_inverse", (x,), f"{x} has no additive inverse")
    for x in E:
        for y in E:
            if mul[x][y] != mul[y][x]:
                raise RingAxiomError("mul_commutative", (x, y), f"multiplication not commutative at ({x}, {y})")
    if one is not None:
        for x in E:
            if mul[one][x] != x:
                raise RingAxiomError("mul_identity", (x,), f"identity fails at {x}")
    for x in E:
        if mul[zero][x] != zero:
            raise RingAxiomError("zero_absorbing", (x,), f"zero*{x} != zero")
    for x, y, z in itertools.product(E, repeat=3):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            raise RingAxiomError("add_associative", (x, y, z),
                                 f"addition not associative at ({x}, {y}, {z})")
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            raise RingAxiomError("mul_associative", (x, y, z),
                                 f"multiplication not associative at ({x}, {y}, {z})")
        if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
            raise RingAxiomError("distributive", (x, y, z),
                                 f"distributivity fails at ({x}, {y}, {z})")


def build_from_tables(order: int, add, mul, zero: int, one: Optional[int] = None,
                      name: str = "R") -> FiniteRing:
    add, mul = _freeze(add), _freeze(mul)
    validate_tables(order, add, mul, zero, one)
    return FiniteRing(order, add, mul, zero, one, name)


def build_zn(n: int) -> FiniteRing:
    if n < 1:
        raise RingError("n must be positive")
    E = range(n)
    add = tuple(tuple((a + b) % n for b in E) for a in E)
    mul = tuple(tuple((a * b) % n for b in E) for a in E)
    return FiniteRing(n, add, mul, 0, 1 % n, f"Z{n}")


def build_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Direct product; element tuples are indexed lexicographically."""
    factors = list(factors)
    if not factors:
        raise RingError("product of an empty list of rings")
    tuples = list(itertools.product(*(f.elements for f in factors)))
    index = {t: i for i, t in enumerate(tuples)}

    def op(table_of):
        return tuple(
            tuple(index[tuple(table_of(f)[a][b] for f, a, b in zip(factors, s, t))]
                  for t in tuples)
            for s in tuples)

    add = op(lambda f: f.add)
    mul = op(lambda f: f.mul)
    zero = index[tuple(f.zero for f in factors)]
    one = None
    if all(f.is_unital for f in factors):
        one = index[tuple(f.one for f in factors)]
    name = "x".join(f.name for f in factors)
    return FiniteRing(len(tuples), add, mul, zero, one, name)


def null_ext_coords(p: int, k: int, index: int) -> tuple:
    """Decode an element of ``build_null_extension(p, k)`` into ``(a, v)``."""
    digits = []
    for _ in range(k + 1):
        digits.append(index % p)
        index //= p
    return digits[0], tuple(digits[1:])


def build_null_extension(p: int, k: int) -> FiniteRing:
    """The local ring ``F_p + V`` with ``V = F_p^k`` and ``V*V = 0``.

    Element ``a + p*v_0 + p^2*v_1 + ...`` encodes ``(a, v)``; so the basis
    vector ``e_i`` of V sits at index ``p**(i+1)``.
    """
    if not is_prime(p):
        raise RingError(f"p not prime: {p}")
    if k < 0:
        raise RingError("k must be non-negative")
    n = p ** (k + 1)
    coords = [null_ext_coords(p, k, i) for i in range(n)]

    def encode(a, v):
        idx, w = a % p, p
        for c in v:
            idx += (c % p) * w
            w *= p
        return idx

    add = tuple(tuple(encode(a + b, [x + y for x, y in zip(v, w)])
                      for b, w in coords) for a, v in coords)
    mul = tuple(tuple(encode(a * b, [a * y + b * x for x, y in zip(v, w)])
                      for b, w in coords) for a, v in coords)
    return FiniteRing(n, add, mul, 0, 1 % n, f"N({p},{k})")


def check_star(R: FiniteRing) -> Check:
    """Every ``x`` has some ``r`` with ``x = r*x``; witness is the first failing ``x``."""
    for x in R.elements:
        if not any(R.mul[r][x] == x for r in R.elements):
            return Check(False, x)
    return Check(True)


def find_identity(R: FiniteRing) -> Optional[int]:
    for e in R.elements:
        if all(R.mul[e][x] == x for x in R.elements):
            return e
    return None


def require_unital(R: FiniteRing, what: str = "this operation") -> int:
    if R.one is None:
        raise NotUnitalError(f"{what} requires a ring with identity; {R.name} has none")
    return R.one


def relabel(R: FiniteRing, perm: Sequence[int], name: Optional[str] = None) -> FiniteRing:
    """Copy of ``R`` with element ``x`` renamed ``perm[x]``."""
    inv = [0] * R.order
    for x, y in enumerate(perm):
        inv[y] = x
    add = tuple(tuple(perm[R.add[inv[a]][inv[b]]] for b in R.elements) for a in R.elements)
    mul = tuple(tuple(perm[R.mul[inv[a]][inv[b]]] for b in R.elements) for a in R.elements)
    one = None if R.one is None else perm[R.one]
    return FiniteRing(R.order, add, mul, perm[R.zero], one, name or R.name)


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, R, tuple(R.elements))


def subset_mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m
