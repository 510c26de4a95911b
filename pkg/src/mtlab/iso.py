"""Isomorphism search for small finite commutative rings.

Unital rings are first split along their primitive idempotents into local
factors (the splitting is unique up to order), and the factors are matched
pairwise.  Local and non-unital rings fall back to a backtracking search
over images of additive generators, pruned by per-element invariants and
by checking the partial map on the subgroup spanned so far.  That direct
search is bounded to order <= ``MAX_SEARCH_ORDER``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Optional

from .ring import FiniteRing, RingError, RingMap

MAX_SEARCH_ORDER = 64


class IsomorphismInconclusive(RingError):
    """The search would exceed the order bound."""


def primitive_idempotents(R: FiniteRing) -> tuple:
    """Minimal nonzero idempotents; for unital R they are orthogonal and sum to one."""
    E = [e for e in R.idempotents if e != R.zero]
    return tuple(e for e in E if all(R.mul[e][f] in (R.zero, e) for f in E))


def corner_ring(R: FiniteRing, e: int) -> tuple:
    """The ring ``R*e`` with identity ``e``, plus its inclusion into R as a tuple."""
    elems = sorted({R.mul[x][e] for x in R.elements})
    index = {x: i for i, x in enumerate(elems)}
    add = tuple(tuple(index[R.add[a][b]] for b in elems) for a in elems)
    mul = tuple(tuple(index[R.mul[a][b]] for b in elems) for a in elems)
    S = FiniteRing(len(elems), add, mul, index[R.zero], index[e], f"{R.name}*{e}")
    return S, tuple(elems)


def local_factors(R: FiniteRing) -> list:
    """``[(e, R*e, inclusion)]`` over the primitive idempotents of a unital ring."""
    if R.one is None:
        raise RingError("local factor decomposition needs an identity")
    return [(e, *corner_ring(R, e)) for e in primitive_idempotents(R)]


def _profile(R: FiniteRing) -> tuple:
    mul, zero = R.mul, R.zero
    out = []
    for x in R.elements:
        nil = 0
        y, k = x, 1
        while k <= R.order:
            if y == zero:
                nil = k
                break
            y = mul[y][x]
            k += 1
        ann = sum(1 for y in R.elements if mul[x][y] == zero)
        prin = len({mul[r][x] for r in R.elements})
        out.append((R.additive_order[x], mul[x][x] == x, nil, ann, prin,
                    x == R.one))
    return tuple(out)


def invariants(R: FiniteRing) -> tuple:
    return (R.order, R.one is not None, tuple(sorted(Counter(_profile(R)).items())))


def _generators(R: FiniteRing, prof: tuple) -> list:
    """Greedy additive generating set, highest additive order first."""
    order = sorted(R.elements, key=lambda x: (-R.additive_order[x], x))
    span = {R.zero}
    gens = []
    for g in order:
        if g in span:
            continue
        gens.append(g)
        span = _span(R, span, g)
        if len(span) == R.order:
            break
    return gens


def _span(R: FiniteRing, span: set, g: int) -> set:
    out = set(span)
    frontier = list(span)
    while frontier:
        nxt = []
        for a in frontier:
            b = R.add[a][g]
            if b not in out:
                out.add(b)
                nxt.append(b)
        frontier = nxt
    return out


def _search(A: FiniteRing, B: FiniteRing) -> Optional[tuple]:
    pa, pb = _profile(A), _profile(B)
    if sorted(pa) != sorted(pb):
        return None
    gens = _generators(A, pa)
    by_profile = {}
    for y in B.elements:
        by_profile.setdefault(pb[y], []).append(y)

    def extend(f: dict, g: int, h: int) -> Optional[dict]:
        # Map a + c*g -> f(a) + c*h over the span; reject on any conflict.
        f = dict(f)
        frontier = list(f)
        while frontier:
            nxt = []
            for a in frontier:
                x, y = A.add[a][g], B.add[f[a]][h]
                if x in f:
                    if f[x] != y:
                        return None
                else:
                    if pa[x] != pb[y]:
                        return None
                    f[x] = y
                    nxt.append(x)
            frontier = nxt
        if len(set(f.values())) != len(f):
            return None
        for x in f:
            for y in f:
                z = A.mul[x][y]
                if z in f and f[z] != B.mul[f[x]][f[y]]:
                    return None
        return f

    def rec(f: dict, i: int) -> Optional[dict]:
        if i == len(gens):
            return f
        g = gens[i]
        used = set(f.values())
        for h in by_profile.get(pa[g], ()):
            if h in used:
                continue
            f2 = extend(f, g, h)
            if f2 is not None:
                res = rec(f2, i + 1)
                if res is not None:
                    return res
        return None

    f = rec({A.zero: B.zero}, 0)
    if f is None or len(f) != A.order:
        return None
    return tuple(f[x] for x in A.elements)


def _direct(A: FiniteRing, B: FiniteRing, bound: int) -> Optional[tuple]:
    if A.order > bound:
        raise IsomorphismInconclusive(
            f"direct isomorphism search limited to order <= {bound}, got {A.order}")
    return _search(A, B)


def ring_isomorphic(A: FiniteRing, B: FiniteRing,
                    bound: int = MAX_SEARCH_ORDER) -> Optional[RingMap]:
    """An isomorphism ``A -> B`` or ``None``.

    Raises :class:`IsomorphismInconclusive` when a local (or non-unital)
    piece exceeds ``bound``.
    """
    if A is B:
        return RingMap(A, B, tuple(A.elements))
    if A.order != B.order or (A.one is None) != (B.one is None):
        return None
    if A.one is not None:
        fa, fb = local_factors(A), local_factors(B)
        if len(fa) != len(fb):
            return None
        if len(fa) > 1:
            image = _match_factors(A, B, fa, fb, bound)
        else:
            image = _direct(A, B, bound)
    else:
        image = _direct(A, B, bound)
    if image is None:
        return None
    f = RingMap(A, B, image)
    if not (f.is_injective and f.is_homomorphism(unital=True)):
        raise RuntimeError("isomorphism search produced an invalid map")
    return f


def _match_factors(A, B, fa, fb, bound) -> Optional[tuple]:
    if sorted(S.order for _, S, _ in fa) != sorted(S.order for _, S, _ in fb):
        return None
    n = len(fa)

    @lru_cache(maxsize=None)
    def iso(i, j):
        return ring_isomorphic(fa[i][1], fb[j][1], bound)

    def rec(i, used, acc):
        if i == n:
            return acc
        for j in range(n):
            if j in used or fa[i][1].order != fb[j][1].order:
                continue
            f = iso(i, j)
            if f is not None:
                res = rec(i + 1, used | {j}, acc + [(i, j, f)])
                if res is not None:
                    return res
        return None

    match = rec(0, frozenset(), [])
    if match is None:
        return None
    image = []
    for x in A.elements:
        y = B.zero
        for i, j, f in match:
            e, _, inc_a = fa[i]
            inc_b = fb[j][2]
            comp = inc_a.index(A.mul[x][e])
            y = B.add[y][inc_b[f.image[comp]]]
        image.append(y)
    return tuple(image)
