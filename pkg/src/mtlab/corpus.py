"""Deterministic test corpus built from the constructor families.

Members: Z/n for n <= N, null extensions with p^(k+1) <= N, products of
two or three such factors with order <= N, and every quotient of those by
each of its ideals.  Members of order <= 32 are deduplicated up to
isomorphism, keeping the first spec generated.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .ideals import build_quotient, enumerate_ideals, minimal_generators
from .iso import invariants, ring_isomorphic
from .ring import (FiniteRing, build_from_tables, build_null_extension, build_product,
                   build_zn, is_prime)
from .specs import RingSpec

DEFAULT_MAX_ORDER = 24
DEDUP_ORDER = 32


@dataclass(frozen=True)
class CorpusRing:
    spec: RingSpec
    ring: FiniteRing

    @property
    def name(self) -> str:
        return self.ring.name


def default_max_order() -> int:
    return int(os.environ.get("MTLAB_MAX_ORDER", DEFAULT_MAX_ORDER))


def _base(max_order: int) -> list:
    out = [CorpusRing(RingSpec("zn", n), build_zn(n)) for n in range(1, max_order + 1)]
    for p in range(2, max_order + 1):
        if not is_prime(p):
            continue
        k = 0
        while p ** (k + 1) <= max_order:
            out.append(CorpusRing(RingSpec("null_ext", {"p": p, "k": k}),
                                  build_null_extension(p, k)))
            k += 1
    return out


def build_corpus(max_order: int | None = None) -> list:
    """The corpus as a list of :class:`CorpusRing`, in generation order."""
    N = default_max_order() if max_order is None else max_order
    base = _base(N)
    factors = [c for c in base if c.ring.order >= 2]
    candidates = list(base)
    for size in (2, 3):
        for combo in itertools.combinations_with_replacement(range(len(factors)), size):
            order = 1
            for i in combo:
                order *= factors[i].ring.order
            if order > N:
                continue
            parts = [factors[i] for i in combo]
            candidates.append(CorpusRing(RingSpec("product", tuple(c.spec for c in parts)),
                                         build_product([c.ring for c in parts])))
    quotients = []
    for c in candidates:
        for I in enumerate_ideals(c.ring):
            if I.is_zero:
                continue
            Q, _ = build_quotient(c.ring, I)
            quotients.append(CorpusRing(RingSpec("quotient", (c.spec, minimal_generators(I))), Q))
    return _dedupe(candidates + quotients)


def _dedupe(rings: list) -> list:
    kept, buckets = [], {}
    for c in rings:
        if c.ring.order > DEDUP_ORDER:
            kept.append(c)
            continue
        key = (invariants(c.ring), len(enumerate_ideals(c.ring)))
        bucket = buckets.setdefault(key, [])
        if any(ring_isomorphic(c.ring, d.ring) is not None for d in bucket):
            continue
        bucket.append(c)
        kept.append(c)
    return kept


def build_monic_quotient(n: int, coeffs, name: str | None = None) -> FiniteRing:
    """``Z_n[x]/(f)`` for monic ``f = x^d + c_{d-1} x^{d-1} + ... + c_0``.

    ``coeffs`` lists ``c_0 .. c_{d-1}``.  Elements are coefficient vectors
    ``a_0 + a_1 x + ...`` encoded base n with ``a_0`` least significant.
    """
    d = len(coeffs)
    vecs = list(itertools.product(range(n), repeat=d))
    vecs = [tuple(reversed(v)) for v in vecs]
    index = {v: sum(a * n ** i for i, a in enumerate(v)) for v in vecs}

    def reduce(poly):
        poly = list(poly)
        for deg in range(len(poly) - 1, d - 1, -1):
            c = poly[deg]
            if c:
                poly[deg] = 0
                for i, ci in enumerate(coeffs):
                    poly[deg - d + i] -= c * ci
        return tuple(a % n for a in poly[:d])

    def times(u, v):
        out = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                out[i + j] += a * b
        return reduce(out)

    order = n ** d
    elems = sorted(vecs, key=index.get)
    add = [[index[tuple((a + b) % n for a, b in zip(u, v))] for v in elems] for u in elems]
    mul = [[index[times(u, v)] for v in elems] for u in elems]
    one = index[(1,) + (0,) * (d - 1)] if order > 1 else 0
    label = name or f"Z{n}[x]/{tuple(coeffs)}"
    return build_from_tables(order, add, mul, 0, one, name=label)


def supplementary_rings() -> list:
    """Rings outside the constructor families, for broader property checks."""
    return [
        build_monic_quotient(2, (1, 1), "F4"),
        build_monic_quotient(2, (0, 0, 0), "Z2[x]/(x^3)"),
        build_monic_quotient(2, (0, 0, 0, 0), "Z2[x]/(x^4)"),
        build_monic_quotient(4, (0, 0), "Z4[x]/(x^2)"),
        build_monic_quotient(4, (2, 0), "Z4[x]/(x^2+2)"),
        build_monic_quotient(4, (1, 1), "GR(4,2)"),
        build_monic_quotient(3, (0, 0), "Z3[x]/(x^2)"),
        build_monic_quotient(2, (0, 1, 0), "Z2[x]/(x^3+x^2)"),
        build_monic_quotient(2, (1, 1, 1), "Z2[x]/(x^3+x^2+x+1)"),
    ]
