"""Ring-level conditions read off the ideal lattice, and localization.

Every check works on the cached index tables of an :class:`IdealLattice`.
Witnesses are tuples of :class:`Ideal` in canonical order.  BL, MV and
Goedel rings are MTL-rings whose ideal algebra satisfies the extra
identity, matching the algebra-level definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .ideals import (Ideal, IdealLattice, build_quotient, enumerate_ideals,
                     maximal_ideals, structure_queries)
from .iso import local_factors
from .ring import (Check, FiniteRing, RingError, RingMap, check_star,
                   require_unital)


class ConsistencyError(AssertionError):
    """Two conditions that must agree on finite unital rings disagree."""


class NotMaximalError(RingError):
    pass


def _lattice(R: FiniteRing, L: Optional[IdealLattice]) -> IdealLattice:
    if L is None:
        return enumerate_ideals(R)
    if L.ring is not R:
        raise RingError("lattice belongs to a different ring")
    return L


def _require_star(R: FiniteRing) -> None:
    star = check_star(R)
    if not star:
        from .algebra import StarConditionError
        raise StarConditionError(f"{R.name} fails x = r*x at x={star.witness}")


def _scan(L: IdealLattice, arity: int, pred) -> Check:
    for t in itertools.product(range(len(L)), repeat=arity):
        if not pred(*t):
            return Check(False, tuple(L[k] for k in t))
    return Check(True)


def check_mtl(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    """Prelinearity ``(I->J) + (J->I) = R`` over all ideal pairs."""
    _require_star(R)
    L = _lattice(R, L)
    imp, join, top = L.imp, L.join, L.top
    return _scan(L, 2, lambda i, j: join[imp[i][j]][imp[j][i]] == top)


@dataclass
class EquivalentConditions:
    mtl: bool
    mtl1: bool
    mtl2: bool
    mtl1p: bool
    mtl2p: bool
    mtl_star: bool
    quotient_mtl_star: bool
    witnesses: dict = field(default_factory=dict)

    FIELDS = ("mtl", "mtl1", "mtl2", "mtl1p", "mtl2p", "mtl_star", "quotient_mtl_star")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.FIELDS}


def _mtl_star(L: IdealLattice) -> Check:
    """``I cap J = 0`` implies ``I* + J* = R``."""
    imp, join, meet = L.imp, L.join, L.meet
    return _scan(L, 2, lambda i, j: meet[i][j] != L.bot
                 or join[imp[i][L.bot]][imp[j][L.bot]] == L.top)


def check_equivalent_conditions(R: FiniteRing, L: Optional[IdealLattice] = None) -> EquivalentConditions:
    """All conditions the MTL property is compared against.

    ``mtl1p`` and ``mtl2p`` are the instances the converse arguments rely
    on: MTL-1 at ``K = I cap J`` and MTL-2 at ``I = J + K``.
    """
    _require_star(R)
    L = _lattice(R, L)
    imp, join, meet = L.imp, L.join, L.meet
    checks = {
        "mtl": check_mtl(R, L),
        "mtl1": _scan(L, 3, lambda i, j, k:
                      imp[meet[i][j]][k] == join[imp[i][k]][imp[j][k]]),
        "mtl2": _scan(L, 3, lambda i, j, k:
                      imp[i][join[j][k]] == join[imp[i][j]][imp[i][k]]),
        "mtl1p": _scan(L, 2, lambda i, j:
                       imp[meet[i][j]][meet[i][j]] ==
                       join[imp[i][meet[i][j]]][imp[j][meet[i][j]]]),
        "mtl2p": _scan(L, 2, lambda j, k:
                       imp[join[j][k]][join[j][k]] ==
                       join[imp[join[j][k]][j]][imp[join[j][k]][k]]),
        "mtl_star": _mtl_star(L),
    }
    quotient = Check(True)
    for I in L:
        Q, _ = build_quotient(R, I)
        if not _mtl_star(enumerate_ideals(Q)):
            quotient = Check(False, (I,))
            break
    checks["quotient_mtl_star"] = quotient
    witnesses = {k: c.witness for k, c in checks.items() if not c}
    return EquivalentConditions(**{k: bool(c) for k, c in checks.items()}, witnesses=witnesses)


def literal_corollary_failure(R: FiniteRing, L: Optional[IdealLattice] = None) -> dict:
    """First counterexamples to the two corollary identities as printed.

    ``(I+J)->K = (I cap J)->K`` and ``I->(J cap K) = I->(J+K)``; both fail on
    every nonzero unital ring, so they are not used as MTL criteria.
    """
    L = _lattice(R, L)
    imp, join, meet = L.imp, L.join, L.meet
    a = _scan(L, 3, lambda i, j, k: imp[join[i][j]][k] == imp[meet[i][j]][k])
    b = _scan(L, 3, lambda i, j, k: imp[i][meet[j][k]] == imp[i][join[j][k]])
    return {"mtl1p_printed": a.witness, "mtl2p_printed": b.witness}


def _with_mtl(R, L, pred, arity) -> Check:
    mtl = check_mtl(R, L)
    if not mtl:
        return mtl
    return _scan(L, arity, pred)


def check_bl(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    """MTL plus divisibility ``I cap J = I * (I->J)``."""
    L = _lattice(R, L)
    return _with_mtl(R, L, lambda i, j: L.meet[i][j] == L.product[i][L.imp[i][j]], 2)


def check_mv(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    L = _lattice(R, L)
    imp = L.imp
    return _with_mtl(R, L, lambda i, j: imp[imp[i][j]][j] == imp[imp[j][i]][i], 2)


def check_godel(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    L = _lattice(R, L)
    return _with_mtl(R, L, lambda i: L.product[i][i] == i, 1)


def divisibility(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    """The bare divisibility identity, without the MTL requirement."""
    L = _lattice(R, L)
    return _scan(L, 2, lambda i, j: L.meet[i][j] == L.product[i][L.imp[i][j]])


@dataclass
class ArithmeticalCheck:
    holds: bool
    witness: Optional[tuple]
    jensen_b: Check
    jensen_c: Check

    def __bool__(self):
        return self.holds


def check_arithmetical(R: FiniteRing, L: Optional[IdealLattice] = None) -> ArithmeticalCheck:
    """Distributivity of the ideal lattice, plus Jensen's two residuum forms.

    Jensen states (b) and (c) with colon ideals ``J : I = I -> J``; in arrow
    notation they read ``K->(I+J) = (K->I)+(K->J)`` and
    ``(J cap K)->I = (J->I)+(K->I)``.  Every ideal of a finite ring is
    finitely generated, so both are checked over all ideals.
    """
    require_unital(R, "check_arithmetical")
    L = _lattice(R, L)
    shape = structure_queries(L)
    imp, join, meet = L.imp, L.join, L.meet
    b = _scan(L, 3, lambda i, j, k: imp[k][join[i][j]] == join[imp[k][i]][imp[k][j]])
    c = _scan(L, 3, lambda i, j, k: imp[meet[j][k]][i] == join[imp[j][i]][imp[k][i]])
    return ArithmeticalCheck(shape.is_distributive, shape.distributivity_witness, b, c)


@dataclass(frozen=True)
class Localization:
    source: FiniteRing
    maximal: Ideal
    ring: FiniteRing
    map: RingMap


def localize(R: FiniteRing, M: Ideal, L: Optional[IdealLattice] = None) -> Localization:
    """``R_M`` built from fraction pairs ``(a, s)`` with ``s`` outside ``M``.

    ``(a,s) ~ (b,t)`` iff ``u(at - bs) = 0`` for some ``u`` outside M, i.e.
    iff ``at - bs`` lies in the kernel ``{z : uz = 0 for some u in S}``.
    """
    require_unital(R, "localize")
    if M.ring is not R:
        raise RingError("ideal belongs to a different ring")
    L = _lattice(R, L)
    if M not in maximal_ideals(R, L):
        raise NotMaximalError(f"{M} is not a maximal ideal of {R.name}")
    S = [s for s in R.elements if s not in M]
    kernel = {z for z in R.elements if any(R.mul[u][z] == R.zero for u in S)}
    mul, sub = R.mul, R.sub

    reps, cls = [], {}
    for a in R.elements:
        for s in S:
            for c, (b, t) in enumerate(reps):
                if sub(mul[a][t], mul[b][s]) in kernel:
                    cls[a, s] = c
                    break
            else:
                cls[a, s] = len(reps)
                reps.append((a, s))
    n = len(reps)
    add = tuple(tuple(cls[R.add[mul[a][t]][mul[b][s]], mul[s][t]] for b, t in reps)
                for a, s in reps)
    prod = tuple(tuple(cls[mul[a][b], mul[s][t]] for b, t in reps) for a, s in reps)
    one = R.one
    loc = FiniteRing(n, add, prod, cls[R.zero, one], cls[one, one], f"{R.name}_M")
    phi = RingMap(R, loc, tuple(cls[a, one] for a in R.elements))
    return Localization(R, M, loc, phi)


def localization_shortcut(R: FiniteRing, M: Ideal):
    """The local factor ``R*e`` with ``e`` the primitive idempotent outside ``M``."""
    for e, factor, _ in local_factors(R):
        if e not in M:
            return factor
    raise RingError("no primitive idempotent outside M")


def check_localizations_chain(R: FiniteRing, L: Optional[IdealLattice] = None) -> Check:
    """Every localization at a maximal ideal has totally ordered ideals."""
    require_unital(R, "check_localizations_chain")
    if R.is_zero_ring:
        raise RingError("the zero ring has no maximal ideals")
    L = _lattice(R, L)
    for M in maximal_ideals(R, L):
        loc = localize(R, M, L)
        if not structure_queries(enumerate_ideals(loc.ring)).is_chain:
            return Check(False, (M,))
    return Check(True)


@dataclass
class Classification:
    ring: str
    order: int
    unital: bool
    star: bool
    local: bool
    chain: bool
    mtl: Optional[bool]
    bl: Optional[bool]
    mv: Optional[bool]
    godel: Optional[bool]
    arithmetical: Optional[bool]
    localizations_chain: Optional[bool]
    ideals: int = 0
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("unital", "star", "local", "chain", "mtl", "bl", "mv", "godel",
             "arithmetical", "localizations_chain")

    def as_dict(self) -> dict:
        out = {"ring": self.ring, "order": self.order, "ideals": self.ideals}
        out.update({k: getattr(self, k) for k in self.FLAGS})
        out["witnesses"] = {k: [list(I.members) if isinstance(I, Ideal) else I for I in w]
                            for k, w in self.witnesses.items()}
        return out


def classify_ring(R: FiniteRing, L: Optional[IdealLattice] = None) -> Classification:
    """Compute every flag and cross-check the equivalences for finite unital rings.

    Flags whose hypotheses fail are ``None``: the lattice-level ones need
    x = r*x, arithmetical and localization need an identity.
    """
    L = _lattice(R, L)
    shape = structure_queries(L)
    star = bool(check_star(R))
    unital = R.is_unital
    proper = len(L) - 1
    local = unital and not R.is_zero_ring and sum(
        1 for a in range(proper) if not any(L.leq[a][b] for b in range(proper) if b != a)) == 1
    w = {}

    def record(name, check):
        if check is None:
            return None
        if not check and check.witness is not None:
            w[name] = check.witness
        return bool(check)

    mtl = bl = mv = godel = arith = loc_chain = None
    if star:
        mtl = record("mtl", check_mtl(R, L))
        bl = record("bl", check_bl(R, L))
        mv = record("mv", check_mv(R, L))
        godel = record("godel", check_godel(R, L))
    if unital:
        arith = record("arithmetical", check_arithmetical(R, L))
        loc_chain = True if R.is_zero_ring else record(
            "localizations_chain", check_localizations_chain(R, L))
    if not shape.is_chain:
        a, b = next((L[i], L[j]) for i in range(len(L)) for j in range(len(L))
                    if not (L.leq[i][j] or L.leq[j][i]))
        w["chain"] = (a, b)

    c = Classification(R.name, R.order, unital, star, local, shape.is_chain,
                       mtl, bl, mv, godel, arith, loc_chain, len(L), w)
    _consistency(c)
    return c


def _consistency(c: Classification) -> None:
    if c.unital and c.star:
        vals = {"mtl": c.mtl, "bl": c.bl, "arithmetical": c.arithmetical,
                "localizations_chain": c.localizations_chain}
        if len(set(vals.values())) != 1:
            raise ConsistencyError(f"{c.ring}: finite unital ring with {vals}")
    if c.local and c.mtl is not None and c.mtl != c.chain:
        raise ConsistencyError(f"{c.ring}: local ring with mtl={c.mtl}, chain={c.chain}")
    if c.mv and not c.bl:
        raise ConsistencyError(f"{c.ring}: mv without bl")
