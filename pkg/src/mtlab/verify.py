"""Exhaustive identity suites over ideal tuples, CRT and subdirect decomposition.

A suite case is one ideal tuple of the suite's largest arity; every
identity of the suite is evaluated on it (pair identities read the first
two components, exponent identities loop over their exponents).
Failures are ``(identity_id, ideal tuple)`` in the order found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .classify import check_mtl
from .ideals import (Ideal, IdealLattice, build_quotient, enumerate_ideals,
                     image_ideal, structure_queries)
from .iso import ring_isomorphic
from .ring import (Check, FiniteRing, RingError, build_product, check_star,
                   require_unital)


class PreconditionError(RingError):
    pass


@dataclass
class SuiteReport:
    suite: str
    ring: str
    cases: int
    expected_cases: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ring": self.ring,
            "cases": self.cases,
            "failures": [[name, [list(I.members) for I in ideals]]
                         for name, ideals in self.failures],
            "passed": self.passed,
        }


def _lattice(R, L):
    return enumerate_ideals(R) if L is None else L


def suite_general_identities(R: FiniteRing, L: Optional[IdealLattice] = None) -> SuiteReport:
    """Residuum identities that hold in every commutative ring."""
    L = _lattice(R, L)
    imp, join, meet, m = L.imp, L.join, L.meet, len(L)
    report = SuiteReport("general", R.name, 0, m ** 3)
    for i, j, k in itertools.product(range(m), repeat=3):
        report.cases += 1
        if imp[i][j] != imp[i][meet[i][j]]:
            report.failures.append(("imp_to_meet", (L[i], L[j])))
        if imp[join[i][j]][k] != meet[imp[i][k]][imp[j][k]]:
            report.failures.append(("join_imp_splits", (L[i], L[j], L[k])))
        if imp[i][meet[j][k]] != meet[imp[i][j]][imp[i][k]]:
            report.failures.append(("imp_meet_splits", (L[i], L[j], L[k])))
    return report


def scan_mtl_identities(R: FiniteRing, n_max: int = 3, ab_max: int = 2,
                        L: Optional[IdealLattice] = None) -> SuiteReport:
    """The MTL-ring identity list, evaluated without checking the hypothesis."""
    L = _lattice(R, L)
    imp, join, meet, prod, rad, m = L.imp, L.join, L.meet, L.product, L.radical, len(L)
    pw = L.power
    report = SuiteReport("mtl", R.name, 0, m ** 3)
    fail = report.failures.append
    for i, j, k in itertools.product(range(m), repeat=3):
        report.cases += 1
        I, J, K = L[i], L[j], L[k]
        if k == 0:
            for a, b in itertools.product(range(1, ab_max + 1), repeat=2):
                lhs = prod[pw(i, a)][pw(j, b)]
                rhs = join[pw(i, a + b)][pw(j, a + b)]
                if not L.leq[lhs][rhs]:
                    fail((f"power_containment[a={a},b={b}]", (I, J)))
            for n in range(1, n_max + 1):
                if pw(join[i][j], n) != join[pw(i, n)][pw(j, n)]:
                    fail((f"power_of_sum[n={n}]", (I, J)))
            if prod[join[i][j]][meet[i][j]] != prod[i][j]:
                fail(("sum_times_meet", (I, J)))
            if rad[join[i][j]] != join[rad[i]][rad[j]]:
                fail(("radical_of_sum", (I, J)))
        if prod[k][meet[i][j]] != meet[prod[k][i]][prod[k][j]]:
            fail(("product_over_meet", (I, J, K)))
        if join[k][meet[i][j]] != meet[join[k][i]][join[k][j]]:
            fail(("sum_over_meet", (I, J, K)))
        if meet[k][join[i][j]] != join[meet[k][i]][meet[k][j]]:
            fail(("meet_over_sum", (I, J, K)))
        if imp[k][join[i][j]] != join[imp[k][i]][imp[k][j]]:
            fail(("imp_into_sum", (I, J, K)))
        if imp[meet[i][j]][k] != join[imp[i][k]][imp[j][k]]:
            fail(("meet_imp_sum", (I, J, K)))
    return report


def suite_mtl_identities(R: FiniteRing, n_max: int = 3, ab_max: int = 2,
                         L: Optional[IdealLattice] = None) -> SuiteReport:
    """Identities that are theorems for MTL-rings with identity.

    Refuses rings that are not MTL: a failure here must mean a bug, while
    counterexample hunting on other rings goes through ``scan_mtl_identities``.
    """
    require_unital(R, "suite_mtl_identities")
    L = _lattice(R, L)
    mtl = check_mtl(R, L)
    if not mtl:
        raise PreconditionError(f"{R.name} is not an MTL-ring; witness {mtl.witness}")
    return scan_mtl_identities(R, n_max, ab_max, L)


def bezout_pair(R: FiniteRing, I: Ideal, J: Ideal,
                L: Optional[IdealLattice] = None) -> tuple:
    """Some ``i`` in ``I->J`` and ``j`` in ``J->I`` with ``i + j = 1``."""
    one = require_unital(R, "bezout_pair")
    L = _lattice(R, L)
    if not check_mtl(R, L):
        raise PreconditionError(f"{R.name} is not an MTL-ring")
    IJ, JI = L[L.imp[L.position(I)][L.position(J)]], L[L.imp[L.position(J)][L.position(I)]]
    for i in IJ.members:
        j = R.sub(one, i)
        if j in JI:
            return i, j
    raise RuntimeError(f"no Bezout pair for {I}, {J} although {R.name} is MTL")


def crt_check(R: FiniteRing, I: Ideal, J: Ideal,
              L: Optional[IdealLattice] = None) -> Check:
    """``R/I x R/J`` against ``R/(I cap J) x R/(I+J)`` by isomorphism search."""
    require_unital(R, "crt_check")
    L = _lattice(R, L)
    if not check_mtl(R, L):
        raise PreconditionError(f"{R.name} is not an MTL-ring")
    i, j = L.position(I), L.position(J)
    quo = lambda k: build_quotient(R, L[k])[0]
    left = build_product([quo(i), quo(j)])
    right = build_product([quo(L.meet[i][j]), quo(L.join[i][j])])
    f = ring_isomorphic(left, right)
    return Check(f is not None, None if f is not None else (I, J))


def suite_crt(R: FiniteRing, L: Optional[IdealLattice] = None) -> SuiteReport:
    """``crt_check`` and ``bezout_pair`` over all ideal pairs."""
    L = _lattice(R, L)
    m = len(L)
    report = SuiteReport("crt", R.name, 0, m * m)
    for i, j in itertools.product(range(m), repeat=2):
        report.cases += 1
        I, J = L[i], L[j]
        if not crt_check(R, I, J, L):
            report.failures.append(("crt", (I, J)))
        a, b = bezout_pair(R, I, J, L)
        if not (a in L[L.imp[i][j]] and b in L[L.imp[j][i]] and R.add[a][b] == R.one):
            report.failures.append(("bezout", (I, J)))
    return report


def suite_quotient_lemma(R: FiniteRing, L: Optional[IdealLattice] = None) -> SuiteReport:
    """Annihilator and residuum identities across ``R -> R/I`` for ``I`` below J and K."""
    L = _lattice(R, L)
    imp, prod, le, m = L.imp, L.product, L.leq, len(L)
    bot = L.bot
    expected = sum(sum(le[i][x] for x in range(m)) ** 2 for i in range(m))
    report = SuiteReport("quotient", R.name, 0, expected)
    fail = report.failures.append
    for i in range(m):
        Q, pi = build_quotient(R, L[i])
        LQ = enumerate_ideals(Q)
        img = lambda k: LQ.position(image_ideal(pi, L[k]))
        for j, k in itertools.product(range(m), repeat=2):
            if not (le[i][j] and le[i][k]):
                continue
            report.cases += 1
            t = (L[i], L[j], L[k])
            ann_i = imp[i][bot]
            if not le[i][imp[prod[ann_i][j]][bot]]:
                fail(("annihilator_containment", t))
            if not (le[i][imp[j][i]] and le[i][imp[j][k]] and le[i][imp[k][j]]):
                fail(("contained_in_residua", t))
            if LQ.imp[img(j)][LQ.bot] != img(imp[j][i]):
                fail(("quotient_annihilator", t))
            if LQ.imp[img(j)][img(k)] != img(imp[j][k]):
                fail(("quotient_residuum", t))
    return report


@dataclass
class SubdirectEntry:
    element: int
    ideal: Ideal
    factor: FiniteRing
    unique_atom: bool
    surjective: bool
    factor_mtl: Optional[bool]


@dataclass
class SubdirectDecomposition:
    ring: str
    entries: list
    meet_is_zero: bool
    factors_irreducible: bool
    projections_onto: bool
    factors_mtl: Optional[bool]

    @property
    def verified(self) -> bool:
        return (self.meet_is_zero and self.factors_irreducible and self.projections_onto
                and self.factors_mtl is not False)

    def as_dict(self) -> dict:
        return {
            "ring": self.ring,
            "entries": [{"r": e.element, "ideal": list(e.ideal.members),
                         "factor": e.factor.name, "factor_order": e.factor.order,
                         "unique_atom": e.unique_atom, "surjective": e.surjective,
                         "factor_mtl": e.factor_mtl} for e in self.entries],
            "meet_is_zero": self.meet_is_zero,
            "factors_irreducible": self.factors_irreducible,
            "projections_onto": self.projections_onto,
            "factors_mtl": self.factors_mtl,
        }


def avoiding_ideal(L: IdealLattice, r: int) -> Ideal:
    """First ideal in canonical order that is maximal among those not containing ``r``."""
    avoid = [k for k in range(len(L)) if r not in L[k]]
    for a in avoid:
        if not any(b != a and L.leq[a][b] for b in avoid):
            return L[a]
    raise RingError(f"every ideal contains {r}")


def subdirect_decompose(R: FiniteRing, L: Optional[IdealLattice] = None) -> SubdirectDecomposition:
    """One factor ``R/I_r`` per nonzero ``r``; checks the representation.

    Runs on any ring; factor MTL status is only reported when R is MTL.
    """
    if R.is_zero_ring:
        raise RingError("the zero ring has no nonzero elements")
    L = _lattice(R, L)
    r_mtl = bool(check_star(R)) and bool(check_mtl(R, L))
    entries = []
    meet = (1 << R.order) - 1
    for r in R.elements:
        if r == R.zero:
            continue
        I = avoiding_ideal(L, r)
        meet &= I.mask
        Q, pi = build_quotient(R, I)
        LQ = enumerate_ideals(Q)
        atom = structure_queries(LQ).unique_atom is not None
        entries.append(SubdirectEntry(r, I, Q, atom, pi.is_surjective,
                                      bool(check_mtl(Q, LQ)) if r_mtl else None))
    return SubdirectDecomposition(
        R.name, entries,
        meet == 1 << R.zero,
        all(e.unique_atom for e in entries),
        all(e.surjective for e in entries),
        all(e.factor_mtl for e in entries) if r_mtl else None,
    )
