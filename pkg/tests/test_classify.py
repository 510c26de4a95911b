import pytest

from mtlab.classify import (NotMaximalError, check_arithmetical, check_bl,
                            check_equivalent_conditions, check_godel,
                            check_localizations_chain, check_mtl, check_mv, classify_ring,
                            divisibility, literal_corollary_failure, localization_shortcut,
                            localize)
from mtlab.corpus import supplementary_rings
from mtlab.ideals import build_quotient, enumerate_ideals, generated_ideal, maximal_ideals
from mtlab.iso import ring_isomorphic
from mtlab.ring import RingError, build_from_tables, build_null_extension, build_product, build_zn
import oracles


def gen(R, *g):
    return generated_ideal(R, g)


def test_z4_flags():
    c = classify_ring(build_zn(4))
    assert (c.mtl, c.bl, c.mv, c.arithmetical, c.chain, c.local) == (True,) * 6
    assert c.godel is False
    assert [I.members for I in c.witnesses["godel"]] == [(0, 2)]


def test_z4_godel_witness_is_the_square_zero_ideal():
    Z4 = build_zn(4)
    g = check_godel(Z4)
    assert not g and g.witness[0].members == (0, 2)


def test_z6_flags():
    c = classify_ring(build_zn(6))
    assert c.mtl and c.bl and c.godel and c.arithmetical
    assert not c.local
    assert c.mv is True


def test_null_ext_flags(n22):
    c = classify_ring(n22)
    assert c.local
    assert not any([c.mtl, c.bl, c.arithmetical, c.chain, c.localizations_chain])
    x, y = gen(n22, 2), gen(n22, 4)
    assert check_mtl(n22).witness == (x, y)
    assert check_bl(n22).witness == (x, y)
    assert check_arithmetical(n22).witness == (x, y, gen(n22, 6))


def test_null_ext_witness_residua_against_oracle(n22):
    x, y = frozenset(gen(n22, 2).members), frozenset(gen(n22, 4).members)
    M = frozenset({0, 2, 4, 6})
    assert oracles.residuum(n22, x, y) == M == oracles.residuum(n22, y, x)
    assert oracles.ideal_sum(n22, M, M) != frozenset(n22.elements)


def test_bare_divisibility_fails_on_null_ext(n22):
    d = divisibility(n22)
    assert not d
    # M cap (x) = (x) but M * (M -> (x)) = M * M = 0
    assert [I.members for I in d.witness] == [(0, 2, 4, 6), (0, 2)]


def test_product_of_fields(z2z3):
    assert check_mtl(z2z3)
    assert len(enumerate_ideals(z2z3)) == 4


def test_zero_ring():
    Z1 = build_zn(1)
    c = classify_ring(Z1)
    assert c.mtl and c.bl and c.mv and c.godel and c.arithmetical and c.localizations_chain
    assert all(check_equivalent_conditions(Z1).as_dict().values())


def test_equivalent_conditions_z12(z12):
    assert all(check_equivalent_conditions(z12).as_dict().values())


def test_equivalent_conditions_null_ext(n22):
    e = check_equivalent_conditions(n22)
    assert not any([e.mtl, e.mtl1, e.mtl2, e.mtl1p, e.mtl2p, e.quotient_mtl_star])
    # (x) and (y) meet in zero while their annihilators are both M
    assert e.mtl_star is False


def test_printed_corollary_forms_fail_on_fields():
    out = literal_corollary_failure(build_zn(5))
    assert out["mtl1p_printed"] is not None and out["mtl2p_printed"] is not None


def test_arithmetical_examples(z12):
    a = check_arithmetical(z12)
    assert a and a.jensen_b and a.jensen_c
    assert check_arithmetical(build_zn(7))
    n = check_arithmetical(build_null_extension(2, 2))
    assert not n and not n.jensen_b and not n.jensen_c


def test_arithmetical_needs_identity():
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(2 * a * b) % 4 for b in range(4)] for a in range(4)]
    with pytest.raises(RingError):
        check_arithmetical(build_from_tables(4, add, mul, 0, None))


def test_localize_z12(z12):
    at2 = localize(z12, gen(z12, 2))
    at3 = localize(z12, gen(z12, 3))
    assert ring_isomorphic(at2.ring, build_zn(4)) is not None
    assert ring_isomorphic(at3.ring, build_zn(3)) is not None
    assert at2.map.is_homomorphism(unital=True)


def test_localize_local_ring_is_itself(n22):
    (M,) = maximal_ideals(n22)
    loc = localize(n22, M)
    assert loc.map.is_injective and loc.map.is_surjective


def test_localize_rejects_non_maximal(z12):
    with pytest.raises(NotMaximalError):
        localize(z12, gen(z12, 4))


def test_localization_invariants(wide_rings, lattices):
    for R in wide_rings:
        if not R.is_unital or R.is_zero_ring:
            continue
        L = lattices[id(R)]
        for M in maximal_ideals(R, L):
            loc = localize(R, M, L)
            S = loc.ring
            assert R.order % S.order == 0
            assert len(maximal_ideals(S)) == 1
            assert loc.map.is_homomorphism(unital=True)
            for s in R.elements:
                if s not in M:
                    u = loc.map.image[s]
                    assert any(S.mul[u][v] == S.one for v in S.elements)
            assert ring_isomorphic(S, localization_shortcut(R, M)) is not None


def test_localizations_chain_examples(z12, n22):
    assert check_localizations_chain(z12)
    assert not check_localizations_chain(n22)
    assert check_localizations_chain(build_zn(30))
    with pytest.raises(RingError):
        check_localizations_chain(build_zn(1))


def test_corpus_classification_invariants(corpus_rings, lattices):
    for R in corpus_rings:
        L = lattices[id(R)]
        c = classify_ring(R, L)
        e = check_equivalent_conditions(R, L)
        for k in ("mtl1", "mtl2", "mtl1p", "mtl2p", "quotient_mtl_star"):
            assert getattr(e, k) == c.mtl, (R.name, k)
        if c.mtl:
            assert e.mtl_star
        if c.local:
            assert c.mtl == c.chain
        if c.mv:
            assert c.bl
        if c.bl:
            assert c.mtl
        assert c.mtl == oracles.prelinear(R, [frozenset(I.members) for I in L])


def test_supplementary_rings_classify_consistently():
    for R in supplementary_rings():
        c = classify_ring(R)
        assert c.mtl == c.bl == c.arithmetical == c.localizations_chain
    z4x = {R.name: R for R in supplementary_rings()}["Z4[x]/(x^2)"]
    assert classify_ring(z4x).mtl is False


def test_products_and_quotients_preserve_mtl():
    parts = [build_zn(4), build_zn(6), build_null_extension(2, 2), build_null_extension(3, 1),
             build_zn(9)]
    for A in parts:
        for B in parts:
            if A.order * B.order > 40:
                continue
            P = build_product([A, B])
            assert check_mtl(P).holds == (check_mtl(A).holds and check_mtl(B).holds)
    for R in (build_zn(24), build_product([build_zn(4), build_zn(3)]), build_zn(27)):
        assert check_mtl(R)
        for I in enumerate_ideals(R):
            assert check_mtl(build_quotient(R, I)[0])


def test_classification_json_is_stable(z12):
    a = classify_ring(z12).as_dict()
    b = classify_ring(build_zn(12)).as_dict()
    assert a == b
    assert list(a)[:3] == ["ring", "order", "ideals"]


def test_mv_and_godel_need_mtl(n22):
    assert not check_mv(n22) and not check_godel(n22)


def test_mtl_star_without_mtl():
    # Z4[x]/(x^2) has a unique minimal ideal (2x), so nonzero ideals never
    # meet in zero and the (MTL)* condition holds vacuously, while the ring
    # itself and its quotient by (2x) fail prelinearity.
    from mtlab.ideals import structure_queries
    R = {S.name: S for S in supplementary_rings()}["Z4[x]/(x^2)"]
    L = enumerate_ideals(R)
    e = check_equivalent_conditions(R, L)
    assert e.mtl_star and not e.mtl and not e.quotient_mtl_star
    atom = structure_queries(L).unique_atom
    assert atom is not None and len(atom) == 2
    assert oracles.closure(R, {atom.members[1]}) == frozenset(atom.members)
