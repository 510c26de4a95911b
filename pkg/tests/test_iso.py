import pytest
from hypothesis import given, settings, strategies as st

from mtlab.classify import classify_ring
from mtlab.corpus import build_monic_quotient
from mtlab.ideals import enumerate_ideals
from mtlab.iso import (IsomorphismInconclusive, invariants, local_factors, primitive_idempotents,
                       ring_isomorphic)
from mtlab.ring import build_null_extension, build_product, build_zn, relabel
import oracles


def test_identity_map_on_self(z12):
    f = ring_isomorphic(z12, z12)
    assert f.image == tuple(range(12))


def test_crt_pair(z2z3):
    f = ring_isomorphic(build_zn(6), z2z3)
    assert f is not None
    assert f.is_homomorphism(unital=True) and f.is_surjective


def test_z4_not_z2_squared():
    assert ring_isomorphic(build_zn(4), build_product([build_zn(2), build_zn(2)])) is None


@pytest.mark.parametrize("A,B", [
    (build_zn(4), build_null_extension(2, 1)),
    (build_zn(8), build_null_extension(2, 2)),
    (build_monic_quotient(2, (0, 0)), build_null_extension(2, 1)),
    (build_monic_quotient(2, (1, 1)), build_product([build_zn(2), build_zn(2)])),
    (build_zn(9), build_null_extension(3, 1)),
])
def test_agrees_with_permutation_oracle(A, B):
    assert (ring_isomorphic(A, B) is not None) == oracles.permutation_isomorphic(A, B)


def test_z2x_squared_mod_x2_is_null_ext():
    assert ring_isomorphic(build_monic_quotient(2, (0, 0)), build_null_extension(2, 1)) is not None


def test_primitive_idempotents_of_z12(z12):
    assert sorted(primitive_idempotents(z12)) == [4, 9]
    orders = sorted(S.order for _, S, _ in local_factors(z12))
    assert orders == [3, 4]


def test_bound_reports_inconclusive():
    A = build_null_extension(2, 6)
    with pytest.raises(IsomorphismInconclusive):
        ring_isomorphic(A, relabel(A, list(range(A.order))[::-1]))


def test_large_products_split_into_small_factors():
    A = build_product([build_zn(4), build_zn(3), build_zn(8)])
    B = build_product([build_zn(8), build_zn(4), build_zn(3)])
    assert A.order == 96
    assert ring_isomorphic(A, B) is not None


def test_symmetric_on_corpus(corpus_rings):
    small = [R for R in corpus_rings if 4 <= R.order <= 12]
    for A in small:
        for B in small:
            if A.order == B.order:
                assert (ring_isomorphic(A, B) is None) == (ring_isomorphic(B, A) is None)


def test_corpus_members_pairwise_distinct(corpus_rings):
    seen = {}
    for R in corpus_rings:
        seen.setdefault((invariants(R), len(enumerate_ideals(R))), []).append(R)
    for bucket in seen.values():
        for i, A in enumerate(bucket):
            for B in bucket[i + 1:]:
                assert ring_isomorphic(A, B) is None


BASE = [build_zn(12), build_null_extension(2, 2), build_product([build_zn(2), build_zn(4)]),
        build_monic_quotient(4, (1, 1)), build_product([build_zn(3), build_null_extension(2, 1)])]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(BASE), st.randoms(use_true_random=False))
def test_relabel_invariance(R, rnd):
    perm = list(range(R.order))
    rnd.shuffle(perm)
    S = relabel(R, perm)
    f = ring_isomorphic(R, S)
    assert f is not None
    assert len(enumerate_ideals(S)) == len(enumerate_ideals(R))
    a, b = classify_ring(R).as_dict(), classify_ring(S).as_dict()
    for k in ("mtl", "bl", "mv", "godel", "arithmetical", "local", "chain",
              "localizations_chain", "ideals"):
        assert a[k] == b[k]
