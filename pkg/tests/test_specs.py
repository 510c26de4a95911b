import json

import pytest
from hypothesis import given, settings, strategies as st

from mtlab.iso import ring_isomorphic
from mtlab.specs import (SpecError, build_algebra, build_ring, load_ring, parse_algebra_spec,
                         parse_ring_spec)
from mtlab.ring import build_zn


def test_zn_spec():
    s = parse_ring_spec('{"zn": 12}')
    assert s.tag == "zn" and s.payload == 12
    assert build_ring(s).order == 12


def test_product_spec():
    R = load_ring('{"product": [{"zn": 2}, {"zn": 3}]}')
    assert ring_isomorphic(R, build_zn(6)) is not None


def test_quotient_spec():
    R = load_ring({"quotient": {"ring": {"zn": 12}, "ideal_gens": [4]}})
    assert ring_isomorphic(R, build_zn(4)) is not None


def test_table_spec_round_trip():
    Z3 = build_zn(3)
    doc = {"table": {"order": 3, "add": [list(r) for r in Z3.add],
                     "mul": [list(r) for r in Z3.mul], "zero": 0, "one": 1}}
    s = parse_ring_spec(json.dumps(doc))
    assert s.to_json() == doc
    assert build_ring(s).same_tables(Z3)


@pytest.mark.parametrize("text,path,msg", [
    ('{"null_ext": {"p": 4, "k": 1}}', "$.null_ext.p", "p not prime"),
    ('{"zn": 3, "x": 1}', "$", "exactly one"),
    ('{"ring": 3}', "$.ring", "unknown key"),
    ('{"product": [{"zn": 2}, {"zz": 3}]}', "$.product[1].zz", "unknown key"),
    ('{"null_ext": {"p": 2, "k": 1, "q": 0}}', "$.null_ext.q", "unknown key"),
    ('{"null_ext": {"p": 2}}', "$.null_ext.k", "missing key"),
    ('{"zn": 0}', "$.zn", ">= 1"),
    ('{"zn": true}', "$.zn", "expected integer"),
    ('{"product": []}', "$.product", "nonempty"),
    ('{"table": {"order": 2, "add": [[0, 1]], "mul": [[0, 0], [0, 1]], "zero": 0}}',
     "$.table.add", "shape"),
    ('{"table": {"order": 2, "add": [[0, 1], [1, 2]], "mul": [[0, 0], [0, 1]], "zero": 0}}',
     "$.table.add[1][1]", "out of range"),
    ('{"quotient": {"ring": {"zn": 4}, "ideal_gens": "2"}}', "$.quotient.ideal_gens", "list"),
    ('not json', "$", "invalid JSON"),
])
def test_spec_errors_carry_paths(text, path, msg):
    with pytest.raises(SpecError) as e:
        parse_ring_spec(text)
    assert e.value.path == path
    assert msg in str(e.value)


def test_table_axiom_failure_is_spec_error():
    text = '{"table": {"order": 4, "add": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],' \
           ' "mul": [[0,0,0,0],[0,1,0,3],[0,0,0,2],[0,3,2,1]], "zero": 0, "one": 1}}'
    with pytest.raises(SpecError) as e:
        load_ring(text)
    assert "identity fails at 2" in str(e.value)


def test_quotient_generator_out_of_range():
    with pytest.raises(SpecError) as e:
        load_ring('{"quotient": {"ring": {"zn": 4}, "ideal_gens": [9]}}')
    assert e.value.path == "$.quotient.ideal_gens[0]"


def test_algebra_specs():
    assert build_algebra(parse_algebra_spec('{"nm_chain": 6}')).size == 6
    assert build_algebra(parse_algebra_spec('{"ideal_lattice_of": {"zn": 12}}')).size == 6
    with pytest.raises(SpecError):
        parse_algebra_spec('{"nm_chain": 1}')
    with pytest.raises(SpecError):
        parse_algebra_spec('{"table": {"size": 2}}')


SPECS = st.recursive(
    st.one_of(st.integers(1, 6).map(lambda n: {"zn": n}),
              st.sampled_from([{"null_ext": {"p": 2, "k": 1}}, {"null_ext": {"p": 3, "k": 0}}])),
    lambda inner: st.lists(inner, min_size=1, max_size=2).map(lambda xs: {"product": xs}),
    max_leaves=3,
)


@settings(max_examples=50, deadline=None)
@given(SPECS)
def test_spec_round_trip(doc):
    s = parse_ring_spec(json.dumps(doc))
    assert s.to_json() == doc
    assert parse_ring_spec(str(s)) == s
