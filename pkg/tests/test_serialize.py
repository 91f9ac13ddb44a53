import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import biased_prim, linmaps
from ybx import corpus
from ybx.coalgebra import cyclic_group
from ybx.errors import SchemaError
from ybx.extension import extend
from ybx.field import GF, QQ
from ybx.hopf import brace_to_cocycle, brace_to_operator, group_algebra
from ybx.serialize import dumps, from_doc, loads, to_doc


def roundtrip(obj):
    text = dumps(obj)
    back = loads(text)
    assert back == obj
    assert dumps(back) == text
    return back


@given(linmaps(max_dim=5))
def test_linmap_roundtrip(f):
    roundtrip(f)


@given(st.sampled_from([GF(3), GF(5), QQ]), st.integers(1, 2), st.integers(0, 2 ** 32))
def test_prim_roundtrip(F, d, seed):
    roundtrip(biased_prim(F, d, random.Random(seed)))


def test_every_type_roundtrips():
    B = corpus.z4_brace()
    objs = [corpus.z3_shift(), corpus.z3_shift().X, B, brace_to_operator(B), brace_to_cocycle(B),
            group_algebra(cyclic_group(3)), corpus.associative_d2(), corpus.s3_conjugation().r]
    for obj in objs:
        roundtrip(obj)
    D = extend(corpus.z3_shift())
    back = loads(dumps(D))
    assert back.r_e == D.r_e and back.base.r == D.base.r and dumps(back) == dumps(D)


def test_rational_encoding():
    from ybx.linmap import LinMap
    f = LinMap.from_rows(QQ, [["-3/4", 7], [0, "1/2"]])
    doc = to_doc(f)
    assert doc["field"] == "Q" and doc["rows"] == [["-3/4", "7"], ["0", "1/2"]]
    g = LinMap.from_rows(GF(5), [[1, 2], [3, 4]])
    assert to_doc(g)["rows"] == [[1, 2], [3, 4]] and to_doc(g)["p"] == 5


def test_field_declared_once():
    text = dumps(corpus.z3_shift())
    assert text.count('"field"') == 1


def doc_of(name):
    return json.loads(dumps(corpus.build(name)))


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d.pop("r"), "/r"),
    (lambda d: d["coalgebra"].__setitem__("dim", 0), "/coalgebra/dim"),
    (lambda d: d["coalgebra"]["labels"].pop(), "/coalgebra/labels"),
    (lambda d: d["r"]["rows"][3].pop(), "/r/rows/3"),
    (lambda d: d["r"]["rows"][2].__setitem__(1, 1.5), "/r/rows/2/1"),
    (lambda d: d["r"].__setitem__("dom", 4), "/r/dom"),
    (lambda d: d.__setitem__("field", "R"), "/field"),
    (lambda d: d.__setitem__("kind", "spaceship"), "/kind"),
])
def test_schema_error_paths(mutate, path):
    doc = doc_of("z3_shift")
    mutate(doc)
    with pytest.raises(SchemaError) as e:
        from_doc(doc)
    assert e.value.path == path


def test_prime_field_range_checked():
    doc = json.loads(dumps(corpus.z3_shift(GF(3))))
    assert doc["p"] == 3
    doc["r"]["rows"][0][0] = 3
    with pytest.raises(SchemaError) as e:
        from_doc(doc)
    assert e.value.path == "/r/rows/0/0"


def test_malformed_json():
    with pytest.raises(SchemaError) as e:
        loads("{nope")
    assert e.value.path == "/"
    with pytest.raises(SchemaError):
        loads("[1, 2]")


def test_expected_kind():
    text = dumps(corpus.z3_shift())
    with pytest.raises(SchemaError):
        loads(text, expect="brace")


def test_kind_inferred_and_hopf_wrapper():
    doc = json.loads(dumps(corpus.z3_shift()))
    del doc["kind"]
    assert from_doc(doc) == corpus.z3_shift()
    H = group_algebra(cyclic_group(2))
    inner = to_doc(H)
    wrapped = {"field": "Q", "hopf": {k: v for k, v in inner.items() if k not in ("field", "kind")}}
    assert from_doc(wrapped) == H


def test_doubled_consistency_enforced():
    doc = json.loads(dumps(extend(corpus.z3_shift())))
    doc["r"]["rows"][0], doc["r"]["rows"][1] = doc["r"]["rows"][1], doc["r"]["rows"][0]
    with pytest.raises(SchemaError) as e:
        from_doc(doc)
    assert e.value.path == "/r"
