import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import biased_prim
from ybx import corpus
from ybx.braided import (BraidedPair, check_automorphism, check_braid, check_involutive, check_nondegenerate,
                         check_qybe, check_unitary, full_report, involutive_consequences, leg,
                         nondegeneracy_report, structural_identities, three_identities, transpositions,
                         verdict_ok)
from ybx.coalgebra import make_setlike
from ybx.errors import DegenerateInput, DimensionMismatch
from ybx.field import GF, QQ
from ybx.linmap import basis_map, compose, identity
from ybx.primitive import check_conditions, prim_to_solution


def test_flip_is_everything():
    for n in (1, 2, 3):
        P = corpus.flip_solution(n)
        rep = full_report(P)
        assert rep.ok
        assert compose(P.r, P.r).is_identity()


def test_z3_shift_is_involutive():
    # r(x, y) = (y + 1, x - 1) squares to the identity
    P = corpus.z3_shift()
    rep = full_report(P)
    assert rep.ok and check_involutive(P) and check_unitary(P)


def test_s3_conjugation_not_involutive():
    P = corpus.s3_conjugation()
    rep = full_report(P)
    assert verdict_ok(rep)
    assert not rep["involutive"].ok and not rep["unitary"].ok


def test_broken_braid_witness():
    P = corpus.broken_lyubashenko()
    ok, w = check_braid(P)
    assert not ok and w == {"index": 0, "basis": "0⊗0⊗0"}
    rep = three_identities(P)
    assert [c.name for c in rep.failures()] == ["linking relation"]


def test_degenerate_pair():
    # r(x, y) = (x, x) is neither invertible nor non-degenerate
    X = make_setlike("ab")
    P = BraidedPair(X, basis_map(QQ, [0, 0, 3, 3], 4))
    assert not P.nondegenerate
    assert check_nondegenerate(P) == (False, None, None)
    with pytest.raises(DegenerateInput):
        transpositions(P)
    assert not check_automorphism(P).ok


def test_shape_errors():
    X = make_setlike("ab")
    with pytest.raises(DimensionMismatch):
        BraidedPair(X, identity(QQ, 3))
    with pytest.raises(ValueError):
        leg(identity(QQ, 4), 3, 3, 2)


@pytest.mark.parametrize("name", ["flip2", "z3_shift", "lyubashenko_involutive", "s3_conjugation"])
def test_identities_on_corpus(name):
    P = corpus.build(name)
    assert structural_identities(P).ok
    assert three_identities(P).ok
    assert nondegeneracy_report(P).ok
    if check_involutive(P):
        assert involutive_consequences(P).ok


def test_nondegeneracy_inverses_verified():
    ok, si, ti = check_nondegenerate(corpus.s3_conjugation())
    assert ok and si is not None and ti is not None


@given(st.sampled_from([GF(2), GF(3), GF(5), QQ]), st.integers(1, 2), st.integers(0, 2 ** 32))
def test_braid_iff_qybe_and_three_identities(F, d, seed):
    Pp = biased_prim(F, d, random.Random(seed))
    P = prim_to_solution(Pp, check=False)
    b, _ = check_braid(P)
    assert b == check_qybe(P) == three_identities(P).ok
    assert structural_identities(P).ok
    assert b == check_conditions(Pp).passed()


@given(st.integers(0, 2 ** 32))
def test_random_set_maps(seed):
    # random bijections of X x X for |X| = 3: braid <=> QYBE, reports never crash
    rng = random.Random(seed)
    perm = list(range(9))
    rng.shuffle(perm)
    P = BraidedPair(make_setlike("abc"), basis_map(QQ, perm, 9))
    assert check_braid(P)[0] == check_qybe(P)
    if P.nondegenerate:
        assert nondegeneracy_report(P).ok
