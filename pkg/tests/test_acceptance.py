"""The ten acceptance criteria; each test records one PASS/FAIL line (shown in the terminal summary)."""

import json
import random
import time
from contextlib import contextmanager
from itertools import permutations, product

import pytest

from conftest import ACCEPTANCE, biased_prim, random_linmap
from ybx import corpus
from ybx.braided import BraidedPair, check_braid, check_involutive, check_qybe
from ybx.coalgebra import cyclic_group, klein_group, symmetric_group_3
from ybx.errors import RackAxiomFailure
from ybx.extension import check_mixed_braid_lemmas, extend
from ybx.field import GF, QQ
from ybx.hopf import (antipode_identities, brace_to_cocycle, brace_to_operator, check_brace,
                      cocycle_to_brace, operator_to_brace)
from ybx.linmap import LinMap, compose, flip, tensor
from ybx.primitive import (PrimParams, check_conditions, closed_form_inverses, prim_to_solution, random_params,
                           search, theorem_equivalence)
from ybx.rack import (check_intertwining, check_rack, derived_identities, derived_map, rack_to_solution,
                      r_triangle, solution_to_rack)
from ybx.serialize import dumps, loads


@contextmanager
def criterion(k, title):
    detail = {}
    t0 = time.perf_counter()
    try:
        yield detail
    except BaseException:
        ACCEPTANCE[k] = (False, title, detail.get("msg", ""))
        print(f"criterion {k}: FAIL  {title}")
        raise
    dt = time.perf_counter() - t0
    msg = detail.get("msg", "")
    ACCEPTANCE[k] = (True, title, f"{msg} ({dt:.2f}s)".strip())
    print(f"criterion {k}: PASS  {title}  {msg} ({dt:.2f}s)")


def corpus_pairs():
    """Every solution carried by the corpus, as a braided pair."""
    out = {}
    for name in corpus.CORPUS:
        kind = corpus.meta(name)["kind"]
        obj = corpus.load(name)
        if kind == "pair":
            out[name] = obj
        elif kind == "prim" and not corpus.meta(name).get("negative"):
            out[name] = prim_to_solution(obj)
        elif kind == "prim":
            out[name] = prim_to_solution(obj, check=False)
        elif kind == "brace":
            if check_brace(obj).ok:
                out[name] = BraidedPair(obj.C, brace_to_operator(obj).r)
        elif kind == "operator":
            out[name] = BraidedPair(obj.C, obj.r)
    return out


def test_c1_braid_qybe_equivalence():
    with criterion(1, "braid equation <=> QYBE on the corpus, < 1 s each at dim <= 12") as d:
        pairs = corpus_pairs()
        for name in ("z3_shift", "s3_conjugation", "flip3"):
            pairs[name + "_doubled"] = extend(pairs[name]).pair
        slow = []
        for name, P in pairs.items():
            assert P.dim <= 12
            t0 = time.perf_counter()
            b, _ = check_braid(P)
            q = check_qybe(P)
            dt = time.perf_counter() - t0
            assert b == q, name
            if dt >= 1.0:
                slow.append((name, dt))
        assert not slow, slow
        d["msg"] = f"{len(pairs)} solutions"


def test_c2_nondegeneracy_closed_forms():
    with criterion(2, "sigma^-1, tau^-1 closed forms on 500 random F5, d=2 tuples") as d:
        F = GF(5)
        rng = random.Random(2024)
        for _ in range(500):
            P = random_params(F, 2, rng)
            pair = prim_to_solution(P, check=False)
            assert pair.nondegenerate
            si, ti = closed_form_inverses(P)
            assert pair.sigma_inv == si
            assert pair.tau_inv == ti
        d["msg"] = "500/500 exact"


def test_c3_rack_equivalence():
    with criterion(3, "rack axioms <=> r_tri braided (S3 conjugation, faulted operation, all ops on 3 points)") as d:
        R = corpus.s3_conjugation_rack()
        assert check_rack(R).ok
        assert check_braid(rack_to_solution(R))[0]
        bad = corpus.bad_rack()
        rep = check_rack(bad)
        assert not rep["self-distributive"].ok and rep["self-distributive"].witness is not None
        with pytest.raises(RackAxiomFailure):
            rack_to_solution(bad)
        assert not check_braid(BraidedPair(bad.X, r_triangle(bad.X, bad.tri)))[0]
        # both directions, exhaustively over operations with bijective left multiplications on 3 points
        perms = list(permutations(range(3)))
        seen = racks = 0
        for L in product(perms, repeat=3):
            Rk = corpus.set_rack(["a", "b", "c"], lambda x, y: L[x][y])
            braided = check_braid(BraidedPair(Rk.X, r_triangle(Rk.X, Rk.tri)))[0]
            assert braided == check_rack(Rk).ok
            seen += 1
            racks += braided
        d["msg"] = f"{racks} racks among {seen} operations"


def test_c4_derived_solution_theorems():
    with criterion(4, "s non-degenerate braided and J_n r = s J_n, n = 2,3,4") as d:
        t0 = time.perf_counter()
        for name in ("z3_shift", "s3_conjugation"):
            P = corpus.load(name)
            D = solution_to_rack(P)
            assert derived_identities(P, D).ok
            for n in (2, 3, 4):
                assert check_intertwining(P, n).ok, (name, n)
        dt = time.perf_counter() - t0
        assert dt < 30
        d["msg"] = "2 solutions x 3 sizes"


def test_c5_involutive_collapse():
    with criterion(5, "involutive <=> s = c on corpus solutions") as d:
        count = 0
        for name, P in corpus_pairs().items():
            if not P.nondegenerate:
                continue
            s = derived_map(P)
            assert (s == P.X.c) == check_involutive(P), name
            count += 1
        d["msg"] = f"{count} solutions"


def test_c6_brace_equivalences():
    with criterion(6, "brace <-> operator <-> cocycle round trips and antipode identities") as d:
        braces = {
            "trivial Z/2": corpus.trivial_brace(cyclic_group(2)),
            "trivial Z/3": corpus.trivial_brace(cyclic_group(3)),
            "trivial S3": corpus.trivial_brace(symmetric_group_3()),
            "Z/4 Klein": corpus.z4_brace(),
            "opposite S3": corpus.opposite_brace(symmetric_group_3()),
            "trivial Klein": corpus.trivial_brace(klein_group()),
        }
        for name, B in braces.items():
            assert check_brace(B).ok, name
            O = brace_to_operator(B)
            assert operator_to_brace(O) == B, name
            assert brace_to_operator(operator_to_brace(O)).r == O.r
            K = brace_to_cocycle(B)
            assert cocycle_to_brace(K) == B, name
            assert antipode_identities(O).ok, name
        d["msg"] = f"{len(braces)} braces"


def test_c7_doubling():
    with criterion(7, "extend on every non-degenerate corpus solution; mixed lemmas; doubled S3 < 60 s") as d:
        count = 0
        for name, P in corpus_pairs().items():
            if not P.nondegenerate or not check_braid(P)[0]:
                continue
            D = extend(P)
            assert check_mixed_braid_lemmas(D).ok, name
            count += 1
        t0 = time.perf_counter()
        D = extend(corpus.load("s3_conjugation"))
        assert D.Z.dim == 12 and check_mixed_braid_lemmas(D).ok
        assert time.perf_counter() - t0 < 60
        # a mutated transposition must be caught
        P = corpus.load("s3_conjugation")
        Rt1, Rt2 = P.transpositions[:2]
        rows = Rt1.rows()
        rows[0][0] = 1 - rows[0][0]
        bad = LinMap.from_rows(P.field, rows)
        assert not check_mixed_braid_lemmas(D, Rt=(bad, Rt2)).ok
        d["msg"] = f"{count} solutions doubled"


def test_c8_theorem_as_oracle():
    with criterion(8, "braid verdict == conditions (1)-(8): 1000 random F3 d=2, exhaustive F2 d=1") as d:
        F = GF(3)
        rng = random.Random(8)
        for _ in range(1000):
            assert theorem_equivalence(random_params(F, 2, rng))
        # uniform tuples are almost never solutions; sparse ones are, about half the time
        hits = 0
        for _ in range(1000):
            P = biased_prim(F, 2, rng)
            assert theorem_equivalence(P)
            hits += check_conditions(P).passed()
        assert hits > 100
        # exhaustive over F2, d = 1 (invertible g, h only; a singular g or h gives no solution)
        F2 = GF(2)
        agree = positives = 0
        for g, h, s, t in product(range(2), repeat=4):
            P = PrimParams(1, *(LinMap.from_rows(F2, [[x]]) for x in (g, h, s, t)))
            if not (g and h):
                continue
            assert theorem_equivalence(P)
            agree += 1
            positives += check_conditions(P).passed()
        golden = corpus.load_search("search_f2_d1")
        assert [P.key() for P in search(F2, 1, exhaustive=True)] == [P.key() for P in golden]
        assert positives == len(golden)
        d["msg"] = f"1000 uniform + 1000 sparse samples ({hits} solutions); F2 exhaustive {agree} tuples, {positives} solutions"


def test_c9_leibniz_criterion():
    with criterion(9, "nilpotent Leibniz passes; antisymmetric non-Leibniz fails exactly at (8)") as d:
        P = corpus.leibniz_d2()
        assert check_conditions(P).passed()
        assert check_braid(prim_to_solution(P))[0]
        Q = corpus.non_leibniz_d3()
        rep = check_conditions(Q)
        assert rep.failing() == [8]
        w = rep.condition(8).witness
        assert w["triple"] == ["v1", "v2", "v3"]
        assert not check_braid(prim_to_solution(Q, check=False))[0]
        d["msg"] = f"witness {w['identity']} at {'⊗'.join(w['triple'])}"


def test_c10_infrastructure_laws():
    with criterion(10, "tensor interchange, flip naturality, JSON round trips on 10^4 random cases each") as d:
        rng = random.Random(10)
        fields = [QQ, GF(2), GF(3), GF(5), GF(7)]
        N = 10_000
        for _ in range(N):
            F = rng.choice(fields)
            a, b, c, e, f = (rng.randint(1, 3) for _ in range(5))
            g1 = random_linmap(F, a, b, rng)
            g2 = random_linmap(F, b, c, rng)
            h1 = random_linmap(F, e, f, rng)
            h2 = random_linmap(F, f, rng.randint(1, 3), rng)
            assert compose(tensor(g2, h2), tensor(g1, h1)) == tensor(compose(g2, g1), compose(h2, h1))
            assert compose(flip(F, b, f), tensor(g1, h1)) == compose(tensor(h1, g1), flip(F, a, e))
            text = dumps(g1)
            back = loads(text)
            assert back == g1 and dumps(back) == text
        for _ in range(N // 10):
            P = random_params(rng.choice(fields[1:]), rng.randint(1, 2), rng)
            text = dumps(P)
            assert loads(text) == P and dumps(loads(text)) == text
        for name in corpus.CORPUS:
            text = dumps(corpus.build(name))
            assert dumps(loads(text)) == text
            assert json.loads(text)["kind"] == corpus.meta(name)["kind"]
        d["msg"] = f"{N} cases per law"
