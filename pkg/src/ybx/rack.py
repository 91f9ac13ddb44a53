"""Racks, the derived solution s, guitar maps and braid group representations."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .braided import BraidedPair, check_braid, check_involutive, leg
from .coalgebra import Coalgebra, is_coalgebra_morphism, tensor_coalgebra
from .errors import CapExceeded, DegenerateInput, DimensionMismatch, RackAxiomFailure, SingularMap
from .linmap import LinMap, compose, compose_all, invert, tensor, tensor_all
from .report import Report

DEFAULT_DIM_CAP = 4096


def dim_cap() -> int:
    raw = os.environ.get("YBX_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_DIM_CAP


def _check_cap(d: int, n: int, cap=None):
    cap = dim_cap() if cap is None else cap
    if d ** n > cap:
        raise CapExceeded(f"X^{n} has dimension {d ** n} > cap {cap} (set YBX_DIM_CAP to raise it)")


def _map_each(fn, items, threads=None):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def r_triangle(X: Coalgebra, tri: LinMap) -> LinMap:
    """``(tri (x) X) o (X (x) c) o (Delta (x) X)``, no axioms checked."""
    I = X.id()
    return compose_all(tensor(tri, I), tensor(I, X.c), tensor(X.delta, I))


class Rack:
    def __init__(self, X: Coalgebra, tri: LinMap):
        if (tri.dom, tri.cod) != (X.dim ** 2, X.dim):
            raise DimensionMismatch(f"rack operation must be {X.dim ** 2} -> {X.dim}")
        self.X = X
        self.tri = tri

    @cached_property
    def left_mult(self) -> LinMap:
        """``(X (x) tri) o (Delta (x) X)``."""
        X = self.X
        return compose(tensor(X.id(), self.tri), tensor(X.delta, X.id()))

    @cached_property
    def tri_bar(self):
        X = self.X
        try:
            Li = invert(self.left_mult)
        except SingularMap:
            return None
        return compose(tensor(X.eps, X.id()), Li)


def trivial_rack(X: Coalgebra) -> Rack:
    return Rack(X, tensor(X.eps, X.id()))


def check_rack(R: Rack) -> Report:
    X = R.X
    I, D, e, tri = X.id(), X.delta, X.eps, R.tri
    rep = Report("rack")
    rep.flag("coalgebra map", is_coalgebra_morphism(tri, tensor_coalgebra(X, X), X).ok)
    rep.eq("self-distributive",
           compose(tri, tensor(I, tri)),
           compose_all(tri, tensor(tri, tri), tensor_all(I, X.c, I), tensor_all(D, I, I)),
           X.labeler(3))
    tb = R.tri_bar
    rep.flag("left non-degenerate", tb is not None)
    if tb is not None:
        DX = tensor(D, I)
        lab = X.labeler(2)
        rep.eq("tri_bar (X tri)(Delta X) = eps X", compose_all(tb, tensor(I, tri), DX), tensor(e, I), lab)
        rep.eq("tri (X tri_bar)(Delta X) = eps X", compose_all(tri, tensor(I, tb), DX), tensor(e, I), lab)
    return rep


def rack_to_solution(R: Rack) -> BraidedPair:
    rep = check_rack(R)
    if not rep.ok:
        bad = rep.first_failure()
        raise RackAxiomFailure(f"not a rack: {bad.name} fails (witness {bad.witness})", rep)
    P = BraidedPair(R.X, r_triangle(R.X, R.tri))
    ok, w = check_braid(P)
    if not ok or not P.nondegenerate:
        raise AssertionError(f"rack solution failed its own checks (witness {w})")
    return P


# derived solution ----------------------------------------------------------

def derived_map(P: BraidedPair) -> LinMap:
    if not P.nondegenerate:
        raise DegenerateInput("the derived map needs a non-degenerate pair")
    X = P.X
    I, D = X.id(), X.delta
    return compose_all(
        tensor(P.tau, I), tensor(I, D), X.c, tensor(I, P.sigma),
        tensor_all(I, P.tau_inv, I), tensor(D, D))


@dataclass
class Derived:
    s: LinMap
    tri: LinMap
    rack: Rack

    def pair(self, X) -> BraidedPair:
        return BraidedPair(X, self.s)


def solution_to_rack(P: BraidedPair, check: bool = True) -> Derived:
    s = derived_map(P)
    X = P.X
    tri = compose(tensor(X.id(), X.eps), s)
    out = Derived(s, tri, Rack(X, tri))
    if check:
        if s != r_triangle(X, tri):
            raise AssertionError("derived map is not of rack type")
        S = BraidedPair(X, s)
        ok, w = check_braid(S)
        if not ok or not S.nondegenerate:
            raise AssertionError(f"derived solution is not a non-degenerate braided set (witness {w})")
    return out


def derived_identities(P: BraidedPair, d: Derived = None) -> Report:
    """Identities tying r and its coordinates to the derived rack."""
    d = d or solution_to_rack(P, check=False)
    X = P.X
    I, D, e, c = X.id(), X.delta, X.eps, X.c
    s, tri, t = d.s, d.tri, P.tau
    lab2, lab3 = X.labeler(2), X.labeler(3)
    rep = Report("derived solution")
    rep.eq("s = r_tri", s, r_triangle(X, tri), lab2)
    S = BraidedPair(X, s)
    ok, w = check_braid(S)
    rep.flag("s braided", ok, w)
    rep.flag("s non-degenerate", S.nondegenerate)
    X2 = tensor_coalgebra(X, X)
    rep.flag("s coalgebra map", is_coalgebra_morphism(s, X2, X2).ok)
    rep.eq("tau r = tri (tau X)(X Delta)", compose(t, P.r), compose(tri, P.M2), lab2)
    XXD = tensor(X.id(2), D)
    tt = compose_all(tensor(t, t), tensor_all(I, c, I), XXD)
    rep.eq("tau (tri X) = tri (tau tau)(X c X)(X2 Delta)", compose(t, tensor(tri, I)), compose(tri, tt), lab3)
    rep.eq("tau2~ (s X) = s tau2~", compose(tt, tensor(s, I)), compose(s, tt), lab3)
    rep.eq("(X eps) c s = X eps", compose_all(tensor(I, e), c, s), tensor(I, e), lab2)
    rep.eq("(eps X) s = X eps", compose(tensor(e, I), s), tensor(I, e), lab2)
    rep.flag("s = c iff involutive", (s == c) == check_involutive(P))
    return rep


# guitar maps ---------------------------------------------------------------

@dataclass
class GuitarTower:
    base: BraidedPair
    n: int
    alpha: list   # alpha[k] for k = 2..n (index k)
    q: list
    j: list       # j[k] for k = 1..n


def guitar(P: BraidedPair, n: int, cap=None, check: bool = True) -> GuitarTower:
    if n < 2:
        raise ValueError("guitar maps need n >= 2")
    if not P.nondegenerate:
        raise DegenerateInput("guitar maps need a non-degenerate pair")
    X = P.X
    d = X.dim
    _check_cap(d, n, cap)
    I, D, t = X.id(), X.delta, P.tau
    alpha = [None, None, P.M2]
    q = [None, None, P.M2]
    for k in range(2, n):
        mid = tensor_all(I, X.flip(k - 1, 1), I)
        alpha.append(compose_all(tensor(t, X.id(k)), mid, tensor(alpha[k], D)))
        q.append(compose_all(tensor(t, q[k]), mid, tensor(X.id(k), D)))
    j = [None, I]
    for k in range(1, n):
        j.append(compose(tensor(I, j[k]), alpha[k + 1]))
    tower = GuitarTower(P, n, alpha, q, j)
    if check:
        rep = tower_report(tower)
        if not rep.ok:
            raise AssertionError(f"guitar tower identities fail:\n{rep}")
    return tower


def tower_report(T: GuitarTower) -> Report:
    P = T.base
    X = P.X
    I = X.id()
    rep = Report("guitar tower")
    for k in range(2, T.n + 1):
        lab = X.labeler(k)
        rep.eq(f"J{k} = Q{k} (J{k - 1} X)", T.j[k], compose(T.q[k], tensor(T.j[k - 1], I)), lab)
        if k >= 3:
            m = k - 1
            a_alt = compose_all(tensor(I, X.flip(1, m - 1)), tensor(T.alpha[2], X.id(m - 1)),
                                tensor(I, X.flip(m - 1, 1)), tensor(T.alpha[m], I))
            q_alt = compose_all(tensor(I, T.q[m]), tensor(I, X.flip(1, m - 1)),
                                tensor(T.q[2], X.id(m - 1)), tensor(I, X.flip(m - 1, 1)))
            rep.eq(f"alpha{k} alternative recursion", T.alpha[k], a_alt, lab)
            rep.eq(f"Q{k} alternative recursion", T.q[k], q_alt, lab)
    return rep


def check_intertwining(P: BraidedPair, n: int, threads=None, cap=None) -> Report:
    """``J_n r_{i,i+1} = s_{i,i+1} J_n`` for every i, and alpha_n commuting with r_{i,i+1}, 1 < i < n."""
    T = guitar(P, n, cap=cap, check=False)
    s = derived_map(P)
    d = P.dim
    Jn = T.j[n]
    an = T.alpha[n]
    lab = P.X.labeler(n)

    def one(i):
        ri = leg(P.r, i, n, d)
        out = [("J%d r_%d%d = s_%d%d J%d" % (n, i, i + 1, i, i + 1, n),
                compose(Jn, ri), compose(leg(s, i, n, d), Jn))]
        if n > 2 and 1 < i < n:
            out.append(("alpha%d r_%d%d = r_%d%d alpha%d" % (n, i, i + 1, i, i + 1, n),
                        compose(an, ri), compose(ri, an)))
        return out

    rep = Report(f"intertwining n={n}")
    for eqs in _map_each(one, range(1, n), threads):
        for name, lhs, rhs in eqs:
            rep.eq(name, lhs, rhs, lab)
    return rep


def braid_rep(P: BraidedPair, n: int, cap=None) -> list:
    """Generators ``b_i -> r_{i,i+1}`` of the braid group action on ``X^n``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    _check_cap(P.dim, n, cap)
    return [leg(P.r, i, n, P.dim) for i in range(1, n)]


def braid_rep_report(P: BraidedPair, n: int, cap=None) -> Report:
    gens = braid_rep(P, n, cap)
    lab = P.X.labeler(n)
    rep = Report(f"braid group action on X^{n}")
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            ga, gb = gens[a], gens[b]
            if b == a + 1:
                rep.eq(f"b{a + 1} b{b + 1} b{a + 1} = b{b + 1} b{a + 1} b{b + 1}",
                       compose_all(ga, gb, ga), compose_all(gb, ga, gb), lab)
            else:
                rep.eq(f"b{a + 1} b{b + 1} = b{b + 1} b{a + 1}", compose(ga, gb), compose(gb, ga), lab)
    if check_involutive(P):
        for a, g in enumerate(gens):
            rep.flag(f"b{a + 1}^2 = id", compose(g, g).is_identity())
    return rep
