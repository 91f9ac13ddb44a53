"""Doubling a non-degenerate braided set to Z = X + SX."""

from __future__ import annotations

from dataclasses import dataclass

from .braided import INFORMATIONAL, BraidedPair, check_braid, full_report
from .coalgebra import Coalgebra, is_coalgebra_morphism
from .errors import BraidFailure, DegenerateInput
from .linmap import LinMap, compose, compose_all, tensor, tensor_all
from .report import Report


@dataclass
class DoubledSolution:
    base: BraidedPair
    Z: Coalgebra
    S: LinMap
    r_e: LinMap
    blocks: tuple   # (r, c Rt1, c Rt2, c r^-1 c) as endomorphisms of X (x) X

    @property
    def pair(self) -> BraidedPair:
        return BraidedPair(self.Z, self.r_e)

    def block_ranges(self):
        n = self.base.dim
        return {"X": [0, n], "SX": [n, 2 * n]}


def double_coalgebra(X: Coalgebra) -> tuple:
    """``Z = X (+) SX`` and the swap ``S``; ``S`` is a coalgebra isomorphism by construction."""
    n = X.dim
    N = 2 * n
    F = X.field
    dcols = []
    for off in (0, n):
        for j in range(n):
            col = {}
            for idx, v in X.delta.cols[j].items():
                a, b = divmod(idx, n)
                col[(a + off) * N + (b + off)] = v
            dcols.append(col)
    delta = LinMap._raw(F, N, N * N, dcols)
    counit = LinMap._raw(F, N, 1, list(X.counit.cols) * 2)
    labels = tuple(X.labels) + tuple(f"{l}~S" for l in X.labels)
    Z = Coalgebra(F, N, delta, counit, labels)
    S = LinMap._raw(F, N, N, [{(j + n) % N: 1} for j in range(N)])
    return Z, S


def _assemble(n, F, blocks):
    """Place the four X^2 blocks on Z^2 with the source/target offsets of each block."""
    N = 2 * n
    # (source offsets, target offsets) per block: X X -> X X, X SX -> SX X, SX X -> X SX, SX SX -> SX SX
    layout = (((0, 0), (0, 0)), ((0, n), (n, 0)), ((n, 0), (0, n)), ((n, n), (n, n)))
    cols = [None] * (N * N)
    for blk, ((sa, sb), (ta, tb)) in zip(blocks, layout):
        for j, col in enumerate(blk.cols):
            x, y = divmod(j, n)
            out = {}
            for idx, v in col.items():
                i, k = divmod(idx, n)
                out[(i + ta) * N + (k + tb)] = v
            cols[(x + sa) * N + (y + sb)] = out
    return LinMap._raw(F, N * N, N * N, cols)


def extend(P: BraidedPair, check: bool = True, Rt=None) -> DoubledSolution:
    """Build ``(Z, r_e)``; ``Rt`` overrides ``(R^t1, R^t2)`` for fault injection."""
    if not P.nondegenerate:
        raise DegenerateInput("doubling needs a non-degenerate pair")
    X = P.X
    c = X.c
    Rt1, Rt2 = Rt if Rt is not None else P.transpositions[:2]
    blocks = (P.r, compose(c, Rt1), compose(c, Rt2), compose_all(c, P.r_inv, c))
    Z, S = double_coalgebra(X)
    r_e = _assemble(X.dim, X.field, blocks)
    D = DoubledSolution(P, Z, S, r_e, blocks)
    if check:
        Q = D.pair
        ok, w = check_braid(Q)
        if not ok:
            raise BraidFailure(f"doubled solution fails the braid equation at {w}")
        if not Q.nondegenerate:
            raise BraidFailure("doubled solution is degenerate")
    return D


def block_report(D: DoubledSolution) -> Report:
    """Read the blocks back out of ``r_e`` and compare with their defining composites."""
    P = D.base
    X, Z, S = P.X, D.Z, D.S
    n, N = X.dim, Z.dim
    F = X.field
    # inclusions of X and SX into Z, with projections back
    iX = LinMap._raw(F, n, N, [{j: 1} for j in range(n)])
    pX = LinMap._raw(F, N, n, [{j: 1} if j < n else {} for j in range(N)])
    iS = compose(S, iX)
    pS = compose(pX, S)
    c = X.c
    Rt1, Rt2 = P.transpositions[:2]
    lab = X.labeler(2)
    rep = Report("doubled blocks")
    rep.flag("S^2 = id", compose(S, S).is_identity())
    rep.flag("S coalgebra isomorphism", is_coalgebra_morphism(S, Z, Z).ok)
    rep.flag("dim Z = 2 dim X", N == 2 * n)

    def restrict(a_in, b_in, a_out, b_out):
        return compose_all(tensor(a_out, b_out), D.r_e, tensor(a_in, b_in))

    rep.eq("r1 = r", restrict(iX, iX, pX, pX), P.r, lab)
    # r2 = (S X) c Rt1 (X S) written on X (x) X via the identification SX = X
    rep.eq("r2 = (S X) c Rt1 (X S)", restrict(iX, iS, pS, pX), compose(c, Rt1), lab)
    rep.eq("r3 = (X S) c Rt2 (S X)", restrict(iS, iX, pX, pS), compose(c, Rt2), lab)
    rep.eq("r4 = (S S) c r^-1 c (S S)", restrict(iS, iS, pS, pS), compose_all(c, P.r_inv, c), lab)
    return rep


def check_mixed_braid_lemmas(D: DoubledSolution, Rt=None) -> Report:
    P = D.base
    X = P.X
    I, Dl, e, c, r = X.id(), X.delta, X.eps, X.c, P.r
    Rt1, Rt2 = Rt if Rt is not None else P.transpositions[:2]
    A1 = compose(c, Rt1)
    A2 = compose(c, Rt2)
    lab3 = X.labeler(3)
    lab2 = X.labeler(2)
    rep = Report("mixed braid lemmas")
    rep.eq("(X r)(cRt1 X)(X cRt1) = (cRt1 X)(X cRt1)(r X)",
           compose_all(tensor(I, r), tensor(A1, I), tensor(I, A1)),
           compose_all(tensor(A1, I), tensor(I, A1), tensor(r, I)), lab3)
    rep.eq("(r X)(X cRt2)(cRt2 X) = (X cRt2)(cRt2 X)(X r)",
           compose_all(tensor(r, I), tensor(I, A2), tensor(A2, I)),
           compose_all(tensor(I, A2), tensor(A2, I), tensor(I, r)), lab3)
    rep.eq("(cRt2 X)(X r)(cRt1 X) = (X cRt1)(r X)(X cRt2)",
           compose_all(tensor(A2, I), tensor(I, r), tensor(A1, I)),
           compose_all(tensor(I, A1), tensor(r, I), tensor(I, A2)), lab3)
    rt = compose_all(c, P.r_inv, c)
    T = BraidedPair(X, rt)
    ok, w = check_braid(T)
    rep.flag("r~ = c r^-1 c braided", ok, w)
    rep.flag("r~ non-degenerate", T.nondegenerate)
    if T.nondegenerate:
        tRt1, tRt2 = T.transpositions[:2]
        rep.eq("R~t1 = Rt2", tRt1, Rt2, lab2)
        rep.eq("R~t2 = Rt1", tRt2, Rt1, lab2)
    cr = compose(c, r)
    rep.eq("(X2 eps)(X r~)(Delta X) c r = (tau X)(X Delta)",
           compose_all(tensor_all(I, I, e), tensor(I, rt), tensor(Dl, I), cr), P.M2, lab2)
    rep.eq("(eps X2)(r~ X)(X Delta) c r = (X sigma)(Delta X)",
           compose_all(tensor_all(e, I, I), tensor(rt, I), tensor(I, Dl), cr), P.M1, lab2)
    return rep


def extension_report(D: DoubledSolution) -> Report:
    rep = Report("doubled solution")
    for chk in full_report(D.pair).checks:
        if chk.name not in INFORMATIONAL:
            rep.add(chk)
    rep.extend(block_report(D))
    return rep
