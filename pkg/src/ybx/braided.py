"""Pairs (X, r): braid equation, involutivity, non-degeneracy, R-matrix, transpositions."""

from __future__ import annotations

from functools import cached_property

from .coalgebra import Coalgebra, is_coalgebra_morphism, tensor_coalgebra
from .errors import DegenerateInput, DimensionMismatch, SingularMap
from .linmap import (LinMap, compose, compose_all, flip, identity, invert, is_invertible, tensor,
                     tensor_all)
from .report import Report, equation


def leg(f: LinMap, i: int, n: int, d: int) -> LinMap:
    """``X^{i-1} (x) f (x) X^{n-i-k+1}`` for an endomorphism ``f`` of ``X^k`` (legs 1-based)."""
    k = 0
    t = f.dom
    while t > 1:
        t //= d
        k += 1
    if d ** k != f.dom or f.dom != f.cod:
        raise DimensionMismatch("leg() needs an endomorphism of a tensor power")
    if not 1 <= i <= n - k + 1:
        raise ValueError(f"cannot place a {k}-leg map at position {i} of X^{n}")
    F = f.field
    return tensor_all(identity(F, d ** (i - 1)), f, identity(F, d ** (n - i - k + 1)))


class BraidedPair:
    """A coalgebra ``X`` together with an endomorphism ``r`` of ``X (x) X``.

    Everything derived from ``r`` is computed lazily and cached.
    """

    def __init__(self, X: Coalgebra, r: LinMap):
        n2 = X.dim * X.dim
        if (r.dom, r.cod) != (n2, n2):
            raise DimensionMismatch(f"r must be {n2} -> {n2}, got {r.dom} -> {r.cod}")
        if r.field is not X.field:
            raise DimensionMismatch("r and X live over different fields")
        self.X = X
        self.r = r

    def __eq__(self, other):
        return isinstance(other, BraidedPair) and self.X == other.X and self.r == other.r

    __hash__ = None

    def __repr__(self):
        return f"BraidedPair(dim={self.X.dim}, field={self.X.field!r})"

    @property
    def field(self):
        return self.X.field

    @property
    def dim(self):
        return self.X.dim

    def I(self, k=1):
        return self.X.id(k)

    @cached_property
    def sigma(self) -> LinMap:
        return compose(tensor(self.I(), self.X.eps), self.r)

    @cached_property
    def tau(self) -> LinMap:
        return compose(tensor(self.X.eps, self.I()), self.r)

    @cached_property
    def M1(self) -> LinMap:
        """``(X (x) sigma) o (Delta (x) X)``."""
        X = self.X
        return compose(tensor(X.id(), self.sigma), tensor(X.delta, X.id()))

    @cached_property
    def M2(self) -> LinMap:
        """``(tau (x) X) o (X (x) Delta)``."""
        X = self.X
        return compose(tensor(self.tau, X.id()), tensor(X.id(), X.delta))

    @cached_property
    def _inverses(self):
        X = self.X
        try:
            M1i = invert(self.M1)
            M2i = invert(self.M2)
        except SingularMap:
            return None
        sigma_inv = compose(tensor(X.eps, X.id()), M1i)
        tau_inv = compose(tensor(X.id(), X.eps), M2i)
        return M1i, M2i, sigma_inv, tau_inv

    @property
    def nondegenerate(self) -> bool:
        return self._inverses is not None

    def _need_inverses(self):
        if self._inverses is None:
            raise DegenerateInput("pair is degenerate")
        return self._inverses

    @property
    def M1_inv(self):
        return self._need_inverses()[0]

    @property
    def M2_inv(self):
        return self._need_inverses()[1]

    @property
    def sigma_inv(self) -> LinMap:
        return self._need_inverses()[2]

    @property
    def tau_inv(self) -> LinMap:
        return self._need_inverses()[3]

    @cached_property
    def r_inv(self) -> LinMap:
        return invert(self.r)

    @cached_property
    def R(self) -> LinMap:
        return compose(self.X.c, self.r)

    @cached_property
    def R21(self) -> LinMap:
        return compose(self.r, self.X.c)

    @cached_property
    def N1(self) -> LinMap:
        """``(sigma (x) X) o (X (x) c) o (Delta (x) X)``."""
        X = self.X
        return compose_all(tensor(self.sigma, X.id()), tensor(X.id(), X.c), tensor(X.delta, X.id()))

    @cached_property
    def N2(self) -> LinMap:
        """``(X (x) tau) o (c (x) X) o (X (x) Delta)``."""
        X = self.X
        return compose_all(tensor(X.id(), self.tau), tensor(X.c, X.id()), tensor(X.id(), X.delta))

    @cached_property
    def transpositions(self):
        """``(R^t1, R^t2, R21^t1, R21^t2)``, each solved from its defining equation."""
        self._need_inverses()
        Rt1 = compose(self.M1, self.M2_inv)
        Rt2 = compose(self.M2, self.M1_inv)
        N1i = invert(self.N1)
        N2i = invert(self.N2)
        R21t1 = compose(self.N2, N1i)
        R21t2 = compose(self.N1, N2i)
        return Rt1, Rt2, R21t1, R21t2

    def at(self, i: int, n: int, f: LinMap = None) -> LinMap:
        """``r_{i,i+1}`` (or ``f`` in legs i, i+1) acting on ``X^n``."""
        return leg(self.r if f is None else f, i, n, self.dim)


# checks --------------------------------------------------------------------

def check_braid(P: BraidedPair):
    """``r12 r23 r12 == r23 r12 r23``; returns (ok, witness)."""
    r12 = P.at(1, 3)
    r23 = P.at(2, 3)
    lhs = compose_all(r12, r23, r12)
    rhs = compose_all(r23, r12, r23)
    chk = equation("braid", lhs, rhs, P.X.labeler(3))
    return chk.ok, chk.witness


def check_involutive(P: BraidedPair) -> bool:
    return compose(P.r, P.r).is_identity()


def check_automorphism(P: BraidedPair) -> Report:
    X = P.X
    rep = Report("coalgebra automorphism")
    X2 = tensor_coalgebra(X, X)
    rep.extend(is_coalgebra_morphism(P.r, X2, X2), "r ")
    rep.flag("r invertible", is_invertible(P.r))
    return rep


def check_nondegenerate(P: BraidedPair):
    """Return ``(ok, sigma_inv, tau_inv)``; the inverses are re-verified on the way."""
    if not P.nondegenerate:
        return False, None, None
    rep = nondegeneracy_report(P)
    if not rep.ok:
        raise AssertionError(f"inverse coordinate maps fail their defining equations:\n{rep}")
    return True, P.sigma_inv, P.tau_inv


def nondegeneracy_report(P: BraidedPair) -> Report:
    X = P.X
    I, D, e = X.id(), X.delta, X.eps
    rep = Report("non-degeneracy")
    ok = P.nondegenerate
    rep.flag("M1, M2 invertible", ok)
    if not ok:
        return rep
    s, si, t, ti = P.sigma, P.sigma_inv, P.tau, P.tau_inv
    DX = tensor(D, I)
    XD = tensor(I, D)
    lab = X.labeler(2)
    rep.eq("sigma_inv o (X sigma)(Delta X)", compose_all(si, tensor(I, s), DX), tensor(e, I), lab)
    rep.eq("sigma o (X sigma_inv)(Delta X)", compose_all(s, tensor(I, si), DX), tensor(e, I), lab)
    rep.eq("tau_inv o (tau X)(X Delta)", compose_all(ti, tensor(t, I), XD), tensor(I, e), lab)
    rep.eq("tau o (tau_inv X)(X Delta)", compose_all(t, tensor(ti, I), XD), tensor(I, e), lab)
    X2 = tensor_coalgebra(X, X)
    rep.flag("sigma_inv coalgebra map", is_coalgebra_morphism(si, X2, X).ok)
    rep.flag("tau_inv coalgebra map", is_coalgebra_morphism(ti, X2, X).ok)
    return rep


def r_matrix(P: BraidedPair) -> LinMap:
    return P.R


def _qybe_sides(P: BraidedPair):
    d = P.dim
    F = P.field
    R = P.R
    R12 = leg(R, 1, 3, d)
    R23 = leg(R, 2, 3, d)
    c23 = tensor(identity(F, d), flip(F, d, d))
    R13 = compose_all(c23, R12, c23)
    return compose_all(R12, R13, R23), compose_all(R23, R13, R12)


def check_qybe(P: BraidedPair) -> bool:
    lhs, rhs = _qybe_sides(P)
    return lhs == rhs


def check_unitary(P: BraidedPair) -> bool:
    return compose(P.R21, P.R).is_identity()


def transpositions(P: BraidedPair):
    if not P.nondegenerate:
        raise DegenerateInput("transpositions need a non-degenerate pair")
    return P.transpositions


def three_identities(P: BraidedPair) -> Report:
    """The coordinate form of the braid equation (two one-sided laws plus the linking relation)."""
    X = P.X
    I, r, s, t = X.id(), P.r, P.sigma, P.tau
    lab = X.labeler(3)
    rep = Report("coordinate braid identities")
    rep.eq("tau(tau X) = tau(tau X)(X r)",
           compose(t, tensor(t, I)), compose_all(t, tensor(t, I), tensor(I, r)), lab)
    rep.eq("sigma(X sigma) = sigma(X sigma)(r X)",
           compose(s, tensor(I, s)), compose_all(s, tensor(I, s), tensor(r, I)), lab)
    rep.eq("linking relation",
           compose_all(t, tensor(I, s), tensor(r, I)), compose_all(s, tensor(t, I), tensor(I, r)), lab)
    return rep


def structural_identities(P: BraidedPair) -> Report:
    """Identities valid for every pair whose r is a coalgebra map (plus the non-degenerate ones)."""
    X = P.X
    I, D, c = X.id(), X.delta, X.c
    r, s, t = P.r, P.sigma, P.tau
    D2 = X.delta2
    lab = X.labeler(2)
    rep = Report("structural identities")
    rep.eq("R = (tau sigma) Delta_X2", P.R, compose(tensor(t, s), D2), lab)
    rep.eq("(r tau) Delta_X2 = (X Delta) r", compose(tensor(r, t), D2), compose(tensor(I, D), r), lab)
    rep.eq("(tau r) Delta_X2 = (c X)(X Delta) r", compose(tensor(t, r), D2),
           compose_all(tensor(c, I), tensor(I, D), r), lab)
    rep.eq("(sigma r) Delta_X2 = (Delta X) r", compose(tensor(s, r), D2), compose(tensor(D, I), r), lab)
    rep.eq("(r sigma) Delta_X2 = (X c)(Delta X) r", compose(tensor(r, s), D2),
           compose_all(tensor(I, c), tensor(D, I), r), lab)
    if P.nondegenerate:
        si, ti = P.sigma_inv, P.tau_inv
        rep.eq("(sigma_inv tau_inv)(X r X)(Delta Delta) = c",
               compose_all(tensor(si, ti), tensor_all(I, r, I), tensor(D, D)), c, lab)
        Rt1, Rt2, R21t1, R21t2 = P.transpositions
        rep.flag("Rt1 Rt2 = id", compose(Rt1, Rt2).is_identity())
        rep.flag("Rt2 Rt1 = id", compose(Rt2, Rt1).is_identity())
        rep.flag("R21t1 R21t2 = id", compose(R21t1, R21t2).is_identity())
        rep.flag("R21t2 R21t1 = id", compose(R21t2, R21t1).is_identity())
        rep.eq("Rt1 defining equation", compose(Rt1, P.M2), P.M1, lab)
        rep.eq("Rt2 defining equation", compose(Rt2, P.M1), P.M2, lab)
        rep.eq("R21t1 defining equation", compose(R21t1, P.N1), P.N2, lab)
        rep.eq("R21t2 defining equation", compose(R21t2, P.N2), P.N1, lab)
    return rep


def involutive_consequences(P: BraidedPair) -> Report:
    X = P.X
    I, e = X.id(), X.eps
    lab = X.labeler(2)
    rep = Report("involutive consequences")
    rep.eq("tau r = eps X", compose(P.tau, P.r), tensor(e, I), lab)
    rep.eq("sigma r = X eps", compose(P.sigma, P.r), tensor(I, e), lab)
    if P.nondegenerate:
        Rt1, Rt2, R21t1, R21t2 = P.transpositions
        rep.flag("Rt1 R21t1 = id", compose(Rt1, R21t1).is_identity())
        rep.flag("Rt2 R21t2 = id", compose(Rt2, R21t2).is_identity())
    return rep


def full_report(P: BraidedPair) -> Report:
    """The verification table printed by ``ybx verify``."""
    rep = Report("braided pair")
    auto = check_automorphism(P)
    bad = auto.first_failure()
    rep.flag("coalgebra-automorphism", auto.ok, bad.to_dict() if bad else None)
    ok, w = check_braid(P)
    rep.flag("braid", ok, w)
    rep.flag("involutive", check_involutive(P))
    nd = P.nondegenerate
    rep.flag("non-degenerate", nd)
    q_ok = check_qybe(P)
    rep.flag("QYBE", q_ok)
    rep.flag("unitary", check_unitary(P))
    return rep


# verdicts whose failure is a property of the input rather than an error
INFORMATIONAL = ("involutive", "unitary")


def verdict_ok(rep: Report, required=("coalgebra-automorphism", "braid", "non-degenerate", "QYBE")) -> bool:
    return all(rep[name].ok for name in required if name in rep)
