"""Cocommutative Hopf algebras, braces, braiding operators and invertible 1-cocycles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .braided import BraidedPair, full_report
from .coalgebra import (Coalgebra, FiniteGroup, check_coalgebra, is_coalgebra_morphism,
                        make_setlike, tensor_coalgebra)
from .errors import BraceInvalid, CocycleInvalid, DimensionMismatch, OperatorInvalid, SingularMap
from .field import QQ, Field
from .linmap import (LinMap, basis_map, compose, compose_all, flip, identity, invert, is_invertible,
                     tensor, tensor_all)
from .report import Report


@dataclass(eq=False)
class HopfAlgebra:
    C: Coalgebra
    m: LinMap
    unit: LinMap
    antipode: LinMap

    def __post_init__(self):
        n = self.C.dim
        for name, f, shape in (("m", self.m, (n * n, n)), ("unit", self.unit, (1, n)),
                               ("antipode", self.antipode, (n, n))):
            if (f.dom, f.cod) != shape:
                raise DimensionMismatch(f"{name} must be {shape[0]} -> {shape[1]}, got {f.dom} -> {f.cod}")

    @property
    def field(self):
        return self.C.field

    @property
    def dim(self):
        return self.C.dim

    @property
    def delta(self):
        return self.C.delta

    @property
    def eps(self):
        return self.C.counit

    def id(self, k=1):
        return self.C.id(k)

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (self.C == other.C and self.m == other.m and self.unit == other.unit
                and self.antipode == other.antipode)

    __hash__ = object.__hash__


def group_algebra(G, field: Field = QQ, C: Coalgebra = None) -> HopfAlgebra:
    """``k[G]``; ``C`` may be passed to share one coalgebra object between structures."""
    if not isinstance(G, FiniteGroup):
        G = FiniteGroup(G)
    n = G.order
    C = C or make_setlike(G.labels, field)
    if C.dim != n:
        raise DimensionMismatch("coalgebra does not match the group order")
    m = basis_map(field, [G.table[a][b] for a in range(n) for b in range(n)], n)
    unit = LinMap._raw(field, 1, n, [{G.identity: 1}])
    S = basis_map(field, G.inverse, n)
    return HopfAlgebra(C, m, unit, S)


def check_hopf(H: HopfAlgebra) -> Report:
    C = H.C
    I, D, e, m, u, S = H.id(), H.delta, H.eps, H.m, H.unit, H.antipode
    one = identity(H.field, 1)
    lab1, lab2, lab3 = C.labeler(1), C.labeler(2), C.labeler(3)
    rep = Report("Hopf algebra")
    rep.extend(check_coalgebra(C))
    rep.eq("associativity", compose(m, tensor(m, I)), compose(m, tensor(I, m)), lab3)
    rep.eq("left unit", compose(m, tensor(u, I)), I, lab1)
    rep.eq("right unit", compose(m, tensor(I, u)), I, lab1)
    rep.eq("Delta multiplicative", compose(D, m), compose(tensor(m, m), C.delta2), lab2)
    rep.eq("eps multiplicative", compose(e, m), tensor(e, e), lab2)
    rep.eq("Delta unit", compose(D, u), tensor(u, u))
    rep.eq("eps unit", compose(e, u), one)
    ue = compose(u, e)
    rep.eq("antipode left", compose_all(m, tensor(S, I), D), ue, lab1)
    rep.eq("antipode right", compose_all(m, tensor(I, S), D), ue, lab1)
    return rep


# braces --------------------------------------------------------------------

class Brace:
    """Two Hopf structures ``add = (m, S)`` and ``circ = (m_circ, T)`` on one coalgebra."""

    def __init__(self, add: HopfAlgebra, circ: HopfAlgebra):
        if add.C != circ.C:
            raise DimensionMismatch("brace structures must share the coalgebra")
        self.add = add
        self.circ = circ

    @classmethod
    def from_tables(cls, add_table, circ_table, labels=None, field: Field = QQ) -> "Brace":
        Ga = FiniteGroup(add_table, labels)
        Gc = FiniteGroup(circ_table, Ga.labels)
        C = make_setlike(Ga.labels, field)
        return cls(group_algebra(Ga, field, C), group_algebra(Gc, field, C))

    @property
    def C(self):
        return self.add.C

    @property
    def field(self):
        return self.C.field

    @property
    def dim(self):
        return self.C.dim

    m = property(lambda self: self.add.m)
    m_circ = property(lambda self: self.circ.m)
    S = property(lambda self: self.add.antipode)
    T = property(lambda self: self.circ.antipode)

    @cached_property
    def lam(self) -> LinMap:
        """``m o (S (x) m_circ) o (Delta (x) A)``."""
        I = self.C.id()
        return compose_all(self.m, tensor(self.S, self.m_circ), tensor(self.C.delta, I))

    @cached_property
    def rho(self) -> LinMap:
        """``m_circ o (T (x) A) o (lam (x) m_circ) o Delta_{A^2}``."""
        I = self.C.id()
        return compose_all(self.m_circ, tensor(self.T, I), tensor(self.lam, self.m_circ), self.C.delta2)

    def __eq__(self, other):
        if not isinstance(other, Brace):
            return NotImplemented
        return self.add == other.add and self.circ == other.circ

    __hash__ = object.__hash__


def _left_action_checks(rep, name, lam, Hh: HopfAlgebra, A: HopfAlgebra, lab2, lab3):
    IH, IA = Hh.id(), A.id()
    rep.eq(f"{name} unital", compose(lam, tensor(Hh.unit, IA)), IA)
    rep.eq(f"{name} associative", compose(lam, tensor(Hh.m, IA)), compose(lam, tensor(IH, lam)), lab3)


def _module_algebra_coalgebra(rep, name, lam, Hh: HopfAlgebra, A: HopfAlgebra, lab2, lab3):
    IH, IA = Hh.id(), A.id()
    cHA = flip(Hh.field, Hh.dim, A.dim)
    rep.eq(f"{name}(H unit) = eps unit", compose(lam, tensor(IH, A.unit)), tensor(Hh.eps, A.unit))
    rep.eq(f"{name}(H m) = m({name} {name})(H c A)(Delta A2)",
           compose(lam, tensor(IH, A.m)),
           compose_all(A.m, tensor(lam, lam), tensor_all(IH, cHA, IA), tensor_all(Hh.delta, IA, IA)), lab3)
    HA = tensor_coalgebra(Hh.C, A.C)
    rep.eq(f"Delta {name} = ({name} {name}) Delta_HA", compose(A.delta, lam),
           compose(tensor(lam, lam), HA.delta), lab2)
    rep.eq(f"eps {name} = eps eps", compose(A.eps, lam), tensor(Hh.eps, A.eps), lab2)


def check_brace(B: Brace) -> Report:
    C = B.C
    I, D, c = C.id(), C.delta, C.c
    m, mc, S, T, lam, rho = B.m, B.m_circ, B.S, B.T, B.lam, B.rho
    lab2, lab3 = C.labeler(2), C.labeler(3)
    rep = Report("brace")
    rep.extend(check_hopf(B.add), "(A,m) ")
    rep.extend(check_hopf(B.circ), "(A,m_circ) ")
    rep.eq("brace equation", compose(mc, tensor(I, m)),
           compose_all(m, tensor(mc, lam), tensor_all(I, c, I), tensor_all(D, I, I)), lab3)
    rep.eq("eta = eta_circ", B.add.unit, B.circ.unit)
    _left_action_checks(rep, "lambda", lam, B.circ, B.add, lab2, lab3)
    _module_algebra_coalgebra(rep, "lambda", lam, B.circ, B.add, lab2, lab3)
    rep.eq("m_circ = m (A lambda)(Delta A)", mc, compose_all(m, tensor(I, lam), tensor(D, I)), lab2)
    rep.eq("m = m_circ (A lambda)(A T A)(Delta A)", m,
           compose_all(mc, tensor(I, lam), tensor_all(I, T, I), tensor(D, I)), lab2)
    # rho: right action of (A, m_circ)
    rep.eq("rho(A eta) = id", compose(rho, tensor(I, B.circ.unit)), I)
    rep.eq("rho(rho A) = rho(A m_circ)", compose(rho, tensor(rho, I)), compose(rho, tensor(I, mc)), lab3)
    rep.eq("rho(eta A) = eta eps", compose(rho, tensor(B.add.unit, I)), compose(B.add.unit, C.eps))
    X2 = tensor_coalgebra(C, C)
    rep.flag("rho coalgebra map", is_coalgebra_morphism(rho, X2, C).ok)
    first = compose_all(mc, tensor(rho, T), tensor(I, D))
    mid = compose_all(mc, tensor(T, I), tensor(lam, I), tensor(I, c), tensor(D, I))
    last = compose_all(T, m, tensor(T, I))
    rep.eq("m_circ(rho T)(A Delta) = m_circ(T A)(lambda A)(A c)(Delta A)", first, mid, lab2)
    rep.eq("m_circ(T A)(lambda A)(A c)(Delta A) = T m (T A)", mid, last, lab2)
    return rep


def validate_brace(B: Brace) -> Report:
    rep = check_brace(B)
    if not rep.ok:
        bad = rep.first_failure()
        raise BraceInvalid(f"not a brace: {bad.name} fails (witness {bad.witness})", rep)
    return rep


# braiding operators --------------------------------------------------------

class BraidingOperator:
    def __init__(self, H: HopfAlgebra, r: LinMap):
        n2 = H.dim ** 2
        if (r.dom, r.cod) != (n2, n2):
            raise DimensionMismatch(f"operator must be {n2} -> {n2}")
        self.H = H
        self.r = r

    @property
    def C(self):
        return self.H.C

    @cached_property
    def lam(self):
        return compose(tensor(self.C.id(), self.C.eps), self.r)

    @cached_property
    def rho(self):
        return compose(tensor(self.C.eps, self.C.id()), self.r)

    def __eq__(self, other):
        if not isinstance(other, BraidingOperator):
            return NotImplemented
        return self.H == other.H and self.r == other.r

    __hash__ = object.__hash__


def check_operator(O: BraidingOperator) -> Report:
    H, C, r = O.H, O.C, O.r
    I, m, u = C.id(), H.m, H.unit
    lab2, lab3 = C.labeler(2), C.labeler(3)
    rep = Report("braiding operator")
    rep.extend(check_hopf(H), "(A,m) ")
    X2 = tensor_coalgebra(C, C)
    rep.flag("r coalgebra map", is_coalgebra_morphism(r, X2, X2).ok)
    rep.flag("r invertible", is_invertible(r))
    rep.eq("bo1 m r = m", compose(m, r), m, lab2)
    rep.eq("bo2", compose(r, tensor(m, I)), compose_all(tensor(I, m), tensor(r, I), tensor(I, r)), lab3)
    rep.eq("bo3", compose(r, tensor(I, m)), compose_all(tensor(m, I), tensor(I, r), tensor(r, I)), lab3)
    rep.eq("bo4", compose(r, tensor(u, I)), tensor(I, u), C.labeler(1))
    rep.eq("bo5", compose(r, tensor(I, u)), tensor(u, I), C.labeler(1))
    return rep


def matched_pair_report(O: BraidingOperator) -> Report:
    H, C, r = O.H, O.C, O.r
    I, m, u, e = C.id(), H.m, H.unit, C.eps
    lam, rho = O.lam, O.rho
    lab2, lab3 = C.labeler(2), C.labeler(3)
    rep = Report("matched pair")
    rep.eq("lambda unital", compose(lam, tensor(u, I)), I)
    rep.eq("lambda action", compose(lam, tensor(m, I)), compose(lam, tensor(I, lam)), lab3)
    rep.eq("rho unital", compose(rho, tensor(I, u)), I)
    rep.eq("rho action", compose(rho, tensor(I, m)), compose(rho, tensor(rho, I)), lab3)
    rep.eq("lambda(A m) = m(A lambda)(r A)", compose(lam, tensor(I, m)),
           compose_all(m, tensor(I, lam), tensor(r, I)), lab3)
    rep.eq("rho(m A) = m(rho A)(A r)", compose(rho, tensor(m, I)),
           compose_all(m, tensor(rho, I), tensor(I, r)), lab3)
    rep.eq("lambda(A eta) = eta eps", compose(lam, tensor(I, u)), compose(u, e))
    rep.eq("rho(eta A) = eta eps", compose(rho, tensor(u, I)), compose(u, e))
    return rep


def brace_to_operator(B: Brace, check: bool = True) -> BraidingOperator:
    if check:
        rep = check_brace(B)
        if not rep.ok:
            bad = rep.first_failure()
            raise BraceInvalid(f"not a brace: {bad.name} fails (witness {bad.witness})", rep)
    r = compose(tensor(B.lam, B.rho), B.C.delta2)
    O = BraidingOperator(B.circ, r)
    if check:
        rep = check_operator(O)
        rep.extend(matched_pair_report(O))
        if not rep.ok:
            raise AssertionError(f"operator built from a valid brace fails:\n{rep}")
    return O


def operator_to_brace(O: BraidingOperator, check: bool = True) -> Brace:
    if check:
        rep = check_operator(O)
        if not rep.ok:
            bad = rep.first_failure()
            raise OperatorInvalid(f"not a braiding operator: {bad.name} fails (witness {bad.witness})", rep)
    H, C = O.H, O.C
    I, T, lam = C.id(), H.antipode, O.lam
    m = compose_all(H.m, tensor(I, lam), tensor_all(I, T, I), tensor(C.delta, I))
    S = compose_all(lam, tensor(I, T), C.delta)
    B = Brace(HopfAlgebra(C, m, H.unit, S), H)
    if check:
        validate_brace(B)
        if brace_to_operator(B, check=False).r != O.r:
            raise AssertionError("operator -> brace -> operator does not return the operator")
    return B


def operator_from_lambda(B: Brace) -> LinMap:
    """Rebuild r from the first coordinate alone (second coordinate via the rho formula)."""
    return compose(tensor(B.lam, B.rho), B.C.delta2)


# invertible 1-cocycles -----------------------------------------------------

@dataclass(eq=False)
class Cocycle:
    H: HopfAlgebra
    A: HopfAlgebra
    action: LinMap
    pi: LinMap

    def __eq__(self, other):
        if not isinstance(other, Cocycle):
            return NotImplemented
        return self.H == other.H and self.A == other.A and self.action == other.action and self.pi == other.pi

    __hash__ = object.__hash__


def check_cocycle(K: Cocycle) -> Report:
    Hh, A, lam, pi = K.H, K.A, K.action, K.pi
    if pi.dom != Hh.dim or pi.cod != A.dim or lam.dom != Hh.dim * A.dim or lam.cod != A.dim:
        raise DimensionMismatch("cocycle data has inconsistent dimensions")
    IH = Hh.id()
    lab2 = Hh.C.labeler(2)
    lab3 = Hh.C.labeler(3)
    rep = Report("invertible 1-cocycle")
    rep.extend(check_hopf(Hh), "H ")
    rep.extend(check_hopf(A), "A ")
    rep.flag("pi coalgebra map", is_coalgebra_morphism(pi, Hh.C, A.C).ok)
    rep.flag("pi invertible", is_invertible(pi))
    _left_action_checks(rep, "lambda", lam, Hh, A, lab2, lab3)
    _module_algebra_coalgebra(rep, "lambda", lam, Hh, A, lab2, lab3)
    rep.eq("pi m = m (pi lambda)(Delta pi)", compose(pi, Hh.m),
           compose_all(A.m, tensor(pi, lam), tensor(Hh.delta, pi)), lab2)
    rep.eq("lambda(H pi) = m(S pi)(pi m)(Delta H)", compose(lam, tensor(IH, pi)),
           compose_all(A.m, tensor(A.antipode, pi), tensor(pi, Hh.m), tensor(Hh.delta, IH)), lab2)
    return rep


def brace_to_cocycle(B: Brace, check: bool = True) -> Cocycle:
    if check:
        validate_brace(B)
    K = Cocycle(B.circ, B.add, B.lam, B.C.id())
    if check:
        rep = check_cocycle(K)
        if not rep.ok:
            raise AssertionError(f"cocycle built from a valid brace fails:\n{rep}")
        if cocycle_to_brace(K, check=False) != B:
            raise AssertionError("brace -> cocycle -> brace is not the identity")
    return K


def cocycle_to_brace(K: Cocycle, check: bool = True) -> Brace:
    if check:
        rep = check_cocycle(K)
        if not rep.ok:
            bad = rep.first_failure()
            raise CocycleInvalid(f"not an invertible 1-cocycle: {bad.name} fails (witness {bad.witness})", rep)
    try:
        pinv = invert(K.pi)
    except SingularMap as e:
        raise CocycleInvalid(f"pi is not invertible: {e}") from None
    A = K.A
    mc = compose_all(K.pi, K.H.m, tensor(pinv, pinv))
    T = compose_all(K.pi, K.H.antipode, pinv)
    circ = HopfAlgebra(A.C, mc, A.unit, T)
    B = Brace(A, circ)
    if check:
        validate_brace(B)
        F = brace_to_cocycle(B, check=False)
        if F != normalize_cocycle(K):
            raise AssertionError("cocycle -> brace -> cocycle differs from the normalized cocycle")
    return B


def transport_hopf(H: HopfAlgebra, phi: LinMap, C: Coalgebra) -> HopfAlgebra:
    """Move the algebra structure of ``H`` along the coalgebra isomorphism ``phi: H -> C``."""
    pinv = invert(phi)
    return HopfAlgebra(C, compose_all(phi, H.m, tensor(pinv, pinv)), compose(phi, H.unit),
                       compose_all(phi, H.antipode, pinv))


def normalize_cocycle(K: Cocycle) -> Cocycle:
    """The isomorphic cocycle with ``pi = id``: transport ``H`` along ``pi``."""
    pinv = invert(K.pi)
    Hn = transport_hopf(K.H, K.pi, K.A.C)
    return Cocycle(Hn, K.A, compose(K.action, tensor(pinv, K.A.id())), K.A.id())


# operators as solutions ----------------------------------------------------

def antipode_identities(O: BraidingOperator) -> Report:
    """Relations between r and the antipode, via the transpositions of its R-matrix."""
    P = BraidedPair(O.C, O.r)
    C = O.C
    I, D, S, r = C.id(), C.delta, O.H.antipode, O.r
    c = C.c
    lab2 = C.labeler(2)
    rep = Report("antipode identities")
    Rt1, Rt2, _, _ = P.transpositions
    rep.eq("r(S A) = (A S) c Rt2", compose(r, tensor(S, I)), compose_all(tensor(I, S), c, Rt2), lab2)
    rep.eq("r(A S) = (S A) c Rt1", compose(r, tensor(I, S)), compose_all(tensor(S, I), c, Rt1), lab2)
    # the flips are needed: this is what the two identities above imply
    rep.eq("r(S S) = (S S) c r^-1 c", compose(r, tensor(S, S)), compose_all(tensor(S, S), c, P.r_inv, c), lab2)
    J2 = compose(tensor(O.rho, I), tensor(I, D))
    K2 = compose(tensor(I, O.lam), tensor(D, I))
    try:
        J2i, K2i = invert(J2), invert(K2)
    except SingularMap:
        rep.flag("J2, K2 invertible", False)
        return rep
    rep.eq("(A r)(r A)(A S A)(A Delta) = (S A2)(Delta A) r J2^-1",
           compose_all(tensor(I, r), tensor(r, I), tensor_all(I, S, I), tensor(I, D)),
           compose_all(tensor_all(S, I, I), tensor(D, I), r, J2i), lab2)
    rep.eq("(r A)(A r)(A S A)(Delta A) = (A2 S)(A Delta) r K2^-1",
           compose_all(tensor(r, I), tensor(I, r), tensor_all(I, S, I), tensor(D, I)),
           compose_all(tensor_all(I, I, S), tensor(I, D), r, K2i), lab2)
    return rep


def operator_as_braided_pair(O: BraidingOperator):
    """Return the pair ``(A, r)`` together with its verification report."""
    P = BraidedPair(O.C, O.r)
    rep = full_report(P)
    if P.nondegenerate:
        rep.extend(antipode_identities(O))
    return P, rep
