"""Representations of Lie, commutative and Poisson superalgebras, their duals,
and the direct-sum construction behind semidirect and matched-pair products."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .graded import Element, GradedBasis, accumulate, koszul_sign as ks
from .linalg import Matrix
from .report import PreconditionError, Report, Violation
from .structures import BilinearLaw, PoissonSuper, check_poisson


class RepMap:
    """x ↦ ψ(x): an action of ``source`` basis vectors on a ``carrier`` space."""

    __slots__ = ("source", "carrier", "_mats")

    def __init__(self, source: GradedBasis, carrier: GradedBasis, action: Mapping[int, Matrix] | None = None):
        self.source = source
        self.carrier = carrier
        mats = {}
        m = carrier.dim
        for i, mat in (action or {}).items():
            mat = linalg.matrix(mat)
            if linalg.shape(mat) != (m, m) and m:
                raise ValueError(f"action matrix for e{i} must be {m}x{m}")
            if not linalg.is_zero(mat):
                mats[i] = mat
        self._mats = mats

    @classmethod
    def zero(cls, source, carrier):
        return cls(source, carrier, {})

    @classmethod
    def from_entries(cls, source, carrier, entries) -> "RepMap":
        """Entries (i, row, col, c): ψ(e_i) sends carrier e_col to c·e_row (+ ...)."""
        m = carrier.dim
        mats = {}
        for i, r, c, v in entries:
            mats.setdefault(i, [[Fraction(0)] * m for _ in range(m)])
            mats[i][r][c] += Fraction(v)
        return cls(source, carrier, mats)

    def matrix(self, i: int) -> Matrix:
        mat = self._mats.get(i)
        return mat if mat is not None else linalg.zeros(self.carrier.dim)

    def of(self, x: Element) -> Matrix:
        total = linalg.zeros(self.carrier.dim)
        for (i,), c in x.items():
            if i in self._mats:
                total = linalg.add(total, linalg.scale(c, self._mats[i]))
        return total

    def act(self, i: int, v: Element) -> Element:
        mat = self._mats.get(i)
        if mat is None:
            return accumulate(self.carrier, 1, {})
        return linalg.apply(mat, v, self.carrier)

    def act_elem(self, x: Element, v: Element) -> Element:
        out = accumulate(self.carrier, 1, {})
        for (i,), c in x.items():
            if i in self._mats:
                out = out + linalg.apply(self._mats[i], v, self.carrier) * c
        return out

    def entries(self) -> list:
        return sorted((i, r, c, x) for i, mat in self._mats.items()
                      for r, row in enumerate(mat) for c, x in enumerate(row) if x)

    def __neg__(self):
        return RepMap(self.source, self.carrier, {i: linalg.scale(-1, m) for i, m in self._mats.items()})

    def __eq__(self, other):
        return (isinstance(other, RepMap) and self.source == other.source
                and self.carrier == other.carrier and self._mats == other._mats)

    def __hash__(self):
        return hash((self.source, self.carrier, frozenset(self._mats.items())))

    def __repr__(self):
        return f"RepMap({self.entries()})"


def rep_evenness(rep: RepMap, name: str) -> Report:
    """ψ(e_i) must shift carrier parity by |e_i|."""
    sp, cp = rep.source.parities, rep.carrier.parities
    out = []
    for i in range(rep.source.dim):
        mat = rep.matrix(i)
        for r, row in enumerate(mat):
            for c, x in enumerate(row):
                if x and cp[r] != (cp[c] + sp[i]) & 1:
                    out.append(Violation(name, (i, r, c), accumulate(rep.carrier, 1, {(r,): x})))
    return Report(out)


def _carrier_vectors(rep):
    return [rep.carrier.vector(v) for v in range(rep.carrier.dim)]


def check_lie_rep(bracket: BilinearLaw, rho: RepMap) -> Report:
    """ρ([x,y]) = ρ(x)ρ(y) - (-1)^{|x||y|}ρ(y)ρ(x), on every carrier vector."""
    ev = rep_evenness(rho, "lie_rep.evenness")
    if not ev.ok:
        return ev
    ps, n = bracket.basis.parities, bracket.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            lhs_op = rho.of(bracket.on_basis(i, j))
            for v, ev_ in enumerate(_carrier_vectors(rho)):
                d = (linalg.apply(lhs_op, ev_, rho.carrier) - rho.act(i, rho.act(j, ev_))
                     + ks(ps[i], ps[j]) * rho.act(j, rho.act(i, ev_)))
                if d:
                    out.append(Violation("lie_rep.homomorphism", (i, j, v), d))
    return Report(out)


def check_assoc_rep(product: BilinearLaw, phi: RepMap) -> Report:
    """φ(x•y) = φ(x)φ(y), on every carrier vector."""
    ev = rep_evenness(phi, "assoc_rep.evenness")
    if not ev.ok:
        return ev
    n = product.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            lhs_op = phi.of(product.on_basis(i, j))
            for v, ev_ in enumerate(_carrier_vectors(phi)):
                d = linalg.apply(lhs_op, ev_, phi.carrier) - phi.act(i, phi.act(j, ev_))
                if d:
                    out.append(Violation("assoc_rep.homomorphism", (i, j, v), d))
    return Report(out)


@dataclass(frozen=True)
class PoissonRep:
    algebra: PoissonSuper
    psi_bracket: RepMap
    psi_product: RepMap

    @property
    def carrier(self) -> GradedBasis:
        return self.psi_bracket.carrier


def check_poisson_rep(r: PoissonRep) -> Report:
    """Both actions are representations and satisfy the two mixed compatibilities."""
    P, pb, pp = r.algebra, r.psi_bracket, r.psi_product
    lie = check_lie_rep(P.bracket, pb)
    assoc = check_assoc_rep(P.product, pp)
    out = list(lie.violations + assoc.violations)
    if any(v.law.endswith("evenness") for v in out):
        return Report(out)
    ps, n = P.basis.parities, P.basis.dim
    vecs = _carrier_vectors(pb)
    for i in range(n):
        for j in range(n):
            s = ks(ps[i], ps[j])
            op1 = pb.of(P.product.on_basis(i, j))
            op2 = pp.of(P.bracket.on_basis(i, j))
            for v, e in enumerate(vecs):
                d1 = (linalg.apply(op1, e, pb.carrier) - pp.act(i, pb.act(j, e))
                      - s * pp.act(j, pb.act(i, e)))
                if d1:
                    out.append(Violation("poisson_rep.bracket_of_product", (i, j, v), d1))
                d2 = (linalg.apply(op2, e, pb.carrier) - pb.act(i, pp.act(j, e))
                      + s * pp.act(j, pb.act(i, e)))
                if d2:
                    out.append(Violation("poisson_rep.product_of_bracket", (i, j, v), d2))
    return Report(out)


def adjoint_rep(P: PoissonSuper) -> PoissonRep:
    """The regular representation (ad, L) of P on itself."""
    n = P.basis.dim
    ad = RepMap(P.basis, P.basis, {i: P.bracket.left_matrix(i) for i in range(n)})
    left = RepMap(P.basis, P.basis, {i: P.product.left_matrix(i) for i in range(n)})
    return PoissonRep(P, ad, left)


def right_mult(P: PoissonSuper) -> RepMap:
    """R(y)x = (-1)^{|x||y|} x•y."""
    ps, n = P.basis.parities, P.basis.dim
    mats = {}
    for j in range(n):
        mats[j] = tuple(tuple(ks(ps[i], ps[j]) * P.product.on_basis(i, j)[k] for i in range(n)) for k in range(n))
    return RepMap(P.basis, P.basis, mats)


def right_action(P: PoissonSuper) -> RepMap:
    """T(y)x = x•y."""
    n = P.basis.dim
    return RepMap(P.basis, P.basis, {j: P.product.right_matrix(j) for j in range(n)})


def dual_matrix(mat: Matrix, x_parity: int, carrier: GradedBasis) -> Matrix:
    """Matrix of ψ*(x) on the dual carrier: ⟨ψ*(x)ξ, v⟩ = -(-1)^{|x||ξ|}⟨ξ, ψ(x)v⟩."""
    cp, m = carrier.parities, carrier.dim
    return tuple(tuple(-ks(x_parity, cp[i]) * mat[i][j] for i in range(m)) for j in range(m))


def dual_action(rep: RepMap) -> RepMap:
    sp = rep.source.parities
    return RepMap(rep.source, rep.carrier,
                  {i: dual_matrix(rep.matrix(i), sp[i], rep.carrier) for i in range(rep.source.dim)})


def dual_rep_hypotheses(r: PoissonRep) -> Report:
    """Extra identities under which (ψ*_{,}, -ψ*_•) is again a Poisson representation."""
    P, pb, pp = r.algebra, r.psi_bracket, r.psi_product
    ps, n = P.basis.parities, P.basis.dim
    out = []
    vecs = _carrier_vectors(pb)
    for i in range(n):
        for j in range(n):
            s = ks(ps[i], ps[j])
            op1 = pb.of(P.product.on_basis(i, j))
            op2 = pp.of(P.bracket.on_basis(i, j))
            for v, e in enumerate(vecs):
                d1 = (linalg.apply(op1, e, pb.carrier) - pb.act(i, pp.act(j, e))
                      - s * pb.act(j, pp.act(i, e)))
                if d1:
                    out.append(Violation("dual_rep.bracket_of_product", (i, j, v), d1))
                d2 = (linalg.apply(op2, e, pb.carrier) - pb.act(i, pp.act(j, e))
                      + s * pp.act(j, pb.act(i, e)))
                if d2:
                    out.append(Violation("dual_rep.product_of_bracket", (i, j, v), d2))
    return Report(out)


def dual_rep(r: PoissonRep) -> PoissonRep:
    """(ψ*_{,}, -ψ*_•) on the dual carrier; raises if the hypotheses fail."""
    base = check_poisson_rep(r)
    if not base.ok:
        raise PreconditionError("not a Poisson representation", base)
    hyp = dual_rep_hypotheses(r)
    if not hyp.ok:
        raise PreconditionError("dual representation hypotheses fail", hyp)
    return PoissonRep(r.algebra, dual_action(r.psi_bracket), -dual_action(r.psi_product))


def predual_action(rep: RepMap) -> RepMap:
    """Dual action when the carrier is a predual, i.e. P* acting back on P.

    P is identified with (P*)* through ⟨x, a⟩ = (-1)^{|x||a|}⟨a, x⟩, which conjugates the
    coordinate dual by the parity sign and so multiplies the action of odd vectors by -1.
    """
    sp = rep.source.parities
    return RepMap(rep.source, rep.carrier,
                  {i: linalg.scale(-1 if sp[i] else 1,
                                   dual_matrix(rep.matrix(i), sp[i], rep.carrier))
                   for i in range(rep.source.dim)})


def coadjoint_rep(P: PoissonSuper, predual: bool = False) -> PoissonRep:
    """(ad*, -L*) on the dual space, built without re-checking hypotheses.

    With ``predual`` the carrier is the space P is dual to (see :func:`predual_action`).
    """
    reg = adjoint_rep(P)
    dual = predual_action if predual else dual_action
    return PoissonRep(P, dual(reg.psi_bracket), -dual(reg.psi_product))


def direct_sum_laws(p1: PoissonSuper, p2: PoissonSuper, rho1: RepMap, phi1: RepMap,
                    rho2: RepMap, phi2: RepMap) -> PoissonSuper:
    """Bracket and product on P1 ⊕ P2 (indices of P2 shifted by dim P1) where P1 acts on P2
    by (rho1, phi1) and P2 acts on P1 by (rho2, phi2)."""
    b1, b2 = p1.basis, p2.basis
    n1, n2 = b1.dim, b2.dim
    basis = b1 + b2
    ps = basis.parities

    def lift(el, offset):
        return accumulate(basis, 1, {(k + offset,): c for (k,), c in el.items()})

    def col(rep, i, j, carrier, offset):
        return lift(linalg.column(rep.matrix(i), j, carrier), offset)

    br, pr = {}, {}
    for i in range(n1):
        for j in range(n1):
            br[(i, j)] = lift(p1.bracket.on_basis(i, j), 0)
            pr[(i, j)] = lift(p1.product.on_basis(i, j), 0)
    for i in range(n2):
        for j in range(n2):
            br[(n1 + i, n1 + j)] = lift(p2.bracket.on_basis(i, j), n1)
            pr[(n1 + i, n1 + j)] = lift(p2.product.on_basis(i, j), n1)
    for i in range(n1):
        for a in range(n2):
            s = ks(ps[i], ps[n1 + a])
            # {x, a} = ρ1(x)a - (-1)^{|x||a|} ρ2(a)x ;  x•a = φ1(x)a + (-1)^{|x||a|} φ2(a)x
            br[(i, n1 + a)] = col(rho1, i, a, b2, n1) - s * col(rho2, a, i, b1, 0)
            pr[(i, n1 + a)] = col(phi1, i, a, b2, n1) + s * col(phi2, a, i, b1, 0)
            # {a, x} = ρ2(a)x - (-1)^{|a||x|} ρ1(x)a ;  a•x = φ2(a)x + (-1)^{|a||x|} φ1(x)a
            br[(n1 + a, i)] = col(rho2, a, i, b1, 0) - s * col(rho1, i, a, b2, n1)
            pr[(n1 + a, i)] = col(phi2, a, i, b1, 0) + s * col(phi1, i, a, b2, n1)
    return PoissonSuper(BilinearLaw(basis, br), BilinearLaw(basis, pr))


def semidirect_product(r: PoissonRep) -> PoissonSuper:
    """P ⊕ V with V an abelian ideal; raises unless r is a Poisson representation."""
    rep = check_poisson_rep(r)
    if not rep.ok:
        raise PreconditionError("not a Poisson representation", rep)
    V = PoissonSuper.zero(r.carrier)
    back = RepMap.zero(r.carrier, r.algebra.basis)
    return direct_sum_laws(r.algebra, V, r.psi_bracket, r.psi_product, back, back)


def check_semidirect(r: PoissonRep) -> Report:
    """Report for the semidirect product being Poisson (equivalent to r being a representation)."""
    P = r.algebra
    V = PoissonSuper.zero(r.carrier)
    back = RepMap.zero(r.carrier, P.basis)
    return check_poisson(direct_sum_laws(P, V, r.psi_bracket, r.psi_product, back, back))

