"""Matched pairs of Lie, commutative and Poisson superalgebras, their bowtie
products, invariant bilinear forms and Manin triples."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .graded import Element, GradedBasis, koszul_sign as ks
from .linalg import Matrix
from .report import Report, Violation, combine
from .representations import PoissonRep, RepMap, check_assoc_rep, check_lie_rep, check_poisson_rep, direct_sum_laws
from .structures import BilinearLaw, PoissonSuper, check_poisson


@dataclass(frozen=True)
class MatchedPairData:
    """P1 acts on P2 by (rho1, phi1); P2 acts on P1 by (rho2, phi2)."""

    p1: PoissonSuper
    p2: PoissonSuper
    rho1: RepMap
    phi1: RepMap
    rho2: RepMap
    phi2: RepMap


def bowtie(m: MatchedPairData) -> PoissonSuper:
    """The bracket and product on P1 ⊕ P2 assembled from both actions."""
    return direct_sum_laws(m.p1, m.p2, m.rho1, m.phi1, m.rho2, m.phi2)


def _mixed_lie(l1: BilinearLaw, l2: BilinearLaw, rho1: RepMap, rho2: RepMap, name: str) -> list:
    """ρ'(z)[x,y] = [ρ'(z)x, y] + (-1)^{|x||z|}[x, ρ'(z)y]
    + (-1)^{|x||y|+|y||z|} ρ'(ρ(y)z)x - (-1)^{|x||z|} ρ'(ρ(x)z)y,
    for x, y in the first algebra and z in the second (ρ = rho1, ρ' = rho2)."""
    p1, p2 = l1.basis.parities, l2.basis.parities
    out = []
    for x in range(l1.basis.dim):
        ex = l1.basis.vector(x)
        for y in range(l1.basis.dim):
            ey = l1.basis.vector(y)
            for z in range(l2.basis.dim):
                ez = l2.basis.vector(z)
                px, py, pz = p1[x], p1[y], p2[z]
                d = (rho2.act_elem(ez, l1.on_basis(x, y))
                     - l1.right(rho2.act(z, ex), y)
                     - ks(px, pz) * l1.left(x, rho2.act(z, ey))
                     - ks(px, py) * ks(py, pz) * rho2.act_elem(rho1.act(y, ez), ex)
                     + ks(px, pz) * rho2.act_elem(rho1.act(x, ez), ey))
                if d:
                    out.append(Violation(name, (x, y, z), d))
    return out


def check_matched_pair_lie(l1: BilinearLaw, l2: BilinearLaw, rho1: RepMap, rho2: RepMap) -> Report:
    subs = combine(("rho1", check_lie_rep(l1, rho1)), ("rho2", check_lie_rep(l2, rho2)))
    if not subs.ok:
        return subs
    return Report(_mixed_lie(l1, l2, rho1, rho2, "matched_lie.first")
                  + _mixed_lie(l2, l1, rho2, rho1, "matched_lie.second"))


def _mixed_assoc(m1: BilinearLaw, m2: BilinearLaw, phi1: RepMap, phi2: RepMap, name: str) -> list:
    """φ1(x)(a•b) = (φ1(x)a)•b + (-1)^{|x||a|} φ1(φ2(a)x) b, x in the first algebra."""
    p1, p2 = m1.basis.parities, m2.basis.parities
    out = []
    for x in range(m1.basis.dim):
        ex = m1.basis.vector(x)
        for a in range(m2.basis.dim):
            ea = m2.basis.vector(a)
            for b in range(m2.basis.dim):
                eb = m2.basis.vector(b)
                d = (phi1.act(x, m2.on_basis(a, b)) - m2.right(phi1.act(x, ea), b)
                     - ks(p1[x], p2[a]) * phi1.act_elem(phi2.act(a, ex), eb))
                if d:
                    out.append(Violation(name, (x, a, b), d))
    return out


def check_matched_pair_assoc(m1: BilinearLaw, m2: BilinearLaw, phi1: RepMap, phi2: RepMap) -> Report:
    subs = combine(("phi1", check_assoc_rep(m1, phi1)), ("phi2", check_assoc_rep(m2, phi2)))
    if not subs.ok:
        return subs
    return Report(_mixed_assoc(m1, m2, phi1, phi2, "matched_assoc.first")
                  + _mixed_assoc(m2, m1, phi2, phi1, "matched_assoc.second"))


def _hom_pair(pa: PoissonSuper, pb: PoissonSuper, rho_a, phi_a, rho_b, phi_b, tag: str) -> list:
    """The two mixed identities where one element of pb meets two of pa.

    rho_a, phi_a: pa acting on pb; rho_b, phi_b: pb acting on pa.
    """
    qa, qb = pa.basis.parities, pb.basis.parities
    br, mu = pa.bracket, pa.product
    out = []
    for a in range(pb.basis.dim):
        ea = pb.basis.vector(a)
        for x in range(pa.basis.dim):
            ex = pa.basis.vector(x)
            for y in range(pa.basis.dim):
                ey = pa.basis.vector(y)
                sa_x, sa_y, sx_y = ks(qb[a], qa[x]), ks(qb[a], qa[y]), ks(qa[x], qa[y])
                # ρ'(a)(x•y) against the derivation rule corrected by the product actions
                h1 = (rho_b.act_elem(ea, mu.on_basis(x, y))
                      - mu.right(rho_b.act(a, ex), y)
                      - sa_x * mu.left(x, rho_b.act(a, ey))
                      + sa_x * phi_b.act_elem(rho_a.act(x, ea), ey)
                      + sa_y * sx_y * phi_b.act_elem(rho_a.act(y, ea), ex))
                if h1:
                    out.append(Violation(f"matched_poisson.{tag}_bracket_action", (a, x, y), h1))
                # {x, φ'(a)y} against the bracket action of the product action
                h2 = (br.left(x, phi_b.act(a, ey))
                      - sa_x * sx_y * sa_y * rho_b.act_elem(phi_a.act(y, ea), ex)
                      - phi_b.act_elem(rho_a.act(x, ea), ey)
                      + sa_x * mu.right(rho_b.act(a, ex), y)
                      - sa_x * phi_b.act_elem(ea, br.on_basis(x, y)))
                if h2:
                    out.append(Violation(f"matched_poisson.{tag}_product_action", (x, a, y), h2))
    return out


def check_matched_pair_poisson(m: MatchedPairData) -> Report:
    """Both algebras, both representations, both sub matched pairs and the four mixed identities."""
    subs = combine(
        ("p1", check_poisson(m.p1)), ("p2", check_poisson(m.p2)),
        ("rep1", check_poisson_rep(PoissonRep(m.p1, m.rho1, m.phi1))),
        ("rep2", check_poisson_rep(PoissonRep(m.p2, m.rho2, m.phi2))),
    )
    if not subs.ok:
        return subs
    return combine(
        check_matched_pair_lie(m.p1.bracket, m.p2.bracket, m.rho1, m.rho2),
        check_matched_pair_assoc(m.p1.product, m.p2.product, m.phi1, m.phi2),
        Report(_hom_pair(m.p1, m.p2, m.rho1, m.phi1, m.rho2, m.phi2, "first")),
        Report(_hom_pair(m.p2, m.p1, m.rho2, m.phi2, m.rho1, m.phi1, "second")),
    )


class BilinearForm:
    """B(e_i, e_j) = gram[i][j]."""

    def __init__(self, basis: GradedBasis, gram: Matrix):
        self.basis = basis
        self.gram = linalg.matrix(gram)

    def __call__(self, x: Element, y: Element) -> Fraction:
        return sum((a * b * self.gram[i][j] for (i,), a in x.items() for (j,), b in y.items()), Fraction(0))

    def rank(self) -> int:
        return linalg.rank(self.gram)

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.basis == other.basis and self.gram == other.gram

    def __repr__(self):
        return f"BilinearForm({[list(map(str, r)) for r in self.gram]})"


def standard_form(basis: GradedBasis) -> BilinearForm:
    """The even supersymmetric pairing of P with P* on P ⊕ P*.

    B(a, y) = ⟨a, y⟩ for a in P*, and B(x, b) = (-1)^{|x||b|}⟨b, x⟩ by supersymmetry.
    """
    n = basis.dim
    g = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        g[n + i][i] = Fraction(1)
        g[i][n + i] = Fraction(ks(basis.parities[i], basis.parities[i]))
    return BilinearForm(basis + basis, g)


def check_manin_triple(total: PoissonSuper, plus, minus, B: BilinearForm) -> Report:
    """(total, plus, minus) is a Manin triple of Poisson superalgebras for B.

    ``plus`` and ``minus`` are the complementary index sets of the two subalgebras.
    """
    basis = total.basis
    ps, n = basis.parities, basis.dim
    plus, minus = tuple(sorted(plus)), tuple(sorted(minus))
    out = []
    if sorted(plus + minus) != list(range(n)):
        return Report([Violation("manin.partition", (plus, minus), None)])
    out.extend(check_poisson(total).prefixed("manin.algebra").violations)
    g = B.gram
    for i in range(n):
        for j in range(n):
            if g[i][j] and ps[i] != ps[j]:
                out.append(Violation("manin.form_even", (i, j), g[i][j]))
            if g[i][j] != ks(ps[i], ps[j]) * g[j][i]:
                out.append(Violation("manin.form_supersymmetric", (i, j), g[i][j] - ks(ps[i], ps[j]) * g[j][i]))
    if B.rank() != n:
        out.append(Violation("manin.form_nondegenerate", (), B.rank()))
    vec = basis.vector
    for law, name in ((total.bracket, "manin.invariant_bracket"), (total.product, "manin.invariant_product")):
        for i in range(n):
            for j in range(n):
                lij = law.on_basis(i, j)
                for k in range(n):
                    d = B(lij, vec(k)) - B(vec(i), law.on_basis(j, k))
                    if d:
                        out.append(Violation(name, (i, j, k), d))
    for part, tag in ((plus, "plus"), (minus, "minus")):
        inside = set(part)
        for i in part:
            for j in part:
                for law in (total.bracket, total.product):
                    stray = {k for (k,) in law.on_basis(i, j).keys()} - inside
                    if stray:
                        out.append(Violation(f"manin.{tag}_closed", (i, j), law.on_basis(i, j)))
                        break
                if g[i][j]:
                    out.append(Violation(f"manin.{tag}_isotropic", (i, j), g[i][j]))
    return Report(out)


def bialgebra_matched_pair(b) -> MatchedPairData:
    """(P, P*, ad*, -L*, ad*, -L*) for a bialgebra b, P* carrying the transposed cooperations."""
    from .coalgebra import dualize
    from .representations import coadjoint_rep
    P = b.algebra
    D = dualize(b)
    on_dual = coadjoint_rep(P)
    on_primal = coadjoint_rep(D, predual=True)
    return MatchedPairData(P, D, on_dual.psi_bracket, on_dual.psi_product,
                           on_primal.psi_bracket, on_primal.psi_product)


def manin_report_for(b) -> Report:
    """Manin-triple check of P ⊕ P* with the standard form for a candidate bialgebra."""
    total = bowtie(bialgebra_matched_pair(b))
    n = b.basis.dim
    return check_manin_triple(total, range(n), range(n, 2 * n), standard_form(b.basis))
