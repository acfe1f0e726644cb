"""Module Poisson superalgebras, O-operators and post-Poisson superalgebras."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .coboundary import r_as_map, symmetric_split
from .graded import Element, GradedBasis, koszul_sign as ks, to_scalar
from .linalg import Matrix
from .report import PreconditionError, Report, Violation, combine
from .representations import RepMap, adjoint_rep, coadjoint_rep, direct_sum_laws
from .structures import BilinearLaw, PoissonSuper, check_comm_assoc, check_lie, check_poisson, evenness_report


@dataclass(frozen=True)
class ModulePoissonData:
    """A Poisson superalgebra V on which P acts by (psi_bracket, psi_product)."""

    algebra: PoissonSuper
    module: PoissonSuper
    psi_bracket: RepMap
    psi_product: RepMap

    @property
    def carrier(self) -> GradedBasis:
        return self.module.basis


def regular_module(P: PoissonSuper) -> ModulePoissonData:
    reg = adjoint_rep(P)
    return ModulePoissonData(P, P, reg.psi_bracket, reg.psi_product)


def module_total(m: ModulePoissonData) -> PoissonSuper:
    """P ⊕ V with P acting on V and V acting trivially on P."""
    back = RepMap.zero(m.carrier, m.algebra.basis)
    return direct_sum_laws(m.algebra, m.module, m.psi_bracket, m.psi_product, back, back)


def check_module_poisson(m: ModulePoissonData) -> Report:
    """V is a P-module Poisson superalgebra iff P ⊕ V is Poisson."""
    return check_poisson(module_total(m)).prefixed("module")


def literal_module_identities(m: ModulePoissonData) -> Report:
    """Advisory: the two displayed compatibility identities of the module definition, read literally.

    The second one pairs ψ_{,} with •1 where a bracket is expected. Both are diagnostics
    and never enter a verdict.
    """
    V, pb, pp = m.module, m.psi_bracket, m.psi_product
    ps, qs = m.algebra.basis.parities, V.basis.parities
    out = []
    for x in range(m.algebra.basis.dim):
        for u in range(V.basis.dim):
            eu = V.basis.vector(u)
            for v in range(V.basis.dim):
                ev = V.basis.vector(v)
                s = ks(ps[x], qs[u])
                d1 = (pb.act(x, V.product.on_basis(u, v)) - V.product.right(pb.act(x, eu), v)
                      - s * V.product.left(u, pb.act(x, ev)))
                if d1:
                    out.append(Violation("advisory.bracket_action_on_product", (x, u, v), d1))
                d2 = (pp.act(x, V.bracket.on_basis(u, v)) - V.product.right(pb.act(x, eu), v)
                      - s * V.bracket.left(u, pp.act(x, ev)))
                if d2:
                    out.append(Violation("advisory.product_action_on_bracket", (x, u, v), d2))
    return Report(out)


@dataclass(frozen=True)
class OOperator:
    """An even map T: V → P (matrix with dim P rows) and a weight λ."""

    module: ModulePoissonData
    T: Matrix
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "T", linalg.matrix(self.T))
        object.__setattr__(self, "weight", to_scalar(self.weight))
        P, V = self.module.algebra.basis, self.module.carrier
        if linalg.shape(self.T) != (P.dim, V.dim):
            raise ValueError("T must have dim P rows and dim V columns")

    def image(self, u: int) -> Element:
        return linalg.column(self.T, u, self.module.algebra.basis)

    def apply(self, v: Element) -> Element:
        return linalg.apply(self.T, v, self.module.algebra.basis)


def map_evenness(T: Matrix, target: GradedBasis, source: GradedBasis, name: str) -> Report:
    out = []
    for i, row in enumerate(T):
        for j, x in enumerate(row):
            if x and target.parities[i] != source.parities[j]:
                out.append(Violation(name, (i, j), x))
    return Report(out)


def check_o_operator(o: OOperator) -> Report:
    """{Tu,Tv} = T(ψ(Tu)v - (-1)^{|u||v|}ψ(Tv)u + λ{u,v}1) and the analogue for •."""
    m = o.module
    pre = check_module_poisson(m)
    if not pre.ok:
        return pre
    P, V = m.algebra, m.module
    ev = map_evenness(o.T, P.basis, V.basis, "o_operator.evenness")
    if not ev.ok:
        return ev
    qs, nv = V.basis.parities, V.basis.dim
    lam = o.weight
    imgs = [o.image(u) for u in range(nv)]
    vecs = [V.basis.vector(u) for u in range(nv)]
    out = []
    for u in range(nv):
        for v in range(nv):
            s = ks(qs[u], qs[v])
            inner = (m.psi_bracket.act_elem(imgs[u], vecs[v]) - s * m.psi_bracket.act_elem(imgs[v], vecs[u])
                     + lam * V.bracket.on_basis(u, v))
            d = P.bracket(imgs[u], imgs[v]) - o.apply(inner)
            if d:
                out.append(Violation("o_operator.bracket", (u, v), d))
            inner = (m.psi_product.act_elem(imgs[u], vecs[v]) + s * m.psi_product.act_elem(imgs[v], vecs[u])
                     + lam * V.product.on_basis(u, v))
            d = P.product(imgs[u], imgs[v]) - o.apply(inner)
            if d:
                out.append(Violation("o_operator.product", (u, v), d))
    return Report(out)


def check_rota_baxter(P: PoissonSuper, T: Matrix, weight) -> Report:
    """T is an O-operator for the regular module (P, ad, L)."""
    return check_o_operator(OOperator(regular_module(P), T, weight))


@dataclass(frozen=True)
class PostPoisson:
    bracket: BilinearLaw
    diamond: BilinearLaw
    dot: BilinearLaw
    succ: BilinearLaw

    @property
    def basis(self) -> GradedBasis:
        return self.bracket.basis


def _post_lie_laws(br, dm):
    ps, n = br.basis.parities, br.basis.dim
    out = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                szy = ks(ps[z], ps[y])
                d = (szy * dm.left(z, dm.on_basis(y, x)) - dm.left(y, dm.on_basis(z, x))
                     + dm.right(dm.on_basis(y, z), x) - szy * dm.right(dm.on_basis(z, y), x)
                     + dm.right(br.on_basis(y, z), x))
                if d:
                    out.append(Violation("post_lie.diamond_associator", (x, y, z), d))
                d = (dm.left(z, br.on_basis(x, y)) - br.right(dm.on_basis(z, x), y)
                     - ks(ps[z], ps[x]) * br.left(x, dm.on_basis(z, y)))
                if d:
                    out.append(Violation("post_lie.diamond_derivation", (x, y, z), d))
    return out


def check_post_lie(bracket: BilinearLaw, diamond: BilinearLaw) -> Report:
    pre = combine(check_lie(bracket), evenness_report(diamond, "post_lie.evenness"))
    if not pre.ok:
        return pre
    return Report(_post_lie_laws(bracket, diamond))


def _dendriform_laws(dot, sc):
    ps, n = dot.basis.parities, dot.basis.dim
    out = []
    for x in range(n):
        for y in range(n):
            sym = sc.on_basis(x, y) + ks(ps[x], ps[y]) * sc.on_basis(y, x) + dot.on_basis(x, y)
            for z in range(n):
                d = sc.left(x, sc.on_basis(y, z)) - sc.right(sym, z)
                if d:
                    out.append(Violation("dendriform.succ_associator", (x, y, z), d))
                d = dot.right(sc.on_basis(x, y), z) - sc.left(x, dot.on_basis(y, z))
                if d:
                    out.append(Violation("dendriform.succ_dot", (x, y, z), d))
    return out


def check_comm_dendriform_tri(dot: BilinearLaw, succ: BilinearLaw) -> Report:
    pre = combine(check_comm_assoc(dot), evenness_report(succ, "dendriform.evenness"))
    if not pre.ok:
        return pre
    return Report(_dendriform_laws(dot, succ))


def _post_poisson_compat(p: PostPoisson):
    br, dm, dt, sc = p.bracket, p.diamond, p.dot, p.succ
    ps, n = p.basis.parities, p.basis.dim
    out = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                px, py, pz = ps[x], ps[y], ps[z]
                sxy, sxz, syz = ks(px, py), ks(px, pz), ks(py, pz)
                d = (br.left(x, dt.on_basis(y, z)) - dt.right(br.on_basis(x, y), z)
                     - sxy * dt.left(y, br.on_basis(x, z)))
                if d:
                    out.append(Violation("post_poisson.bracket_dot", (x, y, z), d))
                d = (br.left(x, sc.on_basis(z, y)) - sxz * sc.left(z, br.on_basis(x, y))
                     + syz * sxy * sxz * dt.left(y, dm.on_basis(z, x)))
                if d:
                    out.append(Violation("post_poisson.bracket_succ", (x, y, z), d))
                d = (dm.left(x, dt.on_basis(y, z)) - dt.right(dm.on_basis(x, y), z)
                     - sxy * dt.left(y, dm.on_basis(x, z)))
                if d:
                    out.append(Violation("post_poisson.diamond_dot", (x, y, z), d))
                sym = sc.on_basis(y, z) + syz * sc.on_basis(z, y) + dt.on_basis(y, z)
                d = dm.right(sym, x) - syz * sc.left(z, dm.on_basis(y, x)) - sc.left(y, dm.on_basis(z, x))
                if d:
                    out.append(Violation("post_poisson.succ_diamond", (x, y, z), d))
                skew = dm.on_basis(x, z) - sxz * dm.on_basis(z, x) + br.on_basis(x, z)
                d = dm.left(x, sc.on_basis(z, y)) - sxz * sc.left(z, dm.on_basis(x, y)) - sc.right(skew, y)
                if d:
                    out.append(Violation("post_poisson.diamond_succ", (x, y, z), d))
    return out


def check_post_poisson(p: PostPoisson) -> Report:
    """Post-Lie, commutative tridendriform, and the five mixed identities."""
    pre = combine(check_post_lie(p.bracket, p.diamond), check_comm_dendriform_tri(p.dot, p.succ))
    if not pre.ok:
        return pre
    return Report(_post_poisson_compat(p))


def associated_poisson(p: PostPoisson) -> PoissonSuper:
    """{x,y} = x⋄y - (-1)^{|x||y|} y⋄x + [x,y],  x•y = x≻y + (-1)^{|x||y|} y≻x + x·y."""
    ps, n = p.basis.parities, p.basis.dim
    br, pr = {}, {}
    for x in range(n):
        for y in range(n):
            s = ks(ps[x], ps[y])
            br[(x, y)] = p.diamond.on_basis(x, y) - s * p.diamond.on_basis(y, x) + p.bracket.on_basis(x, y)
            pr[(x, y)] = p.succ.on_basis(x, y) + s * p.succ.on_basis(y, x) + p.dot.on_basis(x, y)
    return PoissonSuper(BilinearLaw(p.basis, br), BilinearLaw(p.basis, pr))


def post_from_o_operator(o: OOperator) -> PostPoisson:
    """[u,v] = λ{u,v}1, u⋄v = ψ(Tu)v, u·v = λ u•1v, u≻v = ψ•(Tu)v."""
    pre = check_o_operator(o)
    if not pre.ok:
        raise PreconditionError("not an O-operator", pre)
    m, lam = o.module, o.weight
    V = m.module
    nv = V.basis.dim
    dm, sc = {}, {}
    for u in range(nv):
        tu = o.image(u)
        for v in range(nv):
            ev = V.basis.vector(v)
            dm[(u, v)] = m.psi_bracket.act_elem(tu, ev)
            sc[(u, v)] = m.psi_product.act_elem(tu, ev)
    return PostPoisson(V.bracket * lam, BilinearLaw(V.basis, dm), V.product * lam, BilinearLaw(V.basis, sc))


def check_homomorphism(T: Matrix, source: PoissonSuper, target: PoissonSuper) -> Report:
    """T(x∘y) = T(x)∘T(y) for both operations."""
    sb, tb = source.basis, target.basis
    cols = [linalg.column(T, j, tb) for j in range(sb.dim)]
    out = []
    for i in range(sb.dim):
        for j in range(sb.dim):
            for a, b, tag in ((source.bracket, target.bracket, "bracket"), (source.product, target.product, "product")):
                d = linalg.apply(T, a.on_basis(i, j), tb) - b(cols[i], cols[j])
                if d:
                    out.append(Violation(f"homomorphism.{tag}", (i, j), d))
    return Report(out)


def quasitriangular_o_operator(P: PoissonSuper, r) -> OOperator:
    """r: P* → P as a weight-1 O-operator on (P*, [,], ·, ad*, -L*) with
    [a,b] = -2 ad*(β(a))b and a·b = 2 L*(β(a))b."""
    basis = P.basis
    n = basis.dim
    _, beta = symmetric_split(r)
    bmap = r_as_map(beta)
    co = coadjoint_rep(P)
    ad_star, neg_l_star = co.psi_bracket, co.psi_product
    br, pr = {}, {}
    for a in range(n):
        ba = linalg.column(bmap, a, basis)
        for b in range(n):
            eb = basis.vector(b)
            br[(a, b)] = ad_star.act_elem(ba, eb) * -2
            pr[(a, b)] = neg_l_star.act_elem(ba, eb) * -2
    module = ModulePoissonData(P, PoissonSuper(BilinearLaw(basis, br), BilinearLaw(basis, pr)), ad_star, neg_l_star)
    return OOperator(module, r_as_map(r), 1)


def post_from_quasitriangular(b, r) -> PostPoisson:
    """The post-Poisson structure on P* induced by a quasitriangular r."""
    from .coalgebra import check_poisson_bialgebra
    from .coboundary import check_r_matrix, pybe_holds
    base = check_poisson_bialgebra(b)
    if not base.ok:
        raise PreconditionError("not a Poisson superbialgebra", base)
    check_r_matrix(b.algebra, r)
    if not pybe_holds(b.algebra, r):
        raise PreconditionError("r does not solve the Poisson Yang-Baxter equation")
    o = quasitriangular_o_operator(b.algebra, r)
    return post_from_o_operator(o)
