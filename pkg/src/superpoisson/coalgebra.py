"""Cooperations, super coalgebra axioms and the Lie / infinitesimal / Poisson
superbialgebra compatibilities, all checked as identities of tensors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graded import (GradedBasis, Tensor, Tensor2, accumulate, act_on_leg, cyclic, expand_leg,
                     koszul_sign as ks, pairing_sign, permute_legs, twist, zero_tensor)
from .report import Report, Violation, combine
from .structures import BilinearLaw, PoissonSuper, check_comm_assoc, check_lie, check_poisson


class Cooperation:
    """A linear map V → V⊗V given by the images of basis vectors."""

    __slots__ = ("basis", "_images")

    def __init__(self, basis: GradedBasis, images: Mapping | None = None):
        self.basis = basis
        imgs = {}
        for i, t in (images or {}).items():
            if not isinstance(t, Tensor):
                t = Tensor2(basis, t)
            if t.basis != basis or t.rank != 2:
                raise ValueError("cooperation images must be 2-tensors over the same basis")
            if not 0 <= i < basis.dim:
                raise IndexError(i)
            if t:
                imgs[i] = t
        self._images = imgs

    @classmethod
    def zero(cls, basis):
        return cls(basis, {})

    @classmethod
    def from_entries(cls, basis, entries) -> "Cooperation":
        """Entries (i, j, k, c): the image of e_i contains c·e_j⊗e_k."""
        acc = {}
        for i, j, k, c in entries:
            acc.setdefault(i, []).append(((j, k), c))
        return cls(basis, {i: Tensor2(basis, items) for i, items in acc.items()})

    def image(self, i: int) -> Tensor:
        t = self._images.get(i)
        return t if t is not None else zero_tensor(self.basis, 2)

    def __call__(self, x: Tensor) -> Tensor:
        out = {}
        for (i,), c in x.items():
            for k, v in self.image(i).items():
                out[k] = out.get(k, 0) + c * v
        return accumulate(self.basis, 2, out)

    def entries(self) -> list:
        return sorted((i, j, k, c) for i, t in self._images.items() for (j, k), c in t.items())

    def is_zero(self) -> bool:
        return not self._images

    def __eq__(self, other):
        return isinstance(other, Cooperation) and self.basis == other.basis and self._images == other._images

    def __hash__(self):
        return hash((self.basis, frozenset(self._images.items())))

    def __repr__(self):
        return f"Cooperation(dim={self.basis.dim}, {self.entries()})"


def coop_evenness(c: Cooperation, name: str) -> Report:
    ps = c.basis.parities
    return Report(Violation(name, (i,), c.image(i)) for i in range(c.basis.dim)
                  if not c.image(i).is_homogeneous(ps[i]))


def _apply2(c: Cooperation, t: Tensor, leg: int) -> Tensor:
    return expand_leg(t, leg, c.image, t.rank + 1)


def ad_on_tensor(bracket: BilinearLaw, i: int, t: Tensor) -> Tensor:
    """ad(e_i) acting as a graded derivation on every leg."""
    p = bracket.basis.parities[i]
    op = lambda j: bracket.on_basis(i, j)
    out = zero_tensor(t.basis, t.rank)
    for leg in range(t.rank):
        out = out + act_on_leg(t, leg, op, p)
    return out


def mult_on_leg(product: BilinearLaw, i: int, t: Tensor, leg: int) -> Tensor:
    """L(e_i) on one leg with the Koszul sign."""
    return act_on_leg(t, leg, lambda j: product.on_basis(i, j), product.basis.parities[i])


def right_mult_on_leg(product: BilinearLaw, i: int, t: Tensor, leg: int) -> Tensor:
    """u ↦ u•e_i on one leg; written on the right, so nothing is passed and no sign arises."""
    return act_on_leg(t, leg, lambda j: product.on_basis(j, i), 0, koszul=False)


def check_lie_cocoalgebra(delta: Cooperation) -> Report:
    """δ + τδ = 0 and (id + ξ + ξ²)(id⊗δ)δ = 0."""
    ev = coop_evenness(delta, "lie_coalgebra.evenness")
    if not ev.ok:
        return ev
    out = []
    for i in range(delta.basis.dim):
        d = delta.image(i)
        skew = d + twist(d)
        if skew:
            out.append(Violation("lie_coalgebra.coskew", (i,), skew))
        t = _apply2(delta, d, 1)
        xt = cyclic(t)
        jac = t + xt + cyclic(xt)
        if jac:
            out.append(Violation("lie_coalgebra.cojacobi", (i,), jac))
    return Report(out)


def check_coassoc_cocomm(Delta: Cooperation) -> Report:
    """(id⊗Δ)Δ = (Δ⊗id)Δ and τΔ = Δ."""
    ev = coop_evenness(Delta, "coassoc.evenness")
    if not ev.ok:
        return ev
    out = []
    for i in range(Delta.basis.dim):
        d = Delta.image(i)
        co = _apply2(Delta, d, 1) - _apply2(Delta, d, 0)
        if co:
            out.append(Violation("coassoc.coassociativity", (i,), co))
        cc = twist(d) - d
        if cc:
            out.append(Violation("coassoc.cocommutativity", (i,), cc))
    return Report(out)


def lie_cocycle_report(bracket: BilinearLaw, delta: Cooperation) -> Report:
    """δ([x,y]) = ad(x)δ(y) - (-1)^{|x||y|} ad(y)δ(x)."""
    ps, n = bracket.basis.parities, bracket.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            d = (delta(bracket.on_basis(i, j)) - ad_on_tensor(bracket, i, delta.image(j))
                 + ks(ps[i], ps[j]) * ad_on_tensor(bracket, j, delta.image(i)))
            if d:
                out.append(Violation("lie_bialgebra.cocycle", (i, j), d))
    return Report(out)


def check_lie_superbialgebra(bracket, delta: Cooperation) -> Report:
    br = bracket.bracket if not isinstance(bracket, BilinearLaw) else bracket
    subs = combine(check_lie(br), check_lie_cocoalgebra(delta))
    if not subs.ok:
        return subs
    return lie_cocycle_report(br, delta)


def inf_compat_report(product: BilinearLaw, Delta: Cooperation) -> Report:
    """Δ(a•b) = (L(a)⊗id)Δ(b) + Δ(a)•b, the product by b acting on the second leg."""
    n = product.basis.dim
    out = []
    for a in range(n):
        for b in range(n):
            d = (Delta(product.on_basis(a, b)) - mult_on_leg(product, a, Delta.image(b), 0)
                 - right_mult_on_leg(product, b, Delta.image(a), 1))
            if d:
                out.append(Violation("inf_bialgebra.compatibility", (a, b), d))
    return Report(out)


def check_inf_superbialgebra(product, Delta: Cooperation) -> Report:
    mu = product.product if not isinstance(product, BilinearLaw) else product
    subs = combine(check_comm_assoc(mu), check_coassoc_cocomm(Delta))
    if not subs.ok:
        return subs
    return inf_compat_report(mu, Delta)


@dataclass(frozen=True)
class PoissonBialgebra:
    algebra: PoissonSuper
    cobracket: Cooperation
    coproduct: Cooperation

    def __post_init__(self):
        if not (self.algebra.basis == self.cobracket.basis == self.coproduct.basis):
            raise ValueError("algebra and cooperations must share a basis")

    @property
    def basis(self) -> GradedBasis:
        return self.algebra.basis


def coleibniz_report(delta: Cooperation, Delta: Cooperation) -> Report:
    """(id⊗Δ)δ = (δ⊗id)Δ + (τ⊗id)(id⊗δ)Δ."""
    out = []
    for i in range(delta.basis.dim):
        d = (_apply2(Delta, delta.image(i), 1) - _apply2(delta, Delta.image(i), 0)
             - permute_legs(_apply2(delta, Delta.image(i), 1), (1, 0, 2)))
        if d:
            out.append(Violation("poisson_bialgebra.coleibniz", (i,), d))
    return Report(out)


def mixed_compat_report(b: PoissonBialgebra) -> Report:
    """The two identities tying δ to the product and Δ to the bracket."""
    br, mu = b.algebra.bracket, b.algebra.product
    delta, Delta = b.cobracket, b.coproduct
    ps, n = b.basis.parities, b.basis.dim
    out = []
    for x in range(n):
        for y in range(n):
            s = ks(ps[x], ps[y])
            ad_x = lambda j: br.on_basis(x, j)
            ad_y = lambda j: br.on_basis(y, j)
            d1 = (delta(mu.on_basis(x, y))
                  - s * mult_on_leg(mu, y, delta.image(x), 0)
                  - mult_on_leg(mu, x, delta.image(y), 0)
                  - act_on_leg(Delta.image(y), 1, ad_x, ps[x])
                  - s * act_on_leg(Delta.image(x), 1, ad_y, ps[y]))
            if d1:
                out.append(Violation("poisson_bialgebra.cobracket_of_product", (x, y), d1))
            d2 = (Delta(br.on_basis(x, y))
                  - ad_on_tensor(br, x, Delta.image(y))
                  - s * (mult_on_leg(mu, y, delta.image(x), 0) - mult_on_leg(mu, y, delta.image(x), 1)))
            if d2:
                out.append(Violation("poisson_bialgebra.coproduct_of_bracket", (x, y), d2))
    return Report(out)


def check_poisson_bialgebra(b: PoissonBialgebra) -> Report:
    """Every sub-suite plus the co-Leibniz rule and the two mixed compatibilities."""
    P = b.algebra
    subs = combine(check_poisson(P), check_lie_cocoalgebra(b.cobracket), check_coassoc_cocomm(b.coproduct))
    if not subs.ok:
        return subs
    return combine(lie_cocycle_report(P.bracket, b.cobracket), inf_compat_report(P.product, b.coproduct),
                   coleibniz_report(b.cobracket, b.coproduct), mixed_compat_report(b))


def transpose_cooperation(c: Cooperation) -> BilinearLaw:
    """The law on the dual basis with ⟨a∘b, x⟩ = ⟨a⊗b, c(x)⟩."""
    ps, n = c.basis.parities, c.basis.dim
    acc = {}
    for k in range(n):
        for (i, j), v in c.image(k).items():
            acc.setdefault((i, j), {})[(k,)] = pairing_sign(ps[j], ps[i]) * v
    return BilinearLaw(c.basis, {key: accumulate(c.basis, 1, d) for key, d in acc.items()})


def transpose_law(law: BilinearLaw) -> Cooperation:
    """The cooperation on the dual basis with ⟨c(a), x⊗y⟩ = ⟨a, law(x, y)⟩."""
    ps = law.basis.parities
    acc = {}
    for (i, j), img in law.pairs():
        for (k,), v in img.items():
            acc.setdefault(k, {})[(i, j)] = pairing_sign(ps[j], ps[i]) * v
    return Cooperation(law.basis, {k: accumulate(law.basis, 2, d) for k, d in acc.items()})


def dualize(b: PoissonBialgebra) -> PoissonSuper:
    """The bracket and product on P* transposed from δ and Δ."""
    return PoissonSuper(transpose_cooperation(b.cobracket), transpose_cooperation(b.coproduct))


def dual_bialgebra(b: PoissonBialgebra) -> PoissonBialgebra:
    """P* with the transposed operations and cooperations."""
    P = b.algebra
    return PoissonBialgebra(dualize(b), transpose_law(P.bracket), transpose_law(P.product))
