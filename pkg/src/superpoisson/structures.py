"""Bilinear laws on a graded basis and the Lie / commutative / Poisson axioms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .graded import Element, GradedBasis, Tensor, accumulate, koszul_sign as ks, to_scalar
from .linalg import Matrix
from .report import Report, Violation

HALF = Fraction(1, 2)


class BilinearLaw:
    """A bilinear map V×V→V fixed by its structure constants c(e_i, e_j)."""

    __slots__ = ("basis", "_table", "_hash")

    def __init__(self, basis: GradedBasis, constants: Mapping | None = None):
        self.basis = basis
        table = {}
        for (i, j), img in (constants or {}).items():
            if not isinstance(img, Tensor):
                img = Element(basis, img)
            elif img.basis != basis or img.rank != 1:
                raise ValueError("structure constants must be elements of the same basis")
            if not (0 <= i < basis.dim and 0 <= j < basis.dim):
                raise IndexError(f"pair {(i, j)} out of range")
            if img:
                table[(i, j)] = img
        self._table = table
        self._hash = None

    @classmethod
    def from_entries(cls, basis: GradedBasis, entries: Iterable) -> "BilinearLaw":
        """Entries are (i, j, k, c) meaning c(e_i, e_j) has coefficient c on e_k."""
        acc = {}
        for i, j, k, c in entries:
            d = acc.setdefault((i, j), {})
            d[(k,)] = d.get((k,), 0) + to_scalar(c)
        return cls(basis, {key: accumulate(basis, 1, d) for key, d in acc.items()})

    @classmethod
    def zero(cls, basis: GradedBasis) -> "BilinearLaw":
        return cls(basis, {})

    def on_basis(self, i: int, j: int) -> Element:
        img = self._table.get((i, j))
        return img if img is not None else accumulate(self.basis, 1, {})

    def entries(self) -> list:
        return sorted((i, j, k, c) for (i, j), img in self._table.items() for (k,), c in img.items())

    def pairs(self):
        return self._table.items()

    def _acc(self, pairs) -> Element:
        out = {}
        table = self._table
        for (i, j), w in pairs:
            img = table.get((i, j))
            if img is None:
                continue
            for k, c in img.items():
                out[k] = out.get(k, 0) + w * c
        return accumulate(self.basis, 1, out)

    def __call__(self, x: Tensor, y: Tensor) -> Element:
        return self._acc(((i, j), a * b) for (i,), a in x.items() for (j,), b in y.items())

    def left(self, i: int, y: Tensor) -> Element:
        """c(e_i, y)."""
        return self._acc(((i, j), b) for (j,), b in y.items())

    def right(self, x: Tensor, j: int) -> Element:
        """c(x, e_j)."""
        return self._acc(((i, j), a) for (i,), a in x.items())

    def left_matrix(self, i: int) -> Matrix:
        n = self.basis.dim
        return tuple(tuple(self.on_basis(i, j)[k] for j in range(n)) for k in range(n))

    def right_matrix(self, j: int) -> Matrix:
        n = self.basis.dim
        return tuple(tuple(self.on_basis(i, j)[k] for i in range(n)) for k in range(n))

    def __eq__(self, other):
        if not isinstance(other, BilinearLaw):
            return NotImplemented
        return self.basis == other.basis and self._table == other._table

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, frozenset(self._table.items())))
        return self._hash

    def __add__(self, other: "BilinearLaw") -> "BilinearLaw":
        keys = set(self._table) | set(other._table)
        return BilinearLaw(self.basis, {k: self.on_basis(*k) + other.on_basis(*k) for k in keys})

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar) -> "BilinearLaw":
        c = to_scalar(scalar)
        return BilinearLaw(self.basis, {k: v * c for k, v in self._table.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"BilinearLaw(dim={self.basis.dim}, {self.entries()})"

    def is_zero(self) -> bool:
        return not self._table


def evenness_report(law: BilinearLaw, name: str = "evenness") -> Report:
    """c(e_i, e_j) must have parity |e_i| + |e_j|."""
    ps = law.basis.parities
    bad = []
    for (i, j), img in sorted(law.pairs()):
        if not img.is_homogeneous((ps[i] + ps[j]) & 1):
            bad.append(Violation(name, (i, j), img))
    return Report(bad)


@dataclass(frozen=True)
class LieSuper:
    bracket: BilinearLaw

    @property
    def basis(self):
        return self.bracket.basis


@dataclass(frozen=True)
class AssocSuper:
    product: BilinearLaw

    @property
    def basis(self):
        return self.product.basis


@dataclass(frozen=True)
class PoissonSuper:
    bracket: BilinearLaw
    product: BilinearLaw

    def __post_init__(self):
        if self.bracket.basis != self.product.basis:
            raise ValueError("bracket and product must share a basis")

    @property
    def basis(self) -> GradedBasis:
        return self.bracket.basis

    @property
    def dim(self) -> int:
        return self.basis.dim

    @classmethod
    def zero(cls, basis: GradedBasis) -> "PoissonSuper":
        return cls(BilinearLaw.zero(basis), BilinearLaw.zero(basis))


def _law(x, attr):
    return getattr(x, attr) if not isinstance(x, BilinearLaw) else x


def check_lie(bracket) -> Report:
    """Evenness, super skew-symmetry and the super Jacobi identity on basis triples."""
    br = _law(bracket, "bracket")
    ev = evenness_report(br, "lie.evenness")
    if not ev.ok:
        return ev
    basis = br.basis
    ps, n = basis.parities, basis.dim
    out = []
    for i in range(n):
        for j in range(i, n):
            d = br.on_basis(i, j) + ks(ps[i], ps[j]) * br.on_basis(j, i)
            if d:
                out.append(Violation("lie.skew", (i, j), d))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = (ks(ps[i], ps[k]) * br.left(i, br.on_basis(j, k))
                     + ks(ps[k], ps[j]) * br.left(k, br.on_basis(i, j))
                     + ks(ps[j], ps[i]) * br.left(j, br.on_basis(k, i)))
                if d:
                    out.append(Violation("lie.jacobi", (i, j, k), d))
    return Report(out)


def check_comm_assoc(product) -> Report:
    """Evenness, supercommutativity and associativity on basis triples."""
    mu = _law(product, "product")
    ev = evenness_report(mu, "assoc.evenness")
    if not ev.ok:
        return ev
    basis = mu.basis
    ps, n = basis.parities, basis.dim
    out = []
    for i in range(n):
        for j in range(i, n):
            d = mu.on_basis(i, j) - ks(ps[i], ps[j]) * mu.on_basis(j, i)
            if d:
                out.append(Violation("assoc.supercommutativity", (i, j), d))
    out.extend(associativity_violations(mu, "assoc.associativity"))
    return Report(out)


def associativity_violations(mu: BilinearLaw, name: str) -> list:
    n = mu.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            eij = mu.on_basis(i, j)
            for k in range(n):
                d = mu.right(eij, k) - mu.left(i, mu.on_basis(j, k))
                if d:
                    out.append(Violation(name, (i, j, k), d))
    return out


def leibniz_report(P: PoissonSuper) -> Report:
    """{x, y•z} = {x,y}•z + (-1)^{|x||y|} y•{x,z}."""
    br, mu = P.bracket, P.product
    ps, n = P.basis.parities, P.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            bij = br.on_basis(i, j)
            for k in range(n):
                d = (br.left(i, mu.on_basis(j, k)) - mu.right(bij, k)
                     - ks(ps[i], ps[j]) * mu.left(j, br.on_basis(i, k)))
                if d:
                    out.append(Violation("poisson.leibniz", (i, j, k), d))
    return Report(out)


def right_leibniz_report(P: PoissonSuper) -> Report:
    """{x•y, z} = x•{y,z} + (-1)^{|x||y|} y•{x,z}; equivalent to Leibniz for a Poisson superalgebra."""
    br, mu = P.bracket, P.product
    ps, n = P.basis.parities, P.basis.dim
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = (br.right(mu.on_basis(i, j), k) - mu.left(i, br.on_basis(j, k))
                     - ks(ps[i], ps[j]) * mu.left(j, br.on_basis(i, k)))
                if d:
                    out.append(Violation("poisson.right_leibniz", (i, j, k), d))
    return Report(out)


def check_poisson(P: PoissonSuper) -> Report:
    """All Lie, commutative-associative, and Leibniz laws."""
    lie = check_lie(P.bracket)
    assoc = check_comm_assoc(P.product)
    if any(v.law.endswith("evenness") for v in lie.violations + assoc.violations):
        return lie + assoc
    return lie + assoc + leibniz_report(P)


def polarize(single: BilinearLaw) -> PoissonSuper:
    """Split x·y into its super skew part {x,y} and super symmetric part x•y."""
    basis = single.basis
    ps, n = basis.parities, basis.dim
    br, pr = {}, {}
    for i in range(n):
        for j in range(n):
            a, b = single.on_basis(i, j), single.on_basis(j, i) * ks(ps[i], ps[j])
            br[(i, j)] = (a - b) * HALF
            pr[(i, j)] = (a + b) * HALF
    return PoissonSuper(BilinearLaw(basis, br), BilinearLaw(basis, pr))


def depolarize(P: PoissonSuper) -> BilinearLaw:
    """The single law x·y = {x,y} + x•y."""
    return P.bracket + P.product


def check_admissible(single: BilinearLaw) -> Report:
    """The one-operation identity characterizing laws whose polarization is Poisson."""
    ev = evenness_report(single, "admissible.evenness")
    if not ev.ok:
        return ev
    m = single
    ps, n = m.basis.parities, m.basis.dim
    out = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                px, py, pz = ps[x], ps[y], ps[z]
                assoc = m.right(m.on_basis(x, y), z) - m.left(x, m.on_basis(y, z))
                rhs = (ks(py, pz) * m.right(m.on_basis(x, z), y)
                       - ks(px, pz) * ks(py, pz) * m.right(m.on_basis(z, x), y)
                       + ks(px, py) * ks(px, pz) * m.right(m.on_basis(y, z), x)
                       - ks(px, py) * m.right(m.on_basis(y, x), z))
                d = assoc * 3 - rhs
                if d:
                    out.append(Violation("admissible.identity", (x, y, z), d))
    return Report(out)


def transport(P: PoissonSuper, g: Matrix) -> PoissonSuper:
    """Rewrite P in the basis f_j = Σ_i g[i][j] e_i (g even and invertible)."""
    from .linalg import inverse
    basis = P.basis
    n = basis.dim
    ginv = inverse(g)
    cols = [accumulate(basis, 1, {(i,): g[i][j] for i in range(n) if g[i][j]}) for j in range(n)]

    def conj(law):
        table = {}
        for a in range(n):
            for b in range(n):
                img = law(cols[a], cols[b])
                new = {}
                for (i,), c in img.items():
                    for k in range(n):
                        if ginv[k][i]:
                            new[(k,)] = new.get((k,), 0) + ginv[k][i] * c
                table[(a, b)] = accumulate(basis, 1, new)
        return BilinearLaw(basis, table)

    return PoissonSuper(conj(P.bracket), conj(P.product))
