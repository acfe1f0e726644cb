"""Coboundary Poisson superbialgebras: r-matrices, the classical, associative and
Poisson Yang-Baxter equations, and the Drinfeld double."""
from __future__ import annotations

from fractions import Fraction

from .coalgebra import (Cooperation, PoissonBialgebra, ad_on_tensor, check_poisson_bialgebra, mult_on_leg,
                        right_mult_on_leg)
from .graded import (GradedBasis, Tensor, Tensor2, accumulate, act_on_leg, expand_leg, koszul_sign as ks,
                     permute_legs, twist)
from .linalg import Matrix
from .matched import bialgebra_matched_pair, bowtie
from .report import PreconditionError, Report, Violation
from .structures import PoissonSuper

HALF = Fraction(1, 2)


def check_r_matrix(P: PoissonSuper, r: Tensor) -> None:
    if r.basis != P.basis or r.rank != 2:
        raise ValueError("r must be a 2-tensor over the algebra's basis")
    if not r.is_homogeneous(0):
        raise PreconditionError("r must be even")


def cobracket_from_r(P: PoissonSuper, r: Tensor) -> Cooperation:
    """δ(x) = [x, r1]⊗r2 + (-1)^{|x||r1|} r1⊗[x, r2]."""
    check_r_matrix(P, r)
    return Cooperation(P.basis, {i: ad_on_tensor(P.bracket, i, r) for i in range(P.basis.dim)})


def coproduct_from_r(P: PoissonSuper, r: Tensor) -> Cooperation:
    """Δ(x) = r1⊗r2•x - x•r1⊗r2.

    This orientation is the one for which δ_r, Δ_r satisfy the mixed compatibilities and
    the double restricts to the original coproduct on P.
    """
    check_r_matrix(P, r)
    mu = P.product
    return Cooperation(P.basis, {i: right_mult_on_leg(mu, i, r, 1) - mult_on_leg(mu, i, r, 0)
                                 for i in range(P.basis.dim)})


def coboundary_bialgebra(P: PoissonSuper, r: Tensor) -> PoissonBialgebra:
    return PoissonBialgebra(P, cobracket_from_r(P, r), coproduct_from_r(P, r))


def _three(P, r, combine):
    ps = P.basis.parities
    out = {}
    for (a, b), u in r.items():
        for (c, d), v in r.items():
            for key, w in combine(a, b, c, d, ps).items():
                out[key] = out.get(key, 0) + u * v * w
    return accumulate(P.basis, 3, out)


def _law_items(law, i, j):
    return [(k, c) for (k,), c in law.on_basis(i, j).items()]


def cybe_components(P: PoissonSuper, r: Tensor):
    """[r12, r13], [r12, r23], [r13, r23] as 3-tensors."""
    br = P.bracket

    def c12_13(a, b, c, d, ps):
        s = ks(ps[c], ps[b])
        return {(k, b, d): s * w for k, w in _law_items(br, a, c)}

    def c12_23(a, b, c, d, ps):
        return {(a, k, d): w for k, w in _law_items(br, b, c)}

    def c13_23(a, b, c, d, ps):
        s = ks(ps[c], ps[b])
        return {(a, c, k): s * w for k, w in _law_items(br, b, d)}

    return _three(P, r, c12_13), _three(P, r, c12_23), _three(P, r, c13_23)


def cybe(P: PoissonSuper, r: Tensor) -> Tensor:
    check_r_matrix(P, r)
    a, b, c = cybe_components(P, r)
    return a + b + c


def aybe_components(P: PoissonSuper, r: Tensor):
    """r13•r12, r12•r23, r23•r13 as 3-tensors."""
    mu = P.product

    def m13_12(a, b, c, d, ps):
        return {(k, d, b): w for k, w in _law_items(mu, a, c)}

    def m12_23(a, b, c, d, ps):
        return {(a, k, d): w for k, w in _law_items(mu, b, c)}

    def m23_13(a, b, c, d, ps):
        return {(c, a, k): w for k, w in _law_items(mu, b, d)}

    return _three(P, r, m13_12), _three(P, r, m12_23), _three(P, r, m23_13)


def aybe(P: PoissonSuper, r: Tensor) -> Tensor:
    check_r_matrix(P, r)
    a, b, c = aybe_components(P, r)
    return a - b + c


def pybe_holds(P: PoissonSuper, r: Tensor) -> bool:
    return cybe(P, r).is_zero() and aybe(P, r).is_zero()


def _w_direct(P, delta, Delta, i):
    d, D = delta.image(i), Delta.image(i)
    return (expand_leg(d, 1, Delta.image, 3) - expand_leg(D, 0, delta.image, 3)
            - permute_legs(expand_leg(D, 1, delta.image, 3), (1, 0, 2)))


def w_obstruction_direct(P: PoissonSuper, r: Tensor, i: int) -> Tensor:
    """(id⊗Δ)δ(x) - (δ⊗id)Δ(x) - (τ⊗id)(id⊗δ)Δ(x) for the cooperations built from r."""
    return _w_direct(P, cobracket_from_r(P, r), coproduct_from_r(P, r), i)


def w_obstruction(P: PoissonSuper, r: Tensor, i: int) -> Tensor:
    """The co-Leibniz defect of δ_r, Δ_r at e_i written through A(r), C(r) and r + τ(r):

    (ad(x)⊗id⊗id)A(r) - (id⊗L(x)⊗id - id⊗id⊗L(x))C(r)
    + Σ (-1)^{|x||r1|} ((ad(r1)⊗id)(L(x)⊗id - id⊗L(x))(r + τr)) ⊗ r2,
    the L(x) legs carrying Koszul signs.  Agrees with :func:`w_obstruction_direct`.
    """
    check_r_matrix(P, r)
    br, mu = P.bracket, P.product
    ps = P.basis.parities
    p = ps[i]
    A, C = aybe(P, r), cybe(P, r)
    out = act_on_leg(A, 0, lambda j: br.on_basis(i, j), p)
    out = out - mult_on_leg(mu, i, C, 1) + mult_on_leg(mu, i, C, 2)
    sym = r + twist(r)
    m = mult_on_leg(mu, i, sym, 0) - mult_on_leg(mu, i, sym, 1)
    tail = {}
    for (a, b), u in r.items():
        s = ks(p, ps[a]) * u
        for (k, l), v in m.items():
            for (q,), c in br.on_basis(a, k).items():
                key = (q, l, b)
                tail[key] = tail.get(key, 0) + s * v * c
    return out + accumulate(P.basis, 3, tail)


def coboundary_conditions(P: PoissonSuper, r: Tensor) -> Report:
    """The four conditions making (P, δ_r, Δ_r) a Poisson superbialgebra."""
    check_r_matrix(P, r)
    br, mu = P.bracket, P.product
    n = P.basis.dim
    sym = r + twist(r)
    A, C = aybe(P, r), cybe(P, r)
    out = []
    for i in range(n):
        d = ad_on_tensor(br, i, sym)
        if d:
            out.append(Violation("coboundary.invariant_bracket", (i,), d))
        d = mult_on_leg(mu, i, sym, 0) - mult_on_leg(mu, i, sym, 1)
        if d:
            out.append(Violation("coboundary.invariant_product", (i,), d))
    for i in range(n):
        d = mult_on_leg(mu, i, A, 0) - right_mult_on_leg(mu, i, A, 2)
        if d:
            out.append(Violation("coboundary.aybe_invariance", (i,), d))
    for i in range(n):
        d = ad_on_tensor(br, i, C)
        if d:
            out.append(Violation("coboundary.cybe_invariance", (i,), d))
    for i in range(n):
        d = w_obstruction(P, r, i)
        if d:
            out.append(Violation("coboundary.coleibniz", (i,), d))
    return Report(out)


def canonical_r(basis: GradedBasis) -> Tensor2:
    """Σ e_i ⊗ e*_i on P ⊕ P*."""
    n = basis.dim
    return Tensor2(basis + basis, {(i, n + i): 1 for i in range(n)})


def drinfeld_double(b: PoissonBialgebra):
    """P ⊕ P* with its coboundary bialgebra structure from the canonical r."""
    rep = check_poisson_bialgebra(b)
    if not rep.ok:
        raise PreconditionError("not a Poisson superbialgebra", rep)
    PD = bowtie(bialgebra_matched_pair(b))
    r = canonical_r(b.basis)
    return coboundary_bialgebra(PD, r), r


def r_as_map(r: Tensor) -> Matrix:
    """The map r: P* → P, r(a) = Σ ⟨a, r1⟩ r2.

    This is ⟨b, r(a)⟩ = ⟨a⊗b, r⟩ evaluated by contracting a with the first leg before b
    meets the second, so no leg is passed and no sign appears.
    """
    n = r.basis.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (k, l), v in r.items():
        rows[l][k] += v
    return tuple(tuple(x) for x in rows)


def symmetric_split(r: Tensor):
    """(α, β) with α = (r - τr)/2 skew and β = (r + τr)/2 supersymmetric."""
    t = twist(r)
    return (r - t) * HALF, (r + t) * HALF
