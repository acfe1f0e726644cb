"""The two-dimensional family P2 (e1 even, e2 odd) and its named instances."""
from __future__ import annotations

from .graded import GradedBasis, Tensor2, to_scalar
from .structures import BilinearLaw, PoissonSuper

P2_BASIS = GradedBasis((0, 1))
P2_PARAMS = ("b", "c", "d", "k", "f", "c1", "c2")


def p2_algebra(b=0, c=0, d=0, k=0, f=0) -> PoissonSuper:
    """{e1,e2} = b e2, {e2,e2} = c e1, e1•e1 = k e1, e1•e2 = d e2, e2•e2 = f e1."""
    b, c, d, k, f = (to_scalar(v) for v in (b, c, d, k, f))
    B = P2_BASIS
    bracket = BilinearLaw.from_entries(B, [(0, 1, 1, b), (1, 0, 1, -b), (1, 1, 0, c)])
    product = BilinearLaw.from_entries(B, [(0, 0, 0, k), (0, 1, 1, d), (1, 0, 1, d), (1, 1, 0, f)])
    return PoissonSuper(bracket, product)


def p2_bialgebra(b=0, c=0, d=0, k=0, f=0, c1=0, c2=0):
    """P2 with δ(e1) = c1 e2⊗e2, δ(e2) = c2 (e1⊗e2 - e2⊗e1) and Δ = 0."""
    from .coalgebra import Cooperation, PoissonBialgebra
    c1, c2 = to_scalar(c1), to_scalar(c2)
    B = P2_BASIS
    delta = Cooperation(B, {0: Tensor2(B, {(1, 1): c1}), 1: Tensor2(B, {(0, 1): c2, (1, 0): -c2})})
    return PoissonBialgebra(p2_algebra(b, c, d, k, f), delta, Cooperation.zero(B))


def p2_from_tuple(values):
    return p2_bialgebra(**dict(zip(P2_PARAMS, values)))


FIXTURE_A = dict(b=0, c=1, d=1, k=1, f=0, c1=0, c2=1)
FIXTURE_B = dict(b=1, c=0, d=0, k=0, f=1, c1=1, c2=0)


def fixture_a():
    return p2_bialgebra(**FIXTURE_A)


def fixture_b():
    return p2_bialgebra(**FIXTURE_B)


def six_conditions(b, c, d, k, f, c1, c2) -> bool:
    """The closed-form parameter conditions claimed for the P2 family."""
    return (b * c == 0 and d == k and c1 * c2 == 0 and c * c1 == -4 * b * c2
            and k * c1 == 2 * d * c1 and f * c2 == 0)
