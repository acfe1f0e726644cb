"""Shared instances and random generators for the test suite."""
import json
import random
from fractions import Fraction
from pathlib import Path

from superpoisson import linalg
from superpoisson.coboundary import drinfeld_double
from superpoisson.fixtures import fixture_a, p2_algebra, p2_bialgebra
from superpoisson.graded import GradedBasis, Tensor2
from superpoisson.structures import BilinearLaw, PoissonSuper, transport

DATA = Path(__file__).parent / "data"
P2_TRUTH = [tuple(t) for t in json.loads((DATA / "p2_truth.json").read_text())]


def grassmann() -> PoissonSuper:
    """Λ(t1, t2) with {t1,t1} = {t2,t2} = 1: basis 1, t1, t2, t1t2 of parities 0, 1, 1, 0."""
    basis = GradedBasis((0, 1, 1, 0))
    prod = [(0, j, j, 1) for j in range(4)] + [(j, 0, j, 1) for j in range(1, 4)] + [(1, 2, 3, 1), (2, 1, 3, -1)]
    br = [(1, 1, 0, 1), (2, 2, 0, 1), (1, 3, 2, 1), (2, 3, 1, -1), (3, 1, 2, -1), (3, 2, 1, 1)]
    return PoissonSuper(BilinearLaw.from_entries(basis, br), BilinearLaw.from_entries(basis, prod))


def unit_line() -> PoissonSuper:
    """One even vector e with e•e = e."""
    basis = GradedBasis((0,))
    return PoissonSuper(BilinearLaw.zero(basis), BilinearLaw.from_entries(basis, [(0, 0, 0, 1)]))


def double_of_a() -> PoissonSuper:
    return drinfeld_double(fixture_a())[0].algebra


def poisson_corpus():
    """Named genuine Poisson superalgebras."""
    out = [("fixture_a", fixture_a().algebra), ("grassmann", grassmann()), ("unit_line", unit_line()),
           ("double_a", double_of_a())]
    for t in P2_TRUTH[::6]:
        out.append((f"p2{t}", p2_algebra(*t[:5])))
    return out


def bialgebra_corpus():
    return [(f"p2{t}", p2_bialgebra(*t)) for t in P2_TRUTH[::4]] + [("fixture_a", fixture_a())]


def random_even_invertible(basis: GradedBasis, rng: random.Random, spread: int = 2):
    n = basis.dim
    while True:
        g = [[Fraction(rng.randint(-spread, spread)) if basis.parities[i] == basis.parities[j] else Fraction(0)
              for j in range(n)] for i in range(n)]
        if linalg.rank(tuple(tuple(r) for r in g)) == n:
            return tuple(tuple(r) for r in g)


def random_transport(P: PoissonSuper, rng: random.Random) -> PoissonSuper:
    return transport(P, random_even_invertible(P.basis, rng))


def random_even_law(basis: GradedBasis, rng: random.Random, density: float = 0.4, spread: int = 2) -> BilinearLaw:
    ps, n = basis.parities, basis.dim
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (ps[i] + ps[j]) % 2 == ps[k] and rng.random() < density:
                    entries.append((i, j, k, rng.randint(-spread, spread)))
    return BilinearLaw.from_entries(basis, entries)


def random_even_r(basis: GradedBasis, rng: random.Random, density: float = 0.5) -> Tensor2:
    ps, n = basis.parities, basis.dim
    return Tensor2(basis, {(i, j): rng.randint(-2, 2) for i in range(n) for j in range(n)
                           if ps[i] == ps[j] and rng.random() < density})
