import itertools
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from helpers import grassmann, random_even_invertible, random_even_law, random_even_r, random_transport
from superpoisson.coboundary import aybe, cybe
from superpoisson.fixtures import fixture_a, fixture_b
from superpoisson.formats import Document, parse, serialize
from superpoisson.graded import GradedBasis, Tensor, cyclic, koszul_sign, permute_legs, to_scalar, twist
from superpoisson.structures import check_admissible, check_poisson, depolarize, polarize, transport

SETTINGS = settings(max_examples=60, deadline=None)

parities = st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple)
scalars = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 6))


@st.composite
def tensors(draw, rank, homogeneous=None):
    ps = draw(parities)
    basis = GradedBasis(ps)
    keys = st.tuples(*[st.integers(0, len(ps) - 1)] * rank)
    if homogeneous is not None:
        keys = keys.filter(lambda k: sum(ps[i] for i in k) % 2 == homogeneous)
    entries = draw(st.dictionaries(keys, scalars, max_size=6))
    return Tensor(basis, entries, rank)


@SETTINGS
@given(tensors(2))
def test_twist_is_an_involution(t):
    assert twist(twist(t)) == t


@SETTINGS
@given(tensors(3))
def test_cyclic_has_order_three(t):
    assert cyclic(cyclic(cyclic(t))) == t


@given(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))
def test_koszul_sign_is_symmetric_and_bimultiplicative(p, q, r):
    assert koszul_sign(p, q) == koszul_sign(q, p)
    assert koszul_sign((p + q) % 2, r) == koszul_sign(p, r) * koszul_sign(q, r)
    assert koszul_sign(p, q) ** 2 == 1


@given(scalars, scalars, scalars)
def test_exact_scalars_obey_the_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    if a:
        assert a * (1 / a) == 1
    assert to_scalar(f"{a.numerator}/{a.denominator}") == a


@SETTINGS
@given(st.integers(0, 1).flatmap(lambda p: st.tuples(st.just(p), tensors(2, homogeneous=p))))
def test_twist_preserves_parity(case):
    p, t = case
    assert twist(t).is_homogeneous(p)


@SETTINGS
@given(tensors(3), st.permutations((0, 1, 2)), st.permutations((0, 1, 2)))
def test_leg_permutations_compose(t, s, u):
    s, u = tuple(s), tuple(u)
    assert permute_legs(permute_legs(t, s), u) == permute_legs(t, tuple(s[u[m]] for m in range(3)))


@SETTINGS
@given(tensors(3))
def test_cyclic_is_a_leg_permutation(t):
    assert cyclic(t) == permute_legs(t, (1, 2, 0))


def _yb_algebras():
    return [fixture_a().algebra, fixture_b().algebra, grassmann()]


@SETTINGS
@given(st.integers(0, 2), st.integers(0, 10 ** 6), st.sampled_from([Fraction(2), Fraction(-1), Fraction(1, 3)]))
def test_yang_baxter_maps_scale_quadratically(which, seed, s):
    rng = random.Random(seed)
    P = _yb_algebras()[which]
    r = random_even_r(P.basis, rng)
    assert cybe(P, r * s) == cybe(P, r) * s ** 2
    assert aybe(P, r * s) == aybe(P, r) * s ** 2


@SETTINGS
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_admissible_iff_polarization_is_poisson(seed, n):
    rng = random.Random(seed)
    basis = GradedBasis(tuple(rng.randint(0, 1) for _ in range(n)))
    law = random_even_law(basis, rng, density=rng.choice([0.15, 0.3]), spread=1)
    assert check_admissible(law).ok == check_poisson(polarize(law)).ok


@SETTINGS
@given(st.integers(0, 10 ** 6), st.sampled_from(["a", "grassmann"]))
def test_depolarize_round_trip_on_poisson_algebras(seed, which):
    P = fixture_a().algebra if which == "a" else grassmann()
    Q = random_transport(P, random.Random(seed))
    assert polarize(depolarize(Q)) == Q
    assert check_admissible(depolarize(Q)).ok


@SETTINGS
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_transport_preserves_the_poisson_verdict(seed, n):
    rng = random.Random(seed)
    basis = GradedBasis(tuple(rng.randint(0, 1) for _ in range(n)))
    P = polarize(random_even_law(basis, rng, density=0.3, spread=1))
    g = random_even_invertible(basis, rng)
    assert check_poisson(transport(P, g)).ok == check_poisson(P).ok


@SETTINGS
@given(st.integers(0, 10 ** 6), st.integers(0, 3))
def test_serialized_documents_round_trip(seed, n):
    rng = random.Random(seed)
    basis = GradedBasis(tuple(rng.randint(0, 1) for _ in range(n)))
    P = polarize(random_even_law(basis, rng, spread=3)) if n else None
    doc = Document.of_algebra(P, r=random_even_r(basis, rng)) if n else Document(basis)
    text = serialize(doc)
    again = parse(text)
    assert again == doc and serialize(again) == text


def test_sign_table_exhaustive():
    assert [koszul_sign(p, q) for p, q in itertools.product((0, 1), repeat=2)] == [1, 1, 1, -1]
