"""Dense brute-force reference implementations, written without the package.

Structure constants are nested lists: ``law[i][j][k]`` is the coefficient of e_k in e_i∘e_j,
``co[i][j][k]`` the coefficient of e_j⊗e_k in c(e_i).  Tensors are dicts keyed by index
tuples.  Signs of leg permutations are computed by explicit adjacent swaps.
"""
from fractions import Fraction
from itertools import product as cartesian


def sgn(p, q):
    return -1 if p % 2 and q % 2 else 1


def swap_sign(parities, order):
    """Sign of reordering legs with the given parities into ``order`` by bubble sort."""
    seq = list(order)
    sign = 1
    changed = True
    while changed:
        changed = False
        for a in range(len(seq) - 1):
            if seq[a] > seq[a + 1]:
                sign *= sgn(parities[seq[a]], parities[seq[a + 1]])
                seq[a], seq[a + 1] = seq[a + 1], seq[a]
                changed = True
    return sign


def reorder(t, ps, order):
    """Move leg order[m] to position m, with the Koszul sign."""
    out = {}
    for key, c in t.items():
        legs = [ps[i] for i in key]
        new = tuple(key[o] for o in order)
        out[new] = out.get(new, 0) + swap_sign(legs, order) * c
    return clean(out)


def clean(t):
    return {k: Fraction(v) for k, v in t.items() if v}


def add(*ts, coeffs=None):
    out = {}
    coeffs = coeffs or [1] * len(ts)
    for c, t in zip(coeffs, ts):
        for k, v in t.items():
            out[k] = out.get(k, 0) + c * v
    return clean(out)


def mul(law, x, y):
    """Apply a dense law to vectors given as {index: coeff}."""
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in enumerate(law[i][j]):
                if c:
                    out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def vec(i):
    return {i: Fraction(1)}


def zero_law(n):
    return [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]


def law_from(n, entries):
    law = zero_law(n)
    for i, j, k, c in entries:
        law[i][j][k] += Fraction(c)
    return law


def on_leg(t, leg, ps, op, op_parity, signed=True):
    """Apply op (index -> vector) to one leg; Koszul sign from the legs to its left."""
    out = {}
    for key, c in t.items():
        s = 1
        if signed:
            for m in range(leg):
                s *= sgn(op_parity, ps[key[m]])
        for k, v in op(key[leg]).items():
            new = key[:leg] + (k,) + key[leg + 1:]
            out[new] = out.get(new, 0) + s * c * v
    return clean(out)


def expand(t, leg, co):
    """Replace one leg by a cooperation image (even map, no sign)."""
    out = {}
    for key, c in t.items():
        for (j, k), v in co_image(co, key[leg]).items():
            new = key[:leg] + (j, k) + key[leg + 1:]
            out[new] = out.get(new, 0) + c * v
    return clean(out)


def co_image(co, i):
    n = len(co)
    return {(j, k): co[i][j][k] for j in range(n) for k in range(n) if co[i][j][k]}


def co_apply(co, x):
    out = {}
    for i, a in x.items():
        for key, v in co_image(co, i).items():
            out[key] = out.get(key, 0) + a * v
    return clean(out)


# ---------------------------------------------------------------- algebra axioms

def poisson_holds(ps, br, pr):
    n = len(ps)
    for x, y in cartesian(range(n), repeat=2):
        s = sgn(ps[x], ps[y])
        for k in range(n):
            if br[x][y][k] + s * br[y][x][k]:
                return False
            if pr[x][y][k] - s * pr[y][x][k]:
                return False
            if (br[x][y][k] or pr[x][y][k]) and (ps[x] + ps[y]) % 2 != ps[k]:
                return False
    for x, y, z in cartesian(range(n), repeat=3):
        ex, ey, ez = vec(x), vec(y), vec(z)
        s = sgn(ps[x], ps[y])
        jac = add(mul(br, ex, mul(br, ey, ez)), mul(br, mul(br, ex, ey), ez),
                  mul(br, ey, mul(br, ex, ez)), coeffs=[1, -1, -s])
        if jac:
            return False
        if add(mul(pr, mul(pr, ex, ey), ez), mul(pr, ex, mul(pr, ey, ez)), coeffs=[1, -1]):
            return False
        leib = add(mul(br, ex, mul(pr, ey, ez)), mul(pr, mul(br, ex, ey), ez),
                   mul(pr, ey, mul(br, ex, ez)), coeffs=[1, -1, -s])
        if leib:
            return False
    return True


def _ad(br, x):
    return lambda j: mul(br, vec(x), vec(j))


def _left(pr, x):
    return lambda j: mul(pr, vec(x), vec(j))


def _right(pr, y):
    return lambda j: mul(pr, vec(j), vec(y))


def bialgebra_holds(ps, br, pr, de, De):
    """All super coalgebra axioms and the five compatibilities, evaluated densely."""
    if not poisson_holds(ps, br, pr):
        return False
    n = len(ps)
    for i in range(n):
        for (j, k), c in co_image(de, i).items():
            if (ps[j] + ps[k]) % 2 != ps[i]:
                return False
        for (j, k), c in co_image(De, i).items():
            if (ps[j] + ps[k]) % 2 != ps[i]:
                return False
        d, D = co_image(de, i), co_image(De, i)
        if add(d, reorder(d, ps, (1, 0))):
            return False
        t = expand(d, 1, de)
        if add(t, reorder(t, ps, (1, 2, 0)), reorder(t, ps, (2, 0, 1))):
            return False
        if add(expand(D, 1, De), expand(D, 0, De), coeffs=[1, -1]):
            return False
        if add(D, reorder(D, ps, (1, 0)), coeffs=[1, -1]):
            return False
        lhs = expand(d, 1, De)
        rhs = add(expand(D, 0, de), reorder(expand(D, 1, de), ps, (1, 0, 2)))
        if add(lhs, rhs, coeffs=[1, -1]):
            return False
    for x, y in cartesian(range(n), repeat=2):
        s = sgn(ps[x], ps[y])
        px, py = ps[x], ps[y]

        def ad_t(z, t):
            return add(on_leg(t, 0, ps, _ad(br, z), ps[z]), on_leg(t, 1, ps, _ad(br, z), ps[z]))

        dxy = co_apply(de, mul(br, vec(x), vec(y)))
        if add(dxy, ad_t(x, co_image(de, y)), ad_t(y, co_image(de, x)), coeffs=[1, -1, s]):
            return False
        lhs = co_apply(De, mul(pr, vec(x), vec(y)))
        rhs = add(on_leg(co_image(De, y), 0, ps, _left(pr, x), px),
                  on_leg(co_image(De, x), 1, ps, _right(pr, y), 0, signed=False))
        if add(lhs, rhs, coeffs=[1, -1]):
            return False
        lhs = co_apply(de, mul(pr, vec(x), vec(y)))
        rhs = add(on_leg(co_image(de, x), 0, ps, _left(pr, y), py),
                  on_leg(co_image(de, y), 0, ps, _left(pr, x), px),
                  on_leg(co_image(De, y), 1, ps, _ad(br, x), px),
                  on_leg(co_image(De, x), 1, ps, _ad(br, y), py), coeffs=[s, 1, 1, s])
        if add(lhs, rhs, coeffs=[1, -1]):
            return False
        lhs = co_apply(De, mul(br, vec(x), vec(y)))
        dx = co_image(de, x)
        rhs = add(ad_t(x, co_image(De, y)), on_leg(dx, 0, ps, _left(pr, y), py),
                  on_leg(dx, 1, ps, _left(pr, y), py), coeffs=[1, s, -s])
        if add(lhs, rhs, coeffs=[1, -1]):
            return False
    return True


def p2_structures(b, c, d, k, f, c1, c2):
    """The dense P2 family: e1 even, e2 odd."""
    ps = (0, 1)
    br = law_from(2, [(0, 1, 1, b), (1, 0, 1, -b), (1, 1, 0, c)])
    pr = law_from(2, [(0, 0, 0, k), (0, 1, 1, d), (1, 0, 1, d), (1, 1, 0, f)])
    de = law_from(2, [(0, 1, 1, c1), (1, 0, 1, c2), (1, 1, 0, -c2)])
    De = zero_law(2)
    return ps, br, pr, de, De


def p2_truth(values=(-1, 0, 1)):
    """Every P2 parameter tuple over ``values`` that is a Poisson superbialgebra."""
    return [t for t in cartesian(values, repeat=7) if bialgebra_holds(*p2_structures(*t))]
