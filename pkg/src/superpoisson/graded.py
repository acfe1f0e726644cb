"""Exact scalars, Z2-graded bases, Koszul signs and sparse tensors.

Every tensor lives over a single :class:`GradedBasis`; an entry is keyed by a
tuple of basis indices (one per leg).  Scalars are always ``Fraction``.
"""
from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping

Scalar = Fraction

_PAIRING = contextvars.ContextVar("superpoisson_pairing", default="koszul")
PAIRINGS = ("koszul", "plain")


def to_scalar(value) -> Fraction:
    """Coerce an int, rational or ``"p/q"`` string to ``Fraction``; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact scalar: {value!r}")


def koszul_sign(p: int, q: int) -> int:
    """(-1)^{pq} for parities p, q."""
    return -1 if (p & q) else 1


def pairing_convention() -> str:
    return _PAIRING.get()


@contextmanager
def use_pairing(name: str):
    """Temporarily switch how tensor legs are paired with dual legs."""
    if name not in PAIRINGS:
        raise ValueError(f"unknown pairing convention {name!r}")
    token = _PAIRING.set(name)
    try:
        yield
    finally:
        _PAIRING.reset(token)


def pairing_sign(p_left: int, p_right: int) -> int:
    """Sign picked up when a dual leg of parity p_left passes a leg of parity p_right."""
    if _PAIRING.get() == "plain":
        return 1
    return koszul_sign(p_left, p_right)


@dataclass(frozen=True)
class GradedBasis:
    """A homogeneous basis e_0..e_{n-1}; ``parities[i]`` is |e_i|."""

    parities: tuple

    def __post_init__(self):
        ps = tuple(int(p) for p in self.parities)
        if any(p not in (0, 1) for p in ps):
            raise ValueError("parities must be 0 or 1")
        object.__setattr__(self, "parities", ps)

    @property
    def dim(self) -> int:
        return len(self.parities)

    def __len__(self):
        return len(self.parities)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def vector(self, i: int) -> "Element":
        if not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range for dim {self.dim}")
        return Element(self, {(i,): Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def __add__(self, other: "GradedBasis") -> "GradedBasis":
        return GradedBasis(self.parities + other.parities)


class Tensor:
    """Sparse homogeneous-or-not tensor with ``rank`` legs over one basis."""

    __slots__ = ("basis", "rank", "_entries", "_hash")

    def __init__(self, basis: GradedBasis, entries: Mapping | Iterable = (), rank: int | None = None):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for key, value in items:
            key = (key,) if isinstance(key, int) else tuple(key)
            c = to_scalar(value)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        if rank is None:
            rank = getattr(type(self), "RANK", None)
        if rank is None:
            rank = len(next(iter(clean))) if clean else 1
        for key in clean:
            if len(key) != rank:
                raise ValueError(f"entry {key} does not have {rank} legs")
            for i in key:
                if not 0 <= i < basis.dim:
                    raise IndexError(f"index {i} out of range for dim {basis.dim}")
        self.basis = basis
        self.rank = rank
        self._entries = clean
        self._hash = None

    @classmethod
    def _raw(cls, basis, rank, entries):
        # trusted constructor: entries already nonzero Fractions keyed by tuples
        obj = object.__new__(_RANKED.get(rank, Tensor))
        obj.basis = basis
        obj.rank = rank
        obj._entries = entries
        obj._hash = None
        return obj

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def __getitem__(self, key):
        key = (key,) if isinstance(key, int) else tuple(key)
        return self._entries.get(key, Fraction(0))

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def _check(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if other.basis != self.basis or other.rank != self.rank:
            raise ValueError("tensors live over different bases or ranks")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._entries)
        for k, v in other._entries.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Tensor._raw(self.basis, self.rank, out)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Tensor._raw(self.basis, self.rank, {k: -v for k, v in self._entries.items()})

    def __mul__(self, scalar):
        c = to_scalar(scalar)
        if not c:
            return Tensor._raw(self.basis, self.rank, {})
        return Tensor._raw(self.basis, self.rank, {k: c * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.basis == other.basis and self.rank == other.rank and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, self.rank, frozenset(self._entries.items())))
        return self._hash

    def key_parity(self, key) -> int:
        ps = self.basis.parities
        return sum(ps[i] for i in key) & 1

    def parity(self):
        """Total parity if homogeneous (zero counts as even), else ``None``."""
        found = {self.key_parity(k) for k in self._entries}
        if not found:
            return 0
        return found.pop() if len(found) == 1 else None

    def is_homogeneous(self, p: int | None = None) -> bool:
        found = {self.key_parity(k) for k in self._entries}
        if p is None:
            return len(found) <= 1
        return found <= {p}

    def sorted_items(self):
        return sorted(self._entries.items())

    def __repr__(self):
        terms = " + ".join(f"{v}*e{list(k)}" for k, v in self.sorted_items()) or "0"
        return f"{type(self).__name__}({terms})"


class Element(Tensor):
    RANK = 1

    def __init__(self, basis: GradedBasis, coords: Mapping | Iterable = ()):
        if not isinstance(coords, Mapping):
            coords = list(coords)
            if coords and not isinstance(coords[0], tuple):
                if len(coords) != basis.dim:
                    raise ValueError("dense coordinates must have length dim")
                coords = {(i,): c for i, c in enumerate(coords)}
        super().__init__(basis, coords, 1)

    @property
    def coords(self) -> tuple:
        return tuple(self[i] for i in range(self.basis.dim))


class Tensor2(Tensor):
    RANK = 2


class Tensor3(Tensor):
    RANK = 3


_RANKED = {1: Element, 2: Tensor2, 3: Tensor3}


def make_tensor(basis: GradedBasis, entries, rank: int) -> Tensor:
    cls = _RANKED.get(rank)
    if cls is None:
        return Tensor(basis, entries, rank)
    if cls is Element:
        return Element(basis, dict(entries) if not isinstance(entries, Mapping) else entries)
    return cls(basis, entries)


def zero_tensor(basis: GradedBasis, rank: int) -> Tensor:
    return Tensor._raw(basis, rank, {})


def accumulate(basis: GradedBasis, rank: int, acc: dict) -> Tensor:
    """Wrap a dict of (key -> Fraction) sums, dropping zeros."""
    return Tensor._raw(basis, rank, {k: v for k, v in acc.items() if v})


def tensor(*factors: Tensor) -> Tensor:
    """Outer product a ⊗ b ⊗ ... (no sign: legs keep their order)."""
    basis = factors[0].basis
    current = {(): Fraction(1)}
    for f in factors:
        if f.basis != basis:
            raise ValueError("factors live over different bases")
        current = {k + k2: v * v2 for k, v in current.items() for k2, v2 in f.items()}
    rank = sum(f.rank for f in factors)
    return Tensor._raw(basis, rank, {k: v for k, v in current.items() if v})


def permute_legs(t: Tensor, order) -> Tensor:
    """Leg m of the result is leg ``order[m]`` of ``t``, with the Koszul sign."""
    order = tuple(order)
    if sorted(order) != list(range(t.rank)):
        raise ValueError("order must be a permutation of the legs")
    ps = t.basis.parities
    out = {}
    for key, v in t.items():
        sign = 1
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                if order[a] > order[b] and ps[key[order[a]]] and ps[key[order[b]]]:
                    sign = -sign
        out[tuple(key[o] for o in order)] = out.get(tuple(key[o] for o in order), 0) + sign * v
    return accumulate(t.basis, t.rank, out)


def twist(t: Tensor) -> Tensor:
    """τ(x⊗y) = (-1)^{|x||y|} y⊗x."""
    if t.rank != 2:
        raise ValueError("twist acts on 2-tensors")
    return permute_legs(t, (1, 0))


def cyclic(t: Tensor) -> Tensor:
    """ξ(x⊗y⊗z) = (-1)^{|x|(|y|+|z|)} y⊗z⊗x."""
    if t.rank != 3:
        raise ValueError("cyclic acts on 3-tensors")
    return permute_legs(t, (1, 2, 0))


def act_on_leg(t: Tensor, leg: int, op: Callable[[int], Tensor], op_parity: int = 0, koszul: bool = True) -> Tensor:
    """Apply a linear map (given on basis vectors) to one leg.

    With ``koszul`` the map of parity ``op_parity`` picks up (-1)^{op_parity * |legs before|}.
    """
    ps = t.basis.parities
    out = {}
    cache = {}
    for key, v in t.items():
        i = key[leg]
        img = cache.get(i)
        if img is None:
            img = cache[i] = op(i)
        if not img:
            continue
        if koszul and op_parity and sum(ps[j] for j in key[:leg]) & 1:
            v = -v
        head, tail = key[:leg], key[leg + 1:]
        for k2, c in img.items():
            nk = head + k2 + tail
            out[nk] = out.get(nk, 0) + v * c
    return accumulate(t.basis, t.rank, out) if out else zero_tensor(t.basis, t.rank)


def expand_leg(t: Tensor, leg: int, op: Callable[[int], Tensor], out_rank: int) -> Tensor:
    """Replace one leg by the image of an even map into m-tensors, e.g. (id⊗δ)."""
    out = {}
    cache = {}
    for key, v in t.items():
        i = key[leg]
        img = cache.get(i)
        if img is None:
            img = cache[i] = op(i)
        head, tail = key[:leg], key[leg + 1:]
        for k2, c in img.items():
            nk = head + k2 + tail
            out[nk] = out.get(nk, 0) + v * c
    return accumulate(t.basis, out_rank, out)


def pair_dual(a: Tensor, x: Tensor) -> Fraction:
    """⟨a, x⟩ for a over the dual basis of x's basis, coordinate pairing per leg.

    For several legs the active convention applies: under ``koszul``,
    ⟨a1⊗a2, x1⊗x2⟩ = (-1)^{|a2||x1|}⟨a1,x1⟩⟨a2,x2⟩.
    """
    if a.basis.dim != x.basis.dim or a.basis.parities != x.basis.parities:
        raise ValueError("dual pairing needs bases of equal dimension and parities")
    if a.rank != x.rank:
        raise ValueError("dual pairing needs equal ranks")
    total = Fraction(0)
    ps = x.basis.parities
    for key, v in a.items():
        w = x[key]
        if w:
            total += v * w * leg_pairing_sign(key, ps)
    return total


def leg_pairing_sign(key, parities) -> int:
    """Sign for pairing a dual tensor entry with the same-index primal entry."""
    sign = 1
    n = len(key)
    for j in range(1, n):
        for i in range(j):
            sign *= pairing_sign(parities[key[j]], parities[key[i]])
    return sign
