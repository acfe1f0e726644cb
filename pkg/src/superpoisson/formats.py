"""JSON text format for algebras, bialgebras, r-matrices, modules and operators.

A document is a JSON object::

    {
      "schema": "superpoisson/1",
      "dim": 2,
      "parity": [0, 1],
      "bracket":   [[i, j, k, "c"], ...],     # {e_i, e_j} has c on e_k
      "product":   [[i, j, k, "c"], ...],
      "cobracket": [[i, j, k, "c"], ...],     # δ(e_i) has c on e_j⊗e_k
      "coproduct": [[i, j, k, "c"], ...],
      "r":         [[i, j, "c"], ...],
      "rep":       {"parity": [...], "psi_bracket": [[i, row, col, "c"]], "psi_product": [...]},
      "module":    {"parity": [...], "bracket": [...], "product": [...],
                    "psi_bracket": [...], "psi_product": [...]},
      "operator":  {"T": [[row, col, "c"], ...], "weight": "c"},
      "partner":   {"parity": [...], "bracket": [...], "product": [...],
                    "rho1": [...], "phi1": [...], "rho2": [...], "phi2": [...]},
      "post":      {"bracket": [...], "diamond": [...], "dot": [...], "succ": [...]},
      "manin":     {"plus": [...], "minus": [...], "form": [[i, j, "c"], ...]}
    }

Indices are 0-based, scalars are strings ``"p/q"`` or ``"p"`` (plain integers are also
accepted).  Every section other than ``schema``, ``dim`` and ``parity`` is optional; missing
operations and cooperations are zero.  :func:`serialize` writes the canonical form: fixed
key order, sorted merged entries, reduced fractions, zero entries dropped.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .coalgebra import Cooperation, PoissonBialgebra
from .graded import GradedBasis, Tensor, Tensor2, to_scalar
from .linalg import Matrix
from .matched import BilinearForm, MatchedPairData
from .post import ModulePoissonData, PostPoisson
from .representations import PoissonRep, RepMap
from .structures import BilinearLaw, PoissonSuper

SCHEMA = "superpoisson/1"
TOP_KEYS = ("schema", "dim", "parity", "bracket", "product", "cobracket", "coproduct", "r",
            "rep", "module", "operator", "partner", "post", "manin")
POST_OPS = ("bracket", "diamond", "dot", "succ")


class FormatError(ValueError):
    """A document could not be read; ``location`` says where."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
        self.message = message


@dataclass(frozen=True)
class Operator:
    T: Matrix
    weight: Fraction


@dataclass(frozen=True)
class ManinSpec:
    plus: tuple
    minus: tuple
    form: BilinearForm


@dataclass(frozen=True)
class Document:
    """Everything a file can hold, over the main basis ``basis``."""

    basis: GradedBasis
    bracket: BilinearLaw | None = None
    product: BilinearLaw | None = None
    cobracket: Cooperation | None = None
    coproduct: Cooperation | None = None
    r: Tensor | None = None
    rep_bracket: RepMap | None = None
    rep_product: RepMap | None = None
    module: ModulePoissonData | None = None
    operator: Operator | None = None
    partner: MatchedPairData | None = None
    post: PostPoisson | None = None
    manin: ManinSpec | None = None

    def __post_init__(self):
        if self.bracket is None:
            object.__setattr__(self, "bracket", BilinearLaw.zero(self.basis))
        if self.product is None:
            object.__setattr__(self, "product", BilinearLaw.zero(self.basis))
        if self.cobracket is None:
            object.__setattr__(self, "cobracket", Cooperation.zero(self.basis))
        if self.coproduct is None:
            object.__setattr__(self, "coproduct", Cooperation.zero(self.basis))

    @property
    def dim(self) -> int:
        return self.basis.dim

    def algebra(self) -> PoissonSuper:
        return PoissonSuper(self.bracket, self.product)

    def bialgebra(self) -> PoissonBialgebra:
        return PoissonBialgebra(self.algebra(), self.cobracket, self.coproduct)

    def representation(self) -> PoissonRep | None:
        if self.rep_bracket is None:
            return None
        return PoissonRep(self.algebra(), self.rep_bracket, self.rep_product)

    @classmethod
    def of_algebra(cls, P: PoissonSuper, **extra) -> "Document":
        return cls(P.basis, P.bracket, P.product, **extra)

    @classmethod
    def of_bialgebra(cls, b: PoissonBialgebra, **extra) -> "Document":
        P = b.algebra
        return cls(P.basis, P.bracket, P.product, b.cobracket, b.coproduct, **extra)

    def with_(self, **changes) -> "Document":
        return replace(self, **changes)


# ---------------------------------------------------------------- reading

def _scalar(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise FormatError(where, f"inexact scalar {value!r}; write it as a string \"p/q\"")
    try:
        return to_scalar(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise FormatError(where, f"not an exact scalar: {value!r}") from None


def _index(value, bound: int, where: str, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(where, f"{what} must be an integer, got {value!r}")
    if not 0 <= value < bound:
        raise FormatError(where, f"{what} {value} out of range for dimension {bound}")
    return value


def _rows(raw, width: int, where: str):
    if not isinstance(raw, list):
        raise FormatError(where, "expected a list of entries")
    for n, row in enumerate(raw):
        at = f"{where}[{n}]"
        if not isinstance(row, list) or len(row) != width:
            raise FormatError(at, f"expected an entry of {width} items")
        yield at, row


def _parities(raw, where: str) -> GradedBasis:
    if not isinstance(raw, list) or any(p not in (0, 1) or isinstance(p, bool) for p in raw):
        raise FormatError(where, "parity must be a list of 0/1")
    return GradedBasis(tuple(raw))


def _law(raw, basis: GradedBasis, where: str) -> BilinearLaw:
    ps, n = basis.parities, basis.dim
    entries = []
    for at, (i, j, k, c) in _rows(raw, 4, where):
        i, j, k = (_index(v, n, at, "index") for v in (i, j, k))
        c = _scalar(c, at)
        if c and (ps[i] + ps[j]) % 2 != ps[k]:
            raise FormatError(at, f"pair ({i},{j}) maps to e{k} of the wrong parity; operations must be even")
        entries.append((i, j, k, c))
    return BilinearLaw.from_entries(basis, entries)


def _coop(raw, basis: GradedBasis, where: str) -> Cooperation:
    ps, n = basis.parities, basis.dim
    entries = []
    for at, (i, j, k, c) in _rows(raw, 4, where):
        i, j, k = (_index(v, n, at, "index") for v in (i, j, k))
        c = _scalar(c, at)
        if c and (ps[j] + ps[k]) % 2 != ps[i]:
            raise FormatError(at, f"image of e{i} has a term e{j}⊗e{k} of the wrong parity")
        entries.append((i, j, k, c))
    return Cooperation.from_entries(basis, entries)


def _tensor2(raw, basis: GradedBasis, where: str) -> Tensor2:
    n = basis.dim
    acc = {}
    for at, (i, j, c) in _rows(raw, 3, where):
        key = (_index(i, n, at, "index"), _index(j, n, at, "index"))
        acc[key] = acc.get(key, 0) + _scalar(c, at)
    t = Tensor2(basis, acc)
    if not t.is_homogeneous():
        raise FormatError(where, "tensor is not parity-homogeneous")
    return t


def _repmap(raw, source: GradedBasis, carrier: GradedBasis, where: str) -> RepMap:
    sp, cp = source.parities, carrier.parities
    entries = []
    for at, (i, row, col, c) in _rows(raw, 4, where):
        i = _index(i, source.dim, at, "source index")
        row = _index(row, carrier.dim, at, "row")
        col = _index(col, carrier.dim, at, "column")
        c = _scalar(c, at)
        if c and (sp[i] + cp[col]) % 2 != cp[row]:
            raise FormatError(at, f"action of e{i} sends column {col} to row {row} of the wrong parity")
        entries.append((i, row, col, c))
    return RepMap.from_entries(source, carrier, entries)


def _matrix(raw, rows: GradedBasis, cols: GradedBasis, where: str) -> Matrix:
    out = [[Fraction(0)] * cols.dim for _ in range(rows.dim)]
    for at, (i, j, c) in _rows(raw, 3, where):
        i = _index(i, rows.dim, at, "row")
        j = _index(j, cols.dim, at, "column")
        c = _scalar(c, at)
        if c and rows.parities[i] != cols.parities[j]:
            raise FormatError(at, f"entry ({i},{j}) joins vectors of different parity; maps must be even")
        out[i][j] += c
    return tuple(tuple(r) for r in out)


def _section(raw, where: str, allowed) -> dict:
    if not isinstance(raw, dict):
        raise FormatError(where, "expected an object")
    extra = set(raw) - set(allowed)
    if extra:
        raise FormatError(where, f"unknown keys {sorted(extra)}")
    return raw


def _sub_algebra(sec: dict, where: str) -> PoissonSuper:
    if "parity" not in sec:
        raise FormatError(where, "missing parity")
    basis = _parities(sec["parity"], f"{where}.parity")
    return PoissonSuper(_law(sec.get("bracket", []), basis, f"{where}.bracket"),
                        _law(sec.get("product", []), basis, f"{where}.product"))


def _index_list(raw, bound: int, where: str) -> tuple:
    if not isinstance(raw, list):
        raise FormatError(where, "expected a list of indices")
    return tuple(_index(v, bound, f"{where}[{n}]", "index") for n, v in enumerate(raw))


def load(obj) -> Document:
    """Build a :class:`Document` from decoded JSON."""
    top = _section(obj, "", TOP_KEYS)
    if top.get("schema") != SCHEMA:
        raise FormatError("schema", f"expected {SCHEMA!r}, got {top.get('schema')!r}")
    for key in ("dim", "parity"):
        if key not in top:
            raise FormatError(key, "missing")
    dim = top["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise FormatError("dim", "must be a non-negative integer")
    basis = _parities(top["parity"], "parity")
    if basis.dim != dim:
        raise FormatError("parity", f"has {basis.dim} entries but dim is {dim}")
    doc = {"basis": basis}
    for key in ("bracket", "product"):
        if key in top:
            doc[key] = _law(top[key], basis, key)
    for key in ("cobracket", "coproduct"):
        if key in top:
            doc[key] = _coop(top[key], basis, key)
    if "r" in top:
        doc["r"] = _tensor2(top["r"], basis, "r")
    if "rep" in top:
        sec = _section(top["rep"], "rep", ("parity", "psi_bracket", "psi_product"))
        if "parity" not in sec:
            raise FormatError("rep", "missing parity")
        carrier = _parities(sec["parity"], "rep.parity")
        doc["rep_bracket"] = _repmap(sec.get("psi_bracket", []), basis, carrier, "rep.psi_bracket")
        doc["rep_product"] = _repmap(sec.get("psi_product", []), basis, carrier, "rep.psi_product")
    algebra = PoissonSuper(doc.get("bracket") or BilinearLaw.zero(basis),
                           doc.get("product") or BilinearLaw.zero(basis))
    if "module" in top:
        sec = _section(top["module"], "module", ("parity", "bracket", "product", "psi_bracket", "psi_product"))
        V = _sub_algebra(sec, "module")
        doc["module"] = ModulePoissonData(
            algebra, V,
            _repmap(sec.get("psi_bracket", []), basis, V.basis, "module.psi_bracket"),
            _repmap(sec.get("psi_product", []), basis, V.basis, "module.psi_product"))
    if "operator" in top:
        sec = _section(top["operator"], "operator", ("T", "weight"))
        carrier = doc["module"].carrier if "module" in doc else basis
        T = _matrix(sec.get("T", []), basis, carrier, "operator.T")
        doc["operator"] = Operator(T, _scalar(sec.get("weight", "0"), "operator.weight"))
    if "partner" in top:
        sec = _section(top["partner"], "partner", ("parity", "bracket", "product", "rho1", "phi1", "rho2", "phi2"))
        P2 = _sub_algebra(sec, "partner")
        b2 = P2.basis
        doc["partner"] = MatchedPairData(
            algebra, P2,
            _repmap(sec.get("rho1", []), basis, b2, "partner.rho1"),
            _repmap(sec.get("phi1", []), basis, b2, "partner.phi1"),
            _repmap(sec.get("rho2", []), b2, basis, "partner.rho2"),
            _repmap(sec.get("phi2", []), b2, basis, "partner.phi2"))
    if "post" in top:
        sec = _section(top["post"], "post", POST_OPS)
        doc["post"] = PostPoisson(*(_law(sec.get(op, []), basis, f"post.{op}") for op in POST_OPS))
    if "manin" in top:
        sec = _section(top["manin"], "manin", ("plus", "minus", "form"))
        gram = [[Fraction(0)] * dim for _ in range(dim)]
        for at, (i, j, c) in _rows(sec.get("form", []), 3, "manin.form"):
            gram[_index(i, dim, at, "index")][_index(j, dim, at, "index")] += _scalar(c, at)
        doc["manin"] = ManinSpec(_index_list(sec.get("plus", []), dim, "manin.plus"),
                                 _index_list(sec.get("minus", []), dim, "manin.minus"),
                                 BilinearForm(basis, gram))
    return Document(**doc)


def parse(data: bytes | str) -> Document:
    """Decode UTF-8 JSON text into a :class:`Document`, with located errors."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"byte {exc.start}", "invalid UTF-8") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return load(obj)


# ---------------------------------------------------------------- writing

def scalar_text(c) -> str:
    return str(Fraction(c))


def _law_rows(law: BilinearLaw) -> list:
    return [[i, j, k, scalar_text(c)] for i, j, k, c in law.entries()]


def _coop_rows(c: Cooperation) -> list:
    return [[i, j, k, scalar_text(v)] for i, j, k, v in c.entries()]


def _rep_rows(rep: RepMap) -> list:
    return [[i, r, c, scalar_text(v)] for i, r, c, v in rep.entries()]


def _matrix_rows(m: Matrix) -> list:
    return [[i, j, scalar_text(v)] for i, row in enumerate(m) for j, v in enumerate(row) if v]


def _sub_algebra_obj(P: PoissonSuper) -> dict:
    out = {"parity": list(P.basis.parities)}
    for key, law in (("bracket", P.bracket), ("product", P.product)):
        if not law.is_zero():
            out[key] = _law_rows(law)
    return out


def dump(doc: Document) -> dict:
    """The canonical JSON object for ``doc``."""
    out = {"schema": SCHEMA, "dim": doc.dim, "parity": list(doc.basis.parities)}
    for key in ("bracket", "product"):
        law = getattr(doc, key)
        if not law.is_zero():
            out[key] = _law_rows(law)
    for key in ("cobracket", "coproduct"):
        c = getattr(doc, key)
        if not c.is_zero():
            out[key] = _coop_rows(c)
    if doc.r is not None:
        out["r"] = [[i, j, scalar_text(c)] for (i, j), c in doc.r.sorted_items()]
    if doc.rep_bracket is not None:
        sec = {"parity": list(doc.rep_bracket.carrier.parities)}
        for key, rep in (("psi_bracket", doc.rep_bracket), ("psi_product", doc.rep_product)):
            if rep is not None and rep.entries():
                sec[key] = _rep_rows(rep)
        out["rep"] = sec
    if doc.module is not None:
        m = doc.module
        sec = _sub_algebra_obj(m.module)
        for key, rep in (("psi_bracket", m.psi_bracket), ("psi_product", m.psi_product)):
            if rep.entries():
                sec[key] = _rep_rows(rep)
        out["module"] = sec
    if doc.operator is not None:
        sec = {}
        rows = _matrix_rows(doc.operator.T)
        if rows:
            sec["T"] = rows
        sec["weight"] = scalar_text(doc.operator.weight)
        out["operator"] = sec
    if doc.partner is not None:
        m = doc.partner
        sec = _sub_algebra_obj(m.p2)
        for key in ("rho1", "phi1", "rho2", "phi2"):
            rows = _rep_rows(getattr(m, key))
            if rows:
                sec[key] = rows
        out["partner"] = sec
    if doc.post is not None:
        sec = {}
        for op in POST_OPS:
            law = getattr(doc.post, op)
            if not law.is_zero():
                sec[op] = _law_rows(law)
        out["post"] = sec
    if doc.manin is not None:
        out["manin"] = {"plus": sorted(doc.manin.plus), "minus": sorted(doc.manin.minus),
                        "form": _matrix_rows(doc.manin.form.gram)}
    return out


def _text(value, indent: int) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(f"{pad}  {json.dumps(k)}: {_text(v, indent + 1)}" for k, v in value.items())
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, list) and value and isinstance(value[0], list):
        inner = ",\n".join(f"{pad}  {json.dumps(v, ensure_ascii=False)}" for v in value)
        return "[\n" + inner + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def serialize(doc: Document) -> str:
    """Canonical text: the same document always gives the same bytes."""
    return _text(dump(doc), 0) + "\n"


def read_file(path) -> Document:
    with open(path, "rb") as fh:
        return parse(fh.read())


def write_file(path, doc: Document) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))
