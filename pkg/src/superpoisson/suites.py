"""Named verification suites, constructions on documents, and the P2 parameter grid."""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .coalgebra import (check_inf_superbialgebra, check_lie_superbialgebra,
                        check_poisson_bialgebra, dual_bialgebra)
from .coboundary import aybe, coboundary_conditions, cybe, drinfeld_double
from .fixtures import P2_PARAMS, p2_bialgebra
from .formats import Document, FormatError
from .graded import Tensor, to_scalar
from .matched import (bialgebra_matched_pair, bowtie, check_manin_triple, check_matched_pair_poisson,
                      manin_report_for)
from .post import (OOperator, associated_poisson, check_o_operator, check_post_poisson, post_from_o_operator,
                   post_from_quasitriangular, regular_module)
from .report import PreconditionError, Report, Violation, combine
from .representations import semidirect_product
from .structures import check_comm_assoc, check_lie, check_poisson

DEFAULT_GRID_BOUND = 10 ** 6


class UsageError(ValueError):
    """Unknown suite or command, or a document lacking a section the request needs."""


def _need(doc: Document, attr: str, suite: str):
    value = getattr(doc, attr)
    if value is None:
        raise UsageError(f"suite {suite!r} needs the {attr!r} section")
    return value


def tensor_report(name: str, t: Tensor) -> Report:
    """One violation per nonzero entry of a tensor that should vanish."""
    return Report(Violation(name, key, c) for key, c in t.sorted_items())


def _matched(doc):
    return doc.partner if doc.partner is not None else bialgebra_matched_pair(doc.bialgebra())


def _manin(doc):
    if doc.manin is None:
        return manin_report_for(doc.bialgebra())
    m = doc.manin
    return check_manin_triple(doc.algebra(), m.plus, m.minus, m.form)


def _pybe(doc):
    P, r = doc.algebra(), _need(doc, "r", "pybe")
    return combine(tensor_report("pybe.cybe", cybe(P, r)), tensor_report("pybe.aybe", aybe(P, r)))


def operator_of(doc: Document, T=None, weight=None) -> OOperator:
    """The O-operator of a document; ``T`` and ``weight`` override the file's section."""
    module = doc.module if doc.module is not None else regular_module(doc.algebra())
    op = doc.operator
    if T is None:
        if op is None:
            raise UsageError("no operator section and no T given")
        T = op.T
    if weight is None:
        if op is None:
            raise UsageError("no operator section and no weight given")
        weight = op.weight
    return OOperator(module, T, weight)


SUITES = {
    "lie": lambda d: check_lie(d.bracket),
    "assoc": lambda d: check_comm_assoc(d.product),
    "poisson": lambda d: check_poisson(d.algebra()),
    "lie-bialgebra": lambda d: check_lie_superbialgebra(d.bracket, d.cobracket),
    "inf-bialgebra": lambda d: check_inf_superbialgebra(d.product, d.coproduct),
    "poisson-bialgebra": lambda d: check_poisson_bialgebra(d.bialgebra()),
    "matched-pair": lambda d: check_matched_pair_poisson(_matched(d)),
    "manin": _manin,
    "coboundary": lambda d: coboundary_conditions(d.algebra(), _need(d, "r", "coboundary")),
    "pybe": _pybe,
    "o-operator": lambda d: check_o_operator(operator_of(d)),
    "post-poisson": lambda d: check_post_poisson(_need(d, "post", "post-poisson")),
}


def run_suite(doc: Document, suite: str):
    """(report, exit code) with 0 for a clean report and 1 for violations."""
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = SUITES[suite](doc)
    return report, 0 if report.ok else 1


def ybe_report(doc: Document, which: str) -> Report:
    P, r = doc.algebra(), _need(doc, "r", which)
    if which == "cybe":
        return tensor_report("cybe", cybe(P, r))
    if which == "aybe":
        return tensor_report("aybe", aybe(P, r))
    if which == "pybe":
        return _pybe(doc)
    raise UsageError(f"unknown equation {which!r}")


# ---------------------------------------------------------------- constructions

def _identity_or(T, n, m):
    if isinstance(T, str):
        if T != "id":
            raise UsageError(f"T must be 'id' or a matrix, got {T!r}")
        if n != m:
            raise UsageError("T = id needs the carrier to have the algebra's dimension")
        return linalg.identity(n)
    return T


def _post_document(post) -> Document:
    return Document.of_algebra(associated_poisson(post), post=post)


def construct(command: str, docs, T=None, weight=None) -> Document:
    """Run a construction on parsed documents and return the result as a document."""
    docs = list(docs)
    if command == "bowtie" and len(docs) == 1:
        (doc,) = docs
        m = _need(doc, "partner", "bowtie")
        rep = check_matched_pair_poisson(m)
        if not rep.ok:
            raise PreconditionError("not a matched pair", rep)
        return Document.of_algebra(bowtie(m))
    if len(docs) != 1:
        raise UsageError(f"{command} takes exactly one input file")
    (doc,) = docs
    if command == "double":
        b, r = drinfeld_double(doc.bialgebra())
        return Document.of_bialgebra(b, r=r)
    if command == "dualize":
        return Document.of_bialgebra(dual_bialgebra(doc.bialgebra()))
    if command == "semidirect":
        rep = doc.representation()
        if rep is None:
            raise UsageError("semidirect needs the 'rep' section")
        return Document.of_algebra(semidirect_product(rep))
    if command == "post":
        module = doc.module if doc.module is not None else regular_module(doc.algebra())
        if T is not None:
            T = _identity_or(T, doc.dim, module.carrier.dim)
        o = operator_of(doc, T, None if weight is None else to_scalar(weight))
        return _post_document(post_from_o_operator(o))
    if command == "post-quasi":
        r = _need(doc, "r", "post-quasi")
        return _post_document(post_from_quasitriangular(doc.bialgebra(), r))
    raise UsageError(f"unknown construction {command!r}")


# ---------------------------------------------------------------- grid search

GRID_SCHEMA = "superpoisson-grid/1"
GRID_PREDICATES = ("lie", "assoc", "poisson", "lie-bialgebra", "inf-bialgebra", "poisson-bialgebra",
                   "matched-pair", "manin")


@dataclass(frozen=True)
class GridSpec:
    """Finite value lists for the P2 parameters (b, c, d, k, f, c1, c2) and a suite name.

    Parameters left out are held at 0.  Values are deduplicated and sorted, and tuples are
    enumerated lexicographically in the parameter order above.
    """

    values: dict
    predicate: str = "poisson-bialgebra"
    bound: int = DEFAULT_GRID_BOUND

    def __post_init__(self):
        unknown = set(self.values) - set(P2_PARAMS)
        if unknown:
            raise UsageError(f"unknown parameters {sorted(unknown)}; the family has {', '.join(P2_PARAMS)}")
        if self.predicate not in GRID_PREDICATES:
            raise UsageError(f"predicate must be one of {', '.join(GRID_PREDICATES)}")
        clean = {}
        for name in P2_PARAMS:
            vals = self.values.get(name, (0,))
            if not vals:
                raise UsageError(f"parameter {name} has an empty value list")
            clean[name] = tuple(sorted({to_scalar(v) for v in vals}))
        object.__setattr__(self, "values", clean)

    @property
    def size(self) -> int:
        n = 1
        for vals in self.values.values():
            n *= len(vals)
        return n

    def tuples(self):
        return itertools.product(*(self.values[name] for name in P2_PARAMS))


def grid_verdict(predicate: str, values) -> bool:
    doc = Document.of_bialgebra(p2_bialgebra(**dict(zip(P2_PARAMS, values))))
    return SUITES[predicate](doc).ok


def _verdicts(args):
    predicate, chunk = args
    return [grid_verdict(predicate, t) for t in chunk]


def grid_search(spec: GridSpec, jobs: int = 1, chunk: int = 256) -> list:
    """Every grid tuple whose P2 bialgebra passes the predicate, in lexicographic order."""
    if spec.size > spec.bound:
        raise UsageError(f"grid has {spec.size} tuples, over the bound {spec.bound}")
    tuples = list(spec.tuples())
    if jobs <= 1:
        return [t for t in tuples if grid_verdict(spec.predicate, t)]
    chunks = [tuples[i:i + chunk] for i in range(0, len(tuples), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        flags = [f for part in pool.map(_verdicts, [(spec.predicate, c) for c in chunks]) for f in part]
    return [t for t, ok in zip(tuples, flags) if ok]


def parse_grid(data: bytes | str) -> GridSpec:
    """Read a grid file: {"schema", "parameters": {name: [values]}, "predicate", "bound"?}."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(obj, dict) or obj.get("schema") != GRID_SCHEMA:
        raise FormatError("schema", f"expected {GRID_SCHEMA!r}")
    extra = set(obj) - {"schema", "parameters", "predicate", "bound"}
    if extra:
        raise FormatError("", f"unknown keys {sorted(extra)}")
    params = obj.get("parameters", {})
    if not isinstance(params, dict):
        raise FormatError("parameters", "expected an object of value lists")
    values = {}
    for name, vals in params.items():
        if not isinstance(vals, list):
            raise FormatError(f"parameters.{name}", "expected a list")
        out = []
        for n, v in enumerate(vals):
            if isinstance(v, (float, bool)):
                raise FormatError(f"parameters.{name}[{n}]", f"not an exact scalar: {v!r}")
            try:
                out.append(to_scalar(v))
            except (TypeError, ValueError, ZeroDivisionError):
                raise FormatError(f"parameters.{name}[{n}]", f"not an exact scalar: {v!r}") from None
        values[name] = out
    bound = obj.get("bound", DEFAULT_GRID_BOUND)
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise FormatError("bound", "must be a non-negative integer")
    return GridSpec(values, obj.get("predicate", "poisson-bialgebra"), bound)


# ---------------------------------------------------------------- records

def encode(value):
    """JSON-ready form of a violation witness or discrepancy."""
    if isinstance(value, Tensor):
        return [[*key, str(c)] for key, c in value.sorted_items()]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, (tuple, list)):
        return [encode(v) for v in value]
    if value is None or isinstance(value, (str, bool)):
        return value
    return str(value)


def violation_record(v: Violation, **context) -> dict:
    return {"record": "violation", **context, "law": v.law, "witness": encode(v.witness),
            "discrepancy": encode(v.discrepancy)}
