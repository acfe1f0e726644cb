import json
import subprocess
import sys

import pytest

from helpers import P2_TRUTH, grassmann
from superpoisson import linalg
from superpoisson.cli import main
from superpoisson.coalgebra import check_poisson_bialgebra
from superpoisson.fixtures import FIXTURE_A, P2_PARAMS, fixture_a, fixture_b, p2_bialgebra
from superpoisson.formats import Document, FormatError, ManinSpec, Operator, parse, read_file, serialize, write_file
from superpoisson.graded import GradedBasis, Tensor2
from superpoisson.matched import MatchedPairData, bialgebra_matched_pair, standard_form
from superpoisson.post import ModulePoissonData, PostPoisson
from superpoisson.structures import BilinearLaw
from superpoisson.representations import RepMap, adjoint_rep
from superpoisson.suites import GridSpec, SUITES, UsageError, grid_search, parse_grid, run_suite

A, B = fixture_a(), fixture_b()
P2 = A.basis


def _doc_a(**extra):
    return Document.of_bialgebra(A, **extra)


def _write(tmp_path, name, doc):
    path = tmp_path / name
    write_file(path, doc)
    return str(path)


def _json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_fixture_a_file_parses_to_a_bialgebra():
    doc = parse(serialize(_doc_a()))
    assert check_poisson_bialgebra(doc.bialgebra()).ok
    assert doc.bialgebra().cobracket == A.cobracket


def test_canonical_text_shape():
    text = serialize(_doc_a())
    obj = json.loads(text)
    assert obj["schema"] == "superpoisson/1" and obj["dim"] == 2 and obj["parity"] == [0, 1]
    assert obj["bracket"] == [[1, 1, 0, "1"]]
    assert "coproduct" not in obj
    assert text.endswith("}\n")


def test_round_trip_is_byte_identical():
    D = p2_bialgebra(*P2_TRUTH[5])
    module = ModulePoissonData(A.algebra, grassmann(), RepMap.zero(P2, grassmann().basis),
                               RepMap.zero(P2, grassmann().basis))
    docs = [
        _doc_a(r=Tensor2(P2, {(1, 1): "2/4"})),
        Document.of_bialgebra(D),
        Document(GradedBasis(())),
        _doc_a(rep_bracket=adjoint_rep(A.algebra).psi_bracket, rep_product=adjoint_rep(A.algebra).psi_product),
        _doc_a(module=module, operator=Operator(linalg.zeros(2, 4), "1/3")),
        _doc_a(partner=bialgebra_matched_pair(A)),
        _doc_a(manin=ManinSpec((0,), (1,), standard_form(GradedBasis((0,))))),
    ]
    for doc in docs:
        text = serialize(doc)
        assert serialize(parse(text)) == text
        assert serialize(parse(text.encode("utf-8"))) == text


def test_canonicalization_is_idempotent():
    messy = json.dumps({"dim": 2, "schema": "superpoisson/1", "parity": [0, 1],
                        "product": [[1, 0, 1, "2/2"], [0, 0, 0, 1], [0, 1, 1, "1"], [0, 0, 0, "0"]],
                        "bracket": [[1, 1, 0, "3/6"], [1, 1, 0, "1/2"]]})
    once = serialize(parse(messy))
    assert serialize(parse(once)) == once
    obj = json.loads(once)
    assert obj["bracket"] == [[1, 1, 0, "1"]]
    assert obj["product"] == [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]


def test_file_helpers(tmp_path):
    path = _write(tmp_path, "a.json", _doc_a())
    assert read_file(path) == parse(serialize(_doc_a()))


@pytest.mark.parametrize("obj,location,fragment", [
    ({"bracket": [[0, 1, 0, "1"]]}, "bracket[0]", "pair (0,1)"),
    ({"cobracket": [[0, 0, 1, "1"]]}, "cobracket[0]", "wrong parity"),
    ({"dim": 3}, "parity", "has 2 entries but dim is 3"),
    ({"bracket": [[0, 0, 0, 0.5]]}, "bracket[0]", "inexact"),
    ({"bracket": [[0, 0, 5, "1"]]}, "bracket[0]", "out of range"),
    ({"extra": 1}, "", "unknown keys"),
    ({"schema": "other"}, "schema", "expected"),
    ({"r": [[0, 1, "1"], [0, 0, "1"]]}, "r", "homogeneous"),
    ({"operator": {"T": [[0, 1, "1"]]}}, "operator.T[0]", "different parity"),
])
def test_located_errors(obj, location, fragment):
    base = {"schema": "superpoisson/1", "dim": 2, "parity": [0, 1]}
    base.update(obj)
    with pytest.raises(FormatError) as info:
        parse(json.dumps(base))
    assert info.value.location == location
    assert fragment in info.value.message


def test_syntax_error_has_position():
    with pytest.raises(FormatError) as info:
        parse('{"schema": "superpoisson/1",\n "dim": 2,,}')
    assert info.value.location == "line 2 column 11"
    with pytest.raises(FormatError):
        parse(b"\xff\xfe")


def test_dim_zero_passes_every_suite():
    empty = GradedBasis(())
    z = BilinearLaw.zero(empty)
    doc = Document(empty, r=Tensor2(empty, {}), post=PostPoisson(z, z, z, z))
    for suite in SUITES:
        if suite == "o-operator":
            continue
        report, code = run_suite(doc, suite)
        assert report.ok and code == 0, suite
    op = doc.with_(operator=Operator(linalg.zeros(0, 0), 1))
    assert run_suite(op, "o-operator")[1] == 0


def test_missing_members_are_usage_errors():
    with pytest.raises(UsageError):
        run_suite(_doc_a(), "coboundary")
    with pytest.raises(UsageError):
        run_suite(_doc_a(), "post-poisson")
    with pytest.raises(UsageError):
        run_suite(_doc_a(), "o-operator")
    with pytest.raises(UsageError):
        run_suite(_doc_a(), "nope")


def test_verify_exit_codes(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a())
    assert main(["verify", "--suite", "poisson-bialgebra", a]) == 0
    assert capsys.readouterr().out.strip() == "pass poisson-bialgebra"
    dk = _write(tmp_path, "dk.json", Document.of_algebra(p2_bialgebra(d=1, k=2).algebra))
    assert main(["--format", "json", "verify", "--suite", "assoc", dk]) == 1
    records = _json_lines(capsys.readouterr().out)
    assert records[-1] == {"record": "summary", "suite": "assoc", "ok": False, "violations": len(records) - 1}
    assert all(r["law"] == "assoc.associativity" and len(r["witness"]) == 3 for r in records[:-1])
    b = _write(tmp_path, "b.json", Document.of_bialgebra(B, r=Tensor2(P2, {(1, 1): 1})))
    assert main(["--format", "json", "verify", "--suite", "pybe", b]) == 1
    laws = {r["law"] for r in _json_lines(capsys.readouterr().out) if r["record"] == "violation"}
    assert "pybe.aybe" in laws


def test_usage_and_parse_errors_exit_two(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a())
    assert main(["verify", "--suite", "bogus", a]) == 2
    assert main(["verify", "--suite", "coboundary", a]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "superpoisson/1", "dim": 2, "parity": [0, 1], "bracket": [[0, 1, 0, "1"]]}')
    assert main(["--format", "json", "verify", "--suite", "lie", str(bad)]) == 2
    (err,) = _json_lines(capsys.readouterr().out)[-1:]
    assert err["record"] == "error" and "bracket[0]" in err["message"] and str(bad) in err["message"]
    assert main(["verify", "--suite", "lie", str(tmp_path / "missing.json")]) == 2
    assert main([]) == 2


def test_ybe_subcommand(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a(r=Tensor2(P2, {(1, 1): 1})))
    assert main(["ybe", "--which", "aybe", a]) == 0
    capsys.readouterr()
    assert main(["--format", "json", "ybe", "--which", "cybe", a]) == 1
    rec = _json_lines(capsys.readouterr().out)
    assert [(r["witness"], r["discrepancy"]) for r in rec[:-1]] == [([0, 1, 1], "-1"), ([1, 0, 1], "1"),
                                                                   ([1, 1, 0], "-1")]


def _construct(tmp_path, capsys, *args):
    capsys.readouterr()
    assert main(["construct", *args]) == 0
    text = capsys.readouterr().out
    return parse(text), text


def test_construct_double_then_verify(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a())
    doc, text = _construct(tmp_path, capsys, "double", a)
    assert doc.dim == 4 and doc.basis.parities == (0, 1, 0, 1)
    d = tmp_path / "d.json"
    d.write_text(text)
    for suite in ("poisson-bialgebra", "coboundary", "pybe", "manin", "matched-pair"):
        assert main(["verify", "--suite", suite, str(d)]) == 0, suite
    doc, _ = _construct(tmp_path, capsys, "post-quasi", str(d))
    assert run_suite(doc, "post-poisson")[1] == 0


def test_construct_refuses_fixture_b(tmp_path, capsys):
    b = _write(tmp_path, "b.json", Document.of_bialgebra(B))
    assert main(["construct", "double", b]) == 2
    assert "error" in capsys.readouterr().out


def test_construct_dualize(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a())
    doc, _ = _construct(tmp_path, capsys, "dualize", a)
    assert doc.dim == 2 and doc.product.is_zero()
    assert doc.bracket.on_basis(0, 1) == P2.vector(1)
    assert run_suite(doc, "poisson-bialgebra")[1] == 0


def test_construct_post_from_identity(tmp_path, capsys):
    a = _write(tmp_path, "a.json", _doc_a())
    out = tmp_path / "p.json"
    assert main(["construct", "post", "--T", "id", "--weight", "-1", a, "-o", str(out)]) == 0
    assert main(["verify", "--suite", "post-poisson", str(out)]) == 0
    assert read_file(out).algebra() == A.algebra
    assert main(["construct", "post", "--T", "id", "--weight", "0", a]) == 2


def test_construct_semidirect_and_bowtie(tmp_path, capsys):
    ad = adjoint_rep(A.algebra)
    s = _write(tmp_path, "s.json", _doc_a(rep_bracket=ad.psi_bracket, rep_product=ad.psi_product))
    doc, _ = _construct(tmp_path, capsys, "semidirect", s)
    assert doc.dim == 4 and run_suite(doc, "poisson")[1] == 0
    m = _write(tmp_path, "m.json", _doc_a(partner=bialgebra_matched_pair(A)))
    assert main(["verify", "--suite", "matched-pair", m]) == 0
    doc, _ = _construct(tmp_path, capsys, "bowtie", m)
    assert doc.dim == 4 and run_suite(doc, "poisson")[1] == 0
    broken = MatchedPairData(A.algebra, A.algebra, ad.psi_bracket, ad.psi_product, ad.psi_bracket, ad.psi_product)
    bad = _write(tmp_path, "bad.json", _doc_a(partner=broken))
    assert main(["construct", "bowtie", bad]) == 2


def test_o_operator_and_manin_suites_from_file_sections(tmp_path):
    ok = _write(tmp_path, "o.json", _doc_a(operator=Operator(linalg.identity(2), -1)))
    assert main(["verify", "--suite", "o-operator", ok]) == 0
    bad = _write(tmp_path, "o2.json", _doc_a(operator=Operator(linalg.identity(2), -2)))
    assert main(["verify", "--suite", "o-operator", bad]) == 1
    line = GradedBasis((0, 0))
    zero = Document(line, manin=ManinSpec((0,), (1,), standard_form(GradedBasis((0,)))))
    assert main(["verify", "--suite", "manin", _write(tmp_path, "z.json", zero)]) == 0


def test_pairing_switch_is_accepted(tmp_path):
    a = _write(tmp_path, "a.json", _doc_a())
    assert main(["--pairing", "plain", "verify", "--suite", "poisson-bialgebra", a]) == 0
    assert main(["--pairing", "weird", "verify", "--suite", "poisson-bialgebra", a]) == 2


def test_grid_examples():
    single = GridSpec({k: [v] for k, v in FIXTURE_A.items()})
    assert grid_search(single) == [tuple(FIXTURE_A[k] for k in P2_PARAMS)]
    assert grid_search(GridSpec({"b": [1], "c": [1]})) == []
    with pytest.raises(UsageError):
        grid_search(GridSpec({"b": [-1, 0, 1], "c": [-1, 0, 1]}, bound=8))
    with pytest.raises(UsageError):
        GridSpec({"b": []})
    with pytest.raises(UsageError):
        GridSpec({"z": [1]})


def test_grid_partitioning_does_not_change_the_result():
    spec = GridSpec({"b": [0, 1], "c": [-1, 1], "d": [1], "k": [1], "c1": [0, 1], "c2": [-1, 0, 1]})
    serial = grid_search(spec)
    assert grid_search(spec, jobs=2, chunk=5) == serial
    assert grid_search(spec, jobs=3, chunk=1) == serial


def test_parse_grid():
    spec = parse_grid('{"schema": "superpoisson-grid/1", "parameters": {"b": [1, 0, "1/2", 0]}, "predicate": "lie"}')
    assert spec.size == 3 and spec.predicate == "lie"
    with pytest.raises(FormatError):
        parse_grid('{"schema": "superpoisson-grid/1", "parameters": {"b": [0.5]}}')
    with pytest.raises(FormatError):
        parse_grid('{"schema": "x"}')


def test_search_subcommand(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"schema": "superpoisson-grid/1", "parameters": {k: [v] for k, v in FIXTURE_A.items()}}))
    assert main(["--format", "json", "search", "--grid", str(g)]) == 0
    tup, summary = _json_lines(capsys.readouterr().out)
    assert tup == {"record": "tuple", "values": {k: str(v) for k, v in FIXTURE_A.items()}}
    assert summary["passed"] == 1 and summary["evaluated"] == 1
    assert main(["search", "--grid", str(g), "--bound", "0"]) == 2


def test_console_script_runs(tmp_path):
    a = _write(tmp_path, "a.json", _doc_a())
    proc = subprocess.run([sys.executable, "-m", "superpoisson.cli", "verify", "--suite", "poisson", a],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "pass poisson"
