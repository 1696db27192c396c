"""One test per acceptance criterion; a summary line per criterion is printed at the end of the run."""
import json
import math
import time
from fractions import Fraction

import pytest

from fixtures import ALL_FIXTURES, FIXTURE_GROUPS
from oracles import conjugate_product_min_poly
from galtypes.cli import run_cli
from galtypes.disc_bound import beta_residual, build_beta_matrix, charpoly, compute_bound_chain
from galtypes.fp_poly import FactorType
from galtypes.galois_id import determine, frequency_report
from galtypes.parsing import parse_poly
from galtypes.perm_groups import all_subgroups, cycle_type_set, symmetric_group, transitive_subgroups
from galtypes.tables import DETERMINATION_TABLES
from galtypes.verification import run_suite
from galtypes.zz_poly import discriminant

T = FactorType


@pytest.fixture
def criterion(record_property):
    def tag(number, label, note=""):
        record_property("criterion", str(number))
        record_property("label", label)
        if note:
            record_property("note", note)
    return tag


def analyze_json(capsys, *argv):
    code = run_cli(["analyze", *argv, "--emit", "json", "--no-timestamp"])
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


def types_of(data):
    return {tuple(t) for t in data["observed_types"]}


def test_criterion_1_table_fidelity(criterion):
    criterion(1, "computed cycle-type sets equal the embedded table rows (2 + 5 + 5 = 12 groups, < 10 s)")
    t0 = time.perf_counter()
    comparisons = 0
    for n in (3, 4, 5):
        computed = {G.name: (G.order, cycle_type_set(G)) for G in transitive_subgroups(n)}
        rows = DETERMINATION_TABLES["degrees"][str(n)]
        assert set(computed) == {r["name"] for r in rows}
        for r in rows:
            order, types = computed[r["name"]]
            assert order == r["order"]
            assert types == {T(t) for t in r["types"]}, r["name"]
            comparisons += 1
    # the stated count of 15 does not match the 2 + 5 + 5 rows; every row is compared
    assert comparisons == 12
    assert time.perf_counter() - t0 < 10


def test_criterion_2_cubic_determination(criterion, capsys):
    criterion(2, "x^3-3x-1 gives {1,1,1},{3} and A3; x^3-2 gives all S3 types by p=31 and S3 (< 1 s each)")
    t0 = time.perf_counter()
    data = analyze_json(capsys, "x^3-3x-1", "--prime-limit", "1000")
    assert time.perf_counter() - t0 < 1
    assert types_of(data) == {(1, 1, 1), (3,)}
    assert data["mode"] == "strict"
    assert data["verdict"]["kind"] == "conclusive" and data["verdict"]["groups"] == ["A3"]

    t0 = time.perf_counter()
    data = analyze_json(capsys, "x^3-2", "--prime-limit", "100")
    assert time.perf_counter() - t0 < 1
    assert types_of(data) == {(1, 1, 1), (1, 2), (3,)}
    assert data["verdict"] == {"kind": "conclusive", "groups": ["S3"], "via": "types"}
    early = determine(parse_poly("x^3-2"), 31, early_exit=False)
    assert early.observed_types == {T([1, 1, 1]), T([1, 2]), T([3])}


def test_criterion_3_quintic_determination(criterion, capsys):
    criterion(3, "x^5-x-1 reaches strict S5 within p <= 500 (< 1 s)")
    t0 = time.perf_counter()
    data = analyze_json(capsys, "x^5-x-1", "--prime-limit", "500")
    assert time.perf_counter() - t0 < 1
    assert data["verdict"] == {"kind": "conclusive", "groups": ["S5"], "via": "types"}
    proper = [G for G in transitive_subgroups(5) if G.name != "S5"]
    outside = [t for t in types_of(data) if all(T(t) not in cycle_type_set(G) for G in proper)]
    assert outside


def test_criterion_4_quartic_subset(criterion, capsys):
    criterion(4, "x^4+1 to 10^4: types {1,1,1,1},{2,2}; strict consistent over 5; assume-complete Z2xZ2 (< 5 s)")
    t0 = time.perf_counter()
    strict = analyze_json(capsys, "x^4+1", "--prime-limit", "10000")
    complete = analyze_json(capsys, "x^4+1", "--prime-limit", "10000", "--mode", "assume-complete")
    assert time.perf_counter() - t0 < 5
    assert types_of(strict) == {(1, 1, 1, 1), (2, 2)}
    assert strict["verdict"]["kind"] == "consistent"
    assert set(strict["verdict"]["groups"]) == {"Z4", "Z2xZ2", "D4", "A4", "S4"}
    assert complete["verdict"]["kind"] == "conclusive" and complete["verdict"]["groups"] == ["Z2xZ2"]


def test_criterion_5_soundness(criterion):
    criterion(5, "fixtures (>= 10 per degree): observed types lie in the oracle group's set, zero violations")
    assert all(len(v) >= 10 for v in FIXTURE_GROUPS.values())
    violations = []
    for text, frozen in ALL_FIXTURES:
        c = parse_poly(text)
        rep = determine(c, 10**5, mode="assume-complete", early_exit=False, disc_refinement=False)
        oracle = rep.verdict.group
        assert oracle == frozen, (text, oracle, frozen)
        allowed = cycle_type_set(next(G for G in transitive_subgroups(c.degree) if G.name == oracle))
        violations += [(text, o.prime, o.ftype) for o in rep.observations
                       if not o.skipped and o.ftype not in allowed]
    assert violations == []


def test_criterion_6_chebotarev(criterion):
    criterion(6, "frequencies below 10^5 within 0.02 of 1/6,1/2,1/3 (x^3-2) and 1/3,2/3 (x^3-3x-1) (< 30 s)")
    t0 = time.perf_counter()
    f = frequency_report(parse_poly("x^3-2"), 10**5 - 1).frequencies
    for t, q in {T([1, 1, 1]): Fraction(1, 6), T([1, 2]): Fraction(1, 2), T([3]): Fraction(1, 3)}.items():
        assert abs(float(f[t] - q)) <= 0.02, (t, float(f[t]))
    f = frequency_report(parse_poly("x^3-3x-1"), 10**5 - 1).frequencies
    assert set(f) == {T([1, 1, 1]), T([3])}
    for t, q in {T([1, 1, 1]): Fraction(1, 3), T([3]): Fraction(2, 3)}.items():
        assert abs(float(f[t] - q)) <= 0.02, (t, float(f[t]))
    assert time.perf_counter() - t0 < 30


def test_criterion_7_group_theory_suite(criterion):
    criterion(7, "double cosets over S4 pairs, divisions, normality with witnesses, cycle/orbit (< 2 min)")
    t0 = time.perf_counter()
    reports = run_suite(5)
    for rep in reports:
        assert rep.passed, (rep.name, rep.failures[:3])
        assert rep.checks > 0
    runs = {rep.name.split(",")[0]: rep.details["runs"] for rep in reports}
    assert runs["double-coset identities"] == 30 * 30
    assert runs["normality criterion"] == 30
    assert runs["divisions vs coset-orbit signatures"] == 12
    assert runs["cycle type = coset-orbit lengths"] == 12
    from galtypes.perm_groups import verify_normality_criterion

    S4 = symmetric_group(4)
    for H in all_subgroups(S4):
        rep = verify_normality_criterion(S4, H)
        if not rep.details["normal"]:
            w = rep.details["witness"]
            assert w["orbit_of_H"] == 1 and w["orbit_of_Hg"] > 1
    assert time.perf_counter() - t0 < 120


def test_criterion_8_bound_chain(criterion):
    criterion(8, "x^2+1: B_beta = 6, bound 144 >= 4; x^3-2: 222^30 > |disc(h)|; beta roots < 1e-6 (< 10 s)")
    t0 = time.perf_counter()
    b = compute_bound_chain(parse_poly("x^2+1"), A=1)
    assert b.beta_bound == 6 and b.disc_bound == 144 and 144 >= abs(discriminant(parse_poly("x^2+1")))
    c = parse_poly("x^3-2")
    b = compute_bound_chain(c, A=1)
    assert b.disc_bound == 222**30
    h, err = conjugate_product_min_poly(c, (2, 3))
    assert err < 1e-20 and h.degree == 6
    assert b.disc_bound > abs(discriminant(h))
    for text, z in [("x^2+1", (1,)), ("x^2+1", (0,)), ("x^3-2", (1, 2)), ("x^3-2", (0, 0)), ("x^3-3x-1", (2, -5))]:
        p = parse_poly(text)
        k = charpoly(build_beta_matrix(p, z))
        assert beta_residual(p, z, k) < 1e-6, (text, z)
    assert time.perf_counter() - t0 < 10


def test_criterion_9_full_scale_scan_acknowledged(criterion):
    criterion(9, "prime scan to 2 d_L^A is out of reach; replaced by criteria 5-8",
              note="acknowledged, not reproduced")
    # The certified bound for the smallest non-abelian case already puts the scan far beyond
    # any enumeration: log2 of 2 * bound^A is about 233 even for A = 1.
    b = compute_bound_chain(parse_poly("x^3-2"), A=1)
    assert b.prime_bound_log2 > 200
    assert math.isclose(b.prime_bound_log2, 1 + 30 * math.log2(222))
