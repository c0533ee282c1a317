import math

import pytest

import genergy as ge


def test_graph6_round_trip():
    g = ge.from_graph6("C~")
    assert g.order == 4
    assert g.size == 6
    assert ge.to_graph6(g) == "C~"
    assert ge.to_graph6(ge.complete(4)) == "C~"
    with pytest.raises(ValueError):
        ge.from_graph6("C")


def test_energy_and_determinant():
    assert ge.energy(ge.complete(4)) == pytest.approx(6.0, abs=1e-9)
    assert ge.energy(ge.path(4)) == pytest.approx(2 * math.sqrt(5), abs=1e-9)
    assert ge.exact_determinant(ge.complete(4)) == -3
    assert ge.exact_determinant(ge.path(3)) == 0
    assert not ge.is_nonsingular(ge.path(3))
    lam = ge.eigenvalues(ge.cycle(5))
    assert lam[0] == pytest.approx(2.0, abs=1e-10)


def test_char_poly():
    assert ge.char_poly(ge.complete(3)) == [-2, -3, 0, 1]


def test_structure_predicates():
    assert ge.is_bipartite(ge.cycle(4))
    assert not ge.is_bipartite(ge.cycle(5))
    assert ge.chromatic_number(ge.cycle(5)) == 3
    assert ge.is_planar(ge.complete(4))
    assert not ge.is_planar(ge.complete(5))
    assert ge.is_regular(ge.cycle(6)) == 2
    assert ge.is_regular(ge.path(4)) is None
    prof = ge.degree_profile(ge.path(4))
    assert prof["size"] == 3
    assert prof["avg_degree_exact"] == "3/2"


def test_bound_report_schema():
    report = ge.bound_report(ge.from_graph6("Ch"))  # P4
    for key in ("n", "m", "avg_degree", "det", "energy", "bounds", "verdicts", "coverage"):
        assert key in report
    assert report["verdicts"]["conjecture2"] == "fail"
    assert report["det"] == "1"
    assert report["bounds"]["log"] == pytest.approx(4.1368221637, abs=1e-8)


def test_generate_and_scan():
    assert len(ge.generate_all(4)) == 11
    assert len(ge.generate_all(5)) == 34
    summary = ge.scan(4)
    assert summary["total_graphs"] == 11
    assert len(summary["conjecture2_violations"]) == 2
    targets = sorted(v["target"] for v in summary["conjecture2_violations"])
    assert targets == [4.5, 5.0]


def test_scan_corpus_lines():
    result = ge.scan_graph6_lines("Ch\nBg\nC~\n")
    assert result["summary"]["total_graphs"] == 3
    assert result["summary"]["nonsingular_count"] == 2
    assert result["errors"] == []
