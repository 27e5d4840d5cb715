from math import comb

import pytest

from pinchband.cobordism import PinchCertificate, verify_certificate
from pinchband.diagram import UNKNOT, add_curl, faces, table_diagram, torus_2n_diagram
from pinchband.search import (
    SearchOptions,
    default_battery,
    enumerate_sites,
    find_paper_certificates,
    pinch_search,
)


def expected_count(d):
    total = 0
    for f in faces(d):
        k = len(f)
        both = sum(1 for (e, s) in f if s == "L" and (e, "R") in f)
        total += comb(k, 2) + k + both
    return total


@pytest.mark.parametrize(
    "d", [UNKNOT, torus_2n_diagram(1), torus_2n_diagram(3), torus_2n_diagram(5),
          table_diagram("6_1"), add_curl(torus_2n_diagram(3), 2, 1, "L")],
)
def test_routing_zero_count(d):
    sites = list(enumerate_sites(d))
    assert len(sites) == expected_count(d)
    assert len(set(sites)) == len(sites)
    assert all(s.clasp_sign == 1 and not s.routing for s in sites)


def test_unknot_sites():
    sites = list(enumerate_sites(UNKNOT))
    assert len(sites) == 2
    assert {s.attach[0].edge for s in sites} == {1}


def test_site_limit():
    d = torus_2n_diagram(5)
    opts = SearchOptions(max_routing_length=1)
    full = list(enumerate_sites(d, opts))
    assert list(enumerate_sites(d, SearchOptions(max_routing_length=1, site_limit=7))) == full[:7]
    assert list(enumerate_sites(d, SearchOptions(site_limit=0))) == []
    assert [len(s.routing) for s in full] == sorted(len(s.routing) for s in full)


def test_options_validation():
    with pytest.raises(ValueError):
        SearchOptions(max_routing_length=-1)
    with pytest.raises(ValueError):
        SearchOptions(max_result_crossings=0)
    with pytest.raises(ValueError):
        SearchOptions(site_limit=-5)
    o = SearchOptions()
    assert (o.max_routing_length, o.max_result_crossings, o.site_limit) == (0, 24, 100_000)


def test_pinch_search_t25_to_unknot():
    res = pinch_search(torus_2n_diagram(5), SearchOptions(target_knot="unknot"))
    assert len(res) >= 1
    assert all(c.knot_after.name == "unknot" for c in res)
    assert all(verify_certificate(c).ok for c in res)
    assert res.stats.conserved()
    again = pinch_search(torus_2n_diagram(5), SearchOptions(target_knot="unknot"))
    assert [c.to_json() for c in again] == [c.to_json() for c in res]


def test_pinch_search_impossible_target():
    res = pinch_search(torus_2n_diagram(3), SearchOptions(target_knot="T(2,9)"))
    assert len(res) == 0
    assert res.stats.conserved()


def test_sigma_filter_and_stats():
    d = torus_2n_diagram(5)
    opts = SearchOptions(max_routing_length=1)
    everything = pinch_search(d, opts)
    plus = pinch_search(d, SearchOptions(max_routing_length=1, target_sigma_cover=1))
    minus = pinch_search(d, SearchOptions(max_routing_length=1, target_sigma_cover=-1))
    assert len(plus) + len(minus) == len(everything)
    for res in (everything, plus, minus):
        s = res.stats
        assert s.conserved()
        assert s.enumerated == s.emitted + s.skipped_unidentifiable + s.skipped_filter + s.non_knot + s.invalid_site + s.non_integral
    assert all(c.sigma_cover_cobordism == 1 for c in plus)
    assert all(abs(c.sigma_cover_cobordism) == 1 for c in everything)


def test_crossing_budget_filters():
    res = pinch_search(torus_2n_diagram(5), SearchOptions(max_routing_length=1, max_result_crossings=5))
    assert res.stats.skipped_filter > 0
    assert all(len(c.pd_after) <= 5 for c in res)


def test_report_round_trip():
    res = pinch_search(torus_2n_diagram(5), SearchOptions(target_knot="unknot"))
    data = res.as_dict()
    certs = [PinchCertificate.from_dict(c) for c in data["certificates"]]
    assert certs == res.certificates
    assert data["options"]["target_knot"] == "unknot"


def test_find_certificates_empty_battery():
    rep = find_paper_certificates(SearchOptions(), battery=[])
    assert rep["runs"] == []
    assert all(not hits for hits in rep["found"].values())
    assert all(s["status"] == "not found within budget" for s in rep["summary"].values())


def test_find_certificates_small_budget():
    battery = [b for b in default_battery() if b[0] in ("T(2,5) standard", "T(2,5) stabilized +")]
    rep = find_paper_certificates(SearchOptions(), battery=battery)
    hits = rep["found"]["T(2,5)"]
    assert hits, "the T(2,5) <-> unknot pinch family must appear"
    assert rep["found"]["T(2,9)"] == []
    for h in hits:
        cert = PinchCertificate.from_dict(h["certificate"])
        assert cert.knot_before.name == "unknot" and cert.knot_after.name == "T(2,5)"
        assert verify_certificate(cert).ok
        assert h["pair"] == [-6, 1] if cert.sigma_cover_cobordism == -1 else h["pair"] == [-10, 1]
    assert rep["summary"]["T(2,5)"]["status"] == "found"
