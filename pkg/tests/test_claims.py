import csv
import io
import json
import math
from pathlib import Path

import pytest

from histmech.claims import REGISTRY, RunConfig, list_claims, parse_config, run_claim
from histmech.claims.emit import render, render_csv
from histmech.claims.records import Check
from histmech.claims.registry import Series
from histmech.claims.report import EXIT_MISMATCH, run_report
from histmech.constants import DEFAULT_CONSTANTS, HOUR
from histmech.errors import ConfigError, NoDataError, NotFoundError
from histmech.kernels import Tolerance

ROOT = Path(__file__).resolve().parents[1]

EXPECTED_IDS = sorted(
    "cycloid-area matching-fallacy mean-speed incline-ratio pendulum-isochrony projectile-upright "
    "projectile-tilted range-table centrifugal-extrusion path-of-fall pisan-drop moon-fall tides-period "
    "catenary brachistochrone displacement-blunder wine-cooler wreath paraboloid-stability tycho-distance "
    "mizar-parallax sunspot-seasons venus-phases venus-nonlinearity venus-tabletop aristarchus-ratio "
    "aristarchus-ci aristarchus-volumes hipparchus-combinatorics".split()
)


def test_list_claims_metadata():
    records = list_claims()
    ids = [r.id for r in records]
    assert ids == EXPECTED_IDS
    assert ids == sorted(ids)
    assert "cycloid-area" in ids and "moon-fall" in ids
    assert all(not r.evaluated for r in records)


def test_run_examples():
    cyc = run_claim("cycloid-area")
    assert cyc.verdict == "REFUTED"
    assert cyc.computed.value == pytest.approx(3.0, rel=1e-9)
    assert dict(cyc.details)["area_r1"] == pytest.approx(3 * math.pi, rel=1e-9)
    pend = run_claim("pendulum-isochrony")
    assert pend.verdict == "REFUTED"
    assert pend.computed.value == pytest.approx(1.1803, abs=1e-4)
    tides = run_claim("tides-period")
    assert tides.verdict == "REFUTED"
    assert tides.computed.value == pytest.approx(12 * HOUR, abs=1.0)
    assert tides.historical_assertion.value == 6 * HOUR


def test_unknown_claim_suggests():
    with pytest.raises(NotFoundError) as info:
        run_claim("moon-fal")
    assert "moon-fall" in info.value.suggestions


def test_run_is_idempotent():
    assert run_claim("venus-phases") == run_claim("venus-phases")
    assert run_claim("catenary").to_dict() == run_claim("catenary").to_dict()


def test_numeric_verdicts_consistent_with_tolerance():
    for r in REGISTRY.run_all():
        h = r.historical_assertion.value
        if h is None or r.computed is None or r.computed.value is None or r.tolerance is None:
            continue
        inside = abs(r.computed.value - h) <= r.tolerance.bound(h)
        assert (r.verdict == "CONFIRMED") == inside, r.id


def test_blocked_claim_is_inconclusive():
    import dataclasses

    from histmech.claims.registry import Registry

    spec = dataclasses.replace(REGISTRY.get("moon-fall"), blocked_by="source distance is unknown")
    rec = Registry((spec,)).run("moon-fall")
    assert rec.verdict == "INCONCLUSIVE"
    assert rec.note == "source distance is unknown"


def test_tolerance_override_applies():
    cfg = RunConfig(tolerances={"moon-fall": Tolerance(0.0, 50.0)})
    assert run_claim("moon-fall", cfg).verdict == "CONFIRMED"


def test_g_override_flags_mismatch():
    cfg = RunConfig(constants=DEFAULT_CONSTANTS.with_overrides({"g": 4.0}))
    rec = run_claim("centrifugal-extrusion", cfg)
    assert rec.computed.value != pytest.approx(288.6, abs=0.1)
    assert not rec.matches_expectation
    assert run_report(cfg).exit_code == EXIT_MISMATCH


def test_checks():
    assert Check("x", 1.0, "approx", 1.0).passed
    assert not Check("x", 1.0 + 1e-15, "approx", 1.0).passed
    assert Check("x", 1.05, "approx", 1.0, Tolerance(0.0, 0.1)).passed
    assert not Check("x", math.nan, "gt", 0.0).passed
    assert Check("x", 1.0, "true").to_dict()["passed"] is True


def test_citations_in_index():
    index = (ROOT / "docs" / "claim_index.md").read_text(encoding="utf-8")
    for r in list_claims():
        for c in r.citations:
            assert c in index, (r.id, c)


# -------------------------------------------------------------- config


def test_parse_config():
    cfg = parse_config(
        """
        # comment
        constants.g = 4.0
        tolerance.moon-fall.rel = 0.5
        planet.Saturn.radius_au = 10
        material.bronze = 8800
        format = json
        parallel = 3
        """,
        set(EXPECTED_IDS),
    )
    assert cfg.constants.g == 4.0
    assert cfg.tolerances["moon-fall"] == Tolerance(0.0, 0.5)
    assert cfg.planets["Saturn"][0] == 10.0
    assert cfg.materials["bronze"] == 8800.0
    assert cfg.format == "json" and cfg.parallel == 3


@pytest.mark.parametrize(
    "text",
    [
        "constants.nope = 1",
        "tolerance.not-a-claim.abs = 1",
        "tolerance.moon-fall.abs = 0",
        "parallel = 0",
        "format = xml",
        "planet.Vulcan.radius_au = 0.1",
        "nonsense",
        "constants.g = fast",
    ],
)
def test_bad_config(text):
    with pytest.raises(ConfigError):
        parse_config(text, set(EXPECTED_IDS))


def test_planet_override_changes_tycho():
    cfg = parse_config("planet.Saturn.radius_au = 10.0", set(EXPECTED_IDS))
    assert run_claim("tycho-distance", cfg).computed.value == pytest.approx(2.0 / (math.pi / 10800) / 10.0, rel=1e-9)


# -------------------------------------------------------------- emit


def test_emit_venus_csv():
    text = render("venus-phases", "csv")
    assert "\r" not in text
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["date_offset", "alpha_deg", "k", "diameter_ratio", "elongation_deg"]
    assert len(rows) == 9
    anchor = [r for r in rows[1:] if float(r[0]) == 0.0][0]
    assert float(anchor[2]) == 0.5


def test_emit_json_schema():
    doc = json.loads(render("hipparchus-combinatorics", "json"))
    assert doc["claim_id"] == "hipparchus-combinatorics"
    assert doc["schema_version"] == 1
    assert doc["columns"] == ["n", "count"]
    assert [10, 103049] in doc["rows"]


def test_emit_sunspots_has_shape_column():
    rows = list(csv.DictReader(io.StringIO(render("sunspot-seasons", "csv"))))
    assert len(rows) == 365
    assert {r["shape"] for r in rows} <= {"U", "arch", "diagonal", "straight"}


def test_emit_brachistochrone_blocks():
    rows = list(csv.DictReader(io.StringIO(render("brachistochrone", "csv"))))
    kinds = [r["curve"] for r in rows]
    assert set(kinds) == {"cycloid", "circular-arc", "straight"}
    assert list(rows[0]) == ["curve", "x", "y", "t"]


def test_emit_quotes_per_rfc4180():
    text = render_csv(Series(("a", "b"), [('x, "y"', 1.5), (True, 2)]))
    assert text == 'a,b\n"x, ""y""",1.5\ntrue,2\n'


def test_emit_without_series():
    with pytest.raises(NoDataError):
        render("wreath", "csv")


def test_every_series_renders():
    for cid in REGISTRY.ids:
        if REGISTRY.get(cid).series is not None:
            assert render(cid, "json")


# -------------------------------------------------------------- report


def test_report_markdown_and_json():
    rep = run_report()
    md = rep.render("md")
    assert md.startswith("# Claim report")
    assert md.count("\n| ") >= len(EXPECTED_IDS)
    doc = json.loads(rep.render("json"))
    assert [c["id"] for c in doc["claims"]] == EXPECTED_IDS


def test_report_parallel_is_byte_identical():
    a = run_report(RunConfig(parallel=1)).render("md")
    b = run_report(RunConfig(parallel=6)).render("md")
    assert a == b
