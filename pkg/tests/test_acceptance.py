"""Acceptance suite: one test per release criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS/FAIL
line per criterion as it completes.
"""

from __future__ import annotations

import functools
import hashlib
import json
import random
import shutil
import threading
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from dnl import canonical
from dnl.cli import main
from dnl.model import ParseError, parse_label, serialize_label, validate_label
from dnl.profiler import check_staleness, compute_fingerprint, profile_csv
from dnl.reporting import compare_labels
from dnl.resolution import list_use_cases, resolve, use_cases_to_bytes
from dnl.service import create_app
from dnl.store import LabelStore
from oracles import oracle_profile, oracle_resolve
from randgen import random_label, random_table, table_to_csv_bytes

GOLDEN_DIR = Path(__file__).parent / "golden"


def criterion(name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"\n[acceptance] {name}: FAIL")
                raise
            print(f"\n[acceptance] {name}: PASS")
        return wrapper
    return decorate


@criterion("schema conformance corpus (10 valid / 10 invalid)")
def test_schema_conformance_corpus(fixtures_dir):
    corpus = fixtures_dir / "corpus"
    manifest = json.loads((corpus / "expected.json").read_text())
    assert len(manifest) >= 20
    assert sum(1 for v in manifest.values() if v["valid"]) >= 10
    assert sum(1 for v in manifest.values() if not v["valid"]) >= 10
    for name, expectation in sorted(manifest.items()):
        raw = (corpus / name).read_bytes()
        try:
            report = validate_label(parse_label(raw))
            is_valid = report.passed
            codes = [v.code for v in report.violations if v.level == "error"]
        except ParseError as exc:
            is_valid = False
            codes = [exc.code]
        assert is_valid == expectation["valid"], name
        if not expectation["valid"]:
            assert expectation["code"] in codes, (name, codes)


@criterion("resolution equals brute-force oracle on 500 random labels")
def test_resolution_oracle_equivalence():
    rng = random.Random(20201101)
    checked_pairs = 0
    for _ in range(500):
        label = random_label(rng, max_use_cases=10, max_predictions=4, max_items=40)
        for uc, predictions in list_use_cases(label):
            for pred in predictions:
                view = resolve(label, uc.id, pred.id)
                expected = oracle_resolve(label, uc.id, pred.id)
                assert [a.id for a in view.alerts] == expected["alert_ids"]
                assert [f.id for f in view.fyis] == expected["fyi_ids"]
                assert view.severity_summary == expected["severity_summary"]
                checked_pairs += 1
    assert checked_pairs > 1000


@criterion("round-trip identity and byte-determinism on 500 random labels")
def test_round_trip_and_canonicality():
    rng = random.Random(42)
    for _ in range(500):
        label = random_label(rng)
        data = serialize_label(label)
        again = parse_label(data)
        assert again == label
        assert serialize_label(again) == data
        assert serialize_label(label) == data


@criterion("profiler equals in-memory oracle on 200 random tables")
def test_profiler_oracle_equivalence():
    rng = random.Random(7)
    for _ in range(200):
        header, rows = random_table(rng, max_rows=50, max_cols=8)
        profile = profile_csv(table_to_csv_bytes(rng, header, rows))
        expected = oracle_profile(header, rows)
        assert profile.row_count == expected["row_count"]
        assert profile.fingerprint.digest == expected["digest"]
        for got, want in zip(profile.columns, expected["columns"]):
            assert got.name == want["name"]
            assert got.inferred_type == want["inferred_type"]
            assert got.missing_count == want["missing_count"]
            assert abs(got.missing_fraction - want["missing_fraction"]) <= 1e-12
            assert got.distinct_count == want["distinct_count"]
            assert got.min == want["min"] and got.max == want["max"]


@criterion("fingerprint bit-exactness and staleness scenarios")
def test_fingerprint_and_staleness(fixtures_dir, covid_label):
    # Constant computed with hashlib directly over the documented encoding.
    independent = hashlib.sha256(b"1:a\n1:b\n").hexdigest()
    assert independent == "700dfd192c1fa8813a20119f60fac69bdaf8fbd38520b4fa5b0a21d00621d59b"
    assert compute_fingerprint(["a", "b"]).digest == independent

    identical = check_staleness(covid_label,
                                profile_csv((fixtures_dir / "covid.csv").read_bytes()))
    assert identical.verdict == "fresh"
    added = check_staleness(covid_label,
                            profile_csv((fixtures_dir / "covid_plus_deaths.csv").read_bytes()))
    assert added.verdict == "stale"
    assert added.added_columns == ["deaths"]
    assert added.removed_columns == [] and added.reordered is False
    reordered = check_staleness(covid_label,
                                profile_csv((fixtures_dir / "covid_reordered.csv").read_bytes()))
    assert reordered.verdict == "stale"
    assert reordered.reordered is True
    assert reordered.added_columns == [] and reordered.removed_columns == []


@criterion("end-to-end CLI flow with golden-file-stable HTML")
def test_end_to_end_cli_flow(fixtures_dir, tmp_path, capsysbinary):
    covid = str(fixtures_dir / "covid.label.json")
    evictions = str(fixtures_dir / "evictions.label.json")

    assert main(["validate", covid]) == 0
    assert main(["validate", evictions]) == 0
    assert capsysbinary.readouterr().out == b"OK\nOK\n"

    assert main(["resolve", covid, "--use-case", "u-forecast",
                 "--prediction", "p-arima", "--json"]) == 0
    view = json.loads(capsysbinary.readouterr().out)
    assert [a["id"] for a in view["alerts"]] == [
        "a-definitions", "a-territories", "a-backfill", "q:coll-method", "a-weekend"]

    out_dir = tmp_path / "site"
    assert main(["render", covid, "--out", str(out_dir)]) == 0
    for rel in ("index.html", "overview.html", "use-cases.html",
                "dataset-info.html", "assets/label.css"):
        golden = (GOLDEN_DIR / "render" / rel).read_bytes()
        assert (out_dir / rel).read_bytes() == golden, f"render drifted: {rel}"

    comparison_path = tmp_path / "comparison.html"
    assert main(["compare", "--use-case", "Forecast case counts",
                 covid, evictions, "--html", str(comparison_path)]) == 0
    capsysbinary.readouterr()
    assert comparison_path.read_bytes() == (GOLDEN_DIR / "comparison.html").read_bytes()


def _with_timestamp(raw: bytes, key: str, value) -> bytes:
    tree = json.loads(raw)
    tree[key] = value
    return canonical.dumps(tree)


@criterion("service and library agree byte-for-byte; store survives a 32-way burst")
def test_service_library_parity(fixtures_dir, tmp_path, covid_label, evictions_label,
                                capsysbinary):
    for name in ("covid.label.json", "evictions.label.json"):
        shutil.copy(fixtures_dir / name, tmp_path / name)
    store = LabelStore(tmp_path)
    store.load()
    app = create_app(store)
    client = TestClient(app)

    assert client.get("/labels").content == canonical.dumps(store.summaries())
    labels = {"covid-state-daily-v2": covid_label, "nyc-evictions-2020": evictions_label}
    for label_id, label in labels.items():
        assert client.get(f"/labels/{label_id}").content == serialize_label(label)
        assert (client.get(f"/labels/{label_id}/use-cases").content
                == use_cases_to_bytes(label))
        for uc, predictions in list_use_cases(label):
            for pred in predictions:
                response = client.get(f"/labels/{label_id}/resolve",
                                      params={"use_case": uc.id, "prediction": pred.id})
                assert response.content == resolve(label, uc.id, pred.id).to_bytes()

    # GET /compare: byte-identical once the response timestamp is injected
    # into the library report (the timestamp is the only wall-clock field).
    response = client.get("/compare", params={
        "use_case": "Forecast case counts",
        "ids": "covid-state-daily-v2,nyc-evictions-2020"})
    stamp = json.loads(response.content)["generated_at"]
    library = compare_labels([covid_label, evictions_label], "Forecast case counts",
                             generated_at=stamp)
    assert response.content == library.to_bytes()

    # POST /profile against the CLI profile subcommand.
    csv_path = fixtures_dir / "covid.csv"
    assert main(["profile", str(csv_path)]) == 0
    cli_out = capsysbinary.readouterr().out.strip()
    http_out = client.post("/profile", content=csv_path.read_bytes(),
                           headers={"content-type": "text/csv"}).content
    stamp = json.loads(http_out)["profiled_at"]
    assert _with_timestamp(cli_out, "profiled_at", stamp) == http_out

    # 32 concurrent clients: 16 readers, 16 unique submitters.
    before = set(store.ids())
    submitted = {f"burst-{n}" for n in range(16)}
    errors = []

    def reader(n: int) -> None:
        thread_client = TestClient(app)
        for _ in range(4):
            listing = thread_client.get("/labels")
            if listing.status_code != 200:
                errors.append(("list", listing.status_code))
                continue
            ids = {entry["label_id"] for entry in listing.json()}
            if not before <= ids or not ids <= before | submitted:
                errors.append(("partial-state", sorted(ids)))
            body = thread_client.get("/labels/covid-state-daily-v2")
            if body.content != serialize_label(covid_label):
                errors.append(("read", body.status_code))

    def writer(n: int) -> None:
        thread_client = TestClient(app)
        doc = {"label_id": f"burst-{n}", "schema_version": "1.0",
               "dataset_name": f"Burst {n}", "publisher": "P",
               "date_produced": "2020-06-01", "overview_modules": [], "use_cases": [],
               "alerts": [], "fyis": [], "questionnaire": []}
        response = thread_client.post("/labels", content=json.dumps(doc).encode())
        if response.status_code != 201:
            errors.append(("write", response.status_code))

    threads = [threading.Thread(target=reader, args=(i,)) for i in range(16)]
    threads += [threading.Thread(target=writer, args=(i,)) for i in range(16)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert errors == []
    assert set(store.ids()) == before | submitted
    listing = client.get("/labels")
    assert listing.content == canonical.dumps(store.summaries())
