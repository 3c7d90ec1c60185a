"""HTTP service: endpoint/library parity, error contract, store consistency."""

from __future__ import annotations

import json
import shutil
import threading

import pytest
from fastapi.testclient import TestClient

from dnl import canonical
from dnl.model import parse_label, serialize_label
from dnl.profiler import check_staleness, profile_csv
from dnl.reporting import compare_labels
from dnl.resolution import resolve, use_cases_to_bytes
from dnl.service import create_app
from dnl.store import LabelStore

FOUR_ROWS = b"a,b\n1,\n2,x\n3,\n4,y\n"


@pytest.fixture
def store(tmp_path, fixtures_dir) -> LabelStore:
    for name in ("covid.label.json", "evictions.label.json"):
        shutil.copy(fixtures_dir / name, tmp_path / name)
    store = LabelStore(tmp_path)
    store.load()
    return store


@pytest.fixture
def client(store) -> TestClient:
    return TestClient(create_app(store))


def fresh_label_doc(label_id: str) -> bytes:
    return json.dumps({
        "label_id": label_id, "schema_version": "1.0", "dataset_name": f"Dataset {label_id}",
        "publisher": "P", "date_produced": "2020-06-01", "overview_modules": [],
        "use_cases": [], "alerts": [], "fyis": [], "questionnaire": [],
    }).encode()


def test_list_labels_parity(client, store):
    response = client.get("/labels")
    assert response.status_code == 200
    assert response.content == canonical.dumps(store.summaries())
    assert [e["label_id"] for e in response.json()] == ["covid-state-daily-v2",
                                                        "nyc-evictions-2020"]


def test_get_label_parity(client, covid_bytes):
    response = client.get("/labels/covid-state-daily-v2")
    assert response.status_code == 200
    assert response.content == serialize_label(parse_label(covid_bytes))


def test_get_unknown_label(client):
    response = client.get("/labels/unknown-id")
    assert response.status_code == 404
    assert response.json()["code"] == "NOT_FOUND"


def test_use_cases_parity(client, covid_label):
    response = client.get("/labels/covid-state-daily-v2/use-cases")
    assert response.content == use_cases_to_bytes(covid_label)


def test_resolve_parity(client, covid_label):
    response = client.get("/labels/covid-state-daily-v2/resolve",
                          params={"use_case": "u-forecast", "prediction": "p-arima"})
    assert response.status_code == 200
    assert response.content == resolve(covid_label, "u-forecast", "p-arima").to_bytes()


def test_resolve_error_codes(client):
    base = "/labels/covid-state-daily-v2/resolve"
    assert client.get(base).status_code == 400
    assert client.get(base).json()["code"] == "MISSING_PARAMETER"
    response = client.get(base, params={"use_case": "nope", "prediction": "p-arima"})
    assert (response.status_code, response.json()["code"]) == (404, "UNKNOWN_USE_CASE")
    response = client.get(base, params={"use_case": "u-forecast", "prediction": "zzz"})
    assert (response.status_code, response.json()["code"]) == (404, "UNKNOWN_PREDICTION")
    response = client.get(base, params={"use_case": "u-forecast", "prediction": "p-ranking"})
    assert (response.status_code, response.json()["code"]) == (422, "PREDICTION_NOT_IN_USE_CASE")


def test_submit_then_get_round_trip(client):
    raw = fresh_label_doc("fresh-1")
    response = client.post("/labels", content=raw)
    assert response.status_code == 201
    assert response.json() == {"label_id": "fresh-1"}
    stored = client.get("/labels/fresh-1")
    assert stored.content == serialize_label(parse_label(raw))


def test_submit_duplicate(client):
    raw = fresh_label_doc("dup-1")
    assert client.post("/labels", content=raw).status_code == 201
    response = client.post("/labels", content=raw)
    assert response.status_code == 409
    assert response.json()["code"] == "DUPLICATE_ID"


def test_submit_validation_failure(client):
    doc = json.loads(fresh_label_doc("bad-1"))
    doc["use_cases"] = [{"id": "u1", "title": "U", "description": "d",
                         "predictions": [{"id": "p1", "title": "P",
                                          "method_description": "m"}]}]
    doc["alerts"] = [{"id": "a1", "title": "T", "description": "D", "severity": "red",
                      "scope": [{"kind": "pair", "use_case": "u1", "prediction": "p9"}]}]
    response = client.post("/labels", content=json.dumps(doc).encode())
    assert response.status_code == 422
    body = response.json()
    assert body["code"] == "VALIDATION_FAILED"
    assert "DANGLING_PREDICTION" in [v["code"] for v in body["report"]["violations"]]
    # the failed submission must not be served
    assert client.get("/labels/bad-1").status_code == 404


def test_submit_malformed(client):
    response = client.post("/labels", content=b"{nope")
    assert response.status_code == 400
    assert response.json()["code"] == "MALFORMED_SYNTAX"
    response = client.post("/labels", content=b'{"label_id": 5}')
    assert response.status_code == 400


def test_profile_parity(client):
    response = client.post("/profile", content=FOUR_ROWS,
                           headers={"content-type": "text/csv"})
    assert response.status_code == 200
    got = response.json()
    want = json.loads(profile_csv(FOUR_ROWS).to_bytes())
    got.pop("profiled_at")
    want.pop("profiled_at")
    assert got == want


def test_profile_error_codes(client):
    response = client.post("/profile", content=b"")
    assert (response.status_code, response.json()["code"]) == (422, "EMPTY_INPUT")
    response = client.post("/profile", content=b"a,b\n1\n")
    assert (response.status_code, response.json()["code"]) == (422, "RAGGED_ROW")
    response = client.post("/profile", content=b"a\n\xff\n")
    assert (response.status_code, response.json()["code"]) == (422, "ENCODING_ERROR")


def test_upload_cap(store):
    client = TestClient(create_app(store, max_upload_bytes=64))
    response = client.post("/profile", content=b"a\n" + b"1\n" * 200)
    assert response.status_code == 413
    assert response.json()["code"] == "PAYLOAD_TOO_LARGE"


def test_check_staleness_endpoint(client, covid_label, fixtures_dir):
    data = (fixtures_dir / "covid_plus_deaths.csv").read_bytes()
    response = client.post("/labels/covid-state-daily-v2/check-staleness", content=data)
    assert response.status_code == 200
    want = check_staleness(covid_label, profile_csv(data))
    got = response.json()
    assert got["verdict"] == "stale"
    assert got["added_columns"] == want.added_columns == ["deaths"]


def test_compare_endpoint_parity(client, covid_label, evictions_label):
    response = client.get("/compare", params={
        "use_case": "Forecast case counts",
        "ids": "covid-state-daily-v2,nyc-evictions-2020"})
    assert response.status_code == 200
    got = response.json()
    want = json.loads(compare_labels([covid_label, evictions_label],
                                     "Forecast case counts").to_bytes())
    got.pop("generated_at")
    want.pop("generated_at")
    assert got == want


def test_compare_endpoint_errors(client):
    assert client.get("/compare").json()["code"] == "MISSING_PARAMETER"
    response = client.get("/compare", params={"use_case": "x", "ids": "covid-state-daily-v2"})
    assert (response.status_code, response.json()["code"]) == (400, "FEWER_THAN_TWO_LABELS")
    response = client.get("/compare", params={
        "use_case": "Nothing here",
        "ids": "covid-state-daily-v2,nyc-evictions-2020"})
    assert (response.status_code, response.json()["code"]) == (404, "NO_LABEL_MATCHES")
    response = client.get("/compare", params={"use_case": "x", "ids": "ghost,covid-state-daily-v2"})
    assert (response.status_code, response.json()["code"]) == (404, "NOT_FOUND")


def test_cors_header_on_get(client):
    response = client.get("/labels", headers={"origin": "http://localhost:5173"})
    assert response.headers.get("access-control-allow-origin") == "*"


def test_invalid_store_file_skipped(tmp_path, fixtures_dir):
    shutil.copy(fixtures_dir / "covid.label.json", tmp_path / "covid.label.json")
    (tmp_path / "broken.label.json").write_bytes(b"{not json")
    (tmp_path / "invalid.label.json").write_bytes(
        (fixtures_dir / "corpus" / "invalid-05-mitigation-required.label.json").read_bytes())
    store = LabelStore(tmp_path)
    store.load()
    assert store.ids() == ["covid-state-daily-v2"]


def test_concurrent_reads_and_submits(store):
    app = create_app(store)
    errors = []

    def reader(n: int) -> None:
        client = TestClient(app)
        for _ in range(5):
            response = client.get("/labels/covid-state-daily-v2")
            if response.status_code != 200:
                errors.append(("read", response.status_code))
            listing = client.get("/labels")
            if listing.status_code != 200:
                errors.append(("list", listing.status_code))

    def writer(n: int) -> None:
        client = TestClient(app)
        response = client.post("/labels", content=fresh_label_doc(f"burst-{n}"))
        if response.status_code != 201:
            errors.append(("write", response.status_code))

    threads = [threading.Thread(target=reader, args=(i,)) for i in range(8)]
    threads += [threading.Thread(target=writer, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert errors == []
    assert {f"burst-{n}" for n in range(8)} <= set(store.ids())
