"""Run the HTTP service against a scratch store and exercise every endpoint.

The service is a remote form of the library: every JSON response is the
canonical serialization the corresponding library call would produce.
"""

import json
import shutil
import tempfile
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from dnl.service import create_app
from dnl.store import LabelStore

FIXTURES = Path(__file__).parent.parent / "fixtures"
PORT = 8641
BASE = f"http://127.0.0.1:{PORT}"


def get(path: str):
    with urllib.request.urlopen(BASE + path) as response:
        return json.loads(response.read())


def post(path: str, data: bytes, content_type: str):
    request = urllib.request.Request(BASE + path, data=data, method="POST",
                                     headers={"content-type": content_type})
    with urllib.request.urlopen(request) as response:
        return response.status, json.loads(response.read())


store_dir = Path(tempfile.mkdtemp(prefix="dnl-store-"))
for name in ("covid.label.json", "evictions.label.json"):
    shutil.copy(FIXTURES / name, store_dir / name)

store = LabelStore(store_dir)
store.load()
server = uvicorn.Server(uvicorn.Config(create_app(store), host="127.0.0.1", port=PORT,
                                       log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

print("labels in store:", [entry["label_id"] for entry in get("/labels")])

view = get("/labels/covid-state-daily-v2/resolve?use_case=u-forecast&prediction=p-arima")
print("resolved alerts:", [alert["id"] for alert in view["alerts"]])

status, body = post("/profile", (FIXTURES / "covid.csv").read_bytes(), "text/csv")
print("profiled rows:", body["row_count"])

status, body = post("/labels/covid-state-daily-v2/check-staleness",
                    (FIXTURES / "covid_plus_deaths.csv").read_bytes(), "text/csv")
print("staleness verdict:", body["verdict"], "added:", body["added_columns"])

comparison = get("/compare?use_case=Forecast%20case%20counts"
                 "&ids=covid-state-daily-v2,nyc-evictions-2020")
print("comparison entries:", [(e["label_id"], e["status"]) for e in comparison["entries"]])

new_label = {
    "label_id": "scratch-demo", "schema_version": "1.0",
    "dataset_name": "Scratch demo", "publisher": "Demo script",
    "date_produced": "2020-12-01", "overview_modules": [], "use_cases": [],
    "alerts": [], "fyis": [], "questionnaire": [],
}
status, body = post("/labels", json.dumps(new_label).encode(), "application/json")
print("submitted:", status, body)
print("labels now:", [entry["label_id"] for entry in get("/labels")])

server.should_exit = True
thread.join()
shutil.rmtree(store_dir)
