"""Capture request/response pairs from the live service for webui tests.

Runs the real HTTP app in-process and records every exchange the scripted
browser session will perform. The webui test suite replays these fixtures
through a fake fetch, so the UI is always tested against genuine service
bodies. Re-run after changing the service:

    python3 scripts/capture_fixtures.py
"""

import json
import sys
import tempfile
import warnings
from pathlib import Path

from fastapi.testclient import TestClient

from cocoest import builtin_default_catalog
from cocoest.service import create_app
from cocoest.store import ScenarioStore

OUT = Path(__file__).resolve().parent.parent / "test" / "fixtures" / "captured.json"


def main() -> int:
    warnings.simplefilter("ignore")
    tmp = tempfile.mkdtemp()
    app = create_app(
        builtin_default_catalog(), ScenarioStore(Path(tmp) / "scenarios.json")
    )
    client = TestClient(app)
    captured = []

    def call(method, path, body=None):
        if method == "GET":
            response = client.get(path)
        elif method == "POST":
            response = client.post(path, json=body)
        elif method == "DELETE":
            response = client.delete(path)
        else:
            raise ValueError(method)
        response.raise_for_status()
        entry = {"method": method, "path": path, "status": response.status_code}
        if response.content:
            entry["response"] = response.json()
        if body is not None:
            entry["body"] = body
        captured.append(entry)
        return entry.get("response")

    basic = {"model": "basic", "mode": "organic", "size_kloc": 32}
    nominal = {"model": "intermediate", "mode": "organic", "size_kloc": 32}
    raised = {
        "model": "intermediate",
        "mode": "organic",
        "size_kloc": 32,
        "drivers": {"CPLX": "very_high"},
    }

    call("GET", "/api/v1/catalog")
    call("GET", "/api/v1/scenarios")
    call("POST", "/api/v1/estimate", basic)
    call("POST", "/api/v1/estimate", nominal)
    call("POST", "/api/v1/estimate", raised)
    call("POST", "/api/v1/sweep", {"spec": raised, "driver": "CPLX"})
    record_a = call("POST", "/api/v1/scenarios", {"name": "nominal build", "spec": nominal})
    record_b = call("POST", "/api/v1/scenarios", {"name": "cplx high build", "spec": raised})

    # The compare view re-estimates from the spec the service echoed back,
    # which may normalize fields (e.g. an explicit empty drivers map), so
    # capture those exact bodies too.
    call("POST", "/api/v1/estimate", record_a["spec"])
    call("POST", "/api/v1/estimate", record_b["spec"])

    # The scripted session ends by deleting the compared scenario.
    call("DELETE", f"/api/v1/scenarios/{record_b['id']}")

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(captured, indent=1) + "\n")
    print(f"wrote {OUT} ({len(captured)} entries)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
