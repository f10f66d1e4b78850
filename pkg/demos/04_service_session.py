#!/usr/bin/env python3
"""Drive the what-if HTTP API end to end with only the standard library.

Boots the service in a background thread, creates a session from the JSON
fixture, asks for a ranking, applies a what-if patch (eliminate a criterion,
raise a grade) and shows the rank deltas, then proves the patch history
replays to the same table.
"""

import json
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from fsprank import Measure, emit_decision_table, rank
from fsprank.io import parse_assessment_document
from fsprank.service import create_app, replay_history

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "example.json"
PORT = 8765
BASE = f"http://127.0.0.1:{PORT}"


def request(method: str, path: str, body: bytes | None = None) -> dict:
    req = urllib.request.Request(
        BASE + path, data=body, method=method,
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req) as resp:
        return json.load(resp)


def main() -> None:
    server = uvicorn.Server(
        uvicorn.Config(create_app(), host="127.0.0.1", port=PORT, log_level="error")
    )
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    while not server.started:
        time.sleep(0.05)

    print("health:", request("GET", "/health"))

    sid = request("POST", "/sessions", FIXTURE.read_bytes())["session_id"]
    print("session:", sid)

    table = request("GET", f"/sessions/{sid}/rank?measure=g1")
    top = table["rows"][0]
    print(f"top pick: {top['alternative']}  gamma1={top['gamma1']} "
          f"({top['gamma1_decimal']})")

    patch = {
        "eliminate": ["ε5"],
        "edits": [{"alternative": "ψ1", "attribute": "ε4", "grade": "0.9"}],
        "measure": "g1",
    }
    diff = request("POST", f"/sessions/{sid}/whatif", json.dumps(patch).encode())
    print("rank deltas after patch:", diff["rank_deltas"])
    print("new order:", [r["alternative"] for r in diff["after"]["rows"]])

    info = request("GET", f"/sessions/{sid}")
    replayed = replay_history(
        parse_assessment_document(json.dumps(info["document"]), "json"),
        info["history"],
    )
    rebuilt = json.loads(emit_decision_table(rank(replayed, Measure.G1), "json"))
    served = request("GET", f"/sessions/{sid}/rank?measure=g1")
    print("history replay matches served ranking:", rebuilt == served)

    server.should_exit = True
    thread.join(timeout=5)


if __name__ == "__main__":
    main()
