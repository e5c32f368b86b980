"""Named check results, serializable to the documented JSON shape."""

from __future__ import annotations

import json
import time


class Report:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []
        self._t0 = time.monotonic()
        self.elapsed_ms = 0

    def check(self, name, ok, witness=None):
        self.checks.append({"name": name, "status": "pass" if ok else "fail", "witness": witness})
        return bool(ok)

    def done(self):
        self.elapsed_ms = int((time.monotonic() - self._t0) * 1000)
        return self

    @property
    def passed(self):
        return all(c["status"] == "pass" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c["status"] == "fail"]

    def to_dict(self):
        return {"suite": self.suite, "checks": self.checks, "elapsed-ms": self.elapsed_ms}

    def summary(self):
        n = len(self.checks)
        bad = len(self.failures())
        state = "pass" if bad == 0 else "FAIL"
        return f"[{state}] {self.suite}: {n - bad}/{n} checks ({self.elapsed_ms} ms)"


def reports_to_json(reports):
    status = "pass" if all(r.passed for r in reports) else "fail"
    payload = {"status": status, "suites": [r.to_dict() for r in sorted(reports, key=lambda r: r.suite)]}
    return json.dumps(payload, indent=2)
