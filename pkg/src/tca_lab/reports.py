"""Deterministic run reports.

A Report gathers free-form body lines, structured records, and named
checks with PASS / FAIL / INCONCLUSIVE verdicts, then renders one
self-describing document: the human-readable lines followed by a JSON
block so downstream scripts never scrape prose.

Rendering is byte-identical across runs with the same configuration and
seed.  The timestamp honors the reproducible-builds convention: it is
taken from SOURCE_DATE_EPOCH when that variable is set and reads
``unstamped`` otherwise, so determinism never depends on the clock.
"""

import json
import os
import time
from fractions import Fraction

from . import __version__

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

EXIT_PASS = 0
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3
EXIT_INPUT_ERROR = 4

_RULE = "-" * 64


def _timestamp():
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is None:
        return "unstamped"
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(int(epoch)))


def _jsonable(value):
    if isinstance(value, Fraction):
        return (str(value.numerator) if value.denominator == 1
                else f"{value.numerator}/{value.denominator}")
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class Report:
    def __init__(self, subcommand, config=None, seed=None):
        self.subcommand = subcommand
        self.config = dict(config or {})
        self.seed = seed
        self.body = []
        self.records = []
        self.checks = []

    def line(self, text=""):
        self.body.append(str(text))

    def record(self, kind, **fields):
        self.records.append({"kind": kind, **fields})

    def check(self, name, verdict, detail=""):
        """Register a named check; ``verdict`` may be a bool or a verdict string."""
        if isinstance(verdict, bool):
            verdict = PASS if verdict else FAIL
        if verdict not in (PASS, FAIL, INCONCLUSIVE):
            raise ValueError(f"not a verdict: {verdict!r}")
        self.checks.append({"name": name, "verdict": verdict, "detail": detail})
        suffix = f"  [{detail}]" if detail else ""
        self.body.append(f"check {name}: {verdict}{suffix}")
        return verdict

    @property
    def verdict(self):
        got = {c["verdict"] for c in self.checks}
        if FAIL in got:
            return FAIL
        if INCONCLUSIVE in got:
            return INCONCLUSIVE
        return PASS

    def exit_code(self):
        return {PASS: EXIT_PASS, FAIL: EXIT_FAIL,
                INCONCLUSIVE: EXIT_INCONCLUSIVE}[self.verdict]

    def render(self):
        cfg = " ".join(f"{k}={v}" for k, v in sorted(self.config.items()))
        head = [
            f"tca-lab {__version__} :: {self.subcommand}",
            f"config: {cfg}" if cfg else "config: (defaults)",
            f"seed: {self.seed}" if self.seed is not None else "seed: none",
            f"timestamp: {_timestamp()}",
            _RULE,
        ]
        tail = [
            _RULE,
            f"verdict: {self.verdict}",
            "=== machine-readable ===",
            json.dumps(self.as_document(), sort_keys=True, separators=(",", ":")),
        ]
        return "\n".join(head + self.body + tail) + "\n"

    def as_document(self):
        return _jsonable({
            "tool": "tca-lab",
            "version": __version__,
            "subcommand": self.subcommand,
            "config": self.config,
            "seed": self.seed,
            "timestamp": _timestamp(),
            "records": self.records,
            "checks": self.checks,
            "verdict": self.verdict,
        })

    def write(self, output=None):
        text = self.render()
        if output is None:
            print(text, end="")
        else:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        return text
