"""Identity ledger: a compiled-in catalog of computational identity checks.

Every check has a stable id ("S2.eq2.1"), a section tag, a kind, a cost
class and a runner returning None on success or a witness string on
failure.  Checks marked out-of-scope carry no runner and report SKIPPED.
run_suite executes matching checks in a worker pool and assembles a
deterministic report in catalog order.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..errors import NotFound

KINDS = {
    "POLY_IDENTITY", "FACTORIZATION", "RESULTANT_EQUALS",
    "DISCRIMINANT_EQUALS", "MODP_CONGRUENCE", "TOWER_EQUALS",
    "GALOIS_PROBE", "CONSTANT_EQUALS",
}

WITNESS_LIMIT = 4096


@dataclass
class IdentityCheck:
    id: str
    section: str
    kind: str
    description: str
    run: object = None            # callable () -> None | witness string
    cost: str = "fast"            # fast | heavy
    skip_reason: str = None       # set for out-of-scope stubs


@dataclass
class CheckResult:
    id: str
    section: str
    kind: str
    status: str                   # PASS | FAIL | SKIPPED
    elapsed_ms: int
    witness: str = None

    def to_json(self):
        out = {
            "id": self.id,
            "section": self.section,
            "kind": self.kind,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witness is not None:
            out["witness"] = self.witness[:WITNESS_LIMIT]
        return out


_REGISTRY: dict = {}
_LOADED = False


def register(check_id, section, kind, description, run=None, cost="fast",
             skip_reason=None):
    if kind not in KINDS:
        raise ValueError(f"unknown check kind {kind}")
    if check_id in _REGISTRY:
        raise ValueError(f"duplicate check id {check_id}")
    _REGISTRY[check_id] = IdentityCheck(
        id=check_id, section=section, kind=kind, description=description,
        run=run, cost=cost, skip_reason=skip_reason)


def check(check_id, section, kind, description, cost="fast"):
    """Decorator form of register()."""
    def wrap(fn):
        register(check_id, section, kind, description, run=fn, cost=cost)
        return fn
    return wrap


def _load_catalog():
    global _LOADED
    if _LOADED:
        return
    _LOADED = True
    from . import (  # noqa: F401
        s01, s02, s03, s04, s05, s06, s07, s08, s09, s10, s11,
        appendix, example_d11,
    )


def catalog():
    """Stable listing of (id, section, kind, description)."""
    _load_catalog()
    return [(c.id, c.section, c.kind, c.description) for c in _REGISTRY.values()]


def get_check(check_id):
    _load_catalog()
    if check_id not in _REGISTRY:
        raise NotFound(f"unknown identity id {check_id!r}")
    return _REGISTRY[check_id]


def _execute(chk):
    t0 = time.monotonic()
    if chk.run is None:
        return CheckResult(chk.id, chk.section, chk.kind, "SKIPPED", 0,
                           witness=chk.skip_reason)
    try:
        witness = chk.run()
    except Exception as exc:  # a crash is a FAIL with the exception as witness
        witness = f"{type(exc).__name__}: {exc}"
    elapsed = int((time.monotonic() - t0) * 1000)
    if witness is None:
        return CheckResult(chk.id, chk.section, chk.kind, "PASS", elapsed)
    return CheckResult(chk.id, chk.section, chk.kind, "FAIL", elapsed,
                       witness=str(witness))


def run_identity(check_id):
    return _execute(get_check(check_id))


@dataclass
class Report:
    run_id: str
    timestamp: str
    filter: dict
    results: list = field(default_factory=list)

    @property
    def summary(self):
        s = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            s[r.status.lower()] += 1
        return s

    @property
    def ok(self):
        return self.summary["fail"] == 0

    def to_json(self):
        return {
            "run_id": self.run_id,
            "timestamp": self.timestamp,
            "filter": self.filter,
            "results": [r.to_json() for r in self.results],
            "summary": self.summary,
        }


def run_suite(section=None, ids=None, heavy=False, threads=1):
    """Run matching checks; heavy ones only when asked for explicitly."""
    _load_catalog()
    selected = []
    for chk in _REGISTRY.values():
        if section and chk.section != section:
            continue
        if ids and chk.id not in ids:
            continue
        if chk.cost == "heavy" and not heavy and not (ids and chk.id in ids):
            continue
        selected.append(chk)
    if ids:
        missing = set(ids) - {c.id for c in selected}
        if missing:
            raise NotFound(f"unknown identity ids: {sorted(missing)}")
    filt = {"section": section, "ids": sorted(ids) if ids else None,
            "heavy": heavy}
    run_id = hashlib.sha256(
        json.dumps([filt, [c.id for c in selected]], sort_keys=True).encode()
    ).hexdigest()[:16]
    report = Report(run_id=run_id,
                    timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
                    filter=filt)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_execute, selected))
    else:
        results = [_execute(c) for c in selected]
    by_id = {r.id: r for r in results}
    report.results = [by_id[c.id] for c in selected]
    return report


def sections():
    _load_catalog()
    return sorted({c.section for c in _REGISTRY.values()})
