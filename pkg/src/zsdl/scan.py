"""Scan runner: evaluate claims over families, emit reports, explore ratios.

Work is sharded across processes by contiguous ranges of the family's raw
index space; per-shard partial results merge into a report that is
byte-identical for any worker count (wall time aside). Counterexamples are
sorted by graph6 and re-verifiable by replaying the recorded graph.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context
from typing import Optional

from .claims import REGISTRY, EvalContext
from .families import FamilySpec, family_stream, item_graph, parse_family_spec
from .graph_core import GraphError, classify, encode_graph6, leaves, parse_graph6
from .strong_resolving import metric_dimension, strong_metric_dimension
from .zero_forcing import zero_forcing_number

CSV_COLUMNS = ["graph6", "n", "z", "sdim", "dim", "sigma", "rank", "class"]


@dataclass
class ScanReport:
    claim_id: str
    family: str
    graphs_checked: int
    counterexamples: list[dict]
    extremal: dict[str, dict]
    wall_time: float
    schema_version: int = 1

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "schemaVersion": self.schema_version,
            "claimId": self.claim_id,
            "family": self.family,
            "graphsChecked": self.graphs_checked,
            "counterexamples": self.counterexamples,
            "extremal": self.extremal,
            "wallTime": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for ce in self.counterexamples:
            writer.writerow(invariant_row(ce["graph6"]))
        return buf.getvalue()


def invariant_row(graph6: str) -> dict:
    """The tabular invariant record for one graph6 line."""
    g = parse_graph6(graph6)
    row: dict[str, object] = {
        "graph6": graph6,
        "n": g.n,
        "z": zero_forcing_number(g).value,
        "sdim": strong_metric_dimension(g).value,
        "sigma": len(leaves(g)),
    }
    if g.n and g.is_connected():
        cls = classify(g)
        row["dim"] = metric_dimension(g).value
        row["rank"] = cls.cycle_rank
        row["class"] = cls.kind.value
    else:
        row["dim"] = ""
        row["rank"] = ""
        row["class"] = "disconnected" if g.n else "empty"
    return row


@dataclass
class _Partial:
    checked: int = 0
    violations: dict[str, list[dict]] = field(default_factory=dict)
    extremal: dict[str, dict[str, tuple]] = field(default_factory=dict)


def _scan_range(spec_text: str, claim_ids: list[str], lo: int, hi: int) -> _Partial:
    spec = parse_family_spec(spec_text)
    fam = family_stream(spec)
    claims = [REGISTRY[cid] for cid in claim_ids]
    ctx = EvalContext()
    part = _Partial(violations={cid: [] for cid in claim_ids})
    extremal: dict[str, dict[str, tuple]] = {cid: {} for cid in claim_ids}
    for i in range(lo, hi):
        item = fam.item_at(i)
        if item is None:
            continue
        ctx.begin_item()
        part.checked += 1
        g6 = None
        for claim in claims:
            values = claim.evaluate(item, ctx)
            if values is not None:
                if g6 is None:
                    g6 = encode_graph6(item_graph(item))
                record = {"graph6": g6}
                record.update(_jsonable(values))
                part.violations[claim.id].append(record)
            if claim.extremal is not None:
                if g6 is None:
                    g6 = encode_graph6(item_graph(item))
                for key, val in claim.extremal(item, ctx).items():
                    cur = extremal[claim.id].get(key)
                    cand = (val, g6)
                    if cur is None or cand[0] > cur[0] or (cand[0] == cur[0] and g6 < cur[1]):
                        extremal[claim.id][key] = cand
    part.extremal = extremal
    return part


def _jsonable(values: dict) -> dict:
    out = {}
    for k, v in values.items():
        if isinstance(v, Fraction):
            out[k] = {"numerator": v.numerator, "denominator": v.denominator}
        else:
            out[k] = v
    return out


def _merge(parts: list[_Partial], claim_ids: list[str]) -> _Partial:
    merged = _Partial(violations={cid: [] for cid in claim_ids})
    merged.extremal = {cid: {} for cid in claim_ids}
    for p in parts:
        merged.checked += p.checked
        for cid in claim_ids:
            merged.violations[cid].extend(p.violations.get(cid, []))
            for key, cand in p.extremal.get(cid, {}).items():
                cur = merged.extremal[cid].get(key)
                if (
                    cur is None
                    or cand[0] > cur[0]
                    or (cand[0] == cur[0] and cand[1] < cur[1])
                ):
                    merged.extremal[cid][key] = cand
    for cid in claim_ids:
        merged.violations[cid].sort(key=lambda r: (r["graph6"], json.dumps(r, sort_keys=True)))
    return merged


def run_claims(
    claim_ids: list[str], family: FamilySpec | str, jobs: int = 1
) -> list[ScanReport]:
    """Evaluate several claims over one family in a single enumeration pass."""
    spec = parse_family_spec(family) if isinstance(family, str) else family
    for cid in claim_ids:
        claim = REGISTRY.get(cid)
        if claim is None:
            raise GraphError(f"unknown claim {cid!r}")
        if not claim.accepts(spec.family):
            raise GraphError(f"claim {cid} does not run on family {spec.family!r}")
    fam = family_stream(spec)  # validates the range up front
    start = time.monotonic()
    spec_text = str(spec)
    if jobs <= 1 or fam.raw_size < 4 * jobs:
        parts = [_scan_range(spec_text, claim_ids, 0, fam.raw_size)]
    else:
        bounds = [fam.raw_size * j // jobs for j in range(jobs + 1)]
        args = [
            (spec_text, claim_ids, bounds[j], bounds[j + 1]) for j in range(jobs)
        ]
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.starmap(_scan_range, args)
    merged = _merge(parts, claim_ids)
    wall = time.monotonic() - start
    reports = []
    for cid in claim_ids:
        extremal = {
            key: {"value": _extremal_value(val), "graph6": g6}
            for key, (val, g6) in sorted(merged.extremal[cid].items())
        }
        reports.append(
            ScanReport(
                claim_id=cid,
                family=spec_text,
                graphs_checked=merged.checked,
                counterexamples=merged.violations[cid],
                extremal=extremal,
                wall_time=wall,
            )
        )
    return reports


def _extremal_value(val) -> object:
    if isinstance(val, Fraction):
        return {"numerator": val.numerator, "denominator": val.denominator}
    return val


def run_claim(claim_id: str, family: FamilySpec | str, jobs: int = 1) -> ScanReport:
    """Evaluate one claim over every member of a family."""
    return run_claims([claim_id], family, jobs=jobs)[0]


@dataclass(frozen=True)
class RatioRecord:
    graph6: str
    z: int
    sdim: int
    rank: int
    ratio: Fraction


@dataclass
class RatioReport:
    family: str
    top: list[RatioRecord]
    graphs_checked: int
    skipped_rank_zero: int
    min_ratio: Optional[Fraction]
    max_ratio: Optional[Fraction]
    wall_time: float

    def to_dict(self) -> dict:
        def frac(x: Optional[Fraction]) -> Optional[dict]:
            if x is None:
                return None
            return {"numerator": x.numerator, "denominator": x.denominator}

        return {
            "schemaVersion": 1,
            "family": self.family,
            "graphsChecked": self.graphs_checked,
            "skippedRankZero": self.skipped_rank_zero,
            "minRatio": frac(self.min_ratio),
            "maxRatio": frac(self.max_ratio),
            "top": [
                {
                    "graph6": r.graph6,
                    "z": r.z,
                    "sdim": r.sdim,
                    "rank": r.rank,
                    "ratio": frac(r.ratio),
                }
                for r in self.top
            ],
            "wallTime": self.wall_time,
        }


def ratio_explore(family: FamilySpec | str, top_k: int = 10) -> RatioReport:
    """Largest exact (Z - sdim) / r ratios over a family of connected graphs.

    Graphs with cycle rank 0 carry no ratio and are counted as skipped;
    negative ratios still feed the min/max statistics.
    """
    spec = parse_family_spec(family) if isinstance(family, str) else family
    fam = family_stream(spec)
    start = time.monotonic()
    checked = 0
    skipped = 0
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    kept: list[tuple] = []  # sort key (-ratio, graph6) plus the record
    for item in fam:
        g = item_graph(item)
        if not g.is_connected():
            continue
        rank = g.edge_count() - g.n + 1
        if rank == 0:
            skipped += 1
            continue
        checked += 1
        z = zero_forcing_number(g).value
        sdim = strong_metric_dimension(g).value
        ratio = Fraction(z - sdim, rank)
        if lo is None or ratio < lo:
            lo = ratio
        if hi is None or ratio > hi:
            hi = ratio
        g6 = encode_graph6(g)
        kept.append(((-ratio, g6), RatioRecord(g6, z, sdim, rank, ratio)))
        if len(kept) > 4 * top_k:
            kept.sort(key=lambda kr: kr[0])
            del kept[top_k:]
    kept.sort(key=lambda kr: kr[0])
    return RatioReport(
        family=str(spec),
        top=[rec for _, rec in kept[:top_k]],
        graphs_checked=checked,
        skipped_rank_zero=skipped,
        min_ratio=lo,
        max_ratio=hi,
        wall_time=time.monotonic() - start,
    )


def emit_report(report: ScanReport, out_base: str) -> list[str]:
    """Write the JSON and CSV forms of a report; returns the paths written."""
    json_path = f"{out_base}.json"
    csv_path = f"{out_base}.csv"
    with open(json_path, "w") as fh:
        fh.write(report.to_json())
        fh.write("\n")
    with open(csv_path, "w") as fh:
        fh.write(report.to_csv())
    return [json_path, csv_path]
