"""Machine-readable run records with a fixed schema.

The schema is strict on purpose: benchmark tooling diffs these documents, so
unknown fields are rejected and field sets are pinned per section.  Elapsed
time is carried but documented as the one field runs may differ in.
"""

from __future__ import annotations

from typing import Optional

RECORD_FIELDS = {
    "problem", "n", "m", "k", "optimize", "outcome", "solution",
    "stats", "verification", "oracle", "seed",
}
STATS_FIELDS = {"nodes", "max_depth", "max_branch_degree", "elapsed_seconds"}
VERIFICATION_FIELDS = {"recognition", "clique_arrangement"}
ORACLE_FIELDS = {"ran", "optimum", "match", "skipped_reason"}


def build_record(problem: str, g, k: Optional[int], optimize: bool,
                 found: bool, solution, stats, verification: dict,
                 oracle: Optional[dict] = None, seed: Optional[int] = None) -> dict:
    if problem == "deletion":
        sol = sorted(solution) if solution is not None else None
    else:
        sol = sorted([list(e) for e in solution]) if solution is not None else None
    record = {
        "problem": problem,
        "n": g.n,
        "m": g.edge_count(),
        "k": k,
        "optimize": optimize,
        "outcome": "yes" if found else "no",
        "solution": sol,
        "stats": {
            "nodes": stats.nodes,
            "max_depth": stats.max_depth,
            "max_branch_degree": stats.max_branch_degree,
            "elapsed_seconds": round(stats.elapsed, 6),
        },
        "verification": verification,
        "oracle": oracle,
        "seed": seed,
    }
    validate_record(record)
    return record


def validate_record(record: dict) -> None:
    unknown = set(record) - RECORD_FIELDS
    if unknown:
        raise ValueError(f"unknown record fields: {sorted(unknown)}")
    missing = RECORD_FIELDS - set(record)
    if missing:
        raise ValueError(f"missing record fields: {sorted(missing)}")
    if record["outcome"] not in ("yes", "no"):
        raise ValueError("outcome must be yes or no")
    if (record["solution"] is not None) != (record["outcome"] == "yes"):
        raise ValueError("solution must be present exactly for yes outcomes")
    stats = record["stats"]
    if set(stats) != STATS_FIELDS:
        raise ValueError(f"stats fields must be exactly {sorted(STATS_FIELDS)}")
    verification = record["verification"]
    if record["outcome"] == "yes":
        if set(verification) != VERIFICATION_FIELDS:
            raise ValueError(
                f"verification fields must be exactly {sorted(VERIFICATION_FIELDS)}")
    if record["oracle"] is not None:
        unknown = set(record["oracle"]) - ORACLE_FIELDS
        if unknown:
            raise ValueError(f"unknown oracle fields: {sorted(unknown)}")


def records_equal_modulo_timing(a: dict, b: dict) -> bool:
    def strip(rec):
        out = dict(rec)
        out["stats"] = {k: v for k, v in rec["stats"].items()
                        if k != "elapsed_seconds"}
        return out
    return strip(a) == strip(b)
