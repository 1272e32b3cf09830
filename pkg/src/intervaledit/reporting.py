"""Report rendering: per-node CSV, search-profile figures, counterexample bundles.

A report directory gets the delimited node log plus two PNG figures
(branch-degree histogram and nodes-per-depth profile) next to the JSON run
record, so regressions are diffable and eyeballable without rerunning.
"""

from __future__ import annotations

import csv
import json
import os
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .instances import serialize_instance  # noqa: E402


def write_solve_report(outdir: str, record: dict, stats, g=None) -> list[str]:
    """Write record.json, nodes.csv and the two figures; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    record_path = os.path.join(outdir, "record.json")
    with open(record_path, "w", encoding="ascii") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(record_path)

    nodes_path = os.path.join(outdir, "nodes.csv")
    with open(nodes_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node", "depth", "kind", "branch_degree"])
        for idx, (depth, kind, degree) in enumerate(stats.node_records):
            writer.writerow([idx, depth, kind, degree])
    written.append(nodes_path)

    if g is not None:
        instance_path = os.path.join(outdir, "instance.txt")
        with open(instance_path, "w", encoding="ascii") as fh:
            fh.write(serialize_instance(g))
        written.append(instance_path)

    written.append(_degree_histogram(outdir, stats))
    written.append(_depth_profile(outdir, stats))
    return written


def _degree_histogram(outdir: str, stats) -> str:
    path = os.path.join(outdir, "branch_degrees.png")
    degrees = [deg for _, _, deg in stats.node_records]
    fig, ax = plt.subplots(figsize=(6, 4))
    if degrees:
        upper = max(degrees)
        ax.hist(degrees, bins=range(0, upper + 2), align="left",
                color="steelblue", edgecolor="black")
    ax.set_xlabel("branch degree")
    ax.set_ylabel("nodes")
    ax.set_title("Branching degree distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _depth_profile(outdir: str, stats) -> str:
    path = os.path.join(outdir, "depth_profile.png")
    counts: dict[int, int] = {}
    for depth, _, _ in stats.node_records:
        counts[depth] = counts.get(depth, 0) + 1
    fig, ax = plt.subplots(figsize=(6, 4))
    if counts:
        depths = sorted(counts)
        ax.bar(depths, [counts[d] for d in depths], color="darkseagreen",
               edgecolor="black")
    ax.set_xlabel("depth")
    ax.set_ylabel("nodes")
    ax.set_title("Search-tree depth profile")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_counterexample_bundle(outdir: str, name: str, g, solver_answer: dict,
                                oracle_answer: dict, note: Optional[str] = None) -> str:
    """Instance plus both answers, dropped in a directory for later autopsy."""
    bundle = os.path.join(outdir, name)
    os.makedirs(bundle, exist_ok=True)
    with open(os.path.join(bundle, "instance.txt"), "w", encoding="ascii") as fh:
        fh.write(serialize_instance(g))
    with open(os.path.join(bundle, "solver.json"), "w", encoding="ascii") as fh:
        json.dump(solver_answer, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(bundle, "oracle.json"), "w", encoding="ascii") as fh:
        json.dump(oracle_answer, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if note:
        with open(os.path.join(bundle, "NOTE.txt"), "w", encoding="ascii") as fh:
            fh.write(note + "\n")
    return bundle
