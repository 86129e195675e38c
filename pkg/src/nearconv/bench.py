"""Parameter-sweep benchmark of the knapsack solvers.

A sweep spec is comma-separated key=value assignments; a value list
uses colons. Keys: n, pmax, wmax, W (optional, drawn per seed when
absent), seeds (count, default 3), algos (default bellman:fast).

    n=256:1024,pmax=64,wmax=64,seeds=5,algos=bellman:fast:symmetric

One CSV row per (algo, instance); values are seed-deterministic, the
wall_time_ns column is measurement and varies run to run.
"""
from __future__ import annotations

import csv
import itertools
import time

from . import generators
from .knapsack import solve

FIELDS = ["algo", "n", "wmax", "pmax", "W", "seed", "value", "wall_time_ns"]
_ALGOS = ("bellman", "fast", "symmetric", "auto")


def parse_sweep(spec):
    out = {
        "n": [128],
        "pmax": [64],
        "wmax": [64],
        "W": [None],
        "seeds": 3,
        "algos": ["bellman", "fast"],
    }
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"sweep entry {part!r} is not key=value")
        key, _, raw = part.partition("=")
        key = key.strip()
        vals = [v for v in raw.split(":") if v]
        if key == "algos":
            for v in vals:
                if v not in _ALGOS:
                    raise ValueError(f"unknown algo {v!r}")
            out["algos"] = vals
        elif key == "seeds":
            out["seeds"] = int(vals[0])
        elif key in ("n", "pmax", "wmax", "W"):
            out[key] = [int(v) for v in vals]
        else:
            raise ValueError(f"unknown sweep key {key!r}")
    if out["seeds"] < 1:
        raise ValueError("seeds must be >= 1")
    return out


def iter_rows(sweep):
    for n, pmax, wmax, W in itertools.product(
        sweep["n"], sweep["pmax"], sweep["wmax"], sweep["W"]
    ):
        for seed in range(sweep["seeds"]):
            # deterministic cross-process mix (tuple hash is not stable)
            inst_seed = (
                n * 1000003 ^ pmax * 7919 ^ wmax * 104729 ^ (W or 0) * 31 ^ seed
            ) & 0xFFFFFFFF
            inst = generators.knapsack_instance(inst_seed, n, pmax, wmax, W)
            for algo in sweep["algos"]:
                t0 = time.perf_counter_ns()
                value = solve(inst, algo=algo, seed=seed, value_only=True)
                ns = time.perf_counter_ns() - t0
                yield {
                    "algo": algo,
                    "n": n,
                    "wmax": inst.wmax,
                    "pmax": inst.pmax,
                    "W": inst.capacity,
                    "seed": seed,
                    "value": value,
                    "wall_time_ns": ns,
                }


def run_sweep(spec, out_path):
    sweep = parse_sweep(spec)
    count = 0
    with open(out_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=FIELDS)
        writer.writeheader()
        for row in iter_rows(sweep):
            writer.writerow(row)
            count += 1
    return count
