#!/usr/bin/env python3
"""Straight-line recomputation of IoT network decisions, used as a test fixture.

Everything is typed in from the network tables; nothing is read from the
C++ scenario file. For every (noise, jamming) level pair and current
configuration C2, it scores the options {C1, C5} and the full space, with
the current configuration competing as "keep".

Usage:
    python3 tools/iot_oracle.py > tests/fixtures/iot_decisions.json
"""

import json
from fractions import Fraction as F

LEVELS = ["Low", "Medium", "High"]

# id: (power, schedule, energy, noise loss L/M/H, jamming loss L/M/H)
CONFIGS = {
    "C1": ("low", "S1", 40, (2, 4, 6), (3, 6, 9)),
    "C2": ("medium", "S1", 80, (1, 2, 3), (2, 4, 6)),
    "C3": ("high", "S1", 120, (0, 0, 1), (1, 2, 3)),
    "C4": ("low", "S2", 30, (3, 6, 8), (4, 8, 12)),
    "C5": ("medium", "S2", 60, (2, 3, 4), (3, 6, 8)),
    "C6": ("high", "S2", 90, (1, 1, 2), (2, 3, 4)),
}
POWER_CHANGE = {"S1": 5, "S2": 10}
SWITCH = {("S1", "S2"): 30, ("S2", "S1"): 15}
MATRIX = [[1, 1, 2], [1, 2, 3], [2, 3, 3]]
W_GOAL = F(1, 2)
BENEFIT_FACTOR = 2
W_VFC, W_RISK = F(7, 10), F(3, 10)


def qualities(cid, noise, jam):
    _, _, energy, nl, jl = CONFIGS[cid]
    n, j = LEVELS.index(noise), LEVELS.index(jam)
    return energy, nl[n] + jl[j], jl[j]


def utility_loss(loss):
    return 100 if loss <= 10 else 0


def utility_energy(e):
    return max(0, 100 - e)


def cost(a, b):
    pa, sa = CONFIGS[a][0], CONFIGS[a][1]
    pb, sb = CONFIGS[b][0], CONFIGS[b][1]
    c = 0
    if pa != pb:
        c += POWER_CHANGE[sb]
    if sa != sb:
        c += SWITCH[(sa, sb)]
    return c


def risk(cid, noise, jam):
    _, _, jl = qualities(cid, noise, jam)
    likelihood = LEVELS.index(jam) + 1
    consequence = 1 if jl <= 3 else (2 if jl <= 6 else 3)
    return MATRIX[likelihood - 1][consequence - 1]


def decide(current, options, noise, jam):
    e0, l0, _ = qualities(current, noise, jam)
    u0 = (utility_loss(l0), utility_energy(e0))
    rows = {}
    exact = {}
    for o in options:
        e, l, _ = qualities(o, noise, jam)
        eb = (utility_loss(l) - u0[0]) * W_GOAL + (utility_energy(e) - u0[1]) * W_GOAL
        ec = cost(current, o)
        ed = F(eb * BENEFIT_FACTOR) / ec
        er = risk(o, noise, jam)
        exact[o] = ed * W_VFC - er * W_RISK
        rows[o] = {"eb": float(eb), "ec": ec, "ed": float(ed), "er": er, "score": float(exact[o])}
    keep = -risk(current, noise, jam) * W_RISK
    exact[current] = keep
    best = max(sorted(exact), key=lambda k: exact[k])  # max keeps the first (smallest id) on ties
    return {
        "noise": noise,
        "jamming": jam,
        "current": current,
        "options": sorted(options),
        "rows": rows,
        "keepScore": float(keep),
        "selected": best,
        "noAdaptation": best == current,
    }


def main():
    cases = []
    for noise in LEVELS:
        for jam in LEVELS:
            cases.append(decide("C2", ["C1", "C5"], noise, jam))
            cases.append(decide("C2", [c for c in CONFIGS if c != "C2"], noise, jam))
    print(json.dumps({"cases": cases}, indent=2))


if __name__ == "__main__":
    main()
