# %% [markdown]
# # Agreement with exhaustive search
#
# The oracle runs a breadth-first search over all independent sets of the
# same size, so on small spiders it gives the exact shortest length.  Here
# we compare it with the solver on a seeded batch and look at how the
# instances spread over the construction cases.

# %%
from __future__ import annotations

import collections
import time

import numpy as np

from spiderslide import ShapeSpec, enumerate_instances, oracle_shortest, solve

spec = ShapeSpec(legs=(3, 5), leg_len=4, tokens=4, max_vertices=13)
instances = list(enumerate_instances(spec, seed=11, count=2000))
print(len(instances), "instances")

# %%
tags = collections.Counter()
gaps = []
mismatches = 0
t0 = time.perf_counter()
for g, i, j in instances:
    r = solve(g, i, j)
    truth = oracle_shortest(g, i, j)
    if (truth is None) != (not r.feasible) or (truth and truth.length != r.length):
        mismatches += 1
    tags[r.case_tag if r.feasible else "infeasible"] += 1
    if r.feasible:
        gaps.append(r.length - r.mstar)
print(f"mismatches: {mismatches}  ({time.perf_counter() - t0:.1f}s)")

# %% [markdown]
# Most instances need no detours at all.  When they do, the count is even:
# every extra slide across an edge is paired with one coming back.

# %%
for tag, count in sorted(tags.items()):
    print(f"{tag:22s} {count}")
values, counts = np.unique(gaps, return_counts=True)
for v, c in zip(values, counts):
    print(f"detours = {v}: {c}")
