# %% [markdown]
# # How long sequences get
#
# Put tokens on every other vertex of one leg and ask for the same pattern
# on a second leg.  Each of about n/6 tokens travels about n/3 edges, so the
# shortest sequence has length quadratic in n.  The solver writes moves
# into numpy arrays, which keeps the running time close to the output size.

# %%
from __future__ import annotations

import time

import numpy as np

from spiderslide import is_valid_sequence, leg_scaling_instance, solve

sizes = [300, 1000, 3000, 10_000]
rows = []
for n in sizes:
    g, i, j = leg_scaling_instance(n)
    t0 = time.perf_counter()
    r = solve(g, i, j)
    dt = time.perf_counter() - t0
    rows.append((n, len(i), r.length, dt))
    print(f"n={n:6d} tokens={len(i):5d} len={r.length:10d} case={r.case_tag} {dt:.3f}s")

# %%
x = np.log([row[0] for row in rows])
length_slope = np.polyfit(x, np.log([row[2] for row in rows]), 1)[0]
time_slope = np.polyfit(x, np.log([row[3] for row in rows]), 1)[0]
print(f"log-log slope of length: {length_slope:.3f}")
print(f"log-log slope of time:   {time_slope:.2f}")

# %% [markdown]
# Replaying a sequence is itself linear in its length, so checking the
# smaller outputs stays cheap.

# %%
g, i, j = leg_scaling_instance(1000)
r = solve(g, i, j)
check = is_valid_sequence(g, i, r.sequence)
print("valid:", check.valid, "reaches J:", check.final == j)
