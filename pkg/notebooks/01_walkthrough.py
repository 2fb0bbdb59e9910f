# %% [markdown]
# # Walking through a few small instances
#
# A spider is a tree with a single vertex of degree three or more (the
# body).  Tokens form an independent set and move one edge at a time, never
# landing next to another token.  `solve` returns a shortest sequence of
# such slides together with the lower bound `mstar` it is measured against.

# %%
from __future__ import annotations

from spiderslide import build_spider, detour_count, is_valid_sequence, solve, spider_from_legs

g = spider_from_legs([2, 2, 2])
print("legs:", g.legs, "body:", g.body)

# %% [markdown]
# Moving the token on 3 over to 5 while 2 stays put costs exactly the
# distance travelled: no detours are needed.

# %%
r = solve(g, {2, 3}, {2, 5})
print(r.summary())
print(r.sequence.to_list())

# %% [markdown]
# Vertex 1 is occupied at both ends, yet something has to travel from leg b
# to leg c past it.  Tokens are interchangeable: the one on 1 walks on to 6
# and the one on 4 takes its place.  The edge between 1 and the body is
# crossed twice, two slides that no assignment accounts for.

# %%
r = solve(g, {1, 4}, {1, 6})
print(r.summary())
print(r.sequence.to_list())
print("detours per edge:", detour_count(g, r.sequence).per_edge)

# %% [markdown]
# Two tokens next to the body on the same side: one of them retreats
# deeper into its leg, and comes back at the end.

# %%
t = build_spider(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
r = solve(t, {2, 3}, {0, 3})
print(r.summary(), "predicted detours:", r.predicted_detours)
print(r.sequence.to_list())
check = is_valid_sequence(t, {2, 3}, r.sequence)
print("valid:", check.valid, "final:", sorted(check.final))

# %% [markdown]
# On a star with two occupied leaves no token can ever move, so the
# instance is rejected with a reason instead of a sequence.

# %%
star = build_spider(4, [(0, 1), (0, 2), (0, 3)])
r = solve(star, {1, 2}, {2, 3})
print(r.summary())
print(r.explanation)
