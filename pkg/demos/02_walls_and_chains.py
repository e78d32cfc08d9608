# %% [markdown]
# Walls crossed by geodesics, and how they split into chains of parallel walls.

# %%
from coxwalls import affine_a2, grid
from coxwalls.walls import Crossing, crosses, dilworth_partition, observed_antichain_bound, walls_separating

g = grid()
one = g.identity
w = g.element("abacdc")
ws = walls_separating(g, one, w)
print([str(q) for q in ws])

# %%
# walls from different factors cross, walls from one factor are parallel
print(crosses(g, ws[0], ws[3]), crosses(g, ws[0], ws[1]) is Crossing.PARALLEL)

# %%
part = dilworth_partition(g, one, w)
for chain in part.chains:
    print(" < ".join(str(q) for q in chain))

# %%
# the largest family of pairwise crossing walls stays bounded as the ball grows
tri = affine_a2()
print([observed_antichain_bound(tri, r) for r in range(1, 9)])
