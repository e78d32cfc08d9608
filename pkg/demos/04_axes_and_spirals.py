# %% [markdown]
# Powers of an element keep a bounded bracket number and a bounded tracking
# constant. A spiral in the grid does not: both grow with every winding.

# %%
from coxwalls import bracket_report, grid, periodic_path, spiral_path, straighten

g = grid()
for k in range(1, 9):
    p = periodic_path(g, "abacd", k)
    print(k, len(p), bracket_report(g, p).max, straighten(g, p).K_achieved)

# %%
for w in range(1, 6):
    p = spiral_path(w, per_arm=True)
    r = straighten(g, p)
    print(w, len(p), bracket_report(g, p).max, r.K_achieved)
