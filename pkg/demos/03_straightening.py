# %% [markdown]
# Projecting a path onto geodesics, then straightening it into one geodesic.

# %%
from coxwalls import affine_a2, bracket_report, geodesic_approximation, path, straighten, tracking_distance

sys = affine_a2()
p = path(sys, "ussusutuust")
print(p, "length", len(p), "endpoints at distance", sys.distance(p.start, p.end))
print("bracket numbers", bracket_report(sys, p).per_vertex)

# %%
approx = geodesic_approximation(sys, p)
print("approximation", approx.approx, "L =", approx.L_achieved)

# %%
r = straighten(sys, p)
print("geodesic", r.geodesic, "K =", r.K_achieved)
for e in r.trace:
    print(" ", e.kind, "depth", e.depth, "span", e.span, e.length_before, "->", e.length_after)

# %%
# the geodesic also stays close to the path
print(tracking_distance(sys, r.geodesic, p))
