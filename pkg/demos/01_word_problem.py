# %% [markdown]
# Normal forms, lengths and balls in a few small Coxeter groups.

# %%
from coxwalls import a2, affine_a2, grid, infinite_dihedral

d = infinite_dihedral()
print(d.element("stts"), d.element("ststs").length)

# %%
# A2 is the symmetric group on three letters: tst and sts are the same element
s3 = a2()
print(s3.element("tst"), len(s3.ball(10)))

# %%
# growth of balls: linear for D-inf, quadratic for the plane groups
for sys, label in ((d, "dinf"), (affine_a2(), "a2tilde"), (grid(), "grid")):
    print(label, [len(sys.ball(r)) for r in range(7)])

# %%
# the tits engine rewrites words by braid moves; it agrees with the roots engine
t = affine_a2().with_engine("tits")
w = "stustsut"
print(t.normal_form(w), affine_a2().normal_form(w))
