#!/usr/bin/env python3
"""Sylow and maximal subgroups of Sz(8), with orders checked by enumeration."""
import numpy as np

from szgroup import linalg as la
from szgroup.field import make_field
from szgroup.groupcore import GenSet, element_keys, enumerate_group, group_order, make_rng
from szgroup.subgroups import (Recognition, maximal_conjugate, maximal_generate,
                               sylow_conjugate, sylow_generate)
from szgroup.suzuki import SuzukiCtx

F = make_field(1)
ctx = SuzukiCtx(F)
rng = make_rng(8)
rec = Recognition(GenSet(F, ctx.std_gens), rng, ctx)

print("|Sz(8)| =", group_order(F, ctx.std_gens))
for p in (2, 5, 7, 13):
    Y = sylow_generate(rec, p, rng).elements
    Z = sylow_generate(rec, p, rng).elements
    c, w = sylow_conjugate(rec, Y, Z, p, rng)
    ci = la.mat_inv(F, c)
    same = element_keys(F, enumerate_group(F, [la.conj(F, y, c, ci) for y in Y])) == \
        element_keys(F, enumerate_group(F, Z))
    print(f"Sylow {p:2d}: order {group_order(F, Y):3d}  conjugated onto another: {same}  (SLP {len(w)})")

for cls in ("PointStab", "TorusNormaliser", "B1", "B2"):
    sg = maximal_generate(rec, cls, rng)
    print(f"{cls:16s} order {group_order(F, sg.elements)}")

# two point stabilisers are conjugate; the conjugator has a word in the generators
Y = maximal_generate(rec, "PointStab", rng).elements
x = GenSet(F, ctx.std_gens).random(rng).mat
Z = [la.conj(F, g, x) for g in Y]
c, w = maximal_conjugate(rec, Y, Z, "PointStab", rng)
print("conjugator is a member:", ctx.is_member(c), " word evaluates to it:",
      np.array_equal(w.evaluate(F, ctx.std_gens), c))
