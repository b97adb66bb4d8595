#!/usr/bin/env python3
"""A twisted tensor square of Sz(128) and the flat found from one torus element.

Also builds the action of Sz(8) on the 65 points of its ovoid.
"""
from szgroup import linalg as la
from szgroup.field import make_field
from szgroup.groupcore import GenSet, make_rng
from szgroup.suzuki import SuzukiCtx
from szgroup.tensor import (build_twisted_tensor, cycles, find_flat, flat_position,
                            perm_representation)

F = make_field(3)
rng = make_rng(5)
tc = build_twisted_tensor(F, (0, 1))
print("module dimension", tc.dim, " enveloping algebra", la.enveloping_dim(F, tc.gens.gens))

S = find_flat(tc.gens, F, 2, rng)
print("flat of dimension", S.dim, "in tensor position", flat_position(F, S, 2))

F8 = make_field(1)
ctx = SuzukiCtx(F8)
rep = perm_representation(GenSet(F8, ctx.std_gens), rng)
print("orbit size", len(rep))
for name, perm in zip(("S(1,0)", "M'(lam)", "T"), rep.perms):
    print(f"{name:8s}", cycles(perm)[:70], "...")
