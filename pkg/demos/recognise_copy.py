#!/usr/bin/env python3
"""Hide Sz(32) by a random change of basis, then find it again.

Walks through recognition, conjugation back to the standard copy and
writing an element as a straight-line program in the hidden generators.
"""
import numpy as np

from szgroup import linalg as la
from szgroup.field import make_field
from szgroup.groupcore import GenSet, make_rng
from szgroup.recognize import recognize_conjugate, recognize_standard
from szgroup.standardize import conjugate_to_standard
from szgroup.subgroups import Recognition
from szgroup.suzuki import SuzukiCtx

F = make_field(2)  # q = 32
ctx = SuzukiCtx(F)
rng = make_rng(2024)

# random x in GL(4, 32)
while True:
    x = np.array([[F.random(rng) for _ in range(4)] for _ in range(4)])
    if la.det(F, x):
        break
xi = la.mat_inv(F, x)
hidden = [la.conj(F, g, x, xi) for g in ctx.std_gens]

print("standard copy?", recognize_standard(hidden, ctx))
print("conjugate of Sz(32)?", recognize_conjugate(hidden, ctx))

gs = GenSet(F, hidden)
g = conjugate_to_standard(gs, rng, ctx)
gi = la.mat_inv(F, g)
back = [la.conj(F, h, g, gi) for h in hidden]
print("after conjugating by g:", recognize_standard(back, ctx))

# any element of the hidden group as a word in the hidden generators
rec = Recognition(gs, rng, ctx)
elt = gs.random(rng).mat
w = rec.H.slp(rec.tracked(rec.to_std(elt), rng))
print("SLP length", len(w), "reproduces element:", np.array_equal(w.evaluate(F, hidden), elt))
