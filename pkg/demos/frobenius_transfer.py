"""Gorenstein data transfers along the Frobenius extension E2 -> E2[t]/(t^2)."""

import numpy as np

from gorkit import fixtures
from gorkit import frobext as fx
from gorkit import gorenstein as gr
from gorkit import resolve as rs

emb = fixtures.e4_extension()
F = fx.verify_frobenius(emb, np.eye(emb.sub.dimension, dtype=np.int64))
print("Frobenius:", F is not None, "tau =", F.tau.tolist())

cS, cR = gr.certify_ig(emb.sub), gr.certify_ig(emb.big)
print("small algebra:", cS.summary(), "| big algebra:", cR.summary())

# gdim over the big algebra equals pd of the restriction, since the small
# algebra is hereditary
for k, X in enumerate(fx.sample_modules(emb.big, 8, seed=1, include_structural=False)):
    print(f"sample {k}: dims {X.dims}, Gd = {gr.gdim(X, cR)}, {rs.pd(fx.restrict(emb, X))} after restriction")

for line in fx.transfer_checks(F, cS, cR, samples=6, seed=2).lines()[-3:]:
    print(line)
