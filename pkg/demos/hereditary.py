"""The path algebra of 1 -> 2: GP modules are exactly the projectives.

Shows the Gorenstein dimension, the long exact sequence relating GE, Ext
and Tate Ext, and a GE^1 class realised as an extension.
"""

from gorkit import fixtures
from gorkit import gorenstein as gr
from gorkit import modcat as mc
from gorkit import resolve as rs

A = fixtures.e2()
cert = gr.certify_ig(A)
print(cert.summary())

S1, S2, P1 = mc.simple(A, 0), mc.simple(A, 1), mc.vertex_projective(A, 0)
for name, M in [("S(1)", S1), ("S(2)", S2), ("P(1)", P1)]:
    print(f"{name}: GP = {gr.is_gp(M, cert)}, Gd = {gr.gdim(M, cert)}, {rs.pd(M)}")

# finite pd everywhere, so Tate Ext vanishes and GE agrees with Ext
for line in gr.am_sequence_check(S1, S2, cert).lines():
    print(line)

# the special approximation of S(1): a GP module mapping onto it
approx = gr.special_approximation(S1, cert)
print("approximation G dims:", approx.G.dims, "kernel dims:", approx.K.dims)

# the nonzero class in GE^1(S(1), S(2)) as a non-split extension
cocycle = gr.ge1_classes(S1, S2, cert)[0]
r = gr.realize_ge1(S1, S2, cocycle, cert)
M = r.sequence.middle
print("middle term dims:", M.dims, "split:", r.split, "gp-acyclic:", r.gp_acyclic)
print("middle term ~ P(1):", mc.is_isomorphic(M, P1).answer)
