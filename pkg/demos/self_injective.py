"""k[x]/(x^2): every module is Gorenstein projective.

Run with ``python3 demos/self_injective.py``.
"""

from gorkit import fixtures
from gorkit import gorenstein as gr
from gorkit import resolve as rs
from gorkit.modcat import simple
from gorkit.oracle import generate_corpus

A = fixtures.e1()
cert = gr.certify_ig(A)
print(cert.summary())

S = simple(A, 0)
# the simple has an infinite, periodic resolution ...
print(rs.pd(S))
print("Ext^i(S, S):", [rs.ext(S, S, i).dimension for i in range(6)])

# ... yet it is Gorenstein projective, so Gorenstein Ext collapses to Hom
print("is_gp(S):", gr.is_gp(S, cert))
print("GE^k(S, S):", [gr.gorenstein_ext(S, S, k, cert) for k in range(4)])

# Tate cohomology sees the periodicity in both directions
print("Tate^i(S, S), i = -3..3:", [gr.tate_ext(S, S, i, cert) for i in range(-3, 4)])

for line in gr.am_sequence_check(S, S, cert).lines():
    print(line)

corpus = generate_corpus(A)
print("corpus:", corpus.names(), "all GP:", all(gr.is_gp(M, cert) for M in corpus))
