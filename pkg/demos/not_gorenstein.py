"""Two loops with radical square zero: not Iwanaga-Gorenstein.

The certificate stays ``unknown`` and the Gorenstein engine refuses to run.
"""

from gorkit import fixtures
from gorkit import gorenstein as gr
from gorkit import resolve as rs
from gorkit.modcat import simple

A = fixtures.e3()
cert = gr.certify_ig(A, cap=10)
print(cert.summary())

S = simple(A, 0)
# syzygies of S are sums of copies of S whose number doubles each step
print(rs.pd(S))
print("syzygy dims:", [rs.nth_syzygy(S, n).dim for n in range(5)])

try:
    gr.gdim(S, cert)
except gr.NotCertifiedError as exc:
    print("gdim refused:", exc)
