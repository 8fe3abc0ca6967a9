"""Finite-N Bose gas: the recurrence for Z_N and the correction y_N = Z_N / Z_inf.

Run with:  python demos/02_bose_recurrence.py
"""
import numpy as np

from planepart import OscillatorPoint, y1d_closed, y2d_closed, zn_1d_closed, zn_recurrence
from planepart.bose import log_y_n_numeric, y_n_sequence

# 1D: the recurrence reproduces the closed product
p = OscillatorPoint(0.9, dim=1)
seq = zn_recurrence(p, 100)
closed = np.array([zn_1d_closed(p, n) for n in range(101)])
print("max relative deviation, x=0.9:", np.max(np.abs(seq.values / closed - 1)))

# The correction factor climbs to 1 as N grows; compare with the closed forms
x = 0.5
ys = y_n_sequence(OscillatorPoint(x, 1), 12)
print(" N   numeric     1-x^(N+1)   exp(-x^N/(1-x))")
for n in range(1, 13):
    print(f"{n:2d}  {ys[n]:.8f}  {y1d_closed(x, n, 'leading'):.8f}  "
          f"{y1d_closed(x, n, 'exponential-near-1'):.8f}")

# First-order tail: ln y_N ~ -x^(N+1)/(1-x); high precision resolves tiny tails
for n in (5, 10, 20):
    log_y = log_y_n_numeric(OscillatorPoint(0.3, 1), n, tol=1e-45, digits=50)
    print(n, log_y, -0.3 ** (n + 1) / 0.7)

# 2D: no closed form, but y_N still increases to 1
ys2 = y_n_sequence(OscillatorPoint(0.5, 2), 10)
for n in range(1, 11):
    print(f"{n:2d}  {ys2[n]:.10f}  full form {y2d_closed(0.5, n, 'full'):.10f}")
