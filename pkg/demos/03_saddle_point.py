"""Counting microstates by steepest descent.

S(beta) = beta*E + ln Z(beta) is stationary at beta0 and the count is
exp(S)/sqrt(2 pi S'').  Linear partitions come from the 1D product,
plane partitions from MacMahon's product.

Run with:  python demos/03_saddle_point.py
"""
import math

from planepart import OscillatorPoint, beta0_1d, beta0_2d, log_macmahon, log_z_inf, p1d, p2d, saddle_count

print("linear partitions")
for n in (20, 50, 100):
    res = saddle_count(lambda b: log_z_inf(OscillatorPoint.from_beta(b, 1), 1e-16), n, (0.02, 2.0))
    print(f"n={n:3d}  beta0={res.beta0:.5f} (pi/sqrt(6n)={beta0_1d(n):.5f})  "
          f"Gamma={res.gamma:.4g}  exact={p1d(n)}")

print("plane partitions")
for n in (20, 50, 100):
    res = saddle_count(lambda b: log_macmahon(math.exp(-b), 1e-16), n, (0.05, 3.0))
    print(f"n={n:3d}  beta0={res.beta0:.5f} ((2 zeta3/n)^(1/3)={beta0_2d(n):.5f})  "
          f"Gamma={res.gamma:.4g}  exact={p2d(n)}")
