"""Estimates for partitions with at most N parts against exact counts.

Run with:  python demos/04_restricted_estimates.py
"""
import warnings

from planepart import p1d_atmost, p1d_restricted_estimate, p2d, p2d_atmost, table1_report
from planepart.asymptotics import WindowWarning, p2d_restricted_estimate, p2d_unrestricted_estimate, round_half_away

# Linear partitions of 100: Erdos-Lehner against the exact count
for m in (10, 20, 30, 50, 100):
    est, ref = p1d_restricted_estimate(100, m), p1d_atmost(100, m)
    print(f"N={m:3d}  estimate={est:14.0f}  exact={ref:10d}  ratio={est / ref:.4f}")

# Wright's formula with both constants
for n in (10, 20, 50, 100, 200):
    print(n, p2d(n), round(p2d_unrestricted_estimate(n, "pr")), round(p2d_unrestricted_estimate(n, "wright")))

# The comparison table for n = 10..20
print(" n   N  exact  calc1  calc2  calc3   err1  err2  err3")
for r in table1_report():
    print(f"{r.n:2d}  {r.max_parts:2d}  {r.exact_restricted:5d}  {round_half_away(r.calc1):5d}  "
          f"{round_half_away(r.calc2):5d}  {round_half_away(r.calc3):5d}  "
          f"{r.rel_err1:5.1f} {r.rel_err2:5.1f} {r.rel_err3:5.1f}")

# The whole N range at n = 25, including the edges of the validity window
with warnings.catch_warnings():
    warnings.simplefilter("ignore", WindowWarning)
    for m in range(1, 26, 3):
        est = p2d_restricted_estimate(25, m)
        ref = p2d_atmost(25, m)
        print(f"N={m:2d}  estimate={est:10.1f}  exact={ref:7d}  error={100 * (est - ref) / ref:+6.2f}%")
