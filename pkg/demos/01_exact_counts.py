"""Exact counts of linear and plane partitions, restricted and not.

Run with:  python demos/01_exact_counts.py
"""
from planepart import count_by_parts, generate_all, p1d, p1d_atmost, p2d, p2d_atmost

# The 13 plane partitions of 4, in generation order
for p in generate_all(4):
    print(p.rows, "parts:", p.parts)

# Unrestricted sequences grow fast; all values are exact Python ints
print([p1d(n) for n in range(11)])
print([p2d(n) for n in range(11)])
print("p2d(100) =", p2d(100))

# Plane partitions of 10 tallied by their number of parts.  Cumulative sums
# give the counts with at most N parts.
hist = count_by_parts(10)
running = 0
for k, c in sorted(hist.items()):
    running += c
    print(f"parts={k:2d}  count={c:3d}  at most {k}: {running}")

# With N = n - 1 only the all-ones fillings drop out, and there are p1d(n) of them
for n in (10, 15, 20):
    print(n, p2d(n), p2d_atmost(n, n - 1), p2d(n) - p2d_atmost(n, n - 1), p1d(n))

print("partitions of 100 into at most 20 parts:", p1d_atmost(100, 20))
