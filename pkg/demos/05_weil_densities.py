"""Ordinary Weil classes of abelian surfaces and their b-number split.

Run:  python demos/05_weil_densities.py
"""
from cmkraft.weil import b_number_bucket, b_range, density_report, is_ordinary

q = 3
print(f"Ordinary (a, b) over F_{q}, with bucket 1 or 2:")
for a in range(-4, 5):
    r = b_range(q, a)
    if r is None:
        continue
    cells = [f"{b}:{b_number_bucket(q, a, b)}" for b in range(r[0], r[1] + 1) if is_ordinary(q, b)]
    print(f"  a={a:+d}  " + " ".join(cells))

print()
print("q, total, b1, b2, D1, D2")
for p, ns in ((3, (1, 2, 3, 5, 8)), (5, (1, 2, 3, 5))):
    for n in ns:
        print("  " + density_report(p, n, workers=2).csv_row())
# For comparison the limits of this census are 5/6, 1/6 (p=3) and 7/10, 3/10 (p=5).
