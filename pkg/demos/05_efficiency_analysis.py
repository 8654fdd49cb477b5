"""Storage-efficiency analytics: when does each codec win?

Efficiency is the saved fraction of a conventional 64-bit allocation.
The fixed-width codec depends only on the widest element; the
length-prefixed codec depends on the whole bit-length histogram plus the
prefix cost k/64.
"""

from ccmatrix import (
    CompressedMatrix,
    bit_length,
    compare,
    eta1,
    eta2,
    eta2_prob,
    expected_eta2,
    measure,
    solve_two_point,
)

print("=== fixed-width efficiency is (64 - width) / 64 ===")
for b in (1, 10, 32, 64):
    print(f"  widest element {b:>2} bits -> eta1 = {eta1(b):.6f}")

print()
print("=== length-prefixed efficiency from a histogram ===")
half_and_half = {1: 500, 64: 500}
print(f"half 1-bit, half 64-bit, k=7: eta2 = {eta2(half_and_half, 7):.6f}")
for groups in ({1: 1, 32: 1, 64: 1},
               {1: 1, 16: 1, 32: 1, 48: 1, 64: 1},
               {b: 1 for b in (1, 8, 16, 24, 32, 40, 48, 56, 64)}):
    print(f"  {len(groups)} equal groups -> eta2 = {eta2(groups, 7):.6f}")

print()
print("=== probabilities instead of counts ===")
for p1 in (0.0, 0.5, 1.0):
    e = eta2_prob({1: p1, 64: 1 - p1}, 7)
    print(f"  p(1-bit) = {p1:.1f} -> eta2 = {e:+.6f}")
print("negative efficiency means the prefixes cost more than they save")

print()
print("=== which mixes hit a target efficiency? ===")
for target in (0.0, 0.5, 0.875):
    r = solve_two_point(target, 1, 64, 7)
    print(f"  eta2 = {target}: p1 = {r.p1:.4f}, p2 = {r.p2:.4f}, feasible = {r.feasible}")

print()
print("=== expected efficiency needs only the mean bit-length ===")
print(f"mean 32.5 (uniform 1..64): {expected_eta2(32.5, 7):.6f}")
print(f"mean 32.0 (binomial, poisson): {expected_eta2(32.0, 7):.6f}")

print()
print("=== comparing the codecs: D > 0 favors fixed-width ===")
print(f"constant 10-bit data: D = {compare({10: 100}, 10, bit_length(10)):+.6f}")
print(f"1-vs-64 split, k=7:   D = {compare({1: 50, 64: 50}, 64, 7):+.6f}")

print()
print("=== measured matrices agree with the formulas exactly ===")
row = [[900, 1023, 721, 256, 1, 10, 700, 20]]
for method in ("sm", "vlb"):
    rep = measure(CompressedMatrix.compress(row, method=method))
    print(
        f"  {method}: {rep.bits_used} of {rep.bits_allocated} bits, "
        f"eta = {rep.eta}, histogram = {rep.histogram}"
    )
