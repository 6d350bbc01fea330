"""Sweep the angle range and tabulate the optimal fidelity and shrinking
factors, the data behind the two summary curves of this problem.

The fidelity starts at 1 (orthogonal states clone perfectly), dips to its
minimum (1 + sqrt(1/2))/2 at pi/4 where the pairs are maximally spread,
and climbs back to 1.  The shrinking factors trade places along the way,
crossing at 1/sqrt(2).

Run:  python demos/fidelity_sweep.py
(for CSV output use the CLI:  pairclone sweep --steps 200 --out sweep.csv)
"""

import math

import numpy as np

from pairclone import optimal_coefficients, optimal_fidelity, optimal_shrinking

STEPS = 13
BAR = 40

print(f"{'phi':>9} {'F_opt':>12} {'eta_x':>10} {'eta_z':>10}   fidelity profile")
print("-" * 90)
for phi in np.linspace(0.0, math.pi / 2, STEPS):
    phi = float(phi)
    f = optimal_fidelity(phi)
    eta_x, eta_z = optimal_shrinking(phi)
    # map [0.85, 1.0] onto the bar width to make the dip visible
    filled = int(round((f - 0.85) / 0.15 * BAR))
    print(f"{phi:9.6f} {f:12.9f} {eta_x:10.6f} {eta_z:10.6f}   {'#' * filled}")

print()
worst_phi = math.pi / 4
print(f"minimum fidelity {optimal_fidelity(worst_phi):.12f} at phi = pi/4 = {worst_phi:.6f}")
cc = optimal_coefficients(worst_phi)
print(f"coefficients there: a = {cc.a:.12f}, b = {cc.b:.12f}, c = {cc.c:.12f}")
print()
print("identity check on a fine grid:")
fine = np.linspace(0.0, math.pi / 2, 2001)
worst = 0.0
for phi in fine:
    eta_x, eta_z = optimal_shrinking(float(phi))
    worst = max(worst, abs(eta_x * eta_x + eta_z * eta_z - 1.0))
print(f"  max |eta_x^2 + eta_z^2 - 1| = {worst:.3e}")
