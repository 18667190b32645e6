"""Periodic multilevel transform with the designed filter pairs.

Demonstrates exact reconstruction for every q = 0 pair, energy
bookkeeping, and how the round-trip error grows with the intensity q as
power complementarity degrades.

Run from the repository root:  python demos/04_signal_transform.py
"""

import numpy as np

import mathieu_mra as mm


def bank_for(nu, q, threshold=1e-10):
    params = mm.MathieuParams(nu, q)
    sol = mm.solve_even(params)
    return mm.sign_correct(mm.build(params, sol, threshold if q else 0.0))


rng = np.random.default_rng(2024)
x = rng.standard_normal(128)

print("=" * 72)
print("Exact reconstruction for the q = 0 family (stretched two-tap pairs)")
print("=" * 72)
for nu in (1, 3, 5):
    bank = bank_for(nu, 0.0)
    res = mm.forward(x, bank, 3)
    rec = mm.inverse(res, bank)
    energy = np.sum(res.approx ** 2) + sum(np.sum(d ** 2) for d in res.details)
    print(f"  nu={nu}: round-trip sup error {np.max(np.abs(rec - x)):.2e}, "
          f"energy gap {abs(energy - np.sum(x ** 2)):.2e}")

print("\n" + "=" * 72)
print("Subband bookkeeping (nu=3, q=3, three levels, length 128)")
print("=" * 72)
bank = bank_for(3, 3.0)
res = mm.forward(x, bank, 3)
sizes = [d.size for d in res.details]
print(f"  details per level: {sizes}, approximation: {res.approx.size} "
      f"(sum = {sum(sizes) + res.approx.size} = original length)")
detail_energy = [float(np.sum(d ** 2)) for d in res.details]
print(f"  detail energies: {['%.3f' % e for e in detail_energy]}, "
      f"approx energy: {float(np.sum(res.approx ** 2)):.3f}")

print("\n" + "=" * 72)
print("Round-trip error vs intensity (reconstruction is not exact for q != 0)")
print("=" * 72)
print(f"  {'q':>8}   {'sup error':>12}")
for q in (0.0, 0.001, 0.01, 0.1, 1.0, 3.0):
    bank = bank_for(3, q)
    rec = mm.inverse(mm.forward(x, bank, 3), bank)
    print(f"  {q:8g}   {np.max(np.abs(rec - x)):12.3e}")
print("\nThe error tracks the power-complementarity residual (~q/2): these")
print("pairs trade perfect reconstruction for the designable notch count.")
