"""The three noise cases: noise-free, rho = 1e-5 and rho = 2e-3 at 40 dB SNR."""
import numpy as np

from framestego.simulate import CASES, TABLE_CODE, simulate, summarize

for case in (1, 2, 3):
    results, series = simulate(case=case, seeds=range(50))
    s = summarize(results)
    print(f"case {case}: rho={CASES[case]:g} alpha={results[0].alpha:.4g} "
          f"||c'||/||c||={np.linalg.norm(series['c_hidden']) / np.linalg.norm(series['c']):.3g}")
    print("   median recovered:", " ".join(f"{v:.4f}" for v in s["code"]))
    print(f"   median min digits {s['min_digits']:.0f}, median max abs err {s['max_abs_err']:.2e}")
print("   reference code:  ", " ".join(f"{v:.4f}" for v in TABLE_CODE))

# %% Comparing the two readings of the variance ratio
for reading in ("norm", "power"):
    results, _ = simulate(case=2, seeds=range(50), rho_reading=reading)
    print(f"case 2 with {reading!r} reading: median max abs err {summarize(results)['max_abs_err']:.2e}")
