"""Matched digits of the recovered code as the variance ratio grows."""
from framestego.simulate import sweep

grid = [1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 2e-3, 1e-2]
for row in sweep(grid, seeds=range(100)):
    print(f"rho={row['rho']:8.1e}  median min digits={row['median_min_digits']:4.1f}  "
          f"p10={row['p10_min_digits']:4.1f}  p90={row['p90_min_digits']:4.1f}  "
          f"median max err={row['median_max_abs_err']:.2e}")
