"""Why oversampled DFT coefficients can hide data.

Pads a short signal, looks at the Gram matrix of the restricted exponentials
and checks that coefficient vectors in its null space synthesize silence.
"""
import numpy as np

from framestego import (analysis, gram_continuous, gram_discrete, null_basis_analytic,
                        null_basis_eigen, synthesis, validate_config)

cfg = validate_config(N=16, M=32, basis_mode="eigen")
print(f"a = {cfg.a}, padding p = {cfg.p}, null-space dimension = {cfg.capacity}")

# %% Gram matrices: the sinc kernel and its exact discrete counterpart
Gc = gram_continuous(cfg).entries
Gd = gram_discrete(cfg).entries
print("first row of the sinc Gram matrix:", np.round(Gc[0, :5], 4))
w = np.linalg.eigvalsh(Gd)
print("discrete Gram eigenvalues (rounded):", np.unique(np.round(w, 12)))

# %% Two bases for the null space
Ua = null_basis_analytic(cfg).columns
Ue = null_basis_eigen(cfg).columns
print("projector difference:", np.linalg.norm(Ua @ Ua.conj().T - Ue @ Ue.conj().T))

# %% Adding any null vector leaves the signal untouched
x = np.hanning(16)
c = analysis(x, cfg)
c2 = c + 5.0 * Ua[:, 3] - 2j * Ue[:, 7]
print("max change in synthesized signal:", np.max(np.abs(synthesis(c2, cfg) - x)))
