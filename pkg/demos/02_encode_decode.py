"""Hide the 12-number reference code in a chirp and get both back."""
import numpy as np

from framestego import SecretParameters, decode, encode, gen_chirp, validate_config
from framestego.simulate import TABLE_CODE

cfg = validate_config(N=200, M=400)
secret = SecretParameters(cfg, seed=20240517, K=12, alpha=1e-3)

x = gen_chirp()
c_tx = encode(x, TABLE_CODE, secret)
x_hat, h_hat, diag = decode(c_tx, secret)

print("signal error:", np.max(np.abs(x_hat - x)))
for true, rec in zip(TABLE_CODE, h_hat):
    print(f"{true:.4f}  ->  {rec:.12f}")
print(diag)

# %% A wrong seed scrambles the code but not the signal
wrong = SecretParameters(cfg, seed=1, K=12, alpha=1e-3)
x_w, h_w, _ = decode(c_tx, wrong)
print("signal error with wrong seed:", np.max(np.abs(x_w - x)))
print("code with wrong seed:", np.round(h_w, 3))
