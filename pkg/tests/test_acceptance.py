"""Exit criteria for the whole package; one summary line per criterion is printed at the end."""

import subprocess
import sys
import time

import numpy as np
import pytest

from framestego import (SecretParameters, analysis, decode, embed, encode, gram_discrete, make_mixer,
                        null_basis_analytic, null_basis_eigen, range_project, synthesis, validate_config)
from framestego.simulate import TABLE_CODE, run_case, simulate, summarize

TABLE_CASE1_COLUMN = ["3.1492", "2.1271", "5.1312", "1.2835", "7.7976", "3.7160",
                      "8.4139", "1.9791", "0.5863", "5.8321", "8.1032", "6.4908"]
NOISE_SEEDS = range(50)


def crit(n, text):
    return pytest.mark.criterion(n, text)


def brute_projector(cfg):
    F = np.fft.fft(np.eye(cfg.M), norm="ortho")
    E = np.zeros((cfg.M, cfg.N))
    E[cfg.p + np.arange(cfg.N), np.arange(cfg.N)] = 1
    return F @ E @ E.T @ F.conj().T


@crit(1, "noise-free fidelity: >=9 digits per component, signal err <= 1e-10, < 1 s")
@pytest.mark.parametrize("mixer_seed", [1, 987654321, 2**63 + 17])
def test_c1_noise_free_fidelity(mixer_seed):
    t0 = time.perf_counter()
    r, _ = run_case(0.0, 0, mixer_seed=mixer_seed)
    elapsed = time.perf_counter() - t0
    assert np.all(r.digits >= 9), r.digits
    assert r.signal_err <= 1e-10
    assert elapsed < 1.0


@crit(2, "Case 1 reproduces the published code column at 5 digits")
def test_c2_table_column_equality():
    r, _ = run_case(0.0, 0)
    assert [f"{v:.4f}" for v in r.code] == TABLE_CASE1_COLUMN


@crit(3, "Case 2 (40 dB, rho=1e-5): componentwise median digits >= 3, median max abs err <= 1e-3, < 30 s")
def test_c3_case2_band():
    t0 = time.perf_counter()
    results, _ = simulate(case=2, seeds=NOISE_SEEDS)
    elapsed = time.perf_counter() - t0
    s = summarize(results)
    assert results[0].rho == 1e-5
    assert np.all(s["digits"] >= 3), s["digits"]
    assert s["max_abs_err"] <= 1e-3
    assert elapsed < 30


@crit(4, "Case 3 (rho=0.002): median min digits >= 1, median max abs err <= 0.15, < 30 s")
def test_c4_case3_band():
    t0 = time.perf_counter()
    results, _ = simulate(case=3, seeds=NOISE_SEEDS)
    elapsed = time.perf_counter() - t0
    s = summarize(results)
    assert results[0].rho == 2e-3
    assert s["min_digits"] >= 1
    assert s["max_abs_err"] <= 0.15
    assert elapsed < 30


NULL_CONFIGS = [(4, 8), (16, 32), (200, 400)]


@crit("5a", "null-space property: ||synthesis(c')||_inf <= 1e-10 ||c'|| for basis columns and embeddings")
@pytest.mark.parametrize("N, M", NULL_CONFIGS)
@pytest.mark.parametrize("mode", ["analytic", "eigen"])
def test_c5a_null_space_property(N, M, mode):
    cfg = validate_config(N, M, mode)
    U = (null_basis_eigen if mode == "eigen" else null_basis_analytic)(cfg)
    for u in U.columns.T:
        assert np.max(np.abs(synthesis(u, cfg))) <= 1e-10 * np.linalg.norm(u)
    rng = np.random.default_rng(N)
    for trial in range(10):
        K = int(rng.integers(1, cfg.capacity + 1))
        sp = SecretParameters(cfg, int(rng.integers(2**63)), K, float(10 ** rng.uniform(-6, 6)))
        c_hidden = embed(rng.standard_normal(K), sp.basis(), sp.mixer(), sp.alpha)
        assert np.max(np.abs(synthesis(c_hidden, cfg))) <= 1e-10 * np.linalg.norm(c_hidden)


@crit("5b", "signal reconstruction h- and alpha-invariant within 1e-10 for alpha over 1e-6..1e6")
@pytest.mark.parametrize("N, M", NULL_CONFIGS)
def test_c5b_alpha_invariance(N, M):
    cfg = validate_config(N, M)
    rng = np.random.default_rng(M)
    x = rng.standard_normal(N)
    K = min(12, cfg.capacity)
    ref = synthesis(analysis(x, cfg), cfg)
    worst = {}
    for alpha in 10.0 ** np.arange(-6, 7):
        for _ in range(3):
            h = rng.uniform(0.5, 9.5, K)
            sp = SecretParameters(cfg, 31337, K, alpha)
            err = np.max(np.abs(synthesis(encode(x, h, sp), cfg) - ref))
            worst[alpha] = max(worst.get(alpha, 0.0), err)
    bad = {a: e for a, e in worst.items() if e > 1e-10}
    assert not bad, f"per-sample error above 1e-10 at alpha: {bad}"


@crit(6, "eigen vs analytic projectors within 1e-7 (Frobenius); eigenvalues below tau count M-N")
@pytest.mark.parametrize("N, M", [(2, 4), (4, 8), (6, 16), (10, 30), (16, 32), (20, 64), (33, 63)])
def test_c6_oracle_equivalence(N, M):
    cfg = validate_config(N, M, "eigen", 1e-8)
    Ua = null_basis_analytic(cfg).columns
    Ue = null_basis_eigen(cfg).columns
    assert np.linalg.norm(Ua @ Ua.conj().T - Ue @ Ue.conj().T) <= 1e-7
    w = np.linalg.eigvalsh(gram_discrete(cfg).entries)
    assert np.count_nonzero(w < 1e-8) == M - N
    assert np.linalg.matrix_rank(brute_projector(cfg)) == N


@crit(7, "algebra: mixer orthogonality 1e-12, Parseval 1e-12, idempotence 1e-12, d = (I-P)c_rx 1e-10")
@pytest.mark.parametrize("N, M", [(4, 8), (10, 30), (16, 32), (24, 64)])
def test_c7_algebra(N, M):
    rng = np.random.default_rng(N * M)
    for K in (1, 2, 7, 12, 40):
        B = make_mixer(int(rng.integers(2**63)), K)
        np.testing.assert_allclose(B.T @ B, np.eye(K), rtol=0, atol=1e-12)
    cfg = validate_config(N, M)
    x = rng.standard_normal(N)
    assert abs(np.linalg.norm(analysis(x, cfg)) - np.linalg.norm(x)) <= 1e-12 * np.linalg.norm(x)
    c = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    Pc = range_project(c, cfg)
    np.testing.assert_allclose(range_project(Pc, cfg), Pc, rtol=0, atol=1e-12)
    P = brute_projector(cfg)
    sp = SecretParameters(cfg, 5, cfg.capacity, 0.3)
    c_rx = encode(x, rng.standard_normal(cfg.capacity), sp) + 0.1 * c
    d = c_rx - range_project(c_rx, cfg)
    np.testing.assert_allclose(d, c_rx - P @ c_rx, rtol=0, atol=1e-10)
    # the decoder consumes exactly this d
    U = sp.basis().columns
    _, h_hat, _ = decode(c_rx, sp)
    np.testing.assert_allclose(h_hat, sp.mixer().T @ (U.conj().T @ (c_rx - P @ c_rx)).real / sp.alpha,
                               rtol=0, atol=1e-10)


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "framestego", *map(str, args)],
                          capture_output=True, text=True, check=True)


@crit(8, "determinism: identical inputs and seeds give bit-identical coefficient files and CSVs")
def test_c8_determinism(tmp_path):
    from framestego.formats import write_secret, write_signal

    write_secret(tmp_path / "secret.txt", SecretParameters(validate_config(200, 400), 77, 12, 54.0))
    write_signal(tmp_path / "code.txt", TABLE_CODE)
    outputs = []
    for run in range(2):
        d = tmp_path / f"run{run}"
        d.mkdir()
        _cli("gen-signal", "--out", d / "chirp.txt")
        _cli("encode", "--signal", d / "chirp.txt", "--code", tmp_path / "code.txt",
             "--secret", tmp_path / "secret.txt", "--out", d / "tx.fcof")
        _cli("channel", "--in", d / "tx.fcof", "--out", d / "rx.fcof", "--snr-db", 40, "--noise-seed", 5)
        _cli("simulate", "--case", 2, "--seeds", "0-9", "--out-csv", d / "case2.csv", "--series-dir", d / "series")
        _cli("sweep", "--rho-grid", "1e-5,2e-3", "--seeds", "0-9", "--out-csv", d / "sweep.csv")
        files = sorted(p for p in d.rglob("*") if p.is_file())
        outputs.append({p.relative_to(d): p.read_bytes() for p in files})
    assert outputs[0].keys() == outputs[1].keys()
    for name in outputs[0]:
        assert outputs[0][name] == outputs[1][name], name
