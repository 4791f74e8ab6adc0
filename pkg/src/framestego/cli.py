"""Command-line interface: ``framestego <command> [options]``.

Every failure exits nonzero with one ``error: <kind>: <message>`` line on
stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import channel, formats, simulate as sim
from .channel import ChannelSpec, apply_awgn, digit_accuracy, sigma_for_snr
from .codec import decode, encode
from .errors import StegoError
from .frame import analysis
from .signals import REFERENCE_CHIRP, ChirpSpec, gen_chirp


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(f"usage: {message}")


def _fmt(v):
    return format(float(v), ".17g")


def _parse_seeds(text):
    """``"0-49"``, ``"1,5,9"`` or a mix such as ``"0-9,20"``."""
    seeds = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            if sep:
                seeds.extend(range(int(lo), int(hi) + 1))
            else:
                seeds.append(int(part))
        except ValueError:
            raise CLIError(f"usage: bad seed list {text!r}") from None
    if not seeds:
        raise CLIError("usage: empty seed list")
    return seeds


def _parse_grid(text):
    try:
        grid = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise CLIError(f"usage: bad rho grid {text!r}") from None
    if not grid:
        raise CLIError("usage: empty rho grid")
    return grid


def cmd_gen_signal(args):
    try:
        spec = ChirpSpec(args.n, args.f0, args.f1, args.amp)
    except StegoError as exc:
        raise CLIError(f"usage: --n/--f0/--f1/--amp: {exc}") from None
    formats.write_signal(args.out, gen_chirp(spec))


def cmd_encode(args):
    sp = formats.read_secret(args.secret)
    x = formats.read_signal(args.signal)
    h = formats.read_signal(args.code)
    if h.size != sp.K:
        raise StegoError(f"code file has {h.size} values, secret says K={sp.K}")
    c_tx = encode(x, h, sp)
    c = analysis(x, sp.cfg)
    formats.write_coeffs(args.out, c_tx)
    print(f"norm_c={_fmt(np.linalg.norm(c))}")
    print(f"norm_c_hidden={_fmt(np.linalg.norm(c_tx - c))}")
    print(f"alpha={_fmt(sp.alpha)}")


def cmd_channel(args):
    if (args.snr_db is None) == (args.sigma2 is None):
        raise CLIError("usage: give exactly one of --snr-db and --sigma2")
    c = formats.read_coeffs(args.inp)
    sigma2 = args.sigma2 if args.sigma2 is not None else sigma_for_snr(c, args.snr_db)
    formats.write_coeffs(args.out, apply_awgn(c, ChannelSpec(sigma2, args.noise_seed)))
    print(f"sigma2={_fmt(sigma2)}")


def cmd_decode(args):
    sp = formats.read_secret(args.secret)
    c_rx = formats.read_coeffs(args.inp)
    x_hat, h_hat, diag = decode(c_rx, sp)
    formats.write_signal(args.signal_out, x_hat)
    formats.write_signal(args.code_out, h_hat)
    report = {"diagnostics": diag}
    if args.truth:
        truth = formats.read_signal(args.truth)
        acc = digit_accuracy(truth, h_hat)
        report["accuracy"] = {
            "abs_err": acc.per_component_abs_err.tolist(),
            "matching_digits": acc.matching_digits.tolist(),
            "valid": acc.valid.tolist(),
            "min_matching_digits": acc.min_matching_digits,
        }
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n")


def _result_rows(results, summary):
    K = len(results[0].code)
    header = (["case", "seed", "rho", "sigma2", "alpha"]
              + [f"h{i}" for i in range(K)]
              + [f"abs_err{i}" for i in range(K)]
              + [f"digits{i}" for i in range(K)]
              + ["min_digits", "max_abs_err", "signal_err"])
    rows = [header]
    for r in results:
        rows.append([r.case, str(r.seed), _fmt(r.rho), _fmt(r.sigma2), _fmt(r.alpha)]
                    + [_fmt(v) for v in r.code]
                    + [_fmt(v) for v in r.abs_err]
                    + [str(int(v)) for v in r.digits]
                    + [str(r.min_digits), _fmt(r.max_abs_err), _fmt(r.signal_err)])
    r0 = results[0]
    rows.append([r0.case, "median", _fmt(r0.rho), _fmt(r0.sigma2), _fmt(r0.alpha)]
                + [_fmt(v) for v in summary["code"]]
                + [_fmt(v) for v in summary["abs_err"]]
                + [_fmt(v) for v in summary["digits"]]
                + [_fmt(summary["min_digits"]), _fmt(summary["max_abs_err"]),
                   _fmt(summary["signal_err"])])
    return rows


def _write_csv(path, rows):
    with open(path, "w", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(rows)


def _sim_kwargs(args):
    return dict(snr_db=args.snr_db, mixer_seed=args.mixer_seed,
                rho_reading=args.rho_reading, basis_mode=args.basis_mode)


def cmd_simulate(args):
    if (args.case is None) == (args.rho is None):
        raise CLIError("usage: give exactly one of --case and --rho")
    if args.case is not None and args.case not in sim.CASES:
        raise CLIError(f"usage: invalid case id {args.case}")
    seeds = _parse_seeds(args.seeds)
    results, series = sim.simulate(case=args.case, rho=args.rho, seeds=seeds, **_sim_kwargs(args))
    summary = sim.summarize(results)
    _write_csv(args.out_csv, _result_rows(results, summary))
    if args.series_dir:
        out = Path(args.series_dir)
        out.mkdir(parents=True, exist_ok=True)
        tag = results[0].case.replace("=", "")
        formats.write_series_csv(out / "signal.csv", gen_chirp(REFERENCE_CHIRP))
        formats.write_series_csv(out / "c_abs.csv", series["c"])
        formats.write_series_csv(out / f"c_hidden_abs_case{tag}.csv", series["c_hidden"])
        formats.write_series_csv(out / f"c_tx_abs_case{tag}.csv", series["c_tx"])
    print(f"median_min_digits={_fmt(summary['min_digits'])}")
    print(f"median_max_abs_err={_fmt(summary['max_abs_err'])}")


def cmd_sweep(args):
    grid = _parse_grid(args.rho_grid)
    rows = sim.sweep(grid, seeds=_parse_seeds(args.seeds), **_sim_kwargs(args))
    keys = list(rows[0])
    _write_csv(args.out_csv, [keys] + [[_fmt(r[k]) for k in keys] for r in rows])


def build_parser():
    p = _Parser(prog="framestego", description="Hide a numeric code in oversampled DFT coefficients.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen-signal", help="write the reference chirp")
    g.add_argument("--n", type=int, default=REFERENCE_CHIRP.N)
    g.add_argument("--f0", type=float, default=REFERENCE_CHIRP.f0)
    g.add_argument("--f1", type=float, default=REFERENCE_CHIRP.f1)
    g.add_argument("--amp", type=float, default=REFERENCE_CHIRP.amplitude)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen_signal)

    e = sub.add_parser("encode", help="embed a code into a signal's coefficients")
    e.add_argument("--signal", required=True)
    e.add_argument("--code", required=True)
    e.add_argument("--secret", required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_encode)

    c = sub.add_parser("channel", help="add complex Gaussian noise to a coefficient file")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--snr-db", type=float)
    c.add_argument("--sigma2", type=float)
    c.add_argument("--noise-seed", type=int, default=0)
    c.set_defaults(func=cmd_channel)

    d = sub.add_parser("decode", help="recover signal and code")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--secret", required=True)
    d.add_argument("--signal-out", required=True)
    d.add_argument("--code-out", required=True)
    d.add_argument("--report")
    d.add_argument("--truth", help="file with the true code, enables the accuracy report")
    d.set_defaults(func=cmd_decode)

    for name, func, helptext in (("simulate", cmd_simulate, "run noise case 1, 2 or 3"),
                                 ("sweep", cmd_sweep, "matched digits over a rho grid")):
        s = sub.add_parser(name, help=helptext)
        if name == "simulate":
            s.add_argument("--case", type=int)
            s.add_argument("--rho", type=float)
            s.add_argument("--series-dir", help="directory for |c|, |c'|, |c''| CSV series")
        else:
            s.add_argument("--rho-grid", required=True, help="comma-separated rho values")
        s.add_argument("--snr-db", type=float, default=sim.DEFAULT_SNR_DB)
        s.add_argument("--seeds", default="0-49", help="e.g. 0-49 or 1,2,3")
        s.add_argument("--mixer-seed", type=int, default=sim.DEFAULT_MIXER_SEED)
        s.add_argument("--rho-reading", choices=channel.RHO_READINGS, default=sim.DEFAULT_RHO_READING)
        s.add_argument("--basis-mode", choices=("analytic", "eigen"), default="analytic")
        s.add_argument("--out-csv", required=True)
        s.set_defaults(func=func)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StegoError as exc:
        print(f"error: {type(exc).__name__}: {' '.join(str(exc).split())}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc.strerror or exc}: {exc.filename}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: value: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
