"""Command-line front end.

Subcommands:
  verify SUITE [--config PATH] [--out PATH]   run an invariant suite
  wigner PSI_CSV CHI_CSV OUT_BASE             cross-Wigner CSV + gnuplot
  spectrum [--config PATH] [--out PATH]       three-representation spectra
  evolve --config PATH [--out PATH]           three-representation dynamics

Config files are flat ``key = value`` lines (# comments); recognized
keys: n_points, half_width, window, symbol, t, seed, and tolerance
overrides (tol_*).  Exit codes: 0 pass, 1 check failure, 2 usage or
config error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .verify import SUITE_NAMES, default_params, run_verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class ConfigError(ValueError):
    pass


def parse_config(path) -> dict:
    """Flat key = value file; ints, floats, comma lists and strings."""
    out: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            out[key.strip()] = _parse_value(val.strip())
    return out


def _parse_value(text: str):
    if "," in text:
        return [_parse_value(t.strip()) for t in text.split(",")]
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text.strip("'\"")


def _load_params(args) -> dict:
    params = {}
    if getattr(args, "config", None):
        params.update(parse_config(args.config))
    if "t" in params and "times" not in params:
        t = params.pop("t")
        params["times"] = t if isinstance(t, list) else [t]
    return params


def _emit(report: dict, out_path) -> None:
    text = serialize.report_json(report)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def cmd_verify(args) -> int:
    params = _load_params(args)
    report = run_verify(args.suite, params)
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_wigner(args) -> int:
    psi = serialize.load_config_csv(args.psi)
    chi = serialize.load_config_csv(args.chi)
    from .moyal import cross_wigner
    W = cross_wigner(psi, chi)
    serialize.save_phase_csv(W, args.out + ".csv")
    serialize.save_gnuplot_matrix(W, args.out + ".gp")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    params = dict(default_params())
    params.update(_load_params(args))
    report = run_verify(["spectrum"], params)
    from .verify import _grid, _window, _symbol
    from .spectral import spectrum_report
    grid = _grid(params)
    detail = spectrum_report(_symbol(params, grid), _window(params, grid.p_grid))
    report["spectrum"] = detail
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_evolve(args) -> int:
    params = _load_params(args)
    if "times" not in params:
        raise ConfigError("evolve requires 't' in the config file")
    report = run_verify(["dynamics"], params)
    _emit(report, args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="psqm",
        description="Phase-space quantum mechanics: verification and export tools.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an invariant verification suite")
    p.add_argument("suite", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wigner", help="cross-Wigner transform of two CSV states")
    p.add_argument("psi")
    p.add_argument("chi")
    p.add_argument("out", help="output base path (writes .csv and .gp)")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("spectrum", help="three-representation spectrum report")
    p.add_argument("--config")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("evolve", help="three-representation dynamics report")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_evolve)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"psqm: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
