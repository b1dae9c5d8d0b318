"""Command-line surface: solve, scan, table and validate subcommands.

Output is CSV with a '#'-prefixed header comment carrying the full
parameter echo; identical configurations produce byte-identical output.
Exit codes: 0 ok, 2 configuration error, 3 numerical failure,
4 validation/regression failure.
"""

import argparse
import io
import os
import sys

import numpy as np

from . import _golden
from .basis import BasisSpec
from .eigen import NotPositiveDefiniteError
from .potentials import (
    KratzerParams,
    MorseParams,
    YukawaParams,
    oracle_weight_nu,
    radial_function,
)
from .quadrature import quad_potential_matrix
from .solver import bound_states, kratzer_exact, lambda_scan, potential_matrix

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_VALIDATION = 4

POTENTIAL_NAMES = ("yukawa", "yukawa-cos", "yukawa-sin", "kratzer", "morse")

# every long option that may also appear in a config file, with its
# parsing type; booleans and subcommand ids stay on the command line
CONFIG_KEYS = {
    "potential": str,
    "A": float,
    "delta": float,
    "mu-re": float,
    "mu-im": float,
    "B": float,
    "V0": float,
    "r0": float,
    "width": float,
    "beta": float,
    "ell": int,
    "N": int,
    "lambda": float,
    "lambda-grid": str,
    "k": int,
    "out": str,
    "format": str,
    "threads": int,
    "tol-plateau": float,
    "tol-conv": float,
    "order": int,
    "limit": int,
}

DEFAULTS = {
    "potential": None,
    "A": 1.0,
    "delta": None,
    "mu-re": None,
    "mu-im": None,
    "B": None,
    "V0": None,
    "r0": None,
    "width": None,
    "beta": 1.0,
    "ell": 0,
    "N": 100,
    "lambda": 1.0,
    "lambda-grid": None,
    "k": None,
    "out": None,
    "format": "csv",
    "threads": None,
    "tol-plateau": 1e-9,
    "tol-conv": 1e-12,
    "order": 300,
    "limit": 40,
}


class ConfigError(ValueError):
    pass


def _read_config_file(path):
    values = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError("%s:%d: expected key=value, got %r" % (path, lineno, line))
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in CONFIG_KEYS:
                    raise ConfigError("%s:%d: unknown key %r" % (path, lineno, key))
                try:
                    values[key] = CONFIG_KEYS[key](val.strip())
                except ValueError:
                    raise ConfigError("%s:%d: bad value for %s: %r" % (path, lineno, key, val))
    except OSError as e:
        raise ConfigError("cannot read config file: %s" % e)
    return values


def _merge_config(args):
    """Effective configuration: flags override config file over defaults."""
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        cfg.update(_read_config_file(args.config))
    for key in CONFIG_KEYS:
        attr = key.replace("-", "_")
        val = getattr(args, attr, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _build_potential(cfg):
    name = cfg["potential"]
    if name is None:
        raise ConfigError("--potential is required")
    if name not in POTENTIAL_NAMES:
        raise ConfigError("unknown potential %r (choose from %s)" % (name, ", ".join(POTENTIAL_NAMES)))
    try:
        if name in ("yukawa", "yukawa-cos", "yukawa-sin"):
            variant = {"yukawa": "classical", "yukawa-cos": "cosine", "yukawa-sin": "sine"}[name]
            if cfg["delta"] is not None:
                mu_re = cfg["delta"]
                mu_im = 0.0 if variant == "classical" else cfg["delta"]
            else:
                mu_re = cfg["mu-re"] if cfg["mu-re"] is not None else 0.0
                mu_im = cfg["mu-im"] if cfg["mu-im"] is not None else 0.0
            return YukawaParams(strength=cfg["A"], mu_re=mu_re, mu_im=mu_im, variant=variant)
        if name == "kratzer":
            if cfg["B"] is None:
                raise ConfigError("kratzer requires --B")
            if cfg["ell"] == 0:
                raise ConfigError("kratzer requires |ell| >= 1: the 1/r^2 element diverges at ell = 0")
            return KratzerParams(coulomb=cfg["A"], inverse_square=cfg["B"])
        # morse
        for key in ("V0", "r0", "width"):
            if cfg[key] is None:
                raise ConfigError("morse requires --%s" % key)
        return MorseParams(depth=cfg["V0"], r_eq=cfg["r0"], width=cfg["width"], beta=cfg["beta"])
    except ValueError as e:
        raise ConfigError(str(e))


def _build_basis(cfg):
    try:
        return BasisSpec(lam=cfg["lambda"], ell=cfg["ell"], size=cfg["N"])
    except ValueError as e:
        raise ConfigError(str(e))


def _parse_grid(text):
    if text is None:
        raise ConfigError("scan requires --lambda-grid (lo:hi:step or comma list)")
    try:
        if ":" in text:
            lo, hi, step = (float(t) for t in text.split(":"))
            if step <= 0 or hi < lo:
                raise ValueError
            grid = np.arange(lo, hi + 0.5 * step, step)
        else:
            grid = np.array([float(t) for t in text.split(",")])
    except ValueError:
        raise ConfigError("bad --lambda-grid %r" % text)
    if len(grid) < 5:
        raise ConfigError("lam grid too small: plateau detection needs at least 5 points")
    return grid


def _fmt(x):
    return format(float(x), ".15g")


def _echo(cfg, command):
    parts = ["command=%s" % command]
    for key in sorted(CONFIG_KEYS):
        if cfg[key] is not None:
            parts.append("%s=%s" % (key, cfg[key]))
    return "# " + " ".join(parts)


def _write_out(cfg, text):
    if cfg["out"]:
        with open(cfg["out"], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_config(cfg):
    lines = []
    for key in sorted(CONFIG_KEYS):
        if cfg[key] is not None and key != "out":
            lines.append("%s=%s" % (key, cfg[key]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_solve(cfg):
    if cfg["format"] != "csv":
        raise ConfigError("only --format csv is supported")
    potential = _build_potential(cfg)
    basis = _build_basis(cfg)
    result = bound_states(potential, basis)
    levels = result.bound
    if cfg["k"] is not None:
        levels = levels[: cfg["k"]]
    buf = io.StringIO()
    buf.write(_echo(cfg, "solve") + "\n")
    buf.write("level,energy,N,lambda\n")
    for i, e in enumerate(levels):
        buf.write("%d,%s,%d,%s\n" % (i, _fmt(e), basis.size, _fmt(basis.lam)))
    _write_out(cfg, buf.getvalue())
    return EXIT_OK


def cmd_scan(cfg):
    if cfg["format"] != "csv":
        raise ConfigError("only --format csv is supported")
    potential = _build_potential(cfg)
    basis = _build_basis(cfg)
    grid = _parse_grid(cfg["lambda-grid"])
    k = cfg["k"] if cfg["k"] is not None else 1
    report = lambda_scan(potential, basis, grid, k,
                         tol_rel=cfg["tol-plateau"], threads=cfg["threads"])
    buf = io.StringIO()
    buf.write(_echo(cfg, "scan") + "\n")
    buf.write("lambda,level,energy\n")
    for lam, row in zip(report.grid, report.traces):
        for lvl, e in enumerate(row):
            buf.write("%s,%d,%s\n" % (_fmt(lam), lvl, _fmt(e)))
    if report.plateau is None:
        buf.write("# plateau: none\n")
    else:
        buf.write("# plateau: [%s, %s] max_spread=%s\n"
                  % (_fmt(report.plateau[0]), _fmt(report.plateau[1]),
                     format(float(np.max(report.spread)), ".3e")))
    _write_out(cfg, buf.getvalue())
    return EXIT_OK


def _table1_rows():
    rows = []
    for delta in sorted(_golden.TABLE1):
        golden = _golden.TABLE1[delta]
        p = YukawaParams(strength=1.0, mu_re=delta, mu_im=delta, variant="cosine")
        b = BasisSpec(lam=_golden.TABLE1_LAM, ell=0, size=_golden.TABLE1_N)
        energies = bound_states(p, b).energies
        for lvl, g in enumerate(golden):
            computed = -float(energies[lvl])
            rows.append((delta, lvl, computed, g, abs(computed - g), _golden.TABLE1_TOL[delta]))
    return rows


def _table2_rows():
    rows = []
    for (B, ell) in sorted(_golden.TABLE2):
        golden = _golden.TABLE2[(B, ell)]
        lam = _golden.TABLE2_LAM[(B, ell)]
        lams = lam if isinstance(lam, list) else [lam] * len(golden)
        p = KratzerParams(coulomb=1.0, inverse_square=B)
        spectra = {}
        for lvl, g in enumerate(golden):
            lv = lams[lvl]
            if lv not in spectra:
                b = BasisSpec(lam=lv, ell=ell, size=_golden.TABLE2_N)
                spectra[lv] = bound_states(p, b).energies
            computed = -float(spectra[lv][lvl])
            exact = -kratzer_exact(1.0, B, ell, lvl)
            flag = "near-threshold" if (B, ell, lvl) in _golden.TABLE2_FLAGGED else ""
            rows.append((B, ell, lvl, computed, g, abs(computed - g),
                         abs(computed - exact), flag))
    return rows


def _table3_rows():
    rows = []
    for (ell, r0, width, V0), by_beta in _golden.TABLE3:
        for beta in sorted(by_beta):
            golden = by_beta[beta]
            p = MorseParams(depth=V0, r_eq=r0, width=width, beta=beta)
            b = BasisSpec(lam=_golden.TABLE3_LAM, ell=ell, size=_golden.TABLE3_N)
            energies = bound_states(p, b).energies
            for lvl, g in enumerate(golden):
                computed = -float(energies[lvl])
                rows.append((ell, r0, width, V0, beta, lvl, computed, g,
                             abs(computed - g)))
    return rows


def cmd_table(cfg, table_id):
    buf = io.StringIO()
    buf.write(_echo(cfg, "table %d" % table_id) + "\n")
    failures = 0
    if table_id == 1:
        buf.write("delta,level,energy,golden,diff\n")
        for delta, lvl, computed, g, diff, tol in _table1_rows():
            buf.write("%s,%d,%s,%s,%s\n" % (_fmt(delta), lvl, _fmt(computed), _fmt(g), format(diff, ".3e")))
            if diff > tol:
                failures += 1
    elif table_id == 2:
        buf.write("B,ell,n,energy,golden,diff,exact_gap,flag\n")
        for B, ell, lvl, computed, g, diff, gap, flag in _table2_rows():
            buf.write("%s,%d,%d,%s,%s,%s,%s,%s\n"
                      % (_fmt(B), ell, lvl, _fmt(computed), _fmt(g),
                         format(diff, ".3e"), format(gap, ".3e"), flag))
            if diff > _golden.TABLE2_TOL:
                failures += 1
    elif table_id == 3:
        buf.write("ell,r0,width,V0,beta,level,energy,golden,diff\n")
        for ell, r0, width, V0, beta, lvl, computed, g, diff in _table3_rows():
            buf.write("%d,%s,%s,%s,%s,%d,%s,%s,%s\n"
                      % (ell, _fmt(r0), _fmt(width), _fmt(V0), _fmt(beta),
                         lvl, _fmt(computed), _fmt(g), format(diff, ".3e")))
            if diff > _golden.TABLE3_TOL:
                failures += 1
    else:
        raise ConfigError("table id must be 1, 2 or 3")
    if failures:
        buf.write("# REGRESSION: %d cell(s) beyond tolerance\n" % failures)
    _write_out(cfg, buf.getvalue())
    return EXIT_VALIDATION if failures else EXIT_OK


def cmd_validate(cfg):
    potential = _build_potential(cfg)
    limit = cfg["limit"]
    basis = _build_basis(cfg).with_size(limit + 1)
    analytic = potential_matrix(potential, basis)
    oracle = quad_potential_matrix(
        radial_function(potential), basis,
        order=cfg["order"], weight_nu=oracle_weight_nu(potential, basis),
    )
    diff = np.abs(analytic - oracle)
    # relative where the element is appreciable, absolute (scaled to the
    # same 1e-11 threshold) where it is tiny
    dev = diff / np.maximum(np.abs(analytic), 1e-2)
    n, m = np.unravel_index(int(np.argmax(dev)), dev.shape)
    worst = float(dev[n, m])
    buf = io.StringIO()
    buf.write(_echo(cfg, "validate") + "\n")
    buf.write("# max deviation %s at (n, m) = (%d, %d)\n" % (format(worst, ".3e"), n, m))
    buf.write("max_deviation,n,m,order,limit\n")
    buf.write("%s,%d,%d,%d,%d\n" % (format(worst, ".3e"), n, m, cfg["order"], limit))
    _write_out(cfg, buf.getvalue())
    return EXIT_VALIDATION if worst > 1e-11 else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trilag",
        description="Bound-state spectra in a tridiagonal Laguerre basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--potential", choices=POTENTIAL_NAMES)
        p.add_argument("--A", type=float, help="Yukawa strength / Kratzer Coulomb strength")
        p.add_argument("--delta", type=float, help="screening parameter (sets both parts for cos/sin)")
        p.add_argument("--mu-re", type=float, dest="mu_re")
        p.add_argument("--mu-im", type=float, dest="mu_im")
        p.add_argument("--B", type=float, help="Kratzer inverse-square strength")
        p.add_argument("--V0", type=float, help="Morse depth")
        p.add_argument("--r0", type=float, help="Morse equilibrium radius")
        p.add_argument("--width", type=float, help="Morse exponent")
        p.add_argument("--beta", type=float, help="Morse shape parameter")
        p.add_argument("--ell", type=int)
        p.add_argument("--N", type=int, help="basis size")
        p.add_argument("--lambda", type=float, dest="lam", help="basis scale")
        p.add_argument("--k", type=int, help="number of levels")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=["csv"])
        p.add_argument("--threads", type=int)
        p.add_argument("--tol-plateau", type=float, dest="tol_plateau")
        p.add_argument("--tol-conv", type=float, dest="tol_conv")
        p.add_argument("--config", help="key=value config file; flags override")
        p.add_argument("--dump-config", action="store_true", dest="dump_config")

    p_solve = sub.add_parser("solve", help="bound-state energies at fixed basis")
    add_common(p_solve)
    p_scan = sub.add_parser("scan", help="eigenvalue traces over a lam grid")
    add_common(p_scan)
    p_scan.add_argument("--lambda-grid", dest="lambda_grid",
                        help="lo:hi:step or comma-separated lam values")
    p_table = sub.add_parser("table", help="reproduce a reference table")
    p_table.add_argument("id", type=int, choices=[1, 2, 3])
    add_common(p_table)
    p_val = sub.add_parser("validate", help="analytic elements vs quadrature oracle")
    add_common(p_val)
    p_val.add_argument("--limit", type=int, help="validate elements with n, m <= limit")
    p_val.add_argument("--order", type=int, help="quadrature order")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # args.lam holds --lambda; map it back to the config key
    setattr(args, "lambda", getattr(args, "lam", None))
    try:
        cfg = _merge_config(args)
        if cfg["threads"]:
            os.environ.setdefault("OMP_NUM_THREADS", str(cfg["threads"]))
        if getattr(args, "dump_config", False):
            sys.stdout.write(_dump_config(cfg))
            return EXIT_OK
        if args.command == "solve":
            return cmd_solve(cfg)
        if args.command == "scan":
            return cmd_scan(cfg)
        if args.command == "table":
            return cmd_table(cfg, args.id)
        if args.command == "validate":
            return cmd_validate(cfg)
        raise ConfigError("unknown command %r" % args.command)
    except ConfigError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG
    except (NotPositiveDefiniteError, np.linalg.LinAlgError) as e:
        print("numerical failure: %s" % e, file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
