"""Command-line front end.

Subcommands: classical | spectrum | wavefn | verify | limit | sweep.
Each writes a CSV or JSON table with a full parameter echo and the package
version, using a fixed float format (17 significant digits) so identical
configurations produce byte-identical files. Exit codes: 0 all checks pass,
1 a verification check failed, 2 invalid input or constraint violation.

Flag precedence: command-line flags > --config JSON file > built-in
defaults. LIENARDQM_OUTDIR overrides the default output directory.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__, checks, classical, eigensolver, susy, wavefn
from .errors import LienardError
from .params import AmbiguityParams, PhysicalParams, derive_params

DEFAULTS = {
    "omega": 1.0, "k": 1.0, "hbar": 1.0, "alpha": 0.0, "gamma": 0.0,
    "n_max": 5, "grid_n": 6000, "y_max": None, "h_p": 1e-3,
    "k_sequence": "0.1,0.01,0.001", "a_values": "1e2,1e3,1e4,1e6",
    "amplitude": 0.5, "phase": 0.0, "t_end": None, "step": 1e-3,
    "level": 0, "samples": 1001,
    "omega_values": None, "k_values": None,
    "alpha_values": None, "gamma_values": None,
    "output": None, "format": "csv",
}


@dataclass(frozen=True)
class RunConfig:
    """Fully merged options for one subcommand invocation."""

    command: str
    options: dict

    def __getattr__(self, name):
        try:
            return self.options[name]
        except KeyError:
            raise AttributeError(name) from None

    def phys(self):
        return PhysicalParams(omega=self.omega, k=self.k, hbar=self.hbar)

    def amb(self):
        return AmbiguityParams(alpha=self.alpha, gamma=self.gamma)

    def echo(self):
        keys = ("omega", "k", "hbar", "alpha", "gamma", "n_max",
                "grid_n", "y_max", "h_p")
        return {k: self.options[k] for k in keys}


def _fmt(value):
    """Fixed-width float serialization: 17 significant digits, round-trip safe."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def write_output(path, columns, rows, meta, fmt):
    """Write rows as CSV (fixed header) or JSON ({meta, rows})."""
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        payload = {
            "meta": {"params": meta, "version": __version__},
            "rows": [dict(zip(columns, row)) for row in rows],
        }
        text = json.dumps(payload, sort_keys=True, indent=1) + "\n"
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise LienardError(f"cannot write output file {path}: {exc}") from exc
    return path


def _out_path(config, name):
    if config.output:
        return config.output
    outdir = os.environ.get("LIENARDQM_OUTDIR", ".")
    return os.path.join(outdir, f"{name}.{config.format}")


def _parse_floats(text):
    return tuple(float(tok) for tok in str(text).split(",") if tok.strip())


def cmd_classical(config):
    phys = config.phys()
    t_end = config.t_end if config.t_end is not None else 2.0 * math.pi / phys.omega
    initial = classical.OscillatorState(
        x=classical.analytic_solution(phys, config.amplitude, config.phase, 0.0),
        v=classical.analytic_velocity(phys, config.amplitude, config.phase, 0.0))
    traj = classical.integrate_lienard(phys, initial, t_end, config.step)
    exact = classical.analytic_solution(phys, config.amplitude, config.phase,
                                        traj.times)
    rows = [(t, x, xa, abs(x - xa))
            for t, x, xa in zip(traj.times, traj.positions, exact)]
    path = write_output(_out_path(config, "classical"),
                        ("t", "x_numeric", "x_analytic", "abs_err"),
                        rows, config.echo(), config.format)
    print(f"classical: {len(rows)} samples, max |x_num - x_exact| = "
          f"{max(r[3] for r in rows):.3e} -> {path}")
    return 0


def cmd_spectrum(config):
    phys = config.phys()
    table = susy.spectrum(phys, config.amb(), config.n_max)
    hw = phys.hbar_omega
    rows = [(n, e, e / hw) for n, e in table.levels()]
    path = write_output(_out_path(config, "spectrum"),
                        ("n", "energy", "hbar_omega_units"),
                        rows, config.echo(), config.format)
    print(f"spectrum: {len(rows)} levels, e_0 = {rows[0][1]:.17g} -> {path}")
    return 0


def cmd_wavefn(config):
    phys = config.phys()
    n = config.level
    if phys.is_deformed:
        derived = derive_params(phys, config.amb())
        lo, hi = wavefn.support_window(phys, derived, n)
        p = np.linspace(lo, hi, config.samples)
        y = wavefn.y_of_p(phys, derived, p)
    else:
        derived = None
        half = 6.0 * math.sqrt(phys.hbar_omega)
        p = np.linspace(-half, half, config.samples)
        y = np.full_like(p, math.nan)
    values = wavefn.psi(phys, derived, n, p)
    rows = list(zip(p, y, values))
    path = write_output(_out_path(config, "wavefn"), ("p", "y", "psi"),
                        rows, {**config.echo(), "level": n}, config.format)
    print(f"wavefn: level {n}, {len(rows)} samples -> {path}")
    return 0


def cmd_verify(config):
    records = checks.run_suite(config.phys(), config.amb(),
                               grid_n=config.grid_n, y_max=config.y_max,
                               h_p=config.h_p)
    rows = [(r.name, r.params, r.measured, r.expected, r.tolerance, r.passed)
            for r in records]
    path = write_output(_out_path(config, "verify"),
                        ("check", "params", "measured", "expected",
                         "tolerance", "pass"),
                        rows, config.echo(), config.format)
    width = max(len(r.name) for r in records)
    for r in records:
        verdict = "pass" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  measured={r.measured:<12.3e} "
              f"expected={r.expected:<12.3e} tol={r.tolerance:<9.0e} {verdict}")
    failed = sum(not r.passed for r in records)
    print(f"verify: {len(records) - failed}/{len(records)} checks passed -> {path}")
    return 1 if failed else 0


def cmd_limit(config):
    phys = config.phys()
    rows = []
    k_seq = _parse_floats(config.k_sequence)
    base = PhysicalParams(omega=phys.omega, k=0.0, hbar=phys.hbar)
    for n in range(min(config.n_max, 3) + 1):
        for k, dev in wavefn.limit_deviation(n, k_seq, base):
            rows.append(("wavefn-deviation", n, k, dev))
    a_values = _parse_floats(config.a_values)
    for n in range(min(config.n_max, 5) + 1):
        for a, _, _, dev in wavefn.laguerre_hermite_limit(n, 1.0, a_values):
            rows.append(("laguerre-hermite", n, a, dev))
    for a, n, err in wavefn.gamma_asymptotic_check([a for a in a_values if a >= 10.0]):
        rows.append(("gamma-asymptotic", n, a, err))
    path = write_output(_out_path(config, "limit"),
                        ("study", "n", "scale", "value"),
                        rows, config.echo(), config.format)
    print(f"limit: {len(rows)} rows -> {path}")
    return 0


def _sweep_point(args):
    omega, k, alpha, gamma, hbar = args
    phys = PhysicalParams(omega=omega, k=k, hbar=hbar)
    amb = AmbiguityParams(alpha=alpha, gamma=gamma)
    derived = derive_params(phys, amb)
    e0 = susy.ground_state_energy(phys, derived)
    return (omega, k, alpha, gamma, derived.a_script, derived.lam,
            derived.shift, e0)


def cmd_sweep(config):
    omegas = (_parse_floats(config.omega_values)
              if config.omega_values else (config.omega,))
    ks = _parse_floats(config.k_values) if config.k_values else (config.k,)
    alphas = (_parse_floats(config.alpha_values)
              if config.alpha_values else (config.alpha,))
    gammas = (_parse_floats(config.gamma_values)
              if config.gamma_values else (config.gamma,))
    points = [(w, k, a, g, config.hbar)
              for w in omegas for k in ks for a in alphas for g in gammas]
    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(_sweep_point, points))
    rows.sort(key=lambda r: r[:4])  # tuple order, independent of scheduling
    path = write_output(_out_path(config, "sweep"),
                        ("omega", "k", "alpha", "gamma", "a_script",
                         "lambda", "shift", "e0"),
                        rows, config.echo(), config.format)
    print(f"sweep: {len(rows)} parameter points -> {path}")
    return 0


_COMMANDS = {
    "classical": cmd_classical,
    "spectrum": cmd_spectrum,
    "wavefn": cmd_wavefn,
    "verify": cmd_verify,
    "limit": cmd_limit,
    "sweep": cmd_sweep,
}


def _add_common(parser):
    parser.add_argument("--config", help="JSON file with default option values")
    parser.add_argument("--omega", type=float, help="angular frequency (> 0)")
    parser.add_argument("--k", type=float, help="deformation strength (>= 0)")
    parser.add_argument("--hbar", type=float, help="action scale (> 0)")
    parser.add_argument("--alpha", type=float, help="ordering exponent alpha")
    parser.add_argument("--gamma", type=float, help="ordering exponent gamma")
    parser.add_argument("--n-max", dest="n_max", type=int,
                        help="highest level index")
    parser.add_argument("--output", help="output file path")
    parser.add_argument("--format", choices=("csv", "json"),
                        help="output format (default csv)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lienardqm",
        description="Deformed-oscillator toolkit: classical dynamics, "
                    "spectrum, eigenfunctions, and verification suites.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classical", help="RK4 trajectory vs closed form")
    _add_common(p)
    p.add_argument("--amplitude", type=float, help="closed-form amplitude")
    p.add_argument("--phase", type=float, help="closed-form phase")
    p.add_argument("--t-end", dest="t_end", type=float,
                   help="integration time (default: one period)")
    p.add_argument("--step", type=float, help="RK4 step")

    p = sub.add_parser("spectrum", help="bound-state energies")
    _add_common(p)

    p = sub.add_parser("wavefn", help="sampled eigenfunction")
    _add_common(p)
    p.add_argument("--level", type=int, help="level index n")
    p.add_argument("--samples", type=int, help="number of momentum samples")

    p = sub.add_parser("verify", help="run the verification suite")
    _add_common(p)
    p.add_argument("--grid-n", dest="grid_n", type=int,
                   help="eigensolver grid points")
    p.add_argument("--y-max", dest="y_max", type=float,
                   help="eigensolver domain cutoff")
    p.add_argument("--h-p", dest="h_p", type=float,
                   help="momentum grid spacing for operator checks")

    p = sub.add_parser("limit", help="no-deformation limit studies")
    _add_common(p)
    p.add_argument("--k-sequence", dest="k_sequence",
                   help="comma-separated decreasing k values")
    p.add_argument("--a-values", dest="a_values",
                   help="comma-separated scale values for the polynomial "
                        "and gamma studies")

    p = sub.add_parser("sweep", help="parameter sweep of derived quantities")
    _add_common(p)
    p.add_argument("--omega-values", dest="omega_values",
                   help="comma-separated omega list")
    p.add_argument("--k-values", dest="k_values",
                   help="comma-separated k list")
    p.add_argument("--alpha-values", dest="alpha_values",
                   help="comma-separated alpha list")
    p.add_argument("--gamma-values", dest="gamma_values",
                   help="comma-separated gamma list")
    return parser


def load_config(args):
    """Merge flags over config-file values over defaults into a RunConfig."""
    from_file = {}
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as fh:
                from_file = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise LienardError(f"cannot read config file {config_path}: {exc}")
        unknown = set(from_file) - set(DEFAULTS)
        if unknown:
            raise LienardError(
                f"unknown config keys: {', '.join(sorted(unknown))}")
    merged = {}
    for key, fallback in DEFAULTS.items():
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
        elif key in from_file:
            merged[key] = from_file[key]
        else:
            merged[key] = fallback
    return RunConfig(command=args.command, options=merged)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        return _COMMANDS[args.command](config)
    except (LienardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
