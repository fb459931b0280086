"""Scenario runner and artifact emitter for the arrow-m command.

Subcommands: spectrum, evolve, eigden, fig1, fig2, verify.  Scenarios are
configured through line-based ``key = value`` text files with ``#`` comments
and dotted keys; every subcommand ships usable defaults, and ``--out`` /
``--path`` override the corresponding config keys.  CSV is the canonical
output (floats at 17 significant digits, so reruns are byte-identical);
SVG line plots are a convenience.  The summary file is flat ``key = value``
text; its timing entries are the only non-reproducible output.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.special import erfc

from .dynamics import MONOTONE_TOL, evolve, expectation_m, trajectory
from .freeparticle import (
    GaussianPacketParams,
    position_density,
    position_spread,
    to_energy_state,
)
from .grid import (
    make_log_grid,
    make_state,
    normalize_state,
    random_smooth_state,
    state_norm,
)
from .mellin import (
    apply_m_fast,
    completeness_kernel_check,
    eigen_density,
    eigen_density_moments,
    eigenvalue_of_frequency,
    forward_mellin,
    frequency_jacobian,
    frequency_of_eigenvalue,
    inverse_mellin,
    tukey_window,
    windowed_eigenfunction,
)
from .operator import apply_m_direct, build_dense_m, dense_spectrum
from .svgplot import write_line_plot

__all__ = ["ScenarioError", "ScenarioConfig", "parse_config_text", "run_scenario", "main"]


class ScenarioError(Exception):
    """Configuration or scenario-level failure with a user-facing message."""


def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("true", "yes", "1", "on"):
        return True
    if v in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _parse_float_list(s: str):
    return tuple(float(tok) for tok in s.split(",") if tok.strip())


def _parse_choice(*choices):
    def parse(s: str) -> str:
        v = s.strip()
        if v not in choices:
            raise ValueError(f"expected one of {choices}, got {v!r}")
        return v

    return parse


KEY_TYPES = {
    "grid.e_min": float,
    "grid.e_max": float,
    "grid.n": int,
    "state.kind": _parse_choice("gaussian", "eigenfunction"),
    "state.eta": float,
    "state.p0": float,
    "state.xi0": float,
    "state.m": float,
    "state.channel": _parse_choice("+", "-"),
    "state.window_flat": float,
    "state.window_taper": float,
    "times.t_start": float,
    "times.t_end": float,
    "times.steps": int,
    "path": _parse_choice("direct", "fast", "both"),
    "operator.quadrature": _parse_choice("parity", "subtraction"),
    "output.dir": str,
    "output.svg": _parse_bool,
    "frames.times": _parse_float_list,
    "frames.x_points": int,
    "frames.density_points": int,
    "density.time": float,
    "verify.seed": int,
    "tail_tol": float,
}

_COMMON = {
    "grid.e_min": 5e-15,
    "grid.e_max": 50.0,
    "grid.n": 4096,
    "state.kind": "gaussian",
    "state.eta": 1.0,
    "state.p0": 0.64,
    "state.xi0": 0.3,
    "state.m": 0.5,
    "state.channel": "+",
    "state.window_flat": 0.5,
    "state.window_taper": 0.15,
    "times.t_start": 0.0,
    "times.t_end": 32.0,
    "times.steps": 200,
    "path": "fast",
    "operator.quadrature": "parity",
    "output.dir": "out",
    "output.svg": True,
    "frames.times": (2.0, 4.0, 8.0, 16.0, 32.0),
    "frames.x_points": 2001,
    "frames.density_points": 801,
    "density.time": 2.0,
    "verify.seed": 12345,
    "tail_tol": 1e-8,
}

DEFAULTS = {
    "spectrum": {"grid.e_min": 1e-3, "grid.e_max": 1e3, "grid.n": 512,
                 "operator.quadrature": "subtraction"},
    "evolve": {},
    "fig1": {},
    "fig2": {},
    "eigden": {},
    "verify": {},
}


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated flat configuration (dotted keys)."""

    values: dict

    def __getitem__(self, key: str):
        return self.values[key]


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines; unknown keys and bad values carry line numbers."""
    out = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"config line {ln}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in KEY_TYPES:
            raise ScenarioError(f"config line {ln}: unknown key {key!r}")
        try:
            out[key] = KEY_TYPES[key](value)
        except (ValueError, TypeError) as exc:
            raise ScenarioError(f"config line {ln}: bad value for {key!r}: {exc}") from exc
    return out


def load_config(subcommand: str, config_path=None, overrides=None) -> ScenarioConfig:
    values = dict(_COMMON)
    values.update(DEFAULTS[subcommand])
    if config_path is not None:
        path = Path(config_path)
        if not path.is_file():
            raise ScenarioError(f"config file not found: {path}")
        values.update(parse_config_text(path.read_text(encoding="utf-8")))
    if overrides:
        values.update(overrides)
    if values["path"] in ("fast", "both") and (values["grid.n"] & (values["grid.n"] - 1)) != 0:
        raise ScenarioError(
            f"grid.n = {values['grid.n']} must be a power of two when the fast path is used"
        )
    return ScenarioConfig(values=values)


# ---------------------------------------------------------------------------
# emitters


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.17g}"
    return str(x)


def write_csv(path: Path, columns, rows) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(columns) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise ScenarioError(f"cannot write {path}: {exc}") from exc


def write_summary(path: Path, mapping: dict) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for key, value in mapping.items():
                fh.write(f"{key} = {_fmt(value)}\n")
    except OSError as exc:
        raise ScenarioError(f"cannot write {path}: {exc}") from exc


def _prepare_outdir(cfg: ScenarioConfig) -> Path:
    out = Path(cfg["output.dir"])
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write_probe"
        probe.write_text("", encoding="utf-8")
        probe.unlink()
    except OSError as exc:
        raise ScenarioError(f"output directory {out} is not writable: {exc}") from exc
    return out


# ---------------------------------------------------------------------------
# scenario building blocks


def build_scenario_grid(cfg: ScenarioConfig):
    try:
        return make_log_grid(cfg["grid.e_min"], cfg["grid.e_max"], cfg["grid.n"])
    except ValueError as exc:
        raise ScenarioError(f"bad grid configuration: {exc}") from exc


def build_scenario_state(cfg: ScenarioConfig, grid):
    if cfg["state.kind"] == "gaussian":
        params = GaussianPacketParams(cfg["state.eta"], cfg["state.p0"], cfg["state.xi0"])
        try:
            return normalize_state(to_energy_state(params, grid, tail_tol=cfg["tail_tol"]))
        except ValueError as exc:
            raise ScenarioError(str(exc)) from exc
    flat = 0.5 * cfg["state.window_flat"] * grid.span
    taper = cfg["state.window_taper"] * grid.span
    window = tukey_window(grid, flat, taper)
    if window[0] != 0.0 or window[-1] != 0.0:
        raise ScenarioError(
            "eigenfunction window must vanish at the grid edges; "
            "reduce state.window_flat/state.window_taper"
        )
    state = windowed_eigenfunction(grid, cfg["state.m"], cfg["state.channel"], window)
    return normalize_state(state)


def _scenario_times(cfg: ScenarioConfig) -> np.ndarray:
    t0, t1, steps = cfg["times.t_start"], cfg["times.t_end"], cfg["times.steps"]
    if steps < 2 or t1 <= t0:
        raise ScenarioError("times require t_end > t_start and steps >= 2")
    return np.linspace(t0, t1, steps)


def eigen_density_frame(state, points: int = 801, neg_span: float = 5.5, cap: float = 100.0):
    """(m, rho, covered_mass) on a frequency-uniform m grid.

    The negative-frequency edge is pinned at -5.5 because eigenvalues closer
    to 1 than about 1e-15 are not representable in double precision; the
    positive edge adapts so the discrete mass beyond it is below 1e-8.
    """
    spec = forward_mellin(state)
    dnu = 2.0 * np.pi / (state.grid.n * state.grid.du)
    dens = np.sum(np.abs(spec.coefficients) ** 2, axis=0) * dnu
    tail = np.cumsum(dens[::-1])[::-1]
    beyond = np.nonzero(tail < 1e-8)[0]
    span_pos = spec.frequencies[beyond[0]] if beyond.size else spec.frequencies[-1]
    span_pos = float(np.clip(span_pos + 2.0, 12.0, cap))
    nu = np.linspace(-neg_span, span_pos, points)
    m = eigenvalue_of_frequency(nu)
    rho = eigen_density(state, m)
    covered = float(np.trapezoid(np.sum(rho, axis=0) * frequency_jacobian(m), nu))
    return m, rho, covered


# ---------------------------------------------------------------------------
# subcommand runners


def run_spectrum(cfg: ScenarioConfig) -> dict:
    out = _prepare_outdir(cfg)
    t0 = time.perf_counter()
    grid = build_scenario_grid(cfg)
    op = build_dense_m(grid, quadrature=cfg["operator.quadrature"])
    herm = float(np.max(np.abs(op.matrix - op.matrix.conj().T)))
    t1 = time.perf_counter()
    eigvals = dense_spectrum(op)
    t2 = time.perf_counter()
    write_csv(out / "spectrum.csv", ("index", "eigenvalue"), enumerate(eigvals))
    if cfg["output.svg"]:
        write_line_plot(out / "spectrum.svg", np.arange(eigvals.size),
                        {"eigenvalue": eigvals}, title="dense spectrum",
                        xlabel="index", ylabel="eigenvalue")
    bins = np.histogram(eigvals, bins=20, range=(0.0, 1.0))[0]
    summary = {
        "scenario": "spectrum",
        "quadrature": cfg["operator.quadrature"],
        "grid.e_min": cfg["grid.e_min"], "grid.e_max": cfg["grid.e_max"], "grid.n": cfg["grid.n"],
        "hermiticity_residual": herm,
        "eigenvalue_min": float(eigvals[0]),
        "eigenvalue_max": float(eigvals[-1]),
        "occupied_bins_of_20": int(np.count_nonzero(bins)),
        "timing_build_s": t1 - t0,
        "timing_eigensolve_s": t2 - t1,
    }
    write_summary(out / "summary.txt", summary)
    return summary


def run_trajectory_scenario(cfg: ScenarioConfig, name: str) -> dict:
    out = _prepare_outdir(cfg)
    t0 = time.perf_counter()
    grid = build_scenario_grid(cfg)
    state = build_scenario_state(cfg, grid)
    times = _scenario_times(cfg)
    paths = ("direct", "fast") if cfg["path"] == "both" else (cfg["path"],)
    t1 = time.perf_counter()
    results = {}
    op = build_dense_m(grid, quadrature=cfg["operator.quadrature"]) if "direct" in paths else None
    for p in paths:
        results[p] = trajectory(state, times, path=p, operator=op)
    t2 = time.perf_counter()

    rows = []
    for k, t in enumerate(times):
        for p in sorted(results):
            rows.append((float(t), float(results[p].values[k]), p))
    write_csv(out / "trajectory.csv", ("t", "expectation_m", "path"), rows)
    if cfg["output.svg"]:
        write_line_plot(out / "trajectory.svg", times,
                        {p: results[p].values for p in sorted(results)},
                        title=f"{name}: expectation along the orbit",
                        xlabel="t", ylabel="<M>(t)")

    summary = {
        "scenario": name,
        "path": cfg["path"],
        "grid.e_min": cfg["grid.e_min"], "grid.e_max": cfg["grid.e_max"], "grid.n": cfg["grid.n"],
        "t_start": float(times[0]), "t_end": float(times[-1]), "steps": int(times.size),
    }
    for p in sorted(results):
        traj = results[p]
        summary[f"m_start_{p}"] = float(traj.values[0])
        summary[f"m_end_{p}"] = float(traj.values[-1])
        summary[f"max_adjacent_increase_{p}"] = traj.max_increase
        summary[f"n_monotone_violations_{p}"] = len(traj.monotone_violations)
    if len(results) == 2:
        summary["dual_path_max_expectation_diff"] = float(
            np.max(np.abs(results["fast"].values - results["direct"].values))
        )
    summary["timing_setup_s"] = t1 - t0
    summary["timing_trajectory_s"] = t2 - t1
    write_summary(out / "summary.txt", summary)
    return summary


def _density_svg(path, m, rho, title):
    # rho(m) has integrable spikes at the interval edges (the change of
    # variables amplifies coefficient tails by 1/(2 pi m (1 - m))); plot the
    # bulk window only, the CSV carries the full frame
    bulk = (m >= 1e-3) & (m <= 1.0 - 1e-3)
    write_line_plot(path, m[bulk], {"rho_plus": rho[0][bulk], "rho_minus": rho[1][bulk]},
                    title=title, xlabel="m (bulk window)", ylabel="rho(m)")


def run_eigden(cfg: ScenarioConfig) -> dict:
    out = _prepare_outdir(cfg)
    grid = build_scenario_grid(cfg)
    state = build_scenario_state(cfg, grid)
    t = cfg["density.time"]
    t0 = time.perf_counter()
    evolved = evolve(state, t)
    m, rho, covered = eigen_density_frame(evolved, points=cfg["frames.density_points"])
    t1 = time.perf_counter()
    write_csv(out / "eigen_density.csv", ("m", "rho_plus", "rho_minus"),
              zip(m, rho[0], rho[1]))
    if cfg["output.svg"]:
        _density_svg(out / "eigen_density.svg", m, rho,
                     f"eigenvalue density at t = {t:g}")
    mass, first = eigen_density_moments(evolved)
    summary = {
        "scenario": "eigden",
        "time": t,
        "grid.e_min": cfg["grid.e_min"], "grid.e_max": cfg["grid.e_max"], "grid.n": cfg["grid.n"],
        "frame_covered_mass": covered,
        "density_mass": mass,
        "density_first_moment": first,
        "timing_density_s": t1 - t0,
    }
    write_summary(out / "summary.txt", summary)
    return summary


def run_fig2(cfg: ScenarioConfig) -> dict:
    if cfg["state.kind"] != "gaussian":
        raise ScenarioError("fig2 frames need a gaussian packet state")
    out = _prepare_outdir(cfg)
    grid = build_scenario_grid(cfg)
    state = build_scenario_state(cfg, grid)
    params = GaussianPacketParams(cfg["state.eta"], cfg["state.p0"], cfg["state.xi0"])
    frame_times = cfg["frames.times"]
    t0 = time.perf_counter()
    summary = {
        "scenario": "fig2",
        "grid.e_min": cfg["grid.e_min"], "grid.e_max": cfg["grid.e_max"], "grid.n": cfg["grid.n"],
        "n_frames": len(frame_times),
    }
    for k, t in enumerate(frame_times):
        center = params.p0 / params.eta * t
        half = 8.5 * position_spread(params, t)
        x = np.linspace(center - half, center + half, cfg["frames.x_points"])
        dens = position_density(params, x, t)
        write_csv(out / f"position_density_{k:02d}.csv", ("coordinate", "density"),
                  zip(x, dens))
        m, rho, covered = eigen_density_frame(evolve(state, t),
                                              points=cfg["frames.density_points"])
        write_csv(out / f"eigen_density_{k:02d}.csv", ("m", "rho_plus", "rho_minus"),
                  zip(m, rho[0], rho[1]))
        if cfg["output.svg"]:
            write_line_plot(out / f"position_density_{k:02d}.svg", x, {"density": dens},
                            title=f"|psi(x, t)|^2 at t = {t:g}", xlabel="x", ylabel="density")
            _density_svg(out / f"eigen_density_{k:02d}.svg", m, rho,
                         f"eigenvalue density at t = {t:g}")
        mass_x = float(np.trapezoid(dens, x))
        mean_x = float(np.trapezoid(x * dens, x) / mass_x)
        var_x = float(np.trapezoid((x - mean_x) ** 2 * dens, x) / mass_x)
        summary[f"frame_{k:02d}_t"] = float(t)
        summary[f"frame_{k:02d}_position_mass"] = mass_x
        summary[f"frame_{k:02d}_position_variance"] = var_x
        summary[f"frame_{k:02d}_density_covered_mass"] = covered
        summary[f"frame_{k:02d}_expectation_m"] = expectation_m(evolve(state, t))
    summary["timing_frames_s"] = time.perf_counter() - t0
    write_summary(out / "summary.txt", summary)
    return summary


# ---------------------------------------------------------------------------
# verify


def _verify_checks(cfg: ScenarioConfig):
    rng = np.random.default_rng(cfg["verify.seed"])
    checks = []

    def record(name, value, tol, ok=None):
        ok = (value <= tol) if ok is None else ok
        checks.append((name, "PASS" if ok else "FAIL", float(value), float(tol)))

    g = make_log_grid(1e-4, 1e4, 4096)
    record("grid_weight_sum_relerr",
           abs(float(np.sum(g.weights)) - (1e4 - 1e-4)) / (1e4 - 1e-4), 1e-3)
    record("grid_log_spacing_relerr",
           float(np.max(np.abs(np.diff(g.log_points) - g.du))) / g.du, 1e-12)

    wide = make_log_grid(1e-22, 1e21, 512)
    f = random_smooth_state(wide, rng)
    spec = forward_mellin(f)
    back = inverse_mellin(spec)
    record("transform_roundtrip",
           state_norm(make_state(wide, f.channels, back.amplitudes - f.amplitudes))
           / state_norm(f), 1e-12)
    dnu = 2.0 * np.pi / (wide.n * wide.du)
    record("parseval_relerr",
           abs(dnu * float(np.sum(np.abs(spec.coefficients) ** 2)) - state_norm(f) ** 2), 1e-8)

    # strict bounds checkable while 1 - m is representable: |nu| <= ~5.7
    nus = np.linspace(-5.5, 30, 601)
    ms = eigenvalue_of_frequency(nus)
    record("multiplier_in_unit_interval",
           0.0, 0.5, ok=bool(np.all((ms > 0) & (ms < 1)) and np.all(np.diff(ms) < 0)))
    probe = np.linspace(1e-6, 1 - 1e-6, 201)
    record("eigenvalue_frequency_roundtrip",
           float(np.max(np.abs(eigenvalue_of_frequency(frequency_of_eigenvalue(probe)) - probe))),
           1e-14)

    small = make_log_grid(1e-3, 1e3, 256)
    for quad in ("parity", "subtraction"):
        op = build_dense_m(small, quadrature=quad)
        record(f"hermiticity_{quad}",
               float(np.max(np.abs(op.matrix - op.matrix.conj().T))), 1e-12)
        ev = dense_spectrum(op)
        record(f"eigenvalue_range_{quad}",
               float(max(-ev[0], ev[-1] - 1.0, 0.0)), 1e-6)

    op = build_dense_m(wide)
    worst_vec, worst_mom = 0.0, 0.0
    for _ in range(5):
        f = random_smooth_state(wide, rng)
        diff = apply_m_fast(f).amplitudes - apply_m_direct(f, op).amplitudes
        worst_vec = max(worst_vec,
                        state_norm(make_state(wide, f.channels, diff)) / state_norm(f))
        mass, first = eigen_density_moments(f)
        worst_mom = max(worst_mom, abs(first - expectation_m(f, path="direct", operator=op)),
                        abs(mass - 1.0))
    record("dual_path_relative_error", worst_vec, 1e-6)
    record("density_moment_consistency", worst_mom, 1e-6)

    worst = 0.0
    for ea, eb in ((2.0, 1.0), (0.05, 0.4), (0.3, 9.0)):
        kernel = -1.0 / (2j * np.pi * (ea - eb))
        worst = max(worst, abs(completeness_kernel_check(ea, eb, 1e-5) - kernel) / abs(kernel))
    record("completeness_kernel_relerr", worst, 1e-3)

    resg = make_log_grid(1e-8, 1e8, 1024)
    win = tukey_window(resg, 15.2, 2.5)
    interior = np.abs(resg.log_points - resg.center) <= 2.3
    worst = 0.0
    for m0 in (0.2, 0.5, 0.8):
        gst = windowed_eigenfunction(resg, m0, "+", win)
        resid = apply_m_fast(gst).amplitudes - m0 * gst.amplitudes
        wgt = resg.weights[interior]
        num = float(np.sqrt(np.sum(wgt * np.abs(resid[0, interior]) ** 2)))
        den = float(np.sqrt(np.sum(wgt * np.abs(gst.amplitudes[0, interior]) ** 2)))
        worst = max(worst, num / den)
    record("eigenfunction_residual", worst, 1e-3)

    # keep E t_max well below the grid Nyquist pi/du to avoid aliasing noise
    lygrid = make_log_grid(1e-3, 1e3, 1024)
    worst = -np.inf
    for _ in range(10):
        f = random_smooth_state(lygrid, rng, center_fraction=0.08,
                                sigma_range=(0.35, 0.5), freq_max=2.0)
        vals = [expectation_m(evolve(f, t)) for t in np.linspace(0.0, 5.0, 11)]
        worst = max(worst, float(np.max(np.diff(vals))))
    record("lyapunov_max_increase", worst, MONOTONE_TOL)

    figg = make_log_grid(5e-15, 50.0, 1024)
    packet = normalize_state(
        to_energy_state(GaussianPacketParams(1.0, 0.64, 0.3), figg))
    record("packet_norm_error", abs(state_norm(packet) - 1.0), 1e-10)
    traj = trajectory(packet, np.linspace(0.0, 16.0, 41))
    record("fig1_max_increase", traj.max_increase, MONOTONE_TOL)
    record("fig1_initial_expectation_offset", abs(traj.values[0] - 0.5), 1e-6)
    record("fig1_half_decay", traj.terminal_value, 0.5 * traj.values[0])
    record("backward_time_increase",
           expectation_m(evolve(packet, -2.0)) - expectation_m(packet), np.inf,
           ok=expectation_m(evolve(packet, -2.0)) > expectation_m(packet))
    minus_mass = float(np.sum(figg.weights * np.abs(packet.amplitudes[1]) ** 2))
    record("negative_channel_mass_error",
           abs(minus_mass - 0.5 * erfc(0.64 / 0.3)), 1e-4)
    return checks


def run_verify(cfg: ScenarioConfig) -> dict:
    out = _prepare_outdir(cfg)
    t0 = time.perf_counter()
    checks = _verify_checks(cfg)
    elapsed = time.perf_counter() - t0
    write_csv(out / "verify_results.csv", ("check", "status", "value", "tolerance"), checks)
    failed = [name for name, status, _, _ in checks if status == "FAIL"]
    summary = {
        "scenario": "verify",
        "seed": cfg["verify.seed"],
        "n_checks": len(checks),
        "n_failed": len(failed),
        "overall": "PASS" if not failed else "FAIL",
        "timing_total_s": elapsed,
    }
    write_summary(out / "summary.txt", summary)
    for name, status, value, tol in checks:
        print(f"{status:4s} {name} (value={value:.3e}, tol={tol:.3e})")
    print(f"verify: {summary['overall']} ({len(checks)} checks, {len(failed)} failed)")
    return summary


RUNNERS = {
    "spectrum": run_spectrum,
    "evolve": lambda cfg: run_trajectory_scenario(cfg, "evolve"),
    "fig1": lambda cfg: run_trajectory_scenario(cfg, "fig1"),
    "fig2": run_fig2,
    "eigden": run_eigden,
    "verify": run_verify,
}


def run_scenario(subcommand: str, cfg: ScenarioConfig) -> dict:
    return RUNNERS[subcommand](cfg)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="arrow-m",
        description="Time-ordering operator scenarios: spectra, trajectories, "
                    "eigenvalue densities, wave-packet frames, invariant checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, blurb in (
        ("spectrum", "dense eigenvalue spectrum of the operator"),
        ("evolve", "expectation trajectory for a configured state"),
        ("eigden", "eigenvalue density of a configured state"),
        ("fig1", "free-packet monotone expectation decay scenario"),
        ("fig2", "free-packet position/eigenvalue density frames"),
        ("verify", "run the invariant suite; exit nonzero on failure"),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--config", help="key = value scenario configuration file")
        p.add_argument("--out", help="output directory (overrides output.dir)")
        p.add_argument("--path", choices=("direct", "fast", "both"),
                       help="operator application path (overrides path)")
    args = parser.parse_args(argv)
    overrides = {}
    if args.out is not None:
        overrides["output.dir"] = args.out
    if args.path is not None:
        overrides["path"] = args.path
    try:
        cfg = load_config(args.subcommand, args.config, overrides)
        summary = run_scenario(args.subcommand, cfg)
    except ScenarioError as exc:
        print(f"arrow-m {args.subcommand}: {exc}", file=sys.stderr)
        return 2
    if args.subcommand == "verify" and summary.get("overall") != "PASS":
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
