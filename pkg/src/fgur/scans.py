"""Parameter scans and the brute-force consistency check."""

from dataclasses import dataclass, field
from enum import Enum
import itertools
import math

import numpy as np

from fgur import cavity, fock, optimizer, unruh
from fgur.measurement import (
    XZ_PAIRS,
    Basis,
    MeasurementSetting,
    OutcomePair,
    analytic_bound_uniform,
    analytic_probability_uniform,
    fgur_lhs,
    paper_mcs_angles,
    probability,
)

PAIR_00 = OutcomePair.from_code("00")
PAIR_11 = OutcomePair.from_code("11")

UNRUH_COLUMNS = ("r", "ql", "zeta_00", "zeta_11", "zeta_true_00", "zeta_true_11", "theta_star_00", "theta_star_11")
CAVITY_COLUMNS = ("u", "h", "k", "s", "zeta_00", "zeta_11")

DEFAULT_R_STEPS = 200
DEFAULT_U_STEPS = 400
ORACLE_TOLERANCE = 1e-10


class ScanMode(Enum):
    UNRUH = "unruh-scan"
    CAVITY = "cavity-scan"
    MCS = "mcs"
    ORACLE = "oracle-check"


@dataclass
class ScanSpec:
    """What to sweep and what to hold fixed.

    ``ranges`` maps a swept parameter to ``(start, stop, steps)``.  A value in
    ``fixed`` may be a tuple, in which case one curve family is produced per
    entry (e.g. several ``ql`` values in one Unruh scan).
    """

    mode: ScanMode
    ranges: dict = field(default_factory=dict)
    fixed: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        overlap = set(self.ranges) & set(self.fixed)
        if overlap:
            raise ValueError(f"parameters both swept and fixed: {sorted(overlap)}")
        for name, (_, _, steps) in self.ranges.items():
            if steps < 2:
                raise ValueError(f"sweep of {name} needs at least 2 steps, got {steps}")

    def sweep(self, name):
        start, stop, steps = self.ranges[name]
        return np.linspace(start, stop, int(steps))

    def family(self, name):
        value = self.fixed[name]
        return tuple(value) if isinstance(value, (tuple, list)) else (value,)


@dataclass
class ScanTable:
    """Rows of a scan together with what the columns mean for plotting."""

    columns: tuple
    rows: list
    sweep: str
    family: str | None = None
    series: tuple = ()

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def run_unruh_scan(spec):
    r_values = spec.sweep("r")
    if r_values.min() < -1e-12 or r_values.max() > unruh.R_MAX + 1e-12:
        raise ValueError("r must stay within [0, pi/4]")
    r_values = np.clip(r_values, 0.0, unruh.R_MAX)
    with_mcs = spec.options.get("mcs", False)
    grid_n = spec.options.get("grid_n", optimizer.DEFAULT_GRID_N)
    rows = []
    for ql in spec.family("ql"):
        for r in r_values:
            params = unruh.UnruhParams(float(r), float(ql))
            row = [float(r), float(ql), analytic_bound_uniform(PAIR_00, params), analytic_bound_uniform(PAIR_11, params)]
            if with_mcs:
                m00 = optimizer.maximize_uniform(PAIR_00, params, grid_n)
                m11 = optimizer.maximize_uniform(PAIR_11, params, grid_n)
                row += [m00.zeta_true, m11.zeta_true, m00.theta_star, m11.theta_star]
            else:
                row += [None] * 4
            rows.append(tuple(row))
    return ScanTable(UNRUH_COLUMNS, rows, sweep="r", family="ql", series=("zeta_00", "zeta_11"))


def run_cavity_scan(spec):
    h = float(spec.fixed.get("h", 0.1))
    k = int(spec.fixed.get("k", 1))
    if h <= 0:
        raise ValueError(f"h must be positive, got {h}")
    prefactor = spec.options.get("f_minus_prefactor", 16)
    u_values = spec.sweep("u")
    rows = []
    for s in spec.family("s"):
        for u in u_values:
            p = cavity.CavityParams(h, k, float(s), float(u), prefactor)
            rows.append((float(u), h, k, float(s), cavity.cavity_bound(PAIR_00, p), cavity.cavity_bound(PAIR_11, p)))
    return ScanTable(CAVITY_COLUMNS, rows, sweep="u", family="s", series=("zeta_00", "zeta_11"))


@dataclass
class OracleReport:
    tolerance: float
    n_points: int
    max_deviation: dict
    worst_point: dict

    @property
    def passed(self):
        return all(v <= self.tolerance for v in self.max_deviation.values())

    def lines(self):
        out = [f"oracle check over {self.n_points} parameter points (tolerance {self.tolerance:.1e})"]
        for name, dev in self.max_deviation.items():
            status = "ok" if dev <= self.tolerance else "MISMATCH"
            line = f"  {name:<16} max |deviation| = {dev:.3e}  {status}"
            if dev > self.tolerance:
                line += "  at " + ", ".join(f"{k}={v:.6g}" for k, v in self.worst_point[name].items())
            out.append(line)
        return out


def run_oracle_check(spec):
    """Compare the closed forms with the Fock-space pipeline on a product grid.

    Three groups are checked: the wedge-I reduced matrix, the x/z outcome
    probabilities (both from the closed-form expressions and from the
    analytic matrix), and the four x/z pair bounds.
    """
    n = int(spec.options.get("grid", 5))
    tol = float(spec.options.get("tolerance", ORACLE_TOLERANCE))
    ordering = spec.options.get("ordering", fock.Ordering.PHYSICAL)
    thetas = 2 * math.pi * np.arange(n) / n
    phis = 2 * math.pi * np.arange(n) / n
    rs = np.linspace(0, unruh.R_MAX, n)
    qls = np.linspace(0, 1, n)
    settings = [MeasurementSetting(b, o) for b in (Basis.X, Basis.Z) for o in (0, 1)]
    y_settings = [MeasurementSetting(Basis.Y, o) for o in (0, 1)]

    dev = {"reduced_density": 0.0, "probabilities": 0.0, "bounds": 0.0}
    worst = {k: {} for k in dev}

    def record(name, value, point):
        if value > dev[name]:
            dev[name] = value
            worst[name] = point

    count = 0
    for th, ph, r, ql in itertools.product(thetas, phis, rs, qls):
        state, params = unruh.BlochState(th, ph), unruh.UnruhParams(r, ql)
        point = {"theta": th, "phi": ph, "r": r, "q_L": ql}
        rho_oracle = unruh.reduced_density_oracle(state, params, ordering=ordering)
        rho_analytic = unruh.reduced_density_analytic(state, params)
        record("reduced_density", float(np.abs(rho_oracle - rho_analytic).max()), point)
        for st in settings:
            p_oracle = probability(st, rho_oracle)
            d = max(
                abs(p_oracle - analytic_probability_uniform(st, state, params)),
                abs(p_oracle - probability(st, rho_analytic)),
            )
            record("probabilities", d, point)
        for st in y_settings:
            record("probabilities", abs(probability(st, rho_oracle) - probability(st, rho_analytic)), point)
        count += 1

    for r, ql in itertools.product(rs, qls):
        params = unruh.UnruhParams(r, ql)
        for pair in XZ_PAIRS:
            theta, phi = paper_mcs_angles(pair)
            lhs = fgur_lhs(pair, unruh.reduced_density_oracle(unruh.BlochState(theta, phi), params, ordering=ordering))
            record("bounds", abs(lhs - analytic_bound_uniform(pair, params)), {"r": r, "q_L": ql, "pair": int(pair.code)})
    return OracleReport(tol, count, dev, worst)


def run_mcs(spec):
    """Single maximally-certain-state report, returned as a one-row table."""
    pair = OutcomePair.from_code(spec.fixed.get("pair", "00"))
    grid_n = spec.options.get("grid_n", optimizer.DEFAULT_GRID_N)
    if spec.options.get("scenario", "unruh") == "cavity":
        p = cavity.CavityParams(
            float(spec.fixed.get("h", 0.1)),
            int(spec.fixed.get("k", 1)),
            float(spec.fixed.get("s", 0.0)),
            float(spec.fixed.get("u", 0.5)),
            spec.options.get("f_minus_prefactor", 16),
        )
        res = optimizer.maximize_cavity(pair, p, grid_n)
        head = ("scenario", "pair", "h", "k", "s", "u")
        vals = ("cavity", pair.code, p.h, p.k, p.s, p.u)
    else:
        params = unruh.UnruhParams(float(spec.fixed.get("r", 0.0)), float(spec.fixed.get("ql", 0.0)))
        res = optimizer.maximize_uniform(pair, params, grid_n)
        head = ("scenario", "pair", "r", "ql")
        vals = ("unruh", pair.code, params.r, params.q_L)
    columns = head + ("theta_star", "phi_star", "zeta_true", "zeta_paper", "gap", "theta_deviation")
    row = vals + (res.theta_star, res.phi_star, res.zeta_true, res.zeta_paper, res.gap, res.theta_deviation)
    return ScanTable(columns, [row], sweep=head[2]), res
