"""Admittance-to-power-Jacobian bridging and band metrics.

The 3x3 frequency-dependent Jacobian maps (d|v_ac|, dtheta_ac, dv_dc) to
(dP_ac, dQ_ac, dP_dc).  It is an exact affine image of the AC/DC admittance
at the operating point; the theta column carries the terminal-voltage
magnitude factor so the map stays exact away from 1 p.u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .converters import ConverterModel, OperatingPoint
from .errors import DegenerateOperatingPointError, EmptyBandError, UnknownElementError
from .lti import FrequencyGrid, FrequencyResponse, freq_response

ADMITTANCE_ELEMENTS = (
    "Y_dd", "Y_dq", "Y_d_dc",
    "Y_qd", "Y_qq", "Y_q_dc",
    "Y_dc_d", "Y_dc_q", "Y_dc_dc",
)

JACOBIAN_ELEMENTS = (
    "J_pac_vac", "J_pac_th", "J_pac_vdc",
    "J_qac_vac", "J_qac_th", "J_qac_vdc",
    "J_pdc_vac", "J_pdc_th", "J_pdc_vdc",
)

_ELEMENT_INDEX = {name: divmod(i, 3) for i, name in enumerate(JACOBIAN_ELEMENTS)}


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class AdmittanceSample:
    """One 3x3 admittance matrix, axes ordered (d, q, dc)."""

    omega: float
    y: np.ndarray

    def __post_init__(self):
        y = np.asarray(self.y, dtype=complex).reshape(3, 3)
        if not np.all(np.isfinite(y)):
            raise ValueError("admittance sample contains non-finite entries")
        if not (self.omega > 0.0):
            raise ValueError("omega must be > 0")
        object.__setattr__(self, "y", _freeze(y.copy()))


@dataclass(frozen=True)
class JacobianSample:
    """One 3x3 Jacobian, rows (P_ac, Q_ac, P_dc), columns (|v_ac|, theta_ac, v_dc)."""

    omega: float
    j: np.ndarray

    def __post_init__(self):
        j = np.asarray(self.j, dtype=complex).reshape(3, 3)
        if not np.all(np.isfinite(j)):
            raise ValueError("jacobian sample contains non-finite entries")
        object.__setattr__(self, "j", _freeze(j.copy()))

    def element(self, name: str) -> complex:
        if name not in _ELEMENT_INDEX:
            raise UnknownElementError(name)
        r, c = _ELEMENT_INDEX[name]
        return complex(self.j[r, c])


@dataclass(frozen=True)
class JacobianResponse:
    """Jacobian samples aligned one-to-one with a frequency grid."""

    grid: FrequencyGrid
    samples: tuple[JacobianSample, ...]

    def __post_init__(self):
        samples = tuple(self.samples)
        if len(samples) != len(self.grid):
            raise ValueError("one Jacobian sample required per grid point")
        for s, w in zip(samples, self.grid.omegas):
            if s.omega != w:
                raise ValueError("Jacobian samples misaligned with the grid")
        object.__setattr__(self, "samples", samples)

    def element(self, name: str) -> np.ndarray:
        if name not in _ELEMENT_INDEX:
            raise UnknownElementError(name)
        r, c = _ELEMENT_INDEX[name]
        return np.array([s.j[r, c] for s in self.samples])

    def matrix(self) -> np.ndarray:
        return np.array([s.j for s in self.samples])


@dataclass(frozen=True)
class BandMetrics:
    """Log-frequency band averages of one Jacobian element."""

    f_lo: float
    f_hi: float
    element: str
    mean_mag: float
    mean_phase_dev: float
    n_points: int

    def __post_init__(self):
        if not (self.f_lo < self.f_hi):
            raise ValueError("f_lo must be < f_hi")
        if self.n_points < 2:
            raise ValueError("band metrics need at least 2 points")
        if not (0.0 <= self.mean_phase_dev <= 180.0):
            raise ValueError("mean_phase_dev must lie in [0, 180] degrees")


def polar_transform(op: OperatingPoint) -> np.ndarray:
    """Map (d|v_ac|, dtheta_ac) to (dv_d, dv_q) at the operating point."""
    v0 = op.v_mag0
    if v0 <= 0.0:
        raise DegenerateOperatingPointError("polar transform needs |v_ac| > 0")
    c, s = math.cos(op.theta0), math.sin(op.theta0)
    return np.array([[c, -v0 * s], [s, v0 * c]])


def bridge_matrix(y: np.ndarray, op: OperatingPoint) -> np.ndarray:
    """3x3 Jacobian from one 3x3 admittance matrix at the operating point."""
    y = np.asarray(y, dtype=complex).reshape(3, 3)
    t = polar_transform(op)
    y_ac = y[:2, :2]
    v_row = np.array([op.v_d0, op.v_q0])
    j = np.zeros((3, 3), dtype=complex)
    j[0, :2] = (v_row @ y_ac + np.array([op.i_d0, op.i_q0])) @ t
    j[0, 2] = op.v_d0 * y[0, 2] + op.v_q0 * y[1, 2]
    j[1, :2] = (np.array([op.v_q0, -op.v_d0]) @ y_ac + np.array([-op.i_q0, op.i_d0])) @ t
    j[1, 2] = -op.v_d0 * y[1, 2] + op.v_q0 * y[0, 2]
    j[2, :2] = op.v_dc0 * (y[2, :2] @ t)
    j[2, 2] = op.v_dc0 * y[2, 2] + op.i_dc0
    return j


def bridge(ys: AdmittanceSample, op: OperatingPoint) -> JacobianSample:
    return JacobianSample(ys.omega, bridge_matrix(ys.y, op))


def admittance_response(model: ConverterModel, grid: FrequencyGrid) -> FrequencyResponse:
    """Terminal admittance sweep of a converter model."""
    return freq_response(model.realization, grid)


def sweep_jacobian(model: ConverterModel, grid: FrequencyGrid) -> JacobianResponse:
    """Bridge the model's admittance at every grid point."""
    resp = admittance_response(model, grid)
    samples = tuple(
        JacobianSample(w, bridge_matrix(resp.samples[k], model.op))
        for k, w in enumerate(grid.omegas)
    )
    return JacobianResponse(grid, samples)


def _phase_dev_deg(values: np.ndarray) -> np.ndarray:
    """Circular distance of each phase from 180 degrees, in [0, 180]."""
    shifted = np.angle(values) - math.pi
    wrapped = np.arctan2(np.sin(shifted), np.cos(shifted))
    return np.degrees(np.abs(wrapped))


def band_metrics(jr: JacobianResponse, element: str, f_lo: float, f_hi: float) -> BandMetrics:
    """Log-frequency trapezoidal averages of |J| and its phase distance from 180 deg."""
    if element not in JACOBIAN_ELEMENTS:
        raise UnknownElementError(element)
    if not (f_lo < f_hi):
        raise EmptyBandError(f"band edges must satisfy f_lo < f_hi, got [{f_lo}, {f_hi}]")
    f = jr.grid.hz
    eps = 1e-12
    mask = (f >= f_lo * (1.0 - eps)) & (f <= f_hi * (1.0 + eps))
    n = int(np.count_nonzero(mask))
    if n < 2:
        raise EmptyBandError(f"fewer than 2 grid points inside [{f_lo}, {f_hi}] Hz")
    vals = jr.element(element)[mask]
    x = np.log(f[mask])
    span = x[-1] - x[0]
    mean_mag = float(np.trapz(np.abs(vals), x) / span)
    mean_dev = float(np.trapz(_phase_dev_deg(vals), x) / span)
    mean_dev = min(max(mean_dev, 0.0), 180.0)
    return BandMetrics(f_lo, f_hi, element, mean_mag, mean_dev, n)
