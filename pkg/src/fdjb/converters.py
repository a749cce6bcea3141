"""Linearized averaged converter models with a 3x3 AC/DC admittance interface.

Both devices expose the same small-signal terminal contract: inputs
(dv_d, dv_q, dv_dc), outputs (di_d, di_q, di_dc), all per-unit on a shared
base, with current and power positive out of the converter.

The DC side of both devices is an internal energy-storage (link) state fed
from the DC terminal through a recharge conductance; the link row is the
exact energy balance  C_dc*v_dc0*d(dv_link)/dt = -dP_ac - dP_dc, with both
powers measured at the terminals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOperatingPointError
from .lti import StateSpaceModel, eigenvalues, interconnect, static_gain

CONVERTER_INPUTS = ("dv_d", "dv_q", "dv_dc")
CONVERTER_OUTPUTS = ("di_d", "di_q", "di_dc")

OMEGA_BASE = 2.0 * math.pi * 50.0

# Internal realization constants (not exposed as tuning parameters):
# first-order lag realizing the reactive droop as a state, and the DC-link
# tracking time constant that sets the recharge conductance K_e = C*v0/tau.
# The droop lag must stay well below the barely-damped +/-j*omega_b branch
# resonance or the Q loop feeds it negative damping.
E_LAG_T_S = 0.1
LINK_TRACK_TAU_S = 1.5e-3

_BALANCE_TOL = 1e-9


@dataclass(frozen=True)
class OperatingPoint:
    """Steady dq/DC terminal quantities anchoring a linearization."""

    v_d0: float
    v_q0: float
    i_d0: float
    i_q0: float
    v_dc0: float
    i_dc0: float
    theta0: float

    def __post_init__(self):
        vals = (self.v_d0, self.v_q0, self.i_d0, self.i_q0, self.v_dc0, self.i_dc0, self.theta0)
        if not all(math.isfinite(v) for v in vals):
            raise DegenerateOperatingPointError("operating point contains non-finite values")
        if self.v_mag0 <= 0.0:
            raise DegenerateOperatingPointError("terminal AC voltage magnitude must be > 0")
        if self.v_dc0 <= 0.0:
            raise DegenerateOperatingPointError("DC voltage must be > 0")
        balance = self.p_ac0 + self.v_dc0 * self.i_dc0
        if abs(balance) > _BALANCE_TOL:
            raise DegenerateOperatingPointError(
                f"lossless power balance violated by {balance:.3e} p.u.")

    @property
    def v_mag0(self) -> float:
        return math.hypot(self.v_d0, self.v_q0)

    @property
    def p_ac0(self) -> float:
        return self.v_d0 * self.i_d0 + self.v_q0 * self.i_q0

    @property
    def q_ac0(self) -> float:
        return self.v_q0 * self.i_d0 - self.v_d0 * self.i_q0


def solve_operating_point(p_ac0: float, q_ac0: float, v_ac0: float,
                          theta0: float, v_dc0: float) -> OperatingPoint:
    """Steady currents for given terminal powers and voltages (lossless device)."""
    if v_ac0 <= 0.0 or v_dc0 <= 0.0:
        raise DegenerateOperatingPointError("V_ac0 and V_dc0 must be > 0")
    v_d0 = v_ac0 * math.cos(theta0)
    v_q0 = v_ac0 * math.sin(theta0)
    v2 = v_ac0 * v_ac0
    i_d0 = (p_ac0 * v_d0 + q_ac0 * v_q0) / v2
    i_q0 = (p_ac0 * v_q0 - q_ac0 * v_d0) / v2
    i_dc0 = -p_ac0 / v_dc0
    return OperatingPoint(v_d0, v_q0, i_d0, i_q0, v_dc0, i_dc0, theta0)


@dataclass(frozen=True)
class GfmVsmParams:
    """Virtual-synchronous-machine grid-forming control parameters (p.u.)."""

    j_v: float = 4.0
    d_p: float = 50.0
    k_q: float = 0.1
    l_v: float = 0.075
    r_v: float = 0.0
    l_f: float = 0.15
    r_f: float = 0.005
    c_dc: float = 0.1
    omega_b: float = OMEGA_BASE

    def __post_init__(self):
        for name in ("j_v", "d_p", "k_q", "l_v", "l_f", "c_dc", "omega_b"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be > 0")
        if self.r_v < 0.0 or self.r_f < 0.0:
            raise ValueError("r_v and r_f must be >= 0")


@dataclass(frozen=True)
class GflParams:
    """PLL-synchronized grid-following control parameters (p.u.)."""

    kp_pll: float = 0.5
    ki_pll: float = 20.0
    kp_cc: float = 0.7
    ki_cc: float = 50.0
    k_d_dc: float = 0.0
    l_f: float = 0.15
    r_f: float = 0.005
    c_dc: float = 0.1
    omega_b: float = OMEGA_BASE

    def __post_init__(self):
        for name in ("kp_pll", "ki_pll", "kp_cc", "ki_cc", "k_d_dc"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0")
        if self.l_f <= 0.0 or self.c_dc <= 0.0 or self.omega_b <= 0.0:
            raise ValueError("l_f, c_dc and omega_b must be > 0")
        if self.r_f < 0.0:
            raise ValueError("r_f must be >= 0")


@dataclass(frozen=True)
class ConverterModel:
    """Admittance-form device realization tied to its operating point."""

    realization: StateSpaceModel
    op: OperatingPoint

    def __post_init__(self):
        r = self.realization
        if r.input_labels != CONVERTER_INPUTS or r.output_labels != CONVERTER_OUTPUTS:
            raise ValueError(
                f"converter realization must have inputs {CONVERTER_INPUTS} and "
                f"outputs {CONVERTER_OUTPUTS}, got {r.input_labels} / {r.output_labels}")
        margin = eigenvalues(r.A).max_real
        if margin >= 0.0:
            raise ValueError(
                f"converter realization is not stand-alone stable (max Re eig = {margin:.3e})")


def _power_rows(op: OperatingPoint) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient rows of dp_ac and dq_ac over (dv_d, dv_q, di_d, di_q)."""
    p_row = np.array([op.i_d0, op.i_q0, op.v_d0, op.v_q0])
    q_row = np.array([-op.i_q0, op.i_d0, op.v_q0, -op.v_d0])
    return p_row, q_row


def _rl_branch_block(r_tot: float, l_tot: float, omega_b: float) -> StateSpaceModel:
    """Series RL from internal EMF to the terminal in the network dq frame."""
    k = omega_b / l_tot
    a = k * np.array([[-r_tot, l_tot], [-l_tot, -r_tot]])
    b = k * np.array([[1.0, 0.0, -1.0, 0.0], [0.0, 1.0, 0.0, -1.0]])
    return StateSpaceModel(
        a, b, np.eye(2), np.zeros((2, 4)),
        ("de_d", "de_q", "dv_d", "dv_q"),
        ("di_d", "di_q"),
        ("i_d", "i_q"),
    )


def _dc_link_block(c_dc: float, op: OperatingPoint) -> StateSpaceModel:
    """Internal link state charged from the DC terminal; terminal current output.

    The state row is the exact terminal-power energy balance; the recharge
    conductance K_e keeps the link tracking the terminal with time constant
    LINK_TRACK_TAU_S, so the device is stand-alone stable for any droop gain.
    """
    tau = LINK_TRACK_TAU_S
    k_e = c_dc * op.v_dc0 / tau
    a = np.array([[-1.0 / tau]])
    b = np.array([[1.0 / tau, 0.0]])
    c = np.array([[k_e / op.v_dc0], [1.0]])
    d = np.array([[(-k_e - op.i_dc0) / op.v_dc0, -1.0 / op.v_dc0], [0.0, 0.0]])
    return StateSpaceModel(
        a, b, c, d,
        ("dv_dc", "dp_ac"),
        ("di_dc", "dvlink"),
        ("v_link",),
    )


def build_gfm_vsm(params: GfmVsmParams, op: OperatingPoint) -> ConverterModel:
    """Swing + reactive droop + EMF behind virtual-plus-filter impedance."""
    wb = params.omega_b
    r_t = params.r_v + params.r_f
    l_t = params.l_v + params.l_f

    e_d0 = op.v_d0 + r_t * op.i_d0 - l_t * op.i_q0
    e_q0 = op.v_q0 + r_t * op.i_q0 + l_t * op.i_d0
    e_mag0 = math.hypot(e_d0, e_q0)
    delta0 = math.atan2(e_q0, e_d0)

    p_row, q_row = _power_rows(op)
    meas = static_gain(
        np.vstack([p_row, q_row]),
        ("dv_d", "dv_q", "di_d", "di_q"),
        ("dp_ac", "dq_ac"),
    )

    swing = StateSpaceModel(
        np.array([[0.0, wb], [0.0, -params.d_p / params.j_v]]),
        np.array([[0.0, 0.0], [-1.0 / params.j_v, 1.0 / params.j_v]]),
        np.array([[1.0, 0.0]]),
        np.zeros((1, 2)),
        ("dp_ac", "dp_ref"),
        ("d_delta",),
        ("delta", "omega"),
    )

    elag = StateSpaceModel(
        np.array([[-1.0 / E_LAG_T_S]]),
        np.array([[-params.k_q / E_LAG_T_S, params.k_q / E_LAG_T_S]]),
        np.array([[1.0]]),
        np.zeros((1, 2)),
        ("dq_ac", "dq_ref"),
        ("de_mag",),
        ("e_mag",),
    )

    # modulation rides on the link voltage: e = m * v_link / v_dc0 at the op
    emf = static_gain(
        np.array([
            [math.cos(delta0), -e_mag0 * math.sin(delta0), e_d0 / op.v_dc0],
            [math.sin(delta0), e_mag0 * math.cos(delta0), e_q0 / op.v_dc0],
        ]),
        ("de_mag", "d_delta", "dvlink"),
        ("de_d", "de_q"),
    )

    branch = _rl_branch_block(r_t, l_t, wb)
    link = _dc_link_block(params.c_dc, op)

    realization = interconnect(
        [meas, swing, elag, emf, branch, link],
        [
            ("di_d", "di_d", 1.0),
            ("di_q", "di_q", 1.0),
            ("dp_ac", "dp_ac", 1.0),
            ("dq_ac", "dq_ac", 1.0),
            ("d_delta", "d_delta", 1.0),
            ("de_mag", "de_mag", 1.0),
            ("dvlink", "dvlink", 1.0),
            ("de_d", "de_d", 1.0),
            ("de_q", "de_q", 1.0),
        ],
        CONVERTER_INPUTS,
        CONVERTER_OUTPUTS,
    )
    return ConverterModel(realization, op)


def build_gfl(params: GflParams, op: OperatingPoint) -> ConverterModel:
    """SRF-PLL + PI current control with power-reference division and DC droop."""
    wb = params.omega_b
    v0 = op.v_mag0
    c0 = math.cos(op.theta0)
    s0 = math.sin(op.theta0)
    # converter-frame steady currents (PLL d-axis on the terminal voltage)
    ic_d0 = c0 * op.i_d0 + s0 * op.i_q0
    ic_q0 = -s0 * op.i_d0 + c0 * op.i_q0
    e_d0 = op.v_d0 + params.r_f * op.i_d0 - params.l_f * op.i_q0
    e_q0 = op.v_q0 + params.r_f * op.i_q0 + params.l_f * op.i_d0
    e_p0 = op.p_ac0
    q0 = op.q_ac0

    pll = StateSpaceModel(
        np.array([[0.0, -v0], [wb * params.ki_pll, -wb * params.kp_pll * v0]]),
        np.array([[-s0, c0], [-wb * params.kp_pll * s0, wb * params.kp_pll * c0]]),
        np.array([[0.0, 1.0]]),
        np.zeros((1, 2)),
        ("dv_d", "dv_q"),
        ("dth_pll",),
        ("pll_i", "pll_th"),
    )

    p_row, q_row = _power_rows(op)
    # rows: dvc_d, dvc_q, dic_d, dic_q, dp_ac, dq_ac over
    # (dv_d, dv_q, di_d, di_q, dth)
    meas = static_gain(
        np.array([
            [c0, s0, 0.0, 0.0, 0.0],
            [-s0, c0, 0.0, 0.0, -v0],
            [0.0, 0.0, c0, s0, ic_q0],
            [0.0, 0.0, -s0, c0, -ic_d0],
            [p_row[0], p_row[1], p_row[2], p_row[3], 0.0],
            [q_row[0], q_row[1], q_row[2], q_row[3], 0.0],
        ]),
        ("dv_d", "dv_q", "di_d", "di_q", "dth"),
        ("dvc_d", "dvc_q", "dic_d", "dic_q", "dp_ac", "dq_ac"),
    )

    k = params.k_d_dc
    # de_p = k*(dvlink - dvdc_ref) + dp_ref - dp_ac, references held at zero
    refs = static_gain(
        np.array([
            [-e_p0 / v0**2, -1.0 / v0, k / v0, 1.0 / v0, 0.0, -k / v0],
            [q0 / v0**2, 0.0, 0.0, 0.0, -1.0 / v0, 0.0],
        ]),
        ("dvc_d", "dp_ac", "dvlink", "dp_ref", "dq_ref", "dvdc_ref"),
        ("dic_d_ref", "dic_q_ref"),
    )

    cc = StateSpaceModel(
        np.zeros((2, 2)),
        np.array([
            [1.0, 0.0, -1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, -1.0, 0.0, 0.0],
        ]),
        np.array([[params.ki_cc, 0.0], [0.0, params.ki_cc]]),
        np.array([
            [params.kp_cc, 0.0, -params.kp_cc, -params.l_f, 1.0, 0.0],
            [0.0, params.kp_cc, params.l_f, -params.kp_cc, 0.0, 1.0],
        ]),
        ("dic_d_ref", "dic_q_ref", "dic_d", "dic_q", "dvc_d", "dvc_q"),
        ("dec_d", "dec_q"),
        ("cc_gam_d", "cc_gam_q"),
    )

    # modulation rides on the link voltage, as in the GFM
    emf = static_gain(
        np.array([
            [c0, -s0, -e_q0, e_d0 / op.v_dc0],
            [s0, c0, e_d0, e_q0 / op.v_dc0],
        ]),
        ("dec_d", "dec_q", "dth", "dvlink"),
        ("de_d", "de_q"),
    )

    filt = _rl_branch_block(params.r_f, params.l_f, wb)
    link = _dc_link_block(params.c_dc, op)

    realization = interconnect(
        [pll, meas, refs, cc, emf, filt, link],
        [
            ("dth_pll", "dth", 1.0),
            ("di_d", "di_d", 1.0),
            ("di_q", "di_q", 1.0),
            ("dvc_d", "dvc_d", 1.0),
            ("dvc_q", "dvc_q", 1.0),
            ("dic_d", "dic_d", 1.0),
            ("dic_q", "dic_q", 1.0),
            ("dp_ac", "dp_ac", 1.0),
            ("dvlink", "dvlink", 1.0),
            ("dic_d_ref", "dic_d_ref", 1.0),
            ("dic_q_ref", "dic_q_ref", 1.0),
            ("dec_d", "dec_d", 1.0),
            ("dec_q", "dec_q", 1.0),
            ("de_d", "de_d", 1.0),
            ("de_q", "de_q", 1.0),
        ],
        CONVERTER_INPUTS,
        CONVERTER_OUTPUTS,
    )
    return ConverterModel(realization, op)
