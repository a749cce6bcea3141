"""Benchmark test system assembly and stability verdicts.

The system places each device's AC and DC terminal on a bus.  Each side has
a Thevenin source behind ``z_s`` (breaker ``cb_s``) and a grid / subsystem
path behind ``z_g`` (breaker ``cb_g``).  A bus resolves its voltage one of
three ways, in priority order:

* direct tie - a zero-impedance closed path to a source pins the voltage;
* static definer - a resistive (X = 0) branch expresses the bus voltage
  algebraically from its far end and the other attached currents;
* damped RC shunt - a bus fed only through dynamic branches carries a small
  snubbered shunt that turns net injected current into the bus voltage (two
  series inductors with nothing between them is a degenerate circuit).

Verdicts come from the closed-system spectrum; the generalized Nyquist
criterion is available as a cross-check on open-loop-stable partitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .converters import ConverterModel, OMEGA_BASE
from .errors import (
    GridMismatchError,
    IllPosedInterconnectionError,
    OpenCircuitTerminalError,
)
from .jacobian import polar_transform
from .lti import (
    FrequencyResponse,
    StateSpaceModel,
    eigenvalues,
    interconnect,
    static_gain,
)

SOURCE_CHANNELS = ("dVs_ac_mag", "dVs_ac_th", "dVs_dc")
DEVICE_OUTPUT_SUFFIXES = ("dP_ac", "dQ_ac", "dP_dc", "dv_dc", "dv_d", "dv_q")
BRANCH_SLOTS = ("z_s_ac", "z_s_dc", "z_g_ac", "z_g_dc")
BREAKER_NAMES = ("cb_s_ac", "cb_g_ac", "cb_s_dc", "cb_g_dc")

MARGINAL_BAND = 1e-3
CRITICAL_PROXIMITY = 1e-6

# Bus regularization shunt: susceptance at omega_b behind a damping
# resistance.  |Z| >= 100 p.u. below 50 Hz, so it is invisible in the bands
# the studies read, and it keeps the branch-L/shunt-C resonance damped.
BUS_SHUNT_B = 0.01
BUS_SHUNT_R = 1.0

_OP_BUS_TOL = 1e-6


@dataclass(frozen=True)
class ImpedanceBranch:
    """Series R + jX branch; X is the reactance at omega_b (L = X / omega_b)."""

    r: float
    x: float
    side: str

    def __post_init__(self):
        if self.side not in ("ac", "dc"):
            raise ValueError("branch side must be 'ac' or 'dc'")
        if self.r < 0.0 or self.x < 0.0:
            raise ValueError("branch R and X must be >= 0")
        if self.r + self.x <= 0.0:
            raise ValueError("a declared branch needs R + X > 0")

    @property
    def is_static(self) -> bool:
        return self.x == 0.0


@dataclass(frozen=True)
class BreakerState:
    """Closed/open state of the four breakers (True = closed)."""

    cb_s_ac: bool = True
    cb_g_ac: bool = False
    cb_s_dc: bool = True
    cb_g_dc: bool = False

    def closed(self, name: str) -> bool:
        if name not in BREAKER_NAMES:
            raise ValueError(f"unknown breaker {name!r}")
        return bool(getattr(self, name))


@dataclass(frozen=True)
class DeviceSlot:
    """A converter instance and the buses its two terminals attach to."""

    name: str
    model: ConverterModel
    ac_bus: str = "main"
    dc_bus: str = "main"

    def __post_init__(self):
        for attr in ("ac_bus", "dc_bus"):
            if getattr(self, attr) not in ("main", "aux", "ideal"):
                raise ValueError(f"{attr} must be main|aux|ideal")
        if not self.name or "." in self.name:
            raise ValueError("device name must be non-empty and contain no '.'")


@dataclass(frozen=True)
class TestbenchConfig:
    """One study-mode instance of the benchmark system."""

    devices: tuple[DeviceSlot, ...]
    breakers: BreakerState = BreakerState()
    z_s_ac: ImpedanceBranch | None = None
    z_s_dc: ImpedanceBranch | None = None
    z_g_ac: ImpedanceBranch | None = None
    z_g_dc: ImpedanceBranch | None = None
    source_channels: tuple[str, ...] = SOURCE_CHANNELS
    omega_b: float = OMEGA_BASE

    def __post_init__(self):
        devices = tuple(self.devices)
        if not devices:
            raise ValueError("device list must be non-empty")
        names = [d.name for d in devices]
        if len(set(names)) != len(names):
            raise ValueError("device names must be unique")
        object.__setattr__(self, "devices", devices)
        object.__setattr__(self, "source_channels", tuple(self.source_channels))
        for ch in self.source_channels:
            if ch not in SOURCE_CHANNELS:
                raise ValueError(f"unknown source channel {ch!r}")
        for slot in BRANCH_SLOTS:
            branch = getattr(self, slot)
            want = slot[-2:]
            if branch is not None and branch.side != want:
                raise ValueError(f"{slot} must be an {want.upper()} branch")
        self._check_bus_ops()

    def _check_bus_ops(self):
        for side in ("ac", "dc"):
            for bus in ("main", "aux"):
                ops = [d.model.op for d in self.devices if getattr(d, f"{side}_bus") == bus]
                for op in ops[1:]:
                    if side == "ac":
                        gap = math.hypot(op.v_d0 - ops[0].v_d0, op.v_q0 - ops[0].v_q0)
                    else:
                        gap = abs(op.v_dc0 - ops[0].v_dc0)
                    if gap > _OP_BUS_TOL:
                        raise ValueError(
                            f"devices on {side} bus {bus!r} disagree on the bus voltage by {gap:.2e}")

    def replace_branch(self, slot: str, branch: ImpedanceBranch | None) -> "TestbenchConfig":
        if slot not in BRANCH_SLOTS:
            raise ValueError(f"unknown branch slot {slot!r}")
        kwargs = self._kwargs()
        kwargs[slot] = branch
        return TestbenchConfig(**kwargs)

    def replace_breaker(self, name: str, closed: bool) -> "TestbenchConfig":
        if name not in BREAKER_NAMES:
            raise ValueError(f"unknown breaker {name!r}")
        state = {n: self.breakers.closed(n) for n in BREAKER_NAMES}
        state[name] = closed
        kwargs = self._kwargs()
        kwargs["breakers"] = BreakerState(**state)
        return TestbenchConfig(**kwargs)

    def _kwargs(self) -> dict:
        return dict(
            devices=self.devices, breakers=self.breakers,
            z_s_ac=self.z_s_ac, z_s_dc=self.z_s_dc,
            z_g_ac=self.z_g_ac, z_g_dc=self.z_g_dc,
            source_channels=self.source_channels, omega_b=self.omega_b,
        )


@dataclass(frozen=True)
class NetworkModel:
    """Closed small-signal model of one assembled testbench configuration."""

    realization: StateSpaceModel
    device_names: tuple[str, ...]

    def output(self, device: str, suffix: str) -> str:
        return f"{device}.{suffix}"


@dataclass(frozen=True)
class StabilityVerdict:
    method: str
    stable: str
    margin: float
    dominant: tuple[complex, ...] = ()
    encirclements: int | None = None

    def __post_init__(self):
        if self.method not in ("eigen", "nyquist"):
            raise ValueError("method must be eigen|nyquist")
        if self.stable not in ("yes", "no", "marginal"):
            raise ValueError("stable must be yes|no|marginal")


class _BranchRec:
    """One physical branch instance during assembly."""

    def __init__(self, slot: str, branch: ImpedanceBranch, from_sigs, to_bus):
        self.slot = slot
        self.branch = branch
        self.from_sigs = from_sigs      # far-end signals, None = unperturbed source
        self.to_bus = to_bus            # _Bus the current flows into (+), from-bus below
        self.from_bus = None            # set for bus-to-bus branches
        self.consumed = False           # used as a definer


class _Bus:
    """Assembly bookkeeping for one bus."""

    def __init__(self, name: str, side: str):
        self.name = name
        self.side = side
        self.axes = 2 if side == "ac" else 1
        self.current_in: list[tuple[str, float, int]] = []   # (signal, gain, axis)
        self.direct: tuple[str, ...] | None = None
        self.direct_zero = False
        self.alias_of: "_Bus | None" = None
        self.branches: list[_BranchRec] = []
        self.voltage: tuple[str, ...] | None = None
        self.sum_inputs: tuple[str, ...] | None = None

    def root(self) -> "_Bus":
        bus = self
        while bus.alias_of is not None:
            bus = bus.alias_of
        return bus

    def add_current(self, signals, gain: float) -> None:
        for axis, sig in enumerate(signals):
            self.current_in.append((sig, gain, axis))


def _branch_block(slot: str, branch: ImpedanceBranch, omega_b: float) -> StateSpaceModel:
    """Current-form branch: inputs are the end voltages, output the from->to current."""
    if branch.side == "ac":
        labels_in = (f"{slot}.vf_d", f"{slot}.vf_q", f"{slot}.vt_d", f"{slot}.vt_q")
        labels_out = (f"{slot}.ib_d", f"{slot}.ib_q")
        if branch.is_static:
            g = 1.0 / branch.r
            d = np.array([[g, 0.0, -g, 0.0], [0.0, g, 0.0, -g]])
            return static_gain(d, labels_in, labels_out)
        k = omega_b / branch.x
        a = k * np.array([[-branch.r, branch.x], [-branch.x, -branch.r]])
        b = k * np.array([[1.0, 0.0, -1.0, 0.0], [0.0, 1.0, 0.0, -1.0]])
        return StateSpaceModel(a, b, np.eye(2), np.zeros((2, 4)),
                               labels_in, labels_out, (f"{slot}.i_d", f"{slot}.i_q"))
    labels_in = (f"{slot}.vf", f"{slot}.vt")
    labels_out = (f"{slot}.ib",)
    if branch.is_static:
        g = 1.0 / branch.r
        return static_gain(np.array([[g, -g]]), labels_in, labels_out)
    k = omega_b / branch.x
    return StateSpaceModel(
        np.array([[-k * branch.r]]), np.array([[k, -k]]),
        np.eye(1), np.zeros((1, 2)),
        labels_in, labels_out, (f"{slot}.i",),
    )


def _definer_block(bus_name: str, branch: ImpedanceBranch) -> StateSpaceModel:
    """Static branch solved for the bus voltage: v_bus = v_far + R * (other currents in)."""
    r = branch.r
    if branch.side == "ac":
        d = np.array([[1.0, 0.0, r, 0.0], [0.0, 1.0, 0.0, r]])
        return static_gain(
            d,
            (f"{bus_name}.vf_d", f"{bus_name}.vf_q", f"{bus_name}.iin_d", f"{bus_name}.iin_q"),
            (f"{bus_name}.v_d", f"{bus_name}.v_q"),
        )
    return static_gain(
        np.array([[1.0, r]]),
        (f"{bus_name}.vf", f"{bus_name}.iin"),
        (f"{bus_name}.v",),
    )


def _shunt_block(bus_name: str, side: str, omega_b: float) -> StateSpaceModel:
    """Damped RC shunt converting net injected current into the bus voltage."""
    b_c = BUS_SHUNT_B
    r_c = BUS_SHUNT_R
    if side == "ac":
        a = np.array([[0.0, omega_b], [-omega_b, 0.0]])
        b = (omega_b / b_c) * np.eye(2)
        return StateSpaceModel(
            a, b, np.eye(2), r_c * np.eye(2),
            (f"{bus_name}.inet_d", f"{bus_name}.inet_q"),
            (f"{bus_name}.v_d", f"{bus_name}.v_q"),
            (f"{bus_name}.vc_d", f"{bus_name}.vc_q"),
        )
    return StateSpaceModel(
        np.array([[0.0]]), np.array([[omega_b / b_c]]),
        np.eye(1), np.array([[r_c]]),
        (f"{bus_name}.inet",), (f"{bus_name}.v",), (f"{bus_name}.vc",),
    )


def shunt_steady_state(side: str, v_bus) -> np.ndarray:
    """Shunt capacitor voltage consistent with a held bus voltage."""
    if side == "dc":
        return np.atleast_1d(np.asarray(v_bus, dtype=float))
    r = BUS_SHUNT_R * BUS_SHUNT_B
    m = np.array([[1.0, -r], [r, 1.0]])
    return np.linalg.solve(m, np.asarray(v_bus, dtype=float))


def branch_steady_current(branch: ImpedanceBranch, v_from, v_to) -> np.ndarray:
    """Steady from->to branch current for held end voltages (new-state init)."""
    if branch.side == "dc":
        dv = float(np.atleast_1d(v_from)[0] - np.atleast_1d(v_to)[0])
        return np.array([dv / branch.r]) if branch.r > 0.0 else np.array([0.0])
    vf = np.asarray(v_from, dtype=float)
    vt = np.asarray(v_to, dtype=float)
    z = complex(branch.r, branch.x)
    i = ((vf[0] - vt[0]) + 1j * (vf[1] - vt[1])) / z
    return np.array([i.real, i.imag])


def _anchor_op(config: TestbenchConfig):
    for dev in config.devices:
        if dev.ac_bus == "main":
            return dev.model.op
    return config.devices[0].model.op


def _check_paths(config: TestbenchConfig) -> None:
    br = config.breakers
    for side in ("ac", "dc"):
        on_main = any(getattr(d, f"{side}_bus") == "main" for d in config.devices)
        on_aux = any(getattr(d, f"{side}_bus") == "aux" for d in config.devices)
        cb_s = br.closed(f"cb_s_{side}")
        cb_g = br.closed(f"cb_g_{side}")
        if on_aux and not cb_g:
            raise OpenCircuitTerminalError(
                f"{side.upper()} aux bus hosts devices but cb_g_{side} is open")
        if on_main or on_aux:
            main_sourced = cb_s or (cb_g and not on_aux)
            if not main_sourced:
                raise OpenCircuitTerminalError(
                    f"{side.upper()} main bus has no closed path to a source")


def assemble(config: TestbenchConfig) -> NetworkModel:
    """Build the closed Kirchhoff-consistent network model for one configuration."""
    _check_paths(config)
    wb = config.omega_b
    br = config.breakers
    anchor = _anchor_op(config)

    blocks: list[StateSpaceModel] = []
    conns: list[tuple[str, str, float]] = []

    sel = {ch: (1.0 if ch in config.source_channels else 0.0) for ch in SOURCE_CHANNELS}
    blocks.append(static_gain(
        polar_transform(anchor) @ np.diag([sel["dVs_ac_mag"], sel["dVs_ac_th"]]),
        ("dVs_ac_mag", "dVs_ac_th"), ("vs_ac_d", "vs_ac_q")))
    blocks.append(static_gain(np.array([[sel["dVs_dc"]]]), ("dVs_dc",), ("vs_dc",)))

    buses: dict[tuple[str, str], _Bus] = {}

    def bus_for(side: str, name: str) -> _Bus:
        key = (side, name)
        if key not in buses:
            buses[key] = _Bus(f"bus_{side}_{name}", side)
        return buses[key]

    def source_signals(side: str) -> tuple[str, ...]:
        return ("vs_ac_d", "vs_ac_q") if side == "ac" else ("vs_dc",)

    for side in ("ac", "dc"):
        if not any(getattr(d, f"{side}_bus") in ("main", "aux") for d in config.devices):
            continue
        on_aux = any(getattr(d, f"{side}_bus") == "aux" for d in config.devices)
        main = bus_for(side, "main")
        z_s = getattr(config, f"z_s_{side}")
        z_g = getattr(config, f"z_g_{side}")

        if br.closed(f"cb_s_{side}"):
            if z_s is None:
                main.direct = source_signals(side)
            else:
                main.branches.append(_BranchRec(f"z_s_{side}", z_s, source_signals(side), main))

        if br.closed(f"cb_g_{side}"):
            if on_aux:
                aux = bus_for(side, "aux")
                if z_g is None:
                    aux.alias_of = main
                else:
                    if z_g.is_static:
                        raise IllPosedInterconnectionError(
                            "static z_g between two device buses is not supported; "
                            "give z_g a nonzero reactance")
                    rec = _BranchRec(f"z_g_{side}", z_g, None, aux)
                    rec.from_bus = main
                    main.branches.append(rec)
                    aux.branches.append(rec)
            else:
                if z_g is None:
                    if main.direct is not None:
                        raise IllPosedInterconnectionError(
                            f"two zero-impedance sources tied to the {side} main bus")
                    main.direct_zero = True
                else:
                    rec = _BranchRec(f"z_g_{side}", z_g, None, None)
                    rec.from_bus = main
                    main.branches.append(rec)

    for dev in config.devices:
        blocks.append(dev.model.realization.prefixed(f"{dev.name}."))
        for side, out_labels in (("ac", (f"{dev.name}.di_d", f"{dev.name}.di_q")),
                                 ("dc", (f"{dev.name}.di_dc",))):
            bus_name = getattr(dev, f"{side}_bus")
            if bus_name == "ideal":
                continue
            bus_for(side, bus_name).root().add_current(out_labels, +1.0)

    ordered_buses = [buses[k] for k in sorted(buses)]

    # resolve bus voltages: direct tie > static definer > shunt
    for bus in ordered_buses:
        if bus.alias_of is not None:
            continue
        if bus.direct is not None:
            bus.voltage = bus.direct
            continue
        if bus.direct_zero:
            bus.voltage = None
            continue
        statics = [rec for rec in bus.branches
                   if rec.branch.is_static and rec.from_bus is None and rec.to_bus is bus]
        if statics:
            rec = statics[0]
            rec.consumed = True
            blocks.append(_definer_block(bus.name, rec.branch))
            if bus.side == "ac":
                bus.voltage = (f"{bus.name}.v_d", f"{bus.name}.v_q")
                bus.sum_inputs = (f"{bus.name}.iin_d", f"{bus.name}.iin_q")
                far_in = (f"{bus.name}.vf_d", f"{bus.name}.vf_q")
            else:
                bus.voltage = (f"{bus.name}.v",)
                bus.sum_inputs = (f"{bus.name}.iin",)
                far_in = (f"{bus.name}.vf",)
            if rec.from_sigs is not None:
                for sig, inp in zip(rec.from_sigs, far_in):
                    conns.append((sig, inp, 1.0))
            continue
        if bus.branches or bus.current_in:
            blocks.append(_shunt_block(bus.name, bus.side, wb))
            if bus.side == "ac":
                bus.voltage = (f"{bus.name}.v_d", f"{bus.name}.v_q")
                bus.sum_inputs = (f"{bus.name}.inet_d", f"{bus.name}.inet_q")
            else:
                bus.voltage = (f"{bus.name}.v",)
                bus.sum_inputs = (f"{bus.name}.inet",)
            continue
        raise OpenCircuitTerminalError(f"{bus.name} has no attachments")

    def bus_voltage(side: str, name: str) -> tuple[str, ...] | None:
        return bus_for(side, name).root().voltage

    # instantiate remaining branches in current form and attach their currents
    seen: set[str] = set()
    for bus in ordered_buses:
        for rec in bus.branches:
            if rec.consumed or rec.slot in seen:
                continue
            seen.add(rec.slot)
            side = rec.branch.side
            blocks.append(_branch_block(rec.slot, rec.branch, wb))
            if side == "ac":
                names_f = (f"{rec.slot}.vf_d", f"{rec.slot}.vf_q")
                names_t = (f"{rec.slot}.vt_d", f"{rec.slot}.vt_q")
                outs = (f"{rec.slot}.ib_d", f"{rec.slot}.ib_q")
            else:
                names_f = (f"{rec.slot}.vf",)
                names_t = (f"{rec.slot}.vt",)
                outs = (f"{rec.slot}.ib",)
            from_sigs = rec.from_sigs if rec.from_bus is None else rec.from_bus.root().voltage
            to_sigs = rec.to_bus.root().voltage if rec.to_bus is not None else None
            if from_sigs is not None:
                for sig, inp in zip(from_sigs, names_f):
                    conns.append((sig, inp, 1.0))
            if to_sigs is not None:
                for sig, inp in zip(to_sigs, names_t):
                    conns.append((sig, inp, 1.0))
            if rec.to_bus is not None:
                rec.to_bus.root().add_current(outs, +1.0)
            if rec.from_bus is not None:
                rec.from_bus.root().add_current(outs, -1.0)

    for bus in ordered_buses:
        if bus.sum_inputs is None:
            continue
        for sig, gain, axis in bus.current_in:
            conns.append((sig, bus.sum_inputs[axis], gain))

    # device terminal voltages and per-device power/voltage outputs
    ext_outputs: list[str] = []
    for dev in config.devices:
        op = dev.model.op
        pm_in = tuple(f"{dev.name}.pm_{s}" for s in ("vd", "vq", "id", "iq", "idc", "vdc"))
        pm_out = tuple(f"{dev.name}.{s}" for s in DEVICE_OUTPUT_SUFFIXES)
        d = np.array([
            [op.i_d0, op.i_q0, op.v_d0, op.v_q0, 0.0, 0.0],
            [-op.i_q0, op.i_d0, op.v_q0, -op.v_d0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, op.v_dc0, op.i_dc0],
            [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        ])
        blocks.append(static_gain(d, pm_in, pm_out))
        ext_outputs.extend(pm_out)

        if dev.ac_bus != "ideal":
            v = bus_voltage("ac", dev.ac_bus)
            if v is not None:
                conns += [
                    (v[0], f"{dev.name}.dv_d", 1.0), (v[1], f"{dev.name}.dv_q", 1.0),
                    (v[0], pm_in[0], 1.0), (v[1], pm_in[1], 1.0),
                ]
        if dev.dc_bus != "ideal":
            v = bus_voltage("dc", dev.dc_bus)
            if v is not None:
                conns += [(v[0], f"{dev.name}.dv_dc", 1.0), (v[0], pm_in[5], 1.0)]
        conns += [
            (f"{dev.name}.di_d", pm_in[2], 1.0),
            (f"{dev.name}.di_q", pm_in[3], 1.0),
            (f"{dev.name}.di_dc", pm_in[4], 1.0),
        ]

    realization = interconnect(blocks, conns, SOURCE_CHANNELS, tuple(ext_outputs))
    return NetworkModel(realization, tuple(d.name for d in config.devices))


def eig_stability(nm: NetworkModel) -> StabilityVerdict:
    """Spectral verdict of the closed system."""
    vals = eigenvalues(nm.realization.A).values
    if vals.size == 0:
        return StabilityVerdict("eigen", "yes", float("-inf"))
    margin = float(np.max(vals.real))
    order = np.argsort(-vals.real)
    dominant = tuple(complex(v) for v in vals[order][:6])
    if abs(margin) <= MARGINAL_BAND:
        flag = "marginal"
    else:
        flag = "yes" if margin < 0.0 else "no"
    return StabilityVerdict("eigen", flag, margin, dominant)


def nyquist_stability(y_resp: FrequencyResponse, z_resp: FrequencyResponse) -> StabilityVerdict:
    """Generalized Nyquist verdict for the minor loop L = Y Z.

    Both responses must share the grid and be square of matching size; both
    subsystems must be open-loop stable (caller-asserted).  Encirclements of
    -1 are counted by accumulating the argument of det(I + L) along the
    closed contour (forward grid, conjugate reflection, straight closures),
    which equals the summed winding of the eigenloci around -1.
    """
    if len(y_resp.grid) != len(z_resp.grid) or not np.array_equal(
            y_resp.grid.omegas, z_resp.grid.omegas):
        raise GridMismatchError("responses sampled on different grids")
    p = y_resp.samples.shape[1]
    if (y_resp.samples.shape[1] != y_resp.samples.shape[2]
            or z_resp.samples.shape[1] != z_resp.samples.shape[2]
            or z_resp.samples.shape[1] != p):
        raise GridMismatchError("responses must be square and dimension-matched")

    loop = y_resp.samples @ z_resp.samples
    det_fw = np.linalg.det(np.eye(p) + loop)
    proximity = float(min(
        np.min(np.abs(np.linalg.eigvals(loop[k]) + 1.0)) for k in range(loop.shape[0])
    ))

    path = np.concatenate([np.conj(det_fw[::-1]), det_fw])
    path = np.append(path, path[0])
    winding = float(np.sum(np.angle(path[1:] / path[:-1]))) / (2.0 * math.pi)
    encirclements = int(round(-winding))

    if proximity < CRITICAL_PROXIMITY or abs(-winding - encirclements) > 0.1:
        flag = "marginal"
    elif encirclements == 0:
        flag = "yes"
    else:
        flag = "no"
    return StabilityVerdict("nyquist", flag, float("nan"), (), encirclements)


def make_config(
    devices,
    *,
    z_s_ac: ImpedanceBranch | None = None,
    z_s_dc: ImpedanceBranch | None = None,
    z_g_ac: ImpedanceBranch | None = None,
    z_g_dc: ImpedanceBranch | None = None,
    cb_s_ac: bool = True,
    cb_g_ac: bool = False,
    cb_s_dc: bool = True,
    cb_g_dc: bool = False,
    source_channels: tuple[str, ...] = SOURCE_CHANNELS,
    omega_b: float = OMEGA_BASE,
) -> TestbenchConfig:
    """Convenience constructor covering the benchmark study modes."""
    return TestbenchConfig(
        devices=tuple(devices),
        breakers=BreakerState(cb_s_ac, cb_g_ac, cb_s_dc, cb_g_dc),
        z_s_ac=z_s_ac, z_s_dc=z_s_dc, z_g_ac=z_g_ac, z_g_dc=z_g_dc,
        source_channels=source_channels, omega_b=omega_b,
    )
