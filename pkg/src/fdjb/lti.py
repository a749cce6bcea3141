"""Linear time-invariant building blocks.

State-space models with named signals, frequency response by per-point LU
solve of the resolvent, dense eigenvalue analysis, and exact label-based
interconnection.  Everything is per-unit; angular frequencies are rad/s
internally and Hz at file/CLI boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateSignalError,
    EigenNoConvergeError,
    IllPosedInterconnectionError,
    ResonantGridPointError,
    UnknownSignalError,
)

_COND_LIMIT = 1e12
_RESONANCE_TOL = 1e-12
_CONJ_CLOSURE_TOL = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _as_matrix(value, rows: int | None = None, cols: int | None = None, name: str = "matrix") -> np.ndarray:
    a = np.atleast_2d(np.asarray(value, dtype=float))
    if a.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {a.shape}")
    if rows is not None and a.shape[0] != rows:
        raise ValueError(f"{name} must have {rows} rows, got {a.shape[0]}")
    if cols is not None and a.shape[1] != cols:
        raise ValueError(f"{name} must have {cols} columns, got {a.shape[1]}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return _freeze(a.copy())


def _check_unique(labels: tuple[str, ...], what: str) -> None:
    if len(set(labels)) != len(labels):
        seen, dupes = set(), []
        for lab in labels:
            if lab in seen:
                dupes.append(lab)
            seen.add(lab)
        raise DuplicateSignalError(f"duplicate {what}: {sorted(set(dupes))}")


@dataclass(frozen=True)
class StateSpaceModel:
    """Real-matrix realization dx/dt = A x + B u, y = C x + D u with named signals."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    input_labels: tuple[str, ...]
    output_labels: tuple[str, ...]
    state_labels: tuple[str, ...] = ()

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        if A.size == 0:
            A = A.reshape(0, 0)
        A = np.atleast_2d(A)
        n = A.shape[0]
        if A.shape != (n, n):
            raise ValueError(f"A must be square, got {A.shape}")
        m = len(self.input_labels)
        p = len(self.output_labels)
        object.__setattr__(self, "A", _as_matrix(A, n, n, "A") if n else _freeze(A.copy()))
        object.__setattr__(self, "B", _as_matrix(np.asarray(self.B, dtype=float).reshape(n, m), n, m, "B"))
        object.__setattr__(self, "C", _as_matrix(np.asarray(self.C, dtype=float).reshape(p, n), p, n, "C"))
        object.__setattr__(self, "D", _as_matrix(np.asarray(self.D, dtype=float).reshape(p, m), p, m, "D"))
        object.__setattr__(self, "input_labels", tuple(self.input_labels))
        object.__setattr__(self, "output_labels", tuple(self.output_labels))
        states = tuple(self.state_labels) if self.state_labels else tuple(f"x{i}" for i in range(n))
        if len(states) != n:
            raise ValueError(f"expected {n} state labels, got {len(states)}")
        object.__setattr__(self, "state_labels", states)
        _check_unique(self.input_labels, "input labels")
        _check_unique(self.output_labels, "output labels")
        _check_unique(states, "state labels")

    @property
    def n_states(self) -> int:
        return self.A.shape[0]

    @property
    def n_inputs(self) -> int:
        return len(self.input_labels)

    @property
    def n_outputs(self) -> int:
        return len(self.output_labels)

    def prefixed(self, prefix: str) -> "StateSpaceModel":
        """Copy with every signal and state label prefixed (namespacing for assembly)."""
        return StateSpaceModel(
            self.A, self.B, self.C, self.D,
            tuple(prefix + s for s in self.input_labels),
            tuple(prefix + s for s in self.output_labels),
            tuple(prefix + s for s in self.state_labels),
        )

    def relabeled(self, inputs: tuple[str, ...] | None = None,
                  outputs: tuple[str, ...] | None = None) -> "StateSpaceModel":
        return StateSpaceModel(
            self.A, self.B, self.C, self.D,
            tuple(inputs) if inputs is not None else self.input_labels,
            tuple(outputs) if outputs is not None else self.output_labels,
            self.state_labels,
        )


def static_gain(D, input_labels, output_labels) -> StateSpaceModel:
    """Stateless block y = D u."""
    p = len(output_labels)
    m = len(input_labels)
    return StateSpaceModel(
        np.zeros((0, 0)), np.zeros((0, m)), np.zeros((p, 0)),
        np.asarray(D, dtype=float).reshape(p, m),
        tuple(input_labels), tuple(output_labels),
    )


@dataclass(frozen=True)
class FrequencyGrid:
    """Strictly increasing positive angular frequencies (rad/s)."""

    omegas: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.omegas, dtype=float).ravel()
        if w.size == 0:
            raise ValueError("frequency grid is empty")
        if not np.all(w > 0.0):
            raise ValueError("frequency grid entries must be > 0")
        if not np.all(np.diff(w) > 0.0):
            raise ValueError("frequency grid must be strictly increasing")
        object.__setattr__(self, "omegas", _freeze(w.copy()))

    def __len__(self) -> int:
        return self.omegas.size

    @property
    def hz(self) -> np.ndarray:
        return self.omegas / (2.0 * np.pi)

    @classmethod
    def log_hz(cls, f_lo_hz: float, f_hi_hz: float, n_points: int) -> "FrequencyGrid":
        f = np.logspace(np.log10(f_lo_hz), np.log10(f_hi_hz), n_points)
        return cls(2.0 * np.pi * f)


DEFAULT_F_MIN_HZ = 0.01
DEFAULT_F_MAX_HZ = 1000.0
DEFAULT_N_POINTS = 400


def default_grid() -> FrequencyGrid:
    """400 log-spaced points over 0.01 Hz - 1 kHz."""
    return FrequencyGrid.log_hz(DEFAULT_F_MIN_HZ, DEFAULT_F_MAX_HZ, DEFAULT_N_POINTS)


@dataclass(frozen=True)
class FrequencyResponse:
    """Per grid point a p x m complex matrix, with the model's signal names."""

    grid: FrequencyGrid
    samples: np.ndarray
    input_labels: tuple[str, ...]
    output_labels: tuple[str, ...]

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        if s.ndim != 3:
            raise ValueError(f"samples must be (n_freq, p, m), got shape {s.shape}")
        if s.shape[0] != len(self.grid):
            raise ValueError("sample count must equal grid length")
        if s.shape[1] != len(self.output_labels) or s.shape[2] != len(self.input_labels):
            raise ValueError("sample dimensions must match the label counts")
        object.__setattr__(self, "samples", _freeze(s.copy()))
        object.__setattr__(self, "input_labels", tuple(self.input_labels))
        object.__setattr__(self, "output_labels", tuple(self.output_labels))

    def entry(self, output: str, inp: str) -> np.ndarray:
        i = self.output_labels.index(output)
        j = self.input_labels.index(inp)
        return self.samples[:, i, j]


@dataclass(frozen=True)
class EigenSet:
    """Eigenvalues of a real matrix; closed under conjugation."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).ravel()
        order = np.lexsort((-v.imag, -v.real))
        v = v[order]
        conj_sorted = np.conj(v)[np.lexsort((-np.conj(v).imag, -np.conj(v).real))]
        scale = max(1.0, float(np.max(np.abs(v))) if v.size else 1.0)
        if v.size and np.max(np.abs(v - conj_sorted)) > _CONJ_CLOSURE_TOL * scale:
            raise ValueError("eigenvalue set is not closed under conjugation")
        object.__setattr__(self, "values", _freeze(v.copy()))

    @property
    def max_real(self) -> float:
        if self.values.size == 0:
            return float("-inf")
        return float(np.max(self.values.real))


def eigenvalues(m) -> EigenSet:
    """Dense spectrum of a square real matrix (balanced implicitly-shifted QR)."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    if a.shape[0] == 0:
        return EigenSet(np.zeros(0, dtype=complex))
    try:
        vals = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise EigenNoConvergeError(str(exc)) from exc
    return EigenSet(vals)


def freq_response(model: StateSpaceModel, grid: FrequencyGrid) -> FrequencyResponse:
    """Evaluate C (jwI - A)^-1 B + D on the grid via complex LU per point."""
    n, m, p = model.n_states, model.n_inputs, model.n_outputs
    omegas = grid.omegas
    if n == 0:
        samples = np.broadcast_to(model.D.astype(complex), (omegas.size, p, m)).copy()
        return FrequencyResponse(grid, samples, model.input_labels, model.output_labels)

    eigs = np.linalg.eigvals(model.A)
    dist = np.abs(eigs[None, :] - 1j * omegas[:, None]).min(axis=1)
    bad = np.nonzero(dist < _RESONANCE_TOL)[0]
    if bad.size:
        raise ResonantGridPointError(float(omegas[bad[0]]))

    lhs = (1j * omegas)[:, None, None] * np.eye(n) - model.A.astype(complex)
    rhs = np.broadcast_to(model.B.astype(complex), (omegas.size, n, m))
    try:
        x = np.linalg.solve(lhs, rhs)
    except np.linalg.LinAlgError as exc:
        raise ResonantGridPointError(float("nan")) from exc
    samples = model.C.astype(complex) @ x + model.D.astype(complex)
    return FrequencyResponse(grid, samples, model.input_labels, model.output_labels)


def dc_gain(model: StateSpaceModel) -> np.ndarray:
    """-C A^-1 B + D (requires A nonsingular)."""
    if model.n_states == 0:
        return model.D.copy()
    return model.D - model.C @ np.linalg.solve(model.A, model.B)


def interconnect(
    subsystems,
    connections,
    external_inputs,
    external_outputs,
) -> StateSpaceModel:
    """Close a set of labelled blocks into one model, eliminating internal signals exactly.

    Signal semantics: every output label names a unique signal.  A connection
    ``(output_label, input_label, gain)`` adds ``gain * signal`` into every
    subsystem input carrying ``input_label`` (shared input labels fan out).
    External inputs are injected by name match; inputs left unwired are zero.
    The static loop is solved through (I - D K)^-1, so algebraic loops are
    exact as long as the loop is well posed (condition number <= 1e12).
    """
    subsystems = list(subsystems)
    if not subsystems:
        raise ValueError("interconnect requires at least one subsystem")

    out_labels: list[str] = []
    in_labels: list[str] = []
    state_labels: list[str] = []
    for sub in subsystems:
        out_labels.extend(sub.output_labels)
        in_labels.extend(sub.input_labels)
        state_labels.extend(sub.state_labels)
    _check_unique(tuple(out_labels), "output labels across subsystems")
    _check_unique(tuple(state_labels), "state labels across subsystems")

    out_index = {lab: i for i, lab in enumerate(out_labels)}
    in_slots: dict[str, list[int]] = {}
    for j, lab in enumerate(in_labels):
        in_slots.setdefault(lab, []).append(j)

    n = sum(s.n_states for s in subsystems)
    m_tot = len(in_labels)
    p_tot = len(out_labels)

    A = np.zeros((n, n))
    B = np.zeros((n, m_tot))
    C = np.zeros((p_tot, n))
    D = np.zeros((p_tot, m_tot))
    r = c_in = c_out = 0
    for sub in subsystems:
        ns, ms, ps = sub.n_states, sub.n_inputs, sub.n_outputs
        A[r:r + ns, r:r + ns] = sub.A
        B[r:r + ns, c_in:c_in + ms] = sub.B
        C[c_out:c_out + ps, r:r + ns] = sub.C
        D[c_out:c_out + ps, c_in:c_in + ms] = sub.D
        r += ns
        c_in += ms
        c_out += ps

    K = np.zeros((m_tot, p_tot))
    for conn in connections:
        out_lab, in_lab, gain = conn
        if out_lab not in out_index:
            raise UnknownSignalError(f"connection references unknown output {out_lab!r}")
        if in_lab not in in_slots:
            raise UnknownSignalError(f"connection references unknown input {in_lab!r}")
        for j in in_slots[in_lab]:
            K[j, out_index[out_lab]] += float(gain)

    external_inputs = tuple(external_inputs)
    external_outputs = tuple(external_outputs)
    _check_unique(external_inputs, "external input labels")
    E = np.zeros((m_tot, len(external_inputs)))
    for k, lab in enumerate(external_inputs):
        for j in in_slots.get(lab, ()):
            E[j, k] = 1.0

    for lab in external_outputs:
        if lab not in out_index:
            raise UnknownSignalError(f"external output {lab!r} is not produced by any subsystem")
    sel = np.array([out_index[lab] for lab in external_outputs], dtype=int)

    M = np.eye(p_tot) - D @ K
    if p_tot:
        cond = np.linalg.cond(M)
        if not np.isfinite(cond) or cond > _COND_LIMIT:
            raise IllPosedInterconnectionError(
                f"static loop I - D K has condition number {cond:.3e}")
    Minv_C = np.linalg.solve(M, C) if p_tot else C
    Minv_DE = np.linalg.solve(M, D @ E) if p_tot else D @ E

    A_cl = A + B @ (K @ Minv_C)
    B_cl = B @ (K @ Minv_DE + E)
    C_cl = Minv_C[sel, :] if sel.size else np.zeros((0, n))
    D_cl = Minv_DE[sel, :] if sel.size else np.zeros((0, len(external_inputs)))

    return StateSpaceModel(
        A_cl, B_cl, C_cl, D_cl,
        external_inputs, external_outputs, tuple(state_labels),
    )
