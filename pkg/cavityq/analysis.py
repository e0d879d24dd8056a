# analysis: logical operator extraction, gate fidelity and feasibility
#
# Copyright 2022-2023
#   National Institute of Advanced Industrial Science and Technology (AIST), Japan and
#   Hitachi, Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import dataclasses
import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pathos.multiprocessing import ProcessingPool

from .common import PROCESS_NAME, LOGICAL_INPUTS, LOGICAL_LABELS, MODE, PreconditionError
from .hilbert import DEFAULT_N_MAX, SectorBasis, StateVector, encode_logical, logical_sector
from .jch import PhysicalParams, rwa_ok
from .propagate import Segment, Trajectory, evolve, expectation, segment_unitary
from .schedule import GateTimings, JitterModel, apply_jitter, build_cocsign_schedule

logger = logging.getLogger(PROCESS_NAME).getChild('analysis')

LOGICAL_DIMENSION = 4

SUB_UNITARY_TOLERANCE = 1e-12
'''Allowed excess of a logical column norm over 1.
'''

QUARTER_TOLERANCE = 1e-6
'''A phase within this distance of a multiple of pi/2 is reported in quarters.
'''

WINDOW_UPPER_RATIO = 100
'''delta_tau << tau1 is read as delta_tau <= tau1 / WINDOW_UPPER_RATIO.
'''

WINDOW_LOWER_SLACK = 1e-12
'''Relative slack of the lower window bound against rounding of 1 / delta_omega.
'''


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    INVALID_SHAPE = 'A logical operator must be {0}x{0}: {1}'
    NOT_SUB_UNITARY = 'Column norm {:.15g} of the logical operator exceeds 1'
    NON_POSITIVE_INPUT = 'Input {} must be positive: {}'
    TOO_FEW_POINTS = 'At least two positive points are needed for a slope: {}'
    UNKNOWN_TARGET = 'Unknown target gate: {}'
    GATE_SUMMARY = 'fidelity={:.9f} leakage={:.3e} residual={:.6g}'
    SWEEP_START = 'sweep start. points={} workers={}'


@dataclass(frozen=True, eq=False)
class LogicalOperator:
    '''Projection of the evolution on the basis |00>, |01>, |10>, |11>.
    '''
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (LOGICAL_DIMENSION, LOGICAL_DIMENSION):
            raise PreconditionError(MESSAGES.INVALID_SHAPE.value.format(
                LOGICAL_DIMENSION, self.entries.shape))

    def column_norms(self) -> np.ndarray:
        return np.linalg.norm(self.entries, axis=0)

    def is_sub_unitary(self, tol: float = SUB_UNITARY_TOLERANCE) -> bool:
        return bool(np.all(self.column_norms() <= 1 + tol))

    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries)


@dataclass(frozen=True)
class FidelityReport:
    avg_gate_fidelity: float
    leakage: float
    phase_profile: Tuple[float, ...]
    phase_quarters: Tuple[Optional[int], ...]
    global_phase: float

    @property
    def infidelity(self) -> float:
        return 1.0 - self.avg_gate_fidelity


@dataclass(frozen=True)
class FeasibilityReport:
    '''Time window arithmetic of the photon jump switch.
    '''
    omega: float
    delta_omega: float
    tau1: float
    delta_tau: float
    upper_ratio: float
    delta_tau_min: float
    window_ok: bool
    single_shot_error_floor: float
    rwa_ok: bool


@dataclass(frozen=True)
class GateSettings:
    '''Everything that defines one gate simulation.
    '''
    timings: GateTimings
    mode: str = MODE.IDEAL.value
    g_during_jump: bool = True
    compensate: bool = False
    exact_timing: bool = False
    n_max: int = DEFAULT_N_MAX
    jitter: Optional[JitterModel] = None
    target: str = 'cocsign'


@dataclass
class GateRun:
    '''Result of ``simulate_gate``.
    '''
    settings: GateSettings
    operator: LogicalOperator
    report: FidelityReport
    segments: List[Segment]
    trajectories: Dict[str, Trajectory] = field(default_factory=dict)
    unitarity_error: float = 0.0
    energy_drift: float = 0.0


@dataclass(frozen=True)
class SweepPoint:
    nu_over_g: float
    sigma: float
    n1: int
    n2: int
    g_during_jump: bool
    seed: int = 0


@dataclass(frozen=True)
class SweepRow:
    index: int
    point: SweepPoint
    report: FidelityReport
    residual: float


def target_cocsign() -> LogicalOperator:
    '''It returns diag(1, -1, 1, 1), the sign flip on |01>.
    '''
    return LogicalOperator(np.diag(np.array([1, -1, 1, 1], dtype=complex)))


def target_csign() -> LogicalOperator:
    '''It returns diag(1, 1, 1, -1), the sign flip on |11>.
    '''
    return LogicalOperator(np.diag(np.array([1, 1, 1, -1], dtype=complex)))


TARGETS = {
    'cocsign': target_cocsign,
    'csign': target_csign,
}


def sigma_x_first() -> np.ndarray:
    '''It returns sigma_x on the first qubit (cavity x) as a 4x4 matrix.
    '''
    return np.kron(np.array([[0, 1], [1, 0]], dtype=complex), np.eye(2, dtype=complex))


def conjugate_first_qubit(M: LogicalOperator) -> LogicalOperator:
    '''It returns sigma_x(x) M sigma_x(x).
    '''
    X = sigma_x_first()
    return LogicalOperator(X @ M.entries @ X)


def extract_logical(run: Callable[[StateVector], StateVector],
                    basis: SectorBasis) -> LogicalOperator:
    '''It projects the evolution of each logical input on the logical basis.

    Args:
        run (callable): Maps an initial state to the final state.
        basis (SectorBasis): Sector holding the logical encodings.
    Returns:
        LogicalOperator: Entry (q', q) is <q'|run(|q>)>.
    '''
    logical = [StateVector.from_state(basis, encode_logical(qx, qy)) for qx, qy in LOGICAL_INPUTS]
    entries = np.zeros((LOGICAL_DIMENSION, LOGICAL_DIMENSION), dtype=complex)
    for column, psi in enumerate(logical):
        out = run(psi)
        for row, ket in enumerate(logical):
            entries[row, column] = ket.overlap(out)
    return LogicalOperator(entries)


def _to_matrix(M: object) -> np.ndarray:
    return M.entries if isinstance(M, LogicalOperator) else np.asarray(M, dtype=complex)


def gate_fidelity(M: LogicalOperator, T: LogicalOperator) -> FidelityReport:
    '''It scores a possibly leaky logical operator against a target unitary.

    The average gate fidelity (Tr(M^+ M) + |Tr(T^+ M)|^2) / (d (d + 1)) is
    invariant under a global phase of ``M``.

    Args:
        M (LogicalOperator): Simulated operator.
        T (LogicalOperator): Target unitary.
    Returns:
        FidelityReport: Fidelity, leakage and the phases of diag(T^+ M).
    '''
    m = _to_matrix(M)
    t = _to_matrix(T)
    d = LOGICAL_DIMENSION
    overlap = np.trace(t.conj().T @ m)
    norm = float(np.real(np.trace(m.conj().T @ m)))
    fidelity = (norm + abs(overlap) ** 2) / (d * (d + 1))
    leakage = 1.0 - norm / d

    profile = []
    quarters = []
    for value in np.diag(t.conj().T @ m):
        angle = float(np.angle(value)) % (2 * math.pi)
        units = angle / (math.pi / 2)
        if abs(units - round(units)) <= QUARTER_TOLERANCE:
            quarters.append(int(round(units)) % 4)
        else:
            quarters.append(None)
        profile.append(angle)
    global_phase = float(np.angle(overlap)) if abs(overlap) > 0 else 0.0
    return FidelityReport(float(fidelity), float(leakage), tuple(profile), tuple(quarters),
                          global_phase)


def simulate_gate(settings: GateSettings) -> GateRun:
    '''It runs the four logical inputs through the coCSign schedule.

    Args:
        settings (GateSettings): Gate settings.
    Returns:
        GateRun: Logical operator, fidelity report, trajectories and the
            conservation diagnostics of the run.
    '''
    logger.debug('simulate_gate start.')
    timings = settings.timings
    basis = logical_sector(settings.n_max)
    segments = build_cocsign_schedule(timings, basis, settings.mode, settings.g_during_jump,
                                      settings.compensate, settings.exact_timing)
    if settings.jitter is not None:
        segments = apply_jitter(segments, settings.jitter, timings.tau1)

    unitaries = [segment_unitary(segment, timings.hbar) for segment in segments]
    unitarity_error = max(U.unitarity_error() for U in unitaries)

    trajectories = {}
    drift = [0.0]

    def _run(psi: StateVector) -> StateVector:
        label = LOGICAL_LABELS[len(trajectories)]
        out, trajectory = evolve(psi, segments, timings.hbar)
        before = psi
        for segment, after in zip(segments, trajectory.states()):
            if segment.hamiltonian is not None:
                drift[0] = max(drift[0], abs(expectation(after, segment.hamiltonian) -
                                             expectation(before, segment.hamiltonian)))
            before = after
        trajectories[label] = trajectory
        return out

    operator = extract_logical(_run, basis)
    if settings.target not in TARGETS:
        raise PreconditionError(MESSAGES.UNKNOWN_TARGET.value.format(settings.target))
    report = gate_fidelity(operator, TARGETS[settings.target]())
    logger.info(MESSAGES.GATE_SUMMARY.value.format(
        report.avg_gate_fidelity, report.leakage, timings.residual_ratio))
    logger.debug('simulate_gate ended.')
    return GateRun(settings, operator, report, segments, trajectories,
                   unitarity_error, drift[0])


def build_grid(nu_over_g: Sequence[float], sigma: Sequence[float],
               timings: Sequence[Tuple[int, int]], g_during_jump: Sequence[bool],
               seeds: Sequence[int] = (0,)) -> List[SweepPoint]:
    '''It returns the cartesian product of the axes in a fixed order.
    '''
    return [SweepPoint(nu, s, n1, n2, flag, seed)
            for nu, s, (n1, n2), flag, seed in itertools.product(
                nu_over_g, sigma, timings, g_during_jump, seeds)]


def evaluate_point(point: SweepPoint, settings: GateSettings) -> FidelityReport:
    '''It simulates one grid point on top of ``settings``.
    '''
    base = settings.timings
    timings = GateTimings(point.n1, point.n2, g=base.g, nu=point.nu_over_g * base.g,
                          hbar=base.hbar)
    include_jumps = settings.jitter.include_jumps if settings.jitter is not None else False
    jitter = JitterModel(point.sigma, point.seed, include_jumps) if point.sigma > 0 else None
    local = dataclasses.replace(settings, timings=timings, g_during_jump=point.g_during_jump,
                                jitter=jitter)
    return simulate_gate(local).report


def sweep(grid: Sequence[SweepPoint], settings: GateSettings, workers: int = 1) -> List[SweepRow]:
    '''It evaluates every grid point.

    Points are independent. With ``workers`` > 1 they are evaluated by a
    process pool; rows keep the grid order.

    Args:
        grid (list[SweepPoint]): Grid points.
        settings (GateSettings): Settings shared by all points.
        workers (int): Number of worker processes.
    Returns:
        list[SweepRow]: One row per grid point.
    '''
    if not grid:
        return []
    logger.debug(MESSAGES.SWEEP_START.value.format(len(grid), workers))
    if workers > 1:
        pool = ProcessingPool(nodes=workers)
        reports = pool.map(lambda point: evaluate_point(point, settings), list(grid))
    else:
        reports = [evaluate_point(point, settings) for point in grid]
    rows = [SweepRow(k, point, report, GateTimings(point.n1, point.n2).residual_ratio)
            for k, (point, report) in enumerate(zip(grid, reports))]
    logger.debug('sweep ended.')
    return rows


def format_sweep(rows: Sequence[SweepRow]) -> Tuple[list, list]:
    '''It converts sweep rows to a table.
    '''
    header = ['index', 'nu_over_g', 'sigma', 'n1', 'n2', 'g_during_jump', 'seed',
              'fidelity', 'leakage'] + ['phase_{}'.format(label) for label in LOGICAL_LABELS] + \
        ['residual']
    table = []
    for row in rows:
        p = row.point
        table.append([row.index, float(p.nu_over_g), float(p.sigma), p.n1, p.n2, p.g_during_jump,
                      p.seed, row.report.avg_gate_fidelity, row.report.leakage] +
                     list(row.report.phase_profile) + [row.residual])
    return header, table


def scaling_slope(residuals: Sequence[float], infidelities: Sequence[float]) -> float:
    '''It fits log(infidelity) = slope * log(residual) + c by least squares.
    '''
    pairs = [(r, f) for r, f in zip(residuals, infidelities) if r > 0 and f > 0]
    if len(pairs) < 2:
        raise PreconditionError(MESSAGES.TOO_FEW_POINTS.value.format(len(pairs)))
    x = np.log([r for r, _ in pairs])
    y = np.log([f for _, f in pairs])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def feasibility(omega: float, delta_omega: float, tau1: float, delta_tau: float,
                upper_ratio: float = WINDOW_UPPER_RATIO, hbar: float = 1.0) -> FeasibilityReport:
    '''It evaluates the time window of the photon jump switch.

    The uncertainty relation delta_omega * delta_t ~ 1 bounds the window
    from below; delta_tau << tau1 is read as delta_tau <= tau1 / upper_ratio.

    Args:
        omega (float): Photon angular frequency.
        delta_omega (float): Frequency uncertainty. ``inf`` removes the lower bound.
        tau1 (float): Single excitation Rabi period.
        delta_tau (float): Jump window.
        upper_ratio (float): Ratio defining the upper bound.
        hbar (float): Reduced Planck constant in the unit system of ``omega``.
    Returns:
        FeasibilityReport: Window bounds, error floor and the RWA check.
    '''
    for name, value in (('omega', omega), ('delta_omega', delta_omega), ('tau1', tau1),
                        ('delta_tau', delta_tau), ('upper_ratio', upper_ratio)):
        if not value > 0:
            raise PreconditionError(MESSAGES.NON_POSITIVE_INPUT.value.format(name, value))

    delta_tau_min = 0.0 if math.isinf(delta_omega) else 1.0 / delta_omega
    window_ok = (delta_tau >= delta_tau_min * (1 - WINDOW_LOWER_SLACK) and
                 delta_tau <= tau1 / upper_ratio)
    params = PhysicalParams(omega=omega, g=math.pi * hbar / tau1,
                            nu=math.pi * hbar / (2 * delta_tau), hbar=hbar)
    return FeasibilityReport(omega, delta_omega, tau1, delta_tau, upper_ratio,
                             delta_tau_min, window_ok, delta_tau_min / tau1, rwa_ok(params))


def format_feasibility(report: FeasibilityReport) -> Tuple[list, list]:
    header = [f.name for f in dataclasses.fields(report)]
    return header, [[getattr(report, name) for name in header]]
