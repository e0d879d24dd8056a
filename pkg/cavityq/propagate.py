# propagate: unitary evolution under piecewise constant Hamiltonians
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
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .common import PROCESS_NAME, NonHermitianError, BasisMismatchError, PreconditionError
from .hilbert import SectorBasis, StateVector
from .jch import OperatorMatrix, HERMITIAN_TOLERANCE, build_hop, build_jc_interaction

logger = logging.getLogger(PROCESS_NAME).getChild('propagate')

IDEAL_JUMP_ANGLE = math.pi / 2
'''nu * delta_tau / hbar of a complete photon transfer.
'''


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    NON_HERMITIAN = 'The Hamiltonian is not Hermitian: max|H - H^+| = {:.3e}'
    BASIS_MISMATCH = 'Segment {} ({}) does not share the state basis'
    NEGATIVE_DURATION = 'Segment duration must not be negative: {}'
    NO_GENERATOR = 'Segment {} has neither a Hamiltonian nor a unitary'


@dataclass(frozen=True, eq=False)
class Segment:
    '''One interval of a schedule.

    A segment either evolves under ``hamiltonian`` for ``duration`` or, for
    an instantaneous jump, applies ``unitary`` without elapsed time. When
    ``block_durations`` is given, each cavity evolves under its own
    interaction term for the duration assigned to its local excitation.
    '''
    label: str
    duration: float
    hamiltonian: Optional[OperatorMatrix] = None
    unitary: Optional[OperatorMatrix] = None
    pair: Optional[Tuple[int, int]] = None
    descriptor: str = ''
    couplings: Optional[Tuple[float, ...]] = None
    block_durations: Optional[Tuple[Tuple[int, float], ...]] = None

    def __post_init__(self):
        if self.duration < 0:
            raise PreconditionError(MESSAGES.NEGATIVE_DURATION.value.format(self.duration))
        if self.hamiltonian is None and self.unitary is None:
            raise PreconditionError(MESSAGES.NO_GENERATOR.value.format(self.label))

    @property
    def basis(self) -> SectorBasis:
        if self.unitary is not None:
            return self.unitary.basis
        return self.hamiltonian.basis

    @property
    def is_instantaneous(self) -> bool:
        return self.unitary is not None

    def shifted(self, delta: float) -> 'Segment':
        '''It returns a copy whose durations are changed by ``delta``, clipped at 0.
        '''
        blocks = self.block_durations
        if blocks is not None:
            blocks = tuple((e, max(0.0, t + delta)) for e, t in blocks)
        return dataclasses.replace(self, duration=max(0.0, self.duration + delta),
                                   block_durations=blocks)


@dataclass
class Trajectory:
    '''States recorded after each segment.

    Each checkpoint is ``(time, segment label, StateVector)``.
    '''
    checkpoints: List[Tuple[float, str, StateVector]] = field(default_factory=list)

    def times(self) -> list:
        return [t for t, _, _ in self.checkpoints]

    def states(self) -> list:
        return [psi for _, _, psi in self.checkpoints]


def propagator(H: OperatorMatrix, t: float, hbar: float = 1.0) -> OperatorMatrix:
    '''It returns exp(-i H t / hbar) from the spectral decomposition of ``H``.

    Args:
        H (OperatorMatrix): Hermitian Hamiltonian.
        t (float): Duration.
        hbar (float): Reduced Planck constant.
    Returns:
        OperatorMatrix: The propagator.
    Raises:
        NonHermitianError: ``H`` is not Hermitian.
    '''
    error = H.hermiticity_error()
    if error > HERMITIAN_TOLERANCE:
        raise NonHermitianError(MESSAGES.NON_HERMITIAN.value.format(error))
    if H.basis.size == 0:
        return OperatorMatrix(H.basis, np.zeros((0, 0), dtype=complex))
    energies, vectors = np.linalg.eigh(H.entries)
    phases = np.exp(-1j * energies * t / hbar)
    return OperatorMatrix(H.basis, (vectors * phases) @ vectors.conj().T)


def cavity_projector(basis: SectorBasis, cavity: int, excitation: int) -> np.ndarray:
    '''It returns the projector on states whose cavity holds ``excitation`` quanta.
    '''
    diagonal = [1.0 if state.excitation(cavity) == excitation else 0.0
                for state in basis.states]
    return np.diag(np.asarray(diagonal, dtype=complex))


def block_propagator(basis: SectorBasis, couplings: Sequence[float],
                     block_durations: Dict[int, float], default: float,
                     hbar: float = 1.0) -> OperatorMatrix:
    '''It propagates every cavity for the duration of its local excitation block.

    The local interaction terms commute with each other and with the local
    excitation numbers, so the product of the per-cavity propagators is exact.

    Args:
        basis (SectorBasis): Sector basis.
        couplings (list[float]): Coupling of each cavity.
        block_durations (dict[int, float]): Duration per local excitation.
        default (float): Duration of blocks missing from ``block_durations``.
        hbar (float): Reduced Planck constant.
    Returns:
        OperatorMatrix: The propagator.
    '''
    total = np.eye(basis.size, dtype=complex)
    for cavity in range(basis.cavity_count):
        local = [0.0] * basis.cavity_count
        local[cavity] = couplings[cavity]
        H = build_jc_interaction(basis, local)
        cavity_unitary = np.zeros((basis.size, basis.size), dtype=complex)
        for excitation in range(basis.n_max + 2):
            projector = cavity_projector(basis, cavity, excitation)
            if not projector.any():
                continue
            t = block_durations.get(excitation, default)
            cavity_unitary += projector @ propagator(H, t, hbar).entries
        total = cavity_unitary @ total
    return OperatorMatrix(basis, total)


def ideal_jump(basis: SectorBasis, pair: Tuple[int, int]) -> OperatorMatrix:
    '''It returns the instantaneous photon exchange exp(-i pi/2 (a_i a_j^+ + a_j a_i^+)).

    A single photon shared by the pair moves with the factor -i.
    '''
    return propagator(build_hop(basis, pair, 1.0), IDEAL_JUMP_ANGLE)


def segment_unitary(segment: Segment, hbar: float = 1.0) -> OperatorMatrix:
    '''It returns the unitary applied by one segment.
    '''
    if segment.unitary is not None:
        return segment.unitary
    if segment.block_durations is not None:
        return block_propagator(segment.basis, segment.couplings,
                                dict(segment.block_durations), segment.duration, hbar)
    return propagator(segment.hamiltonian, segment.duration, hbar)


def apply(U: OperatorMatrix, psi: StateVector) -> StateVector:
    '''It returns U |psi>.
    '''
    return StateVector(psi.basis, U.entries @ psi.amplitudes)


def evolve(psi: StateVector, segments: Sequence[Segment],
           hbar: float = 1.0) -> Tuple[StateVector, Trajectory]:
    '''It applies the segments in order.

    Args:
        psi (StateVector): Initial state.
        segments (list[Segment]): Schedule.
        hbar (float): Reduced Planck constant.
    Returns:
        tuple(StateVector, Trajectory): Final state and the states after
            each segment.
    '''
    trajectory = Trajectory()
    time = 0.0
    for k, segment in enumerate(segments):
        if not segment.basis.same_sector(psi.basis):
            raise BasisMismatchError(MESSAGES.BASIS_MISMATCH.value.format(k, segment.label))
        psi = apply(segment_unitary(segment, hbar), psi)
        time += segment.duration
        trajectory.checkpoints.append((time, segment.label, psi))
    return psi, trajectory


def expectation(psi: StateVector, H: OperatorMatrix) -> float:
    '''It returns the real expectation value <psi|H|psi>.
    '''
    return float(np.real(np.vdot(psi.amplitudes, H.entries @ psi.amplitudes)))


def format_trajectory(trajectory: Trajectory) -> Tuple[list, list]:
    '''It converts a trajectory to table rows.

    Returns:
        tuple(list[str], list[list]): Header and rows of
            ``time, segment, state, re, im``; one row per basis state and checkpoint.
    '''
    header = ['time', 'segment', 'state', 're', 'im']
    rows = []
    for time, label, psi in trajectory.checkpoints:
        for state, amplitude in zip(psi.basis.states, psi.amplitudes):
            rows.append([float(time), label, state.label(),
                         float(amplitude.real), float(amplitude.imag)])
    return header, rows
