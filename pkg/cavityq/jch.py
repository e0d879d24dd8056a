# jch: Jaynes-Cummings-Hubbard Hamiltonians
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
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from .common import PROCESS_NAME, PhysicsError, PreconditionError, DomainError
from .hilbert import BasisState, SectorBasis

logger = logging.getLogger(PROCESS_NAME).getChild('jch')

HERMITIAN_TOLERANCE = 1e-12
'''Largest allowed entry of H - H^+ for a Hamiltonian.
'''

UNITARY_TOLERANCE = 1e-12
'''Largest allowed entry of U^+ U - I for a propagator.
'''

RWA_LIMIT = 1e-3
'''Largest g / (hbar omega) for which the rotating wave approximation is used.
'''

GEOMETRY_TOLERANCE = 1e-9
'''Relative tolerance of the standing wave condition L = n lambda / 2.
'''


class LADDER(Enum):
    '''Ladder operators acting on one cavity.
    '''
    CREATE = 'a+'
    ANNIHILATE = 'a'
    RAISE = 's+'
    LOWER = 's'


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    COUPLING_COUNT_MISMATCH = 'Expected {} couplings, got {}'
    INVALID_PAIR = 'Invalid cavity pair {} for {} cavities'
    SECTOR_LEAK = 'The operator term maps {} outside the sector'
    NON_POSITIVE_PARAM = 'Parameter {} must be positive: {}'
    POSITION_OUT_OF_CAVITY = 'Atom position x={} is outside the cavity [0, {}]'
    STANDING_WAVE_VIOLATED = 'Cavity length L={} differs from n*lambda/2={}'
    RWA_VIOLATED = 'g/(hbar*omega)={:.3e} exceeds the RWA limit {:.0e}'


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    '''Dense operator over a sector basis.
    '''
    basis: SectorBasis
    entries: np.ndarray

    def dagger(self) -> 'OperatorMatrix':
        return OperatorMatrix(self.basis, self.entries.conj().T)

    def hermiticity_error(self) -> float:
        if self.entries.size == 0:
            return 0.0
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def unitarity_error(self) -> float:
        if self.entries.size == 0:
            return 0.0
        identity = np.eye(self.basis.size)
        return float(np.max(np.abs(self.entries.conj().T @ self.entries - identity)))

    def is_hermitian(self, tol: float = HERMITIAN_TOLERANCE) -> bool:
        return self.hermiticity_error() <= tol

    def is_unitary(self, tol: float = UNITARY_TOLERANCE) -> bool:
        return self.unitarity_error() <= tol

    def __add__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        return OperatorMatrix(self.basis, self.entries + other.entries)

    def __matmul__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        return OperatorMatrix(self.basis, self.entries @ other.entries)


@dataclass(frozen=True)
class PhysicalParams:
    '''Frequencies and couplings of the cavity array.

    In natural units hbar = g = 1 and omega only matters for the RWA check.
    '''
    omega: float
    g: float
    nu: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ('g', 'nu', 'hbar'):
            value = getattr(self, name)
            if value <= 0:
                raise PreconditionError(MESSAGES.NON_POSITIVE_PARAM.value.format(name, value))

    @property
    def rwa_ratio(self) -> float:
        return self.g / (self.hbar * self.omega)


@dataclass(frozen=True)
class CavityGeometry:
    '''Single-mode cavity holding one atom.
    '''
    V: float
    d: float
    x: float
    L: float
    wavelength: float
    n_half_waves: int = 1

    def __post_init__(self):
        for name in ('V', 'L', 'wavelength', 'n_half_waves'):
            value = getattr(self, name)
            if value <= 0:
                raise DomainError(MESSAGES.NON_POSITIVE_PARAM.value.format(name, value))
        expected = self.n_half_waves * self.wavelength / 2
        if abs(self.L - expected) > GEOMETRY_TOLERANCE * expected:
            raise DomainError(MESSAGES.STANDING_WAVE_VIOLATED.value.format(self.L, expected))


def rwa_ok(params: PhysicalParams) -> bool:
    '''It returns whether the rotating wave approximation holds for ``params``.
    '''
    ok = params.rwa_ratio <= RWA_LIMIT
    if not ok:
        logger.warning(MESSAGES.RWA_VIOLATED.value.format(params.rwa_ratio, RWA_LIMIT))
    return ok


def rabi_periods(g: float, hbar: float = 1.0) -> Tuple[float, float]:
    '''It returns the Rabi periods of single and double excitation.

    Returns:
        tuple(float, float): tau1 = pi hbar / g and tau2 = tau1 / sqrt(2).
    '''
    tau1 = math.pi * hbar / g
    return tau1, tau1 / math.sqrt(2)


def jump_period(nu: float, hbar: float = 1.0) -> float:
    '''It returns the photon hopping period pi hbar / nu. A jump lasts half of it.
    '''
    return math.pi * hbar / nu


def placement_factor(x: float, L: float) -> float:
    '''It returns the mode function E(x) = sin(pi x / L) at the atom position.
    '''
    if x < 0 or x > L:
        raise DomainError(MESSAGES.POSITION_OUT_OF_CAVITY.value.format(x, L))
    return math.sin(math.pi * x / L)


def coupling_from_geometry(params: PhysicalParams, geom: CavityGeometry) -> float:
    '''It computes the atom-field coupling sqrt(hbar omega / V) d E(x).

    Args:
        params (PhysicalParams): Photon frequency and hbar are used.
        geom (CavityGeometry): Cavity geometry.
    Returns:
        float: Coupling g in energy units.
    '''
    g = math.sqrt(params.hbar * params.omega / geom.V) * geom.d * placement_factor(geom.x, geom.L)
    logger.debug('coupling from geometry: g={}'.format(g))
    return g


def apply_ladder(state: BasisState, operator: LADDER, cavity: int,
                 n_max: Optional[int] = None) -> Optional[Tuple[BasisState, float]]:
    '''It applies one ladder operator to a basis state.

    Args:
        state (BasisState): Input state.
        operator (LADDER): Operator to apply.
        cavity (int): Cavity the operator acts on.
        n_max (int): Photon cutoff. ``None`` means no cutoff.
    Returns:
        tuple(BasisState, float): Resulting state and matrix element, or
            ``None`` when the result vanishes or exceeds the cutoff.
    '''
    n = state.photons[cavity]
    m = state.atoms[cavity]
    if operator is LADDER.CREATE:
        if n_max is not None and n + 1 > n_max:
            return None
        return state.replace(cavity, n + 1, m), math.sqrt(n + 1)
    if operator is LADDER.ANNIHILATE:
        if n == 0:
            return None
        return state.replace(cavity, n - 1, m), math.sqrt(n)
    if operator is LADDER.RAISE:
        if m == 1:
            return None
        return state.replace(cavity, n, 1), 1.0
    if m == 0:
        return None
    return state.replace(cavity, n, 0), 1.0


def apply_term(state: BasisState, ops: Sequence[Tuple[LADDER, int]],
               n_max: Optional[int] = None) -> Optional[Tuple[BasisState, float]]:
    '''It applies a product of ladder operators, first element first.
    '''
    amplitude = 1.0
    for operator, cavity in ops:
        result = apply_ladder(state, operator, cavity, n_max)
        if result is None:
            return None
        state, factor = result
        amplitude *= factor
    return state, amplitude


def _operator_matrix(basis: SectorBasis, terms: list) -> OperatorMatrix:
    entries = np.zeros((basis.size, basis.size), dtype=complex)
    for k, state in enumerate(basis.states):
        for coefficient, ops in terms:
            if coefficient == 0:
                continue
            result = apply_term(state, ops, basis.n_max)
            if result is None:
                continue
            new_state, amplitude = result
            if not basis.contains(new_state):
                raise PhysicsError(MESSAGES.SECTOR_LEAK.value.format(state.label()))
            entries[basis.position(new_state), k] += coefficient * amplitude
    return OperatorMatrix(basis, entries)


def build_jc_interaction(basis: SectorBasis, couplings: Sequence[float]) -> OperatorMatrix:
    '''It builds sum_i g_i (a_i^+ s_i + a_i s_i^+) on the sector.

    Args:
        basis (SectorBasis): Sector basis.
        couplings (list[float]): Coupling of each cavity.
    Returns:
        OperatorMatrix: The interaction Hamiltonian.
    '''
    if len(couplings) != basis.cavity_count:
        raise PreconditionError(MESSAGES.COUPLING_COUNT_MISMATCH.value.format(
            basis.cavity_count, len(couplings)))
    terms = []
    for i, g in enumerate(couplings):
        terms.append((g, ((LADDER.LOWER, i), (LADDER.CREATE, i))))
        terms.append((g, ((LADDER.RAISE, i), (LADDER.ANNIHILATE, i))))
    return _operator_matrix(basis, terms)


def build_hop(basis: SectorBasis, pair: Tuple[int, int], nu: float) -> OperatorMatrix:
    '''It builds the photon hopping term nu (a_i a_j^+ + a_j a_i^+).
    '''
    i, j = pair
    if i == j or not (0 <= i < basis.cavity_count and 0 <= j < basis.cavity_count):
        raise PreconditionError(MESSAGES.INVALID_PAIR.value.format(pair, basis.cavity_count))
    terms = [(nu, ((LADDER.CREATE, j), (LADDER.ANNIHILATE, i))),
             (nu, ((LADDER.CREATE, i), (LADDER.ANNIHILATE, j)))]
    return _operator_matrix(basis, terms)


def build_h0(basis: SectorBasis, omega: float, hbar: float = 1.0) -> OperatorMatrix:
    '''It builds the free Hamiltonian hbar omega (a^+ a + s^+ s) at resonance.
    '''
    diagonal = [hbar * omega * state.total_excitation for state in basis.states]
    return OperatorMatrix(basis, np.diag(np.asarray(diagonal, dtype=complex)))


def commutator_norm(A: OperatorMatrix, B: OperatorMatrix) -> float:
    '''It returns the largest entry of [A, B].
    '''
    commutator = A.entries @ B.entries - B.entries @ A.entries
    if commutator.size == 0:
        return 0.0
    return float(np.max(np.abs(commutator)))
