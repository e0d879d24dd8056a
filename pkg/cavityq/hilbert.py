# hilbert: truncated multi-cavity Hilbert space
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
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Tuple

import numpy as np

from .common import PROCESS_NAME, FORMAT_VERSION_KEY, FORMAT_VERSION
from .common import CAVITY_NAMES, PreconditionError, InvalidQueryError

logger = logging.getLogger(PROCESS_NAME).getChild('hilbert')

DEFAULT_N_MAX = 2
'''Default photon cutoff per cavity.
'''

LOGICAL_EXCITATION = 2
'''Total excitation number of every logical encoding.
'''

NORM_TOLERANCE = 1e-12
'''Allowed deviation of a state vector norm from 1.
'''


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    INVALID_SECTOR = 'Invalid sector: cavity_count={}, n_max={}, N={}'
    INVALID_LOGICAL_BIT = 'Logical bits must be 0 or 1: ({}, {})'
    STATE_OUTSIDE_SECTOR = 'The state is not in the sector (N={}): {}'
    INVALID_AMPLITUDES = 'Amplitude count {} does not match the basis size {}'


@dataclass(frozen=True)
class BasisState:
    '''Occupation-number state of the cavity array.

    Cavities are ordered (x, y, aux).
    '''
    photons: Tuple[int, ...]
    atoms: Tuple[int, ...]

    @property
    def cavity_count(self) -> int:
        return len(self.photons)

    def excitation(self, cavity: int) -> int:
        '''It returns the excitation number stored in one cavity.

        Args:
            cavity (int): Cavity index.
        Returns:
            int: photons + atomic excitation of the cavity.
        '''
        return self.photons[cavity] + self.atoms[cavity]

    @property
    def total_excitation(self) -> int:
        return sum(self.photons) + sum(self.atoms)

    def replace(self, cavity: int, photons: int, atom: int) -> 'BasisState':
        '''It returns a copy with the occupation of one cavity replaced.
        '''
        new_photons = list(self.photons)
        new_atoms = list(self.atoms)
        new_photons[cavity] = photons
        new_atoms[cavity] = atom
        return BasisState(tuple(new_photons), tuple(new_atoms))

    def label(self) -> str:
        '''It returns a ket label such as ``|010>ph|100>at``.
        '''
        return '|{}>ph|{}>at'.format(''.join(str(n) for n in self.photons),
                                     ''.join(str(m) for m in self.atoms))


@dataclass(frozen=True, eq=False)
class SectorBasis:
    '''Ordered basis of one total-excitation sector.
    '''
    cavity_count: int
    n_max: int
    total: int
    states: Tuple[BasisState, ...]
    index: Dict[BasisState, int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.states)

    def position(self, state: BasisState) -> int:
        '''It returns the index of a state.

        Args:
            state (BasisState): A basis state.
        Returns:
            int: Position of the state in ``states``.
        Raises:
            InvalidQueryError: The state does not belong to this sector.
        '''
        try:
            return self.index[state]
        except KeyError:
            raise InvalidQueryError(MESSAGES.STATE_OUTSIDE_SECTOR.value.format(
                self.total, state.label()))

    def contains(self, state: BasisState) -> bool:
        return state in self.index

    def same_sector(self, other: 'SectorBasis') -> bool:
        '''It returns whether two bases describe the same sector.
        '''
        return (self is other or
                (self.cavity_count == other.cavity_count and
                 self.n_max == other.n_max and
                 self.total == other.total))


@dataclass(frozen=True, eq=False)
class StateVector:
    '''Normalised state within a sector basis.
    '''
    basis: SectorBasis
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (self.basis.size,):
            raise PreconditionError(MESSAGES.INVALID_AMPLITUDES.value.format(
                self.amplitudes.shape, self.basis.size))

    @classmethod
    def from_state(cls, basis: SectorBasis, state: BasisState) -> 'StateVector':
        '''It returns the delta vector of one basis state.
        '''
        amplitudes = np.zeros(basis.size, dtype=complex)
        amplitudes[basis.position(state)] = 1.0
        return cls(basis, amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def overlap(self, other: 'StateVector') -> complex:
        '''It returns <self|other>.
        '''
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def local_states(n_max: int) -> list:
    '''It returns the (photons, atom) occupations of a single cavity.
    '''
    return [(n, m) for n in range(n_max + 1) for m in (0, 1)]


def enumerate_sector(cavity_count: int, n_max: int, N: int) -> SectorBasis:
    '''It enumerates all occupation states with total excitation ``N``.

    States are sorted lexicographically by photon tuple, then atom tuple.

    Args:
        cavity_count (int): Number of cavities.
        n_max (int): Photon cutoff per cavity.
        N (int): Total excitation number.
    Returns:
        SectorBasis: The sector basis. It may be empty.
    '''
    if cavity_count < 1 or n_max < 0 or N < 0:
        raise PreconditionError(MESSAGES.INVALID_SECTOR.value.format(cavity_count, n_max, N))

    states = []
    for occupation in itertools.product(local_states(n_max), repeat=cavity_count):
        if sum(n + m for n, m in occupation) != N:
            continue
        states.append(BasisState(tuple(n for n, _ in occupation),
                                 tuple(m for _, m in occupation)))
    states.sort(key=lambda s: (s.photons, s.atoms))
    index = {state: k for k, state in enumerate(states)}
    logger.debug('sector enumerated. cavities={} n_max={} N={} size={}'.format(
        cavity_count, n_max, N, len(states)))
    return SectorBasis(cavity_count, n_max, N, tuple(states), index)


def logical_sector(n_max: int = DEFAULT_N_MAX) -> SectorBasis:
    '''It returns the three-cavity sector holding the logical encodings.
    '''
    return enumerate_sector(len(CAVITY_NAMES), n_max, LOGICAL_EXCITATION)


def encode_logical(qx: int, qy: int) -> BasisState:
    '''It encodes two logical bits into the (x, y, aux) cavities.

    Logical 0 is an excited atom without photon, logical 1 a photon with the
    atom in its ground state. The auxiliary cavity starts empty.

    Args:
        qx (int): Bit of cavity x.
        qy (int): Bit of cavity y.
    Returns:
        BasisState: Encoded state with total excitation 2.
    '''
    if qx not in (0, 1) or qy not in (0, 1):
        raise PreconditionError(MESSAGES.INVALID_LOGICAL_BIT.value.format(qx, qy))
    return BasisState((qx, qy, 0), (1 - qx, 1 - qy, 0))


def basis_state_amplitude(psi: StateVector, s: BasisState) -> complex:
    '''It returns the amplitude of ``psi`` on the basis state ``s``.
    '''
    return complex(psi.amplitudes[psi.basis.position(s)])


def format_basis(basis: SectorBasis) -> str:
    '''It dumps a basis as text, one occupation tuple per line.

    Returns:
        str: ``index photons atoms`` lines after two comment lines.
    '''
    lines = ['# {}={}'.format(FORMAT_VERSION_KEY, FORMAT_VERSION),
             '# cavity_count={} n_max={} N={}'.format(basis.cavity_count, basis.n_max, basis.total),
             'index photons atoms']
    for k, state in enumerate(basis.states):
        lines.append('{} {} {}'.format(k, ','.join(str(n) for n in state.photons),
                                       ','.join(str(m) for m in state.atoms)))
    return '\n'.join(lines) + '\n'


def parse_basis(text: str) -> list:
    '''It parses a dump written by ``format_basis``.

    Returns:
        list[BasisState]: States in dump order.
    '''
    states = []
    for line in text.splitlines():
        if not line or line.startswith('#') or line.startswith('index'):
            continue
        _, photons, atoms = line.split()
        states.append(BasisState(tuple(int(n) for n in photons.split(',')),
                                 tuple(int(m) for m in atoms.split(','))))
    return states
