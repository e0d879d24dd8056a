# schedule: coCSign timing search and schedule compilation
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
from typing import List, Sequence, Tuple

import numpy as np

from .common import PROCESS_NAME, CAVITY_X, CAVITY_Y, CAVITY_AUX, MODE, SEGMENT_LABEL, \
    PreconditionError
from .hilbert import SectorBasis
from .interface import JumpModelAccessor
from .jch import build_jc_interaction, rabi_periods, jump_period
from .jumps import pair_name
from .propagate import Segment

logger = logging.getLogger(PROCESS_NAME).getChild('schedule')

JUMP_WINDOW_RATIO = 10
'''A jump window longer than tau1 / JUMP_WINDOW_RATIO triggers a warning.
'''

CF_TERMS = 24
'''Number of partial quotients used for the continued fraction of sqrt(8).
'''

PAIR_X = (CAVITY_AUX, CAVITY_X)
PAIR_Y = (CAVITY_AUX, CAVITY_Y)


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    INVALID_TIMING = 'n1 and n2 must be positive integers: n1={}, n2={}'
    INVALID_COUPLING = 'Parameter {} must be positive: {}'
    INVALID_BOUND = 'The search bound must be at least 1: {}'
    INVALID_SIGMA = 'Jitter sigma must not be negative: {}'
    WINDOW_TOO_LONG = 'Jump window delta_tau={:.6g} exceeds tau1/{}={:.6g}'
    SEARCH_RESULT = 'search bound={} best (n1, n2)=({}, {}) residual={:.6g}'


@dataclass(frozen=True)
class GateTimings:
    '''Timing integers and periods of the coCSign schedule.

    The long wait 2 n2 tau2 approximates 2 n1 tau1 + tau1/2.
    '''
    n1: int
    n2: int
    g: float = 1.0
    nu: float = 100.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise PreconditionError(MESSAGES.INVALID_TIMING.value.format(self.n1, self.n2))
        for name in ('g', 'nu', 'hbar'):
            value = getattr(self, name)
            if value <= 0:
                raise PreconditionError(MESSAGES.INVALID_COUPLING.value.format(name, value))

    @property
    def tau1(self) -> float:
        return rabi_periods(self.g, self.hbar)[0]

    @property
    def tau2(self) -> float:
        return rabi_periods(self.g, self.hbar)[1]

    @property
    def delta_tau(self) -> float:
        return jump_period(self.nu, self.hbar) / 2

    @property
    def long_wait(self) -> float:
        return 2 * self.n2 * self.tau2

    @property
    def residual(self) -> float:
        '''It returns |2 n2 tau2 - 2 n1 tau1 - tau1/2| in time units.
        '''
        return abs(self.long_wait - 2 * self.n1 * self.tau1 - self.tau1 / 2)

    @property
    def residual_ratio(self) -> float:
        '''It returns the residual in units of tau1.
        '''
        return timing_residual(self.n1, self.n2)

    def window_ok(self) -> bool:
        '''It returns whether delta_tau <= tau1 / 10, warning otherwise.
        '''
        limit = self.tau1 / JUMP_WINDOW_RATIO
        if self.delta_tau > limit:
            logger.warning(MESSAGES.WINDOW_TOO_LONG.value.format(
                self.delta_tau, JUMP_WINDOW_RATIO, limit))
            return False
        return True


@dataclass(frozen=True)
class JitterModel:
    '''Additive Gaussian noise on segment durations.

    ``sigma`` is given in units of tau1.
    '''
    sigma: float = 0.0
    seed: int = 0
    include_jumps: bool = False

    def __post_init__(self):
        if self.sigma < 0:
            raise PreconditionError(MESSAGES.INVALID_SIGMA.value.format(self.sigma))


@dataclass(frozen=True)
class TimingCandidate:
    n1: int
    n2: int
    residual: float


def timing_residual(n1: int, n2: int) -> float:
    '''It returns |sqrt(2) n2 - 2 n1 - 1/2|, the timing error in units of tau1.
    '''
    return abs(math.sqrt(2) * n2 - 2 * n1 - 0.5)


def find_n1n2(n_max_search: int) -> List[TimingCandidate]:
    '''It searches the timing integers exhaustively.

    For every n2 in [1, n_max_search] the best n1 in the same range is kept.

    Args:
        n_max_search (int): Upper bound of n1 and n2.
    Returns:
        list[TimingCandidate]: Candidates sorted by residual, then n2 and n1.
    '''
    if n_max_search < 1:
        raise PreconditionError(MESSAGES.INVALID_BOUND.value.format(n_max_search))
    logger.debug('find_n1n2 start.')

    n = np.arange(1, n_max_search + 1)
    grid = np.abs(math.sqrt(2) * n[np.newaxis, :] - 2 * n[:, np.newaxis] - 0.5)
    best = np.argmin(grid, axis=0)
    candidates = [TimingCandidate(int(n[best[k]]), int(n2), timing_residual(int(n[best[k]]), int(n2)))
                  for k, n2 in enumerate(n)]
    candidates.sort(key=lambda c: (c.residual, c.n2, c.n1))

    top = candidates[0]
    logger.info(MESSAGES.SEARCH_RESULT.value.format(n_max_search, top.n1, top.n2, top.residual))
    logger.debug('find_n1n2 ended.')
    return candidates


def continued_fraction(x: float, terms: int = CF_TERMS) -> List[int]:
    '''It returns the first partial quotients [a0; a1, a2, ...] of ``x``.
    '''
    quotients = []
    for _ in range(terms):
        a = math.floor(x)
        quotients.append(int(a))
        rest = x - a
        if rest < 1e-12:
            break
        x = 1 / rest
    return quotients


def convergents(quotients: Sequence[int], semi: bool = False) -> List[Tuple[int, int]]:
    '''It returns the convergents p/q of a continued fraction.

    Args:
        quotients (list[int]): Partial quotients.
        semi (bool): If true, the intermediate fractions between two
            convergents are returned as well.
    Returns:
        list(tuple(int, int)): (p, q) pairs in increasing q.
    '''
    p_prev, q_prev = 1, 0
    p_prev2, q_prev2 = 0, 1
    result = []
    for a in quotients:
        start = 1 if semi else a
        for j in range(start, a + 1):
            p, q = p_prev2 + j * p_prev, q_prev2 + j * q_prev
            if q > 0:
                result.append((p, q))
        p_prev2, q_prev2, p_prev, q_prev = p_prev, q_prev, p_prev2 + a * p_prev, q_prev2 + a * q_prev
    return result


def continued_fraction_candidates(n_max_search: int) -> List[TimingCandidate]:
    '''It derives timing integers from the (semi)convergents of sqrt(8).

    sqrt(8) n2 must approximate an integer 4 n1 + 1.

    Args:
        n_max_search (int): Upper bound of n1 and n2.
    Returns:
        list[TimingCandidate]: Candidates sorted by residual.
    '''
    if n_max_search < 1:
        raise PreconditionError(MESSAGES.INVALID_BOUND.value.format(n_max_search))
    root = math.sqrt(8)
    found = {}
    for p, q in convergents(continued_fraction(root), semi=True):
        if q > n_max_search or p % 4 != 1 or p != round(root * q):
            continue
        n1 = (p - 1) // 4
        if 1 <= n1 <= n_max_search:
            found[(n1, q)] = TimingCandidate(n1, q, timing_residual(n1, q))
    return sorted(found.values(), key=lambda c: (c.residual, c.n2, c.n1))


def _wait(basis: SectorBasis, couplings: Sequence[float], duration: float,
          label: str = SEGMENT_LABEL.WAIT.value) -> Segment:
    return Segment(label=label, duration=duration,
                   hamiltonian=build_jc_interaction(basis, couplings), descriptor='H_int')


def wait_schedule(basis: SectorBasis, couplings: Sequence[float], duration: float) -> List[Segment]:
    '''It returns a schedule of one wait under the atom-field interaction.
    '''
    return [_wait(basis, couplings, duration)]


def build_cocsign_schedule(timings: GateTimings, basis: SectorBasis, mode: str = MODE.IDEAL.value,
                           g_during_jump: bool = True, compensate: bool = False,
                           exact_timing: bool = False) -> List[Segment]:
    '''It compiles the coCSign gate into segments.

    The order is jump(aux,x), wait tau1/2, jump(aux,y), wait 2 n2 tau2,
    jump(aux,x), wait tau1/2, jump(aux,y), final wait tau1/2.

    Args:
        timings (GateTimings): Timing integers and couplings.
        basis (SectorBasis): Sector the schedule acts on.
        mode (str): ``ideal`` or ``physical`` jumps.
        g_during_jump (bool): Keep the atom-field coupling during jumps.
        compensate (bool): Subtract each jump window from the following wait.
        exact_timing (bool): Replace the long wait by 2 n1 tau1 + tau1/2 for
            single excitations and 2 n2 tau2 for double excitations.
    Returns:
        list[Segment]: The schedule.
    '''
    logger.debug('build_cocsign_schedule start.')
    if isinstance(mode, MODE):
        mode = mode.value
    model = JumpModelAccessor(mode)
    if model.MODE_NAME == MODE.PHYSICAL.value:
        timings.window_ok()

    couplings = tuple([timings.g] * basis.cavity_count)
    half = timings.tau1 / 2
    if exact_timing:
        blocks = ((1, 2 * timings.n1 * timings.tau1 + half), (2, timings.long_wait))
        long_wait = Segment(label=SEGMENT_LABEL.WAIT.value, duration=timings.long_wait,
                            hamiltonian=build_jc_interaction(basis, couplings),
                            descriptor='H_int[exact]', couplings=couplings, block_durations=blocks)
    else:
        long_wait = _wait(basis, couplings, timings.long_wait)
    waits = [_wait(basis, couplings, half), long_wait, _wait(basis, couplings, half),
             _wait(basis, couplings, half, SEGMENT_LABEL.FINAL_WAIT.value)]

    segments = []
    for pair, wait in zip((PAIR_X, PAIR_Y, PAIR_X, PAIR_Y), waits):
        jump = model.build_jump(basis, pair, timings, couplings, g_during_jump)
        if compensate and jump.duration > 0:
            wait = wait.shifted(-jump.duration)
        segments.extend([jump, wait])

    logger.debug('build_cocsign_schedule ended.')
    return segments


def apply_jitter(segments: Sequence[Segment], model: JitterModel,
                 tau1: float = math.pi) -> List[Segment]:
    '''It perturbs the segment durations with Gaussian noise.

    Waits always receive noise. Jump windows receive noise only when
    ``model.include_jumps`` is set; instantaneous jumps never do.

    Args:
        segments (list[Segment]): Schedule.
        model (JitterModel): Noise amplitude and seed.
        tau1 (float): Unit of ``model.sigma``.
    Returns:
        list[Segment]: Perturbed schedule. Durations are clipped at 0.
    '''
    if model.sigma == 0:
        return list(segments)
    rng = np.random.default_rng(model.seed)
    jittered = []
    for segment in segments:
        noisy = segment.label != SEGMENT_LABEL.JUMP.value or \
            (model.include_jumps and not segment.is_instantaneous)
        if noisy:
            segment = segment.shifted(float(rng.normal(0.0, model.sigma * tau1)))
        jittered.append(segment)
    return jittered


def total_duration(segments: Sequence[Segment]) -> float:
    return sum(segment.duration for segment in segments)


def format_timeline(segments: Sequence[Segment]) -> Tuple[list, list]:
    '''It converts a schedule to timeline rows.

    Returns:
        tuple(list[str], list[list]): Header and rows of
            ``label, pair, duration, hamiltonian``.
    '''
    header = ['label', 'pair', 'duration', 'hamiltonian']
    rows = []
    for segment in segments:
        pair = pair_name(segment.pair) if segment.pair is not None else 'none'
        rows.append([segment.label, pair, float(segment.duration), segment.descriptor])
    return header, rows
