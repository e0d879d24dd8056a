# jumps: photon jump realisations
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
from typing import Sequence, Tuple

from .base import AbstractJumpModel
from .common import PROCESS_NAME, CAVITY_NAMES, MODE, SEGMENT_LABEL
from .hilbert import SectorBasis
from .jch import build_hop, build_jc_interaction
from .propagate import Segment, ideal_jump

logger = logging.getLogger(PROCESS_NAME).getChild('jumps')


def pair_name(pair: Tuple[int, int]) -> str:
    '''It returns a pair label such as ``aux-x``.
    '''
    return '-'.join(CAVITY_NAMES[i] if i < len(CAVITY_NAMES) else str(i) for i in pair)


class IdealJumpModel(AbstractJumpModel):
    '''Instantaneous photon exchange without elapsed time
    '''

    @property
    def MODE_NAME(self) -> str:
        return MODE.IDEAL.value

    def build_jump(self, basis: SectorBasis, pair: Tuple[int, int], timings: object,
                   couplings: Sequence[float], g_during_jump: bool) -> Segment:
        return Segment(label=SEGMENT_LABEL.JUMP.value, duration=0.0,
                       unitary=ideal_jump(basis, pair), pair=pair,
                       descriptor='ideal_jump({})'.format(pair_name(pair)))


class PhysicalJumpModel(AbstractJumpModel):
    '''Hopping switched on for the window delta_tau = pi hbar / (2 nu)
    '''

    @property
    def MODE_NAME(self) -> str:
        return MODE.PHYSICAL.value

    def build_jump(self, basis: SectorBasis, pair: Tuple[int, int], timings: object,
                   couplings: Sequence[float], g_during_jump: bool) -> Segment:
        hop = build_hop(basis, pair, timings.nu)
        if g_during_jump:
            hamiltonian = build_jc_interaction(basis, couplings) + hop
            descriptor = 'H_int+H_jump({})'.format(pair_name(pair))
        else:
            hamiltonian = hop
            descriptor = 'H_jump({})'.format(pair_name(pair))
        logger.debug('physical jump built. pair={} delta_tau={}'.format(pair, timings.delta_tau))
        return Segment(label=SEGMENT_LABEL.JUMP.value, duration=timings.delta_tau,
                       hamiltonian=hamiltonian, pair=pair, descriptor=descriptor)
