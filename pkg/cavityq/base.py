# base: cavityq jump model base
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
from abc import ABCMeta, abstractmethod
from typing import Sequence, Tuple

from .hilbert import SectorBasis
from .propagate import Segment


class AbstractJumpModel(metaclass=ABCMeta):
    '''The photon jump interface
    '''

    @property
    @abstractmethod
    def MODE_NAME(self) -> str:
        '''It returns the mode name
        '''
        pass

    @abstractmethod
    def build_jump(self, basis: SectorBasis, pair: Tuple[int, int], timings: object,
                   couplings: Sequence[float], g_during_jump: bool) -> Segment:
        '''It builds the segment that moves a photon between two cavities.

        Args:
            basis (SectorBasis): Sector basis of the schedule.
            pair (tuple(int, int)): The two cavities exchanging the photon.
            timings (GateTimings): Gate timings. ``nu`` and ``delta_tau`` are used.
            couplings (list[float]): Atom-field coupling of each cavity.
            g_during_jump (bool): If false, the atom-field coupling is off
                during the jump window.
        Returns:
            Segment: The jump segment.
        '''
        pass
