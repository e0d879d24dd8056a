# interface: cavityq jump model interface
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
from enum import Enum
from typing import Sequence, Tuple

from .base import AbstractJumpModel
from .common import ConfigError
from .hilbert import SectorBasis
from .propagate import Segment
# Import of jump model implementations
from .jumps import IdealJumpModel, PhysicalJumpModel


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    UNSUPPORTED_MODE_NAME = 'The jump mode is not supported: {}'


JUMP_MODEL_IMPL_LIST = [
    IdealJumpModel,
    PhysicalJumpModel
]


class JumpModelAccessor(AbstractJumpModel):
    '''The accessor of the photon jump interface
    '''

    @property
    def MODE_NAME(self) -> str:
        '''It returns the mode name of the selected model
        '''
        return self.target.MODE_NAME

    def __init__(self, mode: str) -> None:
        '''Constructor

        Args:
            mode (str) : the jump mode name
        '''
        self.target = None
        for name in JUMP_MODEL_IMPL_LIST:
            obj = name()
            if (mode == obj.MODE_NAME):
                self.target = obj
                break

        if not self.target:
            raise ConfigError(MESSAGES.UNSUPPORTED_MODE_NAME.value.format(mode))

    def build_jump(self, basis: SectorBasis, pair: Tuple[int, int], timings: object,
                   couplings: Sequence[float], g_during_jump: bool) -> Segment:
        '''It builds a jump segment with the selected model.
        '''
        return self.target.build_jump(basis, pair, timings, couplings, g_during_jump)
