# oracle: symbolic phase bookkeeping of the coCSign gate
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
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np

from .common import PROCESS_NAME, CAVITY_X, CAVITY_Y, CAVITY_AUX, CAVITY_NAMES, \
    LOGICAL_INPUTS, SEGMENT_LABEL, TraceInvalidError, PreconditionError

logger = logging.getLogger(PROCESS_NAME).getChild('oracle')

QUARTERS_PER_TURN = 4
'''Number of -pi/2 units in a full turn.
'''

GATE_SEGMENTS = 7
'''Segments of the gate proper. The eighth is the final tau1/2 wait.
'''


class TAG(Enum):
    '''Occupation of one cavity.
    '''
    E = 'empty'
    P = 'photon'
    A = 'atom'
    D = 'photon+atom'

    @property
    def excitation(self) -> int:
        return TAG_EXCITATION[self]

    @property
    def has_photon(self) -> bool:
        return self in (TAG.P, TAG.D)


TAG_EXCITATION = {TAG.E: 0, TAG.P: 1, TAG.A: 1, TAG.D: 2}


class DURATION(Enum):
    '''Duration classes of the waits.
    '''
    HALF = 'tau1/2'
    LONG = '2n2tau2'


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    HALF_WAIT_ON_DOUBLE = 'A tau1/2 wait reached a doubly excited cavity'
    TWO_PHOTONS = 'Two photons across the jump pair: ({}, {})'
    EXCITATION_CHANGED = 'Excitation changed from {} to {} at segment {}'
    NOT_LOGICAL = 'The trace ended outside the logical encoding: {}'
    INVALID_BIT = 'Logical bits must be 0 or 1: ({}, {})'


@dataclass(frozen=True)
class TraceState:
    '''Cavity tags in (x, y, aux) order and the accumulated -pi/2 units.
    '''
    tags: Tuple[TAG, ...]
    phase_quarters: int = 0

    @property
    def excitation(self) -> int:
        return sum(tag.excitation for tag in self.tags)

    def label(self) -> str:
        return ' '.join(tag.name for tag in self.tags)


@dataclass(frozen=True)
class TraceStep:
    segment: int
    kind: str
    target: str
    state: TraceState
    delta: int


@dataclass
class TraceResult:
    '''Outcome of one symbolic replay.
    '''
    inputs: Tuple[int, int]
    outputs: Tuple[int, int]
    phase_quarters: int
    gate_outputs: Tuple[int, int]
    gate_quarters: int
    steps: List[TraceStep] = field(default_factory=list)

    def reached_double(self) -> List[int]:
        '''It returns the cavities that ever held a double excitation.
        '''
        cavities = set()
        for step in self.steps:
            for k, tag in enumerate(step.state.tags):
                if tag is TAG.D:
                    cavities.add(k)
        return sorted(cavities)


def rule_wait_half(tag: TAG) -> Tuple[TAG, int]:
    '''A tau1/2 wait swaps photon and atom with -pi/2.
    '''
    if tag is TAG.D:
        raise TraceInvalidError(MESSAGES.HALF_WAIT_ON_DOUBLE.value)
    if tag is TAG.P:
        return TAG.A, 1
    if tag is TAG.A:
        return TAG.P, 1
    return TAG.E, 0


def rule_wait_long(tag: TAG) -> Tuple[TAG, int]:
    '''A 2 n2 tau2 wait acts as tau1/2 on single and as identity on double excitations.
    '''
    if tag is TAG.D:
        return TAG.D, 0
    return rule_wait_half(tag)


def rule_jump(tag_i: TAG, tag_j: TAG) -> Tuple[TAG, TAG, int]:
    '''It moves the only photon of a pair to the other cavity with -pi/2.

    Raises:
        TraceInvalidError: Both cavities hold a photon.
    '''
    if tag_i.has_photon and tag_j.has_photon:
        raise TraceInvalidError(MESSAGES.TWO_PHOTONS.value.format(tag_i.name, tag_j.name))
    if not tag_i.has_photon and not tag_j.has_photon:
        return tag_i, tag_j, 0
    if tag_j.has_photon:
        tag_j, tag_i, delta = rule_jump(tag_j, tag_i)
        return tag_i, tag_j, delta
    lose = {TAG.P: TAG.E, TAG.D: TAG.A}
    gain = {TAG.E: TAG.P, TAG.A: TAG.D}
    return lose[tag_i], gain[tag_j], 1


def _cocsign_program() -> list:
    '''Segments of the gate as (kind, argument) pairs.
    '''
    jump_x = (SEGMENT_LABEL.JUMP.value, (CAVITY_AUX, CAVITY_X))
    jump_y = (SEGMENT_LABEL.JUMP.value, (CAVITY_AUX, CAVITY_Y))
    return [jump_x, (SEGMENT_LABEL.WAIT.value, DURATION.HALF),
            jump_y, (SEGMENT_LABEL.WAIT.value, DURATION.LONG),
            jump_x, (SEGMENT_LABEL.WAIT.value, DURATION.HALF),
            jump_y, (SEGMENT_LABEL.FINAL_WAIT.value, DURATION.HALF)]


def encode_tags(qx: int, qy: int) -> Tuple[TAG, ...]:
    if qx not in (0, 1) or qy not in (0, 1):
        raise PreconditionError(MESSAGES.INVALID_BIT.value.format(qx, qy))
    bit = {0: TAG.A, 1: TAG.P}
    return bit[qx], bit[qy], TAG.E


def decode_tags(tags: Sequence[TAG]) -> Tuple[int, int]:
    bit = {TAG.A: 0, TAG.P: 1}
    if tags[CAVITY_AUX] is not TAG.E or tags[CAVITY_X] not in bit or tags[CAVITY_Y] not in bit:
        raise TraceInvalidError(MESSAGES.NOT_LOGICAL.value.format(' '.join(t.name for t in tags)))
    return bit[tags[CAVITY_X]], bit[tags[CAVITY_Y]]


def trace_cocsign(qx: int, qy: int) -> TraceResult:
    '''It replays the coCSign schedule on one logical input.

    Args:
        qx (int): Bit of cavity x.
        qy (int): Bit of cavity y.
    Returns:
        TraceResult: Final bits and phase, the bits and phase after the
            gate segments, and the per-segment log.
    Raises:
        TraceInvalidError: A rule was applied outside its domain.
    '''
    logger.debug('trace_cocsign start. input=|{}{}>'.format(qx, qy))
    state = TraceState(encode_tags(qx, qy))
    excitation = state.excitation
    steps = []
    gate_outputs, gate_quarters = None, None
    for number, (kind, argument) in enumerate(_cocsign_program(), start=1):
        tags = list(state.tags)
        if kind == SEGMENT_LABEL.JUMP.value:
            i, j = argument
            tags[i], tags[j], delta = rule_jump(tags[i], tags[j])
            target = '-'.join(CAVITY_NAMES[k] for k in argument)
        else:
            rule = rule_wait_long if argument is DURATION.LONG else rule_wait_half
            delta = 0
            for k, tag in enumerate(tags):
                tags[k], d = rule(tag)
                delta += d
            target = argument.value
        state = TraceState(tuple(tags), state.phase_quarters + delta)
        if state.excitation != excitation:
            raise TraceInvalidError(MESSAGES.EXCITATION_CHANGED.value.format(
                excitation, state.excitation, number))
        steps.append(TraceStep(number, kind, target, state, delta))
        if number == GATE_SEGMENTS:
            gate_outputs = decode_tags(state.tags)
            gate_quarters = state.phase_quarters

    result = TraceResult((qx, qy), decode_tags(state.tags), state.phase_quarters,
                         gate_outputs, gate_quarters, steps)
    logger.debug('trace_cocsign ended. output=|{}{}> quarters={}'.format(
        result.outputs[0], result.outputs[1], result.phase_quarters))
    return result


def quarters_to_phase(quarters: int) -> complex:
    '''It returns exp(-i pi/2 * quarters) exactly.
    '''
    return (1, -1j, -1, 1j)[quarters % QUARTERS_PER_TURN]


def format_phase(quarters: int) -> str:
    '''It names the phase -quarters * pi/2 modulo 2 pi.
    '''
    return ('0', '-pi/2', 'pi', 'pi/2')[quarters % QUARTERS_PER_TURN]


def format_phase_addition(quarters: int) -> str:
    '''It names the phase -quarters * pi/2 reduced to (-2 pi, 0].
    '''
    return ('0', '-pi/2', '-pi', '-3pi/2')[quarters % QUARTERS_PER_TURN]


def logical_operator_from_traces(traces: Sequence[TraceResult] = None) -> np.ndarray:
    '''It assembles the 4x4 logical operator of the symbolic replays.

    Args:
        traces (list[TraceResult]): Replays of all logical inputs. They are
            computed when omitted.
    Returns:
        numpy.ndarray: Entry (out, in) is the phase of the replay of ``in``.
    '''
    if traces is None:
        traces = [trace_cocsign(qx, qy) for qx, qy in LOGICAL_INPUTS]
    operator = np.zeros((len(LOGICAL_INPUTS), len(LOGICAL_INPUTS)), dtype=complex)
    for trace in traces:
        column = LOGICAL_INPUTS.index(trace.inputs)
        row = LOGICAL_INPUTS.index(trace.outputs)
        operator[row, column] = quarters_to_phase(trace.phase_quarters)
    return operator


def format_trace(result: TraceResult) -> str:
    '''It renders a replay as an aligned text table.
    '''
    lines = ['input |{}{}>'.format(*result.inputs),
             '{:>3}  {:<10}  {:<8}  {:<3} {:<3} {:<3}  {:>6}  {:>7}'.format(
                 'seg', 'kind', 'target', *[name.upper() for name in CAVITY_NAMES],
                 'dphase', 'phase')]
    for step in result.steps:
        lines.append('{:>3}  {:<10}  {:<8}  {:<3} {:<3} {:<3}  {:>6}  {:>7}'.format(
            step.segment, step.kind, step.target, *[tag.name for tag in step.state.tags],
            format_phase_addition(step.delta),
            format_phase_addition(step.state.phase_quarters)))
        if step.segment == GATE_SEGMENTS:
            lines.append('gate |{}{}> -> |{}{}>, phase addition {}'.format(
                *result.inputs, *result.gate_outputs,
                format_phase_addition(result.gate_quarters)))
    lines.append('result |{}{}> -> |{}{}>, phase addition {}'.format(
        *result.inputs, *result.outputs, format_phase_addition(result.phase_quarters)))
    return '\n'.join(lines)


def format_summary(traces: Sequence[TraceResult]) -> str:
    '''It states the common phase and the relative signs of all replays.
    '''
    common = traces[0].phase_quarters
    flipped = ['|{}{}>'.format(*t.inputs) for t in traces
               if (t.phase_quarters - common) % QUARTERS_PER_TURN]
    line = 'common phase addition {}'.format(format_phase(common))
    if flipped:
        line += ', relative phase -pi on {}'.format(', '.join(flipped))
    return line
