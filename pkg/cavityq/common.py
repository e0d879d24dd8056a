# common: cavityq common library
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
import csv
import os
from enum import Enum

import yaml

PROCESS_NAME = 'CavityQ'
'''Name of the process logger. Library modules log through its children.
'''

FORMAT_VERSION = 1
'''Version of every table and summary document written by cavityq.
'''

FORMAT_VERSION_KEY = 'format_version'
'''Key of the format version in tables and summary documents.
'''

LOGICAL_OPERATOR_FILE = 'logical_operator.csv'
'''Name of the logical operator table.
'''

SUMMARY_FILE = 'summary.yaml'
'''Name of the structured summary document.
'''

TRAJECTORY_FILE = 'trajectory_{}.csv'
'''Name template of a trajectory table. The logical input label is inserted.
'''

TIMELINE_FILE = 'timeline.csv'
'''Name of the schedule timeline table.
'''

SEARCH_FILE = 'search.csv'
'''Name of the timing search table.
'''

SWEEP_FILE = 'sweep.csv'
'''Name of the parameter sweep table.
'''

FEASIBILITY_FILE = 'feasibility.csv'
'''Name of the feasibility table.
'''

BASIS_FILE = 'basis.txt'
'''Name of the basis dump.
'''

CAVITY_X = 0
CAVITY_Y = 1
CAVITY_AUX = 2
CAVITY_NAMES = ('x', 'y', 'aux')
'''Cavity order used by every basis state.
'''

LOGICAL_INPUTS = ((0, 0), (0, 1), (1, 0), (1, 1))
'''Computational basis of the two logical qubits, in matrix order.
'''

LOGICAL_LABELS = tuple('{}{}'.format(qx, qy) for qx, qy in LOGICAL_INPUTS)


class MODE(Enum):
    '''Realisation of the photon jumps.
    '''
    IDEAL = 'ideal'
    PHYSICAL = 'physical'


class SEGMENT_LABEL(Enum):
    '''Labels of schedule segments.
    '''
    JUMP = 'jump'
    WAIT = 'wait'
    FINAL_WAIT = 'final-wait'


class EXIT_STATUS(Enum):
    '''Exit status of the command line tool.
    '''
    SUCCESS = 0
    PHYSICS_ERROR = 1
    CONFIG_ERROR = 2


class MESSAGES(Enum):
    ''' List of console messages.
    '''
    UNSUPPORTED_FORMAT_VERSION = 'Unsupported format version in {}: {}'
    MISSING_FORMAT_VERSION = 'The format version is not found in {}'


class CavityQError(Exception):
    '''Base class of all errors raised by cavityq.
    '''
    pass


class ConfigError(CavityQError):
    '''Invalid configuration file or command line argument.
    '''
    pass


class PhysicsError(CavityQError):
    '''A physical precondition or bookkeeping assertion failed.
    '''
    pass


class PreconditionError(PhysicsError):
    pass


class TraceInvalidError(PhysicsError):
    pass


class NonHermitianError(PhysicsError):
    pass


class BasisMismatchError(PhysicsError):
    pass


class InvalidQueryError(PhysicsError):
    pass


class DomainError(PhysicsError):
    pass


def format_value(value: object) -> str:
    '''It converts a table value to its stable text form.

    Floats are written with ``repr`` so that identical runs produce
    byte-identical tables.

    Args:
        value (object): A table value.
    Returns:
        str: Text form of the value.
    '''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ''
    return str(value)


def write_table(path: str, header: list, rows: list) -> None:
    '''It writes a comma separated table with a version line and a header row.

    Args:
        path (str): Output file path.
        header (list[str]): Column names.
        rows (list[list[obj]]): Table rows.
    '''
    with open(path, mode='w', newline='') as f:
        f.write('# {}={}\n'.format(FORMAT_VERSION_KEY, FORMAT_VERSION))
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


def read_table(path: str) -> list:
    '''It reads a table written by ``write_table``.

    Args:
        path (str): Table file path.
    Returns:
        list[dict[str, str]]: Rows keyed by column name.
    '''
    with open(path, mode='r', newline='') as f:
        first = f.readline().strip()
        if not first.startswith('#') or FORMAT_VERSION_KEY not in first:
            raise ConfigError(MESSAGES.MISSING_FORMAT_VERSION.value.format(path))
        version = first.split('=', 1)[1].strip()
        if int(version) != FORMAT_VERSION:
            raise ConfigError(MESSAGES.UNSUPPORTED_FORMAT_VERSION.value.format(path, version))
        return list(csv.DictReader(f))


def write_summary(path: str, summary: dict) -> None:
    '''It writes a structured summary document.

    Args:
        path (str): Output file path.
        summary (dict[str, obj]): Summary contents. Values must be plain
            python types.
    '''
    document = {FORMAT_VERSION_KEY: FORMAT_VERSION}
    document.update(summary)
    with open(path, mode='w') as f:
        yaml.safe_dump(document, f, default_flow_style=False, sort_keys=False)


def read_summary(path: str) -> dict:
    '''It reads a summary document written by ``write_summary``.

    Args:
        path (str): Summary file path.
    Returns:
        dict[str, obj]: Summary contents including the format version.
    '''
    with open(path, mode='r') as f:
        document = yaml.safe_load(f)
    if not isinstance(document, dict) or FORMAT_VERSION_KEY not in document:
        raise ConfigError(MESSAGES.MISSING_FORMAT_VERSION.value.format(path))
    if document[FORMAT_VERSION_KEY] != FORMAT_VERSION:
        raise ConfigError(MESSAGES.UNSUPPORTED_FORMAT_VERSION.value.format(
            path, document[FORMAT_VERSION_KEY]))
    return document


def output_path(directory: str, name: str) -> str:
    '''It returns a path under the output directory, creating the directory.

    Args:
        directory (str): Output directory.
        name (str): File name.
    Returns:
        str: Combined path.
    '''
    directory = os.path.expanduser(directory)
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)
