# client: cavityq command line tool
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
import argparse
import configparser
import dataclasses
import logging
import os
import sys
import traceback
from enum import Enum

from .analysis import GateSettings, simulate_gate, build_grid, sweep, format_sweep
from .analysis import feasibility, format_feasibility
from .common import PROCESS_NAME, MODE, EXIT_STATUS, LOGICAL_INPUTS, LOGICAL_LABELS
from .common import LOGICAL_OPERATOR_FILE, SUMMARY_FILE, TRAJECTORY_FILE, TIMELINE_FILE
from .common import SEARCH_FILE, SWEEP_FILE, FEASIBILITY_FILE, BASIS_FILE
from .common import ConfigError, PhysicsError, write_table, write_summary, output_path
from .hilbert import format_basis, logical_sector
from .jch import PhysicalParams, CavityGeometry, coupling_from_geometry, rabi_periods, rwa_ok
from .oracle import trace_cocsign, format_trace, format_summary
from .propagate import format_trajectory
from .schedule import GateTimings, JitterModel, find_n1n2, continued_fraction_candidates
from .schedule import format_timeline, JUMP_WINDOW_RATIO

LOG_FILE = 'cavityqcli.log'
'''File path of log file.
'''
LOG_FILE_FORMAT = '%(asctime)s : %(levelname)-8s : %(message)s'
'''Format of log file.
'''
LOG_STDOUT_FORMAT = '%(message)s'
'''Format of stdout.
'''
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')
'''Log levels accepted from the command line.
'''
CONFIG_FILE = 'config.ini'
'''File name of the default configuration file.
'''
CONFIG_FILE_ENCODING = 'utf-8'
'''Encoding of configuration file.
'''
DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
'''Directory of the packaged default configuration.
'''
SEARCH_SHOW_ROWS = 10
'''Number of ranked timing candidates shown by the search command.
'''

CONFIG_PARAMS = [
    {'section': 'default',     'key': 'log_level',
     'type': str, 'mandatory': False, 'default': 'INFO', 'choices': LOG_LEVELS},
    {'section': 'gate',        'key': 'mode',
     'type': str, 'mandatory': False, 'default': MODE.IDEAL.value,
     'choices': tuple(m.value for m in MODE)},
    {'section': 'gate',        'key': 'g',
     'type': float, 'mandatory': False, 'default': '1.0', 'min': 0.0, 'exclusive': True},
    {'section': 'gate',        'key': 'nu',
     'type': float, 'mandatory': False, 'default': '100.0', 'min': 0.0, 'exclusive': True},
    {'section': 'gate',        'key': 'n1',
     'type': int, 'mandatory': False, 'default': '4', 'min': 0},
    {'section': 'gate',        'key': 'n2',
     'type': int, 'mandatory': False, 'default': '6', 'min': 0},
    {'section': 'gate',        'key': 'search_bound',
     'type': int, 'mandatory': False, 'default': '0', 'min': 0},
    {'section': 'gate',        'key': 'n_max',
     'type': int, 'mandatory': False, 'default': '2', 'min': 1},
    {'section': 'gate',        'key': 'g_during_jump',
     'type': bool, 'mandatory': False, 'default': 'true'},
    {'section': 'gate',        'key': 'compensate',
     'type': bool, 'mandatory': False, 'default': 'false'},
    {'section': 'gate',        'key': 'exact_timing',
     'type': bool, 'mandatory': False, 'default': 'false'},
    {'section': 'jitter',      'key': 'sigma',
     'type': float, 'mandatory': False, 'default': '0.0', 'min': 0.0},
    {'section': 'jitter',      'key': 'seed',
     'type': int, 'mandatory': False, 'default': '0', 'min': 0},
    {'section': 'jitter',      'key': 'include_jumps',
     'type': bool, 'mandatory': False, 'default': 'false'},
    {'section': 'physical',    'key': 'enabled',
     'type': bool, 'mandatory': False, 'default': 'false'},
    {'section': 'physical',    'key': 'hbar',
     'type': float, 'mandatory': False, 'default': '1.054571817e-34', 'min': 0.0,
     'exclusive': True},
    {'section': 'physical',    'key': 'omega',
     'type': float, 'mandatory': False, 'default': '1.0e10', 'min': 0.0, 'exclusive': True},
    {'section': 'physical',    'key': 'V',
     'type': float, 'mandatory': False, 'default': '1.0e-15', 'min': 0.0, 'exclusive': True},
    {'section': 'physical',    'key': 'd',
     'type': float, 'mandatory': False, 'default': '1.0e-29', 'min': 0.0, 'exclusive': True},
    {'section': 'physical',    'key': 'x',
     'type': float, 'mandatory': False, 'default': '0.5e-6', 'min': 0.0},
    {'section': 'physical',    'key': 'L',
     'type': float, 'mandatory': False, 'default': '1.0e-6', 'min': 0.0, 'exclusive': True},
    {'section': 'physical',    'key': 'wavelength',
     'type': float, 'mandatory': False, 'default': '2.0e-6', 'min': 0.0, 'exclusive': True},
    {'section': 'physical',    'key': 'n_half_waves',
     'type': int, 'mandatory': False, 'default': '1', 'min': 1},
    {'section': 'physical',    'key': 'nu',
     'type': float, 'mandatory': False, 'default': '1.0e-31', 'min': 0.0, 'exclusive': True},
    {'section': 'sweep',       'key': 'nu_over_g',
     'type': list, 'item': float, 'mandatory': False, 'default': '100', 'min': 0.0,
     'exclusive': True},
    {'section': 'sweep',       'key': 'sigma',
     'type': list, 'item': float, 'mandatory': False, 'default': '0.0', 'min': 0.0},
    {'section': 'sweep',       'key': 'timings',
     'type': list, 'item': tuple, 'mandatory': False, 'default': '4:6'},
    {'section': 'sweep',       'key': 'g_during_jump',
     'type': list, 'item': bool, 'mandatory': False, 'default': 'true'},
    {'section': 'sweep',       'key': 'seeds',
     'type': list, 'item': int, 'mandatory': False, 'default': '0', 'min': 0},
    {'section': 'sweep',       'key': 'workers',
     'type': int, 'mandatory': False, 'default': '1', 'min': 1},
    {'section': 'feasibility', 'key': 'omega',
     'type': float, 'mandatory': False, 'default': '1.0e10', 'min': 0.0, 'exclusive': True},
    {'section': 'feasibility', 'key': 'delta_omega',
     'type': float, 'mandatory': False, 'default': '1.0e9', 'min': 0.0, 'exclusive': True},
    {'section': 'feasibility', 'key': 'tau1',
     'type': float, 'mandatory': False, 'default': '1.0e-6', 'min': 0.0, 'exclusive': True},
    {'section': 'feasibility', 'key': 'delta_tau',
     'type': float, 'mandatory': False, 'default': '1.0e-9', 'min': 0.0, 'exclusive': True},
    {'section': 'feasibility', 'key': 'upper_ratio',
     'type': float, 'mandatory': False, 'default': '100', 'min': 0.0, 'exclusive': True},
    {'section': 'output',      'key': 'directory',
     'type': str, 'mandatory': False, 'default': './cavityq_output'},
]
'''Definition of configuration parameters.
'''


class MESSAGES(Enum):
    ''' List of console messages.
    '''

    # success
    SIMULATE_COMPLETED = 'fidelity={:.9f} leakage={:.6e} residual={:.6g}'
    FILE_WRITTEN = 'Saved as {}.'

    # information
    TIMING_SELECTED = 'Timing integers selected by search: n1={}, n2={}'
    PHYSICAL_UNITS = 'Physical units: g={:.6e} nu={:.6e} tau1={:.6e}'
    SEARCH_ROW = '{:>6} {:>6} {:>14.9f} {}'
    FEASIBILITY_ROW = '{} = {}'

    # error
    CONFIG_PARAM_NOT_SPECIFIED = 'Mandatory configuration parameter is not specified: [{}] {}'
    INVALID_CONFIG_PARAM = 'Invalid configuration parameter: [{}] {} = {}'
    UNKNOWN_CONFIG_SECTION = 'Unknown configuration section: [{}]'
    UNKNOWN_CONFIG_PARAM = 'Unknown configuration parameter: [{}] {}'
    MALFORMED_CONFIG = 'The configuration file cannot be parsed: {}'
    NO_CONFIG_FILE = 'The configuration file is not found: {}'
    NO_TIMING = 'n1 and n2 must both be positive, or both 0 with search_bound > 0'
    NO_SEARCH_BOUND = 'The search bound must be positive: {}'


logger = logging.getLogger(PROCESS_NAME)


def _parse_item(kind: type, text: str) -> object:
    text = text.strip()
    if kind is bool:
        value = text.lower()
        if value not in configparser.ConfigParser.BOOLEAN_STATES:
            raise ValueError(text)
        return configparser.ConfigParser.BOOLEAN_STATES[value]
    if kind is tuple:
        n1, n2 = text.split(':')
        return int(n1), int(n2)
    return kind(text)


def get_list(config: configparser.ConfigParser, section: str, key: str) -> list:
    '''It returns a comma separated configuration value as a typed list.
    '''
    for param in CONFIG_PARAMS:
        if param['section'] == section and param['key'] == key:
            return [_parse_item(param['item'], item)
                    for item in config.get(section, key).split(',') if item.strip()]
    raise ConfigError(MESSAGES.UNKNOWN_CONFIG_PARAM.value.format(section, key))


def _check_config(config: configparser.ConfigParser) -> None:
    '''It checks configuration parameters.

    Missing optional parameters are set to their default values.

    Args:
        config (configparser.ConfigParser): CavityQ configuration.
    Raises:
        ConfigError: A parameter is unknown, missing or invalid.
    '''
    known = {}
    for param in CONFIG_PARAMS:
        known.setdefault(param['section'], set()).add(param['key'])
    for section in config.sections():
        if section not in known:
            raise ConfigError(MESSAGES.UNKNOWN_CONFIG_SECTION.value.format(section))
        for key in config[section]:
            if key not in known[section]:
                raise ConfigError(MESSAGES.UNKNOWN_CONFIG_PARAM.value.format(section, key))

    for param in CONFIG_PARAMS:
        # check existance of section
        if not param['section'] in config.sections():
            # create empty section
            config[param['section']] = {}

        if not config.has_option(param['section'], param['key']):
            if param['mandatory']:
                raise ConfigError(MESSAGES.CONFIG_PARAM_NOT_SPECIFIED.value.format(
                    param['section'], param['key']))
            config[param['section']][param['key']] = param['default']

        raw = config.get(param['section'], param['key'])
        try:
            if param['type'] is list:
                value = get_list(config, param['section'], param['key'])
            else:
                value = _parse_item(param['type'], raw)
        except ValueError:
            raise ConfigError(MESSAGES.INVALID_CONFIG_PARAM.value.format(
                param['section'], param['key'], raw))

        invalid = False
        for v in (value if param['type'] is list else [value]):
            if 'choices' in param and v not in param['choices']:
                invalid = True
            if 'min' in param:
                if param.get('exclusive') and not v > param['min']:
                    invalid = True
                elif v < param['min']:
                    invalid = True
        if invalid:
            raise ConfigError(MESSAGES.INVALID_CONFIG_PARAM.value.format(
                param['section'], param['key'], raw))


def show_config(config: configparser.ConfigParser) -> None:
    '''It show configuration parameters.

    Args:
        config (configparser.ConfigParser): CavityQ configuration.
    '''
    for param in CONFIG_PARAMS:
        logger.info('section={}, key={}, value={}'.format(
            param['section'], param['key'],
            config.get(param['section'], param['key'], fallback=None)
        ))


def load_config(path: str = None) -> configparser.ConfigParser:
    '''It reads and validates a configuration file.

    Args:
        path (str): Configuration file. The packaged default is used when omitted.
    Returns:
        configparser.ConfigParser: Validated configuration with defaults filled in.
    Raises:
        ConfigError: The file is missing, malformed or invalid.
    '''
    if path is None:
        path = os.path.join(DATA_DIR, CONFIG_FILE)
    if not os.path.isfile(path):
        raise ConfigError(MESSAGES.NO_CONFIG_FILE.value.format(path))

    # keys are case sensitive (V, L)
    config = configparser.ConfigParser()
    config.optionxform = str
    try:
        config.read(path, encoding=CONFIG_FILE_ENCODING)
    except configparser.Error as e:
        raise ConfigError(MESSAGES.MALFORMED_CONFIG.value.format(e))
    _check_config(config)
    return config


def _physical_units(config: configparser.ConfigParser) -> dict:
    '''It converts the physical section to the natural unit system once.
    '''
    section = config['physical']
    hbar = section.getfloat('hbar')
    geometry = CavityGeometry(V=section.getfloat('V'), d=section.getfloat('d'),
                              x=section.getfloat('x'), L=section.getfloat('L'),
                              wavelength=section.getfloat('wavelength'),
                              n_half_waves=section.getint('n_half_waves'))
    params = PhysicalParams(omega=section.getfloat('omega'), g=1.0, nu=section.getfloat('nu'),
                            hbar=hbar)
    g = coupling_from_geometry(params, geometry)
    params = dataclasses.replace(params, g=g)
    tau1 = rabi_periods(g, hbar)[0]
    logger.info(MESSAGES.PHYSICAL_UNITS.value.format(g, params.nu, tau1))
    return {'g': g, 'nu': params.nu, 'nu_over_g': params.nu / g, 'tau1_seconds': tau1,
            'rwa_ratio': params.rwa_ratio, 'rwa_ok': rwa_ok(params)}


def gate_settings(config: configparser.ConfigParser, args: argparse.Namespace = None) -> tuple:
    '''It builds the gate settings of a run.

    Args:
        config (configparser.ConfigParser): Validated configuration.
        args (argparse.Namespace): Command line overrides.
    Returns:
        tuple(GateSettings, dict): Settings in natural units and the
            physical-unit quantities reported in the summary.
    '''
    gate = config['gate']
    overrides = vars(args) if args is not None else {}
    mode = overrides.get('mode') or gate.get('mode')
    n1 = overrides.get('n1') if overrides.get('n1') is not None else gate.getint('n1')
    n2 = overrides.get('n2') if overrides.get('n2') is not None else gate.getint('n2')
    bound = overrides.get('search_bound') if overrides.get('search_bound') is not None \
        else gate.getint('search_bound')

    if n1 == 0 and n2 == 0 and bound > 0:
        best = find_n1n2(bound)[0]
        n1, n2 = best.n1, best.n2
        logger.info(MESSAGES.TIMING_SELECTED.value.format(n1, n2))
    elif n1 < 1 or n2 < 1:
        raise ConfigError(MESSAGES.NO_TIMING.value)

    units = {}
    g = gate.getfloat('g')
    nu = gate.getfloat('nu')
    if config['physical'].getboolean('enabled'):
        units = _physical_units(config)
        g, nu = 1.0, units['nu_over_g']

    jitter = None
    if config['jitter'].getfloat('sigma') > 0:
        jitter = JitterModel(config['jitter'].getfloat('sigma'), config['jitter'].getint('seed'),
                             config['jitter'].getboolean('include_jumps'))
    settings = GateSettings(timings=GateTimings(n1, n2, g=g, nu=nu), mode=mode,
                            g_during_jump=gate.getboolean('g_during_jump'),
                            compensate=gate.getboolean('compensate'),
                            exact_timing=gate.getboolean('exact_timing'),
                            n_max=gate.getint('n_max'), jitter=jitter)
    return settings, units


def _output_dir(config: configparser.ConfigParser, args: argparse.Namespace) -> str:
    return getattr(args, 'output', None) or config['output']['directory']


def _write_table(directory: str, name: str, table: tuple) -> str:
    path = output_path(directory, name)
    write_table(path, *table)
    logger.debug(MESSAGES.FILE_WRITTEN.value.format(path))
    return path


def cmd_simulate(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It simulates the gate on all logical inputs and writes the results.

    Args:
        config (configparser.ConfigParser): CavityQ configuration.
        args (argparse.Namespace): Arguments of the subcommand.
    '''
    logger.debug('cmd_simulate start.')
    settings, units = gate_settings(config, args)
    run = simulate_gate(settings)
    timings = settings.timings
    directory = _output_dir(config, args)

    rows = []
    for column, q in enumerate(LOGICAL_LABELS):
        for row, q_out in enumerate(LOGICAL_LABELS):
            value = run.operator.entries[row, column]
            rows.append([q_out, q, float(value.real), float(value.imag), float(abs(value))])
    _write_table(directory, LOGICAL_OPERATOR_FILE, (['out', 'in', 're', 'im', 'abs'], rows))
    for label, trajectory in run.trajectories.items():
        _write_table(directory, TRAJECTORY_FILE.format(label), format_trajectory(trajectory))
    _write_table(directory, TIMELINE_FILE, format_timeline(run.segments))

    report = run.report
    summary = {
        'command': 'simulate',
        'mode': settings.mode,
        'n1': timings.n1,
        'n2': timings.n2,
        'g': timings.g,
        'nu': timings.nu,
        'g_during_jump': settings.g_during_jump,
        'compensate': settings.compensate,
        'exact_timing': settings.exact_timing,
        'residual': timings.residual_ratio,
        'window_ok': (settings.mode == MODE.IDEAL.value or
                      timings.delta_tau <= timings.tau1 / JUMP_WINDOW_RATIO),
        'avg_gate_fidelity': report.avg_gate_fidelity,
        'leakage': report.leakage,
        'phase_profile': dict(zip(LOGICAL_LABELS, report.phase_profile)),
        'phase_quarters': dict(zip(LOGICAL_LABELS, report.phase_quarters)),
        'global_phase': report.global_phase,
        'unitarity_error': run.unitarity_error,
        'energy_drift': run.energy_drift,
    }
    if settings.jitter is not None:
        summary['jitter'] = {'sigma': settings.jitter.sigma, 'seed': settings.jitter.seed,
                             'include_jumps': settings.jitter.include_jumps}
    if units:
        summary['physical'] = units
    write_summary(output_path(directory, SUMMARY_FILE), summary)

    logger.info(MESSAGES.SIMULATE_COMPLETED.value.format(
        report.avg_gate_fidelity, report.leakage, timings.residual_ratio))
    logger.debug('cmd_simulate ended.')


def cmd_oracle(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It prints the symbolic phase table of all logical inputs.
    '''
    traces = [trace_cocsign(qx, qy) for qx, qy in LOGICAL_INPUTS]
    for trace in traces:
        logger.info(format_trace(trace))
        logger.info('')
    logger.info(format_summary(traces))


def cmd_search(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It ranks the timing integers and writes the search table.
    '''
    bound = args.bound if args.bound is not None else config['gate'].getint('search_bound')
    if bound < 1:
        raise ConfigError(MESSAGES.NO_SEARCH_BOUND.value.format(bound))
    candidates = find_n1n2(bound)
    by_fraction = {(c.n1, c.n2) for c in continued_fraction_candidates(bound)}

    logger.info('{:>6} {:>6} {:>14} {}'.format('n1', 'n2', 'residual', 'continued_fraction'))
    for c in candidates[:args.top]:
        logger.info(MESSAGES.SEARCH_ROW.value.format(c.n1, c.n2, c.residual,
                                                     (c.n1, c.n2) in by_fraction))
    rows = [[c.n1, c.n2, c.residual, (c.n1, c.n2) in by_fraction] for c in candidates]
    _write_table(_output_dir(config, args), SEARCH_FILE,
                 (['n1', 'n2', 'residual', 'continued_fraction'], rows))


def cmd_sweep(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It evaluates the configured parameter grid.
    '''
    settings, _ = gate_settings(config, args)
    grid = build_grid(get_list(config, 'sweep', 'nu_over_g'),
                      get_list(config, 'sweep', 'sigma'),
                      get_list(config, 'sweep', 'timings'),
                      get_list(config, 'sweep', 'g_during_jump'),
                      get_list(config, 'sweep', 'seeds'))
    workers = args.workers if args.workers is not None else config['sweep'].getint('workers')
    rows = sweep(grid, settings, workers)
    directory = _output_dir(config, args)
    _write_table(directory, SWEEP_FILE, format_sweep(rows))

    summary = {'command': 'sweep', 'mode': settings.mode, 'points': len(rows)}
    if rows:
        best = max(rows, key=lambda r: r.report.avg_gate_fidelity)
        summary['best'] = {'index': best.index, 'avg_gate_fidelity': best.report.avg_gate_fidelity}
    write_summary(output_path(directory, SUMMARY_FILE), summary)
    for row in rows:
        logger.info('{} fidelity={:.9f} leakage={:.3e}'.format(
            row.point, row.report.avg_gate_fidelity, row.report.leakage))


def cmd_feasibility(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It evaluates the time window of the photon jump switch.
    '''
    section = config['feasibility']
    delta_tau = args.delta_tau if args.delta_tau is not None else section.getfloat('delta_tau')
    report = feasibility(section.getfloat('omega'), section.getfloat('delta_omega'),
                         section.getfloat('tau1'), delta_tau, section.getfloat('upper_ratio'))
    header, rows = format_feasibility(report)
    for key, value in zip(header, rows[0]):
        logger.info(MESSAGES.FEASIBILITY_ROW.value.format(key, value))
    _write_table(_output_dir(config, args), FEASIBILITY_FILE, (header, rows))


def cmd_basis(config: configparser.ConfigParser, args: argparse.Namespace) -> None:
    '''It dumps the basis of the logical sector.
    '''
    basis = logical_sector(config['gate'].getint('n_max'))
    text = format_basis(basis)
    path = output_path(_output_dir(config, args), BASIS_FILE)
    with open(path, mode='w') as f:
        f.write(text)
    logger.info('sector size={}'.format(basis.size))
    logger.debug(MESSAGES.FILE_WRITTEN.value.format(path))


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--config', help='configuration file. ')
    parser.add_argument('--output', help='output directory. ')
    parser.add_argument('--log_level', help='specify log level. ')


def _construct_argparser() -> argparse.ArgumentParser:
    '''It returns arguemnt parser.

    Returns:
        (argparse.ArgumentParser): the argument parser of CavityQ.
    '''
    parser = argparse.ArgumentParser(description='CavityQ command line tool', add_help=True)
    subparsers = parser.add_subparsers(dest='subcommand')
    subparsers.required = True

    # simulate
    help_message_simulate = 'Simulate the gate on all logical inputs'
    parser_simulate = subparsers.add_parser('simulate', help=help_message_simulate,
                                            description=help_message_simulate)
    parser_simulate.add_argument('--mode', choices=[m.value for m in MODE],
                                 help='jump realisation. ')
    parser_simulate.add_argument('--n1', type=int, help='timing integer n1. ')
    parser_simulate.add_argument('--n2', type=int, help='timing integer n2. ')
    parser_simulate.add_argument('--search_bound', type=int,
                                 help='search bound used when n1 = n2 = 0. ')
    _add_common_arguments(parser_simulate)
    parser_simulate.set_defaults(func=cmd_simulate)

    # oracle
    help_message_oracle = 'Print the symbolic phase table'
    parser_oracle = subparsers.add_parser('oracle', help=help_message_oracle,
                                          description=help_message_oracle)
    _add_common_arguments(parser_oracle)
    parser_oracle.set_defaults(func=cmd_oracle)

    # search
    help_message_search = 'Rank the timing integers'
    parser_search = subparsers.add_parser('search', help=help_message_search,
                                          description=help_message_search)
    parser_search.add_argument('bound', type=int, nargs='?', help='upper bound of n1 and n2')
    parser_search.add_argument('--top', type=int, default=SEARCH_SHOW_ROWS,
                               help='number of rows shown. ')
    _add_common_arguments(parser_search)
    parser_search.set_defaults(func=cmd_search)

    # sweep
    help_message_sweep = 'Evaluate the configured parameter grid'
    parser_sweep = subparsers.add_parser('sweep', help=help_message_sweep,
                                         description=help_message_sweep)
    parser_sweep.add_argument('--mode', choices=[m.value for m in MODE],
                              help='jump realisation. ')
    parser_sweep.add_argument('--workers', type=int, help='number of worker processes. ')
    _add_common_arguments(parser_sweep)
    parser_sweep.set_defaults(func=cmd_sweep)

    # feasibility
    help_message_feasibility = 'Evaluate the time window of the photon jump'
    parser_feasibility = subparsers.add_parser('feasibility', help=help_message_feasibility,
                                               description=help_message_feasibility)
    parser_feasibility.add_argument('--delta_tau', type=float, help='jump window. ')
    _add_common_arguments(parser_feasibility)
    parser_feasibility.set_defaults(func=cmd_feasibility)

    # basis
    help_message_basis = 'Dump the basis of the logical sector'
    parser_basis = subparsers.add_parser('basis', help=help_message_basis,
                                         description=help_message_basis)
    _add_common_arguments(parser_basis)
    parser_basis.set_defaults(func=cmd_basis)

    return parser


def init_logger(args: argparse.Namespace, config: configparser.ConfigParser) -> None:
    '''It setups logger object.
    '''
    stdout_handler = logging.StreamHandler(sys.stdout)
    stdout_handler.setFormatter(logging.Formatter(LOG_STDOUT_FORMAT))
    handlers = [stdout_handler]

    # If you want to output the log to both stdout and file, remove following commments.
    # file_handler = logging.FileHandler(filename=LOG_FILE)
    # file_handler.setFormatter(logging.Formatter(LOG_FILE_FORMAT))
    # handlers = [file_handler, stdout_handler]

    logging.basicConfig(handlers=handlers)

    if args.log_level in LOG_LEVELS:
        log_level = args.log_level
    else:
        log_level = config['default']['log_level']
    logger.setLevel(log_level)


def main(argv: list = None) -> int:
    '''the entry point.

    Returns:
        int: exit status. 0 on success, 1 on a physics error and 2 on a
            configuration error.
    '''
    parser = _construct_argparser()
    args = parser.parse_args(argv)
    status = EXIT_STATUS.SUCCESS
    try:
        config = None
        config = load_config(args.config)
        init_logger(args, config)
        logger.info('=================== config ====================')
        show_config(config)
        logger.info('===============================================')

        args.func(config, args)
    except ConfigError as e:
        status = EXIT_STATUS.CONFIG_ERROR
        logger.error('Error: {}\n'.format(e))
        logger.debug(traceback.format_exc())
    except PhysicsError as e:
        status = EXIT_STATUS.PHYSICS_ERROR
        logger.error('Error: {}\n'.format(e))
        logger.debug(traceback.format_exc())
    except Exception as e:
        status = EXIT_STATUS.PHYSICS_ERROR
        logger.error('Error: {}\n\n'.format(e))
        logger.info(traceback.format_exc())
    return status.value


if __name__ == '__main__':
    sys.exit(main())
