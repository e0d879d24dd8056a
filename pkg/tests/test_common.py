# test_common: tests of the result file formats
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
import os
import tempfile
import unittest

from ddt import ddt, data, unpack

from cavityq.common import ConfigError, format_value, write_table, read_table
from cavityq.common import write_summary, read_summary, output_path


@ddt
class TestFormats(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    @data((True, 'true'), (False, 'false'), (0.1, '0.1'), (1 / 3, '0.3333333333333333'),
          (4, '4'), (None, ''), ('aux-x', 'aux-x'))
    @unpack
    def test_format_value(self, value, text):
        self.assertEqual(format_value(value), text)

    def test_table(self):
        path = os.path.join(self.tmp.name, 'table.csv')
        write_table(path, ['n1', 'n2', 'residual', 'flag'], [[4, 6, 0.25, True]])
        with open(path) as f:
            self.assertEqual(f.readline(), '# format_version=1\n')
        rows = read_table(path)
        self.assertEqual(rows, [{'n1': '4', 'n2': '6', 'residual': '0.25', 'flag': 'true'}])

    def test_table_version(self):
        path = os.path.join(self.tmp.name, 'table.csv')
        with open(path, 'w') as f:
            f.write('# format_version=2\na,b\n1,2\n')
        with self.assertRaises(ConfigError):
            read_table(path)
        with open(path, 'w') as f:
            f.write('a,b\n1,2\n')
        with self.assertRaises(ConfigError):
            read_table(path)

    def test_summary(self):
        path = os.path.join(self.tmp.name, 'summary.yaml')
        write_summary(path, {'n1': 4, 'fidelity': 0.5, 'phase_quarters': {'00': 2, '01': None}})
        summary = read_summary(path)
        self.assertEqual(summary['format_version'], 1)
        self.assertEqual(summary['n1'], 4)
        self.assertEqual(summary['phase_quarters'], {'00': 2, '01': None})
        self.assertEqual(list(summary)[0], 'format_version')

    def test_summary_version(self):
        path = os.path.join(self.tmp.name, 'summary.yaml')
        with open(path, 'w') as f:
            f.write('format_version: 9\n')
        with self.assertRaises(ConfigError):
            read_summary(path)

    def test_output_path(self):
        directory = os.path.join(self.tmp.name, 'nested', 'out')
        path = output_path(directory, 'a.csv')
        self.assertTrue(os.path.isdir(directory))
        self.assertEqual(path, os.path.join(directory, 'a.csv'))


if __name__ == '__main__':
    unittest.main()
