# test_hilbert: tests of the occupation-number basis
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
import unittest

import numpy as np
from ddt import ddt, data, unpack

from cavityq.common import PreconditionError, InvalidQueryError
from cavityq.hilbert import BasisState, StateVector, enumerate_sector, logical_sector
from cavityq.hilbert import encode_logical, basis_state_amplitude, format_basis, parse_basis


@ddt
class TestHilbert(unittest.TestCase):

    @data((1, 2, 1, 2), (1, 2, 0, 1), (2, 1, 1, 4), (3, 1, 2, 15), (3, 2, 2, 18))
    @unpack
    def test_sector_size(self, cavity_count, n_max, N, size):
        basis = enumerate_sector(cavity_count, n_max, N)
        self.assertEqual(basis.size, size)
        for state in basis.states:
            self.assertEqual(state.total_excitation, N)
            self.assertTrue(all(n <= n_max for n in state.photons))
            self.assertTrue(all(m in (0, 1) for m in state.atoms))

    def test_sector_size_brute_force(self):
        for cavity_count, n_max, N in itertools.product(range(1, 4), range(0, 3), range(0, 4)):
            count = 0
            for photons in itertools.product(range(n_max + 1), repeat=cavity_count):
                for atoms in itertools.product((0, 1), repeat=cavity_count):
                    if sum(photons) + sum(atoms) == N:
                        count += 1
            basis = enumerate_sector(cavity_count, n_max, N)
            self.assertEqual(basis.size, count, (cavity_count, n_max, N))
            self.assertEqual(sorted(basis.index.values()), list(range(count)))

    def test_sector_is_sorted_and_indexed(self):
        basis = logical_sector()
        keys = [(s.photons, s.atoms) for s in basis.states]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(basis.states[0], BasisState((0, 0, 0), (0, 1, 1)))
        for k, state in enumerate(basis.states):
            self.assertEqual(basis.position(state), k)

    def test_empty_sector(self):
        basis = enumerate_sector(1, 0, 2)
        self.assertEqual(basis.size, 0)

    @data((0, 2, 1), (1, -1, 1), (1, 2, -1))
    @unpack
    def test_invalid_sector(self, cavity_count, n_max, N):
        with self.assertRaises(PreconditionError):
            enumerate_sector(cavity_count, n_max, N)

    @data(((0, 0), (0, 0, 0), (1, 1, 0)),
          ((0, 1), (0, 1, 0), (1, 0, 0)),
          ((1, 0), (1, 0, 0), (0, 1, 0)),
          ((1, 1), (1, 1, 0), (0, 0, 0)))
    @unpack
    def test_encode_logical(self, bits, photons, atoms):
        state = encode_logical(*bits)
        self.assertEqual(state, BasisState(photons, atoms))
        self.assertEqual(state.total_excitation, 2)
        self.assertTrue(logical_sector().contains(state))

    @data((2, 0), (0, -1))
    @unpack
    def test_encode_logical_invalid(self, qx, qy):
        with self.assertRaises(PreconditionError):
            encode_logical(qx, qy)

    def test_position_outside_sector(self):
        basis = logical_sector()
        with self.assertRaises(InvalidQueryError):
            basis.position(BasisState((1, 1, 1), (0, 0, 0)))

    def test_excitation_and_label(self):
        state = BasisState((0, 1, 1), (1, 0, 1))
        self.assertEqual(state.excitation(2), 2)
        self.assertEqual(state.label(), '|011>ph|101>at')
        self.assertEqual(state.replace(0, 1, 0), BasisState((1, 1, 1), (0, 0, 1)))

    def test_state_vector(self):
        basis = logical_sector()
        s = encode_logical(1, 0)
        psi = StateVector.from_state(basis, s)
        self.assertTrue(psi.is_normalized())
        self.assertEqual(basis_state_amplitude(psi, s), 1.0)
        self.assertEqual(basis_state_amplitude(psi, encode_logical(0, 1)), 0.0)
        self.assertAlmostEqual(abs(psi.overlap(psi)), 1.0, places=15)

    def test_state_vector_shape(self):
        basis = logical_sector()
        with self.assertRaises(PreconditionError):
            StateVector(basis, np.zeros(3, dtype=complex))

    def test_basis_dump(self):
        basis = logical_sector()
        text = format_basis(basis)
        lines = text.splitlines()
        self.assertEqual(lines[0], '# format_version=1')
        self.assertEqual(lines[1], '# cavity_count=3 n_max=2 N=2')
        self.assertEqual(lines[3], '0 0,0,0 0,1,1')
        self.assertEqual(parse_basis(text), list(basis.states))


if __name__ == '__main__':
    unittest.main()
