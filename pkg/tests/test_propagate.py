# test_propagate: tests of the piecewise constant evolution
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
import math
import unittest

import numpy as np
import scipy.linalg
from ddt import ddt, data, unpack

from cavityq.common import BasisMismatchError, NonHermitianError, PreconditionError
from cavityq.hilbert import BasisState, StateVector, enumerate_sector, logical_sector
from cavityq.hilbert import encode_logical, basis_state_amplitude
from cavityq.jch import OperatorMatrix, build_jc_interaction, build_hop
from cavityq.propagate import Segment, propagator, block_propagator, ideal_jump, evolve
from cavityq.propagate import expectation, format_trajectory, segment_unitary

TAU1 = math.pi
TAU2 = math.pi / math.sqrt(2)


@ddt
class TestPropagate(unittest.TestCase):

    @data((TAU1 / 2, [[0, -1j], [-1j, 0]]),
          (TAU1, [[-1, 0], [0, -1]]),
          (2 * TAU1, [[1, 0], [0, 1]]))
    @unpack
    def test_single_excitation_rabi(self, t, expected):
        basis = enumerate_sector(1, 2, 1)
        U = propagator(build_jc_interaction(basis, [1.0]), t)
        self.assertLessEqual(np.max(np.abs(U.entries - np.array(expected))), 1e-10)

    def test_double_excitation_rabi(self):
        basis = enumerate_sector(1, 2, 2)
        U = propagator(build_jc_interaction(basis, [1.0]), 2 * TAU2)
        self.assertLessEqual(np.max(np.abs(U.entries - np.eye(2))), 1e-10)

    def test_against_matrix_exponential(self):
        basis = logical_sector()
        H = build_jc_interaction(basis, [1.0, 0.7, 1.3]) + build_hop(basis, (2, 0), 5.0)
        U = propagator(H, 0.37)
        expected = scipy.linalg.expm(-1j * 0.37 * H.entries)
        self.assertLessEqual(np.max(np.abs(U.entries - expected)), 1e-12)
        self.assertTrue(U.is_unitary())

    @data(0, 1, 2, 3, 4)
    def test_random_hermitian_against_matrix_exponential(self, seed):
        basis = logical_sector()
        rng = np.random.default_rng(seed)
        shape = (basis.size, basis.size)
        A = rng.normal(size=shape) + 1j * rng.normal(size=shape)
        H = OperatorMatrix(basis, (A + A.conj().T) / 2)
        t = rng.uniform(0.1, 3.0)
        U = propagator(H, t)
        expected = scipy.linalg.expm(-1j * t * H.entries)
        self.assertLessEqual(np.max(np.abs(U.entries - expected)), 1e-10)

    def test_hbar_scaling(self):
        basis = enumerate_sector(1, 2, 1)
        H = build_jc_interaction(basis, [1.0])
        np.testing.assert_allclose(propagator(H, 2.0, hbar=2.0).entries,
                                   propagator(H, 1.0).entries, atol=1e-14)

    def test_non_hermitian(self):
        basis = enumerate_sector(1, 2, 1)
        H = OperatorMatrix(basis, np.array([[0, 1], [0, 0]], dtype=complex))
        with self.assertRaises(NonHermitianError):
            propagator(H, 1.0)

    def test_hop_transfers_photon(self):
        basis = logical_sector()
        nu = 50.0
        psi = StateVector.from_state(basis, BasisState((0, 0, 1), (1, 0, 0)))
        segment = Segment('jump', math.pi / (2 * nu), hamiltonian=build_hop(basis, (2, 0), nu))
        out, _ = evolve(psi, [segment])
        amplitude = basis_state_amplitude(out, BasisState((1, 0, 0), (1, 0, 0)))
        self.assertLessEqual(abs(amplitude - (-1j)), 1e-10)

    def test_ideal_jump(self):
        basis = logical_sector()
        U = ideal_jump(basis, (2, 1))
        source = basis.position(BasisState((0, 0, 1), (1, 0, 0)))
        target = basis.position(BasisState((0, 1, 0), (1, 0, 0)))
        self.assertLessEqual(abs(U.entries[target, source] + 1j), 1e-12)
        pair = basis.position(BasisState((0, 1, 1), (0, 0, 0)))
        self.assertLessEqual(abs(U.entries[pair, pair] + 1), 1e-12)
        self.assertTrue(U.is_unitary())

    def test_jump_without_photon(self):
        basis = logical_sector()
        U = ideal_jump(basis, (2, 0))
        k = basis.position(encode_logical(0, 0))
        self.assertLessEqual(abs(U.entries[k, k] - 1), 1e-12)

    def test_block_propagator_uniform(self):
        basis = logical_sector()
        couplings = (1.0, 1.0, 1.0)
        U = block_propagator(basis, couplings, {1: 0.9, 2: 0.9}, 0.9)
        expected = propagator(build_jc_interaction(basis, couplings), 0.9)
        self.assertLessEqual(np.max(np.abs(U.entries - expected.entries)), 1e-12)

    def test_block_propagator_per_excitation(self):
        basis = logical_sector()
        U = block_propagator(basis, (1.0, 1.0, 1.0), {1: TAU1 / 2, 2: 2 * TAU2}, 0.0)
        self.assertTrue(U.is_unitary())
        # |10>: x holds a photon, y an excited atom; both flip with -i
        source = basis.position(encode_logical(1, 0))
        target = basis.position(encode_logical(0, 1))
        self.assertLessEqual(abs(U.entries[target, source] + 1), 1e-12)
        double = basis.position(BasisState((0, 0, 1), (0, 0, 1)))
        self.assertLessEqual(abs(U.entries[double, double] - 1), 1e-10)

    def test_segment_checks(self):
        basis = logical_sector()
        H = build_jc_interaction(basis, [1.0] * 3)
        with self.assertRaises(PreconditionError):
            Segment('wait', -1.0, hamiltonian=H)
        with self.assertRaises(PreconditionError):
            Segment('wait', 1.0)

    def test_segment_shifted(self):
        basis = logical_sector()
        H = build_jc_interaction(basis, [1.0] * 3)
        segment = Segment('wait', 1.0, hamiltonian=H, couplings=(1.0,) * 3,
                          block_durations=((1, 2.0), (2, 0.5)))
        shifted = segment.shifted(-0.75)
        self.assertAlmostEqual(shifted.duration, 0.25)
        self.assertEqual(shifted.block_durations, ((1, 1.25), (2, 0.0)))
        self.assertEqual(segment.shifted(-2.0).duration, 0.0)

    def test_evolve_trajectory(self):
        basis = logical_sector()
        H = build_jc_interaction(basis, [1.0] * 3)
        segments = [Segment('jump', 0.0, unitary=ideal_jump(basis, (2, 0))),
                    Segment('wait', 0.5, hamiltonian=H),
                    Segment('wait', 0.25, hamiltonian=H)]
        psi = StateVector.from_state(basis, encode_logical(1, 1))
        out, trajectory = evolve(psi, segments)
        self.assertEqual(len(trajectory.checkpoints), 3)
        self.assertEqual(trajectory.times(), [0.0, 0.5, 0.75])
        self.assertTrue(out.is_normalized())
        self.assertIs(trajectory.states()[-1], out)

    def test_evolve_basis_mismatch(self):
        sector_one = enumerate_sector(3, 2, 1)
        segment = Segment('wait', 1.0, hamiltonian=build_jc_interaction(sector_one, [1.0] * 3))
        psi = StateVector.from_state(logical_sector(), encode_logical(0, 0))
        with self.assertRaises(BasisMismatchError):
            evolve(psi, [segment])

    def test_energy_conservation(self):
        basis = logical_sector()
        H = build_jc_interaction(basis, [1.0] * 3) + build_hop(basis, (2, 1), 20.0)
        psi = StateVector.from_state(basis, encode_logical(1, 0))
        segment = Segment('jump', 0.3, hamiltonian=H)
        out, _ = evolve(psi, [segment])
        self.assertLessEqual(abs(expectation(out, H) - expectation(psi, H)), 1e-12)
        self.assertLessEqual(segment_unitary(segment).unitarity_error(), 1e-12)

    def test_format_trajectory(self):
        basis = logical_sector()
        segments = [Segment('jump', 0.0, unitary=ideal_jump(basis, (2, 0)))]
        psi = StateVector.from_state(basis, encode_logical(1, 0))
        _, trajectory = evolve(psi, segments)
        header, rows = format_trajectory(trajectory)
        self.assertEqual(header, ['time', 'segment', 'state', 're', 'im'])
        self.assertEqual(len(rows), basis.size)
        moved = [row for row in rows if row[2] == '|001>ph|010>at'][0]
        self.assertAlmostEqual(moved[4], -1.0, places=12)


if __name__ == '__main__':
    unittest.main()
