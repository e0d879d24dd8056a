# test_jch: tests of the Jaynes-Cummings-Hubbard Hamiltonians
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
from ddt import ddt, data, unpack

from cavityq.common import PreconditionError, DomainError
from cavityq.hilbert import BasisState, SectorBasis, enumerate_sector, logical_sector
from cavityq.jch import LADDER, OperatorMatrix, PhysicalParams, CavityGeometry
from cavityq.jch import apply_ladder, build_jc_interaction, build_hop, build_h0
from cavityq.jch import commutator_norm, rabi_periods, jump_period, placement_factor
from cavityq.jch import coupling_from_geometry, rwa_ok


@ddt
class TestJCH(unittest.TestCase):

    def test_single_excitation_block(self):
        basis = enumerate_sector(1, 2, 1)
        H = build_jc_interaction(basis, [0.7])
        np.testing.assert_allclose(H.entries, [[0, 0.7], [0.7, 0]], atol=1e-15)

    def test_double_excitation_block(self):
        basis = enumerate_sector(1, 2, 2)
        H = build_jc_interaction(basis, [1.0])
        np.testing.assert_allclose(H.entries, [[0, math.sqrt(2)], [math.sqrt(2), 0]], atol=1e-15)

    def test_hamiltonians_are_hermitian(self):
        basis = logical_sector()
        self.assertTrue(build_jc_interaction(basis, [1.0, 0.5, 2.0]).is_hermitian())
        self.assertTrue(build_hop(basis, (2, 0), 30.0).is_hermitian())
        self.assertTrue(build_h0(basis, 1e4).is_hermitian())

    def test_hop_moves_one_photon(self):
        basis = logical_sector()
        H = build_hop(basis, (2, 0), 1.0)
        source = basis.position(BasisState((0, 0, 1), (1, 0, 0)))
        target = basis.position(BasisState((1, 0, 0), (1, 0, 0)))
        self.assertAlmostEqual(H.entries[target, source], 1.0, places=15)

    def test_no_coupling_between_sectors(self):
        states = []
        for N in range(0, 10):
            states.extend(enumerate_sector(3, 2, N).states)
        full = SectorBasis(3, 2, -1, tuple(states), {s: k for k, s in enumerate(states)})
        H = build_jc_interaction(full, [1.0, 0.7, 1.3])
        for pair in [(2, 0), (2, 1), (0, 1)]:
            H = H + build_hop(full, pair, 5.0)
        self.assertTrue(H.is_hermitian())
        self.assertGreater(np.count_nonzero(H.entries), 0)
        for row, out_state in enumerate(states):
            for column, in_state in enumerate(states):
                if out_state.total_excitation != in_state.total_excitation:
                    self.assertEqual(H.entries[row, column], 0)

    def test_hop_two_photons(self):
        basis = logical_sector()
        H = build_hop(basis, (2, 0), 1.0)
        source = basis.position(BasisState((1, 0, 1), (0, 0, 0)))
        target = basis.position(BasisState((2, 0, 0), (0, 0, 0)))
        self.assertAlmostEqual(H.entries[target, source], math.sqrt(2), places=15)

    @data((0, 0), (0, 3), (-1, 2))
    def test_invalid_pair(self, pair):
        with self.assertRaises(PreconditionError):
            build_hop(logical_sector(), pair, 1.0)

    def test_coupling_count(self):
        with self.assertRaises(PreconditionError):
            build_jc_interaction(logical_sector(), [1.0, 1.0])

    def test_h0_commutes(self):
        basis = logical_sector()
        H0 = build_h0(basis, 1e4)
        self.assertLessEqual(commutator_norm(H0, build_jc_interaction(basis, [1.0] * 3)), 1e-12)
        self.assertLessEqual(commutator_norm(H0, build_hop(basis, (2, 1), 50.0)), 1e-12)

    def test_commutator_of_non_commuting(self):
        basis = logical_sector()
        self.assertGreater(commutator_norm(build_jc_interaction(basis, [1.0] * 3),
                                           build_hop(basis, (2, 0), 1.0)), 0.1)

    @data((LADDER.CREATE, BasisState((1,), (0,)), BasisState((2,), (0,)), math.sqrt(2)),
          (LADDER.ANNIHILATE, BasisState((2,), (1,)), BasisState((1,), (1,)), math.sqrt(2)),
          (LADDER.RAISE, BasisState((1,), (0,)), BasisState((1,), (1,)), 1.0),
          (LADDER.LOWER, BasisState((0,), (1,)), BasisState((0,), (0,)), 1.0))
    @unpack
    def test_apply_ladder(self, operator, state, expected, factor):
        result, value = apply_ladder(state, operator, 0, 2)
        self.assertEqual(result, expected)
        self.assertAlmostEqual(value, factor, places=15)

    @data((LADDER.CREATE, BasisState((2,), (0,))),
          (LADDER.ANNIHILATE, BasisState((0,), (1,))),
          (LADDER.RAISE, BasisState((0,), (1,))),
          (LADDER.LOWER, BasisState((1,), (0,))))
    @unpack
    def test_apply_ladder_vanishes(self, operator, state):
        self.assertIsNone(apply_ladder(state, operator, 0, 2))

    def test_rabi_periods(self):
        tau1, tau2 = rabi_periods(1.0)
        self.assertAlmostEqual(tau1, math.pi, places=15)
        self.assertAlmostEqual(tau2 / tau1, 1 / math.sqrt(2), places=15)
        self.assertAlmostEqual(rabi_periods(2.0, 0.5)[0], math.pi / 4, places=15)

    def test_jump_period(self):
        self.assertAlmostEqual(jump_period(100.0), math.pi / 100, places=15)

    def test_placement_factor(self):
        self.assertAlmostEqual(placement_factor(0.5, 1.0), 1.0, places=15)
        self.assertAlmostEqual(placement_factor(0.0, 1.0), 0.0, places=15)
        self.assertAlmostEqual(placement_factor(0.25, 1.0), math.sqrt(0.5), places=15)
        with self.assertRaises(DomainError):
            placement_factor(1.5, 1.0)

    def test_coupling_from_geometry(self):
        params = PhysicalParams(omega=4.0, g=1.0, nu=100.0)
        geometry = CavityGeometry(V=1.0, d=0.5, x=1.0, L=2.0, wavelength=4.0)
        self.assertAlmostEqual(coupling_from_geometry(params, geometry), 1.0, places=12)

    def test_standing_wave_condition(self):
        with self.assertRaises(DomainError):
            CavityGeometry(V=1.0, d=0.5, x=1.0, L=2.0, wavelength=3.0)

    def test_rwa(self):
        self.assertTrue(rwa_ok(PhysicalParams(omega=1e4, g=1.0, nu=100.0)))
        with self.assertLogs('CavityQ', level='WARNING'):
            self.assertFalse(rwa_ok(PhysicalParams(omega=10.0, g=1.0, nu=100.0)))

    @data('g', 'nu', 'hbar')
    def test_params_positive(self, name):
        values = {'omega': 1e4, 'g': 1.0, 'nu': 100.0, 'hbar': 1.0}
        values[name] = 0.0
        with self.assertRaises(PreconditionError):
            PhysicalParams(**values)

    def test_operator_checks(self):
        basis = enumerate_sector(1, 2, 1)
        A = OperatorMatrix(basis, np.array([[0, 1], [0, 0]], dtype=complex))
        self.assertFalse(A.is_hermitian())
        self.assertFalse(A.is_unitary())
        X = OperatorMatrix(basis, np.array([[0, 1], [1, 0]], dtype=complex))
        self.assertTrue(X.is_unitary())
        np.testing.assert_allclose((X @ X).entries, np.eye(2))


if __name__ == '__main__':
    unittest.main()
