import unittest
from fractions import Fraction

from upcross.slalom.types import (
    BandError,
    Gate,
    GateConfig,
    GateError,
    SlopeBand,
    aligned_two_gate_config,
    scale_x,
    shear,
    staggered_two_gate_config,
    translate,
)


class GateTestCase(unittest.TestCase):

    def test_coerces_to_fractions(self):
        gate = Gate(1, 0, Fraction(3, 2))
        self.assertIsInstance(gate.x, Fraction)
        self.assertEqual(Fraction(3, 2), gate.length)

    def test_inverted_gate_is_rejected(self):
        with self.assertRaises(GateError) as cm:
            Gate(0, 2, 1)
        self.assertIn('inverted', cm.exception.message)

    def test_zero_length_gate_is_allowed(self):
        self.assertEqual(0, Gate(0, 1, 1).length)

    def test_contains_is_closed(self):
        gate = Gate(0, 0, 1)
        self.assertTrue(gate.contains(0))
        self.assertTrue(gate.contains(1))
        self.assertFalse(gate.contains(Fraction(11, 10)))

    def test_dict_round_trip(self):
        gate = Gate(Fraction(3, 2), 0, 1)
        self.assertEqual({'x': '3/2', 'm': '0', 'M': '1'}, gate.to_dict())
        self.assertEqual(gate, Gate.from_dict(gate.to_dict()))


class SlopeBandTestCase(unittest.TestCase):

    def test_width_and_window(self):
        band = SlopeBand(-1, 2)
        self.assertEqual(3, band.width)
        self.assertEqual((-2, 4), band.window(2))

    def test_needs_alpha_below_beta(self):
        for alpha, beta in [(1, 1), (2, 1)]:
            with self.subTest(alpha=alpha, beta=beta):
                with self.assertRaises(BandError):
                    SlopeBand(alpha, beta)

    def test_text(self):
        self.assertEqual("-1/2,1", SlopeBand(Fraction(-1, 2), 1).to_text())


class GateConfigTestCase(unittest.TestCase):

    def setUp(self):
        self.config = GateConfig.of([(0, 0, 1), (2, 0, 1), (0, 3, 4)])

    def test_abscissas_run_right_to_left(self):
        self.assertEqual([2, 0], self.config.abscissas())

    def test_gates_at_shared_abscissa(self):
        self.assertEqual(2, len(self.config.gates_at(0)))

    def test_gates_from_is_inclusive_and_ascending(self):
        self.assertEqual([0, 0, 2], [g.x for g in self.config.gates_from(0)])
        self.assertEqual([2], [g.x for g in self.config.gates_from(1)])

    def test_total_length(self):
        self.assertEqual(3, self.config.total_length)
        self.assertEqual(0, GateConfig().total_length)

    def test_with_gate(self):
        bigger = self.config.with_gate(Gate(5, 0, 2))
        self.assertEqual(4, len(bigger))
        self.assertEqual(3, len(self.config))


class TransformsTestCase(unittest.TestCase):

    def test_shear_moves_gates_and_band(self):
        config, band = shear(GateConfig.of([(2, 0, 1)]), SlopeBand(0, 1), Fraction(1, 2))
        self.assertEqual(Gate(2, 1, 2), config.gates[0])
        self.assertEqual(SlopeBand(Fraction(1, 2), Fraction(3, 2)), band)

    def test_translate(self):
        config = translate(GateConfig.of([(2, 0, 1)]), 1, -1)
        self.assertEqual(Gate(3, -1, 0), config.gates[0])

    def test_scale_x(self):
        config, band = scale_x(GateConfig.of([(2, 0, 1)]), SlopeBand(0, 1), 2)
        self.assertEqual(Gate(4, 0, 1), config.gates[0])
        self.assertEqual(SlopeBand(0, Fraction(1, 2)), band)

    def test_scale_x_needs_positive_factor(self):
        with self.assertRaises(GateError):
            scale_x(GateConfig(), SlopeBand(0, 1), 0)

    def test_two_gate_pictures(self):
        aligned, band = aligned_two_gate_config()
        staggered, _ = staggered_two_gate_config()
        self.assertEqual(SlopeBand(0, 1), band)
        self.assertEqual(3, aligned.total_length)
        self.assertEqual(3, staggered.total_length)
