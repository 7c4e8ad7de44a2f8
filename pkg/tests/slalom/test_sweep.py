from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from upcross.exact.profile import StepProfile
from upcross.slalom.sweep import DeathEvent, T_profile, integral_T, sweep, t_eval
from upcross.slalom.types import (
    Gate,
    GateConfig,
    SlopeBand,
    aligned_two_gate_config,
    scale_x,
    shear,
    staggered_two_gate_config,
    translate,
)

coordinate = st.builds(Fraction, st.integers(-8, 8), st.integers(1, 3))
gates = st.builds(
    lambda x, m, length: Gate(x, m, m + length),
    coordinate,
    coordinate,
    st.builds(Fraction, st.integers(0, 8), st.integers(1, 3)),
)
configs = st.lists(gates, max_size=5).map(lambda gs: GateConfig(tuple(gs)))
bands = st.builds(
    lambda alpha, width: SlopeBand(alpha, alpha + width),
    coordinate,
    st.builds(Fraction, st.integers(1, 6), st.integers(1, 3)),
)

UNIT = SlopeBand(0, 1)
SINGLE = GateConfig.of([(0, 0, 1)])


class TestSingleGate:

    def setup_method(self):
        self.field = sweep(SINGLE, UNIT)

    def test_profile_at_the_gate(self):
        assert self.field.profile_at(0) == StepProfile.indicator(0, 1)

    def test_profile_shrinks_to_the_left(self):
        assert self.field.profile_at(Fraction(-1, 2)) == StepProfile.indicator(0, Fraction(1, 2))
        assert self.field.profile_at(Fraction(-3, 2)).is_zero()

    def test_t_eval(self):
        assert t_eval(self.field, -2, 0) == 0
        assert t_eval(self.field, 0, Fraction(1, 2)) == 1
        assert t_eval(self.field, 1, Fraction(1, 2)) == 0

    def test_T_profile(self):
        T = T_profile(self.field)
        assert T.segments() == [(-1, 0, 1)]
        assert T.evaluate(-1) == 1
        assert T.evaluate(Fraction(-11, 10)) == 0

    def test_integral_T(self):
        assert integral_T(self.field) == 1

    def test_death_and_support(self):
        assert self.field.x_dead == -1
        assert self.field.deaths == (DeathEvent(Fraction(-1), 1, Fraction(0), Fraction(1)),)


def test_empty_config_is_identically_zero():
    field = sweep(GateConfig(), UNIT)
    assert field.slabs == ()
    assert field.x_dead is None
    assert t_eval(field, 0, 0) == 0
    assert T_profile(field).is_zero()
    assert integral_T(field) == 0


def test_aligned_gates_reach_the_bound():
    config, band = aligned_two_gate_config()
    field = sweep(config, band)
    assert field.profile_at(0) == StepProfile((0, 1), (2,))
    assert integral_T(field) == 3


def test_staggered_gates_stay_below_the_bound():
    config, band = staggered_two_gate_config()
    field = sweep(config, band)
    assert field.profile_at(0).components(1) == [(0, 1), (2, 3)]
    assert integral_T(field) == 2


def test_shared_abscissa_adds_both_gates():
    field = sweep(GateConfig.of([(0, 0, 2), (0, 1, 3)]), UNIT)
    assert t_eval(field, 0, Fraction(3, 2)) == 2
    assert field.T_at(0) == 2


def test_integral_matches_T_profile():
    config = GateConfig.of([(0, 0, 1), (2, 0, 1), (1, Fraction(1, 2), 3)])
    field = sweep(config, SlopeBand(Fraction(-1, 2), 1))
    assert integral_T(field) == T_profile(field).integral()


@given(configs, bands)
def test_T_profile_agrees_with_pointwise_maximum(config, band):
    field = sweep(config, band)
    T = T_profile(field)
    assert integral_T(field) == T.integral()
    for slab in field.slabs:
        assert T.evaluate(slab.x_right) == field.profile_at(slab.x_right).max_value()


@given(configs, bands, coordinate, coordinate)
def test_t_is_bounded_by_gates_ahead(config, band, x, y):
    value = t_eval(sweep(config, band), x, y)
    assert 0 <= value <= len(config.gates_from(x))


@given(configs, bands, gates, coordinate, coordinate)
def test_adding_a_gate_never_decreases_t(config, band, gate, x, y):
    before = t_eval(sweep(config, band), x, y)
    after = t_eval(sweep(config.with_gate(gate), band), x, y)
    assert after >= before


@given(configs, bands, st.builds(Fraction, st.integers(1, 4), st.integers(1, 2)), coordinate, coordinate)
def test_wider_band_never_increases_t(config, band, extra, x, y):
    wider = SlopeBand(band.alpha - extra, band.beta + extra)
    assert t_eval(sweep(config, wider), x, y) <= t_eval(sweep(config, band), x, y)


@given(configs, bands, coordinate, coordinate, coordinate)
def test_shear_invariance(config, band, gamma, x, y):
    sheared, sheared_band = shear(config, band, gamma)
    original, moved = sweep(config, band), sweep(sheared, sheared_band)
    assert moved.t_at(x, y + gamma * x) == original.t_at(x, y)
    assert integral_T(moved) == integral_T(original)


@given(configs, bands, coordinate, coordinate, coordinate, coordinate)
def test_translation_invariance(config, band, dx, dy, x, y):
    original = sweep(config, band)
    moved = sweep(translate(config, dx, dy), band)
    assert moved.t_at(x + dx, y + dy) == original.t_at(x, y)
    assert integral_T(moved) == integral_T(original)


@given(configs, bands, st.builds(Fraction, st.integers(1, 6), st.integers(1, 6)))
def test_x_scaling_scales_the_integral(config, band, factor):
    scaled, scaled_band = scale_x(config, band, factor)
    assert integral_T(sweep(scaled, scaled_band)) == factor * integral_T(sweep(config, band))
