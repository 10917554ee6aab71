import pytest

from qre import (
    InstructionSet,
    ParameterError,
    PhysicalQubitParams,
    UnknownPresetError,
    qubit_preset,
    qubit_preset_names,
)

EXPECTED_PRESETS = {
    "us-e3": (InstructionSet.GATE_BASED, 100_000, 100_000, 1e-3, 1e-6),
    "us-e4": (InstructionSet.GATE_BASED, 100_000, 100_000, 1e-4, 1e-6),
    "ns-e3": (InstructionSet.GATE_BASED, 50, 100, 1e-3, 1e-3),
    "ns-e4": (InstructionSet.GATE_BASED, 50, 100, 1e-4, 1e-4),
    "maj-ns-e4": (InstructionSet.MAJORANA, None, 100, 1e-4, 0.05),
    "maj-ns-e6": (InstructionSet.MAJORANA, None, 100, 1e-6, 0.01),
}


def test_preset_names_are_stable():
    assert qubit_preset_names() == tuple(EXPECTED_PRESETS)


@pytest.mark.parametrize("name", sorted(EXPECTED_PRESETS))
def test_preset_parameters(name):
    isa, t_gate, t_meas, p, p_t = EXPECTED_PRESETS[name]
    q = qubit_preset(name)
    assert q.instruction_set is isa
    assert q.t_gate == t_gate
    assert q.t_meas == t_meas
    assert q.p_clifford == p
    assert q.p_t == p_t


def test_unknown_preset_lists_choices():
    with pytest.raises(UnknownPresetError, match="unknown preset"):
        qubit_preset("nope")
    try:
        qubit_preset("nope")
    except UnknownPresetError as exc:
        assert "ns-e4" in str(exc)
        assert exc.known == qubit_preset_names()


def _gate_qubit(**overrides):
    base = dict(
        name="q",
        instruction_set=InstructionSet.GATE_BASED,
        t_meas=100,
        p_clifford=1e-4,
        p_t=1e-4,
        t_gate=50,
    )
    base.update(overrides)
    return PhysicalQubitParams(**base)


def test_validate_rejects_probability_out_of_range():
    with pytest.raises(ParameterError, match="probability out of range"):
        _gate_qubit(p_clifford=0.0).validate()
    with pytest.raises(ParameterError, match="probability out of range"):
        _gate_qubit(p_t=1.0).validate()


def test_validate_rejects_non_positive_durations():
    with pytest.raises(ParameterError, match="non-positive duration"):
        _gate_qubit(t_meas=0).validate()
    with pytest.raises(ParameterError, match="non-positive duration"):
        _gate_qubit(t_gate=-5).validate()


def test_gate_based_requires_gate_time():
    with pytest.raises(ParameterError, match="t_gate"):
        _gate_qubit(t_gate=None).validate()


def test_majorana_rejects_gate_time():
    q = PhysicalQubitParams(
        name="m",
        instruction_set=InstructionSet.MAJORANA,
        t_meas=100,
        p_clifford=1e-4,
        p_t=0.05,
        t_gate=50,
    )
    with pytest.raises(ParameterError, match="gate-based"):
        q.validate()


class TestJsonRoundTrip:
    def test_round_trip(self):
        q = qubit_preset("ns-e4")
        assert PhysicalQubitParams.from_json(q.to_json()) == q

    def test_microsecond_conversion(self):
        obj = {
            "name": "slow",
            "instruction_set": "gate-based",
            "t_gate": {"value": 100, "unit": "us"},
            "t_meas": {"value": 0.1, "unit": "ms"},
            "p_clifford": 1e-3,
            "p_t": 1e-6,
        }
        q = PhysicalQubitParams.from_json(obj)
        assert q.t_gate == 100_000
        assert q.t_meas == 100_000

    def test_fractional_nanoseconds_rejected(self):
        obj = {
            "instruction_set": "majorana",
            "t_meas": {"value": 0.5, "unit": "ns"},
            "p_clifford": 1e-4,
            "p_t": 0.05,
        }
        with pytest.raises(ParameterError, match="whole number"):
            PhysicalQubitParams.from_json(obj)

    def test_unknown_unit_rejected(self):
        obj = {
            "instruction_set": "majorana",
            "t_meas": {"value": 1, "unit": "s"},
            "p_clifford": 1e-4,
            "p_t": 0.05,
        }
        with pytest.raises(ParameterError, match="unknown time unit"):
            PhysicalQubitParams.from_json(obj)

    def test_bad_instruction_set_rejected(self):
        with pytest.raises(ParameterError, match="instruction_set"):
            PhysicalQubitParams.from_json({"instruction_set": "trapped-ion"})
