"""Job descriptions: the JSON surface of the estimator.

A job names a qubit model and an application (each either a preset name or
an inline object), plus optional knobs: a schedule stretch factor or a
frontier sweep, a custom error-budget split, synthesis constants, a code
distance cap, factory search bounds, and extra code models to consider.

Validation is two-staged: a JSON Schema pass for shape, then semantic
checks (preset existence, perfect-square lattices, budget arithmetic).
Both stages report :class:`~qre.errors.SchemaError` with a JSON pointer to
the offending node.
"""

from __future__ import annotations

import copy
import math
import os
from typing import Any

from attrs import frozen
from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .codes import BUILTIN_CODES, QecCodeModel
from .counting import (
    AlgorithmCounts,
    BudgetSplit,
    LogicalRequirements,
    SynthesisModel,
    application_preset,
    ising_counts,
    logical_counts,
)
from .distillation import SearchBounds
from .errors import ParameterError, SchemaError, UnknownPresetError
from .qubits import PhysicalQubitParams, qubit_preset

DISTANCE_CAP_ENV = "QRE_DMAX"

_DURATION = {
    "type": "object",
    "properties": {
        "value": {"type": "number"},
        "unit": {"enum": ["ns", "us", "ms"]},
    },
    "required": ["value", "unit"],
    "additionalProperties": False,
}

_QUBIT = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "instruction_set": {"enum": ["gate-based", "majorana"]},
        "t_gate": _DURATION,
        "t_meas": _DURATION,
        "p_clifford": {"type": "number"},
        "p_t": {"type": "number"},
    },
    "required": ["instruction_set", "t_meas", "p_clifford", "p_t"],
    "additionalProperties": False,
}

_COUNTS = {
    "type": "object",
    "properties": {
        "algorithm_qubits": {"type": "integer", "minimum": 1},
        "measurements": {"type": "number", "minimum": 0},
        "rotations": {"type": "number", "minimum": 0},
        "t_gates": {"type": "number", "minimum": 0},
        "toffoli_gates": {"type": "number", "minimum": 0},
        "rotation_layers": {"type": "number", "minimum": 0},
        "error_budget": {"type": "number"},
    },
    "required": ["algorithm_qubits", "error_budget"],
    "additionalProperties": False,
}

_REQUIREMENTS = {
    "type": "object",
    "properties": {
        "logical_qubits": {"type": "integer", "minimum": 1},
        "min_time_steps": {"type": "number", "minimum": 1},
        "t_states": {"type": "number", "minimum": 0},
        "error_budget": {"type": "number"},
    },
    "required": ["logical_qubits", "min_time_steps", "t_states", "error_budget"],
    "additionalProperties": False,
}

_ISING = {
    "type": "object",
    "properties": {
        "N": {"type": "integer", "minimum": 4},
        "T": {"type": "integer", "minimum": 1},
        "M_meas": {"type": "number", "minimum": 0},
        "error_budget": {"type": "number"},
    },
    "required": ["N", "T"],
    "additionalProperties": False,
}

_CODE = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "instruction_set": {"enum": ["gate-based", "majorana"]},
        "error_prefactor": {"type": "number"},
        "threshold": {"type": "number"},
        "qubits_per_tile": {
            "type": "object",
            "properties": {
                "quadratic": {"type": "integer"},
                "linear": {"type": "integer"},
                "constant": {"type": "integer"},
            },
            "additionalProperties": False,
        },
        "step_time": {
            "type": "object",
            "properties": {
                "gate_factor": {"type": "integer", "minimum": 0},
                "meas_factor": {"type": "integer", "minimum": 0},
            },
            "additionalProperties": False,
        },
    },
    "required": ["name", "instruction_set", "error_prefactor", "threshold"],
    "additionalProperties": False,
}

_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "qubit": {"anyOf": [{"type": "string"}, _QUBIT]},
        "application": {
            "anyOf": [
                {"type": "string"},
                {
                    "type": "object",
                    "properties": {
                        "counts": _COUNTS,
                        "requirements": _REQUIREMENTS,
                        "ising": _ISING,
                    },
                    "minProperties": 1,
                    "maxProperties": 1,
                    "additionalProperties": False,
                },
            ]
        },
        "c_factor": {"type": "number", "minimum": 1},
        "frontier_factors": {
            "type": "array",
            "items": {"type": "number", "minimum": 1},
        },
        "budget_split": {
            "type": "object",
            "properties": {
                "logical": {"type": "number"},
                "distillation": {"type": "number"},
                "synthesis": {"type": "number"},
            },
            "required": ["logical", "distillation", "synthesis"],
            "additionalProperties": False,
        },
        "overrides": {
            "type": "object",
            "properties": {
                "synthesis": {
                    "type": "object",
                    "properties": {
                        "scale": {"type": "number", "minimum": 0},
                        "offset": {"type": "number", "minimum": 0},
                    },
                    "additionalProperties": False,
                },
                "max_code_distance": {"type": "integer", "minimum": 3},
                "factory": {
                    "type": "object",
                    "properties": {
                        "max_rounds": {"type": "integer", "minimum": 1},
                        "min_distance": {"type": "integer", "minimum": 3},
                        "max_distance": {"type": "integer", "minimum": 3},
                        "max_final_copies": {"type": "integer", "minimum": 1},
                    },
                    "additionalProperties": False,
                },
            },
            "additionalProperties": False,
        },
        "codes": {"type": "array", "items": _CODE},
    },
    "required": ["qubit", "application"],
    "additionalProperties": False,
}

_VALIDATOR = Draft202012Validator(_SCHEMA)

# The published Ising dynamics workload runs with this end-to-end budget;
# inline ising jobs inherit it unless they say otherwise.
_DEFAULT_ISING_BUDGET = 1e-3


@frozen
class JobSpec:
    """A fully resolved job, ready for :func:`qre.report.run`."""

    qubit: PhysicalQubitParams
    requirements: LogicalRequirements
    counts: AlgorithmCounts | None
    application_name: str | None
    notes: tuple[str, ...]
    c_factor: float
    frontier_factors: tuple[float, ...] | None
    budget_split: BudgetSplit | None
    synthesis: SynthesisModel
    distance_cap: int | None
    factory_bounds: SearchBounds | None
    codes: tuple[QecCodeModel, ...] | None
    echo: Any


def _pointer(*parts: Any) -> str:
    return "/" + "/".join(str(p) for p in parts) if parts else "/"


def _schema_pass(obj: Any) -> None:
    error = best_match(_VALIDATOR.iter_errors(obj))
    if error is not None:
        raise SchemaError(error.message, _pointer(*error.absolute_path))


def _resolve_qubit(spec: Any) -> PhysicalQubitParams:
    if isinstance(spec, str):
        try:
            return qubit_preset(spec)
        except UnknownPresetError as exc:
            raise SchemaError(str(exc), "/qubit") from None
    try:
        return PhysicalQubitParams.from_json(spec)
    except ParameterError as exc:
        raise SchemaError(str(exc), "/qubit") from None


def _resolve_codes(spec: Any) -> tuple[QecCodeModel, ...] | None:
    if spec is None:
        return None
    extra = []
    for index, entry in enumerate(spec):
        try:
            extra.append(QecCodeModel.from_json(entry))
        except ParameterError as exc:
            raise SchemaError(str(exc), _pointer("codes", index)) from None
    return BUILTIN_CODES + tuple(extra)


def _resolve_application(
    spec: Any,
    split: BudgetSplit | None,
    synthesis: SynthesisModel,
) -> tuple[LogicalRequirements, AlgorithmCounts | None, str | None, tuple[str, ...]]:
    if isinstance(spec, str):
        try:
            preset = application_preset(spec)
        except UnknownPresetError as exc:
            raise SchemaError(str(exc), "/application") from None
        reqs = preset.resolve(split, synthesis)
        return reqs, preset.counts, preset.name, preset.notes
    if "counts" in spec:
        try:
            counts = AlgorithmCounts.from_json(spec["counts"])
            reqs = logical_counts(counts, split, synthesis)
        except ParameterError as exc:
            raise SchemaError(str(exc), "/application/counts") from None
        return reqs, counts, None, ()
    if "requirements" in spec:
        raw = spec["requirements"]
        eps = raw["error_budget"]
        use = split if split is not None else BudgetSplit()
        try:
            use.validate()
            reqs = LogicalRequirements(
                logical_qubits=raw["logical_qubits"],
                min_time_steps=raw["min_time_steps"],
                t_states=raw["t_states"],
                error_budget=eps,
                logical_budget=use.logical * eps,
                distillation_budget=use.distillation * eps,
                synthesis_budget=use.synthesis * eps,
            )
            reqs.validate()
        except ParameterError as exc:
            raise SchemaError(str(exc), "/application/requirements") from None
        return reqs, None, None, ()
    raw = spec["ising"]
    sites = raw["N"]
    if math.isqrt(sites) ** 2 != sites:
        raise SchemaError(
            "lattice sites must be a perfect square", "/application/ising/N"
        )
    try:
        counts = ising_counts(
            sites,
            raw["T"],
            raw.get("error_budget", _DEFAULT_ISING_BUDGET),
            raw.get("M_meas"),
        )
        reqs = logical_counts(counts, split, synthesis)
    except ParameterError as exc:
        raise SchemaError(str(exc), "/application/ising") from None
    return reqs, counts, None, ()


def _resolve_distance_cap(overrides: dict) -> int | None:
    if "max_code_distance" in overrides:
        return overrides["max_code_distance"]
    raw = os.environ.get(DISTANCE_CAP_ENV)
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ParameterError(f"{DISTANCE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 3:
        raise ParameterError(f"{DISTANCE_CAP_ENV} must be at least 3")
    return cap


def parse_job(obj: Any) -> JobSpec:
    """Validate a job object and resolve every reference in it.

    Raises :class:`SchemaError` for anything a user could write wrong, with
    a JSON pointer locating the problem.
    """
    _schema_pass(obj)

    overrides = obj.get("overrides", {})
    synthesis_over = overrides.get("synthesis", {})
    base_synthesis = SynthesisModel()
    synthesis = SynthesisModel(
        scale=synthesis_over.get("scale", base_synthesis.scale),
        offset=synthesis_over.get("offset", base_synthesis.offset),
    )

    split: BudgetSplit | None = None
    if "budget_split" in obj:
        split = BudgetSplit(
            logical=obj["budget_split"]["logical"],
            distillation=obj["budget_split"]["distillation"],
            synthesis=obj["budget_split"]["synthesis"],
        )
        try:
            split.validate()
        except ParameterError as exc:
            raise SchemaError(str(exc), "/budget_split") from None

    qubit = _resolve_qubit(obj["qubit"])
    requirements, counts, app_name, notes = _resolve_application(
        obj["application"], split, synthesis
    )
    codes = _resolve_codes(obj.get("codes"))

    factory_bounds = None
    if "factory" in overrides:
        base_bounds = SearchBounds()
        factory_bounds = SearchBounds(
            max_rounds=overrides["factory"].get("max_rounds", base_bounds.max_rounds),
            min_distance=overrides["factory"].get("min_distance", base_bounds.min_distance),
            max_distance=overrides["factory"].get("max_distance", base_bounds.max_distance),
            max_final_copies=overrides["factory"].get(
                "max_final_copies", base_bounds.max_final_copies
            ),
        )
        try:
            factory_bounds.validate()
        except ParameterError as exc:
            raise SchemaError(str(exc), "/overrides/factory") from None

    frontier_factors = None
    if "frontier_factors" in obj:
        frontier_factors = tuple(float(f) for f in obj["frontier_factors"])

    return JobSpec(
        qubit=qubit,
        requirements=requirements,
        counts=counts,
        application_name=app_name,
        notes=notes,
        c_factor=float(obj.get("c_factor", 1.0)),
        frontier_factors=frontier_factors,
        budget_split=split,
        synthesis=synthesis,
        distance_cap=_resolve_distance_cap(overrides),
        factory_bounds=factory_bounds,
        codes=codes,
        echo=copy.deepcopy(obj),
    )
