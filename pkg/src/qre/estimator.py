"""End-to-end physical resource estimation.

:func:`estimate` binds the pieces together: it spreads the logical error
budget over a (possibly stretched) schedule, selects the cheapest code and
distance meeting the per-step target, finds a T-state factory for the
distillation target, and then provisions enough factory copies to keep the
algorithm fed. Stretching the schedule past its depth floor (``c_factor``)
trades runtime for fewer factories and often a shorter distance, which is
what :func:`frontier` sweeps.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from attrs import frozen

from .codes import QecCodeModel, select_code
from .counting import LogicalRequirements
from .distillation import SearchBounds, TFactory, search_factory
from .display import format_duration
from .errors import ParameterError
from .qubits import PhysicalQubitParams

_MAX_PASSES = 5

# How factory output is counted: each factory run promises its final-round
# output count at 99% confidence; earlier rounds are treated as satisfied
# by provisioning.
F_ACCOUNTING = "per-final-round-99pct"


@frozen
class PhysicalEstimate:
    """One point of the space-time tradeoff for one workload on one qubit."""

    qubit: PhysicalQubitParams
    requirements: LogicalRequirements
    c_factor: float
    code: QecCodeModel
    distance: int
    time_steps: int
    runtime: int
    factory: TFactory | None
    factory_count: int
    physical_qubits: int

    @property
    def step_time(self) -> int:
        return self.code.step_time(self.qubit, self.distance)

    @property
    def tile_qubits(self) -> int:
        return self.code.tile_qubits(self.distance)

    @property
    def algorithm_qubits(self) -> int:
        """Physical qubits hosting the algorithm's logical patches."""
        return self.requirements.logical_qubits * self.tile_qubits

    @property
    def factory_qubits(self) -> int:
        if self.factory is None:
            return 0
        return self.factory_count * self.factory.qubit_count

    @property
    def factory_fraction(self) -> float:
        return self.factory_qubits / self.physical_qubits

    @property
    def logical_error_rate(self) -> float:
        """Per-patch per-step logical error at the chosen distance."""
        return self.code.logical_error(self.qubit, self.distance)

    @property
    def logical_error_used(self) -> float:
        """Logical-budget consumption over the whole run."""
        return (
            self.requirements.logical_qubits * self.time_steps * self.logical_error_rate
        )

    @property
    def t_error_used(self) -> float:
        """Distillation-budget consumption over all T states."""
        if self.factory is None:
            return 0.0
        return self.requirements.t_states * self.factory.output_error

    def to_json(self) -> dict:
        return {
            "c_factor": self.c_factor,
            "code": self.code.name,
            "distance": self.distance,
            "time_steps": self.time_steps,
            "step_time": {"ns": self.step_time, "display": format_duration(self.step_time)},
            "runtime": {"ns": self.runtime, "display": format_duration(self.runtime)},
            "physical_qubits": self.physical_qubits,
            "factory": None if self.factory is None else self.factory.to_json(),
            "factory_count": self.factory_count,
            "breakdown": {
                "algorithm_qubits": self.algorithm_qubits,
                "factory_qubits": self.factory_qubits,
                "factory_fraction": self.factory_fraction,
                "logical_error_used": self.logical_error_used,
                "t_error_used": self.t_error_used,
            },
            "f_accounting": F_ACCOUNTING,
        }


def estimate(
    qubit: PhysicalQubitParams,
    requirements: LogicalRequirements,
    c_factor: float = 1.0,
    *,
    codes: tuple[QecCodeModel, ...] | None = None,
    distance_cap: int | None = None,
    factory_bounds: SearchBounds | None = None,
) -> PhysicalEstimate:
    """Estimate physical resources for one schedule-stretch factor.

    The step count, code distance, and factory interlock: more steps loosen
    the per-step logical target but tighten nothing else, while a factory
    slower than the whole schedule forces more steps. A handful of passes
    settles this; in practice two suffice.
    """
    qubit.validate()
    requirements.validate()
    if c_factor < 1:
        raise ParameterError("schedule stretch factor must be at least 1")
    steps = max(1, math.ceil(c_factor * requirements.min_time_steps))
    target_t_error = requirements.max_t_state_error
    factory: TFactory | None = None
    for _ in range(_MAX_PASSES):
        per_step_target = requirements.logical_budget / (
            requirements.logical_qubits * steps
        )
        code, distance = select_code(qubit, per_step_target, codes, distance_cap)
        step_time = code.step_time(qubit, distance)
        runtime = step_time * steps
        if requirements.t_states <= 0:
            factory = None
            break
        factory = search_factory(qubit, code, target_t_error, factory_bounds)
        if factory.duration <= runtime:
            break
        # A factory slower than the whole schedule would starve the
        # algorithm; pad the schedule and re-settle the distance.
        steps = max(steps, math.ceil(factory.duration / step_time))

    if factory is None:
        factory_count = 0
    else:
        factory_count = math.ceil(
            requirements.t_states * factory.duration / (factory.output_count * runtime)
        )
    physical_qubits = (
        factory_count * (0 if factory is None else factory.qubit_count)
        + requirements.logical_qubits * code.tile_qubits(distance)
    )
    return PhysicalEstimate(
        qubit=qubit,
        requirements=requirements,
        c_factor=c_factor,
        code=code,
        distance=distance,
        time_steps=steps,
        runtime=runtime,
        factory=factory,
        factory_count=factory_count,
        physical_qubits=physical_qubits,
    )


def frontier(
    qubit: PhysicalQubitParams,
    requirements: LogicalRequirements,
    c_factors: tuple[float, ...],
    *,
    parallel: bool = True,
    codes: tuple[QecCodeModel, ...] | None = None,
    distance_cap: int | None = None,
    factory_bounds: SearchBounds | None = None,
) -> tuple[PhysicalEstimate, ...]:
    """Sweep the space-time tradeoff over several stretch factors.

    The result is sorted by step count and identical whether computed in
    parallel or not; ``parallel`` only changes wall-clock time.
    """
    factors = tuple(float(f) for f in c_factors)
    for f in factors:
        if f < 1:
            raise ParameterError("schedule stretch factor must be at least 1")

    def run_one(f: float) -> PhysicalEstimate:
        return estimate(
            qubit,
            requirements,
            f,
            codes=codes,
            distance_cap=distance_cap,
            factory_bounds=factory_bounds,
        )

    if not factors:
        return ()
    if parallel:
        with ThreadPoolExecutor(max_workers=min(8, len(factors))) as pool:
            results = list(pool.map(run_one, factors))
    else:
        results = [run_one(f) for f in factors]
    return tuple(sorted(results, key=lambda e: (e.time_steps, e.c_factor)))


class PerfectEstimate(NamedTuple):
    """Resources assuming error-free hardware: no code, no factories."""

    logical_qubits: int
    runtime: float


def perfect_qubit_estimate(
    requirements: LogicalRequirements, step_time: int
) -> PerfectEstimate:
    """Lower bound with noiseless qubits running at a fixed step time."""
    requirements.validate()
    if step_time <= 0:
        raise ParameterError("non-positive duration (step_time)")
    runtime = requirements.min_time_steps * step_time
    if runtime == int(runtime):
        runtime = int(runtime)
    return PerfectEstimate(requirements.logical_qubits, runtime)
