"""T-state distillation units, factories, and the factory search.

Factories are pipelines of 15-to-1 distillation rounds. Within a round,
``copies`` identical units run in parallel; rounds run back to back and
reuse the same hardware, so a factory's qubit cost is the widest round and
its duration is the sum over rounds.

Two unit layouts are modeled (a compact one and a Reed-Muller-style
preparation), each at physical level (Majorana hardware only) or hosted in
logical patches. All four share one first-order behavior per unit: an
output error of ``35*q**3 + 7.1*p`` and an acceptance probability of
``1 - 15*q - 356*p``, where ``q`` is the input T-state error and ``p`` the
Clifford-level error inside the unit.

Copy counts are provisioned so each round delivers the 15 inputs per
next-round unit with 99% confidence, and the advertised output count is
what the final round produces at that same confidence.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Sequence

from attrs import frozen
from scipy.stats import binom

from .codes import LogicalPatch, QecCodeModel
from .codes import patch as make_patch
from .errors import (
    FactoryOutputError,
    NoFactoryError,
    ParameterError,
    ValidityRangeError,
)
from .qubits import InstructionSet, PhysicalQubitParams

ACCOUNTING_CONFIDENCE = 0.99

_PROVISION_LIMIT = 10**9


class UnitKind(enum.Enum):
    """Distillation unit layout."""

    SPACE_EFFICIENT = "space-efficient"
    RM_PREP = "rm-prep"


class UnitLevel(enum.Enum):
    PHYSICAL = "physical"
    LOGICAL = "logical"


# (kind, level) -> qubit cost factor, duration factor. Physical rows are
# absolute qubits and multiples of t_meas; logical rows are multiples of the
# patch tile size and of the patch step time.
_UNIT_QUBITS = {
    (UnitKind.SPACE_EFFICIENT, UnitLevel.PHYSICAL): 12,
    (UnitKind.RM_PREP, UnitLevel.PHYSICAL): 31,
    (UnitKind.SPACE_EFFICIENT, UnitLevel.LOGICAL): 20,
    (UnitKind.RM_PREP, UnitLevel.LOGICAL): 31,
}
_UNIT_STEPS = {
    (UnitKind.SPACE_EFFICIENT, UnitLevel.PHYSICAL): 46,
    (UnitKind.RM_PREP, UnitLevel.PHYSICAL): 23,
    (UnitKind.SPACE_EFFICIENT, UnitLevel.LOGICAL): 13,
    (UnitKind.RM_PREP, UnitLevel.LOGICAL): 11,
}


def unit_output_error(
    kind: UnitKind,
    level: UnitLevel,
    input_error: float,
    clifford_error: float,
) -> tuple[float, float]:
    """First-order output error and acceptance probability of one unit.

    ``kind`` and ``level`` are part of the interface for symmetry with the
    cost tables, but every 15-to-1 variant shares the same first-order
    model, so they do not enter the arithmetic.

    Returns ``(output_error, acceptance_probability)``.
    """
    del kind, level
    for label, value in (("input error", input_error), ("clifford error", clifford_error)):
        if not 0.0 <= value < 1.0:
            raise ValidityRangeError(
                f"formula out of validity range: {label} {value!r} not in [0, 1)"
            )
    acceptance = 1.0 - 15.0 * input_error - 356.0 * clifford_error
    if acceptance <= 0.0:
        raise ValidityRangeError(
            "formula out of validity range: acceptance probability is not positive "
            f"(input error {input_error:.3g}, clifford error {clifford_error:.3g})"
        )
    output = 35.0 * input_error**3 + 7.1 * clifford_error
    return output, acceptance


def _binomial_tail(successes: int, trials: int, p: float) -> float:
    """P[Binomial(trials, p) >= successes]."""
    return float(binom.sf(successes - 1, trials, p))


@lru_cache(maxsize=None)
def provisioned_copies(required: int, acceptance: float) -> int:
    """Smallest copy count delivering ``required`` successes at 99% confidence.

    The all-success shortcut (``acceptance ** required``) covers the common
    high-acceptance case without touching the binomial tail at all; repeated
    queries hit the cache, which matters during the factory search.
    """
    if required <= 0:
        return 0
    if not 0.0 < acceptance <= 1.0:
        raise ValidityRangeError(
            f"formula out of validity range: acceptance probability {acceptance!r}"
        )
    if acceptance**required >= ACCOUNTING_CONFIDENCE:
        return required
    lo = required
    hi = required
    while _binomial_tail(required, hi, acceptance) < ACCOUNTING_CONFIDENCE:
        hi *= 2
        if hi > _PROVISION_LIMIT:
            raise ValidityRangeError(
                f"formula out of validity range: provisioning for {required} "
                f"successes at acceptance {acceptance:.3g} diverges"
            )
    while lo < hi:
        mid = (lo + hi) // 2
        if _binomial_tail(required, mid, acceptance) >= ACCOUNTING_CONFIDENCE:
            hi = mid
        else:
            lo = mid + 1
    return lo


@lru_cache(maxsize=None)
def reliable_outputs(copies: int, acceptance: float) -> int:
    """Largest output count the final round guarantees at 99% confidence.

    Zero means the configuration cannot promise a single state.
    """
    if copies < 1:
        raise ParameterError("copies must be at least 1")
    if not 0.0 < acceptance <= 1.0:
        raise ValidityRangeError(
            f"formula out of validity range: acceptance probability {acceptance!r}"
        )
    if acceptance**copies >= ACCOUNTING_CONFIDENCE:
        return copies
    lo, hi = 0, copies
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _binomial_tail(mid, copies, acceptance) >= ACCOUNTING_CONFIDENCE:
            lo = mid
        else:
            hi = mid - 1
    return lo


@frozen
class DistillationUnitSpec:
    """One unit layout at one level. ``patch`` is None for physical level."""

    kind: UnitKind
    patch: LogicalPatch | None = None

    @property
    def level(self) -> UnitLevel:
        return UnitLevel.PHYSICAL if self.patch is None else UnitLevel.LOGICAL

    @property
    def distance(self) -> int | None:
        return None if self.patch is None else self.patch.distance

    def qubit_cost(self) -> int:
        factor = _UNIT_QUBITS[(self.kind, self.level)]
        if self.patch is None:
            return factor
        return factor * self.patch.tile_qubits

    def duration(self, qubit: PhysicalQubitParams) -> int:
        """Wall-clock time of one unit, in nanoseconds."""
        self._check_host(qubit)
        factor = _UNIT_STEPS[(self.kind, self.level)]
        if self.patch is None:
            return factor * qubit.t_meas
        return factor * self.patch.step_time

    def clifford_error(self, qubit: PhysicalQubitParams) -> float:
        """Error rate of the Clifford operations inside the unit."""
        self._check_host(qubit)
        if self.patch is None:
            return qubit.p_clifford
        return self.patch.logical_error

    def _check_host(self, qubit: PhysicalQubitParams) -> None:
        if self.patch is None:
            if qubit.instruction_set is not InstructionSet.MAJORANA:
                raise ParameterError(
                    "physical-level distillation requires a Majorana instruction set"
                )
        elif self.patch.qubit != qubit:
            raise ParameterError("unit patch was built for a different qubit model")

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "level": self.level.value,
            "distance": self.distance,
        }


@frozen
class TFactoryRound:
    unit: DistillationUnitSpec
    copies: int

    def to_json(self) -> dict:
        return {**self.unit.to_json(), "copies": self.copies}


@frozen
class TFactory:
    """A fully evaluated distillation pipeline.

    ``qubit_count`` is the widest round, ``duration`` the sum over rounds in
    nanoseconds, ``output_error`` the error rate of each delivered T state,
    and ``output_count`` how many states one run delivers at the accounting
    confidence.
    """

    rounds: tuple[TFactoryRound, ...]
    qubit_count: int
    duration: int
    output_error: float
    output_count: int
    acceptance_probabilities: tuple[float, ...]

    def to_json(self) -> dict:
        from .display import format_duration

        return {
            "rounds": [r.to_json() for r in self.rounds],
            "qubit_count": self.qubit_count,
            "duration": {"ns": self.duration, "display": format_duration(self.duration)},
            "output_error": self.output_error,
            "output_count": self.output_count,
            "acceptance_probabilities": list(self.acceptance_probabilities),
        }


def _error_chain(
    rounds: Sequence[TFactoryRound], qubit: PhysicalQubitParams
) -> tuple[float, list[float]]:
    error = qubit.p_t
    acceptances: list[float] = []
    for rnd in rounds:
        error, acceptance = unit_output_error(
            rnd.unit.kind, rnd.unit.level, error, rnd.unit.clifford_error(qubit)
        )
        acceptances.append(acceptance)
    return error, acceptances


def evaluate_factory(
    rounds: Sequence[TFactoryRound], qubit: PhysicalQubitParams
) -> TFactory:
    """Evaluate a distillation pipeline into a :class:`TFactory`.

    Validates the structural rules (physical units only in the first round
    and only on Majorana hardware, one code model throughout, non-decreasing
    distances, copy counts meeting the provisioning rule) and rejects
    configurations that cannot deliver a single output reliably.
    """
    rounds = tuple(rounds)
    if not rounds:
        raise ParameterError("a factory needs at least one distillation round")
    codes_seen: set[QecCodeModel] = set()
    last_distance = 0
    for index, rnd in enumerate(rounds):
        if rnd.copies < 1:
            raise ParameterError(f"round {index + 1}: copies must be at least 1")
        unit = rnd.unit
        if unit.patch is None:
            if index > 0:
                raise ParameterError(
                    f"round {index + 1}: physical-level units are only allowed first"
                )
        else:
            codes_seen.add(unit.patch.code)
            if unit.patch.distance < last_distance:
                raise ParameterError(
                    "distances must be non-decreasing across logical rounds"
                )
            last_distance = unit.patch.distance
        unit._check_host(qubit)
    if len(codes_seen) > 1:
        raise ParameterError("factory patches must share one code model")

    output_error, acceptances = _error_chain(rounds, qubit)
    for index in range(len(rounds) - 1):
        needed = provisioned_copies(15 * rounds[index + 1].copies, acceptances[index])
        if rounds[index].copies < needed:
            raise ParameterError(
                f"round {index + 1} under-provisioned: {rounds[index].copies} copies "
                f"cannot feed round {index + 2} (need {needed})"
            )
    output_count = reliable_outputs(rounds[-1].copies, acceptances[-1])
    if output_count == 0:
        raise FactoryOutputError("factory produces no reliable output")
    return TFactory(
        rounds=rounds,
        qubit_count=max(r.copies * r.unit.qubit_cost() for r in rounds),
        duration=sum(r.unit.duration(qubit) for r in rounds),
        output_error=output_error,
        output_count=output_count,
        acceptance_probabilities=tuple(acceptances),
    )


@frozen
class SearchBounds:
    """Limits on the factory search space.

    Logical distances run over odd values in ``[min_distance,
    max_distance]``; the final round tries up to ``max_final_copies``
    parallel units.
    """

    max_rounds: int = 3
    min_distance: int = 3
    max_distance: int = 31
    max_final_copies: int = 2

    def validate(self) -> None:
        if self.max_rounds < 1:
            raise ParameterError("factory search needs at least one round")
        if self.min_distance < 3:
            raise ParameterError("factory distances start at 3")
        if self.max_distance < self.min_distance:
            raise ParameterError("empty factory distance range")
        if self.max_final_copies < 1:
            raise ParameterError("final round needs at least one unit")

    def to_json(self) -> dict:
        return {
            "max_rounds": self.max_rounds,
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
            "max_final_copies": self.max_final_copies,
        }


def _provision_rounds(
    units: Sequence[DistillationUnitSpec],
    final_copies: int,
    qubit: PhysicalQubitParams,
) -> tuple[TFactoryRound, ...] | None:
    """Attach minimal copy counts to a unit pipeline, last round fixed.

    Returns None when some acceptance probability is not positive, so the
    search can simply skip the configuration.
    """
    error = qubit.p_t
    acceptances = []
    try:
        for unit in units:
            error, acceptance = unit_output_error(
                unit.kind, unit.level, error, unit.clifford_error(qubit)
            )
            acceptances.append(acceptance)
        copies = [0] * len(units)
        copies[-1] = final_copies
        for index in range(len(units) - 2, -1, -1):
            copies[index] = provisioned_copies(15 * copies[index + 1], acceptances[index])
    except ValidityRangeError:
        return None
    return tuple(TFactoryRound(unit=u, copies=c) for u, c in zip(units, copies))


@lru_cache(maxsize=None)
def _search_candidates(
    qubit: PhysicalQubitParams, code: QecCodeModel, bounds: SearchBounds
) -> tuple[TFactory, ...]:
    """Every evaluable factory in the bounded space, in generation order.

    The set does not depend on the error target, so one enumeration serves
    every query against the same (qubit, code, bounds) triple.
    """
    distances = [
        d
        for d in range(max(3, bounds.min_distance), bounds.max_distance + 1)
        if d % 2 == 1
    ]
    patches = {d: make_patch(code, qubit, d) for d in distances}
    majorana = qubit.instruction_set is InstructionSet.MAJORANA
    kinds = tuple(UnitKind)
    found: list[TFactory] = []
    for total_rounds in range(1, bounds.max_rounds + 1):
        for first_physical in (False, True) if majorana else (False,):
            logical_rounds = total_rounds - int(first_physical)
            if logical_rounds < 1:
                # The final round must hand over encoded states.
                continue
            for first_kind in kinds if first_physical else (None,):
                prefix = () if first_kind is None else (DistillationUnitSpec(kind=first_kind),)
                for logical_kinds in product(kinds, repeat=logical_rounds):
                    for combo in combinations_with_replacement(distances, logical_rounds):
                        units = prefix + tuple(
                            DistillationUnitSpec(kind=k, patch=patches[d])
                            for k, d in zip(logical_kinds, combo)
                        )
                        for final_copies in range(1, bounds.max_final_copies + 1):
                            rounds = _provision_rounds(units, final_copies, qubit)
                            if rounds is None:
                                continue
                            try:
                                found.append(evaluate_factory(rounds, qubit))
                            except FactoryOutputError:
                                continue
    return tuple(found)


def search_factory(
    qubit: PhysicalQubitParams,
    code: QecCodeModel,
    target_error: float,
    bounds: SearchBounds | None = None,
) -> TFactory:
    """Cheapest factory whose output error meets the target.

    Cost is the qubit-seconds product ``qubit_count * duration``; ties go to
    fewer qubits, then to the shorter duration, then to generation order.
    Raises :class:`NoFactoryError` (carrying the best error any candidate
    achieved) when the bounded space cannot reach the target.
    """
    if not target_error > 0:
        raise ParameterError("target error must be positive")
    bounds = SearchBounds() if bounds is None else bounds
    bounds.validate()
    candidates = _search_candidates(qubit, code, bounds)
    best: TFactory | None = None
    best_key: tuple[int, int, int, int] | None = None
    achieved: float | None = None
    for index, factory in enumerate(candidates):
        if achieved is None or factory.output_error < achieved:
            achieved = factory.output_error
        if factory.output_error > target_error:
            continue
        key = (
            factory.qubit_count * factory.duration,
            factory.qubit_count,
            factory.duration,
            index,
        )
        if best_key is None or key < best_key:
            best, best_key = factory, key
    if best is None:
        raise NoFactoryError(target_error, achieved)
    return best
