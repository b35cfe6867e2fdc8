"""Exhaustive property sweeps behind ``grasscat verify``.

Each suite walks every polygon size from 4 up to ``nmax`` and records one
check per property instance. A suite never stops at the first failure; it
collects a description of every failing instance so the report lists all
of them.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .arquiver import (
    ar_sequences,
    build_c2n,
    cluster_tilting_bijection,
    iyama_yoshino_check,
    reduce,
    validate,
)
from .character import (
    cc_character_fan,
    plucker_character,
    plucker_frieze,
    seed_variables,
    verify_restriction,
)
from .combinatorics import (
    Arc,
    boundary_arcs,
    catalan,
    cut_polygon,
    enumerate_arcs,
    enumerate_diagonals,
    enumerate_rigid_sets,
    enumerate_triangulations,
    fan_triangulation,
    quiddity,
)
from .constants import (
    MAX_FLIP_ORDER_POLYGON,
    MAX_LAURENT_POLYGON,
    MAX_SWEEP_RIGID,
    MIN_AR_POLYGON,
    Q38_E8_SEQUENCE,
    SUITES,
)
from .exceptions import PreconditionError
from .frieze import (
    mesh_check,
    mesh_frieze,
    mesh_slice,
    ptolemy_check,
    ptolemy_frieze,
    quiddity_row,
    restrict_frieze,
)
from .laurent import LaurentPoly
from .logging_util import get_logger
from .morphisms import (
    ar_sequence_maps,
    compose,
    composition_vanishes,
    defect,
    ext_dim,
    factors_through,
    hom_generator,
    sequence_terms,
    stable_endomorphism_defect,
)
from .mutation import builtin, fan_quiver, is_dynkin_orientation, mutate, mutate_sequence


@dataclass
class SuiteResult:
    """Outcome of one suite: number of checks, failures, and named counts."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, description: str) -> None:
        self.checks += 1
        if not ok:
            get_logger().warning(f"[{self.name}] FAIL {description}")
            self.failures.append(description)

    def count(self, key: str, amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": list(self.failures),
            "counts": dict(self.counts),
        }


def _sizes(nmax: int, cap: int | None = None) -> range:
    upper = nmax if cap is None else min(nmax, cap)
    return range(MIN_AR_POLYGON, upper + 1)


def _label(frozen: frozenset[Arc]) -> str:
    return "{" + ";".join(f"{x.i},{x.j}" for x in sorted(frozen)) + "}"


# =============================================================================
# Reduction
# =============================================================================


def _check_m14_reduction(result: SuiteResult) -> None:
    n = 6
    x = Arc.from_endpoints(n, 1, 4)

    def arc(a: int, b: int) -> Arc:
        return Arc.from_endpoints(n, a, b)

    quiver = reduce(n, {x})
    result.record(len(quiver.vertices) == 11, "reduce(6,{1,4}) has 11 vertices")
    result.record(
        quiver.projectives == frozenset(boundary_arcs(n)) | {x},
        "reduce(6,{1,4}) projectives are the boundary and (1,4)",
    )
    ends = sorted(end for _, _, end in ar_sequences(quiver))
    result.record(
        ends == sorted([arc(1, 3), arc(2, 4), arc(1, 5), arc(4, 6)]),
        "reduce(6,{1,4}) AR sequences end at (1,3),(2,4),(1,5),(4,6)",
    )
    result.record(
        quiver.tau.get(arc(2, 4)) == arc(1, 3)
        and quiver.middle(arc(2, 4)) == [arc(1, 2), arc(3, 4)],
        "reduce(6,{1,4}) sequence (1,3) -> (1,2)+(3,4) -> (2,4)",
    )
    for a, b in ((arc(4, 5), arc(3, 4)), (arc(1, 2), arc(1, 6))):
        result.record((a, b) in quiver.arrows, f"reduce(6,{{1,4}}) has arrow {a} -> {b}")


def run_reduction_suite(nmax: int) -> SuiteResult:
    """AR quivers, reductions, Iyama-Yoshino compatibility and cluster tilting."""
    result = SuiteResult("reduction")
    _check_m14_reduction(result)

    for n in _sizes(nmax):
        get_logger().info(f"[reduction] n={n}")
        full = build_c2n(n)
        result.record(
            len(full.vertices) == comb(n, 2)
            and len(full.projectives) == n
            and len(ar_sequences(full)) == comb(n, 2) - n,
            f"C(2,{n}) counts",
        )
        result.record(not validate(full), f"C(2,{n}) is a translation quiver")
        result.record(reduce(n, ()) == full, f"radical oracle reproduces C(2,{n})")
        for end in full.non_projectives:
            f, g = ar_sequence_maps(end.i, end.j, n)
            start, middle, last = sequence_terms(f, g)
            result.record(
                start == full.tau[end] and last == end and sorted(middle) == full.middle(end),
                f"AR sequence ending at {end} in C(2,{n}) matches tau and arrows",
            )

        for frozen in enumerate_rigid_sets(n, MAX_SWEEP_RIGID):
            label = _label(frozen)
            quiver = reduce(n, frozen)
            result.count("rigid sets")
            result.record(not validate(quiver), f"reduce({n},{label}) is a translation quiver")
            result.record(
                quiver.projectives == frozenset(boundary_arcs(n)) | frozen,
                f"reduce({n},{label}) projectives",
            )
            result.record(
                list(quiver.vertices)
                == [a for a in enumerate_arcs(n) if all(ext_dim(a, x) == 0 for x in frozen)],
                f"reduce({n},{label}) vertices are the arcs crossing no member of X",
            )
            result.record(iyama_yoshino_check(n, frozen), f"Iyama-Yoshino at n={n}, X={label}")
            result.record(
                cluster_tilting_bijection(n, frozen),
                f"cluster-tilting bijection at n={n}, X={label}",
            )
            expected = prod(catalan(m - 2) for m in cut_polygon(n, frozen).sizes)
            found = len(enumerate_triangulations(n, frozen))
            result.count("triangulations", found)
            result.record(
                found == expected,
                f"{found} triangulations contain {label} in the {n}-gon, expected {expected}",
            )
    return result


# =============================================================================
# Frieze
# =============================================================================


def _check_reference_friezes(result: SuiteResult) -> None:
    n = 6

    def arc(a: int, b: int) -> Arc:
        return Arc.from_endpoints(n, a, b)

    fan = ptolemy_frieze(n, fan_triangulation(n, 1))
    expected = {(2, 4): 2, (3, 5): 2, (4, 6): 2, (2, 5): 3, (3, 6): 3, (2, 6): 4}
    result.record(
        all(fan[arc(a, b)] == v for (a, b), v in expected.items()),
        "fan frieze of the hexagon has values 2,2,2,3,3,4",
    )
    result.record(mesh_frieze(build_c2n(n)) == fan, "mesh fixpoint reproduces the fan frieze")
    result.record(not mesh_check(build_c2n(n), fan), "fan frieze satisfies the mesh relations")

    other = ptolemy_frieze(n, fan_triangulation(n, 6))
    result.record(other[arc(1, 4)] == 3, "frieze of {2,6;3,6;4,6} has p(1,4) = 3")

    reduced = mesh_frieze(reduce(n, {arc(1, 4)}))
    result.record(
        [reduced[arc(*p)] for p in ((1, 3), (1, 5), (2, 4), (4, 6))] == [1, 1, 2, 2],
        "mesh frieze of reduce(6,{1,4}) has values 1,1,2,2",
    )


def run_frieze_suite(nmax: int) -> SuiteResult:
    """Ptolemy friezes against the mesh oracle and the frieze reduction theorem."""
    result = SuiteResult("frieze")
    _check_reference_friezes(result)

    for n in _sizes(nmax):
        get_logger().info(f"[frieze] n={n}")
        full = build_c2n(n)
        slice_arcs = mesh_slice(full)
        diagonals = enumerate_diagonals(n)
        reductions = {m: reduce(n, {m}) for m in diagonals}
        pieces = {m: cut_polygon(n, {m}) for m in diagonals}
        for triangulation in enumerate_triangulations(n):
            result.count("triangulations")
            frieze = ptolemy_frieze(n, triangulation)
            label = str(triangulation)
            result.record(frieze.is_positive_integral(), f"frieze of {label} is positive integral")
            if n <= MAX_FLIP_ORDER_POLYGON:
                result.record(
                    ptolemy_frieze(n, triangulation, reverse=True) == frieze,
                    f"frieze of {label} is independent of the flip order",
                )
            result.record(not mesh_check(full, frieze), f"frieze of {label} passes mesh_check")
            seeded = mesh_frieze(full, slice_values={a: frieze[a] for a in slice_arcs})
            result.record(seeded == frieze, f"slice-seeded mesh frieze reproduces {label}")
            result.record(
                quiddity_row(frieze) == tuple(Fraction(q) for q in quiddity(triangulation)),
                f"second row of {label} is its quiddity",
            )

            for m in diagonals:
                in_t = m in triangulation.diagonals
                if not in_t and (frieze[m] < 2 or not reductions[m].tau):
                    continue
                restricted = restrict_frieze(frieze, {m})
                violations = mesh_check(reductions[m], restricted)
                if in_t:
                    result.record(not violations, f"{label} restricted to {m} passes mesh_check")
                    continue
                result.count("coefficient friezes")
                result.record(bool(violations), f"{label} restricted to {m} fails mesh_check")
                result.record(
                    not ptolemy_check(n, restricted, pieces[m]),
                    f"{label} restricted to {m} passes piecewise ptolemy_check",
                )
    return result


# =============================================================================
# Character
# =============================================================================


def run_character_suite(nmax: int) -> SuiteResult:
    """Ptolemy characters against the fan oracle, positivity, exchange and restriction."""
    result = SuiteResult("character")

    for n in _sizes(nmax):
        get_logger().info(f"[character] fan oracle n={n}")
        frozen = boundary_arcs(n)
        for v in range(1, n + 1):
            triangulation = fan_triangulation(n, v)
            ones = {a: 1 for a in seed_variables(triangulation)}
            frieze = ptolemy_frieze(n, triangulation)
            for arc in enumerate_arcs(n):
                character = plucker_character(n, triangulation, arc)
                oracle = cc_character_fan(n, v, arc)
                result.record(
                    character.evaluate_at_one(frozen) == oracle,
                    f"fan {v} of the {n}-gon: character of {arc} matches the oracle",
                )
                result.record(
                    character.specialize(ones) == frieze[arc] == oracle.specialize(ones),
                    f"fan {v} of the {n}-gon: character of {arc} at all ones",
                )

    for n in _sizes(nmax, MAX_LAURENT_POLYGON):
        get_logger().info(f"[character] exchange and restriction n={n}")
        for triangulation in enumerate_triangulations(n):
            result.count("seeds")
            label = str(triangulation)
            characters = plucker_frieze(n, triangulation)
            result.record(
                all(
                    characters[t] == LaurentPoly.variable(seed_variables(triangulation), t)
                    for t in seed_variables(triangulation)
                ),
                f"characters over {label} are the seed variables on T and the boundary",
            )
            result.record(
                all(c.has_positive_coefficients() for c in characters.values.values()),
                f"characters over {label} have positive coefficients",
            )
            result.record(
                not ptolemy_check(n, characters),
                f"characters over {label} satisfy every exchange relation",
            )
            for frozen_set in enumerate_rigid_sets(n, MAX_SWEEP_RIGID):
                if not frozen_set or not frozen_set <= triangulation.diagonals:
                    continue
                result.count("restrictions")
                try:
                    ok = verify_restriction(n, triangulation, frozen_set)
                except PreconditionError as e:
                    ok = False
                    get_logger().error(f"[character] {e}")
                result.record(ok, f"restriction over {label} to {_label(frozen_set)}")
    return result


# =============================================================================
# Morphisms
# =============================================================================


def run_morphisms_suite(nmax: int) -> SuiteResult:
    """Generator recurrence, composition defects, AR maps, Ext against tau, stable bricks."""
    result = SuiteResult("morphisms")

    for n in _sizes(nmax):
        get_logger().info(f"[morphisms] n={n}")
        arcs = enumerate_arcs(n)
        for source in arcs:
            for target in arcs:
                result.record(
                    min(hom_generator(source, target).alpha) == 0,
                    f"generator {source} -> {target} has minimum exponent 0",
                )
        for first in arcs:
            for middle in arcs:
                head = hom_generator(first, middle)
                for last in arcs:
                    composite = compose(head, hom_generator(middle, last))
                    c = defect(composite)
                    generator = hom_generator(first, last).alpha
                    result.record(
                        tuple(a - c for a in composite.alpha) == generator
                        and (c == 0) == factors_through(first, middle, last),
                        f"composite {first} -> {middle} -> {last} is t^{c} times the generator",
                    )
                result.count("triples", len(arcs))

        full = build_c2n(n)
        for end in full.non_projectives:
            f, g = ar_sequence_maps(end.i, end.j, n)
            result.record(composition_vanishes(f, g), f"AR maps at {end} in C(2,{n}) compose to 0")
        for frozen in enumerate_rigid_sets(n, MAX_SWEEP_RIGID):
            quiver = reduce(n, frozen)
            for x in quiver.non_projectives:
                result.record(
                    ext_dim(x, quiver.tau[x]) == 1,
                    f"Ext(X, tau X) = 1 at {x} in reduce({n},{_label(frozen)})",
                )
                result.record(
                    stable_endomorphism_defect(x, quiver.projectives) == 1,
                    f"stable End of {x} in reduce({n},{_label(frozen)}) is the ground field",
                )
    return result


# =============================================================================
# Mutation
# =============================================================================


def run_mutation_suite(nmax: int) -> SuiteResult:
    """The E6 and E8 mutation claims, involutivity, and fan quivers of type A."""
    result = SuiteResult("mutation")
    q37 = builtin("Q37")
    q38 = builtin("Q38")
    result.record(not is_dynkin_orientation(q37, "E6"), "Q37 itself is not of type E6")
    result.record(is_dynkin_orientation(mutate(q37, "4"), "E6"), "mutating Q37 at 4 gives E6")
    result.record(
        is_dynkin_orientation(mutate_sequence(q38, Q38_E8_SEQUENCE), "E8"),
        "the 12-step sequence on Q38 gives E8",
    )
    for quiver, name in ((q37, "Q37"), (q38, "Q38")):
        for label in quiver.labels:
            result.record(
                mutate(mutate(quiver, label), label) == quiver,
                f"mutation of {name} at {label} is an involution",
            )
    for n in _sizes(nmax):
        for v in range(1, n + 1):
            result.record(
                is_dynkin_orientation(fan_quiver(n, v), f"A{n - 3}"),
                f"fan quiver ({n}, {v}) is of type A{n - 3}",
            )
    return result


SUITE_RUNNERS: dict[str, Callable[[int], SuiteResult]] = {
    "reduction": run_reduction_suite,
    "frieze": run_frieze_suite,
    "character": run_character_suite,
    "morphisms": run_morphisms_suite,
    "mutation": run_mutation_suite,
}


def run_suites(names: list[str], nmax: int) -> list[SuiteResult]:
    """Run the named suites in order; "all" expands to every suite."""
    selected: list[str] = []
    for name in names:
        for expanded in SUITES if name == "all" else [name]:
            if expanded not in SUITE_RUNNERS:
                raise PreconditionError("run_suites", f"unknown suite '{expanded}'")
            if expanded not in selected:
                selected.append(expanded)
    results = []
    for name in selected:
        get_logger().info(f"Running suite {name} with nmax={nmax}")
        results.append(SUITE_RUNNERS[name](nmax))
    return results
