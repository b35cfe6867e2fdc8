"""Monomial morphisms between rank-1 modules M_I over the circle algebra.

Every vertex space of M_I is the power series ring Z = C[[t]], so a morphism
M_I -> M_J between rank-1 modules is determined by the power of t it uses at
each vertex. We store only that exponent tuple. Signs needed in matrices of
morphisms are carried by :class:`SignedMorphism`.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Arc, KSubset, crossing
from .exceptions import (
    BoundaryArcError,
    InvalidMorphismError,
    MismatchedAmbientError,
    NonComposableError,
    PreconditionError,
    UnsupportedKError,
)


def _step(source: KSubset, target: KSubset, j: int) -> int:
    """Required value of alpha_j - alpha_{j-1}."""
    if j in target.elements and j not in source.elements:
        return 1
    if j in source.elements and j not in target.elements:
        return -1
    return 0


@dataclass(frozen=True)
class MonomialMorphism:
    """A morphism M_source -> M_target given by t-exponents at each vertex."""

    source: KSubset
    target: KSubset
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if self.source.n != self.target.n or self.source.k != self.target.k:
            raise MismatchedAmbientError(str(self.source), str(self.target))
        n = self.source.n
        if len(self.alpha) != n:
            raise InvalidMorphismError(
                str(self.source), str(self.target), f"expected {n} exponents"
            )
        if min(self.alpha) < 0:
            raise InvalidMorphismError(
                str(self.source), str(self.target), "exponents must be non-negative"
            )
        for j in range(1, n + 1):
            # alpha is 0-indexed: vertex j sits at j - 1, and vertex 0 wraps to n
            if self.alpha[j - 1] - self.alpha[j - 2] != _step(self.source, self.target, j):
                raise InvalidMorphismError(
                    str(self.source), str(self.target), f"difference rule fails at vertex {j}"
                )

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def is_generator(self) -> bool:
        return min(self.alpha) == 0

    def __str__(self) -> str:
        exps = ",".join(str(a) for a in self.alpha)
        return f"{self.source}->{self.target} t^({exps})"


@dataclass(frozen=True)
class SignedMorphism:
    """A monomial morphism with a scalar sign, an entry of a map matrix."""

    sign: int
    morphism: MonomialMorphism


@lru_cache(maxsize=None)
def hom_generator(source: KSubset, target: KSubset) -> MonomialMorphism:
    """The generator phi^I_J of Hom(M_I, M_J) as a Z-module.

    Solves alpha_j - alpha_{j-1} = [j in J-I] - [j in I-J] around the cycle
    and normalizes so that the minimum exponent is 0. The increments sum to
    |J - I| - |I - J| = 0, so the recurrence closes up.

    Raises:
        MismatchedAmbientError: If n or k differ
    """
    if source.n != target.n or source.k != target.k:
        raise MismatchedAmbientError(
            f"{source} in n={source.n}", f"{target} in n={target.n}"
        )
    alpha = [0]
    for j in range(2, source.n + 1):
        alpha.append(alpha[-1] + _step(source, target, j))
    low = min(alpha)
    return MonomialMorphism(source, target, tuple(a - low for a in alpha))


def identity(subset: KSubset) -> MonomialMorphism:
    return hom_generator(subset, subset)


def compose(first: MonomialMorphism, second: MonomialMorphism) -> MonomialMorphism:
    """Composite ``second o first``: first M_I -> M_J, then M_J -> M_K.

    Raises:
        NonComposableError: If first.target != second.source
    """
    if first.target != second.source:
        raise NonComposableError(str(first.target), str(second.source))
    alpha = tuple(a + b for a, b in zip(first.alpha, second.alpha))
    return MonomialMorphism(first.source, second.target, alpha)


def defect(morphism: MonomialMorphism) -> int:
    """The power c with morphism = t^c * generator."""
    return min(morphism.alpha)


@lru_cache(maxsize=None)
def zero_mask(source: KSubset, target: KSubset) -> int:
    """Bitmask of the vertices where the generator has exponent 0."""
    mask = 0
    for position, a in enumerate(hom_generator(source, target).alpha):
        if a == 0:
            mask |= 1 << position
    return mask


def factors_through(source: KSubset, middle: KSubset, target: KSubset) -> bool:
    """True if phi^I_J = phi^K_J o phi^I_K with no extra power of t.

    The composite of two generators has defect 0 exactly when some vertex
    carries exponent 0 in both.
    """
    return bool(zero_mask(source, middle) & zero_mask(middle, target))


def stable_endomorphism_defect(subset: KSubset, projectives: Iterable[KSubset]) -> int:
    """Smallest c such that t^c on M_I factors through one of the projectives.

    For a non-projective M_I the value is at least 1, and the stable
    endomorphism ring is the ground field exactly when it equals 1. A
    projective M_I factors through itself and gives 0.

    Raises:
        PreconditionError: If no projectives are given
    """
    candidates = sorted(projectives)
    if not candidates:
        raise PreconditionError("stable_endomorphism_defect", "no projectives to factor through")
    return min(
        defect(compose(hom_generator(subset, p), hom_generator(p, subset))) for p in candidates
    )


def ext_dim(first: KSubset, second: KSubset) -> int:
    """Dimension of Ext^1(M_I, M_J) for 2-subsets: 1 if they cross, else 0.

    Raises:
        UnsupportedKError: If k != 2
        MismatchedAmbientError: If n or k differ
    """
    for subset in (first, second):
        if subset.k != 2:
            raise UnsupportedKError(subset.k)
    return 1 if crossing(first, second) else 0


def sequence_terms(
    f: tuple[MonomialMorphism, ...], g: tuple[SignedMorphism, ...]
) -> tuple[KSubset, list[KSubset], KSubset]:
    """Read (start, middle summands, end) off the two maps of a sequence."""
    start = f[0].source
    middle = [m.target for m in f]
    end = g[0].morphism.target
    return start, middle, end


def ar_sequence_maps(
    i: int, j: int, n: int
) -> tuple[tuple[MonomialMorphism, ...], tuple[SignedMorphism, ...]]:
    """Maps of the AR sequence M_{i+1,j+1} -> M_{i+1,j} + M_{i,j+1} -> M_{i,j}.

    f = (phi^{i+1,j+1}_{i+1,j}, phi^{i+1,j+1}_{i,j+1}) and
    g = (phi^{i+1,j}_{i,j}, -phi^{i,j+1}_{i,j}). Middle summands with equal
    endpoints are dropped.

    Raises:
        BoundaryArcError: If (i, j) is a boundary arc
    """
    end = Arc.from_endpoints(n, i, j)
    if end.boundary:
        raise BoundaryArcError(str(end), "ar_sequence_maps")
    i, j = end.i, end.j
    start = end.rotate(1)

    f: list[MonomialMorphism] = []
    g: list[SignedMorphism] = []
    for sign, (a, b) in ((1, (i + 1, j)), (-1, (i, j + 1))):
        if (a - b) % n == 0:
            continue
        summand = Arc.from_endpoints(n, a, b)
        f.append(hom_generator(start, summand))
        g.append(SignedMorphism(sign, hom_generator(summand, end)))
    return tuple(f), tuple(g)


def composite_exponents(
    f: tuple[MonomialMorphism, ...], g: tuple[SignedMorphism, ...]
) -> list[tuple[int, tuple[int, ...]]]:
    """Signed exponent tuples of the entries of g o f, one per middle summand."""
    return [(s.sign, compose(a, s.morphism).alpha) for a, s in zip(f, g)]


def composition_vanishes(
    f: tuple[MonomialMorphism, ...], g: tuple[SignedMorphism, ...]
) -> bool:
    """True if the signed composites cancel in pairs, so g o f = 0."""
    positive: list[tuple[int, ...]] = []
    negative: list[tuple[int, ...]] = []
    for sign, alpha in composite_exponents(f, g):
        (positive if sign > 0 else negative).append(alpha)
    return sorted(positive) == sorted(negative)
