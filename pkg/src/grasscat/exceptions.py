"""Custom exceptions for grasscat."""


class GrasscatError(Exception):
    """Base exception for all grasscat errors."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} - {self.details}"
        return self.message


class InvalidSubsetError(GrasscatError):
    """Raised when a k-subset or arc violates its invariants."""

    def __init__(self, n: int, elements: tuple[int, ...], reason: str):
        super().__init__(
            f"Invalid subset {list(elements)} of [1, {n}]: {reason}",
            {"n": n, "elements": list(elements), "reason": reason},
        )
        self.n = n
        self.elements = elements
        self.reason = reason


class InvalidTriangulationError(GrasscatError):
    """Raised when a diagonal set is not a triangulation."""

    def __init__(self, n: int, reason: str):
        super().__init__(
            f"Not a triangulation of the {n}-gon: {reason}",
            {"n": n, "reason": reason},
        )
        self.n = n
        self.reason = reason


class MismatchedAmbientError(GrasscatError):
    """Raised when objects living on different cycles are combined."""

    def __init__(self, left: str, right: str):
        super().__init__(
            f"Mismatched ambient: {left} vs {right}",
            {"left": left, "right": right},
        )
        self.left = left
        self.right = right


class DegeneratePolygonError(GrasscatError):
    """Raised when the polygon is too small for the requested construction."""

    def __init__(self, n: int, minimum: int):
        super().__init__(
            f"Polygon size {n} is below the minimum {minimum}",
            {"n": n, "minimum": minimum},
        )
        self.n = n
        self.minimum = minimum


class NotRigidError(GrasscatError):
    """Raised when an arc set contains a crossing pair."""

    def __init__(self, first: str, second: str):
        super().__init__(
            f"Arc set is not rigid: {first} crosses {second}",
            {"first": first, "second": second},
        )
        self.first = first
        self.second = second


class BoundaryArcError(GrasscatError):
    """Raised when a boundary arc is given where a diagonal is required."""

    def __init__(self, arc: str, context: str):
        super().__init__(
            f"Boundary arc {arc} is not allowed in {context}",
            {"arc": arc, "context": context},
        )
        self.arc = arc
        self.context = context


class UnsupportedKError(GrasscatError):
    """Raised when an operation is only available for 2-subsets."""

    def __init__(self, k: int):
        super().__init__(
            f"Only k = 2 is supported, got k = {k}",
            {"k": k},
        )
        self.k = k


class InvalidMorphismError(GrasscatError):
    """Raised when an exponent tuple does not describe a morphism."""

    def __init__(self, source: str, target: str, reason: str):
        super().__init__(
            f"Invalid morphism {source} -> {target}: {reason}",
            {"source": source, "target": target, "reason": reason},
        )
        self.source = source
        self.target = target
        self.reason = reason


class NonComposableError(GrasscatError):
    """Raised when two morphisms do not share the middle object."""

    def __init__(self, first_target: str, second_source: str):
        super().__init__(
            f"Cannot compose: {first_target} != {second_source}",
            {"first_target": first_target, "second_source": second_source},
        )
        self.first_target = first_target
        self.second_source = second_source


class NonPropagatableError(GrasscatError):
    """Raised when mesh propagation leaves vertices without a value."""

    def __init__(self, missing: list[str]):
        super().__init__(
            f"Mesh propagation could not reach {len(missing)} vertices",
            {"missing": missing},
        )
        self.missing = missing


class ZeroValueError(GrasscatError):
    """Raised when a frieze value is zero where a division is needed."""

    def __init__(self, arc: str, context: str):
        super().__init__(
            f"Zero value at {arc} during {context}",
            {"arc": arc, "context": context},
        )
        self.arc = arc
        self.context = context


class MissingValueError(GrasscatError):
    """Raised when a frieze has no value for a required arc."""

    def __init__(self, arc: str, context: str):
        super().__init__(
            f"No value for {arc} in {context}",
            {"arc": arc, "context": context},
        )
        self.arc = arc
        self.context = context


class NonExactDivisionError(GrasscatError):
    """Raised when a Laurent polynomial division leaves a remainder."""

    def __init__(self, dividend: str, divisor: str):
        super().__init__(
            "Laurent division is not exact",
            {"dividend": dividend, "divisor": divisor},
        )
        self.dividend = dividend
        self.divisor = divisor


class MissingAssignmentError(GrasscatError):
    """Raised when specialization lacks a value for a variable in use."""

    def __init__(self, variable: str):
        super().__init__(
            f"No value assigned to {variable}",
            {"variable": variable},
        )
        self.variable = variable


class ZeroSubstitutionError(GrasscatError):
    """Raised when zero is substituted for a variable in a denominator."""

    def __init__(self, variable: str):
        super().__init__(
            f"Cannot substitute 0 for {variable}: it appears with negative exponent",
            {"variable": variable},
        )
        self.variable = variable


class NotFanError(GrasscatError):
    """Raised when the fan-only character oracle gets another triangulation."""

    def __init__(self, triangulation: str):
        super().__init__(
            f"Triangulation {triangulation} is not a fan",
            {"triangulation": triangulation},
        )
        self.triangulation = triangulation


class PreconditionError(GrasscatError):
    """Raised when an operation is called outside its preconditions."""

    def __init__(self, operation: str, reason: str):
        super().__init__(
            f"Precondition of {operation} violated: {reason}",
            {"operation": operation, "reason": reason},
        )
        self.operation = operation
        self.reason = reason


class InvalidQuiverError(GrasscatError):
    """Raised when an exchange matrix is not skew-symmetric."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid exchange quiver: {reason}", {"reason": reason})
        self.reason = reason


class InvalidTranslationQuiverError(GrasscatError):
    """Raised when a constructed AR quiver breaks a translation-quiver invariant."""

    def __init__(self, label: str, problems: list[str]):
        super().__init__(
            f"AR quiver of {label} is not a translation quiver: {'; '.join(problems)}",
            {"quiver": label, "problems": problems},
        )
        self.label = label
        self.problems = problems


class BadVertexError(GrasscatError):
    """Raised when mutating at a vertex the quiver does not have."""

    def __init__(self, vertex: str, labels: list[str]):
        super().__init__(
            f"Unknown vertex '{vertex}'",
            {"vertex": vertex, "labels": labels},
        )
        self.vertex = vertex
        self.labels = labels


class UnknownQuiverError(GrasscatError):
    """Raised when a built-in quiver or Dynkin type name is not known."""

    def __init__(self, name: str):
        super().__init__(f"Unknown quiver name: {name}", {"name": name})
        self.name = name


class ParseError(GrasscatError):
    """Raised when textual input cannot be parsed."""

    def __init__(self, text: str, reason: str):
        super().__init__(
            f"Failed to parse '{text}': {reason}",
            {"text": text, "reason": reason},
        )
        self.text = text
        self.reason = reason


class ConfigurationError(GrasscatError):
    """Raised when there's a configuration error."""

    def __init__(self, config_key: str, reason: str):
        super().__init__(
            f"Configuration error for '{config_key}': {reason}",
            {"config_key": config_key, "reason": reason},
        )
        self.config_key = config_key
        self.reason = reason
