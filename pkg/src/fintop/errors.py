"""Exception hierarchy.

Every validation failure names the offending witness (a label, a member
index, or a pair of subsets) so that diagnostics can be printed verbatim.
"""


class FintopError(ValueError):
    """Base class for all toolkit errors."""


class TopologyError(FintopError):
    pass


class MissingEmptySet(TopologyError):
    def __init__(self):
        super().__init__("open family does not contain the empty set")


class MissingWholeSet(TopologyError):
    def __init__(self, whole):
        self.whole = whole
        super().__init__(f"open family does not contain the whole set {whole}")


class NotClosedUnderUnion(TopologyError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"union of {u} and {v} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"intersection of {u} and {v} is not open")


class UnknownPoint(FintopError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"unknown point {label!r}")


class DuplicatePoint(FintopError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"duplicate point {label!r}")


class CoveringError(FintopError):
    pass


class MemberNotOpen(CoveringError):
    def __init__(self, index, member=None):
        self.index, self.member = index, member
        super().__init__(f"covering member #{index} {member} is not open")


class DoesNotCover(CoveringError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"members do not cover points {missing}")


class SpaceMismatch(FintopError):
    pass


class MapError(FintopError):
    pass


class MissingAssignment(MapError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"no image assigned to point {label!r}")


class UnknownCodomainPoint(MapError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"image {label!r} is not a codomain point")


class CapExceeded(FintopError):
    pass


class UnknownTheorem(FintopError):
    pass


class MalformedInstance(FintopError):
    pass
