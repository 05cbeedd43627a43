"""Exception hierarchy.

Domain errors derive from :class:`CubeCycleError`; the CLI maps the
subclasses onto its exit codes.
"""


class CubeCycleError(ValueError):
    pass


class InvalidDimension(CubeCycleError):
    pass


class DimensionTooSmall(InvalidDimension):
    pass


class InvalidLabel(CubeCycleError):
    pass


class WrongLength(InvalidLabel):
    pass


class InvalidSsqGroup(InvalidLabel):
    def __init__(self, group: int, label: str = ""):
        self.group = group
        super().__init__(f"group {group} of {label or 'label'} has top bits 01 or 10")


class NotAnEdge(CubeCycleError):
    pass


class TooLarge(CubeCycleError):
    """A resource cap (materialization or exhaustive search) was exceeded."""


class TooLargeForExhaustive(TooLarge):
    pass


class LengthOutOfRange(CubeCycleError):
    pass


class OddLength(CubeCycleError):
    pass


class EdgeNotShared(CubeCycleError):
    pass


class OverlapBeyondEdge(CubeCycleError):
    pass


class IndexOutOfRange(CubeCycleError):
    pass


class Unverified(CubeCycleError):
    pass


class NotAnAutomorphism(CubeCycleError):
    pass


class AssetError(CubeCycleError):
    """The base-cycle asset is missing, malformed or fails verification."""
