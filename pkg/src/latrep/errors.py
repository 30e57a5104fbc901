"""Exception hierarchy shared by every latrep module."""


class LatticeError(Exception):
    """Base class for all library errors."""


class DuplicateName(LatticeError):
    pass


class UnknownName(LatticeError):
    pass


class CycleError(LatticeError):
    def __init__(self, names):
        self.names = tuple(names)
        super().__init__("cover relation has a cycle through: " + ", ".join(self.names))


class NotALattice(LatticeError):
    """Some pair of elements lacks a greatest lower or least upper bound."""

    def __init__(self, pair, missing):
        self.pair = tuple(pair)
        self.missing = missing
        x, y = self.pair
        op = "meet" if missing == "meet" else "join"
        super().__init__(f"not a lattice: pair ({x}, {y}) has no {op}")


class IndexOutOfRange(LatticeError, IndexError):
    pass


class NotAFilter(LatticeError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"not a filter: {reason}")


class FamilyMismatch(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class KindUnsupported(LatticeError):
    pass


class SizeTooLarge(LatticeError):
    pass
