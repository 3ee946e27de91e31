"""Exception hierarchy shared by the library and the CLI."""


class PosetError(ValueError):
    """Base class for all errors raised by posetcut."""


class NotAPoset(PosetError):
    """The given relation violates a partial-order axiom."""


class ReflexivePair(NotAPoset):
    def __init__(self, x):
        self.witness = (x, x)
        super().__init__(f"reflexive pair ({x}, {x})")


class AntisymmetryViolation(NotAPoset):
    def __init__(self, x, y):
        self.witness = (x, y)
        super().__init__(f"both {x}<{y} and {y}<{x} given")


class TransitivityViolation(NotAPoset):
    def __init__(self, x, y, z):
        self.witness = (x, z)
        self.via = y
        super().__init__(f"{x}<{y} and {y}<{z} given but not {x}<{z}")


class CycleDetected(NotAPoset):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("cycle " + " -> ".join(map(str, self.cycle)))


class IdOutOfRange(PosetError, IndexError):
    def __init__(self, v, n):
        self.element = v
        super().__init__(f"element {v} out of range 0..{n - 1}")


class NotARelation(PosetError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"{x}<{y} is not a relation")


class NotACover(PosetError):
    def __init__(self, x, y, z):
        self.pair = (x, y)
        self.between = z
        super().__init__(f"{x}<{y} is not a cover ({x}<{z}<{y})")


class EmptyPoset(PosetError):
    pass


class NotAPartition(PosetError):
    pass


class TooLargeForOracle(PosetError):
    pass


class InvalidSpec(PosetError):
    pass


class TooLarge(PosetError):
    pass


class ParseError(PosetError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ProofTraceError(AssertionError):
    """An inductive-step fact failed to hold; always an implementation bug."""


class ChainTooShort(PosetError):
    pass


class ProfileViolation(ProofTraceError):
    pass


class AlreadyAntichain(PosetError):
    pass
