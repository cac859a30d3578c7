"""Exception hierarchy for the RNS arithmetic layers."""


class RnsError(Exception):
    """Base class for every error raised by the arithmetic modules."""


class ModulusTooSmallError(RnsError, ValueError):
    pass


class NotCoprimeError(RnsError, ValueError):
    def __init__(self, a, b, g):
        super().__init__(f"moduli {a} and {b} share the factor {g}")
        self.pair = (a, b)
        self.gcd = g


class ModuliOverflowError(RnsError, OverflowError):
    pass


class OutOfRangeError(RnsError, ValueError):
    pass


class ModuliMismatchError(RnsError, ValueError):
    pass


class NoSolutionError(RnsError, ArithmeticError):
    """The trial solver exhausted every cluster without satisfying the relation."""


class InternalInconsistencyError(RnsError, RuntimeError):
    """Two same-cluster operands produced a difference outside clusters 1 and p1."""
