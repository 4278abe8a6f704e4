"""Exception hierarchy shared across the package."""


class EnergeiaError(Exception):
    """Base class for all library errors."""


class InvalidSimplex(EnergeiaError, ValueError):
    pass


class InvalidLabel(EnergeiaError, ValueError):
    pass


class NotAMember(EnergeiaError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class NotASubset(EnergeiaError, ValueError):
    pass


class NotAComplex(EnergeiaError, ValueError):
    pass


class RingMismatch(EnergeiaError, TypeError):
    pass


class UnsupportedRing(EnergeiaError, TypeError):
    pass


class ShapeError(EnergeiaError, ValueError):
    pass


class NotSelfAdjoint(EnergeiaError, ValueError):
    pass


class ZeroEnergy(EnergeiaError, ValueError):
    pass


class SingularOperator(EnergeiaError, ArithmeticError):
    pass


class IoError(EnergeiaError, OSError):
    pass
