"""Exceptions raised across padic-ell.

Everything derives from PadicEllError. Errors that mean "the inputs are fine but there
are not enough digits" derive from PrecisionError; the CLI maps those to exit code 2.
"""


class PadicEllError(Exception):
    """Base class for all padic-ell errors"""
    pass


class PrecisionError(PadicEllError):
    """Raised when a result cannot be certified at the available precision"""
    pass


# exactla
class NoReconstruction(PrecisionError):
    """No rational with bounded denominator lies within the error bound"""
    pass


# padic
class NotAUnit(PadicEllError):
    """The argument is divisible by p"""
    pass


class OutOfDomain(PadicEllError):
    """Argument outside the convergence domain of the p-adic log or exp"""
    pass


class NotOrdinary(PadicEllError):
    """p divides a_p, so there is no unit root"""
    pass


# curve
class CurveInputError(PadicEllError, ValueError):
    """Malformed curve text, unknown label or inconsistent conductor"""
    pass


class BadPrime(PadicEllError):
    """The prime divides the conductor"""
    pass


class AdditiveReduction(PadicEllError):
    """The curve has additive reduction at p"""
    pass


class PrecisionUnreachable(PrecisionError):
    """A numerical quantity cannot reach the requested number of digits"""
    pass


# modsym
class NotIsolated(PadicEllError):
    """The Hecke eigenspace is still more than one-dimensional"""
    pass


class Inconsistent(PadicEllError):
    """The Hecke eigenspace is empty (wrong level or wrong a_l)"""
    pass


class BadQ(PadicEllError, ValueError):
    """Q does not exactly divide N"""
    pass


class CacheCorrupt(PadicEllError):
    """A cached symbol map failed its checksum"""
    pass


# lpbuild / pseries
class LevelTooLow(PadicEllError, ValueError):
    """t_order is not below p^(n-1)"""
    pass


class PrecisionExhausted(PrecisionError):
    """No certified digits remain for the requested coefficient"""
    pass


class Indeterminate(PrecisionError):
    """No coefficient is certified nonzero"""
    pass


class NotRealCharacter(PadicEllError, ValueError):
    """The check needs a real (quadratic or trivial) character"""
    pass


# charset / basechange
class WildCharacter(PadicEllError, ValueError):
    """Character is not tame at p"""
    pass


class ConductorClash(PadicEllError, ValueError):
    """Character conductor shares a prime with p or with an additive prime"""
    pass


class NotClosed(PadicEllError):
    """A character group failed its closure check"""
    pass


class NonRealGroup(PadicEllError):
    """The product functional equation does not have a real sign"""
    pass
