"""Exception hierarchy shared by all binord modules."""


class BinordError(Exception):
    """Base class for every error raised by this package."""


class SizeCapExceeded(BinordError):
    """Input is beyond the configured factorization size cap (not desk scale)."""


class NotCoprime(BinordError):
    """Multiplicative order requested for an element not coprime to the modulus."""


class InvalidField(BinordError):
    """Field modulus is not a prime >= 5."""


class UnsupportedField(BinordError):
    """Base field outside the supported range (q even, q = 3, q not prime)."""


class ZeroElement(BinordError):
    """Operation requires a nonzero element."""


class ModulusMismatch(BinordError):
    """Prime-field operands carry different moduli (programming error)."""


class SpecMismatch(BinordError):
    """Extension-ring operands belong to different quotient rings."""


class NoBinomialExists(BinordError):
    """No irreducible binomial x^m - a exists over F_q for this (q, m)."""


class IrreducibilityFailure(BinordError):
    """A user-supplied constant a fails the irreducibility criterion."""


class FormulaMismatch(BinordError):
    """Two independent computations of the same quantity disagree (a bug)."""


class LengthMismatch(BinordError):
    """Selection vector dimensions do not match the instance (l rows, k columns)."""


class BudgetExceeded(BinordError):
    """Enumeration would exceed the configured budget."""


class BoundsTooLarge(BinordError):
    """Counterexample search space exceeds the configured tuple budget."""


class NoSolution(BinordError):
    """Constructive lower bound unavailable (requires l >= 2)."""
