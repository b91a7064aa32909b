"""Domain-error taxonomy.

Everything a caller can provoke with bad-but-well-formed input derives from
DomainError, so the CLI can map the whole family to one exit code.
"""


class DomainError(ValueError):
    """Invalid input for a domain operation."""


class EmptyInput(DomainError):
    """A generator list (or parameter tuple) was empty."""


class InvalidGenerator(DomainError):
    """A generator or family parameter is out of range (must be a positive integer)."""


class GcdNotOne(DomainError):
    """Generators do not have gcd 1, so they generate no numerical semigroup."""


class CapExceeded(DomainError):
    """Input exceeds a configured size cap (see config.py)."""


class NotAnElement(DomainError):
    """The queried integer is not an element of the semigroup."""


class BudgetExceeded(DomainError):
    """Factorization enumeration exceeded its budget; use length-set DP instead."""


class UniqueLength(DomainError):
    """All factorizations of the element share one length, so LD is undefined."""


class CertificationFailed(DomainError):
    """Periodicity could not be certified within the escalation ceiling."""


class WrongEmbeddingDimension(DomainError):
    """Operation requires a specific number of minimal generators."""


class NotCoprime(DomainError):
    """Parameters are not pairwise coprime."""


class NotMed(DomainError):
    """Semigroup does not have maximal embedding dimension."""


class NotMed4(DomainError):
    """Parameters fail the multiplicity-4 congruence or membership inequalities."""


class NotPrimeMultiplicity(DomainError):
    """Multiplicity is not a prime >= 3."""


class NotComposite(DomainError):
    """Parameters do not describe a composite multiplicity p*q with p prime, q >= 2."""


class InvalidGluing(DomainError):
    """Gluing parameters violate the non-atom/coprimality requirements."""
