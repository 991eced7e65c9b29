"""Exception types shared across the workbench."""


class CELabError(Exception):
    """Base class for all workbench errors."""


# -- scalar rings -------------------------------------------------------------

class NonPrimeModulus(CELabError):
    """A prime field was requested with a composite modulus."""


class ReduciblePolynomial(CELabError):
    """The defining polynomial of an extension field is not irreducible."""


class UnsupportedVariableCount(CELabError):
    """Too many (or zero) variables for this ring kind."""


class NotAUnit(CELabError):
    """Inversion was requested for a non-invertible element."""


class NoSuchDerivation(CELabError):
    """The ring does not carry a derivation with the given name."""


class CharacteristicZero(CELabError):
    """A prime-power map was requested but the ring has no prime characteristic."""


class InfiniteRing(CELabError):
    """Element enumeration was requested for an infinite ring."""


class ParseError(CELabError):
    """A scalar expression could not be parsed."""


# -- linear algebra -----------------------------------------------------------

class DimensionMismatch(CELabError):
    """Matrix/vector shapes are incompatible."""


class AmbientMismatch(CELabError):
    """Subspaces live in different ambient modules."""


# -- algebras -----------------------------------------------------------------

class AlgebraMismatch(CELabError):
    """Elements of different algebras were combined."""


class ScalarMismatch(CELabError):
    """Algebras over different scalar rings were combined."""


class NotAnIdeal(CELabError):
    """The given subspace is not a two-sided ideal."""


class NotNilpotent(CELabError):
    """The given subspace generates a non-nilpotent ideal."""


class QuotientNotAField(CELabError):
    """The quotient by the given ideal is not a field."""


class QuotientNotFree(CELabError):
    """The quotient module is not free over the scalar ring, so no
    structure-constant presentation exists."""


class DimensionCapExceeded(CELabError):
    """The requested algebra exceeds the configured dimension cap."""


# -- groups -------------------------------------------------------------------

class NotAGroup(CELabError):
    """The multiplication table fails the group axioms."""


class NotAnAutomorphism(CELabError):
    """An action map is not an automorphism of the target group."""


class NotAHomomorphism(CELabError):
    """An action is not a homomorphism into the automorphism group."""


class UnsupportedParameter(CELabError):
    """A constructor parameter is outside the supported range."""


# -- builders -----------------------------------------------------------------

class NotAMonoid(CELabError):
    """The multiplication table fails the monoid axioms."""


class NotASemigroup(CELabError):
    """The multiplication table is not associative."""


class AlphaNotUnit(CELabError):
    """The doubling parameter is not invertible."""


class AlphaNotSymmetric(CELabError):
    """The doubling parameter is not fixed by the involution."""


class AlphaNotCentral(CELabError):
    """The doubling parameter is not central."""


class NoInvolution(CELabError):
    """The base algebra carries no involution."""


class UnsupportedN(CELabError):
    """The matrix-family size parameter is out of range."""


# -- semirings ----------------------------------------------------------------

class NotASemiring(CELabError):
    """The operation tables fail the semiring axioms."""


# -- analyzers ----------------------------------------------------------------

class UnsupportedScalars(CELabError):
    """The analysis is not implemented over this scalar ring."""


class EnumerationTooLarge(CELabError):
    """An exhaustive scan would exceed the enumeration cap."""


class StrategyInapplicable(CELabError):
    """No applicable strategy for this input."""
