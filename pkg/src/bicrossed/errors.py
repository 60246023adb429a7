"""Exception types shared across the package.

Three broad kinds:
  * MalformedInput: the data does not even have the right shape
    (CLI exit code 2);
  * StructureError subclasses: the data parsed but violates an
    algebraic law, one subclass per law family so callers can be
    precise (CLI exit code 1 when surfaced through verification);
  * InternalCheckFailed subclasses: cross-checks that can only fail on
    a library bug, never on bad user input.
"""

from __future__ import annotations


class BicrossedError(Exception):
    """Base class for all package-specific errors."""


# -- input shape --------------------------------------------------------------

class MalformedInput(BicrossedError, ValueError):
    """Input data does not parse into the expected structure."""


class IndexOutOfRange(MalformedInput, IndexError):
    """An element index falls outside the group's range."""


# -- scalar field --------------------------------------------------------------

class ConductorMismatch(BicrossedError, ValueError):
    """Cyclotomic values over incompatible Q(zeta_N) were combined."""


class DivisionByZero(BicrossedError, ZeroDivisionError):
    """Inversion or division by the zero field element."""


# -- algebraic law violations --------------------------------------------------

class StructureError(BicrossedError, ValueError):
    """Data parsed but violates a required algebraic law."""


class NotAGroup(StructureError):
    """Multiplication table fails a group axiom."""


class NotAHom(StructureError):
    """A map between groups fails the homomorphism law."""


class NotAnAction(StructureError):
    """An action table fails a unit or composition law."""


class MatchedPairViolation(StructureError):
    """Action tables are actions but fail a mixed compatibility law."""


class NotExactFactorization(StructureError):
    """The two subgroups do not factor the group exactly."""


class NotStable(StructureError):
    """A subgroup is not stable under the action being restricted."""


class CocycleViolation(StructureError):
    """A twisting-scalar table fails one of its condition families."""


class ZeroValue(StructureError):
    """A twisting-scalar table contains a zero entry."""


class NotAModule(StructureError):
    """An action matrix family fails the module axioms."""


class NoAntipode(StructureError):
    """The antipode systems are inconsistent: no antipode exists."""


class NotUnique(StructureError):
    """The antipode systems are underdetermined."""


class NotQuasitriangular(StructureError):
    """A candidate R-matrix fails a quasitriangularity axiom."""


class NotEquivariant(StructureError):
    """A graded object's structure maps fail the coherence law."""


class ShapeMismatch(StructureError):
    """Matrix or grading dimensions do not line up."""


class NotInvertible(StructureError):
    """A structure map that must be invertible is singular."""


class NotAMorphism(StructureError):
    """A blockwise map fails degree or commutation requirements."""


class HexagonViolation(StructureError):
    """A braiding candidate fails a hexagon identity."""


class NaturalityViolation(StructureError):
    """A braiding candidate fails naturality."""


class ConditionViolation(StructureError):
    """A homomorphism pair fails one of its defining conditions."""


# -- resource bounds -----------------------------------------------------------

class SizeBound(BicrossedError, ValueError):
    """Requested object is larger than this implementation supports."""


class SearchBudgetExceeded(BicrossedError, RuntimeError):
    """A search exceeded its node budget before completing."""


# -- internal assertions ("must never fire") ------------------------------------

class InternalCheckFailed(BicrossedError, AssertionError):
    """A redundant cross-check failed; indicates a library bug."""


class FactorizationFailure(InternalCheckFailed):
    """A product escaped the unique-decomposition table."""


class ReformulationMismatch(InternalCheckFailed):
    """Two formulations that must agree evaluated differently."""


class NotBijective(InternalCheckFailed):
    """A map that is provably bijective failed the bijection check."""
