import enum
from fractions import Fraction

__all__ = [
    "Root",
    "Weight",
    "Family",
    "StepKind",
    "ConstituentType",
    "ConstituentSource",
    "LONG_ROOT_NORM",
    "SCHEMA_VERSION",
    "SAMPLE_RANKS",
    "SCALE_CONVENTION",
]

# coordinates over the simple roots, Bourbaki numbering (position 0 is alpha_1)
Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

# long roots have <a, a> = 2; short roots of B, C, F4 have <a, a> = 1
LONG_ROOT_NORM = Fraction(2)
SCALE_CONVENTION = "invariant form normalized so that long roots have squared length 2"

SCHEMA_VERSION = "1.0"

# ranks at which the "all n" rows of the classical tables are instantiated
SAMPLE_RANKS = {
    "B": (5, 6, 7),
    "C": (4, 5, 6),
    "D": (6, 7, 8),
}


class Family(enum.Enum):
    """
    Cartan-Killing families of complex simple Lie algebras
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"

    @property
    def is_classical(self) -> bool:
        return self in (Family.A, Family.B, Family.C, Family.D)

    @property
    def simply_laced(self) -> bool:
        return self in (Family.A, Family.D, Family.E)


class StepKind(enum.Enum):
    """Nilpotency kind of the nilradical of a parabolic subalgebra

    ABELIAN: [n, n] = 0
    HEISENBERG: 2-step with one-dimensional [n, n]
    QUASI_HEISENBERG: 2-step with dim [n, n] > 1
    K_STEP: 3-step or more
    """

    ABELIAN = "abelian"
    HEISENBERG = "heisenberg"
    QUASI_HEISENBERG = "quasi-heisenberg"
    K_STEP = "k-step"


class ConstituentType(enum.Enum):
    """
    Type of a special constituent V(mu + eps)

    TYPE_1A: mu + eps not a root, eps != mu, both long
    TYPE_1B: mu + eps not a root, eps != mu, one of them short
    TYPE_2: eps == mu
    TYPE_3: mu + eps is a root
    """

    TYPE_1A = "1a"
    TYPE_1B = "1b"
    TYPE_2 = "2"
    TYPE_3 = "3"

    @property
    def has_closed_form(self) -> bool:
        return self in (ConstituentType.TYPE_1A, ConstituentType.TYPE_2)


class ConstituentSource(enum.Enum):
    LGAMMA = "lgamma_tensor"
    LNGAMMA = "lngamma_tensor"
