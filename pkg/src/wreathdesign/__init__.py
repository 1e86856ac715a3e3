"""Transitive subsets of the generalised symmetric groups C_r wr S_n.

Exact tools for deciding when a subset of C_r wr S_n acts transitively on
sigma-tabloids: characters, the colouring relation, the class association
scheme, Charlier polynomials and explicit constructions.
"""

from .arrow import m_set, parabolic_succeq, succeq
from .characters import (
    character_table,
    multiplicity,
    permutation_character,
    wreath_character_value,
    wreath_degree,
)
from .cyclic import Cyclotomic
from .errors import ConsistencyError, DimensionError, ScaleGuardError, WreathError
from .scheme import dual_distribution, inner_distribution, is_clique, is_design
from .tabloids import TransitivityType, make_simple, transitivity_index
from .wreath import WreathElement, cycle_type, element, enumerate_classes, identity

__version__ = "0.1.0"
