from .arith import (
    ALEPH0,
    CONTINUUM,
    INFINITE_ORDER,
    Cardinal,
    Factorization,
    OrderValue,
    card_add,
    card_mul,
    ext_gcd,
    ext_gcd_multi,
    factorize,
    is_squarefree,
)
from .elements import *  # noqa
from .elements import __all__ as all_elements
from .errors import AbelError
from .independence import (
    IndependenceVerdict,
    is_independent,
    is_independent_rational,
    is_independent_torsion,
    max_independent_subset,
)
from .lang import *  # noqa
from .lang import __all__ as all_lang
from .matrix import IntMatrix, SmithNormalForm, fp_classify, invariant_factors, smith_normal_form
from .settings import Settings
from .structure import (
    PrimaryDecomposition,
    Socle,
    StructureReport,
    classify,
    count_division_solutions,
    divisible_hull,
    group_cardinality,
    is_divisible,
    is_isomorphic,
    isomorphic_by_counts,
    p_component_element,
    primary_decompose_element,
    primary_decompose_expr,
    socle_expr,
    solution_profile,
    split_divisible,
    torsion_split,
)

__all__ = [
    "ALEPH0",
    "AbelError",
    "CONTINUUM",
    "Cardinal",
    "Factorization",
    "INFINITE_ORDER",
    "OrderValue",
    "Settings",
    "card_add",
    "card_mul",
    "ext_gcd",
    "ext_gcd_multi",
    "factorize",
    "is_squarefree",
]
__all__ += [
    "IndependenceVerdict",
    "is_independent",
    "is_independent_rational",
    "is_independent_torsion",
    "max_independent_subset",
]
__all__ += ["IntMatrix", "SmithNormalForm", "fp_classify", "invariant_factors", "smith_normal_form"]
__all__ += [
    "PrimaryDecomposition",
    "Socle",
    "StructureReport",
    "classify",
    "count_division_solutions",
    "divisible_hull",
    "group_cardinality",
    "is_divisible",
    "is_isomorphic",
    "isomorphic_by_counts",
    "p_component_element",
    "primary_decompose_element",
    "primary_decompose_expr",
    "socle_expr",
    "solution_profile",
    "split_divisible",
    "torsion_split",
]
__all__ += all_elements
__all__ += all_lang

__version__ = "0.1.0"
__version_info__ = tuple(int(num) for num in __version__.split("."))
