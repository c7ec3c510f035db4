"""Finite Alexandroff topological spaces.

A space is stored as its array of minimal open neighborhoods, one
bit-vector per point; ``y in nbhd[x]`` reads as ``y <= x`` in the
specialization preorder.  See the individual modules for constructions,
maps, invariants, generators, the exhaustive census, and the CLI.
"""

from . import census, cli, constructions, core, generators, invariants, maps
from .constructions import (
    Partition,
    disjoint_sum,
    product,
    product_n,
    quotient,
    subspace,
    t0_quotient,
)
from .core import (
    PointSet,
    Space,
    SubsetFamily,
    canonical_form,
    from_basis,
    from_neighborhoods,
    from_open_family,
    from_preorder,
    is_open,
    open_sets,
    relabel,
)
from .generators import (
    GeneratorSpec,
    blocks,
    chain,
    discrete,
    divisor,
    indiscrete,
    random_space,
)
from .invariants import (
    InvariantReport,
    index_of,
    is_basic,
    is_discrete,
    is_hausdorff,
    is_irreducible,
    min_of,
    report,
)
from .maps import GlueData, SpaceMap, find_homeomorphism, glue, image_space, is_continuous, is_open_map

__version__ = "0.1.0"

__all__ = [
    "census",
    "cli",
    "constructions",
    "core",
    "generators",
    "invariants",
    "maps",
    "Partition",
    "PointSet",
    "Space",
    "SubsetFamily",
    "GeneratorSpec",
    "GlueData",
    "SpaceMap",
    "InvariantReport",
    "blocks",
    "canonical_form",
    "chain",
    "discrete",
    "disjoint_sum",
    "divisor",
    "find_homeomorphism",
    "from_basis",
    "from_neighborhoods",
    "from_open_family",
    "from_preorder",
    "glue",
    "image_space",
    "index_of",
    "indiscrete",
    "is_basic",
    "is_continuous",
    "is_discrete",
    "is_hausdorff",
    "is_irreducible",
    "is_open",
    "is_open_map",
    "min_of",
    "open_sets",
    "product",
    "product_n",
    "quotient",
    "random_space",
    "relabel",
    "report",
    "subspace",
    "t0_quotient",
    "__version__",
]
