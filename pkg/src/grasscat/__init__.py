"""grasscat - exact computations in the Grassmannian cluster category C(2,n).

Arcs of the n-gon index the indecomposable rank-1 modules M_{ij}. grasscat
builds the Auslander-Reiten quiver of C(2,n) and of its reductions at rigid
sets of arcs, computes friezes and cluster characters with exact
arithmetic, mutates quivers, and verifies the relations between them.

Usage:
    # CLI
    grasscat arquiver --n 6 --perp "1,4"                   # Reduced AR quiver
    grasscat frieze --n 6 --tri "1,3;1,4;1,5" --check both # Frieze + checks
    grasscat character --n 6 --tri "2,6;3,6;4,6" --arc "1,4" --specialize all1
    grasscat verify --suite all --nmax 7                   # Property sweeps

    # Python API
    from grasscat import Arc, Triangulation, reduce, ptolemy_frieze

    quiver = reduce(6, {Arc.from_endpoints(6, 1, 4)})
    frieze = ptolemy_frieze(6, Triangulation.from_pairs(6, [(1, 3), (1, 4), (1, 5)]))
"""

# Version
__version__ = "0.1.0"

# AR quivers
from .arquiver import (
    TranslationQuiver,
    ar_sequences,
    build_c2n,
    cluster_tilting_objects,
    iyama_yoshino_check,
    mesh_maps,
    reduce,
    stable_quiver,
)

# Cluster characters
from .character import (
    StringModuleSpec,
    cc_character,
    cc_character_fan,
    plucker_character,
    plucker_frieze,
    verify_restriction,
)

# Combinatorics
from .combinatorics import (
    Arc,
    KSubset,
    SubpolygonDecomposition,
    Triangulation,
    crossing,
    cut_polygon,
    enumerate_arcs,
    enumerate_triangulations,
    is_rigid,
)

# Exceptions
from .exceptions import (
    ConfigurationError,
    GrasscatError,
    InvalidTriangulationError,
    NotRigidError,
    ParseError,
)

# Friezes
from .frieze import (
    Frieze,
    mesh_check,
    mesh_frieze,
    ptolemy_check,
    ptolemy_frieze,
    render_ascii,
    restrict_frieze,
)
from .laurent import LaurentPoly, specialize

# Logging
from .logging_util import (
    GCLogger,
    get_logger,
    init_logger,
)

# Morphisms
from .morphisms import (
    MonomialMorphism,
    ar_sequence_maps,
    compose,
    ext_dim,
    hom_generator,
)

# Mutation
from .mutation import (
    ExchangeQuiver,
    builtin,
    is_dynkin_orientation,
    mutate,
    mutate_sequence,
)

# Export all public symbols
__all__ = [
    # Version
    "__version__",
    # Combinatorics
    "KSubset",
    "Arc",
    "Triangulation",
    "SubpolygonDecomposition",
    "crossing",
    "is_rigid",
    "enumerate_arcs",
    "cut_polygon",
    "enumerate_triangulations",
    # Morphisms
    "MonomialMorphism",
    "hom_generator",
    "compose",
    "ext_dim",
    "ar_sequence_maps",
    # AR quivers
    "TranslationQuiver",
    "build_c2n",
    "reduce",
    "ar_sequences",
    "stable_quiver",
    "mesh_maps",
    "iyama_yoshino_check",
    "cluster_tilting_objects",
    # Friezes
    "Frieze",
    "ptolemy_frieze",
    "mesh_frieze",
    "restrict_frieze",
    "mesh_check",
    "ptolemy_check",
    "render_ascii",
    # Cluster characters
    "LaurentPoly",
    "specialize",
    "StringModuleSpec",
    "plucker_character",
    "plucker_frieze",
    "cc_character",
    "cc_character_fan",
    "verify_restriction",
    # Mutation
    "ExchangeQuiver",
    "mutate",
    "mutate_sequence",
    "is_dynkin_orientation",
    "builtin",
    # Exceptions
    "GrasscatError",
    "ConfigurationError",
    "InvalidTriangulationError",
    "NotRigidError",
    "ParseError",
    # Logging
    "GCLogger",
    "get_logger",
    "init_logger",
]
