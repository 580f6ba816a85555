"""Congruence counting, planarity and enumeration for finite lattices."""

from .congruence import (
    CapExceededError,
    Congruence,
    FewCriteria,
    JirQuasiorder,
    con_count,
    con_count_oracle,
    con_enumerate,
    congruence_join,
    few_criteria,
    has_many_congruences,
    jir_quasiorder,
    principal_congruence,
)
from .enumeration import (
    ClassRecord,
    SpectrumReport,
    TheoremReport,
    enumerate_lattices,
    enumerate_lattices_oracle,
    sample_lattices,
    spectrum,
    verify_theorem,
)
from .lattice import (
    IntervalError,
    IrreducibleSets,
    Lattice,
    NotLatticeError,
    SizeError,
    dual_lattice,
    irreducibles,
    is_distributive,
    lattice_from_covers,
    make_boolean,
    make_chain,
    make_l_family,
    make_mk,
    make_ordinal_sum,
    make_product,
    transposes_down,
    transposes_up,
    validate_lattice,
)
from .planarity import (
    CatalogValidationError,
    KRCatalogEntry,
    PlanarityVerdict,
    is_dismantlable,
    is_planar_graph_oracle,
    is_planar_kr,
    kr_catalog,
)
from .poset import (
    CycleError,
    Embedding,
    NotQuasiorderError,
    Poset,
    canonical_form,
    count_downsets,
    count_hereditary_quasi,
    dual,
    find_embedding,
    poset_from_covers,
)

__version__ = "0.1.0"
