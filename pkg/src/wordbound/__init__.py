"""Computational laboratory for word metrics on finitely generated groups."""

from .errors import (
    DomainError,
    EmptyGenSetError,
    NotGeneratingError,
    ResourceLimitExceeded,
    UnsupportedFamilyError,
)
from .experiments import (
    Automorphism,
    OrbitBoundCheck,
    aut_group,
    aut_orbit_bound_check,
    bound_witness_zxd8,
    conjugacy_orbit_growth,
    heisenberg_center_certificate,
    heisenberg_center_experiment,
    min_coefficients,
    prescribe_length_free,
    prescribe_length_zd,
    quotient_orbit_experiment,
    unbounded_witness_dinfty,
    unbounded_witness_heisenberg,
    unbounded_witness_zd,
    unbounded_witness_zxzq,
    uniform_length_exact,
    uniform_length_table,
)
from .gensets import (
    GenSet,
    GenerationResult,
    QuotientMap,
    dihedral_mod,
    generates,
    heisenberg_abelianization,
    int_mod,
    invariant_factors,
    make_symmetric,
    project_genset,
    project_left,
    project_right,
    smith_normal_form,
)
from .girth import (
    GirthResult,
    LoopVerdict,
    cyclic_reduce,
    girth,
    girth_reference,
    is_cyclically_reduced,
    reduce_word,
    simple_loop_check,
)
from .groups import (
    CayleyTableGroup,
    DihedralFinite,
    DihedralInfinite,
    FiniteCyclic,
    Free,
    Group,
    Heisenberg,
    IntVector,
    Product,
    closure,
    element_from_flat,
    element_from_obj,
    element_to_obj,
    flat_arity,
    group_from_obj,
    group_to_obj,
    random_element,
    standard_generators,
)
from .metric import (
    Ball,
    LengthCert,
    ball,
    length_profile,
    word_length,
)
from .reports import ExperimentReport, Verdict, render_report

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "Ball",
    "CayleyTableGroup",
    "DihedralFinite",
    "DihedralInfinite",
    "DomainError",
    "EmptyGenSetError",
    "ExperimentReport",
    "FiniteCyclic",
    "Free",
    "GenSet",
    "GenerationResult",
    "GirthResult",
    "Group",
    "Heisenberg",
    "IntVector",
    "LengthCert",
    "LoopVerdict",
    "NotGeneratingError",
    "OrbitBoundCheck",
    "Product",
    "QuotientMap",
    "ResourceLimitExceeded",
    "UnsupportedFamilyError",
    "Verdict",
    "aut_group",
    "aut_orbit_bound_check",
    "ball",
    "bound_witness_zxd8",
    "closure",
    "conjugacy_orbit_growth",
    "cyclic_reduce",
    "dihedral_mod",
    "element_from_flat",
    "element_from_obj",
    "element_to_obj",
    "flat_arity",
    "generates",
    "girth",
    "girth_reference",
    "group_from_obj",
    "group_to_obj",
    "heisenberg_abelianization",
    "heisenberg_center_certificate",
    "heisenberg_center_experiment",
    "int_mod",
    "invariant_factors",
    "is_cyclically_reduced",
    "length_profile",
    "make_symmetric",
    "min_coefficients",
    "prescribe_length_free",
    "prescribe_length_zd",
    "project_genset",
    "project_left",
    "project_right",
    "quotient_orbit_experiment",
    "random_element",
    "reduce_word",
    "render_report",
    "simple_loop_check",
    "smith_normal_form",
    "standard_generators",
    "unbounded_witness_dinfty",
    "unbounded_witness_heisenberg",
    "unbounded_witness_zd",
    "unbounded_witness_zxzq",
    "uniform_length_exact",
    "uniform_length_table",
    "word_length",
]
