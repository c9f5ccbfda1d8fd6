"""Exact centralizers and commuting-graph distances in matrix algebras M_n(F)."""

from .census import CensusGraph, census_build, census_diameter, census_distance
from .centralizer import (
    MatSubspace,
    centralizer,
    centralizer_of_set,
    centralizer_space,
    double_centralizer_check,
    equivalent,
    poly_algebra,
    precedes,
)
from .certify import Certificate, RunConfig, verify_all
from .constructions import (
    cauchy_matrix,
    family_n3,
    family_n4,
    family_n5plus,
    lemma3_solve,
    lemma4_witness,
    lemma7_witness,
    lemma10_interpolate,
    lemma11_witness,
    theorem5_instance,
)
from .distance import (
    DistanceResult,
    distance_le2,
    distance_le3_finite,
    exact_distance_finite,
    find_commuting_rank_one,
    path_length4,
)
from .fields import GF, QQ, FieldSpec, make_field, parse_field
from .m9 import M9Certificate, m9_certificate
from .matrix import Matrix, char_poly, format_matrix, min_poly, parse_matrix
from .poly import Poly
from .structure import (
    JordanSpec,
    build_from_spec,
    companion,
    is_maximal,
    is_minimal,
    is_rank_one_equivalent,
    is_semisimple,
    jordan_cell,
    jordan_form,
    structure_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
