"""Factor-serial indices, Nakayama classification and almost split sequences
for bound quiver algebras over prime fields."""

from .algebra import (
    Arrow,
    BoundQuiverAlgebra,
    DynkinType,
    Path,
    Quiver,
    classify_shape,
    dynkin_type,
    make_algebra,
    opposite_algebra,
)
from .ar import ARQuiverGraph, ARSequence, almost_split_sequence, build_ar_quiver, verify_almost_split
from .classify import (
    NakayamaReport,
    classify,
    indecomposables,
    is_right_2_nakayama_syntactic,
    two_nakayama_indecomposables,
)
from .dsl import format_module, load_algebra, load_module, parse_algebra, parse_module
from .errors import (
    BudgetExceeded,
    InvalidAlgebra,
    InvalidModule,
    NakalabError,
    NotTwoNakayama,
    ParseError,
    RepresentationInfinite,
    UnsupportedAlgebra,
)
from .generate import lambda_t, load_fixture, string_algebras
from .hereditary import indecomposables_hereditary, orientation, positive_roots, predicted_index, reflect_at
from .module import (
    Representation,
    SerialIndexReport,
    SubspaceFamily,
    cofactor_serial_index,
    decompose,
    direct_sum,
    dualize,
    enumerate_submodules,
    factor_serial_index,
    hom_basis,
    injective_module,
    is_indecomposable,
    is_isomorphic,
    is_local,
    is_uniserial,
    length,
    loewy_length,
    projective_module,
    quotient_by,
    radical_series,
    simple_module,
    socle_series,
)
from .oracle import run_invariants, run_oracle
from .strings import Band, Letter, StringWord, detect_bands, enumerate_strings, string_module

__version__ = "0.1.0"
