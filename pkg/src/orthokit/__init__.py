"""orthokit: exact constructions and classification of orthogonal,
quasi-orthogonal, semi-orthogonal and non-orthogonal sign matrices."""

from .analysis import (
    CensusReport,
    Claim,
    ClaimResult,
    ConformanceReport,
    DeterminantCheck,
    GramCheck,
    bareiss_determinant,
    check_claim,
    determinant_check,
    formula_conformance,
    gram_structure_check,
    hadamard_order_guard,
    permutation_census,
    spectra_agree,
    spectrum_report,
    tagged_constructions,
)
from .compositions import (
    BlockIndexTable,
    assemble_blocks,
    circulant_table,
    doubling,
    four_block,
    juxtapose,
    kronecker,
    mixed_block,
    type_ii_table,
)
from .errors import (
    InvalidEntry,
    LengthMismatch,
    NotSquare,
    OrderMismatch,
    OrderTooLarge,
    OrthoError,
    PrimalityViolation,
    RowCountMismatch,
    SizeMismatch,
)
from .generators import (
    MatrixFamily,
    MMatrixKind,
    ResidueTable,
    SignRule,
    all_ones,
    cycled_family,
    m_matrix,
    residue_table,
    sign_map,
    sylvester,
)
from .matrix import (
    Axis,
    ClassificationReport,
    Label,
    Spectrum,
    classify,
    col_spectrum,
    gram_cols,
    gram_rows,
    inner_product,
    is_orthogonal,
    row_spectrum,
    sign_matrix,
    spectrum_from_gram,
    zero_diagonal,
)

__version__ = "0.1.0"
