"""Magnitude comparison for three-moduli residue number systems by clustering."""

from .cluster import (
    SubgroupTable,
    Table1Row,
    build_subgroup_table,
    cluster_of,
    cluster_of_batch,
    cluster_of_residues,
    cluster_of_trial,
    cluster_oracle,
    enumerate_table1,
    relation_lhs,
    subgroup_index,
    subgroup_index_closed,
)
from .comparator import (
    EQUAL,
    GREATER,
    LESS,
    ComparisonResult,
    ComparisonTrace,
    compare,
    compare_batch,
    compare_crt,
    compare_mrc,
    explain_compare,
)
from .errors import (
    InternalInconsistencyError,
    ModuliMismatchError,
    ModuliOverflowError,
    ModulusTooSmallError,
    NoSolutionError,
    NotCoprimeError,
    OutOfRangeError,
    RnsError,
)
from .moduli import (
    MAX_RANGE,
    ModuliSet,
    MrcDigits,
    RnsNumber,
    add,
    decode,
    encode,
    inverse_mod,
    mrc_digits,
    mul,
    new_moduli_set,
    sub,
)

__version__ = "0.1.0"
